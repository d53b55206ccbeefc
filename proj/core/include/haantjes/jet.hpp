/** \file    jet.hpp
    \brief   Second-order truncated jets: value, gradient and Hessian of a scalar at a point
*/
#pragma once
#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace haantjes {

/** Value, gradient and symmetric Hessian of a scalar function of d independent variables.
    The dimension d is chosen at run time (at most kMaxDim) and must agree between operands.
    Storage is inline; only the upper triangle of the Hessian is kept, so symmetry holds by construction.
*/
class Jet2 {
public:
    static constexpr std::size_t kMaxDim = 8;

    Jet2() = default;
    static Jet2 constant(double value, std::size_t dim);
    /// the index-th independent variable taking the given value
    static Jet2 variable(double value, std::size_t index, std::size_t dim);

    std::size_t dim() const { return dim_; }
    double value() const { return v_; }
    double grad(std::size_t i) const { return g_[i]; }
    double hess(std::size_t i, std::size_t j) const { return h_[tri(i, j)]; }
    std::vector<double> gradient() const;
    /// full d*d Hessian, row-major
    std::vector<double> hessian() const;
    bool is_finite() const;

    /** Jet of the partial derivative along variable k, valid to first order only:
        its value and gradient are exact, its Hessian is zero. */
    Jet2 derivative(std::size_t k) const;

    Jet2& operator+=(const Jet2& b);
    Jet2& operator-=(const Jet2& b);
    Jet2& operator*=(const Jet2& b);
    Jet2& operator/=(const Jet2& b);
    Jet2& operator+=(double b) { v_ += b; return *this; }
    Jet2& operator-=(double b) { v_ -= b; return *this; }
    Jet2& operator*=(double b);
    Jet2& operator/=(double b);
    Jet2 operator-() const;

    /** Chain rule through a scalar function with f(v)=f0, f'(v)=f1, f''(v)=f2 at v = value(). */
    Jet2 chain(double f0, double f1, double f2) const;

    void set_value(double v) { v_ = v; }
    void set_grad(std::size_t i, double g) { g_[i] = g; }
    void set_hess(std::size_t i, std::size_t j, double h) { h_[tri(i, j)] = h; }

private:
    static constexpr std::size_t kTri = kMaxDim * (kMaxDim + 1) / 2;
    static std::size_t tri(std::size_t i, std::size_t j) {
        if(i > j) { std::size_t t = i; i = j; j = t; }
        return i * kMaxDim - i * (i + 1) / 2 + j;
    }
    void check_dim(const Jet2& b) const;

    std::size_t dim_ = 0;
    double v_ = 0;
    std::array<double, kMaxDim> g_{};
    std::array<double, kTri> h_{};
};

inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
inline Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
inline Jet2 operator+(Jet2 a, double b) { return a += b; }
inline Jet2 operator-(Jet2 a, double b) { return a -= b; }
inline Jet2 operator*(Jet2 a, double b) { return a *= b; }
inline Jet2 operator/(Jet2 a, double b) { return a /= b; }
inline Jet2 operator+(double a, Jet2 b) { return b += a; }
inline Jet2 operator-(double a, const Jet2& b) { Jet2 r = -b; return r += a; }
inline Jet2 operator*(double a, Jet2 b) { return b *= a; }
Jet2 operator/(double a, const Jet2& b);

Jet2 sqrt(const Jet2& a);
Jet2 cbrt(const Jet2& a);
Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 tan(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);
Jet2 abs(const Jet2& a);
/// integer power; negative exponents require a nonzero base
Jet2 pow(const Jet2& a, long n);
/// real power; requires a strictly positive base
Jet2 pow(const Jet2& a, const Jet2& b);
Jet2 atan2(const Jet2& y, const Jet2& x);

/// integer power of a double computed by the same rule on every call site (value path of pow(Jet2,long))
double ipow(double a, long n);

/** Jet of F(u(x)) from the jet of F with respect to u and the jets of the components u^a with respect to x:
    grad_b = F_a u^a_b,  hess_bc = F_a u^a_bc + F_ad u^a_b u^d_c. */
Jet2 compose(const Jet2& outer, std::span<const Jet2> inner);

}  // namespace haantjes
