#include "haantjes/jet.hpp"
#include "haantjes/error.hpp"
#include <cmath>

namespace haantjes {

Jet2 Jet2::constant(double value, std::size_t dim)
{
    if(dim > kMaxDim)
        throw PreconditionError("Jet2: dimension " + std::to_string(dim) + " exceeds " + std::to_string(kMaxDim));
    Jet2 r;
    r.dim_ = dim;
    r.v_ = value;
    return r;
}

Jet2 Jet2::variable(double value, std::size_t index, std::size_t dim)
{
    if(index >= dim)
        throw PreconditionError("Jet2: seed index out of range");
    Jet2 r = constant(value, dim);
    r.g_[index] = 1;
    return r;
}

std::vector<double> Jet2::gradient() const
{
    return std::vector<double>(g_.begin(), g_.begin() + dim_);
}

std::vector<double> Jet2::hessian() const
{
    std::vector<double> h(dim_ * dim_);
    for(std::size_t i = 0; i < dim_; i++)
        for(std::size_t j = 0; j < dim_; j++)
            h[i * dim_ + j] = hess(i, j);
    return h;
}

bool Jet2::is_finite() const
{
    if(!std::isfinite(v_)) return false;
    for(std::size_t i = 0; i < dim_; i++) {
        if(!std::isfinite(g_[i])) return false;
        for(std::size_t j = i; j < dim_; j++)
            if(!std::isfinite(h_[tri(i, j)])) return false;
    }
    return true;
}

Jet2 Jet2::derivative(std::size_t k) const
{
    Jet2 r = constant(g_[k], dim_);
    for(std::size_t i = 0; i < dim_; i++)
        r.g_[i] = hess(k, i);
    return r;
}

void Jet2::check_dim(const Jet2& b) const
{
    if(dim_ != b.dim_)
        throw PreconditionError("Jet2: operand dimensions differ (" + std::to_string(dim_) + " vs " +
            std::to_string(b.dim_) + ")");
}

Jet2& Jet2::operator+=(const Jet2& b)
{
    check_dim(b);
    v_ += b.v_;
    for(std::size_t i = 0; i < dim_; i++) {
        g_[i] += b.g_[i];
        for(std::size_t j = i; j < dim_; j++)
            h_[tri(i, j)] += b.h_[tri(i, j)];
    }
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& b)
{
    check_dim(b);
    v_ -= b.v_;
    for(std::size_t i = 0; i < dim_; i++) {
        g_[i] -= b.g_[i];
        for(std::size_t j = i; j < dim_; j++)
            h_[tri(i, j)] -= b.h_[tri(i, j)];
    }
    return *this;
}

Jet2& Jet2::operator*=(const Jet2& b)
{
    check_dim(b);
    const double av = v_, bv = b.v_;
    for(std::size_t i = 0; i < dim_; i++)
        for(std::size_t j = i; j < dim_; j++) {
            std::size_t t = tri(i, j);
            h_[t] = av * b.h_[t] + bv * h_[t] + g_[i] * b.g_[j] + g_[j] * b.g_[i];
        }
    for(std::size_t i = 0; i < dim_; i++)
        g_[i] = av * b.g_[i] + bv * g_[i];
    v_ = av * bv;
    return *this;
}

Jet2& Jet2::operator/=(const Jet2& b)
{
    check_dim(b);
    if(b.v_ == 0)
        throw DomainError("division by zero");
    const double av = v_;
    const double inv = 1 / b.v_;
    *this *= b.chain(inv, -inv * inv, 2 * inv * inv * inv);
    v_ = av / b.v_;
    return *this;
}

Jet2& Jet2::operator*=(double b)
{
    v_ *= b;
    for(std::size_t i = 0; i < dim_; i++) {
        g_[i] *= b;
        for(std::size_t j = i; j < dim_; j++)
            h_[tri(i, j)] *= b;
    }
    return *this;
}

Jet2& Jet2::operator/=(double b)
{
    if(b == 0)
        throw DomainError("division by zero");
    v_ /= b;
    for(std::size_t i = 0; i < dim_; i++) {
        g_[i] /= b;
        for(std::size_t j = i; j < dim_; j++)
            h_[tri(i, j)] /= b;
    }
    return *this;
}

Jet2 Jet2::operator-() const
{
    Jet2 r = *this;
    r *= -1.0;
    return r;
}

Jet2 Jet2::chain(double f0, double f1, double f2) const
{
    Jet2 r = constant(f0, dim_);
    for(std::size_t i = 0; i < dim_; i++) {
        r.g_[i] = f1 * g_[i];
        for(std::size_t j = i; j < dim_; j++) {
            std::size_t t = tri(i, j);
            r.h_[t] = f1 * h_[t] + f2 * g_[i] * g_[j];
        }
    }
    return r;
}

Jet2 operator/(double a, const Jet2& b)
{
    if(b.value() == 0)
        throw DomainError("division by zero");
    const double inv = 1 / b.value();
    return b.chain(a * inv, -a * inv * inv, 2 * a * inv * inv * inv);
}

Jet2 sqrt(const Jet2& a)
{
    const double v = a.value();
    if(!(v > 0))
        throw DomainError("sqrt argument " + std::to_string(v) + " is not > 0 (derivative undefined)");
    const double s = std::sqrt(v);
    return a.chain(s, 0.5 / s, -0.25 / (s * v));
}

Jet2 cbrt(const Jet2& a)
{
    const double v = a.value();
    if(v == 0)
        throw DomainError("cbrt argument is 0 (derivative undefined)");
    const double c = std::cbrt(v);
    const double f1 = c / (3 * v);
    return a.chain(c, f1, -2 * f1 / (3 * v));
}

Jet2 sin(const Jet2& a)
{
    const double s = std::sin(a.value()), c = std::cos(a.value());
    return a.chain(s, c, -s);
}

Jet2 cos(const Jet2& a)
{
    const double s = std::sin(a.value()), c = std::cos(a.value());
    return a.chain(c, -s, -c);
}

Jet2 tan(const Jet2& a)
{
    const double c = std::cos(a.value());
    if(c == 0)
        throw DomainError("tan argument at a pole");
    const double t = std::tan(a.value());
    const double sec2 = 1 + t * t;
    return a.chain(t, sec2, 2 * t * sec2);
}

Jet2 exp(const Jet2& a)
{
    const double e = std::exp(a.value());
    return a.chain(e, e, e);
}

Jet2 log(const Jet2& a)
{
    const double v = a.value();
    if(!(v > 0))
        throw DomainError("log argument " + std::to_string(v) + " is not > 0");
    return a.chain(std::log(v), 1 / v, -1 / (v * v));
}

Jet2 abs(const Jet2& a)
{
    const double v = a.value();
    if(v == 0)
        throw DomainError("abs argument is 0 (derivative undefined)");
    const double s = v > 0 ? 1.0 : -1.0;
    return a.chain(std::fabs(v), s, 0);
}

double ipow(double a, long n)
{
    if(n < 0)
        return 1 / ipow(a, -n);
    double r = 1, b = a;
    unsigned long e = static_cast<unsigned long>(n);
    while(e) {
        if(e & 1u) r *= b;
        e >>= 1;
        if(e) b *= b;
    }
    return r;
}

Jet2 pow(const Jet2& a, long n)
{
    const double v = a.value();
    if(n == 0)
        return Jet2::constant(1, a.dim());
    if(n < 0 && v == 0)
        throw DomainError("negative integer power of 0");
    const double f0 = ipow(v, n);
    const double f1 = n == 1 ? 1.0 : n * ipow(v, n - 1);
    const double f2 = (n == 1) ? 0.0 : (n == 2 ? 2.0 : static_cast<double>(n) * (n - 1) * ipow(v, n - 2));
    return a.chain(f0, f1, f2);
}

Jet2 pow(const Jet2& a, const Jet2& b)
{
    if(!(a.value() > 0))
        throw DomainError("non-integer power of a base " + std::to_string(a.value()) + " that is not > 0");
    return exp(b * log(a));
}

Jet2 atan2(const Jet2& y, const Jet2& x)
{
    const double yv = y.value(), xv = x.value();
    const double r2 = xv * xv + yv * yv;
    if(r2 == 0)
        throw DomainError("atan2 at the origin");
    Jet2 outer = Jet2::constant(std::atan2(yv, xv), 2);
    outer.set_grad(0, xv / r2);
    outer.set_grad(1, -yv / r2);
    outer.set_hess(0, 0, -2 * xv * yv / (r2 * r2));
    outer.set_hess(1, 1, 2 * xv * yv / (r2 * r2));
    outer.set_hess(0, 1, (yv * yv - xv * xv) / (r2 * r2));
    const Jet2 inner[2] = {y, x};
    return compose(outer, inner);
}

Jet2 compose(const Jet2& outer, std::span<const Jet2> inner)
{
    const std::size_t m = outer.dim();
    if(inner.size() != m)
        throw PreconditionError("compose: outer dimension does not match the number of inner jets");
    if(m == 0)
        return Jet2::constant(outer.value(), 0);
    const std::size_t d = inner[0].dim();
    for(const Jet2& u : inner)
        if(u.dim() != d)
            throw PreconditionError("compose: inner jets have different dimensions");
    Jet2 r = Jet2::constant(outer.value(), d);
    for(std::size_t b = 0; b < d; b++) {
        double g = 0;
        for(std::size_t a = 0; a < m; a++)
            g += outer.grad(a) * inner[a].grad(b);
        r.set_grad(b, g);
        for(std::size_t c = b; c < d; c++) {
            double h = 0;
            for(std::size_t a = 0; a < m; a++) {
                h += outer.grad(a) * inner[a].hess(b, c);
                for(std::size_t e = 0; e < m; e++)
                    h += outer.hess(a, e) * inner[a].grad(b) * inner[e].grad(c);
            }
            r.set_hess(b, c, h);
        }
    }
    return r;
}

}  // namespace haantjes
