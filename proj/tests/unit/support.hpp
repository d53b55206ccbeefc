// Shared fixtures for the unit tests: random fields and finite-difference oracles.
#pragma once
#include "haantjes/algebra.hpp"
#include "haantjes/torsion.hpp"
#include <Eigen/Dense>
#include <random>
#include <string>
#include <vector>

namespace haantjes::test {

inline std::vector<std::string> coords(std::size_t dim)
{
    std::vector<std::string> v;
    for(std::size_t i = 0; i < dim; i++) v.push_back("x" + std::to_string(i));
    return v;
}

/// entries are random quadratics plus a small sine term, so second derivatives are not constant
inline OperatorField random_operator(std::size_t dim, std::mt19937_64& rng, const std::string& name = "L")
{
    const auto vars = coords(dim);
    std::vector<Expr> e;
    for(std::size_t i = 0; i < dim * dim; i++) {
        std::string s = random_polynomial(vars, rng).to_string();
        s += "+0.3*sin(" + vars[i % dim] + "-" + vars[(i / dim) % dim] + "*0.7)";
        e.push_back(Expr::parse(s, vars));
    }
    return OperatorField::from_entries(name, dim, e, {});
}

inline ScalarField random_scalar(std::size_t dim, std::mt19937_64& rng, const std::string& name = "f")
{
    return ScalarField::from_expr(name, random_polynomial(coords(dim), rng), {});
}

inline std::vector<double> random_point(std::size_t dim, std::mt19937_64& rng, double r = 1)
{
    std::vector<double> x(dim);
    for(auto& v : x) v = uniform(rng, -r, r);
    return x;
}

/// central differences of L(x) with step h_k = h (1 + |x_k|); dL[k](i,j) = d_k L^i_j
inline std::vector<Eigen::MatrixXd> fd_partials(const OperatorField& L, std::vector<double> x, double step = 1e-5)
{
    std::vector<Eigen::MatrixXd> d;
    for(std::size_t k = 0; k < x.size(); k++) {
        const double x0 = x[k], h = step * (1 + std::fabs(x0));
        x[k] = x0 + h;
        const Eigen::MatrixXd up = L.value(x);
        x[k] = x0 - h;
        const Eigen::MatrixXd dn = L.value(x);
        x[k] = x0;
        d.push_back((up - dn) / (2 * h));
    }
    return d;
}

/** Nijenhuis torsion from brackets of the coordinate fields e_j, e_k and their images L e_j, L e_k:
      T(e_j,e_k) = [L e_j, L e_k] - L[L e_j, e_k] - L[e_j, L e_k]   ([e_j, e_k] = 0)
    with every bracket evaluated from finite-difference derivatives of the values of L. */
inline std::vector<Eigen::MatrixXd> fd_nijenhuis(const OperatorField& L, const std::vector<double>& x)
{
    const std::size_t n = x.size();
    const Eigen::MatrixXd M = L.value(x);
    const auto dL = fd_partials(L, x);
    // column vector fields X_j = L e_j and their Jacobians D X_j (row i, col a) = d_a L^i_j
    auto jac = [&](std::size_t j) {
        Eigen::MatrixXd D(n, n);
        for(std::size_t a = 0; a < n; a++) D.col(a) = dL[a].col(j);
        return D;
    };
    std::vector<Eigen::MatrixXd> T(n, Eigen::MatrixXd::Zero(n, n));   // T[i](j,k)
    for(std::size_t j = 0; j < n; j++)
        for(std::size_t k = 0; k < n; k++) {
            const Eigen::VectorXd Xj = M.col(j), Xk = M.col(k);
            const Eigen::MatrixXd Dj = jac(j), Dk = jac(k);
            const Eigen::VectorXd br = Dk * Xj - Dj * Xk;          // [X_j, X_k]
            const Eigen::VectorXd b1 = -Dj.col(k);                 // [X_j, e_k]
            const Eigen::VectorXd b2 = Dk.col(j);                  // [e_j, X_k]
            const Eigen::VectorXd t = br - M * (b1 + b2);
            for(std::size_t i = 0; i < n; i++) T[i](j, k) = t(i);
        }
    return T;
}

/// H(X,Y) = L^2 T(X,Y) - L T(LX,Y) - L T(X,LY) + T(LX,LY), from the oracle torsion by tensoriality
inline std::vector<Eigen::MatrixXd> fd_haantjes(const OperatorField& L, const std::vector<double>& x)
{
    const std::size_t n = x.size();
    const Eigen::MatrixXd M = L.value(x);
    const auto T = fd_nijenhuis(L, x);
    auto Tv = [&](const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
        Eigen::VectorXd r(n);
        for(std::size_t i = 0; i < n; i++) r(i) = u.dot(T[i] * v);
        return r;
    };
    std::vector<Eigen::MatrixXd> H(n, Eigen::MatrixXd::Zero(n, n));
    for(std::size_t j = 0; j < n; j++)
        for(std::size_t k = 0; k < n; k++) {
            const Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j), ek = Eigen::VectorXd::Unit(n, k);
            const Eigen::VectorXd h = M * M * Tv(ej, ek) - M * Tv(M * ej, ek) - M * Tv(ej, M * ek) + Tv(M * ej, M * ek);
            for(std::size_t i = 0; i < n; i++) H[i](j, k) = h(i);
        }
    return H;
}

inline double max_diff(const TorsionValue& t, const std::vector<Eigen::MatrixXd>& oracle)
{
    double m = 0;
    const std::size_t n = t.dim();
    for(std::size_t i = 0; i < n; i++)
        for(std::size_t j = 0; j < n; j++)
            for(std::size_t k = 0; k < n; k++) m = std::max(m, std::fabs(t(i, j, k) - oracle[i](j, k)));
    return m;
}

}  // namespace haantjes::test
