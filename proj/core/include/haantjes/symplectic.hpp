/** \file    symplectic.hpp
    \brief   Canonical symplectic structure on Darboux charts (q^1..q^n, p_1..p_n) and Poisson brackets
*/
#pragma once
#include "haantjes/jet.hpp"
#include <Eigen/Dense>
#include <vector>

namespace haantjes {

/// Omega = [[0, I], [-I, 0]], omega(X,Y) = <Omega X, Y>
Eigen::MatrixXd canonical_omega(std::size_t dim);

/// max |Omega K - K^T Omega| entrywise
double omega_residual(const Eigen::MatrixXd& K);

/// {F,G} = sum_i dF/dq^i dG/dp_i - dF/dp_i dG/dq^i
double poisson_bracket(const Jet2& F, const Jet2& G);

/// one index of the bracket: a_k - b_k with a_k = dF/dq^k dG/dp_k and b_k = dF/dp_k dG/dq^k
struct BracketTerm {
    double a = 0, b = 0;
    double value() const { return a - b; }
};
std::vector<BracketTerm> poisson_terms(const Jet2& F, const Jet2& G);

}  // namespace haantjes
