/** \file    chains.hpp
    \brief   Haantjes chains: construction in separation charts, verification, involution and fitting
*/
#pragma once
#include "haantjes/algebra.hpp"
#include <optional>

namespace haantjes {

/** Diagonal operators diag(l_1..l_n, l_1..l_n) with l_i = (dH_a/dp_i)/(dH/dp_i), one per H_a.
    Points where some dH/dp_i vanishes raise DomainError there. */
std::vector<OperatorField> build_chain_operators(const ScalarField& H, const std::vector<ScalarField>& Hs);

struct ChainOptions {
    double tol = 1e-8;
    double spread_tol = 1e-8;        ///< max per-sample deviation of the fitted scalar, relative to max(1,|c|)
    std::optional<double> expect_c;  ///< required value of the scalar
};

/** K^T dH = c dH_a with c a single least-squares scalar over all points, plus closedness d(K^T dH) = 0.
    residual = max(chain, closedness); pass also needs the per-sample c to be constant. */
Check verify_chain(const OperatorField& K, const ScalarField& H, const ScalarField& Ha, const Points& points,
    const ChainOptions& opt = {});

/// per index k: max |{F,G}_k| / max(1, |a_k| + |b_k|); values index_1..index_n
Check benenti_test(const ScalarField& F, const ScalarField& G, const Points& points, double tol = 1e-8);

/// max |{F,G}| / max(1, sum_k |a_k| + |b_k|)
Check involution_test(const ScalarField& F, const ScalarField& G, const Points& points, double tol = 1e-9);

/// the free functions of [[A, B], [C, A^T]] with B, C antisymmetric, each expanded over the basis
struct ChainFit {
    OperatorField K;
    std::vector<double> coefficients;   ///< (function, basis) row-major; functions: A_ij, then B_ij and C_ij for i<j
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    std::size_t null_dim = 0;
    Check chain;      ///< max |K^T dH - dH_a| / max(1, |dH_a|)
    Check haantjes;   ///< normalized Haantjes torsion of the fitted operator
};

/** Global linear least squares for the basis coefficients, minimum-norm when the system is rank deficient.
    Needs points * dim >= 3 * unknowns. */
ChainFit fit_chain_operator(const ScalarField& H, const ScalarField& Ha, const std::vector<ScalarField>& basis,
    const Points& points, double tol = 1e-8);

}  // namespace haantjes
