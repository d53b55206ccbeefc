/** \file    algebra.hpp
    \brief   Haantjes-operator and Haantjes-algebra checks, spectral profiles, cyclic spans and diagonal charts
*/
#pragma once
#include "haantjes/chart.hpp"
#include "haantjes/parallel.hpp"
#include "haantjes/report.hpp"
#include "haantjes/sampling.hpp"
#include "haantjes/spectral.hpp"
#include "haantjes/torsion.hpp"
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace haantjes {

using Points = std::vector<std::vector<double>>;

/// folds per-sample residuals into a check (max residual, 1% failure budget)
Check summarize(std::string claim, std::string kind, const SweepResult<double>& r, double threshold);

/** Max of residual(x) over the points.  Samples failing with a library error are excluded when fewer than 1%
    fail; otherwise the check is a hard error.  pass = max < threshold. */
Check residual_sweep(std::string claim, std::string kind, const Points& points,
    const std::function<double(std::span<const double>)>& residual, double threshold);

Check verify_haantjes(const OperatorField& L, const Points& points, double tol = 1e-8,
    HaantjesMethod method = HaantjesMethod::Definitional);
Check verify_haantjes(const OperatorField& L, const SamplingDomain& dom, double tol = 1e-8);
Check verify_nijenhuis(const OperatorField& L, const Points& points, double tol = 1e-8);
/// max |Omega K - K^T Omega| / max(1, max|K|)
Check verify_omega(const OperatorField& K, const Points& points, double tol = 1e-8);

/// a polynomial of degree <= 2 in the given variables with coefficients uniform in [-1,1]
Expr random_polynomial(const std::vector<std::string>& vars, std::mt19937_64& rng);

struct AlgebraReport {
    std::vector<std::string> operators;
    std::vector<std::pair<std::string, double>> haantjes;      ///< each operator
    std::vector<std::pair<std::string, double>> products;      ///< K_i K_j for i != j, both orders
    std::vector<std::pair<std::string, double>> combinations;  ///< f K_i + g K_j for random polynomials
    std::vector<std::pair<std::string, double>> commutators;   ///< max |[K_i,K_j]| / scale
    std::vector<std::pair<std::string, double>> omega;
    std::vector<std::pair<std::string, bool>> semisimple;
    std::vector<std::pair<std::string, unsigned>> min_degree;
    bool abelian = false;
    Check summary;
};

/** Axioms of a Haantjes algebra at every point: Haantjes operators, products, random module combinations,
    commutation and omega-compatibility.  The identity is always added to the list. */
AlgebraReport check_algebra(const std::vector<OperatorField>& ops, const std::vector<std::string>& vars,
    const Points& points, unsigned random_trials, std::uint64_t seed, double tol = 1e-8, bool require_abelian = false);

struct SpectralSummary {
    std::vector<SpectralPoint> points;   ///< nullopt samples are dropped
    std::size_t failures = 0;
    bool stable_pattern = true;          ///< same multiplicity pattern at every point
    std::vector<unsigned> pattern;       ///< algebraic multiplicities at the first point
    std::vector<unsigned> geometric;     ///< geometric multiplicities at the first point
    bool semisimple_everywhere = true;
    bool nonsemisimple_everywhere = true;
    std::size_t complex_points = 0;
    unsigned min_riesz = 0, max_riesz = 0;   ///< over all clusters and points
};
SpectralSummary spectral_profile(const OperatorField& K, const Points& points, const SpectralOptions& opt = {});

struct MinimalDegree {
    unsigned degree = 0;       ///< most frequent degree
    bool stable = true;
    std::size_t deviating = 0;
    std::size_t failures = 0;
};
MinimalDegree minimal_poly_degree(const OperatorField& K, const Points& points, double rank_tol = 1e-9);

/** K = sum_{j=0}^{d} alpha_j L^j solved pointwise by least squares.  coefficient[j], when valid, is compared
    with the fitted alpha_j.  The span must be pointwise independent. */
struct CyclicFit {
    Check check;
    std::vector<std::vector<double>> alpha;   ///< per point
};
CyclicFit fit_in_cyclic_span(const OperatorField& K, const OperatorField& L, unsigned max_degree, const Points& points,
    const std::vector<ScalarField>& coefficients = {}, double tol = 1e-8);

/** Off-diagonal magnitude of K in the target chart relative to max(1, max|diag|), and the pairing
    l_{n+i} = l_i.  to_k maps target-chart points to the chart of K; points are in the target chart. */
Check check_diagonal_in_chart(const OperatorField& K, const Transition& to_k, const Points& points, double tol = 1e-7);

}  // namespace haantjes
