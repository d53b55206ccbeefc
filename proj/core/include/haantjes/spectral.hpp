/** \file    spectral.hpp
    \brief   Pointwise spectral structure of an operator: eigenvalue clusters, multiplicities, Riesz indices
*/
#pragma once
#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace haantjes {

struct SpectralOptions {
    double cluster_gap = 1e-6;   ///< relative to scale
    double rank_tol = 1e-9;      ///< relative to scale^power
    unsigned max_riesz = 4;
};

struct EigenCluster {
    std::complex<double> value;   ///< mean of the cluster members
    unsigned algebraic = 0;
    unsigned geometric = 0;
    unsigned riesz = 0;           ///< smallest rho with rank (K - l I)^rho stationary
};

struct SpectralPoint {
    std::vector<EigenCluster> clusters;   ///< sorted by real part, then imaginary part
    bool semisimple = true;
    bool complex_pair = false;
    double scale = 1;
    std::size_t distinct() const { return clusters.size(); }
};

/// scale = max(1, max |K_ij|)
SpectralPoint spectral_point(const Eigen::MatrixXd& K, const SpectralOptions& opt = {});

/// numerical rank from singular values above tol
std::size_t numerical_rank(const Eigen::MatrixXcd& M, double tol);

/** smallest d such that I, K, ..., K^d are linearly dependent, from the rank of the matrix whose columns are
    the normalized vec(K^j) */
unsigned minimal_poly_degree(const Eigen::MatrixXd& K, double rank_tol = 1e-9);

}  // namespace haantjes
