#include "haantjes/algebra.hpp"
#include "haantjes/spectral.hpp"
#include "haantjes/symplectic.hpp"
#include <doctest.h>

using namespace haantjes;
using doctest::Approx;

TEST_CASE("spectral: identity on R^6")
{
    const SpectralPoint s = spectral_point(Eigen::MatrixXd::Identity(6, 6));
    REQUIRE(s.distinct() == 1);
    CHECK(s.clusters[0].value.real() == Approx(1));
    CHECK(s.clusters[0].algebraic == 6);
    CHECK(s.clusters[0].geometric == 6);
    CHECK(s.clusters[0].riesz == 1);
    CHECK(s.semisimple);
    CHECK(minimal_poly_degree(Eigen::MatrixXd::Identity(6, 6)) == 1);
}

TEST_CASE("spectral: Jordan block is not semisimple")
{
    Eigen::MatrixXd K = 3 * Eigen::MatrixXd::Identity(4, 4);
    K(0, 1) = 1;
    const SpectralPoint s = spectral_point(K);
    REQUIRE(s.distinct() == 1);
    CHECK(s.clusters[0].algebraic == 4);
    CHECK(s.clusters[0].geometric == 3);
    CHECK(s.clusters[0].riesz == 2);
    CHECK_FALSE(s.semisimple);
    CHECK(minimal_poly_degree(K) == 2);
}

TEST_CASE("spectral: distinct and repeated eigenvalues")
{
    const Eigen::MatrixXd K = Eigen::Vector4d(-1, 2, 2, -1).asDiagonal();
    const SpectralPoint s = spectral_point(K);
    REQUIRE(s.distinct() == 2);
    CHECK(s.clusters[0].value.real() == Approx(-1));
    CHECK(s.clusters[1].value.real() == Approx(2));
    CHECK(s.clusters[0].algebraic == 2);
    CHECK(minimal_poly_degree(K) == 2);
    const Eigen::MatrixXd D = Eigen::Vector3d(1, 2, 3).asDiagonal();
    CHECK(minimal_poly_degree(D) == 3);
}

TEST_CASE("spectral: rotation has a complex pair")
{
    Eigen::MatrixXd R(2, 2);
    R << 0, -1, 1, 0;
    const SpectralPoint s = spectral_point(R);
    CHECK(s.complex_pair);
    CHECK(s.distinct() == 2);
}

TEST_CASE("symplectic: canonical bracket and omega compatibility")
{
    const Jet2 q = Jet2::variable(0.3, 0, 4), p = Jet2::variable(-0.2, 2, 4);
    CHECK(poisson_bracket(q, p) == 1);
    CHECK(poisson_bracket(p, q) == -1);
    CHECK(poisson_bracket(q, q) == 0);
    CHECK(omega_residual(Eigen::MatrixXd::Identity(4, 4)) == 0);

    // [[A, B], [C, A^T]] with antisymmetric B and C
    Eigen::MatrixXd A(2, 2), B(2, 2), C(2, 2);
    A << 1.5, -0.3, 0.7, 2.1;
    B << 0, 0.9, -0.9, 0;
    C << 0, -1.2, 1.2, 0;
    Eigen::MatrixXd K(4, 4);
    K << A, B, C, A.transpose();
    CHECK(omega_residual(K) < 1e-15);
    B(1, 0) = 0.4;   // B + B^T has entries 1.3
    K << A, B, C, A.transpose();
    CHECK(omega_residual(K) == Approx(1.3));
}

TEST_CASE("spectral: profile of a constant field")
{
    const Eigen::MatrixXd K = Eigen::Vector4d(1, 1, 4, 4).asDiagonal();
    const Points pts(5, std::vector<double>{0, 0, 0, 0});
    const SpectralSummary s = spectral_profile(OperatorField::constant("K", K), pts);
    CHECK(s.stable_pattern);
    CHECK(s.pattern == std::vector<unsigned>{2, 2});
    CHECK(s.semisimple_everywhere);
    CHECK(s.max_riesz == 1);
}
