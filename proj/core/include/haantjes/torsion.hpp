/** \file    torsion.hpp
    \brief   Nijenhuis and Haantjes torsions of operator fields, and their scale normalization
*/
#pragma once
#include "haantjes/field.hpp"
#include <vector>

namespace haantjes {

/// (1,2) tensor antisymmetric in the lower pair; only j < k is stored
class TorsionValue {
public:
    TorsionValue() = default;
    explicit TorsionValue(std::size_t dim);

    std::size_t dim() const { return d_; }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const;
    /// sets T^i_jk (and thereby T^i_kj = -T^i_jk); requires j != k
    void set(std::size_t i, std::size_t j, std::size_t k, double v);
    double max_abs() const;
    /// max |this - other| over components
    double max_diff(const TorsionValue& other) const;
    const std::vector<double>& data() const { return c_; }

private:
    std::size_t pair(std::size_t j, std::size_t k) const { return j * d_ - j * (j + 1) / 2 + (k - j - 1); }
    std::size_t d_ = 0;
    std::vector<double> c_;
};

/// T^i_jk = sum_a (d_a L^i_k L^a_j - d_a L^i_j L^a_k + (d_k L^a_j - d_j L^a_k) L^i_a)
TorsionValue nijenhuis_torsion(const OperatorJet& L);

enum class HaantjesMethod { Definitional, Coordinate };

/// definitional form composes the Nijenhuis torsion; coordinate form expands it in L, L^2, L^3 and partials
TorsionValue haantjes_torsion(const OperatorJet& L, HaantjesMethod method = HaantjesMethod::Definitional);

/// max|T_N| / (1+|L|)^3 and max|H| / (1+|L|)^4, with |L| the max over values and first partials
double normalized_nijenhuis(const OperatorJet& L);
double normalized_haantjes(const OperatorJet& L, HaantjesMethod method = HaantjesMethod::Definitional);

/// max |H_{fI+gL} - g^4 H_L| at x
double torsion_scaling_residual(const OperatorField& L, const ScalarField& f, const ScalarField& g,
    std::span<const double> x);

}  // namespace haantjes
