#pragma once

#include <optional>

#include "sod/tensor.hpp"

namespace sod {

/// Dimension profile of a graded vector space; absent degrees are zero.
using GradedDimension = std::map<int, i64>;

void add_graded(GradedDimension& dst, const GradedDimension& src, i64 mult = 1, int degree_shift = 0);
std::string graded_to_string(const GradedDimension& g);

/// Cohomology of one irreducible bundle: at most one degree survives.
struct BottResult {
    int degree = 0;
    Weight gln_weight;  // dominant GL(n) highest weight of H^degree

    bool operator==(const BottResult&) const = default;
};

/// Empty optional means all cohomology vanishes.
using CohomologyResult = std::optional<BottResult>;

/// Borel-Weil-Bott for L_alpha(U) (x) L_beta(Q) on Gr(k, n).
///
/// The dotted Weyl action runs on the concatenated GL(n) weight with the
/// quotient block first, gamma = (beta | alpha), using rho = (n-1, ..., 0):
/// a repeated entry of gamma + rho kills all cohomology; otherwise sorting
/// strictly decreasingly with ell inversions puts the answer in degree ell
/// with highest weight sort(gamma + rho) - rho. The block order is the one
/// fixed by the calibration anchors (H^0(S^m U*) = S^m V*, the classical
/// line-bundle cohomology on P^1, Serre duality, and the Euler-characteristic
/// identities of the tautological sequence).
CohomologyResult bwb(int k, int n, const Weight& alpha, const Weight& beta);

/// Cohomology of a direct sum, degree by degree.
GradedDimension cohomology(const BundleExpression& expr);

/// Alternating sum of cohomology dimensions.
i64 euler_characteristic(const BundleExpression& expr);

}  // namespace sod
