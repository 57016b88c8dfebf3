#pragma once

#include <map>
#include <utility>

#include "sod/young.hpp"

namespace sod {

/// The ambient Grassmannian Gr(k, n).
struct Context {
    int k = 0;
    int n = 0;

    bool operator==(const Context&) const = default;
    std::string to_string() const
    {
        return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
    }
};

/// Formal nonnegative combination of dominant GL(rank) weights.
class WeightSum {
public:
    explicit WeightSum(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    const std::map<Weight, i64>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(const Weight& w, i64 mult);
    i64 multiplicity(const Weight& w) const;

    bool operator==(const WeightSum&) const = default;

private:
    int rank_;
    std::map<Weight, i64> terms_;
};

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}, by enumeration of
/// column-strict skew tableaux of shape nu/lambda and content mu whose
/// reverse reading word is a lattice word. Memoized.
i64 lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Decomposition of L_lambda (x) L_mu in GL(rank). Dominant weights with
/// negative parts are handled by a determinant shift before the LR step.
/// Summands needing more than `rank` rows are dropped; pass `discarded`
/// to have their total multiplicity counted.
WeightSum tensor_schur(const Weight& lambda, const Partition& mu, int rank,
                       i64* discarded = nullptr);

/// Tensor product of two arbitrary dominant weights (both shifted).
WeightSum tensor_weights(const Weight& a, const Weight& b, int rank,
                         i64* discarded = nullptr);

/// L_lambda (x) Lambda^m by Pieri's rule: add m boxes, at most one per row.
WeightSum pieri_wedge(const Partition& lambda, int m, int rank);

/// Weyl dimension formula for the irreducible GL(rank) representation.
i64 dim_schur(const Weight& lambda, int rank);

/// Direct sum of irreducible homogeneous bundles L_a(U) (x) L_b(Q) on
/// Gr(k, n), as a multiplicity map over (u-weight, q-weight) pairs.
class BundleExpression {
public:
    BundleExpression() = default;  // zero expression over the null context
    explicit BundleExpression(Context ctx) : ctx_(ctx) {}

    static BundleExpression zero(Context ctx) { return BundleExpression(ctx); }
    /// The structure sheaf O.
    static BundleExpression unit(Context ctx);
    static BundleExpression u_schur(Context ctx, const Weight& u);
    static BundleExpression q_schur(Context ctx, const Weight& q);

    Context context() const { return ctx_; }
    const std::map<std::pair<Weight, Weight>, i64>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Weight& u, const Weight& q, i64 mult);
    void add(const BundleExpression& other, i64 mult = 1);

    /// Canonical text form, also used in cache keys.
    std::string to_string() const;

    bool operator==(const BundleExpression&) const = default;

private:
    Context ctx_;
    std::map<std::pair<Weight, Weight>, i64> terms_;
};

BundleExpression tensor_bundles(const BundleExpression& a, const BundleExpression& b);
BundleExpression dual_expression(const BundleExpression& a);

/// Total rank (dimension of the fiber).
i64 dim_expression(const BundleExpression& a);

BundleExpression sym_u(Context ctx, int m);
BundleExpression sym_u_dual(Context ctx, int m);
BundleExpression wedge_u(Context ctx, int m);       // zero for m > k
BundleExpression wedge_u_dual(Context ctx, int m);  // zero for m > k
BundleExpression sym_q(Context ctx, int m);
BundleExpression wedge_q(Context ctx, int m);       // zero for m > n-k
BundleExpression wedge_q_dual(Context ctx, int m);  // zero for m > n-k

}  // namespace sod
