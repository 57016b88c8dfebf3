#pragma once

#include <memory>
#include <mutex>

#include "sod/bott.hpp"

namespace sod {

class ResultCache;

/// An object of D^b(Gr(k, n)): a direct sum of irreducible homogeneous
/// bundles with a single formal shift. The zero object has empty expr.
struct GrObject {
    BundleExpression expr;
    int shift = 0;
    std::string name;  // display label for reports; not part of identity

    std::string key() const;  // canonical form, includes the shift
};

enum class TotKind { pushforward, pullback };

/// An object on Tot(U): either j_* of a base object along the zero
/// section, or pi^* of one along the projection.
struct TotObject {
    TotKind kind = TotKind::pushforward;
    GrObject base;
};

/// Pairing vector (chi(L_lambda U, X))_lambda over the box order.
using KClass = std::vector<i64>;

struct HomProfile {
    GradedDimension dims;
    /// Set when the top symmetric stratum of a pullback-pullback Hom is
    /// nonzero, i.e. the printed profile is a proper truncation.
    bool truncated = false;

    bool operator==(const HomProfile&) const = default;
};

/// Witness for a failed vanishing test: the exterior-power twist where a
/// nonzero graded Hom appeared.
struct VanishingViolation {
    int wedge_degree = 0;
    GradedDimension dims;
};

GrObject make_u_object(Context ctx, const Partition& lambda);
GrObject make_q_object(Context ctx, const Partition& q_diagram);
GrObject make_unit_object(Context ctx);

/// Graded Hom computations over a fixed Gr(k, n), with a shared memo and
/// an optional persistent cache. All methods are const and thread-safe.
class Engine {
public:
    explicit Engine(int k, int n, std::shared_ptr<ResultCache> cache = nullptr);

    Context context() const { return ctx_; }
    const Box& box() const { return box_; }

    /// Graded Hom on the Grassmannian: cohomology of F* (x) E.
    GradedDimension ext_gr(const GrObject& F, const GrObject& E) const;

    /// Graded Hom on Tot(U). Pushforward/pushforward and
    /// pullback/pullback reduce to finite sums of ext_gr by the Koszul
    /// resolution of the zero section and by pi_* O = Sym(U*); the
    /// pushforward-to-pullback direction is not supported.
    HomProfile hom_tot(const TotObject& F, const TotObject& E, int max_sym_degree) const;

    /// Hom(j_*F, j_*E) = 0 on Tot(U), decided by the finite criterion
    /// Ext(F (x) Lambda^m U*, E) = 0 for all 0 <= m <= k.
    std::optional<VanishingViolation> pushforward_pair_violation(const GrObject& F,
                                                                 const GrObject& E) const;
    bool pushpush_vanishing(const GrObject& F, const GrObject& E) const;

    /// Hom(pi^*F, pi^*E) = 0 on Tot(U), decided by the finite criterion
    /// Ext(F (x) Lambda^m Q, E) = 0 for all 0 <= m <= n-k. Exact: no
    /// truncation is involved.
    std::optional<VanishingViolation> pullback_pair_violation(const GrObject& F,
                                                              const GrObject& E) const;
    bool pullpull_vanishing(const GrObject& F, const GrObject& E) const;

    /// chi(F, E): alternating sum of ext_gr.
    i64 euler_pairing(const GrObject& F, const GrObject& E) const;

    /// Pairing vector against the Kapranov basis; linear, and odd shifts
    /// flip the sign.
    KClass kclass(const GrObject& X) const;

    /// Coordinates in the basis {[L_lambda U]}: the unique integer c with
    /// gram * c = v. Requires the Gram matrix to be upper unitriangular in
    /// the box order, which holds once the Kapranov verification passes.
    std::vector<i64> expand_in_basis(const KClass& v) const;

    /// chi extended bilinearly to K-classes.
    i64 pairing(const KClass& a, const KClass& b) const;

    /// Gram matrix chi(L_lambda U, L_mu U) over the box order.
    const std::vector<std::vector<i64>>& gram() const;

    /// The i-th Kapranov basis object L_{lambda_i} U.
    GrObject basis_object(int i) const;

private:
    GradedDimension ext_uncached(const GrObject& F, const GrObject& E) const;

    Context ctx_;
    Box box_;
    std::shared_ptr<ResultCache> cache_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, GradedDimension> memo_;
    mutable std::vector<std::vector<i64>> gram_;
    mutable bool gram_ready_ = false;
};

}  // namespace sod
