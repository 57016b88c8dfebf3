#include "sod/homspaces.hpp"

#include "sod/cache.hpp"

namespace sod {

std::string GrObject::key() const
{
    return expr.to_string() + "@" + std::to_string(shift);
}

GrObject make_u_object(Context ctx, const Partition& lambda)
{
    GrObject obj{BundleExpression::u_schur(ctx, Weight::from_partition(lambda, ctx.k)), 0,
                 lambda.empty() ? "O" : "U[" + lambda.to_string() + "]"};
    return obj;
}

GrObject make_q_object(Context ctx, const Partition& q_diagram)
{
    GrObject obj{BundleExpression::q_schur(ctx, Weight::from_partition(q_diagram, ctx.n - ctx.k)),
                 0, q_diagram.empty() ? "O" : "Q[" + q_diagram.to_string() + "]"};
    return obj;
}

GrObject make_unit_object(Context ctx)
{
    return GrObject{BundleExpression::unit(ctx), 0, "O"};
}

Engine::Engine(int k, int n, std::shared_ptr<ResultCache> cache)
    : ctx_{k, n}, box_(enumerate_box(k, n - k)), cache_(std::move(cache))
{
    if (k < 1 || k >= n)
        throw InputError("engine requires 1 <= k < n");
}

GradedDimension Engine::ext_uncached(const GrObject& F, const GrObject& E) const
{
    GradedDimension base = cohomology(tensor_bundles(dual_expression(F.expr), E.expr));
    if (F.shift == E.shift)
        return base;
    GradedDimension out;
    add_graded(out, base, 1, F.shift - E.shift);
    return out;
}

GradedDimension Engine::ext_gr(const GrObject& F, const GrObject& E) const
{
    if (!(F.expr.context() == ctx_) || !(E.expr.context() == ctx_))
        throw ContextError("objects do not live over " + ctx_.to_string());
    if (F.expr.is_zero() || E.expr.is_zero())
        return {};

    const std::string key = "ext;k=" + std::to_string(ctx_.k) + ";n=" + std::to_string(ctx_.n) +
                            ";F=" + F.key() + ";E=" + E.key();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
    }

    GradedDimension result = cache_get_or_compute(
        cache_.get(), key, [&] { return ext_uncached(F, E); },
        [](const GradedDimension& g) {
            nlohmann::json j = nlohmann::json::object();
            for (const auto& [deg, dim] : g)
                j[std::to_string(deg)] = dim;
            return j;
        },
        [](const nlohmann::json& j) {
            GradedDimension g;
            for (const auto& [deg, dim] : j.items())
                g[std::stoi(deg)] = dim.get<i64>();
            return g;
        });

    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(key, result);
    return result;
}

HomProfile Engine::hom_tot(const TotObject& F, const TotObject& E, int max_sym_degree) const
{
    if (F.kind == TotKind::pushforward && E.kind == TotKind::pushforward) {
        // j^* j_* F = (+)_i F (x) Lambda^i U* [i], so the i-th stratum of
        // Hom(j_*F, j_*E) contributes in degrees raised by i.
        GradedDimension out;
        for (int i = 0; i <= ctx_.k; ++i) {
            GrObject Fi{tensor_bundles(F.base.expr, wedge_u_dual(ctx_, i)), F.base.shift, ""};
            add_graded(out, ext_gr(Fi, E.base), 1, i);
        }
        return {out, false};
    }
    if (F.kind == TotKind::pullback && E.kind == TotKind::pushforward) {
        // j is a section of pi, so Hom(pi^*F, j_*E) = Hom(F, E).
        return {ext_gr(F.base, E.base), false};
    }
    if (F.kind == TotKind::pullback && E.kind == TotKind::pullback) {
        // pi_* O = (+)_m S^m U*; the sum over m is infinite, so the
        // profile is reported up to max_sym_degree and flagged when the
        // last stratum is still nonzero.
        GradedDimension out;
        bool truncated = false;
        for (int m = 0; m <= max_sym_degree; ++m) {
            GrObject Em{tensor_bundles(E.base.expr, sym_u_dual(ctx_, m)), E.base.shift, ""};
            GradedDimension stratum = ext_gr(F.base, Em);
            if (m == max_sym_degree && !stratum.empty())
                truncated = true;
            add_graded(out, stratum);
        }
        return {out, truncated};
    }
    throw InputError(
        "Hom from a pushforward to a pullback is not supported (needs duality data)");
}

std::optional<VanishingViolation> Engine::pushforward_pair_violation(const GrObject& F,
                                                                     const GrObject& E) const
{
    for (int m = 0; m <= ctx_.k; ++m) {
        GrObject Fm{tensor_bundles(F.expr, wedge_u_dual(ctx_, m)), F.shift, ""};
        GradedDimension d = ext_gr(Fm, E);
        if (!d.empty())
            return VanishingViolation{m, std::move(d)};
    }
    return std::nullopt;
}

bool Engine::pushpush_vanishing(const GrObject& F, const GrObject& E) const
{
    return !pushforward_pair_violation(F, E).has_value();
}

std::optional<VanishingViolation> Engine::pullback_pair_violation(const GrObject& F,
                                                                  const GrObject& E) const
{
    for (int m = 0; m <= ctx_.n - ctx_.k; ++m) {
        GrObject Fm{tensor_bundles(F.expr, wedge_q(ctx_, m)), F.shift, ""};
        GradedDimension d = ext_gr(Fm, E);
        if (!d.empty())
            return VanishingViolation{m, std::move(d)};
    }
    return std::nullopt;
}

bool Engine::pullpull_vanishing(const GrObject& F, const GrObject& E) const
{
    return !pullback_pair_violation(F, E).has_value();
}

i64 Engine::euler_pairing(const GrObject& F, const GrObject& E) const
{
    i64 chi = 0;
    for (const auto& [deg, dim] : ext_gr(F, E))
        chi = checked_add(chi, (deg % 2 == 0) ? dim : -dim);
    return chi;
}

GrObject Engine::basis_object(int i) const
{
    return make_u_object(ctx_, box_.members[static_cast<size_t>(i)]);
}

KClass Engine::kclass(const GrObject& X) const
{
    KClass v(static_cast<size_t>(box_.size()), 0);
    for (int i = 0; i < box_.size(); ++i)
        v[static_cast<size_t>(i)] = euler_pairing(basis_object(i), X);
    return v;
}

const std::vector<std::vector<i64>>& Engine::gram() const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (gram_ready_)
            return gram_;
    }
    const int N = box_.size();
    std::vector<std::vector<i64>> g(static_cast<size_t>(N),
                                    std::vector<i64>(static_cast<size_t>(N), 0));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            g[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                euler_pairing(basis_object(i), basis_object(j));

    std::lock_guard<std::mutex> lock(mutex_);
    if (!gram_ready_) {
        gram_ = std::move(g);
        gram_ready_ = true;
    }
    return gram_;
}

std::vector<i64> Engine::expand_in_basis(const KClass& v) const
{
    const auto& G = gram();
    const int N = box_.size();
    if (static_cast<int>(v.size()) != N)
        throw InputError("K-class has wrong length for " + ctx_.to_string());
    for (int i = 0; i < N; ++i) {
        if (G[static_cast<size_t>(i)][static_cast<size_t>(i)] != 1)
            throw InputError("Gram matrix is not unitriangular: diagonal entry at " +
                             box_.members[static_cast<size_t>(i)].to_string() + " is not 1");
        for (int j = 0; j < i; ++j)
            if (G[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
                throw InputError("Gram matrix is not upper unitriangular at pair (" +
                                 box_.members[static_cast<size_t>(i)].to_string() + ", " +
                                 box_.members[static_cast<size_t>(j)].to_string() + ")");
    }
    std::vector<i64> c(static_cast<size_t>(N), 0);
    for (int i = N - 1; i >= 0; --i) {
        i64 acc = v[static_cast<size_t>(i)];
        for (int j = i + 1; j < N; ++j)
            acc = checked_add(acc, -checked_mul(G[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                                c[static_cast<size_t>(j)]));
        c[static_cast<size_t>(i)] = acc;
    }
    return c;
}

i64 Engine::pairing(const KClass& a, const KClass& b) const
{
    std::vector<i64> coords = expand_in_basis(a);
    if (b.size() != coords.size())
        throw InputError("K-class has wrong length for " + ctx_.to_string());
    i64 s = 0;
    for (size_t i = 0; i < coords.size(); ++i)
        s = checked_add(s, checked_mul(coords[i], b[i]));
    return s;
}

}  // namespace sod
