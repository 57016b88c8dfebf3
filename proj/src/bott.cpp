#include "sod/bott.hpp"

#include <algorithm>

namespace sod {

void add_graded(GradedDimension& dst, const GradedDimension& src, i64 mult, int degree_shift)
{
    for (const auto& [deg, dim] : src) {
        i64& slot = dst[deg + degree_shift];
        slot = checked_add(slot, checked_mul(dim, mult));
        if (slot == 0)
            dst.erase(deg + degree_shift);
    }
}

std::string graded_to_string(const GradedDimension& g)
{
    if (g.empty())
        return "{}";
    std::string out = "{";
    bool first = true;
    for (const auto& [deg, dim] : g) {
        if (!first)
            out += ", ";
        first = false;
        out += std::to_string(deg) + ": " + std::to_string(dim);
    }
    return out + "}";
}

CohomologyResult bwb(int k, int n, const Weight& alpha, const Weight& beta)
{
    if (k < 1 || k >= n)
        throw InputError("bwb requires 1 <= k < n");
    if (alpha.rank() != k)
        throw InputError("u-weight " + alpha.to_string() + " must have rank k = " + std::to_string(k));
    if (beta.rank() != n - k)
        throw InputError("q-weight " + beta.to_string() + " must have rank n-k = " +
                         std::to_string(n - k));

    // gamma + rho, quotient block first.
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    for (int x : beta.parts())
        v.push_back(x);
    for (int x : alpha.parts())
        v.push_back(x);
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] += n - 1 - i;

    int inversions = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(j)])
                return std::nullopt;
            if (v[static_cast<size_t>(i)] < v[static_cast<size_t>(j)])
                ++inversions;
        }
    }

    std::sort(v.begin(), v.end(), std::greater<>());
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] -= n - 1 - i;
    return BottResult{inversions, Weight(std::move(v))};
}

GradedDimension cohomology(const BundleExpression& expr)
{
    const Context ctx = expr.context();
    GradedDimension out;
    for (const auto& [key, mult] : expr.terms()) {
        CohomologyResult r = bwb(ctx.k, ctx.n, key.first, key.second);
        if (!r)
            continue;
        i64& slot = out[r->degree];
        slot = checked_add(slot, checked_mul(mult, dim_schur(r->gln_weight, ctx.n)));
    }
    return out;
}

i64 euler_characteristic(const BundleExpression& expr)
{
    i64 chi = 0;
    for (const auto& [deg, dim] : cohomology(expr))
        chi = checked_add(chi, (deg % 2 == 0) ? dim : -dim);
    return chi;
}

}  // namespace sod
