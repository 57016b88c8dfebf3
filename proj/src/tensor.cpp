#include "sod/tensor.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

namespace sod {

void WeightSum::add(const Weight& w, i64 mult)
{
    if (w.rank() != rank_)
        throw InputError("weight " + w.to_string() + " has wrong rank for this sum");
    if (mult == 0)
        return;
    i64& slot = terms_[w];
    slot = checked_add(slot, mult);
    if (slot == 0)
        terms_.erase(w);
}

i64 WeightSum::multiplicity(const Weight& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

namespace {

std::mutex lr_mutex;
std::map<std::array<std::vector<int>, 3>, i64> lr_memo;

/// Counts the fillings directly. Cells are visited in the order of the
/// reverse reading word (rows top to bottom, right to left within a row),
/// so the lattice condition can be checked as each cell is placed.
i64 count_lr_tableaux(const Partition& la, const Partition& mu, const Partition& nu)
{
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < nu.rows(); ++r)
        for (int c = nu.part(r) - 1; c >= la.part(r); --c)
            cells.push_back({r, c});

    const int values = mu.rows();
    std::vector<i64> remaining(static_cast<size_t>(values) + 1, 0);
    for (int v = 1; v <= values; ++v)
        remaining[static_cast<size_t>(v)] = mu.part(v - 1);
    std::vector<i64> placed(static_cast<size_t>(values) + 1, 0);

    std::vector<std::vector<int>> entry(static_cast<size_t>(nu.rows()));
    for (int r = 0; r < nu.rows(); ++r)
        entry[static_cast<size_t>(r)].assign(static_cast<size_t>(nu.part(r)), 0);

    i64 count = 0;
    const auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        int hi = values;
        if (c + 1 < nu.part(r))  // right neighbor, already filled
            hi = std::min(hi, entry[static_cast<size_t>(r)][static_cast<size_t>(c) + 1]);
        int lo = 1;
        if (r > 0 && c >= la.part(r - 1))  // cell above is in the skew shape
            lo = std::max(lo, entry[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (remaining[static_cast<size_t>(v)] == 0)
                continue;
            if (v > 1 && placed[static_cast<size_t>(v)] >= placed[static_cast<size_t>(v) - 1])
                continue;  // would break the lattice condition
            entry[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            --remaining[static_cast<size_t>(v)];
            ++placed[static_cast<size_t>(v)];
            self(self, idx + 1);
            ++remaining[static_cast<size_t>(v)];
            --placed[static_cast<size_t>(v)];
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

i64 lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (nu.size() != lambda.size() + mu.size())
        return 0;
    // c is symmetric in lambda, mu; enumerate with the smaller content.
    const Partition& shape_base = mu.size() <= lambda.size() ? lambda : mu;
    const Partition& content = mu.size() <= lambda.size() ? mu : lambda;
    if (!contains(nu, shape_base) || !contains(nu, content))
        return 0;
    if (content.empty())
        return 1;

    std::array<std::vector<int>, 3> key{shape_base.parts(), content.parts(), nu.parts()};
    {
        std::lock_guard<std::mutex> lock(lr_mutex);
        auto it = lr_memo.find(key);
        if (it != lr_memo.end())
            return it->second;
    }
    i64 c = count_lr_tableaux(shape_base, content, nu);
    std::lock_guard<std::mutex> lock(lr_mutex);
    lr_memo.emplace(std::move(key), c);
    return c;
}

namespace {

/// Enumerates partitions nu >= A with |nu| = total, at most max_rows rows
/// and first part at most max_width.
template <class Fn>
void enumerate_supersets(const Partition& A, i64 total, int max_rows, int max_width, Fn&& fn)
{
    std::vector<int> buf;
    const auto rec = [&](auto&& self, int row, int prev, i64 acc) -> void {
        if (acc == total) {
            if (row >= A.rows())
                fn(Partition(std::vector<int>(buf)));
            return;
        }
        if (row == max_rows)
            return;
        int lo = std::max(A.part(row), 1);
        int hi = static_cast<int>(std::min<i64>(std::min(prev, max_width), total - acc));
        for (int v = lo; v <= hi; ++v) {
            buf.push_back(v);
            self(self, row + 1, v, acc + v);
            buf.pop_back();
        }
    };
    rec(rec, 0, max_width, 0);
}

/// Shared LR core: product of partitions A (x) B, keys twisted back by
/// -shift, rows above `rank` dropped (counted when asked for).
WeightSum lr_product(const Partition& A, const Partition& B, int shift, int rank, i64* discarded)
{
    const i64 total = checked_add(A.size(), B.size());
    const int max_width = A.part(0) + B.part(0);
    const int max_rows = discarded ? std::max(A.rows() + B.rows(), rank) : rank;

    WeightSum out(rank);
    enumerate_supersets(A, total, max_rows, max_width, [&](const Partition& nu) {
        i64 c = lr_coefficient(A, B, nu);
        if (c == 0)
            return;
        if (nu.rows() > rank) {
            if (discarded)
                *discarded = checked_add(*discarded, c);
            return;
        }
        out.add(twist(Weight::from_partition(nu, rank), -shift), c);
    });
    return out;
}

}  // namespace

WeightSum tensor_weights(const Weight& a, const Weight& b, int rank, i64* discarded)
{
    if (a.rank() != rank || b.rank() != rank)
        throw InputError("tensor factors must share the rank");
    if (rank == 0)
        throw InputError("rank must be positive");
    const int s1 = std::max(0, -a.part(rank - 1));
    const int s2 = std::max(0, -b.part(rank - 1));
    return lr_product(twist(a, s1).to_partition(), twist(b, s2).to_partition(), s1 + s2, rank,
                      discarded);
}

WeightSum tensor_schur(const Weight& lambda, const Partition& mu, int rank, i64* discarded)
{
    if (lambda.rank() != rank)
        throw InputError("weight " + lambda.to_string() + " does not have rank " +
                         std::to_string(rank));
    if (rank == 0)
        throw InputError("rank must be positive");
    const int s = std::max(0, -lambda.part(rank - 1));
    return lr_product(twist(lambda, s).to_partition(), mu, s, rank, discarded);
}

WeightSum pieri_wedge(const Partition& lambda, int m, int rank)
{
    if (lambda.rows() > rank)
        throw InputError("diagram " + lambda.to_string() + " does not fit in rank " +
                         std::to_string(rank));
    if (m < 0)
        throw InputError("wedge degree must be nonnegative");
    WeightSum out(rank);
    std::vector<int> buf(static_cast<size_t>(rank), 0);
    const auto rec = [&](auto&& self, int row, int prev, int left) -> void {
        if (row == rank) {
            if (left == 0)
                out.add(Weight(std::vector<int>(buf)), 1);
            return;
        }
        for (int add = 0; add <= std::min(left, 1); ++add) {
            int v = lambda.part(row) + add;
            if (v > prev)
                continue;
            buf[static_cast<size_t>(row)] = v;
            self(self, row + 1, v, left - add);
        }
    };
    rec(rec, 0, lambda.part(0) + 1, m);
    return out;
}

i64 dim_schur(const Weight& lambda, int rank)
{
    if (lambda.rank() != rank)
        throw InputError("weight " + lambda.to_string() + " does not have rank " +
                         std::to_string(rank));
    i64 num = 1, den = 1;
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            num = checked_mul(num, lambda.part(i) - lambda.part(j) + j - i);
            den = checked_mul(den, j - i);
            i64 g = std::gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    if (den != 1)
        throw std::logic_error("Weyl dimension did not divide out");
    return num;
}

BundleExpression BundleExpression::unit(Context ctx)
{
    BundleExpression e(ctx);
    e.add_term(Weight::zero(ctx.k), Weight::zero(ctx.n - ctx.k), 1);
    return e;
}

BundleExpression BundleExpression::u_schur(Context ctx, const Weight& u)
{
    BundleExpression e(ctx);
    e.add_term(u, Weight::zero(ctx.n - ctx.k), 1);
    return e;
}

BundleExpression BundleExpression::q_schur(Context ctx, const Weight& q)
{
    BundleExpression e(ctx);
    e.add_term(Weight::zero(ctx.k), q, 1);
    return e;
}

void BundleExpression::add_term(const Weight& u, const Weight& q, i64 mult)
{
    if (u.rank() != ctx_.k || q.rank() != ctx_.n - ctx_.k)
        throw ContextError("term ranks do not match " + ctx_.to_string());
    if (mult == 0)
        return;
    auto key = std::make_pair(u, q);
    i64& slot = terms_[key];
    slot = checked_add(slot, mult);
    if (slot == 0)
        terms_.erase(key);
}

void BundleExpression::add(const BundleExpression& other, i64 mult)
{
    if (!(other.ctx_ == ctx_))
        throw ContextError("cannot add expressions over different contexts");
    for (const auto& [key, m] : other.terms_)
        add_term(key.first, key.second, checked_mul(m, mult));
}

std::string BundleExpression::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [key, m] : terms_) {
        if (!out.empty())
            out += '+';
        if (m != 1)
            out += std::to_string(m) + '*';
        out += "u(" + key.first.to_string() + ")q(" + key.second.to_string() + ")";
    }
    return out;
}

BundleExpression tensor_bundles(const BundleExpression& a, const BundleExpression& b)
{
    if (!(a.context() == b.context()))
        throw ContextError("tensor factors live over different contexts: " +
                           a.context().to_string() + " vs " + b.context().to_string());
    const Context ctx = a.context();
    BundleExpression out(ctx);
    for (const auto& [ka, ma] : a.terms()) {
        for (const auto& [kb, mb] : b.terms()) {
            const i64 m = checked_mul(ma, mb);
            WeightSum us = tensor_weights(ka.first, kb.first, ctx.k);
            WeightSum qs = tensor_weights(ka.second, kb.second, ctx.n - ctx.k);
            for (const auto& [uw, cu] : us.terms())
                for (const auto& [qw, cq] : qs.terms())
                    out.add_term(uw, qw, checked_mul(m, checked_mul(cu, cq)));
        }
    }
    return out;
}

BundleExpression dual_expression(const BundleExpression& a)
{
    BundleExpression out(a.context());
    for (const auto& [key, m] : a.terms())
        out.add_term(dual_weight(key.first), dual_weight(key.second), m);
    return out;
}

i64 dim_expression(const BundleExpression& a)
{
    const Context ctx = a.context();
    i64 total = 0;
    for (const auto& [key, m] : a.terms())
        total = checked_add(total, checked_mul(m, checked_mul(dim_schur(key.first, ctx.k),
                                                              dim_schur(key.second, ctx.n - ctx.k))));
    return total;
}

namespace {

Weight row_weight(int m, int rank)
{
    std::vector<int> parts(static_cast<size_t>(rank), 0);
    parts[0] = m;
    return Weight(std::move(parts));
}

Weight column_weight(int m, int rank)
{
    std::vector<int> parts(static_cast<size_t>(rank), 0);
    for (int i = 0; i < m; ++i)
        parts[static_cast<size_t>(i)] = 1;
    return Weight(std::move(parts));
}

}  // namespace

BundleExpression sym_u(Context ctx, int m)
{
    return BundleExpression::u_schur(ctx, row_weight(m, ctx.k));
}

BundleExpression sym_u_dual(Context ctx, int m)
{
    return BundleExpression::u_schur(ctx, dual_weight(row_weight(m, ctx.k)));
}

BundleExpression wedge_u(Context ctx, int m)
{
    if (m > ctx.k)
        return BundleExpression::zero(ctx);
    return BundleExpression::u_schur(ctx, column_weight(m, ctx.k));
}

BundleExpression wedge_u_dual(Context ctx, int m)
{
    if (m > ctx.k)
        return BundleExpression::zero(ctx);
    return BundleExpression::u_schur(ctx, dual_weight(column_weight(m, ctx.k)));
}

BundleExpression sym_q(Context ctx, int m)
{
    return BundleExpression::q_schur(ctx, row_weight(m, ctx.n - ctx.k));
}

BundleExpression wedge_q(Context ctx, int m)
{
    if (m > ctx.n - ctx.k)
        return BundleExpression::zero(ctx);
    return BundleExpression::q_schur(ctx, column_weight(m, ctx.n - ctx.k));
}

BundleExpression wedge_q_dual(Context ctx, int m)
{
    if (m > ctx.n - ctx.k)
        return BundleExpression::zero(ctx);
    return BundleExpression::q_schur(ctx, dual_weight(column_weight(m, ctx.n - ctx.k)));
}

}  // namespace sod
