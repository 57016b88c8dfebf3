#include "sod/collections.hpp"

#include <algorithm>

namespace sod {

void VerificationReport::add(std::string name, bool passed, std::string witness)
{
    overall = overall && passed;
    checks.push_back({std::move(name), passed, std::move(witness)});
}

namespace {

bool pi_order_less(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.parts() < b.parts();
}

std::vector<Partition> complement_of_exactly_k(const Box& box)
{
    std::vector<Partition> out;
    for (const Partition& p : box.members)
        if (p.rows() < box.k)
            out.push_back(p);
    std::sort(out.begin(), out.end(), pi_order_less);
    return out;
}

}  // namespace

CollectionSpec kapranov_collection(int k, int n)
{
    const Context ctx{k, n};
    CollectionSpec spec;
    spec.space = CollectionSpec::Space::grassmannian;
    spec.ctx = ctx;
    spec.strong_expected = true;
    spec.name = "kapranov";
    for (const Partition& p : enumerate_box(k, n - k).members)
        spec.items.push_back({BlockLabel::plain, make_u_object(ctx, p)});
    return spec;
}

CollectionSpec modified_collection(int k, int n)
{
    const Context ctx{k, n};
    const Box box = enumerate_box(k, n - k);
    CollectionSpec spec;
    spec.space = CollectionSpec::Space::grassmannian;
    spec.ctx = ctx;
    spec.strong_expected = false;
    spec.name = "modified";
    for (const Partition& p : exactly_k_rows_subset(box))
        spec.items.push_back({BlockLabel::j_part, make_u_object(ctx, p)});
    for (const Partition& p : complement_of_exactly_k(box))
        spec.items.push_back({BlockLabel::pi_part, make_q_object(ctx, transpose(p))});
    return spec;
}

CollectionSpec total_space_collection(int k, int n)
{
    CollectionSpec spec = modified_collection(k, n);
    spec.space = CollectionSpec::Space::total_space;
    spec.name = "total-space";
    for (CollectionItem& item : spec.items) {
        std::string prefix = item.label == BlockLabel::j_part ? "push:" : "pull:";
        item.object.name = prefix + item.object.name;
    }
    return spec;
}

CollectionSpec with_swapped_items(CollectionSpec spec, int i, int j)
{
    std::swap(spec.items.at(static_cast<size_t>(i)), spec.items.at(static_cast<size_t>(j)));
    spec.name += "-swapped-" + std::to_string(i) + "-" + std::to_string(j);
    return spec;
}

CollectionSpec misordered_fixture(CollectionSpec spec)
{
    // Swap the first two items of the same block: the leading box member
    // is the full rectangle, so such a pair is always comparable and the
    // swap puts a strictly larger diagram after a smaller one.
    int first = -1, second = -1;
    for (size_t i = 0; i + 1 < spec.items.size() && second < 0; ++i)
        if (spec.items[i].label == spec.items[i + 1].label) {
            first = static_cast<int>(i);
            second = first + 1;
        }
    if (second < 0)
        throw InputError("collection has no block with two items to misorder");
    spec = with_swapped_items(std::move(spec), first, second);
    spec.name += "-misordered";
    return spec;
}

namespace {

TotObject as_tot(const CollectionItem& item)
{
    return TotObject{item.label == BlockLabel::pi_part ? TotKind::pullback : TotKind::pushforward,
                     item.object};
}

std::string pair_name(const CollectionItem& from, const CollectionItem& to)
{
    return "Hom(" + from.object.name + ", " + to.object.name + ")";
}

void verify_grassmannian(const Engine& engine, const CollectionSpec& spec,
                         VerificationReport& report)
{
    const int N = static_cast<int>(spec.items.size());

    {
        bool ok = true;
        std::string witness = "all " + std::to_string(N) + " objects have self-Hom {0: 1}";
        for (const CollectionItem& item : spec.items) {
            GradedDimension d = engine.ext_gr(item.object, item.object);
            if (!(d.size() == 1 && d.count(0) == 1 && d.at(0) == 1)) {
                ok = false;
                witness = "Hom(" + item.object.name + ", " + item.object.name +
                          ") = " + graded_to_string(d);
                break;
            }
        }
        report.add("exceptionality", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        int pairs = 0;
        for (int j = 0; j < N && ok; ++j) {
            for (int i = 0; i < j && ok; ++i) {
                GradedDimension d =
                    engine.ext_gr(spec.items[static_cast<size_t>(j)].object,
                                  spec.items[static_cast<size_t>(i)].object);
                ++pairs;
                if (!d.empty()) {
                    ok = false;
                    witness = pair_name(spec.items[static_cast<size_t>(j)],
                                        spec.items[static_cast<size_t>(i)]) + " = " +
                              graded_to_string(d);
                }
            }
        }
        if (ok)
            witness = "all " + std::to_string(pairs) + " later-to-earlier Homs vanish";
        report.add("semiorthogonality", ok, witness);
    }

    if (spec.strong_expected) {
        bool ok = true;
        std::string witness = "no graded Homs outside degree 0";
        for (int i = 0; i < N && ok; ++i) {
            for (int j = 0; j < N && ok; ++j) {
                GradedDimension d = engine.ext_gr(spec.items[static_cast<size_t>(i)].object,
                                                  spec.items[static_cast<size_t>(j)].object);
                for (const auto& [deg, dim] : d) {
                    if (deg != 0) {
                        ok = false;
                        witness = pair_name(spec.items[static_cast<size_t>(i)],
                                            spec.items[static_cast<size_t>(j)]) + " = " +
                                  graded_to_string(d);
                        break;
                    }
                }
            }
        }
        report.add("strongness", ok, witness);
    }

    {
        // K-theoretic spanning surrogate: the collection's own Gram matrix
        // must be upper unitriangular of full size binomial(n, k).
        const i64 expected = binomial(engine.context().n, engine.context().k);
        bool ok = N == expected;
        std::string witness = "size " + std::to_string(N) + " = binomial(n, k)";
        if (!ok)
            witness = "size " + std::to_string(N) + " != " + std::to_string(expected);
        for (int i = 0; i < N && ok; ++i) {
            for (int j = 0; j <= i && ok; ++j) {
                i64 chi = engine.euler_pairing(spec.items[static_cast<size_t>(i)].object,
                                               spec.items[static_cast<size_t>(j)].object);
                i64 want = i == j ? 1 : 0;
                if (chi != want) {
                    ok = false;
                    witness = "chi(" + spec.items[static_cast<size_t>(i)].object.name + ", " +
                              spec.items[static_cast<size_t>(j)].object.name + ") = " +
                              std::to_string(chi);
                }
            }
        }
        report.add("k_spanning", ok, witness);
    }
}

void verify_total_space(const Engine& engine, const CollectionSpec& spec, int max_sym_degree,
                        VerificationReport& report)
{
    const Context ctx = engine.context();
    std::vector<int> push_idx, pull_idx;
    for (int i = 0; i < static_cast<int>(spec.items.size()); ++i) {
        if (spec.items[static_cast<size_t>(i)].label == BlockLabel::pi_part)
            pull_idx.push_back(i);
        else
            push_idx.push_back(i);
    }

    {
        const i64 want_push = binomial(ctx.n - 1, ctx.k);
        const i64 want_pull = binomial(ctx.n - 1, ctx.k - 1);
        bool ok = static_cast<i64>(push_idx.size()) == want_push &&
                  static_cast<i64>(pull_idx.size()) == want_pull;
        report.add("block_sizes", ok,
                   "j-block " + std::to_string(push_idx.size()) + " (expected " +
                       std::to_string(want_push) + "), pi-block " + std::to_string(pull_idx.size()) +
                       " (expected " + std::to_string(want_pull) + ")");
    }

    {
        bool ok = true;
        std::string witness = "all pushforwards have self-Hom {0: 1}";
        for (int i : push_idx) {
            const CollectionItem& item = spec.items[static_cast<size_t>(i)];
            HomProfile p = engine.hom_tot(as_tot(item), as_tot(item), max_sym_degree);
            if (!(p.dims.size() == 1 && p.dims.count(0) == 1 && p.dims.at(0) == 1)) {
                ok = false;
                witness = "Hom(" + item.object.name + ", " + item.object.name + ") = " +
                          graded_to_string(p.dims);
                break;
            }
        }
        report.add("push_exceptionality", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        int pairs = 0;
        for (size_t b = 0; b < push_idx.size() && ok; ++b) {
            for (size_t a = 0; a < b && ok; ++a) {
                const CollectionItem& later = spec.items[static_cast<size_t>(push_idx[b])];
                const CollectionItem& earlier = spec.items[static_cast<size_t>(push_idx[a])];
                ++pairs;
                if (auto viol = engine.pushforward_pair_violation(later.object, earlier.object)) {
                    ok = false;
                    witness = pair_name(later, earlier) + " via Lambda^" +
                              std::to_string(viol->wedge_degree) +
                              " U* = " + graded_to_string(viol->dims);
                }
            }
        }
        if (ok)
            witness = "all " + std::to_string(pairs) + " pushforward pairs vanish (m <= " +
                      std::to_string(ctx.k) + ")";
        report.add("push_semiorthogonality", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        int pairs = 0;
        for (int j : pull_idx) {
            for (int i : push_idx) {
                const CollectionItem& later = spec.items[static_cast<size_t>(j)];
                const CollectionItem& earlier = spec.items[static_cast<size_t>(i)];
                GradedDimension d = engine.ext_gr(later.object, earlier.object);
                ++pairs;
                if (!d.empty()) {
                    ok = false;
                    witness = pair_name(later, earlier) + " = " + graded_to_string(d);
                    break;
                }
            }
            if (!ok)
                break;
        }
        if (ok)
            witness = "all " + std::to_string(pairs) + " pullback-to-pushforward Homs vanish";
        report.add("pull_to_push_semiorthogonality", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        int pairs = 0;
        for (size_t b = 0; b < pull_idx.size() && ok; ++b) {
            for (size_t a = 0; a < b && ok; ++a) {
                const CollectionItem& later = spec.items[static_cast<size_t>(pull_idx[b])];
                const CollectionItem& earlier = spec.items[static_cast<size_t>(pull_idx[a])];
                ++pairs;
                if (auto viol = engine.pullback_pair_violation(later.object, earlier.object)) {
                    ok = false;
                    witness = pair_name(later, earlier) + " via Lambda^" +
                              std::to_string(viol->wedge_degree) +
                              " Q = " + graded_to_string(viol->dims);
                }
            }
        }
        if (ok)
            witness = "all " + std::to_string(pairs) + " pullback pairs vanish (m <= " +
                      std::to_string(ctx.n - ctx.k) + ", exact criterion)";
        report.add("pull_semiorthogonality", ok, witness);
    }

    {
        // Each pullback's endomorphisms must match the coordinate ring of
        // the affine space stratum by stratum: dim binomial(n+m-1, m) in
        // degree zero only.
        bool ok = true;
        std::string witness;
        for (int i : pull_idx) {
            const CollectionItem& item = spec.items[static_cast<size_t>(i)];
            for (int m = 0; m <= max_sym_degree && ok; ++m) {
                GrObject twisted{tensor_bundles(item.object.expr, sym_u_dual(ctx, m)),
                                 item.object.shift, ""};
                GradedDimension d = engine.ext_gr(item.object, twisted);
                const i64 want = binomial(ctx.n + m - 1, m);
                if (!(d.size() == 1 && d.count(0) == 1 && d.at(0) == want)) {
                    ok = false;
                    witness = "stratum m=" + std::to_string(m) + " of End(" + item.object.name +
                              ") = " + graded_to_string(d) + ", expected {0: " +
                              std::to_string(want) + "}";
                }
            }
            if (!ok)
                break;
        }
        if (ok)
            witness = "all strata match binomial(n+m-1, m) for m <= " +
                      std::to_string(max_sym_degree);
        report.add("pull_endomorphisms", ok, witness);
    }

    report.notes.push_back("fullness: K-theoretic surrogate only");
}

}  // namespace

VerificationReport verify(const Engine& engine, const CollectionSpec& spec, int max_sym_degree)
{
    if (!(engine.context() == spec.ctx))
        throw ContextError("collection does not live over " + engine.context().to_string());
    VerificationReport report;
    report.parameters["k"] = std::to_string(spec.ctx.k);
    report.parameters["n"] = std::to_string(spec.ctx.n);
    report.parameters["collection"] = spec.name;
    report.parameters["maxSymDegree"] = std::to_string(max_sym_degree);
    report.parameters["jOrder"] = "inclusion-reversing (size descending, lex ascending)";
    if (spec.space == CollectionSpec::Space::total_space || spec.name.rfind("modified", 0) == 0)
        report.parameters["piOrder"] = "inclusion-preserving (size ascending, lex ascending)";

    if (spec.space == CollectionSpec::Space::grassmannian)
        verify_grassmannian(engine, spec, report);
    else
        verify_total_space(engine, spec, max_sym_degree, report);
    return report;
}

std::vector<std::vector<std::optional<HomProfile>>> hom_matrix(const Engine& engine,
                                                               const CollectionSpec& spec,
                                                               int max_sym_degree)
{
    const size_t N = spec.items.size();
    std::vector<std::vector<std::optional<HomProfile>>> matrix(
        N, std::vector<std::optional<HomProfile>>(N));
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = 0; j < N; ++j) {
            if (spec.space == CollectionSpec::Space::grassmannian) {
                matrix[i][j] = HomProfile{engine.ext_gr(spec.items[i].object, spec.items[j].object),
                                          false};
                continue;
            }
            TotObject from = as_tot(spec.items[i]);
            TotObject to = as_tot(spec.items[j]);
            if (from.kind == TotKind::pushforward && to.kind == TotKind::pullback)
                continue;  // not computable without duality data
            matrix[i][j] = engine.hom_tot(from, to, max_sym_degree);
        }
    }
    return matrix;
}

}  // namespace sod
