#include <doctest.h>

#include <random>

#include "sod/mutation.hpp"

using namespace sod;

namespace {

Partition P(const std::string& s)
{
    return Partition::parse(s);
}

GrObject line_on_p1(const Engine& engine, int degree)
{
    return GrObject{BundleExpression::u_schur(engine.context(), Weight({-degree})), 0,
                    "O(" + std::to_string(degree) + ")"};
}

bool same_up_to_sign(const KClass& a, const KClass& b)
{
    KClass neg(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        neg[i] = -b[i];
    return a == b || a == neg;
}

}  // namespace

TEST_CASE("mutations on the projective line")
{
    Engine engine(1, 2);
    const KClass o = engine.kclass(make_unit_object(engine.context()));
    const KClass o1 = engine.kclass(line_on_p1(engine, 1));
    const KClass o2 = engine.kclass(line_on_p1(engine, 2));
    const KClass om1 = engine.kclass(line_on_p1(engine, -1));

    CHECK(engine.pairing(o, o1) == 2);

    // Right mutation of [O] through [O(1)] is -[O(2)].
    KClass r = right_mutation_k(engine, o, o1);
    KClass minus_o2(o2.size());
    for (size_t i = 0; i < o2.size(); ++i)
        minus_o2[i] = -o2[i];
    CHECK(r == minus_o2);

    // Left mutation of the same pair is -[O(-1)].
    KClass l = left_mutation_k(engine, o, o1);
    KClass minus_om1(om1.size());
    for (size_t i = 0; i < om1.size(); ++i)
        minus_om1[i] = -om1[i];
    CHECK(l == minus_om1);

    // chi(A, A) = 1 sends a class to zero under self-mutation.
    CHECK(right_mutation_k(engine, o, o) == KClass{0, 0});
    // Zero neighbors are inert.
    CHECK(left_mutation_k(engine, o, KClass{0, 0}) == KClass{0, 0});
}

TEST_CASE("orthogonal classes are fixed by mutation")
{
    Engine engine(2, 4);
    const Context ctx = engine.context();
    // chi(U[1,1], U[2]) = 0 = chi(U[2], U[1,1]) for the incomparable pair.
    const KClass a = engine.kclass(make_u_object(ctx, P("1,1")));
    const KClass b = engine.kclass(make_u_object(ctx, P("2")));
    CHECK(engine.pairing(a, b) == 0);
    CHECK(right_mutation_k(engine, a, b) == a);
    CHECK(left_mutation_k(engine, a, b) == b);
}

TEST_CASE("mutation involutivity on random semiorthogonal Kapranov pairs")
{
    // Pairs are drawn in collection order, so chi(later, earlier) = 0.
    Engine engine(2, 4);
    KCollection kap = kapranov_kcollection(engine);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(kap.classes.size()) - 1);
    for (int trial = 0; trial < 40; ++trial) {
        int i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        const KClass& a = kap.classes[static_cast<size_t>(std::min(i, j))];
        const KClass& b = kap.classes[static_cast<size_t>(std::max(i, j))];
        // Right then left on the mutated pair restores both classes up to sign.
        KClass a_right = right_mutation_k(engine, a, b);
        KClass back = left_mutation_k(engine, b, a_right);
        CHECK(same_up_to_sign(back, a));
        KClass b_left = left_mutation_k(engine, a, b);
        KClass fwd = right_mutation_k(engine, b_left, a);
        CHECK(same_up_to_sign(fwd, b));
    }
}

TEST_CASE("rotations")
{
    Engine p1(1, 2);
    KCollection coll = kapranov_kcollection(p1);  // [O(-1)], [O]

    KCollection single{p1.context(), {coll.classes[0]}};
    CHECK(rotate_right_k(p1, single).classes == single.classes);
    CHECK(rotate_left_k(p1, single).classes == single.classes);

    // Rotating <[O], [O(1)]> right gives <+-[O(-1)], [O]>.
    KCollection pair{p1.context(),
                     {p1.kclass(make_unit_object(p1.context())), p1.kclass(line_on_p1(p1, 1))}};
    KCollection rotated = rotate_right_k(p1, pair);
    CHECK(same_up_to_sign(rotated.classes[0], p1.kclass(line_on_p1(p1, -1))));
    CHECK(rotated.classes[1] == pair.classes[0]);

    // Right then left is the identity up to sign, item by item.
    Engine engine(2, 4);
    KCollection kap = kapranov_kcollection(engine);
    KCollection round = rotate_left_k(engine, rotate_right_k(engine, kap));
    for (size_t i = 0; i < kap.classes.size(); ++i)
        CHECK(same_up_to_sign(round.classes[i], kap.classes[i]));

    CHECK_THROWS_AS(rotate_right_k(engine, KCollection{engine.context(), {}}), InputError);
}

TEST_CASE("staircase resolution")
{
    {
        // lambda = (1): the identity reduces to [Q] = n[O] - [U].
        Engine engine(2, 4);
        CHECK(verify_resolution(engine, P("1")).overall);
        GradedDimension hom = engine.ext_gr(make_unit_object(engine.context()),
                                            make_q_object(engine.context(), P("1")));
        CHECK(hom == GradedDimension{{0, 4}});
    }
    CHECK(verify_resolution(Engine(2, 4), P("1,1")).overall);
    CHECK(verify_resolution(Engine(2, 4), P("")).overall);
    CHECK_THROWS_AS(verify_resolution(Engine(2, 4), P("3")), InputError);
}

TEST_CASE("staircase resolution rank identity")
{
    // An exact sequence of vector bundles forces the alternating sum of
    // fiber ranks to vanish; this checks the Hom multiplicities through a
    // channel (Weyl dimensions) independent of K-classes.
    Engine engine(2, 4);
    const Context ctx = engine.context();
    for (const Partition& la : engine.box().members) {
        i64 rhs = 0;
        for (const Partition& mu : sub_diagrams(la)) {
            if (mu == la)
                continue;
            GradedDimension hom =
                engine.ext_gr(make_q_object(ctx, transpose(mu)), make_q_object(ctx, transpose(la)));
            const i64 mult = hom.count(0) ? hom.at(0) : 0;
            const i64 sign = mu.size() % 2 == 0 ? 1 : -1;
            rhs += sign * mult * dim_expression(make_u_object(ctx, mu).expr);
        }
        rhs += (la.size() % 2 == 0 ? 1 : -1) * dim_expression(make_u_object(ctx, la).expr);
        CHECK(dim_expression(make_q_object(ctx, transpose(la)).expr) == rhs);
    }
}

TEST_CASE("mutation equivalence on small Grassmannians")
{
    // k = 1: the classical projective-space relations.
    for (int n = 2; n <= 4; ++n) {
        Engine engine(1, n);
        for (int a = 0; a <= n - 1; ++a)
            CHECK(verify_mutation_equivalence(engine, Partition({a})).overall);
    }
    {
        Engine engine(2, 4);
        for (const Partition& la : engine.box().members) {
            CHECK(verify_mutation_equivalence(engine, la).overall);
            CHECK(verify_resolution(engine, la).overall);
        }
    }
}

TEST_CASE("rotation periodicity is exploratory only")
{
    // The full-rotation check is informational: it already fails on P^1,
    // where n rotations twist by the canonical bundle instead of the
    // identity. It must run without errors and never gate a report.
    Engine p1(1, 2);
    CHECK_FALSE(rotation_periodicity_holds(p1));
    Engine p2(1, 3);
    (void)rotation_periodicity_holds(p2);
    Engine gr24(2, 4);
    (void)rotation_periodicity_holds(gr24);
}
