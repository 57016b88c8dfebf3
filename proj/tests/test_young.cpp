#include <doctest.h>

#include "sod/young.hpp"

using namespace sod;

namespace {

Partition P(const std::string& s)
{
    return Partition::parse(s);
}

}  // namespace

TEST_CASE("transpose")
{
    CHECK(transpose(P("3,1")) == P("2,1,1"));
    CHECK(transpose(P("")) == P(""));
    CHECK(transpose(P("2,2")) == P("2,2"));

    for (const Partition& p : enumerate_box(3, 4).members) {
        CHECK(transpose(transpose(p)) == p);
        CHECK(transpose(p).size() == p.size());
    }
}

TEST_CASE("contains")
{
    CHECK(contains(P("2,1"), P("1,1")));
    CHECK_FALSE(contains(P("2"), P("1,1")));
    CHECK(contains(P("2,1"), P("2,1")));

    // Conjugation preserves containment.
    const Box box = enumerate_box(3, 3);
    for (const Partition& a : box.members)
        for (const Partition& b : box.members)
            CHECK(contains(a, b) == contains(transpose(a), transpose(b)));
}

TEST_CASE("enumerate_box order and counts")
{
    const Box b22 = enumerate_box(2, 2);
    const std::vector<Partition> expected = {P("2,2"), P("2,1"), P("1,1"), P("2"), P("1"), P("")};
    CHECK(b22.members == expected);

    CHECK(enumerate_box(1, 3).members == std::vector<Partition>{P("3"), P("2"), P("1"), P("")});
    CHECK(enumerate_box(3, 0).members == std::vector<Partition>{P("")});

    for (int k = 1; k <= 4; ++k) {
        for (int w = 0; w <= 4; ++w) {
            const Box box = enumerate_box(k, w);
            CHECK(static_cast<i64>(box.members.size()) == binomial(k + w, k));
            // The order reverses inclusion: strictly contained diagrams
            // appear strictly later.
            for (size_t i = 0; i < box.members.size(); ++i)
                for (size_t j = i + 1; j < box.members.size(); ++j)
                    CHECK_FALSE(
                        (contains(box.members[j], box.members[i]) && box.members[i] != box.members[j]));
        }
    }
}

TEST_CASE("exactly_k_rows_subset")
{
    CHECK(exactly_k_rows_subset(enumerate_box(2, 2)) ==
          std::vector<Partition>{P("2,2"), P("2,1"), P("1,1")});
    CHECK(exactly_k_rows_subset(enumerate_box(1, 2)) == std::vector<Partition>{P("2"), P("1")});
    CHECK(exactly_k_rows_subset(enumerate_box(2, 0)).empty());

    for (int k = 1; k <= 4; ++k) {
        for (int w = 0; w <= 4; ++w) {
            const Box box = enumerate_box(k, w);
            const i64 full = static_cast<i64>(exactly_k_rows_subset(box).size());
            CHECK(full == binomial(k + w - 1, k));
            CHECK(static_cast<i64>(box.members.size()) - full == binomial(k + w - 1, k - 1));
        }
    }
}

TEST_CASE("dual_weight and twist")
{
    CHECK(dual_weight(Weight({2, 0})) == Weight({0, -2}));
    CHECK(dual_weight(Weight({0, 0, 0})) == Weight({0, 0, 0}));
    CHECK(dual_weight(Weight({1, 1})) == Weight({-1, -1}));
    CHECK(dual_weight(dual_weight(Weight({3, 1, -2}))) == Weight({3, 1, -2}));

    CHECK(twist(Weight({2, 1}), -1) == Weight({1, 0}));
    CHECK(twist(Weight({0, 0}), 5) == Weight({5, 5}));
    CHECK(twist(Weight({1, -1}), 1) == Weight({2, 0}));
}

TEST_CASE("weight text syntax")
{
    CHECK(Weight::parse("2,1,0", 3).to_string() == "2,1,0");
    CHECK(Weight::parse("2,1", 3) == Weight({2, 1, 0}));
    CHECK(Weight::parse("", 2) == Weight({0, 0}));
    CHECK(P("").to_string().empty());
    CHECK_THROWS_AS(Weight::parse("1,2", 2), InputError);
    CHECK_THROWS_AS(Weight::parse("0,-2", 3), InputError);  // cannot pad a negative tail
    CHECK_THROWS_AS(Weight::parse("1,2,3,4", 2), InputError);
    CHECK_THROWS_AS(Partition::parse("2,-1"), InputError);
    CHECK_THROWS_AS(Partition::parse("1,x"), InputError);
}

TEST_CASE("sub_diagrams")
{
    const auto subs = sub_diagrams(P("2,1"));
    CHECK(subs == std::vector<Partition>{P("2,1"), P("1,1"), P("2"), P("1"), P("")});
    CHECK(sub_diagrams(P("")).size() == 1);
}
