#include <doctest.h>

#include "braid4/zn.hpp"

using namespace braid4;

TEST_CASE("Z_n orders for n = 2, 3, 4") {
    CHECK(ZnTable(2).size() == 4);
    CHECK(ZnTable(3).size() == 48);
    CHECK(ZnTable(4).size() == 1536);
}

TEST_CASE("enumeration bound") {
    CHECK_THROWS_AS(ZnTable(6), bound_exceeded);
}

TEST_CASE("witness words reproduce the elements") {
    ZnTable t(3);
    for (size_t i = 0; i < t.size(); ++i)
        CHECK(pack_mod4(burau_mod(t.witness(static_cast<int>(i)), 4)) ==
              t.key(static_cast<int>(i)));
}

TEST_CASE("group operations are consistent") {
    ZnTable t(3);
    int a = t.generator_index(1), b = t.generator_index(2);
    CHECK(t.mul(a, t.inverse(a)) == 0);
    int ab = t.mul(a, b);
    CHECK(t.inverse(t.inverse(ab)) == ab);
    // canonical order is sorted by packed matrix
    const auto& ord = t.canonical_order();
    for (size_t i = 1; i < ord.size(); ++i) CHECK(t.key(ord[i - 1]) < t.key(ord[i]));
}

TEST_CASE("project and pure_project") {
    PureBraidWord a12(3, {{1, 2, 1}});
    PZnElement p = pure_project(a12);
    CHECK(p.get(1, 2));
    CHECK_FALSE(p.get(1, 3));
    PureBraidWord sq(3, {{1, 2, 2}});
    CHECK(pure_project(sq).bits == 0);
    // conjugate: sigma_1 A_13 sigma_1^-1 = A_23 in PZ_n and in Z_n
    BraidWord w = BraidWord(3, {{1, 1}}) * PureBraidWord(3, {{1, 3, 1}}).expand() *
                  BraidWord(3, {{1, -1}});
    PZnElement q = pure_project(w);
    CHECK(q.get(2, 3));
    CHECK_FALSE(q.get(1, 3));
    CHECK(project(w) == project(PureBraidWord(3, {{2, 3, 1}}).expand()));
    // non-pure input
    CHECK_THROWS_AS(pure_project(BraidWord(3, {{1, 1}})), not_pure);
}

TEST_CASE("pair subsets") {
    PairSubset i3 = I3_subset(5);
    CHECK(i3.is_full(3));
    CHECK_FALSE(i3.is_full(4));
    CHECK(i3.contains(1, 3));
    CHECK_FALSE(i3.contains(1, 2));
    CHECK(i3.str() == "{(1,3),(2,3)}");
    CHECK(PairSubset::parse(5, i3.str()) == i3);
    PairSubset i4 = I4_subset(4);
    CHECK(i4.is_full(4));
    // permutation action
    std::vector<int> swap12 = {2, 1, 3, 4};
    CHECK(i4.apply_perm(swap12) == i4);
}

TEST_CASE("orbits and stabilizers") {
    ZnTable t(4);
    auto o3 = t.orbit(I3_subset(4));
    CHECK(o3.members.size() == 12);
    auto o4 = t.orbit(I4_subset(4));
    CHECK(o4.members.size() == 3);
    auto stab = t.stabilizer_elements(I4_subset(4));
    CHECK(stab.size() * o4.members.size() == t.size());
    // schreier generators generate a subgroup inside the stabilizer
    auto gens = t.schreier_generators(I4_subset(4));
    for (int g : gens) {
        CHECK(I4_subset(4).apply_perm(t.perm(g)) == I4_subset(4));
    }
}

TEST_CASE("conjugacy classes partition the group") {
    ZnTable t(3);
    auto cls = t.conj_classes();
    size_t total = 0;
    for (const auto& c : cls) total += c.size();
    CHECK(total == t.size());
    // identity sits alone
    bool found = false;
    for (const auto& c : cls)
        if (c.size() == 1 && c[0] == 0) found = true;
    CHECK(found);
}

TEST_CASE("abelianization of Z_n is Z/4") {
    for (int n = 2; n <= 4; ++n) {
        ZnTable t(n);
        CHECK(zn_abelianization(t) == std::vector<long long>{4});
    }
}

TEST_CASE("pure_project is onto F_2^{C(n,2)}") {
    int n = 4;
    uint32_t seen = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            seen |= pure_project(PureBraidWord(n, {{i, j, 1}})).bits;
    CHECK(seen + 1 == (1u << (n * (n - 1) / 2)));
}
