#include <doctest.h>

#include "braid4/rep.hpp"

using namespace braid4;

TEST_CASE("murnaghan-nakayama values") {
    // trivial representation
    CHECK(sn_character({4}, {2, 1, 1}) == 1);
    CHECK(sn_character({4}, {4}) == 1);
    // standard representation of S3 at a 3-cycle
    CHECK(sn_character({2, 1}, {3}) == -1);
    CHECK(sn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(sn_character({2, 1}, {2, 1}) == 0);
    // sign representation
    CHECK(sn_character({1, 1, 1}, {2, 1}) == -1);
    // hook dimension chi at identity
    CHECK(sn_character({3, 1}, {1, 1, 1, 1}) == 3);
    CHECK(partition_dim({3, 1}) == 3);
    CHECK(partition_dim({2, 2}) == 2);
    CHECK_THROWS(sn_character({2, 1}, {4}));
}

TEST_CASE("S4 character orthogonality via MN") {
    std::vector<std::vector<int>> parts = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    std::vector<int> class_size = {1, 8, 3, 6, 6};  // mu = 1^4, 31, 22, 211, 4... fixed below
    std::vector<std::vector<int>> mus = {{1, 1, 1, 1}, {3, 1}, {2, 2}, {2, 1, 1}, {4}};
    std::vector<int> sizes = {1, 8, 3, 6, 6};
    for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = 0; b < parts.size(); ++b) {
            Int ip = 0;
            for (size_t m = 0; m < mus.size(); ++m)
                ip += sizes[m] * sn_character(parts[a], mus[m]) * sn_character(parts[b], mus[m]);
            CHECK(ip == (a == b ? 24 : 0));
        }
}

TEST_CASE("padded partitions") {
    CHECK(padded_partition({0}, 4) == std::vector<int>{4});
    CHECK(padded_partition({1}, 4) == std::vector<int>{3, 1});
    CHECK(padded_partition({2}, 4) == std::vector<int>{2, 2});
    CHECK(padded_partition({2}, 3).empty());   // (1,2) is not a partition
    CHECK(padded_partition({1}, 2) == std::vector<int>{1, 1});
}

TEST_CASE("rho_I character") {
    PZnElement g{4, 0};
    g.bits = 1u << pair_index(4, 1, 3);
    CHECK(rho_character(I3_subset(4), g) == -1);
    PZnElement h{4, 0};
    h.bits = 1u << pair_index(4, 1, 2);
    CHECK(rho_character(I3_subset(4), h) == 1);
    PZnElement id{4, 0};
    CHECK(rho_character(PairSubset(4, {}), g) == 1);
    CHECK(rho_character(I4_subset(4), id) == 1);
}

TEST_CASE("constituent dimensions") {
    CHECK(constituent_dimension({0, PairSubset(4, {}), RhoTag::Trivial, {0}}, 4) == 1);
    CHECK(constituent_dimension({0, PairSubset(4, {}), RhoTag::Trivial, {1}}, 4) == 3);
    CHECK(constituent_dimension({0, PairSubset(4, {}), RhoTag::Trivial, {2}}, 4) == 2);
    CHECK(constituent_dimension({3, I3_subset(4), RhoTag::Rho3, {0}}, 4) == 12);
    CHECK(constituent_dimension({4, I4_subset(4), RhoTag::Rho4, {0}}, 4) == 3);
    // n=4 total: 1 + 3 + 2 + 12 + 3 = 21
    Int total = 0;
    for (const auto& l : h1_constituents(4)) total += constituent_dimension(l, 4);
    CHECK(total == 21);
    CHECK(constituent_dimension({3, I3_subset(5), RhoTag::Rho3, {0}}, 5) == 30);
    CHECK(constituent_dimension({4, I4_subset(5), RhoTag::Rho4, {0}}, 5) == 15);
}

TEST_CASE("isotypic decomposition of H1") {
    const auto& r3 = h1_isotypic(3);
    CHECK(r3.total_dim() == 6);
    CHECK(r3.block_dim(0) == 3);
    CHECK(r3.blocks.size() == 4);  // trivial + 3 conjugates of I_3
    const auto& r4 = h1_isotypic(4);
    CHECK(r4.total_dim() == 21);
    CHECK(r4.block_dim(0) == 6);
    CHECK(r4.blocks.size() == 16);  // 1 + 12 + 3
    CHECK(r4.block_dim(I3_subset(4).mask()) == 1);
    CHECK(r4.block_dim(I4_subset(4).mask()) == 1);
}

TEST_CASE("non-involutive input is rejected") {
    QMat bad = {{Rat(2), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK_THROWS_AS(isotypic_decomposition(2, {bad}), non_involutive);
}

TEST_CASE("multiplicities for n = 2, 3") {
    ZnTable t2(2);
    CHECK(multiplicity_two_stage(t2, {0, PairSubset(2, {}), RhoTag::Trivial, {0}}) == 1);
    CHECK(multiplicity_two_stage(t2, {0, PairSubset(2, {}), RhoTag::Trivial, {1}}) == 0);
    CHECK(multiplicity_full_group(t2, {0, PairSubset(2, {}), RhoTag::Trivial, {0}}) == 1);
    ZnTable t3(3);
    for (const auto& l : h1_constituents(3)) {
        CHECK(multiplicity_two_stage(t3, l) == 1);
        CHECK(multiplicity_full_group(t3, l) == 1);
    }
}

TEST_CASE("multiplicities for n = 4 agree between algorithms") {
    ZnTable t(4);
    for (const auto& l : h1_constituents(4)) {
        Int m2 = multiplicity_two_stage(t, l);
        CHECK(m2 == 1);
        CHECK(multiplicity_full_group(t, l) == m2);
    }
    // a constituent that does not occur
    IrrepLabel absent{0, PairSubset(4, {}), RhoTag::Trivial, {1, 1}};
    CHECK(multiplicity_two_stage(t, absent) == 0);
    CHECK(multiplicity_full_group(t, absent) == 0);
}

TEST_CASE("orbit submodules at n = 4") {
    auto a = orbit_submodule(alpha_generator(4, 1, 2));
    CHECK(a.dim == 6);
    auto b = orbit_submodule(x3_generator(4));
    CHECK(b.dim == 12);
    auto c = orbit_submodule(x4_generator(4));
    CHECK(c.dim == 3);
    RowSpan all(21);
    for (const auto& v : a.basis) all.insert(v);
    for (const auto& v : b.basis) all.insert(v);
    for (const auto& v : c.basis) all.insert(v);
    CHECK(all.rank() == 21);
}

TEST_CASE("branching") {
    ZnTable t(4);
    auto b1 = branching({0, PairSubset(4, {}), RhoTag::Trivial, {1}}, t);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].first.pairs.empty());
    CHECK(b1[0].second == 3);  // dim of the standard representation
    auto b4 = branching({4, I4_subset(4), RhoTag::Rho4, {0}}, t);
    CHECK(b4.size() == 3);
    for (const auto& [I, m] : b4) CHECK(m == 1);
}

TEST_CASE("torsion points") {
    auto p3 = torsion_points(3, 1);
    CHECK(p3.size() == 3);
    auto p4 = torsion_points(4, 1);
    CHECK(p4.size() == 15);
    CHECK(torsion_points(3, 2).empty());
    CHECK(torsion_points(4, 2).empty());
    for (const auto& I : p4) CHECK_NOTHROW(cohen_suciu_membership(I));
}

TEST_CASE("cohen-suciu components") {
    CHECK(cohen_suciu_membership(I3_subset(4)) == "V(1,2,3)");
    CHECK(cohen_suciu_membership(I4_subset(4)) == "V(1,2,3,4)");
    // a point off the components: a single pair {(1,2)} has support {1,2}
    CHECK_THROWS_AS(cohen_suciu_membership(PairSubset(4, {{1, 2}})),
                    not_on_central_component);
    // {(1,2),(1,3),(2,3)}: product of three -1's is -1, not on V_123
    CHECK_THROWS_AS(cohen_suciu_membership(PairSubset(4, {{1, 2}, {1, 3}, {2, 3}})),
                    not_on_central_component);
}

TEST_CASE("induced character dimensions at the identity") {
    ZnTable t(3);
    for (const auto& l : h1_constituents(3)) {
        auto cv = induced_character(l, t);
        for (size_t c = 0; c < cv.classes.size(); ++c)
            if (cv.classes[c].front() == 0)
                CHECK(cv.values[c] == constituent_dimension(l, 3));
    }
}

TEST_CASE("label validation") {
    CHECK_THROWS(constituent_dimension({3, I3_subset(4), RhoTag::Rho4, {0}}, 4));
    CHECK_THROWS(constituent_dimension({2, PairSubset(4, {{1, 3}}), RhoTag::Trivial, {0}}, 4));
    CHECK_NOTHROW(constituent_dimension({2, PairSubset(4, {{1, 2}}), RhoTag::Trivial, {0}}, 4));
}
