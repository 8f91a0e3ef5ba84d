#include <doctest.h>

#include "braid4/psi.hpp"

using namespace braid4;

namespace {
Label L(int v) { return {v, false}; }
Label Lp(int v) { return {v, true}; }
}  // namespace

TEST_CASE("subset symbols") {
    CoverIndex c = CoverIndex::base(3);
    PairVector v = subset_symbol(c, {L(1), L(2), L(3)});
    CHECK(v.entries.size() == 3);
    CHECK(v.entries.at(label_pair(L(1), L(2))) == 1);
    CHECK(subset_symbol(c, {}).is_zero());
    CHECK(subset_symbol(c, {L(2)}).is_zero());
    PairVector kl = subset_symbol(c, {L(2), L(3)});
    CHECK(kl.entries.size() == 1);
}

TEST_CASE("psi_square case split") {
    int n = 4;
    // cover (1,inf), pair (2,3): unlinked -> 2(23) + 2(2'3')
    PairVector a = psi_square(CoverIndex::inf(n, 1), {2, 3});
    PairVector wa{CoverIndex::inf(n, 1), {}};
    wa.add(label_pair(L(2), L(3)), 2);
    wa.add(label_pair(Lp(2), Lp(3)), 2);
    CHECK(a == wa);
    // cover (1,3), pair (1,2): intersection {k} -> (1 2 2')
    PairVector b = psi_square(CoverIndex::pair(n, 1, 3), {1, 2});
    CHECK(b == subset_symbol(CoverIndex::pair(n, 1, 3), {L(1), L(2), Lp(2)}));
    // cover (2,4), pair (1,2): intersection {l} -> (1 1' 2)
    PairVector b2 = psi_square(CoverIndex::pair(n, 2, 4), {1, 2});
    CHECK(b2 == subset_symbol(CoverIndex::pair(n, 2, 4), {L(1), Lp(1), L(2)}));
    // cover (1,3), pair (2,4): linked -> 2(24') + 2(2'4)
    PairVector d = psi_square(CoverIndex::pair(n, 1, 3), {2, 4});
    PairVector wd{CoverIndex::pair(n, 1, 3), {}};
    wd.add(label_pair(L(2), Lp(4)), 2);
    wd.add(label_pair(Lp(2), L(4)), 2);
    CHECK(d == wd);
    // cover (1,2), pair (1,2): 2({1,2} u {3,4}') + 2({3,4}')
    PairVector e = psi_square(CoverIndex::pair(n, 1, 2), {1, 2});
    CoverIndex c12 = CoverIndex::pair(n, 1, 2);
    PairVector we = subset_symbol(c12, {L(1), L(2), Lp(3), Lp(4)});
    for (auto& [k, v] : we.entries) v *= 2;
    we.add(subset_symbol(c12, {Lp(3), Lp(4)}), 2);
    CHECK(e == we);
}

TEST_CASE("iota case split") {
    int n = 4;
    CHECK(iota(CoverIndex::inf(n, 1), {1, 2}) == 2);
    CHECK(iota(CoverIndex::pair(n, 1, 2), {3, 4}) == std::nullopt);
    CHECK(iota(CoverIndex::pair(n, 1, 2), {2, 3}) == 3);
    CHECK(iota(CoverIndex::pair(n, 2, 4), {1, 2}) == 1);
}

TEST_CASE("psi_base on H1 vectors and pure words") {
    H1Vector v(3);
    v.add(BasisSymbol::s1(1, 2), 1);
    PairVector out = psi_base(v);
    CHECK(out.entries.at(label_pair(L(1), L(2))) == 2);
    // (1-T) terms die
    CHECK(psi_base(reduce(ModuleExpression::parse(3, "(1-T(1,3))t(1,2)"))).is_zero());
    PureBraidWord w(3, {{1, 2, 3}, {1, 3, -1}});
    PairVector pw = psi_base(w);
    CHECK(pw.entries.at(label_pair(L(1), L(2))) == 3);
    CHECK(pw.entries.at(label_pair(L(1), L(3))) == -1);
}

TEST_CASE("paper worked example: psi_1inf(T12 tau23)") {
    H1Vector v = reduce(ModuleExpression::parse(3, "T(1,2)t(2,3)"));
    PairVector out = psi_cover(CoverIndex::inf(3, 1), v);
    PairVector want{CoverIndex::inf(3, 1), {}};
    want.add(label_pair(L(2), Lp(3)), 2);
    want.add(label_pair(Lp(2), L(3)), 2);
    CHECK(out == want);
}

TEST_CASE("four-strand detection table entry") {
    H1Vector v = reduce(ModuleExpression::parse(4, "(1-T(1,4))(1-T(2,3))t(1,2)"));
    CoverIndex c = CoverIndex::pair(4, 1, 2);
    PairVector want{c, {}};
    want.add(delta_pattern(c, 3, 4), 4);
    CHECK(psi_cover(c, v) == want);
    CHECK(psi_cover(CoverIndex::pair(4, 1, 3), v).is_zero());
    CHECK(psi_cover(CoverIndex::pair(4, 1, 4), v).is_zero());
}

TEST_CASE("general curve formulas") {
    int n = 5;
    // A = {k,l} = {i,j}: matches psi_square fifth case
    CoverIndex c = CoverIndex::pair(n, 2, 3);
    CurveSplit s5;
    s5.first = {1, 4, 5};  // B = complement, C = empty
    CHECK(psi_general_curve(c, {2, 3}, s5) == psi_square(c, {2, 3}));
    // singleton A = {i}: the symbol of a single label is 0
    CHECK(psi_general_curve(c, {2}, {}).is_zero());
    // disjoint with A2 empty: 2(A) + 2(A')
    CoverIndex ci = CoverIndex::inf(n, 1);
    CurveSplit sd{{2, 3}, {}};
    PairVector out = psi_general_curve(ci, {2, 3}, sd);
    PairVector want{ci, {}};
    want.add(label_pair(L(2), L(3)), 2);
    want.add(label_pair(Lp(2), Lp(3)), 2);
    CHECK(out == want);
    // a wrong split kind is rejected
    CHECK_THROWS_AS(psi_general_curve(ci, {2}, sd), case_mismatch);
    // three-point curve over (1,inf): A = {1,2,3} contains i=1: (A u (A-1)')
    PairVector tri = psi_general_curve(ci, {1, 2, 3}, {});
    CHECK(tri == subset_symbol(ci, {L(1), L(2), L(3), Lp(2), Lp(3)}));
}

TEST_CASE("independence certificate") {
    auto r3 = independence_certificate(3);
    CHECK(r3.rank == 6);
    CHECK(r3.dim == 6);
    auto r4 = independence_certificate(4);
    CHECK(r4.rank == 21);
    CHECK(r4.dim == 21);
}

TEST_CASE("cover parsing") {
    CHECK(CoverIndex::parse(4, "(1,inf)").is_inf());
    CHECK(CoverIndex::parse(4, "(2,4)").j == 4);
    CHECK(CoverIndex::parse(4, "base").is_base());
    CHECK(CoverIndex::parse(4, "(1,inf)").str() == "(1,inf)");
}
