#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braid4/h1.hpp"

namespace braid4 {

// marked-point label of a double cover: v or v' for v in [n]
struct Label {
    int v = 1;
    bool primed = false;
    bool operator==(const Label&) const = default;
    bool operator<(const Label& o) const {
        return std::tie(v, primed) < std::tie(o.v, o.primed);
    }
    std::string str() const { return std::to_string(v) + (primed ? "'" : ""); }
};

using LabelPair = std::pair<Label, Label>;
LabelPair label_pair(Label a, Label b);

// (i,j)-cover datum; j == kInf encodes the (i,inf)-cover, and the base
// abelianization is represented by is_base()
struct CoverIndex {
    static constexpr int kInf = 1 << 20;
    int n = 2;
    int i = 0;  // 0 with j == 0 means the base map psi
    int j = 0;

    static CoverIndex base(int n) { return {n, 0, 0}; }
    static CoverIndex inf(int n, int i) { return {n, i, kInf}; }
    static CoverIndex pair(int n, int i, int j);

    bool is_base() const { return i == 0; }
    bool is_inf() const { return j == kInf; }
    std::vector<Label> labels() const;
    std::string str() const;
    static CoverIndex parse(int n, const std::string& s);
};

// integer vector over unordered pairs of cover labels
struct PairVector {
    CoverIndex cover;
    std::map<LabelPair, Int> entries;

    PairVector& add(const LabelPair& k, const Int& c);
    PairVector& add(const PairVector& o, const Int& scale = 1);
    bool is_zero() const { return entries.empty(); }
    bool operator==(const PairVector& o) const {
        return entries == o.entries;  // cover is context
    }
    std::string str() const;
};

// (A) = sum_{p<q in A} (pq); empty and singleton sets give 0
PairVector subset_symbol(const CoverIndex& c, const std::vector<Label>& A);

// delta_{ab} = (ab) + (a'b') - (ab') - (a'b)
PairVector delta_pattern(const CoverIndex& c, int a, int b);

// psi_{cover}(T_kl^2), the five-case formula
PairVector psi_square(const CoverIndex& c, IndexPair kl);

// the naturality permutation iota_{kl}^{ij}: the label to swap with its
// primed twin, or nothing
std::optional<int> iota(const CoverIndex& c, IndexPair kl);
PairVector apply_iota(std::optional<int> swap, const PairVector& v);

// psi and psi_{ij} on H1 vectors (linear; prefixes evaluated right to left)
PairVector psi_base(const H1Vector& v);
PairVector psi_base(const PureBraidWord& w);
PairVector psi_cover(const CoverIndex& c, const H1Vector& v);

// closed formulas for psi_{ij}(T_c^2) from the enclosed-label data; the
// caller supplies the split appropriate to the case
struct case_mismatch : braid_error {
    using braid_error::braid_error;
};
struct CurveSplit {
    // case A n {i,j} singleton: no split needed
    // case A disjoint from {i,j}: (A1, A2) partition of A
    // case {i,j} subset A: (B, C) partition of [n] \ A
    std::vector<int> first, second;
};
PairVector psi_general_curve(const CoverIndex& c, const std::vector<int>& A,
                             const CurveSplit& split);

// rank of the stacked detection map (forgetful to sizes 2..4, then psi and
// all psi_{ij}) on span(S); equals dim H_1 for n <= 5
struct IndependenceReport {
    size_t rank;
    Int dim;
};
IndependenceReport independence_certificate(int n);

}  // namespace braid4
