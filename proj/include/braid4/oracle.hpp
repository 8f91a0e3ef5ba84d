#pragma once

#include <string>
#include <vector>

#include "braid4/braid.hpp"
#include "braid4/linalg.hpp"

namespace braid4 {

struct not_in_subgroup : braid_error {
    using braid_error::braid_error;
};

// Artin action of B_n on the free group F_n (faithful); used to validate
// presentation relators exactly
using FreeWord = std::vector<int>;  // nonzero +-generator indices, freely reduced
FreeWord free_reduce(const FreeWord& w);
FreeWord artin_image(const BraidWord& w, int generator);
bool artin_trivial(const BraidWord& w);

struct Presentation {
    std::vector<std::string> gen_names;
    std::vector<std::vector<std::pair<int, int>>> relators;  // letters (gen, +-1)

    std::string str() const;  // "gen a12" / "rel a12 a13 A12" lines
    static Presentation parse(const std::string& text);
};

// standard presentation of PB_n on the Artin generators A_ij; every relator is
// verified trivial under the Artin action and under Burau mod 4 and mod 8
Presentation pb_presentation(int n);

// the conjugation formula behind the relators:
// A_rs A_ij A_rs^-1 = C A_ij C^-1, C a word of Artin letters
std::vector<PureFactor> pb_conj_word(int r, int s, int i, int j);

struct AbelianizationResult {
    size_t generators = 0;
    size_t free_rank = 0;
    std::vector<Int> divisors;  // elementary divisors > 0 (with SNF)
    bool snf_computed = false;
    bool odd_torsion_free() const;
};

AbelianizationResult abelianization(const Presentation& p, bool with_snf);

// Reidemeister-Schreier presentation of B_n[4] = ker(PB_n -> F_2^{n choose 2})
class SubgroupOracle {
  public:
    explicit SubgroupOracle(int n, bool allow_n5 = false);

    int n;
    size_t index() const { return size_t(1) << npairs_; }
    size_t schreier_rank() const { return schreier_.size(); }

    Presentation subgroup_presentation() const;
    AbelianizationResult abelianization(bool with_snf) const;

    // coordinates of the class of a subgroup word in H_1(B_n[4];Q), in the
    // fixed quotient basis (free columns of the reduced relator matrix)
    QVec oracle_class(const PureBraidWord& w) const;
    size_t rank() const;  // = number of free columns

    using Combination = std::vector<std::pair<Rat, PureBraidWord>>;
    bool relation_check(const Combination& lhs, const Combination& rhs) const;
    QVec class_of_combination(const Combination& c) const;

  private:
    int npairs_;
    Presentation base_;
    std::vector<std::pair<uint32_t, int>> schreier_;     // (coset, gen)
    std::vector<std::vector<int>> schreier_index_;       // [coset][gen] -> id or -1
    std::vector<std::vector<std::pair<int, int>>> sub_relators_;
    // reduced relator matrix data, built lazily
    void ensure_reduced() const;
    mutable std::vector<QVec> rref_rows_;
    mutable std::vector<size_t> rref_pivots_;
    mutable std::vector<size_t> free_cols_;
    mutable bool reduced_ = false;

    std::vector<std::pair<int, int>> rewrite(const std::vector<std::pair<int, int>>& word,
                                             uint32_t start, uint32_t* end) const;
};

}  // namespace braid4
