#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "braid4/braid.hpp"
#include "braid4/burau.hpp"

namespace braid4 {

struct bound_exceeded : braid_error {
    using braid_error::braid_error;
};

// n x n matrix over Z/4 packed at 2 bits per entry, row-major (n <= 6)
struct ZnKey {
    uint64_t lo = 0, hi = 0;
    bool operator==(const ZnKey&) const = default;
    bool operator<(const ZnKey& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
};

struct ZnKeyHash {
    size_t operator()(const ZnKey& k) const {
        uint64_t x = k.lo * 0x9e3779b97f4a7c15ULL ^ (k.hi + 0xbf58476d1ce4e5b9ULL);
        x ^= x >> 31;
        return static_cast<size_t>(x * 0x94d049bb133111ebULL);
    }
};

ZnKey pack_mod4(const BurauMatrix& m4);
BurauMatrix unpack_mod4(int n, const ZnKey& k);

// element of Z_n = image of Burau mod 4, with its mod-2 permutation shadow
struct ZnElement {
    int n = 1;
    ZnKey key;
    std::vector<int> perm;  // perm[j-1] = image of j

    bool operator==(const ZnElement& o) const { return n == o.n && key == o.key; }
    BurauMatrix matrix() const { return unpack_mod4(n, key); }
};

ZnElement project(const BraidWord& w);

// element of PZ_n = (Z/2)^{n choose 2}, bits indexed by pairs in lex order
struct PZnElement {
    int n = 1;
    uint32_t bits = 0;

    bool operator==(const PZnElement&) const = default;
    PZnElement operator+(const PZnElement& o) const;
    bool get(int i, int j) const;
};

int pair_index(int n, int i, int j);              // lex rank of {i,j}, 0-based
IndexPair pair_from_index(int n, int idx);

struct not_pure : braid_error {
    using braid_error::braid_error;
};
PZnElement pure_project(const BraidWord& w);      // throws not_pure
PZnElement pure_project(const PureBraidWord& w);

// subset of unordered pairs of [n], canonically sorted
struct PairSubset {
    int n = 1;
    std::vector<IndexPair> pairs;

    PairSubset() = default;
    PairSubset(int strands, std::vector<IndexPair> ps);

    bool contains(int i, int j) const;
    std::vector<int> support() const;             // sorted union of endpoints
    bool is_full(int m) const;                    // union == {1..m}
    PairSubset apply_perm(const std::vector<int>& p) const;
    uint32_t mask() const;                        // bitset over pair_index
    std::string str() const;                      // "{(1,3),(2,3)}"
    static PairSubset parse(int n, const std::string& s);
    bool operator==(const PairSubset&) const = default;
    bool operator<(const PairSubset& o) const { return pairs < o.pairs; }
};

PairSubset I3_subset(int n);
PairSubset I4_subset(int n);

// Enumerated group table for Z_n, BFS over sigma_1..sigma_{n-1}.
// Element indices refer to BFS discovery order; canonical_order() gives the
// deterministic listing sorted by matrix bytes.
class ZnTable {
  public:
    static constexpr int kDefaultBound = 5;

    explicit ZnTable(int n, bool allow_large = false);

    int n;
    size_t size() const { return keys_.size(); }

    int index_of(const ZnKey& k) const;
    const ZnKey& key(int idx) const { return keys_[idx]; }
    ZnElement element(int idx) const;
    const std::vector<int>& perm(int idx) const { return perms_[idx]; }

    int mul(int a, int b) const;                  // index of product a*b
    int inverse(int a) const;
    int identity_index() const { return 0; }
    int conj(int g, int x) const;                 // g x g^-1

    BraidWord witness(int idx) const;             // positive word over sigmas
    const std::vector<int>& canonical_order() const { return canon_; }

    int generator_index(int k) const { return gen_index_[k - 1]; }  // sigma_k

    // conjugacy classes of the subgroup listed in `subset` (element indices),
    // closed under conjugation by `gens` (subgroup generator indices)
    std::vector<std::vector<int>> conj_classes(const std::vector<int>& subset,
                                               const std::vector<int>& gens) const;
    std::vector<std::vector<int>> conj_classes() const;  // whole group

    // orbit of a pair subset under the Z_n action with transversal words;
    // transversal[t] is a coset representative element index
    struct Orbit {
        std::vector<PairSubset> members;
        std::vector<int> reps;               // element index per member
        std::unordered_map<uint32_t, int> member_index;  // by mask
    };
    Orbit orbit(const PairSubset& I) const;

    std::vector<int> stabilizer_elements(const PairSubset& I) const;
    // Schreier generators of the stabilizer from the orbit transversal
    std::vector<int> schreier_generators(const PairSubset& I) const;

  private:
    std::vector<ZnKey> keys_;
    std::vector<std::vector<int>> perms_;
    std::vector<int> parent_;
    std::vector<int> parent_gen_;
    std::vector<int> canon_;
    std::vector<int> gen_index_;
    std::unordered_map<ZnKey, int, ZnKeyHash> index_;
};

// abelianization invariants of Z_n (elementary divisors), n <= 4
std::vector<long long> zn_abelianization(const ZnTable& t);

}  // namespace braid4
