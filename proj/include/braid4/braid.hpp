#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braid4/numbers.hpp"

namespace braid4 {

struct braid_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sigma_index^sign
struct BraidLetter {
    int index;
    int sign;
    bool operator==(const BraidLetter&) const = default;
};

// Words compose right to left (functional notation): letters.front() acts last.
struct BraidWord {
    int n = 1;
    std::vector<BraidLetter> letters;

    BraidWord() = default;
    BraidWord(int strands, std::vector<BraidLetter> ls);

    BraidWord inverse() const;
    BraidWord operator*(const BraidWord& rhs) const;  // apply rhs first

    std::string str() const;                               // "s1 S2 s1"
    static BraidWord parse(int n, const std::string& s);
    bool operator==(const BraidWord&) const = default;
};

using IndexPair = std::pair<int, int>;  // always stored i < j

inline IndexPair make_pair_sorted(int a, int b) {
    return a < b ? IndexPair{a, b} : IndexPair{b, a};
}

// A_{ij}^exp factors; expansion A_ij = (s_{j-1}..s_{i+1}) s_i^2 (s_{i+1}..s_{j-1})^-1
struct PureFactor {
    int i, j;
    long long exp;
};

struct PureBraidWord {
    int n = 1;
    std::vector<PureFactor> letters;

    PureBraidWord() = default;
    PureBraidWord(int strands, std::vector<PureFactor> ls);

    BraidWord expand() const;
    PureBraidWord inverse() const;
    PureBraidWord operator*(const PureBraidWord& rhs) const;

    std::string str() const;                               // "A(1,2)^2 A(1,3)"
    static PureBraidWord parse(int n, const std::string& s);
};

// permutation induced on strand labels: result[j-1] = end position of the
// strand starting at position j
std::vector<int> permutation_of(const BraidWord& w);
bool is_pure(const BraidWord& w);

// total winding number xi_ij (exact dyadic rational, +-1/2 per crossing)
Rat winding(const BraidWord& w, int i, int j);
std::map<IndexPair, Rat> windings(const BraidWord& w);

// omega_k (k = 3 or 4) on words stabilizing I_k; rho_k = (-1)^omega_k
struct not_in_stabilizer : braid_error {
    using braid_error::braid_error;
};
long long omega_k(const BraidWord& w, int k);
int rho_k(const BraidWord& w, int k);

// delete all strands not in `keep` (sorted labels), relabel order-preserving
BraidWord forget_strands(const BraidWord& w, const std::vector<int>& keep);

// sigma_k^s A_ij sigma_k^{-s} = R A_{i'j'} R^{-1}; R is empty or A_{k,k+1}^{+-1}
struct ConjResult {
    std::optional<PureFactor> prefix;
    IndexPair target;
};
ConjResult conj_artin(int k, int s, int i, int j);

// conjugate a pure word by sigma_k^s; each emitted identity is re-checked
// against mod-4 Burau equality
PureBraidWord conj_pure(int k, int s, const PureBraidWord& w);

}  // namespace braid4
