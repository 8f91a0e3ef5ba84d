#pragma once

#include <vector>

#include "braid4/braid.hpp"
#include "braid4/numbers.hpp"

namespace braid4 {

// Unreduced Burau at t = -1, entries reduced mod m (m = 0 keeps integers).
// Left action on column vectors; generator block [[2,-1],[1,0]] at (i,i+1).
struct BurauMatrix {
    int n = 1;
    long long m = 0;
    std::vector<Int> a;  // row-major n*n

    BurauMatrix() = default;
    BurauMatrix(int strands, long long modulus);

    static BurauMatrix identity(int n, long long m);

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

    BurauMatrix operator*(const BurauMatrix& rhs) const;
    bool operator==(const BurauMatrix&) const = default;
    bool is_identity() const;

    // mod-2 shadow; throws if it is not a permutation matrix
    std::vector<int> mod2_permutation() const;
};

BurauMatrix burau_mod(const BraidWord& w, long long m);
BurauMatrix burau_mod(const PureBraidWord& w, long long m);

// true iff burau_mod(w, m) is the identity
bool level_membership(const BraidWord& w, long long m);
bool level_membership(const PureBraidWord& w, long long m);

}  // namespace braid4
