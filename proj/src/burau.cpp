#include "braid4/burau.hpp"

namespace braid4 {

static Int reduce_mod(Int v, long long m) {
    if (m == 0) return v;
    v %= m;
    if (v < 0) v += m;
    return v;
}

BurauMatrix::BurauMatrix(int strands, long long modulus) : n(strands), m(modulus) {
    if (n < 1) throw braid_error("strand count must be >= 1");
    if (m < 0) throw braid_error("modulus must be >= 0");
    a.assign(static_cast<size_t>(n) * n, 0);
}

BurauMatrix BurauMatrix::identity(int n, long long m) {
    BurauMatrix out(n, m);
    for (int i = 0; i < n; ++i) out.at(i, i) = reduce_mod(1, m);
    return out;
}

BurauMatrix BurauMatrix::operator*(const BurauMatrix& rhs) const {
    if (n != rhs.n || m != rhs.m) throw braid_error("Burau matrix shape mismatch");
    BurauMatrix out(n, m);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (rhs.at(k, j) == 0) continue;
                out.at(i, j) += v * rhs.at(k, j);
            }
        }
    if (m)
        for (auto& x : out.a) x = reduce_mod(x, m);
    return out;
}

bool BurauMatrix::is_identity() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != reduce_mod(i == j ? 1 : 0, m)) return false;
    return true;
}

std::vector<int> BurauMatrix::mod2_permutation() const {
    std::vector<int> p(n, 0);
    std::vector<int> seen(n, 0);
    for (int j = 0; j < n; ++j) {
        int hit = -1;
        for (int i = 0; i < n; ++i) {
            if (at(i, j) % 2 != 0) {
                if (hit >= 0) throw braid_error("mod-2 shadow is not a permutation");
                hit = i;
            }
        }
        if (hit < 0 || seen[hit]) throw braid_error("mod-2 shadow is not a permutation");
        seen[hit] = 1;
        p[j] = hit + 1;  // column j maps e_j -> e_{p[j]}
    }
    return p;
}

static BurauMatrix letter_matrix(int n, long long m, const BraidLetter& l) {
    BurauMatrix out = BurauMatrix::identity(n, m);
    int i = l.index - 1;
    if (l.sign > 0) {
        // [[1-t, t],[1,0]] at t = -1
        out.at(i, i) = reduce_mod(2, m);
        out.at(i, i + 1) = reduce_mod(-1, m);
        out.at(i + 1, i) = reduce_mod(1, m);
        out.at(i + 1, i + 1) = 0;
    } else {
        out.at(i, i) = 0;
        out.at(i, i + 1) = reduce_mod(1, m);
        out.at(i + 1, i) = reduce_mod(-1, m);
        out.at(i + 1, i + 1) = reduce_mod(2, m);
    }
    return out;
}

BurauMatrix burau_mod(const BraidWord& w, long long m) {
    BurauMatrix acc = BurauMatrix::identity(w.n, m);
    for (const auto& l : w.letters) acc = acc * letter_matrix(w.n, m, l);
    return acc;
}

BurauMatrix burau_mod(const PureBraidWord& w, long long m) {
    return burau_mod(w.expand(), m);
}

bool level_membership(const BraidWord& w, long long m) {
    if (m < 1) throw braid_error("level must be >= 1");
    return burau_mod(w, m).is_identity();
}

bool level_membership(const PureBraidWord& w, long long m) {
    return level_membership(w.expand(), m);
}

}  // namespace braid4
