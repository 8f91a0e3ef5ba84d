#include "braid4/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "braid4/burau.hpp"

namespace braid4 {

static void check_index(int n, int i) {
    if (i < 1 || i >= n)
        throw braid_error("generator index " + std::to_string(i) +
                          " out of range for n=" + std::to_string(n));
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> ls)
    : n(strands), letters(std::move(ls)) {
    if (n < 1) throw braid_error("strand count must be >= 1");
    for (const auto& l : letters) {
        check_index(n, l.index);
        if (l.sign != 1 && l.sign != -1) throw braid_error("letter sign must be +-1");
    }
}

BraidWord BraidWord::inverse() const {
    std::vector<BraidLetter> out;
    out.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.push_back({it->index, -it->sign});
    return BraidWord(n, std::move(out));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    if (n != rhs.n) throw braid_error("strand count mismatch");
    std::vector<BraidLetter> out = letters;
    out.insert(out.end(), rhs.letters.begin(), rhs.letters.end());
    return BraidWord(n, std::move(out));
}

std::string BraidWord::str() const {
    std::string out;
    for (const auto& l : letters) {
        if (!out.empty()) out += ' ';
        out += (l.sign > 0 ? 's' : 'S');
        out += std::to_string(l.index);
    }
    return out;
}

BraidWord BraidWord::parse(int n, const std::string& s) {
    std::vector<BraidLetter> ls;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
            throw braid_error("bad braid letter: " + tok);
        int idx = std::stoi(tok.substr(1));
        ls.push_back({idx, tok[0] == 's' ? 1 : -1});
    }
    return BraidWord(n, std::move(ls));
}

PureBraidWord::PureBraidWord(int strands, std::vector<PureFactor> ls)
    : n(strands), letters(std::move(ls)) {
    for (const auto& f : letters) {
        if (!(1 <= f.i && f.i < f.j && f.j <= n))
            throw braid_error("bad Artin generator indices");
    }
}

BraidWord PureBraidWord::expand() const {
    std::vector<BraidLetter> out;
    for (const auto& f : letters) {
        if (f.exp == 0) continue;
        for (int k = f.j - 1; k > f.i; --k) out.push_back({k, 1});
        int s = f.exp > 0 ? 1 : -1;
        for (long long t = 0; t < 2 * std::abs(f.exp); ++t) out.push_back({f.i, s});
        for (int k = f.i + 1; k <= f.j - 1; ++k) out.push_back({k, -1});
    }
    return BraidWord(n, std::move(out));
}

PureBraidWord PureBraidWord::inverse() const {
    std::vector<PureFactor> out;
    out.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.push_back({it->i, it->j, -it->exp});
    return PureBraidWord(n, std::move(out));
}

PureBraidWord PureBraidWord::operator*(const PureBraidWord& rhs) const {
    if (n != rhs.n) throw braid_error("strand count mismatch");
    std::vector<PureFactor> out = letters;
    out.insert(out.end(), rhs.letters.begin(), rhs.letters.end());
    return PureBraidWord(n, std::move(out));
}

std::string PureBraidWord::str() const {
    std::string out;
    for (const auto& f : letters) {
        if (!out.empty()) out += ' ';
        out += "A(" + std::to_string(f.i) + "," + std::to_string(f.j) + ")";
        if (f.exp != 1) out += "^" + std::to_string(f.exp);
    }
    return out;
}

PureBraidWord PureBraidWord::parse(int n, const std::string& s) {
    std::vector<PureFactor> ls;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        int i, j;
        long long e = 1;
        char caret;
        if (std::sscanf(tok.c_str(), "A(%d,%d)%c%lld", &i, &j, &caret, &e) >= 2) {
            if (tok.find('^') == std::string::npos) e = 1;
            ls.push_back({i, j, e});
        } else {
            throw braid_error("bad pure braid factor: " + tok);
        }
    }
    return PureBraidWord(n, std::move(ls));
}

std::vector<int> permutation_of(const BraidWord& w) {
    // pos[label] = current position; apply rightmost letter first
    std::vector<int> pos(w.n + 1);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<int> at(w.n + 1);  // at[position] = label
    std::iota(at.begin(), at.end(), 0);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        int k = it->index;
        int a = at[k], b = at[k + 1];
        std::swap(at[k], at[k + 1]);
        std::swap(pos[a], pos[b]);
    }
    return std::vector<int>(pos.begin() + 1, pos.end());
}

bool is_pure(const BraidWord& w) {
    auto p = permutation_of(w);
    for (int j = 1; j <= w.n; ++j)
        if (p[j - 1] != j) return false;
    return true;
}

std::map<IndexPair, Rat> windings(const BraidWord& w) {
    std::map<IndexPair, Rat> xi;
    std::vector<int> at(w.n + 1);
    std::iota(at.begin(), at.end(), 0);
    const Rat half(1, 2);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        int k = it->index;
        int a = at[k], b = at[k + 1];
        xi[make_pair_sorted(a, b)] += it->sign > 0 ? half : -half;
        std::swap(at[k], at[k + 1]);
    }
    return xi;
}

Rat winding(const BraidWord& w, int i, int j) {
    if (i == j) throw braid_error("winding requires distinct strands");
    auto xi = windings(w);
    auto it = xi.find(make_pair_sorted(i, j));
    return it == xi.end() ? Rat(0) : it->second;
}

static bool stabilizes_Ik(const BraidWord& w, int k) {
    auto p = permutation_of(w);
    auto img = [&](int a) { return p[a - 1]; };
    if (k == 3) {
        // preserves {1,2} and {3}
        bool two = (img(1) == 1 && img(2) == 2) || (img(1) == 2 && img(2) == 1);
        return two && img(3) == 3;
    }
    // k == 4: preserves the pair of sets {{1,2},{3,4}}
    auto setof = [&](int a, int b) {
        int x = img(a), y = img(b);
        return make_pair_sorted(x, y);
    };
    IndexPair s12 = setof(1, 2), s34 = setof(3, 4);
    bool keep = s12 == IndexPair{1, 2} && s34 == IndexPair{3, 4};
    bool swap = s12 == IndexPair{3, 4} && s34 == IndexPair{1, 2};
    return keep || swap;
}

long long omega_k(const BraidWord& w, int k) {
    if (k != 3 && k != 4) throw braid_error("omega_k needs k in {3,4}");
    if (w.n < k) throw braid_error("omega_k needs n >= k");
    if (!stabilizes_Ik(w, k))
        throw not_in_stabilizer("word does not stabilize I_" + std::to_string(k));
    auto xi = windings(w);
    auto get = [&](int a, int b) {
        auto it = xi.find({a, b});
        return it == xi.end() ? Rat(0) : it->second;
    };
    Rat v = get(1, 3) + get(2, 3);
    if (k == 4) v += get(1, 4) + get(2, 4);
    if (denominator(v) != 1) throw braid_error("omega_k not integral (internal)");
    return static_cast<long long>(numerator(v));
}

int rho_k(const BraidWord& w, int k) {
    return omega_k(w, k) % 2 == 0 ? 1 : -1;
}

BraidWord forget_strands(const BraidWord& w, const std::vector<int>& keep) {
    std::vector<bool> kept(w.n + 1, false);
    for (int x : keep) {
        if (x < 1 || x > w.n) throw braid_error("forget_strands: label out of range");
        kept[x] = true;
    }
    std::vector<int> at(w.n + 1);
    std::iota(at.begin(), at.end(), 0);
    std::vector<BraidLetter> out;  // built rightmost-first, reversed at the end
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        int k = it->index;
        int a = at[k], b = at[k + 1];
        if (kept[a] && kept[b]) {
            int pos = 0;
            for (int q = 1; q <= k; ++q)
                if (kept[at[q]]) ++pos;
            out.push_back({pos, it->sign});
        }
        std::swap(at[k], at[k + 1]);
    }
    std::reverse(out.begin(), out.end());
    return BraidWord(static_cast<int>(keep.size()), std::move(out));
}

ConjResult conj_artin(int k, int s, int i, int j) {
    if (i >= j) throw braid_error("conj_artin: need i < j");
    if (s != 1 && s != -1) throw braid_error("conj_artin: sign must be +-1");
    int kk = k + 1;
    bool hits_k = (i == k || j == k), hits_kk = (i == kk || j == kk);
    if ((!hits_k && !hits_kk) || (i == k && j == kk)) return {std::nullopt, {i, j}};
    if (s == 1) {
        if (j == k) return {std::nullopt, {i, kk}};
        if (j == kk && i < k) return {PureFactor{k, kk, 1}, {i, k}};
        if (i == k) return {std::nullopt, make_pair_sorted(kk, j)};
        return {PureFactor{k, kk, 1}, {k, j}};  // i == kk
    }
    if (j == k) return {PureFactor{k, kk, -1}, {i, kk}};
    if (j == kk && i < k) return {std::nullopt, {i, k}};
    if (i == k) return {PureFactor{k, kk, -1}, make_pair_sorted(kk, j)};
    return {std::nullopt, {k, j}};  // i == kk
}

PureBraidWord conj_pure(int k, int s, const PureBraidWord& w) {
    check_index(w.n, k);
    std::vector<PureFactor> out;
    for (const auto& f : w.letters) {
        auto [pre, tgt] = conj_artin(k, s, f.i, f.j);
        if (pre) out.push_back(*pre);
        out.push_back({tgt.first, tgt.second, f.exp});
        if (pre) out.push_back({pre->i, pre->j, -pre->exp});
    }
    PureBraidWord result(w.n, std::move(out));
    // convention safety net: verify sigma_k^s w sigma_k^{-s} == result mod 4
    BraidWord lhs = BraidWord(w.n, {{k, s}}) * w.expand() * BraidWord(w.n, {{k, -s}});
    if (!(burau_mod(lhs, 4) == burau_mod(result, 4)))
        throw braid_error("conj_pure: mod-4 Burau verification failed (internal)");
    return result;
}

}  // namespace braid4
