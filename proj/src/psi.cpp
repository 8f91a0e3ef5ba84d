#include "braid4/psi.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace braid4 {

LabelPair label_pair(Label a, Label b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

CoverIndex CoverIndex::pair(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    if (!(1 <= i && i < j && (j <= n || j == kInf))) throw braid_error("bad cover index");
    return {n, i, j};
}

std::vector<Label> CoverIndex::labels() const {
    std::vector<Label> out;
    for (int v = 1; v <= n; ++v) out.push_back({v, false});
    if (is_base()) return out;
    for (int v = 1; v <= n; ++v)
        if (v != i && v != j) out.push_back({v, true});
    return out;
}

std::string CoverIndex::str() const {
    if (is_base()) return "base";
    return "(" + std::to_string(i) + "," + (is_inf() ? "inf" : std::to_string(j)) + ")";
}

CoverIndex CoverIndex::parse(int n, const std::string& s) {
    if (s == "base") return base(n);
    int a = 0, b = 0;
    char buf[8] = {0};
    if (std::sscanf(s.c_str(), "(%d,%d)", &a, &b) == 2) return pair(n, a, b);
    if (std::sscanf(s.c_str(), "(%d,%3s", &a, buf) == 2 && std::string(buf).rfind("inf", 0) == 0)
        return inf(n, a);
    throw braid_error("bad cover: " + s);
}

PairVector& PairVector::add(const LabelPair& k, const Int& c) {
    if (c == 0) return *this;
    auto it = entries.find(k);
    if (it == entries.end()) {
        entries.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) entries.erase(it);
    }
    return *this;
}

PairVector& PairVector::add(const PairVector& o, const Int& scale) {
    for (const auto& [k, c] : o.entries) add(k, c * scale);
    return *this;
}

std::string PairVector::str() const {
    std::string out;
    for (const auto& [k, c] : entries) {
        if (!out.empty()) out += " ";
        out += "(" + k.first.str() + "," + k.second.str() + "):" + c.str();
    }
    return out.empty() ? "0" : out;
}

PairVector subset_symbol(const CoverIndex& c, const std::vector<Label>& A) {
    PairVector out{c, {}};
    std::vector<Label> s = A;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b) out.add(label_pair(s[a], s[b]), 1);
    return out;
}

PairVector delta_pattern(const CoverIndex& c, int a, int b) {
    PairVector out{c, {}};
    out.add(label_pair({a, false}, {b, false}), 1);
    out.add(label_pair({a, true}, {b, true}), 1);
    out.add(label_pair({a, false}, {b, true}), -1);
    out.add(label_pair({a, true}, {b, false}), -1);
    return out;
}

namespace {

// linked iff exactly one endpoint of {k,l} lies in the open interval (i,j),
// with inf greater than every integer
bool linked(int i, int j, int k, int l) {
    auto inside = [&](int x) { return i < x && x < j; };
    return inside(k) != inside(l);
}

}  // namespace

PairVector psi_square(const CoverIndex& c, IndexPair kl) {
    auto [k, l] = make_pair_sorted(kl.first, kl.second);
    if (c.is_base()) {
        PairVector out{c, {}};
        out.add(label_pair({k, false}, {l, false}), 2);
        return out;
    }
    int i = c.i, j = c.j;
    bool hk = (k == i || k == j), hl = (l == i || l == j);
    if (hk && hl) {
        // {i,j} = {k,l}: 2({k,l} u [n\k,l]') + 2([n\k,l]')
        std::vector<Label> big, small;
        big.push_back({k, false});
        big.push_back({l, false});
        for (int v = 1; v <= c.n; ++v)
            if (v != k && v != l) {
                big.push_back({v, true});
                small.push_back({v, true});
            }
        PairVector out = subset_symbol(c, big);
        for (auto& [key, val] : out.entries) val *= 2;
        PairVector sm = subset_symbol(c, small);
        out.add(sm, 2);
        return out;
    }
    if (hk) return subset_symbol(c, {{k, false}, {l, false}, {l, true}});
    if (hl) return subset_symbol(c, {{k, false}, {k, true}, {l, false}});
    PairVector out{c, {}};
    if (linked(i, j, k, l)) {
        out.add(label_pair({k, false}, {l, true}), 2);
        out.add(label_pair({k, true}, {l, false}), 2);
    } else {
        out.add(label_pair({k, false}, {l, false}), 2);
        out.add(label_pair({k, true}, {l, true}), 2);
    }
    return out;
}

std::optional<int> iota(const CoverIndex& c, IndexPair kl) {
    if (c.is_base()) return std::nullopt;
    auto [k, l] = make_pair_sorted(kl.first, kl.second);
    bool hk = (k == c.i || k == c.j), hl = (l == c.i || l == c.j);
    if (hk && !hl) return l;
    if (hl && !hk) return k;
    return std::nullopt;
}

PairVector apply_iota(std::optional<int> swap, const PairVector& v) {
    if (!swap) return v;
    PairVector out{v.cover, {}};
    auto m = [&](Label x) {
        if (x.v == *swap) x.primed = !x.primed;
        return x;
    };
    for (const auto& [k, c] : v.entries) out.add(label_pair(m(k.first), m(k.second)), c);
    return out;
}

PairVector psi_base(const H1Vector& v) {
    // conjugation dies in the abelianization: psi(u_K tau_t) = 2(t); scaled by
    // the rational coefficient, which must produce integer entries
    PairVector out{CoverIndex::base(v.n), {}};
    std::map<LabelPair, Rat> acc;
    for (const auto& [sym, c] : v.coeffs) {
        LabelPair key = label_pair({sym.target.first, false}, {sym.target.second, false});
        acc[key] += 2 * c;
    }
    for (const auto& [k, c] : acc) {
        if (c == 0) continue;
        if (denominator(c) != 1) throw braid_error("psi value not integral");
        out.add(k, numerator(c));
    }
    return out;
}

PairVector psi_base(const PureBraidWord& w) {
    PairVector out{CoverIndex::base(w.n), {}};
    for (const auto& f : w.letters)
        out.add(label_pair({f.i, false}, {f.j, false}), f.exp);
    return out;
}

PairVector psi_cover(const CoverIndex& c, const H1Vector& v) {
    std::map<LabelPair, Rat> acc;
    for (const auto& [sym, coeff] : v.coeffs) {
        PairVector pv = psi_square(c, sym.target);
        auto tw = sym.defining_twists();
        for (auto it = tw.rbegin(); it != tw.rend(); ++it) pv = apply_iota(iota(c, *it), pv);
        for (const auto& [k, x] : pv.entries) acc[k] += coeff * Rat(x);
    }
    PairVector out{c, {}};
    for (const auto& [k, x] : acc) {
        if (x == 0) continue;
        if (denominator(x) != 1) throw braid_error("psi value not integral");
        out.add(k, numerator(x));
    }
    return out;
}

PairVector psi_general_curve(const CoverIndex& c, const std::vector<int>& A,
                             const CurveSplit& split) {
    if (c.is_base()) {
        std::vector<Label> ls;
        for (int x : A) ls.push_back({x, false});
        PairVector out = subset_symbol(c, ls);
        for (auto& [k, v] : out.entries) v *= 2;
        return out;
    }
    std::vector<int> a = A;
    std::sort(a.begin(), a.end());
    auto inA = [&](int x) { return std::binary_search(a.begin(), a.end(), x); };
    int hits = (inA(c.i) ? 1 : 0) + (!c.is_inf() && inA(c.j) ? 1 : 0);
    auto is_partition = [&](const std::vector<int>& u, const std::vector<int>& w,
                            const std::vector<int>& of) {
        std::vector<int> all = u;
        all.insert(all.end(), w.begin(), w.end());
        std::sort(all.begin(), all.end());
        return all == of;
    };

    if (hits == 1) {
        if (!split.first.empty() || !split.second.empty())
            throw case_mismatch("singleton-intersection case takes no split");
        int inside = inA(c.i) ? c.i : c.j;
        std::vector<Label> ls;
        for (int x : a) {
            ls.push_back({x, false});
            if (x != inside) ls.push_back({x, true});
        }
        return subset_symbol(c, ls);
    }
    if (hits == 0) {
        if (!is_partition(split.first, split.second, a))
            throw case_mismatch("expected a partition (A1,A2) of A");
        std::vector<Label> u, w;
        for (int x : split.first) {
            u.push_back({x, false});
            w.push_back({x, true});
        }
        for (int x : split.second) {
            u.push_back({x, true});
            w.push_back({x, false});
        }
        PairVector out = subset_symbol(c, u);
        for (auto& [k, v] : out.entries) v *= 2;
        out.add(subset_symbol(c, w), 2);
        return out;
    }
    // {i,j} subset A (never for (i,inf)-covers)
    if (c.is_inf()) throw case_mismatch("(i,inf)-cover cannot enclose infinity");
    std::vector<int> comp;
    for (int x = 1; x <= c.n; ++x)
        if (!inA(x)) comp.push_back(x);
    if (!is_partition(split.first, split.second, comp))
        throw case_mismatch("expected a partition (B,C) of [n] \\ A");
    std::vector<Label> big, small;
    for (int x : a) {
        big.push_back({x, false});
        if (x != c.i && x != c.j) big.push_back({x, true});
    }
    for (int x : split.second) {  // C
        big.push_back({x, false});
        small.push_back({x, false});
    }
    for (int x : split.first) {  // B'
        big.push_back({x, true});
        small.push_back({x, true});
    }
    PairVector out = subset_symbol(c, big);
    for (auto& [k, v] : out.entries) v *= 2;
    out.add(subset_symbol(c, small), 2);
    return out;
}

IndependenceReport independence_certificate(int n) {
    if (n < 2) throw braid_error("independence certificate needs n >= 2");
    auto bas = enumerate_basis(n);
    // all subsets of sizes 2..4, all covers of the small disk
    std::vector<std::vector<int>> subsets;
    std::vector<int> idx(n);
    for (int m = 2; m <= std::min(4, n); ++m) {
        std::vector<int> sel(m);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == m) {
                subsets.push_back(sel);
                return;
            }
            for (int x = start; x <= n; ++x) {
                sel[depth] = x;
                rec(x + 1, depth + 1);
            }
        };
        rec(1, 0);
    }
    std::vector<QVec> columns(bas.size());
    for (auto& col : columns) col.reserve(256);
    for (const auto& A : subsets) {
        int m = static_cast<int>(A.size());
        std::vector<CoverIndex> covers = {CoverIndex::base(m)};
        for (int i = 1; i <= m; ++i) covers.push_back(CoverIndex::inf(m, i));
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) covers.push_back(CoverIndex::pair(m, i, j));
        for (size_t bi = 0; bi < bas.size(); ++bi) {
            H1Vector e(n);
            e.add(bas[bi], 1);
            H1Vector f = forgetful(e, A);
            for (const auto& c : covers) {
                PairVector pv = c.is_base() ? psi_base(f) : psi_cover(c, f);
                auto ls = c.labels();
                for (size_t x = 0; x < ls.size(); ++x)
                    for (size_t y = x + 1; y < ls.size(); ++y) {
                        auto it = pv.entries.find(label_pair(ls[x], ls[y]));
                        columns[bi].push_back(it == pv.entries.end() ? Rat(0) : Rat(it->second));
                    }
            }
        }
    }
    size_t nrows = columns.empty() ? 0 : columns[0].size();
    RowSpan span(nrows);
    for (const auto& col : columns) span.insert(col);
    return {span.rank(), dim_h1(n)};
}

}  // namespace braid4
