#include "braid4/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "braid4/burau.hpp"
#include "braid4/zn.hpp"

namespace braid4 {

FreeWord free_reduce(const FreeWord& w) {
    FreeWord out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

static FreeWord apply_letter(int n, int idx, int sign, const FreeWord& w) {
    (void)n;
    FreeWord out;
    auto emit = [&](std::initializer_list<int> xs, bool invert) {
        if (!invert) {
            out.insert(out.end(), xs);
        } else {
            for (auto it = std::rbegin(xs); it != std::rend(xs); ++it) out.push_back(-*it);
        }
    };
    for (int x : w) {
        int g = std::abs(x);
        bool inv = x < 0;
        if (sign == 1) {
            if (g == idx) emit({idx, idx + 1, -idx}, inv);
            else if (g == idx + 1) emit({idx}, inv);
            else emit({g}, inv);
        } else {
            if (g == idx) emit({idx + 1}, inv);
            else if (g == idx + 1) emit({-(idx + 1), idx, idx + 1}, inv);
            else emit({g}, inv);
        }
    }
    return free_reduce(out);
}

FreeWord artin_image(const BraidWord& w, int generator) {
    FreeWord cur = {generator};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        cur = apply_letter(w.n, it->index, it->sign, cur);
    return cur;
}

bool artin_trivial(const BraidWord& w) {
    for (int g = 1; g <= w.n; ++g)
        if (artin_image(w, g) != FreeWord{g}) return false;
    return true;
}

std::string Presentation::str() const {
    std::string out;
    for (const auto& g : gen_names) out += "gen " + g + "\n";
    for (const auto& r : relators) {
        out += "rel";
        for (auto [g, e] : r) {
            std::string name = gen_names[g];
            if (e < 0)
                for (auto& ch : name) ch = static_cast<char>(std::toupper(ch));
            out += " " + name;
        }
        out += "\n";
    }
    return out;
}

Presentation Presentation::parse(const std::string& text) {
    Presentation p;
    std::map<std::string, int> by_name;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "gen") {
            std::string name;
            ls >> name;
            by_name[name] = static_cast<int>(p.gen_names.size());
            p.gen_names.push_back(name);
        } else if (kw == "rel") {
            std::vector<std::pair<int, int>> rel;
            std::string tok;
            while (ls >> tok) {
                std::string lower = tok;
                bool inv = false;
                for (auto& ch : lower)
                    if (std::isupper(static_cast<unsigned char>(ch))) {
                        ch = static_cast<char>(std::tolower(ch));
                        inv = true;
                    }
                auto it = by_name.find(lower);
                if (it == by_name.end()) throw braid_error("unknown generator " + tok);
                rel.emplace_back(it->second, inv ? -1 : 1);
            }
            p.relators.push_back(std::move(rel));
        } else {
            throw braid_error("bad presentation line: " + line);
        }
    }
    return p;
}

std::vector<PureFactor> pb_conj_word(int r, int s, int i, int j) {
    if (r > s) std::swap(r, s);
    if (i > j) std::swap(i, j);
    bool share = (r == i || r == j || s == i || s == j);
    if (!share) {
        int inside = (r < i && i < s) + (r < j && j < s);
        if (inside != 1) return {};  // separated or nested: they commute
        if (r < i && i < s && s < j)  // r < i < s < j
            return {{r, i, -1}, {i, s, -1}, {r, i, 1}, {i, s, 1}};
        // i < r < j < s
        return {{i, s, -1}, {i, r, -1}, {i, s, 1}, {i, r, 1}};
    }
    if (std::make_pair(r, s) == std::make_pair(i, j)) return {};
    if (s == i) return {{i, j, -1}, {r, j, -1}};
    if (r == j) return {{i, s, -1}};
    if (r == i && s < j) return {{s, j, -1}};
    if (r == i && j < s) return {{i, j, -1}, {j, s, -1}};
    if (s == j && r < i) return {{r, i, -1}};
    return {{i, j, -1}, {i, r, -1}};  // s == j, i < r
}

Presentation pb_presentation(int n) {
    if (n > 5) throw bound_exceeded("pb_presentation supports n <= 5");
    Presentation p;
    std::vector<IndexPair> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            gens.push_back({i, j});
            p.gen_names.push_back("a" + std::to_string(i) + std::to_string(j));
        }
    auto gen_id = [&](int i, int j) {
        return static_cast<int>(std::lower_bound(gens.begin(), gens.end(),
                                                 make_pair_sorted(i, j)) -
                                gens.begin());
    };
    for (auto [r, s] : gens)
        for (auto [i, j] : gens) {
            if (std::make_pair(r, s) == std::make_pair(i, j)) continue;
            auto C = pb_conj_word(r, s, i, j);
            // relator: A_rs A_ij A_rs^-1 (C A_ij C^-1)^-1
            std::vector<std::pair<int, int>> rel = {
                {gen_id(r, s), 1}, {gen_id(i, j), 1}, {gen_id(r, s), -1}};
            for (const auto& f : C) rel.emplace_back(gen_id(f.i, f.j), f.exp > 0 ? 1 : -1);
            rel.emplace_back(gen_id(i, j), -1);
            for (auto it = C.rbegin(); it != C.rend(); ++it)
                rel.emplace_back(gen_id(it->i, it->j), it->exp > 0 ? -1 : 1);
            p.relators.push_back(std::move(rel));
        }
    // validate every relator: exactly (Artin action on F_n) and mod 4 / mod 8
    for (const auto& rel : p.relators) {
        std::vector<PureFactor> pf;
        for (auto [g, e] : rel) pf.push_back({gens[g].first, gens[g].second, e});
        BraidWord w = PureBraidWord(n, pf).expand();
        if (!artin_trivial(w)) throw braid_error("presentation relator fails Artin action");
        if (!burau_mod(w, 4).is_identity() || !burau_mod(w, 8).is_identity())
            throw braid_error("presentation relator fails Burau check");
    }
    return p;
}

bool AbelianizationResult::odd_torsion_free() const {
    for (const auto& d : divisors) {
        Int v = d;
        while (v % 2 == 0) v /= 2;
        if (v != 1) return false;
    }
    return true;
}

AbelianizationResult abelianization(const Presentation& p, bool with_snf) {
    size_t g = p.gen_names.size();
    std::vector<std::vector<Int>> rows;
    for (const auto& rel : p.relators) {
        std::vector<Int> row(g, 0);
        for (auto [gi, e] : rel) row[gi] += e;
        if (std::any_of(row.begin(), row.end(), [](const Int& x) { return x != 0; }))
            rows.push_back(std::move(row));
    }
    AbelianizationResult out;
    out.generators = g;
    size_t rk = rows.empty() ? 0 : int_rank(rows);
    out.free_rank = g - rk;
    if (with_snf && !rows.empty()) {
        out.divisors = smith_divisors(std::move(rows));
        out.snf_computed = true;
    } else if (with_snf) {
        out.snf_computed = true;
    }
    return out;
}

SubgroupOracle::SubgroupOracle(int n_, bool allow_n5) : n(n_) {
    if (n > (allow_n5 ? 5 : 4))
        throw bound_exceeded("subgroup oracle bound exceeded (n=" + std::to_string(n) + ")");
    base_ = pb_presentation(n);
    npairs_ = n * (n - 1) / 2;
    size_t idx = size_t(1) << npairs_;
    schreier_index_.assign(idx, std::vector<int>(npairs_, -1));
    for (uint32_t t = 0; t < idx; ++t)
        for (int g = 0; g < npairs_; ++g) {
            // tree edge: bit g unset and g above every set bit of t
            bool tree = !(t >> g & 1) && (t >> (g + 1)) == 0;
            if (tree) continue;
            schreier_index_[t][g] = static_cast<int>(schreier_.size());
            schreier_.emplace_back(t, g);
        }
    for (uint32_t t = 0; t < idx; ++t)
        for (const auto& rel : base_.relators) {
            uint32_t end = t;
            auto w = rewrite(rel, t, &end);
            if (end != t) throw braid_error("relator does not fix coset (internal)");
            if (!w.empty()) sub_relators_.push_back(std::move(w));
        }
}

std::vector<std::pair<int, int>> SubgroupOracle::rewrite(
    const std::vector<std::pair<int, int>>& word, uint32_t start, uint32_t* end) const {
    std::vector<std::pair<int, int>> out;
    uint32_t t = start;
    for (auto [g, e] : word) {
        if (e == 1) {
            int k = schreier_index_[t][g];
            if (k >= 0) out.emplace_back(k, 1);
            t ^= 1u << g;
        } else {
            t ^= 1u << g;
            int k = schreier_index_[t][g];
            if (k >= 0) out.emplace_back(k, -1);
        }
    }
    if (end) *end = t;
    return out;
}

Presentation SubgroupOracle::subgroup_presentation() const {
    Presentation p;
    for (const auto& [t, g] : schreier_) {
        std::string name = "x" + std::to_string(t) + "_" + base_.gen_names[g];
        p.gen_names.push_back(name);
    }
    p.relators = sub_relators_;
    return p;
}

AbelianizationResult SubgroupOracle::abelianization(bool with_snf) const {
    return braid4::abelianization(subgroup_presentation(), with_snf);
}

void SubgroupOracle::ensure_reduced() const {
    if (reduced_) return;
    RowSpan span(schreier_.size());
    for (const auto& rel : sub_relators_) {
        QVec row(schreier_.size(), Rat(0));
        for (auto [g, e] : rel) row[g] += e;
        span.insert(std::move(row));
    }
    rref_rows_ = span.rows();
    rref_pivots_.assign(span.pivots().begin(), span.pivots().end());
    std::vector<char> is_piv(schreier_.size(), 0);
    for (size_t p : rref_pivots_) is_piv[p] = 1;
    for (size_t c = 0; c < schreier_.size(); ++c)
        if (!is_piv[c]) free_cols_.push_back(c);
    reduced_ = true;
}

size_t SubgroupOracle::rank() const {
    ensure_reduced();
    return free_cols_.size();
}

QVec SubgroupOracle::oracle_class(const PureBraidWord& w) const {
    if (w.n != n) throw braid_error("oracle: strand count mismatch");
    ensure_reduced();
    std::vector<std::pair<int, int>> letters;
    for (const auto& f : w.letters) {
        int g = pair_index(n, f.i, f.j);
        int s = f.exp > 0 ? 1 : -1;
        for (long long r = 0; r < std::abs(f.exp); ++r) letters.emplace_back(g, s);
    }
    uint32_t end = 0;
    auto sw = rewrite(letters, 0, &end);
    if (end != 0) throw not_in_subgroup("word is not in B_n[4]");
    QVec v(schreier_.size(), Rat(0));
    for (auto [g, e] : sw) v[g] += e;
    for (size_t r = 0; r < rref_rows_.size(); ++r) {
        const Rat& c = v[rref_pivots_[r]];
        if (c != 0) {
            Rat f = c;
            for (size_t j = 0; j < v.size(); ++j)
                if (rref_rows_[r][j] != 0) v[j] -= f * rref_rows_[r][j];
        }
    }
    QVec out(free_cols_.size());
    for (size_t i = 0; i < free_cols_.size(); ++i) out[i] = v[free_cols_[i]];
    return out;
}

QVec SubgroupOracle::class_of_combination(const Combination& c) const {
    QVec acc(rank(), Rat(0));
    for (const auto& [coeff, word] : c) {
        QVec v = oracle_class(word);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += coeff * v[i];
    }
    return acc;
}

bool SubgroupOracle::relation_check(const Combination& lhs, const Combination& rhs) const {
    return class_of_combination(lhs) == class_of_combination(rhs);
}

}  // namespace braid4
