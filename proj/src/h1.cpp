#include "braid4/h1.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstring>
#include <functional>
#include <sstream>

namespace braid4 {

BasisSymbol::BasisSymbol(IndexPair t, std::vector<int> ex)
    : target(t), extras(std::move(ex)) {
    if (target.first >= target.second || target.first < 1)
        throw braid_error("bad basis symbol target");
    std::sort(extras.begin(), extras.end());
    if (extras.size() > 2) throw braid_error("basis symbol has at most 2 extras");
    for (int r : extras)
        if (r == target.first || r == target.second)
            throw braid_error("extra index meets target");
    if (extras.size() == 2) {
        int mn = std::min(target.first, extras[0]);
        if (mn != target.first)
            throw braid_error("two-extra symbol must have the minimum in its target");
    }
}

std::vector<int> BasisSymbol::support() const {
    std::vector<int> s = {target.first, target.second};
    s.insert(s.end(), extras.begin(), extras.end());
    std::sort(s.begin(), s.end());
    return s;
}

static int variant_of(const BasisSymbol& b) {
    auto s = b.support();
    if (b.kind() == 1) return 0;
    if (b.kind() == 2) {
        // targets {s0,s1}, {s0,s2}, {s1,s2} are variants 0,1,2
        if (b.target == IndexPair{s[0], s[1]}) return 0;
        if (b.target == IndexPair{s[0], s[2]}) return 1;
        return 2;
    }
    // kind 3: target is {s0, s[v+1]}
    if (b.target.second == s[1]) return 0;
    if (b.target.second == s[2]) return 1;
    return 2;
}

std::vector<IndexPair> BasisSymbol::defining_twists() const {
    auto s = support();
    if (kind() == 1) return {};
    if (kind() == 2) {
        // triple i<j<k: T(i,k)*t(i,j), T(j,k)*t(i,k), T(i,j)*t(j,k)
        switch (variant_of(*this)) {
            case 0: return {{s[0], s[2]}};
            case 1: return {{s[1], s[2]}};
            default: return {{s[0], s[1]}};
        }
    }
    // quadruple i<j<k<l: T(i,l)T(j,k)*t(i,j), T(i,j)T(k,l)*t(i,k), T(i,k)T(j,l)*t(i,l)
    switch (variant_of(*this)) {
        case 0: return {{s[0], s[3]}, {s[1], s[2]}};
        case 1: return {{s[0], s[1]}, {s[2], s[3]}};
        default: return {{s[0], s[2]}, {s[1], s[3]}};
    }
}

PureBraidWord BasisSymbol::defining_word(int n) const {
    std::vector<PureFactor> ls;
    auto tw = defining_twists();
    for (auto [a, b] : tw) ls.push_back({a, b, 1});
    ls.push_back({target.first, target.second, 2});
    for (auto it = tw.rbegin(); it != tw.rend(); ++it) ls.push_back({it->first, it->second, -1});
    return PureBraidWord(n, std::move(ls));
}

std::string BasisSymbol::str() const {
    std::string out;
    for (auto [a, b] : defining_twists())
        out += "T(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (!out.empty()) out += "*";
    out += "t(" + std::to_string(target.first) + "," + std::to_string(target.second) + ")";
    return out;
}

bool BasisSymbol::operator<(const BasisSymbol& o) const {
    if (kind() != o.kind()) return kind() < o.kind();
    auto a = support(), b = o.support();
    if (a != b) return a < b;
    return variant_of(*this) < variant_of(o);
}

Int dim_h1(int n) { return 3 * binom(n, 4) + 3 * binom(n, 3) + binom(n, 2); }

std::vector<BasisSymbol> enumerate_basis(int n) {
    std::vector<BasisSymbol> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(BasisSymbol::s1(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                out.push_back(BasisSymbol({i, j}, {k}));
                out.push_back(BasisSymbol({i, k}, {j}));
                out.push_back(BasisSymbol({j, k}, {i}));
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    out.push_back(BasisSymbol({i, j}, {k, l}));
                    out.push_back(BasisSymbol({i, k}, {j, l}));
                    out.push_back(BasisSymbol({i, l}, {j, k}));
                }
    std::sort(out.begin(), out.end());
    return out;
}

H1Vector& H1Vector::add(const BasisSymbol& s, const Rat& c) {
    if (c == 0) return *this;
    auto it = coeffs.find(s);
    if (it == coeffs.end()) {
        coeffs.emplace(s, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
    return *this;
}

H1Vector& H1Vector::add(const H1Vector& o, const Rat& scale) {
    for (const auto& [s, c] : o.coeffs) add(s, c * scale);
    return *this;
}

H1Vector H1Vector::operator*(const Rat& c) const {
    H1Vector out(n);
    if (c != 0)
        for (const auto& [s, v] : coeffs) out.coeffs.emplace(s, v * c);
    return out;
}

QVec H1Vector::coords() const {
    auto bas = enumerate_basis(n);
    QVec out(bas.size(), Rat(0));
    // both coeffs and bas are in canonical order: merge walk
    auto it = coeffs.begin();
    for (size_t i = 0; i < bas.size() && it != coeffs.end(); ++i) {
        if (bas[i] == it->first) {
            out[i] = it->second;
            ++it;
        }
    }
    if (it != coeffs.end()) throw braid_error("H1Vector symbol outside basis for n");
    return out;
}

H1Vector H1Vector::from_coords(int n, const QVec& v) {
    auto bas = enumerate_basis(n);
    if (v.size() != bas.size()) throw braid_error("coordinate length mismatch");
    H1Vector out(n);
    for (size_t i = 0; i < bas.size(); ++i)
        if (v[i] != 0) out.coeffs.emplace(bas[i], v[i]);
    return out;
}

std::string H1Vector::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : coeffs) {
        if (!out.empty()) out += " + ";
        out += rat_str(c) + "*" + s.str();
    }
    return out;
}

// ---------------------------------------------------------------------------
// the rewriting engine, in the difference basis
//   monomial (t, K): prod_{r in K} (1 - u_r) tau_t  with u_r = T_{t1,r} = T_{t2,r}
// ---------------------------------------------------------------------------

namespace {

struct DMono {
    IndexPair t;
    std::vector<int> K;  // sorted
    bool operator<(const DMono& o) const { return std::tie(t, K) < std::tie(o.t, o.K); }
};

using DVec = std::map<DMono, Rat>;

void dadd(DVec& v, const DMono& m, const Rat& c) {
    if (c == 0) return;
    auto it = v.find(m);
    if (it == v.end()) {
        v.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

// sign of the pair-swap identity for the partition {t, K} of a 4-element set: -1 exactly when
// the minimum's partner inside its own part is the third smallest element
int key_sign(IndexPair t, IndexPair k) {
    std::vector<int> all = {t.first, t.second, k.first, k.second};
    std::sort(all.begin(), all.end());
    IndexPair part = (t.first == all[0] || t.second == all[0]) ? t : k;
    int partner = (part.first == all[0]) ? part.second : part.first;
    return partner == all[2] ? -1 : 1;
}

// canonicalize c * (1-u_K) tau_t into out; degree >= 3 vanishes (peeling one
// factor and swapping the remaining two across the complementary pair cancels
// the terms), degree 2 is swapped to put the minimum in the target
void dmono_canon(IndexPair t, std::vector<int> K, Rat c, DVec& out) {
    if (K.size() >= 3) return;
    if (K.size() == 2) {
        IndexPair kp{K[0], K[1]};
        int mn = std::min({t.first, t.second, kp.first, kp.second});
        if (mn != t.first) {
            c *= key_sign(t, kp);
            std::swap(t, kp);
            K = {kp.first, kp.second};
        }
    }
    dadd(out, DMono{t, std::move(K)}, c);
}

// action of the twist T_ab on a difference vector
DVec act_twist_d(IndexPair ab, const DVec& v) {
    DVec out;
    for (const auto& [m, c] : v) {
        int hits = (ab.first == m.t.first || ab.first == m.t.second) +
                   (ab.second == m.t.first || ab.second == m.t.second);
        if (hits != 1) {  // disjoint or equal: trivial action
            dadd(out, m, c);
            continue;
        }
        int r = (ab.first == m.t.first || ab.first == m.t.second) ? ab.second : ab.first;
        if (std::binary_search(m.K.begin(), m.K.end(), r)) {
            dadd(out, m, -c);  // u_r (1-u_r) = -(1-u_r)
        } else {
            dmono_canon(m.t, m.K, c, out);  // u_r = 1 - (1-u_r)
            auto K2 = m.K;
            K2.insert(std::lower_bound(K2.begin(), K2.end(), r), r);
            dmono_canon(m.t, std::move(K2), -c, out);
        }
    }
    return out;
}

void dvec_axpy(DVec& v, const DVec& w, const Rat& s) {
    for (const auto& [m, c] : w) dadd(v, m, c * s);
}

// S-symbol u_K tau_t  <->  difference monomials
DVec svec_to_dvec(const H1Vector& v) {
    DVec out;
    for (const auto& [sym, c] : v.coeffs) {
        size_t k = sym.extras.size();
        for (size_t sel = 0; sel < (1u << k); ++sel) {
            std::vector<int> K;
            int sgn = 1;
            for (size_t p = 0; p < k; ++p)
                if (sel >> p & 1) {
                    K.push_back(sym.extras[p]);
                    sgn = -sgn;
                }
            dmono_canon(sym.target, std::move(K), c * sgn, out);
        }
    }
    return out;
}

H1Vector dvec_to_svec(int n, const DVec& v) {
    H1Vector out(n);
    for (const auto& [m, c] : v) {
        size_t k = m.K.size();
        for (size_t sel = 0; sel < (1u << k); ++sel) {
            std::vector<int> ex;
            int sgn = 1;
            for (size_t p = 0; p < k; ++p)
                if (sel >> p & 1) {
                    ex.push_back(m.K[p]);
                    sgn = -sgn;
                }
            out.add(BasisSymbol(m.t, std::move(ex)), c * sgn);
        }
    }
    return out;
}

// class of (prod over `bits` of twists) tau_t as a difference vector
DVec act_bits_on_tau(int n, uint32_t bits, IndexPair t) {
    DVec v;
    v.emplace(DMono{t, {}}, Rat(1));
    for (int idx = 0; bits; ++idx, bits >>= 1)
        if (bits & 1) v = act_twist_d(pair_from_index(n, idx), v);
    return v;
}

}  // namespace

H1Vector reduce(const ModuleExpression& e) {
    DVec total;
    for (const auto& term : e.terms) {
        DVec v;
        v.emplace(DMono{term.target, {}}, Rat(1));
        for (auto it = term.prefix.rbegin(); it != term.prefix.rend(); ++it) {
            DVec tv = act_twist_d(it->ab, v);
            switch (it->kind) {
                case ExprFactor::Twist:
                    v = std::move(tv);
                    break;
                case ExprFactor::OneMinus: {
                    DVec nv = v;
                    dvec_axpy(nv, tv, Rat(-1));
                    v = std::move(nv);
                    break;
                }
                case ExprFactor::OnePlus: {
                    DVec nv = v;
                    dvec_axpy(nv, tv, Rat(1));
                    v = std::move(nv);
                    break;
                }
            }
        }
        dvec_axpy(total, v, term.coeff);
    }
    return dvec_to_svec(e.n, total);
}

H1Vector act_twist(IndexPair ab, const H1Vector& v) {
    return dvec_to_svec(v.n, act_twist_d(make_pair_sorted(ab.first, ab.second), svec_to_dvec(v)));
}

H1Vector act_sigma(int k, int sign, const H1Vector& v) {
    int n = v.n;
    DVec out;
    for (const auto& [sym, c] : v.coeffs) {
        uint32_t bits = 0;
        for (auto [a, b] : sym.defining_twists()) {
            // sigma T sigma^-1 = R A R^-1 contributes only A's bit to PZ_n
            auto [pre, tgt] = conj_artin(k, sign, a, b);
            (void)pre;
            bits ^= 1u << pair_index(n, tgt.first, tgt.second);
        }
        auto [pre, tgt] = conj_artin(k, sign, sym.target.first, sym.target.second);
        if (pre) bits ^= 1u << pair_index(n, pre->i, pre->j);
        dvec_axpy(out, act_bits_on_tau(n, bits, tgt), c);
    }
    return dvec_to_svec(n, out);
}

H1Vector act_word(const BraidWord& w, const H1Vector& v) {
    if (w.n != v.n) throw braid_error("act_word: strand mismatch");
    H1Vector cur = v;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        cur = act_sigma(it->index, it->sign, cur);
    return cur;
}

H1Vector act_pure(const PureBraidWord& w, const H1Vector& v) {
    if (w.n != v.n) throw braid_error("act_pure: strand mismatch");
    H1Vector cur = v;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        if (it->exp % 2 != 0) cur = act_twist({it->i, it->j}, cur);
    return cur;
}

namespace {

QMat matrix_of_action(int n, const std::function<H1Vector(const H1Vector&)>& f) {
    auto bas = enumerate_basis(n);
    size_t d = bas.size();
    QMat m(d, QVec(d, Rat(0)));
    for (size_t j = 0; j < d; ++j) {
        H1Vector e(n);
        e.add(bas[j], 1);
        QVec col = f(e).coords();
        for (size_t i = 0; i < d; ++i) m[i][j] = col[i];
    }
    return m;
}

}  // namespace

const QMat& generator_matrix_sigma(int n, int k) {
    static std::map<std::pair<int, int>, QMat> cache;
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, matrix_of_action(n, [&](const H1Vector& v) {
                               return act_sigma(k, 1, v);
                           })).first;
    return it->second;
}

const QMat& generator_matrix_twist(int n, IndexPair ab) {
    static std::map<std::pair<int, IndexPair>, QMat> cache;
    auto key = std::make_pair(n, make_pair_sorted(ab.first, ab.second));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, matrix_of_action(n, [&](const H1Vector& v) {
                               return act_twist(ab, v);
                           })).first;
    return it->second;
}

H1Vector tau_boundary(int n) {
    if (n < 2) throw braid_error("tau_boundary needs n >= 2");
    ModuleExpression e;
    e.n = n;
    std::vector<ExprFactor> prefix;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) prefix.push_back({ExprFactor::OnePlus, {a, b}});
    Rat scale(Int(1), Int(1) << static_cast<unsigned>(n * (n - 1) / 2));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.terms.push_back({scale, prefix, {i, j}});
    return reduce(e);
}

H1Vector commutator_class(int n, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k && k <= n)) throw braid_error("need i<j<k<=n");
    ModuleExpression e;
    e.n = n;
    Rat half(1, 2);
    e.terms.push_back({half, {{ExprFactor::OneMinus, {i, k}}}, {i, j}});
    e.terms.push_back({half, {{ExprFactor::OneMinus, {i, j}}}, {i, k}});
    e.terms.push_back({-half, {{ExprFactor::OneMinus, {i, j}}}, {j, k}});
    return reduce(e);
}

H1Vector forgetful(const H1Vector& v, const std::vector<int>& A) {
    if (A.size() < 2) throw braid_error("forgetful needs |A| >= 2");
    std::vector<int> s = A;
    std::sort(s.begin(), s.end());
    std::map<int, int> rel;
    for (size_t i = 0; i < s.size(); ++i) rel[s[i]] = static_cast<int>(i) + 1;
    H1Vector out(static_cast<int>(s.size()));
    for (const auto& [sym, c] : v.coeffs) {
        if (!rel.count(sym.target.first) || !rel.count(sym.target.second)) continue;
        std::vector<int> ex;
        for (int r : sym.extras)
            if (rel.count(r)) ex.push_back(rel[r]);
        out.add(BasisSymbol({rel[sym.target.first], rel[sym.target.second]}, std::move(ex)), c);
    }
    return out;
}

H1Vector stabilization_map(const H1Vector& v) {
    H1Vector out(v.n + 1);
    out.coeffs = v.coeffs;
    return out;
}

size_t stabilization_orbit_rank(int n) {
    auto bas = enumerate_basis(n);
    size_t d = dim_h1(n + 1).convert_to<size_t>();
    RowSpan span(d);
    std::vector<H1Vector> frontier;
    for (const auto& s : bas) {
        H1Vector e(n);
        e.add(s, 1);
        H1Vector up = stabilization_map(e);
        if (span.insert(up.coords())) frontier.push_back(up);
    }
    while (!frontier.empty()) {
        std::vector<H1Vector> next;
        for (const auto& v : frontier)
            for (int k = 1; k <= n; ++k) {
                H1Vector img = act_sigma(k, 1, v);
                if (span.insert(img.coords())) next.push_back(img);
            }
        frontier = std::move(next);
    }
    return span.rank();
}

// ---------------------------------------------------------------------------
// expression parsing / printing
// ---------------------------------------------------------------------------

std::string ModuleExpression::str() const {
    std::string out;
    for (const auto& t : terms) {
        Rat c = t.coeff;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (c != 1) out += rat_str(c) + "*";
        for (const auto& f : t.prefix) {
            std::string tw = "T(" + std::to_string(f.ab.first) + "," +
                             std::to_string(f.ab.second) + ")";
            if (f.kind == ExprFactor::Twist) out += tw;
            else if (f.kind == ExprFactor::OneMinus) out += "(1-" + tw + ")";
            else out += "(1+" + tw + ")";
        }
        out += "t(" + std::to_string(t.target.first) + "," +
               std::to_string(t.target.second) + ")";
    }
    return out.empty() ? "0" : out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    explicit Parser(const std::string& str) : s(str) {}

    void skip() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '*' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek(const char* lit) {
        skip();
        return s.compare(pos, std::strlen(lit), lit) == 0;
    }
    long long integer() {
        skip();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw braid_error("expression: expected integer at " + s.substr(start));
        return std::stoll(s.substr(start, pos - start));
    }
    IndexPair pair_args() {
        if (!eat('(')) throw braid_error("expression: expected (");
        int a = static_cast<int>(integer());
        if (!eat(',')) throw braid_error("expression: expected ,");
        int b = static_cast<int>(integer());
        if (!eat(')')) throw braid_error("expression: expected )");
        return {a, b};
    }
};

}  // namespace

ModuleExpression ModuleExpression::parse(int n, const std::string& str) {
    ModuleExpression e;
    e.n = n;
    Parser p(str);
    p.skip();
    bool first = true;
    while (p.pos < p.s.size()) {
        Rat sign = 1;
        p.skip();
        if (p.eat('+')) sign = 1;
        else if (p.eat('-')) sign = -1;
        else if (!first) throw braid_error("expression: expected + or -");
        first = false;
        p.skip();
        Rat coeff = sign;
        if (p.pos < p.s.size() && (std::isdigit(static_cast<unsigned char>(p.s[p.pos])))) {
            long long num = p.integer();
            long long den = 1;
            if (p.eat('/')) den = p.integer();
            coeff *= Rat(num, den);
        }
        ExprTerm term;
        term.coeff = coeff;
        while (true) {
            p.skip();
            if (p.peek("T(")) {
                ++p.pos;
                term.prefix.push_back({ExprFactor::Twist, p.pair_args()});
            } else if (p.peek("(1-T(") || p.peek("(1+T(")) {
                bool minus = p.s[p.pos + 2] == '-';
                p.pos += 4;
                term.prefix.push_back(
                    {minus ? ExprFactor::OneMinus : ExprFactor::OnePlus, p.pair_args()});
                if (!p.eat(')')) throw braid_error("expression: expected )");
            } else if (p.peek("t(")) {
                ++p.pos;
                term.target = p.pair_args();
                break;
            } else {
                throw braid_error("expression: expected factor or target at '" +
                                  p.s.substr(p.pos) + "'");
            }
        }
        auto [a, b] = term.target;
        if (!(1 <= a && a < b && b <= n)) throw braid_error("expression: bad target");
        for (auto& f : term.prefix) {
            f.ab = make_pair_sorted(f.ab.first, f.ab.second);
            if (f.ab.first < 1 || f.ab.second > n) throw braid_error("expression: bad twist");
        }
        e.terms.push_back(std::move(term));
        p.skip();
    }
    return e;
}

BasisSymbol BasisSymbol::parse(const std::string& s) {
    ModuleExpression e = ModuleExpression::parse(32, s);
    if (e.terms.size() != 1 || e.terms[0].coeff != 1)
        throw braid_error("not a basis symbol: " + s);
    const auto& t = e.terms[0];
    std::vector<int> extras;
    for (const auto& f : t.prefix) {
        if (f.kind != ExprFactor::Twist) throw braid_error("not a basis symbol: " + s);
        int hits = (f.ab.first == t.target.first || f.ab.first == t.target.second) +
                   (f.ab.second == t.target.first || f.ab.second == t.target.second);
        if (hits != 1) throw braid_error("not a basis symbol twist: " + s);
        extras.push_back(f.ab.first == t.target.first || f.ab.first == t.target.second
                             ? f.ab.second
                             : f.ab.first);
    }
    return BasisSymbol(t.target, std::move(extras));
}

}  // namespace braid4
