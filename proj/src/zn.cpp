#include "braid4/zn.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace braid4 {

ZnKey pack_mod4(const BurauMatrix& m4) {
    if (m4.m != 4) throw braid_error("pack_mod4 requires modulus 4");
    if (m4.n > 6) throw braid_error("pack_mod4 supports n <= 6");
    ZnKey k;
    for (int i = 0; i < m4.n * m4.n; ++i) {
        uint64_t v = static_cast<uint64_t>(m4.a[i] & 3);
        if (i < 32)
            k.lo |= v << (2 * i);
        else
            k.hi |= v << (2 * (i - 32));
    }
    return k;
}

BurauMatrix unpack_mod4(int n, const ZnKey& k) {
    BurauMatrix m(n, 4);
    for (int i = 0; i < n * n; ++i) {
        uint64_t v = i < 32 ? (k.lo >> (2 * i)) & 3 : (k.hi >> (2 * (i - 32))) & 3;
        m.a[i] = static_cast<long long>(v);
    }
    return m;
}

ZnElement project(const BraidWord& w) {
    BurauMatrix m = burau_mod(w, 4);
    return {w.n, pack_mod4(m), m.mod2_permutation()};
}

PZnElement PZnElement::operator+(const PZnElement& o) const {
    if (n != o.n) throw braid_error("PZn strand mismatch");
    return {n, bits ^ o.bits};
}

int pair_index(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) throw braid_error("bad pair");
    // lex rank of (i,j) among pairs of [n]
    int r = 0;
    for (int a = 1; a < i; ++a) r += n - a;
    return r + (j - i - 1);
}

IndexPair pair_from_index(int n, int idx) {
    for (int a = 1; a < n; ++a) {
        if (idx < n - a) return {a, a + 1 + idx};
        idx -= n - a;
    }
    throw braid_error("pair index out of range");
}

bool PZnElement::get(int i, int j) const {
    return bits >> pair_index(n, std::min(i, j), std::max(i, j)) & 1;
}

PZnElement pure_project(const BraidWord& w) {
    if (!is_pure(w)) throw not_pure("pure_project on a non-pure word");
    PZnElement out{w.n, 0};
    for (const auto& [pr, xi] : windings(w)) {
        if (denominator(xi) != 1) throw braid_error("non-integral winding on pure word");
        if (numerator(xi) % 2 != 0) out.bits |= 1u << pair_index(w.n, pr.first, pr.second);
    }
    return out;
}

PZnElement pure_project(const PureBraidWord& w) {
    PZnElement out{w.n, 0};
    for (const auto& f : w.letters)
        if (f.exp % 2 != 0) out.bits ^= 1u << pair_index(w.n, f.i, f.j);
    return out;
}

PairSubset::PairSubset(int strands, std::vector<IndexPair> ps) : n(strands), pairs(std::move(ps)) {
    for (auto& p : pairs) {
        if (p.first > p.second) std::swap(p.first, p.second);
        if (!(1 <= p.first && p.first < p.second && p.second <= n))
            throw braid_error("bad pair in subset");
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

bool PairSubset::contains(int i, int j) const {
    return std::binary_search(pairs.begin(), pairs.end(), make_pair_sorted(i, j));
}

std::vector<int> PairSubset::support() const {
    std::vector<int> s;
    for (const auto& p : pairs) {
        s.push_back(p.first);
        s.push_back(p.second);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool PairSubset::is_full(int m) const {
    auto s = support();
    if (static_cast<int>(s.size()) != m) return false;
    for (int i = 0; i < m; ++i)
        if (s[i] != i + 1) return false;
    return true;
}

PairSubset PairSubset::apply_perm(const std::vector<int>& p) const {
    std::vector<IndexPair> out;
    for (const auto& pr : pairs) out.push_back(make_pair_sorted(p[pr.first - 1], p[pr.second - 1]));
    return PairSubset(n, std::move(out));
}

uint32_t PairSubset::mask() const {
    uint32_t m = 0;
    for (const auto& p : pairs) m |= 1u << pair_index(n, p.first, p.second);
    return m;
}

std::string PairSubset::str() const {
    std::string out = "{";
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    return out + "}";
}

PairSubset PairSubset::parse(int n, const std::string& s) {
    std::vector<IndexPair> ps;
    size_t pos = 0;
    while ((pos = s.find('(', pos)) != std::string::npos) {
        int i, j;
        if (std::sscanf(s.c_str() + pos, "(%d,%d)", &i, &j) != 2)
            throw braid_error("bad pair subset: " + s);
        ps.push_back(make_pair_sorted(i, j));
        ++pos;
    }
    return PairSubset(n, std::move(ps));
}

PairSubset I3_subset(int n) { return PairSubset(n, {{1, 3}, {2, 3}}); }
PairSubset I4_subset(int n) { return PairSubset(n, {{1, 3}, {2, 3}, {1, 4}, {2, 4}}); }

ZnTable::ZnTable(int n_, bool allow_large) : n(n_) {
    if (n < 1) throw bound_exceeded("n must be >= 1");
    int bound = allow_large ? 6 : kDefaultBound;
    if (n > bound)
        throw bound_exceeded("enumerate_zn bound exceeded (n=" + std::to_string(n) +
                             ", bound=" + std::to_string(bound) + ")");
    Int expected = factorial(n) * (Int(1) << static_cast<unsigned>(n * (n - 1) / 2));
    if (const char* cap = std::getenv("BRAID4_ENUM_LIMIT")) {
        if (expected > Int(std::string(cap)))
            throw bound_exceeded("enumeration exceeds BRAID4_ENUM_LIMIT");
    }

    std::vector<ZnKey> genkeys;
    for (int k = 1; k < n; ++k)
        genkeys.push_back(pack_mod4(burau_mod(BraidWord(n, {{k, 1}}), 4)));

    ZnKey id = pack_mod4(BurauMatrix::identity(n, 4));
    keys_.push_back(id);
    index_[id] = 0;
    parent_.push_back(-1);
    parent_gen_.push_back(-1);
    for (size_t qi = 0; qi < keys_.size(); ++qi) {
        BurauMatrix cur = unpack_mod4(n, keys_[qi]);
        for (int g = 0; g < n - 1; ++g) {
            BurauMatrix nxt = cur * unpack_mod4(n, genkeys[g]);
            ZnKey k = pack_mod4(nxt);
            if (index_.emplace(k, static_cast<int>(keys_.size())).second) {
                keys_.push_back(k);
                parent_.push_back(static_cast<int>(qi));
                parent_gen_.push_back(g);
            }
        }
    }
    perms_.reserve(keys_.size());
    for (const auto& k : keys_) perms_.push_back(unpack_mod4(n, k).mod2_permutation());
    gen_index_.resize(n - 1);
    for (int k = 1; k < n; ++k) gen_index_[k - 1] = index_.at(genkeys[k - 1]);
    canon_.resize(keys_.size());
    std::iota(canon_.begin(), canon_.end(), 0);
    std::sort(canon_.begin(), canon_.end(),
              [&](int a, int b) { return keys_[a] < keys_[b]; });
}

int ZnTable::index_of(const ZnKey& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) throw braid_error("element not in Z_n table");
    return it->second;
}

ZnElement ZnTable::element(int idx) const { return {n, keys_[idx], perms_[idx]}; }

int ZnTable::mul(int a, int b) const {
    return index_of(pack_mod4(unpack_mod4(n, keys_[a]) * unpack_mod4(n, keys_[b])));
}

int ZnTable::inverse(int a) const {
    // a has finite order; a^{ord-1} is the inverse
    int cur = a;
    while (true) {
        int nxt = mul(cur, a);
        if (nxt == 0) return cur;
        cur = nxt;
    }
}

int ZnTable::conj(int g, int x) const { return mul(mul(g, x), inverse(g)); }

BraidWord ZnTable::witness(int idx) const {
    // discovery step was parent * sigma_g with sigma applied first, i.e.
    // word(idx) = word(parent) ++ [sigma_g]
    std::vector<BraidLetter> ls;
    while (parent_[idx] >= 0) {
        ls.push_back({parent_gen_[idx] + 1, 1});
        idx = parent_[idx];
    }
    std::reverse(ls.begin(), ls.end());
    return BraidWord(n, std::move(ls));
}

std::vector<std::vector<int>> ZnTable::conj_classes(const std::vector<int>& subset,
                                                    const std::vector<int>& gens) const {
    std::unordered_map<int, int> pos;
    pos.reserve(subset.size() * 2);
    for (size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<int>(i);
    std::vector<int> parent(subset.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::vector<int> ginv;
    for (int g : gens) ginv.push_back(inverse(g));
    for (size_t i = 0; i < subset.size(); ++i) {
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int c = mul(mul(gens[gi], subset[i]), ginv[gi]);
            auto it = pos.find(c);
            if (it == pos.end()) continue;  // generator not in subgroup scope
            int ra = find(static_cast<int>(i)), rb = find(it->second);
            if (ra != rb) parent[ra] = rb;
        }
    }
    std::unordered_map<int, std::vector<int>> cl;
    for (size_t i = 0; i < subset.size(); ++i) cl[find(static_cast<int>(i))].push_back(subset[i]);
    std::vector<std::vector<int>> out;
    for (auto& [root, v] : cl) {
        std::sort(v.begin(), v.end());
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> ZnTable::conj_classes() const {
    std::vector<int> all(size());
    std::iota(all.begin(), all.end(), 0);
    return conj_classes(all, gen_index_);
}

ZnTable::Orbit ZnTable::orbit(const PairSubset& I) const {
    Orbit o;
    o.members.push_back(I);
    o.reps.push_back(0);
    o.member_index[I.mask()] = 0;
    for (size_t qi = 0; qi < o.members.size(); ++qi) {
        for (int k = 1; k < n; ++k) {
            int g = gen_index_[k - 1];
            PairSubset img = o.members[qi].apply_perm(perms_[g]);
            if (o.member_index.emplace(img.mask(), static_cast<int>(o.members.size())).second) {
                o.members.push_back(img);
                o.reps.push_back(mul(g, o.reps[qi]));
            }
        }
    }
    return o;
}

std::vector<int> ZnTable::stabilizer_elements(const PairSubset& I) const {
    std::vector<int> out;
    uint32_t m = I.mask();
    for (size_t i = 0; i < size(); ++i)
        if (I.apply_perm(perms_[i]).mask() == m) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> ZnTable::schreier_generators(const PairSubset& I) const {
    Orbit o = orbit(I);
    std::vector<int> out;
    uint32_t base = I.mask();
    for (size_t t = 0; t < o.members.size(); ++t) {
        for (int k = 1; k < n; ++k) {
            int g = gen_index_[k - 1];
            PairSubset img = o.members[t].apply_perm(perms_[g]);
            int t2 = o.member_index.at(img.mask());
            // schreier generator rep(t2)^-1 * g * rep(t)  (stabilizes I)
            int s = mul(inverse(o.reps[t2]), mul(g, o.reps[t]));
            if (I.apply_perm(perms_[s]).mask() != base)
                throw braid_error("schreier generator not in stabilizer (internal)");
            if (s != 0) out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<long long> zn_abelianization(const ZnTable& t) {
    if (t.n > 4) throw bound_exceeded("zn_abelianization supports n <= 4");
    size_t N = t.size();
    // commutator subgroup: closure of {[x, g] : x in G, g generator}
    std::vector<char> in_sub(N, 0);
    std::vector<int> comms;
    for (size_t x = 0; x < N; ++x) {
        for (int k = 1; k < t.n; ++k) {
            int g = t.generator_index(k);
            int c = t.mul(t.mul(static_cast<int>(x), g),
                          t.mul(t.inverse(static_cast<int>(x)), t.inverse(g)));
            if (!in_sub[c]) {
                in_sub[c] = 1;
                comms.push_back(c);
            }
        }
    }
    std::vector<int> frontier = comms;
    in_sub[0] = 1;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int b : comms) {
                int c = t.mul(a, b);
                if (!in_sub[c]) {
                    in_sub[c] = 1;
                    next.push_back(c);
                }
            }
        frontier = std::move(next);
    }
    size_t dsize = 0;
    for (char v : in_sub) dsize += v;
    long long q = static_cast<long long>(N / dsize);
    if (q == 1) return {};

    // coset representatives of [G,G] and the order of each coset in Q
    std::vector<char> covered(N, 0);
    std::vector<long long> coset_order;
    for (size_t x = 0; x < N; ++x) {
        if (covered[x]) continue;
        for (size_t y = 0; y < N; ++y)
            if (in_sub[y]) covered[t.mul(static_cast<int>(x), static_cast<int>(y))] = 1;
        long long o = 1;
        int cur = static_cast<int>(x);
        while (!in_sub[cur]) {
            cur = t.mul(cur, static_cast<int>(x));
            ++o;
        }
        coset_order.push_back(o);
    }
    // invariant factors d_1 | d_2 | ... with prod = q, determined by the counts
    // N_d = #{x in Q : ord(x) | d} = prod gcd(d, d_i)
    auto count_div = [&](long long d) {
        long long c = 0;
        for (long long o : coset_order)
            if (d % o == 0) ++c;
        return c;
    };
    std::vector<std::vector<long long>> chains;
    std::function<void(long long, long long, std::vector<long long>&)> build =
        [&](long long rem, long long minf, std::vector<long long>& cur) {
            if (rem == 1) {
                chains.push_back(cur);
                return;
            }
            for (long long d = minf; d <= rem; ++d) {
                if (rem % d != 0) continue;
                if (!cur.empty() && d % cur.back() != 0) continue;
                cur.push_back(d);
                build(rem / d, d, cur);
                cur.pop_back();
            }
        };
    std::vector<long long> tmp;
    build(q, 2, tmp);
    for (const auto& ch : chains) {
        bool ok = true;
        for (long long d = 1; d <= q && ok; ++d) {
            if (q % d != 0) continue;
            long long expect = 1;
            for (long long di : ch) expect *= std::gcd(d, di);
            ok = expect == count_div(d);
        }
        if (ok) return ch;
    }
    throw braid_error("could not identify abelianization invariants (internal)");
}

}  // namespace braid4
