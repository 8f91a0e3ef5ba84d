#include "braid4/rep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace braid4 {

std::string rho_tag_str(RhoTag t) {
    switch (t) {
        case RhoTag::Trivial: return "trivial";
        case RhoTag::Rho3: return "rho3";
        default: return "rho4";
    }
}

void IrrepLabel::validate(int n) const {
    if (m < 0 || m > n) throw braid_error("irrep label: bad m");
    if (m == 0) {
        if (!I.pairs.empty()) throw braid_error("irrep label: m=0 needs empty I");
        if (rho != RhoTag::Trivial) throw braid_error("irrep label: m=0 needs trivial rho");
    } else if (!I.is_full(m)) {
        throw braid_error("irrep label: I must be full for [m]");
    }
    if (rho == RhoTag::Rho3 && !(m == 3 && I == I3_subset(I.n)))
        throw braid_error("irrep label: rho3 requires I = I_3");
    if (rho == RhoTag::Rho4 && !(m == 4 && I == I4_subset(I.n)))
        throw braid_error("irrep label: rho4 requires I = I_4");
    if (padded_partition(lambda, n - m).empty() && !(n == m && lambda == std::vector<int>{0}))
        throw braid_error("irrep label: invalid padded partition");
}

std::string IrrepLabel::str() const {
    std::string lam = "(";
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i) lam += ",";
        lam += std::to_string(lambda[i]);
    }
    lam += ")";
    return "V(" + rho_tag_str(rho) + "," + lam + ")";
}

std::vector<IrrepLabel> h1_constituents(int n) {
    std::vector<IrrepLabel> out;
    out.push_back({0, PairSubset(n, {}), RhoTag::Trivial, {0}});
    if (!padded_partition({1}, n).empty())
        out.push_back({0, PairSubset(n, {}), RhoTag::Trivial, {1}});
    if (!padded_partition({2}, n).empty())
        out.push_back({0, PairSubset(n, {}), RhoTag::Trivial, {2}});
    if (n >= 3) out.push_back({3, I3_subset(n), RhoTag::Rho3, {0}});
    if (n >= 4) out.push_back({4, I4_subset(n), RhoTag::Rho4, {0}});
    return out;
}

int rho_character(const PairSubset& I, const PZnElement& g) {
    int count = 0;
    for (const auto& [a, b] : I.pairs)
        if (g.get(a, b)) ++count;
    return count % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama via beta sets
// ---------------------------------------------------------------------------

static std::vector<int> strip_zeros(std::vector<int> v) {
    v.erase(std::remove(v.begin(), v.end(), 0), v.end());
    return v;
}

Int sn_character(const std::vector<int>& lambda_in, const std::vector<int>& mu_in) {
    auto lambda = strip_zeros(lambda_in);
    auto mu = strip_zeros(mu_in);
    long long sl = std::accumulate(lambda.begin(), lambda.end(), 0LL);
    long long sm = std::accumulate(mu.begin(), mu.end(), 0LL);
    if (sl != sm) throw braid_error("sn_character: |lambda| != |mu|");
    if (mu.empty()) return 1;
    int r = std::max<int>(1, static_cast<int>(lambda.size()));
    std::vector<int> beta;
    for (int i = 0; i < r; ++i)
        beta.push_back((i < static_cast<int>(lambda.size()) ? lambda[i] : 0) - i + (r - 1));
    std::set<int> bs(beta.begin(), beta.end());
    int k = mu.front();
    std::vector<int> rest(mu.begin() + 1, mu.end());
    Int total = 0;
    for (int b : beta) {
        if (b < k || bs.count(b - k)) continue;
        int between = 0;
        for (int x : beta)
            if (b - k < x && x < b) ++between;
        std::set<int> bs2 = bs;
        bs2.erase(b);
        bs2.insert(b - k);
        std::vector<int> sorted(bs2.rbegin(), bs2.rend());
        std::vector<int> lam2;
        for (size_t i = 0; i < sorted.size(); ++i) {
            int part = sorted[i] - (static_cast<int>(sorted.size()) - 1 - static_cast<int>(i));
            if (part > 0) lam2.push_back(part);
        }
        Int sub = sn_character(lam2, rest);
        total += (between % 2 == 0 ? sub : -sub);
    }
    return total;
}

Int partition_dim(const std::vector<int>& lambda_in) {
    auto lambda = strip_zeros(lambda_in);
    if (lambda.empty()) return 1;
    long long total = std::accumulate(lambda.begin(), lambda.end(), 0LL);
    Int prod = 1;
    int r = static_cast<int>(lambda.size());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = 0;
            for (int ii = i + 1; ii < r; ++ii)
                if (lambda[ii] > j) ++leg;
            prod *= arm + leg + 1;
        }
    Int f = factorial(total);
    return f / prod;
}

std::vector<int> padded_partition(const std::vector<int>& lambda_in, int n) {
    auto lambda = strip_zeros(lambda_in);
    long long s = std::accumulate(lambda.begin(), lambda.end(), 0LL);
    std::vector<int> full;
    full.push_back(static_cast<int>(n - s));
    full.insert(full.end(), lambda.begin(), lambda.end());
    if (full[0] < 0) return {};
    for (size_t i = 0; i + 1 < full.size(); ++i)
        if (full[i] < full[i + 1]) return {};
    return strip_zeros(full);
}

Int constituent_dimension(const IrrepLabel& label, int n) {
    label.validate(n);
    Int lam_dim;
    if (n == label.m) {
        lam_dim = 1;
    } else {
        auto full = padded_partition(label.lambda, n - label.m);
        if (full.empty()) throw braid_error("invalid padded partition");
        lam_dim = partition_dim(full);
    }
    Int index = 1;  // [Z_n : Z_n^I] = orbit size of I
    switch (label.rho) {
        case RhoTag::Trivial: index = 1; break;
        case RhoTag::Rho3: index = 3 * binom(n, 3); break;
        case RhoTag::Rho4: index = 3 * binom(n, 4); break;
    }
    return index * lam_dim;  // dim(rho) = 1 for all three tags
}

// ---------------------------------------------------------------------------
// character machinery over the enumerated group
// ---------------------------------------------------------------------------

namespace {

std::vector<int> perm_cycle_type(const std::vector<int>& perm, const std::vector<int>& pts) {
    std::set<int> seen;
    std::vector<int> out;
    for (int p : pts) {
        if (seen.count(p)) continue;
        int c = 0, q = p;
        while (!seen.count(q)) {
            seen.insert(q);
            q = perm[q - 1];
            ++c;
        }
        out.push_back(c);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

// character of W = V_m(rho) x V_{n-m}(lambda) at an element of Z_n^I, via its
// witness word
Int chi_W(const ZnTable& t, const IrrepLabel& label, int elt) {
    int n = t.n;
    BraidWord w = t.witness(elt);
    Int rho_val = 1;
    if (label.rho != RhoTag::Trivial) {
        int k = label.rho == RhoTag::Rho3 ? 3 : 4;
        rho_val = rho_k(w, k);
    }
    std::vector<int> pts;
    for (int x = label.m + 1; x <= n; ++x) pts.push_back(x);
    if (pts.empty()) return rho_val;
    auto ct = perm_cycle_type(t.perm(elt), pts);
    auto full = padded_partition(label.lambda, n - label.m);
    if (full.empty()) throw braid_error("invalid padded partition");
    return rho_val * sn_character(full, ct);
}

bool stabilizes(const ZnTable& t, int elt, const PairSubset& I) {
    return I.apply_perm(t.perm(elt)).mask() == I.mask();
}

}  // namespace

CharacterVector induced_character(const IrrepLabel& label, const ZnTable& t) {
    label.validate(t.n);
    CharacterVector out;
    out.domain = "Z_" + std::to_string(t.n);
    out.classes = t.conj_classes();
    PairSubset I(t.n, label.I.pairs);
    auto orb = t.orbit(I);
    for (const auto& cl : out.classes) {
        int g = cl.front();
        Int total = 0;
        for (int rep : orb.reps) {
            int conj = t.mul(t.mul(t.inverse(rep), g), rep);
            if (!stabilizes(t, conj, I)) continue;
            total += chi_W(t, label, conj);
        }
        out.values.push_back(total);
    }
    return out;
}

size_t IsotypicReport::block_dim(uint32_t mask) const {
    auto it = blocks.find(mask);
    return it == blocks.end() ? 0 : it->second.rank();
}

Int IsotypicReport::total_dim() const {
    Int s = 0;
    for (const auto& [m, sp] : blocks) s += sp.rank();
    return s;
}

IsotypicReport isotypic_decomposition(int n, const std::vector<QMat>& twist_matrices) {
    size_t npairs = static_cast<size_t>(n) * (n - 1) / 2;
    if (twist_matrices.size() != npairs)
        throw braid_error("need one matrix per pair of [n]");
    size_t d = twist_matrices.empty() ? 0 : twist_matrices[0].size();
    for (const auto& m : twist_matrices)
        if (!qmat_equal(qmat_mul(m, m), qmat_identity(d)))
            throw non_involutive("generator matrix is not an involution");
    // start with the standard basis, split by each involution in turn
    std::vector<std::pair<std::vector<QVec>, uint32_t>> blocks;
    {
        std::vector<QVec> full;
        for (size_t i = 0; i < d; ++i) {
            QVec e(d, Rat(0));
            e[i] = 1;
            full.push_back(std::move(e));
        }
        blocks.emplace_back(std::move(full), 0u);
    }
    for (size_t pi = 0; pi < npairs; ++pi) {
        const QMat& M = twist_matrices[pi];
        std::vector<std::pair<std::vector<QVec>, uint32_t>> next;
        for (auto& [vecs, mask] : blocks) {
            RowSpan plus(d), minus(d);
            for (const auto& v : vecs) {
                QVec mv = qmat_apply(M, v);
                QVec pv(d), nv(d);
                for (size_t i = 0; i < d; ++i) {
                    pv[i] = (v[i] + mv[i]) / 2;
                    nv[i] = (v[i] - mv[i]) / 2;
                }
                plus.insert(std::move(pv));
                minus.insert(std::move(nv));
            }
            if (plus.rank()) next.emplace_back(plus.rows(), mask);
            if (minus.rank()) next.emplace_back(minus.rows(), mask | (1u << pi));
        }
        blocks = std::move(next);
    }
    IsotypicReport out{n, {}};
    for (auto& [vecs, mask] : blocks) {
        RowSpan sp(d);
        for (auto& v : vecs) sp.insert(std::move(v));
        out.blocks.emplace(mask, std::move(sp));
    }
    return out;
}

const IsotypicReport& h1_isotypic(int n) {
    static std::map<int, IsotypicReport> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        // matrices in the lex pair order of pair_index
        std::vector<QMat> ms;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) ms.push_back(generator_matrix_twist(n, {a, b}));
        it = cache.emplace(n, isotypic_decomposition(n, ms)).first;
    }
    return it->second;
}

namespace {

// trace of the action of a witness word on an invariant block
Rat block_trace(int n, const RowSpan& block, const BraidWord& w) {
    Rat tr = 0;
    const auto& rows = block.rows();
    for (size_t r = 0; r < rows.size(); ++r) {
        H1Vector v = H1Vector::from_coords(n, rows[r]);
        QVec img = act_word(w, v).coords();
        QVec cs = block.coords(std::move(img));
        tr += cs[r];
    }
    return tr;
}

Int rat_to_int(const Rat& r, const char* what) {
    if (denominator(r) != 1) throw braid_error(std::string(what) + ": non-integral result");
    return numerator(r);
}

}  // namespace

Int multiplicity_two_stage(const ZnTable& t, const IrrepLabel& label) {
    label.validate(t.n);
    int n = t.n;
    const IsotypicReport& rep = h1_isotypic(n);
    PairSubset I(n, label.I.pairs);
    auto bit = rep.blocks.find(I.mask());
    if (bit == rep.blocks.end()) return 0;
    const RowSpan& block = bit->second;

    std::vector<int> H = t.stabilizer_elements(I);
    std::vector<int> gens =
        label.m == 0 ? std::vector<int>() : t.schreier_generators(I);
    if (label.m == 0)
        for (int k = 1; k < n; ++k) gens.push_back(t.generator_index(k));
    auto classes = t.conj_classes(H, gens);
    Rat total = 0;
    for (const auto& cl : classes) {
        int g = cl.front();
        Int chi = chi_W(t, label, g);
        if (chi == 0) continue;
        BraidWord winv = t.witness(t.inverse(g));
        total += Rat(chi) * block_trace(n, block, winv) * Rat(cl.size());
    }
    total /= Rat(H.size());
    return rat_to_int(total, "two-stage multiplicity");
}

Int multiplicity_full_group(const ZnTable& t, const IrrepLabel& label) {
    label.validate(t.n);
    if (t.n > 4) throw bound_exceeded("full-group multiplicity supported for n <= 4");
    int n = t.n;
    CharacterVector chiV = induced_character(label, t);
    auto bas = enumerate_basis(n);
    Rat total = 0;
    for (size_t ci = 0; ci < chiV.classes.size(); ++ci) {
        if (chiV.values[ci] == 0) continue;
        int g = chiV.classes[ci].front();
        BraidWord winv = t.witness(t.inverse(g));
        // full H1 trace
        Rat tr = 0;
        for (const auto& sym : bas) {
            H1Vector e(n);
            e.add(sym, 1);
            H1Vector img = act_word(winv, e);
            auto it = img.coeffs.find(sym);
            if (it != img.coeffs.end()) tr += it->second;
        }
        total += Rat(chiV.values[ci]) * tr * Rat(chiV.classes[ci].size());
    }
    total /= Rat(t.size());
    return rat_to_int(total, "full-group multiplicity");
}

OrbitSpan orbit_submodule(const H1Vector& seed) {
    int n = seed.n;
    size_t d = dim_h1(n).convert_to<size_t>();
    RowSpan span(d);
    std::vector<H1Vector> frontier;
    if (span.insert(seed.coords())) frontier.push_back(seed);
    while (!frontier.empty()) {
        std::vector<H1Vector> next;
        for (const auto& v : frontier)
            for (int k = 1; k < n; ++k) {
                H1Vector img = act_sigma(k, 1, v);
                if (span.insert(img.coords())) next.push_back(img);
            }
        frontier = std::move(next);
    }
    return {span.rank(), span.rows()};
}

H1Vector alpha_generator(int n, int i, int j) {
    ModuleExpression e;
    e.n = n;
    ExprTerm term;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) term.prefix.push_back({ExprFactor::OnePlus, {a, b}});
    term.target = make_pair_sorted(i, j);
    e.terms.push_back(std::move(term));
    return reduce(e);
}

H1Vector x3_generator(int n) {
    if (n < 3) throw braid_error("x3 needs n >= 3");
    ModuleExpression e;
    e.n = n;
    ExprTerm term;
    term.prefix.push_back({ExprFactor::OneMinus, {1, 3}});
    for (int j = 4; j <= n; ++j) {
        term.prefix.push_back({ExprFactor::OnePlus, {1, j}});
        term.prefix.push_back({ExprFactor::OnePlus, {2, j}});
    }
    term.target = {1, 2};
    e.terms.push_back(std::move(term));
    return reduce(e);
}

H1Vector x4_generator(int n) {
    if (n < 4) throw braid_error("x4 needs n >= 4");
    ModuleExpression e;
    e.n = n;
    e.terms.push_back(
        {Rat(1), {{ExprFactor::OneMinus, {1, 4}}, {ExprFactor::OneMinus, {2, 3}}}, {1, 2}});
    return reduce(e);
}

std::vector<std::pair<PairSubset, Int>> branching(const IrrepLabel& label, const ZnTable& t) {
    label.validate(t.n);
    Int lam_dim;
    if (t.n == label.m) {
        lam_dim = 1;
    } else {
        lam_dim = partition_dim(padded_partition(label.lambda, t.n - label.m));
    }
    std::vector<std::pair<PairSubset, Int>> out;
    if (label.m == 0) {
        out.emplace_back(PairSubset(t.n, {}), lam_dim);
        return out;
    }
    PairSubset I(t.n, label.I.pairs);
    auto orb = t.orbit(I);
    for (const auto& member : orb.members) out.emplace_back(member, lam_dim);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<PairSubset> torsion_points(int n, int d) {
    if (n > 5) throw bound_exceeded("torsion scan supported for n <= 5");
    if (d < 1) throw braid_error("torsion scan needs d >= 1");
    const IsotypicReport& rep = h1_isotypic(n);
    std::vector<PairSubset> out;
    uint32_t top = 1u << (n * (n - 1) / 2);
    for (uint32_t mask = 1; mask < top; ++mask) {
        if (rep.block_dim(mask) < static_cast<size_t>(d)) continue;
        std::vector<IndexPair> ps;
        for (int idx = 0; idx < n * (n - 1) / 2; ++idx)
            if (mask >> idx & 1) ps.push_back(pair_from_index(n, idx));
        out.push_back(PairSubset(n, std::move(ps)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string cohen_suciu_membership(const PairSubset& I) {
    int n = I.n;
    auto value = [&](int p, int q) { return I.contains(p, q) ? -1 : 1; };
    if (I.pairs.empty()) return "identity point (on every central component)";
    auto supp = I.support();
    if (supp.size() == 3) {
        int i = supp[0], j = supp[1], k = supp[2];
        // V_{ijk}: t_ij t_ik t_jk = 1; t_pq = 1 when |{p,q} n {i,j,k}| <= 1
        if (value(i, j) * value(i, k) * value(j, k) != 1)
            throw not_on_central_component("triple product != 1");
        for (int p = 1; p <= n; ++p)
            for (int q = p + 1; q <= n; ++q) {
                int inside = (p == i || p == j || p == k) + (q == i || q == j || q == k);
                if (inside <= 1 && value(p, q) != 1)
                    throw not_on_central_component("support leaks outside triple");
            }
        return "V(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    }
    if (supp.size() == 4) {
        int i = supp[0], j = supp[1], k = supp[2], l = supp[3];
        std::vector<int> q = {i, j, k, l};
        auto inq = [&](int x) { return std::find(q.begin(), q.end(), x) != q.end(); };
        // complementary pairs agree, outside pairs trivial, product = 1
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                int c = -1, dd = -1;
                for (int x = 0; x < 4; ++x)
                    if (x != a && x != b) (c < 0 ? c : dd) = x;
                if (value(q[a], q[b]) != value(q[c], q[dd]))
                    throw not_on_central_component("complementary pairs differ");
            }
        int prod = 1;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) prod *= value(q[a], q[b]);
        if (prod != 1) throw not_on_central_component("product over quadruple != 1");
        for (int p = 1; p <= n; ++p)
            for (int s = p + 1; s <= n; ++s)
                if (!(inq(p) && inq(s)) && value(p, s) != 1)
                    throw not_on_central_component("support leaks outside quadruple");
        return "V(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
               "," + std::to_string(l) + ")";
    }
    throw not_on_central_component("support size " + std::to_string(supp.size()));
}

}  // namespace braid4
