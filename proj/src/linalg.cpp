#include "braid4/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace braid4 {

QMat qmat_identity(size_t d) {
    QMat m(d, QVec(d, Rat(0)));
    for (size_t i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    QMat c(n, QVec(p, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            const Rat& v = a[i][t];
            for (size_t j = 0; j < p; ++j)
                if (b[t][j] != 0) c[i][j] += v * b[t][j];
        }
    return c;
}

QVec qmat_apply(const QMat& a, const QVec& v) {
    QVec out(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0 && v[j] != 0) out[i] += a[i][j] * v[j];
    return out;
}

bool qmat_equal(const QMat& a, const QMat& b) { return a == b; }

bool RowSpan::insert(QVec v) {
    if (v.size() != ncols_) throw std::invalid_argument("RowSpan: column mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivots_[r]];
        if (c != 0) {
            Rat f = c;
            for (size_t j = 0; j < ncols_; ++j)
                if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
        }
    }
    size_t p = 0;
    while (p < ncols_ && v[p] == 0) ++p;
    if (p == ncols_) return false;
    Rat f = v[p];
    for (auto& x : v) x /= f;
    // maintain reduced form
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = rows_[r][p];
        if (c != 0) {
            Rat g = c;
            for (size_t j = 0; j < ncols_; ++j)
                if (v[j] != 0) rows_[r][j] -= g * v[j];
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowSpan::contains(QVec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivots_[r]];
        if (c != 0) {
            Rat f = c;
            for (size_t j = 0; j < ncols_; ++j)
                if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
        }
    }
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

QVec RowSpan::coords(QVec v) const {
    QVec out(rows_.size(), Rat(0));
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivots_[r]];
        if (c != 0) {
            out[r] = c;
            Rat f = c;
            for (size_t j = 0; j < ncols_; ++j)
                if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
        }
    }
    if (!std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; }))
        throw std::invalid_argument("RowSpan::coords: vector not in span");
    return out;
}

size_t rank_of(const std::vector<QVec>& rows, size_t ncols) {
    RowSpan sp(ncols);
    for (const auto& r : rows) sp.insert(r);
    return sp.rank();
}

size_t int_rank(std::vector<std::vector<Int>> a) {
    if (a.empty()) return 0;
    RowSpan sp(a[0].size());
    for (auto& row : a) {
        QVec v(row.size());
        for (size_t j = 0; j < row.size(); ++j) v[j] = Rat(row[j]);
        sp.insert(std::move(v));
    }
    return sp.rank();
}

std::vector<Int> smith_divisors(std::vector<std::vector<Int>> a) {
    size_t m = a.size();
    if (m == 0) return {};
    size_t n = a[0].size();
    std::vector<Int> divs;
    size_t r = 0, c = 0;
    while (r < m && c < n) {
        // minimal absolute nonzero pivot in the remaining block
        size_t pi = m, pj = n;
        Int best = 0;
        for (size_t i = r; i < m; ++i)
            for (size_t j = c; j < n; ++j) {
                if (a[i][j] == 0) continue;
                Int v = abs(a[i][j]);
                if (best == 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m) break;
        std::swap(a[r], a[pi]);
        for (size_t i = 0; i < m; ++i) std::swap(a[i][c], a[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = r + 1; i < m; ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c];
                if (q != 0)
                    for (size_t j = c; j < n; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(a[r], a[i]);
                    clean = false;
                }
            }
            for (size_t j = c + 1; j < n; ++j) {
                if (a[r][j] == 0) continue;
                Int q = a[r][j] / a[r][c];
                if (q != 0)
                    for (size_t i = r; i < m; ++i) a[i][j] -= q * a[i][c];
                if (a[r][j] != 0) {
                    for (size_t i = r; i < m; ++i) std::swap(a[i][c], a[i][j]);
                    clean = false;
                }
            }
        }
        divs.push_back(abs(a[r][c]));
        ++r;
        ++c;
    }
    // divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < divs.size(); ++i) {
            if (divs[i + 1] % divs[i] != 0) {
                Int g = gcd(divs[i], divs[i + 1]);
                Int l = divs[i] / g * divs[i + 1];
                divs[i] = g;
                divs[i + 1] = l;
                changed = true;
            }
        }
        std::sort(divs.begin(), divs.end());
    }
    return divs;
}

}  // namespace braid4
