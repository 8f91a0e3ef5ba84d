#pragma once

#include <vector>

#include "braid4/numbers.hpp"

namespace braid4 {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major

QMat qmat_identity(size_t d);
QMat qmat_mul(const QMat& a, const QMat& b);
QVec qmat_apply(const QMat& a, const QVec& v);
bool qmat_equal(const QMat& a, const QMat& b);

// Row span maintained in reduced echelon form; supports incremental inserts.
class RowSpan {
  public:
    explicit RowSpan(size_t ncols) : ncols_(ncols) {}

    // returns true if the vector enlarged the span
    bool insert(QVec v);
    bool contains(QVec v) const;
    // coordinates of v in the current basis rows; throws if not in span
    QVec coords(QVec v) const;

    size_t rank() const { return rows_.size(); }
    const std::vector<QVec>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

  private:
    size_t ncols_;
    std::vector<QVec> rows_;
    std::vector<size_t> pivots_;
};

size_t rank_of(const std::vector<QVec>& rows, size_t ncols);

// Smith normal form divisors of an integer matrix (nonzero diagonal entries,
// each dividing the next).  Destroys its input.
std::vector<Int> smith_divisors(std::vector<std::vector<Int>> a);

// rank of an integer matrix over Q (fraction-free elimination)
size_t int_rank(std::vector<std::vector<Int>> a);

}  // namespace braid4
