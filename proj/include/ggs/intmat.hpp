#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace ggs {

// Dense integer matrix over Z, row-major. Everything in this project is
// desk-scale (dimension a few dozen at most), so exactness wins over sparsity.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  IntMat(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  long long at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;

  // Rows `r0 <= r < r1`, columns `c0 <= c < c1`.
  IntMat block(int r0, int r1, int c0, int c1) const;

  // Copy without the given row/column (used by the cancellation engine).
  IntMat without_row_col(int row, int col) const;

  void swap_cols(int c1, int c2);
  // col[dst] += m * col[src]
  void add_col(int dst, int src, long long m);

  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> a_;
};

IntMat operator*(const IntMat& a, const IntMat& b);

// Columns of `b` appended to the right of `a` (row counts must agree).
IntMat hcat(const IntMat& a, const IntMat& b);

int rank(IntMat a);

// Basis of the integer kernel {x : a x = 0}, one basis vector per column.
// The kernel of an integer matrix is a saturated sublattice, so this is an
// honest Z-basis, not just a spanning set.
IntMat kernel_basis(const IntMat& a);

// Integer solution of a x = b, if one exists.
std::optional<std::vector<long long>> solve_integer(const IntMat& a, const std::vector<long long>& b);

struct SmithForm {
  std::vector<long long> factors;  // nonzero invariant factors d1 | d2 | ..., all positive
  int rank() const { return static_cast<int>(factors.size()); }
  std::vector<long long> torsion() const;  // factors > 1
};

SmithForm smith(IntMat a);

// Shape of the quotient (lattice spanned by basisN) / (lattice spanned by gensD).
// basisN must be a basis and gensD must lie in its span over Z.
struct QuotientShape {
  int free_rank = 0;
  std::vector<long long> torsion;
};

QuotientShape quotient_shape(const IntMat& basis_n, const IntMat& gens_d);

}  // namespace ggs
