#include "ggs/intmat.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace ggs {

namespace {

long long exgcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = exgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Combine columns c1, c2 of m (and of an optional companion) by the unimodular
// transform that leaves gcd(a, b) at (row, c1) and 0 at (row, c2).
void gcd_cols(IntMat& m, IntMat* companion, int row, int c1, int c2) {
  long long a = m.at(row, c1);
  long long b = m.at(row, c2);
  if (b == 0) return;
  if (a == 0) {
    m.swap_cols(c1, c2);
    if (companion) companion->swap_cols(c1, c2);
    return;
  }
  long long x, y;
  long long g = exgcd(a, b, x, y);
  long long u = a / g, v = b / g;  // x*a + y*b = g, det [x -v; y u] = 1
  for (int r = 0; r < m.rows(); ++r) {
    long long p = m.at(r, c1), q = m.at(r, c2);
    m.at(r, c1) = x * p + y * q;
    m.at(r, c2) = -v * p + u * q;
  }
  if (companion) {
    for (int r = 0; r < companion->rows(); ++r) {
      long long p = companion->at(r, c1), q = companion->at(r, c2);
      companion->at(r, c1) = x * p + y * q;
      companion->at(r, c2) = -v * p + u * q;
    }
  }
}

struct Echelon {
  IntMat b;                                // column echelon form of the input
  IntMat t;                                // unimodular transform, input * t = b
  std::vector<std::pair<int, int>> pivots; // (row, col), rows strictly increasing
};

// Column echelon form by unimodular column operations.
Echelon column_echelon(IntMat a) {
  Echelon e{a, IntMat::identity(a.cols()), {}};
  int lead = 0;
  for (int r = 0; r < e.b.rows() && lead < e.b.cols(); ++r) {
    int nz = -1;
    for (int c = lead; c < e.b.cols(); ++c) {
      if (e.b.at(r, c) != 0) {
        nz = c;
        break;
      }
    }
    if (nz < 0) continue;
    if (nz != lead) {
      e.b.swap_cols(lead, nz);
      e.t.swap_cols(lead, nz);
    }
    for (int c = lead + 1; c < e.b.cols(); ++c) gcd_cols(e.b, &e.t, r, lead, c);
    if (e.b.at(r, lead) < 0) {
      for (int i = 0; i < e.b.rows(); ++i) e.b.at(i, lead) = -e.b.at(i, lead);
      for (int i = 0; i < e.t.rows(); ++i) e.t.at(i, lead) = -e.t.at(i, lead);
    }
    e.pivots.emplace_back(r, lead);
    ++lead;
  }
  return e;
}

}  // namespace

IntMat::IntMat(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    assert(static_cast<int>(row.size()) == cols_);
    for (long long v : row) a_.push_back(v);
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMat::is_zero() const {
  for (long long v : a_)
    if (v != 0) return false;
  return true;
}

IntMat IntMat::block(int r0, int r1, int c0, int c1) const {
  IntMat m(r1 - r0, c1 - c0);
  for (int r = r0; r < r1; ++r)
    for (int c = c0; c < c1; ++c) m.at(r - r0, c - c0) = at(r, c);
  return m;
}

IntMat IntMat::without_row_col(int row, int col) const {
  IntMat m(rows_ - 1, cols_ - 1);
  for (int r = 0, rr = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (int c = 0, cc = 0; c < cols_; ++c) {
      if (c == col) continue;
      m.at(rr, cc) = at(r, c);
      ++cc;
    }
    ++rr;
  }
  return m;
}

void IntMat::swap_cols(int c1, int c2) {
  if (c1 == c2) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, c1), at(r, c2));
}

void IntMat::add_col(int dst, int src, long long m) {
  for (int r = 0; r < rows_; ++r) at(r, dst) += m * at(r, src);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  assert(a.cols() == b.rows());
  IntMat m(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      long long v = a.at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < b.cols(); ++c) m.at(r, c) += v * b.at(k, c);
    }
  return m;
}

IntMat hcat(const IntMat& a, const IntMat& b) {
  assert(a.rows() == b.rows() || a.cols() == 0 || b.cols() == 0);
  int rows = a.cols() == 0 ? b.rows() : a.rows();
  IntMat m(rows, a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
  return m;
}

int rank(IntMat a) {
  return static_cast<int>(column_echelon(std::move(a)).pivots.size());
}

IntMat kernel_basis(const IntMat& a) {
  Echelon e = column_echelon(a);
  int r = static_cast<int>(e.pivots.size());
  // Columns past the pivot block are zero in the echelon form; the matching
  // transform columns span the kernel.
  IntMat k(a.cols(), a.cols() - r);
  for (int c = r; c < a.cols(); ++c)
    for (int i = 0; i < a.cols(); ++i) k.at(i, c - r) = e.t.at(i, c);
  return k;
}

std::optional<std::vector<long long>> solve_integer(const IntMat& a, const std::vector<long long>& b) {
  assert(static_cast<int>(b.size()) == a.rows());
  Echelon e = column_echelon(a);
  std::vector<long long> y(a.cols(), 0);
  std::vector<long long> residual = b;
  for (auto [pr, pc] : e.pivots) {
    long long piv = e.b.at(pr, pc);
    if (residual[pr] % piv != 0) return std::nullopt;
    long long q = residual[pr] / piv;
    y[pc] = q;
    if (q != 0)
      for (int r = 0; r < a.rows(); ++r) residual[r] -= q * e.b.at(r, pc);
  }
  for (long long v : residual)
    if (v != 0) return std::nullopt;
  std::vector<long long> x(a.cols(), 0);
  for (int i = 0; i < a.cols(); ++i) {
    long long s = 0;
    for (int j = 0; j < a.cols(); ++j) s += e.t.at(i, j) * y[j];
    x[i] = s;
  }
  return x;
}

std::vector<long long> SmithForm::torsion() const {
  std::vector<long long> t;
  for (long long d : factors)
    if (d > 1) t.push_back(d);
  return t;
}

SmithForm smith(IntMat a) {
  int m = a.rows(), n = a.cols();
  SmithForm out;
  int t = 0;
  auto swap_rows = [&](int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < n; ++c) std::swap(a.at(r1, c), a.at(r2, c));
  };
  while (t < m && t < n) {
    // Locate the least nonzero absolute value in the trailing submatrix.
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        long long v = std::llabs(a.at(i, j));
        if (v != 0 && (pi < 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    swap_rows(t, pi);
    a.swap_cols(t, pj);

    bool dirty = false;
    for (int i = t + 1; i < m; ++i) {
      long long q = a.at(i, t) / a.at(t, t);
      if (q != 0)
        for (int c = t; c < n; ++c) a.at(i, c) -= q * a.at(t, c);
      if (a.at(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < n; ++j) {
      long long q = a.at(t, j) / a.at(t, t);
      if (q != 0) a.add_col(j, t, -q);
      if (a.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // smaller pivot now available, sweep again

    // Invariant-factor divisibility: fold any non-multiple into row t.
    bool fixed = false;
    for (int i = t + 1; i < m && !fixed; ++i)
      for (int j = t + 1; j < n && !fixed; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          for (int c = t; c < n; ++c) a.at(t, c) += a.at(i, c);
          fixed = true;
        }
    if (fixed) continue;

    out.factors.push_back(std::llabs(a.at(t, t)));
    ++t;
  }
  return out;
}

QuotientShape quotient_shape(const IntMat& basis_n, const IntMat& gens_d) {
  int k = basis_n.cols();
  IntMat coeffs(k, gens_d.cols());
  for (int c = 0; c < gens_d.cols(); ++c) {
    std::vector<long long> d(basis_n.rows());
    for (int r = 0; r < basis_n.rows(); ++r) d[r] = gens_d.at(r, c);
    auto sol = solve_integer(basis_n, d);
    if (!sol) throw std::logic_error("quotient_shape: generator outside the ambient lattice");
    for (int r = 0; r < k; ++r) coeffs.at(r, c) = (*sol)[r];
  }
  SmithForm s = smith(coeffs);
  return QuotientShape{k - s.rank(), s.torsion()};
}

}  // namespace ggs
