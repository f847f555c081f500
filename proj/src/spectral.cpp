#include "ggs/spectral.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ggs {

namespace {

void require_swept_form(const ChainComplex& cc) {
  for (int r = 0; r < cc.size(); ++r)
    for (int c = 0; c <= r; ++c)
      if (cc.delta.at(r, c) != 0)
        throw std::runtime_error("matrix is not strictly upper triangular at (" +
                                 std::to_string(r) + "," + std::to_string(c) + ")");
  if (!(cc.delta * cc.delta).is_zero()) throw std::runtime_error("Delta^2 != 0");
}

}  // namespace

Filtration finest_filtration(const ChainComplex& cc) { return Filtration{cc.gens}; }

Filtration finest_filtration(const ChainComplex& cc, const std::vector<GeneratorRef>& order) {
  if (order.size() != cc.gens.size())
    throw std::runtime_error("filtration order lists " + std::to_string(order.size()) +
                             " generators, the complex has " + std::to_string(cc.gens.size()));
  for (size_t i = 0; i + 1 < order.size(); ++i)
    if (order[i].k > order[i + 1].k)
      throw std::runtime_error("filtration order is not grading-compatible: " + order[i].label() +
                               " precedes " + order[i + 1].label());
  for (const auto& g : order)
    if (cc.position_of(g) < 0)
      throw std::runtime_error("filtration order names unknown generator " + g.label());
  for (const auto& g : cc.gens)
    if (std::find(order.begin(), order.end(), g) == order.end())
      throw std::runtime_error("filtration order is missing " + g.label());
  return Filtration{order};
}

ChainComplex apply_filtration(const ChainComplex& cc, const Filtration& f) {
  ChainComplex out;
  out.orientable = cc.orientable;
  out.gens = f.order;
  int n = cc.size();
  out.delta = IntMat(n, n);
  std::vector<int> old_pos(n);
  for (int i = 0; i < n; ++i) old_pos[i] = cc.position_of(f.order[i]);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.delta.at(r, c) = cc.delta.at(old_pos[r], old_pos[c]);
  return out;
}

SweepResult sssa(const ChainComplex& cc, int r_max) {
  require_swept_form(cc);
  int n = cc.size();
  if (r_max < 0) r_max = n;

  SweepResult out;
  IntMat m = cc.delta;
  std::vector<int> pivot_in_row(n, -1);
  std::vector<bool> pivot_col(n, false);
  std::vector<int> covered(n, r_max + 2);  // first diagonal whose pivot touches position p

  for (int r = 1; r <= r_max; ++r) {
    for (int j = r; j < n; ++j) {
      int i = j - r;
      long long v = m.at(i, j);
      if (v == 0) continue;
      if (pivot_in_row[i] < 0 && !pivot_col[j]) {
        out.marks.push_back(PivotMark{r, i, j, MarkType::PrimaryPivot, v});
        pivot_in_row[i] = j;
        pivot_col[j] = true;
        covered[i] = std::min(covered[i], r);
        covered[j] = std::min(covered[j], r);
        out.diffs.push_back(DifferentialRecord{r, j, static_cast<int>(v)});
      } else if (pivot_in_row[i] >= 0) {
        int j2 = pivot_in_row[i];
        long long pv = m.at(i, j2);
        if (pv == 0 || v % pv != 0)
          throw std::runtime_error("sweep: change-of-basis quotient " + std::to_string(v) + "/" +
                                   std::to_string(pv) + " at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") is not an integer");
        out.marks.push_back(PivotMark{r, i, j, MarkType::ChangeOfBasis, v});
        m.add_col(j, j2, -(v / pv));
      }
      // A column already holding a primary pivot is left in place.
    }
    out.history.push_back(m);
  }
  out.final_matrix = m;

  for (int r = 0; r <= r_max; ++r) {
    Page page;
    page.r = r;
    page.entries.resize(n);
    for (int p = 0; p < n; ++p) page.entries[p].rank = covered[p] <= r - 1 ? 0 : 1;
    out.pages.push_back(std::move(page));
  }
  return out;
}

namespace {

// Oracle-side lattice bookkeeping. All lattices are given by generator
// columns inside Z^n; cycle lattices come out of kernel_basis and so are
// honest bases of saturated sublattices.
struct OracleContext {
  const IntMat& delta;
  int n;
  std::map<std::pair<int, int>, IntMat> cache;

  // Z^r_p = {x in F_p : Delta x in F_{p-r}} (F_q = first q+1 coordinates,
  // all of C once q >= n-1, zero once q < 0).
  const IntMat& cycles(int p, int r) {
    int cols = std::clamp(p + 1, 0, n);
    int row_start = std::clamp(p - r + 1, 0, n);  // rows >= row_start of Delta x must vanish
    auto key = std::make_pair(cols, row_start);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    IntMat z(n, 0);
    if (cols > 0) {
      IntMat constraint = delta.block(row_start, n, 0, cols);
      IntMat k = kernel_basis(constraint);
      z = IntMat(n, k.cols());
      for (int i = 0; i < cols; ++i)
        for (int c = 0; c < k.cols(); ++c) z.at(i, c) = k.at(i, c);
    }
    return cache.emplace(key, std::move(z)).first->second;
  }

  // Denominator lattice Z^{r-1}_{p-1} + Delta Z^{r-1}_{p+r-1}.
  IntMat denominator(int p, int r) {
    const IntMat& za = cycles(p - 1, r - 1);
    const IntMat& zb = cycles(p + r - 1, r - 1);
    IntMat image = delta * zb;
    return hcat(za, image);
  }

  // Lattice element with coordinate p equal to 1 (the canonical class
  // representative of the position-p generator), if one exists.
  std::optional<std::vector<long long>> leading_rep(const IntMat& basis, int p) {
    IntMat row(1, basis.cols());
    for (int c = 0; c < basis.cols(); ++c) row.at(0, c) = basis.at(p, c);
    auto coeff = solve_integer(row, {1});
    if (!coeff) return std::nullopt;
    std::vector<long long> x(n, 0);
    for (int i = 0; i < n; ++i) {
      long long s = 0;
      for (int c = 0; c < basis.cols(); ++c) s += basis.at(i, c) * (*coeff)[c];
      x[i] = s;
    }
    return x;
  }
};

}  // namespace

OracleResult oracle_pages(const ChainComplex& cc, int r_max) {
  require_swept_form(cc);
  int n = cc.size();
  if (r_max < 0) r_max = n;
  OracleResult out;
  OracleContext ctx{cc.delta, n, {}};

  Page page0;
  page0.r = 0;
  page0.entries.assign(n, PageEntry{1, false});
  out.pages.push_back(std::move(page0));

  for (int r = 1; r <= r_max; ++r) {
    Page page;
    page.r = r;
    page.entries.resize(n);
    for (int p = 0; p < n; ++p) {
      QuotientShape q = quotient_shape(ctx.cycles(p, r), ctx.denominator(p, r));
      page.entries[p].rank = q.free_rank;
      page.entries[p].torsion = !q.torsion.empty();
    }

    for (int p = r; p < n; ++p) {
      int t = p - r;
      if (page.entries[p].rank == 0 || page.entries[t].rank == 0) continue;
      IntMat dt = ctx.denominator(t, r);
      IntMat image = cc.delta * ctx.cycles(p, r);
      if (rank(hcat(image, dt)) <= rank(dt)) continue;

      DifferentialRecord rec{r, p, std::nullopt};
      auto x = ctx.leading_rep(ctx.cycles(p, r), p);
      auto y = ctx.leading_rep(ctx.cycles(t, r), t);
      if (x && y) {
        std::vector<long long> dx(n, 0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) dx[i] += cc.delta.at(i, j) * (*x)[j];
        IntMat span = dt;
        IntMat ycol(n, 1);
        for (int i = 0; i < n; ++i) ycol.at(i, 0) = (*y)[i];
        IntMat sys = hcat(span, ycol);
        if (auto sol = solve_integer(sys, dx))
          rec.value = static_cast<int>((*sol)[sys.cols() - 1]);
      }
      out.diffs.push_back(rec);
    }
    out.pages.push_back(std::move(page));
  }
  return out;
}

namespace {

std::string dump_pages(const std::vector<Page>& pages, int r) {
  std::ostringstream os;
  for (const auto& page : pages) {
    if (page.r != r && page.r != r - 1) continue;
    os << "  E^" << page.r << ":";
    for (const auto& e : page.entries) os << " " << e.rank;
    os << "\n";
  }
  return os.str();
}

}  // namespace

CrossValidation cross_validate(const ChainComplex& cc, int r_max) {
  if (r_max < 0) r_max = cc.size();
  SweepResult sweep = sssa(cc, r_max);
  OracleResult oracle = oracle_pages(cc, r_max);

  for (int r = 0; r <= r_max; ++r) {
    for (int p = 0; p < cc.size(); ++p) {
      const PageEntry& a = sweep.pages[r].entries[p];
      const PageEntry& b = oracle.pages[r].entries[p];
      if (a.rank != b.rank || b.torsion) {
        std::ostringstream os;
        os << "page E^" << r << " position " << p << ": sweep rank " << a.rank << ", oracle rank "
           << b.rank << (b.torsion ? " with torsion" : "") << "\n"
           << "sweep:\n" << dump_pages(sweep.pages, r) << "oracle:\n" << dump_pages(oracle.pages, r);
        return CrossValidation{false, os.str()};
      }
    }
  }

  auto key = [](const DifferentialRecord& d) { return std::make_pair(d.r, d.p); };
  auto sorted = [&](std::vector<DifferentialRecord> v) {
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return v;
  };
  std::vector<DifferentialRecord> sd = sorted(sweep.diffs);
  std::vector<DifferentialRecord> od = sorted(oracle.diffs);
  if (sd.size() != od.size()) {
    std::ostringstream os;
    os << "sweep found " << sd.size() << " nonzero differentials, oracle " << od.size();
    return CrossValidation{false, os.str()};
  }
  for (size_t i = 0; i < sd.size(); ++i) {
    if (key(sd[i]) != key(od[i])) {
      std::ostringstream os;
      os << "differential mismatch: sweep d^" << sd[i].r << "_" << sd[i].p << " vs oracle d^"
         << od[i].r << "_" << od[i].p;
      return CrossValidation{false, os.str()};
    }
    if (sd[i].value && od[i].value && *sd[i].value != *od[i].value) {
      std::ostringstream os;
      os << "differential d^" << sd[i].r << "_" << sd[i].p << " value mismatch: sweep "
         << *sd[i].value << ", oracle " << *od[i].value;
      return CrossValidation{false, os.str()};
    }
  }
  return CrossValidation{};
}

std::array<int, 3> einf_ranks_by_grade(const ChainComplex& cc, const SweepResult& sweep) {
  std::array<int, 3> ranks{0, 0, 0};
  const Page& last = sweep.pages.back();
  for (int p = 0; p < cc.size(); ++p)
    if (last.entries[p].rank > 0) ranks[cc.grade(p)] += last.entries[p].rank;
  return ranks;
}

}  // namespace ggs
