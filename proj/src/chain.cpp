#include "ggs/chain.hpp"

#include <stdexcept>

namespace ggs {

int ChainComplex::position_of(const GeneratorRef& g) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == g) return static_cast<int>(i);
  return -1;
}

std::pair<int, int> ChainComplex::grade_span(int k) const {
  int lo = 0;
  while (lo < size() && grade(lo) < k) ++lo;
  int hi = lo;
  while (hi < size() && grade(hi) == k) ++hi;
  return {lo, hi};
}

int line_contribution(const FlowLine& line, const GGSPair& pair) {
  if (line.part == LinePart::Fold) {
    if (line.lifts.size() != 2)
      throw std::runtime_error("line '" + line.id + "': a fold line needs an ordered sign pair");
    return line.lifts[0] + line.lifts[1];
  }
  if (is_saddle_cone(pair, line.src) || is_saddle_cone(pair, line.dst)) {
    if (line.lifts.size() != 2)
      throw std::runtime_error("line '" + line.id + "': a saddle-cone connection needs two signs");
    return line.lifts[0] == line.lifts[1] ? line.lifts[0] : 0;
  }
  if (line.lifts.size() != 1)
    throw std::runtime_error("line '" + line.id + "': a regular line carries one sign");
  return line.lifts[0];
}

int intersection_number(const GGSPair& pair, const GeneratorRef& hi, const GeneratorRef& lo) {
  if (hi.k != lo.k + 1)
    throw std::runtime_error("intersection number needs consecutive indices, got " + hi.label() +
                             " and " + lo.label());
  int n = 0;
  for (const auto& line : pair.lines)
    if (line.src == hi && line.dst == lo) n += line_contribution(line, pair);
  return n;
}

ChainComplex build_complex(const GGSPair& pair) {
  ValidationReport rep = validate_condition_h(pair);
  if (!rep.ok()) {
    std::string msg = "pair '" + pair.name + "' fails validation:";
    for (const auto& v : rep.violations) msg += "\n  [" + v.code + "] " + v.message;
    throw std::runtime_error(msg);
  }

  ChainComplex cc;
  cc.orientable = pair.orientable;
  std::vector<GeneratorRef> all = generators(pair);
  if (pair.order.empty()) {
    cc.gens = all;
  } else {
    if (pair.order.size() != all.size())
      throw std::runtime_error("declared order lists " + std::to_string(pair.order.size()) +
                               " generators, the pair has " + std::to_string(all.size()));
    std::vector<GeneratorRef> sorted = pair.order;
    for (const auto& g : all) {
      bool found = false;
      for (const auto& o : sorted)
        if (o == g) found = true;
      if (!found) throw std::runtime_error("declared order is missing " + g.label());
    }
    for (size_t i = 0; i + 1 < pair.order.size(); ++i)
      if (pair.order[i].k > pair.order[i + 1].k)
        throw std::runtime_error("declared order is not grading-compatible: " +
                                 pair.order[i].label() + " precedes " + pair.order[i + 1].label());
    cc.gens = pair.order;
  }

  int n = cc.size();
  cc.delta = IntMat(n, n);
  for (int col = 0; col < n; ++col) {
    if (cc.gens[col].k == 0) continue;
    for (int row = 0; row < n; ++row) {
      if (cc.gens[row].k != cc.gens[col].k - 1) continue;
      cc.delta.at(row, col) = intersection_number(pair, cc.gens[col], cc.gens[row]);
    }
  }
  return cc;
}

D2Check check_d2(const ChainComplex& cc) {
  IntMat sq = cc.delta * cc.delta;
  for (int r = 0; r < sq.rows(); ++r)
    for (int c = 0; c < sq.cols(); ++c)
      if (sq.at(r, c) != 0) return D2Check{false, std::make_pair(r, c)};
  return D2Check{};
}

ValidationReport check_structure(const ChainComplex& cc) {
  ValidationReport rep;
  auto violate = [&rep](const std::string& code, const std::string& msg) {
    rep.violations.push_back(Violation{code, msg});
  };
  int n = cc.size();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      long long v = cc.delta.at(r, c);
      if (v < -1 || v > 1)
        violate("entry-range", "entry " + std::to_string(v) + " at (" + cc.gens[r].label() + ", " +
                                   cc.gens[c].label() + ") outside {-1,0,1} (Thm 5.2(a))");
    }

  for (int c = 0; c < n; ++c) {
    if (cc.gens[c].k != 1) continue;
    std::vector<long long> nz;
    for (int r = 0; r < n; ++r)
      if (cc.gens[r].k == 0 && cc.delta.at(r, c) != 0) nz.push_back(cc.delta.at(r, c));
    if (!nz.empty() && !(nz.size() == 2 && nz[0] + nz[1] == 0))
      violate("delta1-column", "Delta_1 column of " + cc.gens[c].label() +
                                   " is neither zero nor a {-1,+1} pair (Thm 5.2(b))");
  }
  for (int r = 0; r < n; ++r) {
    if (cc.gens[r].k != 1) continue;
    std::vector<long long> nz;
    for (int c = 0; c < n; ++c)
      if (cc.gens[c].k == 2 && cc.delta.at(r, c) != 0) nz.push_back(cc.delta.at(r, c));
    if (!nz.empty() && !(nz.size() == 2 && nz[0] + nz[1] == 0))
      violate("delta2-row", "Delta_2 row of " + cc.gens[r].label() +
                                " is neither zero nor a {-1,+1} pair (Thm 5.2(c))");
  }
  return rep;
}

HomologyResult homology(const ChainComplex& cc) {
  auto span0 = cc.grade_span(0);
  auto span1 = cc.grade_span(1);
  auto span2 = cc.grade_span(2);
  IntMat d1 = cc.delta.block(span0.first, span0.second, span1.first, span1.second);
  IntMat d2 = cc.delta.block(span1.first, span1.second, span2.first, span2.second);

  SmithForm s1 = smith(d1);
  SmithForm s2 = smith(d2);
  int n0 = span0.second - span0.first;
  int n1 = span1.second - span1.first;
  int n2 = span2.second - span2.first;

  HomologyResult h;
  h.betti[0] = n0 - s1.rank();
  h.betti[1] = n1 - s1.rank() - s2.rank();
  h.betti[2] = n2 - s2.rank();
  h.torsion[0] = s1.torsion();  // torsion of H_k comes from Delta_{k+1}
  h.torsion[1] = s2.torsion();
  return h;
}

ValidationReport check_lemma_cone(const ChainComplex& cc, const GGSPair& pair) {
  ValidationReport rep;
  int n = cc.size();
  for (int m = 0; m < n; ++m) {
    const GeneratorRef& g = cc.gens[m];
    if (g.k != 1 || !is_saddle_cone(pair, g)) continue;
    for (int c = 0; c < n; ++c) {
      if (cc.gens[c].k != 2) continue;
      long long up = cc.delta.at(m, c);
      if (up == 0) continue;
      for (int r = 0; r < n; ++r) {
        if (cc.gens[r].k != 0) continue;
        long long down = cc.delta.at(r, m);
        if (up * down != 0)
          rep.violations.push_back(Violation{
              "lemma-cone", "n(" + cc.gens[c].label() + ", " + g.label() + ") * n(" + g.label() +
                                ", " + cc.gens[r].label() + ") = " + std::to_string(up * down) +
                                " through saddle cone " + g.sing});
      }
    }
  }
  return rep;
}

}  // namespace ggs
