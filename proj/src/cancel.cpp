#include "ggs/cancel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ggs {

namespace {

std::string role_string(const GeneratorRef& g) { return g.label(); }

}  // namespace

GeneratorRef find_partner(const ChainComplex& cc, const GeneratorRef& hi, const GeneratorRef& lo) {
  int c = cc.position_of(hi);
  int r = cc.position_of(lo);
  if (c < 0 || r < 0) throw std::runtime_error("find_partner: generator not in the complex");
  if (cc.delta.at(r, c) == 0)
    throw std::runtime_error("find_partner: entry at (" + lo.label() + ", " + hi.label() + ") is zero");

  std::vector<int> mates;
  if (hi.k == 2) {
    for (int j = 0; j < cc.size(); ++j)
      if (j != c && cc.gens[j].k == 2 && cc.delta.at(r, j) != 0) mates.push_back(j);
  } else if (hi.k == 1) {
    for (int i = 0; i < cc.size(); ++i)
      if (i != r && cc.gens[i].k == 0 && cc.delta.at(i, c) != 0) mates.push_back(i);
  } else {
    throw std::runtime_error("find_partner: pivot column must have index 1 or 2");
  }
  if (mates.empty())
    throw std::runtime_error("find_partner: no partner for the pivot at (" + lo.label() + ", " +
                             hi.label() + "); lone entries cannot occur for orientable pairs");
  if (mates.size() > 1)
    throw std::runtime_error("find_partner: several partner candidates for the pivot at (" +
                             lo.label() + ", " + hi.label() + "); Thm 5.2 structure is violated");
  return cc.gens[mates[0]];
}

SuccessionResult succession(const SuccessionInput& in) {
  SuccessionResult out;

  Kind p = in.x1.kind;
  Kind q = in.x3.kind;
  switch (in.x2.kind.tag()) {
    case KindTag::Regular: {
      bool p_cone = in.x1_sheet_consumed && p.tag() == KindTag::Cone;
      bool q_cone = in.x3_sheet_consumed && q.tag() == KindTag::Cone;
      if (p_cone && q_cone)
        out.kind = Kind::wedge(Kind::cone(p.arity() - 1), Kind::cone(q.arity() - 1));
      else if (p_cone)
        out.kind = Kind::wedge(Kind::cone(p.arity() - 1), q);
      else if (q_cone)
        out.kind = Kind::wedge(Kind::cone(q.arity() - 1), p);
      else
        out.kind = Kind::concat(p, q);
      break;
    }
    case KindTag::Cone:
      out.kind = Kind::wedge(p, q);
      break;
    case KindTag::Double:
    case KindTag::CrossCap:
    case KindTag::Triple:
      out.kind = Kind::concat(p, Kind::concat(in.x2.kind, q));
      break;
    case KindTag::Wedge:
    case KindTag::Concat:
      out.kind = Kind::concat(p, Kind::concat(in.x2.kind, q));
      out.warnings.push_back("saddle host '" + in.x2.id + "' has mixed type " +
                             in.x2.kind.to_string() + "; spliced generically");
      break;
  }

  Nature w1 = remove_letter(in.x1.nature, in.cancelled_grade, in.x1_slot);
  Nature w2 = remove_letter(in.x2.nature, 1, in.x2_slot);
  out.nature = concat(concat(w1, w2), in.x3.nature);

  if (!out.kind.is_basic() && nature_numbers(out.nature)[1] > 0)
    out.warnings.push_back("successor of type " + out.kind.to_string() + " keeps saddle letters ('" +
                           nature_text(out.nature) + "'): a mixed-saddle flow");
  return out;
}

namespace {

std::string strip_primes(std::string id) {
  while (!id.empty() && id.back() == '\'') id.pop_back();
  return id;
}

std::string successor_name(const GGSPair& pair, const std::set<std::string>& consumed,
                           const std::string& preferred_host) {
  std::string base = strip_primes(preferred_host) + "'";
  while (true) {
    bool taken = false;
    for (const auto& s : pair.singularities)
      if (!consumed.count(s.id) && s.id == base) taken = true;
    if (!taken) return base;
    base += "'";
  }
}

}  // namespace

CancellationOutcome apply_cancellation(const GGSPair& pair, const ChainComplex& cc,
                                       const GeneratorRef& hi, const GeneratorRef& lo) {
  int c = cc.position_of(hi);
  int r = cc.position_of(lo);
  if (c < 0 || r < 0) throw std::runtime_error("apply_cancellation: generator not in the complex");
  long long v = cc.delta.at(r, c);
  if (v != 1 && v != -1)
    throw std::runtime_error("apply_cancellation: pivot at (" + lo.label() + ", " + hi.label() +
                             ") is " + std::to_string(v) + ", needs +1 or -1");
  if (hi.k != lo.k + 1) throw std::runtime_error("apply_cancellation: generators are not consecutive");

  GeneratorRef partner = find_partner(cc, hi, lo);
  int pp = cc.position_of(partner);
  long long pv = hi.k == 2 ? cc.delta.at(r, pp) : cc.delta.at(pp, c);
  if (pv != -v)
    throw std::runtime_error("apply_cancellation: partner entry " + std::to_string(pv) +
                             " does not oppose the pivot " + std::to_string(v));

  // Cancellation-theorem roles.
  bool high_case = hi.k == 2;
  const GeneratorRef& non_saddle = high_case ? hi : lo;
  const GeneratorRef& saddle = high_case ? lo : hi;
  std::string x1 = non_saddle.sing, x2 = saddle.sing, x3 = partner.sing;
  if (x1 == x2 || x1 == x3 || x2 == x3)
    throw std::runtime_error("apply_cancellation: the triple " + x1 + ", " + x2 + ", " + x3 +
                             " is degenerate; three distinct singularities are required");

  const Singularity* s1 = pair.find(x1);
  const Singularity* s2 = pair.find(x2);
  const Singularity* s3 = pair.find(x3);
  if (!s1 || !s2 || !s3) throw std::runtime_error("apply_cancellation: missing singularity record");

  SuccessionInput sin;
  sin.x1 = *s1;
  sin.x2 = *s2;
  sin.x3 = *s3;
  sin.cancelled_grade = non_saddle.k;
  sin.x1_slot = non_saddle.slot;
  sin.x2_slot = saddle.slot;
  bool regular_saddle = s2->kind.tag() == KindTag::Regular;
  sin.x1_sheet_consumed = regular_saddle && s1->kind.tag() == KindTag::Cone;
  sin.x3_sheet_consumed = regular_saddle && s3->kind.tag() == KindTag::Cone;
  SuccessionResult succ = succession(sin);

  std::set<std::string> consumed{x1, x2, x3};
  // The successor carries the saddle host's name when part of that
  // singularity survives the cancellation, else the cancelled end's.
  bool saddle_survives = s2->nature.word.size() > 1;
  std::string succ_id = successor_name(pair, consumed, saddle_survives ? x2 : x1);

  CancellationOutcome out;
  CancellationEvent& ev = out.event;
  ev.hi = hi;
  ev.lo = lo;
  ev.partner = partner;
  ev.pivot = static_cast<int>(v);
  ev.x1 = x1;
  ev.x2 = x2;
  ev.x3 = x3;
  ev.x1_kind = s1->kind;
  ev.x2_kind = s2->kind;
  ev.x3_kind = s3->kind;
  ev.x1_nature = s1->nature;
  ev.x2_nature = s2->nature;
  ev.x3_nature = s3->nature;
  ev.successor = succ_id;
  ev.successor_kind = succ.kind;
  ev.successor_nature = succ.nature;
  ev.warnings = succ.warnings;

  // Surviving generators, in order, with re-homing to the successor.
  std::map<GeneratorRef, GeneratorRef> renamed;
  std::array<int, 3> next_slot{1, 1, 1};
  ChainComplex& ncc = out.complex;
  ncc.orientable = cc.orientable;
  for (int i = 0; i < cc.size(); ++i) {
    if (i == r || i == c) continue;
    GeneratorRef g = cc.gens[i];
    if (consumed.count(g.sing)) {
      GeneratorRef ng{succ_id, g.k, next_slot[g.k]++};
      renamed[g] = ng;
      g = ng;
    } else {
      renamed[cc.gens[i]] = g;
    }
    ncc.gens.push_back(g);
  }

  std::array<int, 3> succ_eta = nature_numbers(succ.nature);
  for (int k = 0; k < 3; ++k)
    if (succ_eta[k] != next_slot[k] - 1)
      throw std::runtime_error("apply_cancellation: successor nature '" + nature_text(succ.nature) +
                               "' disagrees with its surviving generators in grade " +
                               std::to_string(k));

  // Matrix update: fold the cancelled generator's connections into the
  // partner (Thm 7.1 intersection relation), then drop both cancelled
  // positions entirely (each generator owns a row and a column of the
  // square matrix).
  IntMat merged = cc.delta;
  if (high_case) {
    for (int i = 0; i < cc.size(); ++i)
      if (i != r) merged.at(i, pp) += merged.at(i, c);
  } else {
    for (int j = 0; j < cc.size(); ++j)
      if (j != c) merged.at(pp, j) += merged.at(r, j);
  }
  ncc.delta = IntMat(cc.size() - 2, cc.size() - 2);
  {
    std::vector<int> keep;
    for (int i = 0; i < cc.size(); ++i)
      if (i != r && i != c) keep.push_back(i);
    for (size_t i = 0; i < keep.size(); ++i)
      for (size_t j = 0; j < keep.size(); ++j)
        ncc.delta.at(static_cast<int>(i), static_cast<int>(j)) = merged.at(keep[i], keep[j]);
  }

  // Pair bookkeeping: drop the three singularities, insert the successor at
  // the earliest of their declaration slots, rewire the surviving lines.
  GGSPair np;
  np.name = pair.name;
  np.orientable = pair.orientable;
  np.folds = pair.folds;
  int insert_at = static_cast<int>(pair.singularities.size());
  for (const auto& s : pair.singularities)
    if (consumed.count(s.id))
      insert_at = std::min(insert_at, pair.declaration_index(s.id));
  for (int i = 0; i < static_cast<int>(pair.singularities.size()); ++i) {
    if (i == insert_at) np.singularities.push_back(Singularity{succ_id, succ.kind, succ.nature, {}});
    if (!consumed.count(pair.singularities[i].id)) np.singularities.push_back(pair.singularities[i]);
  }
  np.folds.erase(std::remove_if(np.folds.begin(), np.folds.end(),
                                [&](const FoldArc& f) {
                                  return consumed.count(f.a) || consumed.count(f.b);
                                }),
                 np.folds.end());

  for (const auto& line : pair.lines) {
    FlowLine nl = line;
    bool touches_hi = line.src == hi || line.dst == hi;
    bool touches_lo = line.src == lo || line.dst == lo;
    if (high_case) {
      if (touches_lo) continue;                  // the saddle's row and column die with it
      if (line.src == hi) nl.src = partner;      // fold hi's other connections into the partner
    } else {
      if (touches_hi) continue;
      if (line.dst == lo) nl.dst = partner;
    }
    if (nl.src == hi || nl.dst == hi || nl.src == lo || nl.dst == lo) continue;
    auto remap = [&](GeneratorRef& g) {
      auto it = renamed.find(g);
      if (it != renamed.end()) g = it->second;
    };
    remap(nl.src);
    remap(nl.dst);
    np.lines.push_back(std::move(nl));
  }
  np.order = ncc.gens;
  out.pair = std::move(np);
  return out;
}

ReductionTrace run_to_core(const GGSPair& pair) {
  if (!pair.orientable)
    throw std::runtime_error("run_to_core needs the orientable flag: the cancellation order and "
                             "unit pivots come from Thm 5.2 structure");
  ReductionTrace trace;
  trace.initial_pair = pair;
  trace.initial_complex = build_complex(pair);

  SweepResult sweep = sssa(trace.initial_complex);
  std::vector<PivotMark> pivots;
  for (const auto& m : sweep.marks)
    if (m.type == MarkType::PrimaryPivot) pivots.push_back(m);
  // Diagonals in increasing order; within a diagonal the narrative order of
  // the paper, which runs the higher-index cancellation first.
  std::sort(pivots.begin(), pivots.end(), [](const PivotMark& a, const PivotMark& b) {
    if (a.r != b.r) return a.r < b.r;
    return a.col > b.col;
  });

  GGSPair cur_pair = pair;
  ChainComplex cur = trace.initial_complex;
  std::vector<int> cur_of_orig(cur.size());
  for (int i = 0; i < cur.size(); ++i) cur_of_orig[i] = i;

  for (const auto& piv : pivots) {
    int rr = cur_of_orig[piv.row];
    int cc_ = cur_of_orig[piv.col];
    if (rr < 0 || cc_ < 0)
      throw std::runtime_error("run_to_core: pivot cell resolved to a cancelled position");
    GeneratorRef lo = cur.gens[rr];
    GeneratorRef hi = cur.gens[cc_];
    if (cur.delta.at(rr, cc_) != piv.value)
      throw std::runtime_error("run_to_core: working matrix entry at (" + role_string(lo) + ", " +
                               role_string(hi) + ") is " + std::to_string(cur.delta.at(rr, cc_)) +
                               " but the sweep pivot is " + std::to_string(piv.value));

    CancellationOutcome step = apply_cancellation(cur_pair, cur, hi, lo);
    step.event.r = piv.r;
    step.event.orig_row = piv.row;
    step.event.orig_col = piv.col;

    for (int& cur_idx : cur_of_orig) {
      if (cur_idx < 0) continue;
      if (cur_idx == rr || cur_idx == cc_) {
        cur_idx = -1;
        continue;
      }
      cur_idx -= (cur_idx > rr ? 1 : 0) + (cur_idx > cc_ ? 1 : 0);
    }

    cur_pair = step.pair;
    cur = step.complex;
    trace.steps.push_back(ReductionStep{cur_pair, cur, step.event});
  }

  trace.core_flow = cur.delta.is_zero();
  return trace;
}

int total_singular_number(const GGSPair& pair) {
  int total = 0;
  for (const auto& s : pair.singularities) total += singular_number(s.kind);
  return total;
}

ValidationReport check_conservation(const ReductionTrace& trace) {
  ValidationReport rep;
  auto violate = [&rep](const std::string& code, const std::string& msg) {
    rep.violations.push_back(Violation{code, msg});
  };

  const GGSPair* prev_pair = &trace.initial_pair;
  const ChainComplex* prev_cc = &trace.initial_complex;
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& step = trace.steps[i];
    const CancellationEvent& ev = step.event;
    std::string where = "event " + std::to_string(i + 1);

    int lhs = singular_number(ev.successor_kind);
    int rhs = singular_number(ev.x1_kind) + singular_number(ev.x2_kind) + singular_number(ev.x3_kind);
    if (lhs != rhs)
      violate("singular-number", where + ": #s(" + ev.successor + ") = " + std::to_string(lhs) +
                                     " but the consumed triple sums to " + std::to_string(rhs));

    auto e1 = nature_numbers(ev.x1_nature);
    auto e2 = nature_numbers(ev.x2_nature);
    auto e3 = nature_numbers(ev.x3_nature);
    auto es = nature_numbers(ev.successor_nature);
    bool high_case = ev.hi.k == 2;
    for (int k = 0; k < 3; ++k) {
      int expect = e1[k] + e2[k] + e3[k];
      if (high_case && (k == 2 || k == 1)) expect -= 1;
      if (!high_case && (k == 1 || k == 0)) expect -= 1;
      if (es[k] != expect)
        violate("nature-number", where + ": eta_" + std::to_string(k) + "(" + ev.successor + ") = " +
                                     std::to_string(es[k]) + ", Cor 6.1 gives " + std::to_string(expect));
    }

    if (!(homology(*prev_cc) == homology(step.complex)))
      violate("homology", where + ": homology changed across the cancellation");

    if (prev_cc->size() - step.complex.size() != 2)
      violate("generator-count", where + ": generator count dropped by " +
                                     std::to_string(prev_cc->size() - step.complex.size()));
    int sing_drop = static_cast<int>(prev_pair->singularities.size()) -
                    static_cast<int>(step.pair.singularities.size());
    if (sing_drop != 2)
      violate("singularity-count", where + ": singularity count dropped by " + std::to_string(sing_drop));

    if (total_singular_number(*prev_pair) != total_singular_number(step.pair))
      violate("singular-number-total", where + ": total #s changed across the cancellation");

    prev_pair = &step.pair;
    prev_cc = &step.complex;
  }
  return rep;
}

}  // namespace ggs
