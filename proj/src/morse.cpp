#include "ggs/morse.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ggs {

MorseExpansion expand(const GGSPair& pair) {
  MorseExpansion out;
  std::map<std::string, int> copies;

  for (const auto& g : generators(pair)) {
    const Singularity* s = pair.find(g.sing);
    if (!s) throw std::runtime_error("expand: unknown singularity '" + g.sing + "'");
    if (g.k != 1 && s->kind.contains(KindTag::CrossCap) && !s->lift_count) {
      int incident_folds = 0;
      for (const auto& line : pair.lines)
        if (line.part == LinePart::Fold && (line.src == g || line.dst == g)) ++incident_folds;
      if (incident_folds >= 2)
        throw std::runtime_error("expand: cross-cap singularity '" + g.sing +
                                 "' sits on several folds; the lift multiplicity is ambiguous, "
                                 "declare lifts=<n> on it");
    }
    int n = lift_copies(pair, g);
    copies[g.address()] = n;
    for (int c = 0; c < n; ++c) {
      CriticalPoint p;
      p.name = g.address() + "#" + std::to_string(c + 1);
      p.index = g.k;
      p.gen = g;
      p.copy = c;
      out.lift.lifts[g.address()].push_back(static_cast<int>(out.graph.points.size()));
      out.graph.points.push_back(std::move(p));
    }
  }

  auto point_at = [&](const GeneratorRef& g, int copy) {
    return out.lift.lifts.at(g.address())[copy];
  };

  for (const auto& line : pair.lines) {
    auto src_it = out.lift.lifts.find(line.src.address());
    auto dst_it = out.lift.lifts.find(line.dst.address());
    if (src_it == out.lift.lifts.end() || dst_it == out.lift.lifts.end())
      throw std::runtime_error("expand: line '" + line.id + "' references a missing generator");
    int nsrc = static_cast<int>(src_it->second.size());
    int ndst = static_cast<int>(dst_it->second.size());
    for (size_t j = 0; j < line.lifts.size(); ++j) {
      MorseEdge e;
      e.src = point_at(line.src, std::min<int>(static_cast<int>(j), nsrc - 1));
      e.dst = point_at(line.dst, std::min<int>(static_cast<int>(j), ndst - 1));
      e.sign = line.lifts[j];
      e.line_id = line.id;
      e.lift_index = static_cast<int>(j);
      out.graph.edges.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<int> morse_point_order(const MorseGraph& graph) {
  std::vector<int> order(graph.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (graph.points[a].index != graph.points[b].index)
      return graph.points[a].index < graph.points[b].index;
    return graph.points[a].name < graph.points[b].name;
  });
  return order;
}

IntMat morse_boundary(const MorseGraph& graph) {
  std::vector<int> order = morse_point_order(graph);
  std::vector<int> pos(graph.points.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  IntMat m(static_cast<int>(graph.points.size()), static_cast<int>(graph.points.size()));
  for (const auto& e : graph.edges) m.at(pos[e.dst], pos[e.src]) += e.sign;
  return m;
}

ValidationReport validate_lift(const GGSPair& pair, const MorseGraph& graph, const LiftMap& lift) {
  ValidationReport rep;
  auto violate = [&rep](const std::string& code, const std::string& msg) {
    rep.violations.push_back(Violation{code, msg});
  };

  IntMat d = morse_boundary(graph);
  IntMat sq = d * d;
  if (!sq.is_zero()) {
    for (int r = 0; r < sq.rows() && rep.violations.empty(); ++r)
      for (int c = 0; c < sq.cols(); ++c)
        if (sq.at(r, c) != 0) {
          violate("morse-d2",
                  "(d^m)^2 has entry " + std::to_string(sq.at(r, c)) + " at (" +
                      std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
          break;
        }
  }

  if (pair.orientable) {
    for (size_t i = 0; i < graph.points.size(); ++i) {
      if (graph.points[i].index != 1) continue;
      std::vector<int> in, out_signs;
      for (const auto& e : graph.edges) {
        if (e.src == static_cast<int>(i)) out_signs.push_back(e.sign);
        if (e.dst == static_cast<int>(i)) in.push_back(e.sign);
      }
      auto check = [&](const std::vector<int>& signs, const char* side) {
        if (signs.size() > 2)
          violate("saddle-degree", "saddle " + graph.points[i].name + " has " +
                                       std::to_string(signs.size()) + " " + side + " separatrices");
        else if (signs.size() == 2 && signs[0] + signs[1] != 0)
          violate("saddle-signs", "saddle " + graph.points[i].name + " has equal-signed " +
                                      std::string(side) + " separatrices under the orientable flag");
      };
      check(out_signs, "unstable");
      check(in, "stable");
    }
  }

  std::vector<int> owner(graph.points.size(), -1);
  int set_index = 0;
  for (const auto& [addr, pts] : lift.lifts) {
    if (pts.empty()) violate("lift-empty", "generator " + addr + " lifts to no critical point");
    for (int p : pts) {
      if (p < 0 || p >= static_cast<int>(graph.points.size())) {
        violate("lift-range", "generator " + addr + " lifts to a missing point");
        continue;
      }
      if (owner[p] != -1)
        violate("round-trip", "critical point " + graph.points[p].name +
                                  " is the lift of two generators; the projection is not single-valued");
      owner[p] = set_index;
      if (graph.points[p].gen.address() != addr)
        violate("round-trip", "projection of " + graph.points[p].name + " is " +
                                  graph.points[p].gen.address() + ", not " + addr);
    }
    ++set_index;
  }
  return rep;
}

std::string morse_dot(const MorseGraph& graph) {
  std::ostringstream os;
  os << "digraph morse {\n";
  for (const auto& p : graph.points)
    os << "  \"" << p.name << "\" [label=\"" << p.name << "\\nindex " << p.index << "\"];\n";
  for (const auto& e : graph.edges)
    os << "  \"" << graph.points[e.src].name << "\" -> \"" << graph.points[e.dst].name
       << "\" [label=\"" << (e.sign > 0 ? "+1" : "-1") << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace ggs
