#include "ggs/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace ggs {

namespace {

std::string pad(const std::string& s, size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace

std::string render_matrix(const ChainComplex& cc) {
  int n = cc.size();
  size_t w = 2;
  std::vector<std::string> labels;
  for (const auto& g : cc.gens) {
    labels.push_back(g.label());
    w = std::max(w, labels.back().size());
  }
  std::ostringstream os;
  os << pad("", w + 1) << "|";
  for (int c = 0; c < n; ++c) os << " " << pad(labels[c], w);
  os << "\n" << std::string(w + 2 + (w + 1) * n, '-') << "\n";
  for (int r = 0; r < n; ++r) {
    os << pad(labels[r], w + 1) << "|";
    for (int c = 0; c < n; ++c) {
      long long v = cc.delta.at(r, c);
      std::string cell = v > 0 ? "+" + std::to_string(v) : std::to_string(v);
      if (v == 0) cell = "0";
      os << " " << pad(cell, w);
    }
    os << "\n";
  }
  return os.str();
}

std::string render_pages(const ChainComplex& cc, const std::vector<Page>& pages,
                         const std::vector<DifferentialRecord>& diffs) {
  std::ostringstream os;
  int n = cc.size();
  os << pad("p:", 7);
  for (int p = 0; p < n; ++p) os << std::setw(4) << p;
  os << "\n";
  for (size_t i = 0; i < pages.size(); ++i) {
    bool changed = i == 0 || !(pages[i].entries == pages[i - 1].entries);
    bool last = i + 1 == pages.size();
    if (!changed && !last) continue;  // skip the stabilized middle, keep the final page
    os << pad("E^" + std::to_string(pages[i].r) + ":", 7);
    for (const auto& e : pages[i].entries) os << std::setw(4) << (e.torsion ? "T" : (e.rank ? "Z" : "0"));
    os << "\n";
  }
  for (const auto& d : diffs) {
    os << "d^" << d.r << "_" << d.p << ": p=" << d.p << " -> p=" << d.p - d.r;
    if (d.value) os << "  (" << (*d.value > 0 ? "+" : "") << *d.value << ")";
    os << "\n";
  }
  return os.str();
}

std::string render_homology(const HomologyResult& h) {
  std::ostringstream os;
  for (int k = 0; k < 3; ++k) {
    os << "H_" << k << " = ";
    std::string part;
    if (h.betti[k] == 1)
      part = "Z";
    else if (h.betti[k] > 1)
      part = "Z^" + std::to_string(h.betti[k]);
    for (long long t : h.torsion[k]) {
      if (!part.empty()) part += " + ";
      part += "Z/" + std::to_string(t);
    }
    os << (part.empty() ? "0" : part) << "\n";
  }
  return os.str();
}

std::string render_report(const ValidationReport& rep) {
  std::ostringstream os;
  if (rep.ok() && rep.warnings.empty()) {
    os << "ok\n";
    return os.str();
  }
  for (const auto& v : rep.violations) os << "violation [" << v.code << "] " << v.message << "\n";
  for (const auto& w : rep.warnings) os << "warning   [" << w.code << "] " << w.message << "\n";
  return os.str();
}

std::string render_trace(const ReductionTrace& trace) {
  std::ostringstream os;
  os << "initial matrix (" << trace.initial_complex.size() << " generators):\n"
     << render_matrix(trace.initial_complex) << "\n";
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const CancellationEvent& e = trace.steps[i].event;
    os << "step " << i + 1 << " (diagonal r=" << e.r << "): cancel " << e.hi.label() << " with "
       << e.lo.label() << ", partner " << e.partner.label() << " (pivot "
       << (e.pivot > 0 ? "+1" : "-1") << ")\n";
    os << "  consumed " << e.x1 << ", " << e.x2 << ", " << e.x3 << " -> successor " << e.successor
       << " of type " << e.successor_kind.to_string() << " with nature "
       << nature_text(e.successor_nature) << "\n";
    for (const auto& w : e.warnings) os << "  warning: " << w << "\n";
    os << render_matrix(trace.steps[i].complex) << "\n";
  }
  os << (trace.core_flow ? "core flow reached\n" : "matrix not exhausted\n");
  return os.str();
}

std::string trace_dot(const ReductionTrace& trace) {
  std::ostringstream os;
  os << "digraph trace {\n";
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const CancellationEvent& e = trace.steps[i].event;
    std::string ev = "event" + std::to_string(i + 1);
    os << "  \"" << ev << "\" [shape=box,label=\"r=" << e.r << "\\n" << e.hi.label() << " / "
       << e.lo.label() << "\"];\n";
    for (const std::string& x : {e.x1, e.x2, e.x3})
      os << "  \"" << x << "\" -> \"" << ev << "\";\n";
    os << "  \"" << ev << "\" -> \"" << e.successor << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ggs
