#include "ggs/json_io.hpp"

namespace ggs {

using nlohmann::json;

namespace {

json gen_to_json(const GeneratorRef& g) { return g.address(); }

json page_to_json(const Page& page) {
  json entries = json::array();
  for (const auto& e : page.entries) {
    if (e.torsion)
      entries.push_back("torsion");
    else
      entries.push_back(e.rank);
  }
  return json{{"r", page.r}, {"entries", entries}};
}

json diffs_to_json(const std::vector<DifferentialRecord>& diffs) {
  json out = json::array();
  for (const auto& d : diffs) {
    json rec{{"r", d.r}, {"p", d.p}, {"target", d.p - d.r}};
    if (d.value) rec["value"] = *d.value;
    out.push_back(rec);
  }
  return out;
}

}  // namespace

json pair_to_json(const GGSPair& pair) {
  json sings = json::array();
  for (const auto& s : pair.singularities) {
    json js{{"id", s.id}, {"kind", s.kind.to_string()}, {"nature", nature_text(s.nature)}};
    if (s.lift_count) js["lifts"] = *s.lift_count;
    sings.push_back(js);
  }
  json lines = json::array();
  for (const auto& l : pair.lines)
    lines.push_back(json{{"id", l.id},
                         {"src", l.src.address()},
                         {"dst", l.dst.address()},
                         {"part", l.part == LinePart::Fold ? "fold" : "regular"},
                         {"lifts", l.lifts}});
  json folds = json::array();
  for (const auto& f : pair.folds) folds.push_back(json::array({f.a, f.b}));
  json order = json::array();
  for (const auto& g : pair.order) order.push_back(gen_to_json(g));
  return json{{"pair", pair.name},     {"orientable", pair.orientable}, {"singularities", sings},
              {"lines", lines},        {"folds", folds},                {"order", order}};
}

GGSPair pair_from_json(const json& j) {
  GGSPair pair;
  pair.name = j.at("pair").get<std::string>();
  pair.orientable = j.value("orientable", false);
  for (const auto& js : j.at("singularities")) {
    Singularity s;
    s.id = js.at("id").get<std::string>();
    s.kind = parse_kind(js.at("kind").get<std::string>());
    s.nature = parse_nature(js.at("nature").get<std::string>());
    if (js.contains("lifts")) s.lift_count = js.at("lifts").get<int>();
    pair.singularities.push_back(std::move(s));
  }
  for (const auto& jl : j.at("lines")) {
    FlowLine l;
    l.id = jl.at("id").get<std::string>();
    l.src = parse_generator_ref(jl.at("src").get<std::string>());
    l.dst = parse_generator_ref(jl.at("dst").get<std::string>());
    l.part = jl.at("part").get<std::string>() == "fold" ? LinePart::Fold : LinePart::Regular;
    l.lifts = jl.at("lifts").get<std::vector<int>>();
    pair.lines.push_back(std::move(l));
  }
  for (const auto& jf : j.value("folds", json::array()))
    pair.folds.push_back(FoldArc{jf.at(0).get<std::string>(), jf.at(1).get<std::string>()});
  for (const auto& jg : j.value("order", json::array()))
    pair.order.push_back(parse_generator_ref(jg.get<std::string>()));
  return pair;
}

json matrix_to_json(const IntMat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(row);
  }
  return rows;
}

IntMat matrix_from_json(const json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  IntMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = j.at(r).at(c).get<long long>();
  return m;
}

json complex_to_json(const ChainComplex& cc) {
  json labels = json::array();
  for (const auto& g : cc.gens) labels.push_back(json{{"address", g.address()}, {"label", g.label()}});
  return json{{"generators", labels},
              {"matrix", matrix_to_json(cc.delta)},
              {"orientable", cc.orientable}};
}

json report_to_json(const ValidationReport& rep) {
  auto list = [](const std::vector<Violation>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(json{{"code", x.code}, {"message", x.message}});
    return out;
  };
  return json{{"ok", rep.ok()}, {"violations", list(rep.violations)}, {"warnings", list(rep.warnings)}};
}

json homology_to_json(const HomologyResult& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) torsion.push_back(t);
  return json{{"betti", h.betti}, {"torsion", torsion}};
}

json sweep_to_json(const ChainComplex& cc, const SweepResult& sweep) {
  json pages = json::array();
  for (const auto& p : sweep.pages) pages.push_back(page_to_json(p));
  json marks = json::array();
  for (const auto& m : sweep.marks)
    marks.push_back(json{{"r", m.r},
                         {"row", m.row},
                         {"col", m.col},
                         {"row_label", cc.gens[m.row].label()},
                         {"col_label", cc.gens[m.col].label()},
                         {"type", m.type == MarkType::PrimaryPivot ? "primary" : "change-of-basis"},
                         {"value", m.value}});
  return json{{"pages", pages}, {"differentials", diffs_to_json(sweep.diffs)}, {"marks", marks}};
}

json oracle_to_json(const ChainComplex& cc, const OracleResult& oracle) {
  (void)cc;
  json pages = json::array();
  for (const auto& p : oracle.pages) pages.push_back(page_to_json(p));
  return json{{"pages", pages}, {"differentials", diffs_to_json(oracle.diffs)}};
}

json trace_to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    const CancellationEvent& e = s.event;
    json ev{{"r", e.r},
            {"cancelled_high", e.hi.address()},
            {"cancelled_low", e.lo.address()},
            {"partner", e.partner.address()},
            {"pivot", e.pivot},
            {"consumed", json::array({e.x1, e.x2, e.x3})},
            {"successor",
             json{{"id", e.successor},
                  {"kind", e.successor_kind.to_string()},
                  {"nature", nature_text(e.successor_nature)}}},
            {"warnings", e.warnings}};
    steps.push_back(json{{"event", ev}, {"pair", pair_to_json(s.pair)}, {"complex", complex_to_json(s.complex)}});
  }
  return json{{"initial", complex_to_json(trace.initial_complex)},
              {"steps", steps},
              {"core_flow", trace.core_flow}};
}

}  // namespace ggs
