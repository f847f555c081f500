#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ggs/json_io.hpp"
#include "ggs/pairfile.hpp"
#include "ggs/randgen.hpp"
#include "ggs/render.hpp"

namespace {

// Unreadable/unwritable paths are usage problems (exit 2), unlike validation
// failures (exit 1).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOpts {
  std::string file;
  std::string format = "text";
  std::string order_path;
  std::string dot_path;
  int rmax = -1;
  bool oracle = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool spectral_flags = false) {
  cmd->add_option("file", o.file, "pair file (.ggs text or .json)")->required();
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--order", o.order_path, "file with a generator order overriding the pair's");
  cmd->add_option("--dot", o.dot_path, "write a DOT graph to this path");
  if (spectral_flags) {
    cmd->add_option("--rmax", o.rmax, "last page to compute (default: matrix dimension)");
    cmd->add_flag("--oracle", o.oracle, "use the definition-based computation instead of the sweep");
  }
}

ggs::GGSPair load_pair(const CommonOpts& o) {
  ggs::GGSPair pair;
  if (o.file.size() > 5 && o.file.substr(o.file.size() - 5) == ".json") {
    std::ifstream in(o.file);
    if (!in) throw IoError("cannot open '" + o.file + "'");
    nlohmann::json j;
    in >> j;
    pair = ggs::pair_from_json(j);
  } else {
    std::ifstream probe(o.file);
    if (!probe) throw IoError("cannot open '" + o.file + "'");
    pair = ggs::parse_pair_file(o.file);
  }
  if (!o.order_path.empty()) {
    std::ifstream in(o.order_path);
    if (!in) throw IoError("cannot open '" + o.order_path + "'");
    pair.order.clear();
    std::string tok;
    while (in >> tok) {
      if (tok == "order") continue;
      pair.order.push_back(ggs::parse_generator_ref(tok));
    }
  }
  return pair;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
}

void emit(const CommonOpts& o, const nlohmann::json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_validate(const CommonOpts& o) {
  ggs::GGSPair pair = load_pair(o);
  ggs::ValidationReport cond = ggs::validate_condition_h(pair);
  ggs::ValidationReport lift;
  nlohmann::json jlift;
  std::string morse_text;
  if (cond.ok()) {
    ggs::MorseExpansion exp = ggs::expand(pair);
    lift = ggs::validate_lift(pair, exp.graph, exp.lift);
    if (!o.dot_path.empty()) write_file(o.dot_path, ggs::morse_dot(exp.graph));
    morse_text = "morse lift: " + std::to_string(exp.graph.points.size()) + " critical points, " +
                 std::to_string(exp.graph.edges.size()) + " edges\n";
  }
  nlohmann::json j{{"pair", pair.name},
                   {"condition_H", ggs::report_to_json(cond)},
                   {"lift", cond.ok() ? ggs::report_to_json(lift) : nlohmann::json("skipped")}};
  emit(o, j,
       "condition H:\n" + ggs::render_report(cond) + morse_text + "lift validation:\n" +
           (cond.ok() ? ggs::render_report(lift) : "skipped (condition H failed)\n"));
  return cond.ok() && lift.ok() ? 0 : 1;
}

int cmd_complex(const CommonOpts& o) {
  ggs::GGSPair pair = load_pair(o);
  ggs::ChainComplex cc = ggs::build_complex(pair);
  if (!o.dot_path.empty()) write_file(o.dot_path, ggs::morse_dot(ggs::expand(pair).graph));
  emit(o, ggs::complex_to_json(cc), ggs::render_matrix(cc));
  return 0;
}

int cmd_homology(const CommonOpts& o) {
  ggs::GGSPair pair = load_pair(o);
  ggs::ChainComplex cc = ggs::build_complex(pair);
  ggs::D2Check d2 = ggs::check_d2(cc);
  if (!d2.ok) {
    std::cerr << "Delta^2 != 0 at (" << d2.witness->first << "," << d2.witness->second << ")\n";
    return 1;
  }
  ggs::HomologyResult h = ggs::homology(cc);
  emit(o, ggs::homology_to_json(h), ggs::render_homology(h));
  return 0;
}

int cmd_spectral(const CommonOpts& o) {
  ggs::GGSPair pair = load_pair(o);
  ggs::ChainComplex cc = ggs::build_complex(pair);
  if (o.oracle) {
    ggs::OracleResult oracle = ggs::oracle_pages(cc, o.rmax);
    emit(o, ggs::oracle_to_json(cc, oracle), ggs::render_pages(cc, oracle.pages, oracle.diffs));
  } else {
    ggs::SweepResult sweep = ggs::sssa(cc, o.rmax);
    emit(o, ggs::sweep_to_json(cc, sweep), ggs::render_pages(cc, sweep.pages, sweep.diffs));
  }
  return 0;
}

int cmd_cancel(const CommonOpts& o) {
  ggs::GGSPair pair = load_pair(o);
  ggs::ReductionTrace trace = ggs::run_to_core(pair);
  if (!o.dot_path.empty()) write_file(o.dot_path, ggs::trace_dot(trace));
  emit(o, ggs::trace_to_json(trace), ggs::render_trace(trace));
  ggs::ValidationReport cons = ggs::check_conservation(trace);
  if (!cons.ok()) {
    std::cerr << "conservation violations:\n" << ggs::render_report(cons);
    return 1;
  }
  return 0;
}

struct FuzzOpts {
  uint64_t seed = 1;
  int count = 200;
  int max_dim = 12;
};

int cmd_fuzz(const FuzzOpts& f) {
  ggs::Rng rng(f.seed);
  for (int i = 0; i < f.count; ++i) {
    ggs::GGSPair pair = ggs::random_structured_pair(rng, f.max_dim);
    ggs::ChainComplex cc = ggs::build_complex(pair);
    ggs::CrossValidation cv = ggs::cross_validate(cc);
    if (!cv.ok) {
      std::cout << "instance " << i << " FAILED:\n" << cv.detail << "\n" << ggs::pair_to_text(pair);
      return 1;
    }
  }
  std::cout << f.count << " random instances: sweep and oracle agree\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GGS flows on singular surfaces: chain complex, spectral sequence, cancellations"};
  app.require_subcommand(1);

  CommonOpts validate_o, complex_o, spectral_o, cancel_o, homology_o;
  FuzzOpts fuzz_o;
  add_common(app.add_subcommand("validate", "condition-H and morsification-lift checks"), validate_o);
  add_common(app.add_subcommand("complex", "boundary matrix of the GGS chain complex"), complex_o);
  add_common(app.add_subcommand("spectral", "spectral sequence pages and differentials"), spectral_o,
             true);
  add_common(app.add_subcommand("cancel", "run homotopical cancellations down to a core flow"),
             cancel_o);
  add_common(app.add_subcommand("homology", "integer homology via Smith normal form"), homology_o);
  CLI::App* fuzz = app.add_subcommand("fuzz", "random sweep-vs-oracle cross-validation harness");
  fuzz->add_option("--seed", fuzz_o.seed, "RNG seed");
  fuzz->add_option("--count", fuzz_o.count, "number of random instances");
  fuzz->add_option("--max-dim", fuzz_o.max_dim, "largest complex dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("validate")) return cmd_validate(validate_o);
    if (app.got_subcommand("complex")) return cmd_complex(complex_o);
    if (app.got_subcommand("spectral")) return cmd_spectral(spectral_o);
    if (app.got_subcommand("cancel")) return cmd_cancel(cancel_o);
    if (app.got_subcommand("homology")) return cmd_homology(homology_o);
    if (app.got_subcommand("fuzz")) return cmd_fuzz(fuzz_o);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const ggs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
