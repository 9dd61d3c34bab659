// fillscope command-line interface.
//
// Exit codes: 0 success, 1 usage or unexpected error, 2 parse error,
// 3 invariant violation, 4 budget exhausted with a partial result,
// 5 failed precondition.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fillscope/error.hpp"
#include "fillscope/io.hpp"
#include "fillscope/smith.hpp"

namespace fs = fillscope;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_other = 1;
constexpr int exit_parse = 2;
constexpr int exit_invariant = 3;
constexpr int exit_partial = 4;
constexpr int exit_precondition = 5;

int exit_code_for(fs::ErrorKind kind) {
  switch (kind) {
    case fs::ErrorKind::parse_error:
      return exit_parse;
    case fs::ErrorKind::unknown_cell:
    case fs::ErrorKind::unknown_generator:
    case fs::ErrorKind::invariant_violation:
    case fs::ErrorKind::inconsistent_assignment:
    case fs::ErrorKind::dimension_mismatch:
      return exit_invariant;
    case fs::ErrorKind::dimension_out_of_range:
    case fs::ErrorKind::disconnected:
    case fs::ErrorKind::empty_range:
    case fs::ErrorKind::invalid_argument:
      return exit_precondition;
  }
  return exit_other;
}

// A file path or a built-in example name.
std::string read_input(const std::string& source) {
  std::ifstream in(source, std::ios::binary);
  if (in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (fs::is_builtin(source)) return fs::builtin_text(source);
  throw fs::Error(fs::ErrorKind::invalid_argument,
                  "cannot read '" + source + "' (not a file or built-in example)");
}

fs::ChainComplex as_chain_complex(const fs::Document& doc) {
  if (auto cc = std::get_if<fs::ChainComplex>(&doc)) return *cc;
  if (auto sc = std::get_if<fs::SimplicialComplex>(&doc)) return fs::to_chain_complex(*sc);
  throw fs::Error(fs::ErrorKind::invalid_argument, "expected a complex, got a presentation");
}

fs::SimplicialComplex as_simplicial(const fs::Document& doc) {
  if (auto sc = std::get_if<fs::SimplicialComplex>(&doc)) return *sc;
  throw fs::Error(fs::ErrorKind::invalid_argument, "expected a simplicial complex");
}

fs::Presentation as_presentation(const fs::Document& doc) {
  if (auto p = std::get_if<fs::Presentation>(&doc)) return *p;
  if (auto sc = std::get_if<fs::SimplicialComplex>(&doc)) return fs::edge_path_presentation(*sc);
  throw fs::Error(fs::ErrorKind::invalid_argument,
                  "expected a presentation or a simplicial complex");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fs::Error(fs::ErrorKind::invalid_argument, "cannot write '" + path + "'");
  out << text;
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Options {
  std::string file, file2, chain, grid = "A=1:8;B=1/2,1,2;C=0:8;D=0:8";
  std::string assignment, out, report, example;
  std::size_t dim = 1, nmax = 4, budget = 20000, max_candidates = 5'000'000;
  std::size_t maxlen = 16, maxcost = 16;
};

void finish_report(const Options& opt, fs::RunReport& report) {
  if (!opt.report.empty()) write_text(opt.report, fs::emit_report(report));
}

void print_caveats(const std::vector<std::string>& caveats) {
  for (const auto& c : caveats) std::cerr << "caveat: " << c << "\n";
}

int cmd_complex_check(const Options& opt) {
  const std::string text = read_input(opt.file);
  const fs::ChainComplex cc = as_chain_complex(fs::parse_document(text));
  std::cout << "cells:";
  for (std::size_t d = 0; d <= cc.top_dim(); ++d) std::cout << " " << cc.cell_count(d);
  std::cout << "\neuler characteristic: " << cc.euler_characteristic().get_str()
            << "\nboundary of boundary: zero\nok\n";
  return exit_ok;
}

int cmd_complex_homology(const Options& opt) {
  const std::string text = read_input(opt.file);
  const fs::ChainComplex cc = as_chain_complex(fs::parse_document(text));
  for (std::size_t d = 0; d <= cc.top_dim(); ++d) {
    const fs::HomologySummary h = fs::homology_summary(cc, d);
    std::cout << "H" << d << ": Z^" << h.betti;
    for (const auto& t : h.torsion) std::cout << " + Z/" << t.get_str();
    std::cout << "\n";
  }
  return exit_ok;
}

int cmd_fill(const Options& opt) {
  Timer timer;
  const std::string text = read_input(opt.file);
  const fs::ChainComplex cc = as_chain_complex(fs::parse_document(text));
  if (opt.dim == 0 || opt.dim > cc.top_dim()) {
    throw fs::Error(fs::ErrorKind::dimension_out_of_range,
                    "--dim must lie in [1, " + std::to_string(cc.top_dim()) + "]");
  }
  const fs::Chain c = fs::parse_chain_spec(cc, opt.dim - 1, opt.chain);
  const fs::FillBudget budget{opt.budget};
  const fs::FillResult r = fs::fill_volume(cc, opt.dim, c, budget);

  std::cout << "status: " << fs::to_string(r.status) << "\n";
  std::cout << "value: " << (r.status == fs::FillStatus::infinite ? "inf" : r.value.get_str())
            << "\n";
  if (r.witness) std::cout << "witness: " << fs::format_chain(cc, *r.witness) << "\n";
  std::cout << "nodes: " << r.nodes << "\n";

  fs::RunReport report;
  report.command = "fill";
  report.inputs = {fs::fnv1a_hex(text), fs::fnv1a_hex(opt.chain)};
  report.budgets = {{"node_limit", std::to_string(opt.budget)}};
  report.result = fs::to_json(cc, r);
  report.caveats = fs::caveats_for(r, budget);
  if (r.status == fs::FillStatus::infinite)
    report.caveats.push_back("the chain is not the boundary of any integer chain");
  report.timings_ms["total"] = timer.elapsed_ms();
  print_caveats(report.caveats);
  finish_report(opt, report);
  return r.status == fs::FillStatus::lower_bound ? exit_partial : exit_ok;
}

int emit_profile(const Options& opt, const std::string& command, const std::string& text,
                 const fs::ProfileTable& t, const Timer& timer) {
  write_text(opt.out, fs::emit_profile_csv(t));
  fs::RunReport report;
  report.command = command;
  report.inputs = {fs::fnv1a_hex(text)};
  report.budgets = t.budgets;
  report.result = fs::to_json(t);
  report.caveats = t.caveats;
  report.timings_ms["total"] = timer.elapsed_ms();
  print_caveats(report.caveats);
  finish_report(opt, report);
  return t.all_exact() ? exit_ok : exit_partial;
}

int cmd_profile_chain(const Options& opt) {
  Timer timer;
  const std::string text = read_input(opt.file);
  const fs::ChainComplex cc = as_chain_complex(fs::parse_document(text));
  fs::ProfileBudget budget;
  budget.fill.node_limit = opt.budget;
  budget.max_candidates = opt.max_candidates;
  fs::ProfileTable t = fs::chain_profile(cc, opt.dim, opt.nmax, budget);
  t.source = opt.file;
  return emit_profile(opt, "profile chain", text, t, timer);
}

int cmd_profile_dehn(const Options& opt) {
  Timer timer;
  const std::string text = read_input(opt.file);
  const fs::Presentation p = as_presentation(fs::parse_document(text));
  fs::ProfileTable t = fs::dehn_function(p, opt.nmax, {opt.maxlen, opt.maxcost});
  t.source = opt.file;
  return emit_profile(opt, "profile dehn", text, t, timer);
}

int cmd_cover_build(const Options& opt) {
  const fs::SimplicialComplex base = as_simplicial(fs::parse_document(read_input(opt.file)));
  const fs::PermutationAssignment pa = fs::parse_assignment(read_input(opt.assignment), base);
  fs::check_assignment(base, pa);
  const fs::SimplicialComplex cover = fs::build_cover(base, pa);
  std::cerr << "sheets: " << pa.sheets() << "\ncomponents: " << cover.component_count()
            << "\neuler characteristic: " << cover.euler_characteristic() << " (base "
            << base.euler_characteristic() << ")\n";
  write_text(opt.out, fs::emit_simplicial(cover));
  return exit_ok;
}

int cmd_subdivide(const Options& opt) {
  const fs::SimplicialComplex sc = as_simplicial(fs::parse_document(read_input(opt.file)));
  write_text(opt.out, fs::emit_simplicial(fs::barycentric_subdivide(sc)));
  return exit_ok;
}

int cmd_fit_qequiv(const Options& opt) {
  Timer timer;
  const std::string a = read_input(opt.file), b = read_input(opt.file2);
  const fs::ProfileTable f = fs::parse_profile_csv(a), g = fs::parse_profile_csv(b);
  const fs::FitGrid grid = fs::FitGrid::parse(opt.grid);
  const fs::QuasiEquivalenceOutcome out = fs::quasi_equivalent_fit(f, g, grid);
  fs::RunReport report;
  report.command = "fit qequiv";
  report.inputs = {fs::fnv1a_hex(a), fs::fnv1a_hex(b)};
  report.budgets = {{"grid", grid.to_string()}};
  report.result = {{"forward", fs::to_json(out.forward)}, {"backward", fs::to_json(out.backward)}};
  for (const auto* side : {&out.forward, &out.backward}) {
    const char* label = side == &out.forward ? "f <= g" : "g <= f";
    if (side->witness) {
      const auto& w = *side->witness;
      std::cout << label << ": A=" << fs::to_string(w.A) << " B=" << fs::to_string(w.B)
                << " C=" << fs::to_string(w.C) << " D=" << fs::to_string(w.D) << "\n";
    } else {
      std::cout << label << ": none\n";
    }
    report.caveats.insert(report.caveats.end(), side->caveats.begin(), side->caveats.end());
  }
  std::cout << "quasi-equivalent on samples: " << (out.equivalent() ? "yes" : "no") << "\n";
  report.timings_ms["total"] = timer.elapsed_ms();
  print_caveats(report.caveats);
  finish_report(opt, report);
  return exit_ok;
}

int cmd_example(const Options& opt) {
  if (opt.example.empty()) {
    for (const auto& name : fs::builtin_names()) std::cout << name << "\n";
    return exit_ok;
  }
  write_text(opt.out, fs::builtin_text(opt.example));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chain filling volumes, isoperimetric profiles and Dehn functions"};
  app.require_subcommand(1);
  Options opt;
  std::function<int(const Options&)> action;

  auto add_report = [&](CLI::App* cmd) {
    cmd->add_option("--report", opt.report, "Write a JSON run report to this path");
  };

  auto* complex = app.add_subcommand("complex", "Validate or summarize a complex");
  complex->require_subcommand(1);
  auto* check = complex->add_subcommand("check", "Load and validate a complex");
  check->add_option("FILE", opt.file, "Complex file or built-in name")->required();
  check->callback([&] { action = cmd_complex_check; });
  auto* homology = complex->add_subcommand("homology", "Integral homology groups");
  homology->add_option("FILE", opt.file, "Complex file or built-in name")->required();
  homology->callback([&] { action = cmd_complex_homology; });

  auto* fill = app.add_subcommand("fill", "Chain filling volume of a (Q-1)-chain by Q-chains");
  fill->add_option("FILE", opt.file, "Complex file or built-in name")->required();
  fill->add_option("--dim", opt.dim, "Dimension Q of the filling chains")->required();
  fill->add_option("--chain", opt.chain, "Chain to fill, as coef:cell;coef:cell")->required();
  fill->add_option("--budget", opt.budget, "Branch-and-bound node limit")->capture_default_str();
  add_report(fill);
  fill->callback([&] { action = cmd_fill; });

  auto* profile = app.add_subcommand("profile", "Isoperimetric profiles");
  profile->require_subcommand(1);
  auto* chain = profile->add_subcommand("chain", "Chain profile in dimension Q");
  chain->add_option("FILE", opt.file, "Complex file or built-in name")->required();
  chain->add_option("--dim", opt.dim, "Dimension Q")->required();
  chain->add_option("--nmax", opt.nmax, "Largest boundary norm")->required();
  chain->add_option("--budget", opt.budget, "Node limit per filling")->capture_default_str();
  chain->add_option("--max-candidates", opt.max_candidates, "Cap on enumerated boundaries")
      ->capture_default_str();
  chain->add_option("--out", opt.out, "CSV output path (default stdout)");
  add_report(chain);
  chain->callback([&] { action = cmd_profile_chain; });
  auto* dehn = profile->add_subcommand("dehn", "Dehn function of a presentation");
  dehn->add_option("PRESFILE", opt.file, "Presentation file or built-in name")->required();
  dehn->add_option("--nmax", opt.nmax, "Largest word length")->required();
  dehn->add_option("--maxlen", opt.maxlen, "Cap on intermediate word length")
      ->capture_default_str();
  dehn->add_option("--maxcost", opt.maxcost, "Cap on relator applications")
      ->capture_default_str();
  dehn->add_option("--out", opt.out, "CSV output path (default stdout)");
  add_report(dehn);
  dehn->callback([&] { action = cmd_profile_dehn; });

  auto* cover = app.add_subcommand("cover", "Finite covering spaces");
  cover->require_subcommand(1);
  auto* build = cover->add_subcommand("build", "Build the cover given by edge permutations");
  build->add_option("FILE", opt.file, "Simplicial complex file or built-in name")->required();
  build->add_option("--assignment", opt.assignment, "Permutation assignment file")->required();
  build->add_option("--out", opt.out, "Output path (default stdout)");
  build->callback([&] { action = cmd_cover_build; });

  auto* subdivide = app.add_subcommand("subdivide", "Barycentric subdivision");
  subdivide->add_option("FILE", opt.file, "Simplicial complex file or built-in name")
      ->required();
  subdivide->add_option("--out", opt.out, "Output path (default stdout)");
  subdivide->callback([&] { action = cmd_subdivide; });

  auto* fit = app.add_subcommand("fit", "Quasi-bound fitting between profiles");
  fit->require_subcommand(1);
  auto* qequiv = fit->add_subcommand("qequiv", "Search quasi-bound witnesses both ways");
  qequiv->add_option("CSV1", opt.file, "First profile CSV")->required();
  qequiv->add_option("CSV2", opt.file2, "Second profile CSV")->required();
  qequiv->add_option("--grid", opt.grid, "Grid, e.g. A=1:8;B=1/2,1,2;C=0:8;D=0:8")
      ->capture_default_str();
  add_report(qequiv);
  qequiv->callback([&] { action = cmd_fit_qequiv; });

  auto* example = app.add_subcommand("example", "Print a built-in example, or list them");
  example->add_option("NAME", opt.example, "Example name");
  example->add_option("--out", opt.out, "Output path (default stdout)");
  example->callback([&] { action = cmd_example; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_other;
  }

  try {
    return action(opt);
  } catch (const fs::Error& e) {
    std::cerr << "error (" << fs::to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_other;
  }
}
