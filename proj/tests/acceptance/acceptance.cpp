// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fail. An optional argument names the fillscope executable,
// which is then also exercised for the command-line criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "fillscope/filling.hpp"
#include "fillscope/io.hpp"
#include "fillscope/profile.hpp"
#include "fillscope/quasi_fit.hpp"
#include "fillscope/word_dehn.hpp"
#include "support.hpp"

namespace fs = fillscope;

namespace {

std::string cli_path;

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

std::string run_cli(const std::string& args) {
  const std::string cmd = "\"" + cli_path + "\" " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  require(pipe != nullptr, "cannot run " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

std::vector<long> values(const fs::ProfileTable& t) {
  std::vector<long> out;
  for (const auto& e : t.entries) out.push_back(e.value.value.get_si());
  return out;
}

std::string show(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

fs::ChainComplex complex_of(const std::string& name) {
  const fs::Document doc = fs::load_builtin(name);
  if (auto cc = std::get_if<fs::ChainComplex>(&doc)) return *cc;
  return fs::to_chain_complex(std::get<fs::SimplicialComplex>(doc));
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_s,
               const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail, verdict = "PASS";
  try {
    detail = body();
  } catch (const Failure& f) {
    verdict = "FAIL";
    detail = f.why;
  } catch (const std::exception& e) {
    verdict = "FAIL";
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (verdict == "PASS" && secs > limit_s) {
    verdict = "FAIL";
    detail += "; exceeded time limit";
  }
  if (verdict == "FAIL") ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, limit_s);
  std::cout << verdict << " " << id << " " << title << " [" << timing << "] " << detail
            << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];

  criterion(1, "Dehn functions of <x|x> and <a,b|>", 30, [] {
    const auto q = std::get<fs::Presentation>(fs::load_builtin("pres-trivial"));
    const fs::ProfileTable t = fs::dehn_function(q, 6);
    require(t.all_exact(), "entries of <x|x> not all exact");
    require(values(t) == std::vector<long>{0, 1, 2, 3, 4, 5, 6}, "got " + show(values(t)));
    const auto f = std::get<fs::Presentation>(fs::load_builtin("pres-free"));
    const fs::ProfileTable z = fs::dehn_function(f, 5);
    require(z.all_exact() && values(z) == std::vector<long>(6, 0),
            "free group table " + show(values(z)));
    if (!cli_path.empty()) {
      require(run_cli("profile dehn pres-trivial --nmax 6 --maxlen 16 --maxcost 16") ==
                  fs::emit_profile_csv(t),
              "command-line output differs");
      require(run_cli("profile dehn pres-free --nmax 5 --maxlen 16 --maxcost 16") ==
                  fs::emit_profile_csv(z),
              "command-line output differs for the free group");
    }
    return "<x|x>: " + show(values(t)) + ", <a,b|>: " + show(values(z));
  });

  criterion(2, "chain profile of CP2 in dimensions 3 and 4 is zero", 5, [] {
    const fs::ChainComplex cp2 = complex_of("cp2");
    for (std::size_t q : {3, 4}) {
      const fs::ProfileTable t = fs::chain_profile(cp2, q, 5);
      require(t.all_exact(), "non-exact entry in dimension " + std::to_string(q));
      require(values(t) == std::vector<long>(6, 0), "dimension " + std::to_string(q) +
                                                        " gave " + show(values(t)));
      if (!cli_path.empty()) {
        const std::string out =
            run_cli("profile chain cp2 --dim " + std::to_string(q) + " --nmax 5");
        require(out == fs::emit_profile_csv(t), "command-line output differs");
      }
    }
    return std::string("(0,0,0,0,0,0) Exact in both dimensions");
  });

  criterion(3, "branch and bound agrees with exhaustive search on random complexes", 120, [] {
    std::mt19937 rng(20240611);
    std::size_t complexes = 0, fills = 0;
    while (complexes < 120) {
      const fs::ChainComplex cc = fs::testing::random_complex(rng);
      bool used = false;
      for (std::size_t q = 1; q <= cc.top_dim(); ++q) {
        if (cc.cell_count(q) == 0) continue;
        for (int attempt = 0; attempt < 3; ++attempt) {
          const fs::Chain b0 = fs::testing::random_chain(rng, q, cc.cell_count(q), 2, 3);
          const fs::Chain c = fs::boundary(cc, b0);
          if (fs::l1_norm(c) > 4) continue;
          const fs::FillResult r = fs::fill_volume(cc, q, c);
          const fs::FillResult o = fs::fill_volume_bruteforce(cc, q, c, fs::l1_norm(b0).get_ui());
          require(r.status == fs::FillStatus::exact && o.status == fs::FillStatus::exact,
                  "non-exact result");
          require(r.value == o.value, "solver " + r.value.get_str() + " vs oracle " +
                                          o.value.get_str());
          for (const auto* res : {&r, &o}) {
            require(res->witness && fs::boundary(cc, *res->witness) == c &&
                        fs::l1_norm(*res->witness) == res->value,
                    "witness failed verification");
          }
          ++fills;
          used = true;
        }
      }
      complexes += used;
    }
    return std::to_string(complexes) + " complexes, " + std::to_string(fills) +
           " fillings, all equal";
  });

  criterion(4, "tetrahedron boundary profile matches enumeration", 30, [] {
    const fs::ChainComplex cc = complex_of("tetra-boundary");
    const fs::ProfileTable t = fs::chain_profile(cc, 2, 4);
    const std::vector<long> oracle = fs::testing::profile_by_enumeration(cc, 2, 4, 2);
    require(t.all_exact(), "non-exact entries");
    require(values(t) == std::vector<long>{0, 0, 0, 1, 2}, "got " + show(values(t)));
    require(oracle == values(t), "oracle gave " + show(oracle));
    return show(values(t)) + " equals the enumeration oracle";
  });

  criterion(5, "covers of the triangle graph", 5, [] {
    const auto circle = std::get<fs::SimplicialComplex>(fs::load_builtin("circle-3"));
    fs::PermutationAssignment swap(2);
    swap.assign(0, 1, {0, 1});
    swap.assign(1, 2, {0, 1});
    swap.assign(0, 2, {1, 0});
    fs::check_assignment(circle, swap);
    const fs::SimplicialComplex hex = fs::build_cover(circle, swap);
    require(hex.counts() == std::vector<std::size_t>{6, 6}, "swap cover is not a hexagon");
    require(hex.is_connected(), "swap cover is disconnected");
    require(hex.euler_characteristic() == 2 * circle.euler_characteristic() &&
                hex.euler_characteristic() == 0,
            "euler characteristic not doubled");
    const fs::SimplicialComplex two =
        fs::build_cover(circle, fs::PermutationAssignment::trivial(circle, 2));
    require(two.component_count() == 2, "trivial cover does not have two components");

    std::mt19937 rng(5);
    const fs::ChainComplex up = fs::to_chain_complex(hex), down = fs::to_chain_complex(circle);
    for (int i = 0; i < 50; ++i) {
      const fs::Chain c = fs::testing::random_chain(rng, 1, up.cell_count(1), 3, 6);
      require(fs::push_forward(circle, hex, 2, fs::boundary(up, c)) ==
                  fs::boundary(down, fs::push_forward(circle, hex, 2, c)),
              "push-forward does not commute with the boundary");
    }
    return std::string("hexagon connected, chi 0 = 2 * 0, trivial cover has 2 components, "
                       "50 chains commute");
  });

  std::vector<std::pair<fs::Word, std::size_t>> exact_words;
  criterion(6, "word filling volumes in Z^2 match an independent search", 60, [&] {
    const auto z2 = std::get<fs::Presentation>(fs::load_builtin("pres-z2"));
    const fs::WordLimits limits{12, 8};
    std::string detail;
    for (const char* text : {"a b a^-1 b^-1", "a^2 b a^-2 b^-1"}) {
      const fs::Word w = z2.parse_word(text);
      const fs::FVWordResult r = fs::filling_volume_word(z2, w, limits);
      require(r.status == fs::WordFillStatus::exact && r.unconditional,
              std::string("no unconditional exact result for ") + text);
      require(fs::replay_certificate(z2, w, r.certificate) && r.certificate.size() == r.value,
              std::string("certificate for ") + text + " does not replay");
      const long oracle = fs::testing::word_fv_oracle(z2, w, limits.max_word_len, limits.max_cost);
      require(oracle == static_cast<long>(r.value),
              std::string("oracle ") + std::to_string(oracle) + " vs " + std::to_string(r.value));
      exact_words.emplace_back(w, r.value);
      detail += std::string(detail.empty() ? "" : ", ") + "FV(" + text + ") = " +
                std::to_string(r.value);
    }
    require(exact_words[0].second == 1 && exact_words[1].second == 2,
            "unexpected values: " + detail);
    // More words, for the homological bound below.
    const fs::WordFiller filler(z2);
    for (const fs::Word& w : fs::reduced_words(2, 6)) {
      const fs::FVWordResult r = filler.fill(w, limits);
      if (r.status == fs::WordFillStatus::exact && !w.empty()) exact_words.emplace_back(w, r.value);
    }
    return detail + ", certificates replay";
  });

  criterion(7, "tetrahedron boundary and its subdivision are quasi-equivalent on samples", 600,
            [] {
              const auto sc = std::get<fs::SimplicialComplex>(fs::load_builtin("tetra-boundary"));
              const fs::ProfileTable f = fs::chain_profile(fs::to_chain_complex(sc), 2, 6);
              const fs::ProfileTable g =
                  fs::chain_profile(fs::to_chain_complex(fs::barycentric_subdivide(sc)), 2, 6);
              require(f.all_exact() && g.all_exact(), "profiles not exact");
              const fs::FitGrid grid =
                  fs::FitGrid::parse("A=1:8;B=1:8,1/2,1/4,1/8;C=0:8;D=0:8");
              const auto out = fs::quasi_equivalent_fit(f, g, grid);
              require(out.equivalent(), "no witness pair on the grid");
              require(fs::verify_quasi_bound(f, g, *out.forward.witness) &&
                          fs::verify_quasi_bound(g, f, *out.backward.witness),
                      "witness does not verify");
              auto fmt = [](const fs::QuasiFitWitness& w) {
                return "(" + fs::to_string(w.A) + "," + fs::to_string(w.B) + "," +
                       fs::to_string(w.C) + "," + fs::to_string(w.D) + ")";
              };
              return show(values(f)) + " vs " + show(values(g)) + ", witnesses " +
                     fmt(*out.forward.witness) + " and " + fmt(*out.backward.witness);
            });

  criterion(8, "chain filling volume bounds word filling volume from below", 10, [&] {
    require(!exact_words.empty(), "criterion 6 produced no exact words");
    const auto z2 = std::get<fs::Presentation>(fs::load_builtin("pres-z2"));
    const fs::ChainComplex pc = fs::presentation_complex(z2);
    const fs::FillSolver solver(pc, 2);
    for (const auto& [w, n] : exact_words) {
      const fs::FillResult h = solver.solve(fs::abelianized_chain(z2, w));
      require(h.status == fs::FillStatus::exact, "chain filling not exact");
      require(h.value <= static_cast<unsigned long>(n),
              "FVch " + h.value.get_str() + " > FV " + std::to_string(n));
    }
    return std::to_string(exact_words.size()) + " words checked";
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
