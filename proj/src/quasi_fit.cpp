#include "fillscope/quasi_fit.hpp"

#include <algorithm>
#include <sstream>

#include "fillscope/error.hpp"

namespace fillscope {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Rational parse_grid_value(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::parse_error, "bad grid value '" + text + "'");
  }
}

std::vector<Rational> parse_value_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& item : split(text, ',')) {
    if (auto colon = item.find(':'); colon != std::string::npos) {
      Rational lo = parse_grid_value(item.substr(0, colon));
      Rational hi = parse_grid_value(item.substr(colon + 1));
      if (!is_integral(lo) || !is_integral(hi) || hi < lo) {
        throw Error(ErrorKind::parse_error, "bad integer range '" + item + "'");
      }
      for (Integer v = lo.get_num(); v <= hi.get_num(); ++v) out.emplace_back(v);
    } else {
      out.push_back(parse_grid_value(item));
    }
  }
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_string(values[i]);
  }
  return out;
}

void require_exact(const ProfileTable& t, const char* which) {
  if (t.entries.empty()) {
    throw Error(ErrorKind::empty_range, std::string(which) + " table is empty");
  }
  if (!t.all_exact()) {
    throw Error(ErrorKind::invalid_argument,
                std::string(which) + " table has non-exact entries");
  }
}

// g(y) with the floor extension, or nullopt when floor(y) is outside g's range.
const ProfileEntry* sample(const ProfileTable& g, const Rational& y) {
  const Integer index = floor_of(y);
  if (index < 0 || index > static_cast<unsigned long>(g.n_max())) return nullptr;
  return &g.entries[index.get_ui()];
}

// Least A >= 0 making the inequality hold at every comparable sample, or
// nullopt if no A works for this (B, C, D).
std::optional<Rational> least_scale(const ProfileTable& f, const ProfileTable& g,
                                    const Rational& B, const Rational& C,
                                    const Rational& D) {
  Rational needed = 0;
  for (std::size_t x = 0; x <= f.n_max(); ++x) {
    const ProfileEntry* gx = sample(g, B * static_cast<unsigned long>(x));
    if (!gx) continue;
    const ExtendedNatural& fv = f.entries[x].value;
    if (fv.infinite) {
      if (!gx->value.infinite) return std::nullopt;
      continue;
    }
    if (gx->value.infinite) continue;
    const Rational residual =
        Rational(fv.value) - C * static_cast<unsigned long>(x) - D;
    if (residual <= 0) continue;
    if (gx->value.value == 0) return std::nullopt;
    needed = std::max(needed, Rational(residual / Rational(gx->value.value)));
  }
  return needed;
}

}  // namespace

FitGrid FitGrid::parse(std::string_view spec) {
  FitGrid grid;
  for (const std::string& part : split(spec, ';')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::parse_error, "grid component '" + part + "' lacks '='");
    }
    const std::string key = trim(part.substr(0, eq));
    const std::string value = trim(part.substr(eq + 1));
    if (key == "A") {
      auto colon = value.find(':');
      if (colon == std::string::npos) {
        grid.a_min = grid.a_max = parse_grid_value(value);
      } else {
        grid.a_min = parse_grid_value(value.substr(0, colon));
        grid.a_max = parse_grid_value(value.substr(colon + 1));
      }
    } else if (key == "B") {
      grid.b_values = parse_value_list(value);
    } else if (key == "C") {
      grid.c_values = parse_value_list(value);
    } else if (key == "D") {
      grid.d_values = parse_value_list(value);
    } else {
      throw Error(ErrorKind::parse_error, "unknown grid key '" + key + "'");
    }
  }
  if (grid.a_min <= 0 || grid.a_max < grid.a_min) {
    throw Error(ErrorKind::invalid_argument, "grid needs 0 < A_min <= A_max");
  }
  if (grid.b_values.empty() || grid.c_values.empty() || grid.d_values.empty()) {
    throw Error(ErrorKind::invalid_argument, "grid lists must be nonempty");
  }
  for (const auto& b : grid.b_values)
    if (b <= 0) throw Error(ErrorKind::invalid_argument, "B values must be positive");
  for (const auto& c : grid.c_values)
    if (c < 0) throw Error(ErrorKind::invalid_argument, "C values must be nonnegative");
  for (const auto& d : grid.d_values)
    if (d < 0) throw Error(ErrorKind::invalid_argument, "D values must be nonnegative");
  return grid;
}

std::string FitGrid::to_string() const {
  return "A=" + fillscope::to_string(a_min) + ":" + fillscope::to_string(a_max) +
         ";B=" + join(b_values) + ";C=" + join(c_values) + ";D=" + join(d_values);
}

bool verify_quasi_bound(const ProfileTable& f, const ProfileTable& g,
                        const QuasiFitWitness& w) {
  if (w.A <= 0 || w.B <= 0 || w.C < 0 || w.D < 0) return false;
  for (std::size_t x = 0; x <= f.n_max(); ++x) {
    const ProfileEntry* gx = sample(g, w.B * static_cast<unsigned long>(x));
    if (!gx) continue;
    const ExtendedNatural& fv = f.entries[x].value;
    if (gx->value.infinite) continue;
    if (fv.infinite) return false;
    const Rational rhs = w.A * Rational(gx->value.value) +
                         w.C * static_cast<unsigned long>(x) + w.D;
    if (Rational(fv.value) > rhs) return false;
  }
  return true;
}

QuasiFitOutcome quasi_bounded_fit(const ProfileTable& f, const ProfileTable& g,
                                  const FitGrid& grid) {
  require_exact(f, "first");
  require_exact(g, "second");
  if (grid.b_values.empty() || grid.c_values.empty() || grid.d_values.empty() ||
      grid.a_min <= 0 || grid.a_max < grid.a_min) {
    throw Error(ErrorKind::invalid_argument, "malformed fit grid");
  }
  bool any_comparable = false;
  for (const Rational& B : grid.b_values) {
    for (std::size_t x = 0; x <= f.n_max() && !any_comparable; ++x)
      any_comparable = sample(g, B * static_cast<unsigned long>(x)) != nullptr;
  }
  if (!any_comparable) {
    throw Error(ErrorKind::empty_range,
                "no sample of the first table lands in the second table's range");
  }

  QuasiFitOutcome outcome;
  for (const Rational& B : grid.b_values) {
    for (const Rational& C : grid.c_values) {
      for (const Rational& D : grid.d_values) {
        auto needed = least_scale(f, g, B, C, D);
        if (!needed) continue;
        Rational A = std::max(*needed, grid.a_min);
        if (A > grid.a_max) continue;
        QuasiFitWitness w{A, B, C, D, "f <= g"};
        if (!verify_quasi_bound(f, g, w)) continue;
        for (std::size_t x = 0; x <= f.n_max(); ++x) {
          if (sample(g, B * static_cast<unsigned long>(x)))
            outcome.samples_checked.push_back(x);
          else
            outcome.samples_excluded.push_back(x);
        }
        if (!outcome.samples_excluded.empty()) {
          outcome.caveats.push_back(
              std::to_string(outcome.samples_excluded.size()) +
              " sample(s) excluded because floor(B x) exceeds the second table's range");
        }
        outcome.witness = std::move(w);
        return outcome;
      }
    }
  }
  outcome.caveats.push_back(
      "no witness in grid " + grid.to_string() +
      "; this refutes only the sampled grid on n = 0.." + std::to_string(f.n_max()) +
      ", not an asymptotic quasi-bound");
  return outcome;
}

QuasiEquivalenceOutcome quasi_equivalent_fit(const ProfileTable& f, const ProfileTable& g,
                                             const FitGrid& grid) {
  QuasiEquivalenceOutcome out;
  out.forward = quasi_bounded_fit(f, g, grid);
  out.backward = quasi_bounded_fit(g, f, grid);
  if (out.backward.witness) out.backward.witness->direction = "g <= f";
  return out;
}

}  // namespace fillscope
