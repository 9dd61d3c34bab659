#include "fillscope/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "fillscope/error.hpp"

namespace fillscope {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line, column);
  }
}

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::parse_error, what);
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    schema_error(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

void check_format(const json& doc, std::string_view expected) {
  const json& f = field(doc, "format");
  if (!f.is_string() || f.get<std::string>() != expected) {
    schema_error("expected format '" + std::string(expected) + "', got " + f.dump());
  }
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) schema_error(what + " must be a string, got " + j.dump());
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& what) {
  if (!j.is_array()) schema_error(what + " must be an array, got " + j.dump());
  return j;
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
  std::vector<std::string> out;
  for (const json& item : as_array(j, what)) out.push_back(as_string(item, what + " entry"));
  return out;
}

Integer as_integer(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  schema_error(what + " must be an integer or a decimal string, got " + j.dump());
}

std::size_t as_index(const json& j, const std::string& what) {
  if (!j.is_number_unsigned()) schema_error(what + " must be a natural number, got " + j.dump());
  return j.get<std::size_t>();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

ordered_json chain_json(const ChainComplex& cc, const Chain& c) {
  ordered_json terms = ordered_json::array();
  for (const auto& [cell, coef] : cc.named_terms(c)) terms.push_back({coef.get_str(), cell});
  return terms;
}

}  // namespace

ChainComplex parse_complex(std::string_view text) {
  const json doc = parse_json(text);
  check_format(doc, complex_format);
  std::vector<std::vector<std::string>> cells;
  for (const json& dim : as_array(field(doc, "cells"), "cells"))
    cells.push_back(string_list(dim, "cell list"));
  if (cells.empty()) schema_error("'cells' must list at least dimension 0");

  std::vector<std::unordered_map<std::string, std::size_t>> index(cells.size());
  for (std::size_t d = 0; d < cells.size(); ++d)
    for (std::size_t i = 0; i < cells[d].size(); ++i) index[d].emplace(cells[d][i], i);

  std::vector<std::vector<SparseMatrix::Column>> columns(cells.size());
  for (std::size_t d = 1; d < cells.size(); ++d) columns[d].resize(cells[d].size());
  const json empty = json::array();
  const json& boundary = doc.contains("boundary") ? doc.at("boundary") : empty;
  as_array(boundary, "boundary");
  if (boundary.size() + 1 > std::max<std::size_t>(cells.size(), 1)) {
    throw Error(ErrorKind::dimension_mismatch,
                "boundary lists " + std::to_string(boundary.size()) +
                    " dimensions but cells stop at dimension " +
                    std::to_string(cells.size() - 1));
  }
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    const std::size_t d = k + 1;
    for (const json& entry : as_array(boundary[k], "boundary list")) {
      if (!entry.is_array() || entry.size() != 2) {
        schema_error("boundary entry must be [cell, [[coefficient, face], ...]], got " +
                     entry.dump());
      }
      const std::string cell = as_string(entry[0], "boundary cell");
      auto it = index[d].find(cell);
      if (it == index[d].end()) {
        throw Error(ErrorKind::unknown_cell, "boundary given for unknown " +
                                                 std::to_string(d) + "-cell '" + cell + "'");
      }
      auto& column = columns[d][it->second];
      for (const json& term : as_array(entry[1], "boundary of '" + cell + "'")) {
        if (!term.is_array() || term.size() != 2) {
          schema_error("boundary term must be [coefficient, face], got " + term.dump());
        }
        const Integer coef = as_integer(term[0], "coefficient");
        const std::string face = as_string(term[1], "face");
        auto f = index[d - 1].find(face);
        if (f == index[d - 1].end()) {
          throw Error(ErrorKind::unknown_cell, "boundary of '" + cell +
                                                   "' references missing " +
                                                   std::to_string(d - 1) + "-cell '" +
                                                   face + "'");
        }
        column.emplace_back(f->second, coef);
      }
    }
  }
  std::vector<SparseMatrix> boundaries;
  for (std::size_t d = 1; d < cells.size(); ++d) {
    SparseMatrix m(cells[d - 1].size(), cells[d].size());
    for (std::size_t j = 0; j < cells[d].size(); ++j) m.set_column(j, std::move(columns[d][j]));
    boundaries.push_back(std::move(m));
  }
  return ChainComplex(std::move(cells), std::move(boundaries));
}

std::string emit_complex(const ChainComplex& cc) {
  ordered_json doc;
  doc["format"] = complex_format;
  ordered_json cells = ordered_json::array();
  for (std::size_t d = 0; d <= cc.top_dim(); ++d) cells.push_back(cc.cells(d));
  doc["cells"] = std::move(cells);
  ordered_json boundary = ordered_json::array();
  for (std::size_t d = 1; d <= cc.top_dim(); ++d) {
    const SparseMatrix& m = cc.boundary_matrix(d);
    ordered_json list = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.column(j).empty()) continue;
      ordered_json terms = ordered_json::array();
      for (const auto& [row, v] : m.column(j)) terms.push_back({v.get_str(), cc.cell_id(d - 1, row)});
      list.push_back({cc.cell_id(d, j), std::move(terms)});
    }
    boundary.push_back(std::move(list));
  }
  doc["boundary"] = std::move(boundary);
  return doc.dump(2) + "\n";
}

SimplicialComplex parse_simplicial(std::string_view text) {
  const json doc = parse_json(text);
  check_format(doc, simplicial_format);
  std::vector<std::string> vertices = string_list(field(doc, "vertices"), "vertices");
  std::vector<std::vector<std::string>> simplices;
  for (const json& s : as_array(field(doc, "simplices"), "simplices"))
    simplices.push_back(string_list(s, "simplex"));
  return SimplicialComplex::from_named(std::move(vertices), simplices);
}

std::string emit_simplicial(const SimplicialComplex& sc) {
  ordered_json doc;
  doc["format"] = simplicial_format;
  doc["vertices"] = sc.vertices();
  ordered_json simplices = ordered_json::array();
  for (const Simplex& s : sc.maximal_simplices()) {
    ordered_json names = ordered_json::array();
    for (std::size_t v : s) names.push_back(sc.vertices()[v]);
    simplices.push_back(std::move(names));
  }
  doc["simplices"] = std::move(simplices);
  return doc.dump(2) + "\n";
}

Presentation parse_presentation(std::string_view text) {
  const json doc = parse_json(text);
  check_format(doc, presentation_format);
  std::vector<std::string> generators = string_list(field(doc, "generators"), "generators");
  const Presentation free_group(generators, {});
  std::vector<Word> relators;
  const auto texts = string_list(field(doc, "relators"), "relators");
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      relators.push_back(free_group.parse_word(texts[i]));
    } catch (const Error& e) {
      throw Error(e.kind(), "relator " + std::to_string(i) + " '" + texts[i] + "': " + e.what());
    }
  }
  return Presentation(std::move(generators), std::move(relators));
}

std::string emit_presentation(const Presentation& p) {
  ordered_json doc;
  doc["format"] = presentation_format;
  doc["generators"] = p.generators();
  ordered_json relators = ordered_json::array();
  for (const Word& r : p.relators()) relators.push_back(p.format_word(r));
  doc["relators"] = std::move(relators);
  return doc.dump(2) + "\n";
}

PermutationAssignment parse_assignment(std::string_view text, const SimplicialComplex& base) {
  const json doc = parse_json(text);
  check_format(doc, assignment_format);
  const std::size_t sheets = as_index(field(doc, "sheets"), "sheets");
  if (sheets == 0) throw Error(ErrorKind::invalid_argument, "a cover needs at least one sheet");
  PermutationAssignment pa(sheets);
  for (const json& item : as_array(field(doc, "edges"), "edges")) {
    const auto ends = string_list(field(item, "edge"), "edge");
    if (ends.size() != 2) schema_error("edge must name two vertices, got " + item.dump());
    std::size_t v[2];
    for (int i = 0; i < 2; ++i) {
      auto found = base.find_vertex(ends[i]);
      if (!found) throw Error(ErrorKind::unknown_cell, "unknown vertex '" + ends[i] + "'");
      v[i] = *found;
    }
    PermutationAssignment::Permutation perm;
    for (const json& x : as_array(field(item, "perm"), "perm")) perm.push_back(as_index(x, "perm entry"));
    pa.assign(v[0], v[1], std::move(perm));
  }
  return pa;
}

std::string emit_assignment(const PermutationAssignment& pa, const SimplicialComplex& base) {
  ordered_json doc;
  doc["format"] = assignment_format;
  doc["sheets"] = pa.sheets();
  ordered_json edges = ordered_json::array();
  for (const auto& [edge, perm] : pa.edges()) {
    ordered_json e;
    e["edge"] = {base.vertices()[edge.first], base.vertices()[edge.second]};
    e["perm"] = perm;
    edges.push_back(std::move(e));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

Document parse_document(std::string_view text) {
  const json doc = parse_json(text);
  const std::string format = as_string(field(doc, "format"), "format");
  if (format == complex_format) return parse_complex(text);
  if (format == simplicial_format) return parse_simplicial(text);
  if (format == presentation_format) return parse_presentation(text);
  schema_error("unknown document format '" + format + "'");
}

namespace {

std::string simplicial_text(std::size_t n_vertices, const std::vector<Simplex>& simplices) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n_vertices; ++v) names.push_back(std::to_string(v));
  return emit_simplicial(SimplicialComplex(names, simplices));
}

std::string presentation_text(std::vector<std::string> gens, std::vector<std::string> rels) {
  ordered_json doc;
  doc["format"] = presentation_format;
  doc["generators"] = std::move(gens);
  doc["relators"] = std::move(rels);
  return doc.dump(2) + "\n";
}

std::optional<std::size_t> circle_size(std::string_view name) {
  constexpr std::string_view prefix = "circle-";
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size());
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 3) return std::nullopt;
  return k;
}

}  // namespace

bool is_builtin(std::string_view name) {
  const auto names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end() ||
         circle_size(name).has_value();
}

std::vector<std::string> builtin_names() {
  return {"cp2",    "tetra-boundary", "torus-1vertex", "torus7",
          "circle-K", "pres-trivial", "pres-free",     "pres-z2"};
}

std::string builtin_text(std::string_view name) {
  if (name == "cp2") {
    // One cell in each of dimensions 0, 2 and 4; every boundary map vanishes.
    return R"({
  "format": "fillscope-complex/1",
  "cells": [["e0"], [], ["e2"], [], ["e4"]],
  "boundary": [[], [], [], []]
}
)";
  }
  if (name == "torus-1vertex") {
    return R"({
  "format": "fillscope-complex/1",
  "cells": [["v"], ["a", "b"], ["T"]],
  "boundary": [
    [["a", [["1", "v"], ["-1", "v"]]], ["b", [["1", "v"], ["-1", "v"]]]],
    [["T", [["1", "a"], ["1", "b"], ["-1", "a"], ["-1", "b"]]]]
  ]
}
)";
  }
  if (name == "tetra-boundary") {
    return simplicial_text(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  }
  if (name == "torus7") {
    std::vector<Simplex> triangles;
    for (std::size_t i = 0; i < 7; ++i) {
      triangles.push_back({i, (i + 1) % 7, (i + 3) % 7});
      triangles.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return simplicial_text(7, triangles);
  }
  if (auto k = circle_size(name)) {
    std::vector<Simplex> edges;
    for (std::size_t i = 0; i < *k; ++i) edges.push_back({i, (i + 1) % *k});
    return simplicial_text(*k, edges);
  }
  if (name == "pres-trivial") return presentation_text({"x"}, {"x"});
  if (name == "pres-free") return presentation_text({"a", "b"}, {});
  if (name == "pres-z2") return presentation_text({"a", "b"}, {"a b a^-1 b^-1"});
  throw Error(ErrorKind::invalid_argument,
              "unknown example '" + std::string(name) +
                  "' (circle-K needs an integer K >= 3, e.g. circle-5)");
}

Document load_builtin(std::string_view name) { return parse_document(builtin_text(name)); }

Chain parse_chain_spec(const ChainComplex& cc, std::size_t dim, std::string_view spec) {
  if (dim > cc.top_dim()) {
    throw Error(ErrorKind::dimension_out_of_range,
                "chain dimension " + std::to_string(dim) + " exceeds top dimension " +
                    std::to_string(cc.top_dim()));
  }
  std::vector<std::pair<std::string, Integer>> terms;
  for (const std::string& raw : split(spec, ';')) {
    const std::string item = trim(raw);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::parse_error, "chain term '" + item + "' is not coef:cell");
    }
    Integer coef;
    try {
      coef = parse_integer(trim(item.substr(0, colon)));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::parse_error, "bad coefficient in chain term '" + item + "'");
    }
    terms.emplace_back(trim(item.substr(colon + 1)), coef);
  }
  return cc.make_chain(dim, terms);
}

std::string format_chain(const ChainComplex& cc, const Chain& c) {
  std::string out;
  for (const auto& [cell, coef] : cc.named_terms(c)) {
    if (!out.empty()) out += ';';
    out += coef.get_str() + ":" + cell;
  }
  return out;
}

std::string emit_profile_csv(const ProfileTable& t) {
  std::string out = "n,value,status\n";
  for (std::size_t n = 0; n < t.entries.size(); ++n) {
    out += std::to_string(n) + "," + to_string(t.entries[n].value) + "," +
           to_string(t.entries[n].status) + "\n";
  }
  return out;
}

ProfileTable parse_profile_csv(std::string_view text) {
  ProfileTable t;
  std::size_t line_no = 0;
  bool header = false;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (!header) {
      if (line != "n,value,status") {
        throw ParseError("expected header 'n,value,status'", line_no, 1);
      }
      header = true;
      continue;
    }
    const auto cols = split(line, ',');
    if (cols.size() != 3) throw ParseError("expected 3 columns", line_no, 1);
    if (trim(cols[0]) != std::to_string(t.entries.size())) {
      throw ParseError("expected n = " + std::to_string(t.entries.size()), line_no, 1);
    }
    ProfileEntry e;
    const std::string value = trim(cols[1]);
    if (value == "inf") {
      e.value = ExtendedNatural::infinity();
    } else {
      try {
        e.value.value = parse_integer(value);
      } catch (const std::invalid_argument&) {
        throw ParseError("bad value '" + value + "'", line_no, cols[0].size() + 2);
      }
      if (e.value.value < 0) throw ParseError("negative value", line_no, cols[0].size() + 2);
    }
    const std::string status = trim(cols[2]);
    if (status == "Exact") {
      e.status = EntryStatus::exact;
    } else if (status == "LowerBound") {
      e.status = EntryStatus::lower_bound;
    } else {
      throw ParseError("bad status '" + status + "'", line_no,
                       cols[0].size() + cols[1].size() + 3);
    }
    t.entries.push_back(std::move(e));
  }
  if (!header) throw ParseError("empty profile file", 1, 1);
  if (t.entries.empty()) throw ParseError("profile has no rows", line_no, 1);
  return t;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string emit_report(const RunReport& r) {
  ordered_json doc;
  doc["format"] = report_format;
  doc["command"] = r.command;
  doc["inputs"] = r.inputs;
  doc["budgets"] = r.budgets;
  ordered_json timings = ordered_json::object();
  for (const auto& [k, v] : r.timings_ms) timings[k] = v;
  doc["timings_ms"] = std::move(timings);
  doc["result"] = r.result;
  doc["caveats"] = r.caveats;
  return doc.dump(2) + "\n";
}

ordered_json to_json(const ChainComplex& cc, const FillResult& r) {
  ordered_json j;
  j["status"] = to_string(r.status);
  j["value"] = r.status == FillStatus::infinite ? std::string("inf") : r.value.get_str();
  j["witness"] = r.witness ? chain_json(cc, *r.witness) : ordered_json(nullptr);
  j["nodes"] = r.nodes;
  return j;
}

ordered_json to_json(const ProfileTable& t) {
  ordered_json j;
  j["dimension"] = t.dimension;
  ordered_json rows = ordered_json::array();
  for (std::size_t n = 0; n < t.entries.size(); ++n) {
    ordered_json row;
    row["n"] = n;
    row["value"] = to_string(t.entries[n].value);
    row["status"] = to_string(t.entries[n].status);
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

ordered_json to_json(const QuasiFitOutcome& o) {
  ordered_json j;
  if (o.witness) {
    ordered_json w;
    w["direction"] = o.witness->direction;
    w["A"] = to_string(o.witness->A);
    w["B"] = to_string(o.witness->B);
    w["C"] = to_string(o.witness->C);
    w["D"] = to_string(o.witness->D);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["samples_checked"] = o.samples_checked;
  j["samples_excluded"] = o.samples_excluded;
  return j;
}

ordered_json to_json(const Presentation& p, const FVWordResult& r) {
  ordered_json j;
  j["status"] = to_string(r.status);
  j["value"] = r.value;
  j["unconditional"] = r.unconditional;
  j["start"] = p.format_word(r.start);
  ordered_json steps = ordered_json::array();
  for (const RewriteStep& s : r.certificate) {
    ordered_json step;
    step["relator"] = s.relator;
    step["inverted"] = s.inverted;
    step["relator_rotation"] = s.relator_rotation;
    step["word_rotation"] = s.word_rotation;
    step["consumed"] = s.consumed;
    step["result"] = p.format_word(s.result);
    steps.push_back(std::move(step));
  }
  j["certificate"] = std::move(steps);
  j["states_explored"] = r.states_explored;
  return j;
}

std::vector<std::string> caveats_for(const FillResult& r, const FillBudget& budget) {
  if (r.status != FillStatus::lower_bound) return {};
  return {"branch and bound stopped after " + std::to_string(budget.node_limit) +
          " nodes; no filling of norm below " + r.value.get_str() + " exists"};
}

}  // namespace fillscope
