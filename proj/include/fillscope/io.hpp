#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "fillscope/chain_complex.hpp"
#include "fillscope/filling.hpp"
#include "fillscope/presentation.hpp"
#include "fillscope/profile.hpp"
#include "fillscope/quasi_fit.hpp"
#include "fillscope/simplicial.hpp"
#include "fillscope/word_dehn.hpp"

namespace fillscope {

inline constexpr std::string_view complex_format = "fillscope-complex/1";
inline constexpr std::string_view simplicial_format = "fillscope-simplicial/1";
inline constexpr std::string_view presentation_format = "fillscope-presentation/1";
inline constexpr std::string_view assignment_format = "fillscope-assignment/1";
inline constexpr std::string_view report_format = "fillscope-report/1";

// Parsers throw ParseError for malformed JSON (with line and column) and Error
// with kind parse_error for schema problems. Invariant violations surface as
// the corresponding Error kinds, naming the offending cell, simplex or
// relator.
ChainComplex parse_complex(std::string_view text);
SimplicialComplex parse_simplicial(std::string_view text);
Presentation parse_presentation(std::string_view text);
// Edge endpoints are vertex names of `base`.
PermutationAssignment parse_assignment(std::string_view text,
                                       const SimplicialComplex& base);

std::string emit_complex(const ChainComplex& cc);
// Lists the maximal simplices only.
std::string emit_simplicial(const SimplicialComplex& sc);
std::string emit_presentation(const Presentation& p);
std::string emit_assignment(const PermutationAssignment& pa,
                            const SimplicialComplex& base);

using Document = std::variant<ChainComplex, SimplicialComplex, Presentation>;
// Dispatches on the "format" field.
Document parse_document(std::string_view text);

// Built-in examples as document text: cp2, tetra-boundary, torus-1vertex,
// torus7, circle-K for K >= 3 (e.g. circle-5), pres-trivial, pres-free,
// pres-z2. Throws invalid_argument for unknown names.
std::string builtin_text(std::string_view name);
bool is_builtin(std::string_view name);
std::vector<std::string> builtin_names();
Document load_builtin(std::string_view name);

// "coef:cell;coef:cell", e.g. "1:[0,1];-1:[0,2]". Whitespace around items is
// ignored and repeated cells accumulate. Cells must exist in dimension dim.
Chain parse_chain_spec(const ChainComplex& cc, std::size_t dim, std::string_view spec);
std::string format_chain(const ChainComplex& cc, const Chain& c);

// CSV with header n,value,status; value is a decimal natural or "inf".
std::string emit_profile_csv(const ProfileTable& t);
ProfileTable parse_profile_csv(std::string_view text);

// 64-bit FNV-1a digest, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

struct RunReport {
  std::string command;
  std::vector<std::string> inputs;  // digests of every input document
  std::map<std::string, std::string> budgets;
  std::map<std::string, double> timings_ms;
  nlohmann::ordered_json result;
  std::vector<std::string> caveats;
};

// Pretty-printed JSON; deterministic for a fixed report.
std::string emit_report(const RunReport& r);

nlohmann::ordered_json to_json(const ChainComplex& cc, const FillResult& r);
nlohmann::ordered_json to_json(const ProfileTable& t);
nlohmann::ordered_json to_json(const QuasiFitOutcome& o);
nlohmann::ordered_json to_json(const Presentation& p, const FVWordResult& r);

// Caveats implied by a result, to copy into a RunReport.
std::vector<std::string> caveats_for(const FillResult& r, const FillBudget& budget);

}  // namespace fillscope
