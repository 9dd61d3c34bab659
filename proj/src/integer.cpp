#include "fillscope/integer.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "fillscope/error.hpp"

namespace fillscope {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension_out_of_range:
      return "dimension-out-of-range";
    case ErrorKind::dimension_mismatch:
      return "dimension-mismatch";
    case ErrorKind::unknown_cell:
      return "unknown-cell";
    case ErrorKind::unknown_generator:
      return "unknown-generator";
    case ErrorKind::invariant_violation:
      return "invariant-violation";
    case ErrorKind::inconsistent_assignment:
      return "inconsistent-assignment";
    case ErrorKind::disconnected:
      return "disconnected";
    case ErrorKind::empty_range:
      return "empty-range";
    case ErrorKind::parse_error:
      return "parse-error";
    case ErrorKind::invalid_argument:
      return "invalid-argument";
  }
  return "unknown";
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool is_signed_decimal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_signed_decimal(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational result(num, den);
    result.canonicalize();
    return result;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") {
      whole = "0";
    }
    if (frac.empty() || !is_signed_decimal(frac) || frac.front() == '-' ||
        frac.front() == '+') {
      throw std::invalid_argument("not a rational: '" + std::string(text) +
                                  "'");
    }
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Integer w = parse_integer(whole);
    if (w < 0) w = -w;
    Integer num = w * den + parse_integer(frac);
    if (negative) num = -num;
    Rational result(num, den);
    result.canonicalize();
    return result;
  }
  return Rational(parse_integer(text));
}

}  // namespace fillscope
