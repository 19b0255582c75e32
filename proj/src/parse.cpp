#include "weylcert/parse.hpp"

#include <string>

#include "weylcert/errors.hpp"
#include "weylcert/rational.hpp"

namespace weylcert {

namespace {

constexpr std::string_view kFundamental = "fw:";

std::vector<Rational> parse_rationals(std::string_view text, std::size_t offset, int expected) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(piece, offset + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(out.size()) != expected) {
    throw ParseError("expected " + std::to_string(expected) + " coordinates, got " + std::to_string(out.size()),
                     offset + text.size());
  }
  return out;
}

Weight parse_weight_at(const RootSystem& rs, std::string_view text, std::size_t offset) {
  if (text.starts_with(kFundamental)) {
    const auto values = parse_rationals(text.substr(kFundamental.size()), offset + kFundamental.size(), rs.rank());
    std::vector<std::int64_t> coeffs;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!is_integer(values[i])) throw ParseError("fundamental coefficients must be integers", offset);
      coeffs.push_back(values[i].numerator());
    }
    return rs.from_fundamental(coeffs);
  }
  const auto values = parse_rationals(text, offset, rs.rank());
  return Weight::from_rationals(values);
}

std::vector<Weight> parse_list_at(const RootSystem& rs, std::string_view text, std::size_t offset) {
  std::vector<Weight> out;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    const auto piece = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    out.push_back(parse_weight_at(rs, piece, offset + start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace

Weight parse_weight(const RootSystem& rs, std::string_view text) { return parse_weight_at(rs, text, 0); }

std::vector<Weight> parse_weight_list(const RootSystem& rs, std::string_view text) {
  return parse_list_at(rs, text, 0);
}

Hyperplane parse_hyperplane(const RootSystem& rs, std::string_view text) {
  constexpr std::string_view kNormal = "normal:";
  constexpr std::string_view kSpan = "span:";
  if (text.starts_with(kNormal)) {
    const auto values = parse_rationals(text.substr(kNormal.size()), kNormal.size(), rs.rank());
    return Hyperplane::from_normal(values);
  }
  if (text.starts_with(kSpan)) {
    const auto vectors = parse_list_at(rs, text.substr(kSpan.size()), kSpan.size());
    return span_hyperplane(vectors);
  }
  throw ParseError("hyperplane must start with 'normal:' or 'span:'", 0);
}

}  // namespace weylcert
