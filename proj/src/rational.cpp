#include "weylcert/rational.hpp"

#include <charconv>

#include "weylcert/errors.hpp"

namespace weylcert {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_integer(std::string_view text, std::size_t offset) {
  std::size_t lead = 0;
  while (lead < text.size() && text[lead] == ' ') ++lead;
  std::size_t trail = text.size();
  while (trail > lead && text[trail - 1] == ' ') --trail;
  std::string_view core = text.substr(lead, trail - lead);
  if (!core.empty() && core.front() == '+') {
    core.remove_prefix(1);
    ++lead;
  }
  if (core.empty()) throw ParseError("expected an integer", offset + lead);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(core.data(), core.data() + core.size(), value);
  if (ec != std::errc{}) throw ParseError("expected an integer", offset + lead);
  if (ptr != core.data() + core.size()) {
    throw ParseError("unexpected character", offset + lead + static_cast<std::size_t>(ptr - core.data()));
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text, std::size_t offset) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, offset));
  const auto num = parse_integer(text.substr(0, slash), offset);
  const auto den = parse_integer(text.substr(slash + 1), offset + slash + 1);
  if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
  return Rational(num, den);
}

}  // namespace weylcert
