#include "weylcert/weight.hpp"

#include <algorithm>

#include "weylcert/errors.hpp"

namespace weylcert {

Weight Weight::unit(int rank, int i, std::int64_t scale) {
  std::vector<std::int64_t> c(rank, 0);
  c.at(i) = 2 * scale;
  return Weight(std::move(c));
}

Weight Weight::from_rationals(std::span<const Rational> coords) {
  std::vector<std::int64_t> c;
  c.reserve(coords.size());
  for (const auto& q : coords) {
    const Rational doubled = q * 2;
    if (!is_integer(doubled)) {
      throw LatticeError("coordinate " + weylcert::to_string(q) + " is not in (1/2)Z");
    }
    c.push_back(doubled.numerator());
  }
  return Weight(std::move(c));
}

std::vector<Rational> Weight::rationals() const {
  std::vector<Rational> out;
  out.reserve(coords2_.size());
  for (auto x : coords2_) out.emplace_back(x, 2);
  return out;
}

bool Weight::is_zero() const {
  return std::all_of(coords2_.begin(), coords2_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t Weight::dot4(const Weight& other) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < coords2_.size(); ++i) s += coords2_[i] * other.coords2_[i];
  return s;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords2_.size(); ++i) coords2_[i] += o.coords2_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords2_.size(); ++i) coords2_[i] -= o.coords2_[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& x : a.coords2_) x = -x;
  return a;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& x : a.coords2_) x *= k;
  return a;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords2_.size(); ++i) {
    if (i) out += ',';
    out += weylcert::to_string(coord(i));
  }
  return out;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : w.coords2()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace weylcert
