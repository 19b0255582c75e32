#include "weylcert/excision.hpp"

#include <algorithm>
#include <unordered_set>

#include "weylcert/errors.hpp"

namespace weylcert {

std::int64_t roots_off(const RootSystem& rs, const Hyperplane& h) {
  return static_cast<std::int64_t>(count_off(rs.roots(), h));
}

std::int64_t roots_on(const RootSystem& rs, const Hyperplane& h) {
  return static_cast<std::int64_t>(rs.roots().size()) - roots_off(rs, h);
}

std::size_t count_off(std::span<const Weight> s, const Hyperplane& h) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](const Weight& w) { return !h.contains(w); }));
}

WeightCounts weights_off(const WeightSystem& ws, const Hyperplane& h) {
  WeightCounts c;
  for (std::size_t i = 0; i < ws.support.size(); ++i) {
    if (h.contains(ws.support[i])) continue;
    ++c.set_count;
    c.multiset_count += ws.multiplicity[i];
  }
  return c;
}

WeightCounts weights_on(const WeightSystem& ws, const Hyperplane& h) {
  const WeightCounts off = weights_off(ws, h);
  return {ws.set_count() - off.set_count, ws.multiset_count() - off.multiset_count};
}

namespace {

// x - y is a nonzero multiple of alpha
bool parallel_difference(const Weight& x, const Weight& y, const Weight& alpha) {
  const Weight d = x - y;
  if (d.is_zero()) return false;
  // d ∥ alpha iff all 2x2 minors vanish
  for (int i = 0; i < d.rank(); ++i)
    for (int j = i + 1; j < d.rank(); ++j)
      if (d[i] * alpha[j] != d[j] * alpha[i]) return false;
  return true;
}

}  // namespace

std::int64_t sxa_lower_bound(const WeightSystem& ws, const Hyperplane& h, const Weight& alpha,
                             std::span<const Weight> k) {
  if (!ws.rs->is_root(alpha)) throw CertificateInvalidError("(" + alpha.to_string() + ") is not a root");
  if (h.contains(alpha)) throw CertificateInvalidError("root (" + alpha.to_string() + ") lies in H");
  for (const auto& x : k) {
    if (!ws.contains(x)) throw CertificateInvalidError("(" + x.to_string() + ") is not in the weight system");
  }
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j)
      if (parallel_difference(k[i], k[j], alpha)) {
        throw CertificateInvalidError("(" + k[i].to_string() + ") - (" + k[j].to_string() +
                                      ") is a multiple of (" + alpha.to_string() + ")");
      }
  Rational sum = 0;
  for (const auto& x : k) sum += pairing(x, alpha);
  return sum.numerator();
}

std::int64_t gamma_half_bound(std::span<const Weight> s, int p, const Hyperplane& h) {
  if (p < 0 || p >= h.ambient_rank()) throw ArgumentError("gamma_half_bound: coordinate index out of range");
  if (h.normal()[p] == 0) throw CertificateInvalidError("e_" + std::to_string(p + 1) + " lies in H");
  std::unordered_set<Weight, WeightHash> members(s.begin(), s.end());
  for (const auto& x : members) {
    if (x[p] == 0) throw CertificateInvalidError("(" + x.to_string() + ") has a zero coordinate " + std::to_string(p + 1));
    std::vector<std::int64_t> flipped = x.coords2();
    flipped[p] = -flipped[p];
    if (!members.contains(Weight(flipped))) {
      throw CertificateInvalidError("set is not stable under the sign flip of coordinate " + std::to_string(p + 1) +
                                    ": missing image of (" + x.to_string() + ")");
    }
  }
  return static_cast<std::int64_t>(members.size() / 2);
}

}  // namespace weylcert
