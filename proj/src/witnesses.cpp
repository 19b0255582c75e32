#include "weylcert/witnesses.hpp"

#include <array>

#include "weylcert/weyl.hpp"

namespace weylcert {

namespace {

Weight e(int r, int i, std::int64_t scale = 1) { return Weight::unit(r, i - 1, scale); }

const Weight& phi(const RootSystem& rs, int i) { return rs.fundamental_weights()[i - 1]; }

// lambda in {phi_1 + phi_r, phi_2 + phi_r, phi_1 + phi_2 + phi_r}, with c = 0, 1, 2
// the coefficient of e_1 in lambda - phi_r - e_1.
void add_sum_family(const RootSystem& rs, std::int64_t step, const std::string& name,
                    std::vector<Witness>& out) {
  const int r = rs.rank();
  const std::array<Weight, 3> lambdas = {phi(rs, 1) + phi(rs, r), phi(rs, 2) + phi(rs, r),
                                         phi(rs, 1) + phi(rs, 2) + phi(rs, r)};
  for (std::int64_t c = 0; c < 3; ++c) {
    Witness w{name + "[" + std::to_string(c) + "]", lambdas[c], {}, std::nullopt};
    for (int j = 2; j <= r; ++j) w.omega.push_back(e(r, 1, c) - e(r, j, step) + phi(rs, r));
    out.push_back(std::move(w));
  }
}

// Omega = {-phi_r} ∪ (phi_r - omega0), omega0 given as index triples/pairs of e_i sums.
Witness sign_split(const RootSystem& rs, const std::string& name, const Weight& lambda,
                   const std::vector<std::vector<int>>& omega0) {
  const int r = rs.rank();
  Witness w{name, lambda, {-phi(rs, r)}, std::nullopt};
  for (const auto& idx : omega0) {
    Weight v = Weight::zero(r);
    for (int i : idx) v += e(r, i);
    w.omega.push_back(phi(rs, r) - v);
  }
  return w;
}

Weight flip_last(const Weight& w) {
  std::vector<std::int64_t> c = w.coords2();
  c.back() = -c.back();
  return Weight(std::move(c));
}

}  // namespace

std::vector<Witness> known_witnesses(const RootSystem& rs) {
  const int r = rs.rank();
  std::vector<Witness> out;
  switch (rs.family()) {
    case Family::B:
      if (r > 2) add_sum_family(rs, 2, "B.spin-sum", out);
      if (r == 4) {
        Witness w{"B4.phi3", phi(rs, 3), {}, std::nullopt};
        for (int j = 1; j <= 3; ++j) w.omega.push_back(phi(rs, 3) - e(r, j, 2));
        out.push_back(std::move(w));
      }
      if (r == 6) {
        out.push_back(sign_split(rs, "B6.phi6", phi(rs, 6), {{1, 2}, {3, 4}, {5}, {2, 3, 6}}));
      }
      break;
    case Family::C:
      add_sum_family(rs, 3, "C.phi_r-sum", out);
      if (r == 3) {
        const Weight lambda = phi(rs, 3);
        const Weight a = e(r, 1) + e(r, 2);
        out.push_back(Witness{"C3.phi3", lambda, {a + e(r, 3), -a + e(r, 3)},
                              Hyperplane::orthogonal_to(e(r, 1) - e(r, 2))});
      }
      if (r == 4 || r == 5) {
        Witness w{"C.phi_r-1", phi(rs, r - 1), {}, std::nullopt};
        for (int j = 1; j <= r - 1; ++j) w.omega.push_back(phi(rs, r - 1) - e(r, j, 2));
        out.push_back(std::move(w));
      }
      break;
    case Family::D: {
      Witness w{"D.phi1+phi_r-1", phi(rs, 1) + phi(rs, r - 1), {}, std::nullopt};
      for (int j = 2; j <= r; ++j) w.omega.push_back(phi(rs, r) - e(r, j, 2));
      out.push_back(std::move(w));
      if (r == 7) {
        out.push_back(sign_split(rs, "D7.phi6", phi(rs, 6),
                                 {{1, 2, 5}, {3, 4, 5}, {1, 4, 6}, {2, 3, 6}, {5, 6, 7}}));
      }
      break;
    }
  }
  return out;
}

std::optional<Witness> witness_for(const RootSystem& rs, const Weight& lambda) {
  const Weight dom = chamber_image(rs, lambda);
  const auto all = known_witnesses(rs);
  for (const auto& w : all)
    if (w.lambda == dom) return w;
  if (rs.family() == Family::D) {
    const Weight swapped = flip_last(dom);
    for (const auto& w : all) {
      if (w.lambda != swapped) continue;
      Witness image{w.name + "'", dom, {}, std::nullopt};
      for (const auto& x : w.omega) image.omega.push_back(flip_last(x));
      if (w.hyperplane) {
        std::vector<std::int64_t> n = w.hyperplane->normal();
        n.back() = -n.back();
        image.hyperplane = Hyperplane::from_normal(n);
      }
      return image;
    }
  }
  return std::nullopt;
}

}  // namespace weylcert
