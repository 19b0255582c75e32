#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>

#include "weylcert/cli.hpp"
#include "weylcert/criteria.hpp"
#include "weylcert/errors.hpp"
#include "weylcert/excision.hpp"
#include "weylcert/report.hpp"
#include "weylcert/weyl.hpp"
#include "weylcert/witnesses.hpp"
#ifdef WEYLCERT_HAVE_ORACLE
#include "weylcert/oracle.hpp"
#endif

namespace weylcert::cli {

std::string default_claims_path() { return WEYLCERT_CLAIMS_PATH; }

namespace {

struct Context {
  std::uint64_t seed = 1;
};

using Compute = std::function<Json(const Context&)>;

Weight e(int r, int i, std::int64_t scale = 1) { return Weight::unit(r, i - 1, scale); }
const Weight& phi(const RootSystem& rs, int i) { return rs.fundamental_weights()[i - 1]; }

Json per_rank(Family f, int lo, int hi, const std::function<Json(const RootSystem&)>& fn) {
  Json out = Json::array();
  for (int r = lo; r <= hi; ++r) out.push_back(fn(RootSystem::build(f, r)));
  return out;
}

Json boundary_indices(const RootSystem& rs) {
  std::vector<std::int64_t> out;
  const auto& simple = rs.simple_roots();
  for (const auto& a : boundary_subset(make_subsystem(simple))) {
    out.push_back(std::find(simple.begin(), simple.end(), a) - simple.begin() + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool witness_valid(const RootSystem& rs, const std::string& prefix) {
  bool any = false;
  for (const auto& w : known_witnesses(rs)) {
    if (w.name.rfind(prefix, 0) != 0) continue;
    any = true;
    if (!check_nosm(weight_system(rs, w.lambda), w.omega).valid) return false;
  }
  return any;
}

Witness witness_named(const RootSystem& rs, const std::string& name) {
  for (auto& w : known_witnesses(rs))
    if (w.name == name) return w;
  throw ArgumentError("no built-in witness " + name + " for " + rs.label());
}

// Orbit, saturated-set and root counts on and off span(Omega), plus the certificate sides.
Json split_json(const RootSystem& rs, const Witness& w) {
  const WeightSystem ws = weight_system(rs, w.lambda);
  const Certificate c = check_nosm(ws, w.omega);
  const Hyperplane& h = *c.hyperplane;
  const OrbitSet o = orbit(rs, w.lambda);
  const auto orbit_off = static_cast<std::int64_t>(count_off(o.elements, h));
  return {{"orbit", o.size()},
          {"orbit_on", static_cast<std::int64_t>(o.size()) - orbit_off},
          {"orbit_off", orbit_off},
          {"weights", ws.set_count()},
          {"weights_on", weights_on(ws, h).set_count},
          {"weights_off", weights_off(ws, h).set_count},
          {"roots", rs.roots().size()},
          {"roots_on", roots_on(rs, h)},
          {"roots_off", roots_off(rs, h)},
          {"delta", c.delta},
          {"lhs", c.lhs()},
          {"rhs", c.rhs()},
          {"valid", c.valid}};
}

Json pick(const Json& j, std::initializer_list<const char*> keys) {
  Json out = Json::object();
  for (const char* k : keys) out[k] = j.at(k);
  return out;
}

std::size_t weights_size(const RootSystem& rs, const Weight& lambda) { return weight_system(rs, lambda).set_count(); }

// |<Lambda> ∩ pi^{-1}(x)| over x in K0 = {(3e_i ± e_j)/2 : {i,j} = {1,2}}; all four values must agree.
Json fiber_counts(const RootSystem& rs, const Weight& lambda) {
  const WeightSystem ws = weight_system(rs, lambda);
  std::vector<std::int64_t> counts;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
    for (int s : {1, -1}) {
      std::int64_t n = 0;
      for (const auto& mu : ws.support)
        if (mu[i] == 3 && mu[j] == s) ++n;
      counts.push_back(n);
    }
  }
  const bool uniform = std::all_of(counts.begin(), counts.end(), [&](auto c) { return c == counts[0]; });
  return uniform ? Json(counts[0]) : Json(counts);
}

Json rank_json(const RankContradiction& rc) {
  return {{"exterior_rank", rc.exterior_rank},
          {"roots_off", rc.roots_off},
          {"delta", rc.delta},
          {"contradiction", rc.contradiction}};
}

std::map<std::string, Compute> registry() {
  std::map<std::string, Compute> m;

  m["B.roots"] = [](const Context&) { return per_rank(Family::B, 2, 8, [](auto& rs) { return Json(rs.roots().size()); }); };
  m["C.roots"] = [](const Context&) { return per_rank(Family::C, 3, 8, [](auto& rs) { return Json(rs.roots().size()); }); };
  m["D.roots"] = [](const Context&) { return per_rank(Family::D, 4, 8, [](auto& rs) { return Json(rs.roots().size()); }); };
  m["B.pq_index"] = [](const Context&) { return per_rank(Family::B, 2, 8, [](auto& rs) { return Json(rs.pq_index()); }); };
  m["C.pq_index"] = [](const Context&) { return per_rank(Family::C, 3, 8, [](auto& rs) { return Json(rs.pq_index()); }); };
  m["D.pq_index"] = [](const Context&) { return per_rank(Family::D, 4, 8, [](auto& rs) { return Json(rs.pq_index()); }); };
  m["B.boundary"] = [](const Context&) { return per_rank(Family::B, 2, 8, boundary_indices); };
  m["C.boundary"] = [](const Context&) { return per_rank(Family::C, 3, 8, boundary_indices); };
  m["D.boundary"] = [](const Context&) { return per_rank(Family::D, 4, 8, boundary_indices); };

  m["B.spin.weights"] = [](const Context&) {
    return per_rank(Family::B, 2, 6, [](auto& rs) { return Json(weights_size(rs, phi(rs, rs.rank()))); });
  };
  m["B.spin_plus_e1.weights"] = [](const Context&) {
    return per_rank(Family::B, 2, 6, [](auto& rs) {
      return Json(weights_size(rs, e(rs.rank(), 1) + phi(rs, rs.rank())));
    });
  };
  m["B.spin_plus_e1e2.weights"] = [](const Context&) {
    return per_rank(Family::B, 2, 6, [](auto& rs) {
      const int r = rs.rank();
      return Json(weights_size(rs, e(r, 1) + e(r, 2) + phi(rs, r)));
    });
  };
  m["B3.spin.third_bound"] = [](const Context&) {
    // smallest |<Lambda>| over spinor lambda other than phi_3, e_1 + phi_3 (coefficient sum <= 3)
    const RootSystem rs = RootSystem::build(Family::B, 3);
    std::size_t least = SIZE_MAX;
    for (const auto& c : dominant_coefficients(3, 3)) {
      if (c[2] % 2 == 0) continue;
      const Weight lambda = rs.from_fundamental(c);
      if (lambda == phi(rs, 3) || lambda == e(3, 1) + phi(rs, 3)) continue;
      least = std::min(least, weights_size(rs, lambda));
    }
    return Json{{"least", least}, {"bound", 4 * (3 * 3 + 3)}};
  };
  m["D.half_spin.weights"] = [](const Context&) {
    return per_rank(Family::D, 4, 8, [](auto& rs) { return Json(weights_size(rs, phi(rs, rs.rank() - 1))); });
  };

  m["B3.spin_sum.split"] = [](const Context&) {
    const RootSystem rs = RootSystem::build(Family::B, 3);
    const Json j = split_json(rs, witness_named(rs, "B.spin-sum[0]"));
    Json out = pick(j, {"weights", "weights_on", "weights_off", "valid"});
    out["off_exceeds_all_roots_plus_6"] = j["weights_off"].get<std::int64_t>() > j["roots"].get<std::int64_t>() + 6;
    return out;
  };
  m["B.spin_sum.valid"] = [](const Context&) {
    return per_rank(Family::B, 3, 6, [](auto& rs) { return Json(witness_valid(rs, "B.spin-sum")); });
  };
  m["B6.phi6.split"] = [](const Context&) {
    const RootSystem rs = RootSystem::build(Family::B, 6);
    const Json j = split_json(rs, witness_named(rs, "B6.phi6"));
    Json out = pick(j, {"orbit_on", "orbit_off", "delta", "lhs", "valid"});
    out["all_roots_plus_6"] = j["roots"].get<std::int64_t>() + 6;
    return out;
  };
  m["B4.phi3.valid"] = [](const Context&) { return Json(witness_valid(RootSystem::build(Family::B, 4), "B4.phi3")); };
  m["B.half_rank_subsystem.roots"] = [](const Context&) {
    // |Delta ∩ <a_3, ..., a_r>|
    return per_rank(Family::B, 4, 8, [](auto& rs) {
      std::int64_t n = 0;
      for (const auto& a : rs.roots()) {
        bool inside = true;
        for (int i = 0; i < 2; ++i) inside = inside && a[i] == 0;
        n += inside;
      }
      return Json(n);
    });
  };
  m["B.so7.exterior_square_rank"] = [](const Context&) { return Json(exterior_rank({7, 2, 3, 2, 2})); };
  m["B.so7.exterior_cube_rank"] = [](const Context&) { return Json(exterior_rank({7, 3, 3, 2, 2})); };
  m["B3.2phi3.rank"] = [](const Context&) {
    const RootSystem rs = RootSystem::build(Family::B, 3);
    return rank_json(rank_contradiction(rs, 2 * phi(rs, 3), rs.simple_roots()[0], 3));
  };

  m["C.sp6.exterior_cube_rank"] = [](const Context&) { return Json(exterior_rank({6, 3, 2, 2, 2})); };
  m["C3.phi3.rank"] = [](const Context&) {
    const RootSystem rs = RootSystem::build(Family::C, 3);
    return rank_json(rank_contradiction(rs, phi(rs, 3), rs.simple_roots()[0], 3));
  };
  m["C3.phi3.module_rank"] = [](const Context&) {
    const RootSystem rs = RootSystem::build(Family::C, 3);
    return Json(rank_contradiction(rs, phi(rs, 3), rs.simple_roots()[0], 3).direct_weight_count);
  };
  m["C.phi_r-sum.valid"] = [](const Context&) {
    return per_rank(Family::C, 3, 6, [](auto& rs) { return Json(witness_valid(rs, "C.phi_r-sum")); });
  };
  m["C.phi_r-1.valid"] = [](const Context&) {
    return per_rank(Family::C, 4, 5, [](auto& rs) { return Json(witness_valid(rs, "C.phi_r-1")); });
  };
  m["C.phi_r-1.roots_off"] = [](const Context&) {
    return per_rank(Family::C, 4, 5, [](auto& rs) {
      return Json(check_nosm(weight_system(rs, phi(rs, rs.rank() - 1)), witness_named(rs, "C.phi_r-1").omega).roots_off);
    });
  };
  m["C3.phi3.hyperplane"] = [](const Context&) {
    const RootSystem rs = RootSystem::build(Family::C, 3);
    const Witness w = witness_named(rs, "C3.phi3");
    const Certificate c = check_nosm(weight_system(rs, w.lambda), w.omega);
    return Json{{"roots_off", roots_off(rs, *w.hyperplane)},
                {"span_is_H", c.hyperplane && *c.hyperplane == *w.hyperplane},
                {"difference_free", c.flags.omega_difference_free},
                {"in_orbit", c.flags.omega_in_orbit}};
  };

  m["D4.phi1+phi3.split"] = [](const Context&) {
    const RootSystem rs = RootSystem::build(Family::D, 4);
    const Json j = split_json(rs, witness_named(rs, "D.phi1+phi_r-1"));
    Json out = pick(j, {"orbit", "orbit_on", "orbit_off", "roots_on", "rhs", "valid"});
    out["orbit_off_exceeds_rhs"] = j["orbit_off"].get<std::int64_t>() > j["rhs"].get<std::int64_t>();
    return out;
  };
  m["D.phi1+phi_r-1.valid"] = [](const Context&) {
    return per_rank(Family::D, 4, 8, [](auto& rs) { return Json(witness_valid(rs, "D.phi1+phi_r-1")); });
  };
  m["D7.phi6.split"] = [](const Context&) {
    const RootSystem rs = RootSystem::build(Family::D, 7);
    const Json j = split_json(rs, witness_named(rs, "D7.phi6"));
    Json out = pick(j, {"orbit_on", "orbit_off", "delta", "valid"});
    out["roots_on_at_least_12"] = j["roots_on"].get<std::int64_t>() >= 12;
    out["twice_orbit_off_exceeds_rhs"] = 2 * j["orbit_off"].get<std::int64_t>() > j["rhs"].get<std::int64_t>();
    return out;
  };
  m["D.vector_spin.fiber"] = [](const Context&) {
    return per_rank(Family::D, 4, 8, [](auto& rs) {
      const int r = rs.rank();
      return Json{fiber_counts(rs, e(r, 1) + phi(rs, r - 1)), fiber_counts(rs, e(r, 1) + phi(rs, r))};
    });
  };
  m["D.bivector_spin.fiber"] = [](const Context&) {
    return per_rank(Family::D, 4, 8, [](auto& rs) {
      const int r = rs.rank();
      return Json{fiber_counts(rs, e(r, 1) + e(r, 2) + phi(rs, r - 1)), fiber_counts(rs, e(r, 1) + e(r, 2) + phi(rs, r))};
    });
  };
  m["D.K0.pairing_sum"] = [](const Context&) {
    const int r = 4;
    const Weight alpha = e(r, 1) + e(r, 2);
    Rational total = 0;
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
      for (int s : {1, -1}) {
        std::vector<std::int64_t> c(r, 0);
        c[i - 1] = 3;
        c[j - 1] = s;
        total += pairing(Weight(c), alpha);
      }
    return Json(to_string(total));
  };
  m["D.phi3.sxa_sum"] = [](const Context&) {
    return per_rank(Family::D, 5, 7, [](auto& rs) {
      const int r = rs.rank();
      const WeightSystem ws = weight_system(rs, phi(rs, 3));
      const Weight alpha = e(r, 1) + e(r, 2);
      std::vector<Weight> k;
      for (int base : {1, 2})
        for (int i = 3; i <= r; ++i)
          for (int j = i + 1; j <= r; ++j)
            for (int si : {1, -1})
              for (int sj : {1, -1}) k.push_back(e(r, base) + e(r, i, si) + e(r, j, sj));
      for (int i = 3; i <= r; ++i)
        for (int s : {1, -1}) k.push_back(e(r, 1) + e(r, 2) + e(r, i, s));
      return Json(sxa_lower_bound(ws, Hyperplane::orthogonal_to(alpha), alpha, k));
    });
  };
  m["D.half_spin.off_first_wall"] = [](const Context&) {
    return per_rank(Family::D, 4, 8, [](auto& rs) {
      const OrbitSet o = orbit(rs, phi(rs, rs.rank() - 1));
      return Json(count_off(o.elements, Hyperplane::orthogonal_to(rs.simple_roots()[0])));
    });
  };

#ifdef WEYLCERT_HAVE_ORACLE
  m["oracle.hull.mismatches"] = [](const Context& ctx) {
    std::mt19937_64 rng(ctx.seed);
    std::int64_t bad = 0;
    for (auto [f, r] : {std::pair{Family::B, 2}, std::pair{Family::B, 3}, std::pair{Family::C, 3}, std::pair{Family::D, 4}}) {
      const RootSystem rs = RootSystem::build(f, r);
      for (const auto& c : dominant_coefficients(r, 2)) {
        const Weight lambda = rs.from_fundamental(c);
        const auto pts = oracle::orbit_naive(rs, lambda);
        for (int t = 0; t < 40; ++t) {
          std::vector<std::int64_t> mu(r);
          for (auto& x : mu) x = static_cast<std::int64_t>(rng() % 9) - 4;
          const Weight w(mu);
          bad += conv_membership(rs, lambda, w) != oracle::hull_membership_exact(pts, w);
        }
      }
    }
    return Json(bad);
  };
  m["oracle.orbit.mismatches"] = [](const Context&) {
    std::int64_t bad = 0;
    for (auto [f, lo] : {std::pair{Family::B, 2}, std::pair{Family::C, 3}, std::pair{Family::D, 4}}) {
      for (int r = lo; r <= 5; ++r) {
        const RootSystem rs = RootSystem::build(f, r);
        for (const auto& c : dominant_coefficients(r, 2)) {
          const Weight lambda = rs.from_fundamental(c);
          bad += orbit(rs, lambda).elements != oracle::orbit_naive(rs, lambda);
        }
      }
    }
    return Json(bad);
  };
  m["oracle.exterior_rank.mismatches"] = [](const Context&) {
    std::int64_t bad = 0;
    for (int n = 0; n <= 10; ++n)
      for (int k = 0; k <= std::min(n, 4); ++k)
        for (int z = 0; z <= n; ++z)
          for (int p = 0; p + z <= n; ++p) {
            const RankProfile prof{n, k, z, p, n - z - p};
            bad += exterior_rank(prof) != oracle::exterior_rank_naive(prof);
          }
    return Json(bad);
  };
#endif
  return m;
}

struct ClaimRow {
  std::string id;
  std::string family;
  std::string anchor;
  std::string description;
  Json expected;
  bool oracle = false;
};

std::vector<ClaimRow> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open claims manifest " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("claims manifest: ") + e.what(), e.byte);
  }
  std::vector<ClaimRow> rows;
  for (const auto& c : doc.at("claims")) {
    rows.push_back({c.at("id").get<std::string>(), c.at("family").get<std::string>(), c.at("anchor").get<std::string>(),
                    c.at("description").get<std::string>(), c.at("expected"), c.value("oracle", false)});
  }
  return rows;
}

}  // namespace

int cmd_verify_paper(const VerifyOptions& opts, Format fmt, std::ostream& out, std::ostream& err) {
  const auto rows = load_manifest(opts.claims_path.empty() ? default_claims_path() : opts.claims_path);
  const auto reg = registry();
  const Context ctx{opts.seed};
  Json report = Json::array();
  int passed = 0, failed = 0;
  for (const auto& row : rows) {
    if (opts.only && row.family != std::string(1, to_char(*opts.only))) continue;
    if (row.oracle && !opts.with_oracle) continue;
    Json computed;
    std::string status;
    const auto it = reg.find(row.id);
    if (it == reg.end()) {
      computed = nullptr;
      status = "fail";
      err << "unknown claim id " << row.id << '\n';
    } else {
      try {
        computed = it->second(ctx);
        status = computed == row.expected ? "pass" : "fail";
      } catch (const Error& e) {
        computed = std::string("error: ") + e.what();
        status = "fail";
      }
    }
    (status == "pass" ? passed : failed)++;
    if (fmt == Format::Json) {
      report.push_back({{"id", row.id},
                        {"family", row.family},
                        {"anchor", row.anchor},
                        {"description", row.description},
                        {"expected", row.expected},
                        {"computed", computed},
                        {"status", status}});
    } else {
      out << (status == "pass" ? "PASS " : "FAIL ") << row.id << "  " << row.description << '\n';
      if (status != "pass") {
        out << "  expected: " << row.expected.dump() << '\n' << "  computed: " << computed.dump() << '\n';
        if (computed.is_structured() && row.expected.is_structured()) {
          out << "  diff:     " << Json::diff(row.expected, computed).dump() << '\n';
        }
      }
    }
  }
  if (fmt == Format::Json) {
    out << Json{{"claims", report}, {"passed", passed}, {"failed", failed}}.dump(2) << '\n';
  } else {
    out << passed << " passed, " << failed << " failed\n";
  }
  if (opts.with_oracle) {
#ifndef WEYLCERT_HAVE_ORACLE
    err << "warning: built without the oracle library; oracle claims fail\n";
#endif
  }
  return failed == 0 ? kExitOk : kExitClaimFailure;
}

}  // namespace weylcert::cli
