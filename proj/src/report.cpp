#include "weylcert/report.hpp"

#include <algorithm>
#include <sstream>

#include "weylcert/errors.hpp"

namespace weylcert {

namespace {

std::string fw_text(const std::vector<std::int64_t>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

Json weight_list(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

Json subsystem_json(const SimpleSubsystem& s) {
  Json out;
  out["roots"] = weight_list(s.roots);
  out["type"] = s.type ? Json(s.type->label()) : Json(nullptr);
  return out;
}

}  // namespace

Json to_json(const Weight& w) { return w.to_string(); }

Json to_json(const Certificate& c) {
  std::vector<Weight> omega = c.omega;
  std::sort(omega.begin(), omega.end());
  Json out;
  out["lambda"] = c.lambda.to_string();
  out["omega"] = weight_list(omega);
  out["normal"] = c.hyperplane ? Json(c.hyperplane->normal()) : Json(nullptr);
  out["delta"] = c.delta;
  out["lhs"] = c.lhs();
  out["rhs"] = c.rhs();
  out["weights_off_set"] = c.weights_off_set;
  out["weights_off_multiset"] = c.weights_off_multiset;
  out["roots_off"] = c.roots_off;
  out["valid"] = c.valid;
  out["reason"] = c.reason;
  out["flags"] = {
      {"omega_in_orbit", c.flags.omega_in_orbit},
      {"codim_one", c.flags.codim_one},
      {"inequality", c.flags.inequality},
      {"omega_difference_free", c.flags.omega_difference_free},
      {"two_lambda_clear", c.flags.two_lambda_clear},
      {"omega_sum_free", c.flags.omega_sum_free},
  };
  return out;
}

Json to_json(const ScanEntry& e, const RootSystem& rs, bool timing) {
  Json out;
  out["family"] = std::string(1, to_char(rs.family()));
  out["rank"] = rs.rank();
  out["lambda_fw"] = e.lambda_fw;
  out["verdict"] = std::string(to_string(e.verdict));
  out["method"] = e.method;
  out["certificate"] = e.certificate ? to_json(*e.certificate) : Json(nullptr);
  if (timing) out["runtime_ms"] = e.runtime_ms;
  return out;
}

Json info_json(const RootSystem& rs) {
  Json out;
  out["label"] = rs.label();
  out["roots"] = rs.roots().size();
  out["positive_roots"] = rs.positive_roots().size();
  out["weyl_order"] = rs.weyl_order();
  out["pq_index"] = rs.pq_index();
  out["pq_invariant_factors"] = rs.pq_invariant_factors();
  out["simple_roots"] = weight_list(rs.simple_roots());
  out["fundamental_weights"] = weight_list(rs.fundamental_weights());
  out["rho"] = rs.rho().to_string();
  const SimpleSubsystem pi = make_subsystem(rs.simple_roots());
  out["boundary"] = weight_list(boundary_subset(pi));
  Json pc = Json::array();
  if (rs.rank() > 2) {
    for (const auto& s : pc_family(rs)) pc.push_back(subsystem_json(s));
  }
  out["pc"] = pc;
  return out;
}

Json weight_system_json(const WeightSystem& ws, bool listing) {
  const RootSystem& rs = *ws.rs;
  Json out;
  out["family"] = std::string(1, to_char(rs.family()));
  out["rank"] = rs.rank();
  out["lambda"] = ws.lambda.to_string();
  out["lambda_fw"] = rs.fundamental_coefficients(ws.lambda);
  out["set_count"] = ws.set_count();
  out["multiset_count"] = ws.multiset_count();
  out["delta"] = ws.delta;
  out["dimension"] = weyl_dimension(rs, ws.lambda);
  std::size_t orbit_size = 0;
  for (std::size_t i = 0; i < ws.support.size(); ++i) {
    // the orbit of lambda is exactly the support points of the same length
    if (ws.support[i].dot4(ws.support[i]) == ws.lambda.dot4(ws.lambda)) ++orbit_size;
  }
  out["orbit_size"] = orbit_size;
  out["saturated_equals_orbit"] = orbit_size == ws.set_count();
  if (listing) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < ws.support.size(); ++i) {
      rows.push_back({{"weight", ws.support[i].to_string()}, {"multiplicity", ws.multiplicity[i]}});
    }
    out["weights"] = rows;
  }
  return out;
}

std::string scan_csv(const std::vector<ScanEntry>& entries, const RootSystem& rs) {
  std::ostringstream os;
  os << "family,rank,lambda_fw,verdict,lhs,rhs,delta,method\n";
  for (const auto& e : entries) {
    os << to_char(rs.family()) << ',' << rs.rank() << ",\"" << fw_text(e.lambda_fw) << "\"," << to_string(e.verdict)
       << ',';
    if (e.certificate) {
      os << e.certificate->lhs() << ',' << e.certificate->rhs() << ',' << e.certificate->delta;
    } else {
      os << ",,";
    }
    os << ',' << e.method << '\n';
  }
  return os.str();
}

}  // namespace weylcert
