#include <algorithm>
#include <ostream>

#include "weylcert/cli.hpp"
#include "weylcert/criteria.hpp"
#include "weylcert/errors.hpp"
#include "weylcert/parse.hpp"
#include "weylcert/report.hpp"
#include "weylcert/weyl.hpp"

namespace weylcert::cli {

namespace {

std::string join(const std::vector<Weight>& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "; " : "") + ws[i].to_string();
  return s;
}

std::string index_list(const RootSystem& rs, const std::vector<Weight>& roots) {
  std::vector<long> idx;
  const auto& simple = rs.simple_roots();
  for (const auto& a : roots) idx.push_back(std::find(simple.begin(), simple.end(), a) - simple.begin() + 1);
  std::sort(idx.begin(), idx.end());
  std::string s;
  for (long i : idx) s += (s.empty() ? "a" : ", a") + std::to_string(i);
  return "{" + s + "}";
}

}  // namespace

int cmd_info(Family family, int rank, Format fmt, std::ostream& out) {
  const RootSystem rs = RootSystem::build(family, rank);
  const Json j = info_json(rs);
  if (fmt == Format::Json) {
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << rs.label() << '\n'
      << "  |Delta|   " << rs.roots().size() << '\n'
      << "  |W|       " << rs.weyl_order() << '\n'
      << "  |P/Q|     " << rs.pq_index() << '\n'
      << "  Pi        " << join(rs.simple_roots()) << '\n'
      << "  boundary  " << index_list(rs, boundary_subset(make_subsystem(rs.simple_roots()))) << '\n';
  if (rank > 2) {
    out << "  Pc        ";
    bool first = true;
    for (const auto& s : pc_family(rs)) {
      out << (first ? "" : "  ") << index_list(rs, s.roots) << (s.type ? "=" + s.type->label() : "");
      first = false;
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_weights(Family family, int rank, const std::string& lambda, bool listing, Format fmt, std::ostream& out) {
  const RootSystem rs = RootSystem::build(family, rank);
  const WeightSystem ws = weight_system(rs, parse_weight(rs, lambda));
  const Json j = weight_system_json(ws, listing);
  if (fmt == Format::Json) {
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << rs.label() << " lambda = " << ws.lambda.to_string() << '\n'
      << "  |<Lambda>|  " << ws.set_count() << '\n'
      << "  ||<Lambda>|| " << ws.multiset_count() << '\n'
      << "  |Lambda|    " << j["orbit_size"].get<std::size_t>() << '\n'
      << "  dim         " << j["dimension"].get<std::uint64_t>() << '\n'
      << "  delta       " << ws.delta << '\n';
  if (listing) {
    for (std::size_t i = 0; i < ws.support.size(); ++i) {
      out << "  " << ws.support[i].to_string() << "  x" << ws.multiplicity[i] << '\n';
    }
  }
  return kExitOk;
}

int cmd_certify(Family family, int rank, const std::string& lambda, const std::string& omega,
                const std::optional<std::string>& hyperplane, Format fmt, std::ostream& out) {
  const RootSystem rs = RootSystem::build(family, rank);
  const WeightSystem ws = weight_system(rs, parse_weight(rs, lambda));
  const auto om = parse_weight_list(rs, omega);
  const Certificate c = check_nosm(ws, om);
  Json j = to_json(c);
  if (hyperplane) {
    const Hyperplane h = parse_hyperplane(rs, *hyperplane);
    const BmsCheck b = check_bms(ws, h);
    j["given_hyperplane"] = {{"normal", h.normal()},
                             {"matches_span", c.hyperplane && *c.hyperplane == h},
                             {"lhs", b.lhs},
                             {"rhs", b.rhs}};
  }
  if (fmt == Format::Json) {
    out << j.dump(2) << '\n';
  } else {
    out << (c.valid ? "valid" : "invalid: " + c.reason) << '\n'
        << "  H      " << (c.hyperplane ? c.hyperplane->to_string() : std::string("-")) << '\n'
        << "  lhs    " << c.lhs() << "  (delta " << c.delta << " x " << c.weights_off_multiset << ")\n"
        << "  rhs    " << c.rhs() << "  (|Delta \\ H| " << c.roots_off << " + 6)\n";
  }
  return c.valid ? kExitOk : kExitClaimFailure;
}

int cmd_scan(Family family, int rank, const ScanOptions& opts, bool timing, Format fmt, std::ostream& out,
             std::ostream& err) {
  const RootSystem rs = RootSystem::build(family, rank);
  const auto entries = scan(rs, opts);
  if (opts.budget == 0) err << "warning: zero search budget, every weight is inconclusive\n";
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& e : entries) arr.push_back(to_json(e, rs, timing));
    out << arr.dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    out << scan_csv(entries, rs);
  } else {
    for (const auto& e : entries) {
      std::string fw;
      for (std::size_t i = 0; i < e.lambda_fw.size(); ++i) fw += (i ? "," : "") + std::to_string(e.lambda_fw[i]);
      out << rs.label() << "  fw:" << fw << "  " << to_string(e.verdict) << "  " << e.method;
      if (e.certificate) out << "  " << e.certificate->lhs() << " > " << e.certificate->rhs();
      if (timing) out << "  " << e.runtime_ms << " ms";
      out << '\n';
    }
  }
  return kExitOk;
}

}  // namespace weylcert::cli
