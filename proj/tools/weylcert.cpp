#include <iostream>

#include <CLI11.hpp>

#include "weylcert/cli.hpp"
#include "weylcert/errors.hpp"

namespace wc = weylcert;

int main(int argc, char** argv) {
  CLI::App app{"Exact root-system computations and non-smoothness certificates for types B, C, D"};
  app.require_subcommand(1);

  std::string family;
  int rank = 0;
  bool json = false, csv = false;

  auto add_system = [&](CLI::App* sub) {
    sub->add_option("family", family, "B, C or D")->required();
    sub->add_option("rank", rank, "rank r")->required();
    sub->add_flag("--json", json, "JSON output");
  };

  auto* info = app.add_subcommand("info", "roots, Weyl group order, |P/Q|, simple roots, boundary subset, Pc");
  add_system(info);

  std::string lambda;
  bool listing = false;
  auto* weights = app.add_subcommand("weights", "saturated weight system of an irreducible module");
  add_system(weights);
  weights->add_option("lambda", lambda, "highest weight, e.g. 1/2,1/2,1/2 or fw:0,0,1")->required();
  weights->add_flag("--list", listing, "list every weight with its multiplicity");

  std::string omega;
  std::optional<std::string> hyperplane;
  auto* certify = app.add_subcommand("certify", "check a candidate Omega against every certificate clause");
  add_system(certify);
  certify->add_option("lambda", lambda, "highest weight")->required();
  certify->add_option("omega", omega, "weights separated by ';'")->required();
  certify->add_option("--hyperplane", hyperplane, "also evaluate the bound on normal:... or span:...");

  wc::ScanOptions scan_opts;
  bool timing = false, no_templates = false;
  auto* scan = app.add_subcommand("scan", "search for certificates over small dominant weights");
  add_system(scan);
  scan->add_option("--sum", scan_opts.coeff_sum_bound, "bound on the sum of fundamental coefficients")
      ->check(CLI::PositiveNumber);
  scan->add_option("--omega-max", scan_opts.omega_max, "largest Omega size (default r + 1)");
  scan->add_option("--budget", scan_opts.budget, "search nodes per weight");
  scan->add_option("--threads", scan_opts.threads, "worker threads (default WEYLCERT_THREADS or all cores)");
  scan->add_flag("--no-templates", no_templates, "skip the built-in witnesses");
  scan->add_flag("--timing", timing, "report runtime per weight");
  scan->add_flag("--csv", csv, "CSV output");

  wc::cli::VerifyOptions verify_opts;
  std::string only;
  auto* verify = app.add_subcommand("verify-paper", "recompute every claim of the manifest");
  verify->add_option("--only", only, "restrict to one family");
  verify->add_flag("--with-oracle", verify_opts.with_oracle, "include brute-force cross-checks");
  verify->add_option("--seed", verify_opts.seed, "seed for randomized cross-checks");
  verify->add_option("--claims", verify_opts.claims_path, "claims manifest")->default_str(wc::cli::default_claims_path());
  verify->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return wc::cli::kExitUsage;
  }

  const auto fmt = csv ? wc::cli::Format::Csv : json ? wc::cli::Format::Json : wc::cli::Format::Text;
  try {
    if (*info) return wc::cli::cmd_info(wc::parse_family(family), rank, fmt, std::cout);
    if (*weights) return wc::cli::cmd_weights(wc::parse_family(family), rank, lambda, listing, fmt, std::cout);
    if (*certify) {
      return wc::cli::cmd_certify(wc::parse_family(family), rank, lambda, omega, hyperplane, fmt, std::cout);
    }
    if (*scan) {
      scan_opts.use_templates = !no_templates;
      return wc::cli::cmd_scan(wc::parse_family(family), rank, scan_opts, timing, fmt, std::cout, std::cerr);
    }
    if (*verify) {
      if (!only.empty()) verify_opts.only = wc::parse_family(only);
      return wc::cli::cmd_verify_paper(verify_opts, fmt, std::cout, std::cerr);
    }
  } catch (const wc::CertificateInvalidError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return wc::cli::kExitClaimFailure;
  } catch (const wc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return wc::cli::kExitUsage;
  }
  return wc::cli::kExitUsage;
}
