#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylcert/criteria.hpp"
#include "weylcert/rootsys.hpp"

namespace weylcert {

enum class Verdict { Obstructed, Survivor, Inconclusive };

std::string_view to_string(Verdict v);

struct ScanOptions {
  /// Scan dominant lambda != 0 with sum of fundamental coefficients <= this.
  int coeff_sum_bound = 1;
  /// Largest |Omega| tried; values below r - 1 make every search inconclusive.
  /// Negative means r + 1.
  int omega_max = -1;
  /// Search nodes per weight, templates included.
  std::uint64_t budget = 5'000'000;
  /// 0: take WEYLCERT_THREADS, else the hardware concurrency.
  int threads = 0;
  bool use_templates = true;
};

struct ScanEntry {
  std::vector<std::int64_t> lambda_fw;
  Weight lambda;
  Verdict verdict = Verdict::Inconclusive;
  /// Present iff the verdict is Obstructed; always re-validated.
  std::optional<Certificate> certificate;
  /// "template:<name>", "search", "two-lambda", "exhausted", "budget", "omega-max".
  std::string method;
  std::uint64_t nodes = 0;
  double runtime_ms = 0;
};

/// Nonzero dominant coefficient vectors with entries summing to at most `bound`,
/// ordered by total then lexicographically descending.
std::vector<std::vector<std::int64_t>> dominant_coefficients(int rank, int bound);

ScanEntry scan_weight(const RootSystem& rs, const Weight& lambda, const ScanOptions& opts);

/// Results are sorted by lambda_fw order from dominant_coefficients regardless of threading.
std::vector<ScanEntry> scan(const RootSystem& rs, const ScanOptions& opts);

}  // namespace weylcert
