#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "weylcert/rootsys.hpp"
#include "weylcert/scan.hpp"

namespace weylcert::cli {

enum class Format { Text, Json, Csv };

// Every command returns the process exit code: 0 ok, 1 failed claim or
// invalid certificate, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

int cmd_info(Family family, int rank, Format fmt, std::ostream& out);

int cmd_weights(Family family, int rank, const std::string& lambda, bool listing, Format fmt, std::ostream& out);

int cmd_certify(Family family, int rank, const std::string& lambda, const std::string& omega,
                const std::optional<std::string>& hyperplane, Format fmt, std::ostream& out);

int cmd_scan(Family family, int rank, const ScanOptions& opts, bool timing, Format fmt, std::ostream& out,
             std::ostream& err);

struct VerifyOptions {
  std::optional<Family> only;
  bool with_oracle = false;
  std::uint64_t seed = 1;
  std::string claims_path;
};

int cmd_verify_paper(const VerifyOptions& opts, Format fmt, std::ostream& out, std::ostream& err);

/// Default manifest location baked in at build time.
std::string default_claims_path();

}  // namespace weylcert::cli
