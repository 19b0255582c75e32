#pragma once

#include <string>
#include <vector>

#include <json.hpp>
#include "weylcert/criteria.hpp"
#include "weylcert/rootsys.hpp"
#include "weylcert/scan.hpp"
#include "weylcert/weightset.hpp"

namespace weylcert {

// nlohmann::json keeps object keys in a std::map, so every dump is key-sorted.
using Json = nlohmann::json;

Json to_json(const Weight& w);
Json to_json(const Certificate& c);
Json to_json(const ScanEntry& e, const RootSystem& rs, bool timing);

Json info_json(const RootSystem& rs);
/// Counts, delta, dimension; the sorted support with multiplicities when `listing`.
Json weight_system_json(const WeightSystem& ws, bool listing);

/// One CSV row per entry: family,rank,lambda_fw,verdict,lhs,rhs,delta,method
std::string scan_csv(const std::vector<ScanEntry>& entries, const RootSystem& rs);

}  // namespace weylcert
