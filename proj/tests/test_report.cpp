#include <doctest.h>

#include "support.hpp"
#include "weylcert/criteria.hpp"
#include "weylcert/errors.hpp"
#include "weylcert/parse.hpp"
#include "weylcert/report.hpp"
#include "weylcert/witnesses.hpp"

using namespace weylcert;
using testing::phi;
using testing::w2;

namespace {

std::size_t parse_position(const RootSystem& rs, std::string_view text) {
  try {
    parse_weight_list(rs, text);
  } catch (const ParseError& err) {
    return err.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("weight parsing") {
    const auto b3 = RootSystem::build(Family::B, 3);
    CHECK(parse_weight(b3, "1/2,1/2,1/2") == phi(b3, 3));
    CHECK(parse_weight(b3, "fw:0,0,1") == phi(b3, 3));
    CHECK(parse_weight(b3, "fw:1,0,1") == w2({3, 1, 1}));
    CHECK(parse_weight(b3, " 1, -1/2 ,+0") == w2({2, -1, 0}));
    const auto list = parse_weight_list(b3, "1,0,0;fw:0,1,0");
    CHECK(list == std::vector<Weight>{phi(b3, 1), phi(b3, 2)});
    CHECK_THROWS_AS(parse_weight(b3, "1/3,0,0"), LatticeError);
  }

  TEST_CASE("parse errors carry positions") {
    const auto b3 = RootSystem::build(Family::B, 3);
    CHECK(parse_position(b3, "1,x,0") == 2);
    CHECK(parse_position(b3, "1,2") == 3);
    CHECK(parse_position(b3, "fw:1,0") == 6);
    CHECK(parse_position(b3, "1/0,0,0") == 2);
    CHECK(parse_position(b3, "1,2/3x,0") == 5);
    CHECK(parse_position(b3, "1,0,0;0,x,0") == 8);
    CHECK(parse_position(b3, "") == 0);
    try {
      parse_hyperplane(b3, "normal:1,x,0");
      FAIL("expected ParseError");
    } catch (const ParseError& err) {
      CHECK(err.position() == 9);
    }
    CHECK_THROWS_AS(parse_hyperplane(b3, "plane:1,0,0"), ParseError);
    CHECK_THROWS_AS(parse_hyperplane(b3, "normal:0,0,0"), ArgumentError);
    CHECK_THROWS_AS(parse_hyperplane(b3, "span:1,0,0"), RankError);
    CHECK(parse_hyperplane(b3, "span:1,0,0;0,1,0") == parse_hyperplane(b3, "normal:0,0,-2"));
  }

  TEST_CASE("json output is deterministic and key-sorted") {
    const auto d4 = RootSystem::build(Family::D, 4);
    const auto w = witness_for(d4, phi(d4, 1) + phi(d4, 3));
    REQUIRE(w);
    const auto cert = check_nosm(weight_system(d4, w->lambda), w->omega);
    auto reversed = cert;
    std::reverse(reversed.omega.begin(), reversed.omega.end());
    CHECK(to_json(cert).dump() == to_json(reversed).dump());
    const auto j = to_json(cert);
    CHECK(j["lhs"] == 30);
    CHECK(j["rhs"] == 18);
    CHECK(j["valid"] == true);
    CHECK(j["normal"] == Json::array({1, 1, 1, 1}));
    const std::string dumped = j.dump();
    CHECK(dumped.find("\"delta\"") < dumped.find("\"flags\""));
    CHECK(dumped.find("\"flags\"") < dumped.find("\"lambda\""));

    CHECK(info_json(d4).dump() == info_json(RootSystem::build(Family::D, 4)).dump());
    CHECK(info_json(d4)["roots"] == 24);

    const auto ws = weight_system(d4, w->lambda);
    const auto sj = weight_system_json(ws, true);
    CHECK(sj["set_count"] == 40);
    CHECK(sj["multiset_count"] == 56);
    CHECK(sj["dimension"] == 56);
    CHECK(sj["orbit_size"] == 32);
    CHECK(sj["saturated_equals_orbit"] == false);
    CHECK(sj["weights"].size() == 40);
  }

  TEST_CASE("scan serializations") {
    const auto d4 = RootSystem::build(Family::D, 4);
    ScanOptions opts;
    opts.coeff_sum_bound = 1;
    const auto entries = scan(d4, opts);
    for (const auto& e : entries) {
      const auto j = to_json(e, d4, false);
      CHECK(j["family"] == "D");
      CHECK(j["rank"] == 4);
      CHECK_FALSE(j.contains("runtime_ms"));
      CHECK(to_json(e, d4, true).contains("runtime_ms"));
    }
    const auto csv = scan_csv(entries, d4);
    CHECK(csv.rfind("family,rank,lambda_fw,verdict,lhs,rhs,delta,method\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(entries.size() + 1));
    CHECK(scan_csv(entries, d4) == csv);
  }
}
