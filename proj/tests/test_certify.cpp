#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppart/certify.hpp"
#include "ppart/partition.hpp"

using namespace ppart;
using nlohmann::ordered_json;

namespace {

const char kCertificate16[] =
    R"({"n":16,"verdict":"prime-partitionable",)"
    R"("partition":{"p1":[2,3,7,13],"p2":[5,11]},)"
    R"("witness":{"d":"16","n1":"4368","n2":"880"},)"
    R"("interval":{"e1":"2184","w":16},)"
    R"("checks":[{"name":"partition-verifies","pass":true},)"
    R"({"name":"witness-verifies","pass":true},)"
    R"({"name":"interval-verifies","pass":true},)"
    R"({"name":"witness-matches-partition","pass":true},)"
    R"({"name":"interval-matches-partition","pass":true}],)"
    R"("tool":{"version":"1.0.0",)"
    R"("config":"solver=propagating-backtracker;order=primes-descending;canonical=2-in-P1"}})";

bool all_pass(const std::vector<Check>& checks) {
  for (const Check& check : checks) {
    if (!check.pass) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("certify(16) carries all three characterizations") {
  const auto certificate = certify(16);
  CHECK(certificate.n == 16);
  CHECK(certificate.verdict == Verdict::kPrimePartitionable);
  REQUIRE(certificate.partition.has_value());
  CHECK(*certificate.partition == PrimePartition::from_parts(16, {2, 3, 7, 13}, {5, 11}));
  REQUIRE(certificate.witness.has_value());
  CHECK(*certificate.witness == WitnessPair{16, 4368, 880});
  REQUIRE(certificate.interval.has_value());
  CHECK(*certificate.interval == EWInterval{2184, 16});
  CHECK_FALSE(certificate.refutation.has_value());
  REQUIRE(certificate.checks.size() == 5);
  CHECK(all_pass(certificate.checks));
  CHECK(certificate.checks[0].name == "partition-verifies");
  CHECK(certificate.checks[3].name == "witness-matches-partition");
  CHECK(certificate.version == kToolVersion);
  CHECK(certificate.config == kToolConfig);
}

TEST_CASE("certify(16) serializes to the pinned JSON") {
  CHECK(to_json(certify(16)).dump() == kCertificate16);
}

TEST_CASE("certify(52) carries the four-step refutation") {
  const auto certificate = certify(52);
  CHECK(certificate.verdict == Verdict::kNotPrimePartitionable);
  CHECK_FALSE(certificate.partition.has_value());
  CHECK_FALSE(certificate.witness.has_value());
  CHECK_FALSE(certificate.interval.has_value());
  REQUIRE(certificate.refutation.has_value());
  CHECK_FALSE(certificate.refutation->exhaustive);
  REQUIRE(certificate.refutation->steps.size() == 4);
  CHECK(certificate.refutation->steps[3] ==
        ChainStep{StepKind::kDifferentSide, {3, 17}, {1, 51}});
  REQUIRE(certificate.checks.size() == 2);
  CHECK(certificate.checks[0] == Check{"solver-confirms-negative", true});
  CHECK(certificate.checks[1] == Check{"refutation-steps-valid", true});
}

TEST_CASE("certify(17) refutes with the unit clash") {
  const auto certificate = certify(17);
  REQUIRE(certificate.refutation.has_value());
  CHECK_FALSE(certificate.refutation->exhaustive);
  const std::vector<ChainStep> expected = {
      {StepKind::kUnit, {2}, {1, 16}},
      {StepKind::kUnit, {2}, {16, 1}},
  };
  CHECK(certificate.refutation->steps == expected);
  CHECK(all_pass(certificate.checks));
}

TEST_CASE("certify(79) falls back to the exhaustive-search marker") {
  // 78 = 2 * 3 * 13, so no unit or different-side seed exists and parity
  // propagation never closes; the verdict rests on the search alone.
  const auto certificate = certify(79);
  CHECK(certificate.verdict == Verdict::kNotPrimePartitionable);
  REQUIRE(certificate.refutation.has_value());
  CHECK(certificate.refutation->exhaustive);
  CHECK(certificate.refutation->steps.empty());
  REQUIRE(certificate.checks.size() == 2);
  CHECK(all_pass(certificate.checks));

  const auto encoded = to_json(certificate);
  REQUIRE(encoded.contains("refutation"));
  CHECK(encoded["refutation"] == ordered_json::parse(R"([{"kind":"exhaustive-search"}])"));
}

TEST_CASE("certify rejects n < 4") {
  CHECK_THROWS_AS(certify(3), std::invalid_argument);
  CHECK_THROWS_AS(certify(0), std::invalid_argument);
}

TEST_CASE("JSON round trip preserves certificates exactly") {
  for (const std::int64_t n : {16, 22, 52, 17, 79, 106}) {
    const auto certificate = certify(n);
    const auto encoded = to_json(certificate);
    const auto reparsed = ordered_json::parse(encoded.dump());
    const auto decoded = certificate_from_json(reparsed);
    CHECK(to_json(decoded).dump() == encoded.dump());
    CHECK(run_checks(decoded) == certificate.checks);
  }
}

TEST_CASE("certificate_from_json rejects unknown labels") {
  auto bad_verdict = ordered_json::parse(kCertificate16);
  bad_verdict["verdict"] = "maybe";
  CHECK_THROWS_AS(certificate_from_json(bad_verdict), std::invalid_argument);

  const auto bad_kind = ordered_json::parse(
      R"({"n":52,"verdict":"not-prime-partitionable",)"
      R"("refutation":[{"kind":"telepathy","primes":[3],"decomposition":[1,51]}],)"
      R"("checks":[],"tool":{"version":"1.0.0","config":"c"}})");
  CHECK_THROWS_AS(certificate_from_json(bad_kind), std::invalid_argument);
}

TEST_CASE("run_checks flags doctored evidence") {
  auto tampered = certify(16);
  tampered.interval->e1 += 1;
  const auto checks = run_checks(tampered);
  bool interval_ok = true;
  for (const Check& check : checks) {
    if (check.name == "interval-verifies" || check.name == "interval-matches-partition") {
      interval_ok = interval_ok && check.pass;
    }
  }
  CHECK_FALSE(interval_ok);
}

TEST_CASE("step_to_json spells out one step") {
  const auto encoded = step_to_json({StepKind::kSameSide, {3, 5}, {25, 27}});
  CHECK(encoded.dump() == R"({"kind":"same-side","primes":[3,5],"decomposition":[25,27]})");
  const auto unit = step_to_json({StepKind::kUnit, {2}, {1, 16}});
  CHECK(unit.dump() == R"({"kind":"unit","primes":[2],"decomposition":[1,16]})");
}

TEST_CASE("cross_check agrees for every n up to 100") {
  CHECK(cross_check(16));
  CHECK(cross_check(52));
  for (std::int64_t n = 4; n <= 100; ++n) {
    REQUIRE(cross_check(n));
  }
  CHECK_THROWS_AS(cross_check(2), std::invalid_argument);
}
