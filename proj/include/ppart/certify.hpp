#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppart/erdoswoods.hpp"
#include "ppart/partition.hpp"
#include "ppart/witness.hpp"

namespace ppart {

inline constexpr char kToolVersion[] = "1.0.0";
inline constexpr char kToolConfig[] =
    "solver=propagating-backtracker;order=primes-descending;canonical=2-in-P1";

enum class Verdict { kPrimePartitionable, kNotPrimePartitionable };

struct Check {
  std::string name;
  bool pass = false;

  bool operator==(const Check& other) const {
    return name == other.name && pass == other.pass;
  }
};

// Either a propagation-derived contradiction chain or the marker that the
// verdict rests on exhaustive search alone.
struct Refutation {
  bool exhaustive = false;
  std::vector<ChainStep> steps;  // empty iff exhaustive
};

// Everything needed to re-check a verdict without re-running the search:
// positive certificates carry all three characterizations, negative ones a
// refutation. The checks record what the verifiers said at build time.
struct Certificate {
  std::int64_t n = 0;
  Verdict verdict = Verdict::kNotPrimePartitionable;
  std::optional<PrimePartition> partition;
  std::optional<WitnessPair> witness;
  std::optional<EWInterval> interval;
  std::optional<Refutation> refutation;
  std::vector<Check> checks;
  std::string version = kToolVersion;
  std::string config = kToolConfig;
};

// Decides n and bundles the evidence: a positive certificate carries the
// solved partition, its witness pair and its interval, each re-verified; a
// negative one carries the contradiction chain when propagation finds one,
// otherwise the exhaustive-search marker. n >= 4.
Certificate certify(std::int64_t n);

// Recomputes the certificate's checks from its evidence alone (used to
// confirm a deserialized certificate is self-contained).
std::vector<Check> run_checks(const Certificate& certificate);

// True iff the three characterizations agree on n: whenever the solver finds
// a partition, the derived witness pair and interval verify and both reverse
// constructions yield verifying partitions; a negative solver answer needs
// no further evidence. n >= 4.
bool cross_check(std::int64_t n);

// Fixed field order: n, verdict, partition{p1,p2}, witness{d,n1,n2},
// interval{e1,w}, refutation[{kind,primes,decomposition}], checks, tool.
// Absent optionals are omitted. Witness values and e1 are decimal strings.
nlohmann::ordered_json to_json(const Certificate& certificate);
Certificate certificate_from_json(const nlohmann::ordered_json& encoded);

// JSON form of one refutation step: {kind, primes, decomposition}.
nlohmann::ordered_json step_to_json(const ChainStep& step);

}  // namespace ppart
