#include "ppart/witness.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace ppart {

namespace {

void require_shape(const WitnessPair& pair) {
  if (pair.d < 2) {
    throw std::invalid_argument("witness: d must be at least 2");
  }
  if (pair.n1 < 1 || pair.n2 < 1) {
    throw std::invalid_argument("witness: n1 and n2 must be positive");
  }
  if (gcd(pair.n1, pair.n2) != pair.d) {
    throw std::invalid_argument("witness: gcd(n1, n2) must equal d");
  }
}

void require_verified(const WitnessPair& pair, const char* op) {
  require_shape(pair);
  if (!verify_witness(pair)) {
    throw std::invalid_argument(std::string(op) + ": pair is not a verifying witness");
  }
}

}  // namespace

bool verify_witness(const WitnessPair& pair) {
  require_shape(pair);
  for (std::int64_t d1 = 1; d1 < pair.d; ++d1) {
    const std::int64_t d2 = pair.d - d1;
    if (gcd(pair.n1, Int(d1)) == 1 && gcd(pair.n2, Int(d2)) == 1) {
      return false;
    }
  }
  return true;
}

WitnessPair witness_from_partition(const PrimePartition& partition) {
  if (!verify_partition(partition)) {
    throw std::invalid_argument("witness_from_partition: partition does not satisfy its clauses");
  }
  const std::int64_t d = partition.n();
  Int k1 = 1;
  Int k2 = 1;
  for (std::size_t i = 0; i < partition.primes().size(); ++i) {
    const std::int64_t p = partition.primes()[i];
    if (d % p == 0) continue;
    (partition.sides()[i] == 1 ? k1 : k2) *= p;
  }
  return {d, d * k1, d * k2};
}

PrimePartition partition_from_witness(const WitnessPair& pair) {
  if (pair.d < 4) {
    throw std::invalid_argument("partition_from_witness: d must be at least 4");
  }
  require_verified(pair, "partition_from_witness");
  const WitnessPair fat = enrich_witness(pair);
  const Int k2_part = fat.n2 / fat.d;
  std::vector<std::int64_t> part1;
  std::vector<std::int64_t> part2;
  for (const std::int64_t p : primes_below(fat.d)) {
    if (fat.n1 % p == 0) {
      part1.push_back(p);
    } else if (k2_part % p == 0) {
      part2.push_back(p);
    }
    // enrichment guarantees every prime below d lands in one of the two
  }
  return PrimePartition::from_parts(fat.d, part1, part2);
}

Int complete_partner(std::int64_t d, const Int& n1) {
  if (d < 2) {
    throw std::invalid_argument("complete_partner: d must be at least 2");
  }
  if (n1 < 1 || n1 % d != 0) {
    throw std::invalid_argument("complete_partner: d must divide n1");
  }
  Int n2 = d;
  for (const std::int64_t p : primes_below(d)) {
    if (n1 % p != 0) n2 *= p;
  }
  return n2;
}

WitnessPair normalize_witness(const WitnessPair& pair) {
  require_verified(pair, "normalize_witness");
  Int k1 = 1;
  Int k2 = 1;
  for (const std::int64_t p : primes_below(pair.d)) {
    if (pair.d % p == 0) continue;
    if (pair.n1 % p == 0) k1 *= p;
    if (pair.n2 % p == 0) k2 *= p;
  }
  return {pair.d, pair.d * k1, pair.d * k2};
}

WitnessPair enrich_witness(const WitnessPair& pair) {
  require_verified(pair, "enrich_witness");
  WitnessPair out = pair;
  for (const std::int64_t p : primes_below(pair.d)) {
    if (out.n1 % p != 0 && out.n2 % p != 0) out.n1 *= p;
  }
  return out;
}

}  // namespace ppart
