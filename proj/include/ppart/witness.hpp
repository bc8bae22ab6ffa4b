#pragma once

#include <cstdint>

#include "ppart/numtheory.hpp"
#include "ppart/partition.hpp"

namespace ppart {

// A gcd witness pair (d, n1, n2): gcd(n1, n2) = d, and every split
// d = d1 + d2 with d1, d2 >= 1 has gcd(n1, d1) > 1 or gcd(n2, d2) > 1.
// The factorizations n1 = d*k1, n2 = d*k2 then have gcd(k1, k2) = 1.
struct WitnessPair {
  std::int64_t d = 0;
  Int n1;
  Int n2;

  bool operator==(const WitnessPair& other) const {
    return d == other.d && n1 == other.n1 && n2 == other.n2;
  }
};

// True iff every split d = d1 + d2 hits a common factor on its side. The
// shape itself (d >= 2, positive n1, n2, gcd(n1, n2) = d) is a precondition;
// violations throw rather than return false.
bool verify_witness(const WitnessPair& pair);

// (n, n*k1, n*k2) where k_j multiplies the primes of part j that do not
// divide n. The result verifies whenever the partition does; non-satisfying
// partitions are rejected.
WitnessPair witness_from_partition(const PrimePartition& partition);

// Recovers a partition of the primes below d: enriches the pair first, then
// puts the primes of n1 into part 1 and the primes of n2/d not already
// placed into part 2. Requires d >= 4 and a verifying pair.
PrimePartition partition_from_witness(const WitnessPair& pair);

// The canonical partner d * (product of primes p < d with p not dividing
// n1). Requires d >= 2 and d | n1; the result n2' has gcd(n1, n2') = d.
Int complete_partner(std::int64_t d, const Int& n1);

// Squarefree reduction: each k_j is replaced by the product of its distinct
// prime factors below d that do not divide d. Verification is preserved and
// the operation is idempotent. Requires a verifying pair.
WitnessPair normalize_witness(const WitnessPair& pair);

// Multiplies every prime p < d dividing neither n1 nor n2 into n1, so the
// combined prime set covers all primes below d. Preserves gcd(n1, n2) = d
// and verification. Requires a verifying pair.
WitnessPair enrich_witness(const WitnessPair& pair);

}  // namespace ppart
