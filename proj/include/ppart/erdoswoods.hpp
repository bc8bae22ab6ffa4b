#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppart/numtheory.hpp"
#include "ppart/partition.hpp"

namespace ppart {

// The interval [e1, e1 + w]: Erdős–Woods when every element shares a prime
// factor with an endpoint. e1 >= 2 so the endpoints cover themselves, which
// leaves only the interior points to check.
struct EWInterval {
  Int e1;
  std::int64_t w = 0;

  Int e2() const { return e1 + w; }

  bool operator==(const EWInterval& other) const {
    return e1 == other.e1 && w == other.w;
  }
};

// True iff every interior k (e1 < k < e1 + w) has gcd(k, e1) > 1 or
// gcd(k, e2) > 1. Requires e1 >= 2, w >= 1.
bool verify_interval(const EWInterval& interval);

// One covering prime per offset j in 1..n-1: prime_for[j-1] divides j and
// sits in part 1, or divides n - j and sits in part 2.
struct PrimeSelection {
  std::int64_t n = 0;
  std::vector<std::int64_t> prime_for;
};

// Picks the smallest part-1 prime dividing j, falling back to the smallest
// part-2 prime dividing n - j. Some prime always qualifies when the clause
// for (j, n-j) is satisfied; otherwise the partition is rejected.
PrimeSelection select_primes(const PrimePartition& partition);

// Builds the covering congruences e1 = -j (mod p_j) from select_primes,
// solves them by CRT (duplicates collapse, no contradictions arise for a
// verifying partition) and shifts the least solution into [2, M+1].
// The returned width is n.
EWInterval interval_from_partition(const PrimePartition& partition);

// Recovers a partition of the primes below w: part 1 takes the primes of e1
// plus any primes below w dividing neither endpoint, part 2 the remaining
// primes of e2. Requires w >= 4 and a verifying interval.
PrimePartition partition_from_interval(const EWInterval& interval);

// Smallest e1 in [2, bound] making [e1, e1 + w] an Erdős–Woods interval, or
// empty when none exists up to the bound. The scan may fan out over several
// threads; the answer never depends on jobs.
std::optional<Int> min_interval_start(std::int64_t w, std::int64_t bound, int jobs = 1);

}  // namespace ppart
