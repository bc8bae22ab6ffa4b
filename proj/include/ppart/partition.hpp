#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ppart {

// A 2-coloring of all primes below n. Stored canonically: prime 2 is always
// on side 1 (the pair of parts is unordered, so nothing is lost). Both parts
// are nonempty.
class PrimePartition {
 public:
  // Builds from the two parts, which together must be exactly the primes
  // below n with both parts nonempty. Canonicalizes orientation.
  static PrimePartition from_parts(std::int64_t n,
                                   const std::vector<std::int64_t>& part1,
                                   const std::vector<std::int64_t>& part2);

  // sides[i] in {1, 2} labels primes_below(n)[i]; canonicalizes orientation.
  static PrimePartition from_sides(std::int64_t n, std::vector<int> sides);

  std::int64_t n() const { return n_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }
  const std::vector<int>& sides() const { return sides_; }

  int side_of(std::int64_t prime) const;
  std::vector<std::int64_t> part(int side) const;

  bool operator==(const PrimePartition& other) const {
    return n_ == other.n_ && sides_ == other.sides_;
  }

 private:
  PrimePartition(std::int64_t n, std::vector<std::int64_t> primes, std::vector<int> sides);

  std::int64_t n_ = 0;
  std::vector<std::int64_t> primes_;  // primes_below(n), ascending
  std::vector<int> sides_;            // parallel to primes_, values 1 or 2
};

// One ordered decomposition n = n1 + n2 with n1, n2 >= 1.
struct Decomposition {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;

  bool operator==(const Decomposition& other) const {
    return n1 == other.n1 && n2 == other.n2;
  }
};

struct Literal {
  std::int64_t prime = 0;
  int side = 0;

  bool operator==(const Literal& other) const {
    return prime == other.prime && side == other.side;
  }
};

// The disjunction a partition must satisfy for one ordered decomposition:
// some prime of n1 on side 1, or some prime of n2 on side 2.
struct Clause {
  Decomposition decomposition;
  std::vector<Literal> literals;  // sorted by (side, prime)
};

// Exactly n-1 clauses, one per ordered decomposition n1 = 1..n-1. n >= 4.
std::vector<Clause> clauses_for(std::int64_t n);

// True iff every clause of clauses_for(partition.n()) is satisfied.
bool verify_partition(const PrimePartition& partition);

enum class ConstraintKind { kSameSide, kDifferentSide };

// A binary same/different-side consequence of the clause set, together with
// the decompositions that induce it. Redundant for the solver but propagates.
struct BinaryConstraint {
  ConstraintKind kind;
  std::int64_t p = 0;  // p < q
  std::int64_t q = 0;
  std::vector<Decomposition> provenance;
};

struct DerivedConstraints {
  std::vector<BinaryConstraint> constraints;
  // n - 1 is a prime power: the clauses for (1, n-1) and (n-1, 1) are
  // conflicting unit clauses, so no partition exists.
  bool immediate_unsat = false;
  std::int64_t unsat_prime = 0;  // the base of n - 1 when immediate_unsat
};

// Same-side constraints from decompositions with both sides prime powers of
// distinct primes, plus the different-side constraint when n - 1 has exactly
// two distinct prime factors. n >= 4.
DerivedConstraints derive_binary_constraints(std::int64_t n);

// Backtracking solver: side(2) fixed to 1, parity union-find seeded with the
// derived binary constraints, unit propagation on clauses, primes branched in
// descending order. Returns a canonical satisfying partition or empty. n >= 4.
std::optional<PrimePartition> solve(std::int64_t n);

// Exhaustive oracle over all 2^(pi(n)-1) canonical assignments, excluding
// single-part ones. Result ordered lexicographically by side vector.
// Requires pi(n) <= 26.
std::vector<PrimePartition> enumerate_partitions(std::int64_t n);

// False for n < 4, otherwise whether solve(n) finds a partition. n >= 1.
bool is_prime_partitionable(std::int64_t n);

// All prime partitionable n with 4 <= n <= limit, ascending.
std::vector<std::int64_t> enumerate_pp(std::int64_t limit);

enum class StepKind { kSameSide, kDifferentSide, kUnit };

// One derivation step of a refutation. Binary steps carry the two primes the
// constraint relates; unit steps carry the single forced prime. The final
// step of a chain is the constraint that contradicts the ones before it.
struct ChainStep {
  StepKind kind;
  std::vector<std::int64_t> primes;  // ascending
  Decomposition decomposition;

  std::string text() const;

  bool operator==(const ChainStep& other) const {
    return kind == other.kind && primes == other.primes &&
           decomposition == other.decomposition;
  }
};

// Best-effort refutation by parity propagation: clauses are re-simplified
// modulo the union-find classes until fixpoint; a clause pair collapsing to
// two class literals yields a same/different-side constraint, a collapse to
// one literal yields clashing units. On conflict, returns the pruned
// derivation chain (only steps the contradiction depends on). Returns empty
// when propagation alone cannot refute. Rejects prime partitionable n.
std::optional<std::vector<ChainStep>> contradiction_chain(std::int64_t n);

}  // namespace ppart
