#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ppart {

// Arbitrary-precision integer used for witness pairs, interval endpoints and
// CRT solutions. Everything that indexes primes or decompositions stays int64.
using Int = boost::multiprecision::cpp_int;

/// Prime factorization with primes ascending and exponents >= 1.
/// value == product of prime^exponent; value == 1 iff factors is empty.
struct Factorization {
  Int value;
  std::vector<std::pair<Int, unsigned>> factors;

  Int reconstruct() const;
};

/// All primes p with p < n, ascending. Total: n <= 2 yields an empty list.
std::vector<std::int64_t> primes_below(std::int64_t n);

/// Deterministic trial division. Requires m >= 1.
Factorization factorize(const Int& m);

/// (q, l) with q prime, l >= 1 and q^l == m, when m has exactly one distinct
/// prime factor. Empty otherwise (in particular for m == 1).
std::optional<std::pair<Int, unsigned>> is_prime_power(const Int& m);

/// Product of the distinct prime factors of m; radical(1) == 1.
Int radical(const Int& m);

/// One congruence x = residue (mod modulus); modulus expected prime.
struct Congruence {
  Int residue;
  Int modulus;
};

/// A set of congruences, possibly with duplicates; crt_solve deduplicates
/// and rejects two different residues for the same modulus.
struct CongruenceSystem {
  std::vector<Congruence> congruences;
};

struct CrtSolution {
  Int value;    // least non-negative solution, 0 <= value < modulus
  Int modulus;  // product of the distinct moduli
};

/// Incremental pairwise CRT over the deduplicated system. Moduli must be
/// pairwise coprime after deduplication.
CrtSolution crt_solve(const CongruenceSystem& system);

/// Inverse of a modulo m, or empty when gcd(a, m) != 1. Requires m >= 1.
std::optional<Int> mod_inverse(const Int& a, const Int& m);

}  // namespace ppart
