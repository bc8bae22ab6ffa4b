// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ppart/certify.hpp"
#include "ppart/cli.hpp"
#include "ppart/erdoswoods.hpp"
#include "ppart/numtheory.hpp"
#include "ppart/partition.hpp"
#include "ppart/witness.hpp"

using namespace ppart;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass) {
  std::cout << (pass ? "PASS" : "FAIL") << ": criterion " << index << " (" << name << ")"
            << std::endl;
  if (!pass) ++failures;
}

template <typename Fn>
bool guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    std::cerr << "  exception: " << e.what() << "\n";
    return false;
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

PrimePartition partition_2_5_11() {
  return PrimePartition::from_parts(16, {2, 5, 11}, {3, 7, 13});
}

PrimePartition partition_2_3_7_13() {
  return PrimePartition::from_parts(16, {2, 3, 7, 13}, {5, 11});
}

// --- criterion 1: corrected-list reproduction ------------------------------

bool corrected_list_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = dispatch({"enumerate", "--limit", "100", "--jobs", "1"}, out, err);
  const double elapsed = seconds_since(start);
  const std::string expected =
      "16\n22\n34\n36\n46\n56\n64\n66\n70\n76\n78\n86\n88\n92\n94\n96\n100\n";
  if (code != 0 || out.str() != expected) return false;
  if (out.str().find("52") != std::string::npos) return false;
  if (elapsed >= 60.0) {
    std::cerr << "  too slow: " << elapsed << "s\n";
    return false;
  }
  return true;
}

// --- criterion 2: corrigendum check ----------------------------------------

bool corrigendum_check() {
  std::ostringstream out;
  std::ostringstream err;
  if (dispatch({"check", "52"}, out, err) != 0 || out.str() != "no\n") return false;

  const auto chain = contradiction_chain(52);
  if (!chain || chain->size() != 4) return false;

  using Key = std::tuple<int, std::vector<std::int64_t>, std::int64_t, std::int64_t>;
  std::multiset<Key> got;
  for (const auto& step : *chain) {
    got.insert({static_cast<int>(step.kind), step.primes, step.decomposition.n1,
                step.decomposition.n2});
  }
  const std::multiset<Key> expected = {
      {static_cast<int>(StepKind::kSameSide), {3, 5}, 25, 27},
      {static_cast<int>(StepKind::kSameSide), {3, 7}, 3, 49},
      {static_cast<int>(StepKind::kSameSide), {5, 17}, 17, 35},
      {static_cast<int>(StepKind::kDifferentSide), {3, 17}, 1, 51},
  };
  return got == expected;
}

// --- criterion 3: the two 16-partitions ------------------------------------

bool two_16_partitions() {
  const auto partitions = enumerate_partitions(16);
  if (partitions.size() != 2) return false;
  const bool has_first =
      std::find(partitions.begin(), partitions.end(), partition_2_5_11()) != partitions.end();
  const bool has_second =
      std::find(partitions.begin(), partitions.end(), partition_2_3_7_13()) != partitions.end();
  return has_first && has_second;
}

// --- criterion 4: witness example ------------------------------------------

bool witness_example() {
  if (!verify_witness({16, 880, 4368})) return false;
  if (!(witness_from_partition(partition_2_5_11()) == WitnessPair{16, 880, 4368})) return false;

  const WitnessPair pair46{46, Int(46) * 3 * 19 * 37 * 43,
                           Int(46) * 5 * 7 * 11 * 13 * 17 * 29 * 41};
  if (!verify_witness(pair46)) return false;
  const auto fat = enrich_witness(pair46);
  return fat.n1 == pair46.n1 * 31 && fat.n2 == pair46.n2;
}

// --- criterion 5: Erdos-Woods example --------------------------------------

bool interval_example() {
  if (!verify_interval({2184, 16})) return false;
  if (min_interval_start(16, 10000) != Int(2184)) return false;
  return partition_from_interval({2184, 16}) == partition_2_3_7_13();
}

// --- criterion 6: oracle equivalence ---------------------------------------

bool oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t n = 4; n <= 60; ++n) {
    if (solve(n).has_value() != !enumerate_partitions(n).empty()) {
      std::cerr << "  mismatch at n = " << n << "\n";
      return false;
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 300.0) {
    std::cerr << "  too slow: " << elapsed << "s\n";
    return false;
  }
  return true;
}

// --- criterion 7: theorem sweeps -------------------------------------------

bool theorem_sweeps() {
  for (std::int64_t n = 4; n <= 100; ++n) {
    if (!cross_check(n)) return false;
    const auto found = solve(n);
    if (found) {
      if (!verify_witness(witness_from_partition(*found))) return false;
      if (!verify_interval(interval_from_partition(*found))) return false;
    }
  }
  for (std::int64_t n = 4; n <= 1000; ++n) {
    if (is_prime_power(n - 1) && is_prime_partitionable(n)) return false;
  }
  return true;
}

// --- criterion 8: omega of n - 1 --------------------------------------------

bool omega_spot_values() {
  if (!is_prime_partitionable(106) || !is_prime_partitionable(196)) return false;
  for (std::int64_t n = 4; n <= 105; ++n) {
    if (!is_prime_partitionable(n)) continue;
    if (factorize(n - 1).factors.size() != 2) return false;
  }
  return factorize(105).factors.size() == 3;
}

// --- criterion 9: property suites ------------------------------------------

bool goldbach_same_side() {
  for (std::int64_t n = 4; n <= 60; ++n) {
    const auto primes = primes_below(n);
    for (const auto& partition : enumerate_partitions(n)) {
      for (const std::int64_t p : primes) {
        const std::int64_t q = n - p;
        if (q < p || !std::binary_search(primes.begin(), primes.end(), q)) continue;
        if (partition.side_of(p) != partition.side_of(q)) return false;
      }
    }
  }
  return true;
}

bool symmetry_closure() {
  for (std::int64_t n = 4; n <= 40; ++n) {
    const auto clauses = clauses_for(n);
    for (const auto& partition : enumerate_partitions(n)) {
      std::map<std::int64_t, int> swapped;
      for (const std::int64_t p : partition.primes()) swapped[p] = 3 - partition.side_of(p);
      for (const auto& clause : clauses) {
        bool hit = false;
        for (const auto& literal : clause.literals) {
          if (swapped.at(literal.prime) == literal.side) {
            hit = true;
            break;
          }
        }
        if (!hit) return false;
      }
    }
  }
  return true;
}

bool normalize_enrich_laws() {
  for (std::int64_t n = 4; n <= 40; ++n) {
    for (const auto& partition : enumerate_partitions(n)) {
      const auto pair = witness_from_partition(partition);
      if (!(normalize_witness(pair) == pair)) return false;
      WitnessPair padded = pair;
      padded.n1 *= 101;
      if (!verify_witness(padded)) return false;
      if (!(normalize_witness(padded) == pair)) return false;
      const auto fat = enrich_witness(pair);
      if (!verify_witness(fat)) return false;
      if (!(enrich_witness(fat) == fat)) return false;
    }
  }
  return true;
}

bool crt_uniqueness_by_scan() {
  bool scanned_any = false;
  for (std::int64_t n = 4; n <= 60; ++n) {
    for (const auto& partition : enumerate_partitions(n)) {
      const auto selection = select_primes(partition);
      CongruenceSystem system;
      for (std::int64_t j = 1; j < n; ++j) {
        const std::int64_t p = selection.prime_for[j - 1];
        system.congruences.push_back({Int((p - j % p) % p), Int(p)});
      }
      const auto solution = crt_solve(system);
      if (solution.modulus > 1000000) continue;
      scanned_any = true;
      std::map<std::int64_t, std::int64_t> residue_of;
      for (const auto& congruence : system.congruences) {
        residue_of[congruence.modulus.convert_to<std::int64_t>()] =
            congruence.residue.convert_to<std::int64_t>();
      }
      const auto modulus = solution.modulus.convert_to<std::int64_t>();
      std::int64_t hits = 0;
      for (std::int64_t x = 0; x < modulus; ++x) {
        bool ok = true;
        for (const auto& [m, r] : residue_of) {
          if (x % m != r) {
            ok = false;
            break;
          }
        }
        if (ok) {
          ++hits;
          if (Int(x) != solution.value) return false;
        }
      }
      if (hits != 1) return false;
    }
  }
  return scanned_any;
}

bool property_suites() {
  return goldbach_same_side() && symmetry_closure() && normalize_enrich_laws() &&
         crt_uniqueness_by_scan();
}

}  // namespace

int main() {
  report(1, "corrected-list reproduction", guarded(corrected_list_reproduction));
  report(2, "corrigendum check", guarded(corrigendum_check));
  report(3, "the two 16-partitions", guarded(two_16_partitions));
  report(4, "witness example", guarded(witness_example));
  report(5, "Erdos-Woods example", guarded(interval_example));
  report(6, "oracle equivalence", guarded(oracle_equivalence));
  report(7, "theorem sweeps", guarded(theorem_sweeps));
  report(8, "omega of n - 1 spot values", guarded(omega_spot_values));
  report(9, "property suites", guarded(property_suites));
  return failures == 0 ? 0 : 1;
}
