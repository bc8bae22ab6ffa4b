#include "ppart/erdoswoods.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace ppart {

namespace {

// Machine-word verifier used by the brute-force scan; identical logic to
// verify_interval. Almost every candidate fails at its first interior point,
// so the early exit carries the scan.
bool verify_small(std::int64_t e1, std::int64_t w) {
  const std::int64_t e2 = e1 + w;
  for (std::int64_t k = e1 + 1; k < e2; ++k) {
    if (std::gcd(k, e1) == 1 && std::gcd(k, e2) == 1) return false;
  }
  return true;
}

}  // namespace

bool verify_interval(const EWInterval& interval) {
  if (interval.e1 < 2) {
    throw std::invalid_argument("verify_interval: e1 must be at least 2");
  }
  if (interval.w < 1) {
    throw std::invalid_argument("verify_interval: w must be at least 1");
  }
  const Int e2 = interval.e2();
  for (Int k = interval.e1 + 1; k < e2; ++k) {
    if (gcd(k, interval.e1) == 1 && gcd(k, e2) == 1) return false;
  }
  return true;
}

PrimeSelection select_primes(const PrimePartition& partition) {
  const std::int64_t n = partition.n();
  const auto& primes = partition.primes();
  const auto& sides = partition.sides();
  PrimeSelection out;
  out.n = n;
  out.prime_for.reserve(static_cast<std::size_t>(n - 1));
  for (std::int64_t j = 1; j < n; ++j) {
    std::int64_t chosen = 0;
    for (std::size_t i = 0; i < primes.size() && chosen == 0; ++i) {
      if (sides[i] == 1 && j % primes[i] == 0) chosen = primes[i];
    }
    for (std::size_t i = 0; i < primes.size() && chosen == 0; ++i) {
      if (sides[i] == 2 && (n - j) % primes[i] == 0) chosen = primes[i];
    }
    if (chosen == 0) {
      throw std::invalid_argument("select_primes: partition leaves the decomposition (" +
                                  std::to_string(j) + ", " + std::to_string(n - j) + ") uncovered");
    }
    out.prime_for.push_back(chosen);
  }
  return out;
}

EWInterval interval_from_partition(const PrimePartition& partition) {
  const PrimeSelection selection = select_primes(partition);
  const std::int64_t n = selection.n;
  CongruenceSystem system;
  for (std::int64_t j = 1; j < n; ++j) {
    const std::int64_t p = selection.prime_for[static_cast<std::size_t>(j - 1)];
    system.congruences.push_back({Int((p - j % p) % p), Int(p)});
  }
  const CrtSolution solution = crt_solve(system);
  Int e1 = solution.value;
  if (e1 < 2) e1 += solution.modulus;  // keep the endpoints self-covering
  return {std::move(e1), n};
}

PrimePartition partition_from_interval(const EWInterval& interval) {
  if (interval.w < 4) {
    throw std::invalid_argument("partition_from_interval: w must be at least 4");
  }
  if (!verify_interval(interval)) {
    throw std::invalid_argument("partition_from_interval: interval is not Erdős–Woods");
  }
  const Int e2 = interval.e2();
  std::vector<std::int64_t> part1;
  std::vector<std::int64_t> part2;
  for (const std::int64_t p : primes_below(interval.w)) {
    if (interval.e1 % p == 0) {
      part1.push_back(p);
    } else if (e2 % p == 0) {
      part2.push_back(p);
    } else {
      part1.push_back(p);  // primes missing from both endpoints
    }
  }
  return PrimePartition::from_parts(interval.w, part1, part2);
}

std::optional<Int> min_interval_start(std::int64_t w, std::int64_t bound, int jobs) {
  if (w < 4) {
    throw std::invalid_argument("min_interval_start: w must be at least 4");
  }
  if (bound < 2) {
    throw std::invalid_argument("min_interval_start: bound must be at least 2");
  }
  if (bound > std::numeric_limits<std::int64_t>::max() - w - 1) {
    throw std::invalid_argument("min_interval_start: bound too large");
  }
  if (jobs < 1) jobs = 1;

  if (jobs == 1) {
    for (std::int64_t e1 = 2; e1 <= bound; ++e1) {
      if (verify_small(e1, w)) return Int(e1);
    }
    return std::nullopt;
  }

  // Fixed chunk grid, one batch of `jobs` chunks at a time: the first hit in
  // chunk order is the minimum, independent of thread scheduling.
  constexpr std::int64_t kChunk = 1 << 14;
  for (std::int64_t base = 2; base <= bound; base += kChunk * jobs) {
    std::vector<std::int64_t> hit(static_cast<std::size_t>(jobs), -1);
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        const std::int64_t lo = base + kChunk * t;
        const std::int64_t hi = std::min(lo + kChunk, bound + 1);
        for (std::int64_t e1 = lo; e1 < hi; ++e1) {
          if (verify_small(e1, w)) {
            hit[static_cast<std::size_t>(t)] = e1;
            break;
          }
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (const std::int64_t e1 : hit) {
      if (e1 >= 0) return Int(e1);
    }
  }
  return std::nullopt;
}

}  // namespace ppart
