#include "ppart/numtheory.hpp"

#include <map>
#include <stdexcept>

namespace ppart {

Int Factorization::reconstruct() const {
  Int m = 1;
  for (const auto& [p, e] : factors) {
    for (unsigned i = 0; i < e; ++i) m *= p;
  }
  return m;
}

std::vector<std::int64_t> primes_below(std::int64_t n) {
  if (n <= 2) return {};
  std::vector<char> composite(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> primes;
  for (std::int64_t i = 2; i < n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j < n; j += i) composite[static_cast<std::size_t>(j)] = 1;
  }
  return primes;
}

Factorization factorize(const Int& m) {
  if (m < 1) throw std::invalid_argument("factorize: argument must be >= 1");
  Factorization result{m, {}};
  Int rest = m;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) result.factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel; adequate because everything this artifact factorizes is
  // small or a product of explicitly known primes.
  for (Int d = 5; d * d <= rest; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (rest > 1) result.factors.emplace_back(rest, 1);
  return result;
}

std::optional<std::pair<Int, unsigned>> is_prime_power(const Int& m) {
  const Factorization f = factorize(m);
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors.front();
}

Int radical(const Int& m) {
  Int r = 1;
  for (const auto& [p, e] : factorize(m).factors) r *= p;
  return r;
}

std::optional<Int> mod_inverse(const Int& a, const Int& m) {
  if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
  if (m == 1) return Int(0);
  // extended Euclid on (a mod m, m)
  Int r0 = a % m;
  if (r0 < 0) r0 += m;
  Int r1 = m;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    const Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) return std::nullopt;
  if (s0 < 0) s0 += m;
  return s0;
}

CrtSolution crt_solve(const CongruenceSystem& system) {
  std::map<Int, Int> residue_by_modulus;
  for (const Congruence& c : system.congruences) {
    if (c.modulus < 2) throw std::invalid_argument("crt_solve: modulus must be >= 2");
    Int r = c.residue % c.modulus;
    if (r < 0) r += c.modulus;
    const auto [it, inserted] = residue_by_modulus.emplace(c.modulus, r);
    if (!inserted && it->second != r) {
      throw std::invalid_argument("crt_solve: two different residues for one modulus");
    }
  }
  Int x = 0, modulus = 1;
  for (const auto& [m, r] : residue_by_modulus) {
    const auto inv = mod_inverse(modulus % m, m);
    if (!inv) throw std::invalid_argument("crt_solve: moduli are not pairwise coprime");
    Int t = ((r - x) % m) * (*inv) % m;
    if (t < 0) t += m;
    x += modulus * t;
    modulus *= m;
  }
  return {x, modulus};
}

}  // namespace ppart
