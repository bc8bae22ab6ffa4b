#include "ppart/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "ppart/numtheory.hpp"
#include "ppart/union_find.hpp"

namespace ppart {

namespace {

// Smallest prime factor for every value in [0, limit). Entries 0 and 1 stay 0.
std::vector<std::int32_t> spf_table(std::int64_t limit) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(limit), 0);
  for (std::int64_t i = 2; i < limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j < limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
    }
  }
  return spf;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t m, const std::vector<std::int32_t>& spf) {
  std::vector<std::int64_t> out;
  while (m > 1) {
    const std::int64_t p = spf[m];
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  return out;
}

void require_min_n(std::int64_t n, const char* op) {
  if (n < 4) {
    throw std::invalid_argument(std::string(op) + ": n must be at least 4");
  }
}

// Index of p in the ascending prime list; callers guarantee membership.
int prime_index(const std::vector<std::int64_t>& primes, std::int64_t p) {
  const auto it = std::lower_bound(primes.begin(), primes.end(), p);
  return static_cast<int>(it - primes.begin());
}

}  // namespace

PrimePartition::PrimePartition(std::int64_t n, std::vector<std::int64_t> primes, std::vector<int> sides)
    : n_(n), primes_(std::move(primes)), sides_(std::move(sides)) {}

PrimePartition PrimePartition::from_sides(std::int64_t n, std::vector<int> sides) {
  require_min_n(n, "PrimePartition");
  auto primes = primes_below(n);
  if (sides.size() != primes.size()) {
    throw std::invalid_argument("PrimePartition: need one side label per prime below n");
  }
  bool seen1 = false;
  bool seen2 = false;
  for (const int s : sides) {
    if (s == 1) {
      seen1 = true;
    } else if (s == 2) {
      seen2 = true;
    } else {
      throw std::invalid_argument("PrimePartition: side labels must be 1 or 2");
    }
  }
  if (!seen1 || !seen2) {
    throw std::invalid_argument("PrimePartition: both parts must be nonempty");
  }
  if (sides.front() == 2) {
    for (int& s : sides) s = 3 - s;  // canonical orientation: 2 on side 1
  }
  return PrimePartition(n, std::move(primes), std::move(sides));
}

PrimePartition PrimePartition::from_parts(std::int64_t n,
                                          const std::vector<std::int64_t>& part1,
                                          const std::vector<std::int64_t>& part2) {
  require_min_n(n, "PrimePartition");
  const auto primes = primes_below(n);
  std::vector<int> sides(primes.size(), 0);
  const auto place = [&](const std::vector<std::int64_t>& part, int side) {
    for (const std::int64_t p : part) {
      const auto it = std::lower_bound(primes.begin(), primes.end(), p);
      if (it == primes.end() || *it != p) {
        throw std::invalid_argument("PrimePartition: " + std::to_string(p) + " is not a prime below n");
      }
      int& slot = sides[static_cast<std::size_t>(it - primes.begin())];
      if (slot != 0) {
        throw std::invalid_argument("PrimePartition: prime " + std::to_string(p) + " labeled twice");
      }
      slot = side;
    }
  };
  place(part1, 1);
  place(part2, 2);
  for (const int s : sides) {
    if (s == 0) {
      throw std::invalid_argument("PrimePartition: parts must cover every prime below n");
    }
  }
  return from_sides(n, std::move(sides));
}

int PrimePartition::side_of(std::int64_t prime) const {
  const auto it = std::lower_bound(primes_.begin(), primes_.end(), prime);
  if (it == primes_.end() || *it != prime) {
    throw std::invalid_argument("side_of: " + std::to_string(prime) + " is not a prime below n");
  }
  return sides_[static_cast<std::size_t>(it - primes_.begin())];
}

std::vector<std::int64_t> PrimePartition::part(int side) const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (sides_[i] == side) out.push_back(primes_[i]);
  }
  return out;
}

std::vector<Clause> clauses_for(std::int64_t n) {
  require_min_n(n, "clauses_for");
  const auto spf = spf_table(n);
  std::vector<Clause> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (std::int64_t n1 = 1; n1 < n; ++n1) {
    Clause clause;
    clause.decomposition = {n1, n - n1};
    // Factors come out ascending, side 1 before side 2, so the literal list
    // is already sorted by (side, prime).
    for (const std::int64_t p : distinct_prime_factors(n1, spf)) {
      clause.literals.push_back({p, 1});
    }
    for (const std::int64_t p : distinct_prime_factors(n - n1, spf)) {
      clause.literals.push_back({p, 2});
    }
    out.push_back(std::move(clause));
  }
  return out;
}

bool verify_partition(const PrimePartition& partition) {
  for (const auto& clause : clauses_for(partition.n())) {
    bool satisfied = false;
    for (const auto& literal : clause.literals) {
      if (partition.side_of(literal.prime) == literal.side) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

DerivedConstraints derive_binary_constraints(std::int64_t n) {
  require_min_n(n, "derive_binary_constraints");
  DerivedConstraints out;
  const auto spf = spf_table(n);
  // The prime q when m = q^l, otherwise 0.
  const auto sole_prime = [&](std::int64_t m) -> std::int64_t {
    if (m < 2) return 0;
    const std::int64_t p = spf[m];
    while (m % p == 0) m /= p;
    return m == 1 ? p : 0;
  };
  for (std::int64_t n1 = 2; n1 <= n - n1; ++n1) {
    const std::int64_t n2 = n - n1;
    const std::int64_t p = sole_prime(n1);
    const std::int64_t q = sole_prime(n2);
    if (p == 0 || q == 0 || p == q) continue;
    BinaryConstraint constraint;
    constraint.kind = ConstraintKind::kSameSide;
    constraint.p = std::min(p, q);
    constraint.q = std::max(p, q);
    constraint.provenance.push_back({n1, n2});
    constraint.provenance.push_back({n2, n1});
    out.constraints.push_back(std::move(constraint));
  }
  const auto factors = distinct_prime_factors(n - 1, spf);
  if (factors.size() == 1) {
    out.immediate_unsat = true;
    out.unsat_prime = factors[0];
  } else if (factors.size() == 2) {
    BinaryConstraint constraint;
    constraint.kind = ConstraintKind::kDifferentSide;
    constraint.p = factors[0];
    constraint.q = factors[1];
    constraint.provenance.push_back({1, n - 1});
    constraint.provenance.push_back({n - 1, 1});
    out.constraints.push_back(std::move(constraint));
  }
  return out;
}

namespace {

// Backtracking core. Parity classes from the seeded union-find are frozen, so
// one assignment fixes a whole class at once.
struct Solver {
  std::vector<std::vector<std::pair<int, int>>> clauses;  // (prime index, side)
  std::vector<std::int8_t> value;                         // 0 = free, else 1 or 2
  std::vector<int> root_of;
  std::vector<int> parity_of;
  std::vector<std::vector<int>> members;  // root -> member indices

  bool assign(int var, int side, std::vector<int>& trail) {
    const int root = root_of[var];
    const int root_side = parity_of[var] ? 3 - side : side;
    for (const int member : members[root]) {
      const int s = parity_of[member] ? 3 - root_side : root_side;
      if (value[member] == 0) {
        value[member] = static_cast<std::int8_t>(s);
        trail.push_back(member);
      } else if (value[member] != s) {
        return false;
      }
    }
    return true;
  }

  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : clauses) {
        bool satisfied = false;
        int free_count = 0;
        int free_var = -1;
        int free_side = 0;
        for (const auto& [var, side] : clause) {
          if (value[var] == side) {
            satisfied = true;
            break;
          }
          if (value[var] == 0) {
            ++free_count;
            free_var = var;
            free_side = side;
          }
        }
        if (satisfied) continue;
        if (free_count == 0) return false;
        if (free_count == 1) {
          if (!assign(free_var, free_side, trail)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (const int var : trail) value[var] = 0;
  }

  bool search(const std::vector<int>& order) {
    std::vector<int> trail;
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }
    int branch_var = -1;
    for (const int var : order) {
      if (value[var] == 0) {
        branch_var = var;
        break;
      }
    }
    if (branch_var < 0) {
      // Complete assignment; side 2 must be inhabited.
      if (std::count(value.begin(), value.end(), std::int8_t{2}) > 0) return true;
      undo(trail);
      return false;
    }
    for (const int side : {1, 2}) {
      std::vector<int> branch_trail;
      if (assign(branch_var, side, branch_trail) && search(order)) return true;
      undo(branch_trail);
    }
    undo(trail);
    return false;
  }
};

}  // namespace

std::optional<PrimePartition> solve(std::int64_t n) {
  require_min_n(n, "solve");
  const auto derived = derive_binary_constraints(n);
  if (derived.immediate_unsat) return std::nullopt;
  const auto primes = primes_below(n);
  const int count = static_cast<int>(primes.size());

  ParityUnionFind classes(count);
  for (const auto& constraint : derived.constraints) {
    const int u = prime_index(primes, constraint.p);
    const int v = prime_index(primes, constraint.q);
    const int parity = constraint.kind == ConstraintKind::kSameSide ? 0 : 1;
    if (classes.unite(u, v, parity) == ParityUnionFind::UniteResult::kConflict) {
      return std::nullopt;  // sound: the constraints are implied by the clauses
    }
  }

  Solver solver;
  solver.value.assign(static_cast<std::size_t>(count), 0);
  solver.root_of.resize(static_cast<std::size_t>(count));
  solver.parity_of.resize(static_cast<std::size_t>(count));
  solver.members.assign(static_cast<std::size_t>(count), {});
  for (int var = 0; var < count; ++var) {
    const auto [root, parity] = classes.find(var);
    solver.root_of[var] = root;
    solver.parity_of[var] = parity;
    solver.members[root].push_back(var);
  }
  for (const auto& clause : clauses_for(n)) {
    std::vector<std::pair<int, int>> literals;
    literals.reserve(clause.literals.size());
    for (const auto& literal : clause.literals) {
      literals.emplace_back(prime_index(primes, literal.prime), literal.side);
    }
    solver.clauses.push_back(std::move(literals));
  }

  std::vector<int> order(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) order[i] = count - 1 - i;  // descending primes

  std::vector<int> seed;
  if (!solver.assign(0, 1, seed)) return std::nullopt;  // canonical: side(2) = 1
  if (!solver.search(order)) return std::nullopt;

  std::vector<int> sides(solver.value.begin(), solver.value.end());
  return PrimePartition::from_sides(n, std::move(sides));
}

std::vector<PrimePartition> enumerate_partitions(std::int64_t n) {
  require_min_n(n, "enumerate_partitions");
  const auto primes = primes_below(n);
  const int count = static_cast<int>(primes.size());
  if (count > 26) {
    throw std::invalid_argument("enumerate_partitions: more than 26 primes below n");
  }

  // Bit i set <=> primes[i] on side 2. Masks per clause: satisfied iff some
  // side-1 literal is off or some side-2 literal is on.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  for (const auto& clause : clauses_for(n)) {
    std::uint32_t side1 = 0;
    std::uint32_t side2 = 0;
    for (const auto& literal : clause.literals) {
      const std::uint32_t bit = std::uint32_t{1} << prime_index(primes, literal.prime);
      (literal.side == 1 ? side1 : side2) |= bit;
    }
    masks.emplace_back(side1, side2);
  }

  std::vector<std::uint32_t> hits;
  // Canonical assignments keep bit 0 (prime 2) clear; skip the two single-part
  // assignments by starting above zero and keeping side 2 nonempty.
  for (std::uint32_t rest = 1; rest < (std::uint32_t{1} << (count - 1)); ++rest) {
    const std::uint32_t assignment = rest << 1;
    bool ok = true;
    for (const auto& [side1, side2] : masks) {
      if ((side1 & ~assignment) == 0 && (side2 & assignment) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) hits.push_back(assignment);
  }

  // Lexicographic by side vector, i.e. by bits from index 0 upward.
  std::sort(hits.begin(), hits.end(), [count](std::uint32_t a, std::uint32_t b) {
    for (int i = 0; i < count; ++i) {
      const std::uint32_t ba = (a >> i) & 1;
      const std::uint32_t bb = (b >> i) & 1;
      if (ba != bb) return ba < bb;
    }
    return false;
  });

  std::vector<PrimePartition> out;
  out.reserve(hits.size());
  for (const std::uint32_t assignment : hits) {
    std::vector<int> sides(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) sides[i] = ((assignment >> i) & 1) ? 2 : 1;
    out.push_back(PrimePartition::from_sides(n, std::move(sides)));
  }
  return out;
}

bool is_prime_partitionable(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("is_prime_partitionable: n must be positive");
  }
  if (n < 4) return false;
  return solve(n).has_value();
}

std::vector<std::int64_t> enumerate_pp(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 4; n <= limit; ++n) {
    if (solve(n).has_value()) out.push_back(n);
  }
  return out;
}

std::string ChainStep::text() const {
  const std::int64_t n = decomposition.n1 + decomposition.n2;
  std::ostringstream out;
  out << n << " = " << decomposition.n1 << " + " << decomposition.n2 << " forces " << primes[0];
  switch (kind) {
    case StepKind::kSameSide:
      out << " and " << primes[1] << " into the same part";
      break;
    case StepKind::kDifferentSide:
      out << " and " << primes[1] << " into different parts";
      break;
    case StepKind::kUnit:
      out << " into P" << (decomposition.n1 % primes[0] == 0 ? 1 : 2);
      break;
  }
  return out.str();
}

namespace {

// Refutation engine: repeatedly re-simplifies the clause pairs {(j, n-j),
// (n-j, j)} modulo the current parity classes. A pair whose clause shrinks to
// one literal per side pins a prime (clashing units); two distinct literals
// give a binary same/different-side constraint. Each applied constraint is a
// proof-forest edge tagged with the edges its simplification consumed, so a
// conflict reports only the steps it actually depends on.
class ChainDeriver {
 public:
  explicit ChainDeriver(std::int64_t n)
      : n_(n),
        primes_(primes_below(n)),
        classes_(static_cast<int>(primes_.size())),
        adjacency_(primes_.size()) {
    for (const auto& clause : clauses_for(n)) {
      if (clause.decomposition.n1 > clause.decomposition.n2) break;  // mirrors add nothing
      std::vector<std::pair<int, int>> literals;
      for (const auto& literal : clause.literals) {
        literals.emplace_back(prime_index(primes_, literal.prime), literal.side);
      }
      half_clauses_.push_back(std::move(literals));
    }
  }

  std::optional<std::vector<ChainStep>> run() {
    for (;;) {
      std::optional<Candidate> best_same;
      std::optional<Candidate> best_diff;
      for (std::size_t index = 0; index < half_clauses_.size(); ++index) {
        const std::int64_t j = static_cast<std::int64_t>(index) + 1;
        const Collapse collapse = collapse_clause(half_clauses_[index]);
        if (collapse.kind == CollapseKind::kTautology || collapse.kind == CollapseKind::kWide) continue;
        if (collapse.kind == CollapseKind::kUnit) {
          return unit_chain(j, collapse);  // the mirror clause forces the opposite side
        }
        const auto relation = classes_.relation(collapse.u, collapse.v);
        if (relation && *relation == collapse.parity) continue;  // already known
        Candidate candidate{collapse.u, collapse.v, collapse.parity, {j, n_ - j}, collapse.deps};
        if (relation) {
          return conflict_chain(candidate);
        }
        if (collapse.parity == 0) {
          if (!best_same) best_same = std::move(candidate);
        } else {
          if (!best_diff) best_diff = std::move(candidate);
        }
      }
      const auto& chosen = best_same ? best_same : best_diff;
      if (!chosen) return std::nullopt;  // fixpoint without contradiction
      apply(*chosen);
    }
  }

 private:
  enum class CollapseKind { kTautology, kUnit, kBinary, kWide };

  struct Collapse {
    CollapseKind kind = CollapseKind::kTautology;
    int u = -1;             // unit: the pinned prime; binary: first group rep
    int v = -1;             // binary: second group rep
    int parity = 0;         // binary: 0 same side, 1 different sides
    std::vector<int> deps;  // edges explaining intra-class literal merges
  };

  struct Candidate {
    int u;
    int v;
    int parity;
    Decomposition decomposition;
    std::vector<int> deps;
  };

  struct Edge {
    int u;
    int v;
    ChainStep step;
    std::vector<int> deps;
  };

  Collapse collapse_clause(const std::vector<std::pair<int, int>>& literals) const {
    // A prime dividing both halves satisfies the clause under any partition.
    for (const auto& [var, side] : literals) {
      if (side != 1) break;
      for (const auto& [other, other_side] : literals) {
        if (other_side == 2 && other == var) return {};
      }
    }
    Collapse out;
    if (literals.size() == 1) {
      out.kind = CollapseKind::kUnit;
      out.u = literals[0].first;
      return out;
    }
    if (literals.size() == 2) {
      // Constraint read straight off the clause pair, no classes involved.
      out.kind = CollapseKind::kBinary;
      out.u = literals[0].first;
      out.v = literals[1].first;
      out.parity = literals[0].second == literals[1].second ? 1 : 0;
      return out;
    }
    // Three or more distinct primes: group literals by parity class.
    struct Group {
      int root;
      int eff;  // side the class root would take if this literal held
      int rep;  // first literal seen for the group
    };
    std::vector<Group> groups;
    std::vector<std::pair<int, int>> merges;  // (rep, var) pairs to explain
    for (const auto& [var, side] : literals) {
      const auto [root, parity] = classes_.find(var);
      const int eff = (side - 1) ^ parity;
      bool found = false;
      for (auto& group : groups) {
        if (group.root != root) continue;
        found = true;
        if (group.eff != eff) return {};  // class satisfiable either way
        merges.emplace_back(group.rep, var);
        break;
      }
      if (!found) groups.push_back({root, eff, var});
    }
    if (groups.size() > 2) {
      out.kind = CollapseKind::kWide;
      return out;
    }
    for (const auto& [rep, var] : merges) {
      for (const int edge : path_edges(rep, var)) out.deps.push_back(edge);
    }
    if (groups.size() == 1) {
      out.kind = CollapseKind::kUnit;
      out.u = groups[0].rep;
      return out;
    }
    out.kind = CollapseKind::kBinary;
    out.u = groups[0].rep;
    out.v = groups[1].rep;
    const int class_parity = groups[0].eff == groups[1].eff ? 1 : 0;
    out.parity = classes_.find(out.u).second ^ class_parity ^ classes_.find(out.v).second;
    return out;
  }

  // Edge ids along the unique forest path between two vars of one class.
  std::vector<int> path_edges(int from, int to) const {
    std::vector<int> parent(primes_.size(), -1);
    std::vector<int> via(primes_.size(), -1);
    std::vector<char> seen(primes_.size(), 0);
    std::deque<int> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
      const int current = queue.front();
      queue.pop_front();
      if (current == to) break;
      for (const auto& [next, edge] : adjacency_[current]) {
        if (seen[next]) continue;
        seen[next] = 1;
        parent[next] = current;
        via[next] = edge;
        queue.push_back(next);
      }
    }
    std::vector<int> out;
    for (int current = to; current != from; current = parent[current]) {
      out.push_back(via[current]);
    }
    return out;
  }

  void apply(const Candidate& candidate) {
    const int id = static_cast<int>(edges_.size());
    ChainStep step;
    step.kind = candidate.parity == 0 ? StepKind::kSameSide : StepKind::kDifferentSide;
    step.primes = {primes_[candidate.u], primes_[candidate.v]};
    std::sort(step.primes.begin(), step.primes.end());
    step.decomposition = candidate.decomposition;
    edges_.push_back({candidate.u, candidate.v, std::move(step), candidate.deps});
    adjacency_[candidate.u].emplace_back(candidate.v, id);
    adjacency_[candidate.v].emplace_back(candidate.u, id);
    classes_.unite(candidate.u, candidate.v, candidate.parity);
  }

  std::vector<ChainStep> closure_steps(std::vector<int> seeds) const {
    std::set<int> needed;
    while (!seeds.empty()) {
      const int id = seeds.back();
      seeds.pop_back();
      if (!needed.insert(id).second) continue;
      for (const int dep : edges_[id].deps) seeds.push_back(dep);
    }
    std::vector<ChainStep> steps;
    for (const int id : needed) steps.push_back(edges_[id].step);  // ids ascend: derivation order
    return steps;
  }

  std::vector<ChainStep> conflict_chain(const Candidate& candidate) const {
    std::vector<int> seeds = candidate.deps;
    for (const int edge : path_edges(candidate.u, candidate.v)) seeds.push_back(edge);
    auto steps = closure_steps(std::move(seeds));
    ChainStep last;
    last.kind = candidate.parity == 0 ? StepKind::kSameSide : StepKind::kDifferentSide;
    last.primes = {primes_[candidate.u], primes_[candidate.v]};
    std::sort(last.primes.begin(), last.primes.end());
    last.decomposition = candidate.decomposition;
    steps.push_back(std::move(last));
    return steps;
  }

  std::vector<ChainStep> unit_chain(std::int64_t j, const Collapse& collapse) const {
    auto steps = closure_steps(collapse.deps);
    const std::int64_t prime = primes_[collapse.u];
    steps.push_back({StepKind::kUnit, {prime}, {j, n_ - j}});
    steps.push_back({StepKind::kUnit, {prime}, {n_ - j, j}});
    return steps;
  }

  std::int64_t n_;
  std::vector<std::int64_t> primes_;
  std::vector<std::vector<std::pair<int, int>>> half_clauses_;  // (prime index, side)
  ParityUnionFind classes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;  // var -> (neighbor, edge id)
};

}  // namespace

std::optional<std::vector<ChainStep>> contradiction_chain(std::int64_t n) {
  require_min_n(n, "contradiction_chain");
  if (solve(n).has_value()) {
    throw std::invalid_argument("contradiction_chain: " + std::to_string(n) + " is prime partitionable");
  }
  return ChainDeriver(n).run();
}

}  // namespace ppart
