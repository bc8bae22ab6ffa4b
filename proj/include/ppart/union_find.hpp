#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace ppart {

// Disjoint sets with a same/different parity on every relation (0 = same
// side, 1 = different side). Uniting two elements already related with the
// opposite parity is the odd-cycle conflict that refutations like the
// four-step 52 argument rely on.
class ParityUnionFind {
 public:
  enum class UniteResult { kMerged, kRedundant, kConflict };

  explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // (root, parity of v relative to root)
  std::pair<int, int> find(int v) const {
    int root = v;
    int parity = 0;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    // second pass: point the whole path at the root with exact parities
    int cur = v;
    int cur_parity = parity;
    while (cur != root) {
      const int next = parent_[cur];
      const int next_parity = cur_parity ^ parity_[cur];
      parent_[cur] = root;
      parity_[cur] = cur_parity;
      cur = next;
      cur_parity = next_parity;
    }
    return {root, parity};
  }

  bool same_set(int u, int v) const { return find(u).first == find(v).first; }

  // parity between u and v when they are in one set, empty otherwise
  std::optional<int> relation(int u, int v) const {
    const auto [ru, pu] = find(u);
    const auto [rv, pv] = find(v);
    if (ru != rv) return std::nullopt;
    return pu ^ pv;
  }

  UniteResult unite(int u, int v, int parity) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) {
      return (pu ^ pv) == parity ? UniteResult::kRedundant : UniteResult::kConflict;
    }
    if (rank_[ru] < rank_[rv]) {
      std::swap(ru, rv);
      std::swap(pu, pv);
    }
    parent_[rv] = ru;
    parity_[rv] = pu ^ pv ^ parity;
    if (rank_[ru] == rank_[rv]) ++rank_[ru];
    return UniteResult::kMerged;
  }

 private:
  mutable std::vector<int> parent_;
  mutable std::vector<int> parity_;
  std::vector<int> rank_;
};

}  // namespace ppart
