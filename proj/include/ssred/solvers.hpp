#pragma once

#include <algorithm>
#include <numeric>

#include "ssred/atsp.hpp"
#include "ssred/strings.hpp"

namespace ssred {

// Order of the input strings plus the per-join overlaps; replaying the
// order with maximal merges reproduces the superstring.
struct SolveResult {
  GString superstring;
  std::vector<int> order;
  std::vector<int> overlaps;  // overlaps[k]: join before order[k], overlaps[0] = 0
  long comp = 0;

  static SolveResult from_order(const StringSet& set, std::vector<int> order) {
    SolveResult r;
    r.order = std::move(order);
    r.overlaps.assign(r.order.size(), 0);
    for (size_t k = 0; k < r.order.size(); ++k) {
      const GString& next = set[r.order[k]];
      if (k == 0) {
        r.superstring = next;
      } else {
        int ov = max_overlap(r.superstring, next);
        r.overlaps[k] = ov;
        r.superstring = merge(r.superstring, next, ov);
      }
    }
    r.comp = set.total_letters() - static_cast<long>(r.superstring.size());
    return r;
  }
};

// Repeatedly merges the pair with maximum overlap until one string remains.
// Ties resolve to the lowest (i, j) pair of current indices.
inline SolveResult greedy_superstring(const StringSet& set) {
  if (set.size() == 0) throw error("greedy: empty set");
  struct Item {
    GString s;
    std::vector<int> members;
  };
  std::vector<Item> items;
  for (size_t i = 0; i < set.size(); ++i) items.push_back({set[i], {static_cast<int>(i)}});
  while (items.size() > 1) {
    int bi = -1, bj = -1, bov = -1;
    for (size_t i = 0; i < items.size(); ++i)
      for (size_t j = 0; j < items.size(); ++j) {
        if (i == j) continue;
        int ov = max_overlap(items[i].s, items[j].s);
        if (ov > bov) {
          bov = ov;
          bi = static_cast<int>(i);
          bj = static_cast<int>(j);
        }
      }
    items[bi].s = merge(items[bi].s, items[bj].s, bov);
    items[bi].members.insert(items[bi].members.end(), items[bj].members.begin(),
                             items[bj].members.end());
    items.erase(items.begin() + bj);
  }
  return SolveResult::from_order(set, items[0].members);
}

// Optimal superstring by subset dynamic programming over (visited set,
// last string) on the overlap graph. For substring-free sets an optimal
// superstring is a maximal-overlap concatenation in some order.
inline SolveResult exact_superstring(const StringSet& set, int cap = 18) {
  int n = static_cast<int>(set.size());
  if (n == 0) throw error("exact: empty set");
  if (n > cap) throw error("exact: instance above configured cap");
  if (n == 1) return SolveResult::from_order(set, {0});
  std::vector<std::vector<int>> ov(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) ov[i][j] = max_overlap(set[i], set[j]);
  size_t masks = size_t{1} << n;
  std::vector<int> dp(masks * n, -1), par(masks * n, -1);
  for (int i = 0; i < n; ++i) dp[(size_t{1} << i) * n + i] = 0;
  for (size_t m = 1; m < masks; ++m)
    for (int last = 0; last < n; ++last) {
      int cur = dp[m * n + last];
      if (cur < 0 || !(m >> last & 1)) continue;
      for (int nxt = 0; nxt < n; ++nxt) {
        if (m >> nxt & 1) continue;
        size_t m2 = m | (size_t{1} << nxt);
        if (cur + ov[last][nxt] > dp[m2 * n + nxt]) {
          dp[m2 * n + nxt] = cur + ov[last][nxt];
          par[m2 * n + nxt] = last;
        }
      }
    }
  size_t full = masks - 1;
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (dp[full * n + i] > dp[full * n + best]) best = i;
  std::vector<int> order;
  size_t m = full;
  int cur = best;
  while (cur >= 0) {
    order.push_back(cur);
    int prev = par[m * n + cur];
    m &= ~(size_t{1} << cur);
    cur = prev;
  }
  std::reverse(order.begin(), order.end());
  return SolveResult::from_order(set, order);
}

// Exhaustive permutation of merge orders; valid oracle for |S| <= 8.
inline SolveResult brute_force_superstring(const StringSet& set, int cap = 8) {
  int n = static_cast<int>(set.size());
  if (n == 0) throw error("brute: empty set");
  if (n > cap) throw error("brute: instance above configured cap");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SolveResult best;
  bool have = false;
  do {
    SolveResult r = SolveResult::from_order(set, perm);
    if (!have || r.superstring.size() < best.superstring.size()) {
      best = std::move(r);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct TourResult {
  long weight = 0;
  std::vector<int> tour;  // visiting order, tour[0] == 0
};

// Maximum-weight Hamiltonian tour by subset dynamic programming.
inline TourResult exact_max_atsp(const WeightedDigraph& g, int cap = 18) {
  int n = g.n;
  if (n > cap) throw error("max-atsp: instance above configured cap");
  if (n < 2) return TourResult{0, std::vector<int>(n, 0)};
  size_t masks = size_t{1} << n;
  std::vector<long> dp(masks * n, -1);
  std::vector<int> par(masks * n, -1);
  dp[size_t{1} * n + 0] = 0;  // tours start at vertex 0
  for (size_t m = 1; m < masks; ++m) {
    if (!(m & 1)) continue;
    for (int last = 0; last < n; ++last) {
      long cur = dp[m * n + last];
      if (cur < 0 || !(m >> last & 1)) continue;
      for (int nxt = 1; nxt < n; ++nxt) {
        if (m >> nxt & 1) continue;
        size_t m2 = m | (size_t{1} << nxt);
        long w = cur + g.w(last, nxt);
        if (w > dp[m2 * n + nxt]) {
          dp[m2 * n + nxt] = w;
          par[m2 * n + nxt] = last;
        }
      }
    }
  }
  size_t full = masks - 1;
  TourResult best;
  best.weight = -1;
  int bestlast = -1;
  for (int last = 1; last < n; ++last) {
    long w = dp[full * n + last];
    if (w < 0) continue;
    w += g.w(last, 0);
    if (w > best.weight) {
      best.weight = w;
      bestlast = last;
    }
  }
  std::vector<int> tour;
  size_t m = full;
  int cur = bestlast;
  while (cur >= 0) {
    tour.push_back(cur);
    int prev = par[m * n + cur];
    m &= ~(size_t{1} << cur);
    cur = prev;
  }
  std::reverse(tour.begin(), tour.end());
  best.tour = std::move(tour);
  return best;
}

}  // namespace ssred
