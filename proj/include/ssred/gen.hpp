#pragma once

#include <random>

#include "ssred/atsp.hpp"
#include "ssred/hybrid.hpp"
#include "ssred/strings.hpp"

namespace ssred {

using Rng = std::mt19937_64;

inline int rand_bit(Rng& rng) { return static_cast<int>(rng() & 1); }

// k disjoint copies of the smallest family in which every variable occurs
// three times: one triple of variables, its equation listed three times.
// All copies of an equation share one rhs, so the instance is satisfiable.
inline E3Lin gen_triple(int k, std::uint64_t seed) {
  if (k < 1) throw error("gen: k must be >= 1");
  Rng rng(seed);
  E3Lin e3;
  for (int c = 0; c < k; ++c) {
    int base = static_cast<int>(e3.vars.size());
    std::string sfx = std::to_string(c + 1);
    e3.vars.push_back("x" + sfx);
    e3.vars.push_back("y" + sfx);
    e3.vars.push_back("z" + sfx);
    int rhs = rand_bit(rng);
    for (int r = 0; r < 3; ++r)
      e3.eqs.push_back(E3Lin::Eq{{base, base + 1, base + 2}, rhs});
  }
  return e3;
}

// 2*nu equations over 6*nu fresh variables, each occurring once. Matches
// the published family counts (42nu variables, 60nu two-variable equations,
// 2nu three-variable equations) and needs the occurrence override.
inline E3Lin gen_theorem7(int nu, std::uint64_t seed) {
  if (nu < 1) throw error("gen: nu must be >= 1");
  Rng rng(seed);
  E3Lin e3;
  for (int q = 0; q < 2 * nu; ++q) {
    int base = static_cast<int>(e3.vars.size());
    for (int s = 0; s < 3; ++s)
      e3.vars.push_back("v" + std::to_string(base + s + 1));
    e3.eqs.push_back(E3Lin::Eq{{base, base + 1, base + 2}, rand_bit(rng)});
  }
  return e3;
}

// Random instance over nvars variables, each occurring exactly three times:
// three slots per variable, shuffled and chunked into triples; reshuffled
// until no triple repeats a variable.
inline E3Lin gen_random_e3(int nvars, std::uint64_t seed) {
  if (nvars < 3 || nvars % 3 != 0) throw error("gen: nvars must be a positive multiple of 3");
  Rng rng(seed);
  E3Lin e3;
  for (int v = 0; v < nvars; ++v) e3.vars.push_back("v" + std::to_string(v + 1));
  std::vector<int> slots;
  for (int v = 0; v < nvars; ++v)
    for (int r = 0; r < 3; ++r) slots.push_back(v);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(slots.begin(), slots.end(), rng);
    bool ok = true;
    for (size_t p = 0; p < slots.size() && ok; p += 3)
      ok = slots[p] != slots[p + 1] && slots[p] != slots[p + 2] && slots[p + 1] != slots[p + 2];
    if (!ok) continue;
    e3.eqs.clear();
    for (size_t p = 0; p < slots.size(); p += 3)
      e3.eqs.push_back(E3Lin::Eq{{slots[p], slots[p + 1], slots[p + 2]}, rand_bit(rng)});
    return e3;
  }
  throw error("gen: failed to draw a valid instance");
}

inline Assignment random_assignment(const HybridInstance& h, std::uint64_t seed) {
  Rng rng(seed);
  Assignment a;
  a.bits.resize(h.total_vars);
  for (auto& b : a.bits) b = static_cast<std::uint8_t>(rng() & 1);
  return a;
}

// An assignment satisfying every two-variable equation and every eq3 whose
// rhs agrees with the copy pattern; on gen_triple instances it satisfies
// everything. Each circle is constant; the circle bit solves its eq3s when
// possible.
inline Assignment zero_assignment(const HybridInstance& h) {
  Assignment a;
  a.bits.assign(h.total_vars, 0);
  return a;
}

// Random substring-free set over a small plain alphabet.
inline StringSet gen_random_stringset(Rng& rng, int max_strings = 7, int alphabet = 6,
                                      int max_len = 5) {
  for (;;) {
    int want = 2 + static_cast<int>(rng() % (max_strings - 1));
    std::vector<GString> strings;
    for (int i = 0; i < want; ++i) {
      int len = 1 + static_cast<int>(rng() % max_len);
      GString s;
      for (int p = 0; p < len; ++p)
        s.push_back(Symbol::var(0, 1 + static_cast<int>(rng() % alphabet), Tag::m0));
      strings.push_back(std::move(s));
    }
    // drop members contained in another; later strings lose
    std::vector<GString> keep;
    for (size_t i = 0; i < strings.size(); ++i) {
      bool drop = false;
      for (size_t j = 0; j < strings.size() && !drop; ++j) {
        if (i == j) continue;
        if (strings[i] == strings[j]) drop = i > j;
        else if (is_substring(strings[i], strings[j])) drop = true;
      }
      if (!drop) keep.push_back(strings[i]);
    }
    if (keep.size() >= 2) return make_string_set(std::move(keep));
  }
}

inline WeightedDigraph gen_random_12_digraph(Rng& rng, int max_n = 7) {
  int n = 2 + static_cast<int>(rng() % (max_n - 1));
  WeightedDigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) g.w(i, j) = 1 + static_cast<long>(rng() & 1);
  return g;
}

}  // namespace ssred
