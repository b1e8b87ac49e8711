#pragma once

#include "ssred/forward.hpp"

namespace ssred {

// Occurrence index of every instance string inside a candidate superstring.
struct OccurrenceIndex {
  std::vector<std::vector<int>> occ;       // per string: start positions
  std::vector<std::vector<int>> ends_at;   // position q: strings whose occurrence ends at q
  std::vector<std::vector<int>> starts_at; // position p: strings with an occurrence at p

  OccurrenceIndex(const GString& s, const StringSet& set) {
    occ.resize(set.size());
    ends_at.assign(s.size() + 1, {});
    starts_at.assign(s.size() + 1, {});
    for (size_t i = 0; i < set.size(); ++i) {
      occ[i] = occurrences(set[i], s);
      for (int p : occ[i]) {
        starts_at[p].push_back(static_cast<int>(i));
        ends_at[p + set[i].size()].push_back(static_cast<int>(i));
      }
    }
  }
};

namespace detail {

struct Token {
  int string_index;  // into the reduction string set
  bool first;        // boundary side: first or last letter
  int bit;           // which alignment the boundary evidences
};

// Boundary evidence tokens of a ring-equation gadget. Pair gadgets carry a
// bit letter at each end of each string; the border carries them on the two
// rotation strings; the B4 replacement exposes the tips (value 1 xor rhs)
// and the mid letter (value rhs).
inline std::vector<Token> ring_tokens(const HybridInstance& h, const Reduction& red, EqId id) {
  const auto& idx = red.index;
  int gi = idx.by_id.at(id);
  const EquationGadget& g = idx.gadgets[gi];
  auto [first, last] = idx.string_span[gi];
  std::vector<Token> out;
  if (id.kind == EqKind::BorderEq) {
    out.push_back({first + 2, true, 1});   // v1 starts with the hot border letter
    out.push_back({first + 2, false, 0});
    out.push_back({first + 4, true, 0});   // v2
    out.push_back({first + 4, false, 1});
    return out;
  }
  if (g.strings.size() == 3) {
    auto [eq3, slot] = h.eq3_of(id.circle, id.a);
    int hot_bit = 1 ^ h.eq3s[eq3].rhs;
    out.push_back({first + 0, true, hot_bit});
    out.push_back({first + 0, false, hot_bit});
    out.push_back({first + 1, true, hot_bit});
    out.push_back({first + 1, false, 1 - hot_bit});
    out.push_back({first + 2, true, 1 - hot_bit});
    out.push_back({first + 2, false, hot_bit});
    return out;
  }
  // pair gadget: the string that prefixes the 1-alignment is hot-first
  const GString& one = g.alignment("1").fragments[0];
  auto prefixes = [&](int si) {
    return std::equal(red.set[si].begin(), red.set[si].end(), one.begin());
  };
  int whot = first, wcold = first + 1;
  if (!prefixes(whot)) std::swap(whot, wcold);
  if (!prefixes(whot)) throw error("ring_tokens: alignment does not match strings (bug)");
  out.push_back({whot, true, 1});
  out.push_back({whot, false, 0});
  out.push_back({wcold, true, 0});
  out.push_back({wcold, false, 1});
  return out;
}

}  // namespace detail

// Majority criterion: does the gadget use the 1-alignment in s? Counts
// one-letter boundary overlaps with strings of other gadgets at the
// gadget's leftmost occurrences; ties resolve to 0.
inline int detect_ring_bit(const HybridInstance& h, const Reduction& red,
                           const OccurrenceIndex& oi, EqId id) {
  long ev[2] = {0, 0};
  int gi = red.index.by_id.at(id);
  for (const auto& tok : detail::ring_tokens(h, red, id)) {
    if (oi.occ[tok.string_index].empty())
      throw error("detect: gadget string absent from superstring");
    int p = oi.occ[tok.string_index].front();
    int len = static_cast<int>(red.set[tok.string_index].size());
    if (tok.first) {
      for (int other : oi.ends_at[p + 1])
        if (red.index.owner[other] != gi) ev[tok.bit]++;
    } else {
      for (int other : oi.starts_at[p + len - 1])
        if (red.index.owner[other] != gi) ev[tok.bit]++;
    }
  }
  return ev[1] > ev[0] ? 1 : 0;
}

// Spec-facing single-gadget form.
inline int detect_alignment(const GString& s, const HybridInstance& h, const Reduction& red,
                            EqId id) {
  OccurrenceIndex oi(s, red.set);
  return detect_ring_bit(h, red, oi, id);
}

struct NormedSuperstring {
  GString s;
  AlignmentPlan record;
  std::vector<long> step_lengths;  // monotone across accepted transformations
};

// Transform a superstring into a normed one without increasing length:
// read the alignment each ring gadget uses, rebuild the backbone from that
// record, then monotonically flip bits that still shorten the result.
inline NormedSuperstring normalize(const GString& s, const HybridInstance& h,
                                   const Reduction& red) {
  if (!is_superstring(s, red.set)) throw error("normalize: input is not a superstring");
  OccurrenceIndex oi(s, red.set);
  std::vector<std::vector<std::uint8_t>> bits(h.n());
  for (int c = 0; c < h.n(); ++c) {
    bits[c].assign(h.circles[c].size + 1, 0);
    for (int k = 1; k <= h.circles[c].size; ++k)
      bits[c][k] = static_cast<std::uint8_t>(detect_ring_bit(h, red, oi, EqId::ring(c, k)));
  }

  NormedSuperstring out;
  out.step_lengths.push_back(static_cast<long>(s.size()));
  auto build = [&](const std::vector<std::vector<std::uint8_t>>& b) {
    return assemble(h, red, plan_from_bits(h, red, b));
  };
  ForwardResult cur = build(bits);
  out.step_lengths.push_back(static_cast<long>(cur.s.size()));

  // local improvement; each accepted flip strictly shortens the string
  long budget = 0;
  for (const auto& c : bits) budget += static_cast<long>(c.size());
  budget *= budget;
  bool improved = true;
  while (improved && budget > 0) {
    improved = false;
    for (int c = 0; c < h.n() && budget > 0; ++c)
      for (int k = 1; k <= h.circles[c].size && budget > 0; ++k, --budget) {
        bits[c][k] ^= 1;
        ForwardResult trial = build(bits);
        if (trial.s.size() < cur.s.size()) {
          cur = std::move(trial);
          out.step_lengths.push_back(static_cast<long>(cur.s.size()));
          improved = true;
        } else {
          bits[c][k] ^= 1;
        }
      }
  }
  if (cur.s.size() > s.size())
    throw error("normalize: rebuilt string longer than input (bug)");
  out.s = std::move(cur.s);
  out.record = std::move(cur.plan);
  return out;
}

// Constellation of a matching edge: the alignment bits of the four ring
// equations around its endpoints.
struct Constellation {
  int xi = 0, xi1 = 0, xj = 0, xj1 = 0;
  bool consistent() const { return xi == xi1 && xj == xj1; }
};

// Read the assignment off a normed superstring. Checker variables follow
// the matching-edge constellation cases; contact variables follow the eq3
// constellation cases with the rhs folded into the satisfaction test.
inline Assignment extract_assignment(const NormedSuperstring& ns, const HybridInstance& h,
                                     const Reduction& red) {
  const auto& bits = ns.record.ring_bits;
  Assignment psi;
  psi.bits.assign(h.total_vars, 0);
  auto out_bit = [&](int c, int pos) {
    return pos == h.circles[c].size ? bits[c][1] : bits[c][pos + 1];
  };

  for (int c = 0; c < h.n(); ++c) {
    for (auto [i, j] : h.circles[c].matching) {
      Constellation con{bits[c][i], out_bit(c, i), bits[c][j], out_bit(c, j)};
      int pi, pj;
      if ((con.xi ^ con.xj) == 0) {
        pi = con.xi;
        pj = con.xj;
      } else if (con.xi != con.xi1) {
        pi = 1 - con.xi;
        pj = con.xj;
      } else if (con.xj != con.xj1) {
        pi = con.xi;
        pj = 1 - con.xj;
      } else {
        pi = con.xi;
        pj = con.xj;
      }
      psi.bits[h.var_id(c, i)] = static_cast<std::uint8_t>(pi);
      psi.bits[h.var_id(c, j)] = static_cast<std::uint8_t>(pj);
    }
  }

  for (const auto& e : h.eq3s) {
    int in[3], outb[3];
    for (int t = 0; t < 3; ++t) {
      in[t] = bits[e.vars[t].circle][e.vars[t].pos];
      outb[t] = out_bit(e.vars[t].circle, e.vars[t].pos);
    }
    int v[3] = {in[0], in[1], in[2]};
    bool consistent = in[0] == outb[0] && in[1] == outb[1] && in[2] == outb[2];
    if (!consistent && ((in[0] ^ in[1] ^ in[2]) != e.rhs)) {
      for (int t = 0; t < 3; ++t)
        if (in[t] != outb[t]) {
          v[t] = 1 - v[t];
          break;
        }
    }
    for (int t = 0; t < 3; ++t)
      psi.bits[h.var_id(e.vars[t].circle, e.vars[t].pos)] = static_cast<std::uint8_t>(v[t]);
  }
  return psi;
}

}  // namespace ssred
