#pragma once

#include <atomic>
#include <optional>
#include <thread>

#include "ssred/hybrid.hpp"
#include "ssred/strings.hpp"

namespace ssred {

enum class GadgetVariant { A6, B4 };

inline const char* variant_name(GadgetVariant v) { return v == GadgetVariant::A6 ? "a6" : "b4"; }

// Letter decorations of a circle variable, split by the side of the ring
// equation it appears on. Checkers are oriented by their matching partner,
// contacts by the rhs of their eq3. `hot` decorates the alignment that
// encodes bit 1, `cold` the one encoding bit 0.
struct LetterPair {
  Tag hot;
  Tag cold;
};

namespace detail {

inline int contact_rhs(const HybridInstance& h, int c, int pos) {
  auto [k, slot] = h.eq3_of(c, pos);
  if (k < 0) throw error("gadgets: expected contact position");
  return h.eq3s[k].rhs;
}

}  // namespace detail

// Decoration of (c,pos) when it is the earlier variable of a ring equation.
inline LetterPair first_role(const HybridInstance& h, int c, int pos) {
  if (HybridInstance::is_contact_pos(pos))
    return detail::contact_rhs(h, c, pos) == 0 ? LetterPair{Tag::l1, Tag::m0}
                                               : LetterPair{Tag::m1, Tag::l0};
  return h.partner(c, pos) > pos ? LetterPair{Tag::l1, Tag::m0}
                                 : LetterPair{Tag::m1, Tag::l0};
}

// Decoration of (c,pos) when it is the later variable of a ring equation.
inline LetterPair second_role(const HybridInstance& h, int c, int pos) {
  if (HybridInstance::is_contact_pos(pos))
    return detail::contact_rhs(h, c, pos) == 0 ? LetterPair{Tag::r1, Tag::m0}
                                               : LetterPair{Tag::m1, Tag::r0};
  return h.partner(c, pos) > pos ? LetterPair{Tag::r1, Tag::m0}
                                 : LetterPair{Tag::m1, Tag::r0};
}

// Identifies one equation gadget within a reduction.
struct EqId {
  EqKind kind{EqKind::CircleEq};
  int circle = -1;
  int a = 0;  // circle eq: the later position k of x_{k-1} + x_k; matching: i
  int b = 0;  // matching: j
  int eq3 = -1;

  auto operator<=>(const EqId&) const = default;

  static EqId ring(int c, int k) {
    return k == 1 ? EqId{EqKind::BorderEq, c, 1, 0, -1} : EqId{EqKind::CircleEq, c, k, 0, -1};
  }
  static EqId match(int c, int i, int j) { return EqId{EqKind::MatchingEq, c, i, j, -1}; }
  static EqId three(int k) { return EqId{EqKind::ThreeVarEq, -1, 0, 0, k}; }

  std::string str(const HybridInstance& h) const {
    std::ostringstream o;
    switch (kind) {
      case EqKind::BorderEq: o << h.circles[circle].name << ".b"; break;
      case EqKind::CircleEq: o << h.circles[circle].name << ".c" << a; break;
      case EqKind::MatchingEq: o << h.circles[circle].name << ".m" << a << "." << b; break;
      case EqKind::ThreeVarEq: o << "e" << (eq3 + 1); break;
    }
    return o.str();
  }
};

// Named catalog entry: a merged string producible from the gadget's
// members, plus the simple alignments of pair gadgets. Border alignments
// consist of two fragments (left and right).
struct NamedAlignment {
  std::string name;
  std::vector<GString> fragments;
};

struct EquationGadget {
  EqId id;
  std::vector<GString> strings;
  std::vector<NamedAlignment> alignments;

  const NamedAlignment& alignment(const std::string& name) const {
    for (const auto& a : alignments)
      if (a.name == name) return a;
    throw error("gadget " + std::to_string(static_cast<int>(id.kind)) +
                ": no alignment named '" + name + "'");
  }
};

// ---- gadget constructors ---------------------------------------------------

// Ring equation x_{k-1} + x_k = 0 (k >= 2). Two strings of length four;
// the b-alignment nests the b-valued block outside.
inline EquationGadget circle_gadget(const HybridInstance& h, int c, int k) {
  if (k < 2 || k > h.circles[c].size) throw error("circle_gadget: bad position");
  LetterPair f = first_role(h, c, k - 1), s = second_role(h, c, k);
  GString hot{Symbol::var(c, k - 1, f.hot), Symbol::var(c, k, s.hot)};
  GString cold{Symbol::var(c, k - 1, f.cold), Symbol::var(c, k, s.cold)};
  EquationGadget g;
  g.id = EqId::ring(c, k);
  g.strings = {merge(hot, cold, 0), merge(cold, hot, 0)};
  g.alignments = {{"1", {merge(g.strings[0], g.strings[1], 2)}},
                  {"0", {merge(g.strings[1], g.strings[0], 2)}}};
  return g;
}

// Matching equation x_i + x_j = 0, i < j. The lower endpoint carries the
// hot letters, so the 1-alignment sits at slot i and the 0-alignment at
// slot j.
inline EquationGadget matching_gadget(const HybridInstance& h, int c, int i, int j) {
  if (i > j) std::swap(i, j);
  if (h.partner(c, i) != j) throw error("matching_gadget: edge not in matching");
  GString p{Symbol::var(c, i, second_role(h, c, i).hot),
            Symbol::var(c, i, first_role(h, c, i).hot)};
  GString q{Symbol::var(c, j, second_role(h, c, j).cold),
            Symbol::var(c, j, first_role(h, c, j).cold)};
  EquationGadget g;
  g.id = EqId::match(c, i, j);
  g.strings = {merge(q, p, 0), merge(p, q, 0)};
  g.alignments = {{"1", {merge(g.strings[1], g.strings[0], 2)}},
                  {"0", {merge(g.strings[0], g.strings[1], 2)}}};
  return g;
}

// Border equation x_1 + x_n = 0. Six strings: two length-2 terminals and
// two rotation pairs whose decorations depend on the rhs of the eq3
// containing x_n. Each alignment yields a left fragment (following L C^l)
// and a right fragment (preceding C^r R).
inline EquationGadget border_gadget(const HybridInstance& h, int c) {
  int n = h.circles[c].size;
  Symbol Lx = Symbol::terminal(c, Tag::L), Rx = Symbol::terminal(c, Tag::R);
  Symbol Cl = Symbol::terminal(c, Tag::Cl), Cr = Symbol::terminal(c, Tag::Cr);
  LetterPair x1 = second_role(h, c, 1), xn = first_role(h, c, n);
  GString u1{Cl, Symbol::var(c, 1, x1.cold), Symbol::var(c, n, xn.hot), Cr};
  GString v1{Symbol::var(c, n, xn.hot), Cr, Cl, Symbol::var(c, 1, x1.cold)};
  GString u2{Cl, Symbol::var(c, 1, x1.hot), Symbol::var(c, n, xn.cold), Cr};
  GString v2{Symbol::var(c, n, xn.cold), Cr, Cl, Symbol::var(c, 1, x1.hot)};
  EquationGadget g;
  g.id = EqId::ring(c, 1);
  g.strings = {GString{Lx, Cl}, u1, v1, u2, v2, GString{Cr, Rx}};
  g.alignments = {{"1", {merge(u2, v2, 2), merge(v1, u1, 2)}},
                  {"0", {merge(u1, v1, 2), merge(v2, u2, 2)}}};
  return g;
}

// B4 only: the ring equation feeding an eq3's first contact is replaced by
// three strings that align cyclically by two letters. The two hot combos
// expose the alpha and beta tips; the cold combo exposes the mid letter.
inline EquationGadget replacement_gadget(const HybridInstance& h, int c, int k, int eq3_idx) {
  const Eq3& e = h.eq3s[eq3_idx];
  int rhs = e.rhs;
  LetterPair w = first_role(h, c, k - 1);
  Tag we = rhs == 0 ? w.hot : w.cold;  // pairs with the fragment-feeding tips
  Tag wo = rhs == 0 ? w.cold : w.hot;
  Symbol Wa = Symbol::var(c, k - 1, we), Wb = Symbol::var(c, k - 1, wo);
  Symbol Ra = Symbol::var(c, k, rhs == 0 ? Tag::r1a : Tag::r0a);
  Symbol Rb = Symbol::var(c, k, rhs == 0 ? Tag::r1b : Tag::r0b);
  Symbol M = Symbol::var(c, k, rhs == 0 ? Tag::m0 : Tag::m1);
  GString p1{Wa, Rb}, p2{Wa, Ra}, p3{Wb, M};
  EquationGadget g;
  g.id = EqId::ring(c, k);
  g.strings = {merge(p1, p2, 0), merge(p2, p3, 0), merge(p3, p1, 0)};
  auto cyc = [&](const GString& a, const GString& b, const GString& cc) {
    return merge(merge(a, b, 2), cc, 2);
  };
  g.alignments = {{"hot-a", {cyc(g.strings[1], g.strings[2], g.strings[0])}},
                  {"hot-b", {cyc(g.strings[0], g.strings[1], g.strings[2])}},
                  {"cold", {cyc(g.strings[2], g.strings[0], g.strings[1])}}};
  return g;
}

// Equation with three variables. Under A6, six strings of length six; under
// B4, six of length four using the alpha/beta tips. Catalog entries are the
// cyclic alignments of each half plus the joint cold alignment.
inline EquationGadget three_var_gadget(const HybridInstance& h, int eq3_idx,
                                       GadgetVariant variant) {
  const Eq3& e = h.eq3s[eq3_idx];
  int rhs = e.rhs;
  auto R = [&](int slot) {
    return Symbol::var(e.vars[slot].circle, e.vars[slot].pos, rhs == 0 ? Tag::r1 : Tag::r0);
  };
  auto L = [&](int slot) {
    return Symbol::var(e.vars[slot].circle, e.vars[slot].pos, rhs == 0 ? Tag::l1 : Tag::l0);
  };
  auto M = [&](int slot) {
    return Symbol::var(e.vars[slot].circle, e.vars[slot].pos, rhs == 0 ? Tag::m0 : Tag::m1);
  };
  Symbol C = Symbol::aux(eq3_idx, Tag::C);
  EquationGadget g;
  g.id = EqId::three(eq3_idx);
  int ov;  // cyclic alignment overlap within each half
  if (variant == GadgetVariant::A6) {
    Symbol A1 = Symbol::aux(eq3_idx, Tag::A1), A2 = Symbol::aux(eq3_idx, Tag::A2),
           A3 = Symbol::aux(eq3_idx, Tag::A3), B1 = Symbol::aux(eq3_idx, Tag::B1),
           B2 = Symbol::aux(eq3_idx, Tag::B2), B3 = Symbol::aux(eq3_idx, Tag::B3);
    g.strings = {GString{R(0), A1, L(0), R(1), A2, L(1)},
                 GString{R(1), A2, L(1), M(0), A3, C},
                 GString{M(0), A3, C, R(0), A1, L(0)},
                 GString{R(0), B1, L(0), R(2), B2, L(2)},
                 GString{R(2), B2, L(2), C, B3, M(0)},
                 GString{C, B3, M(0), R(0), B1, L(0)}};
    ov = 3;
  } else {
    Symbol xa = Symbol::var(e.vars[0].circle, e.vars[0].pos, rhs == 0 ? Tag::r1a : Tag::r0a);
    Symbol xb = Symbol::var(e.vars[0].circle, e.vars[0].pos, rhs == 0 ? Tag::r1b : Tag::r0b);
    g.strings = {GString{xa, L(0), R(1), L(1)}, GString{R(1), L(1), M(0), C},
                 GString{M(0), C, xa, L(0)},    GString{xb, L(0), R(2), L(2)},
                 GString{R(2), L(2), C, M(0)},  GString{C, M(0), xb, L(0)}};
    ov = 2;
  }
  auto cyc = [&](int a, int b, int c2) {
    return merge(merge(g.strings[a], g.strings[b], ov), g.strings[c2], ov);
  };
  GString cold_left = cyc(2, 0, 1);   // starts xM, ends C
  GString cold_right = cyc(5, 3, 4);  // starts C, ends xM
  g.alignments = {{"x-hot-a", {cyc(0, 1, 2)}},
                  {"y-hot-a", {cyc(1, 2, 0)}},
                  {"x-cold-left-a", {cold_left}},
                  {"x-hot-b", {cyc(3, 4, 5)}},
                  {"z-hot-b", {cyc(4, 5, 3)}},
                  {"x-cold-right-b", {cold_right}},
                  {"cold-joint", {merge(cold_left, cold_right, 1)}}};
  return g;
}

// ---- whole-instance reduction ----------------------------------------------

struct GadgetIndex {
  std::vector<EquationGadget> gadgets;
  std::vector<int> owner;                       // string index -> gadget index
  std::map<EqId, int> by_id;                    // equation -> gadget index
  std::vector<std::pair<int, int>> string_span;  // gadget index -> [first, last) string

  const EquationGadget& at(EqId id) const {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw error("gadget index: unknown equation");
    return gadgets[it->second];
  }
};

struct Reduction {
  GadgetVariant variant{GadgetVariant::B4};
  StringSet set;
  GadgetIndex index;

  // eq3 index -> ring equation replaced under B4 (circle, k), or nullopt
  std::vector<std::optional<std::pair<int, int>>> replaced_ring;

  bool ring_is_replaced(int c, int k) const {
    for (const auto& r : replaced_ring)
      if (r && r->first == c && r->second == k) return true;
    return false;
  }
};

namespace detail {

inline std::vector<EquationGadget> circle_gadgets(const HybridInstance& h, int c,
                                                  GadgetVariant variant) {
  std::vector<EquationGadget> out;
  const Circle& cc = h.circles[c];
  out.push_back(border_gadget(h, c));
  for (int k = 2; k <= cc.size; ++k) {
    bool replaced = false;
    if (variant == GadgetVariant::B4 && HybridInstance::is_contact_pos(k)) {
      auto [eq3, slot] = h.eq3_of(c, k);
      if (slot == 0) {
        out.push_back(replacement_gadget(h, c, k, eq3));
        replaced = true;
      }
    }
    if (!replaced) out.push_back(circle_gadget(h, c, k));
  }
  for (auto [i, j] : cc.matching) out.push_back(matching_gadget(h, c, i, j));
  return out;
}

}  // namespace detail

// Union of all gadget string sets plus the index linking strings to their
// owning equations. Totals and the orbit bound are checked on exit; a
// violation signals a gadget bug. Gadget construction is independent per
// circle; `threads` > 1 splits circles across workers, output order is
// identical regardless.
inline Reduction reduce(const HybridInstance& h, GadgetVariant variant, int threads = 1) {
  Reduction red;
  red.variant = variant;
  std::vector<std::vector<EquationGadget>> per_circle(h.n());
  if (threads <= 1 || h.n() <= 1) {
    for (int c = 0; c < h.n(); ++c) per_circle[c] = detail::circle_gadgets(h, c, variant);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (int c = next.fetch_add(1); c < h.n(); c = next.fetch_add(1))
          per_circle[c] = detail::circle_gadgets(h, c, variant);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<EquationGadget> all;
  for (auto& v : per_circle)
    for (auto& g : v) all.push_back(std::move(g));
  for (int k = 0; k < static_cast<int>(h.eq3s.size()); ++k)
    all.push_back(three_var_gadget(h, k, variant));

  red.replaced_ring.assign(h.eq3s.size(), std::nullopt);
  if (variant == GadgetVariant::B4)
    for (int k = 0; k < static_cast<int>(h.eq3s.size()); ++k)
      red.replaced_ring[k] = std::make_pair(h.eq3s[k].vars[0].circle, h.eq3s[k].vars[0].pos);

  std::vector<GString> strings;
  for (size_t gi = 0; gi < all.size(); ++gi) {
    red.index.string_span.emplace_back(static_cast<int>(strings.size()), 0);
    for (const auto& s : all[gi].strings) {
      strings.push_back(s);
      red.index.owner.push_back(static_cast<int>(gi));
    }
    red.index.string_span.back().second = static_cast<int>(strings.size());
    red.index.by_id.emplace(all[gi].id, static_cast<int>(gi));
  }
  red.index.gadgets = std::move(all);
  red.set = make_string_set(std::move(strings));

  long expect = 12L * h.n() + 8L * h.m2() + (variant == GadgetVariant::A6 ? 36L : 28L) * h.m3();
  if (red.set.total_letters() != expect)
    throw error("reduce: letter total mismatch (gadget bug)");
  if (orbit_stats(red.set).max > 8) throw error("reduce: orbit bound exceeded (gadget bug)");
  return red;
}

// "gidx v1": `gadget <eq-id> <kind> <string-line-numbers...>`, line numbers
// 1-based into the companion sset file.
inline void write_gidx(std::ostream& os, const HybridInstance& h, const Reduction& red) {
  static const char* kind_names[] = {"circle", "border", "matching", "eq3"};
  for (size_t gi = 0; gi < red.index.gadgets.size(); ++gi) {
    const auto& g = red.index.gadgets[gi];
    os << "gadget " << g.id.str(h) << ' ' << kind_names[static_cast<int>(g.id.kind)];
    auto [first, last] = red.index.string_span[gi];
    for (int s = first; s < last; ++s) os << ' ' << (s + 1);
    os << '\n';
  }
}

}  // namespace ssred
