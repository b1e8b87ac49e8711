#pragma once

#include <numeric>

#include "ssred/gadgets.hpp"

namespace ssred {

// Per-gadget choice of catalog alignment plus where each movable fragment
// goes. Ring equations (circle + border) are keyed by the bit of their
// later variable; matching fragments sit at the slot their alignment
// exposes or move to the tail; eq3 fragments follow the planner's
// case selection.
struct AlignmentPlan {
  // ring_bits[c][k], k in 1..size: alignment bit of ring equation k
  // (k == 1 is the border equation)
  std::vector<std::vector<std::uint8_t>> ring_bits;

  struct MatchChoice {
    int circle = 0, i = 0, j = 0;
    int bit = 0;
    bool placed = true;  // at slot i (bit 1) / slot j (bit 0); else tail
  };
  std::vector<MatchChoice> matches;

  struct Eq3Choice {
    int eq3 = 0;
    bool joint = false;
    bool joint_placed = false;
    bool use_xa = false, use_ya = false, use_xb = false, use_zb = false;
    bool a_placed = false, b_placed = false;  // at the owning contact slot
    std::string combo;                        // B4 replacement combo, "" otherwise
  };
  std::vector<Eq3Choice> eq3s;

  std::vector<int> circle_order;
};

struct PlacedPiece {
  GString text;
  long offset = -1;  // filled during assembly
};

struct ForwardResult {
  GString s;
  AlignmentPlan plan;
  std::vector<PlacedPiece> pieces;  // chain pieces + tail pieces, in order
  long total_joins = 0;
};

namespace detail {

// Chain pieces of one circle, indexed so that slot k content goes between
// piece_after_slot(k-1) and piece_after_slot(k).
struct CirclePieces {
  GString s_l, s_r, t_l, t_r;
  std::vector<GString> frag;  // frag[k] for k in 2..size
};

inline GString ring_fragment(const HybridInstance& h, const Reduction& red, int c, int k,
                             int bit, const std::string& combo) {
  const EquationGadget& g = red.index.at(EqId::ring(c, k));
  if (g.strings.size() == 3) return g.alignment(combo).fragments[0];
  return g.alignment(bit ? "1" : "0").fragments[0];
}

// Default replacement combo for a given ring bit: hot when the bit matches
// the eq3's fragment-feeding value, alpha tip by default.
inline std::string default_combo(const HybridInstance& h, int eq3_idx, int bit) {
  return (bit ^ h.eq3s[eq3_idx].rhs) ? "hot-a" : "cold";
}

inline CirclePieces build_circle_pieces(const HybridInstance& h, const Reduction& red, int c,
                                        const AlignmentPlan& plan) {
  CirclePieces cp;
  const Circle& cc = h.circles[c];
  const EquationGadget& border = red.index.at(EqId::ring(c, 1));
  const auto& b = border.alignment(plan.ring_bits[c][1] ? "1" : "0");
  cp.s_l = b.fragments[0];
  cp.s_r = b.fragments[1];
  cp.t_l = border.strings.front();
  cp.t_r = border.strings.back();
  cp.frag.assign(cc.size + 1, {});
  for (int k = 2; k <= cc.size; ++k) {
    std::string combo;
    if (red.ring_is_replaced(c, k)) {
      auto [eq3, slot] = h.eq3_of(c, k);
      combo = default_combo(h, eq3, plan.ring_bits[c][k]);
      for (const auto& ch : plan.eq3s)
        if (ch.eq3 == eq3 && !ch.combo.empty()) combo = ch.combo;
    }
    cp.frag[k] = ring_fragment(h, red, c, k, plan.ring_bits[c][k], combo);
  }
  return cp;
}

// Pieces adjacent to slot k: the fragment ending with x_k's letter and the
// one starting with it.
inline const GString& left_of_slot(const CirclePieces& cp, int k) {
  return k == 1 ? cp.s_l : cp.frag[k];
}
inline const GString& right_of_slot(const CirclePieces& cp, int k, int size) {
  return k == size ? cp.s_r : cp.frag[k + 1];
}

inline long ov(const GString& a, const GString& b) { return max_overlap(a, b); }

}  // namespace detail

// Plan construction from explicit ring bits; shared by the assignment-driven
// forward map and by normalization. Matching and eq3 placements are chosen
// by minimum realized length among the simple-alignment candidates.
inline AlignmentPlan plan_from_bits(const HybridInstance& h, const Reduction& red,
                                    std::vector<std::vector<std::uint8_t>> ring_bits,
                                    std::vector<int> circle_order = {}) {
  AlignmentPlan plan;
  plan.ring_bits = std::move(ring_bits);
  if (circle_order.empty()) {
    circle_order.resize(h.n());
    std::iota(circle_order.begin(), circle_order.end(), 0);
  }
  plan.circle_order = std::move(circle_order);

  // provisional eq3 choices so combo pieces default correctly
  plan.eq3s.clear();
  std::vector<detail::CirclePieces> pieces(h.n());
  for (int c = 0; c < h.n(); ++c) pieces[c] = detail::build_circle_pieces(h, red, c, plan);

  auto slot_gain = [&](int c, int k, const GString* content) {
    const GString& l = detail::left_of_slot(pieces[c], k);
    const GString& r = detail::right_of_slot(pieces[c], k, h.circles[c].size);
    if (!content) return detail::ov(l, r);
    return detail::ov(l, *content) + detail::ov(*content, r);
  };

  // matching equations
  for (int c = 0; c < h.n(); ++c) {
    for (auto [i, j] : h.circles[c].matching) {
      const EquationGadget& g = red.index.at(EqId::match(c, i, j));
      const GString& one = g.alignment("1").fragments[0];
      const GString& zero = g.alignment("0").fragments[0];
      long g_place1 = slot_gain(c, i, &one) + slot_gain(c, j, nullptr);
      long g_place0 = slot_gain(c, i, nullptr) + slot_gain(c, j, &zero);
      long g_tail = slot_gain(c, i, nullptr) + slot_gain(c, j, nullptr);
      int pref = plan.ring_bits[c][i + 1 <= h.circles[c].size ? i + 1 : 1];
      AlignmentPlan::MatchChoice mc{c, i, j, pref, true};
      long best = g_tail;
      mc.placed = false;
      auto consider = [&](long gain, int bit, bool placed) {
        if (gain > best) {
          best = gain;
          mc.bit = bit;
          mc.placed = placed;
        }
      };
      // preference order on ties: place with the successor bit, place with
      // the other bit, tail
      consider(pref ? g_place1 : g_place0, pref, true);
      consider(pref ? g_place0 : g_place1, 1 - pref, true);
      plan.matches.push_back(mc);
    }
  }

  // eq3 gadgets: enumerate candidate fragment placements; keep minimum cost
  for (int k = 0; k < static_cast<int>(h.eq3s.size()); ++k) {
    const EquationGadget& g = red.index.at(EqId::three(k));
    const Eq3& e = h.eq3s[k];
    auto sx = e.vars[0], sy = e.vars[1], sz = e.vars[2];
    const GString& xa = g.alignment("x-hot-a").fragments[0];
    const GString& ya = g.alignment("y-hot-a").fragments[0];
    const GString& xb = g.alignment("x-hot-b").fragments[0];
    const GString& zb = g.alignment("z-hot-b").fragments[0];
    const GString& joint = g.alignment("cold-joint").fragments[0];

    // B4: the replacement combo must expose the tip the placed x-fragment
    // consumes; hot only makes sense when the ring bit is hot.
    bool b4 = red.variant == GadgetVariant::B4;
    int xbit = plan.ring_bits[sx.circle][sx.pos];
    bool xhot = (xbit ^ e.rhs) != 0;
    auto combo_for = [&](const char* tip) -> std::string {
      if (!b4) return "";
      if (!xhot) return "cold";
      return tip;
    };
    auto set_combo = [&](const std::string& combo) {
      if (!b4) return;
      auto [c2, k2] = *red.replaced_ring[k];
      std::string cur = combo.empty() ? detail::default_combo(h, k, xbit) : combo;
      pieces[sx.circle].frag[sx.pos] =
          red.index.at(EqId::ring(c2, k2)).alignment(cur).fragments[0];
    };

    struct Option {
      AlignmentPlan::Eq3Choice ch;
      long cost = 0;
    };
    std::vector<Option> opts;
    auto eval = [&](AlignmentPlan::Eq3Choice ch) {
      set_combo(ch.combo);
      long letters = 0, joins = 0;
      const GString* at_x = nullptr;
      const GString* at_y = nullptr;
      const GString* at_z = nullptr;
      if (ch.joint) {
        letters += static_cast<long>(joint.size());
        if (ch.joint_placed) at_x = &joint;
      } else {
        const GString& a = ch.use_xa ? xa : ya;
        const GString& b = ch.use_xb ? xb : zb;
        letters += static_cast<long>(a.size() + b.size());
        if (ch.a_placed) (ch.use_xa ? at_x : at_y) = &a;
        if (ch.b_placed) (ch.use_xb ? at_x : at_z) = &b;
      }
      joins += slot_gain(sx.circle, sx.pos, at_x);
      joins += slot_gain(sy.circle, sy.pos, at_y);
      joins += slot_gain(sz.circle, sz.pos, at_z);
      opts.push_back(Option{std::move(ch), letters - joins});
      set_combo("");  // restore default
    };

    for (int ap = 0; ap < 4; ++ap) {
      for (int bp = 0; bp < 4; ++bp) {
        AlignmentPlan::Eq3Choice ch;
        ch.eq3 = k;
        ch.use_xa = ap < 2;
        ch.use_ya = !ch.use_xa;
        ch.a_placed = (ap % 2) == 0;
        ch.use_xb = bp >= 2;
        ch.use_zb = !ch.use_xb;
        ch.b_placed = (bp % 2) == 0;
        if (ch.use_xa && ch.a_placed && ch.use_xb && ch.b_placed) continue;
        if (b4) {
          if (ch.use_xa && ch.a_placed) ch.combo = combo_for("hot-a");
          else if (ch.use_xb && ch.b_placed) ch.combo = combo_for("hot-b");
          else ch.combo = detail::default_combo(h, k, xbit);
        }
        eval(std::move(ch));
      }
    }
    for (bool placed : {true, false}) {
      AlignmentPlan::Eq3Choice ch;
      ch.eq3 = k;
      ch.joint = true;
      ch.joint_placed = placed;
      if (b4) ch.combo = placed ? "cold" : detail::default_combo(h, k, xbit);
      eval(std::move(ch));
    }
    const Option* best = &opts[0];
    for (const auto& o : opts)
      if (o.cost < best->cost) best = &o;
    plan.eq3s.push_back(best->ch);
    set_combo(best->ch.combo);  // leave pieces consistent for later eq3s
  }
  return plan;
}

// Execute a plan: fold the per-circle chains with maximal merges, then
// append tail fragments in equation-index order.
inline ForwardResult assemble(const HybridInstance& h, const Reduction& red,
                              const AlignmentPlan& plan) {
  ForwardResult out;
  out.plan = plan;

  std::vector<detail::CirclePieces> pieces(h.n());
  for (int c = 0; c < h.n(); ++c) pieces[c] = detail::build_circle_pieces(h, red, c, plan);

  // slot contents
  std::map<std::pair<int, int>, GString> slot_content;
  std::vector<GString> tails;
  for (const auto& mc : plan.matches) {
    const EquationGadget& g = red.index.at(EqId::match(mc.circle, mc.i, mc.j));
    const GString& f = g.alignment(mc.bit ? "1" : "0").fragments[0];
    if (mc.placed)
      slot_content[{mc.circle, mc.bit ? mc.i : mc.j}] = f;
    else
      tails.push_back(f);
  }
  for (const auto& ch : plan.eq3s) {
    const EquationGadget& g = red.index.at(EqId::three(ch.eq3));
    const Eq3& e = h.eq3s[ch.eq3];
    if (ch.joint) {
      const GString& f = g.alignment("cold-joint").fragments[0];
      if (ch.joint_placed)
        slot_content[{e.vars[0].circle, e.vars[0].pos}] = f;
      else
        tails.push_back(f);
      continue;
    }
    const GString& a = g.alignment(ch.use_xa ? "x-hot-a" : "y-hot-a").fragments[0];
    const GString& b = g.alignment(ch.use_xb ? "x-hot-b" : "z-hot-b").fragments[0];
    auto place = [&](const GString& f, bool placed, const ContactRef& cr) {
      if (placed)
        slot_content[{cr.circle, cr.pos}] = f;
      else
        tails.push_back(f);
    };
    place(a, ch.a_placed, ch.use_xa ? e.vars[0] : e.vars[1]);
    place(b, ch.b_placed, ch.use_xb ? e.vars[0] : e.vars[2]);
  }

  GString s;
  auto fold = [&](const GString& piece) {
    long off;
    if (s.empty()) {
      s = piece;
      off = 0;
    } else {
      int k = max_overlap(s, piece);
      out.total_joins += k;
      off = static_cast<long>(s.size()) - k;
      s = merge(s, piece, k);
    }
    out.pieces.push_back(PlacedPiece{piece, off});
  };

  for (int c : plan.circle_order) {
    const auto& cp = pieces[c];
    int size = h.circles[c].size;
    fold(cp.t_l);
    fold(cp.s_l);
    for (int k = 1; k <= size; ++k) {
      auto it = slot_content.find({c, k});
      if (it != slot_content.end()) fold(it->second);
      if (k < size) fold(cp.frag[k + 1]);
    }
    fold(cp.s_r);
    fold(cp.t_r);
  }
  for (const auto& t : tails) fold(t);
  out.s = std::move(s);
  return out;
}

inline std::vector<std::vector<std::uint8_t>> ring_bits_from_assignment(
    const HybridInstance& h, const Assignment& phi) {
  std::vector<std::vector<std::uint8_t>> bits(h.n());
  for (int c = 0; c < h.n(); ++c) {
    bits[c].assign(h.circles[c].size + 1, 0);
    for (int k = 1; k <= h.circles[c].size; ++k)
      bits[c][k] = static_cast<std::uint8_t>(phi(h, c, k));
  }
  return bits;
}

inline AlignmentPlan plan_from_assignment(const HybridInstance& h, const Reduction& red,
                                          const Assignment& phi,
                                          std::vector<int> circle_order = {}) {
  return plan_from_bits(h, red, ring_bits_from_assignment(h, phi), std::move(circle_order));
}

// Build the superstring s_phi from an assignment.
inline ForwardResult build_superstring(const HybridInstance& h, const Reduction& red,
                                       const Assignment& phi,
                                       std::vector<int> circle_order = {}) {
  auto plan = plan_from_assignment(h, red, phi, std::move(circle_order));
  auto res = assemble(h, red, plan);
  if (!is_superstring(res.s, red.set))
    throw error("forward: result is not a superstring (bug)");
  return res;
}

}  // namespace ssred
