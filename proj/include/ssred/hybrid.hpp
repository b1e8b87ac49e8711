#pragma once

#include <array>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ssred/symbol.hpp"

namespace ssred {

// System of XOR equations over {0,1} where every equation has exactly
// three unnegated variables; negation is folded into the right-hand side.
struct E3Lin {
  struct Eq {
    std::array<int, 3> vars;  // indices into `vars`
    int rhs = 0;
  };
  std::vector<std::string> vars;
  std::vector<Eq> eqs;

  std::vector<int> occurrence_counts() const {
    std::vector<int> occ(vars.size(), 0);
    for (const auto& e : eqs)
      for (int v : e.vars) occ.at(v)++;
    return occ;
  }
};

struct ContactRef {
  int circle = -1;
  int pos = 0;  // 1-based position within the circle
  auto operator<=>(const ContactRef&) const = default;
};

struct Circle {
  std::string name;
  int size = 0;  // 7 * t
  std::vector<std::pair<int, int>> matching;  // on checker positions, i < j

  int t() const { return size / 7; }
};

struct Eq3 {
  std::array<ContactRef, 3> vars;  // (x, y, z); x carries the B4 replacement
  int rhs = 0;
};

struct Counts {
  long n = 0, m2 = 0, m3 = 0;
  auto operator<=>(const Counts&) const = default;
};

// Circles, matchings, contact positions and the four equation families.
// Immutable after finalize(); safe to share read-only.
struct HybridInstance {
  std::vector<Circle> circles;
  std::vector<Eq3> eq3s;

  // derived, filled by finalize()
  std::vector<int> var_offset;                    // per circle
  std::vector<std::vector<int>> partner_of;       // per circle, [pos] -> partner or 0
  std::map<ContactRef, std::pair<int, int>> contact_eq3;  // -> (eq3 idx, slot)
  int total_vars = 0;

  static bool is_contact_pos(int pos) { return pos % 7 == 0; }

  int n() const { return static_cast<int>(circles.size()); }
  long m3() const { return static_cast<long>(eq3s.size()); }
  long m2() const {
    long m = 0;
    for (const auto& c : circles) m += c.size + static_cast<long>(c.matching.size());
    return m;
  }
  Counts counts() const { return Counts{n(), m2(), m3()}; }

  int var_id(int circle, int pos) const { return var_offset[circle] + pos - 1; }
  int partner(int circle, int pos) const { return partner_of[circle][pos]; }

  // (eq3 index, slot 0..2), or (-1,-1) if the position is not a contact
  std::pair<int, int> eq3_of(int circle, int pos) const {
    auto it = contact_eq3.find(ContactRef{circle, pos});
    if (it == contact_eq3.end()) return {-1, -1};
    return it->second;
  }

  int circle_index(const std::string& name) const {
    for (size_t i = 0; i < circles.size(); ++i)
      if (circles[i].name == name) return static_cast<int>(i);
    throw error("hybrid: unknown circle '" + name + "'");
  }

  void finalize() {
    var_offset.assign(circles.size(), 0);
    partner_of.assign(circles.size(), {});
    total_vars = 0;
    for (size_t c = 0; c < circles.size(); ++c) {
      const Circle& cc = circles[c];
      if (cc.size <= 0 || cc.size % 7 != 0)
        throw error("hybrid: circle size must be a positive multiple of 7");
      var_offset[c] = total_vars;
      total_vars += cc.size;
      auto& part = partner_of[c];
      part.assign(cc.size + 1, 0);
      for (auto [i, j] : cc.matching) {
        if (i < 1 || j < 1 || i > cc.size || j > cc.size || i == j)
          throw error("hybrid: matching edge out of range");
        if (is_contact_pos(i) || is_contact_pos(j))
          throw error("hybrid: matching touches a contact position");
        if (part[i] || part[j]) throw error("hybrid: matching covers a position twice");
        part[i] = j;
        part[j] = i;
      }
      for (int p = 1; p <= cc.size; ++p)
        if (!is_contact_pos(p) && part[p] == 0)
          throw error("hybrid: matching does not cover all checker positions");
    }
    contact_eq3.clear();
    for (size_t k = 0; k < eq3s.size(); ++k) {
      int slot = 0;
      for (const auto& cr : eq3s[k].vars) {
        if (cr.circle < 0 || cr.circle >= n()) throw error("hybrid: eq3 circle out of range");
        if (cr.pos < 1 || cr.pos > circles[cr.circle].size || !is_contact_pos(cr.pos))
          throw error("hybrid: eq3 refers to a non-contact position");
        if (!contact_eq3.emplace(cr, std::make_pair(static_cast<int>(k), slot)).second)
          throw error("hybrid: contact position used by two eq3");
        slot++;
      }
    }
    for (size_t c = 0; c < circles.size(); ++c)
      for (int nu = 1; nu <= circles[c].t(); ++nu)
        if (!contact_eq3.count(ContactRef{static_cast<int>(c), 7 * nu}))
          throw error("hybrid: contact position without eq3");
  }
};

// Total map variable -> bit, indexed by HybridInstance::var_id.
struct Assignment {
  std::vector<std::uint8_t> bits;

  int operator()(const HybridInstance& h, int circle, int pos) const {
    return bits.at(h.var_id(circle, pos));
  }
};

enum class EqKind { CircleEq, BorderEq, MatchingEq, ThreeVarEq };

// Walk every equation of the four families in a fixed order.
// fn(kind, circle, a, b, eq3_index); positions are 1-based, eq3_index is -1
// for two-variable equations, (a,b) unused for eq3.
template <class Fn>
inline void for_each_equation(const HybridInstance& h, Fn&& fn) {
  for (int c = 0; c < h.n(); ++c) {
    const Circle& cc = h.circles[c];
    for (int i = 1; i + 1 <= cc.size; ++i) fn(EqKind::CircleEq, c, i, i + 1, -1);
    fn(EqKind::BorderEq, c, 1, cc.size, -1);
    for (auto [i, j] : cc.matching) fn(EqKind::MatchingEq, c, i, j, -1);
  }
  for (size_t k = 0; k < h.eq3s.size(); ++k)
    fn(EqKind::ThreeVarEq, -1, 0, 0, static_cast<int>(k));
}

// Number of equations whose XOR of assigned bits differs from the rhs.
inline long unsat_count(const HybridInstance& h, const Assignment& phi) {
  if (phi.bits.size() != static_cast<size_t>(h.total_vars))
    throw error("unsat_count: assignment does not cover all variables");
  long u = 0;
  for_each_equation(h, [&](EqKind kind, int c, int a, int b, int k) {
    if (kind == EqKind::ThreeVarEq) {
      const Eq3& e = h.eq3s[k];
      int x = phi(h, e.vars[0].circle, e.vars[0].pos);
      int y = phi(h, e.vars[1].circle, e.vars[1].pos);
      int z = phi(h, e.vars[2].circle, e.vars[2].pos);
      if ((x ^ y ^ z) != e.rhs) ++u;
    } else {
      if ((phi(h, c, a) ^ phi(h, c, b)) != 0) ++u;
    }
  });
  return u;
}

enum class MatchingStrategy { Adjacent, Shifted };

inline std::vector<std::pair<int, int>> make_matching(int size, MatchingStrategy strat) {
  std::vector<int> checkers;
  for (int p = 1; p <= size; ++p)
    if (!HybridInstance::is_contact_pos(p)) checkers.push_back(p);
  std::vector<std::pair<int, int>> edges;
  size_t half = checkers.size() / 2;
  switch (strat) {
    case MatchingStrategy::Adjacent:
      for (size_t k = 0; k + 1 < checkers.size(); k += 2)
        edges.emplace_back(checkers[k], checkers[k + 1]);
      break;
    case MatchingStrategy::Shifted:
      for (size_t k = 0; k < half; ++k)
        edges.emplace_back(checkers[k], checkers[k + half]);
      break;
  }
  return edges;
}

// One circle per variable with 7 * occurrences positions; the nu-th
// occurrence of a variable binds contact 7*nu. Unless allow_any_t is set,
// instances where a variable occurs != 3 times are rejected.
inline HybridInstance build_hybrid(const E3Lin& e3, MatchingStrategy strat,
                                   bool allow_any_t = false) {
  auto occ = e3.occurrence_counts();
  for (size_t v = 0; v < occ.size(); ++v) {
    if (occ[v] == 0) throw error("build_hybrid: unused variable '" + e3.vars[v] + "'");
    if (occ[v] != 3 && !allow_any_t)
      throw error("build_hybrid: variable '" + e3.vars[v] + "' occurs " +
                  std::to_string(occ[v]) + " times (expected 3)");
  }
  HybridInstance h;
  h.circles.resize(e3.vars.size());
  for (size_t v = 0; v < e3.vars.size(); ++v) {
    h.circles[v].name = e3.vars[v];
    h.circles[v].size = 7 * occ[v];
    h.circles[v].matching = make_matching(h.circles[v].size, strat);
  }
  std::vector<int> seen(e3.vars.size(), 0);
  for (const auto& eq : e3.eqs) {
    Eq3 g;
    g.rhs = eq.rhs;
    for (int s = 0; s < 3; ++s) {
      int v = eq.vars[s];
      g.vars[s] = ContactRef{v, 7 * (++seen[v])};
    }
    h.eq3s.push_back(g);
  }
  h.finalize();
  return h;
}

// ---- text formats ----------------------------------------------------------

// "e3 v1": header, then `eq <x> <y> <z> <rhs>` lines.
inline void write_e3(std::ostream& os, const E3Lin& e3) {
  os << "e3 v1\n";
  for (const auto& eq : e3.eqs)
    os << "eq " << e3.vars[eq.vars[0]] << ' ' << e3.vars[eq.vars[1]] << ' '
       << e3.vars[eq.vars[2]] << ' ' << eq.rhs << '\n';
}

inline E3Lin read_e3(std::istream& is) {
  E3Lin e3;
  std::map<std::string, int> ids;
  auto id = [&](const std::string& nm) {
    auto it = ids.find(nm);
    if (it != ids.end()) return it->second;
    ids.emplace(nm, static_cast<int>(e3.vars.size()));
    e3.vars.push_back(nm);
    return static_cast<int>(e3.vars.size()) - 1;
  };
  std::string line;
  bool header = false;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!header) {
      std::string ver;
      if (tok != "e3" || !(ls >> ver) || ver != "v1") throw error("e3: bad header");
      header = true;
      continue;
    }
    if (tok != "eq") throw error("e3: unexpected token '" + tok + "'");
    std::string a, b, c;
    int rhs;
    if (!(ls >> a >> b >> c >> rhs) || (rhs != 0 && rhs != 1))
      throw error("e3: malformed eq line");
    e3.eqs.push_back(E3Lin::Eq{{id(a), id(b), id(c)}, rhs});
  }
  if (!header) throw error("e3: missing header");
  return e3;
}

// "hybrid v1": `circle <name> <len>` followed by its `match <i> <j>` lines,
// then `eq3 <name.pos> <name.pos> <name.pos> <rhs>` lines.
inline void write_hybrid(std::ostream& os, const HybridInstance& h) {
  os << "hybrid v1\n";
  for (const auto& c : h.circles) {
    os << "circle " << c.name << ' ' << c.size << '\n';
    for (auto [i, j] : c.matching) os << "match " << i << ' ' << j << '\n';
  }
  for (const auto& e : h.eq3s) {
    os << "eq3";
    for (const auto& cr : e.vars)
      os << ' ' << h.circles[cr.circle].name << '.' << cr.pos;
    os << ' ' << e.rhs << '\n';
  }
}

inline HybridInstance read_hybrid(std::istream& is) {
  HybridInstance h;
  std::map<std::string, int> ids;
  std::string line;
  bool header = false;
  int cur = -1;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!header) {
      std::string ver;
      if (tok != "hybrid" || !(ls >> ver) || ver != "v1") throw error("hybrid: bad header");
      header = true;
      continue;
    }
    if (tok == "circle") {
      std::string name;
      int len;
      if (!(ls >> name >> len)) throw error("hybrid: malformed circle line");
      if (ids.count(name)) throw error("hybrid: duplicate circle '" + name + "'");
      ids.emplace(name, static_cast<int>(h.circles.size()));
      h.circles.push_back(Circle{name, len, {}});
      cur = static_cast<int>(h.circles.size()) - 1;
    } else if (tok == "match") {
      int i, j;
      if (cur < 0 || !(ls >> i >> j)) throw error("hybrid: match line outside circle");
      if (i > j) std::swap(i, j);
      h.circles[cur].matching.emplace_back(i, j);
    } else if (tok == "eq3") {
      Eq3 e;
      for (int s = 0; s < 3; ++s) {
        std::string ref;
        if (!(ls >> ref)) throw error("hybrid: malformed eq3 line");
        auto dot = ref.rfind('.');
        if (dot == std::string::npos) throw error("hybrid: bad contact ref '" + ref + "'");
        auto it = ids.find(ref.substr(0, dot));
        if (it == ids.end()) throw error("hybrid: unknown circle in eq3");
        e.vars[s] = ContactRef{it->second, std::stoi(ref.substr(dot + 1))};
      }
      if (!(ls >> e.rhs) || (e.rhs != 0 && e.rhs != 1))
        throw error("hybrid: malformed eq3 rhs");
      h.eq3s.push_back(e);
    } else {
      throw error("hybrid: unexpected token '" + tok + "'");
    }
  }
  if (!header) throw error("hybrid: missing header");
  h.finalize();
  return h;
}

}  // namespace ssred
