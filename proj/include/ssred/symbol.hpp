#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ssred {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The alphabet is structured: every letter belongs to a circle variable,
// a circle terminal, or an auxiliary block of a three-variable equation.
enum class SymbolKind : std::uint8_t { VarLetter, CircleTerminal, Eq3Aux };

enum class Tag : std::uint8_t {
  // variable letters
  m0, m1, l0, l1, r0, r1, r1a, r1b, r0a, r0b,
  // circle terminals
  L, R, Cl, Cr,
  // three-variable auxiliaries
  A1, A2, A3, B1, B2, B3, C,
};

inline const char* tag_name(Tag t) {
  switch (t) {
    case Tag::m0: return "m0";
    case Tag::m1: return "m1";
    case Tag::l0: return "l0";
    case Tag::l1: return "l1";
    case Tag::r0: return "r0";
    case Tag::r1: return "r1";
    case Tag::r1a: return "r1a";
    case Tag::r1b: return "r1b";
    case Tag::r0a: return "r0a";
    case Tag::r0b: return "r0b";
    case Tag::L: return "L";
    case Tag::R: return "R";
    case Tag::Cl: return "Cl";
    case Tag::Cr: return "Cr";
    case Tag::A1: return "A1";
    case Tag::A2: return "A2";
    case Tag::A3: return "A3";
    case Tag::B1: return "B1";
    case Tag::B2: return "B2";
    case Tag::B3: return "B3";
    case Tag::C: return "C";
  }
  return "?";
}

inline bool parse_tag(const std::string& s, Tag& out) {
  static const struct { const char* name; Tag tag; } table[] = {
      {"m0", Tag::m0},   {"m1", Tag::m1},   {"l0", Tag::l0},
      {"l1", Tag::l1},   {"r0", Tag::r0},   {"r1", Tag::r1},
      {"r1a", Tag::r1a}, {"r1b", Tag::r1b}, {"r0a", Tag::r0a},
      {"r0b", Tag::r0b}, {"L", Tag::L},     {"R", Tag::R},
      {"Cl", Tag::Cl},   {"Cr", Tag::Cr},   {"A1", Tag::A1},
      {"A2", Tag::A2},   {"A3", Tag::A3},   {"B1", Tag::B1},
      {"B2", Tag::B2},   {"B3", Tag::B3},   {"C", Tag::C},
  };
  for (const auto& e : table)
    if (s == e.name) {
      out = e.tag;
      return true;
    }
  return false;
}

// A letter of the instance alphabet. (kind, owner, tag) identifies it;
// equality is structural. VarLetter owners are (circle, position),
// CircleTerminal owners are (circle, 0), Eq3Aux owners are (eq3 index, 0).
struct Symbol {
  SymbolKind kind{SymbolKind::VarLetter};
  std::int32_t a{0};  // circle index or eq3 index
  std::int32_t b{0};  // position within circle (1-based), otherwise 0
  Tag tag{Tag::m0};

  auto operator<=>(const Symbol&) const = default;

  static Symbol var(int circle, int pos, Tag t) {
    return Symbol{SymbolKind::VarLetter, circle, pos, t};
  }
  static Symbol terminal(int circle, Tag t) {
    return Symbol{SymbolKind::CircleTerminal, circle, 0, t};
  }
  static Symbol aux(int eq3, Tag t) {
    return Symbol{SymbolKind::Eq3Aux, eq3, 0, t};
  }
};

}  // namespace ssred
