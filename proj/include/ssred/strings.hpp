#pragma once

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "ssred/symbol.hpp"

namespace ssred {

using GString = std::vector<Symbol>;

// Largest k with 0 <= k < min(|u|,|v|) such that the k-suffix of u equals
// the k-prefix of v. The strict cap keeps the primitive total; equality
// cases cannot occur for substring-free sets. Not symmetric.
inline int max_overlap(const GString& u, const GString& v) {
  if (u.empty() || v.empty()) throw error("max_overlap: empty string");
  int cap = static_cast<int>(std::min(u.size(), v.size())) - 1;
  for (int k = cap; k >= 1; --k) {
    bool ok = true;
    for (int i = 0; i < k; ++i)
      if (u[u.size() - k + i] != v[i]) {
        ok = false;
        break;
      }
    if (ok) return k;
  }
  return 0;
}

// Concatenation of u and v minus the shared k letters.
inline GString merge(const GString& u, const GString& v, int k) {
  if (k < 0 || (k > 0 && k >= static_cast<int>(std::min(u.size(), v.size()))))
    throw error("merge: overlap out of range");
  for (int i = 0; i < k; ++i)
    if (u[u.size() - k + i] != v[i]) throw error("merge: mismatch at overlap");
  GString out(u);
  out.insert(out.end(), v.begin() + k, v.end());
  return out;
}

// merge at the maximal feasible overlap
inline GString merge_max(const GString& u, const GString& v) {
  return merge(u, v, max_overlap(u, v));
}

inline bool is_substring(const GString& needle, const GString& hay) {
  if (needle.empty()) return true;
  if (needle.size() > hay.size()) return false;
  for (size_t p = 0; p + needle.size() <= hay.size(); ++p) {
    bool ok = true;
    for (size_t i = 0; i < needle.size(); ++i)
      if (hay[p + i] != needle[i]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

// All start positions of needle in hay.
inline std::vector<int> occurrences(const GString& needle, const GString& hay) {
  std::vector<int> out;
  if (needle.empty() || needle.size() > hay.size()) return out;
  for (size_t p = 0; p + needle.size() <= hay.size(); ++p) {
    bool ok = true;
    for (size_t i = 0; i < needle.size(); ++i)
      if (hay[p + i] != needle[i]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(static_cast<int>(p));
  }
  return out;
}

// A substring-free, duplicate-free collection of strings.
struct StringSet {
  std::vector<GString> strings;

  size_t size() const { return strings.size(); }
  const GString& operator[](size_t i) const { return strings[i]; }

  long total_letters() const {
    long t = 0;
    for (const auto& s : strings) t += static_cast<long>(s.size());
    return t;
  }
};

// Throws if the collection violates the StringSet invariants.
inline void validate_string_set(const std::vector<GString>& strings) {
  for (const auto& s : strings)
    if (s.empty()) throw error("string set: empty string");
  for (size_t i = 0; i < strings.size(); ++i)
    for (size_t j = 0; j < strings.size(); ++j) {
      if (i == j) continue;
      if (strings[i] == strings[j]) {
        if (i < j) throw error("string set: duplicate member");
      } else if (is_substring(strings[i], strings[j])) {
        throw error("string set: member is substring of another");
      }
    }
}

inline StringSet make_string_set(std::vector<GString> strings) {
  validate_string_set(strings);
  return StringSet{std::move(strings)};
}

inline bool is_superstring(const GString& s, const StringSet& set) {
  for (const auto& m : set.strings)
    if (!is_substring(m, s)) return false;
  return true;
}

// Sum of member lengths minus |s|.
inline long compression(const StringSet& set, const GString& s) {
  if (!is_superstring(s, set)) throw error("compression: not a superstring");
  return set.total_letters() - static_cast<long>(s.size());
}

struct OrbitStats {
  std::map<Symbol, long> counts;
  long max = 0;
};

// Exact multiset counts of every symbol across the set.
inline OrbitStats orbit_stats(const StringSet& set) {
  OrbitStats st;
  for (const auto& s : set.strings)
    for (const auto& sym : s) st.max = std::max(st.max, ++st.counts[sym]);
  return st;
}

// ---- "sset v1" text format ------------------------------------------------
// One string per line, symbols whitespace-separated, rendered as
// kind:owner:tag (v:x.3:m0, c:x:Cl, e:5:A2). Eq3 indices are 1-based in
// files. Comments start with '#'.

inline std::string render_symbol(const Symbol& s, const std::vector<std::string>& circle_names) {
  std::ostringstream o;
  switch (s.kind) {
    case SymbolKind::VarLetter:
      o << "v:" << circle_names.at(s.a) << "." << s.b << ":" << tag_name(s.tag);
      break;
    case SymbolKind::CircleTerminal:
      o << "c:" << circle_names.at(s.a) << ":" << tag_name(s.tag);
      break;
    case SymbolKind::Eq3Aux:
      o << "e:" << (s.a + 1) << ":" << tag_name(s.tag);
      break;
  }
  return o.str();
}

inline void write_sset(std::ostream& os, const std::vector<GString>& strings,
                       const std::vector<std::string>& circle_names) {
  for (const auto& s : strings) {
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) os << ' ';
      os << render_symbol(s[i], circle_names);
    }
    os << '\n';
  }
}

struct SsetFile {
  std::vector<GString> strings;
  std::vector<std::string> circle_names;  // in order of first appearance
};

inline Symbol parse_symbol(const std::string& tok, std::vector<std::string>& names) {
  auto c1 = tok.find(':');
  auto c2 = tok.rfind(':');
  if (c1 == std::string::npos || c2 == c1) throw error("sset: bad symbol '" + tok + "'");
  std::string kind = tok.substr(0, c1);
  std::string owner = tok.substr(c1 + 1, c2 - c1 - 1);
  std::string tagstr = tok.substr(c2 + 1);
  Tag tag;
  if (!parse_tag(tagstr, tag)) throw error("sset: bad tag '" + tagstr + "'");
  auto name_id = [&](const std::string& nm) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == nm) return static_cast<int>(i);
    names.push_back(nm);
    return static_cast<int>(names.size() - 1);
  };
  if (kind == "v") {
    auto dot = owner.rfind('.');
    if (dot == std::string::npos) throw error("sset: bad owner '" + owner + "'");
    int pos = std::stoi(owner.substr(dot + 1));
    return Symbol::var(name_id(owner.substr(0, dot)), pos, tag);
  }
  if (kind == "c") return Symbol::terminal(name_id(owner), tag);
  if (kind == "e") return Symbol::aux(std::stoi(owner) - 1, tag);
  throw error("sset: bad kind '" + kind + "'");
}

inline SsetFile read_sset(std::istream& is) {
  SsetFile f;
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    GString g;
    std::string tok;
    while (ls >> tok) g.push_back(parse_symbol(tok, f.circle_names));
    if (!g.empty()) f.strings.push_back(std::move(g));
  }
  return f;
}

}  // namespace ssred
