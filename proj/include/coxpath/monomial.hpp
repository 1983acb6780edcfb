#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "coxpath/coxsys.hpp"

namespace coxpath {

/* Both monomial kinds are flat symbol sequences and share the rewriting
 * machinery below.  A PathMono lists the vertices it visits, so consecutive
 * monomials glue on one shared boundary symbol and the unit role is played
 * by the single-vertex paths.  A WordMono is a word in the free letters
 * indexed by (edge, bar), glues without overlap, and the empty word is the
 * unit. */

struct PathMono {
  static constexpr bool kSharedBoundary = true;
  std::vector<int32_t> syms; // vertices in visiting order, never empty

  int length() const { return static_cast<int>(syms.size()) - 1; }
  int origin() const { return syms.front(); }
  int terminus() const { return syms.back(); }
  bool operator==(const PathMono&) const = default;
};

struct WordMono {
  static constexpr bool kSharedBoundary = false;
  std::vector<int32_t> syms; // letters; empty is the unit

  int length() const { return static_cast<int>(syms.size()); }
  bool operator==(const WordMono&) const = default;
};

inline int32_t word_letter(int edge, bool bar) { return 2 * edge + (bar ? 1 : 0); }
inline int letter_edge(int32_t l) { return l / 2; }
inline bool letter_bar(int32_t l) { return l % 2 != 0; }

/* Admissible order: by length, ties broken symbol-by-symbol.  For paths this
 * is the length-lexicographic order whose induced edge order is the
 * lexicographic order on (origin, terminus) vertex indices. */
template <class M>
int compare_llex(const M& a, const M& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  if (a.syms < b.syms) return -1;
  return a.syms == b.syms ? 0 : 1;
}

template <class M>
struct LlexLess {
  bool operator()(const M& a, const M& b) const { return compare_llex(a, b) < 0; }
};

/* Null products (extremity mismatch) come back as nullopt. */
template <class M>
std::optional<M> concat(const M& a, const M& b) {
  if constexpr (M::kSharedBoundary) {
    if (a.syms.back() != b.syms.front()) return std::nullopt;
  }
  M out = a;
  out.syms.insert(out.syms.end(), b.syms.begin() + (M::kSharedBoundary ? 1 : 0),
                  b.syms.end());
  return out;
}

/* Start offsets (in symbols) of every occurrence of `tip` inside `host`,
 * overlapping occurrences included. */
template <class M>
std::vector<int> occurrences(const M& tip, const M& host) {
  std::vector<int> out;
  if (tip.syms.empty() || tip.syms.size() > host.syms.size()) return out;
  const int last = static_cast<int>(host.syms.size() - tip.syms.size());
  for (int at = 0; at <= last; ++at)
    if (std::equal(tip.syms.begin(), tip.syms.end(), host.syms.begin() + at))
      out.push_back(at);
  return out;
}

inline bool divides(const auto& tip, const auto& host) {
  return !occurrences(tip, host).empty();
}

/* Replace the tip occurrence at symbol offset `at` by `repl`.  For paths the
 * replacement carries the occurrence's extremities (rules are uniform), so
 * the result is again a path. */
template <class M>
M splice(const M& host, int at, int tip_nsyms, const M& repl) {
  assert(at >= 0 && at + tip_nsyms <= static_cast<int>(host.syms.size()));
  if constexpr (M::kSharedBoundary) {
    assert(repl.syms.front() == host.syms[at]);
    assert(repl.syms.back() == host.syms[at + tip_nsyms - 1]);
  }
  M out;
  out.syms.reserve(host.syms.size() - tip_nsyms + repl.syms.size());
  out.syms.assign(host.syms.begin(), host.syms.begin() + at);
  out.syms.insert(out.syms.end(), repl.syms.begin(), repl.syms.end());
  out.syms.insert(out.syms.end(), host.syms.begin() + at + tip_nsyms, host.syms.end());
  return out;
}

inline bool is_valid_path(const CoxGraph& g, const PathMono& p) {
  if (p.syms.empty()) return false;
  for (int32_t v : p.syms)
    if (v < 0 || v >= g.nverts) return false;
  for (size_t k = 0; k + 1 < p.syms.size(); ++k)
    if (!g.adjacent(p.syms[k], p.syms[k + 1])) return false;
  return true;
}

/* The alternating path r,s,r,s,... on `nsyms` vertices. */
inline PathMono alternating_path(int r, int s, int nsyms) {
  PathMono p;
  p.syms.reserve(nsyms);
  for (int k = 0; k < nsyms; ++k) p.syms.push_back(k % 2 == 0 ? r : s);
  return p;
}

} // namespace coxpath
