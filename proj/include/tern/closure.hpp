#pragma once

#include <bit>
#include <optional>
#include <queue>
#include <set>
#include <unordered_set>

#include "tern/function.hpp"

// Bounded-arity superposition-closure fragments and exhaustive enumeration
// of composition-closed sets of unary functions (transformation submonoids
// containing the identity).
//
// The m-ary fragment is grown from the m projections by applying generators
// to tuples of current members. This yields exactly the m-ary part of the
// clone generated by gens + identity: every term tree in m variables
// evaluates bottom-up through m-ary subfunctions, so no detour through
// higher arities is needed.

namespace tern {

inline constexpr size_t k_default_ternary_budget = 2'000'000;

inline std::vector<func> closure_fragment(std::span<const func> gens, int m,
                                          std::optional<size_t> budget = std::nullopt) {
  if (m < 1) throw error(errc::bad_input, "fragment arity must be >= 1");
  if (m > 2 && !budget) budget = k_default_ternary_budget;

  std::set<func> members;
  std::vector<func> list;
  auto push = [&](func f) {
    if (members.insert(f).second) {
      list.push_back(std::move(f));
      if (budget && members.size() > *budget)
        throw error(errc::budget_exceeded, "fragment growth past budget");
    }
  };
  for (int i = 0; i < m; ++i) push(func::projection(m, i));

  size_t old_count = 0;
  while (old_count < list.size()) {
    size_t frontier_start = old_count;
    old_count = list.size();
    for (const func& g : gens) {
      const int n = g.arity();
      // every n-tuple of members seen so far, requiring at least one
      // element from the previous frontier
      std::vector<size_t> pick(n, 0);
      for (;;) {
        bool fresh = false;
        for (size_t p : pick)
          if (p >= frontier_start) fresh = true;
        // first round: everything is fresh relative to the seed
        if (frontier_start == 0) fresh = true;
        if (fresh) {
          bool in_range = true;
          for (size_t p : pick)
            if (p >= old_count) in_range = false;
          if (in_range) {
            std::vector<func> args;
            args.reserve(n);
            for (size_t p : pick) args.push_back(list[p]);
            push(superpose(g, args));
          }
        }
        int i = n - 1;
        while (i >= 0 && pick[i] + 1 >= old_count) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
      }
    }
  }
  std::vector<func> out(members.begin(), members.end());
  return out;
}

inline std::vector<func> closure_fragment(std::initializer_list<func> gens, int m,
                                          std::optional<size_t> budget = std::nullopt) {
  return closure_fragment(std::span<const func>(gens.begin(), gens.size()), m, budget);
}

inline bool is_in_fragment(const func& f, std::span<const func> gens,
                           std::optional<size_t> budget = std::nullopt) {
  auto frag = closure_fragment(gens, f.arity(), budget);
  return std::binary_search(frag.begin(), frag.end(), f);
}

// --- unary monoids ---
// A unary function is coded 0..26 by its packed base-3 table index; a set of
// unary functions is a 27-bit mask.

inline constexpr std::uint32_t k_identity_code = 5;  // 012 in base 3

inline std::uint8_t unary_code(const func& f) {
  return static_cast<std::uint8_t>(f.packed_index());
}

inline func unary_from_code(std::uint8_t c) { return func::from_packed(1, c); }

// comp[a][b] = code of (a after b), i.e. x -> a(b(x)).
inline const std::array<std::array<std::uint8_t, 27>, 27>& unary_comp_table() {
  static const auto tab = [] {
    std::array<std::array<std::uint8_t, 27>, 27> t{};
    for (int a = 0; a < 27; ++a) {
      func fa = unary_from_code(static_cast<std::uint8_t>(a));
      for (int b = 0; b < 27; ++b) {
        func fb = unary_from_code(static_cast<std::uint8_t>(b));
        t[a][b] = unary_code(compose1(fa, fb));
      }
    }
    return t;
  }();
  return tab;
}

inline std::uint32_t monoid_close(std::uint32_t mask) {
  mask |= 1u << k_identity_code;
  const auto& comp = unary_comp_table();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < 27; ++a) {
      if (!(mask & (1u << a))) continue;
      for (int b = 0; b < 27; ++b) {
        if (!(mask & (1u << b))) continue;
        std::uint32_t c = 1u << comp[a][b];
        if (!(mask & c)) {
          mask |= c;
          grew = true;
        }
      }
    }
  }
  return mask;
}

inline std::uint8_t constant_code(val c) {
  return static_cast<std::uint8_t>(c * 9 + c * 3 + c);
}

struct monoid {
  std::uint32_t mask;

  std::vector<func> members() const {
    std::vector<func> out;
    for (int i = 0; i < 27; ++i)
      if (mask & (1u << i)) out.push_back(unary_from_code(static_cast<std::uint8_t>(i)));
    return out;
  }

  size_t size() const { return std::popcount(mask); }
  bool contains(const func& f) const { return mask & (1u << unary_code(f)); }
  bool operator==(const monoid&) const = default;
  auto operator<=>(const monoid&) const = default;
};

struct monoid_filter {
  std::vector<val> constants_required;
  std::vector<val> constants_forbidden;
};

// All composition-closed sets of unary functions containing the identity
// and the required constants, avoiding the forbidden ones. BFS over
// single-generator additions; every closed superset of the seed is
// reachable this way.
inline std::vector<monoid> enumerate_unary_monoids(const monoid_filter& filter = {}) {
  for (val r : filter.constants_required)
    for (val f : filter.constants_forbidden)
      if (r == f) throw error(errc::bad_input, "filters must be disjoint");
  std::uint32_t forbidden = 0;
  for (val f : filter.constants_forbidden) forbidden |= 1u << constant_code(f);
  std::uint32_t seed = 1u << k_identity_code;
  for (val r : filter.constants_required) seed |= 1u << constant_code(r);
  seed = monoid_close(seed);
  if (seed & forbidden) return {};

  std::unordered_set<std::uint32_t> seen;
  std::queue<std::uint32_t> frontier;
  seen.insert(seed);
  frontier.push(seed);
  while (!frontier.empty()) {
    std::uint32_t m = frontier.front();
    frontier.pop();
    for (int g = 0; g < 27; ++g) {
      if (m & (1u << g)) continue;
      std::uint32_t bigger = monoid_close(m | (1u << g));
      if (bigger & forbidden) continue;
      if (seen.insert(bigger).second) frontier.push(bigger);
    }
  }
  std::vector<monoid> out;
  out.reserve(seen.size());
  for (std::uint32_t m : seen) out.push_back(monoid{m});
  std::sort(out.begin(), out.end());
  return out;
}

// Conjugate a 27-bit member mask by a permutation of E3.
inline std::uint32_t monoid_dual_mask(std::uint32_t mask, const perm& p) {
  std::uint32_t out = 0;
  for (int i = 0; i < 27; ++i)
    if (mask & (1u << i))
      out |= 1u << unary_code(dual(unary_from_code(static_cast<std::uint8_t>(i)), p));
  return out;
}

// Lexicographically smallest conjugate, used to quotient by duality.
inline std::uint32_t monoid_canonical_mask(std::uint32_t mask) {
  std::uint32_t best = mask;
  for (const perm& p : perm::all()) best = std::min(best, monoid_dual_mask(mask, p));
  return best;
}

inline std::vector<monoid> quotient_by_duality(std::span<const monoid> ms) {
  std::set<std::uint32_t> reps;
  for (const monoid& m : ms) reps.insert(monoid_canonical_mask(m.mask));
  std::vector<monoid> out;
  for (std::uint32_t r : reps) out.push_back(monoid{r});
  return out;
}

}  // namespace tern
