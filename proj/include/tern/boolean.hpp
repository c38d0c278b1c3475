#pragma once

#include <optional>
#include <variant>

#include "tern/function.hpp"

// Two-valued restrictions of three-valued functions and membership tests
// for the closed classes of P2 that the Sigma classes are built on:
// T0, T1, S, L, M, K, D. Literal format mirrors the ternary one: base-2
// string, first argument most significant.

namespace tern {

class bfunc {
public:
  bfunc(int arity, std::vector<std::uint8_t> table)
      : arity_(arity), t_(std::move(table)) {
    if (arity_ < 1 || t_.size() != (size_t{1} << arity_))
      throw error(errc::bad_length, "boolean table size does not match arity");
    for (auto v : t_)
      if (v > 1) throw error(errc::bad_digit, "boolean entry outside {0,1}");
  }

  static bfunc parse(std::string_view s) {
    size_t len = s.size();
    int arity = 0;
    size_t p = 1;
    while (p < len) {
      p <<= 1;
      ++arity;
    }
    if (len < 2 || p != len)
      throw error(errc::bad_length, "boolean literal length must be a power of 2");
    std::vector<std::uint8_t> t(len);
    for (size_t i = 0; i < len; ++i) {
      if (s[i] != '0' && s[i] != '1')
        throw error(errc::bad_digit, "boolean digit outside {0,1}");
      t[i] = static_cast<std::uint8_t>(s[i] - '0');
    }
    return bfunc(arity, std::move(t));
  }

  std::string str() const {
    std::string s(t_.size(), '0');
    for (size_t i = 0; i < t_.size(); ++i) s[i] = static_cast<char>('0' + t_[i]);
    return s;
  }

  int arity() const { return arity_; }
  size_t size() const { return t_.size(); }
  std::uint8_t table_at(size_t i) const { return t_[i]; }

  std::uint8_t operator()(std::span<const std::uint8_t> args) const {
    size_t idx = 0;
    for (auto a : args) idx = (idx << 1) | a;
    return t_[idx];
  }

  static bfunc constant(std::uint8_t c, int arity = 1) {
    return bfunc(arity, std::vector<std::uint8_t>(size_t{1} << arity, c));
  }

  bool operator==(const bfunc&) const = default;
  auto operator<=>(const bfunc& o) const {
    if (auto c = arity_ <=> o.arity_; c != 0) return c;
    return t_ <=> o.t_;
  }

private:
  int arity_;
  std::vector<std::uint8_t> t_;
};

enum class post_id { T0, T1, S, L, M, K, D };

inline std::string_view post_name(post_id c) {
  switch (c) {
    case post_id::T0: return "T0";
    case post_id::T1: return "T1";
    case post_id::S: return "S";
    case post_id::L: return "L";
    case post_id::M: return "M";
    case post_id::K: return "K";
    case post_id::D: return "D";
  }
  return "?";
}

inline std::optional<post_id> post_from_name(std::string_view s) {
  for (post_id c : {post_id::T0, post_id::T1, post_id::S, post_id::L, post_id::M,
                    post_id::K, post_id::D})
    if (post_name(c) == s) return c;
  return std::nullopt;
}

// K is the clone of {conjunction, 0, 1}: constants plus conjunctions of
// nonempty variable sets, i.e. g^{-1}(1) is a principal up-set. D dually.
inline bool post_member(const bfunc& g, post_id cls) {
  require_cap(g.arity());
  const size_t n = g.size();
  const size_t full = n - 1;
  switch (cls) {
    case post_id::T0:
      return g.table_at(0) == 0;
    case post_id::T1:
      return g.table_at(full) == 1;
    case post_id::S: {
      for (size_t i = 0; i < n; ++i)
        if (g.table_at(i) == g.table_at(full ^ i)) return false;
      return true;
    }
    case post_id::L: {
      // interpolate a0 + sum ai xi over GF(2), then compare
      std::uint8_t a0 = g.table_at(0);
      for (size_t i = 0; i < n; ++i) {
        std::uint8_t acc = a0;
        for (int b = 0; b < g.arity(); ++b) {
          size_t e = size_t{1} << (g.arity() - 1 - b);
          if (i & e) acc ^= static_cast<std::uint8_t>(g.table_at(e) ^ a0);
        }
        if (acc != g.table_at(i)) return false;
      }
      return true;
    }
    case post_id::M: {
      for (size_t i = 0; i < n; ++i)
        for (int b = 0; b < g.arity(); ++b) {
          size_t e = size_t{1} << b;
          if (!(i & e) && g.table_at(i) > g.table_at(i | e)) return false;
        }
      return true;
    }
    case post_id::K: {
      size_t meet = full;
      bool any = false;
      for (size_t i = 0; i < n; ++i)
        if (g.table_at(i)) {
          meet &= i;
          any = true;
        }
      if (!any) return true;  // constant 0
      for (size_t i = 0; i < n; ++i)
        if (g.table_at(i) != ((i & meet) == meet ? 1 : 0)) return false;
      return true;
    }
    case post_id::D: {
      size_t join = 0;
      bool any = false;
      for (size_t i = 0; i < n; ++i)
        if (!g.table_at(i)) {
          join |= i;
          any = true;
        }
      if (!any) return true;  // constant 1
      for (size_t i = 0; i < n; ++i)
        if (g.table_at(i) != ((i | join) == join ? 0 : 1)) return false;
      return true;
    }
  }
  return false;
}

// Witness that f escapes the set {a,b}: a tuple over the pair and the
// outside value it maps to.
struct set_violation {
  std::vector<val> at;
  val out;
};

// Witness that f breaks a partition: two equivalent tuples mapped to
// inequivalent values.
struct partition_violation {
  std::vector<val> t1, t2;
  val v1, v2;
};

// theta sends Boolean 0 to the smaller pair element.
inline val theta(const pair_set& p, std::uint8_t b) { return b ? p.hi : p.lo; }
inline std::uint8_t theta_inv(const pair_set& p, val v) {
  return v == p.hi ? 1 : 0;
}

// f restricted to the preserved pair {a,b}, encoded through theta.
inline std::variant<bfunc, set_violation> try_boolean_restriction(
    const func& f, const pair_set& p) {
  const int n = f.arity();
  require_cap(n);
  std::vector<std::uint8_t> t(size_t{1} << n);
  std::vector<val> args(n);
  for (size_t i = 0; i < t.size(); ++i) {
    for (int j = 0; j < n; ++j)
      args[j] = theta(p, (i >> (n - 1 - j)) & 1);
    val v = f(args);
    if (!p.contains(v)) return set_violation{args, v};
    t[i] = theta_inv(p, v);
  }
  return bfunc(n, std::move(t));
}

inline bfunc boolean_restriction(const func& f, const pair_set& p) {
  auto r = try_boolean_restriction(f, p);
  if (auto* v = std::get_if<set_violation>(&r))
    throw error(errc::not_set_preserving,
                "function does not preserve the pair (value " +
                    std::to_string(int(v->out)) + ")");
  return std::get<bfunc>(std::move(r));
}

// A block of the partition {a,b}{c} is named by the positions whose value
// is free over the pair; the remaining positions are fixed to c. The main
// block has every position free.
struct block_id {
  std::vector<int> free_positions;  // strictly increasing, 0-based
};

struct constant_c_marker {};

using block_restriction_result = std::variant<bfunc, constant_c_marker>;

// Does f map equivalent tuples to equivalent values? On failure returns the
// offending pair.
inline std::optional<partition_violation> partition_break(const func& f,
                                                          const partition3& p) {
  const int n = f.arity();
  require_cap(n);
  // scan each block: values must be all-c or all in the pair
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    // mask bit j set = position j free over the pair
    int m = std::popcount(mask);
    std::vector<val> first_t;
    val first_v = 0;
    bool have_first = false;
    for (std::uint32_t sub = 0; sub < (1u << m); ++sub) {
      std::vector<val> args(n);
      int bit = 0;
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) {
          args[j] = theta(p.pair, (sub >> bit) & 1);
          ++bit;
        } else {
          args[j] = p.single;
        }
      }
      val v = f(args);
      if (!have_first) {
        first_t = args;
        first_v = v;
        have_first = true;
      } else if ((v == p.single) != (first_v == p.single)) {
        return partition_violation{first_t, args, first_v, v};
      }
    }
  }
  return std::nullopt;
}

inline bool preserves_partition(const func& f, const partition3& p) {
  return !partition_break(f, p).has_value();
}

// Boolean restriction of f to one block of a preserved partition. Constant-c
// blocks come back as a first-class marker, not an error. A block with no
// free positions yields a unary constant.
inline block_restriction_result block_restriction(const func& f, const partition3& p,
                                                  const block_id& b) {
  const int n = f.arity();
  require_cap(n);
  for (int pos : b.free_positions)
    if (pos < 0 || pos >= n) throw error(errc::bad_index, "block position out of range");
  const int m = static_cast<int>(b.free_positions.size());
  std::vector<std::uint8_t> t(size_t{1} << std::max(m, 1));
  bool all_c = true, all_pair = true;
  std::vector<val> args(n, p.single);
  for (std::uint32_t sub = 0; sub < (1u << m); ++sub) {
    for (int j = 0; j < m; ++j)
      args[b.free_positions[j]] = theta(p.pair, (sub >> (m - 1 - j)) & 1);
    val v = f(args);
    if (v == p.single)
      all_pair = false;
    else
      all_c = false;
    if (v != p.single) {
      if (m == 0)
        t[0] = t[1] = theta_inv(p.pair, v);
      else
        t[sub] = theta_inv(p.pair, v);
    }
  }
  if (all_c) return constant_c_marker{};
  if (!all_pair) {
    auto w = partition_break(f, p);
    throw error(errc::not_partition_preserving, "mixed values on a block");
  }
  return bfunc(std::max(m, 1), std::move(t));
}

// All blocks of arity n, main block first, then by fewer free positions.
inline std::vector<block_id> all_blocks(int n) {
  std::vector<block_id> out;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca > cb;
    return a < b;
  });
  for (auto mask : masks) {
    block_id b;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) b.free_positions.push_back(j);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace tern
