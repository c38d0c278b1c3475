#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Functions of three-valued logic as base-3 truth tables, plus the
// superposition primitives everything else is built from. All values are
// immutable after construction and every operation is pure.

namespace tern {

using val = std::uint8_t;

inline constexpr int k_values = 3;

constexpr std::int64_t pow3(int n) {
  std::int64_t r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

enum class errc {
  bad_length,
  bad_digit,
  arity_mismatch,
  bad_index,
  arity_underflow,
  arity_cap_exceeded,
  unknown_id,
  budget_exceeded,
  not_set_preserving,
  not_partition_preserving,
  not_violating,
  fragment_too_large,
  search_exhausted,
  bad_input,
};

class error : public std::runtime_error {
public:
  error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

// Arity cap for the expensive membership tests. Default 8 (3^8 = 6561 table
// entries), overridable via P3_MAX_ARITY or programmatically.
inline int& arity_cap() {
  static int cap = [] {
    if (const char* e = std::getenv("P3_MAX_ARITY")) {
      int v = std::atoi(e);
      if (v >= 1) return v;
    }
    return 8;
  }();
  return cap;
}

inline void require_cap(int arity) {
  if (arity > arity_cap())
    throw error(errc::arity_cap_exceeded,
                "arity " + std::to_string(arity) + " exceeds cap " +
                    std::to_string(arity_cap()));
}

// A bijection of {0,1,2}, stored as the image sequence.
struct perm {
  std::array<val, 3> img{0, 1, 2};

  val operator()(val v) const { return img[v]; }

  perm inverse() const {
    perm r;
    for (val v = 0; v < 3; ++v) r.img[img[v]] = v;
    return r;
  }

  // (a then b): compose(a, b)(x) = b(a(x)).
  friend perm compose(const perm& a, const perm& b) {
    return perm{{b.img[a.img[0]], b.img[a.img[1]], b.img[a.img[2]]}};
  }

  bool operator==(const perm&) const = default;
  auto operator<=>(const perm&) const = default;

  static perm identity() { return {}; }

  static perm transposition(val a, val b) {
    perm r;
    std::swap(r.img[a], r.img[b]);
    return r;
  }

  static perm parse(std::string_view s) {
    if (s.size() != 3) throw error(errc::bad_input, "permutation needs 3 digits");
    perm r;
    bool seen[3] = {false, false, false};
    for (int i = 0; i < 3; ++i) {
      if (s[i] < '0' || s[i] > '2')
        throw error(errc::bad_digit, "permutation digit outside {0,1,2}");
      r.img[i] = static_cast<val>(s[i] - '0');
      seen[r.img[i]] = true;
    }
    if (!(seen[0] && seen[1] && seen[2]))
      throw error(errc::bad_input, "not a permutation of {0,1,2}");
    return r;
  }

  std::string str() const {
    std::string s(3, '0');
    for (int i = 0; i < 3; ++i) s[i] = static_cast<char>('0' + img[i]);
    return s;
  }

  static const std::array<perm, 6>& all() {
    static const std::array<perm, 6> ps = [] {
      std::array<val, 3> base{0, 1, 2};
      std::array<perm, 6> out{};
      int i = 0;
      do {
        out[i++] = perm{base};
      } while (std::next_permutation(base.begin(), base.end()));
      std::sort(out.begin(), out.end());
      return out;
    }();
    return ps;
  }
};

// An unordered pair {a,b} of distinct values; lo < hi.
struct pair_set {
  val lo, hi;

  pair_set(val a, val b) : lo(std::min(a, b)), hi(std::max(a, b)) {
    if (lo == hi || hi > 2) throw error(errc::bad_input, "bad pair");
  }

  bool contains(val v) const { return v == lo || v == hi; }
  val other() const { return static_cast<val>(3 - lo - hi); }
  bool operator==(const pair_set&) const = default;
  auto operator<=>(const pair_set&) const = default;
};

// Two-block partition {a,b}{c} of E3.
struct partition3 {
  pair_set pair;
  val single;

  explicit partition3(pair_set p) : pair(p), single(p.other()) {}
  partition3(val a, val b) : pair(a, b), single(pair.other()) {}

  bool equivalent(val x, val y) const {
    return (x == single) == (y == single);
  }
  bool operator==(const partition3&) const = default;

  static std::array<partition3, 3> all() {
    return {partition3(0, 1), partition3(0, 2), partition3(1, 2)};
  }

  std::string str() const {
    std::string s = "{";
    s += static_cast<char>('0' + pair.lo);
    s += static_cast<char>('0' + pair.hi);
    s += "}{";
    s += static_cast<char>('0' + single);
    s += "}";
    return s;
  }
};

// An n-ary function E3^n -> E3. Index convention: table[i] = f(x1,...,xn)
// with i = sum xj * 3^(n-j), i.e. x1 is the most significant base-3 digit.
// For n = 2 this reads the table row-major with the first argument as the
// row, matching the usual 3x3 matrix layout.
class func {
public:
  func(int arity, std::vector<val> table) : arity_(arity), t_(std::move(table)) {
    if (arity_ < 1 || static_cast<std::int64_t>(t_.size()) != pow3(arity_))
      throw error(errc::bad_length, "table size does not match arity");
    for (val v : t_)
      if (v > 2) throw error(errc::bad_digit, "table entry outside {0,1,2}");
  }

  static func parse(std::string_view s) {
    std::int64_t len = static_cast<std::int64_t>(s.size());
    int arity = 0;
    std::int64_t p = 1;
    while (p < len) {
      p *= 3;
      ++arity;
    }
    if (len < 3 || p != len)
      throw error(errc::bad_length, "literal length must be a power of 3 (>= 3)");
    std::vector<val> t(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '2')
        throw error(errc::bad_digit, "literal digit outside {0,1,2}");
      t[i] = static_cast<val>(s[i] - '0');
    }
    return func(arity, std::move(t));
  }

  std::string str() const {
    std::string s(t_.size(), '0');
    for (size_t i = 0; i < t_.size(); ++i) s[i] = static_cast<char>('0' + t_[i]);
    return s;
  }

  int arity() const { return arity_; }
  size_t size() const { return t_.size(); }
  std::span<const val> table() const { return t_; }
  val table_at(size_t i) const { return t_[i]; }

  val operator()(std::span<const val> args) const {
    if (static_cast<int>(args.size()) != arity_)
      throw error(errc::arity_mismatch, "argument count != arity");
    size_t idx = 0;
    for (val a : args) idx = idx * 3 + a;
    return t_[idx];
  }

  val operator()(std::initializer_list<val> args) const {
    return (*this)(std::span<const val>(args.begin(), args.size()));
  }

  // Packed base-3 index of the whole table; only valid for arity <= 3.
  std::uint64_t packed_index() const {
    std::uint64_t idx = 0;
    for (val v : t_) idx = idx * 3 + v;
    return idx;
  }

  static func from_packed(int arity, std::uint64_t idx) {
    std::vector<val> t(pow3(arity));
    for (size_t i = t.size(); i-- > 0;) {
      t[i] = static_cast<val>(idx % 3);
      idx /= 3;
    }
    return func(arity, std::move(t));
  }

  static func constant(val c, int arity = 1) {
    return func(arity, std::vector<val>(pow3(arity), c));
  }

  static func identity() { return func(1, {0, 1, 2}); }

  // i-th of m projections, 0-based.
  static func projection(int m, int i) {
    std::vector<val> t(pow3(m));
    std::int64_t period = pow3(m - 1 - i);
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(t.size()); ++idx)
      t[idx] = static_cast<val>((idx / period) % 3);
    return func(m, std::move(t));
  }

  bool operator==(const func&) const = default;

  // Canonical order: by arity, then table lexicographically.
  auto operator<=>(const func& o) const {
    if (auto c = arity_ <=> o.arity_; c != 0) return c;
    return t_ <=> o.t_;
  }

private:
  int arity_;
  std::vector<val> t_;
};

// Visits every tuple of E3^n in index order.
template <typename F>
void for_each_tuple(int n, F&& body) {
  std::vector<val> x(n, 0);
  for (;;) {
    body(std::span<const val>(x));
    int i = n - 1;
    while (i >= 0 && x[i] == 2) x[i--] = 0;
    if (i < 0) return;
    ++x[i];
  }
}

// r(x~) = f(g1(x~), ..., gn(x~)); all gi share one arity.
inline func superpose(const func& f, std::span<const func> gs) {
  if (static_cast<int>(gs.size()) != f.arity())
    throw error(errc::arity_mismatch, "superpose: |gs| != arity(f)");
  int m = gs.empty() ? 0 : gs[0].arity();
  for (const func& g : gs)
    if (g.arity() != m) throw error(errc::arity_mismatch, "superpose: mixed arities");
  std::vector<val> t(pow3(m));
  std::vector<val> inner(gs.size());
  std::int64_t idx = 0;
  for_each_tuple(m, [&](std::span<const val> x) {
    for (size_t j = 0; j < gs.size(); ++j) inner[j] = gs[j](x);
    t[idx++] = f(inner);
  });
  return func(m, std::move(t));
}

inline func superpose(const func& f, std::initializer_list<func> gs) {
  return superpose(f, std::span<const func>(gs.begin(), gs.size()));
}

// Unary composition, (a then b) read right-to-left: compose(a,b)(x) = a(b(x)).
inline func compose1(const func& outer, const func& inner) {
  return superpose(outer, {inner});
}

// r(y1,...,ym) = f(y_{var_map[0]}, ..., y_{var_map[n-1]}), 0-based indices.
// Repeated indices identify variables, m > n adds fictitious ones.
inline func minor(const func& f, std::span<const int> var_map, int m) {
  if (static_cast<int>(var_map.size()) != f.arity())
    throw error(errc::arity_mismatch, "minor: |var_map| != arity(f)");
  for (int i : var_map)
    if (i < 0 || i >= m) throw error(errc::bad_index, "minor: index out of range");
  std::vector<val> t(pow3(m));
  std::vector<val> inner(var_map.size());
  std::int64_t idx = 0;
  for_each_tuple(m, [&](std::span<const val> y) {
    for (size_t j = 0; j < var_map.size(); ++j) inner[j] = y[var_map[j]];
    t[idx++] = f(inner);
  });
  return func(m, std::move(t));
}

inline func minor(const func& f, std::initializer_list<int> var_map, int m) {
  return minor(f, std::span<const int>(var_map.begin(), var_map.size()), m);
}

// Fixes argument `position` (0-based) to c; arity drops by one.
inline func substitute_constant(const func& f, int position, val c) {
  if (f.arity() < 2) throw error(errc::arity_underflow, "cannot drop below arity 1");
  if (position < 0 || position >= f.arity())
    throw error(errc::bad_index, "substitute_constant: bad position");
  int m = f.arity() - 1;
  std::vector<val> t(pow3(m));
  std::vector<val> inner(f.arity());
  std::int64_t idx = 0;
  for_each_tuple(m, [&](std::span<const val> x) {
    for (int j = 0, k = 0; j < f.arity(); ++j)
      inner[j] = (j == position) ? c : x[k++];
    t[idx++] = f(inner);
  });
  return func(m, std::move(t));
}

// f^pi(x~) = pi(f(pi^-1(x1), ..., pi^-1(xn))).
inline func dual(const func& f, const perm& p) {
  perm q = p.inverse();
  std::vector<val> t(f.size());
  std::vector<val> inner(f.arity());
  std::int64_t idx = 0;
  for_each_tuple(f.arity(), [&](std::span<const val> x) {
    for (int j = 0; j < f.arity(); ++j) inner[j] = q(x[j]);
    t[idx++] = p(f(inner));
  });
  return func(f.arity(), std::move(t));
}

// 0-based indices i such that f depends on argument i.
inline std::vector<int> essential_variables(const func& f) {
  std::vector<int> out;
  for (int i = 0; i < f.arity(); ++i) {
    std::int64_t period = pow3(f.arity() - 1 - i);
    bool essential = false;
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(f.size()) && !essential;
         ++idx) {
      if ((idx / period) % 3 != 0) continue;
      val v0 = f.table_at(idx);
      if (f.table_at(idx + period) != v0 || f.table_at(idx + 2 * period) != v0)
        essential = true;
    }
    if (essential) out.push_back(i);
  }
  return out;
}

// A named finite set of functions; duplicates (by arity+table) rejected.
struct system {
  std::string name;
  std::vector<func> fns;

  system(std::string n, std::vector<func> fs) : name(std::move(n)), fns(std::move(fs)) {
    if (fns.empty()) throw error(errc::bad_input, "empty system");
    auto sorted = fns;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw error(errc::bad_input, "duplicate function in system");
  }
};

inline system parse_system(std::string name, std::initializer_list<std::string_view> lits) {
  std::vector<func> fs;
  for (auto l : lits) fs.push_back(func::parse(l));
  return system(std::move(name), std::move(fs));
}

}  // namespace tern
