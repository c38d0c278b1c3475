#pragma once

#include <map>
#include <optional>
#include <set>

#include "tern/function.hpp"

// Relations over E3 stored column-wise, the preservation test defining
// Pol(A), and the registry of named matrices. Columns are kept in their
// defining order; preservation deduplicates before iterating. The registry
// is immutable once built and preservation checks are pure.

namespace tern {

struct matrix {
  int rows;
  std::vector<std::vector<val>> cols;

  matrix(int t, std::vector<std::vector<val>> cs) : rows(t), cols(std::move(cs)) {
    if (rows < 1) throw error(errc::bad_input, "matrix needs at least one row");
    for (const auto& c : cols) {
      if (static_cast<int>(c.size()) != rows)
        throw error(errc::bad_input, "column length != rows");
      for (val v : c)
        if (v > 2) throw error(errc::bad_digit, "matrix entry outside {0,1,2}");
    }
    if (cols.empty()) throw error(errc::bad_input, "matrix needs columns");
  }

  bool has_column(std::span<const val> c) const {
    for (const auto& col : cols)
      if (std::equal(col.begin(), col.end(), c.begin(), c.end())) return true;
    return false;
  }

  // Equality is by column set, not storage order.
  bool same_columns(const matrix& o) const {
    if (rows != o.rows) return false;
    std::set<std::vector<val>> a(cols.begin(), cols.end()), b(o.cols.begin(), o.cols.end());
    return a == b;
  }
};

struct preserve_result {
  bool ok;
  // On failure: the chosen column indices (one per argument of f) and the
  // resulting column that is not in the matrix.
  std::vector<int> witness_cols;
  std::vector<val> result_col;

  explicit operator bool() const { return ok; }
};

// True iff applying f row-wise to every tuple of (possibly repeated)
// columns of A stays within the columns of A.
inline preserve_result preserves(const func& f, const matrix& A) {
  require_cap(f.arity());
  // distinct columns only; remember one original index per distinct column
  std::vector<int> rep;
  std::vector<std::vector<val>> cs;
  for (int j = 0; j < static_cast<int>(A.cols.size()); ++j) {
    bool dup = false;
    for (const auto& c : cs)
      if (c == A.cols[j]) {
        dup = true;
        break;
      }
    if (!dup) {
      cs.push_back(A.cols[j]);
      rep.push_back(j);
    }
  }
  const int n = f.arity();
  const int s = static_cast<int>(cs.size());
  std::vector<int> choice(n, 0);
  std::vector<val> args(n), out(A.rows);
  for (;;) {
    for (int r = 0; r < A.rows; ++r) {
      for (int j = 0; j < n; ++j) args[j] = cs[choice[j]][r];
      out[r] = f(args);
    }
    if (!A.has_column(out)) {
      std::vector<int> w(n);
      for (int j = 0; j < n; ++j) w[j] = rep[choice[j]];
      return {false, std::move(w), std::move(out)};
    }
    int i = n - 1;
    while (i >= 0 && choice[i] == s - 1) choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
  }
  return {true, {}, {}};
}

// Entrywise image of A under pi. Pol(matrix_dual(A, pi)) consists of the
// pi-duals of the members of Pol(A).
inline matrix matrix_dual(const matrix& A, const perm& p) {
  auto cols = A.cols;
  for (auto& c : cols)
    for (val& v : c) v = p(v);
  return matrix(A.rows, std::move(cols));
}

// --- named matrices ---

inline matrix cycle_graph() {
  // pairs (x+1, x): the predicate x = y+1
  return matrix(2, {{1, 0}, {2, 1}, {0, 2}});
}

// Graph of max under the linear order bot < mid < top, columns (a, b, max).
inline matrix max_graph(val bot = 0, val mid = 1, val top = 2) {
  std::array<int, 3> rank{};
  rank[bot] = 0, rank[mid] = 1, rank[top] = 2;
  std::vector<std::vector<val>> cols;
  for (val a = 0; a < 3; ++a)
    for (val b = 0; b < 3; ++b)
      cols.push_back({a, b, rank[a] >= rank[b] ? a : b});
  return matrix(3, std::move(cols));
}

inline matrix min_graph(val bot = 0, val mid = 1, val top = 2) {
  std::array<int, 3> rank{};
  rank[bot] = 0, rank[mid] = 1, rank[top] = 2;
  std::vector<std::vector<val>> cols;
  for (val a = 0; a < 3; ++a)
    for (val b = 0; b < 3; ++b)
      cols.push_back({a, b, rank[a] <= rank[b] ? a : b});
  return matrix(3, std::move(cols));
}

// Pairs {(x,y) : x = y or x = c or y = c}, diagonal first.
inline matrix central(val c) {
  std::vector<std::vector<val>> cols = {{0, 0}, {1, 1}, {2, 2}};
  for (val x = 0; x < 3; ++x)
    if (x != c) cols.push_back({c, x});
  for (val x = 0; x < 3; ++x)
    if (x != c) cols.push_back({x, c});
  return matrix(2, std::move(cols));
}

inline matrix subset_relation(std::span<const val> elems) {
  std::vector<std::vector<val>> cols;
  for (val v : elems) cols.push_back({v});
  return matrix(1, std::move(cols));
}

inline matrix subset_relation(std::initializer_list<val> elems) {
  return subset_relation(std::span<const val>(elems.begin(), elems.size()));
}

// Equivalence pairs of the two-block partition {a,b}{c}.
inline matrix partition_relation(const partition3& p) {
  return matrix(2, {{0, 0}, {1, 1}, {2, 2}, {p.pair.lo, p.pair.hi}, {p.pair.hi, p.pair.lo}});
}

// The displayed three-row matrices. A1/A2 realize the order predicates for
// the partial order with top 2 (0 and 1 incomparable); A3 defines Fp2;
// A4/A4p are the min/max graphs for 0 < 1 < 2.
inline matrix a1() {
  return matrix(3, {{0, 0, 0}, {1, 1, 1}, {0, 2, 2}, {1, 2, 2}, {2, 0, 2}, {2, 1, 2}, {2, 2, 2}});
}

inline matrix a2() {
  return matrix(3, {{0, 0, 0}, {1, 1, 1}, {0, 2, 0}, {1, 2, 1}, {2, 0, 0}, {2, 1, 1}, {2, 2, 2}});
}

inline matrix a3() {
  return matrix(3, {{0, 0, 0}, {1, 1, 1}, {0, 0, 2}, {0, 1, 2}, {1, 0, 2}, {1, 1, 2}, {2, 2, 2}});
}

inline matrix a4() {
  std::vector<std::vector<val>> cols;
  for (val a = 0; a < 3; ++a)
    for (val b = 0; b < 3; ++b) cols.push_back({a, b, std::min(a, b)});
  return matrix(3, std::move(cols));
}

inline matrix a4_prime() {
  std::vector<std::vector<val>> cols;
  for (val a = 0; a < 3; ++a)
    for (val b = 0; b < 3; ++b) cols.push_back({a, b, std::max(a, b)});
  return matrix(3, std::move(cols));
}

// The order predicate rho for the top-2 partial order: columns (a,b,c) with
// c = the greater of comparable a,b. Same column set as a1().
inline matrix rho_top2() { return a1(); }
// rho': c = the lesser of comparable a,b. Same column set as a2().
inline matrix rho_prime_top2() { return a2(); }

inline const std::vector<std::string>& named_matrix_ids() {
  static const std::vector<std::string> ids = {
      "A1",     "A2",     "A3",     "A4",     "A4p",    "cycle", "max",
      "min",    "central0", "central1", "central2", "set0",  "set1",
      "set2",   "set01",  "set02",  "set12",  "part01_2", "part02_1", "part12_0"};
  return ids;
}

inline matrix named_matrix(std::string_view id) {
  if (id == "A1") return a1();
  if (id == "A2") return a2();
  if (id == "A3") return a3();
  if (id == "A4") return a4();
  if (id == "A4p") return a4_prime();
  if (id == "cycle") return cycle_graph();
  if (id == "max") return max_graph();
  if (id == "min") return min_graph();
  if (id == "central0") return central(0);
  if (id == "central1") return central(1);
  if (id == "central2") return central(2);
  if (id == "set0") return subset_relation({0});
  if (id == "set1") return subset_relation({1});
  if (id == "set2") return subset_relation({2});
  if (id == "set01") return subset_relation({0, 1});
  if (id == "set02") return subset_relation({0, 2});
  if (id == "set12") return subset_relation({1, 2});
  if (id == "part01_2") return partition_relation(partition3(0, 1));
  if (id == "part02_1") return partition_relation(partition3(0, 2));
  if (id == "part12_0") return partition_relation(partition3(1, 2));
  throw error(errc::unknown_id, "unknown matrix id: " + std::string(id));
}

}  // namespace tern
