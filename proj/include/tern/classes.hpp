#pragma once

#include <bit>
#include <bitset>
#include <cassert>
#include <map>

#include "tern/boolean.hpp"
#include "tern/matrix.hpp"

// The registry of the 54 implicitly precomplete classes of P3 with exact
// per-function membership tests, duality orbits and fragment extraction.
//
// Naming of duals is pinned by convention: the subscript of a named dual is
// the image of the base class's distinguished element (2 for Y/Rp/Qp/Fp,
// 1 for W) under the transposition used; KM/DM indices 1,2,3 mean the
// linear order whose middle element is 1, 0, 2 respectively.

namespace tern {

enum class cls : int {
  S, L, T0_0, T1_0, T2_0,
  W0, W1, W2, Y0, Y1, Y2,
  Sigma_01_L, Sigma_01_S, Sigma_01_K, Sigma_01_D,
  Sigma_02_L, Sigma_02_S, Sigma_02_K, Sigma_02_D,
  Sigma_12_L, Sigma_12_S, Sigma_12_K, Sigma_12_D,
  Sigma_01x2_L, Sigma_01x2_T0, Sigma_01x2_T1, Sigma_01x2_K, Sigma_01x2_D,
  Sigma_02x1_L, Sigma_02x1_T0, Sigma_02x1_T1, Sigma_02x1_K, Sigma_02x1_D,
  Sigma_12x0_L, Sigma_12x0_T0, Sigma_12x0_T1, Sigma_12x0_K, Sigma_12x0_D,
  KM1, DM1, KM2, DM2, KM3, DM3,
  Rp0, Rp1, Rp2, Qp0, Qp1, Qp2,
  Fp0, Fp1, Fp2,
  N,
};

inline constexpr int k_class_count = 54;

inline int index_of(cls c) { return static_cast<int>(c); }

inline const std::array<cls, k_class_count>& all_classes() {
  static const std::array<cls, k_class_count> ids = [] {
    std::array<cls, k_class_count> a{};
    for (int i = 0; i < k_class_count; ++i) a[i] = static_cast<cls>(i);
    return a;
  }();
  return ids;
}

// --- membership kinds ---

// Intersection of matrix-preservation constraints (covers S, T-constants,
// W, Y, KM/DM, Rp/Qp, Fp).
struct pol_meet_kind {
  std::vector<matrix> mats;
};

// Preserves the pair and the Boolean restriction lies in the P2 class.
struct sigma_pair_kind {
  pair_set pair;
  post_id post;
};

// Preserves the partition and every Boolean block restriction lies in the
// P2 class (constant-c blocks pass by definition).
struct sigma_partition_kind {
  partition3 part;
  post_id post;
};

struct linear_kind {};       // a0 + sum ai xi (mod 3), tested by interpolation
struct quasilinear_kind {};  // selects no vertex of any square

using class_kind = std::variant<pol_meet_kind, sigma_pair_kind,
                                sigma_partition_kind, linear_kind, quasilinear_kind>;

// --- witnesses (all re-checkable) ---

struct pol_witness {  // result column of the meet-member matrix not in it
  int matrix_idx;
  std::vector<int> cols;
  std::vector<val> result;
};

struct pair_witness {  // tuple over the pair mapped outside it
  pair_set pair;
  std::vector<val> at;
  val out;
};

struct bool_class_witness {  // failing Boolean restriction (whole pair or a block)
  std::vector<int> block_free_positions;  // empty + whole_pair=true: pair restriction
  bool whole_pair;
  bfunc restriction;
  post_id post;
};

struct part_witness {  // equivalent tuples, inequivalent values
  partition3 part;
  std::vector<val> t1, t2;
  val v1, v2;
};

struct linear_witness {  // point where the interpolated polynomial disagrees
  std::vector<val> at;
  val expected, got;
};

struct square_witness {  // the square and the selected vertex
  int i, j;  // 0-based coordinate pair
  std::array<std::vector<val>, 4> tuples;
  std::array<val, 4> values;
  int selected;  // index into tuples
};

using witness = std::variant<pol_witness, pair_witness, bool_class_witness,
                             part_witness, linear_witness, square_witness>;

struct member_result {
  bool ok;
  std::optional<witness> why;  // set iff !ok
  explicit operator bool() const { return ok; }
};

struct class_info {
  cls id;
  std::string name;
  class_kind kind;
  cls orbit_base;
  perm from_base;  // this = dual(base, from_base)
  bool all_constants;
  std::string relation;  // short human-readable defining relation
};

// --- membership tests ---

inline member_result member_pol_meet(const func& f, const pol_meet_kind& k) {
  for (int i = 0; i < static_cast<int>(k.mats.size()); ++i) {
    auto r = preserves(f, k.mats[i]);
    if (!r.ok)
      return {false, pol_witness{i, std::move(r.witness_cols), std::move(r.result_col)}};
  }
  return {true, std::nullopt};
}

inline member_result member_sigma_pair(const func& f, const sigma_pair_kind& k) {
  auto r = try_boolean_restriction(f, k.pair);
  if (auto* v = std::get_if<set_violation>(&r))
    return {false, pair_witness{k.pair, std::move(v->at), v->out}};
  auto& g = std::get<bfunc>(r);
  if (!post_member(g, k.post))
    return {false, bool_class_witness{{}, true, std::move(g), k.post}};
  return {true, std::nullopt};
}

inline member_result member_sigma_partition(const func& f,
                                            const sigma_partition_kind& k) {
  if (auto v = partition_break(f, k.part))
    return {false, part_witness{k.part, std::move(v->t1), std::move(v->t2), v->v1, v->v2}};
  for (const auto& b : all_blocks(f.arity())) {
    auto r = block_restriction(f, k.part, b);
    if (std::holds_alternative<constant_c_marker>(r)) continue;
    auto& g = std::get<bfunc>(r);
    if (!post_member(g, k.post))
      return {false, bool_class_witness{b.free_positions, false, std::move(g), k.post}};
  }
  return {true, std::nullopt};
}

inline member_result member_linear(const func& f) {
  require_cap(f.arity());
  const int n = f.arity();
  val a0 = f.table_at(0);
  std::vector<val> coef(n);
  for (int i = 0; i < n; ++i) {
    std::int64_t e = pow3(n - 1 - i);
    coef[i] = static_cast<val>((f.table_at(e) - a0 + 3) % 3);
  }
  std::int64_t idx = 0;
  member_result out{true, std::nullopt};
  for_each_tuple(n, [&](std::span<const val> x) {
    if (!out.ok) {
      ++idx;
      return;
    }
    int acc = a0;
    for (int i = 0; i < n; ++i) acc += coef[i] * x[i];
    val expect = static_cast<val>(acc % 3);
    val got = f.table_at(idx);
    if (expect != got)
      out = {false, linear_witness{std::vector<val>(x.begin(), x.end()), expect, got}};
    ++idx;
  });
  return out;
}

// Square scan, a direct transcription of the definition: coordinate pair
// (i,j), two values in each, all contexts; a vertex is selected iff its
// value differs from the other three, which are pairwise equal.
inline member_result member_quasilinear(const func& f) {
  require_cap(f.arity());
  const int n = f.arity();
  if (n < 2) return {true, std::nullopt};
  std::vector<val> x(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::int64_t pi = pow3(n - 1 - i), pj = pow3(n - 1 - j);
      // context = values of the remaining coordinates
      std::int64_t ctx_count = pow3(n - 2);
      for (std::int64_t ctx = 0; ctx < ctx_count; ++ctx) {
        std::int64_t rest = ctx;
        std::int64_t base = 0;
        for (int p = n - 1; p >= 0; --p) {
          if (p == i || p == j) continue;
          base += (rest % 3) * pow3(n - 1 - p);
          rest /= 3;
        }
        for (val a1 = 0; a1 < 3; ++a1)
          for (val a2 = static_cast<val>(a1 + 1); a2 < 3; ++a2)
            for (val b1 = 0; b1 < 3; ++b1)
              for (val b2 = static_cast<val>(b1 + 1); b2 < 3; ++b2) {
                std::array<std::int64_t, 4> idx = {
                    base + a1 * pi + b1 * pj, base + a1 * pi + b2 * pj,
                    base + a2 * pi + b1 * pj, base + a2 * pi + b2 * pj};
                std::array<val, 4> v;
                for (int t = 0; t < 4; ++t) v[t] = f.table_at(idx[t]);
                for (int t = 0; t < 4; ++t) {
                  val others[3];
                  int o = 0;
                  for (int u = 0; u < 4; ++u)
                    if (u != t) others[o++] = v[u];
                  if (others[0] == others[1] && others[1] == others[2] &&
                      v[t] != others[0]) {
                    square_witness w;
                    w.i = i;
                    w.j = j;
                    for (int u = 0; u < 4; ++u) {
                      std::vector<val> tup(n);
                      std::int64_t id = idx[u];
                      for (int p = 0; p < n; ++p) {
                        tup[p] = static_cast<val>((id / pow3(n - 1 - p)) % 3);
                      }
                      w.tuples[u] = std::move(tup);
                    }
                    w.values = v;
                    w.selected = t;
                    return member_result{false, std::move(w)};
                  }
                }
              }
      }
    }
  return {true, std::nullopt};
}

// --- registry ---

namespace detail {

inline std::string sigma_pair_name(const pair_set& p, post_id a) {
  std::string s = "Sigma_";
  s += static_cast<char>('0' + p.lo);
  s += static_cast<char>('0' + p.hi);
  s += '_';
  s += post_name(a);
  return s;
}

inline std::string sigma_part_name(const partition3& p, post_id a) {
  std::string s = "Sigma_";
  s += static_cast<char>('0' + p.pair.lo);
  s += static_cast<char>('0' + p.pair.hi);
  s += 'x';
  s += static_cast<char>('0' + p.single);
  s += '_';
  s += post_name(a);
  return s;
}

inline std::vector<class_info> build_registry() {
  std::vector<class_info> reg;
  reg.reserve(k_class_count);
  auto add = [&](cls id, std::string name, class_kind kind, cls base, perm p,
                 std::string rel) {
    reg.push_back(class_info{id, std::move(name), std::move(kind), base, p, false,
                             std::move(rel)});
  };
  const perm e = perm::identity();
  const perm t01 = perm::transposition(0, 1);
  const perm t02 = perm::transposition(0, 2);
  const perm t12 = perm::transposition(1, 2);
  const perm c012 = perm{{1, 2, 0}};  // 0->1->2->0
  const perm c021 = perm{{2, 0, 1}};  // 0->2->1->0

  add(cls::S, "S", pol_meet_kind{{cycle_graph()}}, cls::S, e, "Pol(x = y+1)");
  add(cls::L, "L", linear_kind{}, cls::L, e, "x = y+z-t (mod 3)");
  add(cls::T0_0, "T0_0", pol_meet_kind{{subset_relation({0})}}, cls::T0_0, e, "f(0...0)=0");
  add(cls::T1_0, "T1_0", pol_meet_kind{{subset_relation({1})}}, cls::T0_0, t01, "f(1...1)=1");
  add(cls::T2_0, "T2_0", pol_meet_kind{{subset_relation({2})}}, cls::T0_0, t02, "f(2...2)=2");

  auto w_kind = [&](val a) {
    // the two partitions whose pair block contains a
    std::vector<matrix> ms;
    for (const auto& p : partition3::all())
      if (p.pair.contains(a)) ms.push_back(partition_relation(p));
    return pol_meet_kind{std::move(ms)};
  };
  add(cls::W0, "W0", w_kind(0), cls::W1, t01, "U{02}{1} & U{01}{2}");
  add(cls::W1, "W1", w_kind(1), cls::W1, e, "U{01}{2} & U{12}{0}");
  add(cls::W2, "W2", w_kind(2), cls::W1, t12, "U{02}{1} & U{12}{0}");

  auto y_kind = [&](val c) {
    pair_set pr = c == 0 ? pair_set(1, 2) : (c == 1 ? pair_set(0, 2) : pair_set(0, 1));
    return pol_meet_kind{{subset_relation({pr.lo, pr.hi}),
                          partition_relation(partition3(pr)), central(c)}};
  };
  add(cls::Y0, "Y0", y_kind(0), cls::Y2, t02, "T{12},0 & U{12}{0} & T{0},1");
  add(cls::Y1, "Y1", y_kind(1), cls::Y2, t12, "T{02},0 & U{02}{1} & T{1},1");
  add(cls::Y2, "Y2", y_kind(2), cls::Y2, e, "T{01},0 & U{01}{2} & T{2},1");

  // Sigma over pairs. Orbit bases: Sigma_01_L, Sigma_01_S, Sigma_01_K (the
  // K/D family is one orbit of six).
  struct sp {
    cls id;
    pair_set pair;
    post_id post;
    cls base;
    perm p;
  };
  const pair_set p01(0, 1), p02(0, 2), p12(1, 2);
  std::vector<sp> sps = {
      {cls::Sigma_01_L, p01, post_id::L, cls::Sigma_01_L, e},
      {cls::Sigma_01_S, p01, post_id::S, cls::Sigma_01_S, e},
      {cls::Sigma_01_K, p01, post_id::K, cls::Sigma_01_K, e},
      {cls::Sigma_01_D, p01, post_id::D, cls::Sigma_01_K, t01},
      {cls::Sigma_02_L, p02, post_id::L, cls::Sigma_01_L, t12},
      {cls::Sigma_02_S, p02, post_id::S, cls::Sigma_01_S, t12},
      {cls::Sigma_02_K, p02, post_id::K, cls::Sigma_01_K, t12},
      {cls::Sigma_02_D, p02, post_id::D, cls::Sigma_01_K, c021},
      {cls::Sigma_12_L, p12, post_id::L, cls::Sigma_01_L, t02},
      {cls::Sigma_12_S, p12, post_id::S, cls::Sigma_01_S, t02},
      {cls::Sigma_12_K, p12, post_id::K, cls::Sigma_01_K, c012},
      {cls::Sigma_12_D, p12, post_id::D, cls::Sigma_01_K, t02},
  };
  // keep registry order: L,S,K,D per pair
  std::stable_sort(sps.begin(), sps.end(),
                   [](const sp& a, const sp& b) { return index_of(a.id) < index_of(b.id); });
  for (auto& s : sps)
    add(s.id, sigma_pair_name(s.pair, s.post), sigma_pair_kind{s.pair, s.post}, s.base,
        s.p, "pair " + partition3(s.pair).str().substr(0, 4) + " restriction in " +
                 std::string(post_name(s.post)));

  // Sigma over partitions. Bases: Sigma_01x2_L, Sigma_01x2_T0, Sigma_01x2_K.
  struct spt {
    cls id;
    partition3 part;
    post_id post;
    cls base;
    perm p;
  };
  const partition3 q01(0, 1), q02(0, 2), q12(1, 2);
  std::vector<spt> spts = {
      {cls::Sigma_01x2_L, q01, post_id::L, cls::Sigma_01x2_L, e},
      {cls::Sigma_01x2_T0, q01, post_id::T0, cls::Sigma_01x2_T0, e},
      {cls::Sigma_01x2_T1, q01, post_id::T1, cls::Sigma_01x2_T0, t01},
      {cls::Sigma_01x2_K, q01, post_id::K, cls::Sigma_01x2_K, e},
      {cls::Sigma_01x2_D, q01, post_id::D, cls::Sigma_01x2_K, t01},
      {cls::Sigma_02x1_L, q02, post_id::L, cls::Sigma_01x2_L, t12},
      {cls::Sigma_02x1_T0, q02, post_id::T0, cls::Sigma_01x2_T0, t12},
      {cls::Sigma_02x1_T1, q02, post_id::T1, cls::Sigma_01x2_T0, c021},
      {cls::Sigma_02x1_K, q02, post_id::K, cls::Sigma_01x2_K, t12},
      {cls::Sigma_02x1_D, q02, post_id::D, cls::Sigma_01x2_K, c021},
      {cls::Sigma_12x0_L, q12, post_id::L, cls::Sigma_01x2_L, t02},
      {cls::Sigma_12x0_T0, q12, post_id::T0, cls::Sigma_01x2_T0, c012},
      {cls::Sigma_12x0_T1, q12, post_id::T1, cls::Sigma_01x2_T0, t02},
      {cls::Sigma_12x0_K, q12, post_id::K, cls::Sigma_01x2_K, c012},
      {cls::Sigma_12x0_D, q12, post_id::D, cls::Sigma_01x2_K, t02},
  };
  for (auto& s : spts)
    add(s.id, sigma_part_name(s.part, s.post), sigma_partition_kind{s.part, s.post},
        s.base, s.p,
        "blocks of " + s.part.str() + " restrict into " + std::string(post_name(s.post)));

  // KM/DM: min/max graphs of the three betweenness-distinct linear orders;
  // one duality orbit of six.
  add(cls::KM1, "KM1", pol_meet_kind{{min_graph(0, 1, 2)}}, cls::KM1, e,
      "Pol(min graph, 0<1<2)");
  add(cls::DM1, "DM1", pol_meet_kind{{max_graph(0, 1, 2)}}, cls::KM1, t02,
      "Pol(max graph, 0<1<2)");
  add(cls::KM2, "KM2", pol_meet_kind{{min_graph(1, 0, 2)}}, cls::KM1, t01,
      "Pol(min graph, 1<0<2)");
  add(cls::DM2, "DM2", pol_meet_kind{{max_graph(1, 0, 2)}}, cls::KM1, c021,
      "Pol(max graph, 1<0<2)");
  add(cls::KM3, "KM3", pol_meet_kind{{min_graph(0, 2, 1)}}, cls::KM1, t12,
      "Pol(min graph, 0<2<1)");
  add(cls::DM3, "DM3", pol_meet_kind{{max_graph(0, 2, 1)}}, cls::KM1, c012,
      "Pol(max graph, 0<2<1)");

  add(cls::Rp0, "Rp0", pol_meet_kind{{matrix_dual(a1(), t02)}}, cls::Rp2, t02,
      "Pol(A1) dual, top 0");
  add(cls::Rp1, "Rp1", pol_meet_kind{{matrix_dual(a1(), t12)}}, cls::Rp2, t12,
      "Pol(A1) dual, top 1");
  add(cls::Rp2, "Rp2", pol_meet_kind{{a1()}}, cls::Rp2, e, "Pol(A1)");
  add(cls::Qp0, "Qp0", pol_meet_kind{{matrix_dual(a2(), t02)}}, cls::Qp2, t02,
      "Pol(A2) dual, top 0");
  add(cls::Qp1, "Qp1", pol_meet_kind{{matrix_dual(a2(), t12)}}, cls::Qp2, t12,
      "Pol(A2) dual, top 1");
  add(cls::Qp2, "Qp2", pol_meet_kind{{a2()}}, cls::Qp2, e, "Pol(A2)");

  add(cls::Fp0, "Fp0", pol_meet_kind{{matrix_dual(a3(), t02)}}, cls::Fp2, t02,
      "Pol(A3) dual, 2->0");
  add(cls::Fp1, "Fp1", pol_meet_kind{{matrix_dual(a3(), t12)}}, cls::Fp2, t12,
      "Pol(A3) dual, 2->1");
  add(cls::Fp2, "Fp2", pol_meet_kind{{a3()}}, cls::Fp2, e, "Pol(A3)");

  add(cls::N, "N", quasilinear_kind{}, cls::N, e, "selects no square vertex");

  std::sort(reg.begin(), reg.end(),
            [](const class_info& a, const class_info& b) {
              return index_of(a.id) < index_of(b.id);
            });
  assert(reg.size() == k_class_count);
  for (int i = 0; i < k_class_count; ++i) assert(index_of(reg[i].id) == i);
  return reg;
}

}  // namespace detail

inline member_result member(const func& f, cls id);

inline const std::vector<class_info>& registry() {
  static const std::vector<class_info> reg = [] {
    auto r = detail::build_registry();
    // constants flag from actual membership of the three constant functions
    for (auto& ci : r) {
      bool all = true;
      for (val c = 0; c < 3 && all; ++c) {
        const class_info& info = ci;
        member_result m = std::visit(
            [&](const auto& k) -> member_result {
              using T = std::decay_t<decltype(k)>;
              func fc = func::constant(c);
              if constexpr (std::is_same_v<T, pol_meet_kind>)
                return member_pol_meet(fc, k);
              else if constexpr (std::is_same_v<T, sigma_pair_kind>)
                return member_sigma_pair(fc, k);
              else if constexpr (std::is_same_v<T, sigma_partition_kind>)
                return member_sigma_partition(fc, k);
              else if constexpr (std::is_same_v<T, linear_kind>)
                return member_linear(fc);
              else
                return member_quasilinear(fc);
            },
            info.kind);
        all = m.ok;
      }
      ci.all_constants = all;
    }
    return r;
  }();
  return reg;
}

inline const class_info& info(cls id) { return registry()[index_of(id)]; }

inline std::optional<cls> class_from_name(std::string_view name) {
  for (const auto& ci : registry())
    if (ci.name == name) return ci.id;
  return std::nullopt;
}

inline member_result member(const func& f, cls id) {
  const class_info& ci = info(id);
  return std::visit(
      [&](const auto& k) -> member_result {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, pol_meet_kind>)
          return member_pol_meet(f, k);
        else if constexpr (std::is_same_v<T, sigma_pair_kind>)
          return member_sigma_pair(f, k);
        else if constexpr (std::is_same_v<T, sigma_partition_kind>)
          return member_sigma_partition(f, k);
        else if constexpr (std::is_same_v<T, linear_kind>)
          return member_linear(f);
        else
          return member_quasilinear(f);
      },
      ci.kind);
}

// Recomputes the violation a witness claims; true iff it still holds.
inline bool revalidate(const func& f, cls id, const witness& w) {
  const class_info& ci = info(id);
  return std::visit(
      [&](const auto& wit) -> bool {
        using W = std::decay_t<decltype(wit)>;
        if constexpr (std::is_same_v<W, pol_witness>) {
          const auto* k = std::get_if<pol_meet_kind>(&ci.kind);
          if (!k || wit.matrix_idx >= static_cast<int>(k->mats.size())) return false;
          const matrix& A = k->mats[wit.matrix_idx];
          if (static_cast<int>(wit.cols.size()) != f.arity()) return false;
          std::vector<val> out(A.rows), args(f.arity());
          for (int r = 0; r < A.rows; ++r) {
            for (int j = 0; j < f.arity(); ++j) {
              int cj = wit.cols[j];
              if (cj < 0 || cj >= static_cast<int>(A.cols.size())) return false;
              args[j] = A.cols[cj][r];
            }
            out[r] = f(args);
          }
          return out == wit.result && !A.has_column(out);
        } else if constexpr (std::is_same_v<W, pair_witness>) {
          return f(wit.at) == wit.out && !wit.pair.contains(wit.out);
        } else if constexpr (std::is_same_v<W, bool_class_witness>) {
          if (wit.whole_pair) {
            const auto* k = std::get_if<sigma_pair_kind>(&ci.kind);
            if (!k) return false;
            auto r = try_boolean_restriction(f, k->pair);
            auto* g = std::get_if<bfunc>(&r);
            return g && *g == wit.restriction && !post_member(*g, wit.post);
          }
          const auto* k = std::get_if<sigma_partition_kind>(&ci.kind);
          if (!k) return false;
          auto r = block_restriction(f, k->part, block_id{wit.block_free_positions});
          auto* g = std::get_if<bfunc>(&r);
          return g && *g == wit.restriction && !post_member(*g, wit.post);
        } else if constexpr (std::is_same_v<W, part_witness>) {
          if (static_cast<int>(wit.t1.size()) != f.arity() ||
              static_cast<int>(wit.t2.size()) != f.arity())
            return false;
          for (int j = 0; j < f.arity(); ++j)
            if (!wit.part.equivalent(wit.t1[j], wit.t2[j])) return false;
          return f(wit.t1) == wit.v1 && f(wit.t2) == wit.v2 &&
                 !wit.part.equivalent(wit.v1, wit.v2);
        } else if constexpr (std::is_same_v<W, linear_witness>) {
          member_result r = member_linear(f);
          return !r.ok && f(wit.at) == wit.got && wit.expected != wit.got;
        } else {  // square_witness
          std::array<val, 4> v;
          for (int t = 0; t < 4; ++t) {
            if (static_cast<int>(wit.tuples[t].size()) != f.arity()) return false;
            v[t] = f(wit.tuples[t]);
          }
          if (v != wit.values) return false;
          int t = wit.selected;
          val others[3];
          int o = 0;
          for (int u = 0; u < 4; ++u)
            if (u != t) others[o++] = v[u];
          return others[0] == others[1] && others[1] == others[2] && v[t] != others[0];
        }
      },
      w);
}

// --- fragments ---

inline std::vector<func> unary_fragment(cls id) {
  std::vector<func> out;
  for (std::uint64_t i = 0; i < 27; ++i) {
    func f = func::from_packed(1, i);
    if (member(f, id).ok) out.push_back(std::move(f));
  }
  return out;
}

inline constexpr int k_binary_tables = 19683;  // 3^9

inline std::bitset<k_binary_tables> binary_mask(cls id) {
  std::bitset<k_binary_tables> m;
  for (std::uint64_t i = 0; i < k_binary_tables; ++i)
    if (member(func::from_packed(2, i), id).ok) m.set(i);
  return m;
}

inline std::vector<func> binary_fragment(cls id) {
  std::vector<func> out;
  for (std::uint64_t i = 0; i < k_binary_tables; ++i) {
    func f = func::from_packed(2, i);
    if (member(f, id).ok) out.push_back(std::move(f));
  }
  return out;
}

// --- duality transport ---

// Precomputed table permutations: dual_index[p][i] is the packed index of
// dual(from_packed(arity, i), p).
inline const std::array<std::vector<std::uint32_t>, 6>& unary_dual_tables() {
  static const auto tabs = [] {
    std::array<std::vector<std::uint32_t>, 6> t;
    for (int p = 0; p < 6; ++p) {
      t[p].resize(27);
      for (std::uint32_t i = 0; i < 27; ++i)
        t[p][i] = static_cast<std::uint32_t>(
            dual(func::from_packed(1, i), perm::all()[p]).packed_index());
    }
    return t;
  }();
  return tabs;
}

inline const std::array<std::vector<std::uint32_t>, 6>& binary_dual_tables() {
  static const auto tabs = [] {
    std::array<std::vector<std::uint32_t>, 6> t;
    for (int p = 0; p < 6; ++p) {
      t[p].resize(k_binary_tables);
      for (std::uint32_t i = 0; i < k_binary_tables; ++i)
        t[p][i] = static_cast<std::uint32_t>(
            dual(func::from_packed(2, i), perm::all()[p]).packed_index());
    }
    return t;
  }();
  return tabs;
}

inline int perm_pos(const perm& p) {
  const auto& all = perm::all();
  for (int i = 0; i < 6; ++i)
    if (all[i] == p) return i;
  return -1;
}

// All (class, permutation) pairs with class = dual(id, permutation).
// Resolution is by transporting the unary and binary fragments and finding
// the registry class with identical fragments.
inline std::vector<std::pair<cls, perm>> duality_orbit(cls id) {
  static const auto masks = [] {
    std::array<std::pair<std::bitset<27>, std::bitset<k_binary_tables>>, k_class_count> m;
    for (cls c : all_classes()) {
      std::bitset<27> u;
      for (const func& f : unary_fragment(c)) u.set(f.packed_index());
      m[index_of(c)] = {u, binary_mask(c)};
    }
    return m;
  }();
  std::vector<std::pair<cls, perm>> out;
  const auto& [u0, b0] = masks[index_of(id)];
  for (int p = 0; p < 6; ++p) {
    std::bitset<27> u;
    std::bitset<k_binary_tables> b;
    for (int i = 0; i < 27; ++i)
      if (u0.test(i)) u.set(unary_dual_tables()[p][i]);
    for (int i = 0; i < k_binary_tables; ++i)
      if (b0.test(i)) b.set(binary_dual_tables()[p][i]);
    int found = -1;
    for (int c = 0; c < k_class_count; ++c)
      if (masks[c].first == u && masks[c].second == b) {
        found = c;
        break;
      }
    if (found >= 0) {
      cls target = static_cast<cls>(found);
      bool seen = false;
      for (auto& [c, _] : out)
        if (c == target) seen = true;
      if (!seen) out.emplace_back(target, perm::all()[p]);
    }
  }
  return out;
}

}  // namespace tern
