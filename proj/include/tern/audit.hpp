#pragma once

#include <random>
#include <sstream>

#include "tern/closure.hpp"
#include "tern/criterion.hpp"
#include "tern/fixtures.hpp"

// Structural claim verification: constructive witness extraction, the
// bounded implicit-representation oracle, the Sigma/Pol matrix crosscheck,
// the composition corpus, and the aggregated suites behind `verify`.

namespace tern {

enum class report_status { verified, refuted, inapplicable };

struct oracle_report {
  std::string claim;
  report_status status;
  std::string evidence;

  bool ok() const { return status != report_status::refuted; }
};

// --- obstructions and unary witness extraction ---

struct set_obstruction {
  std::vector<val> elems;  // nonempty proper subset of E3
};

struct partition_obstruction {
  partition3 part;
};

// A partial order on E3 given by its <= relation.
struct order_obstruction {
  std::array<std::array<bool, 3>, 3> le;

  static order_obstruction linear(val bot, val mid, val top) {
    order_obstruction o{};
    std::array<val, 3> chain{bot, mid, top};
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) o.le[chain[i]][chain[j]] = true;
    return o;
  }

  // top above the two others, which are incomparable
  static order_obstruction topped(val top) {
    order_obstruction o{};
    for (val v = 0; v < 3; ++v) {
      o.le[v][v] = true;
      o.le[v][top] = true;
    }
    return o;
  }
};

struct linearity_obstruction {};

using obstruction = std::variant<set_obstruction, partition_obstruction,
                                 order_obstruction, linearity_obstruction>;

inline bool violates(const func& f, const set_obstruction& ob) {
  std::vector<val> elems = ob.elems;
  bool found = false;
  for_each_tuple(f.arity(), [&](std::span<const val> x) {
    if (found) return;
    for (val a : x)
      if (std::find(elems.begin(), elems.end(), a) == elems.end()) return;
    val v = f(x);
    if (std::find(elems.begin(), elems.end(), v) == elems.end()) found = true;
  });
  return found;
}

inline bool violates(const func& f, const partition_obstruction& ob) {
  return !preserves_partition(f, ob.part);
}

inline bool violates(const func& f, const order_obstruction& ob) {
  // single-coordinate monotonicity suffices for a partial order
  const int n = f.arity();
  bool bad = false;
  std::vector<val> x(n);
  for (int i = 0; i < n && !bad; ++i) {
    for_each_tuple(n, [&](std::span<const val> t) {
      if (bad) return;
      for (val a = 0; a < 3 && !bad; ++a)
        for (val b = 0; b < 3; ++b) {
          if (!ob.le[a][b]) continue;
          std::copy(t.begin(), t.end(), x.begin());
          x[i] = a;
          val va = f(x);
          x[i] = b;
          val vb = f(x);
          if (!ob.le[va][vb]) {
            bad = true;
            break;
          }
        }
    });
  }
  return bad;
}

inline bool violates(const func& f, const linearity_obstruction&) {
  return !member_linear(f).ok;
}

inline bool violates(const func& f, const obstruction& ob) {
  return std::visit([&](const auto& o) { return violates(f, o); }, ob);
}

// Every unary section of f: one variable plus constants. Patterns are
// enumerated with symbol order {x, 0, 1, 2} per position; for the set
// obstruction only constants from the set itself are substituted.
template <typename Visit>
void for_each_unary_section(const func& f, std::span<const val> allowed_consts,
                            Visit&& visit) {
  const int n = f.arity();
  const int radix = 1 + static_cast<int>(allowed_consts.size());
  std::vector<int> pat(n, 0);
  std::vector<val> args(n);
  for (;;) {
    bool has_x = std::find(pat.begin(), pat.end(), 0) != pat.end();
    if (has_x) {
      std::vector<val> table(3);
      for (val t = 0; t < 3; ++t) {
        for (int j = 0; j < n; ++j)
          args[j] = pat[j] == 0 ? t : allowed_consts[pat[j] - 1];
        table[t] = f(args);
      }
      if (visit(func(1, std::move(table)), std::span<const int>(pat))) return;
    }
    int i = n - 1;
    while (i >= 0 && pat[i] == radix - 1) pat[i--] = 0;
    if (i < 0) return;
    ++pat[i];
  }
}

// From a function violating the obstruction, produce a unary function (or
// constant) in its constant-substitution/identification closure violating
// the same obstruction.
inline func extract_unary_witness(const func& f, const obstruction& ob) {
  if (!violates(f, ob))
    throw error(errc::not_violating, "function satisfies the obstruction");
  if (const auto* so = std::get_if<set_obstruction>(&ob)) {
    // constants from the set only; the witness is the escaping constant
    std::optional<func> out;
    std::vector<val> elems = so->elems;
    for_each_tuple(f.arity(), [&](std::span<const val> x) {
      if (out) return;
      for (val a : x)
        if (std::find(elems.begin(), elems.end(), a) == elems.end()) return;
      val v = f(x);
      if (std::find(elems.begin(), elems.end(), v) == elems.end())
        out = func::constant(v);
    });
    if (!out)
      throw error(errc::search_exhausted, "no escaping constant found");
    return *out;
  }
  static const std::array<val, 3> all_consts{0, 1, 2};
  std::optional<func> out;
  for_each_unary_section(f, all_consts, [&](func g, std::span<const int>) {
    if (violates(g, ob)) {
      out = std::move(g);
      return true;
    }
    return false;
  });
  if (!out)
    throw error(errc::search_exhausted,
                "bounded search over unary sections found no witness");
  return *out;
}

// --- bounded implicit-representation oracle ---

struct equation_shape {
  int x_vars = 1;                      // only r = 1 is implemented
  std::optional<size_t> max_pairs{};   // budget on fragment pair count
};

struct implicit_result {
  bool expressible;
  // expressible: an irredundant equation system A_i(x,z) = B_i(x,z)
  std::vector<std::pair<func, func>> equations;
  // not expressible: points (x,z) outside the graph that no equation set
  // over the fragment can cut
  std::vector<std::pair<val, val>> slack;
};

inline implicit_result bounded_implicit_oracle(const func& target, cls id,
                                               const equation_shape& shape = {}) {
  if (target.arity() != 1)
    throw error(errc::bad_input, "oracle target must be unary");
  if (shape.x_vars != 1)
    throw error(errc::bad_input, "only one basic variable is supported");
  auto frag = binary_fragment(id);
  size_t pair_count = frag.size() * (frag.size() + 1) / 2;
  if (shape.max_pairs && pair_count > *shape.max_pairs)
    throw error(errc::fragment_too_large, "fragment pair budget exceeded");

  std::uint16_t graph = 0;
  for (val x = 0; x < 3; ++x) graph |= static_cast<std::uint16_t>(1u << (x * 3 + target({x})));

  // distinct solution relations containing the graph, with one witness
  // equation per relation
  std::array<int, 512> first_a;
  std::array<int, 512> first_b;
  first_a.fill(-1);
  first_b.fill(-1);
  std::vector<std::uint16_t> kept;
  std::uint16_t inter = 0x1FF;
  for (size_t i = 0; i < frag.size(); ++i)
    for (size_t j = i; j < frag.size(); ++j) {
      std::uint16_t rel = 0;
      for (val x = 0; x < 3; ++x)
        for (val z = 0; z < 3; ++z) {
          int p = x * 3 + z;
          if (frag[i].table_at(p) == frag[j].table_at(p)) rel |= 1u << p;
        }
      if ((rel & graph) != graph) continue;
      if (first_a[rel] < 0) {
        first_a[rel] = static_cast<int>(i);
        first_b[rel] = static_cast<int>(j);
        kept.push_back(rel);
        inter &= rel;
      }
    }

  if (inter != graph) {
    implicit_result r{false, {}, {}};
    std::uint16_t extra = inter & static_cast<std::uint16_t>(~graph);
    for (int p = 0; p < 9; ++p)
      if (extra & (1u << p)) r.slack.emplace_back(static_cast<val>(p / 3), static_cast<val>(p % 3));
    return r;
  }

  // greedy cover, then prune to an irredundant system
  std::vector<std::uint16_t> chosen;
  std::uint16_t cur = 0x1FF;
  while (cur != graph) {
    std::uint16_t best = 0;
    int best_count = 10;
    for (std::uint16_t rel : kept) {
      int c = std::popcount(static_cast<unsigned>(cur & rel & ~graph));
      if (c < best_count) {
        best_count = c;
        best = rel;
      }
    }
    chosen.push_back(best);
    cur &= best;
  }
  for (size_t i = 0; i < chosen.size();) {
    std::uint16_t without = 0x1FF;
    for (size_t j = 0; j < chosen.size(); ++j)
      if (j != i) without &= chosen[j];
    if (without == graph)
      chosen.erase(chosen.begin() + i);
    else
      ++i;
  }
  implicit_result r{true, {}, {}};
  for (std::uint16_t rel : chosen)
    r.equations.emplace_back(frag[first_a[rel]], frag[first_b[rel]]);
  return r;
}

// Replays an emitted equation system; true iff its solution set is exactly
// the graph of the target.
inline bool replay_implicit(const func& target,
                            std::span<const std::pair<func, func>> eqs) {
  for (val x = 0; x < 3; ++x)
    for (val z = 0; z < 3; ++z) {
      bool sat = true;
      for (const auto& [a, b] : eqs)
        if (a({x, z}) != b({x, z})) {
          sat = false;
          break;
        }
      if (sat != (target({x}) == z)) return false;
    }
  return !eqs.empty();
}

// --- Sigma/Pol matrix crosscheck ---

// Boolean defining matrices of K, D, L: the graphs of conjunction and
// disjunction, and the 4-ary parity relation.
inline std::optional<std::vector<std::vector<std::uint8_t>>> post_relation(post_id a) {
  switch (a) {
    case post_id::K:
      return std::vector<std::vector<std::uint8_t>>{
          {0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};
    case post_id::D:
      return std::vector<std::vector<std::uint8_t>>{
          {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
    case post_id::L: {
      std::vector<std::vector<std::uint8_t>> cols;
      for (int m = 0; m < 16; ++m) {
        std::uint8_t x = (m >> 3) & 1, y = (m >> 2) & 1, z = (m >> 1) & 1, t = m & 1;
        if ((x ^ y ^ z ^ t) == 0) cols.push_back({x, y, z, t});
      }
      return cols;
    }
    default:
      return std::nullopt;
  }
}

// Does the Boolean matrix contain two rows whose restricted column set
// includes {(0,1),(1,1)} or {(0,0),(0,1)}?
inline bool has_umatrix_submatrix(const std::vector<std::vector<std::uint8_t>>& cols) {
  if (cols.empty()) return false;
  int rows = static_cast<int>(cols[0].size());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) {
      if (i == j) continue;
      bool c01 = false, c11 = false, c00 = false;
      for (const auto& c : cols) {
        if (c[i] == 0 && c[j] == 1) c01 = true;
        if (c[i] == 1 && c[j] == 1) c11 = true;
        if (c[i] == 0 && c[j] == 0) c00 = true;
      }
      if ((c01 && c11) || (c00 && c01)) return true;
    }
  return false;
}

// Asserts Pol(A') = Sigma^{partition}_A where A' is the class's Boolean
// relation mapped through theta plus the all-c column; exhaustive for
// arities 1 and 2 plus 1000 seeded ternary samples.
inline oracle_report umatrix_crosscheck(post_id a, const partition3& part) {
  std::string claim = "umatrix/" + std::string(post_name(a)) + "/" + part.str();
  auto rel = post_relation(a);
  if (!rel || !has_umatrix_submatrix(*rel))
    return {claim, report_status::inapplicable,
            "defining relation lacks the required 2x2 submatrix"};
  int rows = static_cast<int>((*rel)[0].size());
  std::vector<std::vector<val>> cols;
  for (const auto& c : *rel) {
    std::vector<val> col(rows);
    for (int r = 0; r < rows; ++r) col[r] = theta(part.pair, c[r]);
    cols.push_back(std::move(col));
  }
  cols.push_back(std::vector<val>(rows, part.single));
  matrix ap(rows, std::move(cols));

  sigma_partition_kind sp{part, a};
  auto agree = [&](const func& f) {
    return preserves(f, ap).ok == member_sigma_partition(f, sp).ok;
  };
  size_t checked = 0;
  for (std::uint64_t i = 0; i < 27; ++i, ++checked)
    if (!agree(func::from_packed(1, i)))
      return {claim, report_status::refuted,
              "unary disagreement at " + func::from_packed(1, i).str()};
  for (std::uint64_t i = 0; i < k_binary_tables; ++i, ++checked)
    if (!agree(func::from_packed(2, i)))
      return {claim, report_status::refuted,
              "binary disagreement at " + func::from_packed(2, i).str()};
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(0, 2);
  for (int s = 0; s < 1000; ++s, ++checked) {
    std::vector<val> t(27);
    for (val& v : t) v = static_cast<val>(d(rng));
    if (!agree(func(3, std::move(t))))
      return {claim, report_status::refuted, "ternary disagreement (sample)"};
  }
  return {claim, report_status::verified,
          std::to_string(checked) + " functions compared"};
}

// --- composition corpus ---

// Identities transcribed from the escape analyses of the named classes.
// outer/inner are unary unless args is nonempty, in which case the entry
// is a superposition with the listed argument functions.
struct corpus_item {
  std::string id;
  std::string outer;
  std::vector<std::string> args;
  std::string expected;
};

inline const std::vector<corpus_item>& composition_corpus() {
  static const std::vector<corpus_item> items = {
      {"Fp2/b.1", "020", {"112"}, "220"},
      {"Fp2/b.2", "200", {"002"}, "220"},
      {"Fp2/b.3", "102", {"221"}, "220"},
      {"Fp2/v.1", "002", {"021"}, "020"},
      {"Fp2/v.2", "002", {"201"}, "200"},
      {"Fp2/g.1", "002002222", {"022", "022"}, "022222222"},
      {"Fp2/d.1", "102", {"122"}, "022"},
      {"Fp2/d.2", "202", {"102"}, "022"},
      {"Fp2/d.3", "102", {"212"}, "202"},
      {"Fp2/zh.1", "102", {"110"}, "001"},
      {"Fp2/zh.2", "010", {"112"}, "110"},
      {"Fp2/zh.3", "011", {"002"}, "001"},
      {"Fp2/z.1", "102", {"100"}, "011"},
      {"Fp2/z.2", "102", {"101"}, "010"},
      {"W1/and.1", "000011011", {"010", "010"}, "000010000"},
      {"Y2/b.1", "112112222", {"111111112", "112111111"}, "112111112"},
      {"T0part/esc.1", "220", {"020"}, "202"},
      {"T0part/esc.2", "022", {"010"}, "020"},
      {"T0part/esc.3", "200", {"200"}, "022"},
      {"N/kvazi.1", "022", {"110"}, "220"},
      {"N/kvazi.2", "220", {"220"}, "002"},
      {"N/slu5.1", "002", {"122"}, "022"},
      {"N/slu5.2", "001", {"022"}, "011"},
      {"KD/or.1", "012112222", {"001", "010"}, "011"},
  };
  return items;
}

// h(x,2) identity used in the Y2 escape analysis.
inline bool corpus_substitution_holds() {
  return substitute_constant(func::parse("002002000"), 1, 2) == func::parse("220");
}

inline std::vector<oracle_report> run_corpus() {
  std::vector<oracle_report> out;
  for (const auto& it : composition_corpus()) {
    func outer = func::parse(it.outer);
    std::vector<func> args;
    for (const auto& a : it.args) args.push_back(func::parse(a));
    func got = superpose(outer, args);
    func want = func::parse(it.expected);
    out.push_back({"corpus/" + it.id,
                   got == want ? report_status::verified : report_status::refuted,
                   got == want ? "" : "got " + got.str()});
  }
  bool sub = corpus_substitution_holds();
  out.push_back({"corpus/Y2/a.1", sub ? report_status::verified : report_status::refuted,
                 sub ? "" : "h(x,2) mismatch"});
  return out;
}

// --- escape closures: class fragment + one escaping function reaches a
// complete generating system (or a dual of one) ---

struct escape_instance {
  std::string id;
  cls from;
  std::vector<std::string> class_binaries;  // members of the class used as generators
  std::string escape;                       // the added function
  std::vector<std::string> target;          // must land in the closure
};

inline const std::vector<escape_instance>& escape_instances() {
  static const std::vector<escape_instance> xs = {
      {"Fp2+220->S5", cls::Fp2, {"002012222", "012112222"}, "220",
       {"002012222", "012112222", "220", "000", "111", "222"}},
      {"Fp2+001->S3", cls::Fp2, {"002012222", "012112222"}, "001",
       {"002012222", "012112222", "001", "000", "111"}},
      {"Fp2+022->dualS1", cls::Fp2, {"002002222"}, "022",
       {"022222222", "000000002", "000", "222"}},
      {"Y2+222->S5", cls::Y2, {"002002000", "002012222", "012112222"}, "222",
       {"002012222", "012112222", "220", "000", "111", "222"}},
      {"W1+010->S1", cls::W1, {"000011011", "011111111"}, "010",
       {"000010000", "011111111", "000", "111"}},
      {"W1+001->S2", cls::W1, {"000011011", "011111111"}, "001",
       {"000011011", "011111111", "001", "000", "111"}},
      {"SigT0+202->dualS2", cls::Sigma_01x2_T0, {"002002222", "000000002"}, "202",
       {"002002222", "000000002", "000", "202"}},
  };
  return xs;
}

inline oracle_report run_escape_instance(const escape_instance& inst) {
  std::vector<func> gens;
  for (const func& u : unary_fragment(inst.from)) gens.push_back(u);
  for (const auto& b : inst.class_binaries) {
    func f = func::parse(b);
    if (!member(f, inst.from).ok)
      return {"escape/" + inst.id, report_status::refuted,
              "generator " + b + " is not in " + info(inst.from).name};
    gens.push_back(std::move(f));
  }
  gens.push_back(func::parse(inst.escape));
  auto frag1 = closure_fragment(gens, 1);
  auto frag2 = closure_fragment(gens, 2);
  for (const auto& t : inst.target) {
    func want = func::parse(t);
    const auto& frag = want.arity() == 1 ? frag1 : frag2;
    if (!std::binary_search(frag.begin(), frag.end(), want))
      return {"escape/" + inst.id, report_status::refuted, "missing " + t};
  }
  return {"escape/" + inst.id, report_status::verified,
          "all " + std::to_string(inst.target.size()) + " targets reached"};
}

// --- aggregated suites ---

inline std::vector<oracle_report> suite_identity_membership() {
  std::vector<oracle_report> out;
  bool ok = true;
  std::string bad;
  for (cls c : all_classes())
    if (!member(func::identity(), c).ok) {
      ok = false;
      bad = info(c).name;
    }
  out.push_back({"identity_membership", ok ? report_status::verified : report_status::refuted,
                 ok ? "identity lies in all 54 classes" : "missing from " + bad});
  return out;
}

inline std::vector<oracle_report> suite_unary_lists() {
  struct expect {
    cls c;
    std::vector<std::string> fns;
  };
  static const std::vector<expect> table = {
      {cls::Fp2, {"000", "002", "012", "102", "111", "112", "222"}},
      {cls::W1, {"000", "011", "012", "100", "111", "112", "221", "222"}},
      {cls::Y2, {"000", "002", "012", "102", "111", "112"}},
      {cls::Sigma_01x2_T0, {"000", "002", "010", "012", "220", "222"}},
  };
  std::vector<oracle_report> out;
  for (const auto& e : table) {
    std::vector<std::string> got;
    for (const func& f : unary_fragment(e.c)) got.push_back(f.str());
    auto want = e.fns;
    std::sort(want.begin(), want.end());
    bool ok = got == want;
    std::string ev;
    if (!ok) {
      ev = "got:";
      for (auto& s : got) ev += " " + s;
    }
    out.push_back({"unary_list/" + info(e.c).name,
                   ok ? report_status::verified : report_status::refuted, ev});
  }
  return out;
}

inline const std::vector<cls>& weak_class_list() {
  static const std::vector<cls> ws = {
      cls::W0, cls::W1, cls::W2,
      cls::Sigma_01x2_L, cls::Sigma_01x2_K, cls::Sigma_01x2_D,
      cls::Sigma_02x1_L, cls::Sigma_02x1_K, cls::Sigma_02x1_D,
      cls::Sigma_12x0_L, cls::Sigma_12x0_K, cls::Sigma_12x0_D,
      cls::KM1, cls::DM1, cls::KM2, cls::DM2, cls::KM3, cls::DM3,
      cls::Rp0, cls::Rp1, cls::Rp2, cls::Qp0, cls::Qp1, cls::Qp2,
      cls::Fp0, cls::Fp1, cls::Fp2, cls::N,
  };
  return ws;
}

inline std::vector<oracle_report> suite_weak28() {
  std::vector<cls> got;
  for (cls c : all_classes())
    if (info(c).all_constants) got.push_back(c);
  std::vector<cls> want = weak_class_list();
  std::sort(want.begin(), want.end(),
            [](cls a, cls b) { return index_of(a) < index_of(b); });
  bool ok = got == want && got.size() == 28;
  std::string ev;
  if (!ok)
    for (cls c : got) ev += info(c).name + " ";
  return {{"weak_28", ok ? report_status::verified : report_status::refuted,
           ok ? "28 constant-containing classes match" : ev}};
}

inline std::vector<oracle_report> suite_fixtures() {
  std::vector<oracle_report> out;
  for (const system& s : fixtures::orekhova_systems()) {
    auto v = check_implicit_completeness(s);
    bool ok = v.status == verdict_status::complete && revalidate(v, s);
    out.push_back({"complete/" + s.name,
                   ok ? report_status::verified : report_status::refuted,
                   ok ? "" : "expected a certified complete verdict"});
  }
  {
    system w("Webb", {fixtures::webb()});
    auto v = check_implicit_completeness(w);
    bool ok = v.status == verdict_status::complete && revalidate(v, w);
    out.push_back({"complete/Webb", ok ? report_status::verified : report_status::refuted, ""});
  }
  {
    system sh("shift", {fixtures::shift()});
    auto v = check_implicit_completeness(sh);
    bool in_s = std::find(v.containing.begin(), v.containing.end(), cls::S) !=
                v.containing.end();
    bool in_l = std::find(v.containing.begin(), v.containing.end(), cls::L) !=
                v.containing.end();
    bool ok = v.status == verdict_status::incomplete && in_s && in_l && revalidate(v, sh);
    out.push_back({"incomplete/shift", ok ? report_status::verified : report_status::refuted,
                   ok ? "contained in S and L" : "unexpected verdict"});
  }
  {
    system id("identity", {func::identity()});
    auto v = check_implicit_completeness(id);
    bool ok = v.status == verdict_status::incomplete &&
              v.containing.size() == k_class_count && revalidate(v, id);
    out.push_back({"incomplete/identity",
                   ok ? report_status::verified : report_status::refuted,
                   ok ? "contained in every class" : "unexpected verdict"});
  }
  return out;
}

inline std::vector<oracle_report> suite_kernels() {
  std::vector<oracle_report> out;
  {
    auto frag = unary_fragment(cls::W1);
    bool ok = true;
    for (const func& f : frag)
      for (const func& g : frag)
        if (f.table_at(0) == g.table_at(0) && f.table_at(2) == g.table_at(2) &&
            f.table_at(1) != g.table_at(1))
          ok = false;
    out.push_back({"kernel/W1-no-pair-differing-at-1",
                   ok ? report_status::verified : report_status::refuted, ""});
  }
  {
    auto frag = unary_fragment(cls::Fp2);
    bool ok = true;
    for (const func& f : frag)
      for (const func& g : frag)
        if (f.table_at(0) == g.table_at(0) && f.table_at(2) != g.table_at(2) &&
            f.table_at(2) != 2 && g.table_at(2) != 2)
          ok = false;
    out.push_back({"kernel/Fp2-pair-value2",
                   ok ? report_status::verified : report_status::refuted, ""});
  }
  {
    auto frag = binary_fragment(cls::Y2);
    std::map<std::array<val, 3>, val> bucket;
    bool ok = true;
    for (const func& f : frag) {
      std::array<val, 3> key{f({0, 0}), f({1, 1}), f({2, 0})};
      val h = f({2, 1});
      auto [it, fresh] = bucket.emplace(key, h);
      if (!fresh && it->second != h) ok = false;
    }
    out.push_back({"kernel/Y2-bucket-21",
                   ok ? report_status::verified : report_status::refuted,
                   std::to_string(frag.size()) + " binary members, " +
                       std::to_string(bucket.size()) + " buckets"});
  }
  return out;
}

inline std::vector<oracle_report> suite_implicit() {
  struct probe {
    std::string fn;
    cls c;
    bool expressible;
  };
  static const std::vector<probe> probes = {
      {"202", cls::Fp2, false},
      {"002", cls::W1, false},
      {"010", cls::Y2, false},
      {"012", cls::Fp2, true},
      {"012", cls::W1, true},
      {"012", cls::Y2, true},
  };
  std::vector<oracle_report> out;
  for (const auto& p : probes) {
    auto r = bounded_implicit_oracle(func::parse(p.fn), p.c);
    bool ok = r.expressible == p.expressible;
    std::string ev;
    if (r.expressible) {
      ok = ok && replay_implicit(func::parse(p.fn), r.equations);
      ev = std::to_string(r.equations.size()) + " equations";
    } else {
      ev = "not expressible within shape r=1; slack points:";
      for (auto [x, z] : r.slack)
        ev += " (" + std::to_string(int(x)) + "," + std::to_string(int(z)) + ")";
    }
    out.push_back({"implicit/" + p.fn + "/" + info(p.c).name,
                   ok ? report_status::verified : report_status::refuted, ev});
  }
  return out;
}

inline std::vector<oracle_report> suite_umatrix() {
  std::vector<oracle_report> out;
  for (post_id a : {post_id::K, post_id::D, post_id::L, post_id::T0, post_id::T1})
    for (const partition3& p : partition3::all()) out.push_back(umatrix_crosscheck(a, p));
  return out;
}

inline std::vector<oracle_report> suite_escapes() {
  std::vector<oracle_report> out;
  for (const auto& inst : escape_instances()) out.push_back(run_escape_instance(inst));
  return out;
}

inline std::vector<oracle_report> suite_nonlin() {
  auto frag = closure_fragment({func::parse("120"), func::parse("001")}, 1);
  int nonsurj = 0;
  bool ok = true;
  for (std::uint64_t i = 0; i < 27; ++i) {
    func f = func::from_packed(1, i);
    bool seen[3] = {false, false, false};
    for (val x = 0; x < 3; ++x) seen[f({x})] = true;
    if (seen[0] && seen[1] && seen[2]) continue;
    ++nonsurj;
    if (!std::binary_search(frag.begin(), frag.end(), f)) ok = false;
  }
  return {{"nonlin_closure", ok && nonsurj == 21 ? report_status::verified
                                                 : report_status::refuted,
           std::to_string(nonsurj) + " non-surjective unary functions, fragment size " +
               std::to_string(frag.size())}};
}

inline std::vector<oracle_report> suite_pol_base() {
  auto monoids = enumerate_unary_monoids();
  bool ok = true;
  std::string bad;
  for (const monoid& m : monoids) {
    std::vector<std::vector<val>> cols;
    for (const func& f : m.members())
      cols.push_back({f.table_at(0), f.table_at(1), f.table_at(2)});
    matrix af(3, std::move(cols));
    std::uint32_t frag = 0;
    for (std::uint64_t i = 0; i < 27; ++i)
      if (preserves(func::from_packed(1, i), af).ok) frag |= 1u << i;
    if (frag != m.mask) {
      ok = false;
      bad = std::to_string(m.mask);
      break;
    }
  }
  return {{"pol_base", ok ? report_status::verified : report_status::refuted,
           ok ? std::to_string(monoids.size()) + " monoids checked" : "mask " + bad}};
}

inline std::vector<oracle_report> suite_monoid_bases() {
  std::vector<oracle_report> out;
  struct group {
    std::vector<fixtures::base_family> fams;
    std::vector<val> required;
    std::vector<val> forbidden;
  };
  std::vector<group> groups = {
      {fixtures::bases_no_constants(), {}, {0, 1, 2}},
      {fixtures::bases_two_constants(), {0, 1}, {2}},
      {fixtures::bases_three_constants(), {0, 1, 2}, {}},
  };
  for (const auto& g : groups) {
    auto monoids = enumerate_unary_monoids({g.required, g.forbidden});
    std::set<std::uint32_t> masks;
    for (const monoid& m : monoids) masks.insert(m.mask);
    for (const auto& fam : g.fams) {
      std::uint32_t seed = 1u << k_identity_code;
      for (val c : g.required) seed |= 1u << constant_code(c);
      for (const auto& s : fam.fns) seed |= 1u << unary_code(func::parse(s));
      std::uint32_t closed = monoid_close(seed);
      bool self_closed = !fam.is_base || closed == seed;
      bool appears = masks.count(closed) > 0;
      bool ok = self_closed && appears;
      std::string ev;
      if (!self_closed) ev = "displayed list is not composition-closed";
      else if (!appears) ev = "closure missing from enumeration";
      out.push_back({"base/" + fam.name,
                     ok ? report_status::verified : report_status::refuted, ev});
    }
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "identity_membership", "unary_lists", "weak_28", "fixtures", "kernels",
      "corpus", "implicit", "umatrix", "escapes", "nonlin", "pol_base",
      "monoid_bases"};
  return names;
}

inline std::vector<oracle_report> run_suite(std::string_view selection = "all") {
  std::vector<oracle_report> out;
  auto append = [&](std::vector<oracle_report> v) {
    out.insert(out.end(), std::make_move_iterator(v.begin()),
               std::make_move_iterator(v.end()));
  };
  auto want = [&](std::string_view name) {
    return selection == "all" || selection == name;
  };
  if (want("identity_membership")) append(suite_identity_membership());
  if (want("unary_lists")) append(suite_unary_lists());
  if (want("weak_28")) append(suite_weak28());
  if (want("fixtures")) append(suite_fixtures());
  if (want("kernels")) append(suite_kernels());
  if (want("corpus")) append(run_corpus());
  if (want("implicit")) append(suite_implicit());
  if (want("umatrix")) append(suite_umatrix());
  if (want("escapes")) append(suite_escapes());
  if (want("nonlin")) append(suite_nonlin());
  if (want("pol_base")) append(suite_pol_base());
  if (want("monoid_bases")) append(suite_monoid_bases());
  if (out.empty())
    throw error(errc::unknown_id, "unknown suite: " + std::string(selection));
  return out;
}

}  // namespace tern
