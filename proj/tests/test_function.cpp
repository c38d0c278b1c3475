#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tern/function.hpp"

using namespace tern;

namespace {

func random_func(std::mt19937& rng, int arity) {
  std::uniform_int_distribution<int> d(0, 2);
  std::vector<val> t(pow3(arity));
  for (val& v : t) v = static_cast<val>(d(rng));
  return func(arity, std::move(t));
}

// independent recomputation: evaluate through explicit digit decomposition
val eval_by_digits(const func& f, std::span<const val> args) {
  std::int64_t idx = 0;
  for (int j = 0; j < f.arity(); ++j) idx += args[j] * pow3(f.arity() - 1 - j);
  return f.table_at(idx);
}

}  // namespace

TEST_CASE("parse_literal") {
  CHECK(func::parse("012") == func::identity());
  CHECK(func::parse("012").arity() == 1);

  func min01 = func::parse("002012222");
  CHECK(min01.arity() == 2);
  CHECK(min01({0, 0}) == 0);
  CHECK(min01({1, 1}) == 1);
  CHECK(min01({2, 0}) == 2);

  CHECK_THROWS_AS(func::parse("01"), error);
  CHECK_THROWS_AS(func::parse("0123"), error);
  CHECK_THROWS_AS(func::parse("013"), error);
  CHECK_THROWS_AS(func::parse(""), error);

  // round trip
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    func f = random_func(rng, 1 + i % 3);
    CHECK(func::parse(f.str()) == f);
  }
}

TEST_CASE("evaluate") {
  CHECK(func::parse("012")({2}) == 2);
  CHECK(func::parse("002012222")({1, 1}) == 1);
  CHECK(func::parse("220")({2}) == 0);
  CHECK_THROWS_AS(func::parse("012")({1, 2}), error);

  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    func f = random_func(rng, 2);
    for_each_tuple(2, [&](std::span<const val> x) { CHECK(f(x) == eval_by_digits(f, x)); });
  }
}

TEST_CASE("superpose basics") {
  // identity-preserving composition from the W1 escape analysis
  func f = func::parse("000011011");
  func u = func::parse("010");
  func lift1 = minor(u, {0}, 2);
  func lift2 = minor(u, {1}, 2);
  CHECK(superpose(f, {lift1, lift2}) == func::parse("000010000"));

  CHECK(superpose(func::parse("010"), {func::parse("112")}) == func::parse("110"));

  CHECK_THROWS_AS(superpose(f, {u}), error);
}

TEST_CASE("superpose with projections is neutral") {
  std::mt19937 rng(23);
  for (int arity = 1; arity <= 4; ++arity) {
    int samples = arity <= 2 ? 200 : 50;
    for (int i = 0; i < samples; ++i) {
      func f = random_func(rng, arity);
      std::vector<func> projs;
      for (int j = 0; j < arity; ++j) projs.push_back(func::projection(arity, j));
      CHECK(superpose(f, projs) == f);
    }
  }
}

TEST_CASE("minor") {
  func mx = func::parse("012112222");
  CHECK(minor(mx, {0, 0}, 1) == func::parse("012"));
  CHECK(minor(func::parse("012"), {1}, 2) == func::parse("012012012"));
  CHECK(minor(mx, {1, 0}, 2) == mx);  // max is symmetric

  // non-symmetric swap, recomputed directly
  func f = func::parse("002012222");
  func swapped = minor(f, {1, 0}, 2);
  for_each_tuple(2, [&](std::span<const val> x) {
    CHECK(swapped(x) == f({x[1], x[0]}));
  });

  CHECK_THROWS_AS(minor(mx, {0, 2}, 2), error);
}

TEST_CASE("minor composition coherence") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dm(1, 3);
  for (int i = 0; i < 100; ++i) {
    func f = random_func(rng, 2);
    int m = dm(rng);
    std::uniform_int_distribution<int> di(0, m - 1);
    std::vector<int> a = {di(rng), di(rng)};
    int p = dm(rng);
    std::uniform_int_distribution<int> dj(0, p - 1);
    std::vector<int> b;
    for (int j = 0; j < m; ++j) b.push_back(dj(rng));
    std::vector<int> ba;
    for (int idx : a) ba.push_back(b[idx]);
    CHECK(minor(minor(f, a, m), b, p) == minor(f, ba, p));
  }
}

TEST_CASE("substitute_constant") {
  CHECK(substitute_constant(func::parse("002002000"), 1, 2) == func::parse("220"));
  CHECK(substitute_constant(func::parse("012112222"), 0, 0) == func::parse("012"));
  // x + y at x = 1
  CHECK(substitute_constant(func::parse("012120201"), 0, 1) == func::parse("120"));
  CHECK_THROWS_AS(substitute_constant(func::parse("012"), 0, 1), error);
  CHECK_THROWS_AS(substitute_constant(func::parse("012012012"), 2, 1), error);
}

TEST_CASE("substitute commutes with superpose") {
  std::mt19937 rng(37);
  for (int i = 0; i < 50; ++i) {
    func f = random_func(rng, 2);
    func g1 = random_func(rng, 2), g2 = random_func(rng, 2);
    std::uniform_int_distribution<int> dp(0, 1);
    int pos = dp(rng);
    std::uniform_int_distribution<int> dc(0, 2);
    val c = static_cast<val>(dc(rng));
    func lhs = substitute_constant(superpose(f, {g1, g2}), pos, c);
    func rhs = superpose(f, {substitute_constant(g1, pos, c),
                             substitute_constant(g2, pos, c)});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("dual transform") {
  CHECK(dual(func::parse("011111111"), perm::transposition(1, 2)) ==
        func::parse("022222222"));
  func f = func::parse("021120210");
  CHECK(dual(f, perm::identity()) == f);
  CHECK(dual(func::parse("120"), perm{{1, 2, 0}}) == func::parse("120"));
}

TEST_CASE("dual involution") {
  std::mt19937 rng(41);
  for (const perm& p : perm::all()) {
    for (std::uint64_t i = 0; i < 27; ++i) {
      func f = func::from_packed(1, i);
      CHECK(dual(dual(f, p), p.inverse()) == f);
    }
    for (int i = 0; i < 100; ++i) {
      func f = random_func(rng, 2);
      CHECK(dual(dual(f, p), p.inverse()) == f);
    }
  }
}

TEST_CASE("essential_variables") {
  CHECK(essential_variables(func::parse("012012012")) == std::vector<int>{1});
  CHECK(essential_variables(func::parse("000000000")).empty());
  CHECK(essential_variables(func::parse("012112222")) == std::vector<int>({0, 1}));

  // brute-force oracle: scan all pairs differing at a single coordinate
  std::mt19937 rng(43);
  for (int i = 0; i < 30; ++i) {
    func f = random_func(rng, 3);
    std::vector<int> expect;
    for (int v = 0; v < 3; ++v) {
      bool dep = false;
      for_each_tuple(3, [&](std::span<const val> x) {
        std::vector<val> y(x.begin(), x.end());
        for (val a = 0; a < 3; ++a) {
          y[v] = a;
          if (f(y) != f(x)) dep = true;
        }
      });
      if (dep) expect.push_back(v);
    }
    CHECK(essential_variables(f) == expect);
  }
}

TEST_CASE("system rejects duplicates and empties") {
  CHECK_THROWS_AS(tern::system("bad", {}), error);
  CHECK_THROWS_AS(tern::system("dup", {func::identity(), func::identity()}), error);
  CHECK_NOTHROW(tern::system("ok", {func::identity(), func::parse("120")}));
}

TEST_CASE("permutations") {
  CHECK(perm::all().size() == 6);
  CHECK(perm::parse("102") == perm::transposition(0, 1));
  CHECK_THROWS_AS(perm::parse("112"), error);
  for (const perm& p : perm::all()) {
    CHECK(compose(p, p.inverse()) == perm::identity());
  }
}

TEST_CASE("arity cap") {
  int saved = arity_cap();
  arity_cap() = 2;
  CHECK_THROWS_AS(require_cap(3), error);
  CHECK_NOTHROW(require_cap(2));
  arity_cap() = saved;
}
