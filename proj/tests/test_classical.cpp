#include <doctest.h>

#include <random>

#include "cvq/classical.hpp"
#include "cvq/feed_io.hpp"

using namespace cvq;

static Feed a2() { return make_feed(2, {0, 1, -1, 0}, {1, 1}); }

TEST_CASE("X mutation closed form") {
  PointState p{SeedKind::X, {Rational(2), Rational(3)}};
  PointState q = mutate_point(a2(), p, 0);
  CHECK(q.v[0] == Rational(1, 2));
  CHECK(q.v[1] == Rational(9));
  // Mutating back along the mutated feed restores the point.
  CHECK(mutate_point(mutate_feed(a2(), 0), q, 0) == p);
}

TEST_CASE("A mutation closed form") {
  PointState p{SeedKind::A, {Rational(5), Rational(7)}};
  PointState q = mutate_point(a2(), p, 0);
  CHECK(q.v[0] == Rational(8, 5));
  CHECK(q.v[1] == Rational(7));
  CHECK(mutate_point(mutate_feed(a2(), 0), q, 0) == p);
}

TEST_CASE("D mutation closed form") {
  PointState p{SeedKind::D, {Rational(2), Rational(3), Rational(5), Rational(7)}};
  PointState q = mutate_point(a2(), p, 0);
  CHECK(q.v[0] == Rational(4, 3));
  CHECK(q.v[1] == Rational(3));
  CHECK(q.v[2] == Rational(1, 5));
  CHECK(q.v[3] == Rational(42));
  CHECK(mutate_point(mutate_feed(a2(), 0), q, 0) == p);
}

TEST_CASE("mutation at a point is involutive for all kinds") {
  std::mt19937_64 rng(5);
  Seed seeds[] = {load_seed("markov"), load_seed("b2x3"), load_seed("g2x3")};
  for (const auto& s : seeds)
    for (int k = 0; k < s.feed.n; ++k)
      for (SeedKind kind : {SeedKind::A, SeedKind::X, SeedKind::D}) {
        PointState p = random_point(kind, s.feed.n, rng, 50);
        PointState q = mutate_point(s.feed, p, k);
        CHECK(mutate_point(mutate_feed(s.feed, k), q, k) == p);
      }
}

TEST_CASE("tilde coordinates mutate by the X rule") {
  std::mt19937_64 rng(9);
  Seed seeds[] = {load_seed("a2"), load_seed("b2"), load_seed("g2x3"), load_seed("markov")};
  for (const auto& s : seeds)
    for (int k = 0; k < s.feed.n; ++k) {
      PointState p = random_point(SeedKind::D, s.feed.n, rng, 50);
      std::vector<Rational> t = tilde_x(s.feed, p);
      PointState tp{SeedKind::X, t};
      PointState expected = mutate_point(s.feed, tp, k);
      std::vector<Rational> got = tilde_x(mutate_feed(s.feed, k), mutate_point(s.feed, p, k));
      CHECK(got == expected.v);
    }
}

TEST_CASE("p-map pullback commutes with mutation") {
  std::mt19937_64 rng(13);
  Seed seeds[] = {load_seed("a2"), load_seed("a2x3"), load_seed("markov")};
  for (const auto& s : seeds)
    for (int k = 0; k < s.feed.n; ++k) {
      PointState a = random_point(SeedKind::A, s.feed.n, rng, 50);
      PointState xa{SeedKind::X, p_pullback(s.feed, a)};
      PointState lhs = mutate_point(s.feed, xa, k);
      std::vector<Rational> rhs =
          p_pullback(mutate_feed(s.feed, k), mutate_point(s.feed, a, k));
      CHECK(lhs.v == rhs);
    }
}

TEST_CASE("word parsing round trip") {
  Word w = parse_word("m1 p(1 2) m2", 2);
  REQUIRE(w.size() == 3);
  CHECK(w[0].kind == WordStep::Mutate);
  CHECK(w[0].k == 0);
  CHECK(w[1].kind == WordStep::Permute);
  CHECK(w[1].sigma == std::vector<int>{1, 0});
  CHECK(word_to_string(w) == "m1 p(1 2) m2");
  Word cyc = parse_word("p(1 2 3)", 3);
  CHECK(cyc[0].sigma == std::vector<int>{1, 2, 0});
  CHECK_THROWS_AS(parse_word("m3", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("q7", 2), std::invalid_argument);
}

TEST_CASE("pentagon trajectory") {
  Word pair = parse_word("m1 p(1 2)", 2);
  Feed f = a2();
  PointState p{SeedKind::X, {Rational(2), Rational(3)}};
  TrajState t{f, p};
  std::vector<std::vector<Rational>> expect = {
      {Rational(9), Rational(1, 2)},
      {Rational(5), Rational(1, 9)},
      {Rational(2, 3), Rational(1, 5)},
      {Rational(1, 3), Rational(3, 2)},
      {Rational(2), Rational(3)},
  };
  for (const auto& want : expect) {
    t = apply_word(t.feed, t.pt, pair);
    CHECK(t.pt.v == want);
  }
  CHECK(t.feed == f);
}

TEST_CASE("trivial cycles for every finite rank-2 type and kind") {
  struct Case {
    const char* name;
    int i, j;
  } cases[] = {{"a1xa1", 0, 1}, {"a2", 0, 1}, {"b2", 0, 1}, {"g2", 0, 1},
               {"b2x3", 0, 1},  {"g2x3", 0, 1}};
  std::uint64_t seed = 1001;
  for (const auto& c : cases) {
    Feed f = load_seed(c.name).feed;
    Word w = h_plus_2_gon_word(f, c.i, c.j);
    auto t = rank2_classify(f, c.i, c.j);
    REQUIRE(t.has_value());
    CHECK(w.size() == 2 * static_cast<size_t>(rank2_coxeter_number(*t) + 2));
    for (SeedKind kind : {SeedKind::A, SeedKind::X, SeedKind::D})
      CHECK(verify_h_plus_2_gon(f, c.i, c.j, kind, 5, seed++));
  }
}

TEST_CASE("non-trivial words are rejected by sampling") {
  Feed f = a2();
  Word w = parse_word("m1 m2", 2);
  CHECK_FALSE(word_trivial_at_samples(f, w, SeedKind::X, 3, 42));
  // Weakly trivial (feed returns) but pointwise non-trivial.
  Word w4 = parse_word("m1 m2 m1 m2", 2);
  CHECK(apply_word_feed(f, w4) == f);
  CHECK_FALSE(word_trivial_at_samples(f, w4, SeedKind::X, 3, 42));
}
