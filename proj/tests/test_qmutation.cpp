#include <doctest.h>

#include <random>

#include "cvq/feed.hpp"
#include "cvq/feed_io.hpp"
#include "cvq/qmutation.hpp"
#include "cvq/qtorus.hpp"

using namespace cvq;

static Feed random_feed(std::mt19937_64& rng, int n, int max_entry = 2, int max_d = 3) {
  std::uniform_int_distribution<int> dd(1, max_d), ds(-max_entry, max_entry);
  std::vector<std::int64_t> d(static_cast<size_t>(n));
  for (auto& v : d) v = dd(rng);
  std::vector<std::int64_t> eps(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::int64_t s = ds(rng);
      std::int64_t g = std::gcd(d[static_cast<size_t>(i)], d[static_cast<size_t>(j)]);
      eps[static_cast<size_t>(i) * n + j] = s * d[static_cast<size_t>(j)] / g;
      eps[static_cast<size_t>(j) * n + i] = -s * d[static_cast<size_t>(i)] / g;
    }
  return make_feed(n, std::move(eps), std::move(d));
}

static QTorusElement random_element(std::mt19937_64& rng, const SkewLattice& lat,
                                    int terms = 2) {
  std::uniform_int_distribution<std::int64_t> dv(-1, 1), dc(1, 3), de(-2, 2);
  QTorusElement out(lat);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::int64_t> v(static_cast<size_t>(lat.rank));
    for (auto& x : v) x = dv(rng);
    out = out + QTorusElement::monomial(lat, QLaurent::term(dc(rng), de(rng)), v);
  }
  return out;
}

TEST_CASE("monomial image table") {
  Feed a2 = load_seed("a2").feed;
  MonomialImages m = mutation_monomial_images(a2, 0);
  CHECK(m.w[0] == std::vector<std::int64_t>{-1, 0, 0, 0});
  CHECK(m.w[1] == std::vector<std::int64_t>{0, 1, 0, 0});
  CHECK(m.w[2] == std::vector<std::int64_t>{0, 0, -1, 0});
  CHECK(m.w[3] == std::vector<std::int64_t>{0, 0, 0, 1});
  CHECK(m.pre == std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK(images_preserve_pairings(m));

  Feed b2 = load_seed("b2").feed;
  MonomialImages mb = mutation_monomial_images(b2, 1);
  CHECK(mb.w[0] == std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(mb.w[1] == std::vector<std::int64_t>{1, -1, 0, 0});
  CHECK(mb.w[2] == std::vector<std::int64_t>{0, 0, 1, 2});
  CHECK(mb.w[3] == std::vector<std::int64_t>{0, 0, 0, -1});
  // The q-power in X'_0 -> q_1^-4 X_0 X_1^2 is exactly the normal-ordering
  // phase, so the Weyl image E(x_0 + 2 x_1) carries no prefactor.
  CHECK(mb.pre == std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK(images_preserve_pairings(mb));
}

TEST_CASE("monomial part on generators") {
  for (const char* name : {"a2", "b2", "g2", "markov"}) {
    Feed f = load_seed(name).feed;
    for (int k = 0; k < f.n; ++k) {
      Feed fp = mutate_feed(f, k);
      SkewLattice tgt = double_torus_lattice(f);
      std::vector<std::int64_t> mx(static_cast<size_t>(2 * f.n), 0);
      mx[static_cast<size_t>(f.n + k)] = -1;
      CHECK(quantum_mutation_monomial(f, k, quantum_x(fp, k)) ==
            QTorusElement::monomial(tgt, QLaurent(1), mx));
      std::vector<std::int64_t> mt(static_cast<size_t>(2 * f.n), 0);
      mt[static_cast<size_t>(f.n + k)] = -1;
      for (int j = 0; j < f.n; ++j) mt[static_cast<size_t>(j)] -= f.at(k, j);
      CHECK(quantum_mutation_monomial(f, k, quantum_tilde_x(fp, k)) ==
            QTorusElement::monomial(tgt, QLaurent(1), mt));
      for (int i = 0; i < f.n; ++i)
        if (i != k)
          CHECK(quantum_mutation_monomial(f, k, quantum_b(fp, i)) == quantum_b(f, i));
    }
  }

  Feed b2 = load_seed("b2").feed;
  SkewLattice lat = double_torus_lattice(b2);
  CHECK(quantum_mutation_monomial(b2, 1, quantum_x(mutate_feed(b2, 1), 0)) ==
        QTorusElement::monomial(lat, QLaurent(1), {0, 0, 1, 2}));
}

TEST_CASE("monomial part is an algebra map") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Feed f = random_feed(rng, 2 + trial % 3);
    int k = static_cast<int>(rng() % static_cast<unsigned>(f.n));
    MonomialImages m = mutation_monomial_images(f, k);
    CHECK(images_preserve_pairings(m));
    QTorusElement a = random_element(rng, m.src), b = random_element(rng, m.src);
    CHECK(apply_monomial_images(m, a * b) ==
          apply_monomial_images(m, a) * apply_monomial_images(m, b));
  }
}

TEST_CASE("automorphism part closed forms") {
  Feed a2 = load_seed("a2").feed;
  SkewLattice lat = double_torus_lattice(a2);

  // X_1 -> X_1 (1 + q X_0), which normal-orders to E(x_1) + E(x_0 + x_1).
  TwistedRationalElement t1 = quantum_mutation_twist(a2, 0, quantum_x(a2, 1));
  CHECK(t1.expanded() == QTorusElement::monomial(lat, QLaurent(1), {0, 0, 0, 1}) +
                             QTorusElement::monomial(lat, QLaurent(1), {0, 0, 1, 1}));

  // X_0 -> X_0 (1 + q^-1 X_1)^(-1) at the other direction.
  TwistedRationalElement t2 = quantum_mutation_twist(a2, 1, quantum_x(a2, 0));
  BinPowers denom;
  QTorusElement num = t2.cleared_numerator(&denom);
  CHECK(num == quantum_x(a2, 0));
  CHECK(denom == BinPowers{{BinKey{0, -1}, 1}});

  // B_0 -> B_0 (1 + q X_0)(1 + q X~_0)^(-1).
  TwistedRationalElement t3 = quantum_mutation_twist(a2, 0, quantum_b(a2, 0));
  BinPowers denom3;
  QTorusElement num3 = t3.cleared_numerator(&denom3);
  CHECK(num3 == QTorusElement::monomial(lat, QLaurent(1), {1, 0, 0, 0}) +
                    QTorusElement::monomial(lat, QLaurent(1), {1, 0, 1, 0}));
  CHECK(denom3 == BinPowers{{BinKey{1, 1}, 1}});
}

TEST_CASE("automorphism part fixed elements") {
  for (const char* name : {"a1xa1", "a2", "b2", "g2", "markov"}) {
    Feed f = load_seed(name).feed;
    for (int k = 0; k < f.n; ++k) {
      CHECK(quantum_mutation_twist(f, k, quantum_x(f, k)).expanded() == quantum_x(f, k));
      CHECK(quantum_mutation_twist(f, k, quantum_tilde_x(f, k)).expanded() ==
            quantum_tilde_x(f, k));
      for (int i = 0; i < f.n; ++i)
        if (i != k)
          CHECK(quantum_mutation_twist(f, k, quantum_b(f, i)).expanded() == quantum_b(f, i));
    }
  }
  Feed flat = load_seed("a1xa1").feed;
  CHECK(quantum_mutation_twist(flat, 0, quantum_x(flat, 1)).expanded() == quantum_x(flat, 1));
}

TEST_CASE("automorphism part is an algebra map") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 12; ++trial) {
    Feed f = random_feed(rng, 2 + trial % 2);
    int k = static_cast<int>(rng() % static_cast<unsigned>(f.n));
    SkewLattice lat = double_torus_lattice(f);
    QTorusElement a = random_element(rng, lat), b = random_element(rng, lat);
    TwistedRationalElement ta = quantum_mutation_twist(f, k, a);
    TwistedRationalElement tb = quantum_mutation_twist(f, k, b);
    CHECK(quantum_mutation_twist(f, k, a * b).equivalent(ta * tb));
    CHECK(quantum_mutation_twist(f, k, a + b).equivalent(ta + tb));
  }
}

TEST_CASE("localized element arithmetic") {
  std::mt19937_64 rng(23);
  Feed a2 = load_seed("a2").feed;
  TwistedRationalElement t = quantum_mutation_twist(a2, 0, quantum_x(a2, 1));
  CHECK(t.equivalent(TwistedRationalElement::from_torus(a2, 0, t.expanded())));
  CHECK(!t.equivalent(TwistedRationalElement::from_torus(a2, 0, quantum_x(a2, 1))));
  CHECK((t - t).is_zero());
  CHECK(t.scaled(QLaurent()).is_zero());

  for (int trial = 0; trial < 10; ++trial) {
    Feed f = random_feed(rng, 2);
    SkewLattice lat = double_torus_lattice(f);
    QTorusElement a = random_element(rng, lat), b = random_element(rng, lat);
    TwistedRationalElement fa = TwistedRationalElement::from_torus(f, 0, a);
    TwistedRationalElement fb = TwistedRationalElement::from_torus(f, 0, b);
    CHECK(fa.expanded() == a);
    CHECK((fa * fb).expanded() == a * b);
    CHECK((fa + fb).expanded() == a + b);
  }
}

TEST_CASE("round trip on builtin seeds") {
  for (const char* name : {"a2", "b2", "g2", "markov", "a2x3"}) {
    Feed f = load_seed(name).feed;
    for (int k = 0; k < f.n; ++k) {
      QuantumInvolutionReport rep = verify_quantum_involution(f, k);
      INFO(name << " k=" << k << ": " << rep.str());
      CHECK(rep.ok);
      CHECK(rep.generator_ok == std::vector<bool>(static_cast<size_t>(2 * f.n), true));
    }
  }
}

TEST_CASE("round trip on random seeds") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    Feed f = random_feed(rng, 2 + trial % 3);
    for (int k = 0; k < f.n; ++k) {
      QuantumInvolutionReport rep = verify_quantum_involution(f, k);
      INFO("trial " << trial << " k=" << k << ": " << rep.str());
      CHECK(rep.ok);
    }
  }
}
