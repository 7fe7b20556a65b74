#include "cvq/feed.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace cvq {

Rational pow_rational(const Rational& base, std::int64_t e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw std::domain_error("pow_rational: zero base, negative exponent");
  Rational b = e > 0 ? base : Rational(1) / base;
  std::int64_t m = e > 0 ? e : -e;
  Rational acc(1);
  while (m > 0) {
    if (m & 1) acc *= b;
    b *= b;
    m >>= 1;
  }
  return acc;
}

std::int64_t Feed::lcm_d() const {
  std::int64_t l = 1;
  for (auto v : d) l = std::lcm(l, v);
  return l;
}

bool check_skew_symmetrizable(int n, const std::vector<std::int64_t>& eps,
                              const std::vector<std::int64_t>& d) {
  if (n <= 0) return false;
  if (eps.size() != static_cast<size_t>(n) * n || d.size() != static_cast<size_t>(n)) return false;
  for (auto v : d)
    if (v < 1) return false;
  for (int i = 0; i < n; ++i) {
    if (eps[static_cast<size_t>(i) * n + i] != 0) return false;
    for (int j = 0; j < n; ++j) {
      // eps_ij / d_j == -eps_ji / d_i, cross-multiplied to stay in integers.
      std::int64_t lhs = eps[static_cast<size_t>(i) * n + j] * d[static_cast<size_t>(i)];
      std::int64_t rhs = -eps[static_cast<size_t>(j) * n + i] * d[static_cast<size_t>(j)];
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Feed make_feed(int n, std::vector<std::int64_t> eps, std::vector<std::int64_t> d) {
  if (!check_skew_symmetrizable(n, eps, d))
    throw std::invalid_argument("make_feed: data is not skew-symmetrizable");
  return Feed{n, std::move(eps), std::move(d)};
}

std::vector<std::string> default_labels(int n, SeedKind kind) {
  std::vector<std::string> out;
  auto push = [&](const char* prefix) {
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  };
  switch (kind) {
    case SeedKind::A: push("A"); break;
    case SeedKind::X: push("X"); break;
    case SeedKind::D:
      push("B");
      push("X");
      break;
  }
  return out;
}

Seed make_seed(Feed feed, SeedKind kind, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(feed.n, kind);
  size_t want = kind == SeedKind::D ? 2 * static_cast<size_t>(feed.n) : static_cast<size_t>(feed.n);
  if (labels.size() != want) throw std::invalid_argument("make_seed: wrong label count");
  return Seed{std::move(feed), kind, std::move(labels)};
}

std::vector<std::int64_t> mutate_matrix(int n, const std::vector<std::int64_t>& eps, int k) {
  std::vector<std::int64_t> out(eps.size());
  auto at = [&](int i, int j) { return eps[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t v;
      if (i == k || j == k) {
        v = -at(i, j);
      } else {
        std::int64_t cross = std::abs(at(i, k)) * at(k, j) + at(i, k) * std::abs(at(k, j));
        v = at(i, j) + cross / 2;
      }
      out[static_cast<size_t>(i) * n + j] = v;
    }
  return out;
}

Feed mutate_feed(const Feed& f, int k) {
  if (k < 0 || k >= f.n) throw std::out_of_range("mutate_feed: bad direction");
  return Feed{f.n, mutate_matrix(f.n, f.eps, k), f.d};
}

bool mutate_involutive_check(const Feed& f, int k) {
  return mutate_feed(mutate_feed(f, k), k) == f;
}

static void check_perm(int n, const std::vector<int>& sigma) {
  if (sigma.size() != static_cast<size_t>(n)) throw std::invalid_argument("bad permutation size");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Feed permute_feed(const Feed& f, const std::vector<int>& sigma) {
  check_perm(f.n, sigma);
  Feed out;
  out.n = f.n;
  out.eps.assign(f.eps.size(), 0);
  out.d.assign(f.d.size(), 0);
  for (int i = 0; i < f.n; ++i) {
    out.d[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = f.d[static_cast<size_t>(i)];
    for (int j = 0; j < f.n; ++j)
      out.at(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]) = f.at(i, j);
  }
  return out;
}

Seed permute_seed(const Seed& s, const std::vector<int>& sigma) {
  check_perm(s.feed.n, sigma);
  Seed out;
  out.feed = permute_feed(s.feed, sigma);
  out.kind = s.kind;
  out.labels.assign(s.labels.size(), {});
  int n = s.feed.n;
  if (s.kind == SeedKind::D) {
    for (int i = 0; i < n; ++i) {
      out.labels[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = s.labels[static_cast<size_t>(i)];
      out.labels[static_cast<size_t>(n + sigma[static_cast<size_t>(i)])] =
          s.labels[static_cast<size_t>(n + i)];
    }
  } else {
    for (int i = 0; i < n; ++i)
      out.labels[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = s.labels[static_cast<size_t>(i)];
  }
  return out;
}

std::vector<int> compose_perm(const std::vector<int>& sigma, const std::vector<int>& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("compose_perm: size mismatch");
  std::vector<int> out(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i) out[i] = sigma[static_cast<size_t>(tau[i])];
  return out;
}

std::vector<int> invert_perm(const std::vector<int>& sigma) {
  std::vector<int> out(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i) out[static_cast<size_t>(sigma[i])] = static_cast<int>(i);
  return out;
}

bool is_identity_perm(const std::vector<int>& sigma) {
  for (size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] != static_cast<int>(i)) return false;
  return true;
}

DualFeed langlands_dual(const Feed& f) {
  DualFeed out;
  out.n = f.n;
  out.eps.resize(f.eps.size());
  out.d.resize(f.d.size());
  for (int i = 0; i < f.n; ++i) {
    out.d[static_cast<size_t>(i)] = Rational(1, f.d[static_cast<size_t>(i)]);
    for (int j = 0; j < f.n; ++j) out.eps[static_cast<size_t>(i) * f.n + j] = -f.at(j, i);
  }
  return out;
}

DualFeed langlands_dual(const DualFeed& f) {
  DualFeed out;
  out.n = f.n;
  out.eps.resize(f.eps.size());
  out.d.resize(f.d.size());
  for (int i = 0; i < f.n; ++i) {
    out.d[static_cast<size_t>(i)] = Rational(1) / f.d[static_cast<size_t>(i)];
    for (int j = 0; j < f.n; ++j) out.eps[static_cast<size_t>(i) * f.n + j] = -f.at(j, i);
  }
  return out;
}

Feed dual_as_feed(const DualFeed& f) {
  Int scale = 1;
  for (const auto& r : f.d) scale = boost::multiprecision::lcm(scale, den(r));
  std::vector<std::int64_t> d(f.d.size());
  for (size_t i = 0; i < f.d.size(); ++i) {
    Rational scaled = f.d[i] * Rational(scale);
    d[i] = static_cast<std::int64_t>(num(scaled));
  }
  return make_feed(f.n, f.eps, std::move(d));
}

std::optional<Rank2Type> rank2_classify(const Feed& f, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= f.n || j >= f.n) return std::nullopt;
  std::int64_t a = f.at(i, j), b = f.at(j, i);
  std::int64_t p = std::abs(a);
  if (p > 3) return std::nullopt;
  if (a != -p * b) return std::nullopt;
  switch (p) {
    case 0: return b == 0 ? std::optional(Rank2Type::A1xA1) : std::nullopt;
    case 1: return Rank2Type::A2;
    case 2: return Rank2Type::B2;
    default: return Rank2Type::G2;
  }
}

int rank2_coxeter_number(Rank2Type t) {
  switch (t) {
    case Rank2Type::A1xA1: return 2;
    case Rank2Type::A2: return 3;
    case Rank2Type::B2: return 4;
    case Rank2Type::G2: return 6;
  }
  return 0;
}

Feed embed_rank2(int n, int i, int j, Rank2Type t, std::vector<std::int64_t> d,
                 const std::vector<Coupling>& couplings) {
  if (n < 2 || i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("embed_rank2: bad indices");
  if (d.size() != static_cast<size_t>(n)) throw std::invalid_argument("embed_rank2: bad d size");
  std::int64_t p = 0;
  switch (t) {
    case Rank2Type::A1xA1: p = 0; break;
    case Rank2Type::A2: p = 1; break;
    case Rank2Type::B2: p = 2; break;
    case Rank2Type::G2: p = 3; break;
  }
  std::vector<std::int64_t> eps(static_cast<size_t>(n) * n, 0);
  auto set = [&](int r, int c, std::int64_t v) { eps[static_cast<size_t>(r) * n + c] = v; };
  if (p > 0) {
    set(i, j, p);
    set(j, i, -1);
  }
  for (const auto& cp : couplings) {
    if (cp.row == cp.col) throw std::invalid_argument("embed_rank2: diagonal coupling");
    set(cp.row, cp.col, cp.value);
    // Mirror through eps_rc / d_c = -eps_cr / d_r.
    std::int64_t prod = cp.value * d[static_cast<size_t>(cp.row)];
    if (prod % d[static_cast<size_t>(cp.col)] != 0)
      throw std::invalid_argument("embed_rank2: coupling incompatible with symmetrizer");
    set(cp.col, cp.row, -prod / d[static_cast<size_t>(cp.col)]);
  }
  return make_feed(n, std::move(eps), std::move(d));
}

std::string rank2_name(Rank2Type t) {
  switch (t) {
    case Rank2Type::A1xA1: return "A1xA1";
    case Rank2Type::A2: return "A2";
    case Rank2Type::B2: return "B2";
    case Rank2Type::G2: return "G2";
  }
  return "?";
}

std::string seed_kind_name(SeedKind k) {
  switch (k) {
    case SeedKind::A: return "A";
    case SeedKind::X: return "X";
    case SeedKind::D: return "D";
  }
  return "?";
}

}  // namespace cvq
