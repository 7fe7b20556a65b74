#include "cvq/classical.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cvq {

static size_t point_size(SeedKind kind, int n) {
  return kind == SeedKind::D ? 2 * static_cast<size_t>(n) : static_cast<size_t>(n);
}

PointState random_point(SeedKind kind, int n, std::mt19937_64& rng, int max_val) {
  std::uniform_int_distribution<int> dist(1, max_val);
  PointState p;
  p.kind = kind;
  p.v.reserve(point_size(kind, n));
  for (size_t i = 0; i < point_size(kind, n); ++i)
    p.v.emplace_back(dist(rng), dist(rng));
  return p;
}

static void mutate_x_block(const Feed& f, const std::vector<Rational>& x,
                           std::vector<Rational>& out, int k) {
  int n = f.n;
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      out[static_cast<size_t>(i)] = Rational(1) / x[static_cast<size_t>(k)];
      continue;
    }
    std::int64_t e = f.at(i, k);
    // sgn(-e) with sgn(0) = 1.
    std::int64_t s = e > 0 ? -1 : 1;
    Rational base = Rational(1) + pow_rational(x[static_cast<size_t>(k)], s);
    out[static_cast<size_t>(i)] = x[static_cast<size_t>(i)] * pow_rational(base, -e);
  }
}

PointState mutate_point(const Feed& f, const PointState& p, int k) {
  int n = f.n;
  if (k < 0 || k >= n) throw std::out_of_range("mutate_point: bad direction");
  if (p.v.size() != point_size(p.kind, n)) throw std::invalid_argument("mutate_point: size");
  PointState out = p;
  switch (p.kind) {
    case SeedKind::A: {
      Rational plus(1), minus(1);
      for (int j = 0; j < n; ++j) {
        std::int64_t e = f.at(k, j);
        if (e > 0) plus *= pow_rational(p.v[static_cast<size_t>(j)], e);
        if (e < 0) minus *= pow_rational(p.v[static_cast<size_t>(j)], -e);
      }
      out.v[static_cast<size_t>(k)] = (plus + minus) / p.v[static_cast<size_t>(k)];
      break;
    }
    case SeedKind::X: {
      mutate_x_block(f, p.v, out.v, k);
      break;
    }
    case SeedKind::D: {
      std::vector<Rational> b(p.v.begin(), p.v.begin() + n);
      std::vector<Rational> x(p.v.begin() + n, p.v.end());
      std::vector<Rational> xb(x), xx(x);
      mutate_x_block(f, x, xx, k);
      Rational plus(1), minus(1);
      for (int j = 0; j < n; ++j) {
        std::int64_t e = f.at(k, j);
        if (e > 0) plus *= pow_rational(b[static_cast<size_t>(j)], e);
        if (e < 0) minus *= pow_rational(b[static_cast<size_t>(j)], -e);
      }
      Rational bk = (minus + x[static_cast<size_t>(k)] * plus) /
                    (b[static_cast<size_t>(k)] * (Rational(1) + x[static_cast<size_t>(k)]));
      for (int i = 0; i < n; ++i) {
        out.v[static_cast<size_t>(i)] = i == k ? bk : b[static_cast<size_t>(i)];
        out.v[static_cast<size_t>(n + i)] = xx[static_cast<size_t>(i)];
      }
      break;
    }
  }
  return out;
}

PointState permute_point(const PointState& p, const std::vector<int>& sigma) {
  PointState out = p;
  size_t n = sigma.size();
  if (p.kind == SeedKind::D) {
    if (p.v.size() != 2 * n) throw std::invalid_argument("permute_point: size");
    for (size_t i = 0; i < n; ++i) {
      out.v[static_cast<size_t>(sigma[i])] = p.v[i];
      out.v[n + static_cast<size_t>(sigma[i])] = p.v[n + i];
    }
  } else {
    if (p.v.size() != n) throw std::invalid_argument("permute_point: size");
    for (size_t i = 0; i < n; ++i) out.v[static_cast<size_t>(sigma[i])] = p.v[i];
  }
  return out;
}

std::vector<Rational> tilde_x(const Feed& f, const PointState& p) {
  if (p.kind != SeedKind::D) throw std::invalid_argument("tilde_x: wants a D-point");
  int n = f.n;
  std::vector<Rational> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rational acc = p.v[static_cast<size_t>(n + i)];
    for (int j = 0; j < n; ++j) acc *= pow_rational(p.v[static_cast<size_t>(j)], f.at(i, j));
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

std::vector<Rational> p_pullback(const Feed& f, const PointState& p) {
  if (p.kind != SeedKind::A) throw std::invalid_argument("p_pullback: wants an A-point");
  int n = f.n;
  std::vector<Rational> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rational acc(1);
    for (int j = 0; j < n; ++j) acc *= pow_rational(p.v[static_cast<size_t>(j)], f.at(i, j));
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

WordStep step_mutate(int k) { return WordStep{WordStep::Mutate, k, {}}; }

WordStep step_transpose(int n, int i, int j) {
  std::vector<int> sigma(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) sigma[static_cast<size_t>(t)] = t;
  std::swap(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]);
  return WordStep{WordStep::Permute, 0, std::move(sigma)};
}

WordStep step_permute(std::vector<int> sigma) {
  return WordStep{WordStep::Permute, 0, std::move(sigma)};
}

Word parse_word(const std::string& text, int n) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() >= 2 && tok[0] == 'm') {
      int k = std::stoi(tok.substr(1));
      if (k < 1 || k > n) throw std::invalid_argument("parse_word: direction out of range: " + tok);
      out.push_back(step_mutate(k - 1));
    } else if (tok[0] == 'p') {
      std::string body = tok.substr(1);
      while (body.find(')') == std::string::npos) {
        std::string more;
        if (!(in >> more)) throw std::invalid_argument("parse_word: unterminated cycle");
        body += " " + more;
      }
      if (body.empty() || body.front() != '(' || body.back() != ')')
        throw std::invalid_argument("parse_word: bad cycle syntax: " + tok);
      std::istringstream cyc(body.substr(1, body.size() - 2));
      std::vector<int> entries;
      int v;
      while (cyc >> v) {
        if (v < 1 || v > n) throw std::invalid_argument("parse_word: cycle entry out of range");
        entries.push_back(v - 1);
      }
      if (entries.size() < 2) throw std::invalid_argument("parse_word: cycle too short");
      std::vector<int> sigma(static_cast<size_t>(n));
      for (int t = 0; t < n; ++t) sigma[static_cast<size_t>(t)] = t;
      for (size_t t = 0; t < entries.size(); ++t)
        sigma[static_cast<size_t>(entries[t])] = entries[(t + 1) % entries.size()];
      out.push_back(step_permute(std::move(sigma)));
    } else {
      throw std::invalid_argument("parse_word: unknown token: " + tok);
    }
  }
  return out;
}

std::string word_to_string(const Word& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w) {
    if (!first) out << ' ';
    first = false;
    if (s.kind == WordStep::Mutate) {
      out << 'm' << s.k + 1;
    } else {
      // Decompose the permutation into cycles for readability.
      std::vector<char> seen(s.sigma.size(), 0);
      bool wrote = false;
      for (size_t i = 0; i < s.sigma.size(); ++i) {
        if (seen[i] || s.sigma[i] == static_cast<int>(i)) continue;
        if (wrote) out << ' ';
        out << "p(";
        size_t j = i;
        bool inner = true;
        while (!seen[j]) {
          seen[j] = 1;
          out << (inner ? "" : " ") << j + 1;
          inner = false;
          j = static_cast<size_t>(s.sigma[j]);
        }
        out << ')';
        wrote = true;
      }
      if (!wrote) out << "p()";
    }
  }
  return out.str();
}

TrajState apply_word(Feed f, PointState p, const Word& w) {
  for (const auto& s : w) {
    if (s.kind == WordStep::Mutate) {
      p = mutate_point(f, p, s.k);
      f = mutate_feed(f, s.k);
    } else {
      p = permute_point(p, s.sigma);
      f = permute_feed(f, s.sigma);
    }
  }
  return TrajState{std::move(f), std::move(p)};
}

Feed apply_word_feed(Feed f, const Word& w) {
  for (const auto& s : w)
    f = s.kind == WordStep::Mutate ? mutate_feed(f, s.k) : permute_feed(f, s.sigma);
  return f;
}

Word h_plus_2_gon_word(const Feed& f, int i, int j) {
  auto t = rank2_classify(f, i, j);
  if (!t) throw std::invalid_argument("h_plus_2_gon_word: pair is not of finite rank-2 type");
  Word w;
  int reps = rank2_coxeter_number(*t) + 2;
  for (int r = 0; r < reps; ++r) {
    w.push_back(step_mutate(i));
    w.push_back(step_transpose(f.n, i, j));
  }
  return w;
}

bool word_trivial_at_samples(const Feed& f, const Word& w, SeedKind kind, int samples,
                             std::uint64_t seed) {
  if (apply_word_feed(f, w) != f) return false;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    PointState p = random_point(kind, f.n, rng);
    TrajState end = apply_word(f, p, w);
    if (end.pt != p) return false;
  }
  return true;
}

bool verify_h_plus_2_gon(const Feed& f, int i, int j, SeedKind kind, int samples,
                         std::uint64_t seed) {
  return word_trivial_at_samples(f, h_plus_2_gon_word(f, i, j), kind, samples, seed);
}

}  // namespace cvq
