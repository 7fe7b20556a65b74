#include "cvq/linop.hpp"

#include <sstream>
#include <stdexcept>

namespace cvq {
namespace {

std::int64_t pos_part(std::int64_t v) { return v > 0 ? v : 0; }

void add_term_into(std::map<int, Rational>& dst, int deg, const Rational& c) {
  auto it = dst.find(deg);
  if (it == dst.end()) {
    if (c != 0) dst[deg] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) dst.erase(it);
}

}  // namespace

HbarScalar HbarScalar::term(Rational c, int degree) {
  HbarScalar s;
  if (c != 0) s.c_[degree] = std::move(c);
  return s;
}

bool HbarScalar::is_integer() const {
  if (c_.empty()) return true;
  if (c_.size() != 1) return false;
  const auto& [deg, c] = *c_.begin();
  return deg == 0 && den(c) == 1;
}

HbarScalar HbarScalar::operator+(const HbarScalar& o) const {
  HbarScalar out = *this;
  for (const auto& [deg, c] : o.c_) add_term_into(out.c_, deg, c);
  return out;
}

HbarScalar HbarScalar::operator-(const HbarScalar& o) const {
  HbarScalar out = *this;
  for (const auto& [deg, c] : o.c_) add_term_into(out.c_, deg, -c);
  return out;
}

HbarScalar HbarScalar::operator*(const HbarScalar& o) const {
  HbarScalar out;
  for (const auto& [da, ca] : c_)
    for (const auto& [db, cb] : o.c_) add_term_into(out.c_, da + db, ca * cb);
  return out;
}

HbarScalar HbarScalar::operator-() const {
  HbarScalar out = *this;
  for (auto& [deg, c] : out.c_) c = -c;
  return out;
}

std::string HbarScalar::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, c] : c_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (deg == 0) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << "h";
      if (deg != 1) out << "^" << deg;
    }
    first = false;
  }
  return out.str();
}

LinOp LinOp::zero(int n) {
  LinOp op;
  op.alpha.resize(static_cast<size_t>(n));
  op.beta.resize(static_cast<size_t>(n));
  return op;
}

LinOp LinOp::p(int n, int i) {
  LinOp op = zero(n);
  op.alpha[static_cast<size_t>(i)] = HbarScalar(1);
  return op;
}

LinOp LinOp::q(int n, int i) {
  LinOp op = zero(n);
  op.beta[static_cast<size_t>(i)] = HbarScalar(1);
  return op;
}

bool LinOp::is_zero() const {
  for (const auto& c : alpha)
    if (!c.is_zero()) return false;
  for (const auto& c : beta)
    if (!c.is_zero()) return false;
  return true;
}

LinOp LinOp::operator+(const LinOp& o) const {
  if (size() != o.size()) throw std::invalid_argument("LinOp: size mismatch");
  LinOp out = *this;
  for (size_t i = 0; i < alpha.size(); ++i) {
    out.alpha[i] = out.alpha[i] + o.alpha[i];
    out.beta[i] = out.beta[i] + o.beta[i];
  }
  return out;
}

LinOp LinOp::operator-(const LinOp& o) const { return *this + (-o); }

LinOp LinOp::operator-() const {
  LinOp out = *this;
  for (size_t i = 0; i < alpha.size(); ++i) {
    out.alpha[i] = -out.alpha[i];
    out.beta[i] = -out.beta[i];
  }
  return out;
}

LinOp LinOp::operator*(const HbarScalar& s) const {
  LinOp out = *this;
  for (size_t i = 0; i < alpha.size(); ++i) {
    out.alpha[i] = out.alpha[i] * s;
    out.beta[i] = out.beta[i] * s;
  }
  return out;
}

std::string LinOp::str() const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const HbarScalar& c, const std::string& gen) {
    if (c.is_zero()) return;
    HbarScalar a = c;
    bool flip = c.terms().size() == 1 && c.terms().begin()->second < 0;
    if (flip) a = -a;
    if (first) {
      if (flip) out << "-";
    } else {
      out << (flip ? " - " : " + ");
    }
    std::string cs = a.str();
    if (cs == "1") {
      out << gen;
    } else if (a.terms().size() > 1) {
      out << "(" << cs << ")*" << gen;
    } else {
      out << cs << "*" << gen;
    }
    first = false;
  };
  for (size_t i = 0; i < alpha.size(); ++i) emit(alpha[i], "p" + std::to_string(i + 1));
  for (size_t i = 0; i < beta.size(); ++i) emit(beta[i], "q" + std::to_string(i + 1));
  return first ? "0" : out.str();
}

HbarScalar bracket(const LinOp& a, const LinOp& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bracket: size mismatch");
  HbarScalar sum;
  for (size_t i = 0; i < a.alpha.size(); ++i)
    sum = sum + a.alpha[i] * b.beta[i] - a.beta[i] * b.alpha[i];
  return sum * HbarScalar::term(1, 1);
}

bool commute(const LinOp& a, const LinOp& b) { return bracket(a, b).is_zero(); }

RepOps build_rep(const Feed& f, RepFlavor flavor) {
  RepOps rep;
  rep.n = f.n;
  rep.flavor = flavor;
  rep.b.reserve(static_cast<size_t>(f.n));
  rep.x.reserve(static_cast<size_t>(f.n));
  rep.xt.reserve(static_cast<size_t>(f.n));
  for (int i = 0; i < f.n; ++i) {
    std::int64_t di = f.d[static_cast<size_t>(i)];
    LinOp b = LinOp::zero(f.n);
    LinOp x = LinOp::zero(f.n);
    LinOp xt = LinOp::zero(f.n);
    if (flavor == RepFlavor::Old) {
      b.beta[static_cast<size_t>(i)] = HbarScalar(2);
      x.alpha[static_cast<size_t>(i)] = HbarScalar(Rational(1, 2 * di));
      xt.alpha[static_cast<size_t>(i)] = HbarScalar(Rational(1, 2 * di));
      for (int j = 0; j < f.n; ++j) {
        x.beta[static_cast<size_t>(j)] = HbarScalar(Rational(-f.at(i, j)));
        xt.beta[static_cast<size_t>(j)] = HbarScalar(Rational(f.at(i, j)));
      }
    } else {
      b.beta[static_cast<size_t>(i)] = HbarScalar(1);
      x.alpha[static_cast<size_t>(i)] = HbarScalar(Rational(1, di));
      xt.alpha[static_cast<size_t>(i)] = HbarScalar(Rational(1, di));
      for (int j = 0; j < f.n; ++j) {
        x.beta[static_cast<size_t>(j)] = HbarScalar(Rational(-pos_part(f.at(i, j))));
        xt.beta[static_cast<size_t>(j)] = HbarScalar(Rational(-pos_part(-f.at(i, j))));
      }
    }
    rep.b.push_back(std::move(b));
    rep.x.push_back(std::move(x));
    rep.xt.push_back(std::move(xt));
  }
  return rep;
}

RepOps build_checked(const RepOps& rep, const Feed& f) {
  RepOps out;
  out.n = rep.n;
  out.flavor = rep.flavor;
  for (int i = 0; i < rep.n; ++i) {
    HbarScalar scale = HbarScalar::term(Rational(f.d[static_cast<size_t>(i)]), -1);
    out.b.push_back(rep.b[static_cast<size_t>(i)] * scale);
    out.x.push_back(rep.x[static_cast<size_t>(i)] * scale);
    out.xt.push_back(rep.xt[static_cast<size_t>(i)] * scale);
  }
  return out;
}

LinOp conjugate_by_matrix(const RatMatrix& c, const LinOp& op) {
  int n = c.size();
  if (n != op.size()) throw std::invalid_argument("conjugate_by_matrix: size mismatch");
  RatMatrix cinv = c.inverse();
  LinOp out = LinOp::zero(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const size_t sj = static_cast<size_t>(j), si = static_cast<size_t>(i);
      out.alpha[sj] = out.alpha[sj] + op.alpha[si] * HbarScalar(cinv.at(i, j));
      out.beta[si] = out.beta[si] + op.beta[sj] * HbarScalar(c.at(i, j));
    }
  return out;
}

RatMatrix mutation_shift_matrix(const Feed& f, int k) {
  RatMatrix c = RatMatrix::identity(f.n);
  c.at(k, k) = -1;
  for (int i = 0; i < f.n; ++i) {
    if (i == k) continue;
    c.at(i, k) = Rational(pos_part(-f.at(k, i)));
  }
  return c;
}

RatMatrix gaussian_shift_matrix(const Feed& f, int k) {
  RatMatrix c = RatMatrix::identity(f.n);
  for (int i = 0; i < f.n; ++i) {
    if (i == k) continue;
    c.at(i, k) = Rational(-f.at(k, i));
  }
  return c;
}

bool verify_shift_conjugation_b(const Feed& f, int k, RepFlavor flavor) {
  Feed fp = mutate_feed(f, k);
  RepOps rep = build_rep(f, flavor);
  RepOps repp = build_rep(fp, flavor);
  RatMatrix c = mutation_shift_matrix(f, k);
  for (int i = 0; i < f.n; ++i) {
    LinOp expected;
    if (i != k) {
      expected = rep.b[static_cast<size_t>(i)];
    } else {
      expected = -rep.b[static_cast<size_t>(k)];
      for (int j = 0; j < f.n; ++j)
        expected = expected +
                   rep.b[static_cast<size_t>(j)] * HbarScalar(Rational(pos_part(-f.at(k, j))));
    }
    if (conjugate_by_matrix(c, repp.b[static_cast<size_t>(i)]) != expected) return false;
  }
  return true;
}

ShiftConjugationXReport verify_shift_conjugation_x(const Feed& f, int k) {
  ShiftConjugationXReport rpt;
  rpt.n = f.n;
  rpt.k = k;
  Feed fp = mutate_feed(f, k);
  RatMatrix c = mutation_shift_matrix(f, k);

  auto residuals = [&](RepFlavor flavor, std::vector<LinOp>& res_x, std::vector<LinOp>& res_xt) {
    RepOps rep = build_rep(f, flavor);
    RepOps repp = build_rep(fp, flavor);
    bool ok = true;
    for (int i = 0; i < f.n; ++i) {
      const size_t si = static_cast<size_t>(i), sk = static_cast<size_t>(k);
      LinOp exp_x, exp_xt;
      if (i != k) {
        HbarScalar w(Rational(pos_part(f.at(i, k))));
        exp_x = rep.x[si] + rep.x[sk] * w;
        exp_xt = rep.xt[si] + rep.xt[sk] * w;
      } else {
        exp_x = -rep.x[sk];
        exp_xt = -rep.xt[sk];
      }
      res_x.push_back(conjugate_by_matrix(c, repp.x[si]) - exp_x);
      res_xt.push_back(conjugate_by_matrix(c, repp.xt[si]) - exp_xt);
      ok = ok && res_x.back().is_zero() && res_xt.back().is_zero();
    }
    return ok;
  };
  rpt.old_ok = residuals(RepFlavor::Old, rpt.old_residual_x, rpt.old_residual_xt);
  rpt.new_ok = residuals(RepFlavor::New, rpt.new_residual_x, rpt.new_residual_xt);
  return rpt;
}

std::string ShiftConjugationXReport::str() const {
  std::ostringstream out;
  out << "shift conjugation of x-generators, direction " << (k + 1) << ":\n";
  out << "  old flavor: " << (old_ok ? "ok" : "FAIL") << "\n";
  out << "  new flavor: " << (new_ok ? "ok" : "FAIL") << "\n";
  auto dump = [&](const std::vector<LinOp>& res, const std::string& tag) {
    for (int i = 0; i < n; ++i)
      if (!res[static_cast<size_t>(i)].is_zero())
        out << "    " << tag << (i + 1) << " residual: " << res[static_cast<size_t>(i)].str()
            << "\n";
  };
  dump(old_residual_x, "x");
  dump(old_residual_xt, "xt");
  dump(new_residual_x, "x");
  dump(new_residual_xt, "xt");
  return out.str();
}

}  // namespace cvq
