#include "kernel.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace redei {

ParityPoly ParityPoly::from_exponents(std::vector<std::uint64_t> descending) {
  for (std::size_t i = 1; i < descending.size(); ++i) {
    if (descending[i - 1] <= descending[i]) {
      throw Error(Errc::bad_argument, "exponents must be strictly descending");
    }
  }
  ParityPoly p;
  p.exps_ = std::move(descending);
  return p;
}

std::uint64_t ParityPoly::degree() const {
  if (is_zero()) throw Error(Errc::bad_argument, "degree of the zero polynomial");
  return exps_.front();
}

ParityPoly ParityPoly::operator+(const ParityPoly& o) const {
  ParityPoly r;
  r.exps_.reserve(exps_.size() + o.exps_.size());
  auto a = exps_.begin(), b = o.exps_.begin();
  while (a != exps_.end() && b != o.exps_.end()) {
    if (*a > *b) {
      r.exps_.push_back(*a++);
    } else if (*b > *a) {
      r.exps_.push_back(*b++);
    } else {
      ++a, ++b;  // 1 + 1 = 0
    }
  }
  r.exps_.insert(r.exps_.end(), a, exps_.end());
  r.exps_.insert(r.exps_.end(), b, o.exps_.end());
  return r;
}

ParityPoly ParityPoly::shifted(std::uint64_t k) const {
  ParityPoly r = *this;
  for (auto& e : r.exps_) e += k;
  return r;
}

ParityPoly ParityPoly::times_x_plus_1() const { return shifted(1) + *this; }

Fq2 ParityPoly::eval(const FieldContext& ctx, Fq2 x) const {
  Fq2 acc = FieldContext::zero();
  for (std::uint64_t e : exps_) acc = ctx.fq2_add(acc, ctx.fq2_pow(x, e));
  return acc;
}

std::string ParityPoly::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << " + ";
    std::uint64_t e = exps_[i];
    if (e == 0) {
      os << "1";
    } else if (e == 1) {
      os << "x";
    } else {
      os << "x^" << e;
    }
  }
  return os.str();
}

std::string ParityPoly::to_json() const {
  std::ostringstream os;
  os << "{\"exponents\":[";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << ",";
    os << exps_[i];
  }
  os << "]}";
  return os.str();
}

int binom_parity(std::uint64_t n, std::uint64_t i) { return (i & n) == i ? 1 : 0; }

int a_coeff(std::uint64_t i) { return i % 3 == 0 ? 0 : 1; }

MnPair mn_closed(std::uint64_t n) {
  // Submask enumeration walks the i with C(n,i) odd in descending order, so
  // the exponents n-i come out ascending; reverse at the end.
  std::vector<std::uint64_t> m_exps, n_exps;
  std::uint64_t i = n;
  while (true) {
    if (a_coeff(i)) m_exps.push_back(n - i);
    if (a_coeff(i + 2)) n_exps.push_back(n - i);
    if (i == 0) break;
    i = (i - 1) & n;
  }
  std::reverse(m_exps.begin(), m_exps.end());
  std::reverse(n_exps.begin(), n_exps.end());
  MnPair pair;
  pair.m = ParityPoly::from_exponents(std::move(m_exps));
  pair.n = ParityPoly::from_exponents(std::move(n_exps));
  pair.degree_index = n;
  return pair;
}

MnPair mn_recursive(std::uint64_t n) {
  MnPair pair{ParityPoly::zero(), ParityPoly::one(), 0};
  for (std::uint64_t k = 1; k <= n; ++k) {
    ParityPoly m_next = pair.m.times_x_plus_1() + pair.n;
    ParityPoly n_next = pair.n.shifted(1) + pair.m;
    pair.m = std::move(m_next);
    pair.n = std::move(n_next);
  }
  pair.degree_index = n;
  return pair;
}

Fq2 redei_eval(const FieldContext& ctx, Fq2 x, std::uint64_t n) {
  Fq2 a = ctx.fq2_pow(ctx.fq2_add(x, FieldContext::beta_bar()), n);
  Fq2 b = ctx.fq2_pow(ctx.fq2_add(x, FieldContext::beta()), n);
  Fq2 den = ctx.fq2_add(a, b);
  if (den == FieldContext::zero()) {
    throw Error(Errc::pole_encountered, "redei_eval: denominator vanished at " +
                                            FieldContext::format(x));
  }
  Fq2 num = ctx.fq2_add(ctx.fq2_mul(FieldContext::beta(), a),
                        ctx.fq2_mul(FieldContext::beta_bar(), b));
  return ctx.fq2_mul(num, ctx.fq2_inv(den));
}

namespace {

struct HomPair {
  Fq2 u, v;  // the point u/v of P^1(F_{q^2})
};

HomPair lift(const ProjectivePoint& p) {
  if (p.infinite) return {FieldContext::one(), FieldContext::zero()};
  return {FieldContext::from_base(p.value), FieldContext::one()};
}

}  // namespace

ProjectivePoint redei_projective(const FieldContext& ctx, ProjectivePoint p, std::uint64_t n) {
  HomPair h = lift(p);
  // rho: (u : v) -> (u + (b+1)v : u + bv)
  Fq2 ru = ctx.fq2_add(h.u, ctx.fq2_mul(FieldContext::beta_bar(), h.v));
  Fq2 rv = ctx.fq2_add(h.u, ctx.fq2_mul(FieldContext::beta(), h.v));
  ru = ctx.fq2_pow(ru, n);
  rv = ctx.fq2_pow(rv, n);
  // rho^{-1}: (u : v) -> (bu + (b+1)v : u + v)
  Fq2 su = ctx.fq2_add(ctx.fq2_mul(FieldContext::beta(), ru),
                       ctx.fq2_mul(FieldContext::beta_bar(), rv));
  Fq2 sv = ctx.fq2_add(ru, rv);
  if (sv == FieldContext::zero()) return ProjectivePoint::at_infinity();
  Fq2 val = ctx.fq2_mul(su, ctx.fq2_inv(sv));
  assert(FieldContext::in_base(val));
  return ProjectivePoint::finite(val.c0);
}

Fq2 phi(const FieldContext& ctx, ProjectivePoint p) {
  HomPair h = lift(p);
  Fq2 num = ctx.fq2_add(h.u, ctx.fq2_mul(FieldContext::beta(), h.v));
  Fq2 den = ctx.fq2_add(h.u, ctx.fq2_mul(FieldContext::beta_bar(), h.v));
  // den = x + b + 1 never vanishes on F_q, and equals 1 at infinity
  Fq2 y = ctx.fq2_mul(num, ctx.fq2_inv(den));
  assert(ctx.in_mu(y));
  return y;
}

ProjectivePoint phi_inv(const FieldContext& ctx, Fq2 y) {
  if (!ctx.in_mu(y)) {
    throw Error(Errc::not_on_unit_circle,
                "phi_inv: " + FieldContext::format(y) + " is not in mu_{q+1}");
  }
  if (y == FieldContext::one()) return ProjectivePoint::at_infinity();
  Fq2 num = ctx.fq2_add(ctx.fq2_mul(FieldContext::beta_bar(), y), FieldContext::beta());
  Fq2 den = ctx.fq2_add(y, FieldContext::one());
  Fq2 val = ctx.fq2_mul(num, ctx.fq2_inv(den));
  assert(FieldContext::in_base(val));
  return ProjectivePoint::finite(val.c0);
}

Fq g_map(const FieldContext& ctx, Fq x, std::uint64_t n) {
  Fq xn = ctx.fq_pow(x, n);
  Fq x1n = ctx.fq_pow(x ^ 1, n);
  Fq den = xn ^ x1n;
  if (den == 0) {
    throw Error(Errc::pole_encountered, "g: denominator vanished at " + FieldContext::format(x));
  }
  return ctx.fq_mul(xn, ctx.fq_inv(den));
}

Fq gprime_map(const FieldContext& ctx, Fq x, std::uint64_t n) {
  Fq xn = ctx.fq_pow(x, n);
  Fq x1n = ctx.fq_pow(x ^ 1, n);
  Fq den = xn ^ x1n;
  if (den == 0) {
    throw Error(Errc::pole_encountered, "g': denominator vanished at " + FieldContext::format(x));
  }
  return ctx.fq_mul(x1n, ctx.fq_inv(den));
}

RootReport no_root_on_mu(const FieldContext& ctx, Family family, std::uint64_t n) {
  MnPair pair = mn_closed(n);
  const ParityPoly& poly = family == Family::M ? pair.m : pair.n;
  RootReport report;
  for (const Fq2& x : ctx.enumerate_mu()) {
    if (poly.eval(ctx, x) == FieldContext::zero()) report.roots.push_back(x);
  }
  report.has_root = !report.roots.empty();
  return report;
}

Lemma4Report lemma4_identity(const FieldContext& ctx, std::uint64_t n, std::uint64_t m,
                             int case_id) {
  static constexpr int kResidueForCase[5] = {-1, 1, 2, 0, 1};
  if (case_id < 1 || case_id > 4) {
    throw Error(Errc::bad_argument, "lemma4 case must be 1..4");
  }
  if (n % 3 != static_cast<std::uint64_t>(kResidueForCase[case_id])) {
    throw Error(Errc::bad_argument, "n = " + std::to_string(n) + " does not satisfy the case " +
                                        std::to_string(case_id) + " congruence");
  }
  MnPair pair = mn_closed(n);
  uint128 outer = static_cast<uint128>(n) + static_cast<uint128>(m) * (ctx.q() + 1);
  Lemma4Report report;
  report.case_id = case_id;
  const Fq2 one = FieldContext::one();
  for (const Fq2& x : ctx.enumerate_mu()) {
    Fq2 mx = pair.m.eval(ctx, x);
    Fq2 nx = pair.n.eval(ctx, x);
    // RHS written as a ratio of M_n, N_n values so only the relevant
    // denominator matters: R_n = N/M, 1/R_n = M/N.
    Fq2 rhs_num = case_id <= 2 ? nx : mx;
    Fq2 rhs_den = case_id <= 2 ? mx : nx;
    if (rhs_den == FieldContext::zero()) {
      report.skipped.push_back(x);
      continue;
    }
    Fq2 rhs = ctx.fq2_mul(rhs_num, ctx.fq2_inv(rhs_den));
    if (case_id == 2 || case_id == 3) rhs = ctx.fq2_add(rhs, one);
    Fq2 base = case_id <= 2 ? mx : nx;
    Fq2 lhs = ctx.fq2_mul(ctx.fq2_pow(x, outer), ctx.fq2_pow(base, ctx.q() - 1));
    ++report.points_checked;
    if (lhs != rhs) report.failures.push_back(x);
  }
  return report;
}

}  // namespace redei
