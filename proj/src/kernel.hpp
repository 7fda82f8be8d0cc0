#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "field.hpp"

namespace redei {

// Polynomial over GF(2) kept as its support: strictly descending exponents,
// each with coefficient 1.  An empty list is the zero polynomial.
class ParityPoly {
public:
  ParityPoly() = default;
  static ParityPoly zero() { return {}; }
  static ParityPoly one() { return from_exponents({0}); }
  static ParityPoly from_exponents(std::vector<std::uint64_t> descending);

  const std::vector<std::uint64_t>& exponents() const { return exps_; }
  bool is_zero() const { return exps_.empty(); }
  std::uint64_t degree() const;  // throws on the zero polynomial

  ParityPoly operator+(const ParityPoly& o) const;  // GF(2) add = symmetric difference
  ParityPoly shifted(std::uint64_t k) const;        // multiply by x^k
  ParityPoly times_x_plus_1() const;

  Fq2 eval(const FieldContext& ctx, Fq2 x) const;

  std::string to_text() const;  // "x^4 + x + 1", zero -> "0"
  std::string to_json() const;  // {"exponents":[4,1,0]}

  friend bool operator==(const ParityPoly&, const ParityPoly&) = default;

private:
  std::vector<std::uint64_t> exps_;
};

// C(n, i) mod 2 by Lucas: odd exactly when i is a submask of n.
int binom_parity(std::uint64_t n, std::uint64_t i);

// a_i = b^i + (b+1)^i in F_2: zero iff 3 | i.  The N-family coefficient
// b_i equals a_{i+2} and is never stored separately.
int a_coeff(std::uint64_t i);

// M_n (denominator of R_n) and N_n (numerator).
struct MnPair {
  ParityPoly m;
  ParityPoly n;
  std::uint64_t degree_index = 0;
};

MnPair mn_closed(std::uint64_t n);
MnPair mn_recursive(std::uint64_t n);

// R_n(x) = (b(x+b+1)^n + (b+1)(x+b)^n) / ((x+b+1)^n + (x+b)^n), evaluated
// directly in the tower.  Throws pole_encountered when the denominator is 0.
Fq2 redei_eval(const FieldContext& ctx, Fq2 x, std::uint64_t n);

// R_n on F_q ∪ {∞} as rho^{-1} ∘ x^n ∘ rho with rho(x) = (x+b+1)/(x+b),
// computed on homogeneous pairs so ∞ needs no special case.  Total.
ProjectivePoint redei_projective(const FieldContext& ctx, ProjectivePoint p, std::uint64_t n);

// phi(x) = (x+b)/(x+b+1): bijection F_q ∪ {∞} -> mu_{q+1}, phi(∞) = 1.
Fq2 phi(const FieldContext& ctx, ProjectivePoint p);
ProjectivePoint phi_inv(const FieldContext& ctx, Fq2 y);  // not_on_unit_circle if y ∉ mu

// g(x) = x^n / (x^n + (x+1)^n) and g'(x) = (x+1)^n / (x^n + (x+1)^n) on F_q.
Fq g_map(const FieldContext& ctx, Fq x, std::uint64_t n);
Fq gprime_map(const FieldContext& ctx, Fq x, std::uint64_t n);

enum class Family : char { M = 'M', N = 'N' };

struct RootReport {
  bool has_root = false;
  std::vector<Fq2> roots;
};

// Evaluates M_n (or N_n) at every point of mu_{q+1} and lists any roots.
RootReport no_root_on_mu(const FieldContext& ctx, Family family, std::uint64_t n);

// Pointwise check of one of the four identities on mu_{q+1}:
//   case 1 (n=1 mod 3): x^{n+m(q+1)} M_n(x)^{q-1} = R_n(x)
//   case 2 (n=2 mod 3): x^{n+m(q+1)} M_n(x)^{q-1} = R_n(x) + 1
//   case 3 (n=0 mod 3): x^{n+m(q+1)} N_n(x)^{q-1} = 1 + 1/R_n(x)
//   case 4 (n=1 mod 3): x^{n+m(q+1)} N_n(x)^{q-1} = 1/R_n(x)
// Points where the right-hand side's denominator vanishes are skipped and
// reported, not failed (can happen in case 3, where no no-root guarantee
// exists).
struct Lemma4Report {
  int case_id = 0;
  std::uint64_t points_checked = 0;
  std::vector<Fq2> skipped;   // denominator of the RHS vanished
  std::vector<Fq2> failures;  // both sides defined but unequal
  bool holds() const { return failures.empty(); }
};

Lemma4Report lemma4_identity(const FieldContext& ctx, std::uint64_t n, std::uint64_t m,
                             int case_id);

}  // namespace redei
