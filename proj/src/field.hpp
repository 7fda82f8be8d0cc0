#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace redei {

using uint128 = unsigned __int128;

enum class Errc {
  invalid_degree,
  invalid_modulus,
  division_by_zero,
  pole_encountered,
  not_on_unit_circle,
  bad_argument,
  io_error,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

// Element of F_q, q = 2^t: a polynomial residue of degree < t packed into the
// low t bits (bit i = coefficient of x^i).
using Fq = std::uint64_t;

// Element of F_{q^2} = F_q(b) written c0 + c1*b, where b is a fixed root of
// z^2 + z + 1 (so b^2 = b + 1, b^3 = 1, b*(b+1) = 1).  Such a b exists outside
// F_q exactly when t is odd.
struct Fq2 {
  Fq c0 = 0;
  Fq c1 = 0;
  friend bool operator==(const Fq2&, const Fq2&) = default;
};

// Point of the Redei domain F_q ∪ {∞}.
struct ProjectivePoint {
  bool infinite = false;
  Fq value = 0;
  static ProjectivePoint at_infinity() { return {true, 0}; }
  static ProjectivePoint finite(Fq v) { return {false, v}; }
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

// GF(2)[x] helpers on bit-packed polynomials.
int poly_degree(std::uint64_t p);                        // -1 for the zero polynomial
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b);
bool is_irreducible(std::uint64_t p);                    // trial division, degrees 1..deg/2
std::uint64_t default_modulus(unsigned t);               // least irreducible of degree t
std::uint64_t parse_modulus_string(const std::string& bits);
std::string modulus_to_string(std::uint64_t p);

// Arithmetic context for F_q and the tower F_{q^2}.  Immutable after
// construction; every member function is const and thread-safe.
//
// t must be odd (z^2+z+1 must stay irreducible over F_q) and at most
// MAX_DEGREE so that exponents reduced mod q^2-1 fit in 64 bits.
class FieldContext {
public:
  static constexpr unsigned MAX_DEGREE = 31;

  static FieldContext make(unsigned t);
  static FieldContext make(unsigned t, const std::string& modulus_bits);

  unsigned t() const { return t_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t q2() const { return q2_; }
  std::uint64_t mu_order() const { return q_ + 1; }
  std::string modulus_string() const { return modulus_to_string(modulus_); }

  Fq fq_add(Fq a, Fq b) const { return a ^ b; }
  Fq fq_mul(Fq a, Fq b) const;
  Fq fq_inv(Fq a) const;
  Fq fq_pow(Fq a, uint128 e) const;

  Fq2 fq2_add(Fq2 a, Fq2 b) const { return {a.c0 ^ b.c0, a.c1 ^ b.c1}; }
  Fq2 fq2_mul(Fq2 a, Fq2 b) const;
  Fq2 fq2_inv(Fq2 a) const;
  Fq2 fq2_pow(Fq2 a, uint128 e) const;
  Fq2 frobenius(Fq2 a) const { return {a.c0 ^ a.c1, a.c1}; }  // fixes F_q, swaps b, b+1

  static Fq2 zero() { return {0, 0}; }
  static Fq2 one() { return {1, 0}; }
  static Fq2 beta() { return {0, 1}; }
  static Fq2 beta_bar() { return {1, 1}; }  // b + 1, the other root of z^2+z+1
  static Fq2 from_base(Fq a) { return {a, 0}; }
  static bool in_base(Fq2 a) { return a.c1 == 0; }

  bool in_mu(Fq2 a) const;  // a != 0 and a^{q+1} == 1

  // All q+1 elements of mu_{q+1}, ascending by (c1, c0) bit value.
  std::vector<Fq2> enumerate_mu() const;

  // Enumeration order for F_{q^2}: index = (c1 << t) | c0.
  Fq2 element_at(std::uint64_t index) const { return {index & (q_ - 1), index >> t_}; }
  std::uint64_t index_of(Fq2 a) const { return (a.c1 << t_) | a.c0; }

  static std::string format(Fq a);   // lowercase hex
  static std::string format(Fq2 a);  // "c0+c1*b"

private:
  FieldContext(unsigned t, std::uint64_t modulus);

  unsigned t_;
  std::uint64_t modulus_;
  std::uint64_t q_;
  std::uint64_t q2_;
};

}  // namespace redei
