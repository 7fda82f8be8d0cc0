#include "field.hpp"

#include <bit>
#include <cassert>
#include <sstream>

namespace redei {

int poly_degree(std::uint64_t p) {
  return p == 0 ? -1 : static_cast<int>(std::bit_width(p)) - 1;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  assert(b != 0);
  int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

bool is_irreducible(std::uint64_t p) {
  int d = poly_degree(p);
  if (d < 1) return false;
  if ((p & 1) == 0) return d == 1;  // divisible by x unless p == x itself
  for (int dd = 1; 2 * dd <= d; ++dd) {
    for (std::uint64_t f = std::uint64_t{1} << dd; f < std::uint64_t{1} << (dd + 1); ++f) {
      if (poly_mod(p, f) == 0) return false;
    }
  }
  return true;
}

std::uint64_t default_modulus(unsigned t) {
  // Least irreducible of degree t by integer value of the bit string.  Only
  // candidates with constant term 1 can be irreducible for t >= 2.
  for (std::uint64_t p = (std::uint64_t{1} << t) | 1; p < std::uint64_t{1} << (t + 1); p += 2) {
    if (is_irreducible(p)) return p;
  }
  throw Error(Errc::invalid_degree, "no irreducible polynomial found");  // unreachable
}

std::uint64_t parse_modulus_string(const std::string& bits) {
  if (bits.empty() || bits.size() > 64 || bits.front() != '1') {
    throw Error(Errc::invalid_modulus, "modulus bit string must start with 1");
  }
  std::uint64_t p = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(Errc::invalid_modulus, "modulus bit string may contain only 0/1");
    }
    p = (p << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return p;
}

std::string modulus_to_string(std::uint64_t p) {
  assert(p != 0);
  std::string s;
  for (int i = poly_degree(p); i >= 0; --i) s.push_back((p >> i & 1) ? '1' : '0');
  return s;
}

FieldContext::FieldContext(unsigned t, std::uint64_t modulus)
    : t_(t), modulus_(modulus), q_(std::uint64_t{1} << t), q2_(q_ * q_) {}

FieldContext FieldContext::make(unsigned t) {
  if (t < 3 || t > MAX_DEGREE || t % 2 == 0) {
    throw Error(Errc::invalid_degree, "t must be odd and in [3, 31], got " + std::to_string(t));
  }
  return FieldContext(t, default_modulus(t));
}

FieldContext FieldContext::make(unsigned t, const std::string& modulus_bits) {
  if (t < 3 || t > MAX_DEGREE || t % 2 == 0) {
    throw Error(Errc::invalid_degree, "t must be odd and in [3, 31], got " + std::to_string(t));
  }
  std::uint64_t p = parse_modulus_string(modulus_bits);
  if (poly_degree(p) != static_cast<int>(t)) {
    throw Error(Errc::invalid_modulus, "modulus degree is not " + std::to_string(t));
  }
  if (!is_irreducible(p)) {
    throw Error(Errc::invalid_modulus, "modulus " + modulus_bits + " is reducible");
  }
  return FieldContext(t, p);
}

Fq FieldContext::fq_mul(Fq a, Fq b) const {
  assert(a < q_ && b < q_);
  Fq r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> t_ & 1) a ^= modulus_;
  }
  return r;
}

Fq FieldContext::fq_pow(Fq a, uint128 e) const {
  Fq r = 1;
  while (e != 0) {
    if (e & 1) r = fq_mul(r, a);
    a = fq_mul(a, a);
    e >>= 1;
  }
  return r;
}

Fq FieldContext::fq_inv(Fq a) const {
  if (a == 0) throw Error(Errc::division_by_zero, "fq_inv(0)");
  return fq_pow(a, q_ - 2);
}

Fq2 FieldContext::fq2_mul(Fq2 a, Fq2 b) const {
  // (a0 + a1 b)(b0 + b1 b) = a0b0 + a1b1 + (a0b1 + a1b0 + a1b1) b,  using b^2 = b+1
  Fq t00 = fq_mul(a.c0, b.c0);
  Fq t01 = fq_mul(a.c0, b.c1);
  Fq t10 = fq_mul(a.c1, b.c0);
  Fq t11 = fq_mul(a.c1, b.c1);
  return {static_cast<Fq>(t00 ^ t11), static_cast<Fq>(t01 ^ t10 ^ t11)};
}

Fq2 FieldContext::fq2_pow(Fq2 a, uint128 e) const {
  Fq2 r = one();
  while (e != 0) {
    if (e & 1) r = fq2_mul(r, a);
    a = fq2_mul(a, a);
    e >>= 1;
  }
  return r;
}

Fq2 FieldContext::fq2_inv(Fq2 a) const {
  if (a == zero()) throw Error(Errc::division_by_zero, "fq2_inv(0)");
  // a^{-1} = a^q / N(a) with N(a) = a * a^q = c0^2 + c0 c1 + c1^2 in F_q
  Fq2 conj = frobenius(a);
  Fq2 norm = fq2_mul(a, conj);
  assert(norm.c1 == 0 && norm.c0 != 0);
  Fq ninv = fq_inv(norm.c0);
  return {fq_mul(conj.c0, ninv), fq_mul(conj.c1, ninv)};
}

bool FieldContext::in_mu(Fq2 a) const {
  if (a == zero()) return false;
  return fq2_pow(a, q_ + 1) == one();
}

std::vector<Fq2> FieldContext::enumerate_mu() const {
  std::vector<Fq2> mu;
  mu.reserve(q_ + 1);
  for (std::uint64_t idx = 1; idx < q2_; ++idx) {
    Fq2 x = element_at(idx);
    if (in_mu(x)) mu.push_back(x);
  }
  assert(mu.size() == q_ + 1);
  return mu;
}

std::string FieldContext::format(Fq a) {
  std::ostringstream os;
  os << std::hex << a;
  return os.str();
}

std::string FieldContext::format(Fq2 a) {
  std::ostringstream os;
  os << std::hex << a.c0 << "+" << a.c1 << "*b";
  return os.str();
}

}  // namespace redei
