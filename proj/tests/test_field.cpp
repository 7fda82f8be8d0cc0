#include <doctest.h>

#include <functional>
#include <vector>

#include "field.hpp"

using namespace redei;

namespace {

bool throws_with(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("context construction and default moduli") {
  // least irreducible of each degree, by exhaustive scan
  CHECK(FieldContext::make(3).modulus_string() == "1011");    // x^3+x+1
  CHECK(FieldContext::make(5).modulus_string() == "100101");  // x^5+x^2+1
  CHECK(FieldContext::make(7).modulus_string() == "10000011");

  FieldContext ctx = FieldContext::make(3);
  CHECK(ctx.t() == 3);
  CHECK(ctx.q() == 8);
  CHECK(ctx.q2() == 64);
  CHECK(ctx.mu_order() == 9);

  CHECK(FieldContext::make(3, "1011").modulus() == 0b1011);
  CHECK(FieldContext::make(3, "1101").modulus() == 0b1101);  // the other degree-3 irreducible

  CHECK(throws_with(Errc::invalid_degree, [] { FieldContext::make(4); }));
  CHECK(throws_with(Errc::invalid_degree, [] { FieldContext::make(1); }));
  CHECK(throws_with(Errc::invalid_degree, [] { FieldContext::make(33); }));
  CHECK(throws_with(Errc::invalid_modulus, [] { FieldContext::make(3, "1100"); }));  // x^3+x^2
  CHECK(throws_with(Errc::invalid_modulus, [] { FieldContext::make(3, "1111"); }));  // (x+1)(x^2+x+1)
  CHECK(throws_with(Errc::invalid_modulus, [] { FieldContext::make(3, "101"); }));   // wrong degree
  CHECK(throws_with(Errc::invalid_modulus, [] { FieldContext::make(3, "10x1"); }));
}

TEST_CASE("irreducibility scan agrees with factorization facts") {
  CHECK(is_irreducible(0b111));      // x^2+x+1
  CHECK_FALSE(is_irreducible(0b101));  // x^2+1 = (x+1)^2
  CHECK(is_irreducible(0b1011));
  CHECK(is_irreducible(0b1101));
  CHECK_FALSE(is_irreducible(0b1001));  // x^3+1
  // exactly two irreducible cubics over GF(2)
  int count = 0;
  for (std::uint64_t p = 0b1000; p <= 0b1111; ++p) count += is_irreducible(p);
  CHECK(count == 2);
}

TEST_CASE("base field arithmetic in GF(8)") {
  FieldContext ctx = FieldContext::make(3);
  // x * x^2 = x^3 = x + 1 (mod x^3+x+1)
  CHECK(ctx.fq_mul(0b010, 0b100) == 0b011);
  for (Fq a = 0; a < 8; ++a) {
    CHECK(ctx.fq_add(a, a) == 0);  // characteristic 2
    if (a != 0) {
      CHECK(ctx.fq_mul(a, ctx.fq_inv(a)) == 1);
      CHECK(ctx.fq_pow(a, 7) == 1);
    }
  }
  CHECK(ctx.fq_pow(0, 0) == 1);  // empty product convention
  CHECK(ctx.fq_pow(0, 5) == 0);
  CHECK(throws_with(Errc::division_by_zero, [&] { ctx.fq_inv(0); }));
}

TEST_CASE("tower relations for b") {
  FieldContext ctx = FieldContext::make(3);
  const Fq2 b = FieldContext::beta();
  const Fq2 bb = FieldContext::beta_bar();
  CHECK(ctx.fq2_mul(b, b) == bb);                    // b^2 = b + 1
  CHECK(ctx.fq2_mul(b, bb) == FieldContext::one());  // b(b+1) = 1
  CHECK(ctx.fq2_pow(b, 3) == FieldContext::one());   // b^3 = 1
  CHECK(ctx.fq2_inv(b) == bb);
  CHECK(throws_with(Errc::division_by_zero, [&] { ctx.fq2_inv(FieldContext::zero()); }));
}

TEST_CASE("frobenius") {
  for (unsigned t : {3u, 5u}) {
    FieldContext ctx = FieldContext::make(t);
    CHECK(ctx.frobenius(FieldContext::beta()) == FieldContext::beta_bar());
    for (Fq c = 0; c < ctx.q(); ++c) {
      CHECK(ctx.frobenius(FieldContext::from_base(c)) == FieldContext::from_base(c));
    }
    for (std::uint64_t i = 0; i < ctx.q2(); ++i) {
      Fq2 a = ctx.element_at(i);
      CHECK(ctx.frobenius(ctx.frobenius(a)) == a);
      CHECK(ctx.frobenius(a) == ctx.fq2_pow(a, ctx.q()));
    }
  }
}

TEST_CASE("tower arithmetic matches the multiplication rule") {
  FieldContext ctx = FieldContext::make(3);
  // (a0 + a1 b)(b0 + b1 b) = (a0b0 + a1b1) + (a0b1 + a1b0 + a1b1) b
  for (std::uint64_t i = 0; i < ctx.q2(); ++i) {
    for (std::uint64_t j = 0; j < ctx.q2(); ++j) {
      Fq2 a = ctx.element_at(i), b = ctx.element_at(j);
      Fq2 expect{
          static_cast<Fq>(ctx.fq_mul(a.c0, b.c0) ^ ctx.fq_mul(a.c1, b.c1)),
          static_cast<Fq>(ctx.fq_mul(a.c0, b.c1) ^ ctx.fq_mul(a.c1, b.c0) ^
                          ctx.fq_mul(a.c1, b.c1)),
      };
      CHECK(ctx.fq2_mul(a, b) == expect);
    }
  }
  for (std::uint64_t i = 1; i < ctx.q2(); ++i) {
    Fq2 a = ctx.element_at(i);
    CHECK(ctx.fq2_mul(a, ctx.fq2_inv(a)) == FieldContext::one());
    CHECK(ctx.fq2_pow(a, ctx.q2() - 1) == FieldContext::one());
  }
}

TEST_CASE("unit circle membership and enumeration") {
  for (unsigned t : {3u, 5u}) {
    FieldContext ctx = FieldContext::make(t);
    auto mu = ctx.enumerate_mu();
    CHECK(mu.size() == ctx.q() + 1);
    CHECK(ctx.in_mu(FieldContext::one()));
    CHECK(ctx.in_mu(FieldContext::beta()));  // b^{q+1} = b * b^q = b(b+1) = 1
    for (std::size_t i = 0; i < mu.size(); ++i) {
      CHECK(ctx.fq2_pow(mu[i], ctx.q() + 1) == FieldContext::one());
      if (i) CHECK(ctx.index_of(mu[i - 1]) < ctx.index_of(mu[i]));
    }
    // x in mu  <=>  x^q = x^{-1}, exhaustively
    for (std::uint64_t i = 1; i < ctx.q2(); ++i) {
      Fq2 x = ctx.element_at(i);
      CHECK(ctx.in_mu(x) == (ctx.frobenius(x) == ctx.fq2_inv(x)));
    }
  }
}

TEST_CASE("b and b+1 are the only roots of z^2+z+1, both outside F_q") {
  for (unsigned t : {3u, 5u}) {
    FieldContext ctx = FieldContext::make(t);
    std::vector<Fq2> roots;
    for (std::uint64_t i = 0; i < ctx.q2(); ++i) {
      Fq2 z = ctx.element_at(i);
      Fq2 v = ctx.fq2_add(ctx.fq2_add(ctx.fq2_mul(z, z), z), FieldContext::one());
      if (v == FieldContext::zero()) roots.push_back(z);
    }
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == FieldContext::beta());
    CHECK(roots[1] == FieldContext::beta_bar());
    CHECK_FALSE(FieldContext::in_base(roots[0]));
    CHECK_FALSE(FieldContext::in_base(roots[1]));
  }
}

TEST_CASE("element formatting") {
  CHECK(FieldContext::format(Fq2{0x3, 0x5}) == "3+5*b");
  CHECK(FieldContext::format(Fq2{0, 1}) == "0+1*b");
  CHECK(FieldContext::format(Fq{0xb}) == "b");
  CHECK(modulus_to_string(0b1011) == "1011");
  CHECK(parse_modulus_string("1011") == 0b1011);
}
