#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "checks.hpp"
#include "kernel.hpp"

using namespace redei;

TEST_CASE("binomial parity") {
  for (unsigned n = 0; n <= 64; ++n) CHECK(binom_parity(n, 0) == 1);
  CHECK(binom_parity(5, 2) == 0);   // C(5,2) = 10
  CHECK(binom_parity(10, 2) == 1);  // C(10,2) = 45
  CHECK(binom_parity(3, 7) == 0);   // i > n
  // against the additive Pascal oracle
  for (unsigned n = 0; n <= 64; ++n) {
    for (unsigned i = 0; i <= 64; ++i) {
      CHECK(binom_parity(n, i) == checks::pascal_binom_mod2(n, i));
    }
  }
}

TEST_CASE("a-coefficient sequence") {
  CHECK(a_coeff(0) == 0);
  CHECK(a_coeff(1) == 1);
  CHECK(a_coeff(2) == 1);
  CHECK(a_coeff(6) == 0);
  for (std::uint64_t i = 0; i <= 30; ++i) CHECK(a_coeff(i) == (i % 3 == 0 ? 0 : 1));
}

TEST_CASE("closed-form M_n, N_n") {
  MnPair p0 = mn_closed(0);
  CHECK(p0.m.is_zero());
  CHECK(p0.n == ParityPoly::one());

  CHECK(mn_closed(5).m.exponents() == std::vector<std::uint64_t>{4, 1, 0});
  CHECK(mn_closed(10).n.exponents() == std::vector<std::uint64_t>{10, 8, 2});
  CHECK(mn_closed(2).m == ParityPoly::one());
  CHECK(mn_closed(2).n.exponents() == std::vector<std::uint64_t>{2, 0});
  CHECK(mn_closed(1).n.exponents() == std::vector<std::uint64_t>{1});
}

TEST_CASE("recursion matches the closed form") {
  MnPair p1 = mn_recursive(1);
  CHECK(p1.m == ParityPoly::one());
  CHECK(p1.n.exponents() == std::vector<std::uint64_t>{1});
  CHECK(mn_recursive(2).m == ParityPoly::one());

  // incremental recursion against the closed form
  MnPair pair{ParityPoly::zero(), ParityPoly::one(), 0};
  for (std::uint64_t n = 0; n <= 256; ++n) {
    if (n > 0) {
      ParityPoly m_next = pair.m.times_x_plus_1() + pair.n;
      ParityPoly n_next = pair.n.shifted(1) + pair.m;
      pair.m = std::move(m_next);
      pair.n = std::move(n_next);
    }
    MnPair closed = mn_closed(n);
    REQUIRE(closed.m == pair.m);
    REQUIRE(closed.n == pair.n);
  }
  // and the public entry point for a few degrees
  for (std::uint64_t n : {0ull, 3ull, 17ull, 64ull, 100ull}) {
    MnPair rec = mn_recursive(n);
    MnPair closed = mn_closed(n);
    CHECK(rec.m == closed.m);
    CHECK(rec.n == closed.n);
  }
}

TEST_CASE("degrees: deg N_n = n, deg M_n = n-1 iff n odd") {
  for (std::uint64_t n = 1; n <= 256; ++n) {
    MnPair pair = mn_closed(n);
    REQUIRE_FALSE(pair.n.is_zero());
    CHECK(pair.n.degree() == n);
    bool hit = !pair.m.is_zero() && pair.m.degree() == n - 1;
    CHECK(hit == (n % 2 == 1));
  }
}

TEST_CASE("parity polynomial representation") {
  ParityPoly p = ParityPoly::from_exponents({4, 1, 0});
  CHECK(p.to_text() == "x^4 + x + 1");
  CHECK(p.to_json() == "{\"exponents\":[4,1,0]}");
  CHECK(ParityPoly::zero().to_text() == "0");
  CHECK(ParityPoly::from_exponents({1}).to_text() == "x");
  CHECK_THROWS_AS((void)ParityPoly::from_exponents({1, 4}), Error);
  CHECK_THROWS_AS((void)ParityPoly::from_exponents({4, 4}), Error);
  CHECK((p + p).is_zero());
  CHECK(p.shifted(2).exponents() == std::vector<std::uint64_t>{6, 3, 2});
}

TEST_CASE("splitting identities (x+b)^n = N_n + b M_n") {
  FieldContext ctx = FieldContext::make(3);
  for (std::uint64_t n = 0; n <= 50; ++n) {
    MnPair pair = mn_closed(n);
    for (std::uint64_t i = 0; i < ctx.q2(); ++i) {
      Fq2 x = ctx.element_at(i);
      Fq2 mx = pair.m.eval(ctx, x);
      Fq2 nx = pair.n.eval(ctx, x);
      REQUIRE(ctx.fq2_pow(ctx.fq2_add(x, FieldContext::beta()), n) ==
              ctx.fq2_add(nx, ctx.fq2_mul(FieldContext::beta(), mx)));
      REQUIRE(ctx.fq2_pow(ctx.fq2_add(x, FieldContext::beta_bar()), n) ==
              ctx.fq2_add(nx, ctx.fq2_mul(FieldContext::beta_bar(), mx)));
    }
  }
}

TEST_CASE("Redei values at x = 1") {
  FieldContext ctx = FieldContext::make(3);
  const Fq2 one = FieldContext::one();
  // R_n(1) = a_{n+1}/a_n: 1 for n = 1 mod 3, 0 for n = 2 mod 3, pole for 3 | n
  CHECK(redei_eval(ctx, one, 1) == one);
  CHECK(redei_eval(ctx, one, 4) == one);
  CHECK(redei_eval(ctx, one, 7) == one);
  CHECK(redei_eval(ctx, one, 2) == FieldContext::zero());
  CHECK(redei_eval(ctx, one, 5) == FieldContext::zero());
  CHECK_THROWS_AS((void)redei_eval(ctx, one, 3), Error);
}

TEST_CASE("Redei function restricted to the unit circle") {
  // On mu_{q+1} the rational function equals x^n M_n(x)^{q-1} when
  // n = 1 mod 3 (a bijection of the circle for gcd(n, q+1) = 1) and
  // x^n M_n(x)^{q-1} + 1 when n = 2 mod 3, so there the image is the
  // shifted circle mu_{q+1} + 1 rather than the circle itself.
  FieldContext ctx = FieldContext::make(3);
  const Fq2 one = FieldContext::one();
  std::set<std::uint64_t> image4, image5;
  for (const Fq2& x : ctx.enumerate_mu()) {
    Fq2 y4 = redei_eval(ctx, x, 4);
    CHECK(ctx.in_mu(y4));
    image4.insert(ctx.index_of(y4));
    Fq2 y5 = redei_eval(ctx, x, 5);
    CHECK(ctx.in_mu(ctx.fq2_add(y5, one)));
    image5.insert(ctx.index_of(y5));
  }
  CHECK(image4.size() == 9);  // bijection of mu_9 (n = 4, gcd(4, 9) = 1)
  CHECK(image5.size() == 9);  // bijection onto mu_9 + 1 (n = 5)
}

namespace {

bool projective_bijection(const FieldContext& ctx, std::uint64_t n) {
  std::set<std::uint64_t> image;
  auto slot = [&](ProjectivePoint p) { return p.infinite ? ctx.q() : p.value; };
  image.insert(slot(redei_projective(ctx, ProjectivePoint::at_infinity(), n)));
  for (Fq x = 0; x < ctx.q(); ++x) {
    image.insert(slot(redei_projective(ctx, ProjectivePoint::finite(x), n)));
  }
  return image.size() == ctx.q() + 1;
}

}  // namespace

TEST_CASE("projective Redei map") {
  FieldContext ctx = FieldContext::make(3);
  // n = 1 is the identity
  CHECK(redei_projective(ctx, ProjectivePoint::at_infinity(), 1) ==
        ProjectivePoint::at_infinity());
  for (Fq x = 0; x < ctx.q(); ++x) {
    CHECK(redei_projective(ctx, ProjectivePoint::finite(x), 1) == ProjectivePoint::finite(x));
  }
  // bijection iff gcd(n, q+1) = 1, and n = 3 collides
  for (std::uint64_t n = 1; n <= 21; ++n) {
    CHECK(projective_bijection(ctx, n) == (std::gcd(n, ctx.q() + 1) == 1));
  }
  CHECK_FALSE(projective_bijection(ctx, 3));

  // agreement with the direct rational form on finite points
  for (std::uint64_t n = 1; n <= 10; ++n) {
    for (Fq x = 0; x < ctx.q(); ++x) {
      ProjectivePoint p = redei_projective(ctx, ProjectivePoint::finite(x), n);
      if (p.infinite) {
        CHECK_THROWS_AS((void)redei_eval(ctx, FieldContext::from_base(x), n), Error);
      } else {
        CHECK(redei_eval(ctx, FieldContext::from_base(x), n) == FieldContext::from_base(p.value));
      }
    }
  }
}

TEST_CASE("phi is a bijection onto the unit circle") {
  for (unsigned t : {3u, 5u}) {
    FieldContext ctx = FieldContext::make(t);
    CHECK(phi(ctx, ProjectivePoint::at_infinity()) == FieldContext::one());
    CHECK(phi_inv(ctx, FieldContext::one()) == ProjectivePoint::at_infinity());

    std::set<std::uint64_t> image;
    auto check_point = [&](ProjectivePoint p) {
      Fq2 y = phi(ctx, p);
      CHECK(ctx.in_mu(y));
      CHECK(phi_inv(ctx, y) == p);
      image.insert(ctx.index_of(y));
    };
    check_point(ProjectivePoint::at_infinity());
    for (Fq x = 0; x < ctx.q(); ++x) check_point(ProjectivePoint::finite(x));
    CHECK(image.size() == ctx.q() + 1);  // exactly mu_{q+1}

    CHECK_THROWS_AS((void)phi_inv(ctx, FieldContext::zero()), Error);
    CHECK_THROWS_AS((void)phi_inv(ctx, Fq2{2, 0}), Error);
  }
}

TEST_CASE("g and g' on F_q") {
  FieldContext ctx = FieldContext::make(3);
  CHECK(g_map(ctx, 0, 5) == 0);
  CHECK(g_map(ctx, 1, 5) == 1);
  CHECK(gprime_map(ctx, 0, 5) == 1);
  CHECK(gprime_map(ctx, 1, 5) == 0);

  std::set<Fq> image;
  for (Fq x = 0; x < ctx.q(); ++x) image.insert(g_map(ctx, x, 5));
  CHECK(image.size() == ctx.q());  // gcd(5, 7) = 1

  // gcd(7, q-1) = 7: x^7 = (x+1)^7 = 1 for x outside {0,1}, denominator 0
  CHECK_THROWS_AS((void)g_map(ctx, 2, 7), Error);
  CHECK(g_map(ctx, 0, 7) == 0);  // 0 and 1 stay evaluable
}

TEST_CASE("no-root scans over the unit circle") {
  FieldContext ctx = FieldContext::make(3);
  CHECK_FALSE(no_root_on_mu(ctx, Family::M, 5).has_root);
  CHECK_FALSE(no_root_on_mu(ctx, Family::N, 13).has_root);
  CHECK_FALSE(no_root_on_mu(ctx, Family::M, 1).has_root);  // M_1 = 1
  // M_3 = x^2 + x = x(x+1) vanishes at 1, which lies on the circle
  RootReport r = no_root_on_mu(ctx, Family::M, 3);
  CHECK(r.has_root);
  CHECK(std::find(r.roots.begin(), r.roots.end(), FieldContext::one()) != r.roots.end());
}

TEST_CASE("the four power identities on the unit circle") {
  FieldContext ctx = FieldContext::make(3);
  for (auto [n, m, c] : std::initializer_list<std::array<std::uint64_t, 3>>{
           {1, 0, 1}, {4, 1, 1}, {2, 1, 2}, {5, 3, 2}, {3, 1, 3}, {6, 2, 3}, {4, 0, 4},
           {10, 1, 4}}) {
    Lemma4Report rep = lemma4_identity(ctx, n, m, static_cast<int>(c));
    CAPTURE(n);
    CAPTURE(c);
    CHECK(rep.holds());
    CHECK(rep.points_checked + rep.skipped.size() == ctx.q() + 1);
  }
  CHECK_THROWS_AS((void)lemma4_identity(ctx, 1, 0, 2), Error);  // wrong residue for the case
  CHECK_THROWS_AS((void)lemma4_identity(ctx, 1, 0, 5), Error);
  // case 2 with gcd(n, q^2-1) > 1: M_14 may vanish on the circle; points are
  // skipped, never failed
  Lemma4Report rep = lemma4_identity(ctx, 14, 1, 2);
  CHECK(rep.holds());
}
