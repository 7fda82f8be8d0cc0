#include "checks.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace redei::checks {

namespace {

// Deterministic Knuth LCG for the sampled (t > 3) variants of the exhaustive
// t = 3 checks.  Fixed seed: identical runs must produce identical output.
struct Lcg {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
};

CheckResult make_result(std::string name, bool pass, std::string detail = "") {
  return {std::move(name), pass, std::move(detail)};
}

std::string count_detail(std::uint64_t checked, std::uint64_t bad) {
  std::ostringstream os;
  os << checked << " checked";
  if (bad) os << ", " << bad << " violations";
  return os.str();
}

std::vector<std::uint64_t> qualifying_rows(const FieldContext& ctx, Family family,
                                           std::uint64_t n_max) {
  std::vector<std::uint64_t> rows;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (std::gcd(n, ctx.q2() - 1) != 1) continue;
    if (family == Family::N && n % 3 != 1) continue;
    rows.push_back(n);
  }
  return rows;
}

bool redei_is_bijection(const FieldContext& ctx, std::uint64_t n) {
  std::vector<bool> seen(ctx.q() + 1, false);
  auto mark = [&](ProjectivePoint p) {
    std::uint64_t slot = p.infinite ? ctx.q() : p.value;
    if (seen[slot]) return false;
    seen[slot] = true;
    return true;
  };
  if (!mark(redei_projective(ctx, ProjectivePoint::at_infinity(), n))) return false;
  for (Fq x = 0; x < ctx.q(); ++x) {
    if (!mark(redei_projective(ctx, ProjectivePoint::finite(x), n))) return false;
  }
  return true;
}

}  // namespace

bool all_pass(const CheckList& list) {
  return std::all_of(list.begin(), list.end(), [](const CheckResult& r) { return r.pass; });
}

std::string render_report(const CheckList& list) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const CheckResult& r : list) {
    os << r.name << ": " << (r.pass ? "PASS" : "FAIL");
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
    passed += r.pass;
  }
  if (passed == list.size()) {
    os << "OK: " << list.size() << " checks passed\n";
  } else {
    os << "FAILED: " << (list.size() - passed) << " of " << list.size() << " checks\n";
  }
  return os.str();
}

int pascal_binom_mod2(unsigned n, unsigned i) {
  static constexpr unsigned kMax = 129;
  static const auto table = [] {
    std::array<std::array<unsigned char, kMax>, kMax> t{};
    for (unsigned r = 0; r < kMax; ++r) {
      t[r][0] = 1;
      for (unsigned c = 1; c <= r; ++c) {
        t[r][c] = static_cast<unsigned char>((t[r - 1][c - 1] + (c <= r - 1 ? t[r - 1][c] : 0)) & 1);
      }
    }
    return t;
  }();
  if (i > n) return 0;
  if (n >= kMax) throw Error(Errc::bad_argument, "pascal oracle bounded to n < 129");
  return table[n][i];
}

CheckList field_suite(const FieldContext& ctx) {
  CheckList out;
  const std::uint64_t q = ctx.q(), q2 = ctx.q2();
  const bool exhaustive = ctx.t() == 3;

  {  // associativity, commutativity, distributivity
    std::uint64_t checked = 0, bad = 0;
    auto probe = [&](Fq2 a, Fq2 b, Fq2 c) {
      ++checked;
      if (ctx.fq2_mul(ctx.fq2_mul(a, b), c) != ctx.fq2_mul(a, ctx.fq2_mul(b, c))) ++bad;
      if (ctx.fq2_mul(a, b) != ctx.fq2_mul(b, a)) ++bad;
      if (ctx.fq2_mul(a, ctx.fq2_add(b, c)) !=
          ctx.fq2_add(ctx.fq2_mul(a, b), ctx.fq2_mul(a, c))) {
        ++bad;
      }
    };
    if (exhaustive) {
      for (std::uint64_t i = 0; i < q2; ++i)
        for (std::uint64_t j = 0; j < q2; ++j)
          for (std::uint64_t k = 0; k < q2; ++k)
            probe(ctx.element_at(i), ctx.element_at(j), ctx.element_at(k));
    } else {
      Lcg rng;
      for (int s = 0; s < 4096; ++s) {
        probe(ctx.element_at(rng.next() % q2), ctx.element_at(rng.next() % q2),
              ctx.element_at(rng.next() % q2));
      }
    }
    out.push_back(make_result("field-ring-axioms", bad == 0, count_detail(checked, bad)));
  }

  {  // group orders
    std::uint64_t bad = 0;
    for (std::uint64_t i = 1; i < q2; ++i) {
      if (ctx.fq2_pow(ctx.element_at(i), q2 - 1) != FieldContext::one()) ++bad;
    }
    for (Fq a = 1; a < q; ++a) {
      if (ctx.fq_pow(a, q - 1) != 1) ++bad;
    }
    out.push_back(make_result("field-group-orders", bad == 0, count_detail(q2 - 1 + q - 1, bad)));
  }

  {  // frobenius is a multiplicative involution fixing F_q
    std::uint64_t checked = 0, bad = 0;
    auto probe = [&](Fq2 a, Fq2 b) {
      ++checked;
      if (ctx.frobenius(ctx.fq2_mul(a, b)) != ctx.fq2_mul(ctx.frobenius(a), ctx.frobenius(b)))
        ++bad;
      if (ctx.frobenius(ctx.frobenius(a)) != a) ++bad;
      if (ctx.fq2_pow(a, q) != ctx.frobenius(a)) ++bad;
    };
    if (exhaustive) {
      for (std::uint64_t i = 0; i < q2; ++i)
        for (std::uint64_t j = 0; j < q2; ++j) probe(ctx.element_at(i), ctx.element_at(j));
    } else {
      Lcg rng;
      for (int s = 0; s < 4096; ++s)
        probe(ctx.element_at(rng.next() % q2), ctx.element_at(rng.next() % q2));
    }
    for (Fq a = 0; a < q; ++a) {
      ++checked;
      if (ctx.frobenius(FieldContext::from_base(a)) != FieldContext::from_base(a)) ++bad;
    }
    out.push_back(make_result("field-frobenius", bad == 0, count_detail(checked, bad)));
  }

  {  // x in mu_{q+1}  <=>  x^q = x^{-1}
    std::uint64_t bad = 0;
    for (std::uint64_t i = 1; i < q2; ++i) {
      Fq2 x = ctx.element_at(i);
      if (ctx.in_mu(x) != (ctx.frobenius(x) == ctx.fq2_inv(x))) ++bad;
    }
    out.push_back(make_result("field-mu-frobenius-inverse", bad == 0, count_detail(q2 - 1, bad)));
  }

  {  // roots of z^2 + z + 1
    std::uint64_t roots = 0, bad = 0;
    for (std::uint64_t i = 0; i < q2; ++i) {
      Fq2 z = ctx.element_at(i);
      Fq2 v = ctx.fq2_add(ctx.fq2_add(ctx.fq2_mul(z, z), z), FieldContext::one());
      bool is_root = v == FieldContext::zero();
      if (is_root) {
        ++roots;
        if (z != FieldContext::beta() && z != FieldContext::beta_bar()) ++bad;
        if (FieldContext::in_base(z)) ++bad;
      }
    }
    if (roots != 2) ++bad;
    out.push_back(make_result("field-beta-roots", bad == 0,
                              std::to_string(roots) + " roots found"));
  }

  {  // mu enumeration: size, order, membership
    auto mu = ctx.enumerate_mu();
    std::uint64_t bad = mu.size() == q + 1 ? 0 : 1;
    if (std::find(mu.begin(), mu.end(), FieldContext::one()) == mu.end()) ++bad;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (ctx.fq2_pow(mu[i], q + 1) != FieldContext::one()) ++bad;
      if (i > 0 && ctx.index_of(mu[i - 1]) >= ctx.index_of(mu[i])) ++bad;
    }
    out.push_back(make_result("field-mu-enumeration", bad == 0,
                              std::to_string(mu.size()) + " elements"));
  }

  return out;
}

CheckList kernel_suite(const FieldContext& ctx) {
  CheckList out;
  const std::uint64_t q = ctx.q();

  {  // Lucas vs Pascal
    std::uint64_t bad = 0;
    for (unsigned n = 0; n <= 64; ++n)
      for (unsigned i = 0; i <= 64; ++i)
        if (binom_parity(n, i) != pascal_binom_mod2(n, i)) ++bad;
    out.push_back(make_result("binom-parity-vs-pascal", bad == 0, count_detail(65 * 65, bad)));
  }

  {  // a_i and b_i = a_{i+2} against direct tower evaluation
    std::uint64_t bad_a = 0, bad_b = 0;
    for (std::uint64_t i = 0; i <= 200; ++i) {
      Fq2 bi = ctx.fq2_pow(FieldContext::beta(), i);
      Fq2 bbi = ctx.fq2_pow(FieldContext::beta_bar(), i);
      Fq2 ai = ctx.fq2_add(bi, bbi);
      if (ai != Fq2{static_cast<Fq>(a_coeff(i)), 0}) ++bad_a;
      Fq2 b_val = ctx.fq2_add(ctx.fq2_mul(FieldContext::beta_bar(), bi),
                              ctx.fq2_mul(FieldContext::beta(), bbi));
      if (b_val != Fq2{static_cast<Fq>(a_coeff(i + 2)), 0}) ++bad_b;
    }
    out.push_back(make_result("a-coeff-tower", bad_a == 0, count_detail(201, bad_a)));
    out.push_back(make_result("b-coeff-tower", bad_b == 0, count_detail(201, bad_b)));
  }

  {  // recursion and closed form agree up to 1024
    std::uint64_t bad = 0;
    MnPair pair{ParityPoly::zero(), ParityPoly::one(), 0};
    for (std::uint64_t n = 0; n <= 1024; ++n) {
      if (n > 0) {
        ParityPoly m_next = pair.m.times_x_plus_1() + pair.n;
        ParityPoly n_next = pair.n.shifted(1) + pair.m;
        pair.m = std::move(m_next);
        pair.n = std::move(n_next);
      }
      MnPair closed = mn_closed(n);
      if (closed.m != pair.m || closed.n != pair.n) ++bad;
    }
    for (std::uint64_t n = 0; n <= 64; ++n) {
      MnPair rec = mn_recursive(n);
      MnPair closed = mn_closed(n);
      if (rec.m != closed.m || rec.n != closed.n) ++bad;
    }
    out.push_back(make_result("mn-closed-vs-recursive", bad == 0, count_detail(1025 + 65, bad)));
  }

  {  // degree statements: deg N_n = n; deg M_n = n-1 iff n odd
    std::uint64_t bad = 0;
    for (std::uint64_t n = 1; n <= 1024; ++n) {
      MnPair pair = mn_closed(n);
      if (pair.n.is_zero() || pair.n.degree() != n) ++bad;
      bool deg_hit = !pair.m.is_zero() && pair.m.degree() == n - 1;
      if (deg_hit != (n % 2 == 1)) ++bad;
    }
    out.push_back(make_result("mn-degrees", bad == 0, count_detail(1024, bad)));
  }

  if (ctx.t() == 3) {  // splitting identities, exhaustive in x
    std::uint64_t checked = 0, bad = 0;
    for (std::uint64_t n = 0; n <= 50; ++n) {
      MnPair pair = mn_closed(n);
      for (std::uint64_t i = 0; i < ctx.q2(); ++i) {
        Fq2 x = ctx.element_at(i);
        Fq2 mx = pair.m.eval(ctx, x);
        Fq2 nx = pair.n.eval(ctx, x);
        Fq2 lhs_b = ctx.fq2_pow(ctx.fq2_add(x, FieldContext::beta()), n);
        Fq2 lhs_bb = ctx.fq2_pow(ctx.fq2_add(x, FieldContext::beta_bar()), n);
        ++checked;
        if (lhs_b != ctx.fq2_add(nx, ctx.fq2_mul(FieldContext::beta(), mx))) ++bad;
        if (lhs_bb != ctx.fq2_add(nx, ctx.fq2_mul(FieldContext::beta_bar(), mx))) ++bad;
      }
    }
    out.push_back(make_result("mn-splitting-identities", bad == 0, count_detail(checked, bad)));
  }

  {  // no-root property for qualifying n, strengthened to all of F_{q^2}^* at t = 3
    std::uint64_t bad = 0, rows = 0;
    for (Family fam : {Family::M, Family::N}) {
      for (std::uint64_t n : qualifying_rows(ctx, fam, 3 * (q - 1))) {
        ++rows;
        if (no_root_on_mu(ctx, fam, n).has_root) ++bad;
        if (ctx.t() == 3) {
          MnPair pair = mn_closed(n);
          const ParityPoly& poly = fam == Family::M ? pair.m : pair.n;
          for (std::uint64_t i = 1; i < ctx.q2(); ++i) {
            if (poly.eval(ctx, ctx.element_at(i)) == FieldContext::zero()) ++bad;
          }
        }
      }
    }
    out.push_back(make_result("lemma3-no-roots", bad == 0, count_detail(rows, bad)));
  }

  {  // R_n permutes F_q ∪ {∞} iff gcd(n, q+1) = 1
    std::uint64_t bad = 0;
    std::uint64_t n_max = 3 * (q - 1);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (redei_is_bijection(ctx, n) != (std::gcd(n, q + 1) == 1)) ++bad;
    }
    out.push_back(make_result("redei-bijection-iff", bad == 0, count_detail(n_max, bad)));
  }

  return out;
}

CheckList constructor_suite(const FieldContext& ctx) {
  CheckList out;
  const std::uint64_t q = ctx.q();
  const std::uint64_t n_max = 3 * (q - 1), m_max = q - 1;

  {  // the iff criterion on qualifying rows, coefficients, and the commutation square
    std::uint64_t cells = 0, bad_iff = 0, bad_coeff = 0, bad_agw = 0;
    for (Family fam : {Family::M, Family::N}) {
      for (std::uint64_t n : qualifying_rows(ctx, fam, n_max)) {
        MnPair pair = mn_closed(n);
        const ParityPoly& family_poly = fam == Family::M ? pair.m : pair.n;
        for (std::uint64_t m = 1; m <= m_max; ++m) {
          ConstructionParams params{ctx.t(), n, m, fam};
          SparsePoly poly = build_poly(ctx, params);
          ++cells;
          if (!poly.coefficients_all_one()) ++bad_coeff;
          bool predicted = theorem_predicate(ctx, params).permutes;
          if (brute_force_is_permutation(ctx, poly) != predicted) ++bad_iff;
          std::uint64_t outer = n + m * (q + 1);
          for (std::uint64_t i = 1; i < ctx.q2(); ++i) {
            Fq2 x = ctx.element_at(i);
            Fq2 lhs = ctx.fq2_pow(poly.eval(x), q - 1);
            Fq2 y = ctx.fq2_pow(x, q - 1);
            Fq2 rhs = ctx.fq2_mul(ctx.fq2_pow(y, outer),
                                  ctx.fq2_pow(family_poly.eval(ctx, y), q - 1));
            if (lhs != rhs) {
              ++bad_agw;
              break;
            }
          }
        }
      }
    }
    out.push_back(make_result("iff-permutation-criterion", bad_iff == 0,
                              count_detail(cells, bad_iff)));
    out.push_back(make_result("build-coefficients-one", bad_coeff == 0,
                              count_detail(cells, bad_coeff)));
    out.push_back(make_result("agw-commutation-square", bad_agw == 0,
                              count_detail(cells, bad_agw)));
  }

  {  // reduction preserves the induced function
    std::uint64_t cells = 0, bad = 0;
    for (Family fam : {Family::M, Family::N}) {
      for (std::uint64_t n : qualifying_rows(ctx, fam, n_max)) {
        for (std::uint64_t m = 1; m <= m_max; ++m) {
          ConstructionParams params{ctx.t(), n, m, fam};
          std::vector<uint128> raw = build_poly_raw(ctx, params);
          SparsePoly reduced = build_poly(ctx, params);
          ++cells;
          for (std::uint64_t i = 0; i < ctx.q2(); ++i) {
            Fq2 x = ctx.element_at(i);
            Fq2 direct = FieldContext::zero();
            for (uint128 e : raw) direct = ctx.fq2_add(direct, ctx.fq2_pow(x, e));
            if (direct != reduced.eval(x)) {
              ++bad;
              break;
            }
          }
        }
      }
    }
    out.push_back(make_result("reduce-preserves-function", bad == 0, count_detail(cells, bad)));
  }

  {  // canonical parameter normalization
    std::uint64_t checked = 0, bad = 0;
    for (std::uint64_t n = 1; n <= 100; ++n) {
      for (std::uint64_t m = 1; m <= 30; ++m) {
        for (Family fam : {Family::M, Family::N}) {
          ConstructionParams params{ctx.t(), n, m, fam};
          ConstructionParams canon = canonical_params(ctx, params);
          ++checked;
          if (canon.n < 1 || canon.n > n_max || canon.m < 1 || canon.m > m_max) ++bad;
          if (canonical_params(ctx, canon).n != canon.n ||
              canonical_params(ctx, canon).m != canon.m) {
            ++bad;
          }
          if (build_poly(ctx, params).exponents_desc() !=
              build_poly(ctx, canon).exponents_desc()) {
            ++bad;
          }
        }
      }
    }
    out.push_back(make_result("canonical-params-invariance", bad == 0, count_detail(checked, bad)));
  }

  {  // generated table cells against brute force
    std::uint64_t cells = 0, bad = 0;
    for (Family fam : {Family::M, Family::N}) {
      for (const TableCell& cell : generate_table(ctx, fam, n_max, m_max)) {
        ++cells;
        SparsePoly poly = cell.predicate.permutes
                              ? sparse_from_exponents(ctx, cell.exponents)
                              : build_poly(ctx, cell.params);
        if (brute_force_is_permutation(ctx, poly) != cell.predicate.permutes) ++bad;
      }
    }
    out.push_back(make_result("table-vs-bruteforce", bad == 0, count_detail(cells, bad)));
  }

  {  // the two unit products, classified pointwise
    UnitIdentityReport rep = theorem7_unit_identity(ctx);
    bool pass = rep.holds_on_support() && rep.beta_vanishing == q - 1 &&
                rep.beta_bar_vanishing == q - 1;
    std::ostringstream os;
    os << "products equal 1 at " << (rep.points - rep.beta_vanishing - rep.beta_bar_vanishing)
       << "/" << rep.points << " points; vanishing base at " << rep.beta_vanishing << "+"
       << rep.beta_bar_vanishing << " points (product 0 there)";
    out.push_back(make_result("theorem7-unit-identity", pass, os.str()));
  }

  {  // reduction periodicity in n and in m
    std::uint64_t checked = 0, bad = 0;
    for (Family fam : {Family::M, Family::N}) {
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        for (std::uint64_t m = 1; m <= m_max; ++m) {
          auto base = build_poly(ctx, {ctx.t(), n, m, fam}).exponents_desc();
          ++checked;
          if (base != build_poly(ctx, {ctx.t(), n + n_max, m, fam}).exponents_desc()) ++bad;
          if (base != build_poly(ctx, {ctx.t(), n, m + m_max, fam}).exponents_desc()) ++bad;
        }
      }
    }
    out.push_back(make_result("theorem7-periodicity", bad == 0, count_detail(checked, bad)));
  }

  return out;
}

CheckList lemma_suite(const FieldContext& ctx, std::uint64_t n_max) {
  CheckList out;
  if (n_max == 0) n_max = 3 * (ctx.q() - 1);

  for (Family fam : {Family::M, Family::N}) {
    std::uint64_t rows = 0, bad = 0;
    for (std::uint64_t n : qualifying_rows(ctx, fam, n_max)) {
      ++rows;
      if (no_root_on_mu(ctx, fam, n).has_root) ++bad;
    }
    out.push_back(make_result(fam == Family::M ? "no-root-mu-M" : "no-root-mu-N", bad == 0,
                              count_detail(rows, bad)));
  }

  static constexpr int kCases[4] = {1, 2, 3, 4};
  for (int case_id : kCases) {
    std::uint64_t residue = case_id == 2 ? 2 : (case_id == 3 ? 0 : 1);
    std::uint64_t runs = 0, bad = 0, skipped = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (n % 3 != residue) continue;
      Lemma4Report rep = lemma4_identity(ctx, n, 1, case_id);
      ++runs;
      skipped += rep.skipped.size();
      if (!rep.holds()) ++bad;
    }
    std::ostringstream os;
    os << runs << " values of n";
    if (skipped) os << ", " << skipped << " zero-denominator points skipped";
    if (bad) os << ", " << bad << " violations";
    out.push_back(make_result("lemma4-case" + std::to_string(case_id), bad == 0, os.str()));
  }

  {
    UnitIdentityReport rep = theorem7_unit_identity(ctx);
    bool pass = rep.holds_on_support() && rep.beta_vanishing == ctx.q() - 1 &&
                rep.beta_bar_vanishing == ctx.q() - 1;
    std::ostringstream os;
    os << "products equal 1 at " << (rep.points - rep.beta_vanishing - rep.beta_bar_vanishing)
       << "/" << rep.points << " points; the " << rep.beta_vanishing + rep.beta_bar_vanishing
       << " points with x^(q-1) in {b, b+1} give product 0";
    out.push_back(make_result("theorem7-unit-identity", pass, os.str()));
  }

  {
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i <= 200; ++i) {
      Fq2 bi = ctx.fq2_pow(FieldContext::beta(), i);
      Fq2 bbi = ctx.fq2_pow(FieldContext::beta_bar(), i);
      if (ctx.fq2_add(bi, bbi) != Fq2{static_cast<Fq>(a_coeff(i)), 0}) ++bad;
      Fq2 b_val = ctx.fq2_add(ctx.fq2_mul(FieldContext::beta_bar(), bi),
                              ctx.fq2_mul(FieldContext::beta(), bbi));
      if (b_val != Fq2{static_cast<Fq>(a_coeff(i + 2)), 0}) ++bad;
    }
    out.push_back(make_result("ab-coeff-tower", bad == 0, count_detail(2 * 201, bad)));
  }

  return out;
}

std::vector<GoldenCell> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open golden file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::io_error, "cannot parse " + path + ": " + e.what());
  }
  if (!doc.is_array()) throw Error(Errc::io_error, path + ": expected a JSON array");
  std::vector<GoldenCell> cells;
  for (const auto& j : doc) {
    GoldenCell cell;
    cell.params.t = j.at("t").get<unsigned>();
    cell.params.n = j.at("n").get<std::uint64_t>();
    cell.params.m = j.at("m").get<std::uint64_t>();
    std::string fam = j.at("family").get<std::string>();
    if (fam != "M" && fam != "N") throw Error(Errc::io_error, path + ": bad family " + fam);
    cell.params.family = fam == "M" ? Family::M : Family::N;
    std::string status = j.at("status").get<std::string>();
    if (status == "permutes") {
      cell.permutes = true;
      cell.poly = j.at("poly").get<std::string>();
      cell.exponents = j.at("exponents").get<std::vector<std::uint64_t>>();
    } else if (status == "excluded") {
      cell.permutes = false;
      cell.reason = j.at("reason").get<std::string>();
    } else {
      throw Error(Errc::io_error, path + ": bad status " + status);
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<std::string> diff_against_golden(const std::vector<TableCell>& generated,
                                             const std::vector<GoldenCell>& golden) {
  std::vector<std::string> diffs;
  auto cell_name = [](const ConstructionParams& p) {
    std::ostringstream os;
    os << "(t=" << p.t << ", n=" << p.n << ", m=" << p.m << ", "
       << static_cast<char>(p.family) << ")";
    return os.str();
  };
  if (generated.size() != golden.size()) {
    diffs.push_back("cell count: generated " + std::to_string(generated.size()) + ", golden " +
                    std::to_string(golden.size()));
  }
  std::size_t count = std::min(generated.size(), golden.size());
  for (std::size_t i = 0; i < count; ++i) {
    const TableCell& g = generated[i];
    const GoldenCell& f = golden[i];
    std::string name = cell_name(f.params);
    if (g.params.n != f.params.n || g.params.m != f.params.m ||
        g.params.family != f.params.family || g.params.t != f.params.t) {
      diffs.push_back("cell " + std::to_string(i) + ": params " + cell_name(g.params) +
                      " vs golden " + name);
      continue;
    }
    if (g.predicate.permutes != f.permutes) {
      diffs.push_back(name + ": generated " +
                      std::string(g.predicate.permutes ? "permutes" : "excluded") + " (" +
                      g.predicate.reason_compact() + "), golden " +
                      (f.permutes ? "permutes " + f.poly : "excluded"));
      continue;
    }
    if (!f.permutes) {
      if (g.predicate.reason_compact() != f.reason) {
        diffs.push_back(name + ": reason '" + g.predicate.reason_compact() + "' vs golden '" +
                        f.reason + "'");
      }
      continue;
    }
    if (g.exponents != f.exponents) {
      diffs.push_back(name + ": generated " + poly_text_from_exponents(g.exponents) +
                      ", golden " + f.poly);
    } else if (poly_text_from_exponents(g.exponents) != f.poly) {
      diffs.push_back(name + ": poly text mismatch against golden '" + f.poly + "'");
    }
  }
  return diffs;
}

CheckList golden_suite(const std::string& golden_dir) {
  CheckList out;
  FieldContext ctx = FieldContext::make(3);

  struct Entry {
    const char* file;
    Family family;
  };
  static constexpr Entry kGrids[2] = {{"table1_t3_M.json", Family::M},
                                      {"table2_t3_N.json", Family::N}};
  for (const Entry& entry : kGrids) {
    std::string name = std::string("golden-") + entry.file;
    try {
      auto golden = load_golden(golden_dir + "/" + entry.file);
      auto generated = generate_table(ctx, entry.family, 3 * (ctx.q() - 1), ctx.q() - 1);
      auto diffs = diff_against_golden(generated, golden);
      if (diffs.empty()) {
        out.push_back(make_result(name, true, std::to_string(golden.size()) + " cells"));
      } else {
        out.push_back(make_result(name, false, diffs.front() +
                                                   (diffs.size() > 1
                                                        ? " (+" + std::to_string(diffs.size() - 1) +
                                                              " more)"
                                                        : "")));
      }
    } catch (const Error& e) {
      out.push_back(make_result(name, false, e.what()));
    }
  }

  {  // text form of every golden cell round-trips through the parser
    static constexpr const char* kAll[6] = {"table1_t3_M.json", "table2_t3_N.json",
                                            "table3_t5_M.json", "table4_t5_N.json",
                                            "table5_t7_M.json", "table6_t7_N.json"};
    std::uint64_t cells = 0, bad = 0;
    std::string detail;
    for (const char* file : kAll) {
      try {
        for (const GoldenCell& cell : load_golden(golden_dir + "/" + file)) {
          if (!cell.permutes) continue;
          ++cells;
          if (parse_poly_text(cell.poly) != cell.exponents) ++bad;
        }
      } catch (const Error& e) {
        ++bad;
        if (detail.empty()) detail = e.what();
      }
    }
    if (detail.empty()) detail = count_detail(cells, bad);
    out.push_back(make_result("golden-poly-text-consistency", bad == 0, detail));
  }

  return out;
}

CheckList selftest(const std::string& golden_dir) {
  FieldContext ctx = FieldContext::make(3);
  CheckList out;
  std::vector<std::string> seen;
  for (CheckList part : {field_suite(ctx), kernel_suite(ctx), constructor_suite(ctx),
                         lemma_suite(ctx, 3 * (ctx.q() - 1)), golden_suite(golden_dir)}) {
    for (CheckResult& r : part) {
      if (std::find(seen.begin(), seen.end(), r.name) != seen.end()) continue;
      seen.push_back(r.name);
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace redei::checks
