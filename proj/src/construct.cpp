#include "construct.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace redei {

namespace {

std::uint64_t gcd_u128(uint128 a, std::uint64_t b) {
  return std::gcd(static_cast<std::uint64_t>(a % b), b);
}

void validate_params(const FieldContext& ctx, const ConstructionParams& p) {
  if (p.t != ctx.t()) {
    throw Error(Errc::bad_argument, "params built for t=" + std::to_string(p.t) +
                                        " used with a t=" + std::to_string(ctx.t()) + " context");
  }
  if (p.n == 0 || p.m == 0) {
    throw Error(Errc::bad_argument, "n and m must be positive");
  }
}

}  // namespace

std::string PredicateResult::reason_compact() const {
  switch (reason) {
    case ExclusionReason::none:
      return "";
    case ExclusionReason::gcd_n:
      return "gcd(n,q^2-1)=" + std::to_string(gcd_value);
    case ExclusionReason::congruence:
      return "n mod 3 != 1";
    case ExclusionReason::gcd_nm:
      return "gcd(n+m(q+1),q-1)=" + std::to_string(gcd_value);
  }
  return "";
}

std::string PredicateResult::reason_text() const {
  switch (reason) {
    case ExclusionReason::none:
      return "";
    case ExclusionReason::gcd_n:
      return "gcd(n, q^2-1) = " + std::to_string(gcd_value);
    case ExclusionReason::congruence:
      return "n mod 3 != 1";
    case ExclusionReason::gcd_nm:
      return "gcd(n+m(q+1), q-1) = " + std::to_string(gcd_value);
  }
  return "";
}

PredicateResult theorem_predicate(const FieldContext& ctx, const ConstructionParams& p) {
  validate_params(ctx, p);
  PredicateResult result;
  std::uint64_t g = std::gcd(p.n, ctx.q2() - 1);
  if (g != 1) {
    return {false, ExclusionReason::gcd_n, g};
  }
  if (p.family == Family::N && p.n % 3 != 1) {
    return {false, ExclusionReason::congruence, 0};
  }
  uint128 outer = static_cast<uint128>(p.n) + static_cast<uint128>(p.m) * (ctx.q() + 1);
  g = gcd_u128(outer, ctx.q() - 1);
  if (g != 1) {
    return {false, ExclusionReason::gcd_nm, g};
  }
  return result;
}

void SparsePoly::add_term(std::uint64_t e, Fq2 c) {
  if (c == FieldContext::zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = ctx_->fq2_add(it->second, c);
    if (it->second == FieldContext::zero()) terms_.erase(it);
  }
}

std::vector<std::uint64_t> SparsePoly::exponents_desc() const {
  std::vector<std::uint64_t> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.push_back(it->first);
  return out;
}

bool SparsePoly::coefficients_all_one() const {
  for (const auto& [e, c] : terms_) {
    if (c != FieldContext::one()) return false;
  }
  return true;
}

Fq2 SparsePoly::eval(Fq2 x) const {
  Fq2 acc = FieldContext::zero();
  for (const auto& [e, c] : terms_) {
    acc = ctx_->fq2_add(acc, ctx_->fq2_mul(c, ctx_->fq2_pow(x, e)));
  }
  return acc;
}

std::string SparsePoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [e, c] = *it;
    bool unit = c == FieldContext::one();
    if (!unit) os << "(" << FieldContext::format(c) << ")";
    if (e == 0) {
      if (unit) os << "1";
    } else {
      if (!unit) os << "*";
      os << (e == 1 ? "x" : "x^" + std::to_string(e));
    }
  }
  return os.str();
}

SparsePoly sparse_from_exponents(const FieldContext& ctx,
                                 const std::vector<std::uint64_t>& exponents) {
  SparsePoly p(ctx);
  for (std::uint64_t e : exponents) p.add_term(e, FieldContext::one());
  return p;
}

std::uint64_t reduce_exponent(const FieldContext& ctx, uint128 e) {
  if (e == 0) return 0;
  return static_cast<std::uint64_t>((e - 1) % (ctx.q2() - 1)) + 1;
}

SparsePoly reduce_mod_field(const FieldContext& ctx, const SparsePoly& p) {
  SparsePoly r(ctx);
  for (const auto& [e, c] : p.terms()) r.add_term(reduce_exponent(ctx, e), c);
  return r;
}

std::vector<uint128> build_poly_raw(const FieldContext& ctx, const ConstructionParams& p) {
  validate_params(ctx, p);
  MnPair pair = mn_closed(p.n);
  const ParityPoly& family_poly = p.family == Family::M ? pair.m : pair.n;
  uint128 base = static_cast<uint128>(p.n) + static_cast<uint128>(p.m) * (ctx.q() + 1);
  std::vector<uint128> exps;
  exps.reserve(family_poly.exponents().size());
  for (std::uint64_t e : family_poly.exponents()) {
    exps.push_back(base + static_cast<uint128>(ctx.q() - 1) * e);
  }
  return exps;  // descending, like the ParityPoly support
}

SparsePoly build_poly(const FieldContext& ctx, const ConstructionParams& p) {
  SparsePoly poly(ctx);
  for (uint128 e : build_poly_raw(ctx, p)) {
    poly.add_term(reduce_exponent(ctx, e), FieldContext::one());
  }
  return poly;
}

bool brute_force_is_permutation(const FieldContext& ctx, const SparsePoly& p) {
  std::vector<bool> seen(ctx.q2(), false);
  for (std::uint64_t idx = 0; idx < ctx.q2(); ++idx) {
    std::uint64_t image = ctx.index_of(p.eval(ctx.element_at(idx)));
    if (seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

ConstructionParams canonical_params(const FieldContext& ctx, const ConstructionParams& p) {
  validate_params(ctx, p);
  std::uint64_t n_period = 3 * (ctx.q() - 1);
  std::uint64_t m_period = ctx.q() - 1;
  return {p.t, (p.n - 1) % n_period + 1, (p.m - 1) % m_period + 1, p.family};
}

UnitIdentityReport theorem7_unit_identity(const FieldContext& ctx) {
  UnitIdentityReport report;
  const Fq2 one = FieldContext::one();
  const std::uint64_t e3 = 3 * (ctx.q() - 1);
  for (std::uint64_t idx = 1; idx < ctx.q2(); ++idx) {
    Fq2 x = ctx.element_at(idx);
    Fq2 y = ctx.fq2_pow(x, ctx.q() - 1);
    Fq2 x3 = ctx.fq2_pow(x, e3);
    Fq2 p1 = ctx.fq2_mul(x3, ctx.fq2_pow(ctx.fq2_add(y, FieldContext::beta()), e3));
    Fq2 p2 = ctx.fq2_mul(x3, ctx.fq2_pow(ctx.fq2_add(y, FieldContext::beta_bar()), e3));
    ++report.points;
    if (y == FieldContext::beta()) {
      ++report.beta_vanishing;
      if (p1 != FieldContext::zero() || p2 != one) ++report.failures;
    } else if (y == FieldContext::beta_bar()) {
      ++report.beta_bar_vanishing;
      if (p2 != FieldContext::zero() || p1 != one) ++report.failures;
    } else if (p1 != one || p2 != one) {
      ++report.failures;
    }
  }
  return report;
}

namespace {

TableCell make_cell(const FieldContext& ctx, const ConstructionParams& params) {
  TableCell cell;
  cell.params = params;
  cell.predicate = theorem_predicate(ctx, params);
  if (cell.predicate.permutes) {
    cell.exponents = build_poly(ctx, params).exponents_desc();
  }
  return cell;
}

}  // namespace

std::vector<TableCell> generate_table(const FieldContext& ctx, Family family,
                                      std::uint64_t n_max, std::uint64_t m_max) {
  if (n_max == 0) n_max = 3 * (ctx.q() - 1);
  if (m_max == 0) m_max = ctx.q() - 1;
  std::vector<TableCell> cells;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (std::gcd(n, ctx.q2() - 1) != 1) continue;
    if (family == Family::N && n % 3 != 1) continue;
    for (std::uint64_t m = 1; m <= m_max; ++m) {
      cells.push_back(make_cell(ctx, {ctx.t(), n, m, family}));
    }
  }
  return cells;
}

std::vector<TableCell> generate_table_rows(const FieldContext& ctx, Family family,
                                           const std::vector<std::uint64_t>& n_list,
                                           std::uint64_t m_max) {
  if (m_max == 0) m_max = ctx.q() - 1;
  std::vector<TableCell> cells;
  for (std::uint64_t n : n_list) {
    for (std::uint64_t m = 1; m <= m_max; ++m) {
      cells.push_back(make_cell(ctx, {ctx.t(), n, m, family}));
    }
  }
  return cells;
}

TableCell construct_cell(const FieldContext& ctx, const ConstructionParams& p) {
  TableCell cell = make_cell(ctx, p);
  if (cell.exponents.empty()) cell.exponents = build_poly(ctx, p).exponents_desc();
  return cell;
}

std::string poly_text_from_exponents(const std::vector<std::uint64_t>& exponents) {
  if (exponents.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) os << " + ";
    std::uint64_t e = exponents[i];
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

std::vector<std::uint64_t> parse_poly_text(const std::string& text) {
  auto trim = [](std::string s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  std::vector<std::uint64_t> exps;
  std::string rest = text;
  if (trim(rest) == "0") return exps;
  std::size_t pos = 0;
  while (pos != std::string::npos) {
    std::size_t next = rest.find('+', pos);
    std::string term = trim(rest.substr(pos, next == std::string::npos ? next : next - pos));
    pos = next == std::string::npos ? next : next + 1;
    std::uint64_t e;
    if (term == "1") {
      e = 0;
    } else if (term == "x") {
      e = 1;
    } else if (term.rfind("x^", 0) == 0) {
      std::size_t used = 0;
      try {
        e = std::stoull(term.substr(2), &used);
      } catch (const std::exception&) {
        throw Error(Errc::bad_argument, "bad term: " + term);
      }
      if (used != term.size() - 2) throw Error(Errc::bad_argument, "bad term: " + term);
    } else {
      throw Error(Errc::bad_argument, "bad term: " + term);
    }
    if (!exps.empty() && exps.back() <= e) {
      throw Error(Errc::bad_argument, "exponents not strictly descending: " + text);
    }
    exps.push_back(e);
  }
  return exps;
}

namespace {

nlohmann::ordered_json cell_json_object(const TableCell& cell, bool poly_when_excluded) {
  nlohmann::ordered_json j;
  j["t"] = cell.params.t;
  j["n"] = cell.params.n;
  j["m"] = cell.params.m;
  j["family"] = std::string(1, static_cast<char>(cell.params.family));
  if (cell.predicate.permutes) {
    j["status"] = "permutes";
    j["poly"] = poly_text_from_exponents(cell.exponents);
    j["exponents"] = cell.exponents;
  } else {
    j["status"] = "excluded";
    j["reason"] = cell.predicate.reason_compact();
    if (poly_when_excluded) {
      j["poly"] = poly_text_from_exponents(cell.exponents);
      j["exponents"] = cell.exponents;
    }
  }
  return j;
}

}  // namespace

std::string cell_to_json(const TableCell& cell, bool poly_when_excluded) {
  return cell_json_object(cell, poly_when_excluded).dump(2) + "\n";
}

std::string table_to_json(const std::vector<TableCell>& cells) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TableCell& cell : cells) arr.push_back(cell_json_object(cell, false));
  return arr.dump(2) + "\n";
}

}  // namespace redei
