#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kernel.hpp"

namespace redei {

struct ConstructionParams {
  unsigned t = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  Family family = Family::M;
};

enum class ExclusionReason {
  none,
  gcd_n,        // gcd(n, q^2-1) != 1
  congruence,   // family N with n != 1 (mod 3)
  gcd_nm,       // gcd(n + m(q+1), q-1) != 1
};

struct PredicateResult {
  bool permutes = true;
  ExclusionReason reason = ExclusionReason::none;
  std::uint64_t gcd_value = 1;
  std::string reason_compact() const;  // "gcd(n+m(q+1),q-1)=7" / "n mod 3 != 1"
  std::string reason_text() const;     // "gcd(n+m(q+1), q-1) = 7"
};

// The permutation criterion: gcd(n+m(q+1), q-1) = 1 and
// gcd(n, q^2-1) = 1, and for family N additionally n = 1 (mod 3).
PredicateResult theorem_predicate(const FieldContext& ctx, const ConstructionParams& p);

// Polynomial over F_{q^2} as exponent -> nonzero coefficient.
class SparsePoly {
public:
  explicit SparsePoly(const FieldContext& ctx) : ctx_(&ctx) {}

  void add_term(std::uint64_t e, Fq2 c);  // accumulates; zero sums are erased
  const std::map<std::uint64_t, Fq2>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::vector<std::uint64_t> exponents_desc() const;
  bool coefficients_all_one() const;
  Fq2 eval(Fq2 x) const;
  std::string to_text() const;
  const FieldContext& ctx() const { return *ctx_; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_;
  }

private:
  const FieldContext* ctx_;
  std::map<std::uint64_t, Fq2> terms_;
};

SparsePoly sparse_from_exponents(const FieldContext& ctx,
                                 const std::vector<std::uint64_t>& exponents);

// Reduction mod x^{q^2} + x: positive exponents map into [1, q^2-1], the
// constant term stays put.  This is the convention under which a polynomial
// and its reduction induce the same function on F_{q^2}.
std::uint64_t reduce_exponent(const FieldContext& ctx, uint128 e);
SparsePoly reduce_mod_field(const FieldContext& ctx, const SparsePoly& p);

// Unreduced exponents of x^{n+m(q+1)} M_n(x^{q-1}) (or N_n), descending.
std::vector<uint128> build_poly_raw(const FieldContext& ctx, const ConstructionParams& p);

// The reduced construction.  Colliding exponents cancel in pairs (char 2),
// which is what produces the short rows of the reference tables.
SparsePoly build_poly(const FieldContext& ctx, const ConstructionParams& p);

// Ground truth: evaluate at all q^2 points and test for distinct images.
bool brute_force_is_permutation(const FieldContext& ctx, const SparsePoly& p);

// Period normalization: n into [1, 3(q-1)], m into [1, q-1]; the reduced
// construction is invariant under it.
ConstructionParams canonical_params(const FieldContext& ctx, const ConstructionParams& p);

// Exhaustive evaluation of the two proof-device products
//   x^{3(q-1)} (x^{q-1} + b)^{3(q-1)}   and   x^{3(q-1)} (x^{q-1} + b+1)^{3(q-1)}
// over F_{q^2}*.  Since b and b+1 lie in mu_{q+1}, each product vanishes on
// the q-1 points where x^{q-1} hits its base's root; everywhere else it must
// equal 1.  The report separates the two situations.
struct UnitIdentityReport {
  std::uint64_t points = 0;
  std::uint64_t beta_vanishing = 0;      // x^{q-1} = b: product 0 by construction
  std::uint64_t beta_bar_vanishing = 0;  // x^{q-1} = b+1
  std::uint64_t failures = 0;            // any other deviation from 1 (expect none)
  bool holds_on_support() const { return failures == 0; }
  bool holds_everywhere() const {
    return failures == 0 && beta_vanishing == 0 && beta_bar_vanishing == 0;
  }
};

UnitIdentityReport theorem7_unit_identity(const FieldContext& ctx);

struct TableCell {
  ConstructionParams params;
  PredicateResult predicate;
  std::vector<std::uint64_t> exponents;  // reduced construction, only when permutes
};

// Full grid: rows are the n in [1, n_max] with gcd(n, q^2-1) = 1 (family N
// additionally n = 1 mod 3), columns m in [1, m_max]; n_max/m_max of 0 mean
// the periodicity bounds 3(q-1) and q-1.
std::vector<TableCell> generate_table(const FieldContext& ctx, Family family,
                                      std::uint64_t n_max, std::uint64_t m_max);

// Explicit rows, no qualification filter; the predicate still decides each
// cell's status.
std::vector<TableCell> generate_table_rows(const FieldContext& ctx, Family family,
                                           const std::vector<std::uint64_t>& n_list,
                                           std::uint64_t m_max);

// Single cell with the polynomial always built, also when excluded (the
// construct command prints it either way).
TableCell construct_cell(const FieldContext& ctx, const ConstructionParams& p);

std::string poly_text_from_exponents(const std::vector<std::uint64_t>& exponents);
std::vector<std::uint64_t> parse_poly_text(const std::string& text);

std::string cell_to_json(const TableCell& cell, bool poly_when_excluded = false);
std::string table_to_json(const std::vector<TableCell>& cells);

}  // namespace redei
