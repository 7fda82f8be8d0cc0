#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "construct.hpp"

namespace redei::checks {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using CheckList = std::vector<CheckResult>;

bool all_pass(const CheckList& list);
std::string render_report(const CheckList& list);  // one "name: PASS/FAIL detail" line each

// Independent additive Pascal-triangle oracle for C(n,i) mod 2; deliberately
// avoids the submask shortcut used by binom_parity.
int pascal_binom_mod2(unsigned n, unsigned i);

// Exhaustive field-axiom and structure checks (t = 3 fully exhaustive,
// larger t on a fixed deterministic sample).
CheckList field_suite(const FieldContext& ctx);

// Parity kernel: oracle equivalences, splitting identities, no-root lemma,
// Redei bijectivity criterion, degree statements.
CheckList kernel_suite(const FieldContext& ctx);

// Constructor: iff property, coefficient/function-preservation, canonical
// parameters, table-vs-brute-force, commutation square, periodicity.
CheckList constructor_suite(const FieldContext& ctx);

// The cmd-lemmas content: no_root_on_mu over qualifying n <= n_max, the four
// lemma identities over applicable n <= n_max, the unit-identity products,
// and the a_i/b_i tower cross-checks.
CheckList lemma_suite(const FieldContext& ctx, std::uint64_t n_max);

// Golden-file comparison for the full t = 3 grids (tables 1 and 2).
CheckList golden_suite(const std::string& golden_dir);

// Everything above at t = 3, plus the golden files.
CheckList selftest(const std::string& golden_dir);

// Shared helpers for golden handling.
struct GoldenCell {
  ConstructionParams params;
  bool permutes = false;
  std::vector<std::uint64_t> exponents;
  std::string poly;
  std::string reason;
};
std::vector<GoldenCell> load_golden(const std::string& path);

// Cell-by-cell comparison; returns human-readable differences.
std::vector<std::string> diff_against_golden(const std::vector<TableCell>& generated,
                                             const std::vector<GoldenCell>& golden);

}  // namespace redei::checks
