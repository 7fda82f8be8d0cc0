// Command-line front end.  Talks to the library exclusively through the
// public C interface in redei/redei.h.
//
// Exit codes: 0 success/agreement, 2 construct with a false predicate,
// 64 usage error, 65 data or verification mismatch, 69 refused (field larger
// than the exhaustion cap).

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "redei/redei.h"

#ifndef REDEI_DEFAULT_DATA_DIR
#define REDEI_DEFAULT_DATA_DIR "data/golden/v1"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExcluded = 2;
constexpr int kExitUsage = 64;
constexpr int kExitMismatch = 65;
constexpr int kExitTooLarge = 69;

constexpr uint64_t kDefaultExhaustCap = uint64_t{1} << 20;

uint64_t exhaust_cap() {
  const char* env = std::getenv("REDEI_EXHAUST_CAP");
  if (env == nullptr || *env == '\0') return kDefaultExhaustCap;
  char* end = nullptr;
  uint64_t value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0' || value == 0) return kDefaultExhaustCap;
  return value;
}

struct CtxHandle {
  rf_ctx* ctx = nullptr;
  ~CtxHandle() { rf_ctx_free(ctx); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { rf_string_free(s); }
};

struct PolyHandle {
  rf_poly* poly = nullptr;
  ~PolyHandle() { rf_poly_free(poly); }
};

int report_error(rf_status status) {
  const char* detail = rf_last_error();
  std::fprintf(stderr, "error: %s%s%s\n", rf_strerror(status), *detail ? ": " : "", detail);
  switch (status) {
    case RF_ERR_DEGREE:
    case RF_ERR_MODULUS:
    case RF_ERR_ARGUMENT:
      return kExitUsage;
    default:
      return kExitMismatch;
  }
}

int make_context(unsigned t, const std::string& modulus, CtxHandle& handle) {
  rf_status status = rf_ctx_new(t, modulus.empty() ? nullptr : modulus.c_str(), &handle.ctx);
  return status == RF_OK ? kExitOk : report_error(status);
}

int check_cap(const rf_ctx* ctx, const char* what) {
  uint64_t cap = exhaust_cap();
  if (rf_ctx_q2(ctx) > cap) {
    std::fprintf(stderr,
                 "refused: %s needs q^2 = %" PRIu64
                 " field elements, above the exhaustion cap %" PRIu64
                 " (raise REDEI_EXHAUST_CAP to override)\n",
                 what, rf_ctx_q2(ctx), cap);
    return kExitTooLarge;
  }
  return kExitOk;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot open %s for writing\n", out_path.c_str());
    return kExitMismatch;
  }
  out << text;
  return out.good() ? kExitOk : kExitMismatch;
}

int run_construct(unsigned t, uint64_t n, uint64_t m, char family, const std::string& modulus,
                  const std::string& format) {
  CtxHandle ctx;
  if (int rc = make_context(t, modulus, ctx); rc != kExitOk) return rc;

  int permutes = 0;
  char reason[128];
  rf_status status = rf_predicate(ctx.ctx, n, m, family, &permutes, reason, sizeof reason);
  if (status != RF_OK) return report_error(status);

  if (format == "json") {
    StringHandle json;
    status = rf_construct_json(ctx.ctx, n, m, family, &json.s);
    if (status != RF_OK) return report_error(status);
    std::fputs(json.s, stdout);
  } else {
    PolyHandle poly;
    status = rf_build(ctx.ctx, n, m, family, &poly.poly);
    if (status != RF_OK) return report_error(status);
    StringHandle text;
    status = rf_poly_text(poly.poly, &text.s);
    if (status != RF_OK) return report_error(status);
    std::printf("%s\n", text.s);
    if (!permutes) std::printf("excluded: %s\n", reason);
  }
  return permutes ? kExitOk : kExitExcluded;
}

int run_verify(unsigned t, uint64_t n, uint64_t m, char family, const std::string& modulus) {
  CtxHandle ctx;
  if (int rc = make_context(t, modulus, ctx); rc != kExitOk) return rc;
  if (int rc = check_cap(ctx.ctx, "verify"); rc != kExitOk) return rc;

  int predicted = 0;
  rf_status status = rf_predicate(ctx.ctx, n, m, family, &predicted, nullptr, 0);
  if (status != RF_OK) return report_error(status);

  PolyHandle poly;
  status = rf_build(ctx.ctx, n, m, family, &poly.poly);
  if (status != RF_OK) return report_error(status);

  int bijective = 0;
  status = rf_poly_is_permutation(ctx.ctx, poly.poly, &bijective);
  if (status != RF_OK) return report_error(status);

  bool agree = predicted == bijective;
  std::printf("predicate=%s bruteforce=%s agree=%s\n", predicted ? "true" : "false",
              bijective ? "true" : "false", agree ? "true" : "false");
  return agree ? kExitOk : kExitMismatch;
}

int run_table(unsigned t, char family, uint64_t n_max, uint64_t m_max,
              const std::vector<uint64_t>& n_list, const std::string& modulus,
              const std::string& out_path) {
  CtxHandle ctx;
  if (int rc = make_context(t, modulus, ctx); rc != kExitOk) return rc;

  StringHandle json;
  rf_status status =
      rf_table_json(ctx.ctx, family, n_list.empty() ? nullptr : n_list.data(), n_list.size(),
                    n_max, m_max, &json.s);
  if (status != RF_OK) return report_error(status);
  return emit(json.s, out_path);
}

int run_lemmas(unsigned t, uint64_t n_max, const std::string& modulus) {
  CtxHandle ctx;
  if (int rc = make_context(t, modulus, ctx); rc != kExitOk) return rc;
  if (int rc = check_cap(ctx.ctx, "lemmas"); rc != kExitOk) return rc;

  StringHandle report;
  int all_pass = 0;
  rf_status status = rf_lemmas_report(ctx.ctx, n_max, &report.s, &all_pass);
  if (status != RF_OK) return report_error(status);
  std::fputs(report.s, stdout);
  return all_pass ? kExitOk : kExitMismatch;
}

int run_selftest(const std::string& data_dir) {
  std::string dir = data_dir;
  if (dir.empty()) {
    const char* env = std::getenv("REDEI_DATA_DIR");
    dir = (env != nullptr && *env != '\0') ? env : REDEI_DEFAULT_DATA_DIR;
  }
  StringHandle report;
  int all_pass = 0;
  rf_status status = rf_selftest(dir.c_str(), &report.s, &all_pass);
  if (status != RF_OK) return report_error(status);
  std::fputs(report.s, stdout);
  return all_pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation polynomials of F_{q^2} from the binary Redei function"};
  app.require_subcommand(1);

  unsigned t = 3;
  uint64_t n = 1, m = 1, n_max = 0, m_max = 0;
  std::string family = "M", format = "text", modulus, out_path, data_dir;
  std::vector<uint64_t> n_list;

  auto add_field_options = [&](CLI::App* cmd, bool with_nm) {
    cmd->add_option("--t", t, "extension degree t (odd); q = 2^t")->required();
    cmd->add_option("--modulus", modulus, "modulus bits, e.g. 1011 (default: least irreducible)");
    if (with_nm) {
      cmd->add_option("--n", n, "Redei degree n >= 1")->required();
      cmd->add_option("--m", m, "multiplier m >= 1")->required();
    }
  };
  auto add_family_option = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "polynomial family: M or N")
        ->required()
        ->check(CLI::IsMember({"M", "N"}));
  };

  CLI::App* construct = app.add_subcommand("construct", "build one polynomial and test the criterion");
  add_field_options(construct, true);
  add_family_option(construct);
  construct->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "criterion vs exhaustive bijectivity");
  add_field_options(verify, true);
  add_family_option(verify);

  CLI::App* table = app.add_subcommand("table", "emit a table of cells as JSON");
  add_field_options(table, false);
  add_family_option(table);
  table->add_option("--n-max", n_max, "row bound (default 3(q-1))");
  table->add_option("--m-max", m_max, "column bound (default q-1)");
  table->add_option("--n-list", n_list, "explicit comma-separated rows, bypasses the row filter")
      ->delimiter(',');
  table->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* lemmas = app.add_subcommand("lemmas", "run the lemma suite at this field size");
  add_field_options(lemmas, false);
  lemmas->add_option("--n-max", n_max, "degree bound (default 3(q-1))");

  CLI::App* selftest = app.add_subcommand("selftest", "run the full invariant suite at t=3");
  selftest->add_option("--data-dir", data_dir, "golden table directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (construct->parsed()) return run_construct(t, n, m, family[0], modulus, format);
  if (verify->parsed()) return run_verify(t, n, m, family[0], modulus);
  if (table->parsed()) return run_table(t, family[0], n_max, m_max, n_list, modulus, out_path);
  if (lemmas->parsed()) return run_lemmas(t, n_max, modulus);
  if (selftest->parsed()) return run_selftest(data_dir);
  return kExitUsage;
}
