#include "redei/redei.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "checks.hpp"
#include "construct.hpp"

using redei::Errc;
using redei::Error;

struct rf_ctx {
  redei::FieldContext impl;
};

struct rf_poly {
  unsigned t;
  std::vector<std::uint64_t> exponents;  // descending
};

namespace {

thread_local std::string g_last_error;

rf_status to_status(Errc code) {
  switch (code) {
    case Errc::invalid_degree:
      return RF_ERR_DEGREE;
    case Errc::invalid_modulus:
      return RF_ERR_MODULUS;
    case Errc::division_by_zero:
      return RF_ERR_DIV_ZERO;
    case Errc::pole_encountered:
      return RF_ERR_POLE;
    case Errc::not_on_unit_circle:
      return RF_ERR_NOT_ON_MU;
    case Errc::io_error:
      return RF_ERR_IO;
    case Errc::bad_argument:
      return RF_ERR_ARGUMENT;
  }
  return RF_ERR_ARGUMENT;
}

template <typename Fn>
rf_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RF_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RF_ERR_ARGUMENT;
  }
}

rf_status fail(rf_status status, const char* message) {
  g_last_error = message;
  return status;
}

rf_status copy_to_buffer(const std::string& s, char* buf, size_t len) {
  if (buf == nullptr || len == 0) return fail(RF_ERR_ARGUMENT, "null buffer");
  if (s.size() + 1 > len) return fail(RF_ERR_BUFFER, "buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return RF_OK;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

redei::Family parse_family(char family) {
  if (family == 'M' || family == 'm') return redei::Family::M;
  if (family == 'N' || family == 'n') return redei::Family::N;
  throw Error(Errc::bad_argument, std::string("family must be M or N, got '") + family + "'");
}

const redei::FieldContext& deref(const rf_ctx* ctx) {
  if (ctx == nullptr) throw Error(Errc::bad_argument, "null context");
  return ctx->impl;
}

}  // namespace

extern "C" {

const char* rf_version(void) { return "1.0.0"; }

const char* rf_strerror(rf_status status) {
  switch (status) {
    case RF_OK:
      return "ok";
    case RF_ERR_ARGUMENT:
      return "invalid argument";
    case RF_ERR_DEGREE:
      return "invalid extension degree";
    case RF_ERR_MODULUS:
      return "invalid modulus";
    case RF_ERR_DIV_ZERO:
      return "division by zero";
    case RF_ERR_POLE:
      return "pole encountered";
    case RF_ERR_NOT_ON_MU:
      return "not on the unit circle";
    case RF_ERR_BUFFER:
      return "buffer too small";
    case RF_ERR_IO:
      return "i/o error";
    case RF_ERR_NOMEM:
      return "out of memory";
  }
  return "unknown status";
}

const char* rf_last_error(void) { return g_last_error.c_str(); }

rf_status rf_ctx_new(unsigned t, const char* modulus_bits, rf_ctx** out) {
  return guarded([&]() -> rf_status {
    if (out == nullptr) return fail(RF_ERR_ARGUMENT, "null output pointer");
    *out = new rf_ctx{modulus_bits == nullptr
                          ? redei::FieldContext::make(t)
                          : redei::FieldContext::make(t, modulus_bits)};
    return RF_OK;
  });
}

void rf_ctx_free(rf_ctx* ctx) { delete ctx; }

unsigned rf_ctx_t(const rf_ctx* ctx) { return ctx == nullptr ? 0 : ctx->impl.t(); }
uint64_t rf_ctx_q(const rf_ctx* ctx) { return ctx == nullptr ? 0 : ctx->impl.q(); }
uint64_t rf_ctx_q2(const rf_ctx* ctx) { return ctx == nullptr ? 0 : ctx->impl.q2(); }
uint64_t rf_ctx_mu_order(const rf_ctx* ctx) {
  return ctx == nullptr ? 0 : ctx->impl.mu_order();
}

rf_status rf_ctx_modulus(const rf_ctx* ctx, char* buf, size_t len) {
  return guarded([&] { return copy_to_buffer(deref(ctx).modulus_string(), buf, len); });
}

rf_status rf_fq2_add(const rf_ctx* ctx, rf_fq2 a, rf_fq2 b, rf_fq2* out) {
  return guarded([&]() -> rf_status {
    if (out == nullptr) return fail(RF_ERR_ARGUMENT, "null output pointer");
    redei::Fq2 r = deref(ctx).fq2_add({a.c0, a.c1}, {b.c0, b.c1});
    *out = {r.c0, r.c1};
    return RF_OK;
  });
}

rf_status rf_fq2_mul(const rf_ctx* ctx, rf_fq2 a, rf_fq2 b, rf_fq2* out) {
  return guarded([&]() -> rf_status {
    if (out == nullptr) return fail(RF_ERR_ARGUMENT, "null output pointer");
    redei::Fq2 r = deref(ctx).fq2_mul({a.c0, a.c1}, {b.c0, b.c1});
    *out = {r.c0, r.c1};
    return RF_OK;
  });
}

rf_status rf_fq2_inv(const rf_ctx* ctx, rf_fq2 a, rf_fq2* out) {
  return guarded([&]() -> rf_status {
    if (out == nullptr) return fail(RF_ERR_ARGUMENT, "null output pointer");
    redei::Fq2 r = deref(ctx).fq2_inv({a.c0, a.c1});
    *out = {r.c0, r.c1};
    return RF_OK;
  });
}

rf_status rf_fq2_pow(const rf_ctx* ctx, rf_fq2 a, uint64_t e, rf_fq2* out) {
  return guarded([&]() -> rf_status {
    if (out == nullptr) return fail(RF_ERR_ARGUMENT, "null output pointer");
    redei::Fq2 r = deref(ctx).fq2_pow({a.c0, a.c1}, e);
    *out = {r.c0, r.c1};
    return RF_OK;
  });
}

rf_status rf_frobenius(const rf_ctx* ctx, rf_fq2 a, rf_fq2* out) {
  return guarded([&]() -> rf_status {
    if (out == nullptr) return fail(RF_ERR_ARGUMENT, "null output pointer");
    redei::Fq2 r = deref(ctx).frobenius({a.c0, a.c1});
    *out = {r.c0, r.c1};
    return RF_OK;
  });
}

rf_status rf_fq2_format(const rf_ctx* ctx, rf_fq2 a, char* buf, size_t len) {
  return guarded([&] {
    deref(ctx);
    return copy_to_buffer(redei::FieldContext::format(redei::Fq2{a.c0, a.c1}), buf, len);
  });
}

rf_status rf_predicate(const rf_ctx* ctx, uint64_t n, uint64_t m, char family, int* permutes,
                       char* reason, size_t reason_len) {
  return guarded([&]() -> rf_status {
    if (permutes == nullptr) return fail(RF_ERR_ARGUMENT, "null output pointer");
    const redei::FieldContext& field = deref(ctx);
    redei::PredicateResult result =
        redei::theorem_predicate(field, {field.t(), n, m, parse_family(family)});
    *permutes = result.permutes ? 1 : 0;
    if (reason != nullptr && reason_len > 0) {
      return copy_to_buffer(result.reason_text(), reason, reason_len);
    }
    return RF_OK;
  });
}

rf_status rf_build(const rf_ctx* ctx, uint64_t n, uint64_t m, char family, rf_poly** out) {
  return guarded([&]() -> rf_status {
    if (out == nullptr) return fail(RF_ERR_ARGUMENT, "null output pointer");
    const redei::FieldContext& field = deref(ctx);
    redei::SparsePoly poly =
        redei::build_poly(field, {field.t(), n, m, parse_family(family)});
    *out = new rf_poly{field.t(), poly.exponents_desc()};
    return RF_OK;
  });
}

void rf_poly_free(rf_poly* poly) { delete poly; }

size_t rf_poly_terms(const rf_poly* poly) { return poly == nullptr ? 0 : poly->exponents.size(); }

rf_status rf_poly_exponent(const rf_poly* poly, size_t index, uint64_t* out) {
  return guarded([&]() -> rf_status {
    if (poly == nullptr || out == nullptr) return fail(RF_ERR_ARGUMENT, "null pointer");
    if (index >= poly->exponents.size()) return fail(RF_ERR_ARGUMENT, "term index out of range");
    *out = poly->exponents[index];
    return RF_OK;
  });
}

rf_status rf_poly_text(const rf_poly* poly, char** out) {
  return guarded([&]() -> rf_status {
    if (poly == nullptr || out == nullptr) return fail(RF_ERR_ARGUMENT, "null pointer");
    *out = dup_string(redei::poly_text_from_exponents(poly->exponents));
    return RF_OK;
  });
}

rf_status rf_poly_is_permutation(const rf_ctx* ctx, const rf_poly* poly, int* out) {
  return guarded([&]() -> rf_status {
    if (poly == nullptr || out == nullptr) return fail(RF_ERR_ARGUMENT, "null pointer");
    const redei::FieldContext& field = deref(ctx);
    if (poly->t != field.t()) return fail(RF_ERR_ARGUMENT, "polynomial built for a different t");
    redei::SparsePoly p = redei::sparse_from_exponents(field, poly->exponents);
    *out = redei::brute_force_is_permutation(field, p) ? 1 : 0;
    return RF_OK;
  });
}

rf_status rf_construct_json(const rf_ctx* ctx, uint64_t n, uint64_t m, char family, char** out) {
  return guarded([&]() -> rf_status {
    if (out == nullptr) return fail(RF_ERR_ARGUMENT, "null output pointer");
    const redei::FieldContext& field = deref(ctx);
    redei::TableCell cell =
        redei::construct_cell(field, {field.t(), n, m, parse_family(family)});
    *out = dup_string(redei::cell_to_json(cell, /*poly_when_excluded=*/true));
    return RF_OK;
  });
}

rf_status rf_table_json(const rf_ctx* ctx, char family, const uint64_t* n_list, size_t n_count,
                        uint64_t n_max, uint64_t m_max, char** out) {
  return guarded([&]() -> rf_status {
    if (out == nullptr) return fail(RF_ERR_ARGUMENT, "null output pointer");
    if (n_list == nullptr && n_count != 0) return fail(RF_ERR_ARGUMENT, "null n_list");
    const redei::FieldContext& field = deref(ctx);
    redei::Family fam = parse_family(family);
    std::vector<redei::TableCell> cells;
    if (n_list != nullptr) {
      std::vector<std::uint64_t> rows(n_list, n_list + n_count);
      cells = redei::generate_table_rows(field, fam, rows, m_max);
    } else {
      cells = redei::generate_table(field, fam, n_max, m_max);
    }
    *out = dup_string(redei::table_to_json(cells));
    return RF_OK;
  });
}

rf_status rf_lemmas_report(const rf_ctx* ctx, uint64_t n_max, char** report, int* all_pass) {
  return guarded([&]() -> rf_status {
    if (report == nullptr || all_pass == nullptr) return fail(RF_ERR_ARGUMENT, "null pointer");
    redei::checks::CheckList list = redei::checks::lemma_suite(deref(ctx), n_max);
    *report = dup_string(redei::checks::render_report(list));
    *all_pass = redei::checks::all_pass(list) ? 1 : 0;
    return RF_OK;
  });
}

rf_status rf_selftest(const char* golden_dir, char** report, int* all_pass) {
  return guarded([&]() -> rf_status {
    if (golden_dir == nullptr || report == nullptr || all_pass == nullptr) {
      return fail(RF_ERR_ARGUMENT, "null pointer");
    }
    redei::checks::CheckList list = redei::checks::selftest(golden_dir);
    *report = dup_string(redei::checks::render_report(list));
    *all_pass = redei::checks::all_pass(list) ? 1 : 0;
    return RF_OK;
  });
}

void rf_string_free(char* s) { delete[] s; }

}  // extern "C"
