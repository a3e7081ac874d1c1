#include "recip.h"

#include <cstring>
#include <string>
#include <vector>

#include "characters.hpp"
#include "hilbert.hpp"
#include "padic.hpp"
#include "residue.hpp"
#include "verify.hpp"

struct recip_ctx {
  std::string last_error;
};

struct recip_report {
  struct Entry {
    std::string place;
    int sign;
    std::string t_value;
    bool has_t;
  };
  std::vector<Entry> entries;
  int product;
};

namespace {

using namespace recip;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/* Runs `body`, translating C++ exceptions into status codes. */
template <typename F>
recip_status guarded(recip_ctx* ctx, F&& body) {
  try {
    body();
    if (ctx) ctx->last_error.clear();
    return RECIP_OK;
  } catch (const std::invalid_argument& e) {
    if (ctx) ctx->last_error = e.what();
    return RECIP_EPARSE;
  } catch (const std::domain_error& e) {
    if (ctx) ctx->last_error = e.what();
    return RECIP_EDOMAIN;
  } catch (const std::exception& e) {
    if (ctx) ctx->last_error = e.what();
    return RECIP_EINTERNAL;
  }
}

Int parse_prime(const std::string& text) {
  Rational r = parse_rational(text);
  if (denominator(r) != 1 || !is_prime(numerator(r)))
    throw std::domain_error("not a prime: " + text);
  return numerator(r);
}

Place parse_place(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo")
    return Place::infinity();
  return Place::finite(parse_prime(text));
}

}  // namespace

extern "C" {

recip_ctx* recip_ctx_new(void) { return new recip_ctx; }

void recip_ctx_free(recip_ctx* ctx) { delete ctx; }

const char* recip_last_error(const recip_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

void recip_string_free(char* s) { delete[] s; }

recip_status recip_legendre(recip_ctx* ctx, const char* a, const char* p,
                            int* out_sign) {
  return guarded(ctx, [&] {
    *out_sign = sign_int(legendre(parse_rational(a), parse_prime(p)));
  });
}

recip_status recip_legendre_reciprocity(recip_ctx* ctx, const char* a,
                                        const char* p, int* out_sign) {
  return guarded(ctx, [&] {
    *out_sign =
        sign_int(legendre_via_reciprocity(parse_rational(a), parse_prime(p)));
  });
}

recip_status recip_character(recip_ctx* ctx, int which, const char* a,
                             int* out_sign) {
  return guarded(ctx, [&] {
    Rational ra = parse_rational(a);
    Sign s = which == 4    ? lambda4(ra)
             : which == 8  ? lambda8(ra)
             : which == 48 ? lambda48(ra)
                           : throw std::domain_error(
                                 "character selector must be 4, 8 or 48");
    *out_sign = sign_int(s);
  });
}

recip_status recip_hilbert(recip_ctx* ctx, const char* a, const char* b,
                           const char* place, int* out_sign) {
  return guarded(ctx, [&] {
    *out_sign = sign_int(
        symbol_at(parse_rational(a), parse_rational(b), parse_place(place)));
  });
}

recip_status recip_product_check(recip_ctx* ctx, const char* a, const char* b,
                                 recip_report** out) {
  return guarded(ctx, [&] {
    ProductReport r = product_check(parse_rational(a), parse_rational(b));
    auto* report = new recip_report;
    report->product = sign_int(r.product);
    for (const auto& e : r.entries) {
      recip_report::Entry entry;
      entry.place = e.place.str();
      entry.sign = sign_int(e.symbol);
      entry.has_t = e.t_value.has_value();
      if (entry.has_t) entry.t_value = format_rational(*e.t_value);
      report->entries.push_back(std::move(entry));
    }
    *out = report;
  });
}

int recip_report_size(const recip_report* report) {
  return static_cast<int>(report->entries.size());
}

recip_status recip_report_entry(const recip_report* report, int index,
                                const char** out_place, int* out_sign,
                                const char** out_t_value) {
  if (!report || index < 0 ||
      index >= static_cast<int>(report->entries.size()))
    return RECIP_EDOMAIN;
  const auto& e = report->entries[index];
  if (out_place) *out_place = e.place.c_str();
  if (out_sign) *out_sign = e.sign;
  if (out_t_value) *out_t_value = e.has_t ? e.t_value.c_str() : nullptr;
  return RECIP_OK;
}

int recip_report_product(const recip_report* report) {
  return report->product;
}

void recip_report_free(recip_report* report) { delete report; }

recip_status recip_rousseau(recip_ctx* ctx, const char* p, const char* q,
                            int* out_lhs, int* out_rhs) {
  return guarded(ctx, [&] {
    auto [lhs, rhs] = rousseau_check(parse_prime(p), parse_prime(q));
    *out_lhs = sign_int(lhs);
    *out_rhs = sign_int(rhs);
  });
}

recip_status recip_padic_sqrt(recip_ctx* ctx, const char* x, const char* p,
                              int precision, char** out) {
  return guarded(ctx, [&] {
    PadicApprox r = hensel_sqrt(parse_rational(x), parse_prime(p), precision);
    *out = dup_string(r.str());
  });
}

recip_status recip_is_square(recip_ctx* ctx, const char* x, const char* p,
                             int* out) {
  return guarded(ctx, [&] {
    *out = is_square(parse_rational(x), parse_prime(p)) ? 1 : 0;
  });
}

recip_status recip_oracle(recip_ctx* ctx, const char* a, const char* b,
                          const char* p, int* out_solvable,
                          char** out_witness) {
  return guarded(ctx, [&] {
    IsotropyWitness w =
        isotropy_oracle(parse_rational(a), parse_rational(b), parse_prime(p));
    *out_solvable = w.solvable ? 1 : 0;
    if (out_witness) {
      *out_witness = w.solvable ? dup_string("x = " + w.x->str() +
                                             ", y = " + w.y->str())
                                : nullptr;
    }
  });
}

recip_status recip_norm_test(recip_ctx* ctx, const char* a, const char* b,
                             const char* p, int* out_is_norm) {
  return guarded(ctx, [&] {
    *out_is_norm =
        norm_test(parse_rational(a), parse_rational(b), parse_prime(p)) ? 1
                                                                        : 0;
  });
}

recip_status recip_residue_symbol(recip_ctx* ctx, int m, const char* modulus,
                                  const char* arg, int* out_exponent) {
  return guarded(ctx, [&] {
    Ring ring = ring_for_degree(m);
    QuadInt pi = parse_quadint(modulus, ring);
    QuadInt alpha = parse_quadint(arg, ring);
    *out_exponent = residue_symbol(alpha, pi, m).k;
  });
}

recip_status recip_reciprocity_check(recip_ctx* ctx, int m, const char* pi,
                                     const char* theta, int* out_lhs,
                                     int* out_rhs) {
  return guarded(ctx, [&] {
    Ring ring = ring_for_degree(m);
    auto [lhs, rhs] = reciprocity_check(parse_quadint(pi, ring),
                                        parse_quadint(theta, ring), m);
    *out_lhs = lhs.k;
    *out_rhs = rhs.k;
  });
}

recip_status recip_verify(recip_ctx* ctx, const char* suite, long bound,
                          int* out_passed, long* out_cases,
                          char** out_first_failure) {
  return guarded(ctx, [&] {
    VerifyResult r = verify_suite(suite, bound);
    *out_passed = r.passed() ? 1 : 0;
    if (out_cases) *out_cases = r.cases;
    if (out_first_failure)
      *out_first_failure =
          r.failures.empty() ? nullptr : dup_string(r.failures.front());
  });
}

}  // extern "C"
