// Exercises the extern-C surface end to end, including error reporting
// and ownership of returned strings and report handles.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "recip.h"

namespace {

struct Ctx {
  recip_ctx* handle = recip_ctx_new();
  ~Ctx() { recip_ctx_free(handle); }
  operator recip_ctx*() { return handle; }
};

}  // namespace

TEST_CASE("legendre and characters") {
  Ctx ctx;
  int sign = 0;
  CHECK(recip_legendre(ctx, "2", "7", &sign) == RECIP_OK);
  CHECK(sign == 1);
  CHECK(recip_legendre(ctx, "1/5", "3", &sign) == RECIP_OK);
  CHECK(sign == -1);
  CHECK(recip_legendre_reciprocity(ctx, "3", "7", &sign) == RECIP_OK);
  CHECK(sign == -1);

  CHECK(recip_character(ctx, 4, "-1", &sign) == RECIP_OK);
  CHECK(sign == -1);
  CHECK(recip_character(ctx, 8, "-1", &sign) == RECIP_OK);
  CHECK(sign == 1);
  CHECK(recip_character(ctx, 5, "-1", &sign) == RECIP_EDOMAIN);
}

TEST_CASE("error codes and messages") {
  Ctx ctx;
  int sign = 0;
  CHECK(recip_legendre(ctx, "0", "7", &sign) == RECIP_EDOMAIN);
  CHECK(std::strlen(recip_last_error(ctx)) > 0);
  CHECK(recip_legendre(ctx, "nonsense", "7", &sign) == RECIP_EPARSE);
  CHECK(recip_legendre(ctx, "2", "6", &sign) == RECIP_EDOMAIN);
  // success clears the message
  CHECK(recip_legendre(ctx, "2", "7", &sign) == RECIP_OK);
  CHECK(std::strlen(recip_last_error(ctx)) == 0);
}

TEST_CASE("hilbert and product report") {
  Ctx ctx;
  int sign = 0;
  CHECK(recip_hilbert(ctx, "-1", "-1", "inf", &sign) == RECIP_OK);
  CHECK(sign == -1);
  CHECK(recip_hilbert(ctx, "-1", "-1", "2", &sign) == RECIP_OK);
  CHECK(sign == -1);
  CHECK(recip_hilbert(ctx, "0", "5", "3", &sign) == RECIP_EDOMAIN);

  recip_report* report = nullptr;
  REQUIRE(recip_product_check(ctx, "3", "5", &report) == RECIP_OK);
  REQUIRE(recip_report_size(report) == 4);
  CHECK(recip_report_product(report) == 1);
  const char* place = nullptr;
  const char* t = nullptr;
  recip_report_entry(report, 0, &place, &sign, &t);
  CHECK(std::string(place) == "inf");
  CHECK(sign == 1);
  CHECK(t == nullptr);
  recip_report_entry(report, 2, &place, &sign, &t);
  CHECK(std::string(place) == "3");
  CHECK(sign == -1);
  REQUIRE(t != nullptr);
  CHECK(std::string(t) == "1/5");
  CHECK(recip_report_entry(report, 9, &place, &sign, &t) == RECIP_EDOMAIN);
  recip_report_free(report);
}

TEST_CASE("rousseau, padic and oracle") {
  Ctx ctx;
  int lhs = 0, rhs = 0;
  CHECK(recip_rousseau(ctx, "3", "7", &lhs, &rhs) == RECIP_OK);
  CHECK(lhs == -1);
  CHECK(rhs == -1);
  CHECK(recip_rousseau(ctx, "3", "3", &lhs, &rhs) == RECIP_EDOMAIN);

  char* out = nullptr;
  REQUIRE(recip_padic_sqrt(ctx, "2", "7", 2, &out) == RECIP_OK);
  CHECK(std::string(out) == "10 + O(7^2)");
  recip_string_free(out);
  CHECK(recip_padic_sqrt(ctx, "3", "5", 4, &out) == RECIP_EDOMAIN);

  int flag = 0;
  CHECK(recip_is_square(ctx, "2", "7", &flag) == RECIP_OK);
  CHECK(flag == 1);

  int solvable = 0;
  char* witness = nullptr;
  REQUIRE(recip_oracle(ctx, "2", "2", "2", &solvable, &witness) == RECIP_OK);
  CHECK(solvable == 1);
  REQUIRE(witness != nullptr);
  CHECK(std::string(witness).find("x = ") == 0);
  recip_string_free(witness);
  witness = nullptr;
  REQUIRE(recip_oracle(ctx, "-1", "-1", "2", &solvable, &witness) == RECIP_OK);
  CHECK(solvable == 0);
  CHECK(witness == nullptr);

  int is_norm = 0;
  CHECK(recip_norm_test(ctx, "2", "3", "7", &is_norm) == RECIP_OK);
  CHECK(is_norm == 1);
}

TEST_CASE("residue symbols and reciprocity") {
  Ctx ctx;
  int exponent = -1;
  CHECK(recip_residue_symbol(ctx, 4, "3", "i", &exponent) == RECIP_OK);
  CHECK(exponent == 2);
  CHECK(recip_residue_symbol(ctx, 3, "2", "w", &exponent) == RECIP_OK);
  CHECK(exponent == 1);
  CHECK(recip_residue_symbol(ctx, 3, "1-w", "2", &exponent) == RECIP_EDOMAIN);

  int lhs = 0, rhs = 0;
  CHECK(recip_reciprocity_check(ctx, 3, "2+3w", "2", &lhs, &rhs) == RECIP_OK);
  CHECK(lhs == 1);
  CHECK(rhs == 1);
  CHECK(recip_reciprocity_check(ctx, 4, "-3", "-7", &lhs, &rhs) == RECIP_OK);
  CHECK(lhs == 0);
  CHECK(rhs == 0);
}

TEST_CASE("verify suites through the C API") {
  Ctx ctx;
  int passed = 0;
  long cases = 0;
  char* failure = nullptr;
  REQUIRE(recip_verify(ctx, "qr", 60, &passed, &cases, &failure) == RECIP_OK);
  CHECK(passed == 1);
  CHECK(cases > 0);
  CHECK(failure == nullptr);
  CHECK(recip_verify(ctx, "bogus", 0, &passed, &cases, &failure) ==
        RECIP_EDOMAIN);
}
