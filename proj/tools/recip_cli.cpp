// Command-line front end; talks to the library exclusively through the
// C interface in recip.h. Exit codes: 0 ok, 1 verification failed,
// 2 usage or domain error.

#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "recip.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct CtxDeleter {
  void operator()(recip_ctx* c) const { recip_ctx_free(c); }
};
using CtxPtr = std::unique_ptr<recip_ctx, CtxDeleter>;

struct StringDeleter {
  void operator()(char* s) const { recip_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

std::string root_str(int m, int k) {
  if (k == 0) return "1";
  if (m == 4) return k == 1 ? "i" : k == 2 ? "-1" : "-i";
  return "w^" + std::to_string(k);
}

json root_json(int m, int k) { return json{{"m", m}, {"k", k}}; }

void emit(bool as_json, const json& doc, const std::string& plain) {
  if (as_json)
    std::printf("%s\n", doc.dump().c_str());
  else
    std::printf("%s\n", plain.c_str());
}

int fail_usage(recip_ctx* ctx) {
  std::fprintf(stderr, "error: %s\n", recip_last_error(ctx));
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reciprocity-law calculator: quadratic characters, Hilbert "
               "symbols, p-adic oracles, power residue symbols"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON document on stdout");

  std::string arg_a, arg_b, arg_p, arg_q, arg_place, arg_x, arg_suite;
  std::string arg_mod, arg_arg, arg_pi, arg_theta;
  int arg_which = 0, arg_m = 0, arg_prec = 20;
  long arg_bound = 0;

  auto* legendre = app.add_subcommand("legendre", "Legendre character of a at the odd prime p");
  legendre->add_option("a", arg_a)->required();
  legendre->add_option("p", arg_p)->required();
  bool via_reciprocity = false;
  legendre->add_flag("--via-reciprocity", via_reciprocity,
                     "evaluate through the reciprocity descent instead of "
                     "Euler's criterion");

  auto* character = app.add_subcommand("character", "dyadic characters lambda_4, lambda_8 and their product");
  character->add_option("--which", arg_which, "4, 8 or 48")->required();
  character->add_option("a", arg_a)->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a,b)_v");
  hilbert->add_option("a", arg_a)->required();
  hilbert->add_option("b", arg_b)->required();
  hilbert->add_option("--place", arg_place, "inf or a prime")->required();

  auto* product = app.add_subcommand("product", "per-place symbol table and the product over all places");
  product->add_option("a", arg_a)->required();
  product->add_option("b", arg_b)->required();

  auto* rousseau = app.add_subcommand("rousseau", "group-product computation of quadratic reciprocity");
  rousseau->add_option("p", arg_p)->required();
  rousseau->add_option("q", arg_q)->required();

  auto* padic_sqrt = app.add_subcommand("padic-sqrt", "p-adic square root by Hensel lifting");
  padic_sqrt->add_option("x", arg_x)->required();
  padic_sqrt->add_option("-p", arg_p)->required();
  padic_sqrt->add_option("-N", arg_prec, "significant p-adic digits");

  auto* oracle = app.add_subcommand("oracle", "certified solvability of a x^2 + b y^2 = 1 in Q_p");
  oracle->add_option("a", arg_a)->required();
  oracle->add_option("b", arg_b)->required();
  oracle->add_option("-p", arg_p)->required();

  auto* norm_test = app.add_subcommand("norm-test", "is a a norm from Q_p(sqrt(b))?");
  norm_test->add_option("a", arg_a)->required();
  norm_test->add_option("b", arg_b)->required();
  norm_test->add_option("-p", arg_p)->required();

  auto* residue = app.add_subcommand("residue", "m-th power residue symbol");
  residue->add_option("--m", arg_m, "3 (Eisenstein) or 4 (Gaussian)")->required();
  residue->add_option("--mod", arg_mod, "prime modulus literal")->required();
  residue->add_option("--arg", arg_arg, "argument literal")->required();

  auto* reciprocity = app.add_subcommand("reciprocity", "empirical cubic/quartic reciprocity for primary primes");
  reciprocity->add_option("--m", arg_m)->required();
  reciprocity->add_option("--pi", arg_pi)->required();
  reciprocity->add_option("--theta", arg_theta)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", arg_suite,
                     "qr|product|oracle|rousseau|cubic|quartic|hensel|characters")
      ->required();
  verify->add_option("--bound", arg_bound, "sweep bound (0 = suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CtxPtr ctx(recip_ctx_new());
  json doc;
  doc["inputs"] = json::object();

  if (legendre->parsed()) {
    int sign = 0;
    recip_status st =
        via_reciprocity
            ? recip_legendre_reciprocity(ctx.get(), arg_a.c_str(),
                                         arg_p.c_str(), &sign)
            : recip_legendre(ctx.get(), arg_a.c_str(), arg_p.c_str(), &sign);
    if (st != RECIP_OK) return fail_usage(ctx.get());
    doc["command"] = "legendre";
    doc["inputs"] = {{"a", arg_a}, {"p", arg_p}};
    doc["result"] = sign;
    emit(as_json, doc, sign_str(sign));
    return kExitOk;
  }

  if (character->parsed()) {
    int sign = 0;
    if (recip_character(ctx.get(), arg_which, arg_a.c_str(), &sign) != RECIP_OK)
      return fail_usage(ctx.get());
    doc["command"] = "character";
    doc["inputs"] = {{"which", arg_which}, {"a", arg_a}};
    doc["result"] = sign;
    emit(as_json, doc, sign_str(sign));
    return kExitOk;
  }

  if (hilbert->parsed()) {
    int sign = 0;
    if (recip_hilbert(ctx.get(), arg_a.c_str(), arg_b.c_str(),
                      arg_place.c_str(), &sign) != RECIP_OK)
      return fail_usage(ctx.get());
    doc["command"] = "hilbert";
    doc["inputs"] = {{"a", arg_a}, {"b", arg_b}, {"place", arg_place}};
    doc["result"] = sign;
    emit(as_json, doc, sign_str(sign));
    return kExitOk;
  }

  if (product->parsed()) {
    recip_report* report = nullptr;
    if (recip_product_check(ctx.get(), arg_a.c_str(), arg_b.c_str(),
                            &report) != RECIP_OK)
      return fail_usage(ctx.get());
    doc["command"] = "product";
    doc["inputs"] = {{"a", arg_a}, {"b", arg_b}};
    doc["result"] = recip_report_product(report);
    doc["entries"] = json::array();
    std::string plain;
    for (int i = 0; i < recip_report_size(report); ++i) {
      const char* place = nullptr;
      const char* t = nullptr;
      int sign = 0;
      recip_report_entry(report, i, &place, &sign, &t);
      json entry{{"place", place}, {"symbol", sign}};
      if (t) entry["t"] = t;
      doc["entries"].push_back(entry);
      plain += std::string(place) + ": " + sign_str(sign) + "\n";
    }
    plain += "product: " + sign_str(recip_report_product(report));
    recip_report_free(report);
    emit(as_json, doc, plain);
    return kExitOk;
  }

  if (rousseau->parsed()) {
    int lhs = 0, rhs = 0;
    if (recip_rousseau(ctx.get(), arg_p.c_str(), arg_q.c_str(), &lhs, &rhs) !=
        RECIP_OK)
      return fail_usage(ctx.get());
    doc["command"] = "rousseau";
    doc["inputs"] = {{"p", arg_p}, {"q", arg_q}};
    doc["result"] = {{"lhs", lhs}, {"rhs", rhs}, {"equal", lhs == rhs}};
    emit(as_json, doc,
         "lhs = " + sign_str(lhs) + ", rhs = " + sign_str(rhs));
    return lhs == rhs ? kExitOk : kExitVerificationFailed;
  }

  if (padic_sqrt->parsed()) {
    char* out = nullptr;
    if (recip_padic_sqrt(ctx.get(), arg_x.c_str(), arg_p.c_str(), arg_prec,
                         &out) != RECIP_OK)
      return fail_usage(ctx.get());
    ApiString result(out);
    doc["command"] = "padic-sqrt";
    doc["inputs"] = {{"x", arg_x}, {"p", arg_p}, {"N", arg_prec}};
    doc["result"] = result.get();
    emit(as_json, doc, result.get());
    return kExitOk;
  }

  if (oracle->parsed()) {
    int solvable = 0;
    char* witness = nullptr;
    if (recip_oracle(ctx.get(), arg_a.c_str(), arg_b.c_str(), arg_p.c_str(),
                     &solvable, &witness) != RECIP_OK)
      return fail_usage(ctx.get());
    ApiString w(witness);
    doc["command"] = "oracle";
    doc["inputs"] = {{"a", arg_a}, {"b", arg_b}, {"p", arg_p}};
    doc["result"] = {{"solvable", solvable == 1}};
    std::string plain = solvable ? "solvable" : "not solvable";
    if (solvable && w) {
      doc["result"]["witness"] = w.get();
      plain += std::string("\n") + w.get();
    }
    emit(as_json, doc, plain);
    return kExitOk;
  }

  if (norm_test->parsed()) {
    int is_norm = 0;
    if (recip_norm_test(ctx.get(), arg_a.c_str(), arg_b.c_str(),
                        arg_p.c_str(), &is_norm) != RECIP_OK)
      return fail_usage(ctx.get());
    doc["command"] = "norm-test";
    doc["inputs"] = {{"a", arg_a}, {"b", arg_b}, {"p", arg_p}};
    doc["result"] = is_norm == 1;
    emit(as_json, doc, is_norm ? "true" : "false");
    return kExitOk;
  }

  if (residue->parsed()) {
    int exponent = 0;
    if (recip_residue_symbol(ctx.get(), arg_m, arg_mod.c_str(),
                             arg_arg.c_str(), &exponent) != RECIP_OK)
      return fail_usage(ctx.get());
    doc["command"] = "residue";
    doc["inputs"] = {{"m", arg_m}, {"mod", arg_mod}, {"arg", arg_arg}};
    doc["result"] = root_json(arg_m, exponent);
    emit(as_json, doc, root_str(arg_m, exponent));
    return kExitOk;
  }

  if (reciprocity->parsed()) {
    int lhs = 0, rhs = 0;
    if (recip_reciprocity_check(ctx.get(), arg_m, arg_pi.c_str(),
                                arg_theta.c_str(), &lhs, &rhs) != RECIP_OK)
      return fail_usage(ctx.get());
    doc["command"] = "reciprocity";
    doc["inputs"] = {{"m", arg_m}, {"pi", arg_pi}, {"theta", arg_theta}};
    doc["result"] = {{"lhs", root_json(arg_m, lhs)},
                     {"rhs", root_json(arg_m, rhs)},
                     {"equal", lhs == rhs}};
    emit(as_json, doc,
         "lhs = " + root_str(arg_m, lhs) + ", rhs = " + root_str(arg_m, rhs));
    return lhs == rhs ? kExitOk : kExitVerificationFailed;
  }

  if (verify->parsed()) {
    int passed = 0;
    long cases = 0;
    char* failure = nullptr;
    if (recip_verify(ctx.get(), arg_suite.c_str(), arg_bound, &passed, &cases,
                     &failure) != RECIP_OK)
      return fail_usage(ctx.get());
    ApiString f(failure);
    doc["command"] = "verify";
    doc["inputs"] = {{"suite", arg_suite}, {"bound", arg_bound}};
    doc["result"] = {{"passed", passed == 1}, {"cases", cases}};
    std::string plain = "suite " + arg_suite + ": " +
                        (passed ? "PASS" : "FAIL") + " (" +
                        std::to_string(cases) + " cases)";
    if (f) {
      doc["result"]["first_failure"] = f.get();
      plain += std::string("\nfirst failure: ") + f.get();
    }
    emit(as_json, doc, plain);
    return passed ? kExitOk : kExitVerificationFailed;
  }

  return kExitUsage;
}
