// qclifford command line: `verify` runs a suite, `eval` evaluates an expression.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "qclifford/qclifford.h"

namespace {

constexpr int kExitError = 2;

int report_error(qcl_status st) {
  std::cerr << "qclifford: " << qcl_status_string(st) << ": " << qcl_last_error() << "\n";
  return kExitError;
}

struct VerifyArgs {
  std::string target;
  int n = 2;
  int eps = -1;
  std::optional<std::string> at;
  bool symmetrize_b = false;
  std::string format = "text";
  std::optional<std::string> out;
};

int run_verify(const VerifyArgs& a) {
  qcl_verify_options opt{a.n, a.eps, a.at ? a.at->c_str() : nullptr, a.symmetrize_b ? 1 : 0};
  qcl_report* report = nullptr;
  if (qcl_status st = qcl_verify(a.target.c_str(), &opt, &report); st != QCL_OK) return report_error(st);

  std::optional<std::string> path = a.out;
  if (!path) {
    if (const char* dir = std::getenv("QCLIFFORD_OUT_DIR"); dir && *dir) {
      std::filesystem::path p(dir);
      std::error_code ec;
      std::filesystem::create_directories(p, ec);
      path = (p / (a.target + (a.format == "json" ? ".json" : ".txt"))).string();
    }
  }
  qcl_status st;
  if (path) {
    st = qcl_report_write(report, a.format.c_str(), path->c_str());
  } else {
    char* text = nullptr;
    st = qcl_report_render(report, a.format.c_str(), &text);
    if (st == QCL_OK) std::cout << text;
    qcl_string_free(text);
  }
  qcl_summary summary{};
  if (st == QCL_OK) st = qcl_report_summary(report, &summary);
  qcl_report_free(report);
  if (st != QCL_OK) return report_error(st);
  if (path)
    std::cerr << a.target << ": " << summary.pass << " pass, " << summary.fail << " fail, " << summary.expected_fail
              << " expected-fail -> " << *path << "\n";
  return summary.fail == 0 ? 0 : 1;
}

int run_eval(const std::string& expr, int n) {
  qcl_algebra* alg = nullptr;
  if (qcl_status st = qcl_algebra_new(n, 0, &alg); st != QCL_OK) return report_error(st);
  qcl_multivector* v = nullptr;
  char* text = nullptr;
  qcl_status st = qcl_eval(alg, expr.c_str(), &v);
  if (st == QCL_OK) st = qcl_multivector_render(v, &text);
  if (st == QCL_OK) std::cout << text << "\n";
  qcl_string_free(text);
  qcl_multivector_free(v);
  qcl_algebra_free(alg);
  return st == QCL_OK ? 0 : report_error(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Clifford and Hecke algebra identities"};
  app.set_version_flag("--version", std::string(qcl_version()));
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("target", va.target, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"clifford-kernel", "hecke", "young", "versor", "all"}));
  verify->add_option("--n", va.n, "Number of generators")->capture_default_str();
  verify->add_option("--eps", va.eps, "Sign epsilon, +1 or -1")->check(CLI::IsMember({-1, 1}))->capture_default_str();
  verify->add_option("--at", va.at, "Specialize at a point, e.g. q=1,l=1");
  verify->add_flag("--symmetrize-b", va.symmetrize_b, "Replace B by its symmetric part");
  verify->add_option("--format", va.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("--out", va.out, "Write the report to this file");

  std::string expr;
  int eval_n = 2;
  auto* eval = app.add_subcommand("eval", "Evaluate a multivector expression");
  eval->add_option("expr", expr, "Expression")->required();
  eval->add_option("--n", eval_n, "Number of generators")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }
  if (*verify) return run_verify(va);
  return run_eval(expr, eval_n);
}
