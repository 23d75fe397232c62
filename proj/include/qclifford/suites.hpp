#pragma once

// Verification suites behind `qclifford verify`.

#include <optional>
#include <string>

#include "qclifford/expr.hpp"
#include "qclifford/hecke.hpp"
#include "qclifford/report.hpp"

namespace qcl {

struct SuiteOptions {
  int n = 2;
  int eps = -1;
  std::optional<Point> at;
  bool symmetrize_b = false;
};

/// target: clifford-kernel, hecke, young, versor or all. Throws
/// InvalidArgument for an unknown target or an unsupported n / eps.
Report run_suite(const std::string& target, const SuiteOptions& options);

/// b1..bn; for n = 2 also Ysym, Y12_3, Y13_2, Yasym, u = e1 + e3 and C3.
SymbolTable standard_symbols(const HeckeContext& ctx);

}  // namespace qcl
