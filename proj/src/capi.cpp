#include "qclifford/qclifford.h"

#include <cstring>
#include <fstream>
#include <optional>

#include "qclifford/errors.hpp"
#include "qclifford/expr.hpp"
#include "qclifford/suites.hpp"

struct qcl_algebra {
  qcl::Algebra alg;
  qcl::SymbolTable symbols;
};

struct qcl_multivector {
  qcl::Multivector value;
};

struct qcl_report {
  qcl::Report value;
};

namespace {

thread_local std::string last_error;

qcl_status fail(qcl_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
qcl_status guard_call(F&& f) {
  try {
    f();
    return QCL_OK;
  } catch (const qcl::GuardFailure& e) {
    return fail(QCL_ERR_GUARD, e.what());
  } catch (const qcl::ParseError& e) {
    return fail(QCL_ERR_PARSE, e.what());
  } catch (const qcl::DimensionMismatch& e) {
    return fail(QCL_ERR_DIMENSION, e.what());
  } catch (const qcl::InvalidArgument& e) {
    return fail(QCL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const qcl::DivisionByZero& e) {
    return fail(QCL_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const qcl::NotInSpan& e) {
    return fail(QCL_ERR_NOT_IN_SPAN, e.what());
  } catch (const std::exception& e) {
    return fail(QCL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QCL_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw qcl::InvalidArgument(std::string(what) + " is null");
}

std::string render(const qcl::Report& r, const char* format) {
  std::string f = format ? format : "text";
  if (f == "json") return r.to_json();
  if (f == "text") return r.to_text();
  throw qcl::InvalidArgument("unknown format '" + f + "'");
}

}  // namespace

extern "C" {

const char* qcl_version(void) { return qcl::kVersion; }

const char* qcl_status_string(qcl_status status) {
  switch (status) {
    case QCL_OK: return "ok";
    case QCL_ERR_PARSE: return "parse error";
    case QCL_ERR_GUARD: return "guard failure";
    case QCL_ERR_DIMENSION: return "dimension mismatch";
    case QCL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QCL_ERR_DIVISION_BY_ZERO: return "division by zero";
    case QCL_ERR_NOT_IN_SPAN: return "not in span";
    case QCL_ERR_IO: return "i/o error";
    case QCL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qcl_last_error(void) { return last_error.c_str(); }

void qcl_string_free(char* s) { delete[] s; }

qcl_status qcl_algebra_new(int n, int symmetrize, qcl_algebra** out) {
  return guard_call([&] {
    require(out, "out");
    if (n < 1 || n > 8) throw qcl::InvalidArgument("n must be between 1 and 8");
    if (symmetrize) {
      qcl::Algebra alg(qcl::BilinearForm::hecke(n).symmetric_part());
      qcl::SymbolTable symbols;
      for (int i = 1; i <= n; ++i) symbols.emplace("b" + std::to_string(i), qcl::hecke_generator(alg, i));
      *out = new qcl_algebra{alg, std::move(symbols)};
    } else {
      qcl::HeckeContext ctx(n);
      *out = new qcl_algebra{ctx.algebra(), qcl::standard_symbols(ctx)};
    }
  });
}

void qcl_algebra_free(qcl_algebra* alg) { delete alg; }

int qcl_algebra_dim(const qcl_algebra* alg) { return alg ? alg->alg.dim() : 0; }

qcl_status qcl_multivector_parse(const qcl_algebra* alg, const char* text, qcl_multivector** out) {
  return guard_call([&] {
    require(alg, "algebra");
    require(text, "text");
    require(out, "out");
    *out = new qcl_multivector{qcl::parse_multivector(text, alg->alg.dim())};
  });
}

qcl_status qcl_eval(const qcl_algebra* alg, const char* expr, qcl_multivector** out) {
  return guard_call([&] {
    require(alg, "algebra");
    require(expr, "expression");
    require(out, "out");
    *out = new qcl_multivector{qcl::evaluate_expression(expr, alg->alg, alg->symbols)};
  });
}

qcl_status qcl_multivector_render(const qcl_multivector* v, char** out) {
  return guard_call([&] {
    require(v, "multivector");
    require(out, "out");
    *out = dup_string(v->value.to_string());
  });
}

qcl_status qcl_product(const qcl_algebra* alg, const qcl_multivector* a, const qcl_multivector* b,
                       qcl_multivector** out) {
  return guard_call([&] {
    require(alg, "algebra");
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new qcl_multivector{qcl::cl_mul(a->value, b->value, alg->alg)};
  });
}

qcl_status qcl_wedge(const qcl_multivector* a, const qcl_multivector* b, qcl_multivector** out) {
  return guard_call([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new qcl_multivector{qcl::wedge(a->value, b->value)};
  });
}

qcl_status qcl_contract(const qcl_algebra* alg, const qcl_multivector* a, const qcl_multivector* b,
                        qcl_multivector** out) {
  return guard_call([&] {
    require(alg, "algebra");
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new qcl_multivector{qcl::contract(a->value, b->value, alg->alg.form())};
  });
}

qcl_status qcl_reversion(const qcl_algebra* alg, const qcl_multivector* a, qcl_multivector** out) {
  return guard_call([&] {
    require(alg, "algebra");
    require(a, "a");
    require(out, "out");
    *out = new qcl_multivector{qcl::reversion(a->value, alg->alg)};
  });
}

qcl_status qcl_multivector_equal(const qcl_multivector* a, const qcl_multivector* b, int* out) {
  return guard_call([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    if (a->value.dim() != b->value.dim()) throw qcl::DimensionMismatch("multivectors of different dimension");
    *out = a->value == b->value ? 1 : 0;
  });
}

void qcl_multivector_free(qcl_multivector* v) { delete v; }

qcl_status qcl_verify(const char* target, const qcl_verify_options* options, qcl_report** out) {
  return guard_call([&] {
    require(target, "target");
    require(out, "out");
    qcl::SuiteOptions o;
    if (options) {
      o.n = options->n;
      o.eps = options->eps;
      o.symmetrize_b = options->symmetrize_b != 0;
      if (options->at) o.at = qcl::Point::parse(options->at);
    }
    *out = new qcl_report{qcl::run_suite(target, o)};
  });
}

qcl_status qcl_report_render(const qcl_report* report, const char* format, char** out) {
  return guard_call([&] {
    require(report, "report");
    require(out, "out");
    *out = dup_string(render(report->value, format));
  });
}

qcl_status qcl_report_write(const qcl_report* report, const char* format, const char* path) {
  std::string text;
  qcl_status st = guard_call([&] {
    require(report, "report");
    require(path, "path");
    text = render(report->value, format);
  });
  if (st != QCL_OK) return st;
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) return fail(QCL_ERR_IO, std::string("cannot write ") + path);
  return QCL_OK;
}

qcl_status qcl_report_summary(const qcl_report* report, qcl_summary* out) {
  return guard_call([&] {
    require(report, "report");
    require(out, "out");
    qcl::Summary s = report->value.summary();
    *out = {s.pass, s.fail, s.expected_fail};
  });
}

void qcl_report_free(qcl_report* report) { delete report; }

}  // extern "C"
