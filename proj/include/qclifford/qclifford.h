#ifndef QCLIFFORD_H
#define QCLIFFORD_H

/* C interface to the qclifford kernel. Every handle is opaque and owned by the
 * caller; strings returned through char** are released with qcl_string_free.
 * On failure a function returns a nonzero qcl_status and qcl_last_error()
 * describes it (per thread, valid until the next failing call). */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QCL_API __declspec(dllexport)
#else
#define QCL_API __attribute__((visibility("default")))
#endif

typedef enum qcl_status {
  QCL_OK = 0,
  QCL_ERR_PARSE = 1,
  QCL_ERR_GUARD = 2,
  QCL_ERR_DIMENSION = 3,
  QCL_ERR_INVALID_ARGUMENT = 4,
  QCL_ERR_DIVISION_BY_ZERO = 5,
  QCL_ERR_NOT_IN_SPAN = 6,
  QCL_ERR_IO = 7,
  QCL_ERR_INTERNAL = 8
} qcl_status;

typedef struct qcl_algebra qcl_algebra;
typedef struct qcl_multivector qcl_multivector;
typedef struct qcl_report qcl_report;

typedef struct qcl_verify_options {
  int n;
  int eps;            /* +1 or -1 */
  const char* at;     /* "q=1,l=1", or NULL for symbolic */
  int symmetrize_b;
} qcl_verify_options;

typedef struct qcl_summary {
  int pass;
  int fail;
  int expected_fail;
} qcl_summary;

QCL_API const char* qcl_version(void);
QCL_API const char* qcl_status_string(qcl_status status);
QCL_API const char* qcl_last_error(void);
QCL_API void qcl_string_free(char* s);

/* Cl(V, B) for the n-generator Hecke form, or its symmetric part G when
 * `symmetrize` is nonzero. */
QCL_API qcl_status qcl_algebra_new(int n, int symmetrize, qcl_algebra** out);
QCL_API void qcl_algebra_free(qcl_algebra* alg);
QCL_API int qcl_algebra_dim(const qcl_algebra* alg);

/* Canonical text, as produced by qcl_multivector_render. */
QCL_API qcl_status qcl_multivector_parse(const qcl_algebra* alg, const char* text, qcl_multivector** out);
/* Expression with b1..bn, and for n = 2 also Ysym, Y12_3, Y13_2, Yasym, u, C3. */
QCL_API qcl_status qcl_eval(const qcl_algebra* alg, const char* expr, qcl_multivector** out);
QCL_API qcl_status qcl_multivector_render(const qcl_multivector* v, char** out);
QCL_API qcl_status qcl_product(const qcl_algebra* alg, const qcl_multivector* a, const qcl_multivector* b,
                               qcl_multivector** out);
QCL_API qcl_status qcl_wedge(const qcl_multivector* a, const qcl_multivector* b, qcl_multivector** out);
QCL_API qcl_status qcl_contract(const qcl_algebra* alg, const qcl_multivector* a, const qcl_multivector* b,
                                qcl_multivector** out);
QCL_API qcl_status qcl_reversion(const qcl_algebra* alg, const qcl_multivector* a, qcl_multivector** out);
QCL_API qcl_status qcl_multivector_equal(const qcl_multivector* a, const qcl_multivector* b, int* out);
QCL_API void qcl_multivector_free(qcl_multivector* v);

/* target: clifford-kernel, hecke, young, versor, all. */
QCL_API qcl_status qcl_verify(const char* target, const qcl_verify_options* options, qcl_report** out);
/* format: "text" or "json". */
QCL_API qcl_status qcl_report_render(const qcl_report* report, const char* format, char** out);
QCL_API qcl_status qcl_report_write(const qcl_report* report, const char* format, const char* path);
QCL_API qcl_status qcl_report_summary(const qcl_report* report, qcl_summary* out);
QCL_API void qcl_report_free(qcl_report* report);

#ifdef __cplusplus
}
#endif

#endif /* QCLIFFORD_H */
