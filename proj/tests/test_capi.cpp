// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qclifford/qclifford.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qcl_string_free(s);
  return out;
}

struct Algebra {
  explicit Algebra(int n, int symmetrize = 0) { EXPECT_EQ(qcl_algebra_new(n, symmetrize, &p), QCL_OK); }
  ~Algebra() { qcl_algebra_free(p); }
  qcl_algebra* p = nullptr;
};

struct Mv {
  ~Mv() { qcl_multivector_free(p); }
  qcl_multivector* p = nullptr;
};

std::string eval_render(const Algebra& a, const char* expr) {
  Mv v;
  EXPECT_EQ(qcl_eval(a.p, expr, &v.p), QCL_OK) << qcl_last_error();
  char* s = nullptr;
  EXPECT_EQ(qcl_multivector_render(v.p, &s), QCL_OK);
  return take(s);
}

}  // namespace

TEST(CApi, Version) { EXPECT_STREQ(qcl_version(), "0.1.0"); }

TEST(CApi, EvalAndRender) {
  Algebra a(2);
  EXPECT_EQ(qcl_algebra_dim(a.p), 4);
  EXPECT_EQ(eval_render(a, "e1 _| (e3 ^ e4)"), "q*e4");
  EXPECT_EQ(eval_render(a, "~e13"), "(1-q)*1 - 1*e13");
  EXPECT_EQ(eval_render(a, "u*u"), "(1+q)*1");
  EXPECT_EQ(eval_render(a, "Ysym + Y12_3 + Y13_2 + Yasym"), "1*1");
}

TEST(CApi, ProductsMatchEvaluation) {
  Algebra a(2);
  Mv x, y, prod, w, c, r, expected;
  ASSERT_EQ(qcl_multivector_parse(a.p, "2*e1 + q*e3", &x.p), QCL_OK);
  ASSERT_EQ(qcl_multivector_parse(a.p, "1*e2 - 1/l*e34", &y.p), QCL_OK);
  ASSERT_EQ(qcl_product(a.p, x.p, y.p, &prod.p), QCL_OK);
  ASSERT_EQ(qcl_eval(a.p, "(2*e1 + q*e3) * (e2 - e34/l)", &expected.p), QCL_OK);
  int eq = -1;
  ASSERT_EQ(qcl_multivector_equal(prod.p, expected.p, &eq), QCL_OK);
  EXPECT_EQ(eq, 1);
  ASSERT_EQ(qcl_wedge(x.p, y.p, &w.p), QCL_OK);
  ASSERT_EQ(qcl_contract(a.p, x.p, y.p, &c.p), QCL_OK);
  ASSERT_EQ(qcl_reversion(a.p, prod.p, &r.p), QCL_OK);
  auto same = [&](const qcl_multivector* got, const char* expr) {
    Mv want;
    EXPECT_EQ(qcl_eval(a.p, expr, &want.p), QCL_OK) << qcl_last_error();
    int e = -1;
    EXPECT_EQ(qcl_multivector_equal(got, want.p, &e), QCL_OK);
    return e == 1;
  };
  EXPECT_TRUE(same(w.p, "(2*e1 + q*e3) ^ (e2 - e34/l)"));
  EXPECT_TRUE(same(c.p, "(2*e1 + q*e3) _| (e2 - e34/l)"));
  EXPECT_TRUE(same(r.p, "~((2*e1 + q*e3) * (e2 - e34/l))"));
}

TEST(CApi, RenderParsesBack) {
  Algebra a(2);
  for (const char* expr : {"b1*b2*b1", "C3", "Y13_2", "~(b1*b2)"}) {
    Mv v, back;
    ASSERT_EQ(qcl_eval(a.p, expr, &v.p), QCL_OK);
    char* s = nullptr;
    ASSERT_EQ(qcl_multivector_render(v.p, &s), QCL_OK);
    std::string text = take(s);
    ASSERT_EQ(qcl_multivector_parse(a.p, text.c_str(), &back.p), QCL_OK) << text;
    int eq = 0;
    ASSERT_EQ(qcl_multivector_equal(v.p, back.p, &eq), QCL_OK);
    EXPECT_EQ(eq, 1) << expr;
  }
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  Algebra a(2);
  Mv v;
  EXPECT_EQ(qcl_eval(a.p, "e1 + * e2", &v.p), QCL_ERR_PARSE);
  EXPECT_NE(std::string(qcl_last_error()).find("position"), std::string::npos);
  EXPECT_EQ(v.p, nullptr);
  EXPECT_EQ(qcl_eval(a.p, "e5", &v.p), QCL_ERR_PARSE);
  EXPECT_STREQ(qcl_last_error(), "blade index 5 outside 1..4 at position 0");
  EXPECT_EQ(qcl_eval(a.p, "e1 / 0", &v.p), QCL_ERR_PARSE);
  EXPECT_STREQ(qcl_last_error(), "division by zero at position 4");
  Mv x, y;
  int eq = 0;
  ASSERT_EQ(qcl_multivector_parse(a.p, "1*e1", &x.p), QCL_OK);
  Algebra big(3);
  ASSERT_EQ(qcl_multivector_parse(big.p, "1*e1", &y.p), QCL_OK);
  EXPECT_EQ(qcl_multivector_equal(x.p, y.p, &eq), QCL_ERR_DIMENSION);
  EXPECT_EQ(qcl_eval(nullptr, "e1", &v.p), QCL_ERR_INVALID_ARGUMENT);
  qcl_algebra* bad = nullptr;
  EXPECT_EQ(qcl_algebra_new(0, 0, &bad), QCL_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(qcl_status_string(QCL_ERR_GUARD), "guard failure");
}

TEST(CApi, SymmetrizedAlgebraHasGenerators) {
  Algebra a(2, 1);
  EXPECT_EQ(eval_render(a, "b1*b1"), "(1/4+q/2+q^2/4)*1");
  Mv v;
  EXPECT_EQ(qcl_eval(a.p, "Ysym", &v.p), QCL_ERR_PARSE);
}

TEST(CApi, VerifyAndReport) {
  qcl_verify_options opt{2, -1, nullptr, 0};
  qcl_report* r = nullptr;
  ASSERT_EQ(qcl_verify("hecke", &opt, &r), QCL_OK);
  qcl_summary s{};
  ASSERT_EQ(qcl_report_summary(r, &s), QCL_OK);
  EXPECT_EQ(s.fail, 0);
  EXPECT_EQ(s.expected_fail, 1);
  char* json = nullptr;
  ASSERT_EQ(qcl_report_render(r, "json", &json), QCL_OK);
  std::string text = take(json);
  EXPECT_EQ(text.rfind("{\n  \"suite\": \"hecke\"", 0), 0u);

  auto path = std::filesystem::temp_directory_path() / "qcl_capi_report.json";
  ASSERT_EQ(qcl_report_write(r, "json", path.c_str()), QCL_OK);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), text);
  std::filesystem::remove(path);

  EXPECT_EQ(qcl_report_write(r, "json", "/nonexistent-dir/x.json"), QCL_ERR_IO);
  char* bad = nullptr;
  EXPECT_EQ(qcl_report_render(r, "yaml", &bad), QCL_ERR_INVALID_ARGUMENT);
  qcl_report_free(r);
}

TEST(CApi, VerifyRejectsBadOptions) {
  qcl_report* r = nullptr;
  qcl_verify_options n3{3, -1, nullptr, 0};
  EXPECT_EQ(qcl_verify("young", &n3, &r), QCL_ERR_INVALID_ARGUMENT);
  qcl_verify_options bad_at{2, -1, "q=", 0};
  EXPECT_EQ(qcl_verify("hecke", &bad_at, &r), QCL_ERR_PARSE);
  EXPECT_EQ(r, nullptr);
}
