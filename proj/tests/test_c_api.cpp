#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <alphaharm/alphaharm.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <thread>

namespace {

const char* kStep = R"js({"pieces":[
  {"theta_start":0,"theta_end":"pi","kind":"const","payload":1},
  {"theta_start":"pi","theta_end":"2*pi","kind":"const","payload":0}]})js";

std::string take(char* s) {
  std::string out(s);
  ah_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("scalar wrappers and error codes") {
  double v = 0.0;
  CHECK(ah_kernel_eval(0.0, 0.5, 0.0, &v) == AH_OK);
  CHECK(v == doctest::Approx(3.0));
  CHECK(ah_c_alpha(2.0, &v) == AH_OK);
  CHECK(v == doctest::Approx(0.5));
  CHECK(ah_hyp2f1(1, 1, 2, 0.5, &v) == AH_OK);
  CHECK(v == doctest::Approx(2 * std::log(2.0)));
  CHECK(ah_gamma(0.0, &v) == AH_ERR_DOMAIN);
  CHECK(std::strlen(ah_last_error()) > 0);
  CHECK(ah_kernel_eval(-1.5, 0.0, 0.0, &v) == AH_ERR_DOMAIN);
  CHECK(ah_kernel_eval(1.0, 1.0, 0.0, &v) == AH_ERR_DOMAIN);
  CHECK(ah_hyp2f1(0.5, 0.5, 1.001, 1 - 1e-12, &v) == AH_ERR_ACCURACY);
  CHECK(ah_kernel_eval(1.0, 0.0, 0.0, nullptr) == AH_ERR_NULL);
  CHECK(ah_gamma(2.5, &v) == AH_OK);
  CHECK(std::string(ah_last_error()).empty());
  CHECK(std::string(ah_status_name(AH_ERR_PARSE)) == "parse error");
  int sign = 0;
  CHECK(ah_log_gamma(-0.5, &v, &sign) == AH_OK);
  CHECK(sign == -1);
}

TEST_CASE("last error is per thread") {
  double v = 0.0;
  REQUIRE(ah_gamma(0.0, &v) == AH_ERR_DOMAIN);
  std::string other;
  std::thread t([&] {
    double w = 0.0;
    ah_gamma(1.0, &w);
    other = ah_last_error();
  });
  t.join();
  CHECK(other.empty());
  CHECK(std::strlen(ah_last_error()) > 0);
}

TEST_CASE("boundary handles") {
  ah_boundary* f = nullptr;
  REQUIRE(ah_boundary_from_json(kStep, &f) == AH_OK);
  double re = 0, im = 0, lre = 0, lim = 0, rre = 0, rim = 0;
  CHECK(ah_boundary_eval(f, 0.5, &re, &im) == AH_OK);
  CHECK(re == 1.0);
  CHECK(ah_boundary_limits(f, std::numbers::pi, &lre, &lim, &rre, &rim) == AH_OK);
  CHECK(lre == 1.0);
  CHECK(rre == 0.0);
  size_t count = 0;
  double jumps[1];
  CHECK(ah_boundary_jumps(f, jumps, 1, &count) == AH_OK);
  CHECK(count == 2);
  CHECK(jumps[0] == 0.0);
  char* text = nullptr;
  REQUIRE(ah_boundary_to_json(f, &text) == AH_OK);
  const std::string dumped = take(text);
  ah_boundary* g = nullptr;
  REQUIRE(ah_boundary_from_json(dumped.c_str(), &g) == AH_OK);
  REQUIRE(ah_boundary_to_json(g, &text) == AH_OK);
  CHECK(take(text) == dumped);
  ah_boundary_free(g);
  ah_boundary_free(f);
  ah_boundary_free(nullptr);

  CHECK(ah_boundary_from_json("{", &f) == AH_ERR_PARSE);
  CHECK(ah_boundary_from_json(R"js({"pieces":[{"theta_start":0,"theta_end":1,"kind":"const","payload":1}]})js",
                              &f) == AH_ERR_ARGUMENT);
}

TEST_CASE("solver through the C API") {
  ah_boundary* one = nullptr;
  REQUIRE(ah_boundary_constant(1.0, 0.0, &one) == AH_OK);
  double ure = 0, uim = 0;
  CHECK(ah_extend_quadrature(2.0, one, 0.0, 0.0, 0, &ure, &uim) == AH_OK);
  CHECK(ure == doctest::Approx(0.5));
  ah_series* s = nullptr;
  REQUIRE(ah_dirichlet_solve(2.0, one, 64, &s) == AH_OK);
  int n = -1;
  CHECK(ah_series_max_index(s, &n) == AH_OK);
  CHECK(n == 0);
  CHECK(ah_series_eval(s, 0.0, 0.0, &ure, &uim) == AH_OK);
  CHECK(ure == doctest::Approx(0.5));
  double res = 1;
  int confirmed = 0;
  CHECK(ah_pde_residual_series(s, 0.3, 0.1, 1e-3, &res, &confirmed) == AH_OK);
  CHECK(res < 1e-5);
  CHECK(ah_pde_residual_kernel(1.0, 0.2, 0.2, 1e-3, &res, nullptr) == AH_OK);
  CHECK(res < 1e-5);
  CHECK(ah_pde_residual_quadrature(1.0, one, 0.2, 0.2, 1e-3, &res, nullptr) == AH_OK);
  CHECK(res < 1e-5);
  ah_series_free(s);

  ah_grid_options o;
  ah_grid_options_default(&o);
  o.method = AH_METHOD_BOTH;
  ah_report* rep = nullptr;
  REQUIRE(ah_extend_grid(1.0, one, &o, &rep) == AH_OK);
  CHECK(ah_report_passed(rep) == 1);
  char* csv = nullptr;
  REQUIRE(ah_report_to_csv(rep, &csv) == AH_OK);
  CHECK(take(csv).rfind("re,im,u_re,u_im,discrepancy\n", 0) == 0);
  ah_report_free(rep);
  o.r_max = 1.0;
  CHECK(ah_extend_grid(1.0, one, &o, &rep) == AH_ERR_DOMAIN);
  ah_boundary_free(one);
}

TEST_CASE("analysis through the C API") {
  ah_boundary* f = nullptr;
  REQUIRE(ah_boundary_from_json(kStep, &f) == AH_OK);
  const double gammas[] = {std::numbers::pi / 2};
  ah_report* rep = nullptr;
  REQUIRE(ah_probe_jump(0.0, f, 0.0, gammas, 1, nullptr, 0, 0.02, &rep) == AH_OK);
  CHECK(ah_report_passed(rep) == 1);
  ah_report_free(rep);
  ah_scan_options so;
  ah_scan_options_default(&so);
  CHECK(ah_subharmonic_scan(1.0, f, &so, &rep) == AH_OK);
  ah_report_free(rep);
  ah_boundary_free(f);

  double lo = 0, hi = 0;
  CHECK(ah_radius_bracket(3.0, &lo, &hi) == AH_OK);
  CHECK(0.5 * (lo + hi) == doctest::Approx(1.0 / 3).epsilon(1e-9));
  CHECK(ah_radius_bracket(0.0, &lo, &hi) == AH_ERR_ARGUMENT);
  double c = 0;
  CHECK(ah_riesz_fejer_constant(0.0, 2.0, &c) == AH_OK);
  CHECK(c == doctest::Approx(1.0));
  CHECK(ah_riesz_fejer_constant(0.5, 2.0, &c) == AH_ERR_DOMAIN);
  ah_riesz_options ro;
  ah_riesz_options_default(&ro);
  ro.alpha = -0.25;
  CHECK(ah_riesz_fejer_trials(&ro, 3, 7, nullptr, 0, 1, &rep) == AH_OK);
  CHECK(ah_report_passed(rep) == 1);
  char* json = nullptr;
  REQUIRE(ah_report_summary_json(rep, &json) == AH_OK);
  CHECK(take(json).find("min_margin") != std::string::npos);
  ah_report_free(rep);
  double angle = 0;
  CHECK(ah_parse_angle("3*pi/4", &angle) == AH_OK);
  CHECK(angle == doctest::Approx(0.75 * std::numbers::pi));
  CHECK(ah_parse_angle("t", &angle) == AH_ERR_PARSE);
}

TEST_CASE("verify through the C API") {
  char* json = nullptr;
  int passed = 0;
  REQUIRE(ah_verify("kernel", 7, 0.0, 1, &json, &passed) == AH_OK);
  CHECK(passed == 1);
  CHECK(take(json).find("\"kind\": \"verify\"") != std::string::npos);
  REQUIRE(ah_verify("kernel", 7, 1e-3, 1, &json, &passed) == AH_OK);
  CHECK(passed == 0);
  ah_string_free(json);
  CHECK(ah_verify("bogus", 7, 0.0, 1, nullptr, &passed) == AH_ERR_ARGUMENT);
  CHECK(ah_verify(nullptr, 7, 0.0, 1, nullptr, &passed) == AH_ERR_NULL);
}
