#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "adisc/adisc.h"

TEST_CASE("series lifecycle") {
  adisc_series* f = nullptr;
  REQUIRE(adisc_series_parse("[[0,0],[1,0]]", 8, &f) == ADISC_OK);
  CHECK(adisc_series_degree(f) == 8);
  double re = 0, im = 0;
  CHECK(adisc_series_coeff(f, 1, &re, &im) == ADISC_OK);
  CHECK(re == 1.0);
  char* json = nullptr;
  REQUIRE(adisc_series_to_json(f, 1, &json) == ADISC_OK);
  CHECK(std::string(json).find("[[0") == 0);
  adisc_string_free(json);
  adisc_series_free(f);
  adisc_series_free(nullptr);
}

TEST_CASE("errors carry a status and a message") {
  adisc_series* f = nullptr;
  CHECK(adisc_series_parse("[[1,2,3]]", 8, &f) == ADISC_ERR_PARSE);
  CHECK(f == nullptr);
  CHECK(std::strlen(adisc_last_error()) > 0);
  CHECK(adisc_series_parse(nullptr, 8, &f) == ADISC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(adisc_status_name(ADISC_ERR_NOT_SELF_MAP)) == "not a self-map");

  adisc_series* g = nullptr;
  REQUIRE(adisc_series_parse("z", 4, &g) == ADISC_OK);
  double v = 0;
  CHECK(adisc_norm(g, "hardy:p=0", &v, nullptr, nullptr) != ADISC_OK);
  CHECK(adisc_norm(g, "hardy:p=2", &v, nullptr, nullptr) == ADISC_OK);
  CHECK(*adisc_last_error() == '\0');
  adisc_series_free(g);
}

TEST_CASE("products, composition and norms") {
  const double re[] = {0.0, 1.0, 0.0, 0.0};
  adisc_series* z = nullptr;
  REQUIRE(adisc_series_from_coeffs(re, nullptr, 4, &z) == ADISC_OK);
  adisc_series* p = nullptr;
  REQUIRE(adisc_duhamel(z, z, &p) == ADISC_OK);
  double a = 0, b = 0;
  adisc_series_coeff(p, 2, &a, &b);
  CHECK(a == doctest::Approx(0.5));
  adisc_series* q = nullptr;
  REQUIRE(adisc_mul(z, z, &q) == ADISC_OK);
  adisc_series_coeff(q, 2, &a, &b);
  CHECK(a == 1.0);
  adisc_series* c = nullptr;
  int path = -1;
  REQUIRE(adisc_compose(q, z, &c, nullptr, &path) == ADISC_OK);
  CHECK(path == 0);
  CHECK(adisc_evaluate(z, 0.5, 0.0, &a, &b) == ADISC_OK);
  CHECK(a == 0.5);
  double v = 0, err = 0;
  const char* method = nullptr;
  CHECK(adisc_norm(z, "bergman:p=2,a=0", &v, &err, &method) == ADISC_OK);
  CHECK(v == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(method != nullptr);
  for (adisc_series* s : {z, p, q, c}) adisc_series_free(s);
}

TEST_CASE("multiplicativity and verification through the C interface") {
  adisc_mult_options o;
  adisc_mult_options_init(&o);
  o.duhamel = 1;
  int pass = 0;
  char* report = nullptr;
  REQUIRE(adisc_check_multiplicative("comp:z^2", "hardy:p=2", &o, ADISC_FORMAT_JSON, &pass, &report) == ADISC_OK);
  CHECK(pass == 0);
  adisc_string_free(report);
  CHECK(adisc_check_multiplicative("comp:2z", "hardy:p=2", &o, ADISC_FORMAT_MD, &pass, &report) ==
        ADISC_ERR_NOT_SELF_MAP);

  adisc_verify_options v;
  adisc_verify_options_init(&v);
  v.only = "ac01";
  v.timing = 0;
  int all = 0;
  REQUIRE(adisc_verify(&v, ADISC_FORMAT_JSON, &all, &report) == ADISC_OK);
  CHECK(all == 1);
  CHECK(std::string(report).find("ac01.monomial_rule") != std::string::npos);
  adisc_string_free(report);
}
