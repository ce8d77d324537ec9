#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "adisc/error.hpp"
#include "adisc/harness.hpp"
#include "adisc/text_io.hpp"

using namespace adisc;

TEST_CASE("json series") {
  const Series f = parse_series_json("[[0,0],[1,0],[0.5,-2]]");
  CHECK(f.degree() == 2);
  CHECK(f[2] == Complex(0.5, -2.0));
  CHECK(parse_series_json("[1, 2.5]")[1] == Complex(2.5));
  CHECK_THROWS_AS(parse_series_json("[[1,2,3]]"), Error);
  CHECK_THROWS_AS(parse_series_json("{"), Error);
  CHECK_THROWS_AS(parse_series_json("[]"), Error);
}

TEST_CASE("shorthand series") {
  CHECK(parse_series_shorthand("z^7")[7] == Complex(1.0));
  const Series f = parse_series_shorthand("0.5*z + 0.1*z^3 - 2");
  CHECK(f[0] == Complex(-2.0));
  CHECK(f[1] == Complex(0.5));
  CHECK(f[3] == Complex(0.1));
  CHECK(parse_series_shorthand("(0.3,-0.2)*z^2")[2] == Complex(0.3, -0.2));
  CHECK(parse_series_shorthand("0.5z")[1] == Complex(0.5));
  CHECK(parse_series_shorthand("-z")[1] == Complex(-1.0));
  CHECK_THROWS_AS(parse_series_shorthand("z^"), Error);
  CHECK_THROWS_AS(parse_series_shorthand("w^2"), Error);
}

TEST_CASE("parse pads to the working degree") {
  CHECK(parse_series("z", 64).degree() == 64);
  CHECK(parse_series("z^80", 64).degree() == 80);
}

TEST_CASE("series read from a file") {
  const char* path = "adisc_test_series.json";
  {
    std::ofstream f(path);
    f << "[[0,0],[0,1]]";
  }
  CHECK(parse_series(path, 4)[1] == Complex(0.0, 1.0));
  std::remove(path);
}

TEST_CASE("json round trip") {
  const Series f({1.0, Complex(0.25, -3.0), 0.0, 0.0});
  CHECK(parse_series_json(series_to_json(f, true)).degree() == 1);
  CHECK(parse_series_json(series_to_json(f)) == f);
}

TEST_CASE("operators") {
  CHECK(std::holds_alternative<Composition>(parse_operator("comp:0.5z").variant()));
  CHECK(std::holds_alternative<Multiplication>(parse_operator("mult:1+z").variant()));
  CHECK(std::holds_alternative<BoundaryEval>(parse_operator("bdry-eval:c=1,0").variant()));
  CHECK(std::holds_alternative<PointEval>(parse_operator("point-eval:a=0.5,0").variant()));
  CHECK(parse_complex("0.5,-1") == Complex(0.5, -1.0));
  CHECK_THROWS_AS(parse_operator("rotate:1"), Error);
  CHECK_THROWS_AS(parse_operator("matrix:/nonexistent/m.json"), Error);
}

TEST_CASE("multiplicativity reports") {
  MultCheckOptions o;
  o.duhamel = true;
  const MultCheckOutcome a = check_multiplicative("comp:0.5z", "hardy:p=2", o, Format::Markdown);
  CHECK(a.pass);
  const MultCheckOutcome b = check_multiplicative("comp:z^2", "hardy:p=2", o, Format::Json);
  CHECK_FALSE(b.pass);
  CHECK(b.text.find("\"f\": \"z\"") != std::string::npos);
  CHECK(check_multiplicative("comp:z^2", "hardy:p=2", o, Format::Markdown).text.find("(z, z)") != std::string::npos);
  o.duhamel = false;
  o.trials = 10;
  const MultCheckOutcome c = check_multiplicative("bdry-eval:c=1,0", "sup", o, Format::Markdown);
  CHECK(c.pass);
  CHECK(c.text.find("unimodular") != std::string::npos);
}
