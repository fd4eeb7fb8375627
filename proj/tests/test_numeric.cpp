#include <doctest.h>

#include <cmath>

#include "bajra/error.hpp"
#include "bajra/expr.hpp"
#include "bajra/numeric.hpp"

using namespace bajra;

TEST_CASE("compensated sum recovers cancelled terms") {
  CompensatedSum s;
  s.add(1e16);
  s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1.0);
}

TEST_CASE("close uses relative tolerance with an absolute floor") {
  CHECK(close(1.0, 1.0 + 1e-10));
  CHECK_FALSE(close(1.0, 1.0 + 1e-8));
  CHECK(close(0.0, 1e-13));
  CHECK_FALSE(close(0.0, 1e-11));
}

TEST_CASE("find_root") {
  CHECK(find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(find_root([](double x) { return std::cos(x) - x; }, 0.0, 1.0) ==
        doctest::Approx(0.7390851332151607).epsilon(1e-13));
  // flat near the root
  CHECK(find_root([](double x) { return std::pow(x - 1.0, 3); }, 0.0, 3.0) ==
        doctest::Approx(1.0).epsilon(1e-4));
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 2.0), Error);

  RootOptions tight;
  tight.max_iter = 2;
  tight.abs_tol = tight.rel_tol = 0.0;
  CHECK_THROWS_AS(find_root([](double x) { return std::exp(x) - 5.0; }, -50.0, 50.0, tight),
                  Error);
}

TEST_CASE("expression grammar") {
  CHECK(Expression::parse("x")(3.0) == 3.0);
  CHECK(Expression::parse("2*x + 1")(3.0) == 7.0);
  CHECK(Expression::parse("x^2 - x")(3.0) == 6.0);
  CHECK(Expression::parse("2^3^2")(0.0) == 512.0);
  CHECK(Expression::parse("-x^2")(3.0) == -9.0);
  CHECK(Expression::parse("x^-1")(4.0) == 0.25);
  CHECK(Expression::parse("ln(x) / 2")(std::exp(4.0)) == doctest::Approx(2.0));
  CHECK(Expression::parse("exp(ln(x))")(5.0) == doctest::Approx(5.0));
  CHECK(Expression::parse("(x+1)*(x-1)")(3.0) == 8.0);
  CHECK(Expression::parse("1.5e1")(0.0) == 15.0);
  CHECK_THROWS_AS(Expression::parse("x +"), Error);
  CHECK_THROWS_AS(Expression::parse("sin(x)"), Error);
  CHECK_THROWS_AS(Expression::parse("(x"), Error);
  CHECK_THROWS_AS(Expression::parse("x2"), Error);
}
