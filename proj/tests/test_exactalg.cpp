#include <doctest.h>

#include "skein/error.hpp"
#include "skein/exactalg/laurent.hpp"
#include "skein/exactalg/phi.hpp"
#include "skein/exactalg/poly_zw.hpp"
#include "skein/exactalg/series.hpp"

using namespace skein;

TEST_CASE("rationals stay in lowest terms") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(int_pow(-2, 5) == -32);
}

TEST_CASE("laurent mirror and products") {
  const LaurentPoly a = LaurentPoly::t() + LaurentPoly::monomial(-3, Rational(2));
  CHECK(a.mirror().coeff(3) == 2);
  CHECK(a.mirror().coeff(-1) == 1);
  CHECK((a * a).coeff(-2) == 4);
  CHECK(a.pow(0) == LaurentPoly(Rational(1)));
}

TEST_CASE("t = e^h substitution") {
  // -t^2 - t^-2 = -2 - 4h^2 - (4/3)h^4 - ...
  const LaurentPoly loop = -(LaurentPoly::monomial(2) + LaurentPoly::monomial(-2));
  const TruncSeries s = laurent_to_series(loop, 4);
  CHECK(s.coeff(0) == -2);
  CHECK(is_zero(s.coeff(1)));
  CHECK(s.coeff(2) == -4);
  CHECK(s.coeff(4) == make_rational(-4, 3));
  CHECK(s.sign_alternated() == s);
}

TEST_CASE("phi closed form") {
  CHECK(phi_coeff(0, 3) == -8);
  CHECK(phi_coeff(1, 1) == -4);
  CHECK(phi_coeff(1, 2) == 16);
  CHECK(phi_coeff(0, 0) == 1);
  CHECK(is_zero(phi_coeff(2, 0)));
  for (unsigned i = 0; i <= 6; ++i) {
    for (unsigned j = 0; j <= 4; ++j) CHECK(phi_coeff(j, i) == phi_series_oracle(j, i));
  }
}

TEST_CASE("bivariate polynomials") {
  const PolyZW p = parse_poly_zw("w^2 - z*w + 1/2*z + 3");
  CHECK(p.total_degree() == 2);
  CHECK(p.coeff(1, 1) == -1);
  CHECK(p.constant_term() == 3);
  CHECK(p.homogeneous_part(1) == parse_poly_zw("1/2*z"));
  CHECK(parse_poly_zw(p.to_string()) == p);
  CHECK(p.swapped().coeff(2, 0) == 1);
  CHECK_THROWS_AS(parse_poly_zw("w^"), Error);
}

TEST_CASE("divided power product") {
  // w * w = 2 w^2, z w * z = 2 z^2 w.
  CHECK(divided_power_product(PolyZW::w(), PolyZW::w()) == parse_poly_zw("2*w^2"));
  CHECK(divided_power_product(PolyZW::monomial(1, 1), PolyZW::z()) == parse_poly_zw("2*z^2*w"));
  CHECK(divided_power_product(PolyZW(Rational(3)), PolyZW::z()) == parse_poly_zw("3*z"));
}
