#include <cstdint>
#include <limits>
#include <sstream>

#include <doctest.h>

#include "graft_moments/error.hpp"
#include "graft_moments/rational.hpp"

using graft_moments::ErrorKind;
using graft_moments::Rational;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const graft_moments::Error& e) {
    return e.kind();
  }
  FAIL("expected graft_moments::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("rationals reduce and keep the sign on the numerator") {
  Rational r(6, -8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(0, 7).denominator() == 1);
}

TEST_CASE("arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(a > b);
  CHECK(Rational(7, 16).to_double() == doctest::Approx(0.4375));
}

TEST_CASE("string round trip uses p/q, integers as p/1") {
  CHECK(Rational(49, 16).str() == "49/16");
  CHECK(Rational(784).str() == "784/1");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  std::ostringstream os;
  os << Rational(-2, 6);
  CHECK(os.str() == "-1/3");
}

TEST_CASE("bad input and overflow throw") {
  CHECK(kind_of([] { Rational(1, 0); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([] { Rational(1) / Rational(0); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([] { Rational::parse("1/x"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { Rational::parse(""); }) == ErrorKind::ParseError);
  const auto big = Rational(std::numeric_limits<std::int64_t>::max());
  CHECK(kind_of([&] { (void)(big * Rational(2)); }) == ErrorKind::Overflow);
  CHECK(kind_of([&] { (void)(big + Rational(1)); }) == ErrorKind::Overflow);
  // Intermediate products may exceed 64 bits as long as the reduced result fits.
  const Rational huge(std::numeric_limits<std::int64_t>::max() / 3, 7);
  CHECK(huge * Rational(7, std::numeric_limits<std::int64_t>::max() / 3) == Rational(1));
}
