#include <doctest.h>

#include "support.hpp"
#include "svlie/algebra.hpp"
#include "svlie/error.hpp"

using namespace svlie;
using namespace testing_support;

TEST_CASE("half integers") {
  CHECK(half(3).str() == "3/2");
  CHECK(half(-3).str() == "-3/2");
  CHECK(HalfInt::integer(-4).str() == "-4");
  CHECK((half(1) + half(1)) == HalfInt::integer(1));
  CHECK(half(-5).abs() == half(5));
  CHECK(half(1).is_half_odd());
  CHECK_FALSE(HalfInt::integer(2).is_half_odd());
  CHECK(half(3).to_rational() == make_rational(3, 2));
}

TEST_CASE("basis vectors enforce index parity") {
  CHECK_NOTHROW(BasisVector::Y(half(1)));
  CHECK_THROWS_AS(BasisVector(Kind::Y, HalfInt::integer(1)), Error);
  CHECK_THROWS_AS(BasisVector(Kind::L, half(1)), Error);
  CHECK_THROWS_AS(BasisVector(Kind::M, half(-3)), Error);
  try {
    BasisVector(Kind::L, half(1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidBasis);
  }
}

TEST_CASE("window basis size and generators") {
  // L and M for 2N+1 indices, Y for 2N half-odd indices
  CHECK(window_basis(HalfInt::integer(0)).size() == 2);
  CHECK(window_basis(HalfInt::integer(3)).size() == 7 + 7 + 6);
  CHECK(generating_set().size() == 5);
  const auto shell = shell_order(HalfInt::integer(2));
  CHECK(shell.size() == window_basis(HalfInt::integer(2)).size());
  CHECK(shell.front().index().is_zero());
}

TEST_CASE("bracket golden values") {
  auto br = [](const char* a, const char* b) { return format(bracket(E(a), E(b))); };
  CHECK(br("L[1]", "L[-1]") == "-2 * L[0]");
  CHECK(br("L[2]", "L[-1]") == "-3 * L[1]");
  CHECK(br("L[1]", "L[-2]") == "-3 * L[-1]");
  CHECK(br("L[2]", "L[-2]") == "-4 * L[0]");
  CHECK(br("L[2]", "Y[-1/2]") == "-3/2 * Y[3/2]");
  CHECK(br("L[-2]", "Y[3/2]") == "5/2 * Y[-1/2]");
  CHECK(br("Y[-1/2]", "Y[1/2]") == "M[0]");
  CHECK(br("L[1]", "M[2]") == "2 * M[3]");
  CHECK(br("M[1]", "Y[1/2]") == "0");
  CHECK(br("M[3]", "M[-1]") == "0");
  CHECK(br("L[0]", "L[0]") == "0");
}

TEST_CASE("bracket is bilinear on elements") {
  const Element x = E("2 * L[1] - Y[1/2]");
  const Element y = E("L[-1] + 3 * Y[1/2]");
  // [L_1, Y_{1/2}] and [Y_{1/2}, Y_{1/2}] vanish
  CHECK(bracket(x, y) == E("-4 * L[0] + Y[-1/2]"));
}

TEST_CASE("antisymmetry and Jacobi on a window") {
  const auto basis = window_basis(HalfInt::integer(3));
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      const Element ab = bracket(element(a), element(b));
      CHECK(ab == -bracket(element(b), element(a)));
      CHECK(is_homogeneous(ab));
      if (!ab.is_zero()) CHECK(key_degree(ab.begin()->first) == a.degree() + b.degree());
    }
  }
  int checked = 0;
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      for (const auto& c : basis) {
        const Element x = element(a), y = element(b), z = element(c);
        const Element j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        if (!j.is_zero()) FAIL("Jacobi fails at " << format(a) << ", " << format(b) << ", " << format(c));
        ++checked;
      }
    }
  }
  CHECK(checked == 20 * 20 * 20);
}

TEST_CASE("structure constants agree with the oracle") {
  const auto basis = window_basis(HalfInt::integer(4));
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      const auto mine = bracket(a, b);
      const auto ref = oracle::br(to_atom(a), to_atom(b));
      REQUIRE(mine.has_value() == ref.has_value());
      if (mine) {
        CHECK(mine->coeff == ref->first);
        CHECK(mine->out == from_atom(ref->second));
      }
    }
  }
}

TEST_CASE("center and degree decomposition") {
  CHECK(is_central(E("M[0]")));
  CHECK(is_central(E("-2 * M[0]")));
  CHECK_FALSE(is_central(E("M[1]")));
  CHECK_FALSE(is_central(E("L[0]")));
  CHECK(is_central(E("0")));
  const auto parts = degree_decompose(E("L[1] + M[1] + Y[1/2] - 2 * L[0]"));
  REQUIRE(parts.size() == 3);
  CHECK(parts.at(HalfInt::integer(1)) == E("L[1] + M[1]"));
  CHECK(parts.at(half(1)) == E("Y[1/2]"));
  CHECK(parts.at(HalfInt::integer(0)) == E("-2 * L[0]"));
}
