#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "svlie/algebra.hpp"
#include "svlie/error.hpp"

namespace svlie {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidBasis: return "invalid-basis";
    case ErrorCode::ZeroInput: return "zero-input";
    case ErrorCode::NotHomogeneous: return "not-homogeneous";
    case ErrorCode::NotSkew: return "not-skew";
    case ErrorCode::ZeroDegree: return "zero-degree";
    case ErrorCode::WitnessMismatch: return "witness-mismatch";
    case ErrorCode::WindowTooSmall: return "window-too-small";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

namespace {

std::string position_message(std::size_t line, std::size_t column, const std::string& message) {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(ErrorCode::Parse, position_message(line, column, message)),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

char kind_letter(Kind k) {
  switch (k) {
    case Kind::L: return 'L';
    case Kind::Y: return 'Y';
    case Kind::M: return 'M';
  }
  return '?';
}

BasisVector::BasisVector(Kind kind, HalfInt index) : kind_(kind), index_(index) {
  const bool want_integer = kind != Kind::Y;
  if (index.is_integer() != want_integer) {
    throw Error(ErrorCode::InvalidBasis, std::string(1, kind_letter(kind)) + " needs " +
                                             (want_integer ? "an integer" : "a half-odd") +
                                             " index, got " + index.str());
  }
}

std::vector<BasisVector> window_basis(HalfInt bound) {
  std::vector<BasisVector> out;
  if (bound.twice() < 0) return out;
  const std::int64_t t = bound.twice();
  for (Kind k : {Kind::L, Kind::Y, Kind::M}) {
    for (std::int64_t tw = -t; tw <= t; ++tw) {
      const bool integer = tw % 2 == 0;
      if (integer == (k != Kind::Y)) out.emplace_back(k, HalfInt::from_twice(tw));
    }
  }
  return out;
}

std::vector<BasisVector> shell_order(HalfInt bound) {
  auto out = window_basis(bound);
  std::stable_sort(out.begin(), out.end(), [](const BasisVector& a, const BasisVector& b) {
    auto ka = std::tuple(a.index().abs(), a.kind(), a.index().twice() < 0);
    auto kb = std::tuple(b.index().abs(), b.kind(), b.index().twice() < 0);
    return ka < kb;
  });
  return out;
}

const std::vector<BasisVector>& generating_set() {
  static const std::vector<BasisVector> gens = {
      BasisVector::L(-2), BasisVector::L(-1), BasisVector::L(1), BasisVector::L(2),
      BasisVector::Y(half(1)),
  };
  return gens;
}

Tensor2 tensor(const Element& a, const Element& b) {
  Tensor2 t;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) t.add({x, y}, cx * cy);
  return t;
}

std::optional<BracketTerm> bracket(const BasisVector& x, const BasisVector& y) {
  const std::int64_t tx = x.index().twice();
  const std::int64_t ty = y.index().twice();
  const HalfInt sum = x.index() + y.index();
  Rational c;
  Kind out_kind = Kind::L;
  switch (x.kind()) {
    case Kind::L:
      switch (y.kind()) {
        case Kind::L: c = make_rational(ty - tx, 2); out_kind = Kind::L; break;
        case Kind::M: c = make_rational(ty, 2); out_kind = Kind::M; break;
        case Kind::Y: c = make_rational(2 * ty - tx, 4); out_kind = Kind::Y; break;
      }
      break;
    case Kind::Y:
      switch (y.kind()) {
        case Kind::L: c = -make_rational(2 * tx - ty, 4); out_kind = Kind::Y; break;
        case Kind::Y: c = make_rational(ty - tx, 2); out_kind = Kind::M; break;
        case Kind::M: return std::nullopt;
      }
      break;
    case Kind::M:
      if (y.kind() != Kind::L) return std::nullopt;
      c = -make_rational(tx, 2);
      out_kind = Kind::M;
      break;
  }
  if (is_zero(c)) return std::nullopt;
  return BracketTerm{c, BasisVector(out_kind, sum)};
}

Element bracket(const Element& x, const Element& y) {
  Element out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      if (auto t = bracket(a, b)) out.add(t->out, ca * cb * t->coeff);
    }
  }
  return out;
}

std::map<Degree, Element> degree_decompose(const Element& x) { return graded_components(x); }

bool is_central(const Element& x) {
  return std::all_of(x.begin(), x.end(),
                     [](const auto& term) { return term.first == BasisVector::M(0); });
}

}  // namespace svlie
