#pragma once

#include <random>
#include <vector>

#include "oracle/dense_oracle.hpp"
#include "svlie/bialgebra.hpp"
#include "svlie/expr.hpp"

namespace testing_support {

using namespace svlie;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  BasisVector basis(int bound) {
    const auto pool = window_basis(HalfInt::integer(bound));
    return pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
  }

  Rational coeff(int lo, int hi, bool fractions = false) {
    int n = 0;
    while (n == 0) n = uniform(lo, hi);
    if (!fractions) return n;
    return make_rational(n, uniform(1, 4));
  }

  Element element(int bound, int terms) {
    Element x;
    for (int i = 0; i < terms; ++i) x.add(basis(bound), coeff(-3, 3, true));
    return x;
  }

  Tensor2 tensor2(int bound, int terms, bool fractions = true) {
    Tensor2 t;
    for (int i = 0; i < terms; ++i) t += tensor(basis(bound), basis(bound), coeff(-3, 3, fractions));
    return t;
  }

  Tensor3 tensor3(int bound, int terms) {
    Tensor3 t;
    for (int i = 0; i < terms; ++i) t += tensor(basis(bound), basis(bound), basis(bound), coeff(-3, 3, true));
    return t;
  }

  Tensor2 skew(int bound, int terms, int lo = -3, int hi = 3) {
    Tensor2 t;
    for (int i = 0; i < terms; ++i) t += coeff(lo, hi) * wedge(basis(bound), basis(bound));
    return t;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline oracle::Atom to_atom(const BasisVector& b) {
  return oracle::Atom{kind_letter(b.kind()), static_cast<int>(b.index().twice())};
}

inline BasisVector from_atom(const oracle::Atom& a) {
  const HalfInt i = HalfInt::from_twice(a.t);
  switch (a.k) {
    case 'L': return BasisVector(Kind::L, i);
    case 'Y': return BasisVector(Kind::Y, i);
    default: return BasisVector(Kind::M, i);
  }
}

inline oracle::Vec<2> to_oracle(const Tensor2& t) {
  oracle::Vec<2> out;
  for (const auto& [k, c] : t) out[{to_atom(k[0]), to_atom(k[1])}] = c;
  return out;
}

inline Tensor2 from_oracle(const oracle::Vec<2>& v) {
  Tensor2 out;
  for (const auto& [k, c] : v) out.add({from_atom(k[0]), from_atom(k[1])}, c);
  return out;
}

inline Tensor3 from_oracle(const oracle::Vec<3>& v) {
  Tensor3 out;
  for (const auto& [k, c] : v) out.add({from_atom(k[0]), from_atom(k[1]), from_atom(k[2])}, c);
  return out;
}

inline Tensor2 T2(const char* s) { return parse_tensor2(s); }
inline Tensor3 T3(const char* s) { return parse_tensor3(s); }
inline Element E(const char* s) { return parse_element(s); }

inline SpecialDerivation D(int a, int ad, int b, int bd, int g, int gd) {
  return SpecialDerivation{a, ad, b, bd, g, gd};
}

}  // namespace testing_support
