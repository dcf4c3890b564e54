#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>

#include "svlie/basis.hpp"
#include "svlie/rational.hpp"

namespace svlie {

/// Finite formal linear combination of keys over ℚ.
///
/// Terms live in a sorted map and zero coefficients are pruned on every
/// update, so two combinations are mathematically equal exactly when their
/// term maps are equal.
template <class Key>
class LinComb {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& key, const Rational& coeff = 1) { add(key, coeff); }

  void add(const Key& key, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  // Lexicographic on (key, coeff); only used to sort and dedupe.
  friend bool operator<(const LinComb& a, const LinComb& b) { return a.terms_ < b.terms_; }

 private:
  map_type terms_;
};

template <std::size_t N>
using TensorKey = std::array<BasisVector, N>;

template <std::size_t N>
using Tensor = LinComb<TensorKey<N>>;

using Element = LinComb<BasisVector>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

inline Degree key_degree(const BasisVector& b) { return b.degree(); }

template <std::size_t N>
Degree key_degree(const TensorKey<N>& key) {
  Degree d;
  for (const auto& b : key) d = d + b.degree();
  return d;
}

inline Element element(const BasisVector& b, const Rational& c = 1) { return Element(b, c); }

inline Tensor2 tensor(const BasisVector& a, const BasisVector& b, const Rational& c = 1) {
  return Tensor2(TensorKey<2>{a, b}, c);
}

inline Tensor3 tensor(const BasisVector& a, const BasisVector& b, const BasisVector& c,
                      const Rational& coeff = 1) {
  return Tensor3(TensorKey<3>{a, b, c}, coeff);
}

/// Bilinear a ⊗ b.
Tensor2 tensor(const Element& a, const Element& b);

/// Elementary skew pair a⊗b − b⊗a.
inline Tensor2 wedge(const BasisVector& a, const BasisVector& b) {
  Tensor2 t;
  t.add({a, b}, 1);
  t.add({b, a}, -1);
  return t;
}

/// Splits into graded components; no zero components are returned.
template <class Key>
std::map<Degree, LinComb<Key>> graded_components(const LinComb<Key>& x) {
  std::map<Degree, LinComb<Key>> out;
  for (const auto& [k, c] : x) out[key_degree(k)].add(k, c);
  return out;
}

template <class Key>
bool is_homogeneous(const LinComb<Key>& x) {
  return graded_components(x).size() <= 1;
}

}  // namespace svlie
