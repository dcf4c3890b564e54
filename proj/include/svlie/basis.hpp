#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "svlie/half_int.hpp"

namespace svlie {

/// Kind order matters: basis vectors sort L < Y < M.
enum class Kind : std::uint8_t { L = 0, Y = 1, M = 2 };

char kind_letter(Kind k);

/// One of L_n, M_n (n ∈ ℤ) or Y_p (p ∈ ½+ℤ).
class BasisVector {
 public:
  /// Throws Error(InvalidBasis) on an index of the wrong parity.
  BasisVector(Kind kind, HalfInt index);

  static BasisVector L(std::int64_t n) { return {Kind::L, HalfInt::integer(n), Unchecked{}}; }
  static BasisVector M(std::int64_t n) { return {Kind::M, HalfInt::integer(n), Unchecked{}}; }
  static BasisVector Y(HalfInt p) { return BasisVector(Kind::Y, p); }

  Kind kind() const { return kind_; }
  HalfInt index() const { return index_; }
  Degree degree() const { return index_; }

  friend bool operator==(const BasisVector&, const BasisVector&) = default;
  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;

 private:
  struct Unchecked {};
  BasisVector(Kind kind, HalfInt index, Unchecked) : kind_(kind), index_(index) {}

  Kind kind_;
  HalfInt index_;
};

/// Every basis vector with |index| ≤ bound, in canonical (sorted) order.
std::vector<BasisVector> window_basis(HalfInt bound);

/// The same set as window_basis, walked outward from index 0: by |index|,
/// then kind, then non-negative index before negative. Axiom checks use this
/// order so the reported counterexample is the smallest one.
std::vector<BasisVector> shell_order(HalfInt bound);

/// L_{±1}, L_{±2}, Y_{1/2}: a generating set of the whole algebra.
const std::vector<BasisVector>& generating_set();

}  // namespace svlie
