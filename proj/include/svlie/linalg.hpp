#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "svlie/tensor.hpp"

namespace svlie {

/// Sparse exact matrix; rows are stored as ordered column → value maps.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> dense);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  void add(std::size_t row, std::size_t col, const Rational& v);
  void set(std::size_t row, std::size_t col, const Rational& v);
  Rational at(std::size_t row, std::size_t col) const;
  const std::map<std::size_t, Rational>& row(std::size_t r) const { return rows_[r]; }

  /// Appends an empty row and returns its index.
  std::size_t push_row();

  std::vector<Rational> multiply(std::span<const Rational> v) const;

 private:
  std::size_t cols_;
  std::vector<std::map<std::size_t, Rational>> rows_;
};

using Vector = std::vector<Rational>;

/// Basis of {v : Av = 0} read off the reduced row echelon form: one vector per
/// free column, with a 1 in that column. The system is split into
/// independent blocks first, which gives the same basis.
std::vector<Vector> nullspace(const RationalMatrix& a);

/// Some solution of Av = b with every free variable 0, or nullopt.
std::optional<Vector> solve(const RationalMatrix& a, std::span<const Rational> b);

/// Ordered basis of rank-n tensors whose factors all have |index| ≤ bound,
/// lexicographic in the basis-vector order.
class TensorWindowBasis {
 public:
  TensorWindowBasis(int rank, HalfInt bound);

  int rank() const { return rank_; }
  HalfInt bound() const { return bound_; }
  std::size_t size() const { return keys_.size(); }
  const std::vector<BasisVector>& key(std::size_t i) const { return keys_[i]; }

  /// Coordinates of v; nullopt if v has a term outside the window or the
  /// wrong rank.
  std::optional<Vector> coords(const AnyValue& v) const;
  AnyValue value(std::span<const Rational> coords) const;
  AnyValue unit(std::size_t i) const;

 private:
  int rank_;
  HalfInt bound_;
  std::vector<std::vector<BasisVector>> keys_;
  std::map<std::vector<BasisVector>, std::size_t> index_;
};

/// Basis of the window tensors annihilated by every generator. Constraints
/// include components of g·t outside the window.
std::vector<AnyValue> invariant_tensors(int rank, HalfInt bound);

/// Basis of {v in the rank-2 window : g·v is skew for every generator g}.
std::vector<Tensor2> skew_action_space(HalfInt bound);

/// Dimension of the skew rank-2 tensors on the window, n(n−1)/2.
std::size_t skew_window_dimension(HalfInt bound);

}  // namespace svlie
