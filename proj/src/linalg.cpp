#include "svlie/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace svlie {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> dense)
    : cols_(dense.size() == 0 ? 0 : dense.begin()->size()) {
  for (const auto& r : dense) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
    auto& row = rows_.emplace_back();
    std::size_t j = 0;
    for (const auto& v : r) {
      if (!is_zero(v)) row.emplace(j, v);
      ++j;
    }
  }
}

void RationalMatrix::add(std::size_t row, std::size_t col, const Rational& v) {
  if (col >= cols_) throw std::out_of_range("column out of range");
  auto& r = rows_.at(row);
  auto [it, inserted] = r.try_emplace(col, v);
  if (!inserted) it->second += v;
  if (is_zero(it->second)) r.erase(it);
}

void RationalMatrix::set(std::size_t row, std::size_t col, const Rational& v) {
  if (col >= cols_) throw std::out_of_range("column out of range");
  auto& r = rows_.at(row);
  if (is_zero(v)) {
    r.erase(col);
  } else {
    r[col] = v;
  }
}

Rational RationalMatrix::at(std::size_t row, std::size_t col) const {
  const auto& r = rows_.at(row);
  auto it = r.find(col);
  return it == r.end() ? Rational(0) : it->second;
}

std::size_t RationalMatrix::push_row() {
  rows_.emplace_back();
  return rows_.size() - 1;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  std::vector<Rational> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, a] : rows_[i]) out[i] += a * v[j];
  return out;
}

namespace {

struct WorkRow {
  std::map<std::size_t, Rational> entries;
  Rational rhs;
};

struct Block {
  std::vector<std::size_t> cols;  // ascending
  std::vector<WorkRow> rows;
};

struct Reduced {
  // pivot column -> (row entries, rhs), rows normalized to 1 at the pivot
  std::map<std::size_t, WorkRow> pivots;
  std::vector<std::size_t> free_cols;
  bool consistent = true;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Splits the system into blocks with disjoint column sets. Rows without
// entries are dropped; a nonzero rhs on one makes the system inconsistent.
std::vector<Block> split_blocks(const RationalMatrix& a, std::span<const Rational> b,
                                bool& consistent) {
  const std::size_t n = a.cols();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto& row = a.row(i);
    if (row.empty()) continue;
    const std::size_t first = find_root(parent, row.begin()->first);
    for (const auto& [j, v] : row) parent[find_root(parent, j)] = first;
  }
  std::map<std::size_t, std::size_t> block_of_root;
  std::vector<Block> blocks;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t r = find_root(parent, j);
    auto [it, inserted] = block_of_root.try_emplace(r, blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].cols.push_back(j);
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto& row = a.row(i);
    const Rational rhs = b.empty() ? Rational(0) : Rational(b[i]);
    if (row.empty()) {
      if (!is_zero(rhs)) consistent = false;
      continue;
    }
    blocks[block_of_root.at(find_root(parent, row.begin()->first))].rows.push_back({row, rhs});
  }
  return blocks;
}

// Gauss–Jordan on one block, columns taken in ascending order.
Reduced reduce(Block block) {
  Reduced out;
  auto& rows = block.rows;
  std::vector<bool> used(rows.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pivot_rows;  // (row, column)
  for (std::size_t col : block.cols) {
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || !rows[i].entries.count(col)) continue;
      if (best == rows.size() || rows[i].entries.size() < rows[best].entries.size()) best = i;
    }
    if (best == rows.size()) {
      out.free_cols.push_back(col);
      continue;
    }
    used[best] = true;
    WorkRow& piv = rows[best];
    const Rational inv = 1 / piv.entries.at(col);
    for (auto& [j, v] : piv.entries) v *= inv;
    piv.rhs *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == best) continue;
      auto it = rows[i].entries.find(col);
      if (it == rows[i].entries.end()) continue;
      const Rational f = it->second;
      for (const auto& [j, v] : piv.entries) {
        auto [jt, inserted] = rows[i].entries.try_emplace(j, 0);
        jt->second -= f * v;
        if (is_zero(jt->second)) rows[i].entries.erase(jt);
      }
      rows[i].rhs -= f * piv.rhs;
    }
    pivot_rows.emplace_back(best, col);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!used[i] && rows[i].entries.empty() && !is_zero(rows[i].rhs)) out.consistent = false;
  }
  for (const auto& [i, col] : pivot_rows) out.pivots.emplace(col, std::move(rows[i]));
  return out;
}

}  // namespace

std::vector<Vector> nullspace(const RationalMatrix& a) {
  bool consistent = true;
  std::vector<std::pair<std::size_t, Vector>> by_free_col;
  for (auto& block : split_blocks(a, {}, consistent)) {
    const Reduced red = reduce(std::move(block));
    for (std::size_t f : red.free_cols) {
      Vector v(a.cols());
      v[f] = 1;
      for (const auto& [p, row] : red.pivots) {
        auto it = row.entries.find(f);
        if (it != row.entries.end()) v[p] = -it->second;
      }
      by_free_col.emplace_back(f, std::move(v));
    }
  }
  std::sort(by_free_col.begin(), by_free_col.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Vector> out;
  out.reserve(by_free_col.size());
  for (auto& [f, v] : by_free_col) out.push_back(std::move(v));
  return out;
}

std::optional<Vector> solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs size mismatch");
  bool consistent = true;
  auto blocks = split_blocks(a, b, consistent);
  if (!consistent) return std::nullopt;
  Vector x(a.cols());
  for (auto& block : blocks) {
    const Reduced red = reduce(std::move(block));
    if (!red.consistent) return std::nullopt;
    for (const auto& [p, row] : red.pivots) x[p] = row.rhs;
  }
  return x;
}

namespace {

template <class F>
void for_each_term(const AnyValue& v, F&& f) {
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        for (const auto& [k, c] : t) {
          if constexpr (std::is_same_v<T, Element>) {
            f(std::vector<BasisVector>{k}, c);
          } else {
            f(std::vector<BasisVector>(k.begin(), k.end()), c);
          }
        }
      },
      v);
}

int rank_of(const AnyValue& v) { return static_cast<int>(v.index()) + 1; }

}  // namespace

TensorWindowBasis::TensorWindowBasis(int rank, HalfInt bound) : rank_(rank), bound_(bound) {
  if (rank < 1 || rank > 3) throw std::invalid_argument("rank must be 1, 2 or 3");
  const auto basis = window_basis(bound);
  keys_.push_back({});
  for (int r = 0; r < rank; ++r) {
    std::vector<std::vector<BasisVector>> next;
    next.reserve(keys_.size() * basis.size());
    for (const auto& prefix : keys_) {
      for (const auto& b : basis) {
        auto k = prefix;
        k.push_back(b);
        next.push_back(std::move(k));
      }
    }
    keys_ = std::move(next);
  }
  for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
}

std::optional<Vector> TensorWindowBasis::coords(const AnyValue& v) const {
  if (rank_of(v) != rank_) return std::nullopt;
  Vector out(keys_.size());
  bool inside = true;
  for_each_term(v, [&](const std::vector<BasisVector>& k, const Rational& c) {
    auto it = index_.find(k);
    if (it == index_.end()) {
      inside = false;
    } else {
      out[it->second] = c;
    }
  });
  if (!inside) return std::nullopt;
  return out;
}

AnyValue TensorWindowBasis::value(std::span<const Rational> coords) const {
  if (coords.size() != keys_.size()) throw std::invalid_argument("coordinate count mismatch");
  switch (rank_) {
    case 1: {
      Element x;
      for (std::size_t i = 0; i < coords.size(); ++i) x.add(keys_[i][0], coords[i]);
      return x;
    }
    case 2: {
      Tensor2 t;
      for (std::size_t i = 0; i < coords.size(); ++i) t.add({keys_[i][0], keys_[i][1]}, coords[i]);
      return t;
    }
    default: {
      Tensor3 t;
      for (std::size_t i = 0; i < coords.size(); ++i)
        t.add({keys_[i][0], keys_[i][1], keys_[i][2]}, coords[i]);
      return t;
    }
  }
}

AnyValue TensorWindowBasis::unit(std::size_t i) const {
  Vector e(keys_.size());
  e.at(i) = 1;
  return value(e);
}

namespace {

// Rows are keyed by (generator, output key) so out-of-window components of
// g·t are constrained as well.
class ConstraintBuilder {
 public:
  explicit ConstraintBuilder(std::size_t cols) : a_(0, cols) {}

  void add(std::size_t gen, const std::vector<BasisVector>& key, std::size_t col, const Rational& c) {
    auto [it, inserted] = row_of_.try_emplace({gen, key}, 0);
    if (inserted) it->second = a_.push_row();
    a_.add(it->second, col, c);
  }

  const RationalMatrix& matrix() const { return a_; }

 private:
  RationalMatrix a_;
  std::map<std::pair<std::size_t, std::vector<BasisVector>>, std::size_t> row_of_;
};

}  // namespace

std::vector<AnyValue> invariant_tensors(int rank, HalfInt bound) {
  const TensorWindowBasis basis(rank, bound);
  const auto& gens = generating_set();
  ConstraintBuilder cb(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const AnyValue unit = basis.unit(j);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      for_each_term(act(element(gens[gi]), unit),
                    [&](const std::vector<BasisVector>& k, const Rational& c) { cb.add(gi, k, j, c); });
    }
  }
  std::vector<AnyValue> out;
  for (const auto& v : nullspace(cb.matrix())) out.push_back(basis.value(v));
  return out;
}

std::vector<Tensor2> skew_action_space(HalfInt bound) {
  const TensorWindowBasis basis(2, bound);
  const auto& gens = generating_set();
  ConstraintBuilder cb(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Tensor2 unit = std::get<Tensor2>(basis.unit(j));
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Tensor2 moved = act(gens[gi], unit);
      for (const auto& [k, c] : moved + twist(moved)) cb.add(gi, {k[0], k[1]}, j, c);
    }
  }
  std::vector<Tensor2> out;
  for (const auto& v : nullspace(cb.matrix())) out.push_back(std::get<Tensor2>(basis.value(v)));
  return out;
}

std::size_t skew_window_dimension(HalfInt bound) {
  const std::size_t n = window_basis(bound).size();
  return n * (n - 1) / 2;
}

}  // namespace svlie
