#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "svlie/tensor.hpp"

namespace svlie {

/// A member of the six-parameter derivation family
///   D(L_n)     = (nα + γ) M_0⊗M_n + (nα† + γ†) M_n⊗M_0
///   D(Y_p)     = β M_0⊗Y_p + β† Y_p⊗M_0
///   D(M_n)     = 2(β M_0⊗M_n + β† M_n⊗M_0).
struct SpecialDerivation {
  Rational alpha, alpha_dag, beta, beta_dag, gamma, gamma_dag;

  /// Membership in the skew-image subspace 𝒟₁ (α = −α†, β = −β†, γ = −γ†).
  bool is_d1() const;
  bool is_zero() const;

  friend bool operator==(const SpecialDerivation&, const SpecialDerivation&) = default;
};

/// Δ = Δ_r + D.
struct CocommutatorSpec {
  Tensor2 r;
  SpecialDerivation d;
};

Tensor2 special_apply(const SpecialDerivation& d, const BasisVector& x);
Tensor2 special_apply(const SpecialDerivation& d, const Element& x);

/// Δ_r(x) = x·r.
Tensor2 delta_r(const Tensor2& r, const Element& x);

Tensor2 cocommutator_apply(const CocommutatorSpec& spec, const Element& x);

/// c(r) = 0.
bool check_cybe(const Tensor2& r);

/// x·c(r) = 0 for all x, decided as c(r) ∈ 𝔽·M_0^{⊗3} (the only invariant
/// rank-3 tensors).
bool check_mybe(const Tensor2& r);

/// A linear map from the basis vectors of a window to rank-2 tensors.
/// Every basis vector with |index| ≤ window has an entry; unset entries are 0.
class DerivationTable {
 public:
  explicit DerivationTable(HalfInt window);

  HalfInt window() const { return window_; }
  bool covers(const BasisVector& x) const { return x.index().abs() <= window_; }

  /// Throws Error(WindowTooSmall) when x is outside the window.
  void set(const BasisVector& x, Tensor2 image);
  const Tensor2& at(const BasisVector& x) const;
  /// Linear extension; throws Error(WindowTooSmall) if any term is outside.
  Tensor2 apply(const Element& x) const;

  const std::map<BasisVector, Tensor2>& images() const { return images_; }

  friend bool operator==(const DerivationTable&, const DerivationTable&) = default;

 private:
  HalfInt window_;
  std::map<BasisVector, Tensor2> images_;
};

DerivationTable make_table(HalfInt window, const std::function<Tensor2(const BasisVector&)>& f);

/// x ↦ x·v.
DerivationTable inner_table(const Tensor2& v, HalfInt window);

DerivationTable special_table(const SpecialDerivation& d, HalfInt window);

enum class Axiom { ImageSkew, CoJacobi, Compatibility };

const char* to_string(Axiom a);

struct Counterexample {
  Axiom axiom;
  std::vector<BasisVector> inputs;
  std::variant<Tensor2, Tensor3> defect;
};

struct AxiomReport {
  bool image_skew = true;
  bool co_jacobi = true;
  bool compatibility = true;
  /// The first failure, checks taken in the order image_skew, co_jacobi,
  /// compatibility and inputs in shell order.
  std::optional<Counterexample> counterexample;

  bool ok() const { return image_skew && co_jacobi && compatibility; }
};

/// Checks Im Δ ⊂ Im(1−τ), (1+ξ+ξ²)(1⊗Δ)Δ = 0 and Δ([x,y]) = x·Δy − y·Δx on
/// every basis vector (pair) with |index| ≤ window. Images are computed on
/// demand, so the whole window is always checked.
AxiomReport check_axioms(const CocommutatorSpec& spec, HalfInt window);

/// As above for a table. Co-Jacobi and compatibility are checked only where
/// every image they need lies inside the table's window. Throws
/// Error(WindowTooSmall) if window exceeds the table's window.
AxiomReport check_axioms(const DerivationTable& table, HalfInt window);

/// Compares (1+ξ+ξ²)(1⊗Δ_r)Δ_r(x) with x·c(r), both computed independently.
/// Throws Error(NotSkew) if r is not skew.
bool coboundary_identity_check(const Tensor2& r, const Element& x);

/// Left-hand side of the above: the co-Jacobi sum of Δ_r at x.
Tensor3 coboundary_cojacobi(const Tensor2& r, const Element& x);

/// Homogeneous components: the component of degree a sends x of degree q to
/// the degree-(q+a) part of t(x). Zero components are omitted.
std::map<Degree, DerivationTable> decompose_derivation(const DerivationTable& t);

/// For a homogeneous derivation of degree a ≠ 0, returns v = t(L_0)/a and
/// verifies t(x) = x·v across the window.
/// Throws Error(ZeroDegree) for a = 0 and Error(WitnessMismatch) when the
/// verification fails.
Tensor2 inner_witness_nonzero_degree(const DerivationTable& t_alpha, Degree a);

enum class InnerSearchMode {
  /// Restrict unknowns to degree-0 tensors when t preserves degree on the
  /// generators; search everything otherwise.
  Auto,
  Unrestricted,
};

/// Solves x·v = t(x) for x in the generating set, over tensors whose factor
/// indices are bounded by search_bound. The result has no M_0⊗M_0 term; the
/// action annihilates that direction. Throws Error(WindowTooSmall) if t does
/// not cover the generators.
std::optional<Tensor2> match_inner_on_generators(const DerivationTable& t, HalfInt search_bound,
                                                 InnerSearchMode mode = InnerSearchMode::Auto);

enum class Verdict { TriangularCoboundary, BialgebraNotCoboundary, NotBialgebra };

const char* to_string(Verdict v);

struct Certificate {
  Verdict verdict;
  /// Empty unless verdict == NotBialgebra.
  std::string reason;
  AxiomReport report;
};

Certificate certify(const CocommutatorSpec& spec, HalfInt window = HalfInt::integer(6));

}  // namespace svlie
