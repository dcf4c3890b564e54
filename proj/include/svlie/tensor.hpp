#pragma once

#include <cstddef>
#include <variant>

#include "svlie/algebra.hpp"

namespace svlie {

/// Any value the text format can carry.
using AnyValue = std::variant<Element, Tensor2, Tensor3>;

/// τ(a⊗b) = b⊗a.
Tensor2 twist(const Tensor2& t);

/// ξ(a⊗b⊗c) = b⊗c⊗a.
Tensor3 cyclic(const Tensor3& u);

/// Diagonal adjoint action x·(a_1⊗…⊗a_N) = Σ_k a_1⊗…⊗[x,a_k]⊗…⊗a_N.
template <std::size_t N>
Tensor<N> act(const BasisVector& x, const Tensor<N>& t) {
  Tensor<N> out;
  for (const auto& [key, c] : t) {
    for (std::size_t slot = 0; slot < N; ++slot) {
      if (auto b = bracket(x, key[slot])) {
        auto k = key;
        k[slot] = b->out;
        out.add(k, c * b->coeff);
      }
    }
  }
  return out;
}

template <std::size_t N>
Tensor<N> act(const Element& x, const Tensor<N>& t) {
  Tensor<N> out;
  for (const auto& [b, c] : x) out += c * act(b, t);
  return out;
}

inline Tensor2 diag_act2(const Element& x, const Tensor2& t) { return act(x, t); }
inline Tensor3 diag_act3(const Element& x, const Tensor3& u) { return act(x, u); }

AnyValue act(const Element& x, const AnyValue& v);

/// t ∈ Im(1−τ), decided as τ(t) = −t.
bool is_skew(const Tensor2& t);

/// (t − τ(t))/2.
Tensor2 skew_part(const Tensor2& t);

/// a ⊗ t for a rank-2 t.
Tensor3 left_tensor(const BasisVector& a, const Tensor2& t);

/// (1 + ξ + ξ²)u.
Tensor3 cyclic_sum(const Tensor3& u);

/// c(r) = Σ_{i,j} [a_i,a_j]⊗b_i⊗b_j + a_i⊗[b_i,a_j]⊗b_j + a_i⊗a_j⊗[b_i,b_j]
/// for r = Σ_i a_i⊗b_i.
Tensor3 yang_baxter_c(const Tensor2& r);

/// t with its M_0⊗M_0 coefficient removed.
Tensor2 drop_m0m0(const Tensor2& t);

/// Equality modulo 𝔽·M_0⊗M_0.
bool equal_mod_m0m0(const Tensor2& a, const Tensor2& b);

/// True iff u ∈ 𝔽·M_0⊗M_0⊗M_0.
bool is_m0_cube_multiple(const Tensor3& u);

}  // namespace svlie
