#include "svlie/tensor.hpp"

#include <algorithm>

namespace svlie {

Tensor2 twist(const Tensor2& t) {
  Tensor2 out;
  for (const auto& [k, c] : t) out.add({k[1], k[0]}, c);
  return out;
}

Tensor3 cyclic(const Tensor3& u) {
  Tensor3 out;
  for (const auto& [k, c] : u) out.add({k[1], k[2], k[0]}, c);
  return out;
}

AnyValue act(const Element& x, const AnyValue& v) {
  return std::visit(
      [&](const auto& t) -> AnyValue {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, Element>) {
          return bracket(x, t);
        } else {
          return act(x, t);
        }
      },
      v);
}

bool is_skew(const Tensor2& t) {
  return std::all_of(t.begin(), t.end(), [&](const auto& term) {
    const auto& [k, c] = term;
    return t.coeff({k[1], k[0]}) == -c;
  });
}

Tensor2 skew_part(const Tensor2& t) { return (t - twist(t)) * make_rational(1, 2); }

Tensor3 left_tensor(const BasisVector& a, const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t) out.add({a, k[0], k[1]}, c);
  return out;
}

Tensor3 cyclic_sum(const Tensor3& u) {
  Tensor3 once = cyclic(u);
  return u + once + cyclic(once);
}

Tensor3 yang_baxter_c(const Tensor2& r) {
  Tensor3 out;
  for (const auto& [ki, ci] : r) {
    const auto& [ai, bi] = ki;
    for (const auto& [kj, cj] : r) {
      const auto& [aj, bj] = kj;
      const Rational cc = ci * cj;
      if (auto t = bracket(ai, aj)) out.add({t->out, bi, bj}, cc * t->coeff);
      if (auto t = bracket(bi, aj)) out.add({ai, t->out, bj}, cc * t->coeff);
      if (auto t = bracket(bi, bj)) out.add({ai, aj, t->out}, cc * t->coeff);
    }
  }
  return out;
}

Tensor2 drop_m0m0(const Tensor2& t) {
  const TensorKey<2> m0m0{BasisVector::M(0), BasisVector::M(0)};
  Tensor2 out = t;
  out.add(m0m0, -t.coeff(m0m0));
  return out;
}

bool equal_mod_m0m0(const Tensor2& a, const Tensor2& b) { return drop_m0m0(a - b).is_zero(); }

bool is_m0_cube_multiple(const Tensor3& u) {
  const TensorKey<3> m0{BasisVector::M(0), BasisVector::M(0), BasisVector::M(0)};
  return u.is_zero() || (u.size() == 1 && u.begin()->first == m0);
}

}  // namespace svlie
