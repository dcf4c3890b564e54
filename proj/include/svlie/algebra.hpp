#pragma once

#include <map>
#include <optional>

#include "svlie/lincomb.hpp"

namespace svlie {

/// A nonzero bracket of two basis vectors is always a multiple of one basis
/// vector.
struct BracketTerm {
  Rational coeff;
  BasisVector out;
};

/// Structure constants:
///   [L_m, L_n] = (n − m) L_{m+n}     [L_m, M_n] = n M_{m+n}
///   [L_n, Y_p] = (p − n/2) Y_{p+n}   [Y_p, Y_q] = (q − p) M_{p+q}
/// extended by antisymmetry; every other pair commutes.
std::optional<BracketTerm> bracket(const BasisVector& x, const BasisVector& y);

Element bracket(const Element& x, const Element& y);

std::map<Degree, Element> degree_decompose(const Element& x);

/// True iff x ∈ 𝔽·M_0.
bool is_central(const Element& x);

}  // namespace svlie
