#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "svlie/tensor.hpp"

namespace svlie {

enum class VClass { V1, V2, V3, V4, V5, V6, V7, V8, NotCandidate };

/// Which listed subspace a highest component of a CYBE solution lies in.
/// V1–V5 occur at integer degree, V6–V8 at half-odd degree; V8 is a family
/// indexed by an integer.
struct ClassLabel {
  VClass tag;
  Degree top_degree;
  std::int64_t v8_index = 0;

  std::string str() const;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

/// (p, r_p) with p the largest degree of a nonzero graded component.
/// Throws Error(ZeroInput) on r = 0.
std::pair<Degree, Tensor2> highest_component(const Tensor2& r);

/// All labels whose span contains r_p, or {NotCandidate}. Throws
/// Error(ZeroInput), Error(NotHomogeneous) or Error(NotSkew) when r_p is not
/// a nonzero skew tensor of degree p.
std::set<ClassLabel> classify_highest(const Tensor2& r_p, Degree p);

struct SearchConfig {
  HalfInt bound;
  std::vector<Rational> coeffs;
  int max_terms = 1;
  int workers = 1;
};

/// r / (coefficient of r's least term).
Tensor2 normalize_scalar(const Tensor2& r);

/// Every nonzero combination of at most max_terms distinct elementary pairs
/// u∧w (u < w in the window) with coefficients from the set, normalized and
/// deduplicated, sorted.
std::vector<Tensor2> skew_candidates(const SearchConfig& cfg);

/// The candidates satisfying CYBE. Output does not depend on cfg.workers.
std::vector<Tensor2> search_cybe(const SearchConfig& cfg);

}  // namespace svlie
