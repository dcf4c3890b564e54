#include "svlie/classify.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "svlie/bialgebra.hpp"
#include "svlie/error.hpp"
#include "svlie/expr.hpp"
#include "svlie/linalg.hpp"

namespace svlie {

std::string ClassLabel::str() const {
  switch (tag) {
    case VClass::V1: return "V1";
    case VClass::V2: return "V2";
    case VClass::V3: return "V3";
    case VClass::V4: return "V4";
    case VClass::V5: return "V5";
    case VClass::V6: return "V6";
    case VClass::V7: return "V7";
    case VClass::V8: return "V8(" + std::to_string(v8_index) + ")";
    case VClass::NotCandidate: return "NotCandidate";
  }
  return "?";
}

std::pair<Degree, Tensor2> highest_component(const Tensor2& r) {
  if (r.is_zero()) throw Error(ErrorCode::ZeroInput, "highest component of zero");
  auto parts = graded_components(r);
  auto top = std::prev(parts.end());
  return {top->first, top->second};
}

namespace {

bool in_span(const Tensor2& target, const std::vector<Tensor2>& spanning) {
  std::map<TensorKey<2>, std::size_t> row_of;
  auto row = [&](const TensorKey<2>& k) {
    return row_of.try_emplace(k, row_of.size()).first->second;
  };
  for (const auto& [k, c] : target) row(k);
  for (const auto& v : spanning)
    for (const auto& [k, c] : v) row(k);
  RationalMatrix a(row_of.size(), spanning.size());
  for (std::size_t j = 0; j < spanning.size(); ++j)
    for (const auto& [k, c] : spanning[j]) a.add(row_of.at(k), j, c);
  std::vector<Rational> b(row_of.size());
  for (const auto& [k, c] : target) b[row_of.at(k)] = c;
  return solve(a, b).has_value();
}

}  // namespace

std::set<ClassLabel> classify_highest(const Tensor2& r_p, Degree p) {
  if (r_p.is_zero()) throw Error(ErrorCode::ZeroInput, "zero highest component");
  for (const auto& [k, c] : r_p) {
    if (key_degree(k) != p) {
      throw Error(ErrorCode::NotHomogeneous, format(r_p) + " is not homogeneous of degree " + p.str());
    }
  }
  if (!is_skew(r_p)) throw Error(ErrorCode::NotSkew, format(r_p) + " is not skew");

  std::set<ClassLabel> labels;
  auto check = [&](VClass tag, const std::vector<Tensor2>& spanning, std::int64_t i = 0) {
    if (in_span(r_p, spanning)) labels.insert({tag, p, i});
  };
  const BasisVector l0 = BasisVector::L(0);
  const BasisVector m0 = BasisVector::M(0);

  if (p.is_integer()) {
    const std::int64_t n = p.as_integer();
    const BasisVector lp = BasisVector::L(n);
    const BasisVector mp = BasisVector::M(n);
    check(VClass::V1, {wedge(l0, lp), wedge(m0, lp)});
    check(VClass::V2, {wedge(l0, lp), wedge(l0, mp)});
    check(VClass::V3, {wedge(m0, lp), wedge(m0, mp)});
    check(VClass::V4, {wedge(l0, mp), wedge(m0, mp)});
    // Only the M_j∧M_{p−j} that meet the support can contribute.
    std::vector<Tensor2> v5;
    for (const auto& [k, c] : r_p) {
      if (k[0].kind() == Kind::M && k[1].kind() == Kind::M) v5.push_back(wedge(k[0], k[1]));
    }
    check(VClass::V5, v5);
  } else {
    const BasisVector yp = BasisVector::Y(p);
    check(VClass::V6, {wedge(l0, yp), wedge(m0, yp)});
    // L_{2p/3}, Y_{p/3} count as zero unless 2p/3 ∈ ℤ.
    if (p.twice() % 3 == 0) {
      const std::int64_t k = p.twice() / 3;
      const BasisVector y = BasisVector::Y(half(k));
      check(VClass::V7, {wedge(BasisVector::L(k), y), wedge(BasisVector::M(k), y)});
    }
    std::set<std::int64_t> indices;
    for (const auto& [k, c] : r_p) {
      for (const auto& b : k)
        if (b.kind() == Kind::M) indices.insert(b.index().as_integer());
    }
    for (std::int64_t i : indices) {
      check(VClass::V8, {wedge(BasisVector::M(i), BasisVector::Y(p - HalfInt::integer(i)))}, i);
    }
  }
  if (labels.empty()) labels.insert({VClass::NotCandidate, p, 0});
  return labels;
}

Tensor2 normalize_scalar(const Tensor2& r) {
  if (r.is_zero()) return r;
  return r * (1 / r.begin()->second);
}

namespace {

std::vector<Tensor2> enumerate(const SearchConfig& cfg, const std::function<bool(const Tensor2&)>& keep) {
  std::vector<Rational> coeffs;
  for (const auto& c : cfg.coeffs)
    if (!is_zero(c)) coeffs.push_back(c);
  std::sort(coeffs.begin(), coeffs.end());
  coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
  if (coeffs.empty() || cfg.max_terms < 1) return {};

  const auto basis = window_basis(cfg.bound);
  std::vector<Tensor2> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back(wedge(basis[i], basis[j]));

  const std::size_t max_terms = static_cast<std::size_t>(cfg.max_terms);
  const std::size_t workers = static_cast<std::size_t>(std::max(1, cfg.workers));

  // Worker w owns every combination whose first pair index is ≡ w (mod workers).
  auto run = [&](std::size_t w, std::vector<Tensor2>& found) {
    std::function<void(std::size_t, std::size_t, const Tensor2&)> extend =
        [&](std::size_t next, std::size_t used, const Tensor2& partial) {
          if (used > 0) {
            Tensor2 r = normalize_scalar(partial);
            if (keep(r)) found.push_back(std::move(r));
          }
          if (used == max_terms) return;
          for (std::size_t i = next; i < pairs.size(); ++i) {
            if (used == 0 && i % workers != w) continue;
            for (const auto& c : coeffs) extend(i + 1, used + 1, partial + c * pairs[i]);
          }
        };
    extend(0, 0, Tensor2{});
  };

  std::vector<std::vector<Tensor2>> results(workers);
  if (workers == 1) {
    run(0, results[0]);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w, std::ref(results[w]));
    for (auto& t : threads) t.join();
  }
  std::vector<Tensor2> merged;
  for (auto& part : results) std::move(part.begin(), part.end(), std::back_inserter(merged));
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

}  // namespace

std::vector<Tensor2> skew_candidates(const SearchConfig& cfg) {
  return enumerate(cfg, [](const Tensor2&) { return true; });
}

std::vector<Tensor2> search_cybe(const SearchConfig& cfg) { return enumerate(cfg, check_cybe); }

}  // namespace svlie
