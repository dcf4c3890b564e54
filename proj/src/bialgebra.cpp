#include "svlie/bialgebra.hpp"

#include <algorithm>

#include "svlie/error.hpp"
#include "svlie/expr.hpp"
#include "svlie/linalg.hpp"

namespace svlie {

bool SpecialDerivation::is_d1() const {
  return alpha == -alpha_dag && beta == -beta_dag && gamma == -gamma_dag;
}

bool SpecialDerivation::is_zero() const {
  return svlie::is_zero(alpha) && svlie::is_zero(alpha_dag) && svlie::is_zero(beta) &&
         svlie::is_zero(beta_dag) && svlie::is_zero(gamma) && svlie::is_zero(gamma_dag);
}

Tensor2 special_apply(const SpecialDerivation& d, const BasisVector& x) {
  const BasisVector m0 = BasisVector::M(0);
  Tensor2 out;
  switch (x.kind()) {
    case Kind::L: {
      const Rational n = x.index().to_rational();
      const BasisVector mn = BasisVector::M(x.index().as_integer());
      out.add({m0, mn}, n * d.alpha + d.gamma);
      out.add({mn, m0}, n * d.alpha_dag + d.gamma_dag);
      break;
    }
    case Kind::Y:
      out.add({m0, x}, d.beta);
      out.add({x, m0}, d.beta_dag);
      break;
    case Kind::M:
      out.add({m0, x}, 2 * d.beta);
      out.add({x, m0}, 2 * d.beta_dag);
      break;
  }
  return out;
}

Tensor2 special_apply(const SpecialDerivation& d, const Element& x) {
  Tensor2 out;
  for (const auto& [b, c] : x) out += c * special_apply(d, b);
  return out;
}

Tensor2 delta_r(const Tensor2& r, const Element& x) { return act(x, r); }

Tensor2 cocommutator_apply(const CocommutatorSpec& spec, const Element& x) {
  return delta_r(spec.r, x) + special_apply(spec.d, x);
}

bool check_cybe(const Tensor2& r) { return yang_baxter_c(r).is_zero(); }

bool check_mybe(const Tensor2& r) { return is_m0_cube_multiple(yang_baxter_c(r)); }

DerivationTable::DerivationTable(HalfInt window) : window_(window) {
  if (window.twice() < 0) throw Error(ErrorCode::WindowTooSmall, "negative window");
  for (const auto& b : window_basis(window)) images_.emplace(b, Tensor2{});
}

void DerivationTable::set(const BasisVector& x, Tensor2 image) {
  if (!covers(x)) {
    throw Error(ErrorCode::WindowTooSmall, format(x) + " is outside window " + window_.str());
  }
  images_[x] = std::move(image);
}

const Tensor2& DerivationTable::at(const BasisVector& x) const {
  auto it = images_.find(x);
  if (it == images_.end()) {
    throw Error(ErrorCode::WindowTooSmall,
                "no image for " + format(x) + " in window " + window_.str());
  }
  return it->second;
}

Tensor2 DerivationTable::apply(const Element& x) const {
  Tensor2 out;
  for (const auto& [b, c] : x) out += c * at(b);
  return out;
}

DerivationTable make_table(HalfInt window, const std::function<Tensor2(const BasisVector&)>& f) {
  DerivationTable t(window);
  for (const auto& b : window_basis(window)) t.set(b, f(b));
  return t;
}

DerivationTable inner_table(const Tensor2& v, HalfInt window) {
  return make_table(window, [&](const BasisVector& x) { return act(x, v); });
}

DerivationTable special_table(const SpecialDerivation& d, HalfInt window) {
  return make_table(window, [&](const BasisVector& x) { return special_apply(d, x); });
}

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::ImageSkew: return "image-skew";
    case Axiom::CoJacobi: return "co-Jacobi";
    case Axiom::Compatibility: return "compatibility";
  }
  return "unknown";
}

namespace {

using ImageFn = std::function<std::optional<Tensor2>(const BasisVector&)>;

AxiomReport check_axioms_impl(const ImageFn& image_of, HalfInt window) {
  AxiomReport rep;
  std::map<BasisVector, std::optional<Tensor2>> cache;
  auto image = [&](const BasisVector& x) -> const std::optional<Tensor2>& {
    auto it = cache.find(x);
    if (it == cache.end()) it = cache.emplace(x, image_of(x)).first;
    return it->second;
  };
  auto record = [&](Axiom a, std::vector<BasisVector> inputs, std::variant<Tensor2, Tensor3> defect) {
    if (!rep.counterexample) rep.counterexample = Counterexample{a, std::move(inputs), std::move(defect)};
  };

  const auto order = shell_order(window);

  for (const auto& x : order) {
    const auto& img = image(x);
    if (img && !is_skew(*img)) {
      rep.image_skew = false;
      record(Axiom::ImageSkew, {x}, *img);
      break;
    }
  }

  for (const auto& x : order) {
    const auto& img = image(x);
    if (!img) continue;
    Tensor3 u;
    bool defined = true;
    for (const auto& [k, c] : *img) {
      const auto& inner = image(k[1]);
      if (!inner) {
        defined = false;
        break;
      }
      u += c * left_tensor(k[0], *inner);
    }
    if (!defined) continue;
    Tensor3 s = cyclic_sum(u);
    if (!s.is_zero()) {
      rep.co_jacobi = false;
      record(Axiom::CoJacobi, {x}, std::move(s));
      break;
    }
  }

  for (std::size_t i = 0; i < order.size() && rep.compatibility; ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const auto& x = order[i];
      const auto& y = order[j];
      Tensor2 lhs;
      if (auto br = bracket(x, y)) {
        const auto& iz = image(br->out);
        if (!iz) continue;
        lhs = br->coeff * *iz;
      }
      const auto& ix = image(x);
      const auto& iy = image(y);
      if (!ix || !iy) continue;
      Tensor2 defect = lhs - (act(x, *iy) - act(y, *ix));
      if (!defect.is_zero()) {
        rep.compatibility = false;
        record(Axiom::Compatibility, {x, y}, std::move(defect));
        break;
      }
    }
  }
  return rep;
}

}  // namespace

AxiomReport check_axioms(const CocommutatorSpec& spec, HalfInt window) {
  return check_axioms_impl(
      [&](const BasisVector& x) -> std::optional<Tensor2> {
        return act(x, spec.r) + special_apply(spec.d, x);
      },
      window);
}

AxiomReport check_axioms(const DerivationTable& table, HalfInt window) {
  if (window > table.window()) {
    throw Error(ErrorCode::WindowTooSmall, "check window " + window.str() +
                                               " exceeds table window " + table.window().str());
  }
  return check_axioms_impl(
      [&](const BasisVector& x) -> std::optional<Tensor2> {
        if (!table.covers(x)) return std::nullopt;
        return table.at(x);
      },
      window);
}

Tensor3 coboundary_cojacobi(const Tensor2& r, const Element& x) {
  Tensor3 u;
  for (const auto& [k, c] : delta_r(r, x)) u += c * left_tensor(k[0], act(k[1], r));
  return cyclic_sum(u);
}

bool coboundary_identity_check(const Tensor2& r, const Element& x) {
  if (!is_skew(r)) throw Error(ErrorCode::NotSkew, "r is not skew: " + format(r));
  return coboundary_cojacobi(r, x) == act(x, yang_baxter_c(r));
}

std::map<Degree, DerivationTable> decompose_derivation(const DerivationTable& t) {
  std::map<Degree, DerivationTable> out;
  for (const auto& [x, img] : t.images()) {
    for (const auto& [p, part] : graded_components(img)) {
      auto it = out.try_emplace(p - x.degree(), t.window()).first;
      it->second.set(x, part);
    }
  }
  return out;
}

Tensor2 inner_witness_nonzero_degree(const DerivationTable& t_alpha, Degree a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroDegree, "witness formula needs a nonzero degree");
  Tensor2 v = t_alpha.at(BasisVector::L(0)) * (1 / a.to_rational());
  for (const auto& [x, img] : t_alpha.images()) {
    if (act(x, v) != img) {
      throw Error(ErrorCode::WitnessMismatch,
                  "table disagrees with x.v at x = " + format(x) + ": expected " +
                      format(act(x, v)) + ", table has " + format(img));
    }
  }
  return v;
}

std::optional<Tensor2> match_inner_on_generators(const DerivationTable& t, HalfInt search_bound,
                                                 InnerSearchMode mode) {
  const auto& gens = generating_set();
  for (const auto& g : gens) {
    if (!t.covers(g)) {
      throw Error(ErrorCode::WindowTooSmall, "table does not cover generator " + format(g));
    }
  }
  const bool degree_preserving = std::all_of(gens.begin(), gens.end(), [&](const BasisVector& g) {
    const auto parts = graded_components(t.at(g));
    return parts.empty() || (parts.size() == 1 && parts.begin()->first == g.degree());
  });
  const bool restrict_degree0 = mode == InnerSearchMode::Auto && degree_preserving;

  std::vector<TensorKey<2>> unknowns;
  for (const auto& a : window_basis(search_bound)) {
    for (const auto& b : window_basis(search_bound)) {
      if (!restrict_degree0 || (a.degree() + b.degree()).is_zero()) unknowns.push_back({a, b});
    }
  }

  std::map<std::pair<std::size_t, TensorKey<2>>, std::size_t> row_of;
  RationalMatrix a(0, unknowns.size());
  std::vector<Rational> rhs;
  auto row = [&](std::size_t gi, const TensorKey<2>& k) {
    auto [it, inserted] = row_of.try_emplace({gi, k}, 0);
    if (inserted) {
      it->second = a.push_row();
      rhs.emplace_back(0);
    }
    return it->second;
  };
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    const Tensor2 unit(unknowns[j]);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      for (const auto& [k, c] : act(gens[gi], unit)) a.add(row(gi, k), j, c);
    }
  }
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    for (const auto& [k, c] : t.at(gens[gi])) rhs[row(gi, k)] += c;
  }

  auto sol = solve(a, rhs);
  if (!sol) return std::nullopt;
  Tensor2 v;
  for (std::size_t j = 0; j < unknowns.size(); ++j) v.add(unknowns[j], (*sol)[j]);
  return drop_m0m0(v);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::TriangularCoboundary: return "TriangularCoboundary";
    case Verdict::BialgebraNotCoboundary: return "BialgebraNotCoboundary";
    case Verdict::NotBialgebra: return "NotBialgebra";
  }
  return "unknown";
}

Certificate certify(const CocommutatorSpec& spec, HalfInt window) {
  Certificate cert{Verdict::NotBialgebra, {}, check_axioms(spec, window)};
  const auto& rep = cert.report;
  if (!rep.image_skew) {
    cert.reason = to_string(Axiom::ImageSkew);
  } else if (!rep.co_jacobi) {
    cert.reason = to_string(Axiom::CoJacobi);
  } else if (!rep.compatibility) {
    cert.reason = to_string(Axiom::Compatibility);
  } else if (!is_skew(drop_m0m0(spec.r))) {
    cert.reason = "r not skew modulo M_0(x)M_0";
  } else if (!spec.d.is_d1()) {
    cert.reason = "D outside the skew-image family";
  } else if (spec.d.is_zero() && check_cybe(drop_m0m0(spec.r))) {
    cert.verdict = Verdict::TriangularCoboundary;
  } else {
    cert.verdict = Verdict::BialgebraNotCoboundary;
  }
  return cert;
}

}  // namespace svlie
