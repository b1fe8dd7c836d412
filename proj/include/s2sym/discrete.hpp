#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "s2sym/intmat.hpp"
#include "s2sym/liegroup.hpp"

namespace s2sym {

/// Element A^q B^m C^n of D(theta) in normal form (A-powers collected left).
struct DElement {
  Integer q = 0, m = 0, n = 0;

  static DElement identity() { return {}; }
  static DElement a() { return {1, 0, 0}; }
  static DElement b() { return {0, 1, 0}; }
  static DElement c() { return {0, 0, 1}; }

  Vec2Z translation_exponents() const { return vec2z(m, n); }

  friend bool operator==(const DElement&, const DElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const DElement& d) {
    return os << "(" << d.q << "," << d.m << "," << d.n << ")";
  }
};

struct DElementHash {
  std::size_t operator()(const DElement& d) const noexcept {
    std::size_t h = std::hash<Integer>{}(d.q);
    h = h * 1000003u ^ std::hash<Integer>{}(d.m);
    return h * 1000003u ^ std::hash<Integer>{}(d.n);
  }
};

DElement dmul(const Theta& theta, const DElement& x, const DElement& y);
DElement dinv(const Theta& theta, const DElement& x);
DElement dpow(const Theta& theta, const DElement& x, Integer e);
/// x^-1 y^-1 x y.
DElement dcommutator(const Theta& theta, const DElement& x, const DElement& y);

/// 4x4 integer representation [[theta^q, (0 | theta^q (m,n))], [0, [[1,q],[0,1]]]].
Mat4Z rmat(const Theta& theta, const DElement& d);

/// Inverse of rmat on matrices of that block shape; nullopt otherwise.
std::optional<DElement> from_rmat(const Theta& theta, const Mat4Z& r);

/// e-basis coordinates (theta^q (m, n), q), exact.
std::array<Integer, 3> embed_exact(const Theta& theta, const DElement& d);

template <typename Scalar>
GroupPoint<Scalar> embed(const S2Group<Scalar>& g, const DElement& d) {
  const auto x = embed_exact(g.theta(), d);
  return GroupPoint<Scalar>::e(static_cast<Scalar>(x[0].value()), static_cast<Scalar>(x[1].value()),
                               static_cast<Scalar>(x[2].value()));
}

/// g1, g2, g3 as normal-form words; alpha_i, beta_i, gamma_i are their
/// A-, B- and C-exponents.
struct GeneratorTriple {
  std::array<DElement, 3> g;

  static GeneratorTriple standard() { return {{DElement::a(), DElement::b(), DElement::c()}}; }
  std::array<Integer, 3> alphas() const { return {g[0].q, g[1].q, g[2].q}; }
};

/// Nielsen-equivalent form: g1' = A B^beta1 C^gamma1 and g2', g3' free of A.
/// `exponents` holds [[beta2', beta3'], [gamma2', gamma3']].
struct ReducedTriple {
  Integer beta1 = 0, gamma1 = 0;
  Mat2Z exponents = Mat2Z::Identity();

  GeneratorTriple as_triple() const {
    return {{DElement{1, beta1, gamma1}, DElement{0, exponents(0, 0), exponents(1, 0)},
             DElement{0, exponents(0, 1), exponents(1, 1)}}};
  }
};

/// Throws NotGeneratingError when hcf(alpha1, alpha2, alpha3) != 1.
ReducedTriple reduce_generators(const Theta& theta, const GeneratorTriple& t);

/// tau1 = (beta2', gamma2'), tau2 = (beta3', gamma3'), tau3 = theta tau1, tau4 = theta tau2.
std::array<Vec2Z, 4> tau_vectors(const Theta& theta, const ReducedTriple& r);

/// Which generation condition failed first.
enum class GenerationViolation {
  None,
  AlphaHcf,      ///< hcf of the A-exponents is not 1
  ComponentHcf,  ///< hcf of the first (or second) components of the tau-vectors is not 1
  WedgeHcf,      ///< hcf of the pairwise wedges of the tau-vectors is not 1
};

std::string describe(GenerationViolation v);

struct GenerationResult {
  bool generates = false;
  GenerationViolation violated = GenerationViolation::None;
  std::optional<ReducedTriple> reduced;
  std::optional<std::array<Vec2Z, 4>> tau;
  Integer component_hcf_first = 0, component_hcf_second = 0, wedge_hcf = 0;
};

/// Decides whether the triple generates all of D(theta), with certificate.
GenerationResult generates_d(const Theta& theta, const GeneratorTriple& t);

}  // namespace s2sym
