#pragma once

#include <optional>
#include <string>
#include <vector>

#include "s2sym/discrete.hpp"
#include "s2sym/intmat.hpp"

namespace s2sym {

/// S(theta) or R(theta). For theta = -I both are all of GL2(Z); `elements`
/// then holds the bounded sample |entries| <= sample_bound.
struct SymmetryGroup {
  enum class Kind { Finite, AllGL2Z };

  Kind kind = Kind::Finite;
  std::string label;  ///< C4, C6, D4, D6 or GL2Z
  std::vector<Mat2Z> elements;

  bool contains(const Mat2Z& m) const;
  std::size_t order() const { return elements.size(); }
};

/// Every GL2(Z) matrix with entries in [-bound, bound], row-major lexicographic.
std::vector<Mat2Z> gl2z_box(Integer bound);

/// The centralizer {chi in GL2(Z) : theta chi = chi theta}.
SymmetryGroup centralizer(const Theta& theta, Integer sample_bound = 1);

/// A reversing symmetry: Lambda theta Lambda^{-1} = theta^{-1}.
Mat2Z reversing_symmetry(const Theta& theta);

/// {chi in GL2(Z) : chi theta chi^{-1} = theta^{+-1}}.
SymmetryGroup reversing_group(const Theta& theta, Integer sample_bound = 1);

/// An automorphism of D(theta):
///   A -> A^zeta B^beta1 C^gamma1,  B -> B^chi11 C^chi21,  C -> B^chi12 C^chi22,
/// with chi in GL2(Z) and theta^zeta chi = chi theta.
struct DAutomorphism {
  int zeta = 1;
  Mat2Z chi = Mat2Z::Identity();
  Integer beta1 = 0, gamma1 = 0;

  static DAutomorphism identity() { return {}; }
  GeneratorTriple images() const {
    return {{DElement{zeta, beta1, gamma1}, DElement{0, chi(0, 0), chi(1, 0)}, DElement{0, chi(0, 1), chi(1, 1)}}};
  }
  friend bool operator==(const DAutomorphism&, const DAutomorphism&) = default;
};

/// Empty when (zeta, chi) are admissible for theta, else the violated condition.
std::string d_automorphism_violation(const Theta& theta, int zeta, const Mat2Z& chi);

/// Validating constructor; throws NotAutomorphismError with the violated condition.
DAutomorphism make_d_automorphism(const Theta& theta, int zeta, const Mat2Z& chi, Integer beta1, Integer gamma1);

/// Reads the automorphism parameters off a triple of generator images; empty
/// when the triple does not extend to an automorphism of D.
std::optional<DAutomorphism> as_d_automorphism(const Theta& theta, const GeneratorTriple& t);

/// Why `t` is not an automorphism triple (empty if it is).
std::string d_automorphism_violation(const Theta& theta, const GeneratorTriple& t);

/// phi(A)^q phi(B)^m phi(C)^n by exact word expansion.
DElement apply_d_automorphism(const Theta& theta, const DAutomorphism& phi, const DElement& d);

/// The automorphism psi o phi.
DAutomorphism compose_d_automorphisms(const Theta& theta, const DAutomorphism& psi, const DAutomorphism& phi);

enum class SymmetryClass {
  NotASymmetry,              ///< the triple does not generate D
  Elastic,                   ///< automorphism of D extending uniquely to S2
  InelasticNotAutomorphism,  ///< symmetry of D that is not an automorphism
  InelasticNoExtension,      ///< automorphism of D with no extension to S2(k)
};

std::string to_string(SymmetryClass c);

struct Classification {
  SymmetryClass cls = SymmetryClass::NotASymmetry;
  std::string reason;
  GenerationResult generation;
  std::optional<DAutomorphism> automorphism;
};

/// Classifies a change of generators. Extension is tested in S2(k) for the
/// smallest positive branch (the outcome does not depend on the branch).
Classification classify_symmetry(const Theta& theta, const GeneratorTriple& t);

struct IntRange {
  Integer lo = 0, hi = 0;
};

/// All D-automorphisms (zeta, chi) with chi in R(theta) crossed with the
/// (beta1, gamma1) box. For theta = -I, chi ranges over GL2(Z) with entries
/// bounded by `entry_bound` and both zeta are admissible.
std::vector<DAutomorphism> enumerate_d_automorphisms(const Theta& theta, IntRange beta1, IntRange gamma1,
                                                     Integer entry_bound = 1);

/// The automorphisms of D that extend to S2: for theta != -I this is every
/// D-automorphism with chi in R(theta); for theta = -I only the eight
/// (zeta, chi) compatible with the rotation structure survive.
std::vector<DAutomorphism> enumerate_elastic(const Theta& theta, IntRange beta1, IntRange gamma1);

}  // namespace s2sym
