#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <optional>

#include "s2sym/liegroup.hpp"

namespace s2sym {

/// P = [[0,1,0],[1,0,0],[0,0,-1]].
template <typename Scalar>
Mat3<Scalar> p_matrix() {
  Mat3<Scalar> p;
  p << 0, 1, 0, 1, 0, 0, 0, 0, -1;
  return p;
}

/// An automorphism of the Lie algebra s2 in the f-basis,
/// L = P^eps [[alpha, beta, gamma], [-beta, alpha, delta], [0, 0, 1]].
template <typename Scalar = double>
struct LieAlgebraAuto {
  int epsilon = 0;
  Scalar alpha = 1, beta = 0, gamma = 0, delta = 0;

  static LieAlgebraAuto identity() { return {}; }

  Mat3<Scalar> matrix() const {
    Mat3<Scalar> r;
    r << alpha, beta, gamma, -beta, alpha, delta, 0, 0, 1;
    return epsilon == 0 ? r : Mat3<Scalar>(p_matrix<Scalar>() * r);
  }
  int zeta() const { return epsilon == 0 ? 1 : -1; }
};

/// Automorphism of the group S2(k), same parameters as the algebra
/// automorphism it integrates, plus the k of the owning group.
template <typename Scalar = double>
struct GroupAutoParams {
  int epsilon = 0;
  Scalar alpha = 1, beta = 0, gamma = 0, delta = 0;
  Scalar k = 1;

  static GroupAutoParams from_algebra(const LieAlgebraAuto<Scalar>& l, Scalar k) {
    return {l.epsilon, l.alpha, l.beta, l.gamma, l.delta, k};
  }
  LieAlgebraAuto<Scalar> algebra() const { return {epsilon, alpha, beta, gamma, delta}; }
  int zeta() const { return epsilon == 0 ? 1 : -1; }
};

/// Residual of C_ijk L_jp L_kq = L_ir C_rpq for the f-basis structure
/// constants with k = 1 (the condition is homogeneous in k).
template <typename Scalar>
Scalar algebra_condition_residual(const Mat3<Scalar>& l) {
  StructureConstants<Scalar> c;
  for (auto& m : c) m.setZero();
  c[1](0, 2) = 1;
  c[1](2, 0) = -1;
  c[0](1, 2) = -1;
  c[0](2, 1) = 1;
  Scalar worst = 0;
  for (int i = 0; i < 3; ++i) {
    const Mat3<Scalar> lhs = l.transpose() * c[i] * l;
    Mat3<Scalar> rhs = Mat3<Scalar>::Zero();
    for (int r = 0; r < 3; ++r) rhs += l(i, r) * c[r];
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

/// Recognises the automorphism shape within `tol` entrywise and extracts the
/// parameters; std::nullopt when L is not an automorphism of s2.
template <typename Scalar>
std::optional<LieAlgebraAuto<Scalar>> is_algebra_auto(const Mat3<Scalar>& l, Scalar tol = Scalar(1e-10)) {
  int eps;
  if (std::abs(l(2, 2) - 1) <= tol)
    eps = 0;
  else if (std::abs(l(2, 2) + 1) <= tol)
    eps = 1;
  else
    return std::nullopt;
  const Mat3<Scalar> r = eps == 0 ? l : Mat3<Scalar>(p_matrix<Scalar>() * l);
  if (std::abs(r(2, 0)) > tol || std::abs(r(2, 1)) > tol) return std::nullopt;
  if (std::abs(r(0, 0) - r(1, 1)) > tol || std::abs(r(0, 1) + r(1, 0)) > tol) return std::nullopt;
  LieAlgebraAuto<Scalar> out{eps, (r(0, 0) + r(1, 1)) / 2, (r(0, 1) - r(1, 0)) / 2, r(0, 2), r(1, 2)};
  if (out.alpha * out.alpha + out.beta * out.beta <= Scalar(1e-12)) return std::nullopt;
  const Scalar scale = std::max(Scalar(1), l.cwiseAbs().maxCoeff());
  if (algebra_condition_residual(l) > tol * scale * scale * 10) return std::nullopt;
  return out;
}

/// Unique factorisation L = p t s with p in P, t in T (translations gamma,
/// delta), s in S (rotation-scalings alpha, beta).
template <typename Scalar = double>
struct PtsFactors {
  int epsilon = 0;
  Scalar gamma = 0, delta = 0;
  Scalar alpha = 1, beta = 0;

  Mat3<Scalar> p() const { return epsilon == 0 ? Mat3<Scalar>::Identity() : p_matrix<Scalar>(); }
  Mat3<Scalar> t() const {
    Mat3<Scalar> m = Mat3<Scalar>::Identity();
    m(0, 2) = gamma;
    m(1, 2) = delta;
    return m;
  }
  Mat3<Scalar> s() const {
    Mat3<Scalar> m = Mat3<Scalar>::Identity();
    m(0, 0) = alpha;
    m(1, 1) = alpha;
    m(0, 1) = beta;
    m(1, 0) = -beta;
    return m;
  }
  Mat3<Scalar> product() const { return p() * t() * s(); }
};

template <typename Scalar>
PtsFactors<Scalar> pts_factor(const LieAlgebraAuto<Scalar>& l) {
  return {l.epsilon, l.gamma, l.delta, l.alpha, l.beta};
}

/// The group automorphism with parameters phi applied to an f-basis point.
template <typename Scalar>
GroupPoint<Scalar> apply_group_auto(const GroupAutoParams<Scalar>& phi, const GroupPoint<Scalar>& v) {
  if (v.basis != Basis::F) throw UsageError("apply_group_auto expects an f-basis point");
  const Scalar k = phi.k;
  const Scalar v1 = v.x(0), v2 = v.x(1), v3 = v.x(2);
  const Scalar sn = std::sin(k * v3) / k;
  const Scalar half = std::sin(k * v3 / 2);
  const Scalar cs = 2 * half * half / k;
  const Scalar first = phi.alpha * v1 + phi.beta * v2 + phi.gamma * sn + phi.delta * cs;
  const Scalar second = -phi.beta * v1 + phi.alpha * v2 - phi.gamma * cs + phi.delta * sn;
  if (phi.epsilon == 0) return GroupPoint<Scalar>::f(first, second, v3);
  return GroupPoint<Scalar>::f(second, first, -v3);
}

template <typename Scalar>
GroupPoint<Scalar> apply_group_auto(const S2Group<Scalar>& g, const GroupAutoParams<Scalar>& phi,
                                    const GroupPoint<Scalar>& v) {
  GroupAutoParams<Scalar> p = phi;
  p.k = g.k();
  return apply_group_auto(p, v);
}

/// Jacobian of the group automorphism at the origin by central differences.
template <typename Scalar>
Mat3<Scalar> gradient_at_identity(const S2Group<Scalar>& g, const GroupAutoParams<Scalar>& phi,
                                  Scalar h = Scalar(1e-5)) {
  Mat3<Scalar> jac;
  for (int j = 0; j < 3; ++j) {
    GroupPoint<Scalar> plus = GroupPoint<Scalar>::origin(Basis::F), minus = plus;
    plus.x(j) = h;
    minus.x(j) = -h;
    jac.col(j) = (apply_group_auto(g, phi, plus).x - apply_group_auto(g, phi, minus).x) / (2 * h);
  }
  return jac;
}

}  // namespace s2sym
