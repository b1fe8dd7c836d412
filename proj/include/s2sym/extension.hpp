#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "s2sym/autos.hpp"
#include "s2sym/discrete.hpp"
#include "s2sym/liegroup.hpp"
#include "s2sym/symmetry.hpp"

namespace s2sym {

/// sum_{j=1}^{q} theta^(j * sign), exact.
inline Mat2Z theta_power_sum(const Theta& theta, Integer q, int sign) {
  Mat2Z acc = Mat2Z::Zero();
  for (Integer j = 1; j <= q; j += 1) acc += theta.pow(j * sign);
  return acc;
}

/// The matrix taking (beta1, gamma1) to (gamma, delta), evaluated from the
/// q-dependent expression (1/q) W (F(B (-1)^eps q))^{-1} Mbar^{-T} sum_{j=1}^q theta^{j (-1)^eps}.
/// Requires q >= 1 and q != 0 mod p.
template <typename Scalar>
Mat2<Scalar> r_eps(const S2Group<Scalar>& g, int epsilon, Integer q) {
  if (epsilon != 0 && epsilon != 1) throw UsageError("epsilon must be 0 or 1");
  if (q < 1) throw UsageError("r_eps needs q >= 1");
  const int p = g.theta().order();
  if (floor_mod(q, p) == 0)
    throw SingularFError("F(B q) vanishes for q = " + std::to_string(q.value()) + " = 0 mod " + std::to_string(p));
  const int sign = epsilon == 0 ? 1 : -1;
  const auto qs = static_cast<Scalar>(q.value());
  const Mat2<Scalar> f = f_matrix(g.k(), Scalar(sign) * qs);
  const Mat2<Scalar> sum = to_real<Scalar>(theta_power_sum(g.theta(), q, sign));
  return (w_matrix<Scalar>(epsilon) * f.inverse() * g.mbar_inv_t() * sum) / qs;
}

/// W (F(B (-1)^eps))^{-T} Mbar^{-T}, the q-free form of r_eps.
template <typename Scalar>
Mat2<Scalar> r_eps_closed_form(const S2Group<Scalar>& g, int epsilon) {
  const Scalar s = epsilon == 0 ? Scalar(1) : Scalar(-1);
  return w_matrix<Scalar>(epsilon) * f_matrix(g.k(), s).inverse().transpose() * g.mbar_inv_t();
}

/// W Mbar^{-T} chi Mbar^T; for an extendable automorphism this has the
/// rotation-scaling form [[alpha, beta], [-beta, alpha]].
template <typename Scalar>
Mat2<Scalar> linear_block(const S2Group<Scalar>& g, int epsilon, const Mat2Z& chi) {
  return w_matrix<Scalar>(epsilon) * g.mbar_inv_t() * to_real<Scalar>(chi) * g.mbar().transpose();
}

/// Lifts an automorphism of D(theta) to the unique automorphism of S2(k).
/// Throws NoExtensionError if the linear block is not a rotation-scaling
/// (possible only for theta = -I).
template <typename Scalar>
GroupAutoParams<Scalar> extend(const S2Group<Scalar>& g, const DAutomorphism& phi, Scalar tol = Scalar(1e-9)) {
  if (auto why = d_automorphism_violation(g.theta(), phi.zeta, phi.chi); !why.empty())
    throw NotAutomorphismError(why);
  const int eps = phi.zeta == 1 ? 0 : 1;
  const Mat2<Scalar> blk = linear_block(g, eps, phi.chi);
  const Scalar scale = std::max(Scalar(1), blk.cwiseAbs().maxCoeff());
  if (std::abs(blk(0, 0) - blk(1, 1)) > tol * scale || std::abs(blk(0, 1) + blk(1, 0)) > tol * scale) {
    const std::string msg = "chi = " + to_string(phi.chi) + " with zeta = " + std::to_string(phi.zeta) +
                            " is not a rotation-scaling in the f-basis";
    if (g.theta().is_minus_identity()) throw NoExtensionError(msg);
    throw InconsistencyError(msg);
  }
  GroupAutoParams<Scalar> out;
  out.epsilon = eps;
  out.alpha = (blk(0, 0) + blk(1, 1)) / 2;
  out.beta = (blk(0, 1) - blk(1, 0)) / 2;
  const Vec2<Scalar> gd = r_eps(g, eps, 1) * to_real<Scalar>(vec2z(phi.beta1, phi.gamma1));
  out.gamma = gd(0);
  out.delta = gd(1);
  out.k = g.k();
  return out;
}

template <typename Scalar = double>
struct ExtensionReport {
  DAutomorphism input;
  GroupAutoParams<Scalar> output;
  Scalar max_discrepancy = 0;
  Integer box = 0;
  std::int64_t branch = 0;
  Scalar tolerance = Scalar(1e-9);
  bool passed = false;
};

/// Compares phi_D (exact, then embedded) with phi~ on every word
/// |q|, |m|, |n| <= box, in the f-basis. A point passes below
/// max(tolerance, 1e-12 |x|).
template <typename Scalar>
ExtensionReport<Scalar> verify_extension(const S2Group<Scalar>& g, const DAutomorphism& phi_d,
                                         const GroupAutoParams<Scalar>& phi_s, Integer box,
                                         Scalar tolerance = Scalar(1e-9)) {
  if (box < 0) throw UsageError("box radius must be >= 0");
  ExtensionReport<Scalar> rep{phi_d, phi_s, 0, box, g.branch(), tolerance, true};
  const Theta& theta = g.theta();
  for (Integer q = -box; q <= box; q += 1)
    for (Integer m = -box; m <= box; m += 1)
      for (Integer n = -box; n <= box; n += 1) {
        const DElement d{q, m, n};
        const auto lhs = convert_basis(g, embed(g, apply_d_automorphism(theta, phi_d, d)));
        const auto rhs = apply_group_auto(g, phi_s, convert_basis(g, embed(g, d)));
        const Scalar err = (lhs.x - rhs.x).cwiseAbs().maxCoeff();
        rep.max_discrepancy = std::max(rep.max_discrepancy, err);
        if (err > std::max(tolerance, Scalar(1e-12) * lhs.x.norm())) rep.passed = false;
      }
  return rep;
}

template <typename Scalar = double>
struct UniquenessReport {
  int epsilon = 0;
  Scalar alpha = 0, beta = 0;
  bool gamma_delta_determined = false;
  Scalar gamma = 0, delta = 0;
  std::vector<std::int64_t> informative_q;  ///< probe q used for gamma, delta
  std::string note;
  GroupAutoParams<Scalar> extended;
  Scalar max_deviation = 0;  ///< against extend(), over determined parameters
};

/// Re-derives the extension parameters from lattice data alone:
/// eps from the third coordinate of phi_D(A), (alpha, beta) from the images
/// of B and C, and (gamma, delta) by least squares over the images of A^q
/// for the probe q that are nonzero mod p.
template <typename Scalar>
UniquenessReport<Scalar> uniqueness_probe(const S2Group<Scalar>& g, const DAutomorphism& phi_d,
                                          std::vector<std::int64_t> probe_q = {}) {
  const Theta& theta = g.theta();
  const int p = theta.order();
  if (probe_q.empty())
    for (std::int64_t q = 1; q <= 2 * p; ++q) probe_q.push_back(q);

  UniquenessReport<Scalar> rep;
  const auto image_f = [&](const DElement& d) {
    return convert_basis(g, embed(g, apply_d_automorphism(theta, phi_d, d))).x;
  };
  const Scalar third = image_f(DElement::a())(2);
  rep.epsilon = third > 0 ? 0 : 1;
  const Mat2<Scalar> w = w_matrix<Scalar>(rep.epsilon);

  // Points B, C in the f-basis and their images; images = W S points.
  Mat2<Scalar> pts, imgs;
  pts.col(0) = convert_basis(g, embed(g, DElement::b())).x.template head<2>();
  pts.col(1) = convert_basis(g, embed(g, DElement::c())).x.template head<2>();
  imgs.col(0) = image_f(DElement::b()).template head<2>();
  imgs.col(1) = image_f(DElement::c()).template head<2>();
  const Mat2<Scalar> s = w * imgs * pts.inverse();
  rep.alpha = (s(0, 0) + s(1, 1)) / 2;
  rep.beta = (s(0, 1) - s(1, 0)) / 2;

  // F(B xi q) W q (gamma, delta) = image of A^q, stacked over informative q.
  std::vector<std::int64_t> used;
  for (auto q : probe_q)
    if (((q % p) + p) % p != 0) used.push_back(q);
  rep.informative_q = used;
  if (!used.empty()) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 2> lhs(2 * used.size(), 2);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs(2 * used.size());
    const Scalar xi = rep.epsilon == 0 ? Scalar(1) : Scalar(-1);
    for (std::size_t i = 0; i < used.size(); ++i) {
      const auto qs = static_cast<Scalar>(used[i]);
      lhs.template block<2, 2>(2 * i, 0) = f_matrix(g.k(), xi * qs) * w * qs;
      rhs.template segment<2>(2 * i) = image_f(DElement{used[i], 0, 0}).template head<2>();
    }
    const Vec2<Scalar> gd = lhs.colPivHouseholderQr().solve(rhs);
    rep.gamma_delta_determined = true;
    rep.gamma = gd(0);
    rep.delta = gd(1);
  } else {
    rep.note = "no information about gamma and delta: every probe q is 0 mod " + std::to_string(p);
  }

  rep.extended = extend(g, phi_d);
  rep.max_deviation = std::max(std::abs(rep.alpha - rep.extended.alpha), std::abs(rep.beta - rep.extended.beta));
  if (rep.epsilon != rep.extended.epsilon) rep.max_deviation = std::numeric_limits<Scalar>::infinity();
  if (rep.gamma_delta_determined)
    rep.max_deviation = std::max({rep.max_deviation, std::abs(rep.gamma - rep.extended.gamma),
                                  std::abs(rep.delta - rep.extended.delta)});
  return rep;
}

}  // namespace s2sym
