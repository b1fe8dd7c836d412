#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "s2sym/errors.hpp"
#include "s2sym/intmat.hpp"

namespace s2sym {

/// Coordinates with respect to {e1, e2, e3} (lattice basis) or
/// {f1, f2, f3} (the basis in which the one-parameter subgroup is a rotation).
enum class Basis { E, F };

inline const char* to_string(Basis b) { return b == Basis::E ? "E" : "F"; }

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

/// Structure constants C[i](j, k) = C_ijk.
template <typename Scalar>
using StructureConstants = std::array<Mat3<Scalar>, 3>;

/// A point of S2 (or a vector of its Lie algebra) with its basis tag.
template <typename Scalar = double>
struct GroupPoint {
  Vec3<Scalar> x = Vec3<Scalar>::Zero();
  Basis basis = Basis::E;

  static GroupPoint origin(Basis b) { return {Vec3<Scalar>::Zero(), b}; }
  static GroupPoint e(Scalar x1, Scalar x2, Scalar x3) { return {Vec3<Scalar>(x1, x2, x3), Basis::E}; }
  static GroupPoint f(Scalar u1, Scalar u2, Scalar u3) { return {Vec3<Scalar>(u1, u2, u3), Basis::F}; }
};

template <typename To, typename From>
Mat2<To> cast_mat2z(const Mat2Z& m) {
  Mat2<To> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = static_cast<To>(static_cast<From>(m(i, j).value()));
  return r;
}

template <typename Scalar>
Mat2<Scalar> to_real(const Mat2Z& m) {
  return cast_mat2z<Scalar, std::int64_t>(m);
}

template <typename Scalar>
Vec2<Scalar> to_real(const Vec2Z& v) {
  return Vec2<Scalar>(static_cast<Scalar>(v(0).value()), static_cast<Scalar>(v(1).value()));
}

/// Whether n is an admissible branch for the given trace class, i.e. n = +-1
/// modulo 2, 3, 4, 6 for trace -2, -1, 0, 1.
inline bool admissible_branch(int trace, std::int64_t n) {
  const std::int64_t mod = trace == -2 ? 2 : trace == -1 ? 3 : trace == 0 ? 4 : trace == 1 ? 6 : 0;
  if (mod == 0) return false;
  const std::int64_t r = ((n % mod) + mod) % mod;
  return r == 1 || r == mod - 1;
}

/// The first `count` positive admissible branches.
inline std::vector<std::int64_t> positive_branches(int trace, int count) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; static_cast<int>(out.size()) < count; ++n)
    if (admissible_branch(trace, n)) out.push_back(n);
  return out;
}

/// k for the trace class and branch n.
template <typename Scalar = double>
Scalar branch_k(int trace, std::int64_t n) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const auto sn = static_cast<Scalar>(n);
  switch (trace) {
    case -2: return pi * sn;
    case -1: return Scalar(2) * pi * sn / Scalar(3);
    case 0: return pi * sn / Scalar(2);
    case 1: return pi * sn / Scalar(3);
    default: throw InvalidParametersError("trace " + std::to_string(trace) + " outside S2 class");
  }
}

/// W(eps) = [[0,1],[1,0]]^eps.
template <typename Scalar>
Mat2<Scalar> w_matrix(int epsilon) {
  Mat2<Scalar> w;
  if (epsilon == 0)
    w.setIdentity();
  else
    w << 0, 1, 1, 0;
  return w;
}

/// Rotation form of the one-parameter subgroup in the f-basis:
/// [[cos t, sin t], [-sin t, cos t]].
template <typename Scalar>
Mat2<Scalar> rotation(Scalar t) {
  Mat2<Scalar> r;
  r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  return r;
}

/// F(B s) = sum_j (B s)^j / (j+1)! with B = [[0,k],[-k,0]].
/// Below |k s| < 1e-8 the two-term series I + B s / 2 is used.
template <typename Scalar>
Mat2<Scalar> f_matrix(Scalar k, Scalar s) {
  const Scalar ks = k * s;
  Mat2<Scalar> f;
  if (std::abs(ks) < Scalar(1e-8)) {
    f << 1, ks / 2, -ks / 2, 1;
    return f;
  }
  const Scalar sn = std::sin(ks) / ks;
  const Scalar half = std::sin(ks / 2);
  const Scalar cs = 2 * half * half / ks;  // (1 - cos ks) / ks without cancellation
  f << sn, cs, -cs, sn;
  return f;
}

/// The continuous group S2(theta, k): points of R^3 with composition
/// psi(x, y) = x + phi(x3) (y1, y2) + y3 e3, phi(x) = exp(A x), phi(1) = theta.
template <typename Scalar = double>
class S2Group {
 public:
  S2Group(const Theta& theta, std::int64_t n) : theta_(theta), n_(n) {
    const int tr = theta.trace();
    if (!admissible_branch(tr, n))
      throw InvalidParametersError("branch n=" + std::to_string(n) + " not admissible for trace " +
                                   std::to_string(tr));
    k_ = branch_k<Scalar>(tr, n);
    if (tr == -2) {
      a_ << 0, k_, -k_, 0;
    } else {
      const Scalar scale = k_ / std::sin(k_);
      const auto a = static_cast<Scalar>(theta.a().value());
      const auto b = static_cast<Scalar>(theta.b().value());
      const auto c = static_cast<Scalar>(theta.c().value());
      const auto d = static_cast<Scalar>(theta.d().value());
      a_ << scale * (a - d) / 2, scale * b, scale * c, -scale * (a - d) / 2;
    }
    const Scalar ap = a_(0, 0), bp = a_(0, 1);
    if (bp == Scalar(0)) throw InconsistencyError("b'(0) = 0: change of basis is singular");
    m_ << -bp, ap + k_, 0,  //
        -bp, ap - k_, 0,    //
        0, 0, 1;
    m_inv_t_ = m_.transpose().inverse();
    s_ << -bp, ap, 0,  //
        ap, a_(1, 0), 0,  //
        0, 0, 0;

    const Mat2<Scalar> err = phi(Scalar(1)) - to_real<Scalar>(theta.matrix());
    if (err.cwiseAbs().maxCoeff() > Scalar(1e-10))
      throw InconsistencyError("exp(A) does not reproduce theta");
  }

  const Theta& theta() const { return theta_; }
  std::int64_t branch() const { return n_; }
  Scalar k() const { return k_; }
  /// A = phi'(0) in the e-basis.
  const Mat2<Scalar>& a_matrix() const { return a_; }
  /// f_i = M_ij e_j.
  const Mat3<Scalar>& m_matrix() const { return m_; }
  const Mat3<Scalar>& m_inv_t() const { return m_inv_t_; }
  Mat2<Scalar> mbar() const { return m_.template topLeftCorner<2, 2>(); }
  Mat2<Scalar> mbar_inv_t() const { return m_inv_t_.template topLeftCorner<2, 2>(); }
  /// Dislocation density, [[-b', a', 0], [a', c', 0], [0, 0, 0]].
  const Mat3<Scalar>& dislocation_density() const { return s_; }
  /// B = [[0, k], [-k, 0]], the f-basis form of A.
  Mat2<Scalar> b_matrix() const {
    Mat2<Scalar> b;
    b << 0, k_, -k_, 0;
    return b;
  }

  /// phi(x3) = cos(k x3) I + sin(k x3)/k A.
  Mat2<Scalar> phi(Scalar x3) const {
    return std::cos(k_ * x3) * Mat2<Scalar>::Identity() + (std::sin(k_ * x3) / k_) * a_;
  }

  /// The one-parameter subgroup in the basis of p's tag.
  Mat2<Scalar> phi(Scalar x3, Basis b) const { return b == Basis::E ? phi(x3) : rotation<Scalar>(k_ * x3); }

 private:
  Theta theta_;
  std::int64_t n_;
  Scalar k_;
  Mat2<Scalar> a_;
  Mat3<Scalar> m_;
  Mat3<Scalar> m_inv_t_;
  Mat3<Scalar> s_;
};

template <typename Scalar = double>
S2Group<Scalar> make_group(const Theta& theta, std::int64_t n) {
  return S2Group<Scalar>(theta, n);
}

template <typename Scalar>
Mat2<Scalar> phi_of(const S2Group<Scalar>& g, Scalar x3) {
  return g.phi(x3);
}

template <typename Scalar>
GroupPoint<Scalar> compose(const S2Group<Scalar>& g, const GroupPoint<Scalar>& x, const GroupPoint<Scalar>& y) {
  if (x.basis != y.basis) throw UsageError("compose: mixed basis tags");
  GroupPoint<Scalar> r{x.x, x.basis};
  r.x.template head<2>() += g.phi(x.x(2), x.basis) * y.x.template head<2>();
  r.x(2) += y.x(2);
  return r;
}

template <typename Scalar>
GroupPoint<Scalar> inverse(const S2Group<Scalar>& g, const GroupPoint<Scalar>& x) {
  GroupPoint<Scalar> r{Vec3<Scalar>::Zero(), x.basis};
  r.x.template head<2>() = -(g.phi(-x.x(2), x.basis) * x.x.template head<2>());
  r.x(2) = -x.x(2);
  return r;
}

/// Right-invariant lattice vector fields l_1, l_2, l_3 at x (e-basis).
template <typename Scalar>
std::array<Vec3<Scalar>, 3> lattice_fields(const S2Group<Scalar>& g, const GroupPoint<Scalar>& x) {
  if (x.basis != Basis::E) throw UsageError("lattice_fields expects an e-basis point");
  const auto& a = g.a_matrix();
  const Scalar ap = a(0, 0), bp = a(0, 1), cp = a(1, 0);
  return {Vec3<Scalar>::UnitX(), Vec3<Scalar>::UnitY(),
          Vec3<Scalar>(ap * x.x(0) + bp * x.x(1), cp * x.x(0) - ap * x.x(1), Scalar(1))};
}

/// Analytic structure constants in the requested basis.
template <typename Scalar>
StructureConstants<Scalar> structure_constants(const S2Group<Scalar>& g, Basis b) {
  StructureConstants<Scalar> c;
  for (auto& m : c) m.setZero();
  if (b == Basis::E) {
    // [x, y]_i = A_ik (x3 y_k - x_k y3) for i, k in {1, 2}
    const auto& a = g.a_matrix();
    for (int i = 0; i < 2; ++i)
      for (int kk = 0; kk < 2; ++kk) {
        c[i](2, kk) = a(i, kk);
        c[i](kk, 2) = -a(i, kk);
      }
  } else {
    // [f1, f3] = k f2, [f2, f3] = -k f1
    c[1](0, 2) = g.k();
    c[1](2, 0) = -g.k();
    c[0](1, 2) = -g.k();
    c[0](2, 1) = g.k();
  }
  return c;
}

template <typename Scalar>
Vec3<Scalar> bracket(const S2Group<Scalar>& g, const Vec3<Scalar>& x, const Vec3<Scalar>& y, Basis b) {
  if (b == Basis::E) {
    const auto& a = g.a_matrix();
    const Scalar ap = a(0, 0), bp = a(0, 1), cp = a(1, 0);
    const Vec3<Scalar> w = x.cross(y);
    return Vec3<Scalar>(ap * w(1) - bp * w(0), cp * w(1) + ap * w(0), Scalar(0));
  }
  const Scalar k = g.k();
  // C_ijk = k (d_3j e_3ik - d_3k e_3ij)
  return Vec3<Scalar>(k * (x(2) * y(1) - x(1) * y(2)), k * (x(0) * y(2) - x(2) * y(0)), Scalar(0));
}

/// e^(u) = (F(B u3) (u1, u2), u3) in the f-basis.
template <typename Scalar>
GroupPoint<Scalar> exp_map(const S2Group<Scalar>& g, const GroupPoint<Scalar>& u) {
  if (u.basis != Basis::F) throw UsageError("exp_map expects an f-basis algebra vector");
  GroupPoint<Scalar> r{u.x, Basis::F};
  r.x.template head<2>() = f_matrix(g.k(), u.x(2)) * u.x.template head<2>();
  return r;
}

/// Splits v as psi(e^(s), e^(t)) with s = (v1, v2, 0), t = (0, 0, v3).
template <typename Scalar>
std::pair<Vec3<Scalar>, Vec3<Scalar>> two_exp_decompose(const GroupPoint<Scalar>& v) {
  if (v.basis != Basis::F) throw UsageError("two_exp_decompose expects an f-basis point");
  return {Vec3<Scalar>(v.x(0), v.x(1), 0), Vec3<Scalar>(0, 0, v.x(2))};
}

/// E -> F multiplies by M^{-T}; F -> E by M^T.
template <typename Scalar>
GroupPoint<Scalar> convert_basis(const S2Group<Scalar>& g, const GroupPoint<Scalar>& p) {
  if (p.basis == Basis::E) return {g.m_inv_t() * p.x, Basis::F};
  return {g.m_matrix().transpose() * p.x, Basis::E};
}

template <typename Scalar>
GroupPoint<Scalar> to_basis(const S2Group<Scalar>& g, const GroupPoint<Scalar>& p, Basis b) {
  return p.basis == b ? p : convert_basis(g, p);
}

namespace detail {

/// D[i](j, k) = d^2 psi_i / dx_j dy_k at (0, 0), central differences with step h.
template <typename Scalar>
StructureConstants<Scalar> mixed_partials(const S2Group<Scalar>& g, Basis b, Scalar h) {
  StructureConstants<Scalar> d;
  for (int j = 0; j < 3; ++j)
    for (int kk = 0; kk < 3; ++kk) {
      Vec3<Scalar> acc = Vec3<Scalar>::Zero();
      for (int sx : {1, -1})
        for (int sy : {1, -1}) {
          GroupPoint<Scalar> x = GroupPoint<Scalar>::origin(b), y = GroupPoint<Scalar>::origin(b);
          x.x(j) = sx * h;
          y.x(kk) = sy * h;
          acc += Scalar(sx * sy) * compose(g, x, y).x;
        }
      for (int i = 0; i < 3; ++i) d[i](j, kk) = acc(i) / (4 * h * h);
    }
  return d;
}

}  // namespace detail

/// C_ijk = D_ijk - D_ikj from central mixed differences of psi at (0, 0).
/// Steps h and h/2 are combined by one Richardson step, so the truncation
/// error is O(k^5 h^4) rather than O(k^3 h^2); plain h = 1e-4 loses 1e-6
/// accuracy once k exceeds about 8.
template <typename Scalar>
StructureConstants<Scalar> structure_constants_fd(const S2Group<Scalar>& g, Basis b, Scalar h = Scalar(1e-4)) {
  const auto coarse = detail::mixed_partials(g, b, h);
  const auto fine = detail::mixed_partials(g, b, h / 2);
  StructureConstants<Scalar> c;
  for (int i = 0; i < 3; ++i) {
    const Mat3<Scalar> d = (4 * fine[i] - coarse[i]) / 3;
    c[i] = d - d.transpose();
  }
  return c;
}

}  // namespace s2sym
