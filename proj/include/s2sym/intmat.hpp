#pragma once

#include <Eigen/Core>

#include <array>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "s2sym/integer.hpp"

namespace s2sym {

using Mat2Z = Eigen::Matrix<Integer, 2, 2>;
using Vec2Z = Eigen::Matrix<Integer, 2, 1>;
using Mat4Z = Eigen::Matrix<Integer, 4, 4>;

/// Row-major construction: mat2z(a, b, c, d) = [[a, b], [c, d]].
inline Mat2Z mat2z(Integer a, Integer b, Integer c, Integer d) {
  Mat2Z m;
  m << a, b, c, d;
  return m;
}

inline Vec2Z vec2z(Integer x, Integer y) { return Vec2Z(x, y); }

inline Integer det(const Mat2Z& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
inline Integer trace(const Mat2Z& m) { return m(0, 0) + m(1, 1); }

/// x ^ y for plane vectors.
inline Integer wedge(const Vec2Z& x, const Vec2Z& y) { return x(0) * y(1) - x(1) * y(0); }

inline bool is_gl2z(const Mat2Z& m) { return abs(det(m)) == 1; }
inline bool is_sl2z(const Mat2Z& m) { return det(m) == 1; }

/// Exact inverse of a unimodular matrix; throws NotInvertibleError otherwise.
Mat2Z unimodular_inverse(const Mat2Z& m);

/// Nonnegative gcd of the absolute values. An all-zero list gives 0.
Integer hcf_all(std::span<const Integer> values);
Integer hcf_all(std::initializer_list<Integer> values);

/// Exact power; negative exponents need |det m| = 1.
Mat2Z mat2z_pow(const Mat2Z& m, Integer e);

/// Order p of theta in SL2(Z) for trace -2, -1, 0, 1 (p = 2, 3, 4, 6).
/// Throws InvalidParametersError for any other trace.
int theta_order(const Mat2Z& theta);

/// A matrix of SL2(Z) with trace in {-2, -1, 0, 1}; trace -2 forces -I.
/// These are exactly the theta that lie on a one-parameter subgroup with
/// complex-conjugate eigenvalues. Powers are cached (theta has finite order).
class Theta {
 public:
  explicit Theta(const Mat2Z& m);
  Theta(Integer a, Integer b, Integer c, Integer d) : Theta(mat2z(a, b, c, d)) {}

  const Mat2Z& matrix() const { return m_; }
  int trace() const { return static_cast<int>(s2sym::trace(m_).value()); }
  int order() const { return order_; }
  bool is_minus_identity() const { return trace() == -2; }
  Integer a() const { return m_(0, 0); }
  Integer b() const { return m_(0, 1); }
  Integer c() const { return m_(1, 0); }
  Integer d() const { return m_(1, 1); }

  /// theta^e for any integer e.
  const Mat2Z& pow(Integer e) const;

  friend bool operator==(const Theta& x, const Theta& y) { return x.m_ == y.m_; }

 private:
  Mat2Z m_;
  int order_;
  std::vector<Mat2Z> powers_;
};

/// Checks det = 1 and the trace class without throwing; returns an empty
/// string when admissible, otherwise a diagnostic.
std::string theta_diagnostic(const Mat2Z& m);

std::string to_string(const Mat2Z& m);

}  // namespace s2sym
