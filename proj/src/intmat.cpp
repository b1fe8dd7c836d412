#include "s2sym/intmat.hpp"

#include <numeric>
#include <sstream>

namespace s2sym {

Mat2Z unimodular_inverse(const Mat2Z& m) {
  const Integer dt = det(m);
  if (abs(dt) != 1) throw NotInvertibleError("matrix " + to_string(m) + " is not unimodular");
  return mat2z(dt * m(1, 1), -dt * m(0, 1), -dt * m(1, 0), dt * m(0, 0));
}

Integer hcf_all(std::span<const Integer> values) {
  if (values.empty()) throw UsageError("hcf_all of an empty list");
  Integer g = 0;
  for (Integer v : values) g = std::gcd(abs(g).value(), abs(v).value());
  return g;
}

Integer hcf_all(std::initializer_list<Integer> values) {
  return hcf_all(std::span<const Integer>(values.begin(), values.size()));
}

Mat2Z mat2z_pow(const Mat2Z& m, Integer e) {
  Mat2Z base = m;
  if (e < 0) {
    base = unimodular_inverse(m);
    e = -e;
  }
  Mat2Z result = Mat2Z::Identity();
  std::int64_t n = e.value();
  while (n > 0) {
    if (n & 1) result = (result * base).eval();
    n >>= 1;
    if (n > 0) base = (base * base).eval();
  }
  return result;
}

int theta_order(const Mat2Z& theta) {
  int p = 0;
  switch (trace(theta).value()) {
    case -2: p = 2; break;
    case -1: p = 3; break;
    case 0: p = 4; break;
    case 1: p = 6; break;
    default:
      throw InvalidParametersError("trace " + std::to_string(trace(theta).value()) + " outside S2 class");
  }
  if (mat2z_pow(theta, p) != Mat2Z::Identity())
    throw InvalidParametersError("theta " + to_string(theta) + " has no finite order " + std::to_string(p));
  return p;
}

std::string theta_diagnostic(const Mat2Z& m) {
  const Integer tr = trace(m);
  if (tr < -2 || tr > 1) return "trace " + std::to_string(tr.value()) + " outside S2 class";
  if (det(m) != 1) return "theta " + to_string(m) + " has det " + std::to_string(det(m).value()) + ", not 1";
  if (tr == -2 && m != Mat2Z(-Mat2Z::Identity()))
    return "trace -2 requires theta = -I (" + to_string(m) + " is parabolic)";
  return {};
}

Theta::Theta(const Mat2Z& m) : m_(m) {
  if (auto diag = theta_diagnostic(m); !diag.empty()) throw InvalidParametersError(diag);
  order_ = theta_order(m);
  powers_.reserve(order_);
  powers_.push_back(Mat2Z::Identity());
  for (int j = 1; j < order_; ++j) powers_.push_back((powers_.back() * m_).eval());
}

const Mat2Z& Theta::pow(Integer e) const { return powers_[floor_mod(e, order_).value()]; }

std::string to_string(const Mat2Z& m) {
  std::ostringstream os;
  os << "[[" << m(0, 0) << "," << m(0, 1) << "],[" << m(1, 0) << "," << m(1, 1) << "]]";
  return os.str();
}

}  // namespace s2sym
