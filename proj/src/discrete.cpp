#include "s2sym/discrete.hpp"

#include <utility>

namespace s2sym {

DElement dmul(const Theta& theta, const DElement& x, const DElement& y) {
  const Vec2Z t = theta.pow(-y.q) * x.translation_exponents() + y.translation_exponents();
  return {x.q + y.q, t(0), t(1)};
}

DElement dinv(const Theta& theta, const DElement& x) {
  const Vec2Z t = -(theta.pow(x.q) * x.translation_exponents());
  return {-x.q, t(0), t(1)};
}

DElement dpow(const Theta& theta, const DElement& x, Integer e) {
  DElement base = e < 0 ? dinv(theta, x) : x;
  std::int64_t n = abs(e).value();
  DElement result;
  while (n > 0) {
    if (n & 1) result = dmul(theta, result, base);
    n >>= 1;
    if (n > 0) base = dmul(theta, base, base);
  }
  return result;
}

DElement dcommutator(const Theta& theta, const DElement& x, const DElement& y) {
  return dmul(theta, dmul(theta, dinv(theta, x), dinv(theta, y)), dmul(theta, x, y));
}

Mat4Z rmat(const Theta& theta, const DElement& d) {
  const Mat2Z& tq = theta.pow(d.q);
  const Vec2Z t = tq * d.translation_exponents();
  Mat4Z r = Mat4Z::Zero();
  r.topLeftCorner<2, 2>() = tq;
  r(0, 3) = t(0);
  r(1, 3) = t(1);
  r(2, 2) = 1;
  r(2, 3) = d.q;
  r(3, 3) = 1;
  return r;
}

std::optional<DElement> from_rmat(const Theta& theta, const Mat4Z& r) {
  const Integer q = r(2, 3);
  const Mat2Z& tq = theta.pow(q);
  Mat4Z expect = Mat4Z::Zero();
  expect.topLeftCorner<2, 2>() = tq;
  expect(0, 3) = r(0, 3);
  expect(1, 3) = r(1, 3);
  expect(2, 2) = 1;
  expect(2, 3) = q;
  expect(3, 3) = 1;
  if (expect != r) return std::nullopt;
  const Vec2Z mn = theta.pow(-q) * vec2z(r(0, 3), r(1, 3));
  return DElement{q, mn(0), mn(1)};
}

std::array<Integer, 3> embed_exact(const Theta& theta, const DElement& d) {
  const Vec2Z t = theta.pow(d.q) * d.translation_exponents();
  return {t(0), t(1), d.q};
}

ReducedTriple reduce_generators(const Theta& theta, const GeneratorTriple& t) {
  const auto al = t.alphas();
  if (hcf_all({al[0], al[1], al[2]}) != 1)
    throw NotGeneratingError("hcf of A-exponents is " + std::to_string(hcf_all({al[0], al[1], al[2]}).value()));

  std::array<DElement, 3> g = t.g;
  // Euclid on the A-exponents through Nielsen moves g_i -> g_i g_j^{-s};
  // sum |alpha_i| strictly decreases until a single nonzero exponent remains.
  while (true) {
    int nonzero = 0;
    for (const auto& x : g) nonzero += x.q != 0;
    if (nonzero <= 1) break;
    int big = -1, small = -1;
    for (int i = 0; i < 3; ++i) {
      if (g[i].q == 0) continue;
      if (big < 0 || abs(g[i].q) > abs(g[big].q)) big = i;
    }
    for (int i = 0; i < 3; ++i) {
      if (i == big || g[i].q == 0) continue;
      if (small < 0 || abs(g[i].q) < abs(g[small].q)) small = i;
    }
    const Integer quotient = g[big].q / g[small].q;  // truncation keeps |remainder| < |alpha_small|
    g[big] = dmul(theta, g[big], dpow(theta, g[small], -quotient));
  }
  int carrier = 0;
  for (int i = 0; i < 3; ++i)
    if (g[i].q != 0) carrier = i;
  if (carrier != 0) std::swap(g[0], g[carrier]);
  if (g[0].q == -1) g[0] = dinv(theta, g[0]);
  if (g[0].q != 1) throw InconsistencyError("Nielsen reduction did not reach A-exponent 1");

  ReducedTriple r;
  r.beta1 = g[0].m;
  r.gamma1 = g[0].n;
  r.exponents = mat2z(g[1].m, g[2].m, g[1].n, g[2].n);
  return r;
}

std::array<Vec2Z, 4> tau_vectors(const Theta& theta, const ReducedTriple& r) {
  const Vec2Z tau1 = r.exponents.col(0);
  const Vec2Z tau2 = r.exponents.col(1);
  return {tau1, tau2, theta.matrix() * tau1, theta.matrix() * tau2};
}

std::string describe(GenerationViolation v) {
  switch (v) {
    case GenerationViolation::None: return "none";
    case GenerationViolation::AlphaHcf: return "hcf(alpha) != 1";
    case GenerationViolation::ComponentHcf: return "hcf of tau components != 1";
    case GenerationViolation::WedgeHcf: return "hcf of tau wedges != 1";
  }
  return "unknown";
}

GenerationResult generates_d(const Theta& theta, const GeneratorTriple& t) {
  GenerationResult res;
  const auto al = t.alphas();
  if (hcf_all({al[0], al[1], al[2]}) != 1) {
    res.violated = GenerationViolation::AlphaHcf;
    return res;
  }
  res.reduced = reduce_generators(theta, t);
  res.tau = tau_vectors(theta, *res.reduced);
  const auto& tau = *res.tau;
  res.component_hcf_first = hcf_all({tau[0](0), tau[1](0), tau[2](0), tau[3](0)});
  res.component_hcf_second = hcf_all({tau[0](1), tau[1](1), tau[2](1), tau[3](1)});
  std::vector<Integer> wedges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) wedges.push_back(wedge(tau[i], tau[j]));
  res.wedge_hcf = hcf_all(wedges);
  if (res.component_hcf_first != 1 || res.component_hcf_second != 1)
    res.violated = GenerationViolation::ComponentHcf;
  else if (res.wedge_hcf != 1)
    res.violated = GenerationViolation::WedgeHcf;
  res.generates = res.violated == GenerationViolation::None;
  return res;
}

}  // namespace s2sym
