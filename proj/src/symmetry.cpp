#include "s2sym/symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "s2sym/extension.hpp"

namespace s2sym {

namespace {

void push_unique(std::vector<Mat2Z>& v, const Mat2Z& m) {
  if (std::find(v.begin(), v.end(), m) == v.end()) v.push_back(m);
}

std::array<Integer, 4> entries(const Mat2Z& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

Mat2Z from_entries(const std::array<Integer, 4>& e) { return mat2z(e[0], e[1], e[2], e[3]); }

/// Integer matrix K with K vec(L) = vec(L theta - theta^{-1} L), row-major vec.
std::array<std::array<Integer, 4>, 4> reversing_system(const Theta& theta) {
  const Mat2Z inv = theta.pow(-1);
  std::array<std::array<Integer, 4>, 4> k{};
  for (int j = 0; j < 4; ++j) {
    std::array<Integer, 4> unit{};
    unit[j] = 1;
    const Mat2Z e = from_entries(unit);
    const auto col = entries(Mat2Z(e * theta.matrix() - inv * e));
    for (int i = 0; i < 4; ++i) k[i][j] = col[i];
  }
  return k;
}

}  // namespace

bool SymmetryGroup::contains(const Mat2Z& m) const {
  if (kind == Kind::AllGL2Z) return is_gl2z(m);
  return std::find(elements.begin(), elements.end(), m) != elements.end();
}

std::vector<Mat2Z> gl2z_box(Integer bound) {
  std::vector<Mat2Z> out;
  for (Integer a = -bound; a <= bound; a += 1)
    for (Integer b = -bound; b <= bound; b += 1)
      for (Integer c = -bound; c <= bound; c += 1)
        for (Integer d = -bound; d <= bound; d += 1) {
          const Mat2Z m = mat2z(a, b, c, d);
          if (is_gl2z(m)) out.push_back(m);
        }
  return out;
}

SymmetryGroup centralizer(const Theta& theta, Integer sample_bound) {
  SymmetryGroup s;
  if (theta.is_minus_identity()) {
    s.kind = SymmetryGroup::Kind::AllGL2Z;
    s.label = "GL2Z";
    s.elements = gl2z_box(sample_bound);
    return s;
  }
  for (int j = 0; j < theta.order(); ++j) {
    push_unique(s.elements, theta.pow(j));
    push_unique(s.elements, Mat2Z(-theta.pow(j)));
  }
  s.label = theta.trace() == 0 ? "C4" : "C6";
  if (s.elements.size() != (theta.trace() == 0 ? 4u : 6u))
    throw InconsistencyError("centralizer of " + to_string(theta.matrix()) + " has unexpected order");
  return s;
}

Mat2Z reversing_symmetry(const Theta& theta) {
  if (theta.is_minus_identity()) return mat2z(1, 0, 0, -1);

  // Fraction-free Gauss-Jordan elimination of L -> L theta - theta^{-1} L.
  auto k = reversing_system(theta);
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < 4 && row < 4; ++col) {
    int piv = -1;
    for (int r = row; r < 4; ++r)
      if (k[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(k[row], k[piv]);
    for (int r = 0; r < 4; ++r) {
      if (r == row || k[r][col] == 0) continue;
      const Integer f = k[r][col], pv = k[row][col];
      Integer g = 0;
      for (int c = 0; c < 4; ++c) {
        k[r][c] = k[r][c] * pv - k[row][c] * f;
        g = std::gcd(g.value(), abs(k[r][c]).value());
      }
      if (g > 1)
        for (int c = 0; c < 4; ++c) k[r][c] = k[r][c] / g;
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < 4; ++c)
    if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) free_cols.push_back(c);
  if (free_cols.size() != 2)
    throw InconsistencyError("reversing system for " + to_string(theta.matrix()) + " does not have rank 2");

  // Bounded search over the free coordinates; among det +-1 solutions keep
  // the smallest l1 norm, ties to the lexicographically largest entries.
  std::optional<std::array<Integer, 4>> best;
  Integer best_norm = 0;
  constexpr int bound = 10;
  for (Integer x = -bound; x <= bound; x += 1)
    for (Integer y = -bound; y <= bound; y += 1) {
      std::array<Integer, 4> l{};
      l[free_cols[0]] = x;
      l[free_cols[1]] = y;
      bool integral = true;
      for (std::size_t r = 0; r < pivot_cols.size() && integral; ++r) {
        const int pc = pivot_cols[r];
        const Integer rest = -(k[r][free_cols[0]] * x + k[r][free_cols[1]] * y);
        if (rest % k[r][pc] != 0) integral = false;
        else l[pc] = rest / k[r][pc];
      }
      if (!integral) continue;
      const Mat2Z cand = from_entries(l);
      if (!is_gl2z(cand)) continue;
      const Integer norm = abs(l[0]) + abs(l[1]) + abs(l[2]) + abs(l[3]);
      if (!best || norm < best_norm || (norm == best_norm && l > *best)) {
        best = l;
        best_norm = norm;
      }
    }
  if (!best) throw InconsistencyError("no reversing symmetry found for " + to_string(theta.matrix()));
  const Mat2Z lam = from_entries(*best);
  if (Mat2Z(lam * theta.matrix() * unimodular_inverse(lam)) != theta.pow(-1))
    throw InconsistencyError("reversing symmetry check failed");
  return lam;
}

SymmetryGroup reversing_group(const Theta& theta, Integer sample_bound) {
  SymmetryGroup s = centralizer(theta, sample_bound);
  if (s.kind == SymmetryGroup::Kind::AllGL2Z) return s;
  const Mat2Z lam = reversing_symmetry(theta);
  const auto base = s.elements;
  for (const auto& x : base) push_unique(s.elements, Mat2Z(lam * x));
  s.label = theta.trace() == 0 ? "D4" : "D6";
  if (s.elements.size() != 2 * base.size())
    throw InconsistencyError("reversing group is not a C2-extension of the centralizer");
  return s;
}

std::string d_automorphism_violation(const Theta& theta, int zeta, const Mat2Z& chi) {
  if (zeta != 1 && zeta != -1) return "zeta = " + std::to_string(zeta) + " is not +-1";
  if (!is_gl2z(chi)) return "det(chi) = " + std::to_string(det(chi).value()) + ": chi not in GL2(Z)";
  if (Mat2Z(theta.pow(zeta) * chi) != Mat2Z(chi * theta.matrix()))
    return "theta^zeta chi != chi theta (zeta = " + std::to_string(zeta) + ", chi = " + to_string(chi) + ")";
  return {};
}

DAutomorphism make_d_automorphism(const Theta& theta, int zeta, const Mat2Z& chi, Integer beta1, Integer gamma1) {
  if (auto why = d_automorphism_violation(theta, zeta, chi); !why.empty()) throw NotAutomorphismError(why);
  return {zeta, chi, beta1, gamma1};
}

std::string d_automorphism_violation(const Theta& theta, const GeneratorTriple& t) {
  if (t.g[1].q != 0 || t.g[2].q != 0) return "phi(B), phi(C) do not commute (alpha2, alpha3 must be 0)";
  if (abs(t.g[0].q) != 1) return "alpha1 = " + std::to_string(t.g[0].q.value()) + " is not +-1";
  const Mat2Z chi = mat2z(t.g[1].m, t.g[2].m, t.g[1].n, t.g[2].n);
  return d_automorphism_violation(theta, static_cast<int>(t.g[0].q.value()), chi);
}

std::optional<DAutomorphism> as_d_automorphism(const Theta& theta, const GeneratorTriple& t) {
  if (!d_automorphism_violation(theta, t).empty()) return std::nullopt;
  return DAutomorphism{static_cast<int>(t.g[0].q.value()), mat2z(t.g[1].m, t.g[2].m, t.g[1].n, t.g[2].n),
                       t.g[0].m, t.g[0].n};
}

DElement apply_d_automorphism(const Theta& theta, const DAutomorphism& phi, const DElement& d) {
  if (auto why = d_automorphism_violation(theta, phi.zeta, phi.chi); !why.empty()) throw NotAutomorphismError(why);
  const auto img = phi.images();
  return dmul(theta, dmul(theta, dpow(theta, img.g[0], d.q), dpow(theta, img.g[1], d.m)),
              dpow(theta, img.g[2], d.n));
}

DAutomorphism compose_d_automorphisms(const Theta& theta, const DAutomorphism& psi, const DAutomorphism& phi) {
  const auto img = phi.images();
  GeneratorTriple t;
  for (int i = 0; i < 3; ++i) t.g[i] = apply_d_automorphism(theta, psi, img.g[i]);
  auto out = as_d_automorphism(theta, t);
  if (!out) throw InconsistencyError("composition of automorphisms is not an automorphism");
  return *out;
}

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::NotASymmetry: return "not_a_symmetry";
    case SymmetryClass::Elastic: return "elastic";
    case SymmetryClass::InelasticNotAutomorphism: return "inelastic";
    case SymmetryClass::InelasticNoExtension: return "inelastic_no_extension";
  }
  return "unknown";
}

Classification classify_symmetry(const Theta& theta, const GeneratorTriple& t) {
  Classification out;
  out.generation = generates_d(theta, t);
  if (!out.generation.generates) {
    out.cls = SymmetryClass::NotASymmetry;
    out.reason = describe(out.generation.violated);
    return out;
  }
  out.automorphism = as_d_automorphism(theta, t);
  if (!out.automorphism) {
    out.cls = SymmetryClass::InelasticNotAutomorphism;
    out.reason = d_automorphism_violation(theta, t);
    return out;
  }
  const auto g = make_group<double>(theta, positive_branches(theta.trace(), 1).front());
  try {
    (void)extend(g, *out.automorphism);
    out.cls = SymmetryClass::Elastic;
  } catch (const NoExtensionError& e) {
    out.cls = SymmetryClass::InelasticNoExtension;
    out.reason = e.what();
  }
  return out;
}

std::vector<DAutomorphism> enumerate_d_automorphisms(const Theta& theta, IntRange beta1, IntRange gamma1,
                                                     Integer entry_bound) {
  std::vector<std::pair<int, Mat2Z>> linear;
  if (theta.is_minus_identity()) {
    for (const auto& chi : gl2z_box(entry_bound)) {
      linear.emplace_back(1, chi);
      linear.emplace_back(-1, chi);
    }
  } else {
    const auto s = centralizer(theta);
    for (const auto& chi : reversing_group(theta).elements) linear.emplace_back(s.contains(chi) ? 1 : -1, chi);
  }
  std::vector<DAutomorphism> out;
  for (const auto& [zeta, chi] : linear)
    for (Integer b = beta1.lo; b <= beta1.hi; b += 1)
      for (Integer c = gamma1.lo; c <= gamma1.hi; c += 1) out.push_back(make_d_automorphism(theta, zeta, chi, b, c));
  return out;
}

std::vector<DAutomorphism> enumerate_elastic(const Theta& theta, IntRange beta1, IntRange gamma1) {
  // For -I the compatible chi satisfy a^2 + b^2 = 1 in a rotation basis, so
  // entries bounded by 1 already contain all of them.
  auto all = enumerate_d_automorphisms(theta, beta1, gamma1, 1);
  if (!theta.is_minus_identity()) return all;
  const auto g = make_group<double>(theta, 1);
  std::erase_if(all, [&](const DAutomorphism& phi) {
    try {
      (void)extend(g, phi);
      return false;
    } catch (const NoExtensionError&) {
      return true;
    }
  });
  return all;
}

}  // namespace s2sym
