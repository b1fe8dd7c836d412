// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "s2sym/s2sym.hpp"

using namespace s2sym;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;  ///< runtime limit, 0 for none
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

bool same_set(std::vector<Mat2Z> a, std::vector<Mat2Z> b) {
  const auto less = [](const Mat2Z& x, const Mat2Z& y) {
    return std::lexicographical_compare(x.data(), x.data() + 4, y.data(), y.data() + 4);
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

std::vector<Mat2Z> powers_pm(const Mat2Z& theta, int count) {
  std::vector<Mat2Z> out;
  for (int j = 0; j < count; ++j) {
    out.push_back(oracle::naive_pow(theta, j));
    out.push_back(Mat2Z(-oracle::naive_pow(theta, j)));
  }
  return out;
}

Outcome centralizer_c4() {
  const Mat2Z m = mat2z(0, 1, -1, 0);
  const auto s = centralizer(Theta(m));
  const auto brute = oracle::brute_centralizer(m, 5);
  Outcome o;
  o.pass = s.order() == 4 && s.label == "C4" && same_set(s.elements, powers_pm(m, 2)) && same_set(s.elements, brute);
  o.detail = "|S| = " + std::to_string(s.order()) + ", brute force [-5,5] finds " + std::to_string(brute.size());
  return o;
}

Outcome centralizer_c6() {
  Outcome o;
  for (const auto& m : {mat2z(0, 1, -1, -1), mat2z(1, 1, -1, 0)}) {
    const auto s = centralizer(Theta(m));
    const auto brute = oracle::brute_centralizer(m, 5);
    o.pass = o.pass && s.order() == 6 && s.label == "C6" && same_set(s.elements, powers_pm(m, 3)) &&
             same_set(s.elements, brute);
    o.detail += "trace " + std::to_string(trace(m).value()) + ": |S| = " + std::to_string(s.order()) +
                ", brute " + std::to_string(brute.size()) + "; ";
  }
  return o;
}

Outcome reversing_groups() {
  Outcome o;
  for (const auto& m : oracle::test_thetas()) {
    const Theta th(m);
    const auto r = reversing_group(th);
    const auto s = centralizer(th);
    const std::size_t want = th.trace() == 0 ? 8 : 12;
    bool closed = true, normal = true;
    for (const auto& x : r.elements) {
      closed = closed && r.contains(unimodular_inverse(x));
      for (const auto& y : r.elements) closed = closed && r.contains(Mat2Z(x * y));
      for (const auto& c : s.elements) normal = normal && s.contains(Mat2Z(x * c * unimodular_inverse(x)));
    }
    const bool brute = same_set(r.elements, oracle::brute_reversing(m, 5));
    o.pass = o.pass && r.order() == want && 2 * s.order() == r.order() && closed && normal && brute;
    o.detail += "|R| = " + std::to_string(r.order()) + (closed && normal && brute ? " ok; " : " BAD; ");
  }
  return o;
}

Outcome finite_order() {
  Outcome o;
  for (const auto& m : oracle::all_test_thetas()) {
    const Theta th(m);
    const int want = th.trace() == -2 ? 2 : th.trace() == -1 ? 3 : th.trace() == 0 ? 4 : 6;
    bool minimal = oracle::naive_pow(m, want) == Mat2Z::Identity();
    for (int j = 1; j < want; ++j) minimal = minimal && oracle::naive_pow(m, j) != Mat2Z::Identity();
    o.pass = o.pass && th.order() == want && minimal && th.pow(want) == Mat2Z::Identity();
    o.detail += "p = " + std::to_string(th.order()) + "; ";
  }
  return o;
}

Outcome extension_sweep() {
  Outcome o;
  double worst = 0;
  std::size_t count = 0, failures = 0;
  for (const auto& m : oracle::test_thetas()) {
    const Theta th(m);
    const auto s = centralizer(th);
    const auto r = reversing_group(th);
    for (auto n : positive_branches(th.trace(), 2)) {
      const auto g = make_group<double>(th, n);
      for (const auto& chi : r.elements)
        for (int b1 = -3; b1 <= 3; ++b1)
          for (int c1 = -3; c1 <= 3; ++c1) {
            const auto phi = make_d_automorphism(th, s.contains(chi) ? 1 : -1, chi, b1, c1);
            const auto rep = verify_extension(g, phi, extend(g, phi), 3);
            worst = std::max(worst, rep.max_discrepancy);
            ++count;
            failures += !rep.passed;
          }
    }
  }
  o.pass = failures == 0 && worst < 1e-9;
  o.detail = std::to_string(count) + " automorphisms, box 3, max discrepancy " + fmt(worst);
  return o;
}

Outcome uniqueness() {
  oracle::Gen gen(2024);
  Outcome o;
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const Theta th(gen.pick(oracle::test_thetas()));
    const auto g = make_group<double>(th, gen.pick(positive_branches(th.trace(), 2)));
    const auto rep = uniqueness_probe(g, gen.automorphism(th, 5));
    o.pass = o.pass && rep.gamma_delta_determined;
    worst = std::max(worst, rep.max_deviation);
  }
  o.pass = o.pass && worst < 1e-9;
  o.detail = "100 automorphisms, max deviation " + fmt(worst);
  return o;
}

Outcome homomorphisms() {
  oracle::Gen gen(7);
  Outcome o;
  double assoc = 0, hom = 0;
  std::size_t exact_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Theta th(gen.pick(oracle::all_test_thetas()));
    const auto g = make_group<double>(th, gen.pick(positive_branches(th.trace(), 2)));
    const Basis b = gen.integer(0, 1) ? Basis::E : Basis::F;
    const GroupPoint<double> x{gen.vec3(3), b}, y{gen.vec3(3), b}, z{gen.vec3(3), b};
    assoc = std::max(assoc, (compose(g, compose(g, x, y), z).x - compose(g, x, compose(g, y, z)).x).cwiseAbs().maxCoeff());
  }
  for (int i = 0; i < 1000; ++i) {
    const Theta th(gen.pick(oracle::all_test_thetas()));
    const auto g = make_group<double>(th, gen.pick(positive_branches(th.trace(), 2)));
    GroupAutoParams<double> phi{static_cast<int>(gen.integer(0, 1)), gen.real(-2, 2), gen.real(-2, 2),
                                gen.real(-2, 2), gen.real(-2, 2), g.k()};
    if (phi.alpha * phi.alpha + phi.beta * phi.beta < 0.1) phi.alpha += 1;
    const GroupPoint<double> x{gen.vec3(3), Basis::F}, y{gen.vec3(3), Basis::F};
    const auto lhs = apply_group_auto(phi, compose(g, x, y));
    const auto rhs = compose(g, apply_group_auto(phi, x), apply_group_auto(phi, y));
    hom = std::max(hom, (lhs.x - rhs.x).cwiseAbs().maxCoeff());
  }
  for (int i = 0; i < 1000; ++i) {
    const Mat2Z m = gen.pick(oracle::test_thetas());
    const Theta th(m);
    const auto phi = gen.automorphism(th, 5);
    const auto x = gen.word(8), y = gen.word(8);
    const bool ok = apply_d_automorphism(th, phi, x) == oracle::closed_form_auto(m, phi, x) &&
                    apply_d_automorphism(th, phi, dmul(th, x, y)) ==
                        dmul(th, apply_d_automorphism(th, phi, x), apply_d_automorphism(th, phi, y));
    exact_bad += !ok;
  }
  o.pass = assoc < 1e-9 && hom < 1e-9 && exact_bad == 0;
  o.detail = "associativity " + fmt(assoc) + ", auto homomorphism " + fmt(hom) + ", D-auto mismatches " +
             std::to_string(exact_bad);
  return o;
}

Outcome exponential() {
  oracle::Gen gen(8);
  Outcome o;
  double worst = 0, degenerate = 0;
  for (int i = 0; i < 200; ++i) {
    const Theta th(gen.pick(oracle::all_test_thetas()));
    const auto g = make_group<double>(th, gen.pick(positive_branches(th.trace(), 2)));
    const GroupPoint<double> u{gen.vec3(1), Basis::F};
    const auto closed = convert_basis(g, exp_map(g, u)).x;
    const auto flow = oracle::rk4_flow(g.a_matrix(), convert_basis(g, u).x, 1e-3);
    worst = std::max(worst, (closed - flow).cwiseAbs().maxCoeff());
  }
  for (const auto& m : oracle::all_test_thetas()) {
    const Theta th(m);
    for (auto n : positive_branches(th.trace(), 2)) {
      const auto g = make_group<double>(th, n);
      const double u3 = 2 * std::numbers::pi / g.k();
      const auto r = exp_map(g, GroupPoint<double>::f(1.7, -0.4, u3)).x;
      degenerate = std::max({degenerate, std::abs(r(0)), std::abs(r(1)), std::abs(r(2) - u3)});
    }
  }
  o.pass = worst < 1e-8 && degenerate < 1e-12;
  o.detail = "200 vectors vs RK4 (h = 1e-3): " + fmt(worst) + "; k u3 = 2 pi residual " + fmt(degenerate);
  return o;
}

Outcome structure_constants_check() {
  const auto eps = [](int i, int j, int k) -> double {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
  };
  Outcome o;
  double worst_f = 0, worst_e = 0;
  for (const auto& m : oracle::all_test_thetas()) {
    const Theta th(m);
    for (auto n : positive_branches(th.trace(), 2)) {
      const auto g = make_group<double>(th, n);
      const auto fd_f = structure_constants_fd(g, Basis::F);
      const auto fd_e = structure_constants_fd(g, Basis::E);
      const auto& s = g.dislocation_density();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) {
            const double f_ref = g.k() * ((j == 2) * eps(2, i, k) - (k == 2) * eps(2, i, j));
            double e_ref = 0;
            for (int p = 0; p < 3; ++p) e_ref += eps(p, j, k) * s(i, p);
            worst_f = std::max(worst_f, std::abs(fd_f[i](j, k) - f_ref));
            worst_e = std::max(worst_e, std::abs(fd_e[i](j, k) - e_ref));
          }
    }
  }
  o.pass = worst_f < 1e-6 && worst_e < 1e-6;
  o.detail = "F-basis " + fmt(worst_f) + ", E-basis " + fmt(worst_e);
  return o;
}

Outcome r_eps_independence() {
  Outcome o;
  double worst = 0;
  for (const auto& m : oracle::all_test_thetas()) {
    const Theta th(m);
    const int p = th.order();
    for (auto n : positive_branches(th.trace(), 2)) {
      const auto g = make_group<double>(th, n);
      for (int e : {0, 1}) {
        const Eigen::Matrix2d ref = r_eps(g, e, 1);
        for (int q = 2; q <= 2 * p; ++q)
          if (q % p != 0) worst = std::max(worst, (r_eps(g, e, q) - ref).cwiseAbs().maxCoeff());
      }
    }
  }
  o.pass = worst < 1e-10;
  o.detail = "max spread over q " + fmt(worst);
  return o;
}

Outcome generator_conditions() {
  Outcome o;
  std::ostringstream d;
  const Theta j(0, 1, -1, 0);
  const bool standard = generates_d(j, GeneratorTriple::standard()).generates;
  const auto sq = generates_d(j, GeneratorTriple{{DElement::a(), DElement{0, 2, 0}, DElement{0, 0, 2}}});
  const auto a2 = generates_d(j, GeneratorTriple{{DElement{2, 0, 0}, DElement::b(), DElement::c()}});
  const auto a2b = generates_d(j, GeneratorTriple{{DElement{2, 1, 0}, DElement{0, 0, 1}, DElement{4, 0, 0}}});
  const bool rejections = !sq.generates && sq.violated == GenerationViolation::ComponentHcf && !a2.generates &&
                          a2.violated == GenerationViolation::AlphaHcf && !a2b.generates &&
                          a2b.violated == GenerationViolation::AlphaHcf;
  d << "(A,B,C) " << (standard ? "accepted" : "REJECTED") << "; (A,B^2,C^2) -> " << describe(sq.violated)
    << "; (A^2,B,C) -> " << describe(a2.violated) << "; ";

  oracle::Gen gen(9);
  const std::vector<DElement> abc{DElement::a(), DElement::b(), DElement::c()};
  int accepted = 0, reached = 0;
  while (accepted < 20) {
    const Theta th(gen.pick(oracle::all_test_thetas()));
    const auto t = gen.nielsen_triple(th, 3);
    if (t.g == GeneratorTriple::standard().g) continue;
    if (!generates_d(th, t).generates) {
      o.pass = false;
      d << "random Nielsen triple rejected; ";
      break;
    }
    ++accepted;
    const auto lens = oracle::bfs_word_lengths(th, t, abc, 12);
    reached += std::all_of(lens.begin(), lens.end(), [](int l) { return l >= 0; });
  }
  d << reached << "/20 random accepted triples reach A, B, C within 12 letters";
  o.pass = o.pass && standard && rejections && reached == 20;
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "centralizer of the quarter turn is C4", 1, centralizer_c4},
      {2, "centralizers for trace -1 and 1 are C6", 1, centralizer_c6},
      {3, "reversing groups D4/D6, S normal of index 2", 1, reversing_groups},
      {4, "theta^p = I with p = 2, 3, 4, 6", 0, finite_order},
      {5, "every automorphism of D extends (box 3)", 60, extension_sweep},
      {6, "uniqueness probe reproduces the extension", 0, uniqueness},
      {7, "associativity and homomorphism suite", 10, homomorphisms},
      {8, "exponential map vs RK4 flow", 0, exponential},
      {9, "structure constants by finite differences", 0, structure_constants_check},
      {10, "R(eps) independent of q", 0, r_eps_independence},
      {11, "generation conditions and word search", 0, generator_conditions},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_s <= 0 || secs < c.budget_s;
    if (!in_time) o.detail += "; over budget " + fmt(c.budget_s) + " s";
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] %2d %s: %s (%.3f s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
