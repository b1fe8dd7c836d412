#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "s2sym/s2sym.hpp"

using namespace s2sym;

namespace {

bool same_set(std::vector<Mat2Z> a, std::vector<Mat2Z> b) {
  const auto less = [](const Mat2Z& x, const Mat2Z& y) {
    return std::lexicographical_compare(x.data(), x.data() + 4, y.data(), y.data() + 4);
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

}  // namespace

TEST_CASE("centralizers match brute force") {
  for (const auto& m : oracle::test_thetas()) {
    const Theta th(m);
    const auto s = centralizer(th);
    CHECK(s.kind == SymmetryGroup::Kind::Finite);
    CHECK(same_set(s.elements, oracle::brute_centralizer(m, 5)));
    CHECK(s.order() == (th.trace() == 0 ? 4u : 6u));
    CHECK(s.label == (th.trace() == 0 ? "C4" : "C6"));
  }
  const auto all = centralizer(Theta(-1, 0, 0, -1));
  CHECK(all.kind == SymmetryGroup::Kind::AllGL2Z);
  CHECK(all.label == "GL2Z");
  CHECK(all.contains(mat2z(2, 1, 1, 1)));
  CHECK_FALSE(all.contains(mat2z(2, 0, 0, 1)));
}

TEST_CASE("reversing symmetry for the quarter turn") {
  CHECK(reversing_symmetry(Theta(0, 1, -1, 0)) == mat2z(1, 0, 0, -1));
  for (const auto& m : oracle::all_test_thetas()) {
    const Theta th(m);
    const auto lam = reversing_symmetry(th);
    CHECK(is_gl2z(lam));
    CHECK(Mat2Z(lam * m) == Mat2Z(th.pow(-1) * lam));
  }
}

TEST_CASE("reversing groups match brute force and are C2-extensions") {
  for (const auto& m : oracle::test_thetas()) {
    const Theta th(m);
    const auto r = reversing_group(th);
    const auto s = centralizer(th);
    CHECK(same_set(r.elements, oracle::brute_reversing(m, 5)));
    CHECK(r.order() == 2 * s.order());
    for (const auto& x : r.elements) {
      CHECK(r.contains(unimodular_inverse(x)));
      for (const auto& y : r.elements) CHECK(r.contains(Mat2Z(x * y)));
      // S is normal in R.
      for (const auto& c : s.elements) CHECK(s.contains(Mat2Z(x * c * unimodular_inverse(x))));
    }
  }
}

TEST_CASE("D-automorphism admissibility") {
  const Theta j(0, 1, -1, 0);
  CHECK(d_automorphism_violation(j, 1, Mat2Z::Identity()).empty());
  CHECK(d_automorphism_violation(j, -1, mat2z(1, 0, 0, -1)).empty());
  CHECK_FALSE(d_automorphism_violation(j, 1, mat2z(1, 0, 0, -1)).empty());
  CHECK_FALSE(d_automorphism_violation(j, 1, mat2z(1, 1, 0, 1)).empty());
  CHECK_THROWS_AS(make_d_automorphism(j, 1, mat2z(2, 0, 0, 1), 0, 0), NotAutomorphismError);
  CHECK_THROWS_AS(make_d_automorphism(j, 2, Mat2Z::Identity(), 0, 0), NotAutomorphismError);
}

TEST_CASE("automorphisms respect the commutator relations") {
  oracle::Gen gen(41);
  for (const auto& m : oracle::all_test_thetas()) {
    const Theta th(m);
    for (int i = 0; i < 30; ++i) {
      const auto phi = th.is_minus_identity()
                           ? make_d_automorphism(th, gen.integer(0, 1) ? 1 : -1, gen.pick(gl2z_box(2)),
                                                 gen.integer(-4, 4), gen.integer(-4, 4))
                           : gen.automorphism(th, 4);
      const auto img = phi.images();
      const auto& a = img.g[0];
      const auto& b = img.g[1];
      const auto& c = img.g[2];
      CHECK(dmul(th, b, c) == dmul(th, c, b));
      CHECK(dcommutator(th, a, b) ==
            dmul(th, dpow(th, b, 1 - th.d()), dpow(th, c, th.c())));
      CHECK(dcommutator(th, a, c) == dmul(th, dpow(th, b, th.b()), dpow(th, c, 1 - th.a())));
    }
  }
}

TEST_CASE("apply_d_automorphism: closed form, homomorphism, composition") {
  oracle::Gen gen(42);
  for (const auto& m : oracle::test_thetas()) {
    const Theta th(m);
    for (int i = 0; i < 100; ++i) {
      const auto phi = gen.automorphism(th, 5);
      const auto psi = gen.automorphism(th, 5);
      const auto x = gen.word(7), y = gen.word(7);
      CHECK(apply_d_automorphism(th, phi, x) == oracle::closed_form_auto(m, phi, x));
      CHECK(apply_d_automorphism(th, phi, dmul(th, x, y)) ==
            dmul(th, apply_d_automorphism(th, phi, x), apply_d_automorphism(th, phi, y)));
      const auto comp = compose_d_automorphisms(th, psi, phi);
      CHECK(apply_d_automorphism(th, comp, x) == apply_d_automorphism(th, psi, apply_d_automorphism(th, phi, x)));
    }
  }
}

TEST_CASE("symmetry classification") {
  const Theta j(0, 1, -1, 0);
  CHECK(classify_symmetry(j, GeneratorTriple::standard()).cls == SymmetryClass::Elastic);
  const auto inel = classify_symmetry(j, GeneratorTriple{{DElement::a(), DElement{0, 2, 0}, DElement::c()}});
  CHECK(inel.cls == SymmetryClass::InelasticNotAutomorphism);
  CHECK(inel.reason.find("det(chi)") != std::string::npos);
  const auto none = classify_symmetry(j, GeneratorTriple{{DElement::a(), DElement{0, 2, 0}, DElement{0, 0, 2}}});
  CHECK(none.cls == SymmetryClass::NotASymmetry);
  // For -I a shear is an automorphism of D that does not lift.
  const Theta mi(-1, 0, 0, -1);
  const auto shear = classify_symmetry(mi, GeneratorTriple{{DElement::a(), DElement::b(), DElement{0, 1, 1}}});
  CHECK(shear.cls == SymmetryClass::InelasticNoExtension);
  CHECK(to_string(SymmetryClass::Elastic) == "elastic");
}

TEST_CASE("enumeration of automorphisms") {
  const Theta j(0, 1, -1, 0);
  const auto all = enumerate_d_automorphisms(j, {-1, 1}, {0, 2});
  CHECK(all.size() == 8u * 3u * 3u);
  CHECK(enumerate_elastic(j, {0, 0}, {0, 0}).size() == 8u);
  CHECK(enumerate_elastic(Theta(1, 1, -1, 0), {0, 0}, {0, 0}).size() == 12u);
  // -I: +-I and +-J extend with zeta = 1, +-diag(1,-1) and +-[[0,1],[1,0]]
  // with zeta = -1; nothing else in GL2(Z) lifts.
  const auto mi = enumerate_elastic(Theta(-1, 0, 0, -1), {0, 0}, {0, 0});
  CHECK(mi.size() == 8u);
  CHECK(std::count_if(mi.begin(), mi.end(), [](const DAutomorphism& a) { return a.zeta == 1; }) == 4);
}
