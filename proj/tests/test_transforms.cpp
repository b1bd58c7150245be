#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ga/error.hpp"
#include "ga/text.hpp"
#include "ga/transforms.hpp"
#include "support.hpp"

using namespace ga;

namespace {

const Signature e2 = make_algebra(2, 0);
const Signature e3 = make_algebra(3, 0);
const Signature sta = make_algebra(1, 3);
constexpr double pi = std::numbers::pi;

Multivector mv(const char *text, const Signature &sig = e3) {
  return parse_multivector(text, sig);
}

Errc code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &err) {
    return err.code();
  }
  FAIL("expected an error");
  return Errc::invalid_argument;
}

#define CHECK_MV(a, b, tol)                                                    \
  do {                                                                         \
    const Multivector lhs_ = (a);                                              \
    const Multivector rhs_ = (b);                                              \
    INFO(format(lhs_), " vs ", format(rhs_));                                  \
    CHECK(approx_equal(lhs_, rhs_, tol));                                      \
  } while (0)

Multivector wedge_all(const std::vector<Multivector> &vs, const Signature &sig) {
  Multivector out = Multivector::scalar(sig, 1.0);
  for (const auto &v : vs)
    out = outer_product(out, v);
  return out;
}

} // namespace

TEST_CASE("blade recognition") {
  CHECK(is_blade(mv("1*e12 + 2*e13")));
  CHECK(!is_blade(mv("1 + 1*e1")));
  const Signature e4 = make_algebra(4, 0);
  CHECK(!is_blade(mv("1*e12 + 1*e34", e4)));
  CHECK(is_blade(mv("1*e12 + 1*e13", e4)));
  test::Rng rng(31);
  for (int i = 0; i < 50; ++i)
    CHECK(is_blade(test::random_blade(rng, make_algebra(3, 2), rng.integer(0, 5))));
}

TEST_CASE("projection and rejection examples") {
  const Multivector e1 = mv("1*e1"), e12 = mv("1*e12"), I = mv("1*e123");
  CHECK_MV(project(mv("1*e1 + 1*e3"), e12), e1, 1e-15);
  // (B <| A) A^-1 computed by hand.
  const Multivector b = mv("1*e1 + 1*e3");
  CHECK_MV(project(b, e12), left_contraction(b, e12) * versor_inverse(e12),
           1e-15);
  const Multivector lambda = Multivector::scalar(e3, 2.5);
  CHECK(project(lambda, e12) == lambda);
  CHECK(reject(lambda, e12) == lambda);
  CHECK(project(I, e1).is_zero());
  CHECK(project(I, I) == I);
  CHECK_MV(reject(mv("1*e1 + 1*e3"), e1), mv("1*e3"), 1e-15);
  CHECK(reject(e1, e12).is_zero());
  CHECK(code_of([] { project(mv("1*e1"), mv("1 + 1*e1")); }) == Errc::non_blade);
  const Signature e4 = make_algebra(4, 0);
  CHECK(code_of([&] {
          project(mv("1*e1", e4), mv("1*e12 + 1*e34", e4));
        }) == Errc::non_blade);
  CHECK(code_of([] {
          project(mv("1*e1", sta), mv("1*e1 + 1*e2", sta));
        }) == Errc::non_invertible_blade);
  CHECK(code_of([] { project(mv("1*e1"), Multivector(e3)); }) ==
        Errc::non_invertible_blade);
}

TEST_CASE("projection properties") {
  test::Rng rng(32);
  for (const Signature &sig : {make_algebra(4, 0), make_algebra(3, 1)}) {
    const Multivector I = Multivector::volume_element(sig);
    for (int trial = 0; trial < 60; ++trial) {
      const int r = rng.integer(1, sig.n() - 1);
      const Multivector A = test::random_invertible_blade(rng, sig, r);
      const Multivector B = test::random_multivector(rng, sig);
      const Multivector PB = project(B, A);
      CHECK_MV(project(PB, A), PB, 1e-9);
      CHECK_MV(project(B, I), B, 1e-9);
      // Scale invariance.
      CHECK_MV(project(B, -3.0 * A), PB, 1e-9);
      CHECK_MV(reflect(B, 0.5 * A), reflect(B, A), 1e-9);

      // Outermorphism law for s <= 3.
      const int s = rng.integer(1, 3);
      std::vector<Multivector> bs, pbs, rbs, fbs;
      for (int i = 0; i < s; ++i) {
        bs.push_back(test::random_vector(rng, sig));
        pbs.push_back(project(bs.back(), A));
        rbs.push_back(reject(bs.back(), A));
        fbs.push_back(reflect(bs.back(), A));
      }
      const Multivector blade = wedge_all(bs, sig);
      CHECK_MV(project(blade, A), wedge_all(pbs, sig), 1e-9);
      CHECK_MV(reject(blade, A), wedge_all(rbs, sig), 1e-9);
      CHECK_MV(reflect(blade, A), wedge_all(fbs, sig), 1e-9);

      // Vector rejection is orthogonal to A and equals projection into the
      // dual of A.
      const Multivector a = test::random_vector(rng, sig);
      CHECK(left_contraction(reject(a, A), A).max_abs_coeff() < 1e-9);
      CHECK_MV(reject(a, A), project(a, dual(A)), 1e-9);
      CHECK_MV(project(a, A) + reject(a, A), a, 1e-9);
    }
  }
}

TEST_CASE("projection onto orthogonal blades adds up") {
  test::Rng rng(33);
  const Signature sig = make_algebra(5, 0);
  for (int trial = 0; trial < 30; ++trial) {
    // Split a random orthogonal basis into two groups.
    std::vector<Multivector> vs;
    for (int i = 0; i < 5; ++i)
      vs.push_back(test::random_vector(rng, sig));
    const auto ortho = gram_schmidt(vs);
    const Multivector A = outer_product(ortho[0], ortho[1]);
    const Multivector B = outer_product(ortho[2], ortho[4]);
    const Multivector a = test::random_vector(rng, sig);
    CHECK_MV(project(a, outer_product(A, B)), project(a, A) + project(a, B),
             1e-9);
  }
}

TEST_CASE("reflection") {
  const Multivector e1 = mv("1*e1"), I = mv("1*e123");
  CHECK(reflect(e1, e1) == -1.0 * e1);
  CHECK(reflect(mv("1*e3"), e1) == mv("1*e3"));
  CHECK(reflect(I, e1) == -1.0 * I);
  CHECK(reflect(I, mv("1*e12")) == I);
  test::Rng rng(34);
  for (const Signature &sig : {e3, sta, make_algebra(2, 2)}) {
    const Multivector Is = Multivector::volume_element(sig);
    for (int trial = 0; trial < 50; ++trial) {
      const int r = rng.integer(1, sig.n());
      const Multivector A = test::random_invertible_blade(rng, sig, r);
      const Multivector B = test::random_multivector(rng, sig);
      CHECK_MV(reflect(reflect(B, A), A), B, 1e-9);
      CHECK_MV(reflect(Is, A), (r % 2 ? -1.0 : 1.0) * Is, 1e-9);
      const Multivector a = test::random_vector(rng, sig);
      const Multivector b = test::random_vector(rng, sig);
      CHECK(scalar_product(reflect(a, A), reflect(b, A)) ==
            doctest::Approx(scalar_product(a, b)).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("rotors from two vectors") {
  const Multivector e1 = mv("1*e1", e2), e2v = mv("1*e2", e2);
  CHECK(rotor_from_two_vectors(e1, e1) == Multivector::scalar(e2, 1.0));
  const Multivector m = (e1 + e2v) / std::sqrt(2.0);
  const Multivector R = rotor_from_two_vectors(m, e1);
  CHECK_MV(R, exp_bivector(mv("1*e12", e2), pi / 2), 1e-15);
  CHECK_MV(apply_versor(e1, R), e2v, 1e-15);
  // Orthogonal vectors: a half turn in their plane.
  const Multivector Rh = rotor_from_two_vectors(e1, e2v);
  CHECK(Rh == mv("1*e12", e2));
  CHECK_MV(apply_versor(e1, Rh), -1.0 * e1, 1e-15);
  CHECK_MV(apply_versor(mv("0.3*e1 - 2*e2", e2), Rh), mv("-0.3*e1 + 2*e2", e2),
           1e-15);
  CHECK(code_of([] {
          rotor_from_two_vectors(mv("1*e1 + 1*e2", sta), mv("1*e1", sta));
        }) == Errc::null_vector);
  CHECK(code_of([] { rotor_from_two_vectors(mv("1*e12"), mv("1*e1")); }) ==
        Errc::non_vector);

  // Rotation by twice the angle from n to m.
  test::Rng rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const double t1 = rng.uniform(-pi, pi), t2 = rng.uniform(-pi, pi);
    const Multivector mm = Multivector::vector(e2, {std::cos(t1), std::sin(t1)});
    const Multivector nn = Multivector::vector(e2, {std::cos(t2), std::sin(t2)});
    const Multivector rotated =
        apply_versor(e1, rotor_from_two_vectors(mm, nn));
    const double angle = 2.0 * (t1 - t2);
    CHECK_MV(rotated, Multivector::vector(e2, {std::cos(angle), std::sin(angle)}),
             1e-12);
  }
}

TEST_CASE("versor application") {
  const Multivector one = Multivector::scalar(e3, 1.0);
  const Multivector B = mv("1 + 2*e1 - 1*e23 + 0.5*e123");
  CHECK(apply_versor(B, one) == B);
  const Multivector R = exp_bivector(mv("1*e12", e2), pi / 2);
  CHECK_MV(apply_versor(mv("1*e1", e2), R), mv("1*e2", e2), 1e-15);
  CHECK(versor_parity(R) == 0);
  CHECK(versor_parity(mv("1*e1")) == 1);
  CHECK(code_of([] { versor_parity(mv("1 + 1*e1")); }) == Errc::mixed_parity);
  CHECK(code_of([] { apply_versor(mv("1*e1"), mv("1 + 1*e1")); }) ==
        Errc::mixed_parity);
  CHECK(code_of([] {
          apply_versor(mv("1*e1", sta), mv("1*e1 + 1*e2", sta));
        }) == Errc::null_versor);

  test::Rng rng(36);
  for (const Signature &sig : {e3, sta, make_algebra(2, 2)}) {
    const Multivector I = Multivector::volume_element(sig);
    for (int trial = 0; trial < 50; ++trial) {
      const int k = rng.integer(1, 4);
      const Multivector V = test::random_versor(rng, sig, k);
      const Multivector A = test::random_multivector(rng, sig);
      const Multivector C = test::random_multivector(rng, sig);
      if (k % 2 == 0)
        CHECK_MV(apply_versor(I, V), I, 1e-9);
      // Grade preserving, fixes scalars, distributes over outer products.
      for (int r = 0; r <= sig.n(); ++r)
        CHECK(apply_versor(grade_project(A, r), V)
                  .grades()
                  .subset_of(GradeSet{std::uint64_t{1} << r}));
      CHECK_MV(apply_versor(Multivector::scalar(sig, 3.0), V),
               Multivector::scalar(sig, 3.0), 1e-9);
      CHECK_MV(apply_versor(outer_product(A, C), V),
               outer_product(apply_versor(A, V), apply_versor(C, V)), 1e-8);
      const Multivector a = test::random_vector(rng, sig);
      const Multivector b = test::random_vector(rng, sig);
      CHECK(left_contraction(apply_versor(a, V), apply_versor(b, V))
                .scalar_part() ==
            doctest::Approx(left_contraction(a, b).scalar_part())
                .epsilon(1e-9)
                .scale(1.0));
    }
  }
}

TEST_CASE("rotors in one plane commute as rotations") {
  test::Rng rng(37);
  const Signature sig = make_algebra(4, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const Multivector plane = test::random_invertible_blade(rng, sig, 2);
    const Multivector R = exp_bivector(plane, rng.uniform(-3, 3));
    const Multivector S = exp_bivector(plane, rng.uniform(-3, 3));
    const Multivector SRS = S * R * versor_inverse(S);
    for (int i = 1; i <= 4; ++i) {
      const Multivector e = Multivector::basis_vector(sig, i);
      CHECK_MV(apply_versor(e, SRS), apply_versor(e, R), 1e-9);
    }
  }
}

TEST_CASE("composite rotation in three dimensions is one rotor") {
  test::Rng rng(38);
  for (int trial = 0; trial < 30; ++trial) {
    const Multivector B1 = test::random_invertible_blade(rng, e3, 2);
    const Multivector B2 = test::random_invertible_blade(rng, e3, 2);
    const Multivector R1 =
        exp_bivector(B1 / std::sqrt(norm_squared(B1)), rng.uniform(-3, 3));
    const Multivector R2 =
        exp_bivector(B2 / std::sqrt(norm_squared(B2)), rng.uniform(-3, 3));
    const Multivector R = R2 * R1;
    CHECK(norm_squared(R) == doctest::Approx(1.0).epsilon(1e-12));
    // R = cos(theta/2) - sin(theta/2) B_hat.
    const double c = R.scalar_part();
    const Multivector bivector = grade_project(R, 2);
    const double s = std::sqrt(norm_squared(bivector));
    const double theta = 2.0 * std::atan2(s, c);
    const Multivector B = s > 0 ? bivector / (-s) : Multivector(e3);
    const Multivector rebuilt = exp_bivector(s > 0 ? B : mv("1*e12"), theta);
    for (int i = 1; i <= 3; ++i) {
      const Multivector e = Multivector::basis_vector(e3, i);
      CHECK_MV(apply_versor(e, rebuilt),
               apply_versor(apply_versor(e, R1), R2), 1e-9);
    }
  }
}

TEST_CASE("Gram-Schmidt") {
  const auto out = gram_schmidt({mv("1*e1", e2), mv("1*e2", e2)});
  CHECK(out[0] == mv("1*e1", e2));
  CHECK(out[1] == mv("1*e2", e2));
  const auto skew = gram_schmidt({mv("1*e1", e2), mv("1*e1 + 1*e2", e2)});
  CHECK_MV(skew[0], mv("1*e1", e2), 1e-15);
  CHECK_MV(skew[1], mv("1*e2", e2), 1e-15);
  CHECK(code_of([] { gram_schmidt({mv("1*e1", e2), mv("2*e1", e2)}); }) ==
        Errc::dependent_input);
  CHECK(code_of([] {
          gram_schmidt({mv("1*e1 + 1*e2", sta), mv("1*e3", sta)});
        }) == Errc::null_intermediate_blade);
  CHECK(code_of([] { gram_schmidt({mv("1*e12", e2)}); }) == Errc::non_vector);

  test::Rng rng(39);
  for (int n = 2; n <= 5; ++n) {
    const Signature sig = make_algebra(n, 0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Multivector> vs;
      for (int i = 0; i < n; ++i)
        vs.push_back(test::random_vector(rng, sig));
      const auto bs = gram_schmidt(vs);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          CHECK(std::abs(left_contraction(bs[i], bs[j]).scalar_part()) < 1e-9);
      // Same span and, by construction, the same volume.
      CHECK_MV(wedge_all(bs, sig), wedge_all(vs, sig), 1e-9);
    }
  }
}
