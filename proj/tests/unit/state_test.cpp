#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <cohmix/error.hpp>
#include <cohmix/mcms.hpp>
#include <cohmix/measures.hpp>
#include <cohmix/sampler.hpp>
#include <cohmix/state.hpp>

#include "test_support.hpp"

namespace cohmix {
namespace {

using testing::diag;
using testing::kind_of;
using testing::qubit;

TEST(MakeState, Examples) {
  EXPECT_NO_THROW(make_state(qubit(0.5, 0.5)));
  EXPECT_EQ(kind_of([] { make_state(qubit(0.5, 0.6)); }), ErrorKind::NotPSD);
  EXPECT_EQ(kind_of([] { make_state(diag({0.6, 0.5})); }), ErrorKind::TraceNotOne);
}

TEST(MakeState, ReportsMeasuredViolation) {
  try {
    make_state(qubit(0.5, 0.6));
    FAIL();
  } catch (const Error& e) {
    // eigenvalues 0.5 -+ 0.6
    EXPECT_NEAR(e.measured(), -0.1, 1e-12);
    EXPECT_NE(std::string(e.what()).find("NotPSD"), std::string::npos);
  }
}

TEST(MakeState, RejectsShapeAndFiniteness) {
  ComplexMatrix rect(2, 3);
  rect.setZero();
  EXPECT_EQ(kind_of([&] { make_state(rect); }), ErrorKind::NotSquare);
  ComplexMatrix inf = diag({0.5, 0.5});
  inf(0, 1) = std::numeric_limits<double>::infinity();
  EXPECT_EQ(kind_of([&] { make_state(inf); }), ErrorKind::NonFinite);
  ComplexMatrix nonherm = qubit(0.5, 0.1);
  nonherm(1, 0) = 0.2;
  EXPECT_EQ(kind_of([&] { make_state(nonherm); }), ErrorKind::NotHermitian);
}

TEST(MakeState, ToleratesRoundOff) {
  ComplexMatrix m = diag({1.0 + 5e-11, -5e-11});
  EXPECT_NO_THROW(make_state(m));
}

TEST(CharPoly, Examples) {
  const auto a = char_poly_coefficients(maximally_mixed(2)).coeffs;
  ASSERT_EQ(a.size(), 2u);
  EXPECT_NEAR(a[0], 1.0, 1e-12);
  EXPECT_NEAR(a[1], 0.25, 1e-12);

  const auto b = char_poly_coefficients(basis_state(2, 0)).coeffs;
  EXPECT_NEAR(b[0], 1.0, 1e-12);
  EXPECT_NEAR(b[1], 0.0, 1e-12);

  // (lambda - 1/3)^3 = lambda^3 - lambda^2 + lambda/3 - 1/27
  const auto c = char_poly_coefficients(maximally_mixed(3)).coeffs;
  ASSERT_EQ(c.size(), 3u);
  EXPECT_NEAR(c[0], 1.0, 1e-12);
  EXPECT_NEAR(c[1], 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(c[2], 1.0 / 27.0, 1e-12);
}

TEST(CharPoly, PsdExamples) {
  EXPECT_FALSE(is_psd_by_charpoly(qubit(0.5, 0.6)));
  EXPECT_TRUE(is_psd_by_charpoly(qubit(0.5, 0.4)));
  for (int d = 1; d <= 8; ++d) EXPECT_TRUE(is_psd_by_charpoly(ComplexMatrix::Identity(d, d) / double(d)));
  ComplexMatrix nonherm(2, 2);
  nonherm << 0.5, 1, 0, 0.5;
  EXPECT_EQ(kind_of([&] { is_psd_by_charpoly(nonherm); }), ErrorKind::NotHermitian);
}

TEST(CharPoly, AgreesWithEigenvalueTest) {
  // Half the draws allow eigenvalues down to -0.3 so indefinite matrices
  // are common; the rest are PSD, including rank-deficient ones.
  SeededRng rng(2024);
  for (int d = 2; d <= 5; ++d) {
    int indefinite = 0;
    for (int t = 0; t < 10000; ++t) {
      ComplexMatrix m;
      if (t % 2 == 0) {
        m = testing::random_unit_trace_hermitian(d, -0.3, rng);
      } else {
        m = ginibre_state(d, 1 + t % d, rng).matrix();
      }
      const double min_eig = hermitian_eig(m).eigenvalues.minCoeff();
      // The coefficient tolerance scales with the product of the other
      // eigenvalues, so slightly negative spectra are not decidable at 1e-9.
      if (min_eig < -1e-9 && min_eig > -1e-4) continue;
      const bool by_eig = min_eig >= -1e-9;
      indefinite += by_eig ? 0 : 1;
      ASSERT_EQ(is_psd_by_charpoly(m), by_eig) << "d=" << d << " t=" << t;
    }
    EXPECT_GT(indefinite, 1000) << "d=" << d;
  }
}

TEST(CharPoly, RootsMatchEigenvalues) {
  SeededRng rng(7);
  for (int d = 2; d <= 4; ++d) {
    for (int t = 0; t < 200; ++t) {
      const auto rho = ginibre_state(d, d, rng);
      const auto a = char_poly_coefficients(rho).coeffs;
      EXPECT_NEAR(a[0], 1.0, 1e-10);
      // Companion matrix of lambda^d - A1 lambda^{d-1} + A2 lambda^{d-2} - ...
      Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
      for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
      for (int i = 1; i <= d; ++i) {
        const double sign = (i % 2 == 1) ? 1.0 : -1.0;
        companion(0, i - 1) = sign * a[i - 1];
      }
      Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
      std::vector<double> roots;
      for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i).real());
      std::sort(roots.begin(), roots.end());
      for (int i = 0; i < d; ++i) EXPECT_NEAR(roots[i], rho.spectrum()(i), 1e-8);
    }
  }
}

TEST(Dephase, Examples) {
  EXPECT_LT(testing::max_abs_diff(dephase(make_state(qubit(0.5, 0.5))).matrix(), diag({0.5, 0.5})), 1e-15);
  const auto d = make_state(diag({0.2, 0.3, 0.5}));
  EXPECT_LT(testing::max_abs_diff(dephase(d).matrix(), d.matrix()), 1e-15);
  const auto mcms = mcms_state(make_mcms_params(3, 0.5));
  EXPECT_LT(testing::max_abs_diff(dephase(mcms).matrix(), maximally_mixed(3).matrix()), 1e-15);
}

TEST(Dephase, IdempotentAndTracePreserving) {
  SeededRng rng(3);
  for (int d = 2; d <= 6; ++d) {
    const auto rho = ginibre_state(d, d, rng);
    const auto once = dephase(rho);
    EXPECT_EQ(once.matrix(), dephase(once).matrix());
    EXPECT_EQ(once.matrix().diagonal(), rho.matrix().diagonal().real().cast<Complex>());
  }
}

TEST(Entropy, Examples) {
  EXPECT_NEAR(von_neumann_entropy(maximally_coherent_pure(4)), 0.0, 1e-12);
  for (int d = 2; d <= 6; ++d) EXPECT_NEAR(von_neumann_entropy(maximally_mixed(d)), std::log(d), 1e-12);
  EXPECT_NEAR(von_neumann_entropy(make_state(diag({0.8, 0.2}))), 0.5004024235381879, 1e-12);
  // Same spectrum, rotated.
  SeededRng rng(5);
  const auto rotated = apply_unitary(make_state(diag({0.8, 0.2})), haar_unitary(2, rng));
  EXPECT_NEAR(von_neumann_entropy(rotated), 0.5004024235381879, 1e-10);
}

TEST(Entropy, ShannonHandlesZeros) {
  RealVector p(3);
  p << 0.5, 0.5, 0.0;
  EXPECT_NEAR(shannon_entropy(p), std::log(2.0), 1e-15);
}

TEST(Entropy, UnitarilyInvariantAndBounded) {
  SeededRng rng(4);
  for (int d = 2; d <= 5; ++d) {
    for (int t = 0; t < 50; ++t) {
      const auto rho = ginibre_state(d, 1 + t % d, rng);
      const double s = von_neumann_entropy(rho);
      EXPECT_NEAR(von_neumann_entropy(apply_unitary(rho, haar_unitary(d, rng))), s, 1e-10);
      EXPECT_GE(s, -1e-12);
      EXPECT_LE(s, std::log(d) + 1e-12);
    }
  }
}

TEST(ApplyUnitary, Examples) {
  const auto rho = make_state(qubit(0.3, 0.4));
  EXPECT_LT(testing::max_abs_diff(apply_unitary(rho, ComplexMatrix::Identity(2, 2)).matrix(), rho.matrix()), 1e-15);

  ComplexMatrix s(2, 2);
  s << 1, 1, -1, 1;
  s /= std::sqrt(2.0);
  EXPECT_LT(testing::max_abs_diff(apply_unitary(rho, s).matrix(), qubit(0.9, 0.2)), 1e-12);

  ComplexMatrix phase = diag({0, 1});
  phase(0, 0) = std::polar(1.0, 0.7);
  const auto rotated = apply_unitary(make_state(qubit(0.3, Complex{0.1, 0.3})), phase);
  EXPECT_NEAR(rotated(0, 0).real(), 0.3, 1e-15);
  EXPECT_NEAR(rotated(1, 1).real(), 0.7, 1e-15);
}

TEST(ApplyUnitary, Errors) {
  const auto rho = maximally_mixed(2);
  EXPECT_EQ(kind_of([&] { apply_unitary(rho, diag({1, 2})); }), ErrorKind::NotUnitary);
  EXPECT_EQ(kind_of([&] { apply_unitary(rho, ComplexMatrix::Identity(3, 3)); }), ErrorKind::DimensionMismatch);
}

TEST(SpecialStates, MaximallyCoherentPure) {
  EXPECT_LT(testing::max_abs_diff(maximally_coherent_pure(2).matrix(), qubit(0.5, 0.5)), 1e-15);
  const auto p3 = maximally_coherent_pure(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(p3(i, j) - 1.0 / 3.0), 0.0, 1e-15);
  for (int d = 1; d <= 8; ++d) EXPECT_NEAR(l1_coherence(maximally_coherent_pure(d)), d - 1.0, 1e-12);
}

TEST(SpecialStates, MaximallyMixed) {
  EXPECT_LT(testing::max_abs_diff(maximally_mixed(2).matrix(), diag({0.5, 0.5})), 1e-15);
  for (int d = 2; d <= 8; ++d) {
    EXPECT_NEAR(linear_entropy_mixedness(maximally_mixed(d)), 1.0, 1e-12);
    EXPECT_EQ(l1_coherence(maximally_mixed(d)), 0.0);
  }
}

TEST(SpecialStates, BasisState) {
  const auto b = basis_state(3, 2);
  EXPECT_EQ(b(2, 2), Complex(1.0));
  EXPECT_EQ(b(0, 0), Complex(0.0));
}

TEST(Fidelity, StateOverloadIsSymmetric) {
  EXPECT_NEAR(fidelity(basis_state(2, 0), maximally_mixed(2)), 0.5, 1e-12);
  EXPECT_NEAR(fidelity(maximally_mixed(2), basis_state(2, 0)), 0.5, 1e-12);
}

}  // namespace
}  // namespace cohmix
