#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include <cohmix/mcms.hpp>
#include <cohmix/measures.hpp>
#include <cohmix/sampler.hpp>

#include "test_support.hpp"

namespace cohmix {
namespace {

using testing::diag;
using testing::kind_of;
using testing::qubit;

TEST(L1Coherence, Examples) {
  for (int d = 2; d <= 6; ++d) EXPECT_NEAR(l1_coherence(maximally_coherent_pure(d)), d - 1.0, 1e-12);
  EXPECT_EQ(l1_coherence(make_state(diag({0.1, 0.2, 0.7}))), 0.0);
  EXPECT_NEAR(l1_coherence(make_state(qubit(0.3, 0.4))), 0.8, 1e-15);
}

TEST(L1Coherence, InvariantUnderIncoherentUnitaries) {
  SeededRng rng(31);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int d = 2; d <= 5; ++d) {
    for (int t = 0; t < 100; ++t) {
      const auto rho = ginibre_state(d, d, rng);
      std::vector<int> perm(d);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng.engine());
      ComplexMatrix u = ComplexMatrix::Zero(d, d);
      for (int i = 0; i < d; ++i) u(perm[i], i) = std::polar(1.0, angle(rng.engine()));
      EXPECT_NEAR(l1_coherence(apply_unitary(rho, u)), l1_coherence(rho), 1e-12);
    }
  }
}

TEST(RelativeEntropyCoherence, Examples) {
  for (int d = 2; d <= 6; ++d) {
    EXPECT_NEAR(relative_entropy_coherence(maximally_coherent_pure(d)), std::log(d), 1e-12);
  }
  EXPECT_NEAR(relative_entropy_coherence(make_state(diag({0.1, 0.9}))), 0.0, 1e-15);
  // Eigenvalues (1 -+ 0.6)/2 = {0.2, 0.8}, dephased state I/2.
  EXPECT_NEAR(relative_entropy_coherence(mcms_state(make_mcms_params(2, 0.6))), 0.19274475702175742, 1e-12);
}

TEST(GeometricCoherence, ClosedForm) {
  EXPECT_EQ(geometric_coherence_qubit(make_state(diag({0.3, 0.7}))), 0.0);
  EXPECT_NEAR(geometric_coherence_qubit(make_state(qubit(0.5, 0.3))), 0.1, 1e-15);
  EXPECT_NEAR(geometric_coherence_qubit(maximally_coherent_pure(2)), 0.5, 1e-15);
  EXPECT_EQ(kind_of([] { geometric_coherence_qubit(maximally_mixed(3)); }), ErrorKind::WrongDimension);
}

TEST(GeometricCoherence, NumericExamples) {
  EXPECT_NEAR(geometric_coherence_numeric(make_state(diag({0.3, 0.7}))), 0.0, 1e-9);
  EXPECT_NEAR(geometric_coherence_numeric(make_state(qubit(0.5, 0.3))), 0.1, 1e-6);
  EXPECT_NEAR(geometric_coherence_numeric(make_state(qubit(0.5, 0.5))), 0.5, 1e-6);
}

TEST(GeometricCoherence, NumericMatchesClosedFormOnQubits) {
  SeededRng rng(32);
  for (int t = 0; t < 100; ++t) {
    const auto rho = ginibre_state(2, 1 + t % 2, rng);
    EXPECT_NEAR(geometric_coherence_numeric(rho), geometric_coherence_qubit(rho), 1e-6);
  }
}

TEST(GeometricCoherence, NumericBoundedByDephasedFidelity) {
  // C_g <= 1 - F(rho, dephase(rho)) since the dephased state is incoherent.
  SeededRng rng(33);
  for (int d = 3; d <= 4; ++d) {
    for (int t = 0; t < 5; ++t) {
      const auto rho = ginibre_state(d, d, rng);
      const double cg = geometric_coherence_numeric(rho);
      EXPECT_LE(cg, 1.0 - fidelity(rho, dephase(rho)) + 1e-9);
      EXPECT_GE(cg, 0.0);
    }
  }
}

TEST(LinearEntropyMixedness, Examples) {
  EXPECT_NEAR(linear_entropy_mixedness(maximally_coherent_pure(3)), 0.0, 1e-12);
  for (int d = 2; d <= 6; ++d) EXPECT_NEAR(linear_entropy_mixedness(maximally_mixed(d)), 1.0, 1e-12);
  EXPECT_NEAR(linear_entropy_mixedness(make_state(qubit(0.3, 0.4))), 0.2, 1e-12);
}

TEST(LinearEntropyMixedness, RejectsDimensionOne) {
  EXPECT_EQ(kind_of([] { linear_entropy_mixedness(maximally_mixed(1)); }), ErrorKind::WrongDimension);
}

TEST(GeometricMixedness, Examples) {
  for (int d = 2; d <= 5; ++d) {
    EXPECT_NEAR(geometric_mixedness(maximally_mixed(d)), 1.0, 1e-12);
    EXPECT_NEAR(geometric_mixedness(maximally_coherent_pure(d)), 1.0 / d, 1e-7);
  }
  EXPECT_NEAR(geometric_mixedness(basis_state(2, 1)), 0.5, 1e-15);
  // (1 + sqrt(4 * 0.16)) / 2
  EXPECT_NEAR(geometric_mixedness(make_state(qubit(0.5, 0.3))), 0.9, 1e-12);
}

TEST(GeometricMixedness, MatchesFidelityToMaximallyMixed) {
  SeededRng rng(34);
  for (int d = 2; d <= 5; ++d) {
    for (int t = 0; t < 50; ++t) {
      const auto rho = ginibre_state(d, d, rng);
      EXPECT_NEAR(geometric_mixedness(rho), fidelity(rho, maximally_mixed(d)), 1e-9);
    }
  }
}

TEST(TradeoffResidual, Examples) {
  for (int d = 2; d <= 6; ++d) {
    EXPECT_NEAR(tradeoff_residual(mcms_state(make_mcms_params(d, 0.37))), 0.0, 1e-12);
    EXPECT_NEAR(tradeoff_residual(maximally_mixed(d)), 0.0, 1e-12);
  }
  EXPECT_NEAR(tradeoff_residual(make_state(qubit(0.3, 0.4))), 0.16, 1e-12);
}

TEST(TradeoffResidual, NonNegativeOnRandomStates) {
  SeededRng rng(35);
  for (int d = 2; d <= 5; ++d) {
    for (int t = 0; t < 5000; ++t) {
      EXPECT_GE(tradeoff_residual(ginibre_state(d, 1 + t % d, rng)), -1e-9);
    }
  }
}

TEST(QubitIdentity, Examples) {
  EXPECT_NEAR(qubit_identity_check(make_state(qubit(0.5, 0.3))), 0.0, 1e-12);
  EXPECT_NEAR(qubit_identity_check(make_state(qubit(0.3, 0.4))), 0.0, 1e-12);
  EXPECT_NEAR(qubit_identity_check(make_state(diag({0.15, 0.85}))), 0.0, 1e-12);
  EXPECT_EQ(kind_of([] { qubit_identity_check(maximally_mixed(3)); }), ErrorKind::WrongDimension);
}

TEST(GeometricComplementarity, QubitBoundAndEquality) {
  SeededRng rng(36);
  for (int t = 0; t < 2000; ++t) {
    const auto rho = ginibre_state(2, 1 + t % 2, rng);
    EXPECT_LE(geometric_coherence_qubit(rho) + geometric_mixedness(rho), 1.0 + 1e-10);
  }
  for (int k = 0; k <= 100; ++k) {
    const auto rho = make_state(qubit(0.5, std::polar(0.005 * k, 0.3 * k)));
    EXPECT_NEAR(geometric_coherence_qubit(rho) + geometric_mixedness(rho), 1.0, 1e-10) << k;
  }
}

TEST(EntropicTradeoff, Examples) {
  for (int d = 2; d <= 6; ++d) {
    EXPECT_NEAR(entropic_tradeoff_residual(maximally_coherent_pure(d)), 0.0, 1e-12);
    EXPECT_NEAR(entropic_tradeoff_residual(basis_state(d, 0)), 1.0, 1e-12);
    for (double p : {0.0, 0.3, 0.8, 1.0}) {
      EXPECT_NEAR(entropic_tradeoff_residual(mcms_state(make_mcms_params(d, p))), 0.0, 1e-12);
    }
  }
}

TEST(EntropicTradeoff, IdentityAndBoundOnRandomStates) {
  SeededRng rng(37);
  for (int d = 2; d <= 5; ++d) {
    for (int t = 0; t < 500; ++t) {
      const auto rho = ginibre_state(d, 1 + t % d, rng);
      const double lhs = relative_entropy_coherence(rho) + von_neumann_entropy(rho);
      EXPECT_NEAR(lhs, von_neumann_entropy(dephase(rho)), 1e-10);
      EXPECT_GE(entropic_tradeoff_residual(rho), -1e-10);
    }
  }
}

TEST(MeasureReport, QubitHasClosedFormGeometric) {
  const auto r = measure_report(make_state(qubit(0.5, 0.3)));
  EXPECT_EQ(r.dim, 2);
  EXPECT_NEAR(r.c_l1, 0.6, 1e-15);
  ASSERT_TRUE(r.c_geometric.has_value());
  EXPECT_NEAR(*r.c_geometric, 0.1, 1e-15);
  EXPECT_NEAR(r.m_linear, 0.64, 1e-12);
  EXPECT_NEAR(r.m_geometric, 0.9, 1e-12);
  EXPECT_NEAR(r.tradeoff_residual, 0.0, 1e-12);
}

TEST(MeasureReport, HigherDimensionGeometricIsOptional) {
  const auto rho = mcms_state(make_mcms_params(3, 0.5));
  const auto r = measure_report(rho);
  EXPECT_FALSE(r.c_geometric.has_value());
  EXPECT_NEAR(r.c_l1, 1.0, 1e-12);
  EXPECT_NEAR(r.m_linear, 0.75, 1e-12);
  EXPECT_LE(std::abs(r.tradeoff_residual), 1e-12);
  const auto with = measure_report(rho, OptimizerConfig{});
  ASSERT_TRUE(with.c_geometric.has_value());
  EXPECT_GT(*with.c_geometric, 0.0);
  EXPECT_LT(*with.c_geometric, 1.0);
}

}  // namespace
}  // namespace cohmix
