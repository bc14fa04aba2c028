#include <gtest/gtest.h>

#include <numbers>

#include "qteleport/errors.hpp"
#include "qteleport/gates.hpp"
#include "test_util.hpp"

using namespace qtele;
using qtele::testing::make_state;
using qtele::testing::StatesNear;

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

StateVector ket(const char* bits) { return basis_state(BitChain::parse(bits)); }

}  // namespace

TEST(Gate2x2, StandardGatesAreUnitary) {
  for (const Gate2x2& g : {hadamard(), pauli_x(), pauli_z(), identity()}) {
    EXPECT_TRUE(g.is_unitary());
  }
  for (const Amplitude& e : hadamard().m) {
    EXPECT_NEAR(std::abs(e), kInvSqrt2, 1e-16);
  }
  // the non-unitary 1/2 prefactor on |0> is rejected
  const Gate2x2 half{{0.5, kInvSqrt2, 0.5, -kInvSqrt2}};
  EXPECT_FALSE(half.is_unitary());
}

TEST(Gate2x2, ActionOnBasisStates) {
  EXPECT_TRUE(StatesNear(apply_gate(ket("1"), hadamard(), 1),
                         make_state({kInvSqrt2, -kInvSqrt2}), 1e-16));
  EXPECT_EQ(apply_gate(ket("0"), pauli_x(), 1), ket("1"));
  EXPECT_EQ(apply_gate(ket("1"), pauli_z(), 1), ket("1").scaled(-1.0));
}

TEST(ApplyGate, TargetsTheRightTensorFactor) {
  EXPECT_TRUE(StatesNear(apply_gate(ket("00"), hadamard(), 1),
                         make_state({kInvSqrt2, 0.0, kInvSqrt2, 0.0}), 1e-16));
  EXPECT_EQ(apply_gate(ket("00"), pauli_x(), 2), ket("01"));
  const StateVector plus = make_state({kInvSqrt2, 0.0, kInvSqrt2, 0.0});
  EXPECT_TRUE(StatesNear(apply_gate(plus, pauli_z(), 1),
                         make_state({kInvSqrt2, 0.0, -kInvSqrt2, 0.0}), 1e-16));
  EXPECT_THROW(apply_gate(ket("00"), pauli_x(), 0), UsageError);
  EXPECT_THROW(apply_gate(ket("00"), pauli_x(), 3), UsageError);
}

TEST(ApplyCnot, Examples) {
  EXPECT_EQ(apply_cnot(ket("10"), 1, 2), ket("11"));
  EXPECT_EQ(apply_cnot(ket("00"), 1, 2), ket("00"));
  EXPECT_EQ(apply_cnot(ket("011"), 3, 1), ket("111"));
  EXPECT_THROW(apply_cnot(ket("00"), 1, 1), UsageError);
  EXPECT_THROW(apply_cnot(ket("00"), 1, 3), UsageError);
}

TEST(ApplyCnot, SingleQubitProtocolFirstStep) {
  // (a|0> + b|1>)(|00> + |11>)/sqrt2, then CNOT(1 -> 2), expanded by hand:
  // [a|000> + a|011> + b|110> + b|101>]/sqrt2
  const Amplitude a{0.6, 0.0}, b{0.0, 0.8};
  const StateVector input = make_state({a * kInvSqrt2, 0.0, 0.0, a * kInvSqrt2,
                                        b * kInvSqrt2, 0.0, 0.0, b * kInvSqrt2});
  const StateVector expected = make_state(
      {a * kInvSqrt2, 0.0, 0.0, a * kInvSqrt2, 0.0, b * kInvSqrt2,
       b * kInvSqrt2, 0.0});
  EXPECT_TRUE(StatesNear(apply_cnot(input, 1, 2), expected, 1e-16));
}

TEST(Gates, PreserveNormOnRandomStates) {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const unsigned n = 2 + t % 7;
    StateVector s = random_state(n, rng);
    s = apply_gate(s, hadamard(), 1 + t % n);
    s = apply_cnot(s, 1 + t % n, 1 + (t + 1) % n);
    s = apply_gate(s, pauli_z(), n);
    s = hadamard_layer(s, 1, n);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
  }
}

TEST(HadamardLayer, TwoQubitSignPattern) {
  // H(x)H|xy> = 1/2 [|00> + (-1)^y |01> + (-1)^x |10> + (-1)^(x+y) |11>]
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double sy = y ? -1.0 : 1.0, sx = x ? -1.0 : 1.0;
      const StateVector expected =
          make_state({0.5, 0.5 * sy, 0.5 * sx, 0.5 * sx * sy});
      const StateVector in = basis_state(BitChain(2, 2 * x + y));
      EXPECT_TRUE(StatesNear(hadamard_layer(in, 1, 2), expected, 1e-15));
      EXPECT_TRUE(StatesNear(hadamard_closed_form(BitChain(2, 2 * x + y)),
                             expected, 1e-15));
    }
  }
}

TEST(HadamardLayer, IsAnInvolution) {
  Rng rng(3);
  for (unsigned n = 1; n <= 8; ++n) {
    const StateVector s = random_state(n, rng);
    EXPECT_TRUE(StatesNear(hadamard_layer(hadamard_layer(s, 1, n), 1, n), s,
                           1e-12));
  }
}

TEST(HadamardLayer, ZeroGoesToUniformSuperposition) {
  for (unsigned n = 1; n <= 6; ++n) {
    const StateVector u = hadamard_layer(StateVector(n), 1, n);
    const double amp = std::pow(2.0, -0.5 * n);
    for (const Amplitude& a : u.amplitudes()) EXPECT_NEAR(a.real(), amp, 1e-15);
  }
}

TEST(HadamardLayer, RangeIsValidated) {
  EXPECT_THROW(hadamard_layer(StateVector(3), 2, 1), UsageError);
  EXPECT_THROW(hadamard_layer(StateVector(3), 1, 4), UsageError);
}

TEST(HadamardClosedForm, MatchesGateLayerForAllBasisInputs) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (std::uint64_t i = 0; i < (1u << n); ++i) {
      const BitChain label(n, i);
      ASSERT_TRUE(StatesNear(hadamard_closed_form(label),
                             hadamard_layer(basis_state(label), 1, n), 1e-12))
          << "n=" << n << " i=" << label.to_string();
    }
  }
}

TEST(HadamardClosedForm, Examples) {
  const StateVector zero = hadamard_closed_form(BitChain::zeros(3));
  for (const Amplitude& a : zero.amplitudes()) {
    EXPECT_DOUBLE_EQ(a.real(), 1.0 / std::sqrt(8.0));
  }
  EXPECT_EQ(hadamard_closed_form(BitChain::parse("11")),
            make_state({0.5, -0.5, -0.5, 0.5}));
}

TEST(PauliCorrection, WidthsMustAgree) {
  EXPECT_THROW(PauliCorrection(BitChain::parse("1"), BitChain::parse("10")),
               UsageError);
  EXPECT_EQ(PauliCorrection::identity(3).n(), 3u);
}

TEST(PauliCorrection, IdentityDoesNothing) {
  Rng rng(9);
  const StateVector s = random_state(3, rng);
  EXPECT_EQ(apply_pauli_correction(s, PauliCorrection::identity(3), 1), s);
  EXPECT_EQ(apply_pauli_correction_inverse(s, PauliCorrection::identity(3), 1), s);
}

TEST(PauliCorrection, SingleQubitExamples) {
  const Amplitude a{0.6, 0.0}, b{0.0, 0.8};
  const PauliCorrection x_only(BitChain::parse("1"), BitChain::parse("0"));
  // a|1> + b|0>  ->  a|0> + b|1>
  EXPECT_EQ(apply_pauli_correction(make_state({b, a}), x_only, 1),
            make_state({a, b}));

  const PauliCorrection both(BitChain::parse("1"), BitChain::parse("1"));
  // branch state for outcome 11 is a|1> - b|0>; undoing it (X, then Z)
  // restores a|0> + b|1>.
  EXPECT_EQ(apply_pauli_correction_inverse(make_state({-b, a}), both, 1),
            make_state({a, b}));
  // forward is Z first, then X: X Z (a|1> - b|0>) = -(a|0> + b|1>)
  EXPECT_EQ(apply_pauli_correction(make_state({-b, a}), both, 1),
            make_state({-a, -b}));

  // on |0>: forward X Z|0> = |1>; inverse Z X|0> = -|1>
  EXPECT_EQ(apply_pauli_correction(ket("0"), both, 1), ket("1"));
  EXPECT_EQ(apply_pauli_correction_inverse(ket("0"), both, 1),
            ket("1").scaled(-1.0));
  EXPECT_EQ(apply_pauli_correction(ket("1").scaled(-1.0), both, 1), ket("0"));
}

TEST(PauliCorrection, InverseUndoesForwardExactly) {
  Rng rng(33);
  for (std::uint64_t x = 0; x < 8; ++x) {
    for (std::uint64_t z = 0; z < 8; ++z) {
      const PauliCorrection c(BitChain(3, x), BitChain(3, z));
      const StateVector s = random_state(3, rng);
      const StateVector there = apply_pauli_correction(s, c, 1);
      EXPECT_TRUE(StatesNear(apply_pauli_correction_inverse(there, c, 1), s,
                             1e-12));
      EXPECT_TRUE(StatesNear(apply_pauli_correction(
                                 apply_pauli_correction_inverse(s, c, 1), c, 1),
                             s, 1e-12));
    }
  }
}

TEST(PauliCorrection, ActsOnTheBlockAtBase) {
  // X on the middle qubit of |000> via base 2
  const PauliCorrection c(BitChain::parse("1"), BitChain::parse("0"));
  EXPECT_EQ(apply_pauli_correction(ket("000"), c, 2), ket("010"));
  const PauliCorrection two(BitChain::parse("01"), BitChain::parse("00"));
  EXPECT_EQ(apply_pauli_correction(ket("000"), two, 2), ket("001"));
  EXPECT_THROW(apply_pauli_correction(ket("000"), two, 3), UsageError);
  EXPECT_THROW(apply_pauli_correction_inverse(ket("000"), two, 0), UsageError);
}

TEST(PauliCorrection, ZThenXDiffersFromXThenZBySign) {
  Rng rng(44);
  const PauliCorrection c(BitChain::parse("1"), BitChain::parse("1"));
  for (int t = 0; t < 10; ++t) {
    const StateVector s = random_state(1, rng);
    const StateVector xz = apply_pauli_correction(s, c, 1);          // X Z s
    const StateVector zx = apply_pauli_correction_inverse(s, c, 1);  // Z X s
    EXPECT_TRUE(StatesNear(xz, zx.scaled(-1.0), 1e-15));
  }
}
