#include <gtest/gtest.h>

#include <random>

#include "qteleport/bitchain.hpp"
#include "qteleport/errors.hpp"

using qtele::BitChain;

namespace {

BitChain chain(const char* bits) { return BitChain::parse(bits); }

// Bit-by-bit reference for the Iverson delta, independent of popcount.
int delta_by_hand(const BitChain& i, const BitChain& k) {
  int ones = 0;
  for (unsigned p = 1; p <= i.width(); ++p) {
    if (i.bit(p) && k.bit(p)) ++ones;
  }
  return ones % 2;
}

int sgn(int bit) { return bit % 2 ? -1 : 1; }

}  // namespace

TEST(BitChain, BigEndianStringForm) {
  const BitChain c(4, 5);
  EXPECT_EQ(c.to_string(), "0101");
  EXPECT_TRUE(c.bit(2));
  EXPECT_FALSE(c.bit(1));
  EXPECT_EQ(chain("0101"), c);
  EXPECT_EQ(BitChain::zeros(3).to_string(), "000");
}

TEST(BitChain, RejectsValuesWiderThanWidth) {
  EXPECT_THROW(BitChain(2, 4), qtele::UsageError);
  EXPECT_THROW(BitChain(0, 0), qtele::UsageError);
  EXPECT_THROW(BitChain::parse("01a"), qtele::UsageError);
  EXPECT_THROW(BitChain::parse(""), qtele::UsageError);
  EXPECT_NO_THROW(BitChain(64, ~std::uint64_t{0}));
}

TEST(BitChain, ToBitsFromBitsRoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned w = 1 + rng() % 64;
    const std::uint64_t v = w == 64 ? rng() : rng() % (std::uint64_t{1} << w);
    const BitChain c(w, v);
    const auto bits = c.to_bits();
    ASSERT_EQ(bits.size(), w);
    EXPECT_EQ(BitChain::from_bits(bits), c);
    EXPECT_EQ(BitChain::parse(c.to_string()), c);
  }
}

TEST(BitChain, AppendSliceConcat) {
  EXPECT_EQ(chain("10").append(true), chain("101"));
  EXPECT_EQ(chain("10").append(false).value(), 4u);
  EXPECT_EQ(chain("110100").slice(2, 3), chain("101"));
  EXPECT_EQ(chain("01").concat(chain("110")), chain("01110"));
  EXPECT_THROW(chain("110").slice(3, 2), qtele::UsageError);
}

TEST(BitwiseAnd, Examples) {
  EXPECT_EQ(bitwise_and(chain("11"), chain("11")), chain("11"));
  EXPECT_EQ(bitwise_and(chain("10"), chain("11")), chain("10"));
  EXPECT_EQ(bitwise_and(BitChain::zeros(5), chain("10110")), BitChain::zeros(5));
  EXPECT_THROW(bitwise_and(chain("10"), chain("101")), qtele::UsageError);
}

TEST(BitwiseXor, Examples) {
  // j = 2, i = 3 at width 2 gives 01
  EXPECT_EQ(bitwise_xor(BitChain(2, 2), BitChain(2, 3)), chain("01"));
  EXPECT_EQ(bitwise_xor(chain("1011"), chain("1011")), BitChain::zeros(4));
  EXPECT_EQ(bitwise_xor(chain("1011"), BitChain::zeros(4)), chain("1011"));
  EXPECT_THROW(bitwise_xor(chain("1"), chain("10")), qtele::UsageError);
}

TEST(ParityOfOnes, Examples) {
  EXPECT_EQ(parity_of_ones(BitChain::zeros(4)), 0);
  EXPECT_EQ(parity_of_ones(chain("11")), 0);
  EXPECT_EQ(parity_of_ones(chain("10")), 1);
}

TEST(IversonDelta, Examples) {
  // xy = 11, k = 01: the |01> term of H(x)H|11> carries (-1)^y = -1
  EXPECT_EQ(iverson_delta(chain("11"), chain("01")), 1);
  for (std::uint64_t k = 0; k < 8; ++k) {
    EXPECT_EQ(iverson_delta(BitChain::zeros(3), BitChain(3, k)), 0);
  }
  EXPECT_EQ(iverson_delta(chain("11"), chain("11")), 0);
  EXPECT_THROW(iverson_delta(chain("11"), chain("1")), qtele::UsageError);
}

TEST(IversonDelta, MatchesBitByBitReference) {
  for (unsigned w = 1; w <= 6; ++w) {
    for (std::uint64_t i = 0; i < (1u << w); ++i) {
      for (std::uint64_t k = 0; k < (1u << w); ++k) {
        const BitChain a(w, i), b(w, k);
        ASSERT_EQ(iverson_delta(a, b), delta_by_hand(a, b));
        ASSERT_EQ(qtele::iverson_delta_raw(i, k), delta_by_hand(a, b));
      }
    }
  }
}

// Appending a bit to both chains: the sign flips only when both new bits
// are 1. Exhaustive over every pair of width <= 8.
TEST(IversonDelta, AppendedBitPropertiesExhaustive) {
  for (unsigned w = 1; w <= 8; ++w) {
    for (std::uint64_t i = 0; i < (1u << w); ++i) {
      for (std::uint64_t k = 0; k < (1u << w); ++k) {
        const BitChain a(w, i), b(w, k);
        const int base = sgn(iverson_delta(a, b));
        ASSERT_EQ(sgn(iverson_delta(a.append(true), b.append(true))), -base);
        ASSERT_EQ(sgn(iverson_delta(a.append(true), b.append(false))), base);
        ASSERT_EQ(sgn(iverson_delta(a.append(false), b.append(true))), base);
        ASSERT_EQ(sgn(iverson_delta(a.append(false), b.append(false))), base);
      }
    }
  }
}

TEST(IversonDelta, SymmetricAndLinearInEachArgument) {
  for (unsigned w = 1; w <= 5; ++w) {
    const std::uint64_t d = 1u << w;
    for (std::uint64_t i = 0; i < d; ++i) {
      for (std::uint64_t j = 0; j < d; ++j) {
        for (std::uint64_t k = 0; k < d; ++k) {
          const BitChain a(w, i), b(w, j), c(w, k);
          ASSERT_EQ(iverson_delta(a, c), iverson_delta(c, a));
          ASSERT_EQ(iverson_delta(bitwise_xor(a, b), c),
                    iverson_delta(a, c) ^ iverson_delta(b, c));
        }
      }
    }
  }
}
