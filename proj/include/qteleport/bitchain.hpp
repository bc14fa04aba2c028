#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qtele {

/// Fixed-width chain of bits labelling a computational basis state.
///
/// Bit 1 is the most significant (leftmost in ket notation), so the chain
/// "0101" has width 4 and value 5. The width is always explicit; leading
/// zeros are significant.
class BitChain {
 public:
  static constexpr unsigned kMaxWidth = 64;

  BitChain() = default;
  BitChain(unsigned width, std::uint64_t value);

  static BitChain zeros(unsigned width) { return BitChain(width, 0); }
  static BitChain from_bits(const std::vector<bool>& bits);
  /// Parses an ASCII '0'/'1' string, most significant first.
  static BitChain parse(std::string_view text);

  unsigned width() const { return width_; }
  std::uint64_t value() const { return value_; }

  /// Bit at 1-based position `pos` (1 = most significant).
  bool bit(unsigned pos) const;
  std::vector<bool> to_bits() const;
  std::string to_string() const;

  /// Chain of width+1 with `b` appended as the new least significant bit
  /// (value 2k + b).
  BitChain append(bool b) const;
  /// Sub-chain of positions [first, first + count).
  BitChain slice(unsigned first, unsigned count) const;
  /// Concatenation: this chain's bits followed by `tail`'s.
  BitChain concat(const BitChain& tail) const;

  friend bool operator==(const BitChain&, const BitChain&) = default;
  friend auto operator<=>(const BitChain&, const BitChain&) = default;

 private:
  unsigned width_ = 0;
  std::uint64_t value_ = 0;
};

BitChain bitwise_and(const BitChain& a, const BitChain& b);
BitChain bitwise_xor(const BitChain& a, const BitChain& b);

/// 1 if the chain has an odd number of 1-bits.
int parity_of_ones(const BitChain& a);

/// Iverson delta: parity of the 1-bits of (i AND k). Governs the sign
/// (-1)^delta of |k> in the Hadamard transform of |i>.
int iverson_delta(const BitChain& i, const BitChain& k);

/// Same as iverson_delta on raw indices, for hot loops that already know
/// both operands share a width.
inline int iverson_delta_raw(std::uint64_t i, std::uint64_t k) {
  return __builtin_parityll(i & k);
}

/// (-1)^bit as a double.
inline double sign_of(int bit) { return (bit & 1) ? -1.0 : 1.0; }

}  // namespace qtele
