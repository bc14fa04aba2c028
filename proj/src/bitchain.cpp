#include "qteleport/bitchain.hpp"

#include <bit>

#include "qteleport/errors.hpp"

namespace qtele {

namespace {

std::uint64_t mask_of(unsigned width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

void require_same_width(const BitChain& a, const BitChain& b, const char* op) {
  if (a.width() != b.width()) {
    throw UsageError(std::string(op) + ": width mismatch (" +
                     std::to_string(a.width()) + " vs " +
                     std::to_string(b.width()) + ")");
  }
}

}  // namespace

BitChain::BitChain(unsigned width, std::uint64_t value)
    : width_(width), value_(value) {
  if (width == 0 || width > kMaxWidth) {
    throw UsageError("BitChain width must be in 1.." +
                     std::to_string(kMaxWidth) + ", got " +
                     std::to_string(width));
  }
  if ((value & ~mask_of(width)) != 0) {
    throw UsageError("BitChain value " + std::to_string(value) +
                     " does not fit in " + std::to_string(width) + " bits");
  }
}

BitChain BitChain::from_bits(const std::vector<bool>& bits) {
  if (bits.empty() || bits.size() > kMaxWidth) {
    throw UsageError("BitChain::from_bits: bad bit count " +
                     std::to_string(bits.size()));
  }
  std::uint64_t v = 0;
  for (bool b : bits) v = (v << 1) | (b ? 1u : 0u);
  return BitChain(static_cast<unsigned>(bits.size()), v);
}

BitChain BitChain::parse(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw UsageError("BitChain::parse: invalid character in \"" +
                       std::string(text) + "\"");
    }
    bits.push_back(c == '1');
  }
  return from_bits(bits);
}

bool BitChain::bit(unsigned pos) const {
  if (pos == 0 || pos > width_) {
    throw UsageError("BitChain::bit: position " + std::to_string(pos) +
                     " out of range 1.." + std::to_string(width_));
  }
  return (value_ >> (width_ - pos)) & 1u;
}

std::vector<bool> BitChain::to_bits() const {
  std::vector<bool> bits(width_);
  for (unsigned p = 1; p <= width_; ++p) bits[p - 1] = bit(p);
  return bits;
}

std::string BitChain::to_string() const {
  std::string s(width_, '0');
  for (unsigned p = 1; p <= width_; ++p) {
    if (bit(p)) s[p - 1] = '1';
  }
  return s;
}

BitChain BitChain::append(bool b) const {
  if (width_ >= kMaxWidth) throw UsageError("BitChain::append: chain is full");
  return BitChain(width_ + 1, (value_ << 1) | (b ? 1u : 0u));
}

BitChain BitChain::slice(unsigned first, unsigned count) const {
  if (first == 0 || count == 0 || first + count - 1 > width_) {
    throw UsageError("BitChain::slice: range out of bounds");
  }
  const unsigned shift = width_ - (first + count - 1);
  return BitChain(count, (value_ >> shift) & mask_of(count));
}

BitChain BitChain::concat(const BitChain& tail) const {
  if (width_ + tail.width_ > kMaxWidth) {
    throw UsageError("BitChain::concat: combined width exceeds 64");
  }
  const std::uint64_t shifted = tail.width_ >= 64 ? 0 : value_ << tail.width_;
  return BitChain(width_ + tail.width_, shifted | tail.value_);
}

BitChain bitwise_and(const BitChain& a, const BitChain& b) {
  require_same_width(a, b, "bitwise_and");
  return BitChain(a.width(), a.value() & b.value());
}

BitChain bitwise_xor(const BitChain& a, const BitChain& b) {
  require_same_width(a, b, "bitwise_xor");
  return BitChain(a.width(), a.value() ^ b.value());
}

int parity_of_ones(const BitChain& a) { return std::popcount(a.value()) & 1; }

int iverson_delta(const BitChain& i, const BitChain& k) {
  return parity_of_ones(bitwise_and(i, k));
}

}  // namespace qtele
