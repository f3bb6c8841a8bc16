#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mif {

// A bit string written most-significant-bit first. Used for state encodings,
// where only the length and the prefix structure matter.
class BitString {
 public:
  BitString() = default;

  void append(std::uint64_t value, unsigned width) {
    if (width < 64 && (value >> width) != 0)
      throw std::logic_error("value does not fit in the requested width");
    for (unsigned i = width; i-- > 0;) bits_.push_back(((value >> i) & 1U) != 0);
  }

  void append_bit(bool b) { bits_.push_back(b); }

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }

  bool is_prefix_of(const BitString& other) const {
    if (size() > other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (bits_[i] != other.bits_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(size());
    for (bool b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString& a, const BitString& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<bool> bits_;
};

class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(bits) {}

  std::uint64_t read(unsigned width) {
    if (pos_ + width > bits_.size())
      throw std::invalid_argument("truncated state encoding");
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) v = (v << 1) | (bits_[pos_++] ? 1U : 0U);
    return v;
  }

  bool read_bit() { return read(1) != 0; }

  bool exhausted() const { return pos_ == bits_.size(); }

  void expect_end() const {
    if (!exhausted()) throw std::invalid_argument("trailing bits in state encoding");
  }

 private:
  const BitString& bits_;
  std::size_t pos_ = 0;
};

}  // namespace mif
