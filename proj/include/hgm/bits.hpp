#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hgm {

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for_bits(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-width binary matrix with rows packed into 64-bit words.
/// Padding bits past `bits()` are kept zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t bits)
      : rows_(rows),
        bits_(bits),
        words_(words_for_bits(bits)),
        data_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t bits() const { return bits_; }
  std::size_t words_per_row() const { return words_; }

  void set(std::size_t r, std::size_t c) {
    data_[r * words_ + c / kWordBits] |= std::uint64_t{1} << (c % kWordBits);
  }
  void clear(std::size_t r, std::size_t c) {
    data_[r * words_ + c / kWordBits] &= ~(std::uint64_t{1} << (c % kWordBits));
  }
  bool test(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t r) {
    return {data_.data() + r * words_, words_};
  }

  const std::vector<std::uint64_t>& words() const { return data_; }

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t bits_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

inline std::int64_t row_popcount(std::span<const std::uint64_t> row) {
  std::int64_t c = 0;
  for (std::uint64_t w : row) c += std::popcount(w);
  return c;
}

/// XOR-popcount Hamming distance between two equally sized bit rows.
inline std::int64_t hamming_rows(std::span<const std::uint64_t> a,
                                 std::span<const std::uint64_t> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_rows: row lengths differ");
  std::int64_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] ^ b[i]);
  return c;
}

inline std::int64_t and_popcount(std::span<const std::uint64_t> a,
                                 std::span<const std::uint64_t> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("and_popcount: row lengths differ");
  std::int64_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

/// Visit the index of every set bit in a row.
template <typename Fn>
void for_each_set_bit(std::span<const std::uint64_t> row, Fn&& fn) {
  for (std::size_t wi = 0; wi < row.size(); ++wi) {
    std::uint64_t w = row[wi];
    while (w) {
      const int b = std::countr_zero(w);
      fn(wi * kWordBits + static_cast<std::size_t>(b));
      w &= w - 1;
    }
  }
}

}  // namespace hgm
