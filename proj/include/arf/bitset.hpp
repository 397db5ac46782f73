#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace arf {

/// Fixed-width set of small nonnegative integers packed into 64-bit words.
/// Bits past size() in the last word are always zero, so word-wise equality
/// and hashing are exact.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return nbits_; }

  bool test(std::size_t i) const noexcept {
    return i < nbits_ && ((words_[i >> 6] >> (i & 63)) & 1u) != 0;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= word_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(word_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (word_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// First set bit at position >= from, or npos.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= nbits_) return npos;
    std::size_t wi = from >> 6;
    word_t w = words_[wi] & (~word_t{0} << (from & 63));
    while (true) {
      if (w != 0) {
        std::size_t pos = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return pos < nbits_ ? pos : npos;
      }
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  /// OR into *this the bits of `src` restricted to [lo, hi] shifted up by `shift`;
  /// positions that land at or beyond size() are dropped.
  void or_shifted_range(const Bitset& src, std::size_t lo, std::size_t hi, std::size_t shift) {
    for (std::size_t i = src.find_next(lo); i != npos && i <= hi; i = src.find_next(i + 1)) {
      if (i + shift < nbits_) set(i + shift);
    }
  }

  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      word_t theirs = i < other.words_.size() ? other.words_[i] : 0;
      if ((words_[i] & ~theirs) != 0) return false;
    }
    return true;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(nbits_);
    for (word_t w : words_) h ^= std::hash<word_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  using word_t = std::uint64_t;
  std::size_t nbits_ = 0;
  std::vector<word_t> words_;
};

}  // namespace arf
