#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace igconn {

// Fixed-universe dynamic bitset. Used for subgroup membership (universe =
// group order) and for adjacency rows of intersection graphs.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63U)) & 1U;
  }
  void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63U); }
  void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63U)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const BitSet& other) const noexcept;
  std::size_t intersection_count(const BitSet& other) const noexcept;

  BitSet& operator&=(const BitSet& other) noexcept;
  BitSet& operator|=(const BitSet& other) noexcept;
  friend BitSet operator&(BitSet a, const BitSet& b) noexcept { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) noexcept { return a |= b; }

  std::vector<std::uint32_t> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const BitSet&, const BitSet&) = default;

  // Lexicographic order of the ascending member lists; meaningful for sets of
  // equal size, which is the only way the library compares them.
  friend bool lex_less(const BitSet& a, const BitSet& b) noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& s) const noexcept { return s.hash(); }
};

}  // namespace igconn
