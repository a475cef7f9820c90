#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace pdlab {

using Vertex = std::uint32_t;

/// Hard ceiling on graph order for every core operation.
inline constexpr std::size_t kMaxVertices = 512;

/// Fixed-capacity subset of {0, ..., kMaxVertices - 1}.
///
/// Membership, union, intersection, and difference are word-parallel. Values
/// are regular: copyable, comparable, and ordered lexicographically by their
/// sorted member lists (the order used for witness selection).
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* owner, std::size_t word, std::uint64_t rest)
        : owner_(owner), word_(word), rest_(rest) {
      settle();
    }

    Vertex operator*() const {
      return static_cast<Vertex>(word_ * 64 + std::countr_zero(rest_));
    }
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const {
      return word_ == o.word_ && rest_ == o.rest_;
    }

   private:
    void settle() {
      while (rest_ == 0 && word_ + 1 < kWords) {
        ++word_;
        rest_ = owner_->words_[word_];
      }
      if (rest_ == 0) word_ = kWords;
    }

    const VertexSet* owner_ = nullptr;
    std::size_t word_ = kWords;
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }
  template <class Range>
  static VertexSet from(const Range& members) {
    VertexSet s;
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }
  /// {0, ..., n - 1}
  static VertexSet range(std::size_t n) {
    VertexSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  void insert(Vertex v) { words_[v >> 6] |= bit(v); }
  void erase(Vertex v) { words_[v >> 6] &= ~bit(v); }
  [[nodiscard]] bool contains(Vertex v) const {
    return v < kMaxVertices && (words_[v >> 6] & bit(v)) != 0;
  }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  /// Least member; kMaxVertices when empty.
  [[nodiscard]] Vertex first() const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return static_cast<Vertex>(kMaxVertices);
  }
  /// One past the greatest member; 0 when empty.
  [[nodiscard]] std::size_t extent() const {
    for (std::size_t i = kWords; i-- > 0;)
      if (words_[i] != 0) return i * 64 + 64 - std::countl_zero(words_[i]);
    return 0;
  }

  [[nodiscard]] bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  [[nodiscard]] bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on ascending member lists. For sets of equal size
  /// this reduces to: a < b iff min(a xor b) belongs to a.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    for (std::size_t i = 0; i < kWords; ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff == 0) continue;
      const std::uint64_t low = diff & (~diff + 1);
      const std::uint64_t above = ~(low | (low - 1));
      // The side missing the first difference wins iff it still has a larger
      // member; otherwise it is a proper prefix of the other.
      if ((a.words_[i] & low) != 0)
        return (b.words_[i] & above) != 0 || tail_nonempty(b, i + 1);
      return (a.words_[i] & above) == 0 && !tail_nonempty(a, i + 1);
    }
    return false;
  }

  [[nodiscard]] const_iterator begin() const { return {this, 0, words_[0]}; }
  [[nodiscard]] const_iterator end() const { return {this, kWords, 0}; }

  [[nodiscard]] std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  [[nodiscard]] std::uint64_t word(std::size_t i) const { return words_[i]; }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }
  static bool tail_nonempty(const VertexSet& s, std::size_t from) {
    for (std::size_t i = from; i < kWords; ++i)
      if (s.words_[i] != 0) return true;
    return false;
  }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace pdlab
