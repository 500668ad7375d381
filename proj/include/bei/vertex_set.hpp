#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace bei {

/// Dense bit-indexed subset of [0, universe).  Iteration is always in
/// ascending vertex order.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const std::uint64_t* words, std::size_t count, std::size_t index)
        : words_(words), count_(count), index_(index) {
      if (index_ < count_) {
        current_ = words_[index_];
        advance_to_nonzero();
      }
    }

    int operator*() const {
      return static_cast<int>(index_ * 64 + std::countr_zero(current_));
    }
    iterator& operator++() {
      current_ &= current_ - 1;
      advance_to_nonzero();
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& other) const {
      return index_ == other.index_ && current_ == other.current_;
    }

   private:
    void advance_to_nonzero() {
      while (current_ == 0) {
        if (++index_ >= count_) {
          index_ = count_;
          return;
        }
        current_ = words_[index_];
      }
    }

    const std::uint64_t* words_ = nullptr;
    std::size_t count_ = 0;
    std::size_t index_ = 0;
    std::uint64_t current_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet of(int universe, std::initializer_list<int> members);
  static VertexSet from(int universe, std::span<const int> members);
  static VertexSet full(int universe);
  /// Universe must be at most 64.
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const noexcept { return universe_; }
  bool empty() const noexcept;
  int count() const noexcept;

  bool contains(int v) const noexcept {
    return v >= 0 && v < universe_ &&
           ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U);
  }
  void insert(int v);
  void erase(int v);

  /// Lowest member, or -1 when empty.
  int first() const noexcept;

  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  /// Complement within the universe.
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::vector<int> to_vector() const;
  /// Requires universe <= 64.
  std::uint64_t mask() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  iterator begin() const { return {words_.data(), words_.size(), 0}; }
  iterator end() const { return {words_.data(), words_.size(), words_.size()}; }

  /// "{0,2,5}"
  std::string to_string() const;

 private:
  void check_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical cutset order: by cardinality, then lexicographically on the
/// ascending member lists.
bool canonical_less(const VertexSet& a, const VertexSet& b);
bool canonical_less_mask(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace bei
