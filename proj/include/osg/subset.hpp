#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "osg/errors.hpp"

namespace osg {

using Element = std::size_t;

// A set of element indices over a fixed universe 0..capacity-1. Two subsets
// may only be combined when their capacities (i.e. their parent structures)
// agree.
class Subset {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type        = Element;
    using difference_type   = std::ptrdiff_t;
    using pointer           = const Element*;
    using reference         = Element;

    const_iterator() = default;
    const_iterator(const Subset* s, std::size_t pos) : set_(s), pos_(pos) {
      advance_to_member();
    }

    Element operator*() const { return pos_; }
    const_iterator& operator++() {
      ++pos_;
      advance_to_member();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    void advance_to_member();

    const Subset* set_ = nullptr;
    std::size_t   pos_ = 0;
  };

  Subset() = default;
  explicit Subset(std::size_t capacity)
      : n_(capacity), words_((capacity + 63) / 64, 0) {}
  Subset(std::size_t capacity, std::initializer_list<Element> members);

  static Subset full(std::size_t capacity);
  // Bits of `mask` become members; requires capacity <= 64.
  static Subset from_mask(std::size_t capacity, std::uint64_t mask);

  std::size_t capacity() const noexcept { return n_; }

  bool contains(Element x) const noexcept {
    return x < n_ && ((words_[x / 64] >> (x % 64)) & 1U);
  }
  void insert(Element x);
  void erase(Element x);
  void clear() noexcept;

  std::size_t size() const noexcept;
  bool        empty() const noexcept;
  // Smallest member; requires non-empty.
  Element front() const;

  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  bool operator==(const Subset& other) const = default;

  std::vector<Element> elements() const;
  std::uint64_t        mask() const;

  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, n_}; }

  std::size_t hash() const noexcept;

 private:
  void require_same_parent(const Subset& other) const;

  std::size_t                n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Order used for all deterministic subset listings: by size, then by the
// sorted member sequence.
std::strong_ordering size_lex_compare(const Subset& a, const Subset& b);

struct SizeLexLess {
  bool operator()(const Subset& a, const Subset& b) const {
    return size_lex_compare(a, b) < 0;
  }
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

}  // namespace osg
