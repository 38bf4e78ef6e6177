#include "osg/subset.hpp"

#include <algorithm>
#include <functional>

namespace osg {

void Subset::const_iterator::advance_to_member() {
  const std::size_t n = set_ == nullptr ? 0 : set_->n_;
  while (pos_ < n) {
    std::uint64_t word = set_->words_[pos_ / 64] >> (pos_ % 64);
    if (word != 0) {
      pos_ += static_cast<std::size_t>(std::countr_zero(word));
      return;
    }
    pos_ = (pos_ / 64 + 1) * 64;
  }
  pos_ = n;
}

Subset::Subset(std::size_t capacity, std::initializer_list<Element> members)
    : Subset(capacity) {
  for (Element x : members) {
    insert(x);
  }
}

Subset Subset::full(std::size_t capacity) {
  Subset s(capacity);
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    s.words_[w] = ~std::uint64_t{0};
  }
  if (capacity % 64 != 0) {
    s.words_.back() = (std::uint64_t{1} << (capacity % 64)) - 1;
  }
  return s;
}

Subset Subset::from_mask(std::size_t capacity, std::uint64_t mask) {
  if (capacity > 64) {
    throw ContractError("Subset::from_mask: capacity exceeds 64");
  }
  Subset s(capacity);
  if (capacity < 64) {
    mask &= (std::uint64_t{1} << capacity) - 1;
  }
  if (!s.words_.empty()) {
    s.words_[0] = mask;
  }
  return s;
}

void Subset::insert(Element x) {
  if (x >= n_) {
    throw ContractError("Subset::insert: element " + std::to_string(x)
                        + " out of range " + std::to_string(n_));
  }
  words_[x / 64] |= std::uint64_t{1} << (x % 64);
}

void Subset::erase(Element x) {
  if (x < n_) {
    words_[x / 64] &= ~(std::uint64_t{1} << (x % 64));
  }
}

void Subset::clear() noexcept {
  std::fill(words_.begin(), words_.end(), 0);
}

std::size_t Subset::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool Subset::empty() const noexcept {
  return std::all_of(
      words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Element Subset::front() const {
  auto it = begin();
  if (it == end()) {
    throw ContractError("Subset::front: empty subset");
  }
  return *it;
}

void Subset::require_same_parent(const Subset& other) const {
  if (n_ != other.n_) {
    throw ContractError("subsets belong to different structures (capacity "
                        + std::to_string(n_) + " vs "
                        + std::to_string(other.n_) + ")");
  }
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_parent(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) {
      return false;
    }
  }
  return true;
}

bool Subset::intersects(const Subset& other) const {
  require_same_parent(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) {
      return true;
    }
  }
  return false;
}

Subset& Subset::operator|=(const Subset& other) {
  require_same_parent(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] |= other.words_[w];
  }
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  require_same_parent(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
  }
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  require_same_parent(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= ~other.words_[w];
  }
  return *this;
}

std::vector<Element> Subset::elements() const {
  return {begin(), end()};
}

std::uint64_t Subset::mask() const {
  if (n_ > 64) {
    throw ContractError("Subset::mask: capacity exceeds 64");
  }
  return words_.empty() ? 0 : words_[0];
}

std::size_t Subset::hash() const noexcept {
  std::size_t h = std::hash<std::size_t>{}(n_);
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
         + (h >> 2);
  }
  return h;
}

std::strong_ordering size_lex_compare(const Subset& a, const Subset& b) {
  if (auto c = a.size() <=> b.size(); c != 0) {
    return c;
  }
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (auto c = *ia <=> *ib; c != 0) {
      return c;
    }
  }
  return a.capacity() <=> b.capacity();
}

}  // namespace osg
