#include "bei/vertex_set.hpp"

#include <algorithm>

#include "bei/error.hpp"

namespace bei {

namespace {

std::size_t word_count(int universe) {
  return (static_cast<std::size_t>(universe) + 63) / 64;
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) {
    throw Error(ErrorCode::invalid_argument, "negative vertex-set universe");
  }
  words_.assign(word_count(universe), 0);
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~0ULL;
  if (universe % 64 != 0) {
    s.words_.back() = (1ULL << (universe % 64)) - 1;
  }
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) {
    throw Error(ErrorCode::invalid_argument, "mask construction needs universe <= 64");
  }
  VertexSet s(universe);
  if (universe < 64 && (mask >> universe) != 0) {
    throw Error(ErrorCode::invalid_vertex, "mask has bits outside the universe");
  }
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int VertexSet::count() const noexcept {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) {
    throw Error(ErrorCode::invalid_vertex,
                "vertex " + std::to_string(v) + " outside [0, " +
                    std::to_string(universe_) + ")");
  }
  words_[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) return;
  words_[static_cast<std::size_t>(v) >> 6] &= ~(1ULL << (v & 63));
}

int VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
  }
  return -1;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw Error(ErrorCode::invalid_argument, "vertex sets over different universes");
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::vector<int> VertexSet::to_vector() const { return {begin(), end()}; }

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) {
    throw Error(ErrorCode::invalid_argument, "mask() needs universe <= 64");
  }
  return words_.empty() ? 0 : words_[0];
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (int v : *this) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  }
  return out + "}";
}

bool canonical_less_mask(std::uint64_t a, std::uint64_t b) noexcept {
  int ca = std::popcount(a);
  int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  // Below the lowest differing bit both lists agree; whichever set owns that
  // bit has the smaller element at the first differing position.
  return (a & (diff & -diff)) != 0;
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  int ca = a.count();
  int cb = b.count();
  if (ca != cb) return ca < cb;
  auto wa = a.words();
  auto wb = b.words();
  auto n = std::max(wa.size(), wb.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t x = i < wa.size() ? wa[i] : 0;
    std::uint64_t y = i < wb.size() ? wb[i] : 0;
    std::uint64_t diff = x ^ y;
    if (diff != 0) return (x & (diff & -diff)) != 0;
  }
  return false;
}

}  // namespace bei
