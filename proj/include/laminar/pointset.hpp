#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace laminar {

// A set of points in a fixed finite universe {0, ..., n-1}, stored as a
// bitset. Binary operations require both operands to share the universe.
class PointSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  PointSet() = default;
  explicit PointSet(std::size_t universe_size)
      : n_(universe_size), words_((universe_size + 63) / 64, 0) {}

  static PointSet full(std::size_t universe_size) {
    PointSet s(universe_size);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe_size() const { return n_; }

  bool contains(std::size_t p) const {
    return p < n_ && ((words_[p >> 6] >> (p & 63)) & 1) != 0;
  }

  void add(std::size_t p) {
    if (p >= n_) throw std::out_of_range("point outside the universe");
    words_[p >> 6] |= std::uint64_t{1} << (p & 63);
  }

  void remove(std::size_t p) {
    if (p >= n_) throw std::out_of_range("point outside the universe");
    words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  PointSet& operator|=(const PointSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  PointSet& operator&=(const PointSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  PointSet& operator-=(const PointSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  PointSet complement() const { return full(n_) - *this; }

  bool subset_of(const PointSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  bool proper_subset_of(const PointSet& o) const {
    return subset_of(o) && *this != o;
  }

  bool intersects(const PointSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) = default;

  // Arbitrary but deterministic strict order, usable as a map key.
  friend bool operator<(const PointSet& a, const PointSet& b) {
    return std::tie(a.n_, a.words_) < std::tie(b.n_, b.words_);
  }

  std::size_t min_point() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
  }

  std::vector<std::size_t> points() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t p = 0; p < n_; ++p)
      if (contains(p)) out.push_back(p);
    return out;
  }

  struct Hash {
    std::size_t operator()(const PointSet& s) const {
      std::size_t h = s.n_;
      for (auto w : s.words_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
      return h;
    }
  };

 private:
  void check_same(const PointSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("point sets over different universes");
  }

  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace laminar
