#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ran {

// Set of vertex ids over a fixed universe 0..n-1, packed into 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.w_) w = ~0ull;
    s.trim();
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> verts) {
    VertexSet s(universe);
    for (int v : verts) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
  void set(int v) { w_[v >> 6] |= 1ull << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(1ull << (v & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_) {
      if (w) return false;
    }
    return true;
  }

  bool any() const { return !empty(); }

  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(n_);
    for (size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
    s.trim();
    return s;
  }

  // True when other is a subset of this set.
  bool contains(const VertexSet& other) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      if (other.w_[i] & ~w_[i]) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& other) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & other.w_[i]) return true;
    }
    return false;
  }

  bool operator==(const VertexSet&) const = default;

  // Lowest member, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i) {
      if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
    }
    return -1;
  }

  // Next member strictly after v, or -1.
  int next(int v) const {
    ++v;
    if (v >= n_) return -1;
    size_t i = size_t(v) >> 6;
    std::uint64_t w = w_[i] >> (v & 63);
    if (w) return v + std::countr_zero(w);
    for (++i; i < w_.size(); ++i) {
      if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
    }
    return -1;
  }

  class iterator {
   public:
    iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = s_->next(v_);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* s_;
    int v_;
  };

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (int v : *this) {
      if (sep) s += ",";
      s += std::to_string(v);
      sep = true;
    }
    return s + "}";
  }

 private:
  void trim() {
    int r = n_ & 63;
    if (r != 0 && !w_.empty()) w_.back() &= ~0ull >> (64 - r);
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace ran
