#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace ndiag {

// A lattice point of Z^n; doubles as a monomial exponent. Negative entries
// are only meaningful in diagram space, never inside a Polynomial.
// Ordering is lexicographic with the first coordinate most significant.
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dimension) : entries_(dimension, 0) {}
  ExponentVector(std::initializer_list<int> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {}

  static ExponentVector unit(std::size_t dimension, std::size_t axis) {
    ExponentVector e(dimension);
    e.entries_[axis] = 1;
    return e;
  }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // |alpha| = sum of entries.
  int total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

  bool is_nonnegative() const {
    for (int v : entries_)
      if (v < 0) return false;
    return true;
  }

  // Copy with entry `axis` shifted by `delta`.
  ExponentVector shifted(std::size_t axis, int delta) const {
    ExponentVector r = *this;
    r.entries_[axis] += delta;
    return r;
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ <=> b.entries_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[i]);
    }
    return s + ")";
  }

private:
  std::vector<int> entries_;
};

}  // namespace ndiag
