#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace chromlie {

/// An element of the positive root lattice: a vector of non-negative
/// integers, one coordinate per simple root (graph vertex). Also used for
/// monomial exponents of truncated series.
///
/// Ordering is graded lexicographic: by height first, then coordinates.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::size_t n) : coords_(n, 0) {}
  explicit RootVector(std::vector<int> coords);
  RootVector(std::initializer_list<int> coords);

  static RootVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  long height() const;
  bool is_zero() const;
  /// gcd of the non-zero coordinates. Throws on the zero vector.
  long gcd() const;
  /// Bitmask of coordinates with non-zero entry (coordinate i -> bit i).
  std::uint64_t support_mask() const;
  /// Coordinatewise <=.
  bool fits_within(const RootVector& cap) const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  RootVector scaled(int factor) const;
  /// Exact division of every coordinate; throws if d does not divide.
  RootVector divided(long d) const;

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend std::strong_ordering operator<=>(const RootVector& a, const RootVector& b);

  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

struct RootVectorHash {
  std::size_t operator()(const RootVector& v) const noexcept;
};

/// All vectors of length n with height exactly h, in increasing order.
std::vector<RootVector> vectors_of_height(std::size_t n, int h);

}  // namespace chromlie
