#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace latspec {

using Point = std::size_t;

/// Subset of the points of a finite space, stored as a 64-bit mask.
class PointSet {
 public:
  static constexpr std::size_t kMaxPoints = 64;

  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}
  PointSet(std::initializer_list<Point> points) {
    for (Point p : points) insert(p);
  }

  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static PointSet from(const std::vector<Point>& points) {
    PointSet s;
    for (Point p : points) s.insert(p);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Point p) const { return (bits_ >> p) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr void insert(Point p) { bits_ |= std::uint64_t{1} << p; }
  constexpr void erase(Point p) { bits_ &= ~(std::uint64_t{1} << p); }

  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

  /// Complement relative to the first n points.
  constexpr PointSet complement(std::size_t n) const { return PointSet(~bits_ & full(n).bits_); }

  std::vector<Point> to_vector() const {
    std::vector<Point> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Point>(std::countr_zero(b)));
    return out;
  }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.bits_ & ~b.bits_); }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(PointSet, PointSet) = default;

  /// Canonical order: by cardinality, then by mask value.
  friend constexpr bool operator<(PointSet a, PointSet b) {
    const auto sa = a.size(), sb = b.size();
    return sa != sb ? sa < sb : a.bits_ < b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace latspec
