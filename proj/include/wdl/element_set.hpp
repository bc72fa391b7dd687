#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace wdl {

/// Index of an element inside a carrier. Names are only kept for I/O.
using Elem = unsigned;

/// Hard limit imposed by the bitmask representation of subsets.
inline constexpr std::size_t kMaxCarrier = 64;

/// A subset of a carrier {0, ..., universe-1}, stored as a bitmask.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe, std::uint64_t bits = 0)
      : universe_(universe), bits_(bits & full_mask(universe)) {}

  static ElementSet full(std::size_t universe) {
    return ElementSet(universe, full_mask(universe));
  }
  static ElementSet of(std::size_t universe, std::initializer_list<Elem> elems) {
    ElementSet s(universe);
    for (Elem e : elems) s.insert(e);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(Elem e) const noexcept { return (bits_ >> e) & 1U; }
  void insert(Elem e) noexcept { bits_ |= std::uint64_t{1} << e; }
  void erase(Elem e) noexcept { bits_ &= ~(std::uint64_t{1} << e); }

  std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(universe_); }

  bool subset_of(const ElementSet& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  bool strict_subset_of(const ElementSet& other) const noexcept {
    return subset_of(other) && bits_ != other.bits_;
  }

  ElementSet operator|(const ElementSet& o) const { return ElementSet(universe_, bits_ | o.bits_); }
  ElementSet operator&(const ElementSet& o) const { return ElementSet(universe_, bits_ & o.bits_); }
  ElementSet minus(const ElementSet& o) const { return ElementSet(universe_, bits_ & ~o.bits_); }

  /// Members in increasing index order.
  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Elem>(std::countr_zero(b)));
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<Elem>(std::countr_zero(b)));
    }
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Order used for every deterministic listing: by size, then by bitmask.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits_ < b.bits_;
  }

  static std::uint64_t full_mask(std::size_t universe) noexcept {
    return universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
  }

 private:
  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace wdl
