#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ellarr {

/// A subset of the ground set {0, ..., k-1}, stored as a bitmask.
/// Bit i stands for divisor i+1; printing uses 1-based indices.
class Subset {
 public:
  static constexpr std::size_t max_width = 32;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
  /// From 0-based element indices.
  Subset(std::initializer_list<std::size_t> elems) {
    for (std::size_t e : elems) bits_ |= std::uint32_t{1} << e;
  }

  static constexpr Subset full(std::size_t k) {
    return Subset(k >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1);
  }
  static constexpr Subset singleton(std::size_t i) { return Subset(std::uint32_t{1} << i); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr std::size_t index() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool within(std::size_t k) const { return (bits_ & ~full(k).bits_) == 0; }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr Subset with(std::size_t i) const { return Subset(bits_ | (std::uint32_t{1} << i)); }
  constexpr Subset without(std::size_t i) const { return Subset(bits_ & ~(std::uint32_t{1} << i)); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  /// "{1,3}" with 1-based indices; "{}" for the empty set.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t e : elements()) {
      if (!first) s += ',';
      s += std::to_string(e + 1);
      first = false;
    }
    return s + "}";
  }

  constexpr auto operator<=>(const Subset&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Calls f(x) for every x subset of y (including the empty set and y).
template <typename F>
void for_each_subset_of(Subset y, F&& f) {
  std::uint32_t sub = y.bits();
  for (;;) {
    f(Subset(sub));
    if (sub == 0) break;
    sub = (sub - 1) & y.bits();
  }
}

}  // namespace ellarr
