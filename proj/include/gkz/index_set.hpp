#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gkz {

/// Subset of {0,...,31}, stored as a bitmask. Indices are 0-based here and
/// 1-based in every external format.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> idx) {
    for (int i : idx) insert(i);
  }
  static IndexSet from_vector(const std::vector<int>& idx) {
    IndexSet s;
    for (int i : idx) s.insert(i);
    return s;
  }
  /// {0,...,n-1}
  static constexpr IndexSet range(int n) {
    return IndexSet(n >= 32 ? 0xffffffffu : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int i) const noexcept { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(IndexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  void insert(int i) noexcept { bits_ |= 1u << i; }
  void erase(int i) noexcept { bits_ &= ~(1u << i); }
  IndexSet with(int i) const noexcept { return IndexSet(bits_ | (1u << i)); }
  IndexSet without(int i) const noexcept { return IndexSet(bits_ & ~(1u << i)); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
  /// 1-based element list for output.
  std::vector<int> one_based() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }
  std::string to_string() const;

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }

  /// Lexicographic order on sorted element lists: {1,2} < {1,2,3} < {1,3} < {2}.
  friend bool operator<(IndexSet a, IndexSet b) {
    std::uint32_t x = a.bits_, y = b.bits_;
    while (x && y) {
      const int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return !x && y;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// All k-subsets of {0,...,n-1} in lexicographic order.
std::vector<IndexSet> subsets_of_size(int n, int k);

/// All k-subsets of `base` in lexicographic order.
std::vector<IndexSet> subsets_of_size(IndexSet base, int k);

}  // namespace gkz
