#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace evfusion {

/// Subset of a frame, stored as a dynamic bit vector of `width()` bits.
///
/// Bit i is set when the frame hypothesis at index i is a member. Widths are
/// arbitrary (frames of a few hundred hypotheses are routine), so the bits
/// live in 64-bit words. Bits above `width()` in the last word are always 0,
/// which keeps equality and hashing word-wise.
class FocalSet {
 public:
  FocalSet() = default;
  explicit FocalSet(std::size_t width);
  FocalSet(std::size_t width, std::initializer_list<std::size_t> members);
  FocalSet(std::size_t width, std::span<const std::size_t> members);

  static FocalSet full(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  bool test(std::size_t index) const;
  void set(std::size_t index);
  void reset(std::size_t index);

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool is_full() const noexcept;

  bool intersects(const FocalSet& other) const;
  bool is_subset_of(const FocalSet& other) const;

  FocalSet operator&(const FocalSet& other) const;
  FocalSet operator|(const FocalSet& other) const;

  /// Member indices in increasing order.
  std::vector<std::size_t> members() const;

  /// Calls `fn(index)` for every member, lowest index first.
  template <typename Fn>
  void for_each_member(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const FocalSet& a, const FocalSet& b) noexcept {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }

 private:
  void check_index(std::size_t index) const;
  void check_width(const FocalSet& other) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Presentation order used for map keys and every serialized listing:
/// smaller sets first, then the set holding the lowest differing index.
struct CanonicalOrder {
  bool operator()(const FocalSet& a, const FocalSet& b) const;
};

}  // namespace evfusion

template <>
struct std::hash<evfusion::FocalSet> {
  std::size_t operator()(const evfusion::FocalSet& s) const noexcept { return s.hash(); }
};
