#include "evfusion/focal_set.hpp"

#include <bit>
#include <string>

#include "evfusion/errors.hpp"

namespace evfusion {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t width) { return (width + kWordBits - 1) / kWordBits; }

}  // namespace

FocalSet::FocalSet(std::size_t width) : width_(width), words_(word_count(width), 0) {}

FocalSet::FocalSet(std::size_t width, std::initializer_list<std::size_t> members)
    : FocalSet(width, std::span<const std::size_t>(members.begin(), members.size())) {}

FocalSet::FocalSet(std::size_t width, std::span<const std::size_t> members) : FocalSet(width) {
  for (const std::size_t i : members) set(i);
}

FocalSet FocalSet::full(std::size_t width) {
  FocalSet s(width);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = width % kWordBits; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

void FocalSet::check_index(std::size_t index) const {
  if (index >= width_) {
    throw InvalidArgument("focal set index " + std::to_string(index) + " out of range for width " +
                          std::to_string(width_));
  }
}

void FocalSet::check_width(const FocalSet& other) const {
  if (width_ != other.width_) {
    throw FrameMismatch("focal sets of width " + std::to_string(width_) + " and " +
                        std::to_string(other.width_));
  }
}

bool FocalSet::test(std::size_t index) const {
  check_index(index);
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
}

void FocalSet::set(std::size_t index) {
  check_index(index);
  words_[index / kWordBits] |= std::uint64_t{1} << (index % kWordBits);
}

void FocalSet::reset(std::size_t index) {
  check_index(index);
  words_[index / kWordBits] &= ~(std::uint64_t{1} << (index % kWordBits));
}

std::size_t FocalSet::count() const noexcept {
  std::size_t n = 0;
  for (const auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool FocalSet::none() const noexcept {
  for (const auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool FocalSet::is_full() const noexcept { return count() == width_; }

bool FocalSet::intersects(const FocalSet& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool FocalSet::is_subset_of(const FocalSet& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

FocalSet FocalSet::operator&(const FocalSet& other) const {
  check_width(other);
  FocalSet r(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

FocalSet FocalSet::operator|(const FocalSet& other) const {
  check_width(other);
  FocalSet r(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
  return r;
}

std::vector<std::size_t> FocalSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each_member([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t FocalSet::hash() const noexcept {
  // FNV-1a over the words, seeded with the width.
  std::uint64_t h = 1469598103934665603ULL ^ width_;
  for (const auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool CanonicalOrder::operator()(const FocalSet& a, const FocalSet& b) const {
  if (a.width() != b.width()) return a.width() < b.width();
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  // Same cardinality: the set owning the lowest index where they differ wins.
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    if (const std::uint64_t diff = wa[i] ^ wb[i]; diff != 0) {
      return (wa[i] >> std::countr_zero(diff)) & 1U;
    }
  }
  return false;
}

}  // namespace evfusion
