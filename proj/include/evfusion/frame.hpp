#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evfusion/focal_set.hpp"

namespace evfusion {

/// Frame of discernment: an ordered list of exclusive, exhaustive hypotheses.
///
/// Frames are immutable and cheap to copy; copies share the label table.
/// Index i always names the same label for the lifetime of the frame.
class Frame {
 public:
  /// Throws InvalidArgument naming the label when one is empty or repeated,
  /// or when `labels` is empty.
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const noexcept;
  const std::string& label(std::size_t index) const;
  std::span<const std::string> labels() const noexcept;
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Subset named by labels. Throws InvalidArgument on an unknown label.
  FocalSet subset(std::span<const std::string> labels) const;
  FocalSet subset(std::initializer_list<std::string_view> labels) const;
  FocalSet singleton(std::size_t index) const;
  FocalSet empty_set() const;
  FocalSet full() const;

  /// Labels of `s` joined with '|', "{}" for the empty set.
  std::string format(const FocalSet& s) const;

  friend bool operator==(const Frame& a, const Frame& b) noexcept;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

Frame make_frame(std::vector<std::string> labels);

}  // namespace evfusion
