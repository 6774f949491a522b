#include "evfusion/frame.hpp"

#include <unordered_map>

#include "evfusion/errors.hpp"

namespace evfusion {

struct Frame::Data {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
};

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty()) throw InvalidArgument("frame needs at least one label");
  auto data = std::make_shared<Data>();
  data->index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) {
      throw InvalidArgument("empty frame label at position " + std::to_string(i));
    }
    if (!data->index.emplace(labels[i], i).second) {
      throw InvalidArgument("duplicate frame label '" + labels[i] + "'");
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

std::size_t Frame::size() const noexcept { return data_->labels.size(); }

const std::string& Frame::label(std::size_t index) const { return data_->labels.at(index); }

std::span<const std::string> Frame::labels() const noexcept { return data_->labels; }

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
  const auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

FocalSet Frame::subset(std::span<const std::string> labels) const {
  FocalSet s(size());
  for (const auto& l : labels) {
    const auto i = index_of(l);
    if (!i) throw InvalidArgument("label '" + l + "' is not in the frame");
    s.set(*i);
  }
  return s;
}

FocalSet Frame::subset(std::initializer_list<std::string_view> labels) const {
  std::vector<std::string> owned(labels.begin(), labels.end());
  return subset(owned);
}

FocalSet Frame::singleton(std::size_t index) const { return FocalSet(size(), {index}); }

FocalSet Frame::empty_set() const { return FocalSet(size()); }

FocalSet Frame::full() const { return FocalSet::full(size()); }

std::string Frame::format(const FocalSet& s) const {
  if (s.none()) return "{}";
  std::string out;
  s.for_each_member([&](std::size_t i) {
    if (!out.empty()) out += '|';
    out += label(i);
  });
  return out;
}

bool operator==(const Frame& a, const Frame& b) noexcept {
  return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
}

Frame make_frame(std::vector<std::string> labels) { return Frame(std::move(labels)); }

}  // namespace evfusion
