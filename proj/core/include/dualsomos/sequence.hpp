#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dualsomos/rational.hpp"

namespace dualsomos {

/// Values v_first, v_{first+1}, ... addressed by their sequence index.
template <class T>
class IndexedSequence {
 public:
  IndexedSequence() = default;
  explicit IndexedSequence(int first) : first_(first) {}
  IndexedSequence(int first, std::vector<T> values) : first_(first), values_(std::move(values)) {}

  int first() const { return first_; }
  int last() const { return first_ + static_cast<int>(values_.size()) - 1; }
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  bool contains(int n) const { return n >= first_ && n <= last(); }

  const T& at(int n) const {
    if (!contains(n)) throw std::out_of_range("sequence index " + std::to_string(n) + " out of range");
    return values_[static_cast<std::size_t>(n - first_)];
  }
  const T& operator[](int n) const { return at(n); }

  void push_back(T v) { values_.push_back(std::move(v)); }
  void push_front(T v) {
    values_.insert(values_.begin(), std::move(v));
    --first_;
  }

  const std::vector<T>& values() const { return values_; }

  friend bool operator==(const IndexedSequence&, const IndexedSequence&) = default;

 private:
  int first_ = 0;
  std::vector<T> values_;
};

using RationalSequence = IndexedSequence<Rational>;

}  // namespace dualsomos
