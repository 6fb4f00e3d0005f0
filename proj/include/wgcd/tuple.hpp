#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wgcd/kernel.hpp"

namespace wgcd {

using Weight = std::uint32_t;

/// Positive integer weights q_0..q_n.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Weight> q) : q_(std::move(q)) {
    if (q_.empty()) throw InvalidInput("weights: need at least one weight");
    for (Weight w : q_) {
      if (w < 1) throw InvalidInput("weights: every weight must be >= 1");
    }
  }
  WeightVector(std::initializer_list<Weight> q) : WeightVector(std::vector<Weight>(q)) {}

  [[nodiscard]] std::size_t size() const { return q_.size(); }
  [[nodiscard]] Weight operator[](std::size_t i) const { return q_[i]; }
  [[nodiscard]] auto begin() const { return q_.begin(); }
  [[nodiscard]] auto end() const { return q_.end(); }
  [[nodiscard]] const std::vector<Weight>& values() const { return q_; }

  /// r = gcd(q_0, ..., q_n).
  [[nodiscard]] Weight gcd() const {
    Weight r = 0;
    for (Weight w : q_) r = std::gcd(r, w);
    return r;
  }

  /// m = lcm(q_0, ..., q_n); throws if it does not fit in 64 bits.
  [[nodiscard]] std::uint64_t lcm() const {
    std::uint64_t m = 1;
    for (Weight w : q_) {
      const std::uint64_t step = w / std::gcd(m, std::uint64_t{w});
      if (m > UINT64_MAX / step) throw InvalidInput("weights: lcm overflows 64 bits");
      m *= step;
    }
    return m;
  }

  [[nodiscard]] bool is_nondecreasing() const { return std::is_sorted(q_.begin(), q_.end()); }
  [[nodiscard]] bool all_equal() const {
    return std::adjacent_find(q_.begin(), q_.end(), std::not_equal_to<>{}) == q_.end();
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Weight> q_;
};

/// Integers x_0..x_n paired with weights; lengths match and not all x_i are 0.
class WeightedTuple {
 public:
  WeightedTuple(std::vector<Integer> values, WeightVector weights)
      : values_(std::move(values)), weights_(std::move(weights)) {
    if (values_.size() != weights_.size()) {
      throw InvalidInput("tuple: " + std::to_string(values_.size()) + " values but " +
                         std::to_string(weights_.size()) + " weights");
    }
    if (values_.empty()) throw InvalidInput("tuple: empty");
    if (std::all_of(values_.begin(), values_.end(), [](const Integer& x) { return sgn(x) == 0; })) {
      throw InvalidInput("tuple: all coordinates are zero");
    }
  }

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const std::vector<Integer>& values() const { return values_; }
  [[nodiscard]] const WeightVector& weights() const { return weights_; }
  [[nodiscard]] const Integer& value(std::size_t i) const { return values_[i]; }
  [[nodiscard]] Weight weight(std::size_t i) const { return weights_[i]; }

  friend bool operator==(const WeightedTuple&, const WeightedTuple&) = default;

 private:
  std::vector<Integer> values_;
  WeightVector weights_;
};

namespace detail {

template <class Range, class Fn>
std::string join(const Range& items, std::string_view sep, Fn&& fmt) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    out += fmt(item);
    first = false;
  }
  return out;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

[[nodiscard]] inline std::string join_values(std::span<const Integer> xs, std::string_view sep = ",") {
  return detail::join(xs, sep, [](const Integer& x) { return to_decimal(x); });
}

[[nodiscard]] inline std::string join_weights(const WeightVector& w, std::string_view sep = ",") {
  return detail::join(w, sep, [](Weight q) { return std::to_string(q); });
}

/// "weights=(2,3) values=(5760,13824)"
[[nodiscard]] inline std::string to_string(const WeightedTuple& t) {
  return "weights=(" + join_weights(t.weights()) + ") values=(" + join_values(t.values()) + ")";
}

/// Parses "2,2,3". Weights must be decimal integers in [1, 2^32).
[[nodiscard]] inline WeightVector parse_weights(std::string_view csv) {
  std::vector<Weight> q;
  for (std::string_view part : detail::split(csv, ',')) {
    if (part.empty() || part.size() > 10 || !std::all_of(part.begin(), part.end(), [](char c) {
          return c >= '0' && c <= '9';
        })) {
      throw InvalidInput("weights: not a positive integer: '" + std::string(part) + "'");
    }
    const std::uint64_t v = std::stoull(std::string(part));
    if (v < 1 || v > UINT32_MAX) throw InvalidInput("weights: out of range: '" + std::string(part) + "'");
    q.push_back(static_cast<Weight>(v));
  }
  return WeightVector(std::move(q));
}

/// Parses "70352,-5760,13824".
[[nodiscard]] inline std::vector<Integer> parse_values(std::string_view csv) {
  std::vector<Integer> xs;
  for (std::string_view part : detail::split(csv, ',')) xs.push_back(parse_integer(part));
  return xs;
}

/// lambda * x = (lambda^q_0 x_0, ..., lambda^q_n x_n).
[[nodiscard]] inline WeightedTuple scale(const WeightedTuple& t, const Nat& lambda) {
  if (lambda < 1) throw InvalidInput("scale: lambda must be positive");
  std::vector<Integer> xs;
  xs.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) xs.push_back(ipow(lambda, t.weight(i)) * t.value(i));
  return WeightedTuple(std::move(xs), t.weights());
}

}  // namespace wgcd
