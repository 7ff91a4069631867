// Copyright (c) 2026 IGCRN Authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "igcrn/common.hpp"
#include "igcrn/rng.hpp"

namespace igcrn {

// Dense row-major shape, rank 1..4. Rank-4 tensors are laid out
// [batch, channel, freq, time] with time innermost.
struct Shape {
  std::array<int64_t, 4> d{1, 1, 1, 1};
  int rank = 0;

  Shape() = default;
  Shape(std::initializer_list<int64_t> dims) {
    IGCRN_CHECK(dims.size() >= 1 && dims.size() <= 4, "shape rank must be 1..4");
    rank = static_cast<int>(dims.size());
    int i = 0;
    for (int64_t v : dims) {
      IGCRN_CHECK(v > 0, "shape extents must be positive");
      d[i++] = v;
    }
  }

  int64_t operator[](int i) const { return d[i]; }
  int64_t numel() const {
    int64_t n = 1;
    for (int i = 0; i < rank; ++i) n *= d[i];
    return n;
  }
  bool operator==(const Shape& o) const {
    if (rank != o.rank) return false;
    for (int i = 0; i < rank; ++i)
      if (d[i] != o.d[i]) return false;
    return true;
  }
  bool operator!=(const Shape& o) const { return !(*this == o); }
  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < rank; ++i) s += std::to_string(d[i]) + (i + 1 < rank ? "," : "");
    return s + "]";
  }
};

template <typename T>
struct TensorData {
  Shape shape;
  std::vector<T> values;
  std::vector<T> grad;  // same size as values when requires_grad
  bool requires_grad = false;
};

// Shared-ownership handle over immutable-by-convention dense storage.
// Ops never mutate input values; gradients accumulate into `grad`.
template <typename T>
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false) {
    Tensor t;
    t.d_ = std::make_shared<TensorData<T>>();
    t.d_->shape = shape;
    t.d_->values.assign(static_cast<size_t>(shape.numel()), T(0));
    if (requires_grad) t.setRequiresGrad(true);
    return t;
  }
  static Tensor full(Shape shape, T value, bool requires_grad = false) {
    Tensor t = zeros(shape, requires_grad);
    for (auto& v : t.d_->values) v = value;
    return t;
  }
  static Tensor fromVector(Shape shape, std::vector<T> values, bool requires_grad = false) {
    IGCRN_CHECK(static_cast<int64_t>(values.size()) == shape.numel(),
                "value count does not match shape " + shape.str());
    Tensor t;
    t.d_ = std::make_shared<TensorData<T>>();
    t.d_->shape = shape;
    t.d_->values = std::move(values);
    if (requires_grad) t.setRequiresGrad(true);
    return t;
  }
  static Tensor randomUniform(Shape shape, T lo, T hi, Rng& rng, bool requires_grad = false) {
    Tensor t = zeros(shape, requires_grad);
    for (auto& v : t.d_->values) v = static_cast<T>(rng.uniform(lo, hi));
    return t;
  }
  static Tensor randomGaussian(Shape shape, Rng& rng, bool requires_grad = false) {
    Tensor t = zeros(shape, requires_grad);
    for (auto& v : t.d_->values) v = static_cast<T>(rng.gaussian());
    return t;
  }

  bool defined() const { return static_cast<bool>(d_); }
  const Shape& shape() const { return d_->shape; }
  int64_t numel() const { return d_->shape.numel(); }

  T* data() { return d_->values.data(); }
  const T* data() const { return d_->values.data(); }
  std::vector<T>& values() { return d_->values; }
  const std::vector<T>& values() const { return d_->values; }

  bool requiresGrad() const { return d_ && d_->requires_grad; }
  void setRequiresGrad(bool rg) {
    d_->requires_grad = rg;
    if (rg && d_->grad.size() != d_->values.size())
      d_->grad.assign(d_->values.size(), T(0));
    if (!rg) d_->grad.clear();
  }
  T* gradData() { return d_->grad.data(); }
  const T* gradData() const { return d_->grad.data(); }
  std::vector<T>& grad() { return d_->grad; }
  void zeroGrad() {
    for (auto& g : d_->grad) g = T(0);
  }

  // Element access for rank-4 [b,c,f,t] and rank-3 [n,t,c] tensors.
  T& at4(int64_t b, int64_t c, int64_t f, int64_t t) {
    const auto& s = d_->shape;
    return d_->values[((b * s.d[1] + c) * s.d[2] + f) * s.d[3] + t];
  }
  T at4(int64_t b, int64_t c, int64_t f, int64_t t) const {
    const auto& s = d_->shape;
    return d_->values[((b * s.d[1] + c) * s.d[2] + f) * s.d[3] + t];
  }
  T& at3(int64_t n, int64_t t, int64_t c) {
    const auto& s = d_->shape;
    return d_->values[(n * s.d[1] + t) * s.d[2] + c];
  }
  T at3(int64_t n, int64_t t, int64_t c) const {
    const auto& s = d_->shape;
    return d_->values[(n * s.d[1] + t) * s.d[2] + c];
  }
  T& at2(int64_t r, int64_t c) { return d_->values[r * d_->shape.d[1] + c]; }
  T at2(int64_t r, int64_t c) const { return d_->values[r * d_->shape.d[1] + c]; }
  T& at1(int64_t i) { return d_->values[i]; }
  T at1(int64_t i) const { return d_->values[i]; }

  bool sharesBufferWith(const Tensor& o) const {
    return d_ && o.d_ && d_->values.data() == o.d_->values.data();
  }

  Tensor clone() const {
    Tensor t;
    t.d_ = std::make_shared<TensorData<T>>();
    t.d_->shape = d_->shape;
    t.d_->values = d_->values;
    if (d_->requires_grad) t.setRequiresGrad(true);
    return t;
  }

  bool allFinite() const {
    for (T v : d_->values)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }
  void checkFinite(const char* what) const {
    if (!allFinite()) throw NumericError(std::string("non-finite values in ") + what);
  }

 private:
  std::shared_ptr<TensorData<T>> d_;
};

// Named trainable parameters plus non-trainable buffers (BN running stats),
// kept in deterministic registration order.
template <typename T>
class ParameterStore {
 public:
  Tensor<T>& add(const std::string& name, Tensor<T> t) {
    IGCRN_CHECK(!index_.count(name) && !buffer_index_.count(name),
                "duplicate parameter name: " + name);
    t.setRequiresGrad(true);
    index_[name] = params_.size();
    params_.emplace_back(name, std::move(t));
    return params_.back().second;
  }
  Tensor<T>& addBuffer(const std::string& name, Tensor<T> t) {
    IGCRN_CHECK(!index_.count(name) && !buffer_index_.count(name),
                "duplicate buffer name: " + name);
    buffer_index_[name] = buffers_.size();
    buffers_.emplace_back(name, std::move(t));
    return buffers_.back().second;
  }

  Tensor<T>& get(const std::string& name) {
    auto it = index_.find(name);
    IGCRN_CHECK(it != index_.end(), "unknown parameter: " + name);
    return params_[it->second].second;
  }
  Tensor<T>& getBuffer(const std::string& name) {
    auto it = buffer_index_.find(name);
    IGCRN_CHECK(it != buffer_index_.end(), "unknown buffer: " + name);
    return buffers_[it->second].second;
  }
  bool has(const std::string& name) const { return index_.count(name) != 0; }

  std::vector<std::pair<std::string, Tensor<T>>>& params() { return params_; }
  const std::vector<std::pair<std::string, Tensor<T>>>& params() const { return params_; }
  std::vector<std::pair<std::string, Tensor<T>>>& buffers() { return buffers_; }
  const std::vector<std::pair<std::string, Tensor<T>>>& buffers() const { return buffers_; }

  int64_t scalarCount() const {
    int64_t n = 0;
    for (const auto& [name, t] : params_) n += t.numel();
    return n;
  }
  void zeroGrad() {
    for (auto& [name, t] : params_) t.zeroGrad();
  }

 private:
  std::vector<std::pair<std::string, Tensor<T>>> params_;
  std::vector<std::pair<std::string, Tensor<T>>> buffers_;
  std::unordered_map<std::string, size_t> index_;
  std::unordered_map<std::string, size_t> buffer_index_;
};

}  // namespace igcrn
