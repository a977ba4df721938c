#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "sct/errors.hpp"
#include "sct/rng.hpp"

namespace sct {

// Dense rank-4 activation/parameter array, shape (batch, channels,
// height, width), w-fastest layout. Parameter tensors reuse the same
// container with shape (out_ch, in_ch, kh, kw); vectors use (n,1,1,1).
template <typename T>
class Tensor {
 public:
  Tensor() = default;
  Tensor(int b, int c, int h, int w, T fill = T(0))
      : b_(b), c_(c), h_(h), w_(w),
        v_(static_cast<std::size_t>(b) * c * h * w, fill) {}

  int b() const { return b_; }
  int c() const { return c_; }
  int h() const { return h_; }
  int w() const { return w_; }
  std::array<int, 4> shape() const { return {b_, c_, h_, w_}; }
  std::size_t size() const { return v_.size(); }
  bool same_shape(const Tensor& o) const {
    return b_ == o.b_ && c_ == o.c_ && h_ == o.h_ && w_ == o.w_;
  }

  T* data() { return v_.data(); }
  const T* data() const { return v_.data(); }
  T* plane(int b, int c) { return v_.data() + (static_cast<std::size_t>(b) * c_ + c) * h_ * w_; }
  const T* plane(int b, int c) const {
    return v_.data() + (static_cast<std::size_t>(b) * c_ + c) * h_ * w_;
  }

  T& at(int b, int c, int y, int x) {
    return v_[((static_cast<std::size_t>(b) * c_ + c) * h_ + y) * w_ + x];
  }
  T at(int b, int c, int y, int x) const {
    return v_[((static_cast<std::size_t>(b) * c_ + c) * h_ + y) * w_ + x];
  }
  T& operator[](std::size_t i) { return v_[i]; }
  T operator[](std::size_t i) const { return v_[i]; }

  void fill(T v) { std::fill(v_.begin(), v_.end(), v); }
  void zero() { fill(T(0)); }

  void fill_normal(Rng& rng, T mean, T stddev) {
    for (auto& x : v_) x = static_cast<T>(rng.normal(mean, stddev));
  }
  void fill_uniform(Rng& rng, T lo, T hi) {
    for (auto& x : v_) x = static_cast<T>(rng.uniform(lo, hi));
  }

  bool all_finite() const {
    for (const auto& x : v_)
      if (!std::isfinite(static_cast<double>(x))) return false;
    return true;
  }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out(b_, c_, h_, w_);
    for (std::size_t i = 0; i < v_.size(); ++i) out[i] = static_cast<U>(v_[i]);
    return out;
  }

  std::string shape_str() const {
    return "(" + std::to_string(b_) + "," + std::to_string(c_) + "," +
           std::to_string(h_) + "," + std::to_string(w_) + ")";
  }

 private:
  int b_ = 0, c_ = 0, h_ = 0, w_ = 0;
  std::vector<T> v_;
};

using TensorF = Tensor<float>;
using TensorD = Tensor<double>;

}  // namespace sct
