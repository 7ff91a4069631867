// Copyright (c) 2026 IGCRN Authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>

namespace igcrn::kernels {

// Two interchangeable kernel backends: `omp` is the production path,
// `serial` is a plain-loop reference kept for parity testing and as the
// baseline of the bench_kernels comparison. Both use a fixed per-output
// reduction order, so the omp backend is bit-reproducible for any thread
// count; serial-vs-omp agreement is checked to tolerance in the tests
// (the serial formulations intentionally accumulate in a different order).
enum class Backend { serial, omp };

Backend active_backend();
void set_active_backend(Backend b);

struct ConvGeom {
  int64_t batch = 1;
  int64_t in_ch = 1, out_ch = 1;
  int64_t in_f = 1, in_t = 1;
  int64_t out_f = 1, out_t = 1;
  int64_t kf = 1, kt = 1;
  int64_t sf = 1, st = 1;
  int64_t pf = 0, pt = 0;
  int64_t opf = 0, opt = 0;  // transpose-conv output padding
};

enum class Unary { sigmoid, elu, tanh_fn, relu, cube_root };
enum class Binary { add, mul };

// All backward kernels accumulate (+=) into the gradient buffers.

template <typename T>
struct Kernels {
  // conv weight layout [out_ch, in_ch, kf, kt]
  static void conv2d_forward(const ConvGeom& g, const T* x, const T* w, const T* bias, T* y);
  static void conv2d_backward_input(const ConvGeom& g, const T* w, const T* gy, T* gx);
  static void conv2d_backward_weight(const ConvGeom& g, const T* x, const T* gy, T* gw);
  static void conv2d_backward_bias(const ConvGeom& g, const T* gy, T* gb);

  // transpose-conv weight layout [in_ch, out_ch, kf, kt]
  static void tconv2d_forward(const ConvGeom& g, const T* x, const T* w, const T* bias, T* y);
  static void tconv2d_backward_input(const ConvGeom& g, const T* w, const T* gy, T* gx);
  static void tconv2d_backward_weight(const ConvGeom& g, const T* x, const T* gy, T* gw);
  static void tconv2d_backward_bias(const ConvGeom& g, const T* gy, T* gb);

  // C[m,n] (+)= sum_k opA(A)[m,k] * opB(B)[k,n]
  static void matmul(int64_t m, int64_t n, int64_t k, const T* a, int64_t lda, bool trans_a,
                     const T* b, int64_t ldb, bool trans_b, T* c, int64_t ldc, bool accumulate);

  static void unary_forward(Unary op, int64_t n, const T* x, T* y);
  static void unary_backward(Unary op, int64_t n, const T* x, const T* y, const T* gy, T* gx);
  static void binary_forward(Binary op, int64_t n, const T* a, const T* b, T* y);
  // add: ga += gy, gb += gy; mul: ga += gy*b, gb += gy*a (null grad pointers skipped)
  static void binary_backward(Binary op, int64_t n, const T* a, const T* b, const T* gy,
                              T* ga, T* gb);

  // per-channel statistics over batch x freq x time of a [B,C,F,T] tensor
  static void bn_stats(int64_t batch, int64_t ch, int64_t plane, const T* x, T* mean, T* var);
  static void bn_forward(int64_t batch, int64_t ch, int64_t plane, const T* x, const T* mean,
                         const T* invstd, const T* gamma, const T* beta, T* y);
  // train-mode backward through batch statistics
  static void bn_backward(int64_t batch, int64_t ch, int64_t plane, const T* x, const T* mean,
                          const T* invstd, const T* gamma, const T* gy, T* gx, T* ggamma,
                          T* gbeta, bool stats_grad);

  // gates laid out [n, 4H] in i,f,g,o order; applies nonlinearities in place
  static void lstm_cell_forward(int64_t n, int64_t hidden, T* gates, const T* c_prev, T* c,
                                T* h);
  // `gates` holds activated gate values from the forward recomputation;
  // overwritten with pre-activation gradients. dc is carried between steps.
  static void lstm_cell_backward(int64_t n, int64_t hidden, T* gates, const T* c_prev,
                                 const T* c, const T* dh, T* dc, T* dc_prev);

  // rowwise partial sums of (a-b)^2, combined serially by the caller
  static void sq_diff_rows(int64_t rows, int64_t row_len, const T* a, const T* b, T* partial);
};

extern template struct Kernels<float>;
extern template struct Kernels<double>;

namespace serial {
template <typename T>
struct Ref {
  static void conv2d_forward(const ConvGeom& g, const T* x, const T* w, const T* bias, T* y);
  static void conv2d_backward_input(const ConvGeom& g, const T* w, const T* gy, T* gx);
  static void conv2d_backward_weight(const ConvGeom& g, const T* x, const T* gy, T* gw);
  static void conv2d_backward_bias(const ConvGeom& g, const T* gy, T* gb);
  static void tconv2d_forward(const ConvGeom& g, const T* x, const T* w, const T* bias, T* y);
  static void tconv2d_backward_input(const ConvGeom& g, const T* w, const T* gy, T* gx);
  static void tconv2d_backward_weight(const ConvGeom& g, const T* x, const T* gy, T* gw);
  static void tconv2d_backward_bias(const ConvGeom& g, const T* gy, T* gb);
  static void matmul(int64_t m, int64_t n, int64_t k, const T* a, int64_t lda, bool trans_a,
                     const T* b, int64_t ldb, bool trans_b, T* c, int64_t ldc, bool accumulate);
  static void unary_forward(Unary op, int64_t n, const T* x, T* y);
  static void unary_backward(Unary op, int64_t n, const T* x, const T* y, const T* gy, T* gx);
  static void binary_forward(Binary op, int64_t n, const T* a, const T* b, T* y);
  static void binary_backward(Binary op, int64_t n, const T* a, const T* b, const T* gy, T* ga,
                              T* gb);
  static void bn_stats(int64_t batch, int64_t ch, int64_t plane, const T* x, T* mean, T* var);
  static void bn_forward(int64_t batch, int64_t ch, int64_t plane, const T* x, const T* mean,
                         const T* invstd, const T* gamma, const T* beta, T* y);
  static void bn_backward(int64_t batch, int64_t ch, int64_t plane, const T* x, const T* mean,
                          const T* invstd, const T* gamma, const T* gy, T* gx, T* ggamma,
                          T* gbeta, bool stats_grad);
  static void lstm_cell_forward(int64_t n, int64_t hidden, T* gates, const T* c_prev, T* c,
                                T* h);
  static void lstm_cell_backward(int64_t n, int64_t hidden, T* gates, const T* c_prev,
                                 const T* c, const T* dh, T* dc, T* dc_prev);
  static void sq_diff_rows(int64_t rows, int64_t row_len, const T* a, const T* b, T* partial);
};
extern template struct Ref<float>;
extern template struct Ref<double>;
}  // namespace serial

namespace omp {
template <typename T>
struct Par {
  static void conv2d_forward(const ConvGeom& g, const T* x, const T* w, const T* bias, T* y);
  static void conv2d_backward_input(const ConvGeom& g, const T* w, const T* gy, T* gx);
  static void conv2d_backward_weight(const ConvGeom& g, const T* x, const T* gy, T* gw);
  static void conv2d_backward_bias(const ConvGeom& g, const T* gy, T* gb);
  static void tconv2d_forward(const ConvGeom& g, const T* x, const T* w, const T* bias, T* y);
  static void tconv2d_backward_input(const ConvGeom& g, const T* w, const T* gy, T* gx);
  static void tconv2d_backward_weight(const ConvGeom& g, const T* x, const T* gy, T* gw);
  static void tconv2d_backward_bias(const ConvGeom& g, const T* gy, T* gb);
  static void matmul(int64_t m, int64_t n, int64_t k, const T* a, int64_t lda, bool trans_a,
                     const T* b, int64_t ldb, bool trans_b, T* c, int64_t ldc, bool accumulate);
  static void unary_forward(Unary op, int64_t n, const T* x, T* y);
  static void unary_backward(Unary op, int64_t n, const T* x, const T* y, const T* gy, T* gx);
  static void binary_forward(Binary op, int64_t n, const T* a, const T* b, T* y);
  static void binary_backward(Binary op, int64_t n, const T* a, const T* b, const T* gy, T* ga,
                              T* gb);
  static void bn_stats(int64_t batch, int64_t ch, int64_t plane, const T* x, T* mean, T* var);
  static void bn_forward(int64_t batch, int64_t ch, int64_t plane, const T* x, const T* mean,
                         const T* invstd, const T* gamma, const T* beta, T* y);
  static void bn_backward(int64_t batch, int64_t ch, int64_t plane, const T* x, const T* mean,
                          const T* invstd, const T* gamma, const T* gy, T* gx, T* ggamma,
                          T* gbeta, bool stats_grad);
  static void lstm_cell_forward(int64_t n, int64_t hidden, T* gates, const T* c_prev, T* c,
                                T* h);
  static void lstm_cell_backward(int64_t n, int64_t hidden, T* gates, const T* c_prev,
                                 const T* c, const T* dh, T* dc, T* dc_prev);
  static void sq_diff_rows(int64_t rows, int64_t row_len, const T* a, const T* b, T* partial);
};
extern template struct Par<float>;
extern template struct Par<double>;
}  // namespace omp

// Shared scalar definitions so both backends agree pointwise.
template <typename T>
inline T unary_eval(Unary op, T x) {
  switch (op) {
    case Unary::sigmoid: return T(1) / (T(1) + std::exp(-x));
    case Unary::elu: return x > T(0) ? x : std::expm1(x);
    case Unary::tanh_fn: return std::tanh(x);
    case Unary::relu: return x > T(0) ? x : T(0);
    case Unary::cube_root: return std::cbrt(x);
  }
  return T(0);
}

// Derivative in terms of input x and output y. cube_root uses a hard zero at
// the origin where the true derivative diverges.
template <typename T>
inline T unary_grad(Unary op, T x, T y) {
  switch (op) {
    case Unary::sigmoid: return y * (T(1) - y);
    case Unary::elu: return x > T(0) ? T(1) : y + T(1);
    case Unary::tanh_fn: return T(1) - y * y;
    case Unary::relu: return x > T(0) ? T(1) : T(0);
    case Unary::cube_root: {
      T ax = std::abs(x);
      if (ax < T(1e-30)) return T(0);
      return T(1) / (T(3) * std::cbrt(ax) * std::cbrt(ax));
    }
  }
  return T(0);
}

}  // namespace igcrn::kernels

#include <cmath>
