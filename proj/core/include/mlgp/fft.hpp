#pragma once

#include <complex>
#include <vector>

namespace mlgp::fft {

/// Unnormalized forward DFT, X[k] = sum_j x[j] exp(-2 pi i j.k / G), on a
/// row-major d-dimensional array with extents `dims` (first axis slowest).
/// Plans are cached per (dims, direction) behind a mutex; execution is
/// thread-safe on distinct buffers.
void forward(std::vector<std::complex<double>>& data, const std::vector<int>& dims);

/// Unnormalized backward DFT, x[j] = sum_k X[k] exp(+2 pi i j.k / G).
void backward(std::vector<std::complex<double>>& data, const std::vector<int>& dims);

/// Smallest power of two >= v (used to pick FFT-friendly grid sizes).
int next_pow2(int v);

}  // namespace mlgp::fft
