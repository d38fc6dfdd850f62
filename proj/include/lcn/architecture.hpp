#pragma once

// 1D linear convolutional network architectures: validation, reduction,
// filter composition, convolutional matrices and neuromanifold sampling.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lcn/error.hpp"
#include "lcn/polyring.hpp"

namespace lcn {

struct Architecture {
  std::vector<int> filter_sizes;
  std::vector<int> strides;

  std::size_t layers() const { return filter_sizes.size(); }
  bool operator==(const Architecture&) const = default;
};

struct ArchitectureInfo {
  Architecture arch;             // with the final stride stored as 1
  std::size_t layers = 0;
  int output_size = 0;           // end-to-end filter size k
  std::vector<long> cumulative;  // S_l = s_1 * ... * s_{l-1}; S_1 = 1
  long total_stride = 1;
  bool reduced = false;
};

// Throws InvalidArgument on empty, mismatched or non-positive entries.
ArchitectureInfo validate(const Architecture& arch);

int output_filter_size(const Architecture& arch);
int expected_dimension(const Architecture& arch);  // sum k_l - (L - 1)

// Merges neighbouring layers until the result is reduced or has one layer.
// A stride-1 layer i absorbs layer i+1; a size-1 layer i >= 2 is absorbed by
// layer i-1. A leading size-1 layer absorbs layer 2 with the general rule
// k = k_1 + s_1 (k_2 - 1), which over-approximates when s_1 > 1.
Architecture reduce_arch(const Architecture& arch);

// "3,2,2" -> {3,2,2}
std::vector<int> parse_int_list(const std::string& text);
std::string to_string(const Architecture& arch);

// sum_j w[j] x^{s(k-1-j)} y^{sj} in variables x, y
MultiPoly pi_s(std::span<const Integer> w, int s);
// Symbolic filter entries; the result ring is the entries' ring plus x, y.
MultiPoly pi_s(std::span<const MultiPoly> w, int s);

// Polynomial product of the factor π_{S_l}(w_l) into an accumulated filter.
// Coefficient j of a filter multiplies x^{k-1-j} y^j.
template <class T>
std::vector<T> upsampled_product(std::span<const T> acc, std::span<const T> layer, long stride) {
  if (acc.empty() || layer.empty()) throw InvalidArgument("empty filter");
  std::vector<T> out(acc.size() + (layer.size() - 1) * static_cast<std::size_t>(stride), T(0));
  for (std::size_t j = 0; j < acc.size(); ++j)
    for (std::size_t t = 0; t < layer.size(); ++t)
      out[j + t * static_cast<std::size_t>(stride)] += acc[j] * layer[t];
  return out;
}

template <class T>
std::vector<T> compose_filters(const Architecture& arch, std::span<const std::vector<T>> layers) {
  const auto info = validate(arch);
  if (layers.size() != info.layers) throw InvalidArgument("wrong number of layer filters");
  for (std::size_t l = 0; l < layers.size(); ++l)
    if (layers[l].size() != static_cast<std::size_t>(info.arch.filter_sizes[l]))
      throw InvalidArgument("layer " + std::to_string(l + 1) + " filter has wrong length");
  std::vector<T> acc = layers[0];
  for (std::size_t l = 1; l < layers.size(); ++l)
    acc = upsampled_product<T>(acc, layers[l], info.cumulative[l]);
  return acc;
}

// Dense convolutional matrix: entry (i, j) = w[j - i s] when 0 <= j - i s < k.
template <class T>
struct ConvMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;  // row-major

  const T& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

template <class T>
ConvMatrix<T> conv_matrix(std::span<const T> w, int stride, std::size_t d_out) {
  if (w.empty() || stride < 1 || d_out < 1) throw InvalidArgument("bad convolution shape");
  ConvMatrix<T> m;
  m.rows = d_out;
  m.cols = w.size() + (d_out - 1) * static_cast<std::size_t>(stride);
  m.data.assign(m.rows * m.cols, T(0));
  for (std::size_t i = 0; i < d_out; ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      m.data[i * m.cols + i * static_cast<std::size_t>(stride) + j] = w[j];
  return m;
}

template <class T>
ConvMatrix<T> matmul(const ConvMatrix<T>& a, const ConvMatrix<T>& b) {
  if (a.cols != b.rows) throw InvalidArgument("matrix product dimension mismatch");
  ConvMatrix<T> r{a.rows, b.cols, std::vector<T>(a.rows * b.cols, T(0))};
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t t = 0; t < a.cols; ++t) {
      if (a.at(i, t) == T(0)) continue;
      for (std::size_t j = 0; j < b.cols; ++j) r.data[i * b.cols + j] += a.at(i, t) * b.at(t, j);
    }
  return r;
}

// Per-layer dimensions d_0, ..., d_L for a given output dimension d_L.
std::vector<std::size_t> layer_dimensions(const Architecture& arch, std::size_t d_out);

struct NeuromanifoldSample {
  std::vector<std::vector<Rational>> layers;
  std::vector<Rational> filter;
};

// Layer entries p/q with p uniform in [-10, 10], q uniform in [1, 10].
NeuromanifoldSample sample_neuromanifold(const Architecture& arch, std::uint64_t seed);
Rational random_rational(std::mt19937_64& rng);

struct NumericSample {
  std::vector<std::vector<double>> layers;
  std::vector<double> filter;
};

// Standard normal layer entries.
NumericSample sample_neuromanifold_numeric(const Architecture& arch, std::uint64_t seed);

}  // namespace lcn
