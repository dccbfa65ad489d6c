#pragma once

#include <vector>

#include "framelab/types.hpp"

namespace framelab {

// Unnormalized DFT: out[k] = sum_j in[j] exp(sign * 2 pi i j k / N), sign = +1 or -1.
cvec dft(const cvec& in, int sign);

// Row-major n-D DFT with the same sign convention.
cvec dftn(const cvec& in, const std::vector<int>& dims, int sign);

// Integer frequency index of DFT bin k for length n (k for k < n/2, k - n above; n/2 maps to -n/2).
inline int dft_index(int k, int n) { return (2 * k < n) ? k : k - n; }

}  // namespace framelab
