#pragma once

#include <complex>
#include <cstddef>

namespace msm::detail {

// Unnormalized 2-D DFT of an n x n row-major array. sign = -1 is the forward
// direction. Plans are cached per (n, sign) and executed on caller buffers,
// so concurrent calls are safe.
void dft2d(std::size_t n, int sign, const std::complex<double>* in, std::complex<double>* out);

}  // namespace msm::detail
