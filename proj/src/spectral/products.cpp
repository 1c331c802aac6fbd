#include <array>

#include "fft.hpp"
#include "msm/spectral.hpp"

namespace msm {
namespace {

struct Slot {
  std::size_t fine;
  double weight;
};

// Positions of base-grid mode index k on the 2n grid. The Nyquist mode is
// split evenly between +n/2 and -n/2, which keeps real fields real.
std::array<Slot, 2> slots(std::size_t k, std::size_t n, std::size_t& count) {
  const std::size_t fine_n = 2 * n;
  if (k == n / 2) {
    count = 2;
    return {Slot{n / 2, 0.5}, Slot{fine_n - n / 2, 0.5}};
  }
  count = 1;
  return {Slot{k < n / 2 ? k : fine_n - (n - k), 1.0}, Slot{0, 0.0}};
}

}  // namespace

PaddedField PaddedField::lift(const ComplexField& f) {
  const Grid& g = f.grid();
  const std::size_t n = g.n();
  const std::size_t fine_n = 2 * n;
  std::vector<Complex> coeffs(fine_n * fine_n, 0.0);
  const auto spec = f.spectrum();
  for (std::size_t k1 = 0; k1 < n; ++k1) {
    std::size_t c1 = 0;
    const auto s1 = slots(k1, n, c1);
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      const Complex value = spec[g.index(k1, k2)];
      if (value == Complex(0.0)) continue;
      std::size_t c2 = 0;
      const auto s2 = slots(k2, n, c2);
      for (std::size_t a = 0; a < c1; ++a) {
        for (std::size_t b = 0; b < c2; ++b) {
          coeffs[s1[a].fine * fine_n + s2[b].fine] += s1[a].weight * s2[b].weight * value;
        }
      }
    }
  }
  std::vector<Complex> samples(coeffs.size());
  detail::dft2d(fine_n, +1, coeffs.data(), samples.data());
  return PaddedField(g, std::move(samples));
}

PaddedField operator*(const PaddedField& a, const PaddedField& b) {
  require_same_grid(a.base_, b.base_);
  std::vector<Complex> out(a.samples_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.samples_[i] * b.samples_[i];
  return PaddedField(a.base_, std::move(out));
}

PaddedField operator+(const PaddedField& a, const PaddedField& b) {
  require_same_grid(a.base_, b.base_);
  std::vector<Complex> out(a.samples_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.samples_[i] + b.samples_[i];
  return PaddedField(a.base_, std::move(out));
}

PaddedField operator-(const PaddedField& a, const PaddedField& b) {
  require_same_grid(a.base_, b.base_);
  std::vector<Complex> out(a.samples_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.samples_[i] - b.samples_[i];
  return PaddedField(a.base_, std::move(out));
}

PaddedField operator*(Complex c, const PaddedField& a) {
  std::vector<Complex> out(a.samples_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * a.samples_[i];
  return PaddedField(a.base_, std::move(out));
}

PaddedField PaddedField::conj() const {
  std::vector<Complex> out(samples_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::conj(samples_[i]);
  return PaddedField(base_, std::move(out));
}

PaddedField PaddedField::real_part() const {
  std::vector<Complex> out(samples_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = samples_[i].real();
  return PaddedField(base_, std::move(out));
}

PaddedField PaddedField::imag_part() const {
  std::vector<Complex> out(samples_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = samples_[i].imag();
  return PaddedField(base_, std::move(out));
}

ComplexField PaddedField::project() const {
  const std::size_t n = base_.n();
  const std::size_t fine_n = 2 * n;
  std::vector<Complex> coeffs(samples_.size());
  detail::dft2d(fine_n, -1, samples_.data(), coeffs.data());
  const double scale = 1.0 / static_cast<double>(fine_n * fine_n);
  std::vector<Complex> spectrum(base_.size(), 0.0);
  for (std::size_t k1 = 0; k1 < n; ++k1) {
    if (k1 == n / 2) continue;
    const std::size_t f1 = k1 < n / 2 ? k1 : fine_n - (n - k1);
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      if (k2 == n / 2) continue;
      const std::size_t f2 = k2 < n / 2 ? k2 : fine_n - (n - k2);
      spectrum[base_.index(k1, k2)] = scale * coeffs[f1 * fine_n + f2];
    }
  }
  return ComplexField::from_spectrum(base_, std::move(spectrum));
}

ComplexField pointwise_product(const ComplexField& f, const ComplexField& g) {
  require_same_grid(f.grid(), g.grid());
  return (PaddedField::lift(f) * PaddedField::lift(g)).project();
}

}  // namespace msm
