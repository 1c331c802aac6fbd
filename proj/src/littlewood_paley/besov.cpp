#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "msm/littlewood_paley.hpp"

namespace msm {

double besov_norm(const BlockDecomposition& blocks, double s, double p, double q) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw std::invalid_argument("Besov exponents need p, q >= 1");
  const bool sup = std::isinf(q);
  double acc = 0.0;
  for (std::size_t j = 0; j < blocks.pieces.size(); ++j) {
    const double term = std::exp2(s * static_cast<double>(j)) * lp_norm(blocks.pieces[j], p);
    acc = sup ? std::max(acc, term) : acc + std::pow(term, q);
  }
  return sup ? acc : std::pow(acc, 1.0 / q);
}

double besov_norm(const DyadicPartition& partition, const ComplexField& f, double s, double p,
                  double q) {
  return besov_norm(decompose(partition, f), s, p, q);
}

double holder_norm(const DyadicPartition& partition, const ComplexField& f, double s) {
  if (!(s > 0.0 && s < 2.0) || s == 1.0) {
    throw std::invalid_argument("Holder exponent must lie in (0, 2) and not be an integer");
  }
  const double inf = std::numeric_limits<double>::infinity();
  return besov_norm(partition, f, s, inf, inf);
}

InterpolationSides interpolation_check(const DyadicPartition& partition, const ComplexField& f,
                                       double s0, double s1, double q0, double q1, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("theta must lie in [0, 1]");
  if (!(q0 >= 1.0) || !(q1 >= 1.0)) throw std::invalid_argument("integrability exponents must be >= 1");
  const double s = (1.0 - theta) * s0 + theta * s1;
  const double inv_q = (1.0 - theta) / q0 + theta / q1;  // 1/inf = 0
  const double q = inv_q == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv_q;
  const auto blocks = decompose(partition, f);
  const double lhs = besov_norm(blocks, s, q, 2.0);
  const double rhs = std::pow(besov_norm(blocks, s0, q0, 2.0), 1.0 - theta) *
                     std::pow(besov_norm(blocks, s1, q1, 2.0), theta);
  return {lhs, rhs, s, q};
}

void write_norm_table(std::ostream& out, const std::vector<NormTableRow>& rows) {
  auto num = [&out](double v) -> std::ostream& {
    if (std::isinf(v)) return out << "inf";
    return out << v;
  };
  const auto old = out.precision(17);
  out << "field_id,s,p,q,value\n";
  for (const auto& r : rows) {
    out << r.field_id << ',';
    num(r.s) << ',';
    num(r.p) << ',';
    num(r.q) << ',';
    num(r.value) << '\n';
  }
  out.precision(old);
}

}  // namespace msm
