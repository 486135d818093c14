#include "deltamat/poly.hpp"

#include <sstream>

#include "deltamat/kernels.hpp"

namespace deltamat {

std::uint64_t TwistPolynomial::total() const {
  std::uint64_t sum = 0;
  for (const auto& [exponent, count] : coefficients) sum += count;
  return sum;
}

TwistPolynomial twist_polynomial(const DeltaMatroid& d, ExponentConvention convention,
                                 int workers) {
  if (convention == ExponentConvention::HalfWidth && parity(d) != Parity::Even) {
    throw PreconditionError("half-width exponents need an even delta-matroid");
  }
  const auto hist = workers == 1
                        ? kernels::width_histogram_serial(d.feasible(), d.size())
                        : kernels::width_histogram_parallel(d.feasible(), d.size(), workers);
  TwistPolynomial p;
  p.convention = convention;
  for (int w = 0; w < static_cast<int>(hist.size()); ++w) {
    if (hist[w] == 0) continue;
    p.coefficients[convention == ExponentConvention::HalfWidth ? w / 2 : w] += hist[w];
  }
  return p;
}

bool is_single_term(const TwistPolynomial& p) { return p.coefficients.size() == 1; }

std::string to_text(const TwistPolynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [exponent, count] : p.coefficients) {
    if (!first) os << '+';
    first = false;
    os << count;
    if (exponent != 0) os << "*z^" << exponent;
  }
  if (first) os << '0';
  return os.str();
}

std::string to_pairs(const TwistPolynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [exponent, count] : p.coefficients) {
    if (!first) os << ' ';
    first = false;
    os << exponent << ':' << count;
  }
  return os.str();
}

}  // namespace deltamat
