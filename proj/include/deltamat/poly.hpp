#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "deltamat/core.hpp"

namespace deltamat {

/// Width: exponent is w(D*A). HalfWidth: exponent is w(D*A)/2, defined for
/// even delta-matroids only.
enum class ExponentConvention { Width, HalfWidth };

struct TwistPolynomial {
  std::map<int, std::uint64_t> coefficients;  // exponent -> count, no zero entries
  ExponentConvention convention = ExponentConvention::Width;

  std::uint64_t total() const;
  friend bool operator==(const TwistPolynomial&, const TwistPolynomial&) = default;
};

/// Sum over all A of z^{w(D*A)}. Throws PreconditionError for HalfWidth on a
/// delta-matroid that is not even.
TwistPolynomial twist_polynomial(const DeltaMatroid& d,
                                 ExponentConvention convention = ExponentConvention::Width,
                                 int workers = 1);

bool is_single_term(const TwistPolynomial& p);

/// "2+14*z^4": ascending exponents, exponent 0 printed as the bare coefficient.
std::string to_text(const TwistPolynomial& p);

/// "0:2 4:14"
std::string to_pairs(const TwistPolynomial& p);

}  // namespace deltamat
