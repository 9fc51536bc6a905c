#ifndef MOONSHINE_MODULAR_HPP
#define MOONSHINE_MODULAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "moonshine/qseries.hpp"

namespace moonshine::modular {

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Weight 2k of a level-one Eisenstein series; even and at least 4.
class EisensteinId {
public:
  explicit EisensteinId(int weight);
  int weight() const { return weight_; }

private:
  int weight_;
};

struct ModularFormExpansion {
  std::string label;
  int weight = 0;
  qseries::LaurentSeries series;
};

/// Divisor power sum sigma_k(n) = sum_{d | n} d^k.
mpz_class sigma(unsigned k, std::int64_t n);

/// Bernoulli number B_n for even n >= 2 (B_2 = 1/6). Memoized; thread safe.
qseries::Coeff bernoulli(int n);

/*
 * E_{2k} = 1 - (4k / B_{2k}) sum_{n>=1} sigma_{2k-1}(n) q^n, the Eisenstein
 * series scaled to constant term 1. Coefficients are known for 0 <= n < order.
 */
ModularFormExpansion eisenstein_normalized(EisensteinId id, std::int64_t order);

/// Delta = (E4^3 - E6^2) / 1728 = q - 24 q^2 + ..., known below `order` (>= 2).
ModularFormExpansion discriminant(std::int64_t order);

/// q * prod_{n>=1} (1 - q^n)^24 below `order`, expanded factor by factor with
/// no use of the Eisenstein route.
qseries::LaurentSeries eta_product_delta(std::int64_t order);

/// J = E4^3 / Delta = q^-1 + 744 + 196884 q + ..., coefficients c(-1)..c(order-1).
ModularFormExpansion j_expansion(std::int64_t order);

/// J - 744.
ModularFormExpansion j_normalized(std::int64_t order);

/// Monomials E4^a E6^b with 4a + 6b = weight, ordered by decreasing a.
std::vector<ModularFormExpansion> weight_space_basis(int weight, std::int64_t order);

} // namespace moonshine::modular

#endif
