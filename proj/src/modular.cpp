#include "moonshine/modular.hpp"

#include <mutex>

namespace moonshine::modular {

using qseries::Coeff;
using qseries::LaurentSeries;

EisensteinId::EisensteinId(int weight) : weight_(weight)
{
  if (weight < 4 || weight % 2 != 0)
    throw DomainError("Eisenstein weight must be even and at least 4, got " + std::to_string(weight));
}

mpz_class sigma(unsigned k, std::int64_t n)
{
  if (n < 1)
    throw DomainError("sigma: n must be positive");
  mpz_class total = 0;
  mpz_class term;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), k);
    total += term;
    std::int64_t e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(e), k);
      total += term;
    }
  }
  return total;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Coeff> bernoulli_cache{Coeff(1)}; // B_0, B_1, ... with B_1 = -1/2

mpz_class binomial(unsigned long n, unsigned long k)
{
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

} // namespace

Coeff bernoulli(int n)
{
  if (n < 2 || n % 2 != 0)
    throw DomainError("bernoulli: index must be even and at least 2");
  std::lock_guard lock(bernoulli_mutex);
  auto& b = bernoulli_cache;
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
  while (b.size() <= static_cast<std::size_t>(n)) {
    auto m = static_cast<unsigned long>(b.size());
    Coeff acc = 0;
    for (unsigned long k = 0; k < m; ++k)
      acc += Coeff(binomial(m + 1, k)) * b[k];
    b.push_back(-acc / Coeff(binomial(m + 1, m)));
  }
  return b[static_cast<std::size_t>(n)];
}

ModularFormExpansion eisenstein_normalized(EisensteinId id, std::int64_t order)
{
  if (order < 1)
    throw DomainError("eisenstein_normalized: order must be at least 1");
  const int w = id.weight();
  const Coeff factor = -Coeff(2 * w) / bernoulli(w);
  std::vector<Coeff> cs(static_cast<std::size_t>(order));
  cs[0] = 1;
  for (std::int64_t n = 1; n < order; ++n)
    cs[n] = factor * Coeff(sigma(static_cast<unsigned>(w - 1), n));
  return {"E" + std::to_string(w), w, LaurentSeries::from_coeffs(0, std::move(cs), order)};
}

ModularFormExpansion discriminant(std::int64_t order)
{
  if (order < 2)
    throw DomainError("discriminant: order must be at least 2");
  auto e4 = eisenstein_normalized(EisensteinId(4), order).series;
  auto e6 = eisenstein_normalized(EisensteinId(6), order).series;
  auto delta = qseries::scale(pow(e4, 3) - pow(e6, 2), Coeff(1, 1728));
  return {"Delta", 12, delta};
}

LaurentSeries eta_product_delta(std::int64_t order)
{
  if (order < 2)
    throw DomainError("eta_product_delta: order must be at least 2");
  // prod (1 - q^n)^24 is needed below order - 1; factors with n >= order - 1
  // do not touch that window.
  const auto len = static_cast<std::size_t>(order - 1);
  std::vector<mpz_class> c(len);
  c[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (std::size_t k = len; k-- > n;)
        c[k] -= c[k - n];
    }
  }
  std::vector<Coeff> cs(c.begin(), c.end());
  return LaurentSeries::from_coeffs(1, std::move(cs), order);
}

ModularFormExpansion j_expansion(std::int64_t order)
{
  if (order < 0)
    throw DomainError("j_expansion: order must be nonnegative");
  // Delta/q is an integral unit; its inverse stays in Z[[q]].
  auto delta = discriminant(order + 2).series;
  auto inv_delta = invert(delta.shifted(-1)).shifted(-1);
  auto e4 = eisenstein_normalized(EisensteinId(4), order + 1).series;
  auto j = mul(pow(e4, 3), inv_delta);
  return {"J", 0, j};
}

ModularFormExpansion j_normalized(std::int64_t order)
{
  auto j = j_expansion(order).series;
  if (j.trunc() > 0)
    j = j - LaurentSeries::constant(744, j.trunc());
  return {"J~", 0, j};
}

std::vector<ModularFormExpansion> weight_space_basis(int weight, std::int64_t order)
{
  if (weight < 0 || weight % 2 != 0)
    throw DomainError("weight_space_basis: weight must be even and nonnegative");
  if (order < 1)
    throw DomainError("weight_space_basis: order must be at least 1");
  std::vector<ModularFormExpansion> out;
  const auto e4 = eisenstein_normalized(EisensteinId(4), order).series;
  const auto e6 = eisenstein_normalized(EisensteinId(6), order).series;
  for (int a = weight / 4; a >= 0; --a) {
    int rest = weight - 4 * a;
    if (rest % 6 != 0)
      continue;
    int b = rest / 6;
    auto series = mul(pow(e4, a), pow(e6, b));
    out.push_back({"E4^" + std::to_string(a) + "*E6^" + std::to_string(b), weight, series});
  }
  return out;
}

} // namespace moonshine::modular
