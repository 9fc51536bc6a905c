#include <doctest.h>

#include <numeric>

#include "moonshine/modular.hpp"

using namespace moonshine::modular;
using moonshine::qseries::Coeff;
using moonshine::qseries::LaurentSeries;

namespace {

mpz_class brute_sigma(unsigned k, std::int64_t n)
{
  mpz_class s = 0, p;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d)
      continue;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), k);
    s += p;
  }
  return s;
}

// Akiyama-Tanigawa; agrees with the usual B_n for even n.
Coeff akiyama_tanigawa(int n)
{
  std::vector<Coeff> a(n + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = Coeff(1, m + 1);
    for (int j = m; j >= 1; --j)
      a[j - 1] = j * (a[j - 1] - a[j]);
  }
  return a[0];
}

std::size_t rank_of(std::vector<std::vector<Coeff>> rows)
{
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0)
        continue;
      Coeff f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t expected_dimension(int k)
{
  return static_cast<std::size_t>(k / 12 + (k % 12 == 2 ? 0 : 1));
}

} // namespace

TEST_CASE("sigma matches brute-force divisor sums")
{
  for (unsigned k = 0; k <= 11; ++k)
    for (std::int64_t n = 1; n <= 60; ++n)
      CHECK(sigma(k, n) == brute_sigma(k, n));
  CHECK(sigma(3, 2) == 9);
  CHECK(sigma(5, 4) == 1057);
  CHECK_THROWS(sigma(3, 0));
}

TEST_CASE("Bernoulli numbers")
{
  CHECK(bernoulli(2) == Coeff(1, 6));
  CHECK(bernoulli(4) == Coeff(-1, 30));
  CHECK(bernoulli(6) == Coeff(1, 42));
  CHECK(bernoulli(8) == Coeff(-1, 30));
  CHECK(bernoulli(10) == Coeff(5, 66));
  CHECK(bernoulli(12) == Coeff(-691, 2730));
  for (int n = 2; n <= 40; n += 2)
    CHECK(bernoulli(n) == akiyama_tanigawa(n));
}

TEST_CASE("Eisenstein expansions")
{
  auto e4 = eisenstein_normalized(EisensteinId(4), 4).series;
  CHECK(e4.coeff(0) == 1);
  CHECK(e4.coeff(1) == 240);
  CHECK(e4.coeff(2) == 2160);
  CHECK(e4.coeff(3) == 6720);
  CHECK(e4.trunc() == 4);

  auto e6 = eisenstein_normalized(EisensteinId(6), 3).series;
  CHECK(e6.coeff(1) == -504);
  CHECK(e6.coeff(2) == -16632);

  auto e12 = eisenstein_normalized(EisensteinId(12), 3).series;
  CHECK(e12.coeff(1) == Coeff(65520, 691));

  CHECK_THROWS_AS(EisensteinId(2), DomainError);
  CHECK_THROWS_AS(EisensteinId(5), DomainError);
  CHECK_THROWS_AS(EisensteinId(0), DomainError);
}

TEST_CASE("E4^2 = E8 and E4 E6 = E10")
{
  const std::int64_t n = 60;
  auto e4 = eisenstein_normalized(EisensteinId(4), n).series;
  auto e6 = eisenstein_normalized(EisensteinId(6), n).series;
  CHECK(e4 * e4 == eisenstein_normalized(EisensteinId(8), n).series);
  CHECK(e4 * e6 == eisenstein_normalized(EisensteinId(10), n).series);
}

TEST_CASE("discriminant reproduces Ramanujan tau")
{
  auto d = discriminant(7).series;
  CHECK(d.valuation() == 1);
  const long tau[] = {1, -24, 252, -1472, 4830, -6048};
  for (int n = 1; n <= 6; ++n)
    CHECK(d.coeff(n) == tau[n - 1]);
  CHECK(d.trunc() == 7);
  CHECK(discriminant(7).weight == 12);
  CHECK_THROWS(discriminant(1));
}

TEST_CASE("discriminant equals the eta product")
{
  for (std::int64_t order : {2, 3, 10, 57, 200})
    CHECK(discriminant(order).series == eta_product_delta(order));
}

TEST_CASE("J expansion head")
{
  auto j = j_expansion(5).series;
  const char* expect[] = {"1", "744", "196884", "21493760", "864299970", "20245856256"};
  for (int n = -1; n <= 4; ++n)
    CHECK(j.coeff(n) == Coeff(mpz_class(expect[n + 1])));
  CHECK(j.trunc() == 5);
  CHECK_THROWS_AS(j.coeff(5), moonshine::qseries::UnknownCoefficient);
  CHECK(j_expansion(10).series.coeff(5) == Coeff(mpz_class("333202640600")));
}

TEST_CASE("J at small orders")
{
  auto j0 = j_expansion(0).series;
  CHECK(j0.valuation() == -1);
  CHECK(j0.trunc() == 0);
  CHECK(j0.coeff(-1) == 1);
  auto j1 = j_expansion(1).series;
  CHECK(j1.coeff(0) == 744);
  CHECK_THROWS(j_expansion(-1));
}

TEST_CASE("J truncations are consistent and integral")
{
  auto big = j_expansion(80).series;
  CHECK(big.is_integral());
  for (std::int64_t order = 0; order < 80; order += 7)
    CHECK(j_expansion(order).series == big.truncated(order));
}

TEST_CASE("normalized J differs only in the constant term")
{
  auto j = j_expansion(30).series;
  auto jt = j_normalized(30).series;
  CHECK(jt.coeff(0) == 0);
  CHECK(jt + LaurentSeries::constant(744, 30) == j);
}

TEST_CASE("J times Delta is E4 cubed")
{
  const std::int64_t n = 40;
  auto e4 = eisenstein_normalized(EisensteinId(4), n).series;
  auto lhs = j_expansion(n).series * discriminant(n + 2).series;
  CHECK(agree_on_common_window(lhs, pow(e4, 3)));
  CHECK(lhs.trunc() >= n);
}

TEST_CASE("weight space bases have the right size and full rank")
{
  for (int k = 4; k <= 36; k += 2) {
    auto basis = weight_space_basis(k, 30);
    CHECK(basis.size() == expected_dimension(k));
    std::vector<std::vector<Coeff>> rows;
    for (const auto& f : basis) {
      CHECK(f.weight == k);
      std::vector<Coeff> row;
      for (std::int64_t n = 0; n < 30; ++n)
        row.push_back(f.series.coeff(n));
      rows.push_back(std::move(row));
    }
    CHECK(rank_of(rows) == basis.size());
  }
  auto b12 = weight_space_basis(12, 5);
  REQUIRE(b12.size() == 2);
  CHECK(b12[0].label == "E4^3*E6^0");
  CHECK(b12[1].label == "E4^0*E6^2");
  CHECK(weight_space_basis(2, 5).empty());
  CHECK_THROWS(weight_space_basis(7, 5));
}
