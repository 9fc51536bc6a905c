#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "moonshine/modular.hpp"
#include "moonshine/monster.hpp"

using namespace moonshine::monster;
using moonshine::modular::j_normalized;

namespace {

std::string slurp(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::string kSource = MOONSHINE_SOURCE_DIR;

CoeffTable computed_table(std::int64_t order)
{
  return CoeffTable::from_series(j_normalized(order).series, "computed");
}

IrrepDims irreps_with_fixture()
{
  auto base = embedded_irreps();
  std::ifstream in(kSource + "/tests/data/monster_irreps_6_7.txt");
  REQUIRE(in);
  return parse_irreps(in, "fixture", &base);
}

// Every multiplicity vector in [0, max_mult]^parts, kept when the weighted sum hits target.
std::set<std::vector<std::uint64_t>> brute_decompose(const mpz_class& target, const IrrepDims& r,
                                                     std::uint64_t max_mult, std::size_t parts)
{
  std::set<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> m(parts, 0);
  for (;;) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < parts; ++i)
      s += mpz_class(static_cast<unsigned long>(m[i])) * r.dims[i];
    if (s == target)
      out.insert(m);
    std::size_t i = 0;
    while (i < parts && m[i] == max_mult)
      m[i++] = 0;
    if (i == parts)
      return out;
    ++m[i];
  }
}

} // namespace

TEST_CASE("embedded datasets match the data files byte for byte")
{
  CHECK(slurp(kSource + "/data/j_normalized_head.txt") == embedded_coefficients_text());
  CHECK(slurp(kSource + "/data/monster_irreps_head.txt") == embedded_irreps_text());
}

TEST_CASE("embedded coefficients agree with the computed expansion")
{
  auto table = embedded_coefficients();
  CHECK(table.last_index() == 4);
  auto computed = computed_table(table.last_index() + 1);
  CHECK(table.values() == computed.values());
  CHECK(table.at(1) == 196884);
}

TEST_CASE("embedded irreducible dimensions")
{
  auto r = embedded_irreps();
  REQUIRE(r.size() == 5);
  CHECK(r.r(1) == 1);
  CHECK(r.r(2) == 196883);
  CHECK(r.r(3) == 21296876);
  CHECK(r.r(4) == 842609326);
  CHECK(r.r(5) == mpz_class("18538750076"));
  auto full = irreps_with_fixture();
  CHECK(full.size() == 7);
  CHECK(full.r(7) == mpz_class("293553734298"));
}

TEST_CASE("dataset parsing")
{
  SUBCASE("comments and blank lines")
  {
    std::istringstream in("# head\n\n-1 1\n0 0\n  # inner\n1 196884\n");
    auto t = parse_coeff_table(in, "inline");
    CHECK(t.last_index() == 1);
    CHECK(t.provenance() == "inline");
  }
  SUBCASE("gaps")
  {
    std::istringstream in("-1 1\n1 196884\n");
    CHECK_THROWS_AS(parse_coeff_table(in, "x"), DatasetFormatError);
  }
  SUBCASE("wrong leading coefficient")
  {
    std::istringstream in("-1 2\n0 0\n");
    CHECK_THROWS_AS(parse_coeff_table(in, "x"), DatasetFormatError);
  }
  SUBCASE("junk")
  {
    std::istringstream a("-1 1\n0 zero\n"), b("-1 1 7\n"), c("-1 1\n-1 1\n");
    CHECK_THROWS_AS(parse_coeff_table(a, "x"), DatasetFormatError);
    CHECK_THROWS_AS(parse_coeff_table(b, "x"), DatasetFormatError);
    CHECK_THROWS_AS(parse_coeff_table(c, "x"), DatasetFormatError);
  }
  SUBCASE("irreps must increase")
  {
    std::istringstream a("1 1\n2 5\n3 4\n"), b("1 2\n"), c("1 1\n3 7\n");
    CHECK_THROWS_AS(parse_irreps(a, "x"), DatasetFormatError);
    CHECK_THROWS_AS(parse_irreps(b, "x"), DatasetFormatError);
    CHECK_THROWS_AS(parse_irreps(c, "x"), DatasetFormatError);
  }
  SUBCASE("round trip")
  {
    auto t = computed_table(8);
    std::istringstream in(format_dataset("generated\nsecond line", t.values()));
    CHECK(parse_coeff_table(in, "x").values() == t.values());
  }
}

TEST_CASE("McKay-Thompson identities with the embedded head")
{
  auto res = mckay_identity_check(computed_table(6), embedded_irreps());
  REQUIRE(res.size() == 5);
  for (int k = 0; k < 4; ++k) {
    CAPTURE(k);
    CHECK(res[k].label == k + 2);
    CHECK(res[k].exponent == k + 1);
    CHECK(res[k].status == CheckStatus::Pass);
    CHECK(res[k].rhs == res[k].lhs);
  }
  CHECK(res[0].lhs == 196884);
  CHECK(res[4].status == CheckStatus::NotConfigured);
  CHECK(!res[4].rhs);
  CHECK(to_string(res[4].status) == "not-configured");
}

TEST_CASE("McKay-Thompson identities with r6 and r7 supplied")
{
  auto res = mckay_identity_check(computed_table(6), irreps_with_fixture());
  for (const auto& r : res)
    CHECK(r.status == CheckStatus::Pass);
  CHECK(res[4].lhs == mpz_class("333202640600"));
}

TEST_CASE("a perturbed coefficient fails its identity")
{
  auto table = computed_table(6);
  auto bad = table.with_value(2, table.at(2) + 1);
  auto res = mckay_identity_check(bad, embedded_irreps());
  CHECK(res[0].status == CheckStatus::Pass);
  CHECK(res[1].status == CheckStatus::Fail);
  CHECK(res[2].status == CheckStatus::Pass);
  CHECK(to_string(res[1].status) == "fail");
}

TEST_CASE("McKay-Thompson check needs coefficients through q^5")
{
  CHECK_THROWS_AS(mckay_identity_check(embedded_coefficients(), embedded_irreps()), InsufficientData);
}

TEST_CASE("graded dimensions")
{
  auto table = computed_table(6);
  std::vector<mpz_class> dims{1, 0, 196884, 21493760};
  CHECK(graded_dimension_check(table, dims));
  dims[1] = 744;
  CHECK(!graded_dimension_check(table, dims));
  std::vector<mpz_class> too_long(20, 0);
  CHECK(!graded_dimension_check(table, too_long));
}

TEST_CASE("decompose_bounded")
{
  auto r = irreps_with_fixture();
  CHECK(decompose_bounded(196884, r, 1, 2) == std::vector<Decomposition>{{{1, 1}, 196884}});
  CHECK(decompose_bounded(21493760, r, 1, 3) == std::vector<Decomposition>{{{1, 1, 1}, 21493760}});
  CHECK(decompose_bounded(5, r, 1, 2).empty());
  CHECK(decompose_bounded(0, r, 3, 3) == std::vector<Decomposition>{{{0, 0, 0}, 0}});
  CHECK_THROWS_AS(decompose_bounded(1, r, 1, 8), InsufficientData);
  CHECK_THROWS_AS(decompose_bounded(mpz_class("333202640600"), r, 1000000, 7, 1000), SearchSpaceTooLarge);
  CHECK_THROWS(decompose_bounded(-1, r, 1, 1));

  auto table = computed_table(6);
  const auto& ids = thompson_identities();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const auto parts = ids[k].multiplicities.size();
    const mpz_class& target = table.at(static_cast<std::int64_t>(k) + 1);
    auto found = decompose_bounded(target, r, 5, parts);
    std::set<std::vector<std::uint64_t>> got;
    for (const auto& d : found) {
      mpz_class s = 0;
      for (std::size_t i = 0; i < parts; ++i)
        s += mpz_class(static_cast<unsigned long>(d.multiplicities[i])) * r.dims[i];
      CHECK(s == target);
      CHECK(d.target == target);
      got.insert(d.multiplicities);
    }
    CHECK(got.count(ids[k].multiplicities) == 1);
    if (parts <= 5)
      CHECK(got == brute_decompose(target, r, 5, parts));
  }
}

TEST_CASE("decompose_bounded matches exhaustive search on small targets")
{
  IrrepDims r{{1, 3, 7, 12, 30}, "toy"};
  for (long t = 0; t <= 120; t += 7)
    for (std::uint64_t mm = 1; mm <= 4; ++mm) {
      std::set<std::vector<std::uint64_t>> got;
      for (const auto& d : decompose_bounded(t, r, mm, 4))
        got.insert(d.multiplicities);
      CHECK(got == brute_decompose(t, r, mm, 4));
    }
}

TEST_CASE("KNZ identity holds for small orders")
{
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    auto res = knz_verify(n);
    CHECK(res.equal);
    CHECK(res.mismatches.empty());
    CHECK(res.lhs == res.rhs);
  }
}

TEST_CASE("KNZ left side is antisymmetric in p and q")
{
  for (int n = 1; n <= 4; ++n) {
    auto res = knz_verify(n);
    CHECK(res.lhs.swapped() == -res.lhs);
  }
}

TEST_CASE("KNZ with the unnormalized constant term fails")
{
  for (int n = 1; n <= 3; ++n) {
    auto res = knz_verify(n, true);
    CHECK(!res.equal);
    CHECK(!res.mismatches.empty());
    for (const auto& m : res.mismatches)
      CHECK(m.lhs != m.rhs);
  }
}

TEST_CASE("KNZ reports short coefficient tables")
{
  CHECK_THROWS_AS(knz_verify(2, embedded_coefficients()), InsufficientCoefficients);
  CHECK_NOTHROW(knz_verify(1, embedded_coefficients()));
  CHECK(knz_verify(1, embedded_coefficients()).equal);
  CHECK_THROWS(knz_verify(-1));
}

TEST_CASE("Monster order")
{
  auto order = monster_order();
  CHECK(order == mpz_class("808017424794512875886459904961710757005754368000000000"));
  CHECK(order.get_str().size() == 54);
  const auto& f = monster_facts();
  CHECK(f.order_factorization.size() == 15);
  CHECK(f.conjugacy_classes == 194);
  CHECK(f.distinct_mckay_thompson_series == 172);
  CHECK(f.span_dimension == 163);
}
