#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using moonshine::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> records(const std::string& text)
{
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    out.push_back(json::parse(line));
  return out;
}

std::vector<std::string> lines(const std::string& text)
{
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    out.push_back(line);
  return out;
}

} // namespace

TEST_CASE("j")
{
  auto r = call({"j", "--order", "6"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 7);
  CHECK(ls[0] == "-1 1");
  CHECK(ls[1] == "0 744");
  CHECK(ls[6] == "5 333202640600");

  auto n = call({"j", "--order", "3", "--normalized"});
  CHECK(lines(n.out)[1] == "0 0");
  CHECK(lines(call({"j", "--order", "0"}).out) == std::vector<std::string>{"-1 1"});
}

TEST_CASE("json and human output carry the same numbers")
{
  auto human = lines(call({"j", "--order", "12"}).out);
  auto js = records(call({"--json", "j", "--order", "12"}).out);
  REQUIRE(human.size() == js.size());
  for (std::size_t i = 0; i < js.size(); ++i)
    CHECK(human[i] == js[i]["n"].get<std::string>() + " " + js[i]["c"].get<std::string>());
}

TEST_CASE("output is deterministic")
{
  for (auto args : std::vector<std::vector<std::string>>{
           {"--json", "j", "--order", "20"},
           {"group", "--name", "S4", "--action", "classes"},
           {"--json", "knz", "--order", "2"},
           {"reduce", "--tau", "7/3,1/5"}})
    CHECK(call(args).out == call(args).out);
}

TEST_CASE("eisenstein and delta")
{
  auto e = lines(call({"eisenstein", "--weight", "4", "--order", "3"}).out);
  CHECK(e == std::vector<std::string>{"0 1", "1 240", "2 2160"});
  CHECK(call({"eisenstein", "--weight", "2"}).code == 2);
  CHECK(call({"eisenstein", "--weight", "7"}).code == 2);

  auto d = call({"delta", "--order", "30", "--check"});
  CHECK(d.code == 0);
  CHECK(d.out.find("eta_product_equal: true") != std::string::npos);
  CHECK(lines(d.out)[1] == "1 1");
}

TEST_CASE("reduce")
{
  auto r = records(call({"--json", "reduce", "--tau", "7/3,1/5"}).out);
  REQUIRE(r.size() == 1);
  CHECK(r[0]["tau"] == json::array({"-7/34", "45/34"}));
  CHECK(r[0]["word"] == "T^2 S T^-2");
  CHECK(r[0]["in_domain"] == true);

  auto h = call({"reduce", "--tau", "5,1"});
  CHECK(h.out.find("tau: 0/1 1/1") != std::string::npos);
  CHECK(h.out.find("word: T^-5") != std::string::npos);

  CHECK(call({"reduce", "--tau", "0,-1"}).code == 2);
  CHECK(call({"reduce", "--tau", "abc"}).code == 2);
  CHECK(call({"reduce"}).code == 2);
}

TEST_CASE("equiv, lattice and word")
{
  auto e = call({"equiv", "--tau1", "0,2", "--tau2", "1,2"});
  CHECK(e.code == 0);
  CHECK(e.out.find("equivalent: true") != std::string::npos);
  CHECK(call({"equiv", "--tau1", "0,2", "--tau2", "0,3"}).code == 1);

  auto l = records(call({"--json", "lattice", "--b1", "0,1", "1,0", "--b2", "3,1", "2,1"}).out);
  REQUIRE(l.size() == 1);
  CHECK(l[0]["matrix"] == json::array({"1", "3", "1", "2"}));
  CHECK(call({"lattice", "--b1", "0,1", "1,0", "--b2", "0,2", "1,0"}).code == 1);
  CHECK(call({"lattice", "--b1", "1,0", "2,0", "--b2", "0,2", "1,0"}).code == 2);

  auto w = call({"word", "--matrix", "2", "1", "1", "1"});
  CHECK(w.out.find("word: T^2 S T") != std::string::npos);
  CHECK(call({"word", "--matrix", "1", "1", "1", "1"}).code == 2);
}

TEST_CASE("group")
{
  auto f = records(call({"--json", "group", "--name", "C12", "--action", "factors"}).out);
  REQUIRE(f.size() == 1);
  CHECK(f[0]["order"] == "12");
  CHECK(call({"group", "--name", "S4"}).out.find("2 2 2 3") != std::string::npos);
  CHECK(call({"group", "--name", "A5", "--action", "simple"}).out == "simple: true\n");
  CHECK(lines(call({"group", "--name", "S4", "--action", "classes"}).out).size() == 5);
  CHECK(lines(call({"group", "--name", "S4", "--action", "normal"}).out).size() == 4);
  CHECK(call({"group", "--name", "X4"}).code == 2);
  CHECK(call({"group", "--name", "D2"}).code == 2);
  CHECK(call({"group", "--name", "S4", "--action", "bogus"}).code == 2);
  CHECK(call({"group", "--name", "S9"}).code == 2);
}

TEST_CASE("mckay")
{
  auto r = call({"mckay"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "c(2) 196884 = r1+r2 = 196884 pass");
  CHECK(ls[4].find("not-configured") != std::string::npos);

  auto full = call({"mckay", "--irreps", MOONSHINE_SOURCE_DIR "/tests/data/monster_irreps_6_7.txt"});
  CHECK(full.code == 0);
  for (const auto& l : lines(full.out))
    CHECK(l.substr(l.size() - 4) == "pass");

  CHECK(call({"mckay", "--order", "3"}).code == 2);
  CHECK(call({"mckay", "--irreps", "/nonexistent/file"}).code == 2);
}

TEST_CASE("knz")
{
  auto ok = call({"knz", "--order", "2"});
  CHECK(ok.code == 0);
  CHECK(lines(ok.out)[0] == "equal: true");

  auto bad = records(call({"--json", "knz", "--order", "1", "--use-unnormalized-c0"}).out);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0]["equal"] == false);
  CHECK(!bad[0]["mismatches"].empty());
  CHECK(call({"knz", "--use-unnormalized-c0"}).code == 1);
}

TEST_CASE("facts")
{
  auto r = records(call({"--json", "facts"}).out);
  REQUIRE(r.size() == 1);
  CHECK(r[0]["order"] == "808017424794512875886459904961710757005754368000000000");
  CHECK(r[0]["digits"] == "54");
}

TEST_CASE("usage errors")
{
  CHECK(call({}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"j", "--order", "-3"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
