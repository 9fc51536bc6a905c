#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "moonshine/groups.hpp"
#include "moonshine/modular.hpp"
#include "moonshine/monster.hpp"
#include "moonshine/qseries.hpp"
#include "moonshine/sl2z.hpp"

namespace moonshine::cli {

namespace {

using nlohmann::json;
using sl2z::Rational;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// One record per call: a JSON object per line, or the human-readable text.
class Emitter {
public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void emit(const json& record, const std::string& human)
  {
    if (json_)
      out_ << record.dump() << '\n';
    else
      out_ << human << '\n';
  }

private:
  std::ostream& out_;
  bool json_;
};

std::string str(const mpz_class& z) { return z.get_str(); }
std::string str(const Rational& q) { return sl2z::to_string(q); }

Rational parse_rational(const std::string& text)
{
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw UsageError("not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

std::pair<Rational, Rational> parse_pair(const std::string& text)
{
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw UsageError("expected x,y but got '" + text + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

sl2z::UpperHalfPoint parse_tau(const std::string& text)
{
  auto [x, y] = parse_pair(text);
  if (sgn(y) <= 0)
    throw UsageError("tau must have positive imaginary part: '" + text + "'");
  return {x, y};
}

sl2z::LatticeBasis parse_basis(const std::vector<std::string>& parts)
{
  auto [x1, y1] = parse_pair(parts.at(0));
  auto [x2, y2] = parse_pair(parts.at(1));
  try {
    return {{x1, y1}, {x2, y2}};
  } catch (const sl2z::DegenerateBasis& e) {
    throw UsageError(e.what());
  }
}

std::size_t element_cap()
{
  const char* env = std::getenv("MOONSHINE_ELEMENT_CAP");
  if (!env || !*env)
    return groups::kDefaultElementCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0)
    throw UsageError("MOONSHINE_ELEMENT_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

groups::PermGroup group_by_name(const std::string& name)
{
  if (name.size() < 2)
    throw UsageError("group name must look like C12, D5, A5 or S4");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(name.substr(1), &used);
    if (used != name.size() - 1)
      throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw UsageError("bad group size in '" + name + "'");
  }
  const std::size_t cap = element_cap();
  try {
    switch (name[0]) {
    case 'C': return groups::make_cyclic(n, cap);
    case 'D': return groups::make_dihedral(n, cap);
    case 'A': return groups::make_alternating(n, cap);
    case 'S': return groups::make_symmetric(n, cap);
    default: break;
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const groups::CapExceeded& e) {
    throw UsageError(std::string(e.what()) + " (raise MOONSHINE_ELEMENT_CAP)");
  }
  throw UsageError("unknown group family '" + name.substr(0, 1) + "'");
}

void emit_series(Emitter& em, const qseries::LaurentSeries& s, std::int64_t from, const char* key)
{
  for (std::int64_t n = from; n < s.trunc(); ++n) {
    auto c = s.coeff(n);
    std::string v = c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
    em.emit({{"n", std::to_string(n)}, {key, v}}, std::to_string(n) + " " + v);
  }
}

std::string matrix_text(const sl2z::Integer& a, const sl2z::Integer& b, const sl2z::Integer& c,
                        const sl2z::Integer& d)
{
  return str(a) + " " + str(b) + " " + str(c) + " " + str(d);
}

json matrix_json(const sl2z::Mat2Z& m)
{
  return json::array({str(m.a()), str(m.b()), str(m.c()), str(m.d())});
}

std::string factor_orders(const std::vector<groups::FactorDescriptor>& fs)
{
  std::string s;
  for (const auto& f : fs)
    s += (s.empty() ? "" : " ") + std::to_string(f.order);
  return s;
}

json factors_json(const std::vector<groups::FactorDescriptor>& fs)
{
  json arr = json::array();
  for (const auto& f : fs)
    arr.push_back({{"order", std::to_string(f.order)}, {"abelian", f.is_abelian}, {"simple", f.is_simple}});
  return arr;
}

std::string identity_formula(const monster::Decomposition& d)
{
  std::string s;
  for (std::size_t i = 0; i < d.multiplicities.size(); ++i) {
    if (d.multiplicities[i] == 0)
      continue;
    if (!s.empty())
      s += "+";
    if (d.multiplicities[i] != 1)
      s += std::to_string(d.multiplicities[i]);
    s += "r" + std::to_string(i + 1);
  }
  return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact q-expansions, modular group reduction, finite groups and moonshine identities",
               "moonshine"};
  app.require_subcommand(1);

  bool json_mode = false;
  std::optional<std::int64_t> order;
  app.add_flag("--json", json_mode, "Emit one JSON object per line");
  app.add_option("--order", order, "Truncation order")->check(CLI::NonNegativeNumber);

  auto* j = app.add_subcommand("j", "Coefficients c(-1)..c(order-1) of Klein's J");
  bool normalized = false;
  j->add_flag("--normalized", normalized, "Drop the constant term (J - 744)");

  auto* eis = app.add_subcommand("eisenstein", "Normalised Eisenstein series E_weight");
  int weight = 0;
  eis->add_option("--weight", weight, "Even weight >= 4")->required();

  auto* delta = app.add_subcommand("delta", "Discriminant (E4^3 - E6^2)/1728");
  bool delta_check = false;
  delta->add_flag("--check", delta_check, "Compare against q prod (1 - q^n)^24");

  auto* reduce = app.add_subcommand("reduce", "Reduce tau to the fundamental domain");
  std::string tau_text;
  reduce->add_option("--tau", tau_text, "x,y with rationals num/den")->required();

  auto* equiv = app.add_subcommand("equiv", "Decide whether two points lie in one PSL2(Z) orbit");
  std::string tau1_text, tau2_text;
  equiv->add_option("--tau1", tau1_text, "x,y")->required();
  equiv->add_option("--tau2", tau2_text, "x,y")->required();

  auto* lattice = app.add_subcommand("lattice", "Compare two lattice bases");
  std::vector<std::string> b1_text, b2_text;
  lattice->add_option("--b1", b1_text, "w1 w2, each re,im")->required()->expected(2);
  lattice->add_option("--b2", b2_text, "W1 W2, each re,im")->required()->expected(2);

  auto* word = app.add_subcommand("word", "Write a PSL2(Z) element in S and T");
  std::vector<std::string> matrix_text_in;
  word->add_option("--matrix", matrix_text_in, "a b c d")->required()->expected(4);

  auto* group = app.add_subcommand("group", "Finite group structure");
  std::string group_name, action = "factors";
  group->add_option("--name", group_name, "C<n>, D<n>, A<n> or S<n>")->required();
  group->add_option("--action", action, "What to print")
      ->check(CLI::IsMember({"classes", "series", "factors", "normal", "simple", "character"}));

  auto* mckay = app.add_subcommand("mckay", "Check the McKay-Thompson identities");
  std::string irreps_path;
  mckay->add_option("--irreps", irreps_path, "Extra `index value` irreducible dimensions (e.g. r6, r7)");

  auto* knz = app.add_subcommand("knz", "Truncated product identity for J(p) - J(q)");
  bool unnormalized_c0 = false;
  knz->add_flag("--use-unnormalized-c0", unnormalized_c0, "Negative control: use c(0) = 744");

  auto* facts = app.add_subcommand("facts", "Documented numerical data of the monster");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<std::string> argv(args.rbegin(), args.rend()); // CLI11 wants reversed order
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Emitter em(out, json_mode);
  try {
    if (*j) {
      auto s = normalized ? modular::j_normalized(order.value_or(10)).series
                          : modular::j_expansion(order.value_or(10)).series;
      emit_series(em, s, -1, "c");
    } else if (*eis) {
      std::optional<modular::EisensteinId> id;
      try {
        id.emplace(weight);
      } catch (const modular::DomainError& e) {
        throw UsageError(e.what());
      }
      auto n = order.value_or(10);
      if (n < 1)
        throw UsageError("eisenstein needs --order >= 1");
      emit_series(em, modular::eisenstein_normalized(*id, n).series, 0, "coeff");
    } else if (*delta) {
      auto n = order.value_or(10);
      if (n < 2)
        throw UsageError("delta needs --order >= 2");
      auto d = modular::discriminant(n).series;
      emit_series(em, d, 0, "coeff");
      if (delta_check) {
        bool same = d == modular::eta_product_delta(n);
        em.emit({{"eta_product_equal", same}}, std::string("eta_product_equal: ") + (same ? "true" : "false"));
        if (!same)
          return kCheckFailed;
      }
    } else if (*reduce) {
      auto tau = parse_tau(tau_text);
      auto r = sl2z::reduce_to_fundamental(tau);
      const auto& m = r.transform.matrix();
      bool in = sl2z::in_fundamental_domain(r.point);
      em.emit({{"tau", {str(r.point.x()), str(r.point.y())}},
               {"matrix", matrix_json(m)},
               {"word", r.word.to_string()},
               {"in_domain", in}},
              "tau: " + str(r.point.x()) + " " + str(r.point.y()) + "\nmatrix: " +
                  matrix_text(m.a(), m.b(), m.c(), m.d()) + "\nword: " + r.word.to_string() +
                  "\nin_domain: " + (in ? "true" : "false"));
    } else if (*equiv) {
      auto t1 = parse_tau(tau1_text);
      auto t2 = parse_tau(tau2_text);
      auto m = sl2z::tau_equivalent(t1, t2);
      if (!m) {
        em.emit({{"equivalent", false}}, "equivalent: false");
        return kCheckFailed;
      }
      const auto& mm = m->matrix();
      em.emit({{"equivalent", true}, {"matrix", matrix_json(mm)}},
              "equivalent: true\nmatrix: " + matrix_text(mm.a(), mm.b(), mm.c(), mm.d()));
    } else if (*lattice) {
      auto b1 = parse_basis(b1_text);
      auto b2 = parse_basis(b2_text);
      auto t1 = sl2z::tau_from_basis(b1);
      auto t2 = sl2z::tau_from_basis(b2);
      auto m = sl2z::lattice_same(b1, b2);
      json rec{{"tau1", {str(t1.x()), str(t1.y())}}, {"tau2", {str(t2.x()), str(t2.y())}}, {"same", m.has_value()}};
      std::string human = "tau1: " + str(t1.x()) + " " + str(t1.y()) + "\ntau2: " + str(t2.x()) + " " +
                          str(t2.y()) + "\nsame: " + (m ? "true" : "false");
      if (m) {
        rec["matrix"] = {str(m->a), str(m->b), str(m->c), str(m->d)};
        rec["det"] = str(m->det());
        human += "\nmatrix: " + matrix_text(m->a, m->b, m->c, m->d) + "\ndet: " + str(m->det());
      }
      em.emit(rec, human);
      if (!m)
        return kCheckFailed;
    } else if (*word) {
      std::vector<sl2z::Integer> e(4);
      for (int i = 0; i < 4; ++i)
        if (e[i].set_str(matrix_text_in[i], 10) != 0)
          throw UsageError("not an integer: '" + matrix_text_in[i] + "'");
      std::optional<sl2z::Mat2Z> m;
      try {
        m.emplace(e[0], e[1], e[2], e[3]);
      } catch (const sl2z::InvalidMatrix& ex) {
        throw UsageError(ex.what());
      }
      auto w = sl2z::word_decompose(sl2z::PSLElement(*m));
      em.emit({{"word", w.to_string()}, {"letters", str(w.letter_count())}},
              "word: " + w.to_string() + "\nletters: " + str(w.letter_count()));
    } else if (*group) {
      auto g = group_by_name(group_name);
      if (action == "factors") {
        auto fs = groups::jordan_holder_factors(g);
        em.emit({{"group", group_name}, {"order", std::to_string(g.order())}, {"factors", factors_json(fs)}},
                factor_orders(fs));
      } else if (action == "series") {
        auto chain = groups::composition_series(g);
        auto fs = groups::series_factors(g, chain);
        json orders = json::array();
        std::string chain_text;
        for (const auto& t : chain.terms) {
          orders.push_back(std::to_string(t.size()));
          chain_text += (chain_text.empty() ? "" : " ") + std::to_string(t.size());
        }
        em.emit({{"chain", orders}, {"factors", factors_json(fs)}},
                "chain: " + chain_text + "\nfactors: " + factor_orders(fs));
      } else if (action == "classes") {
        for (const auto& c : groups::conjugacy_classes(g))
          em.emit({{"size", std::to_string(c.members.size())}, {"representative", c.representative.cycle_notation()}},
                  std::to_string(c.members.size()) + " " + c.representative.cycle_notation());
      } else if (action == "normal") {
        for (const auto& n : groups::normal_subgroups(g))
          em.emit({{"order", std::to_string(n.size())}}, std::to_string(n.size()));
      } else if (action == "simple") {
        bool s = groups::is_simple(g);
        em.emit({{"simple", s}}, std::string("simple: ") + (s ? "true" : "false"));
      } else { // character
        auto classes = groups::conjugacy_classes(g);
        auto chi = groups::permutation_character(g);
        for (std::size_t k = 0; k < classes.size(); ++k)
          em.emit({{"representative", classes[k].representative.cycle_notation()},
                   {"size", std::to_string(classes[k].members.size())},
                   {"value", chi.values[k].get_str()}},
                  classes[k].representative.cycle_notation() + " " + std::to_string(classes[k].members.size()) +
                      " " + chi.values[k].get_str());
        auto norm = groups::class_fn_inner(chi, chi, classes);
        auto triv = groups::class_fn_inner(chi, groups::trivial_character(classes.size()), classes);
        em.emit({{"norm", norm.get_str()}, {"trivial_multiplicity", triv.get_str()}},
                "norm: " + norm.get_str() + "\ntrivial_multiplicity: " + triv.get_str());
      }
    } else if (*mckay) {
      auto n = order.value_or(6);
      if (n < 6)
        throw UsageError("mckay needs --order >= 6");
      auto table = monster::CoeffTable::from_series(modular::j_normalized(n).series, "computed J~");
      auto r = monster::embedded_irreps();
      if (!irreps_path.empty()) {
        std::ifstream in(irreps_path);
        if (!in)
          throw UsageError("cannot open " + irreps_path);
        r = monster::parse_irreps(in, irreps_path, &r);
      }
      bool ok = true;
      for (const auto& res : monster::mckay_identity_check(table, r)) {
        std::string label = "c(" + std::to_string(res.label) + ")";
        std::string rhs = res.rhs ? str(*res.rhs) : "?";
        ok = ok && res.status != monster::CheckStatus::Fail;
        em.emit({{"identity", label},
                 {"exponent", std::to_string(res.exponent)},
                 {"lhs", str(res.lhs)},
                 {"formula", identity_formula(res.decomposition)},
                 {"rhs", res.rhs ? json(rhs) : json(nullptr)},
                 {"status", std::string(monster::to_string(res.status))}},
                label + " " + str(res.lhs) + " = " + identity_formula(res.decomposition) + " = " + rhs + " " +
                    std::string(monster::to_string(res.status)));
      }
      return ok ? kSuccess : kCheckFailed;
    } else if (*knz) {
      auto n = order.value_or(2);
      if (n > 1000)
        throw UsageError("knz --order is limited to 1000");
      auto res = monster::knz_verify(static_cast<int>(n), unnormalized_c0);
      json mism = json::array();
      std::string human = std::string("equal: ") + (res.equal ? "true" : "false");
      human += "\nterms: " + std::to_string(res.lhs.size());
      for (const auto& m : res.mismatches) {
        mism.push_back({{"p", std::to_string(m.p_exp)}, {"q", std::to_string(m.q_exp)},
                        {"lhs", m.lhs.get_str()}, {"rhs", m.rhs.get_str()}});
        human += "\nmismatch p^" + std::to_string(m.p_exp) + " q^" + std::to_string(m.q_exp) + " lhs " +
                 m.lhs.get_str() + " rhs " + m.rhs.get_str();
      }
      em.emit({{"equal", res.equal}, {"terms", std::to_string(res.lhs.size())}, {"mismatches", mism}}, human);
      return res.equal ? kSuccess : kCheckFailed;
    } else if (*facts) {
      const auto& f = monster::monster_facts();
      auto ord = monster::monster_order();
      std::string fact_text;
      json fact_json = json::array();
      for (const auto& [p, e] : f.order_factorization) {
        fact_text += (fact_text.empty() ? "" : " ") + std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : "");
        fact_json.push_back({{"prime", std::to_string(p)}, {"exponent", std::to_string(e)}});
      }
      std::string digits = std::to_string(str(ord).size());
      em.emit({{"order", str(ord)},
               {"digits", digits},
               {"factorization", fact_json},
               {"conjugacy_classes", std::to_string(f.conjugacy_classes)},
               {"distinct_mckay_thompson_series", std::to_string(f.distinct_mckay_thompson_series)},
               {"span_dimension", std::to_string(f.span_dimension)}},
              "order: " + str(ord) + "\ndigits: " + digits + "\nfactorization: " + fact_text +
                  "\nconjugacy_classes: " + std::to_string(f.conjugacy_classes) +
                  "\ndistinct_mckay_thompson_series: " + std::to_string(f.distinct_mckay_thompson_series) +
                  "\nspan_dimension: " + std::to_string(f.span_dimension));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kSuccess;
}

} // namespace moonshine::cli
