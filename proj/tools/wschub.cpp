// wschub: weighted Schubert calculus front end.
//
//   wschub <describe|restrict|multiply|chevalley|certify|reproduce>
//          --config <file> [--out json|text] [command args]
//
// Exit codes: 0 ok, 2 invalid config or arguments, 3 computation error or
// fixture mismatch, 4 negativity / certificate violation found.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "wschub/config_build.hpp"
#include "wschub/fixtures.hpp"
#include "wschub/positivity.hpp"
#include "wschub/schubert.hpp"

using json = nlohmann::ordered_json;
using namespace wschub;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::shared_ptr<const WeylGroup> group;
  WeightedConfig<Rational> cfg;
};

IVec to_ivec(const json& arr) {
  if (!arr.is_array()) throw ConfigError("expected an integer array");
  IVec v;
  for (const auto& x : arr) {
    if (!x.is_number_integer()) throw ConfigError("expected an integer array");
    v.push_back(x.get<long>());
  }
  return v;
}

Loaded load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }

  RootDatum datum;
  if (j.contains("preset")) {
    datum = build_root_datum(j.at("preset").get<std::string>());
  } else if (j.contains("datum")) {
    const json& d = j.at("datum");
    std::vector<IVec> roots, coroots;
    for (const auto& r : d.at("simple_roots")) roots.push_back(to_ivec(r));
    for (const auto& r : d.at("simple_coroots")) coroots.push_back(to_ivec(r));
    datum = build_root_datum(d.at("rank").get<int>(), roots, coroots);
  } else {
    throw ConfigError("config needs either \"preset\" or \"datum\"");
  }

  if (!j.contains("lambda") || !j.contains("chi"))
    throw ConfigError("config needs \"lambda\" and \"chi\"");
  IVec lambda = to_ivec(j.at("lambda"));
  IVec chi = to_ivec(j.at("chi"));

  auto group = std::make_shared<WeylGroup>(datum);
  if ((int)lambda.size() != datum.rank || (int)chi.size() != datum.rank)
    throw ConfigError("lambda/chi length must equal the datum rank");

  if (j.contains("parabolic")) {
    std::vector<int> J;
    for (const auto& x : j.at("parabolic")) J.push_back(x.get<int>());
    std::vector<int> expect = parabolic_for(*group, lambda);
    if (J != expect)
      throw ConfigError("parabolic must list exactly the simples orthogonal to lambda");
  }

  WeightedConfig<Rational> cfg = [&] {
    try {
      return numeric_config(group, lambda, chi);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("invalid configuration: ") + e.what());
    }
  }();
  if (!cfg.report().valid()) {
    const ConfigReport& r = cfg.report();
    std::string why = !r.lambda_dominant    ? "lambda is not dominant"
                      : !r.parabolic_matches ? "parabolic does not match lambda"
                                             : "some a_w vanishes";
    throw ConfigError("invalid configuration: " + why);
  }
  return {group, std::move(cfg)};
}

// Coset selectors: "pN" (position), "wN" (position, LG labels), "vN" (unique
// coset of cell dimension N), "top", "point", "{i,j}" (lambda image support),
// or a reduced word "s1.s2.s1" / "e" (1-based simple indices).
int resolve_coset(const WeightedConfig<Rational>& cfg, const std::string& tok) {
  const ParabolicCosets& P = cfg.P();
  auto parse_int = [&](const std::string& s) {
    size_t used = 0;
    int n = std::stoi(s, &used);
    if (used != s.size()) throw ConfigError("bad element selector: " + tok);
    return n;
  };
  if (tok == "top") return 0;
  if (tok == "point") return P.num_reps() - 1;
  if (tok.size() > 1 && (tok[0] == 'p' || tok[0] == 'w')) {
    int n = parse_int(tok.substr(1));
    if (n < 0 || n >= P.num_reps()) throw ConfigError("position out of range: " + tok);
    return n;
  }
  if (tok.size() > 1 && tok[0] == 'v') {
    int d = parse_int(tok.substr(1));
    int found = -1;
    for (int p = 0; p < P.num_reps(); ++p)
      if (P.cell_dim(p) == d) {
        if (found >= 0) throw ConfigError("cell dimension is ambiguous here: " + tok);
        found = p;
      }
    if (found < 0) throw ConfigError("no coset of cell dimension " + std::to_string(d));
    return found;
  }
  if (tok.size() > 1 && tok.front() == '{' && tok.back() == '}') {
    IVec target = cfg.lambda();
    // zero the coordinates moved by W, keep the rest (e.g. the C* weight)
    for (int i = 0; i < cfg.rank(); ++i) {
      bool moved = false;
      for (const IVec& r : cfg.W().datum().simple_roots) moved |= (r[i] != 0);
      if (moved) target[i] = 0;
    }
    std::stringstream ss(tok.substr(1, tok.size() - 2));
    std::string part;
    while (std::getline(ss, part, ',')) {
      int i = parse_int(part);
      if (i < 0 || i >= cfg.rank()) throw ConfigError("index out of range: " + tok);
      target[i] += 1;
    }
    for (int p = 0; p < P.num_reps(); ++p)
      if (cfg.W().act(P.rep(p), cfg.lambda()) == target) return p;
    throw ConfigError("no coset matches the lambda image for " + tok);
  }
  // reduced word
  std::vector<int> word;
  if (tok != "e") {
    std::stringstream ss(tok);
    std::string part;
    while (std::getline(ss, part, '.')) {
      if (part.empty() || part[0] != 's') throw ConfigError("bad element selector: " + tok);
      int i = parse_int(part.substr(1));
      if (i < 1 || i > cfg.W().datum().num_simple())
        throw ConfigError("simple index out of range: " + part);
      word.push_back(i - 1);
    }
  }
  return P.rep_pos(cfg.W().from_word(word));
}

IVec parse_vector(const WeightedConfig<Rational>& cfg, const std::string& s) {
  IVec v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(std::stol(part));
  if ((int)v.size() != cfg.rank())
    throw ConfigError("weight must have " + std::to_string(cfg.rank()) + " entries");
  return v;
}

std::string word_str(const WeylGroup& W, int elem) {
  const auto& word = W[elem].word;
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ".";
    s += "s" + std::to_string(word[i] + 1);
  }
  return s;
}

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json poly_json(const Poly<Rational>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"exponents", m}, {"coeff", rat_str(c)}});
  return terms;
}

json expansion_json(const WeightedConfig<Rational>& cfg, const SchubertExpansion<Rational>& e) {
  json out = json::array();
  for (int w = 0; w < (int)e.coeff.size(); ++w) {
    if (e.coeff[w].is_zero()) continue;
    out.push_back({{"position", w},
                   {"min_word", word_str(cfg.W(), cfg.P().min_rep(w))},
                   {"coeff", poly_json(e.coeff[w])},
                   {"coeff_str", e.coeff[w].str()}});
  }
  return out;
}

void print_expansion(const WeightedConfig<Rational>& cfg, const SchubertExpansion<Rational>& e,
                     std::ostream& os) {
  bool any = false;
  for (int w = 0; w < (int)e.coeff.size(); ++w) {
    if (e.coeff[w].is_zero()) continue;
    os << "  [" << w << "] " << word_str(cfg.W(), cfg.P().min_rep(w)) << " : "
       << e.coeff[w].str() << "\n";
    any = true;
  }
  if (!any) os << "  0\n";
}

json certificate_json(const WeightedConfig<Rational>& cfg, const Certificate& cert) {
  json terms = json::array();
  for (const CertTerm& t : cert.terms) {
    json factors = json::array();
    for (const CertFactor& f : t.factors)
      factors.push_back({{"root", f.root},
                         {"basepoint", word_str(cfg.W(), cfg.P().min_rep(f.x_pos))}});
    terms.push_back({{"coeff", rat_str(t.coeff)}, {"factors", factors}});
  }
  return {{"mode", cert.negative_mode ? "negative" : "positive"}, {"terms", terms}};
}

int cmd_describe(const Loaded& L, bool as_json) {
  const WeightedConfig<Rational>& cfg = L.cfg;
  const ParabolicCosets& P = cfg.P();
  ConfigReport rep = cfg.report();
  Int gchi = gcd(std::vector<Int>(cfg.chi_int().begin(), cfg.chi_int().end()));
  bool minuscule = is_minuscule(cfg.W(), cfg.lambda());

  json cosets = json::array();
  for (int p = 0; p < P.num_reps(); ++p) {
    json covers = json::array();
    for (const auto& cov : P.covers(p)) covers.push_back(cov.w_pos);
    json inv = json::array();
    for (int g : P.inversion_set_P(p)) inv.push_back(cfg.W().pos_root(g));
    cosets.push_back({{"position", p},
                      {"min_word", word_str(cfg.W(), P.min_rep(p))},
                      {"cell_dim", P.cell_dim(p)},
                      {"a_w", rat_str(cfg.a_elem(P.rep(p)))},
                      {"q_w", rep.all_aw_positive ? rat_str(cfg.q(p)) : "-"},
                      {"covers", covers},
                      {"inversions", inv}});
  }
  json out = {{"datum", cfg.W().datum().name},
              {"cosets", cosets},
              {"gcd_chi", rat_str(Rational(gchi))},
              {"minuscule", minuscule},
              {"chi_antidominant", rep.chi_antidominant},
              {"all_aw_positive", rep.all_aw_positive}};
  if (as_json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "datum: " << cfg.W().datum().name << "\n"
            << "gcd(chi) = " << gchi << ", minuscule lambda: " << (minuscule ? "yes" : "no")
            << ", chi antidominant: " << (rep.chi_antidominant ? "yes" : "no") << "\n"
            << "W^P (" << P.num_reps() << " cosets, descending cell dimension):\n";
  for (const auto& c : cosets) {
    std::cout << "  [" << c["position"] << "] " << c["min_word"].get<std::string>()
              << "  dim=" << c["cell_dim"] << "  a_w=" << c["a_w"].get<std::string>()
              << "  q_w=" << c["q_w"].get<std::string>() << "  covers:";
    for (const auto& x : c["covers"]) std::cout << " " << x;
    std::cout << "\n";
  }
  return 0;
}

int cmd_reproduce(const std::string& fixture, bool as_json) {
  std::vector<std::string> names =
      fixture.empty() ? fixture_names() : std::vector<std::string>{fixture};
  bool all_ok = true;
  json out = json::array();
  for (const std::string& n : names) {
    FixtureReport rep = run_fixture(n);
    for (const FixtureResult& r : rep) {
      all_ok = all_ok && r.pass;
      if (as_json) {
        out.push_back({{"fixture", n}, {"cell", r.name}, {"pass", r.pass},
                       {"detail", r.detail}});
      } else {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << n << ": " << r.name << "\n";
        if (!r.pass && !r.detail.empty()) std::cout << "      " << r.detail << "\n";
      }
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted Schubert calculus on flag variety quotients"};
  app.require_subcommand(1);

  std::string config_path, out_mode = "text";
  std::string arg_w, arg_x, arg_u, arg_v, arg_basis = "weighted";
  std::string arg_mu, arg_basepoint, arg_fixture;
  int arg_alpha = -1;

  auto add_common = [&](CLI::App* sub, bool need_config) {
    auto* opt = sub->add_option("--config", config_path, "JSON config file");
    if (need_config) opt->required();
    sub->add_option("--out", out_mode, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* c_desc = app.add_subcommand("describe", "list W^P, a_w, q_w, Hasse diagram");
  add_common(c_desc, true);

  CLI::App* c_restr = app.add_subcommand("restrict", "restriction of a Schubert class");
  add_common(c_restr, true);
  c_restr->add_option("--w", arg_w, "class coset")->required();
  c_restr->add_option("--x", arg_x, "fixed point coset")->required();
  c_restr->add_option("--basis", arg_basis, "weighted|plain")
      ->check(CLI::IsMember({"weighted", "plain"}));

  CLI::App* c_mult = app.add_subcommand("multiply", "structure constants of a product");
  add_common(c_mult, true);
  c_mult->add_option("--u", arg_u)->required();
  c_mult->add_option("--v", arg_v)->required();
  c_mult->add_option("--basis", arg_basis, "weighted|plain")
      ->check(CLI::IsMember({"weighted", "plain"}));

  CLI::App* c_chev = app.add_subcommand("chevalley", "closed-form Chevalley expansion");
  add_common(c_chev, true);
  c_chev->add_option("--v", arg_v)->required();
  c_chev->add_option("--alpha", arg_alpha, "simple index (1-based) for the divisor formula");
  c_chev->add_option("--mu", arg_mu, "comma-separated weight for scalar multiplication");

  CLI::App* c_cert = app.add_subcommand("certify", "positivity certificates for a product");
  add_common(c_cert, true);
  c_cert->add_option("--u", arg_u)->required();
  c_cert->add_option("--v", arg_v)->required();
  c_cert->add_option("--w", arg_w, "restrict output to one target coset");
  c_cert->add_option("--basepoint", arg_basepoint,
                     "also expand each coefficient in negative roots at this coset");

  CLI::App* c_repr = app.add_subcommand("reproduce", "re-check the worked examples");
  add_common(c_repr, false);
  c_repr->add_option("fixture", arg_fixture,
                     "wps | wps-p4-tables | gr24-table | lg24-tables (default: all)");

  CLI11_PARSE(app, argc, argv);
  bool as_json = (out_mode == "json");

  try {
    if (c_repr->parsed()) return cmd_reproduce(arg_fixture, as_json);

    Loaded L = load_config(config_path);
    SchubertCalc<Rational> calc(L.cfg);
    bool weighted = (arg_basis == "weighted");

    if (c_desc->parsed()) return cmd_describe(L, as_json);

    if (c_restr->parsed()) {
      int w = resolve_coset(L.cfg, arg_w), x = resolve_coset(L.cfg, arg_x);
      Poly<Rational> p = calc.restrict_at(w, x, weighted);
      if (as_json)
        std::cout << json{{"w", w}, {"x", x}, {"basis", arg_basis},
                          {"value", poly_json(p)}, {"value_str", p.str()}}
                         .dump(2)
                  << "\n";
      else
        std::cout << p.str() << "\n";
      return 0;
    }

    if (c_mult->parsed()) {
      int u = resolve_coset(L.cfg, arg_u), v = resolve_coset(L.cfg, arg_v);
      SchubertExpansion<Rational> e = calc.structure_constants(u, v, weighted);
      if (as_json)
        std::cout << json{{"u", u}, {"v", v}, {"basis", arg_basis},
                          {"expansion", expansion_json(L.cfg, e)}}
                         .dump(2)
                  << "\n";
      else
        print_expansion(L.cfg, e, std::cout);
      return 0;
    }

    if (c_chev->parsed()) {
      int v = resolve_coset(L.cfg, arg_v);
      SchubertExpansion<Rational> e;
      if (arg_alpha > 0) {
        e = calc.chevalley_divisor(arg_alpha - 1, v).general;
      } else if (!arg_mu.empty()) {
        e = calc.chevalley_mu(parse_vector(L.cfg, arg_mu), v);
      } else {
        throw ConfigError("chevalley needs --alpha or --mu");
      }
      if (as_json)
        std::cout << json{{"v", v}, {"expansion", expansion_json(L.cfg, e)}}.dump(2) << "\n";
      else
        print_expansion(L.cfg, e, std::cout);
      return 0;
    }

    if (c_cert->parsed()) {
      int u = resolve_coset(L.cfg, arg_u), v = resolve_coset(L.cfg, arg_v);
      IVec chi0 = central_cocharacter(*L.group, L.cfg.lambda());
      auto cfg0 = numeric_config(L.group, L.cfg.lambda(), chi0);
      SchubertCalc<Rational> classical(cfg0);
      ProductCertificates pc = certify_product(calc, classical, u, v);
      bool negativity = !pc.all_ok;

      json targets = json::array();
      int only_w = arg_w.empty() ? -1 : resolve_coset(L.cfg, arg_w);
      for (int w = 0; w < calc.npts(); ++w) {
        if (only_w >= 0 && w != only_w) continue;
        if (pc.coeffs.empty() || pc.coeffs[w].is_zero()) continue;
        json entry = {{"position", w},
                      {"min_word", word_str(L.cfg.W(), L.cfg.P().min_rep(w))},
                      {"coeff_str", pc.coeffs[w].str()},
                      {"certificate", certificate_json(L.cfg, pc.certs[w])}};
        if (!arg_basepoint.empty()) {
          int y = resolve_coset(L.cfg, arg_basepoint);
          NegrootExpansion<Rational> ne = negroot_expand_at(L.cfg, pc.coeffs[w], y);
          entry["negroot_at"] = arg_basepoint;
          entry["in_span"] = ne.in_span;
          entry["nonnegative"] = ne.nonnegative;
          entry["coords_str"] = ne.coords.str("b");
          if (!ne.nonnegative) negativity = true;
        }
        targets.push_back(entry);
      }
      json out = {{"u", u}, {"v", v}, {"verified", pc.all_ok},
                  {"diagnostic", pc.diagnostic}, {"targets", targets}};
      if (as_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "verified: " << (pc.all_ok ? "yes" : "no") << "\n";
        if (!pc.diagnostic.empty()) std::cout << "diagnostic: " << pc.diagnostic << "\n";
        for (const auto& t : targets) {
          std::cout << "[" << t["position"] << "] "
                    << t["min_word"].get<std::string>() << " : "
                    << t["coeff_str"].get<std::string>() << "\n";
          for (const auto& term : t["certificate"]["terms"]) {
            std::cout << "    + " << term["coeff"].get<std::string>();
            for (const auto& f : term["factors"]) {
              std::cout << " * wroot(" << json(f["root"]).dump() << " at "
                        << f["basepoint"].get<std::string>() << ")";
            }
            std::cout << "\n";
          }
          if (t.contains("nonnegative"))
            std::cout << "    at " << t["negroot_at"].get<std::string>() << ": "
                      << (t["nonnegative"].get<bool>() ? "nonnegative" : "NEGATIVE")
                      << "  " << t["coords_str"].get<std::string>() << "\n";
        }
      }
      return negativity ? 4 : 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
