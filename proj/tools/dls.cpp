#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>
#include <sstream>

#include "dls/classifier.hpp"
#include "dls/factor.hpp"
#include "dls/generators.hpp"
#include "dls/grouplab.hpp"
#include "dls/parse.hpp"
#include "dls/scan.hpp"

using json = nlohmann::json;
using namespace dls;

namespace {

enum Exit { kOk = 0, kReducible = 1, kInconsistent = 2, kInputError = 3 };

struct Globals {
  std::string field = "Q";
  bool json = false;
  int threads = 1;
  unsigned seed = 1;
};

NumberField field_of(const Globals& g) {
  if (g.field == "Q" || g.field.empty()) return rationals();
  return parse_field_decl(g.field.find(':') == std::string::npos ? "a: " + g.field : g.field);
}

// "S4", "A4", "C8", "D4", "AGL1(5)" or "n:(0 1 2)(3 4),(0 1)"; generators split by ',' or ';' after ')'.
PermGroup parse_group(const std::string& s) {
  auto num = [&](size_t from) {
    try {
      return std::stoi(s.substr(from));
    } catch (...) {
      throw Error(ErrorKind::Parse, "bad group '" + s + "'");
    }
  };
  if (s.rfind("AGL1(", 0) == 0) return agl1(num(5));
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    int n = num(0);
    std::vector<Perm> gens;
    std::string part;
    char last = 0;
    for (char ch : s.substr(colon + 1) + ";") {
      if ((ch == ';' || ch == ',') && last == ')') {
        gens.push_back(Perm(parse_cycles(part, n)));
        part.clear();
      } else {
        part += ch;
      }
      if (ch != ' ') last = ch;
    }
    if (part.find_first_not_of(" ;,") != std::string::npos) throw Error(ErrorKind::Parse, "bad generators in '" + s + "'");
    return PermGroup(n, gens);
  }
  if (s.empty()) throw Error(ErrorKind::Parse, "empty group");
  int n = num(1);
  switch (s[0]) {
    case 'S': return PermGroup::symmetric(n);
    case 'C': return PermGroup::cyclic(n);
    case 'D': return PermGroup::dihedral(n);
    case 'A': {
      std::vector<Perm> gens;
      for (int i = 2; i < n; ++i) gens.push_back(Perm::from_cycles("(0 1 " + std::to_string(i) + ")", n));
      return PermGroup(n, gens);
    }
  }
  throw Error(ErrorKind::Parse, "bad group '" + s + "'");
}

json gens_json(const PermGroup& G) {
  json a = json::array();
  for (auto& g : G.generators()) a.push_back(g.str());
  return a;
}

json factors_json(const FactorList& fl) {
  json a = json::array();
  for (auto& [p, m] : fl.factors) a.push_back({{"factor", p.str()}, {"multiplicity", m}});
  return a;
}

json verdict_json(const Verdict& v) {
  json j{{"reducible", v.reducible}, {"case", case_name(v.kind)}, {"field", v.field.label()}, {"swapped", v.swapped},
         {"details", v.details}};
  switch (v.kind) {
    case CaseKind::CommonLeftFactor:
      j["h"] = v.h.str();
      j["f1"] = v.f1.str();
      j["g1"] = v.g1.str();
      break;
    case CaseKind::DicksonPair:
      j["mu"] = v.mu.poly().str();
      j["alpha"] = v.alpha.str();
      j["f1"] = v.f1.str();
      j["g1"] = v.g1.str();
      break;
    case CaseKind::ExceptionalPair:
      j["tag"] = tag_name(v.tag);
      j["mu"] = v.mu.poly().str();
      j["lambda"] = v.lambda.poly().str();
      j["f1"] = v.f1.str();
      j["g1"] = v.g1.str();
      break;
    case CaseKind::ExceptionalDegreeFlag:
      j["flag_degree"] = v.flag_degree;
      break;
    default:
      break;
  }
  json fac = json::array();
  for (auto& [F, m] : v.oracle.factors) fac.push_back({{"factor", F.str()}, {"multiplicity", m}});
  j["oracle_factors"] = fac;
  return j;
}

json longs(const std::vector<long>& v) { return json(v); }

void emit(const Globals& g, const std::string& cmd, json result, const std::string& text) {
  if (g.json) {
    json out{{"schema_version", 1}, {"command", cmd}, {"result", std::move(result)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "}";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reducibility toolkit for separated polynomials f(X) - g(Y)"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals G;
  app.add_option("--field", G.field, "Coefficient field as a minimal polynomial in a, e.g. \"a^2+a+2\"");
  app.add_flag("--json", G.json, "JSON output");
  app.add_option("--threads", G.threads, "OpenMP threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", G.seed, "Seed for randomized generators");
  int code = kOk;

  std::string poly, fpoly, gpoly;
  auto* fu = app.add_subcommand("factor-uni", "Factor a univariate polynomial");
  fu->add_option("poly", poly)->required();
  fu->callback([&] {
    UniPoly f = parse_uni(poly, field_of(G));
    FactorList fl = factor(f);
    std::ostringstream os;
    os << fl.unit.str();
    for (auto& [p, m] : fl.factors) os << " * (" << p.str() << ")" << (m > 1 ? "^" + std::to_string(m) : "");
    os << "\n";
    emit(G, "factor-uni", {{"unit", fl.unit.str()}, {"factors", factors_json(fl)}}, os.str());
    code = fl.count_with_multiplicity() > 1 ? kReducible : kOk;
  });

  auto* fb = app.add_subcommand("factor-bi", "Factor a bivariate polynomial in X, Y");
  fb->add_option("poly", poly)->required();
  fb->callback([&] {
    BiFactorList fl = factor_bi(parse_bi(poly, field_of(G)));
    json fac = json::array();
    std::ostringstream os;
    os << fl.unit.str();
    int count = 0;
    for (auto& [F, m] : fl.factors) {
      fac.push_back({{"factor", F.str()}, {"multiplicity", m}});
      os << " * (" << F.str() << ")" << (m > 1 ? "^" + std::to_string(m) : "");
      count += m;
    }
    os << "\n";
    emit(G, "factor-bi", {{"unit", fl.unit.str()}, {"factors", fac}, {"x_degrees", fl.x_degrees()}}, os.str());
    code = count > 1 ? kReducible : kOk;
  });

  auto* de = app.add_subcommand("decompose", "All complete decompositions");
  de->add_option("poly", poly)->required();
  de->callback([&] {
    UniPoly f = parse_uni(poly, field_of(G));
    json arr = json::array();
    std::ostringstream os;
    for (auto& d : complete_decompositions(f)) {
      json fs = json::array();
      for (size_t i = 0; i < d.factors.size(); ++i) {
        fs.push_back(d.factors[i].str());
        os << (i ? " o " : "") << "(" << d.factors[i].str() << ")";
      }
      os << "\n";
      arr.push_back({{"factors", fs}, {"degrees", d.degrees()}});
    }
    emit(G, "decompose", {{"indecomposable", is_indecomposable(f)}, {"decompositions", arr}}, os.str());
  });

  std::string extensions = "auto";
  auto* cl = app.add_subcommand("classify", "Decide and explain reducibility of f(X) - g(Y)");
  cl->add_option("f", fpoly)->required();
  cl->add_option("g", gpoly)->required();
  cl->add_option("--extensions", extensions, "Also try a fixed list of number fields")
      ->check(CLI::IsMember({"auto", "none"}));
  cl->callback([&] {
    NumberField K = field_of(G);
    UniPoly f = parse_uni(fpoly, K), g = parse_uni(gpoly, K);
    json j;
    Verdict v;
    if (extensions == "auto") {
      GeometricVerdict gv = classify_with_extensions(f, g);
      v = gv.verdict;
      j = verdict_json(v);
      j["fields_tried"] = gv.fields_tried;
    } else {
      v = classify(f, g);
      j = verdict_json(v);
    }
    std::ostringstream os;
    os << case_name(v.kind) << " over " << v.field.label() << (v.swapped ? " (swapped)" : "") << "\n";
    if (!v.details.empty()) os << v.details << "\n";
    emit(G, "classify", j, os.str());
    code = v.kind == CaseKind::Inconsistent ? kInconsistent : v.reducible ? kReducible : kOk;
  });

  std::string tag;
  auto* fam = app.add_subcommand("families", "Stored reducible pairs");
  fam->require_subcommand(1);
  auto* fe = fam->add_subcommand("emit", "Print a stored pair");
  fe->add_option("tag", tag, "Deg7_237, Deg7_247, Deg13_2313 or Dickson4")->required();
  fe->callback([&] {
    PairTag t = parse_tag(tag);
    NamedPair p = t == PairTag::Dickson4 ? dickson_pair(NFElement(rationals(), 1)) : exceptional_pair(t);
    std::string fld = UniPoly(rationals(), p.field.minpoly()).str(p.field.gen());
    emit(G, "families emit",
         {{"tag", tag_name(t)}, {"field", fld}, {"h1", p.h1.str()}, {"h2", p.h2.str()}, {"gamma", p.gamma.str()}},
         "field: " + fld + "\nh1 = " + p.h1.str() + "\nh2 = " + p.h2.str() + "\n");
  });
  auto* fv = fam->add_subcommand("verify", "Check the stored identities of a pair");
  fv->add_option("tag", tag)->required();
  fv->callback([&] {
    FamilyReport r = verify_family(parse_tag(tag));
    std::ostringstream os;
    for (auto& c : r.checks) os << c << "\n";
    emit(G, "families verify", {{"ok", r.ok}, {"checks", r.checks}}, os.str());
    code = r.ok ? kOk : kInconsistent;
  });

  auto* grp = app.add_subcommand("group", "Permutation group tools");
  grp->require_subcommand(1);
  std::string ga, gb, gc, sigma, member, action = "imprimitive";
  int q = 0, d = 0;
  auto* gbas = grp->add_subcommand("basics", "Order, orbits, blocks, solvability");
  gbas->add_option("group", ga, "S4, C8, D4, A5, AGL1(5) or n:(0 1 2),(0 1)")->required();
  gbas->add_option("--contains", member, "Membership test, cycle notation");
  gbas->callback([&] {
    PermGroup H = parse_group(ga);
    json orbits = H.orbits();
    json series = json::array();
    for (auto& s : H.derived_series()) series.push_back(s.order());
    json j{{"degree", H.degree()},      {"order", H.order()},          {"orbits", orbits},
           {"transitive", H.is_transitive()}, {"solvable", H.is_solvable()}, {"derived_series_orders", series}};
    std::ostringstream os;
    os << "degree " << H.degree() << ", order " << H.order() << ", " << (H.is_transitive() ? "transitive" : "intransitive")
       << ", " << (H.is_solvable() ? "solvable" : "not solvable");
    if (H.is_transitive()) {
      j["primitive"] = H.is_primitive();
      j["blocks"] = H.blocks();
      j["block_systems"] = H.block_systems();
      os << ", " << (H.is_primitive() ? "primitive" : "imprimitive");
    }
    if (!member.empty()) {
      bool in = H.contains(Perm(parse_cycles(member, H.degree())));
      j["contains"] = in;
      os << ", contains " << member << ": " << (in ? "yes" : "no");
    }
    os << "\n";
    emit(G, "group basics", j, os.str());
  });

  auto* gw = grp->add_subcommand("wreath", "Wreath product A wr B");
  gw->add_option("A", ga)->required();
  gw->add_option("B", gb)->required();
  gw->add_option("--action", action)->check(CLI::IsMember({"imprimitive", "product"}));
  gw->callback([&] {
    PermGroup W = wreath(parse_group(ga), parse_group(gb),
                         action == "product" ? WreathAction::Product : WreathAction::Imprimitive);
    emit(G, "group wreath", {{"degree", W.degree()}, {"order", W.order()}, {"generators", gens_json(W)}},
         "degree " + std::to_string(W.degree()) + ", order " + std::to_string(W.order()) + "\n");
  });

  auto* gi = grp->add_subcommand("verify-index", "Index of N_q in G_q inside AGL1(q) wr S_d");
  gi->add_option("G", ga)->required();
  gi->add_option("N", gb)->required();
  gi->add_option("sigma", sigma)->required();
  gi->add_option("--q", q)->required();
  gi->add_option("--d", d)->required();
  gi->callback([&] {
    PermGroup Gg = parse_group(ga), N = parse_group(gb);
    IndexReport r = verify_index_lemma(Gg, N, Perm(parse_cycles(sigma, Gg.degree())), q, d);
    std::ostringstream os;
    for (auto& c : r.checks) os << c << "\n";
    emit(G, "group verify-index",
         {{"ok", r.ok}, {"gq", r.gq}, {"nq", r.nq}, {"index", r.index}, {"full_cycle_case", r.full_cycle_case},
          {"checks", r.checks}},
         os.str());
    code = r.ok ? kOk : kInconsistent;
  });

  auto* gn = grp->add_subcommand("nilpclass", "Nilpotency class of a p-group");
  gn->add_option("group", ga)->required();
  gn->callback([&] {
    int c = nilpotency_class(parse_group(ga));
    emit(G, "group nilpclass", {{"class", c}}, "class " + std::to_string(c) + "\n");
  });

  bool run_scan = false;
  auto* ge = grp->add_subcommand("enum8", "Subgroups of S8 containing an 8-cycle, up to conjugacy");
  ge->add_flag("--scan", run_scan, "Also run the two-action minimal reducibility scan");
  ge->callback([&] {
    auto groups = enumerate_deg8_full_cycle(G.threads);
    json arr = json::array();
    std::ostringstream os;
    for (auto& g : groups) {
      arr.push_back({{"order", g.order},
                     {"block_sizes", g.block_sizes},
                     {"solvable", g.solvable},
                     {"primitive", g.primitive},
                     {"abelianization", g.abelianization},
                     {"generators", gens_json(g.group)}});
      os << g.fingerprint() << "\n";
    }
    json j{{"count", groups.size()}, {"groups", arr}};
    if (run_scan) {
      auto r = deg8_minimal_reducibility_scan(groups, G.threads);
      j["scan"] = {{"groups_scanned", r.groups_scanned},
                   {"configurations", r.configurations},
                   {"reducible", r.reducible},
                   {"survivors", r.survivors},
                   {"survivor_details", r.survivor_details}};
      os << "scan: " << r.groups_scanned << " groups, " << r.configurations << " configurations, " << r.survivors
         << " survivors\n";
      if (r.survivors) code = kReducible;
    }
    emit(G, "group enum8", j, os.str());
  });

  auto* gt = grp->add_subcommand("two-action", "Is the point stabilizer H1 intransitive on G/H2?");
  gt->add_option("G", ga)->required();
  gt->add_option("H1", gb)->required();
  gt->add_option("H2", gc)->required();
  gt->callback([&] {
    bool red = two_action_reducibility(parse_group(ga), parse_group(gb), parse_group(gc));
    emit(G, "group two-action", {{"reducible", red}}, red ? "reducible\n" : "irreducible\n");
    code = red ? kReducible : kOk;
  });

  long N = 100;
  int iterates = 2;
  auto* sc = app.add_subcommand("scan", "Integers a in [-N, N] with f(X) - a reducible");
  sc->add_option("poly", poly)->required();
  sc->add_option("--N", N)->check(CLI::PositiveNumber);
  sc->callback([&] {
    ResidualReport r = residual_analysis(parse_uni(poly, rationals()), N, G.threads);
    json pred = json::array();
    for (auto& p : r.scan.predicted) pred.push_back({{"a", p.a}, {"source", p.source}});
    std::ostringstream os;
    os << "reducible: " << join(r.scan.reducible_a) << "\nresidual: " << join(r.residual) << "\n";
    for (auto& n : r.notes) os << n << "\n";
    emit(G, "scan",
         {{"N", N},
          {"reducible", longs(r.scan.reducible_a)},
          {"predicted", pred},
          {"residual", longs(r.residual)},
          {"degree_2_or_4_factor", r.degree_2_or_4_factor},
          {"degree5_nonsolvable", r.degree5_nonsolvable},
          {"notes", r.notes},
          {"factorizations", r.scan.factorizations},
          {"seconds", r.scan.seconds}},
         os.str());
    code = r.residual.empty() ? kOk : kReducible;
  });

  auto* st = app.add_subcommand("stability", "Newly reducible fibers of the n-th iterate");
  st->add_option("poly", poly)->required();
  st->add_option("--n", iterates)->check(CLI::Range(2, 16));
  st->add_option("--N", N)->check(CLI::PositiveNumber);
  st->callback([&] {
    StabilityReport r = stability_scan(parse_uni(poly, rationals()), iterates, N, G.threads);
    emit(G, "stability",
         {{"iterate", r.iterate.str()},
          {"red_f", longs(r.red_f)},
          {"red_iterate", longs(r.red_iterate)},
          {"difference", longs(r.difference)}},
         "difference: " + join(r.difference) + "\n");
    code = r.difference.empty() ? kOk : kReducible;
  });

  std::vector<std::string> mn;
  int random_count = 0;
  auto* mc = app.add_subcommand("mn-check", "Irreducibility of Q(f(X)) - P(g(Y))");
  mc->add_option("polys", mn, "P Q f g")->expected(0, 4);
  mc->add_option("--random", random_count, "Check this many random instances instead");
  mc->callback([&] {
    std::vector<gen::MNInstance> inst;
    if (random_count > 0) {
      std::mt19937 rng(G.seed);
      for (int i = 0; i < random_count; ++i) inst.push_back(gen::random_mn_instance(rng));
    } else {
      if (mn.size() != 4) throw Error(ErrorKind::BadParameters, "mn-check needs P Q f g");
      NumberField K = field_of(G);
      inst.push_back({parse_uni(mn[0], K), parse_uni(mn[1], K), parse_uni(mn[2], K), parse_uni(mn[3], K)});
    }
    json arr = json::array();
    std::ostringstream os;
    bool all = true;
    for (auto& x : inst) {
      bool ok = mn_problem_check(x.P, x.Q, x.f, x.g);
      all = all && ok;
      arr.push_back({{"P", x.P.str()}, {"Q", x.Q.str()}, {"f", x.f.str()}, {"g", x.g.str()}, {"irreducible", ok}});
      os << (ok ? "irreducible" : "REDUCIBLE") << ": P=" << x.P.str() << " Q=" << x.Q.str() << " f=" << x.f.str()
         << " g=" << x.g.str() << "\n";
    }
    emit(G, "mn-check", {{"all_irreducible", all}, {"instances", arr}}, os.str());
    code = all ? kOk : kReducible;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  } catch (const Error& e) {
    if (G.json)
      std::cout << json{{"schema_version", 1}, {"error", e.what()}}.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return code;
}
