#include "dls/classifier.hpp"

#include <algorithm>
#include <map>

#include "dls/factor.hpp"

namespace dls {

const char* case_name(CaseKind k) {
  switch (k) {
    case CaseKind::Irreducible: return "Irreducible";
    case CaseKind::CommonLeftFactor: return "CommonLeftFactor";
    case CaseKind::DicksonPair: return "DicksonPair";
    case CaseKind::ExceptionalPair: return "ExceptionalPair";
    case CaseKind::ExceptionalDegreeFlag: return "ExceptionalDegreeFlag";
    case CaseKind::Inconsistent: return "Inconsistent";
  }
  return "?";
}

namespace {

using LF = std::vector<std::pair<UniPoly, UniPoly>>;

LF by_left_degree(const UniPoly& f) {
  LF lf = left_factors(f);
  std::sort(lf.begin(), lf.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first < b.first;
  });
  return lf;
}

bool reducible(const BiFactorList& fl) { return !(fl.factors.size() == 1 && fl.factors[0].second == 1); }

UniPoly minus_quarter_d42(const NFElement& alpha) {
  const NumberField& K = alpha.field();
  return dickson(4, alpha * NFElement(K, 2)) * NFElement(K, mpq_class(-1, 4));
}

// hf = mu∘D_{4,alpha}∘nu, hg = mu∘(-1/4 D_{4,2alpha})∘lambda.
bool match_dickson(const UniPoly& hf, const UniPoly& hg, LinearMap& mu, NFElement& alpha, LinearMap& nu,
                   LinearMap& lambda) {
  const NumberField& K = hf.field();
  if (auto w = recognize_dickson(hf)) {
    mu = w->mu;
    alpha = w->alpha;
    nu = w->nu;
  } else if (auto p = recognize_power(hf)) {
    mu = p->mu;
    alpha = NFElement(K);
    nu = p->nu;
  } else {
    return false;
  }
  UniPoly target = apply_left(mu, minus_quarter_d42(alpha));
  auto r = linearly_related(hg, target, true);
  if (!r) return false;
  lambda = r->nu;
  return true;
}

std::vector<PairTag> tags_of_degree(int d) {
  if (d == 7) return {PairTag::Deg7_237, PairTag::Deg7_247};
  if (d == 13) return {PairTag::Deg13_2313};
  return {};
}

}  // namespace

Verdict classify(const UniPoly& f, const UniPoly& g) {
  check_same_field(f.field(), g.field());
  if (f.degree() < 2 || g.degree() < 2) throw Error(ErrorKind::PreconditionViolated, "classify needs degrees >= 2");
  const NumberField& K = f.field();
  Verdict v;
  v.field = K;
  v.oracle = factor_bi(separated(f, g));
  v.reducible = reducible(v.oracle);
  if (!v.reducible) return v;

  LF lf = by_left_degree(f), lg = by_left_degree(g);

  // (1) common left factor
  for (auto& [hf, f1] : lf)
    for (auto& [hg, g1] : lg) {
      if (hf.degree() != hg.degree()) continue;
      auto w = linearly_related(hg, hf, true);
      if (!w) continue;
      v.kind = CaseKind::CommonLeftFactor;
      v.h = hf;
      v.f1 = f1;
      v.g1 = compose(w->nu.poly(), g1);
      return v;
    }

  // (3) Dickson pair, both orders
  for (int order = 0; order < 2; ++order) {
    const LF& A = order ? lg : lf;
    const LF& B = order ? lf : lg;
    for (auto& [ha, a1] : A) {
      if (ha.degree() != 4) continue;
      for (auto& [hb, b1] : B) {
        if (hb.degree() != 4) continue;
        LinearMap mu, nu, lambda;
        NFElement alpha;
        if (!match_dickson(ha, hb, mu, alpha, nu, lambda)) continue;
        v.kind = CaseKind::DicksonPair;
        v.swapped = order == 1;
        v.mu = mu;
        v.alpha = alpha;
        v.f1 = compose(nu.poly(), a1);
        v.g1 = compose(lambda.poly(), b1);
        return v;
      }
    }
  }

  // (2) stored exceptional pairs, over the pair's field
  for (auto& [hf, f1] : lf)
    for (auto& [hg, g1] : lg) {
      if (hf.degree() != hg.degree()) continue;
      for (PairTag t : tags_of_degree(hf.degree())) {
        NamedPair p = exceptional_pair(t);
        const NumberField& L = p.field;
        if (!(K == L) && !K.is_rational()) continue;
        UniPoly a = hf.over(L), b = hg.over(L);
        for (int order = 0; order < 2; ++order) {
          const UniPoly& h1 = order ? p.h2 : p.h1;
          const UniPoly& h2 = order ? p.h1 : p.h2;
          for (auto& w : linearly_related_all(a, h1, false)) {
            auto r = linearly_related(b, apply_left(w.mu, h2), true);
            if (!r) continue;
            v.kind = CaseKind::ExceptionalPair;
            v.field = L;
            v.tag = t;
            v.swapped = order == 1;
            v.mu = w.mu;
            v.lambda = w.nu;
            v.f1 = f1.over(L);
            v.g1 = compose((w.nu.inverse() * r->nu).poly(), g1.over(L));
            return v;
          }
        }
      }
    }

  // flagged degrees
  for (auto& [hf, f1] : lf)
    for (auto& [hg, g1] : lg) {
      int d = hf.degree();
      if (d != hg.degree() || (d != 11 && d != 15 && d != 21 && d != 31)) continue;
      if (!reducible(factor_bi(separated(hf, hg)))) continue;
      v.kind = CaseKind::ExceptionalDegreeFlag;
      v.flag_degree = d;
      v.flag_f = hf;
      v.flag_g = hg;
      return v;
    }

  v.kind = CaseKind::Inconsistent;
  v.details = "reducible with no witness";
  return v;
}

bool verify_witness(const Verdict& v, const UniPoly& f0, const UniPoly& g0) {
  const NumberField& L = v.field;
  UniPoly f = f0.over(L), g = g0.over(L);
  switch (v.kind) {
    case CaseKind::Irreducible: return !v.reducible;
    case CaseKind::CommonLeftFactor: return compose(v.h, v.f1) == f && compose(v.h, v.g1) == g;
    case CaseKind::DicksonPair: {
      UniPoly a = compose(apply_left(v.mu, dickson(4, v.alpha)), v.f1);
      UniPoly b = compose(apply_left(v.mu, minus_quarter_d42(v.alpha)), v.g1);
      return v.swapped ? (a == g && b == f) : (a == f && b == g);
    }
    case CaseKind::ExceptionalPair: {
      NamedPair p = exceptional_pair(v.tag);
      const UniPoly& h1 = v.swapped ? p.h2 : p.h1;
      const UniPoly& h2 = v.swapped ? p.h1 : p.h2;
      UniPoly a = compose(apply_left(v.mu, apply_right(h1, v.lambda)), v.f1);
      UniPoly b = compose(apply_left(v.mu, apply_right(h2, v.lambda)), v.g1);
      return a == f && b == g;
    }
    case CaseKind::ExceptionalDegreeFlag:
      return v.reducible && reducible(factor_bi(separated(v.flag_f, v.flag_g)));
    case CaseKind::Inconsistent: return false;
  }
  return false;
}

std::vector<NumberField> extension_list() {
  std::vector<NumberField> out;
  auto push = [&](const NumberField& K) {
    if (K.is_rational()) return;
    for (auto& o : out)
      if (o == K) return;
    out.push_back(K);
  };
  push(nf_new({-2, 0, 1}, "r"));
  push(nf_new({1, 0, 1}, "i"));
  push(deg7_field());
  push(deg13_field());
  for (int d = 3; d <= 12; ++d) push(cos_field(d));
  std::stable_sort(out.begin(), out.end(), [](const NumberField& a, const NumberField& b) { return a.degree() < b.degree(); });
  return out;
}

GeometricVerdict classify_with_extensions(const UniPoly& f, const UniPoly& g) {
  GeometricVerdict gv{classify(f, g), {f.field().label()}};
  if (gv.verdict.reducible || !f.field().is_rational()) return gv;
  for (const NumberField& L : extension_list()) {
    gv.fields_tried.push_back(L.label() + " " + UniPoly(rationals(), L.minpoly()).str(L.gen()));
    Verdict v = classify(f.over(L), g.over(L));
    if (v.reducible) {
      gv.verdict = v;
      return gv;
    }
  }
  return gv;
}

namespace {

// h' (with cofactor c') is a left factor of h (cofactor c) iff c is a right factor of c'.
bool is_left_factor_of(const std::pair<UniPoly, UniPoly>& sub, const std::pair<UniPoly, UniPoly>& sup) {
  const UniPoly& cs = sub.second;
  const UniPoly& cp = sup.second;
  if (cs.degree() % cp.degree()) return false;
  if (cs.degree() == cp.degree()) return cs == cp;
  if (cp.degree() == 1) return true;
  auto rf = right_factor(cs, cp.degree());
  return rf && rf->second == cp;
}

}  // namespace

std::optional<MinRedCertificate> minimal_reducible_refinement(const UniPoly& f, const UniPoly& g) {
  check_same_field(f.field(), g.field());
  LF lf = by_left_degree(f), lg = by_left_degree(g);
  std::vector<std::pair<size_t, size_t>> order;
  for (size_t i = 0; i < lf.size(); ++i)
    for (size_t j = 0; j < lg.size(); ++j) order.push_back({i, j});
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    int da = lf[a.first].first.degree() + lg[a.second].first.degree();
    int db = lf[b.first].first.degree() + lg[b.second].first.degree();
    return da < db;
  });
  std::map<std::pair<size_t, size_t>, bool> red;
  for (auto [i, j] : order) {
    BiFactorList fl = factor_bi(separated(lf[i].first, lg[j].first));
    red[{i, j}] = reducible(fl);
    if (!red[{i, j}]) continue;
    MinRedCertificate c;
    c.f = lf[i].first;
    c.g = lg[j].first;
    c.factors = fl;
    for (size_t a = 0; a < lf.size(); ++a)
      for (size_t b = 0; b < lg.size(); ++b) {
        if (a == i && b == j) continue;
        if (!is_left_factor_of(lf[a], lf[i]) || !is_left_factor_of(lg[b], lg[j])) continue;
        auto it = red.find({a, b});
        bool r = it != red.end() ? it->second : reducible(factor_bi(separated(lf[a].first, lg[b].first)));
        c.subpairs.push_back({lf[a].first, lg[b].first, r});
      }
    c.equal_degrees = c.f.degree() == c.g.degree();
    c.branch_loci_equal = branch_loci_equal(c.f, c.g);
    return c;
  }
  return std::nullopt;
}

void CheckReport::add(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back(name + ": " + (pass ? "pass" : "fail") + (detail.empty() ? "" : " " + detail));
  if (!pass) ok = false;
}

CheckReport genus0_reduced_check(int case_id, const std::vector<int>& params) {
  CheckReport r;
  if (case_id == 1) {
    if (params.size() != 3) throw Error(ErrorKind::BadParameters, "case 1 needs (m, n, d)");
    int m = params[0], n = params[1], d = params[2];
    if (d < 3 || m % d || n % d) throw Error(ErrorKind::BadParameters, "d must be >= 3 and divide m and n");
    ChebyshevH ch = chebyshev_H(d);
    const NumberField& K = ch.field;
    BiPoly sub = substitute(ch.H, chebyshev(n / d, K), chebyshev(m / d, K));
    BiPoly plus = BiPoly::from_x(chebyshev(n, K)) + BiPoly::from_y(chebyshev(m, K));
    r.add("H(T_n/d(X),T_m/d(Y)) divides T_n(X)+T_m(Y) over " + K.label(), divides_bi(sub, plus));
    if (n <= 12 && m <= 12) r.add("factor irreducible", is_irreducible_bi(sub));
    return r;
  }
  if (case_id == 2) {
    if (params.empty()) throw Error(ErrorKind::BadParameters, "case 2 needs a family index");
    UniPoly P;
    if (params[0] == 1) {
      if (params.size() != 3) throw Error(ErrorKind::BadParameters, "P1 needs (a, b)");
      P = genus0_P1(params[1], params[2]);
    } else if (params[0] == 2) {
      P = genus0_P2();
    } else if (params[0] == 3) {
      P = genus0_P3();
    } else {
      throw Error(ErrorKind::BadParameters, "family index must be 1, 2 or 3");
    }
    const NumberField& K = P.field();
    BiPoly diag = BiPoly::from_x(UniPoly::x(K)) - BiPoly::from_y(UniPoly::x(K));
    auto q = divexact_bi(separated(P, P), diag);
    r.add("X-Y divides P(X)-P(Y)", q.has_value());
    if (q) r.add("nondiagonal part irreducible", is_irreducible_bi(*q), "degX=" + std::to_string(q->deg_x()));
    return r;
  }
  if (case_id == 3) {
    if (params.empty()) throw Error(ErrorKind::BadParameters, "case 3 needs 237, 247 or 2313");
    PairTag t = params[0] == 237 ? PairTag::Deg7_237
                : params[0] == 247 ? PairTag::Deg7_247
                : params[0] == 2313 ? PairTag::Deg13_2313
                                    : throw Error(ErrorKind::BadParameters, "unknown case-3 family");
    FamilyReport fr = verify_family(t);
    r.ok = fr.ok;
    r.checks = fr.checks;
    return r;
  }
  throw Error(ErrorKind::BadParameters, "case id must be 1, 2 or 3");
}

std::optional<std::string> mn_hypothesis_failure(const UniPoly& P, const UniPoly& Q) {
  check_same_field(P.field(), Q.field());
  int m = Q.degree(), n = P.degree();
  if (m < 2) return "deg(Q) >= 2";
  if (n < std::max(m, 3)) return "deg(P) >= max(deg(Q), 3)";
  if (!simply_branched(P)) return "P simply branched";
  if (!simply_branched(Q)) return "Q simply branched";
  if (m == n && linearly_related(P, Q, true)) return "P != Q o mu";
  if (n == 3) {
    UniPoly bp = squarefree_part(critical_value_poly(P)), bq = squarefree_part(critical_value_poly(Q));
    if (gcd(bp, bq).degree() > 0) return "branch points of P and Q disjoint";
  }
  return std::nullopt;
}

bool mn_problem_check(const UniPoly& P, const UniPoly& Q, const UniPoly& f, const UniPoly& g) {
  if (auto why = mn_hypothesis_failure(P, Q)) throw Error(ErrorKind::PreconditionViolated, *why);
  return is_irreducible_bi(separated(compose(Q, f), compose(P, g)));
}

}  // namespace dls
