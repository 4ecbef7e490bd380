#include "dls/grouplab.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "dls/qpoly.hpp"
#include "dls/zfactor.hpp"

namespace dls {

PermGroup wreath(const PermGroup& A, const PermGroup& B, WreathAction action, int max_points) {
  int m = A.degree(), d = B.degree();
  std::vector<Perm> gens;
  if (action == WreathAction::Imprimitive) {
    int n = m * d;
    for (int i = 0; i < d; ++i)
      for (auto& a : A.generators()) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (int j = 0; j < m; ++j) img[i * m + j] = i * m + a[j];
        gens.push_back(Perm(img));
      }
    for (auto& b : B.generators()) {
      std::vector<int> img(n);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < m; ++j) img[i * m + j] = b[i] * m + j;
      gens.push_back(Perm(img));
    }
    return PermGroup(n, gens);
  }
  double npts = std::pow(static_cast<double>(m), d);
  if (npts > max_points) throw Error(ErrorKind::SizeLimit, "product action has too many points");
  int n = static_cast<int>(npts);
  auto digits = [&](int x) {
    std::vector<int> v(d);
    for (int i = 0; i < d; ++i, x /= m) v[i] = x % m;
    return v;
  };
  auto index = [&](const std::vector<int>& v) {
    int x = 0;
    for (int i = d; i-- > 0;) x = x * m + v[i];
    return x;
  };
  for (int i = 0; i < d; ++i)
    for (auto& a : A.generators()) {
      std::vector<int> img(n);
      for (int x = 0; x < n; ++x) {
        auto v = digits(x);
        v[i] = a[v[i]];
        img[x] = index(v);
      }
      gens.push_back(Perm(img));
    }
  for (auto& b : B.generators()) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) {
      auto v = digits(x), w = v;
      for (int i = 0; i < d; ++i) w[b[i]] = v[i];
      img[x] = index(w);
    }
    gens.push_back(Perm(img));
  }
  return PermGroup(n, gens);
}

namespace {

void check_invariant(const PermGroup& K, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> which(K.degree(), -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) which[x] = static_cast<int>(b);
  for (int x = 0; x < K.degree(); ++x)
    if (which[x] < 0) throw Error(ErrorKind::NotInvariant, "partition does not cover every point");
  for (auto& g : K.generators())
    for (auto& B : blocks)
      for (int x : B)
        if (which[g[x]] != which[g[B[0]]]) throw Error(ErrorKind::NotInvariant, "partition is not preserved");
}

}  // namespace

bool is_diagonal_subdirect(const PermGroup& K, const std::vector<std::vector<int>>& blocks) {
  check_invariant(K, blocks);
  for (auto& B : blocks)
    if (!K.pointwise_stabilizer(B).is_trivial()) return false;
  return true;
}

ElemAbelianModule ElemAbelianModule::span(int q, int dim, const std::vector<std::vector<int>>& vs) {
  ElemAbelianModule M;
  M.q = q;
  M.dim = dim;
  auto inv = [q](int a) {
    for (int x = 1; x < q; ++x)
      if (a * x % q == 1) return x;
    return 0;
  };
  std::vector<std::vector<int>> rows;
  for (auto v : vs) {
    for (auto& x : v) x = ((x % q) + q) % q;
    rows.push_back(v);
  }
  int col = 0;
  for (size_t r = 0; r < rows.size() && col < dim; ++col) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    int s = inv(rows[r][col]);
    for (auto& x : rows[r]) x = x * s % q;
    for (size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][col] == 0) continue;
      int c = rows[o][col];
      for (int k = 0; k < dim; ++k) rows[o][k] = ((rows[o][k] - c * rows[r][k]) % q + q) % q;
    }
    ++r;
  }
  for (auto& r : rows)
    if (std::any_of(r.begin(), r.end(), [](int x) { return x != 0; })) M.basis.push_back(r);
  return M;
}

uint64_t ElemAbelianModule::size() const {
  uint64_t s = 1;
  for (int i = 0; i < rank(); ++i) s *= q;
  return s;
}

bool ElemAbelianModule::contains(const std::vector<int>& v0) const {
  if (static_cast<int>(v0.size()) != dim) return false;
  std::vector<int> v = v0;
  for (auto& x : v) x = ((x % q) + q) % q;
  for (auto& b : basis) {
    int col = 0;
    while (b[col] == 0) ++col;
    int c = v[col];
    if (c == 0) continue;
    for (int k = 0; k < dim; ++k) v[k] = ((v[k] - c * b[k]) % q + q) % q;
  }
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::vector<std::vector<int>> ElemAbelianModule::elements() const {
  std::vector<std::vector<int>> out{std::vector<int>(dim, 0)};
  for (auto& b : basis) {
    std::vector<std::vector<int>> next;
    for (auto& v : out)
      for (int c = 0; c < q; ++c) {
        auto w = v;
        for (int k = 0; k < dim; ++k) w[k] = (w[k] + c * b[k]) % q;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

bool ElemAbelianModule::closed_under_action() const {
  if (!acting) return true;
  for (auto& g : acting->generators())
    for (auto& b : basis) {
      std::vector<int> w(dim);
      for (int i = 0; i < dim; ++i) w[g[i]] = b[i];
      if (!contains(w)) return false;
    }
  return true;
}

ElemAbelianModule augmentation_module(int d, int q) {
  if (d < 1 || q < 2) throw Error(ErrorKind::BadParameters, "need d >= 1 and q prime");
  std::vector<std::vector<int>> vs;
  for (int i = 0; i + 1 < d; ++i) {
    std::vector<int> v(d, 0);
    v[i] = 1;
    v[d - 1] = q - 1;
    vs.push_back(v);
  }
  ElemAbelianModule M = ElemAbelianModule::span(q, d, vs);
  M.acting = PermGroup::symmetric(d);
  return M;
}

PermGroup agl1(int q) {
  std::vector<int> t(q), m(q);
  int g = 1;
  for (int c = 2; c < q; ++c) {
    int o = 1, x = c;
    while (x != 1) {
      x = x * c % q;
      ++o;
    }
    if (o == q - 1) {
      g = c;
      break;
    }
  }
  for (int x = 0; x < q; ++x) {
    t[x] = (x + 1) % q;
    m[x] = x * g % q;
  }
  return PermGroup(q, {Perm(t), Perm(m)});
}

Perm affine_wreath_element(int q, const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& pi) {
  int d = static_cast<int>(pi.size());
  std::vector<int> img(q * d);
  for (int i = 0; i < d; ++i)
    for (int x = 0; x < q; ++x) img[i * q + x] = pi[i] * q + ((a[i] * x + b[i]) % q + q) % q;
  return Perm(img);
}

Perm base_translation(int q, const std::vector<int>& t) {
  int d = static_cast<int>(t.size());
  return affine_wreath_element(q, std::vector<int>(d, 1), t, [d] {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }());
}

namespace {

// Translation by v (length r*n) on blocks of size p^r; for r = 2 the points of a block are bit pairs.
Perm translation_perm(int p, int r, const std::vector<int>& v) {
  int bs = r == 1 ? p : 4;
  int n = static_cast<int>(v.size()) / r;
  std::vector<int> img(bs * n);
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < bs; ++x)
      img[i * bs + x] = i * bs + (r == 1 ? (x + v[i]) % p : (x ^ (v[2 * i] + 2 * v[2 * i + 1])));
  return Perm(img);
}

std::vector<std::vector<int>> all_vectors(int p, int len, uint64_t limit) {
  uint64_t total = 1;
  for (int i = 0; i < len; ++i) {
    total *= p;
    if (total > limit) throw Error(ErrorKind::SizeLimit, "base group too large to enumerate");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> v(len, 0);
  for (uint64_t k = 0; k < total; ++k) {
    out.push_back(v);
    for (int i = 0; i < len; ++i) {
      if (++v[i] < p) break;
      v[i] = 0;
    }
  }
  return out;
}

PermGroup restrict_to(const PermGroup& G, const std::vector<int>& block) {
  std::vector<int> local(G.degree(), -1);
  for (size_t i = 0; i < block.size(); ++i) local[block[i]] = static_cast<int>(i);
  std::vector<Perm> gens;
  for (auto& g : G.generators()) {
    std::vector<int> img(block.size());
    for (size_t i = 0; i < block.size(); ++i) img[i] = local[g[block[i]]];
    gens.push_back(Perm(img));
  }
  return PermGroup(static_cast<int>(block.size()), gens);
}

bool is_affine_on_block(const Perm& g, int q, int i, int* target) {
  int j = g[i * q] / q;
  int b = g[i * q] - j * q;
  int a = ((g[i * q + 1] - j * q - b) % q + q) % q;
  if (a == 0) return false;
  for (int x = 0; x < q; ++x)
    if (g[i * q + x] != j * q + (a * x + b) % q) return false;
  if (target) *target = j;
  return true;
}

}  // namespace

SocleResult socle_solvable(const PermGroup& K, SocleContext ctx, int q) {
  int r = ctx == SocleContext::AGL1 ? 1 : 2;
  int p = ctx == SocleContext::AGL1 ? q : 2;
  int bs = ctx == SocleContext::AGL1 ? q : 4;
  if (K.degree() % bs) throw Error(ErrorKind::HypothesisFailed, "degree is not a multiple of the block size");
  int n = K.degree() / bs;
  for (auto& g : K.generators())
    for (int i = 0; i < n; ++i) {
      int j = -1;
      if (ctx == SocleContext::AGL1) {
        if (!is_affine_on_block(g, q, i, &j)) throw Error(ErrorKind::HypothesisFailed, "generator is not affine on a block");
      } else {
        j = g[i * bs] / bs;
        for (int x = 0; x < bs; ++x)
          if (g[i * bs + x] / bs != j) throw Error(ErrorKind::HypothesisFailed, "generator does not preserve blocks");
      }
      if (j != i) throw Error(ErrorKind::HypothesisFailed, "K must fix every block");
    }
  for (int i = 0; i < n; ++i) {
    std::vector<int> block(bs);
    std::iota(block.begin(), block.end(), i * bs);
    PermGroup proj = restrict_to(K, block);
    bool ok;
    if (ctx == SocleContext::AGL1) {
      std::vector<int> t(q);
      for (int x = 0; x < q; ++x) t[x] = (x + 1) % q;
      ok = proj.contains(Perm(t));
    } else {
      ok = proj.contains(Perm::from_cycles("(1 2 3)", 4)) && proj.contains(Perm::from_cycles("(0 1)(2 3)", 4));
    }
    if (!ok)
      throw Error(ErrorKind::HypothesisFailed, std::string("projection to block ") + std::to_string(i) +
                                                   (ctx == SocleContext::AGL1 ? " misses C_q" : " misses A_4"));
  }
  std::vector<std::vector<int>> in;
  for (auto& v : all_vectors(p, r * n, 1000000))
    if (K.contains(translation_perm(p, r, v))) in.push_back(v);
  ElemAbelianModule M = ElemAbelianModule::span(p, r * n, in);
  std::vector<Perm> gens;
  for (auto& b : M.basis) gens.push_back(translation_perm(p, r, b));
  return {M, PermGroup(K.degree(), gens)};
}

IndexReport verify_index_lemma(const PermGroup& G, const PermGroup& N, const Perm& sigma, int q, int d) {
  auto fail = [](const std::string& m) { throw Error(ErrorKind::HypothesisFailed, m); };
  if (G.degree() != q * d || N.degree() != q * d || sigma.degree() != q * d) fail("degrees must equal q*d");
  for (auto& g : G.generators())
    for (int i = 0; i < d; ++i)
      if (!is_affine_on_block(g, q, i, nullptr)) fail("G is not inside AGL_1(q) wr S_d");
  if (!N.is_normal_in(G)) fail("N is not normal in G");
  if (!N.contains(sigma)) fail("sigma is not in N");
  std::vector<int> blk(d);
  for (int i = 0; i < d; ++i) blk[i] = sigma[i * q] / q;
  int len = 1;
  for (int i = blk[0]; i != 0; i = blk[i]) ++len;
  if (len != d) fail("sigma does not map to a d-cycle");
  Perm sd = pow(sigma, d);
  std::vector<int> t(d);
  for (int i = 0; i < d; ++i) t[i] = ((sd[i * q] - i * q) % q + q) % q;
  if (sd != base_translation(q, t)) fail("sigma^d is not in C_q^d");

  IndexReport rep;
  std::vector<Perm> gq, nq;
  for (auto& v : all_vectors(q, d, 1000000)) {
    Perm x = base_translation(q, v);
    if (G.contains(x)) {
      ++rep.gq;
      if (N.contains(x)) ++rep.nq;
    }
  }
  rep.index = rep.gq / rep.nq;
  bool divides = q % rep.index == 0;
  rep.checks.push_back("[G_q:N_q] = " + std::to_string(rep.index) + (divides ? " divides " : " does not divide ") +
                       std::to_string(q));
  rep.ok = divides;
  rep.full_cycle_case = sigma.cycle_type() == std::vector<int>{q * d} && std::gcd(q, d) == 1;
  if (rep.full_cycle_case) {
    bool eq = rep.gq == rep.nq;
    rep.checks.push_back(std::string("qd-cycle with (d,q)=1: G_q ") + (eq ? "=" : "!=") + " N_q");
    rep.ok = rep.ok && eq;
  }
  return rep;
}

int nilpotency_class(const PermGroup& Q) {
  uint64_t o = Q.order();
  if (o == 1) return 0;
  int p = 2;
  while (o % p) ++p;
  if (!is_p_group(Q, p)) throw Error(ErrorKind::NotPGroup, "order " + std::to_string(o) + " is not a prime power");
  return static_cast<int>(lower_central_series(Q).size()) - 1;
}

namespace {

// Product of the minimal normal subgroups, from normal closures of prime-order elements.
PermGroup brute_socle(const PermGroup& G) {
  std::vector<PermGroup> cands;
  for (const Perm& x : G.elements()) {
    long o = x.order();
    bool prime = o > 1;
    for (long k = 2; k * k <= o; ++k)
      if (o % k == 0) prime = false;
    if (!prime) continue;
    bool seen = false;
    for (auto& c : cands)
      if (c.contains(x)) seen = true;
    if (seen) continue;
    cands.push_back(normal_closure(G, {x}));
  }
  std::vector<Perm> gens;
  for (auto& c : cands) {
    bool minimal = true;
    for (auto& d : cands)
      if (d.order() < c.order() && d.is_subgroup_of(c)) minimal = false;
    if (minimal) gens.insert(gens.end(), c.generators().begin(), c.generators().end());
  }
  return PermGroup(G.degree(), gens);
}

}  // namespace

LargenessReport largeness_check(const PermGroup& G2, int p, int q) {
  if (G2.degree() != p * q) throw Error(ErrorKind::BadParameters, "degree must be p*q");
  if (!G2.is_transitive()) throw Error(ErrorKind::NoBlocks, "group is not transitive");
  std::vector<std::vector<int>> sys;
  for (auto& s : G2.block_systems())
    if (static_cast<int>(s[0].size()) == q) {
      sys = s;
      break;
    }
  if (sys.empty()) throw Error(ErrorKind::NoBlocks, "no block system with blocks of size " + std::to_string(q));
  std::vector<int> which(G2.degree());
  for (size_t b = 0; b < sys.size(); ++b)
    for (int x : sys[b]) which[x] = static_cast<int>(b);

  LargenessReport rep;
  std::vector<Perm> elems = G2.elements();
  std::vector<Perm> stab, to_block(p);
  std::vector<char> have(p, 0);
  for (const Perm& g : elems) {
    bool fixes_all = true;
    for (int b = 0; b < p; ++b)
      if (which[g[sys[b][0]]] != b) fixes_all = false;
    if (fixes_all) ++rep.kernel_order;
    int t = which[g[sys[0][0]]];
    if (t == 0) stab.push_back(g);
    if (!have[t]) {
      have[t] = 1;
      to_block[t] = g;
    }
  }
  PermGroup mon_g = restrict_to(PermGroup(G2.degree(), stab), sys[0]);
  PermGroup soc = brute_socle(mon_g);
  rep.socle_order = soc.order();

  // soc acting on block b, identity elsewhere
  auto lift = [&](const Perm& s, int b) {
    std::vector<int> img(G2.degree());
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < q; ++i) img[sys[0][i]] = sys[0][s[i]];
    Perm x(img);
    return conjugate(to_block[b], x);
  };
  rep.full_power = true;
  for (int b = 0; b < p; ++b)
    for (auto& s : soc.generators())
      if (!G2.contains(lift(s, b))) rep.full_power = false;

  std::vector<Perm> soc_elems = soc.elements();
  uint64_t count = 0;
  std::vector<size_t> idx(p, 0);
  while (true) {
    Perm x(G2.degree());
    for (int b = 0; b < p; ++b) x = x * lift(soc_elems[idx[b]], b);
    if (G2.contains(x)) ++count;
    int b = 0;
    while (b < p && ++idx[b] == soc_elems.size()) idx[b++] = 0;
    if (b == p) break;
  }
  uint64_t so = rep.socle_order, c = count;
  while (c > 1 && so > 1) {
    uint64_t pr = 2;
    while (so % pr) ++pr;
    c /= pr;
    ++rep.kernel_socle_rank;
  }
  bool cyclic = false;
  for (auto& s : soc_elems)
    if (static_cast<uint64_t>(s.order()) == rep.socle_order) cyclic = true;
  uint64_t need = 1;
  for (int i = 0; i + 1 < p; ++i) need *= rep.socle_order;
  rep.cyclic_corank1 = cyclic && count >= need;
  rep.large = rep.full_power || rep.cyclic_corank1;

  uint64_t o = G2.order();
  if (G2.degree() == 8 && o == 48 && commutator_subgroup(G2, G2).order() == 24) rep.exception = "GL2(3)";
  if (G2.degree() == 12 && o == 72 && commutator_subgroup(G2, G2).order() == 12 && center(G2).order() == 3)
    rep.exception = "C3xS4";
  return rep;
}

bool two_action_reducibility(const PermGroup& G, const PermGroup& H1, const PermGroup& H2) {
  uint64_t i = intersection(H1, H2).order();
  return H1.order() * H2.order() < G.order() * i;
}

std::string Deg8Group::fingerprint() const {
  std::ostringstream os;
  os << "order=" << order << " blocks=" << block_systems << " sizes={";
  for (size_t i = 0; i < block_sizes.size(); ++i) os << (i ? "," : "") << block_sizes[i];
  os << "} solvable=" << solvable << " primitive=" << primitive << " ab=" << abelianization;
  return os.str();
}

namespace {

constexpr int kS8 = 40320;
using P8 = std::array<uint8_t, 8>;

int rank8(const P8& p) {
  static const int fact[8] = {5040, 720, 120, 24, 6, 2, 1, 1};
  int r = 0;
  for (int i = 0; i < 8; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < 8; ++j) smaller += p[j] < p[i];
    r += smaller * fact[i];
  }
  return r;
}

const std::vector<P8>& all8() {
  static const std::vector<P8> v = [] {
    std::vector<P8> out(kS8);
    P8 p;
    std::iota(p.begin(), p.end(), 0);
    int k = 0;
    do out[k++] = p;
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return v;
}

inline int mul8(int a, int b) {
  const P8& x = all8()[a];
  const P8& y = all8()[b];
  P8 z;
  for (int i = 0; i < 8; ++i) z[i] = x[y[i]];
  return rank8(z);
}

int inv8(int a) {
  const P8& x = all8()[a];
  P8 z;
  for (int i = 0; i < 8; ++i) z[x[i]] = i;
  return rank8(z);
}

Perm to_perm(int a) {
  const P8& x = all8()[a];
  return Perm(std::vector<int>(x.begin(), x.end()));
}

int from_perm(const Perm& g) {
  P8 z;
  for (int i = 0; i < 8; ++i) z[i] = static_cast<uint8_t>(g[i]);
  return rank8(z);
}

// Sorted element ranks of <gens>.
std::vector<int> closure8(const std::vector<int>& gens) {
  std::vector<char> in(kS8, 0);
  std::vector<int> el{rank8({0, 1, 2, 3, 4, 5, 6, 7})};
  in[el[0]] = 1;
  for (size_t i = 0; i < el.size(); ++i)
    for (int s : gens) {
      int y = mul8(s, el[i]);
      if (!in[y]) {
        in[y] = 1;
        el.push_back(y);
      }
    }
  std::sort(el.begin(), el.end());
  return el;
}

struct Class8 {
  std::vector<int> gens;
  std::vector<int> elems;  // sorted
};

// Minimum over conjugates by the normalizer of the fixed 8-cycle.
std::pair<std::vector<int>, int> canonical8(const std::vector<int>& elems, const std::vector<int>& normalizer) {
  std::vector<int> best;
  int arg = 0;
  for (int n : normalizer) {
    int ni = inv8(n);
    std::vector<int> c;
    c.reserve(elems.size());
    for (int e : elems) c.push_back(mul8(mul8(n, e), ni));
    std::sort(c.begin(), c.end());
    if (best.empty() || c < best) {
      best = std::move(c);
      arg = n;
    }
  }
  return {best, arg};
}

}  // namespace

std::vector<Deg8Group> enumerate_deg8_full_cycle(int threads) {
  const int c = rank8({1, 2, 3, 4, 5, 6, 7, 0});
  std::vector<int> cyc = closure8({c});
  std::vector<int> normalizer;
  for (int g = 0; g < kS8; ++g) {
    int gc = mul8(mul8(g, c), inv8(g));
    if (std::binary_search(cyc.begin(), cyc.end(), gc)) normalizer.push_back(g);
  }
  const int s8 = kS8;
  std::map<std::vector<int>, int> seen;
  std::vector<Class8> classes;
  auto add = [&](std::vector<int> gens, const std::vector<int>& elems) {
    if (static_cast<int>(elems.size()) == s8) {
      if (seen.count({-1})) return;
      seen[{-1}] = static_cast<int>(classes.size());
      classes.push_back({gens, elems});
      return;
    }
    auto [canon, n] = canonical8(elems, normalizer);
    if (seen.count(canon)) return;
    int ni = inv8(n);
    for (auto& g : gens) g = mul8(mul8(n, g), ni);
    seen[canon] = static_cast<int>(classes.size());
    classes.push_back({gens, canon});
  };
  add({c}, cyc);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> found(frontier.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
    for (size_t fi = 0; fi < frontier.size(); ++fi) {
      const Class8& H = classes[frontier[fi]];
      if (static_cast<int>(H.elems.size()) == s8) continue;
      std::vector<char> done(kS8, 0);
      for (int h : H.elems) done[h] = 1;
      std::set<std::vector<int>> local;
      for (int g = 0; g < kS8; ++g) {
        if (done[g]) continue;
        for (int a : H.elems) {
          int ag = mul8(a, g);
          for (int b : H.elems) done[mul8(ag, b)] = 1;
        }
        std::vector<int> gens = H.gens;
        gens.push_back(g);
        std::vector<Perm> pg;
        for (int x : gens) pg.push_back(to_perm(x));
        if (PermGroup(8, pg).order() == kS8) {
          if (local.insert({-1}).second) found[fi].push_back({gens, std::vector<int>(kS8)});
          continue;
        }
        std::vector<int> el = closure8(gens);
        if (local.insert(el).second) found[fi].push_back({gens, el});
      }
    }
    std::vector<int> next;
    for (auto& list : found)
      for (auto& [gens, el] : list) {
        size_t before = classes.size();
        add(gens, el);
        if (classes.size() > before) next.push_back(static_cast<int>(before));
      }
    frontier = next;
  }

  std::vector<Deg8Group> out;
  for (auto& cl : classes) {
    std::vector<Perm> gens;
    for (int g : cl.gens) gens.push_back(to_perm(g));
    Deg8Group d;
    d.group = PermGroup(8, gens);
    d.order = d.group.order();
    auto sys = d.group.block_systems();
    d.block_systems = static_cast<int>(sys.size());
    for (auto& s : sys) d.block_sizes.push_back(static_cast<int>(s[0].size()));
    d.solvable = d.group.is_solvable();
    d.primitive = sys.empty();
    d.abelianization = d.order / commutator_subgroup(d.group, d.group).order();
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const Deg8Group& a, const Deg8Group& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.fingerprint() < b.fingerprint();
  });
  return out;
}

namespace {

// Subgroup of a small group given by a mask over its element indices.
using Mask = std::vector<uint64_t>;

struct SmallGroup {
  std::vector<int> el;  // ranks
  std::vector<int> idx;  // rank -> local index
  std::vector<std::vector<int>> mul;

  explicit SmallGroup(const std::vector<Perm>& elems) : idx(kS8, -1) {
    for (auto& e : elems) el.push_back(from_perm(e));
    std::sort(el.begin(), el.end());
    for (size_t i = 0; i < el.size(); ++i) idx[el[i]] = static_cast<int>(i);
    mul.assign(el.size(), std::vector<int>(el.size()));
    for (size_t i = 0; i < el.size(); ++i)
      for (size_t j = 0; j < el.size(); ++j) mul[i][j] = idx[mul8(el[i], el[j])];
  }
  size_t size() const { return el.size(); }
  Mask empty() const { return Mask((el.size() + 63) / 64, 0); }
  static bool has(const Mask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1; }
  static void set(Mask& m, int i) { m[i >> 6] |= uint64_t(1) << (i & 63); }
  static int count(const Mask& m) {
    int c = 0;
    for (auto w : m) c += __builtin_popcountll(w);
    return c;
  }
  // Closure of the mask set plus g; returns empty mask vector if size exceeds cap.
  std::optional<Mask> closure(const Mask& S, int g, size_t cap) const {
    Mask m = S;
    std::vector<int> list;
    for (size_t i = 0; i < size(); ++i)
      if (has(m, static_cast<int>(i))) list.push_back(static_cast<int>(i));
    std::vector<int> gens = list;
    gens.push_back(g);
    if (!has(m, g)) {
      set(m, g);
      list.push_back(g);
    }
    for (size_t i = 0; i < list.size(); ++i)
      for (int s : gens) {
        int y = mul[s][list[i]];
        if (has(m, y)) continue;
        set(m, y);
        list.push_back(y);
        if (list.size() > cap) return std::nullopt;
      }
    return m;
  }
  int fixes_point_count(const Mask& m, int pt) const {
    int c = 0;
    for (size_t i = 0; i < size(); ++i)
      if (has(m, static_cast<int>(i)) && all8()[el[i]][pt] == pt) ++c;
    return c;
  }
};

int inter_count(const Mask& a, const Mask& b) {
  int c = 0;
  for (size_t i = 0; i < a.size(); ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

bool reducible_pair(const Mask& U, const Mask& V, size_t order) {
  uint64_t u = SmallGroup::count(U), v = SmallGroup::count(V), i = inter_count(U, V);
  return u * v < order * i;
}

// Subgroups reachable from start by adding one element at a time. With proper_overgroups,
// everything between start and H (exclusive); otherwise subgroups of order dividing cap.
std::vector<Mask> subgroups_up_to(const SmallGroup& H, const Mask& start, size_t cap, bool proper_overgroups) {
  std::set<Mask> seen{start};
  std::vector<Mask> queue{start};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Mask S = queue[qi];
    Mask covered = S;
    for (size_t g = 0; g < H.size(); ++g) {
      if (SmallGroup::has(covered, static_cast<int>(g))) continue;
      for (size_t s = 0; s < H.size(); ++s)
        if (SmallGroup::has(S, static_cast<int>(s))) SmallGroup::set(covered, H.mul[g][s]);
      auto K = H.closure(S, static_cast<int>(g), proper_overgroups ? H.size() - 1 : cap);
      if (!K) continue;
      size_t k = SmallGroup::count(*K);
      if (!proper_overgroups && cap % k != 0) continue;
      if (seen.insert(*K).second) queue.push_back(*K);
    }
  }
  return queue;
}

}  // namespace

Deg8ScanReport deg8_minimal_reducibility_scan(const std::vector<Deg8Group>& groups, int threads) {
  Deg8ScanReport rep;
  std::vector<const Deg8Group*> todo;
  for (auto& g : groups) {
    if (!g.solvable) continue;
    if (std::find(g.block_sizes.begin(), g.block_sizes.end(), 2) == g.block_sizes.end()) continue;
    todo.push_back(&g);
  }
  rep.groups_scanned = static_cast<int>(todo.size());
  std::vector<Deg8ScanReport> parts(todo.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (size_t ti = 0; ti < todo.size(); ++ti) {
    const Deg8Group& G = *todo[ti];
    Deg8ScanReport& part = parts[ti];
    SmallGroup H(G.group.elements());
    size_t order = H.size(), m = order / 8;
    Mask triv = H.empty();
    SmallGroup::set(triv, H.idx[rank8({0, 1, 2, 3, 4, 5, 6, 7})]);

    std::vector<int> eight_cycles;
    for (size_t i = 0; i < order; ++i) {
      Perm x = to_perm(H.el[i]);
      if (x.cycle_type() == std::vector<int>{8}) eight_cycles.push_back(static_cast<int>(i));
    }
    auto cyclic_of = [&](int g) {
      Mask c = H.empty();
      int x = H.idx[rank8({0, 1, 2, 3, 4, 5, 6, 7})];
      do {
        SmallGroup::set(c, x);
        x = H.mul[g][x];
      } while (!SmallGroup::has(c, x));
      return c;
    };
    std::vector<Mask> cycles;
    for (int g : eight_cycles) cycles.push_back(cyclic_of(g));

    Mask Hx = H.empty();
    for (size_t i = 0; i < order; ++i)
      if (all8()[H.el[i]][0] == 0) SmallGroup::set(Hx, static_cast<int>(i));
    std::vector<Mask> overHx;
    for (auto& sys : G.group.block_systems()) {
      Mask U = H.empty();
      const auto& B = sys[0];
      for (size_t i = 0; i < order; ++i)
        if (std::find(B.begin(), B.end(), all8()[H.el[i]][0]) != B.end()) SmallGroup::set(U, static_cast<int>(i));
      overHx.push_back(U);
    }
    overHx.push_back(Hx);

    for (const Mask& K : subgroups_up_to(H, triv, m, false)) {
      if (static_cast<size_t>(SmallGroup::count(K)) != m) continue;
      bool cyc = false;
      for (auto& C : cycles)
        if (inter_count(C, K) == 1) cyc = true;
      if (!cyc) continue;
      // core-free
      Mask core = K;
      for (size_t h = 0; h < order && SmallGroup::count(core) > 1; ++h) {
        int hi = H.idx[inv8(H.el[h])];
        Mask conj = H.empty();
        for (size_t k = 0; k < order; ++k)
          if (SmallGroup::has(K, static_cast<int>(k))) SmallGroup::set(conj, H.mul[H.mul[h][k]][hi]);
        for (size_t w = 0; w < core.size(); ++w) core[w] &= conj[w];
      }
      if (SmallGroup::count(core) != 1) continue;
      std::vector<Mask> overK = subgroups_up_to(H, K, order, true);
      bool block2 = false;
      for (auto& V : overK)
        if (static_cast<size_t>(SmallGroup::count(V)) == 2 * m) block2 = true;
      if (!block2) continue;
      ++part.configurations;
      if (!reducible_pair(Hx, K, order)) continue;
      ++part.reducible;
      bool sub_reducible = false;
      for (auto& U : overHx)
        for (auto& V : overK) {
          if (U == Hx && V == K) continue;
          if (reducible_pair(U, V, order)) sub_reducible = true;
        }
      if (sub_reducible) continue;
      ++part.survivors;
      part.survivor_details.push_back(G.fingerprint());
    }
  }
  for (auto& p : parts) {
    rep.configurations += p.configurations;
    rep.reducible += p.reducible;
    rep.survivors += p.survivors;
    rep.survivor_details.insert(rep.survivor_details.end(), p.survivor_details.begin(), p.survivor_details.end());
  }
  return rep;
}

namespace {

std::vector<uint64_t> probe_primes() {
  std::vector<uint64_t> ps;
  const int hi = 10007;
  std::vector<char> comp(hi + 1, 0);
  for (int i = 2; i <= hi; ++i) {
    if (comp[i]) continue;
    if (i > 100) ps.push_back(i);
    for (int j = 2 * i; j <= hi; j += i) comp[j] = 1;
  }
  return ps;
}

}  // namespace

ProbeReport monodromy_probe(const UniPoly& f, int trials, uint64_t seed,
                            const std::vector<std::pair<std::string, PermGroup>>& candidates, bool geometric) {
  if (!f.is_rational()) throw Error(ErrorKind::BadParameters, "monodromy_probe needs rational coefficients");
  if (trials < 1) throw Error(ErrorKind::BadParameters, "trials must be positive");
  if (f.degree() < 1) throw Error(ErrorKind::BadParameters, "monodromy_probe needs a nonconstant polynomial");
  QVec fc = f.rational_coeffs();
  mpz_class D = 1;
  for (auto& c : fc) D = lcm(D, mpz_class(c.get_den()));
  ZVec F;
  for (auto& c : fc) F.push_back(mpz_class(c * D));
  std::vector<uint64_t> primes;
  for (uint64_t p : probe_primes())
    if (!geometric || p % (2 * f.degree()) == 1) primes.push_back(p);
  std::mt19937_64 rng(seed);
  ProbeReport rep;
  for (int attempt = 0; static_cast<int>(rep.samples.size()) < trials && attempt < 50 * trials; ++attempt) {
    uint64_t p = primes[rng() % primes.size()];
    long a = static_cast<long>(rng() % p);
    ZVec G = F;
    G[0] -= D * a;
    if (!squarefree_mod_p(G, p)) continue;
    std::vector<int> t = degree_pattern_mod_p(G, p);
    std::sort(t.begin(), t.end());
    rep.samples.push_back({p, a, t});
    rep.types[t]++;
  }
  for (auto& [name, C] : candidates) {
    std::set<std::vector<int>> ct;
    for (auto& x : C.elements()) ct.insert(x.cycle_type());
    bool ok = C.degree() == f.degree();
    for (auto& [t, n] : rep.types) ok = ok && ct.count(t);
    rep.consistent.push_back({name, ok});
  }
  return rep;
}

}  // namespace dls
