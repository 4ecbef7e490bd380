#include "dls/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dls/parse.hpp"

namespace dls {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= degree() || seen[x]) throw Error(ErrorKind::BadParameters, "images do not form a permutation");
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(const std::string& text, int n) { return Perm(parse_cycles(text, n)); }

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

long Perm::order() const {
  long o = 1;
  for (int c : cycle_type()) o = std::lcm(o, static_cast<long>(c));
  return o;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> t;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

std::string Perm::str() const {
  std::ostringstream os;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    os << "(";
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      os << (j == i ? "" : " ") << j;
    }
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::DegreeMismatch, "permutation degrees differ");
  Perm p;
  p.img_.resize(a.degree());
  for (int i = 0; i < a.degree(); ++i) p.img_[i] = a.img_[b.img_[i]];
  return p;
}

Perm pow(const Perm& a, long e) {
  if (e < 0) return pow(a.inverse(), -e);
  Perm r(a.degree()), b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Perm commutator(const Perm& a, const Perm& b) { return a * b * a.inverse() * b.inverse(); }
Perm conjugate(const Perm& g, const Perm& x) { return g * x * g.inverse(); }

struct StabChain {
  struct Level {
    int base;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<int> tidx;  // point -> index in trans, or -1
    std::vector<Perm> trans;
  };
  int n;
  std::vector<int> prefix;
  std::vector<Level> L;

  void rebuild_orbit(Level& lv) const {
    lv.orbit = {lv.base};
    lv.tidx.assign(n, -1);
    lv.trans = {Perm(n)};
    lv.tidx[lv.base] = 0;
    for (size_t i = 0; i < lv.orbit.size(); ++i) {
      int p = lv.orbit[i];
      for (const Perm& s : lv.gens) {
        int q = s[p];
        if (lv.tidx[q] >= 0) continue;
        lv.tidx[q] = static_cast<int>(lv.trans.size());
        lv.trans.push_back(s * lv.trans[lv.tidx[p]]);
        lv.orbit.push_back(q);
      }
    }
  }

  std::pair<Perm, size_t> sift(Perm g, size_t from) const {
    for (size_t l = from; l < L.size(); ++l) {
      int p = g[L[l].base];
      if (L[l].tidx[p] < 0) return {g, l};
      g = L[l].trans[L[l].tidx[p]].inverse() * g;
    }
    return {g, L.size()};
  }

  void insert(const Perm& r, size_t from, size_t to) {
    for (size_t l = from; l <= to; ++l) {
      if (l == L.size()) {
        Level lv;
        if (l < prefix.size()) {
          lv.base = prefix[l];
        } else {
          lv.base = 0;
          while (r[lv.base] == lv.base) ++lv.base;
        }
        L.push_back(std::move(lv));
      }
      L[l].gens.push_back(r);
      rebuild_orbit(L[l]);
    }
  }

  void complete(size_t k) {
    for (size_t i = 0; i < L[k].orbit.size(); ++i) {
      for (size_t s = 0; s < L[k].gens.size(); ++s) {
        int p = L[k].orbit[i];
        const Perm& g = L[k].gens[s];
        Perm h = L[k].trans[L[k].tidx[g[p]]].inverse() * g * L[k].trans[L[k].tidx[p]];
        if (h.is_identity()) continue;
        auto [r, j] = sift(h, k + 1);
        if (r.is_identity()) continue;
        insert(r, k + 1, j);
        for (size_t l = j + 1; l-- > k + 1;) complete(l);
      }
    }
  }

  void add(const Perm& g) {
    auto [r, j] = sift(g, 0);
    if (r.is_identity()) return;
    insert(r, 0, j);
    for (size_t l = j + 1; l-- > 0;) complete(l);
  }

  uint64_t order() const {
    uint64_t o = 1;
    for (auto& lv : L) o *= lv.orbit.size();
    return o;
  }
};

namespace {

std::shared_ptr<StabChain> build_chain(int n, const std::vector<Perm>& gens, const std::vector<int>& prefix) {
  auto c = std::make_shared<StabChain>();
  c->n = n;
  c->prefix = prefix;
  for (const Perm& g : gens)
    if (!g.is_identity()) c->add(g);
  return c;
}

}  // namespace

PermGroup::PermGroup(int n, std::vector<Perm> gens) : n_(n) {
  for (auto& g : gens) {
    if (g.degree() != n) throw Error(ErrorKind::DegreeMismatch, "generator degree differs from group degree");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
}

PermGroup PermGroup::trivial(int n) { return PermGroup(n, {}); }

PermGroup PermGroup::symmetric(int n) {
  std::vector<Perm> g;
  if (n >= 2) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    g.push_back(Perm(c));
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    g.push_back(Perm(t));
  }
  return PermGroup(n, g);
}

PermGroup PermGroup::cyclic(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return PermGroup(n, {Perm(c)});
}

PermGroup PermGroup::dihedral(int n) {
  std::vector<int> c(n), r(n);
  for (int i = 0; i < n; ++i) {
    c[i] = (i + 1) % n;
    r[i] = (n - i) % n;
  }
  return PermGroup(n, {Perm(c), Perm(r)});
}

PermGroup PermGroup::from_cycles(const std::vector<std::string>& gens, int n) {
  std::vector<Perm> g;
  for (auto& s : gens) g.push_back(Perm::from_cycles(s, n));
  return PermGroup(n, g);
}

const StabChain& PermGroup::chain() const {
  if (!chain_) chain_ = build_chain(n_, gens_, {});
  return *chain_;
}

uint64_t PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != n_) throw Error(ErrorKind::DegreeMismatch, "element degree differs from group degree");
  return chain().sift(g, 0).first.is_identity();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n_; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> orb{i};
    comp[i] = static_cast<int>(out.size());
    for (size_t k = 0; k < orb.size(); ++k)
      for (auto& g : gens_) {
        int q = g[orb[k]];
        if (comp[q] < 0) {
          comp[q] = comp[i];
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(orb);
  }
  return out;
}

bool PermGroup::is_transitive() const { return n_ <= 1 || orbits().size() == 1; }

std::vector<std::vector<int>> PermGroup::minimal_block_system(const std::vector<int>& seed) const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<int, int>> queue;
  for (size_t i = 1; i < seed.size(); ++i) {
    int a = find(seed[0]), b = find(seed[i]);
    if (a == b) continue;
    parent[b] = a;
    queue.push_back({a, b});
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    auto [a, b] = queue[i];
    for (auto& g : gens_) {
      int c = find(g[a]), d = find(g[b]);
      if (c == d) continue;
      parent[d] = c;
      queue.push_back({c, d});
    }
  }
  std::vector<std::vector<int>> cls(n_);
  for (int i = 0; i < n_; ++i) cls[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& c : cls)
    if (!c.empty()) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::vector<int>>> PermGroup::block_systems() const {
  if (!is_transitive()) throw Error(ErrorKind::PreconditionViolated, "block systems need a transitive group");
  std::set<std::vector<int>> seen;  // block containing 0
  std::vector<std::vector<std::vector<int>>> found;
  std::vector<std::vector<int>> todo{{0}};
  while (!todo.empty()) {
    std::vector<int> B = todo.back();
    todo.pop_back();
    std::vector<char> in(n_, 0);
    for (int x : B) in[x] = 1;
    for (int a = 0; a < n_; ++a) {
      if (in[a]) continue;
      std::vector<int> seed = B;
      seed.push_back(a);
      auto sys = minimal_block_system(seed);
      const std::vector<int>& blk = sys[0];
      if (!seen.insert(blk).second) continue;
      todo.push_back(blk);
      if (static_cast<int>(blk.size()) < n_) found.push_back(sys);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x[0].size() != y[0].size()) return x[0].size() < y[0].size();
    return x < y;
  });
  return found;
}

std::vector<std::vector<int>> PermGroup::blocks() const {
  auto all = block_systems();
  if (all.empty()) return {};
  return all.front();
}

bool PermGroup::is_primitive() const {
  if (!is_transitive()) return false;
  for (int a = 1; a < n_; ++a)
    if (minimal_block_system({0, a}).size() > 1) return false;
  return true;
}

std::vector<PermGroup> PermGroup::derived_series() const {
  std::vector<PermGroup> s{*this};
  while (true) {
    PermGroup d = commutator_subgroup(s.back(), s.back());
    if (d.order() == s.back().order()) break;
    s.push_back(d);
    if (d.is_trivial()) break;
  }
  return s;
}

bool PermGroup::is_solvable() const { return derived_series().back().is_trivial(); }

std::vector<Perm> PermGroup::elements(uint64_t limit) const {
  const StabChain& c = chain();
  if (c.order() > limit) throw Error(ErrorKind::SizeLimit, "group too large to enumerate");
  std::vector<Perm> out{Perm(n_)};
  for (size_t l = c.L.size(); l-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * c.L[l].trans.size());
    for (const Perm& u : c.L[l].trans)
      for (const Perm& h : out) next.push_back(u * h);
    out = std::move(next);
  }
  return out;
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int>& pts) const {
  auto c = build_chain(n_, gens_, pts);
  if (c->L.size() <= pts.size()) return trivial(n_);
  return PermGroup(n_, c->L[pts.size()].gens);
}

bool PermGroup::is_subgroup_of(const PermGroup& G) const {
  for (auto& g : gens_)
    if (!G.contains(g)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& G) const {
  if (!is_subgroup_of(G)) return false;
  for (auto& g : G.gens_)
    for (auto& x : gens_)
      if (!contains(conjugate(g, x))) return false;
  return true;
}

bool PermGroup::operator==(const PermGroup& o) const {
  return n_ == o.n_ && order() == o.order() && is_subgroup_of(o);
}

PermGroup generated(const PermGroup& G, const std::vector<Perm>& extra) {
  std::vector<Perm> g = G.generators();
  g.insert(g.end(), extra.begin(), extra.end());
  return PermGroup(G.degree(), g);
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& X) {
  std::vector<Perm> gens;
  PermGroup N = PermGroup::trivial(G.degree());
  std::vector<Perm> todo = X;
  while (!todo.empty()) {
    Perm x = todo.back();
    todo.pop_back();
    if (N.contains(x)) continue;
    gens.push_back(x);
    N = PermGroup(G.degree(), gens);
    for (auto& g : G.generators()) todo.push_back(conjugate(g, x));
  }
  return N;
}

PermGroup commutator_subgroup(const PermGroup& A, const PermGroup& B) {
  std::vector<Perm> c;
  for (auto& a : A.generators())
    for (auto& b : B.generators()) c.push_back(commutator(a, b));
  std::vector<Perm> all = A.generators();
  all.insert(all.end(), B.generators().begin(), B.generators().end());
  return normal_closure(PermGroup(A.degree(), all), c);
}

std::vector<PermGroup> lower_central_series(const PermGroup& G) {
  std::vector<PermGroup> s{G};
  while (!s.back().is_trivial()) {
    PermGroup next = commutator_subgroup(s.back(), G);
    if (next.order() == s.back().order()) break;
    s.push_back(next);
  }
  return s;
}

PermGroup intersection(const PermGroup& A, const PermGroup& B) {
  const PermGroup& small = A.order() <= B.order() ? A : B;
  const PermGroup& big = A.order() <= B.order() ? B : A;
  std::vector<Perm> gens;
  PermGroup I = PermGroup::trivial(A.degree());
  for (const Perm& x : small.elements()) {
    if (!big.contains(x) || I.contains(x)) continue;
    gens.push_back(x);
    I = PermGroup(A.degree(), gens);
  }
  return I;
}

PermGroup center(const PermGroup& G) {
  std::vector<Perm> z;
  PermGroup Z = PermGroup::trivial(G.degree());
  for (const Perm& x : G.elements()) {
    if (Z.contains(x)) continue;
    bool central = true;
    for (auto& g : G.generators())
      if (g * x != x * g) {
        central = false;
        break;
      }
    if (!central) continue;
    z.push_back(x);
    Z = PermGroup(G.degree(), z);
  }
  return Z;
}

bool is_p_group(const PermGroup& G, int p) {
  uint64_t o = G.order();
  while (o % p == 0) o /= p;
  return o == 1;
}

namespace {

bool is_p_power(long x, int p) {
  while (x % p == 0) x /= p;
  return x == 1;
}

}  // namespace

PermGroup sylow_subgroup(const PermGroup& G, int p) {
  uint64_t target = 1, o = G.order();
  while (o % p == 0) {
    o /= p;
    target *= p;
  }
  std::vector<Perm> elems = G.elements();
  std::vector<Perm> gens;
  PermGroup P = PermGroup::trivial(G.degree());
  while (P.order() < target) {
    bool grown = false;
    for (const Perm& x : elems) {
      if (x.is_identity() || !is_p_power(x.order(), p) || P.contains(x)) continue;
      bool normalizes = true;
      for (auto& g : P.generators())
        if (!P.contains(conjugate(x, g))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      gens.push_back(x);
      P = PermGroup(G.degree(), gens);
      grown = true;
      break;
    }
    if (!grown) throw Error(ErrorKind::PreconditionViolated, "Sylow growth stalled");
  }
  return P;
}

}  // namespace dls
