#include "dls/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace dls {

namespace {

using Key = std::pair<int, int>;

struct Sparse {
  NumberField K;
  std::map<Key, NFElement> t;

  static Sparse constant(const NFElement& c) {
    Sparse s{c.field(), {}};
    if (!c.is_zero()) s.t[{0, 0}] = c;
    return s;
  }
  void add(const Key& k, const NFElement& c) {
    auto it = t.find(k);
    if (it == t.end()) {
      if (!c.is_zero()) t[k] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
  Sparse operator+(const Sparse& o) const {
    Sparse r = *this;
    for (auto& [k, c] : o.t) r.add(k, c);
    return r;
  }
  Sparse operator*(const Sparse& o) const {
    Sparse r{K, {}};
    for (auto& [k1, c1] : t)
      for (auto& [k2, c2] : o.t) r.add({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    return r;
  }
  Sparse neg() const {
    Sparse r = *this;
    for (auto& [k, c] : r.t) c = -c;
    return r;
  }
  bool is_constant() const { return t.empty() || (t.size() == 1 && t.begin()->first == Key{0, 0}); }
  NFElement const_value() const { return t.empty() ? NFElement(K) : t.begin()->second; }
};

class Parser {
 public:
  Parser(const std::string& s, const NumberField& K, std::string x, std::string y)
      : s_(s), K_(K), x_(std::move(x)), y_(std::move(y)) {}

  Sparse run() {
    Sparse r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::Parse, msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Sparse expr() {
    Sparse r = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        r = r + term();
      } else if (peek('-')) {
        ++pos_;
        r = r + term().neg();
      } else {
        return r;
      }
    }
  }

  Sparse term() {
    Sparse r = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r = r * unary();
      } else if (peek('/')) {
        ++pos_;
        Sparse d = unary();
        if (!d.is_constant()) fail("division by a non-constant");
        NFElement c = d.const_value();
        if (c.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in '" + s_ + "'");
        r = r * Sparse::constant(c.inv());
      } else if (starts_atom()) {
        r = r * power();
      } else {
        return r;
      }
    }
  }

  Sparse unary() {
    if (peek('-')) {
      ++pos_;
      return unary().neg();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Sparse power() {
    Sparse b = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("expected exponent");
      int e = std::stoi(s_.substr(st, pos_ - st));
      Sparse r = Sparse::constant(NFElement(K_, 1));
      for (int i = 0; i < e; ++i) r = r * b;
      return r;
    }
    return b;
  }

  Sparse atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Sparse::constant(NFElement(K_, mpq_class(mpz_class(s_.substr(st, pos_ - st)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t st = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id = s_.substr(st, pos_ - st);
      Sparse r{K_, {}};
      if (id == x_) r.t[{1, 0}] = NFElement(K_, 1);
      else if (!y_.empty() && id == y_) r.t[{0, 1}] = NFElement(K_, 1);
      else if (!K_.is_rational() && id == K_.gen()) r = Sparse::constant(NFElement::generator(K_));
      else fail("unknown symbol '" + id + "'");
      return r;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  size_t pos_ = 0;
  NumberField K_;
  std::string x_, y_;
};

}  // namespace

UniPoly parse_uni(const std::string& text, const NumberField& K, const std::string& var) {
  Sparse s = Parser(text, K, var, "").run();
  int d = -1;
  for (auto& [k, c] : s.t) d = std::max(d, k.first);
  std::vector<NFElement> v(d + 1, NFElement(K));
  for (auto& [k, c] : s.t) v[k.first] = c;
  return UniPoly(K, v);
}

BiPoly parse_bi(const std::string& text, const NumberField& K, const std::string& xvar,
                const std::string& yvar) {
  Sparse s = Parser(text, K, xvar, yvar).run();
  int dx = -1, dy = -1;
  for (auto& [k, c] : s.t) {
    dx = std::max(dx, k.first);
    dy = std::max(dy, k.second);
  }
  std::vector<std::vector<NFElement>> v(dx + 1, std::vector<NFElement>(dy + 1, NFElement(K)));
  for (auto& [k, c] : s.t) v[k.first][k.second] = c;
  std::vector<UniPoly> cx;
  for (auto& row : v) cx.emplace_back(K, row);
  return BiPoly(K, cx);
}

NFElement parse_element(const std::string& text, const NumberField& K) {
  Sparse s = Parser(text, K, "", "").run();
  return s.const_value();
}

NumberField parse_field(const std::string& minpoly_text, const std::string& gen) {
  UniPoly m = parse_uni(minpoly_text, rationals(), gen);
  if (m.degree() < 1) throw Error(ErrorKind::PreconditionViolated, "minimal polynomial must have degree >= 1");
  if (m.lc() != NFElement(rationals(), 1))
    throw Error(ErrorKind::PreconditionViolated, "minimal polynomial must be monic");
  return nf_new(m.rational_coeffs(), gen);
}

NumberField parse_field_decl(const std::string& decl) {
  std::string d = decl;
  auto colon = d.find(':');
  if (colon == std::string::npos) {
    std::string t;
    for (char c : d)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "Q" || t.empty()) return rationals();
    throw Error(ErrorKind::Parse, "field declaration must look like 'a: a^2+a+2' or 'Q'");
  }
  std::string gen, body = d.substr(colon + 1);
  for (char c : d.substr(0, colon))
    if (!std::isspace(static_cast<unsigned char>(c))) gen += c;
  if (gen.empty()) throw Error(ErrorKind::Parse, "missing generator name");
  return parse_field(body, gen);
}

std::vector<int> parse_cycles(const std::string& text, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<bool> used(n, false);
  size_t i = 0;
  auto bad = [&](const std::string& m) { throw Error(ErrorKind::Parse, m + " in '" + text + "'"); };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') bad("expected '('");
    ++i;
    std::vector<int> cyc;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) bad("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      size_t st = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (st == i) bad("expected point");
      int v = std::stoi(text.substr(st, i - st));
      if (v >= n) bad("point out of range");
      if (used[v]) bad("point repeated");
      used[v] = true;
      cyc.push_back(v);
    }
    for (size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return p;
}

}  // namespace dls
