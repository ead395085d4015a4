#include "permcf/mpoly.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace permcf {

int var_index(char name) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == name) return i;
  throw std::invalid_argument(std::string("unknown variable '") + name + "'");
}

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_[kZeroExp] = c;
}

MPoly::MPoly(long c) {
  if (c != 0) terms_[kZeroExp] = Rat(c);
}

MPoly MPoly::var(char name, int exp) {
  MPoly p;
  if (exp < 0) throw std::invalid_argument("negative exponent");
  ExpVec e{};
  e[var_index(name)] = exp;
  p.terms_[e] = Rat(1);
  return p;
}

MPoly MPoly::monomial(const Rat& c, const ExpVec& e) {
  MPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZeroExp);
}

Rat MPoly::constant_term() const {
  auto it = terms_.find(kZeroExp);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::degree(char name) const {
  int vi = var_index(name), d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[vi]);
  return d;
}

void MPoly::add_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  r -= o;
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      ExpVec e;
      for (int i = 0; i < kNumVars; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly MPoly::operator*(const Rat& c) const {
  MPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

MPoly MPoly::operator/(const Rat& c) const {
  if (c == 0) throw std::invalid_argument("division by zero");
  return *this * (Rat(1) / c);
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  MPoly r(1L);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Rat MPoly::eval(const Point& at) const {
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int i = 0; i < kNumVars; ++i) {
      for (int k = 0; k < e[i]; ++k) m *= at[i];
    }
    total += m;
  }
  return total;
}

double MPoly::eval_double(const DPoint& at) const {
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double m = static_cast<double>(c);
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) m *= std::pow(at[i], e[i]);
    total += m;
  }
  return total;
}

MPoly MPoly::coeff_of(char name, int k) const {
  int vi = var_index(name);
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[vi] == k) {
      ExpVec e2 = e;
      e2[vi] = 0;
      r.terms_[e2] = c;
    }
  }
  return r;
}

bool MPoly::is_palindromic(char name, int m) const {
  int vi = var_index(name);
  MPoly flipped;
  for (const auto& [e, c] : terms_) {
    if (e[vi] > m) return false;
    ExpVec e2 = e;
    e2[vi] = m - e[vi];
    flipped.terms_[e2] = c;
  }
  return flipped == *this;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << '-';
        a = -a;
      }
    } else {
      out << (a < 0 ? '-' : '+');
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = false;
    for (int i = 0; i < kNumVars; ++i) any_var = any_var || e[i] != 0;
    if (a != 1 || !any_var) {
      out << a;
      if (any_var) out << '*';
    }
    bool started = false;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (started) out << '*';
      started = true;
      out << kVarNames[i];
      if (e[i] != 1) out << '^' << e[i];
    }
  }
  return out.str();
}

namespace {

// Minimal recursive-descent reader for the canonical polynomial text.
struct Reader {
  const std::string& s;
  size_t i = 0;
  explicit Reader(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip_ws();
    return s[i++];
  }

  Int read_int() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("polynomial parse error: number expected at '" + s.substr(start) + "'");
    return Int(s.substr(start, i - start));
  }

  // coefficient: integer or integer/integer
  Rat read_coeff() {
    Int num = read_int();
    if (peek() == '/') {
      get();
      Int den = read_int();
      return Rat(num) / Rat(den);
    }
    return Rat(num);
  }

  MPoly read_monomial(int sign) {
    Rat coeff(sign);
    ExpVec e{};
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= read_coeff();
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        get();
        int exp = 1;
        if (peek() == '^') {
          get();
          exp = static_cast<int>(read_int());
        }
        e[var_index(c)] += exp;
        saw_factor = true;
      } else {
        throw std::invalid_argument("polynomial parse error near '" + s.substr(i) + "'");
      }
      if (peek() == '*') {
        get();
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) throw std::invalid_argument("empty monomial");
    return MPoly::monomial(coeff, e);
  }
};

}  // namespace

MPoly MPoly::parse(const std::string& text) {
  Reader r(text);
  MPoly total;
  if (r.done()) throw std::invalid_argument("empty polynomial text");
  int sign = 1;
  if (r.peek() == '-') {
    r.get();
    sign = -1;
  } else if (r.peek() == '+') {
    r.get();
  }
  total += r.read_monomial(sign);
  while (!r.done()) {
    char c = r.get();
    if (c == '+')
      sign = 1;
    else if (c == '-')
      sign = -1;
    else
      throw std::invalid_argument(std::string("expected '+' or '-', got '") + c + "'");
    total += r.read_monomial(sign);
  }
  return total;
}

MPoly pq_integer(int n, char a, char b) {
  MPoly r;
  for (int i = 0; i < n; ++i)
    r += MPoly::var(a, i) * MPoly::var(b, n - 1 - i);
  return r;
}

GammaExpansion gamma_expand(const MPoly& poly, int m, char name) {
  GammaExpansion out;
  if (poly.degree(name) > m)
    throw std::invalid_argument("gamma_expand: degree exceeds center degree m");
  MPoly residual = poly;
  MPoly base = MPoly(1L) + MPoly::var(name);
  for (int k = 0; 2 * k <= m; ++k) {
    MPoly ck = residual.coeff_of(name, k);
    if (!ck.is_constant())
      throw std::invalid_argument("gamma_expand: polynomial has extra variables");
    Rat g = ck.constant_term();
    out.gamma.push_back(g);
    residual -= MPoly(g) * MPoly::var(name, k) * base.pow(m - 2 * k);
  }
  out.residual = residual;
  out.ok = residual.is_zero();
  return out;
}

}  // namespace permcf
