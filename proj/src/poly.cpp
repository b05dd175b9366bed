#include "conred/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace conred {

Poly::Poly(int num_vars, const Rational& c) : num_vars_(num_vars) {
  if (c != 0) terms_[std::vector<int>(num_vars, 0)] = c;
}

Poly Poly::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw Error("VarMismatch", "variable index out of range");
  std::vector<int> e(num_vars, 0);
  e[index] = 1;
  return monomial(num_vars, e, Rational(1));
}

Poly Poly::monomial(int num_vars, std::vector<int> exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != num_vars) throw Error("VarMismatch", "exponent length");
  Poly p(num_vars);
  if (c != 0) p.terms_[std::move(exps)] = c;
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == std::vector<int>(num_vars_, 0);
}

Rational Poly::constant_value() const {
  auto it = terms_.find(std::vector<int>(num_vars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const std::vector<int>& exps, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_[exps] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (num_vars_ != o.num_vars_) throw Error("VarMismatch", "poly add");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (num_vars_ != o.num_vars_) throw Error("VarMismatch", "poly sub");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(num_vars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (num_vars_ != o.num_vars_) throw Error("VarMismatch", "poly mul");
  Poly r(num_vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(num_vars_);
      for (int i = 0; i < num_vars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::operator*(const Rational& s) const {
  Poly r(num_vars_);
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw Error("VarMismatch", "negative exponent");
  Poly r = constant(num_vars_, Rational(1));
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

Poly Poly::partial(int index) const {
  if (index < 0 || index >= num_vars_) throw Error("VarMismatch", "partial index");
  Poly r(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    std::vector<int> d = e;
    d[index] -= 1;
    r.add_term(d, c * e[index]);
  }
  return r;
}

Poly Poly::substitute_zero(const std::set<int>& vars) const {
  for (int v : vars)
    if (v < 0 || v >= num_vars_) throw Error("VarMismatch", "substitute_zero index");
  Poly r(num_vars_);
  for (const auto& [e, c] : terms_) {
    bool kills = false;
    for (int v : vars)
      if (e[v] > 0) {
        kills = true;
        break;
      }
    if (!kills) r.add_term(e, c);
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != num_vars_) throw Error("VarMismatch", "eval point");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (int i = 0; i < num_vars_; ++i)
      for (int k = 0; k < e[i]; ++k) m *= point[i];
    total += m;
  }
  return total;
}

Poly Poly::compose(const std::vector<Poly>& args) const {
  if (static_cast<int>(args.size()) != num_vars_) throw Error("VarMismatch", "compose arity");
  int nv = args.empty() ? 0 : args[0].num_vars();
  for (const auto& a : args)
    if (a.num_vars() != nv) throw Error("VarMismatch", "compose arg vars");
  Poly r(nv);
  for (const auto& [e, c] : terms_) {
    Poly m = Poly::constant(nv, c);
    for (int i = 0; i < num_vars_; ++i)
      if (e[i] > 0) m = m * args[i].pow(e[i]);
    r = r + m;
  }
  return r;
}

bool Poly::independent_of(int index) const {
  for (const auto& [e, c] : terms_)
    if (e[index] > 0) return false;
  return true;
}

Poly Poly::rename_vars(int new_num_vars, const std::vector<int>& new_of_old) const {
  if (static_cast<int>(new_of_old.size()) != num_vars_) throw Error("VarMismatch", "rename map");
  Poly r(new_num_vars);
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(new_num_vars, 0);
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (new_of_old[i] < 0) throw Error("VarMismatch", "renamed-away variable present");
      ne[new_of_old[i]] += e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest-degree-first for readability; map order is fine otherwise.
  std::vector<std::pair<std::vector<int>, Rational>> ts(terms_.begin(), terms_.end());
  for (const auto& [e, c] : ts) {
    Rational coeff = c;
    bool neg = coeff < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) coeff = -coeff;
    first = false;
    bool has_var = false;
    for (int i = 0; i < num_vars_; ++i)
      if (e[i] > 0) has_var = true;
    if (coeff != 1 || !has_var) {
      os << coeff;
      if (has_var) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, int num_vars) : s_(text), nv_(num_vars) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error("ParseError", msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly p = term();
    while (true) {
      if (eat('+')) {
        p = p + term();
      } else if (eat('-')) {
        p = p - term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        p = p * factor();
      } else if (c == '(' || c == 'x' || std::isdigit(static_cast<unsigned char>(c))) {
        // Implicit multiplication: "2x1", "x1(x2+1)".
        p = p * factor();
      } else {
        return p;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      skip_ws();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    char c = peek();
    if (c == 'x') {
      ++pos_;
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected variable index");
      int idx = std::stoi(s_.substr(start, pos_ - start));
      if (idx < 1 || idx > nv_) fail("variable x" + std::to_string(idx) + " out of range");
      return Poly::variable(nv_, idx - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '.') fail("floats are not accepted");
      Integer num(s_.substr(start, pos_ - start));
      if (eat('/')) {
        skip_ws();
        size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
        Integer den(s_.substr(dstart, pos_ - dstart));
        if (den == 0) fail("zero denominator");
        return Poly::constant(nv_, Rational(num, den));
      }
      return Poly::constant(nv_, Rational(num));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  int nv_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, int num_vars) {
  return PolyParser(text, num_vars).parse();
}

}  // namespace conred
