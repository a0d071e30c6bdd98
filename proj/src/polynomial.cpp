/*
 * Copyright (c) 2026, the gcdim authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "gcdim/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace gcdim {

MonomialOrder parse_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::Grevlex;
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "deglex") return MonomialOrder::Deglex;
  throw Error(ErrorKind::BadOrder, "unknown monomial order '" + std::string(name) + "'");
}

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Grevlex: return "grevlex";
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::Deglex: return "deglex";
  }
  return "?";
}

PolyAlgebra::PolyAlgebra(PrimeField field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
  if (vars_.empty()) throw Error(ErrorKind::BadArgument, "a ring needs at least one variable");
  if (vars_.size() > kMaxVars) throw Error(ErrorKind::BadArgument, "at most 16 variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw Error(ErrorKind::BadArgument, "bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(ErrorKind::BadArgument, "duplicate variable '" + v + "'");
  }
}

Polynomial PolyAlgebra::constant(Fp c) const {
  if (c.is_zero()) return Polynomial();
  return Polynomial({Term{Monomial(), c}});
}

Polynomial PolyAlgebra::variable(std::size_t i) const { return Polynomial({Term{Monomial::variable(i), Fp(1)}}); }

Polynomial PolyAlgebra::monomial(const Monomial& m, Fp c) const {
  if (c.is_zero()) return Polynomial();
  return Polynomial({Term{m, c}});
}

Polynomial PolyAlgebra::make(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return cmp(a.mon, b.mon) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coef = field_.add(out.back().coef, t.coef);
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(t);
    }
  }
  return Polynomial(std::move(out));
}

Polynomial PolyAlgebra::add_scaled(const Polynomial& a, const Polynomial& b, const Monomial& m, Fp c) const {
  if (c.is_zero() || b.is_zero()) return a;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size()) {
      out.push_back(ta[i++]);
      continue;
    }
    Monomial mb = tb[j].mon * m;
    if (i == ta.size()) {
      out.push_back(Term{mb, field_.mul(tb[j].coef, c)});
      ++j;
      continue;
    }
    int s = cmp(ta[i].mon, mb);
    if (s > 0) {
      out.push_back(ta[i++]);
    } else if (s < 0) {
      out.push_back(Term{mb, field_.mul(tb[j].coef, c)});
      ++j;
    } else {
      Fp v = field_.add(ta[i].coef, field_.mul(tb[j].coef, c));
      if (!v.is_zero()) out.push_back(Term{ta[i].mon, v});
      ++i;
      ++j;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial PolyAlgebra::add(const Polynomial& a, const Polynomial& b) const {
  return add_scaled(a, b, Monomial(), Fp(1));
}

Polynomial PolyAlgebra::sub(const Polynomial& a, const Polynomial& b) const {
  return add_scaled(a, b, Monomial(), field_.neg(Fp(1)));
}

Polynomial PolyAlgebra::neg(const Polynomial& a) const { return scale(a, field_.neg(Fp(1))); }

Polynomial PolyAlgebra::scale(const Polynomial& a, Fp c) const { return mul_term(a, Monomial(), c); }

Polynomial PolyAlgebra::mul_term(const Polynomial& a, const Monomial& m, Fp c) const {
  if (c.is_zero()) return Polynomial();
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back(Term{t.mon * m, field_.mul(t.coef, c)});
  return Polynomial(std::move(out));
}

Polynomial PolyAlgebra::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.size() > b.size()) return mul(b, a);
  Polynomial acc;
  for (const auto& t : a.terms()) acc = add_scaled(acc, b, t.mon, t.coef);
  return acc;
}

std::string PolyAlgebra::format(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    unsigned e = m.exponent(i);
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += vars_[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string PolyAlgebra::format(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = field_.to_signed(t.coef);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string mon = format(t.mon);
    if (mon.empty()) {
      s += std::to_string(mag);
    } else {
      if (mag != 1) s += std::to_string(mag) + "*";
      s += mon;
    }
  }
  return s;
}

std::vector<Monomial> PolyAlgebra::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::size_t n = vars_.size();
  std::vector<unsigned> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = static_cast<unsigned>(left);
      Monomial m;
      for (std::size_t k = 0; k < n; ++k)
        if (e[k]) m = m * Monomial::variable(k, e[k]);
      out.push_back(m);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = static_cast<unsigned>(v);
      rec(i + 1, left - v);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return cmp(a, b) > 0; });
  return out;
}

namespace {

// Recursive-descent parser for   poly := ['+'|'-'] term (('+'|'-') term)*
//                                term := factor ('*' factor)*
//                              factor := INT | VAR ['^' INT] | '(' poly ')' ['^' INT]
class PolyParser {
 public:
  PolyParser(const PolyAlgebra& alg, std::string_view text) : alg_(alg), s_(text) {}

  Polynomial run() {
    Polynomial p = poly();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "column " + std::to_string(pos_ + 1) + ": " + msg + " in '" + std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = (v * 10 + static_cast<unsigned>(s_[pos_] - '0')) % alg_.field().characteristic();
      ++pos_;
    }
    return v;
  }
  unsigned exponent() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
    unsigned v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (v > 10000) fail("exponent too large");
      ++pos_;
    }
    return v;
  }
  Polynomial power(Polynomial base) {
    if (!accept('^')) return base;
    unsigned e = exponent();
    Polynomial r = alg_.one();
    for (unsigned i = 0; i < e; ++i) r = alg_.mul(r, base);
    return r;
  }
  Polynomial factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return power(alg_.constant(Fp(static_cast<std::uint32_t>(integer()))));
    }
    if (c == '(') {
      ++pos_;
      Polynomial p = poly();
      if (!accept(')')) fail("expected ')'");
      return power(p);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      const auto& vars = alg_.var_names();
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return power(alg_.variable(static_cast<std::size_t>(it - vars.begin())));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = alg_.mul(p, factor());
    return p;
  }
  Polynomial poly() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = alg_.neg(acc);
    while (true) {
      if (accept('+')) {
        acc = alg_.add(acc, term());
      } else if (accept('-')) {
        acc = alg_.sub(acc, term());
      } else {
        break;
      }
    }
    return acc;
  }

  const PolyAlgebra& alg_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial PolyAlgebra::parse(std::string_view text) const { return PolyParser(*this, text).run(); }

}  // namespace gcdim
