#include "coxpath/parse.hpp"

#include <cctype>
#include <sstream>

namespace coxpath {

std::string print_rational(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

std::string print_path(const PathMono& p, const CoxeterMatrix& names) {
  std::string out = "[";
  for (size_t i = 0; i < p.syms.size(); ++i) {
    if (i) out += ",";
    out += names.name(p.syms[i]);
  }
  return out + "]";
}

namespace {

std::string print_word(const WordMono& w, const CoxeterMatrix& base, const CoxGraph& g) {
  if (w.syms.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.syms.size(); ++i) {
    if (i) out += "*";
    const auto [a, b] = g.pos_edges[letter_edge(w.syms[i])];
    out += letter_bar(w.syms[i]) ? "X[" : "x[";
    out += base.name(a) + "," + base.name(b) + "]";
  }
  return out;
}

/* Shared skeleton: emit terms tip first with signs pulled out. `unit` says
 * whether the monomial renders as "1" and should be elided next to a
 * coefficient. */
template <class M, class RenderMono>
std::string print_comb(const LinComb<M>& x, RenderMono&& render) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [mono, coeff] = *it;
    const bool neg = coeff < 0;
    const Rational mag = neg ? Rational(-coeff) : coeff;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    const std::string body = render(mono);
    if (mag == 1) out += body;
    else if (body == "1") out += print_rational(mag);
    else out += print_rational(mag) + "*" + body;
    first = false;
  }
  return out;
}

} // namespace

std::string print_element(const LinComb<PathMono>& x, const CoxeterMatrix& names) {
  return print_comb(x, [&](const PathMono& p) { return print_path(p, names); });
}

std::string print_word_element(const LinComb<WordMono>& x, const CoxeterMatrix& base) {
  const CoxGraph g = build_graph(base);
  return print_comb(x, [&](const WordMono& w) { return print_word(w, base, g); });
}

namespace {

struct Cursor {
  const std::string& text;
  size_t at = 0;

  void skip_ws() {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
  }
  bool done() {
    skip_ws();
    return at >= text.size();
  }
  char peek() {
    skip_ws();
    return at < text.size() ? text[at] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++at;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("column " + std::to_string(at + 1) + ": " + msg);
  }

  Int integer() {
    skip_ws();
    size_t start = at;
    if (at < text.size() && (text[at] == '+' || text[at] == '-')) ++at;
    size_t digits = at;
    while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) ++at;
    if (at == digits) fail("expected an integer");
    return Int(text.substr(start, at - start));
  }

  Rational coeff() {
    Rational num(integer());
    if (eat('/')) {
      Int den = integer();
      if (den == 0) fail("zero denominator");
      num /= Rational(den);
    }
    return num;
  }

  std::string name() {
    skip_ws();
    size_t start = at;
    while (at < text.size() && (std::isalnum(static_cast<unsigned char>(text[at])) ||
                                text[at] == '_' || text[at] == '\''))
      ++at;
    if (at == start) fail("expected a generator name");
    return text.substr(start, at - start);
  }

  int vertex(const CoxeterMatrix& names) {
    const size_t here = at;
    const int v = names.index_of(name());
    if (v < 0) {
      at = here;
      fail("unknown generator");
    }
    return v;
  }
};

bool starts_coeff(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

} // namespace

LinComb<PathMono> parse_element(const std::string& text, const CoxeterMatrix& names,
                                bool lax_paths) {
  Cursor c{text};
  LinComb<PathMono> out;
  bool any_fraction = false;
  if (c.done()) c.fail("empty element");
  bool first = true;
  while (!c.done()) {
    Rational sign = 1;
    if (c.eat('-')) sign = -1;
    else if (c.eat('+')) {
      if (first) c.fail("element may not start with '+'");
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    Rational coeff = sign;
    if (starts_coeff(c.peek())) {
      coeff = sign * c.coeff();
      any_fraction = any_fraction || !is_integral(coeff);
      if (coeff == 0 && c.peek() != '*' && c.peek() != '[') {
        first = false;
        continue; // bare zero term
      }
      if (!c.eat('*') && c.peek() != '[') c.fail("expected '*' before the path");
    }
    if (!c.eat('[')) c.fail("expected '['");
    PathMono p;
    p.syms.push_back(c.vertex(names));
    while (c.eat(',')) p.syms.push_back(c.vertex(names));
    if (!c.eat(']')) c.fail("expected ']' or ','");
    bool broken = false;
    for (size_t k = 0; k + 1 < p.syms.size(); ++k)
      if (names.bond(p.syms[k], p.syms[k + 1]) <= 2) {
        if (!lax_paths)
          c.fail("not a path: bond between " + names.name(p.syms[k]) + " and " +
                 names.name(p.syms[k + 1]) + " is at most 2");
        broken = true;
      }
    if (!broken) out.add_term(std::move(p), coeff);
    first = false;
  }
  out.set_domain(any_fraction ? Domain::Rationals : Domain::Integers);
  return out;
}

LinComb<WordMono> parse_word_element(const std::string& text, const CoxeterMatrix& base) {
  const CoxGraph g = build_graph(base);
  Cursor c{text};
  LinComb<WordMono> out;
  if (c.done()) c.fail("empty element");
  bool first = true;
  while (!c.done()) {
    Rational sign = 1;
    if (c.eat('-')) sign = -1;
    else if (c.eat('+')) {
      if (first) c.fail("element may not start with '+'");
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    Rational coeff = sign;
    bool saw_coeff = false;
    if (starts_coeff(c.peek())) {
      // "1" is also the unit factor; only treat a number as a coefficient
      // when it is not a lone "1".
      const size_t here = c.at;
      Rational value = c.coeff();
      if (value == 1 && is_integral(value) && c.peek() != '*') {
        c.at = here; // re-read as the unit factor below
      } else {
        coeff = sign * value;
        saw_coeff = true;
        if (!c.eat('*')) {
          out.add_term(WordMono{}, coeff); // bare coefficient term
          first = false;
          continue;
        }
      }
    }
    WordMono w;
    bool more = true;
    while (more) {
      char f = c.peek();
      if (f == '1') {
        c.eat('1'); // unit factor contributes nothing
      } else if (f == 'x' || f == 'X') {
        ++c.at;
        if (!c.eat('[')) c.fail("expected '[' after letter");
        const int a = c.vertex(base);
        if (!c.eat(',')) c.fail("expected ','");
        const int b = c.vertex(base);
        if (!c.eat(']')) c.fail("expected ']'");
        const int e = g.edge_index(a, b);
        if (e < 0) c.fail("no edge between " + base.name(a) + " and " + base.name(b));
        const auto& [lo, hi] = g.pos_edges[e];
        bool bar = (f == 'X');
        if (a != lo || b != hi) c.fail("letters are written on the forward edge");
        w.syms.push_back(word_letter(e, bar));
      } else {
        c.fail(saw_coeff || !w.syms.empty() ? "expected a factor" : "expected a term");
      }
      more = c.eat('*');
    }
    out.add_term(std::move(w), coeff);
    first = false;
  }
  return out;
}

} // namespace coxpath
