#include "qcl/formexpr.hpp"

#include <cctype>
#include <sstream>

namespace qcl {
namespace {

struct Parser {
  const std::string& s;
  const FieldSpec& F;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  long integer() {
    skip();
    std::size_t start = i;
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) throw ParseError("integer too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected an integer", i);
    return v;
  }

  Fel generator_power() {  // 'a' ['^' int]
    std::size_t at = i;
    ++i;  // consume 'a'
    if (F.m < 2) throw ParseError("coefficient 'a' requires an extension field", at);
    long e = 1;
    if (eat('^')) e = integer();
    return F.pow(Fel(F.p), e);
  }

  // int | int ['*'] a-power | a-power
  Fel coef_atom() {
    skip();
    if (peek() == 'a') return generator_power();
    Fel v = F.from_int(integer());
    skip();
    if (peek() == 'a') return F.mul(v, generator_power());
    if (peek() == '*' && i + 1 < s.size() && s[i + 1] == 'a') {
      ++i;
      return F.mul(v, generator_power());
    }
    return v;
  }

  Fel paren_coef() {  // '(' ['-'] atom (('+'|'-') atom)* ')'
    eat('(');
    bool neg = eat('-');
    Fel v = coef_atom();
    if (neg) v = F.neg(v);
    while (true) {
      if (eat('+')) {
        v = F.add(v, coef_atom());
      } else if (eat('-')) {
        v = F.sub(v, coef_atom());
      } else {
        break;
      }
    }
    if (!eat(')')) throw ParseError("expected ')'", i);
    return v;
  }

  int variable() {  // 'x' digit in 0..3
    skip();
    std::size_t at = i;
    if (peek() != 'x') throw ParseError("expected a variable x0..x3", i);
    ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected a variable index", i);
    int v = s[i] - '0';
    ++i;
    if (v > 3) throw ParseError("variable index out of range", at);
    return v;
  }

  // one monomial term added into the form
  void term(Form4& f, bool negative) {
    Fel c = 1;
    char p = peek();
    if (std::isdigit(static_cast<unsigned char>(p)) || p == 'a' || p == '(') {
      c = p == '(' ? paren_coef() : coef_atom();
      eat('*');
    }
    int v1 = variable();
    int v2;
    if (eat('^')) {
      std::size_t at = i;
      if (integer() != 2) throw ParseError("only exponent 2 is allowed", at);
      v2 = v1;
    } else if (eat('*')) {
      v2 = variable();
    } else {
      throw ParseError("expected '^2' or '*' and a second variable", i);
    }
    if (negative) c = F.neg(c);
    int lo = std::min(v1, v2), hi = std::max(v1, v2);
    int idx = mon4_index(lo, hi);
    f[idx] = F.add(f[idx], c);
  }

  Form4 parse() {
    Form4 f{};
    bool neg = eat('-');
    term(f, neg);
    while (!eof()) {
      if (eat('+')) {
        term(f, false);
      } else if (eat('-')) {
        term(f, true);
      } else {
        throw ParseError("expected '+' or '-'", i);
      }
    }
    return f;
  }
};

}  // namespace

Form4 parse_form(const std::string& text, const FieldSpec& F) {
  Parser p{text, F};
  return p.parse();
}

std::string serialize_form(const FieldSpec& F, const Form4& f) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Fel c = f[mon4_index(i, j)];
      if (c == 0) continue;
      if (!first) os << "+";
      first = false;
      if (c != 1) {
        std::string cs = F.element_str(c);
        if (int(c) < F.p)
          os << cs << "*";
        else
          os << "(" << cs << ")*";
      }
      if (i == j)
        os << "x" << i << "^2";
      else
        os << "x" << i << "*x" << j;
    }
  if (first) return "0";
  return os.str();
}

}  // namespace qcl
