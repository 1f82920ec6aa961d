#include "nglie/expr.hpp"

#include <cctype>
#include <optional>

namespace nglie {

namespace {

enum class Ctx { Alg, Witt, Weyl };

struct ParsedTerm {
  Rat coeff = Rat(1);
  RatVec gamma;            // accumulated x exponents
  std::vector<int> texp;   // accumulated t exponents
  std::optional<int> dslot;           // D[p]
  std::optional<std::vector<int>> pexp;  // P[...]
};

class Parser {
 public:
  Parser(std::string text, int gdim, int d, int ell, Ctx ctx)
      : src_(std::move(text)), gdim_(gdim), d_(d), ell_(ell), ctx_(ctx) {}

  std::vector<ParsedTerm> element() {
    std::vector<ParsedTerm> terms;
    skip();
    bool negate = eat('-');
    terms.push_back(term(negate));
    skip();
    while (!done()) {
      char c = peek();
      if (c == '+' || c == '-') {
        pos_++;
        terms.push_back(term(c == '-'));
        skip();
      } else {
        fail("expected '+' or '-'");
      }
    }
    return terms;
  }

  std::vector<ParsedTerm> element_until(char stop) {
    std::vector<ParsedTerm> terms;
    skip();
    if (!done() && peek() == stop) return terms;  // empty body = zero
    bool negate = eat('-');
    terms.push_back(term(negate));
    skip();
    while (!done() && peek() != stop) {
      char c = peek();
      if (c == '+' || c == '-') {
        pos_++;
        terms.push_back(term(c == '-'));
        skip();
      } else {
        fail("expected '+' or '-'");
      }
    }
    return terms;
  }

  void expect(char c) {
    skip();
    if (done() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
    pos_++;
  }

  bool eat_word(const char* w) {
    skip();
    std::size_t n = std::string(w).size();
    if (src_.compare(pos_, n, w) == 0) {
      pos_ += n;
      return true;
    }
    return false;
  }

  void finish() {
    skip();
    if (!done()) fail("trailing input");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" +
                     src_ + "'");
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      pos_++;
  }

  bool done() {
    skip();
    return pos_ >= src_.size();
  }

  char peek() { return src_[pos_]; }

  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      pos_++;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      pos_++;
    if (pos_ == start) fail("expected digits");
    return src_.substr(start, pos_ - start);
  }

  Rat rational() {
    skip();
    std::string s;
    if (eat('-')) s += "-";
    s += digits();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      pos_++;
      s += "/" + digits();
    }
    return rat_parse(s);
  }

  int small_int() {
    std::string s = digits();
    if (s.size() > 6) fail("index too large");
    return std::stoi(s);
  }

  bool at_factor() {
    skip();
    if (pos_ >= src_.size()) return false;
    char c = src_[pos_];
    return (c == 'x' || c == 't' || c == 'D' || c == 'P');
  }

  ParsedTerm term(bool negate) {
    ParsedTerm t;
    t.gamma = vec_zero(gdim_);
    t.texp.assign(d_, 0);
    skip();
    bool saw_rational = false;
    if (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-')) {
      t.coeff = rational();
      saw_rational = true;
    }
    if (negate) t.coeff = -t.coeff;
    bool saw_factor = false;
    if (saw_rational) {
      skip();
      if (!done() && peek() == '*') {
        pos_++;
        factor(t);
        saw_factor = true;
      }
    } else {
      factor(t);
      saw_factor = true;
    }
    while (saw_factor) {
      skip();
      if (!done() && peek() == '*') {
        pos_++;
        factor(t);
      } else {
        break;
      }
    }
    if (!saw_rational && !saw_factor) fail("empty term");
    return t;
  }

  void factor(ParsedTerm& t) {
    skip();
    if (done()) fail("expected factor");
    char c = peek();
    if (c == 'x') {
      pos_++;
      expect('[');
      RatVec v;
      v.push_back(rational());
      while (eat(',')) v.push_back(rational());
      expect(']');
      if (static_cast<int>(v.size()) != gdim_)
        fail("x arity must be " + std::to_string(gdim_));
      t.gamma = vec_add(t.gamma, v);
    } else if (c == 't') {
      pos_++;
      expect('[');
      std::vector<int> v;
      v.push_back(small_int());
      while (eat(',')) v.push_back(small_int());
      expect(']');
      if (static_cast<int>(v.size()) != d_)
        fail("t arity must be " + std::to_string(d_));
      for (int i = 0; i < d_; i++) t.texp[i] += v[i];
    } else if (c == 'D') {
      if (ctx_ != Ctx::Witt) fail("D factor not allowed here");
      pos_++;
      expect('[');
      int p = small_int();
      expect(']');
      if (p < 1 || p > ell_) fail("D index out of range");
      if (t.dslot) fail("at most one D factor per term");
      t.dslot = p;
    } else if (c == 'P') {
      if (ctx_ != Ctx::Weyl) fail("P factor not allowed here");
      pos_++;
      expect('[');
      std::vector<int> v;
      v.push_back(small_int());
      while (eat(',')) v.push_back(small_int());
      expect(']');
      if (static_cast<int>(v.size()) != ell_)
        fail("P arity must be " + std::to_string(ell_));
      if (t.pexp) fail("at most one P factor per term");
      t.pexp = std::move(v);
    } else {
      fail("expected factor");
    }
  }

  std::string src_;
  std::size_t pos_ = 0;
  int gdim_, d_, ell_;
  Ctx ctx_;
};

AlgElem assemble_alg(SpecPtr spec, const std::vector<ParsedTerm>& terms) {
  AlgElem e = elem_zero(spec);
  for (const auto& t : terms) {
    Monomial m = make_monomial(*spec, t.gamma, t.texp);
    e = elem_add(e, monomial_elem(spec, std::move(m), t.coeff));
  }
  return e;
}

}  // namespace

AlgElem parse_alg_elem(SpecPtr spec, const std::string& text) {
  Parser p(text, spec->gdim(), spec->d, 0, Ctx::Alg);
  auto terms = p.element();
  p.finish();
  return assemble_alg(std::move(spec), terms);
}

WittElem parse_witt_elem(WittPtr spec, const std::string& text) {
  Parser p(text, spec->alg->gdim(), spec->alg->d, spec->ell(), Ctx::Witt);
  auto terms = p.element();
  p.finish();
  WittElem w = witt_zero(spec);
  for (const auto& t : terms) {
    // Zero constants are tolerated so the zero element round-trips.
    if (!t.dslot) {
      if (t.coeff == 0 && vec_is_zero(t.gamma)) continue;
      throw ParseError("every term needs a D factor");
    }
    Monomial m = make_monomial(*spec->alg, t.gamma, t.texp);
    w.u[*t.dslot - 1] = elem_add(
        w.u[*t.dslot - 1], monomial_elem(spec->alg, std::move(m), t.coeff));
  }
  return w;
}

WeylOp parse_weyl_op(WittPtr spec, const std::string& text) {
  Parser p(text, spec->alg->gdim(), spec->alg->d, spec->ell(), Ctx::Weyl);
  auto terms = p.element();
  p.finish();
  WeylOp op = weyl_zero(spec);
  for (const auto& t : terms) {
    Monomial m = make_monomial(*spec->alg, t.gamma, t.texp);
    std::vector<int> dexp = t.pexp ? *t.pexp : std::vector<int>(spec->ell(), 0);
    op = weyl_add(op, weyl_term(spec, std::move(m), std::move(dexp), t.coeff));
  }
  return op;
}

SuperElem parse_super_elem(const SuperSpec& spec, const std::string& text) {
  Parser p(text, spec.alg->gdim(), spec.alg->d, 0, Ctx::Alg);
  if (!p.eat_word("even{")) throw ParseError("expected 'even{'");
  auto even_terms = p.element_until('}');
  p.expect('}');
  if (!p.eat_word("odd{")) throw ParseError("expected 'odd{'");
  auto odd_terms = p.element_until('}');
  p.expect('}');
  p.finish();
  return SuperElem{assemble_alg(spec.alg, even_terms),
                   assemble_alg(spec.alg, odd_terms)};
}

}  // namespace nglie
