#include "chernflop/manifold_parser.hpp"

#include <cctype>
#include <sstream>

#include "chernflop/errors.hpp"

namespace chernflop {

namespace {

BordismVector as_vector(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return BordismVector::point() * *r;
  if (const auto* m = std::get_if<Manifold>(&v)) return chern_numbers(*m);
  return std::get<BordismVector>(v);
}

Value add(const Value& a, const Value& b, bool subtract) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
    const Rational& x = std::get<Rational>(a);
    const Rational& y = std::get<Rational>(b);
    return subtract ? Rational(x - y) : Rational(x + y);
  }
  const BordismVector va = as_vector(a);
  const BordismVector vb = as_vector(b);
  if (va.dim() != vb.dim()) {
    throw DegreeMismatch("cannot add classes of dimensions " + std::to_string(va.dim()) + " and " + std::to_string(vb.dim()));
  }
  return subtract ? va - vb : va + vb;
}

Value multiply(const Value& a, const Value& b) {
  const auto* ra = std::get_if<Rational>(&a);
  const auto* rb = std::get_if<Rational>(&b);
  if (ra && rb) return Rational(*ra * *rb);
  if (ra) return as_vector(b) * *ra;
  if (rb) return as_vector(a) * *rb;
  const auto* ma = std::get_if<Manifold>(&a);
  const auto* mb = std::get_if<Manifold>(&b);
  if (ma && mb) return product(*ma, *mb);
  return bordism_product(as_vector(a), as_vector(b));
}

Value negate(const Value& a) {
  if (const auto* r = std::get_if<Rational>(&a)) return Rational(-*r);
  return -as_vector(a);
}

Value raise(const Value& a, int e) {
  if (e < 0) throw ParseError("negative exponents are not supported");
  if (const auto* r = std::get_if<Rational>(&a)) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= *r;
    return out;
  }
  if (const auto* m = std::get_if<Manifold>(&a)) return power(*m, e);
  return bordism_power(std::get<BordismVector>(a), e);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Value parse_all() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

  std::array<CohElement, 2> line_pair_all(const Manifold& base) {
    auto out = line_pair(base);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after line bundles");
    return out;
  }

  CohElement line_all(const Manifold& base) {
    CohElement out = line(base);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after line bundle");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(const std::string& w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  void expect_word(const std::string& w) {
    if (!accept_word(w)) fail("expected '" + w + "'");
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    const long v = std::stol(text_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (accept('+')) {
        v = add(v, term(), false);
      } else if (accept('-')) {
        v = add(v, term(), true);
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    while (true) {
      if (accept('*') || accept('x')) {
        v = multiply(v, factor());
      } else {
        return v;
      }
    }
  }

  Value factor() {
    Value v = unary();
    if (accept('^')) {
      const long e = integer();
      v = raise(v, static_cast<int>(e));
    }
    return v;
  }

  Value unary() {
    if (accept('-')) return negate(unary());
    return primary();
  }

  Value primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long num = integer();
      long den = 1;
      if (accept('/')) den = integer();
      if (den == 0) fail("zero denominator");
      return make_rational(num, den);
    }
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (accept_word("K3")) return k3_vector();
    if (accept_word("S6")) return s6_vector();
    if (accept_word("X4")) return x4_vector();
    if (accept_word("P")) {
      expect('(');
      const long n = integer();
      expect(')');
      if (n < 0 || n > 64) fail("projective dimension out of range");
      return projective_space(static_cast<int>(n));
    }
    const std::size_t start = pos_;
    if (accept_word("TW")) {
      expect('(');
      const Manifold z = base();
      expect(';');
      expect_word("A");
      expect('=');
      auto a = line_pair(z);
      expect(';');
      expect_word("B");
      expect('=');
      auto b = line_pair(z);
      expect(')');
      FlopInstance inst = make_instance(z, a, b);
      inst.label = text_.substr(start, pos_ - start);
      return twisted_bundle(inst);
    }
    if (accept_word("SU")) {
      expect('(');
      const Manifold z = base();
      CohElement l[3];
      for (int i = 0; i < 3; ++i) {
        expect(';');
        expect_word("L" + std::to_string(i + 1));
        expect('=');
        l[i] = line(z);
      }
      expect(')');
      return twisted_bundle(su_flop(z, l[0], l[1], l[2]));
    }
    fail("unknown term");
  }

  Manifold base() {
    expect_word("Z");
    expect('=');
    const Value v = expr();
    const auto* m = std::get_if<Manifold>(&v);
    if (!m) fail("the base must be a product of projective spaces");
    if (m->space->layer()) fail("the base must not carry a bundle layer");
    if (m->tangent_neg.size() != m->space->base_dims().size()) fail("the base must be a product of projective spaces");
    return *m;
  }

  CohElement line(const Manifold& z) {
    expect_word("O");
    expect('(');
    std::vector<int> degrees{static_cast<int>(integer())};
    while (accept(',')) degrees.push_back(static_cast<int>(integer()));
    expect(')');
    if (z.space->base_dims().empty() && degrees.size() == 1 && degrees[0] == 0) return CohElement(z.space);
    if (degrees.size() != z.space->base_dims().size()) {
      fail("line bundle needs " + std::to_string(z.space->base_dims().size()) + " degree(s)");
    }
    return line_class(z, degrees);
  }

  std::array<CohElement, 2> line_pair(const Manifold& z) {
    CohElement first = line(z);
    expect('+');
    CohElement second = line(z);
    return {first, second};
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Value parse_manifold_expression(const std::string& text) { return Parser(text).parse_all(); }

std::array<CohElement, 2> parse_line_pair(const std::string& text, const Manifold& base) {
  return Parser(text).line_pair_all(base);
}

CohElement parse_line(const std::string& text, const Manifold& base) { return Parser(text).line_all(base); }

BordismVector to_vector(const Value& v) { return as_vector(v); }

int dimension(const Value& v) {
  if (std::holds_alternative<Rational>(v)) return 0;
  if (const auto* m = std::get_if<Manifold>(&v)) return m->n;
  return std::get<BordismVector>(v).dim();
}

std::string describe(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return "scalar " + to_short_string(*r);
  if (const auto* m = std::get_if<Manifold>(&v)) return "manifold " + m->label + " (dim " + std::to_string(m->n) + ")";
  return "bordism class (dim " + std::to_string(std::get<BordismVector>(v).dim()) + ")";
}

}  // namespace chernflop
