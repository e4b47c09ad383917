#include "fgfc/cli.hpp"

#include "fgfc/constructions.hpp"
#include "fgfc/primes.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

namespace fgfc {

namespace {

struct Token {
  enum Kind { End, Number, Ident, Sym } kind = End;
  std::string text;
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    std::string msg = what + " at line " + std::to_string(tok_.line) + ", column " + std::to_string(tok_.column);
    if (!expected.empty()) {
      msg += "; expected one of:";
      for (const std::string& e : expected) msg += " " + e;
    }
    throw ParseError(msg, tok_.line, tok_.column, std::move(expected));
  }
  bool accept(const std::string& sym) {
    if (tok_.kind == Token::Sym && tok_.text == sym) {
      advance();
      return true;
    }
    return false;
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) fail(describe() + " unexpected", {"'" + sym + "'"});
  }
  std::string describe() const {
    switch (tok_.kind) {
      case Token::End:
        return "end of input";
      case Token::Number:
        return "number " + tok_.text;
      case Token::Ident:
        return "identifier '" + tok_.text + "'";
      case Token::Sym:
        return "'" + tok_.text + "'";
    }
    return "token";
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
    tok_ = Token{};
    tok_.line = line_;
    tok_.column = col_;
    if (pos_ >= s_.size()) return;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Number;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) tok_.text += bump();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Token::Ident;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) tok_.text += bump();
    } else {
      tok_.kind = Token::Sym;
      tok_.text = std::string(1, bump());
    }
  }
  char bump() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

const std::vector<std::string> kOperand{"number", "variable", "'('", "'-'"};

BigInt parse_count(Lexer& lx) {
  if (lx.peek().kind != Token::Number) lx.fail(lx.describe() + " unexpected", {"number"});
  return BigInt(lx.take().text);
}

class ExprParser {
 public:
  ExprParser(const RingDescriptor& r, Lexer& lx) : r_(r), lx_(lx) {}

  RingElement expr() {
    RingElement acc = term();
    for (;;) {
      if (lx_.accept("+")) {
        acc = acc + term();
      } else if (lx_.accept("-")) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

 private:
  RingElement term() {
    RingElement acc = unary();
    for (;;) {
      if (lx_.accept("*")) {
        acc = acc * unary();
      } else if (lx_.peek().kind == Token::Sym && lx_.peek().text == "/") {
        const Token at = lx_.peek();
        lx_.take();
        RingElement d = unary();
        if (d.is_zero()) throw ParseError("division by zero at line " + std::to_string(at.line) + ", column " + std::to_string(at.column), at.line, at.column, {});
        try {
          acc = acc / d;
        } catch (const std::exception& e) {
          throw ParseError(std::string("division not possible: ") + e.what(), at.line, at.column, {});
        }
      } else {
        return acc;
      }
    }
  }
  RingElement unary() {
    if (lx_.accept("-")) return -unary();
    if (lx_.accept("+")) return unary();
    return power();
  }
  RingElement power() {
    RingElement base = atom();
    if (!lx_.accept("^")) return base;
    if (lx_.peek().kind != Token::Number) lx_.fail(lx_.describe() + " unexpected", {"exponent"});
    const Token t = lx_.peek();
    BigInt e = parse_count(lx_);
    if (e > 10000) throw ParseError("exponent too large", t.line, t.column, {});
    return base.pow(static_cast<unsigned>(e));
  }
  RingElement atom() {
    const Token t = lx_.peek();
    if (t.kind == Token::Number) {
      lx_.take();
      return RingElement(MPoly::constant(r_.nvars(), Scalar(r_.domain(), BigRational(BigInt(t.text)))));
    }
    if (t.kind == Token::Ident) {
      lx_.take();
      return variable(t);
    }
    if (lx_.accept("(")) {
      RingElement e = expr();
      lx_.expect(")");
      return e;
    }
    lx_.fail(lx_.describe() + " unexpected", kOperand);
  }
  RingElement variable(const Token& t) {
    const Space& s = r_.space();
    for (std::size_t i = 0; i < s.nx(); ++i) {
      if (s.x_names[i] == t.text) return r_.variable(i);
    }
    static const std::regex tvar("t([0-9]+)"), alias("a([0-9]+)");
    std::smatch m;
    auto bad = [&](const std::string& why) { throw ParseError(why + " at line " + std::to_string(t.line) + ", column " + std::to_string(t.column), t.line, t.column, {"variable"}); };
    if (std::regex_match(t.text, m, tvar)) {
      const std::size_t i = std::stoul(m[1]);
      if (s.rank == 0) bad("'" + t.text + "' needs a valuation ring");
      if (i < 1 || i > s.rank) bad("'" + t.text + "' beyond the rank " + std::to_string(s.rank));
      return r_.t(i);
    }
    if (std::regex_match(t.text, m, alias)) {
      const std::size_t i = std::stoul(m[1]);
      if (s.rank == 0) bad("'" + t.text + "' needs a valuation ring");
      if (i >= s.rank) bad("alias '" + t.text + "' exhausts the rank " + std::to_string(s.rank));
      return r_.t(i + 1);
    }
    bad("unknown variable '" + t.text + "'");
    return {};
  }

  const RingDescriptor& r_;
  Lexer& lx_;
};

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t small_count(Lexer& lx, const char* what) {
  const Token t = lx.peek();
  BigInt v = parse_count(lx);
  if (v > BigInt(1) << 31) throw ParseError(std::string(what) + " too large", t.line, t.column, {});
  return static_cast<std::uint64_t>(v);
}

Domain parse_field(Lexer& lx) {
  const Token t = lx.peek();
  if (t.kind == Token::Ident && t.text == "Q") {
    lx.take();
    return Domain{};
  }
  if (t.kind == Token::Ident && t.text == "Fp") {
    lx.take();
    lx.expect("(");
    const Token pt = lx.peek();
    const std::uint64_t p = small_count(lx, "p");
    if (!is_prime_u64(p)) throw ParseError(std::to_string(p) + " is not prime", pt.line, pt.column, {"prime"});
    lx.expect(")");
    return Domain{p};
  }
  lx.fail(lx.describe() + " unexpected", {"Q", "Fp"});
}

std::vector<std::string> infer_vars(const std::string& text) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*"), indexed("x([0-9]+)");
  bool plain = false;
  std::size_t top = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it) {
    const std::string w = it->str();
    std::smatch m;
    if (w == "x") {
      plain = true;
    } else if (std::regex_match(w, m, indexed)) {
      top = std::max<std::size_t>(top, std::stoul(m[1]));
    }
  }
  if (top == 0) return {"x"};
  if (plain) throw ParseError("ideal mixes x with x1..xm; pass --vars", 1, 1, {});
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= top; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace

BaseRing parse_ring(const std::string& text) {
  Lexer lx(text);
  const Token t = lx.peek();
  BaseRing out;
  if (t.kind != Token::Ident) lx.fail(lx.describe() + " unexpected", {"Q", "Fp", "Z", "Zmod", "Val"});
  if (t.text == "Q" || t.text == "Fp") {
    const Domain d = parse_field(lx);
    out = d.is_rational() ? BaseRing::rational() : BaseRing::prime_field(d.modulus);
  } else if (t.text == "Z") {
    lx.take();
    out = BaseRing::integers();
  } else if (t.text == "Zmod") {
    lx.take();
    lx.expect("(");
    const Token nt = lx.peek();
    const std::uint64_t n = small_count(lx, "n");
    if (n < 2) throw ParseError("Zmod needs n >= 2", nt.line, nt.column, {"integer >= 2"});
    lx.expect(")");
    out = BaseRing::integers_mod(n);
  } else if (t.text == "Val") {
    lx.take();
    lx.expect("(");
    std::size_t rank = 0;
    Domain base{};
    bool have_rank = false;
    for (bool first = true; first || lx.accept(","); first = false) {
      const Token key = lx.peek();
      if (key.kind == Token::Ident && key.text == "rank") {
        lx.take();
        lx.expect("=");
        const Token rt = lx.peek();
        rank = small_count(lx, "rank");
        if (rank < 1 || rank > 16) throw ParseError("rank must be between 1 and 16", rt.line, rt.column, {});
        have_rank = true;
      } else if (key.kind == Token::Ident && key.text == "base") {
        lx.take();
        lx.expect("=");
        base = parse_field(lx);
      } else {
        lx.fail(lx.describe() + " unexpected", {"rank", "base"});
      }
    }
    lx.expect(")");
    if (!have_rank) throw ParseError("Val needs rank=r", t.line, t.column, {"rank"});
    out = BaseRing::valuation(rank, base);
  } else {
    lx.fail("unknown ring '" + t.text + "'", {"Q", "Fp", "Z", "Zmod", "Val"});
  }
  if (lx.peek().kind != Token::End) lx.fail(lx.describe() + " unexpected", {"end of input"});
  return out;
}

std::vector<RingElement> parse_ideal(const RingDescriptor& ring, const std::string& text) {
  Lexer lx(text);
  std::vector<RingElement> out;
  ExprParser p(ring, lx);
  for (;;) {
    const Token start = lx.peek();
    RingElement g = ring.canonical(p.expr());
    if (!ring.contains(g)) {
      throw ParseError("generator " + ring.render(g) + " is not an element of the ring", start.line, start.column, {});
    }
    out.push_back(std::move(g));
    if (lx.accept(";")) {
      if (lx.peek().kind == Token::End) break;
      continue;
    }
    if (lx.peek().kind != Token::End) lx.fail(lx.describe() + " unexpected", {"operator", "';'", "end of input"});
    break;
  }
  return out;
}

Problem make_preset(const std::string& name, std::size_t rank, std::size_t k, const BaseRing* base) {
  if (rank < 1 || rank > 16) throw ParseError("preset rank must be between 1 and 16", 1, 1, {});
  if (k < 1) throw ParseError("truncation must be at least 1", 1, 1, {});
  if (k > rank) throw ParseError("truncation " + std::to_string(k) + " exhausts the rank " + std::to_string(rank), 1, 1, {});
  Problem p;
  p.preset = name;
  p.preset_rank = rank;
  p.preset_k = k;
  const BaseRing b = base != nullptr ? *base : BaseRing::valuation(rank, Domain{});
  if (name == "opex") {
    p.vars = {"x"};
    p.ring = RingDescriptor(b, Space{p.vars, rank});
    p.gens = elements_of(op_family(p.ring, k, 0));
  } else if (name == "glued") {
    p.vars = {"x", "y"};
    p.ring = RingDescriptor(b, Space{p.vars, rank});
    p.gens = glued_algebra(p.ring, elements_of(op_family(p.ring, k, 0)), 1);
  } else {
    throw ParseError("unknown preset '" + name + "'", 1, 8, {"opex", "glued"});
  }
  return p;
}

Problem parse_problem(const std::string& ring_text, const std::string& ideal_text, const std::vector<std::string>& vars) {
  static const std::regex preset(R"(\s*preset\s*:\s*([A-Za-z_]+)\s*\(\s*([0-9]+)\s*,\s*([0-9]+)\s*\)\s*)");
  std::smatch m;
  if (ideal_text.find("preset") != std::string::npos) {
    if (!std::regex_match(ideal_text, m, preset)) throw ParseError("malformed preset", 1, 1, {"preset:NAME(rank,k)"});
    const std::size_t rank = std::stoul(m[2]), k = std::stoul(m[3]);
    if (ring_text.empty()) return make_preset(m[1], rank, k);
    const BaseRing b = parse_ring(ring_text);
    if (b.kind != BaseKind::ValuationDomain || b.rank != rank) {
      throw ParseError("preset needs --ring Val(rank=" + std::to_string(rank) + ", ...)", 1, 1, {});
    }
    return make_preset(m[1], rank, k, &b);
  }
  if (ring_text.empty()) throw ParseError("missing ring", 1, 1, {"Q", "Fp", "Z", "Zmod", "Val"});
  const BaseRing b = parse_ring(ring_text);
  Problem p;
  p.vars = vars.empty() ? infer_vars(ideal_text) : vars;
  std::set<std::string> seen;
  static const std::regex name("[A-Za-z_][A-Za-z0-9_]*"), reserved("(t|a)[0-9]+");
  for (const std::string& v : p.vars) {
    if (!std::regex_match(v, name) || std::regex_match(v, reserved) || !seen.insert(v).second) {
      throw ParseError("bad variable name '" + v + "'", 1, 1, {"identifier"});
    }
  }
  p.ring = RingDescriptor(b, Space{p.vars, b.kind == BaseKind::ValuationDomain ? b.rank : 0});
  p.gens = parse_ideal(p.ring, ideal_text);
  return p;
}

}  // namespace fgfc
