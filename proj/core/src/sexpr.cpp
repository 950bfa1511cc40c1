// S-expression surface syntax for terms and formulas.
//
//   term    := "e" | "v<digits>" | "(" "*" term term ")" | "(" "inv" term ")"
//   formula := "(" "=" term term ")"
//            | "(" "not" formula ")"
//            | "(" ("and" | "or") formula+ ")"
//            | "(" "=>" formula formula ")"
//            | "(" ("forall" | "exists") "v<digits>" formula ")"
//
// ';' starts a comment that runs to the end of the line.

#include <charconv>
#include <limits>

#include "sgd/error.hpp"
#include "sgd/formula.hpp"

namespace sgd {

namespace {

void render_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::kOne:
      out += 'e';
      return;
    case Term::Kind::kVar:
      out += 'v';
      out += std::to_string(t.var_index());
      return;
    case Term::Kind::kMul:
      out += "(* ";
      render_into(t.left(), out);
      out += ' ';
      render_into(t.right(), out);
      out += ')';
      return;
    case Term::Kind::kInv:
      out += "(inv ";
      render_into(t.arg(), out);
      out += ')';
      return;
  }
}

const char* head_of(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kEq: return "=";
    case Formula::Kind::kNot: return "not";
    case Formula::Kind::kAnd: return "and";
    case Formula::Kind::kOr: return "or";
    case Formula::Kind::kImplies: return "=>";
    case Formula::Kind::kForall: return "forall";
    case Formula::Kind::kExists: return "exists";
  }
  return "?";
}

void render_into(const Formula& f, std::string& out) {
  out += '(';
  out += head_of(f.kind());
  if (f.kind() == Formula::Kind::kEq) {
    out += ' ';
    render_into(f.lhs(), out);
    out += ' ';
    render_into(f.rhs(), out);
  } else {
    if (f.is_quantifier()) {
      out += " v";
      out += std::to_string(f.bound_var());
    }
    for (const auto& c : f.children()) {
      out += ' ';
      render_into(c, out);
    }
  }
  out += ')';
}

struct Token {
  enum class Kind { kOpen, kClose, kAtom, kEnd } kind;
  std::string_view text;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  Formula formula() {
    expect_open("'(' starting a formula");
    const Token head = take_atom("formula head (=, not, and, or, =>, forall, exists)");
    if (head.text == "=") {
      Term lhs = term();
      Term rhs = term();
      expect_close("')' closing '='");
      return Formula::eq(std::move(lhs), std::move(rhs));
    }
    if (head.text == "not") {
      Formula f = formula();
      expect_close("')' closing 'not'");
      return Formula::negation(std::move(f));
    }
    if (head.text == "and" || head.text == "or") {
      std::vector<Formula> items;
      while (tok_.kind == Token::Kind::kOpen) items.push_back(formula());
      if (items.empty()) fail(Errc::kArity, "at least one operand", "empty connective");
      expect_close("')' or '(' in connective");
      return head.text == "and" ? Formula::conj(std::move(items)) : Formula::disj(std::move(items));
    }
    if (head.text == "=>") {
      Formula premise = formula();
      Formula conclusion = formula();
      expect_close("')' closing '=>'");
      return Formula::implies(std::move(premise), std::move(conclusion));
    }
    if (head.text == "forall" || head.text == "exists") {
      const Token v = take_atom("bound variable");
      const Var index = variable_index(v);
      Formula body = formula();
      expect_close("')' closing quantifier");
      return head.text == "forall" ? Formula::forall(index, std::move(body))
                                   : Formula::exists(index, std::move(body));
    }
    fail_at(head, Errc::kSyntax, "formula head", "unknown formula head '" + std::string(head.text) + "'");
  }

  Term term() {
    if (tok_.kind == Token::Kind::kAtom) {
      const Token atom = tok_;
      advance();
      if (atom.text == "e") return Term::one();
      return Term::var(variable_index(atom));
    }
    expect_open("term");
    const Token head = take_atom("term head (* or inv)");
    if (head.text == "*") {
      Term l = operand("first operand of '*'");
      Term r = operand("second operand of '*'");
      if (tok_.kind != Token::Kind::kClose)
        fail(Errc::kArity, "')' after two operands", "'*' takes exactly two operands");
      advance();
      return Term::mul(std::move(l), std::move(r));
    }
    if (head.text == "inv") {
      Term a = operand("operand of 'inv'");
      if (tok_.kind != Token::Kind::kClose)
        fail(Errc::kArity, "')' after one operand", "'inv' takes exactly one operand");
      advance();
      return Term::inv(std::move(a));
    }
    fail_at(head, Errc::kSyntax, "term head", "unknown term head '" + std::string(head.text) + "'");
  }

  void finish() {
    if (tok_.kind != Token::Kind::kEnd) fail(Errc::kSyntax, "end of input", "trailing input");
  }

 private:
  Term operand(const char* what) {
    if (tok_.kind == Token::Kind::kClose || tok_.kind == Token::Kind::kEnd)
      fail(tok_.kind == Token::Kind::kClose ? Errc::kArity : Errc::kSyntax, what, "missing operand");
    return term();
  }

  Var variable_index(const Token& t) {
    const auto s = t.text;
    if (s.size() < 2 || s[0] != 'v') fail_at(t, Errc::kSyntax, "variable v<digits>", "bad variable");
    Var index = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), index);
    if (ec != std::errc() || ptr != s.data() + s.size())
      fail_at(t, Errc::kSyntax, "variable v<digits>", "bad variable '" + std::string(s) + "'");
    return index;
  }

  void expect_open(const char* what) {
    if (tok_.kind != Token::Kind::kOpen) fail(Errc::kSyntax, what, "unexpected token");
    advance();
  }

  void expect_close(const char* what) {
    if (tok_.kind != Token::Kind::kClose) fail(Errc::kSyntax, what, "unexpected token");
    advance();
  }

  Token take_atom(const char* what) {
    if (tok_.kind != Token::Kind::kAtom) fail(Errc::kSyntax, what, "unexpected token");
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(Errc code, const std::string& expected, const std::string& message) {
    fail_at(tok_, code, expected, message);
  }

  [[noreturn]] void fail_at(const Token& t, Errc code, const std::string& expected,
                            std::string message) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < t.offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    if (t.kind == Token::Kind::kEnd) message += " (end of input)";
    throw ParseError(code, t.offset, line, column, expected, message);
  }

  void advance() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= src_.size()) {
      tok_ = {Token::Kind::kEnd, {}, src_.size()};
      return;
    }
    const std::size_t start = pos_;
    if (src_[pos_] == '(' || src_[pos_] == ')') {
      tok_ = {src_[pos_] == '(' ? Token::Kind::kOpen : Token::Kind::kClose, src_.substr(pos_, 1),
              start};
      ++pos_;
      return;
    }
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r') break;
      ++pos_;
    }
    tok_ = {Token::Kind::kAtom, src_.substr(start, pos_ - start), start};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_{Token::Kind::kEnd, {}, 0};
};

}  // namespace

std::string render(const Term& t) {
  std::string out;
  render_into(t, out);
  return out;
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.finish();
  return t;
}

}  // namespace sgd
