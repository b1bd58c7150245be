#include "ga/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <system_error>

#include "ga/text.hpp"
#include "ga/transforms.hpp"

namespace ga::expr {

namespace {

// ========================================================================
// FUNCTION TABLE
// ========================================================================

struct UnaryFunction {
  std::string_view name;
  UnaryOp op;
};

constexpr std::array unary_functions{
    UnaryFunction{"rev", UnaryOp::reverse},
    UnaryFunction{"ginv", UnaryOp::grade_involution},
    UnaryFunction{"conj", UnaryOp::clifford_conjugate},
    UnaryFunction{"dual", UnaryOp::dual},
    UnaryFunction{"idual", UnaryOp::inverse_dual},
    UnaryFunction{"inv", UnaryOp::inverse},
};

struct CallSpec {
  std::string_view name;
  int min_args;
  int max_args; // -1: unbounded
};

constexpr std::array calls{
    CallSpec{"grade", 2, 2},  CallSpec{"exp", 1, 1},
    CallSpec{"expb", 2, 2},   CallSpec{"proj", 2, 2},
    CallSpec{"rej", 2, 2},    CallSpec{"reflect", 2, 2},
    CallSpec{"norm2", 1, 1},  CallSpec{"comm", 2, 2},
    CallSpec{"versor", 2, 2}, CallSpec{"rotor", 2, 2},
    CallSpec{"even", 1, 1},   CallSpec{"odd", 1, 1},
    CallSpec{"det", 1, -1},
};

const UnaryFunction *find_unary(std::string_view name) {
  for (const auto &f : unary_functions)
    if (f.name == name)
      return &f;
  return nullptr;
}

const CallSpec *find_call(std::string_view name) {
  for (const auto &c : calls)
    if (c.name == name)
      return &c;
  return nullptr;
}

bool is_basis_name(std::string_view word) {
  if (word.size() < 2 || word[0] != 'e')
    return false;
  for (char ch : word.substr(1))
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '_')
      return false;
  return true;
}

// ========================================================================
// LEXER
// ========================================================================

enum class Tok {
  number,
  word,
  lparen,
  rparen,
  comma,
  plus,
  minus,
  star,
  caret,
  lcontract, // <|
  rcontract, // |>
  bar,
  tilde,
  bang,
  end,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
  double value = 0.0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto syntax = [&](const std::string &msg, std::size_t at) {
    throw ExprError(Errc::syntax_error, msg, at);
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      double value = 0.0;
      const auto res = std::from_chars(src.data() + i, src.data() + src.size(),
                                       value, std::chars_format::general);
      if (res.ec != std::errc())
        syntax("malformed number", start);
      i = static_cast<std::size_t>(res.ptr - src.data());
      out.push_back({Tok::number, start, src.substr(start, i - start), value});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
        ++i;
      out.push_back({Tok::word, start, src.substr(start, i - start)});
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (ch) {
    case '(': kind = Tok::lparen; break;
    case ')': kind = Tok::rparen; break;
    case ',': kind = Tok::comma; break;
    case '+': kind = Tok::plus; break;
    case '-': kind = Tok::minus; break;
    case '*': kind = Tok::star; break;
    case '^': kind = Tok::caret; break;
    case '~': kind = Tok::tilde; break;
    case '!': kind = Tok::bang; break;
    case '<':
      if (i + 1 < src.size() && src[i + 1] == '|') {
        kind = Tok::lcontract;
        len = 2;
      } else {
        syntax("expected '<|'", start);
      }
      break;
    case '|':
      if (i + 1 < src.size() && src[i + 1] == '>') {
        kind = Tok::rcontract;
        len = 2;
      } else {
        kind = Tok::bar;
      }
      break;
    default:
      syntax(std::string("unexpected character '") + ch + "'", start);
    }
    out.push_back({kind, start, src.substr(start, len)});
    i += len;
  }
  out.push_back({Tok::end, src.size(), {}});
  return out;
}

// ========================================================================
// PARSER
// ========================================================================

class Parser {
public:
  Parser(std::string_view src, const Signature &sig)
      : tokens_(tokenize(src)), sig_(sig) {}

  Expression parse_all() {
    Expression e = additive();
    if (peek().kind != Tok::end)
      fail("unexpected '" + std::string(peek().text) + "'");
    return e;
  }

private:
  Expression additive() {
    Expression lhs = scalar_level();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token op = next();
      lhs = binary(op.kind == Tok::plus ? BinaryOp::add : BinaryOp::subtract,
                   op.offset, std::move(lhs), scalar_level());
    }
    return lhs;
  }

  Expression scalar_level() {
    Expression lhs = geometric_level();
    while (peek().kind == Tok::bar) {
      const Token op = next();
      lhs = binary(BinaryOp::scalar_product, op.offset, std::move(lhs),
                   geometric_level());
    }
    return lhs;
  }

  static bool starts_juxtaposed_operand(Tok t) {
    return t == Tok::number || t == Tok::word || t == Tok::lparen ||
           t == Tok::tilde || t == Tok::bang;
  }

  Expression geometric_level() {
    Expression lhs = contraction_level();
    while (true) {
      if (peek().kind == Tok::star) {
        const Token op = next();
        lhs = binary(BinaryOp::geometric, op.offset, std::move(lhs),
                     contraction_level());
      } else if (starts_juxtaposed_operand(peek().kind)) {
        const std::size_t at = peek().offset;
        lhs = binary(BinaryOp::geometric, at, std::move(lhs),
                     contraction_level());
      } else {
        return lhs;
      }
    }
  }

  Expression contraction_level() {
    Expression lhs = outer_level();
    while (peek().kind == Tok::lcontract || peek().kind == Tok::rcontract) {
      const Token op = next();
      lhs = binary(op.kind == Tok::lcontract ? BinaryOp::left_contraction
                                             : BinaryOp::right_contraction,
                   op.offset, std::move(lhs), outer_level());
    }
    return lhs;
  }

  Expression outer_level() {
    Expression lhs = prefix();
    while (peek().kind == Tok::caret) {
      const Token op = next();
      lhs = binary(BinaryOp::outer, op.offset, std::move(lhs), prefix());
    }
    return lhs;
  }

  Expression prefix() {
    const Tok k = peek().kind;
    if (k == Tok::minus || k == Tok::tilde || k == Tok::bang) {
      const Token op = next();
      const UnaryOp u = k == Tok::minus   ? UnaryOp::negate
                        : k == Tok::tilde ? UnaryOp::reverse
                                          : UnaryOp::grade_involution;
      return unary(u, op.offset, prefix());
    }
    return primary();
  }

  Expression primary() {
    const Token t = next();
    switch (t.kind) {
    case Tok::number: {
      Expression e;
      e.kind = Expression::Kind::number;
      e.offset = t.offset;
      e.value = t.value;
      return e;
    }
    case Tok::lparen: {
      Expression inner = additive();
      expect(Tok::rparen, "')'");
      return inner;
    }
    case Tok::word:
      return word(t);
    case Tok::end:
      fail_at("unexpected end of input", t.offset);
    default:
      fail_at("unexpected '" + std::string(t.text) + "'", t.offset);
    }
  }

  Expression word(const Token &t) {
    const std::string_view w = t.text;
    if (peek().kind == Tok::lparen) {
      if (const auto *u = find_unary(w)) {
        next();
        Expression arg = additive();
        expect(Tok::rparen, "')'");
        return unary(u->op, t.offset, std::move(arg));
      }
      if (const auto *c = find_call(w))
        return call(*c, t);
    }
    Expression e;
    e.offset = t.offset;
    if (is_basis_name(w)) {
      e.kind = Expression::Kind::basis;
      try {
        e.indices = parse_blade_indices(w.substr(1), sig_);
      } catch (const Error &err) {
        throw ExprError(err.code(), "bad basis element '" + std::string(w) + "'",
                        t.offset);
      }
      return e;
    }
    if (find_unary(w) || find_call(w))
      fail_at("function '" + std::string(w) + "' needs an argument list",
              t.offset);
    e.kind = Expression::Kind::name;
    e.name = std::string(w);
    return e;
  }

  Expression call(const CallSpec &spec, const Token &t) {
    next(); // (
    Expression e;
    e.kind = Expression::Kind::call;
    e.offset = t.offset;
    e.name = std::string(spec.name);
    if (peek().kind != Tok::rparen) {
      while (true) {
        if (spec.name == "grade" && e.operands.size() == 1)
          e.operands.push_back(integer_literal());
        else
          e.operands.push_back(additive());
        if (peek().kind != Tok::comma)
          break;
        next();
      }
    }
    expect(Tok::rparen, "')'");
    const int count = static_cast<int>(e.operands.size());
    if (count < spec.min_args || (spec.max_args >= 0 && count > spec.max_args))
      fail_at("wrong number of arguments to '" + e.name + "'", t.offset);
    return e;
  }

  Expression integer_literal() {
    const std::size_t at = peek().offset;
    double sign = 1.0;
    if (peek().kind == Tok::minus) {
      next();
      sign = -1.0;
    }
    const Token t = next();
    if (t.kind != Tok::number || t.value != std::floor(t.value))
      fail_at("grade needs an integer literal", at);
    Expression e;
    e.kind = Expression::Kind::number;
    e.offset = at;
    e.value = sign * t.value;
    return e;
  }

  static Expression binary(BinaryOp op, std::size_t at, Expression lhs,
                           Expression rhs) {
    Expression e;
    e.kind = Expression::Kind::binary;
    e.binary = op;
    e.offset = at;
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
  }

  static Expression unary(UnaryOp op, std::size_t at, Expression arg) {
    Expression e;
    e.kind = Expression::Kind::unary;
    e.unary = op;
    e.offset = at;
    e.operands.push_back(std::move(arg));
    return e;
  }

  const Token &peek() const { return tokens_[pos_]; }
  Token next() {
    const Token t = tokens_[pos_];
    if (t.kind != Tok::end)
      ++pos_;
    return t;
  }
  void expect(Tok kind, const char *what) {
    if (peek().kind != kind)
      fail(std::string("expected ") + what);
    next();
  }
  [[noreturn]] void fail(const std::string &msg) const {
    fail_at(msg, peek().offset);
  }
  [[noreturn]] static void fail_at(const std::string &msg, std::size_t at) {
    throw ExprError(Errc::syntax_error, msg, at);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature &sig_;
};

// ========================================================================
// EVALUATOR
// ========================================================================

class Evaluator {
public:
  Evaluator(const Environment &env, const Signature &sig)
      : env_(env), sig_(sig) {}

  Multivector eval(const Expression &e) {
    try {
      return eval_node(e);
    } catch (const ExprError &) {
      throw;
    } catch (const Error &err) {
      throw ExprError(err.code(), err.detail(), e.offset);
    }
  }

private:
  Multivector eval_node(const Expression &e) {
    switch (e.kind) {
    case Expression::Kind::number:
      return Multivector::scalar(sig_, e.value);
    case Expression::Kind::basis: {
      Multivector out = Multivector::scalar(sig_, 1.0);
      for (int i : e.indices)
        out = out * Multivector::basis_vector(sig_, i);
      return out;
    }
    case Expression::Kind::name: {
      if (auto it = env_.find(e.name); it != env_.end()) {
        if (!(it->second.algebra() == sig_))
          throw ExprError(Errc::algebra_mismatch,
                          "'" + e.name + "' belongs to another algebra",
                          e.offset);
        return it->second;
      }
      if (e.name == "I")
        return Multivector::volume_element(sig_);
      throw ExprError(Errc::unbound_name, "unbound name '" + e.name + "'",
                      e.offset);
    }
    case Expression::Kind::unary:
      return eval_unary(e.unary, eval(e.operands[0]));
    case Expression::Kind::binary:
      return eval_binary(e.binary, eval(e.operands[0]), eval(e.operands[1]));
    case Expression::Kind::call:
      return eval_call(e);
    }
    throw ExprError(Errc::invalid_argument, "bad expression node", e.offset);
  }

  static Multivector eval_unary(UnaryOp op, const Multivector &a) {
    switch (op) {
    case UnaryOp::negate: return -a;
    case UnaryOp::reverse: return reverse(a);
    case UnaryOp::grade_involution: return grade_involution(a);
    case UnaryOp::clifford_conjugate: return clifford_conjugate(a);
    case UnaryOp::dual: return dual(a);
    case UnaryOp::inverse_dual: return inverse_dual(a);
    case UnaryOp::inverse: return versor_inverse(a);
    }
    return a;
  }

  Multivector eval_binary(BinaryOp op, const Multivector &a,
                          const Multivector &b) const {
    switch (op) {
    case BinaryOp::add: return a + b;
    case BinaryOp::subtract: return a - b;
    case BinaryOp::scalar_product:
      return Multivector::scalar(sig_, scalar_product(a, b));
    case BinaryOp::geometric: return a * b;
    case BinaryOp::left_contraction: return left_contraction(a, b);
    case BinaryOp::right_contraction: return right_contraction(a, b);
    case BinaryOp::outer: return outer_product(a, b);
    }
    return a;
  }

  double scalar_arg(const Expression &e) {
    const Multivector v = eval(e);
    if (!v.is_scalar())
      throw ExprError(Errc::invalid_argument, "argument must be a scalar",
                      e.offset);
    return v.scalar_part();
  }

  Multivector eval_call(const Expression &e) {
    const std::string &f = e.name;
    const auto &args = e.operands;
    if (f == "grade")
      return grade_project(eval(args[0]), static_cast<int>(args[1].value));
    if (f == "exp") {
      const Multivector a = eval(args[0]);
      if (a.grades().subset_of(GradeSet{std::uint64_t{1} << 2}))
        return exp_bivector(a, -2.0);
      return exp_series(a);
    }
    if (f == "expb")
      return exp_bivector(eval(args[0]), scalar_arg(args[1]));
    if (f == "proj")
      return project(eval(args[0]), eval(args[1]));
    if (f == "rej")
      return reject(eval(args[0]), eval(args[1]));
    if (f == "reflect")
      return reflect(eval(args[0]), eval(args[1]));
    if (f == "norm2")
      return Multivector::scalar(sig_, norm_squared(eval(args[0])));
    if (f == "comm")
      return commutator(eval(args[0]), eval(args[1]));
    if (f == "versor")
      return apply_versor(eval(args[0]), eval(args[1]));
    if (f == "rotor")
      return rotor_from_two_vectors(eval(args[0]), eval(args[1]));
    if (f == "even")
      return even_part(eval(args[0]));
    if (f == "odd")
      return odd_part(eval(args[0]));
    if (f == "det") {
      // det(a_1, .., a_n): the volume a_1 ^ .. ^ a_n in units of I.
      if (static_cast<int>(args.size()) != sig_.n())
        throw ExprError(Errc::invalid_argument,
                        "det needs exactly n vector arguments", e.offset);
      Multivector vol = Multivector::scalar(sig_, 1.0);
      for (const auto &arg : args) {
        const Multivector v = eval(arg);
        if (!v.is_vector())
          throw ExprError(Errc::non_vector, "det arguments must be vectors",
                          arg.offset);
        vol = outer_product(vol, v);
      }
      return Multivector::scalar(sig_, dual(vol).scalar_part());
    }
    throw ExprError(Errc::invalid_argument, "unknown function '" + f + "'",
                    e.offset);
  }

  const Environment &env_;
  const Signature &sig_;
};

std::string_view binary_name(BinaryOp op) {
  switch (op) {
  case BinaryOp::add: return "+";
  case BinaryOp::subtract: return "-";
  case BinaryOp::scalar_product: return "|";
  case BinaryOp::geometric: return "*";
  case BinaryOp::left_contraction: return "<|";
  case BinaryOp::right_contraction: return "|>";
  case BinaryOp::outer: return "^";
  }
  return "?";
}

std::string_view unary_name(UnaryOp op) {
  switch (op) {
  case UnaryOp::negate: return "neg";
  case UnaryOp::reverse: return "rev";
  case UnaryOp::grade_involution: return "ginv";
  case UnaryOp::clifford_conjugate: return "conj";
  case UnaryOp::dual: return "dual";
  case UnaryOp::inverse_dual: return "idual";
  case UnaryOp::inverse: return "inv";
  }
  return "?";
}

} // namespace

Expression parse(std::string_view src, const Signature &sig) {
  return Parser(src, sig).parse_all();
}

Multivector evaluate(const Expression &e, const Environment &env,
                     const Signature &sig) {
  return Evaluator(env, sig).eval(e);
}

std::string to_sexpr(const Expression &e) {
  switch (e.kind) {
  case Expression::Kind::number: return format_number(e.value);
  case Expression::Kind::basis: {
    std::string out = "e";
    for (std::size_t i = 0; i < e.indices.size(); ++i) {
      if (i > 0)
        out += '_';
      out += std::to_string(e.indices[i]);
    }
    return out;
  }
  case Expression::Kind::name: return e.name;
  case Expression::Kind::unary:
    return "(" + std::string(unary_name(e.unary)) + " " +
           to_sexpr(e.operands[0]) + ")";
  case Expression::Kind::binary:
    return "(" + std::string(binary_name(e.binary)) + " " +
           to_sexpr(e.operands[0]) + " " + to_sexpr(e.operands[1]) + ")";
  case Expression::Kind::call: {
    std::string out = "(" + e.name;
    for (const auto &op : e.operands)
      out += " " + to_sexpr(op);
    return out + ")";
  }
  }
  return "?";
}

bool is_reserved_name(std::string_view name) {
  return is_basis_name(name) || find_unary(name) != nullptr ||
         find_call(name) != nullptr;
}

} // namespace ga::expr
