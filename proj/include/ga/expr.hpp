#pragma once
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ga/error.hpp"
#include "ga/multivector.hpp"

namespace ga::expr {

// Binding strength, loosest first:
//   +  -            add, subtract
//   |               scalar product
//   *  juxtaposed   geometric product
//   <|  |>          left, right contraction
//   ^               outer product
//   -  ~  !         negate, reverse, grade involution (prefix)
// All binary operators associate to the left.
enum class BinaryOp {
  add,
  subtract,
  scalar_product,
  geometric,
  left_contraction,
  right_contraction,
  outer,
};

enum class UnaryOp {
  negate,
  reverse,
  grade_involution,
  clifford_conjugate,
  dual,
  inverse_dual,
  inverse,
};

struct Expression {
  enum class Kind { number, basis, name, unary, binary, call };

  Kind kind = Kind::number;
  std::size_t offset = 0; // byte offset of the node in the source
  double value = 0.0;       // number
  std::vector<int> indices; // basis: e<i><j>.. in written order
  std::string name;         // name, call
  UnaryOp unary = UnaryOp::negate;
  BinaryOp binary = BinaryOp::add;
  std::vector<Expression> operands;
};

// Failure tied to a source position.
class ExprError : public Error {
public:
  ExprError(Errc code, const std::string &what, std::size_t offset)
      : Error(code, what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// Throws ExprError with Errc::syntax_error or Errc::unknown_basis_index.
Expression parse(std::string_view src, const Signature &sig);

using Environment = std::map<std::string, Multivector>;

// Throws ExprError: Errc::unbound_name, or the library error raised by the
// failing node with its offset.
Multivector evaluate(const Expression &e, const Environment &env,
                     const Signature &sig);

// Fully parenthesised rendering of the tree, for inspecting precedence.
std::string to_sexpr(const Expression &e);

// Names that cannot be bound with :let.
bool is_reserved_name(std::string_view name);

} // namespace ga::expr
