#include "qcf/instruction.hpp"

#include <stdexcept>

namespace qcf {

bool Instruction::operator==(const Instruction& other) const {
  if (name != other.name || qubits != other.qubits || params != other.params) {
    return false;
  }
  if (matrix.has_value() != other.matrix.has_value()) return false;
  if (matrix && *matrix != *other.matrix) return false;
  return true;
}

ParamExpr ParamExpr::constant(double v) {
  ParamExpr e;
  e.kind = Kind::Constant;
  e.value = v;
  return e;
}

ParamExpr ParamExpr::formal(int index) {
  ParamExpr e;
  e.kind = Kind::Formal;
  e.formal_index = index;
  return e;
}

ParamExpr ParamExpr::unary(Kind k, ParamExpr inner) {
  ParamExpr e;
  e.kind = k;
  e.operands.push_back(std::move(inner));
  return e;
}

ParamExpr ParamExpr::binary(Kind k, ParamExpr lhs, ParamExpr rhs) {
  ParamExpr e;
  e.kind = k;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

double ParamExpr::evaluate(const std::vector<double>& actuals) const {
  switch (kind) {
    case Kind::Constant:
      return value;
    case Kind::Formal:
      if (formal_index < 0 ||
          static_cast<std::size_t>(formal_index) >= actuals.size()) {
        throw std::out_of_range("formal parameter index out of range");
      }
      return actuals[static_cast<std::size_t>(formal_index)];
    case Kind::Negate:
      return -operands[0].evaluate(actuals);
    case Kind::Add:
      return operands[0].evaluate(actuals) + operands[1].evaluate(actuals);
    case Kind::Sub:
      return operands[0].evaluate(actuals) - operands[1].evaluate(actuals);
    case Kind::Mul:
      return operands[0].evaluate(actuals) * operands[1].evaluate(actuals);
    case Kind::Div:
      return operands[0].evaluate(actuals) / operands[1].evaluate(actuals);
  }
  throw std::logic_error("unreachable parameter expression kind");
}

} // namespace qcf
