#include "capelli/variable.hpp"

#include <stdexcept>

namespace capelli {

SignedVariable canonical_variable(VarKind kind, int i, int j, SymmetryMode mode,
                                  int n) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::domain_error("variable index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range 1.." +
                            std::to_string(n));
  switch (mode) {
    case SymmetryMode::Generic:
      return {+1, kind, {i, j}};
    case SymmetryMode::Symmetric:
      return i <= j ? SignedVariable{+1, kind, {i, j}}
                    : SignedVariable{+1, kind, {j, i}};
    case SymmetryMode::Antisymmetric:
      if (i == j) return {0, kind, {i, j}};
      return i < j ? SignedVariable{+1, kind, {i, j}}
                   : SignedVariable{-1, kind, {j, i}};
  }
  throw std::domain_error("unknown symmetry mode");
}

std::string to_string(SymmetryMode mode) {
  switch (mode) {
    case SymmetryMode::Generic:
      return "generic";
    case SymmetryMode::Symmetric:
      return "symmetric";
    case SymmetryMode::Antisymmetric:
      return "antisymmetric";
  }
  return "?";
}

std::string to_string(VarKind kind) {
  return kind == VarKind::X ? "x" : "p";
}

std::string format_variable(VarKind kind, VarId id) {
  return to_string(kind) + "[" + std::to_string(id.row) + "," +
         std::to_string(id.col) + "]";
}

}  // namespace capelli
