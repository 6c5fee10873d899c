#ifndef CAPELLI_VARIABLE_HPP
#define CAPELLI_VARIABLE_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace capelli {

/// How the index pair (i,j) of a variable relates to (j,i).
enum class SymmetryMode {
  Generic,        ///< all n^2 pairs are distinct variables
  Symmetric,      ///< (i,j) and (j,i) name the same variable
  Antisymmetric,  ///< (j,i) = -(i,j); the diagonal is identically zero
};

/// Quantum keeps the commutator [p_v, x_v] = h; Classical sets h = 0 so
/// every generator commutes with every other.
enum class CommutationSetting { Quantum, Classical };

enum class VarKind : std::uint8_t { X, P };

/// Canonical index pair of a variable. Row <= col in the symmetric and
/// antisymmetric modes, unrestricted in generic mode.
struct VarId {
  int row = 0;
  int col = 0;
  auto operator<=>(const VarId&) const = default;
};

struct Variable {
  VarKind kind;
  VarId id;
  auto operator<=>(const Variable&) const = default;
};

/// Result of canonicalizing an (i,j) request: sign 0 marks the zero
/// variable (antisymmetric diagonal), otherwise sign is +1 or -1.
struct SignedVariable {
  int sign = 0;
  VarKind kind = VarKind::X;
  VarId id;

  bool is_zero() const { return sign == 0; }
  Variable variable() const { return Variable{kind, id}; }
};

/// Maps a raw (kind, i, j) request onto the canonical signed variable for
/// the given mode. Idempotent on already-canonical ids. Throws
/// std::domain_error when an index falls outside 1..n.
SignedVariable canonical_variable(VarKind kind, int i, int j, SymmetryMode mode,
                                  int n);

std::string to_string(SymmetryMode mode);
std::string to_string(VarKind kind);

/// "x[i,j]" / "p[i,j]"
std::string format_variable(VarKind kind, VarId id);

}  // namespace capelli

#endif
