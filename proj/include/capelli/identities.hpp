#ifndef CAPELLI_IDENTITIES_HPP
#define CAPELLI_IDENTITIES_HPP

#include <chrono>
#include <string>
#include <vector>

#include "capelli/polynomial.hpp"

namespace capelli {

/// The four determinant identities handled by the engine.
enum class IdentityKind {
  Capelli,               ///< generic variables, diagonal shift +h(n-i)
  Turnbull,              ///< symmetric variables, doubled diagonal momenta
  TurnbullAntisymmetric, ///< antisymmetric, shift -h(n-i), permanent RHS
  HoweUmedaKostantSahi,  ///< antisymmetric, shift +h(n-i-1), even n only
};

SymmetryMode mode_of(IdentityKind kind);
std::string to_string(IdentityKind kind);

inline constexpr int kDefaultMaxDeterminantN = 6;
inline constexpr int kDefaultMaxVerifyN = 4;

/// Square matrix of polynomials over one shared context.
class PolyMatrix {
 public:
  PolyMatrix(AlgebraContext ctx, int n)
      : ctx_(ctx),
        n_(n),
        entries_(static_cast<std::size_t>(n) * n, Polynomial::zero(ctx)) {}

  int n() const { return n_; }
  const AlgebraContext& context() const { return ctx_; }
  /// 1-based row and column.
  Polynomial& at(int row, int col) {
    return entries_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)];
  }
  const Polynomial& at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)];
  }

 private:
  AlgebraContext ctx_;
  int n_;
  std::vector<Polynomial> entries_;
};

/// X = (x_ij) over the given mode.
PolyMatrix x_matrix(SymmetryMode mode, int n);
/// P = (p_ij); with doubled_diagonal the diagonal entries are 2 p_ii.
PolyMatrix momentum_matrix(SymmetryMode mode, int n,
                           bool doubled_diagonal = false);
/// X^t P, entry (i,j) = sum_k x_ki p_kj, canonicalized for the mode.
PolyMatrix xt_p_matrix(SymmetryMode mode, int n);

/// The polarization matrix of the identity: entry (i,j) is
/// sum_k x_ki p_kj (p~ for Turnbull) plus the identity's diagonal
/// h-correction.
PolyMatrix build_A(IdentityKind kind, int n);

/// sum_sigma sgn(sigma) M(sigma(1),1) M(sigma(2),2) ... taken column by
/// column, left factor from column 1. Required order for noncommuting
/// entries.
Polynomial column_determinant(const PolyMatrix& m,
                              int max_n = kDefaultMaxDeterminantN);

/// sum_sigma sgn(sigma) M(1,sigma(1)) ... M(n,sigma(n)).
Polynomial row_determinant(const PolyMatrix& m,
                           int max_n = kDefaultMaxDeterminantN);

/// sum_sigma M(sigma(1),1) ... M(sigma(n),n) without signs, ordered
/// column by column like column_determinant.
Polynomial column_permanent(const PolyMatrix& m,
                            int max_n = kDefaultMaxDeterminantN);

/// Signless permutation sum, normal-ordered with every generator
/// commuting (h = 0).
NormalPolynomial permanent_classical(const PolyMatrix& m,
                                     int max_n = kDefaultMaxDeterminantN);

/// Normal form of the column determinant without materializing the full
/// word expansion: per permutation the entry product is normal-ordered
/// incrementally with like-term merging. Equal to
/// normal_order(column_determinant(m), setting) by the homomorphism
/// property.
NormalPolynomial normal_ordered_column_determinant(
    const PolyMatrix& m, CommutationSetting setting, int threads = 1,
    int max_n = kDefaultMaxDeterminantN);

/// Signless counterpart of normal_ordered_column_determinant.
NormalPolynomial normal_ordered_column_permanent(
    const PolyMatrix& m, CommutationSetting setting, int threads = 1,
    int max_n = kDefaultMaxDeterminantN);

/// Left side of the identity in normal form: the column determinant of A
/// for the determinant identities, the column permanent for the
/// antisymmetric Turnbull analog. The permanent is forced there: at h = 0
/// the signed expansion collapses to det X . det P, which vanishes for
/// odd antisymmetric n, while Per(X^t P) does not.
NormalPolynomial lhs_polynomial(IdentityKind kind, int n, int threads = 1,
                                int max_n = kDefaultMaxDeterminantN);

/// Right side of the identity in normal form: det X . det P (with p~ for
/// Turnbull) for the determinant identities, Per(X^t P) for the
/// antisymmetric Turnbull analog.
NormalPolynomial rhs_polynomial(IdentityKind kind, int n);

struct VerifyOptions {
  int max_n = kDefaultMaxVerifyN;
  int threads = 1;
};

struct VerificationReport {
  IdentityKind kind = IdentityKind::Capelli;
  int n = 0;
  std::size_t lhs_term_count = 0;
  std::size_t rhs_term_count = 0;
  bool equal = false;
  NormalPolynomial residual;  // lhs - rhs; empty iff equal
  std::chrono::milliseconds elapsed{0};
};

/// Machine-checks the identity at dimension n: lhs_polynomial against
/// rhs_polynomial.
VerificationReport verify_identity(IdentityKind kind, int n,
                                   const VerifyOptions& options = {});

}  // namespace capelli

#endif
