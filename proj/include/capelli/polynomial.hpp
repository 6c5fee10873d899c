#ifndef CAPELLI_POLYNOMIAL_HPP
#define CAPELLI_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "capelli/variable.hpp"

namespace capelli {

using BigInt = boost::multiprecision::cpp_int;

/// Symmetry mode and matrix dimension shared by all factors of a
/// polynomial. Operations on operands with different contexts throw
/// std::domain_error.
struct AlgebraContext {
  SymmetryMode mode = SymmetryMode::Generic;
  int n = 1;
  bool operator==(const AlgebraContext&) const = default;
};

/// An ordered product of canonical variables with an integer coefficient
/// and a central h-power. Factor order is significant; construction never
/// reorders.
struct Word {
  BigInt coeff = 1;
  int h_power = 0;
  std::vector<Variable> factors;

  bool operator==(const Word&) const = default;
};

/// A formal sum of words. Addition concatenates terms; no implicit normal
/// ordering happens before normal_order() is called.
class Polynomial {
 public:
  Polynomial(AlgebraContext ctx, std::vector<Word> terms = {})
      : ctx_(ctx), terms_(std::move(terms)) {}

  static Polynomial zero(AlgebraContext ctx) { return Polynomial(ctx); }
  static Polynomial scalar(AlgebraContext ctx, BigInt coeff, int h_power = 0);
  /// Single canonicalized variable; the antisymmetric diagonal yields the
  /// zero polynomial.
  static Polynomial variable(AlgebraContext ctx, VarKind kind, int i, int j);

  const AlgebraContext& context() const { return ctx_; }
  const std::vector<Word>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const;

 private:
  AlgebraContext ctx_;
  std::vector<Word> terms_;
};

/// Distributive concatenation product, kept as a named free function next
/// to the operator form.
Polynomial poly_mul(const Polynomial& lhs, const Polynomial& rhs);

/// Key of a normal-form monomial: all x's before all p's, both blocks
/// sorted by (row, col). Ordered so that map iteration gives the canonical
/// display order (variables first, h-power last).
struct NormalKey {
  int h_power = 0;
  std::vector<VarId> x_part;
  std::vector<VarId> p_part;

  bool operator==(const NormalKey&) const = default;
  bool operator<(const NormalKey& o) const {
    return std::tie(x_part, p_part, h_power) <
           std::tie(o.x_part, o.p_part, o.h_power);
  }
};

struct NormalMonomial {
  BigInt coeff = 0;
  NormalKey key;

  bool operator==(const NormalMonomial&) const = default;
};

/// Canonical normal form: a sorted association from NormalKey to nonzero
/// coefficient. Key-by-key coefficient equality is the engine's notion of
/// equality of algebra elements.
class NormalPolynomial {
 public:
  using Map = std::map<NormalKey, BigInt>;
  using const_iterator = Map::const_iterator;

  NormalPolynomial() = default;

  void add(NormalKey key, const BigInt& coeff);
  void add(const NormalMonomial& m) { add(m.key, m.coeff); }
  NormalPolynomial& operator+=(const NormalPolynomial& rhs);
  NormalPolynomial& operator-=(const NormalPolynomial& rhs);
  friend NormalPolynomial operator-(NormalPolynomial lhs,
                                    const NormalPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }

  /// Terms with h_power > 0 removed, i.e. the h = 0 specialization.
  NormalPolynomial at_h_zero() const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  bool operator==(const NormalPolynomial&) const = default;

 private:
  Map terms_;
};

/// Rewrites every word into normal form under the commutation rule
/// p_v x_v = x_v p_v + h (Quantum) or plain commutativity with h = 0
/// (Classical), merging like terms. With threads > 1 the words are
/// processed in parallel chunks; the result is identical to sequential
/// evaluation.
NormalPolynomial normal_order(const Polynomial& poly, CommutationSetting setting,
                              int threads = 1);

/// Normal-orders the word (coeff * h^h_power * factors...) starting from an
/// already-normal prefix (xs, ps), accumulating into out. This is the
/// primitive behind normal_order and the fused determinant expansion.
void accumulate_normal_ordered(NormalPolynomial& out, BigInt coeff, int h_power,
                               std::vector<VarId> xs, std::vector<VarId> ps,
                               const std::vector<Variable>& factors,
                               CommutationSetting setting);

/// normal_order(N viewed as a polynomial * Q).
NormalPolynomial normal_order_mul(const NormalPolynomial& lhs,
                                  const Polynomial& rhs,
                                  CommutationSetting setting);

/// True iff both sides have the same normal form under the given setting.
bool poly_equal(const Polynomial& lhs, const Polynomial& rhs,
                CommutationSetting setting);

/// Reinterprets a normal form as an ordinary polynomial (one word per
/// monomial, x block then p block).
Polynomial to_polynomial(const NormalPolynomial& poly, AlgebraContext ctx);

/// Deterministic text form of one monomial: `<coeff> h^<k> x[i,j]... p[i,j]...`
/// with unit coefficient and unit exponents elided; "1" for the empty
/// scalar term.
std::string format_monomial(const NormalKey& key, const BigInt& coeff);

/// Terms joined by " + " in key order; the zero polynomial renders "0".
std::string format_canonical(const NormalPolynomial& poly);

/// First (at most) max_terms formatted monomials, in key order.
std::vector<std::string> head_terms(const NormalPolynomial& poly,
                                    std::size_t max_terms);

/// Text form of an ordered word: coefficient, h-power, then the factors in
/// their stored order.
std::string format_word(const Word& word);

}  // namespace capelli

#endif
