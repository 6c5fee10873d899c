#ifndef CAPELLI_COMBINATORICS_HPP
#define CAPELLI_COMBINATORICS_HPP

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "capelli/polynomial.hpp"

namespace capelli {

/// The two families of 4xn matrices whose weights expand the column
/// determinant: the Capelli family over generic variables (d in {0,1})
/// and the Turnbull family over symmetric variables (d in {0,1,2}).
enum class ObjectFamily { Capelli, Turnbull };

SymmetryMode mode_of(ObjectFamily family);
std::string to_string(ObjectFamily family);

inline constexpr int kDefaultMaxEnumerationN = 4;
/// Cap on the link count before contraction-set enumeration refuses.
inline constexpr int kMaxLinksForContractionSets = 20;

/// A 4xn combinatorial object. Row c is implied as (1..n). Row a is a
/// permutation of 1..n, row d selects the column's factor type:
/// d even -> the factor x[b_i,a_i] p[b_i,i], d = 1 -> the factor h.
struct GMatrix {
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> d;

  bool operator==(const GMatrix&) const = default;
  bool operator<(const GMatrix& o) const;
};

/// Violated family constraints, empty when valid. Messages name the
/// 1-based column.
std::vector<std::string> violations(const GMatrix& g, ObjectFamily family);
/// Throws std::domain_error listing all violations.
void validate(const GMatrix& g, ObjectFamily family);

enum class LinkVariant {
  Direct,   ///< (b_i, i) = (b_j, a_j)
  Flipped,  ///< (b_i, i) = (a_j, b_j), symmetric family only
};

/// A column pair (source < end) whose p-factor at the source and x-factor
/// at the end carry the same canonical variable.
struct Link {
  int source = 0;
  int end = 0;
  LinkVariant variant = LinkVariant::Direct;

  auto operator<=>(const Link&) const = default;
};

/// A set of links with pairwise distinct sources and distinct ends,
/// sorted by (source, end). Indexes one monomial of the Wick expansion.
using ContractionSet = std::vector<Link>;

struct PairGK {
  GMatrix g;
  ContractionSet k;

  bool operator==(const PairGK&) const = default;
  bool operator<(const PairGK& o) const;
};

/// All links of g in increasing (source, end) order. When both variant
/// conditions coincide (b_j = a_j) the link is reported once as Direct.
std::vector<Link> links_of(const GMatrix& g, ObjectFamily family);

/// Every subset of links_of(g) with distinct sources and distinct ends,
/// including the empty set, in subset-bitmask order over the sorted link
/// list. For the Capelli family this is all 2^m subsets.
std::vector<ContractionSet> contraction_sets(const GMatrix& g,
                                             ObjectFamily family);

/// Streams every valid object exactly once in lexicographic (a, d, b)
/// order.
void for_each_object(ObjectFamily family, int n,
                     const std::function<void(const GMatrix&)>& fn,
                     int max_n = kDefaultMaxEnumerationN);
std::vector<GMatrix> enumerate_objects(ObjectFamily family, int n,
                                       int max_n = kDefaultMaxEnumerationN);
long long count_objects(ObjectFamily family, int n,
                        int max_n = kDefaultMaxEnumerationN);

/// The single ordered word sgn(a) * prod_i (x[b_i,a_i] p[b_i,i] | h).
Polynomial weight_of(const GMatrix& g, ObjectFamily family);

/// The normal monomial selected by the contraction set K: each link in K
/// removes its end's x-factor and its source's p-factor and contributes
/// one power of h. Summing over all contraction sets reproduces
/// normal_order(weight_of(g)).
NormalMonomial weight_of_pair(const GMatrix& g, const ContractionSet& k,
                              ObjectFamily family);

/// Good pairs: K empty and no 1 on the d row. These sum to the right side
/// of the identity; all other pairs cancel under the involution.
bool is_good(const PairGK& pair);

enum class PivotCase {
  Case1,        ///< source of a direct link in K (d = 0)
  Case2,        ///< d = 1 column
  Case3Prime,   ///< flipped link in K, a_i != i, b_i != i, d = 0
  Case3Double,  ///< flipped link in K, a_i = i, b_i != i, d = 0
  Case3Triple,  ///< flipped link in K, a_i != i, b_i = i, d = 2
};

std::string to_string(PivotCase c);
/// The case a pivot of the given case maps to under the involution.
PivotCase partner_case(PivotCase c);

struct Pivot {
  int index = 0;
  PivotCase tag = PivotCase::Case1;

  bool operator==(const Pivot&) const = default;
};

/// The greatest column 1 <= i <= n-1 at which a case condition holds,
/// with its case tag; nullopt iff the pair is good. Case 1 takes
/// precedence over case 3 at the same column.
std::optional<Pivot> pivot_index(const PairGK& pair, ObjectFamily family);

/// The sign-reversing involution on bad pairs: rewrites the pivot column
/// and its partner column and adjusts K. Returns the image together with
/// the case applied. Throws std::domain_error on a good pair.
std::pair<PairGK, PivotCase> involution(const PairGK& pair,
                                        ObjectFamily family);

/// sum over all G and all K of w(G,K); equals the normal-ordered column
/// determinant of the matching polarization matrix.
NormalPolynomial combinatorial_lhs(ObjectFamily family, int n,
                                   int max_n = kDefaultMaxEnumerationN);

/// sum over good pairs only; equals the identity's right side.
NormalPolynomial good_guy_sum(ObjectFamily family, int n,
                              int max_n = kDefaultMaxEnumerationN);

struct InvolutionReport {
  ObjectFamily family = ObjectFamily::Capelli;
  int n = 0;
  long long object_count = 0;
  long long pair_count = 0;
  long long good_count = 0;
  long long bad_count = 0;
  bool involutive = true;        // omega(omega(p)) == p
  bool weight_negated = true;    // w(omega(p)) == -w(p)
  bool pivot_preserved = true;   // pivot index unchanged
  bool case_exchanged = true;    // 1<->2, 3'<->3', 3''<->3'''
  bool fixed_point_free = true;  // omega(p) != p
  bool bad_sum_zero = true;      // sum of bad weights vanishes
  NormalPolynomial bad_weight_sum;
  std::vector<std::string> violation_samples;  // capped serialized pairs

  bool all_ok() const {
    return involutive && weight_negated && pivot_preserved && case_exchanged &&
           fixed_point_free && bad_sum_zero;
  }
};

/// Runs every involution property over all bad pairs of the family at
/// dimension n, streaming (no global bad-pair materialization).
InvolutionReport check_involution_properties(
    ObjectFamily family, int n, int max_n = kDefaultMaxEnumerationN);

/// "a=[..] b=[..] d=[..]"
std::string describe(const GMatrix& g);
/// "{}" or "{(1,3),(2,8)}"
std::string describe(const ContractionSet& k);

}  // namespace capelli

#endif
