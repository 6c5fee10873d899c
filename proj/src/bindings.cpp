#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "capelli/combinatorics.hpp"
#include "capelli/identities.hpp"
#include "capelli/polynomial.hpp"

namespace py = pybind11;
using namespace capelli;

namespace {

IdentityKind identity_from(const std::string& token) {
  for (const IdentityKind kind :
       {IdentityKind::Capelli, IdentityKind::Turnbull,
        IdentityKind::TurnbullAntisymmetric,
        IdentityKind::HoweUmedaKostantSahi})
    if (to_string(kind) == token) return kind;
  throw std::domain_error("unknown identity: " + token);
}

ObjectFamily family_from(const std::string& token) {
  for (const ObjectFamily family :
       {ObjectFamily::Capelli, ObjectFamily::Turnbull})
    if (to_string(family) == token) return family;
  throw std::domain_error("unknown family: " + token);
}

GMatrix gmatrix_from(const py::dict& d) {
  GMatrix g;
  g.n = d["n"].cast<int>();
  g.a = d["a"].cast<std::vector<int>>();
  g.b = d["b"].cast<std::vector<int>>();
  g.d = d["d"].cast<std::vector<int>>();
  return g;
}

py::dict gmatrix_to(const GMatrix& g) {
  py::dict d;
  d["n"] = g.n;
  d["a"] = g.a;
  d["b"] = g.b;
  d["d"] = g.d;
  return d;
}

std::vector<std::pair<int, int>> pairs_of(const ContractionSet& k) {
  std::vector<std::pair<int, int>> out;
  out.reserve(k.size());
  for (const Link& l : k) out.emplace_back(l.source, l.end);
  return out;
}

ContractionSet resolve_links(const GMatrix& g, ObjectFamily family,
                             const std::vector<std::pair<int, int>>& pairs) {
  const std::vector<Link> links = links_of(g, family);
  ContractionSet k;
  for (const auto& [source, end] : pairs) {
    const auto it =
        std::find_if(links.begin(), links.end(), [&](const Link& l) {
          return l.source == source && l.end == end;
        });
    if (it == links.end())
      throw std::domain_error("(" + std::to_string(source) + "," +
                              std::to_string(end) +
                              ") is not a link of the object");
    k.push_back(*it);
  }
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

PYBIND11_MODULE(_capelli, m) {
  m.doc() =
      "Exact verification engine for Capelli-type determinant identities "
      "in the Weyl algebra (px = xp + h).";

  m.def(
      "verify",
      [](const std::string& identity, int n, int max_n, int threads) {
        VerifyOptions options;
        if (max_n > 0) options.max_n = max_n;
        options.threads = threads;
        const VerificationReport r =
            verify_identity(identity_from(identity), n, options);
        py::dict d;
        d["identity"] = identity;
        d["n"] = n;
        d["equal"] = r.equal;
        d["lhs_terms"] = r.lhs_term_count;
        d["rhs_terms"] = r.rhs_term_count;
        d["residual_head"] = head_terms(r.residual, 20);
        d["elapsed_ms"] = r.elapsed.count();
        return d;
      },
      py::arg("identity"), py::arg("n"), py::arg("max_n") = 0,
      py::arg("threads") = 1,
      "Check one identity at dimension n; returns a report dict.");

  m.def(
      "expand",
      [](const std::string& identity, int n, const std::string& side,
         int max_n) {
        const IdentityKind kind = identity_from(identity);
        const int cap = max_n > 0 ? max_n : kDefaultMaxDeterminantN;
        if (side != "lhs" && side != "rhs")
          throw std::domain_error("side must be lhs or rhs");
        const NormalPolynomial poly = side == "lhs"
                                          ? lhs_polynomial(kind, n, 1, cap)
                                          : rhs_polynomial(kind, n);
        return format_canonical(poly);
      },
      py::arg("identity"), py::arg("n"), py::arg("side"),
      py::arg("max_n") = 0,
      "Canonical normal form of one side of an identity.");

  m.def(
      "count_objects",
      [](const std::string& family, int n, int max_n) {
        return count_objects(family_from(family), n,
                             max_n > 0 ? max_n : kDefaultMaxEnumerationN);
      },
      py::arg("family"), py::arg("n"), py::arg("max_n") = 0);

  m.def(
      "enumerate_objects",
      [](const std::string& family, int n, int max_n) {
        py::list out;
        for_each_object(
            family_from(family), n,
            [&](const GMatrix& g) { out.append(gmatrix_to(g)); },
            max_n > 0 ? max_n : kDefaultMaxEnumerationN);
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("max_n") = 0,
      "All family objects at dimension n in canonical order.");

  m.def(
      "links",
      [](const std::string& family, const py::dict& object) {
        return pairs_of(links_of(gmatrix_from(object), family_from(family)));
      },
      py::arg("family"), py::arg("object"),
      "(source, end) pairs of the object's links.");

  m.def(
      "weight",
      [](const std::string& family, const py::dict& object) {
        const Polynomial w =
            weight_of(gmatrix_from(object), family_from(family));
        return format_word(w.terms().front());
      },
      py::arg("family"), py::arg("object"),
      "The object's weight as an ordered word.");

  m.def(
      "contraction_weights",
      [](const std::string& family, const py::dict& object) {
        const ObjectFamily fam = family_from(family);
        const GMatrix g = gmatrix_from(object);
        py::list out;
        for (const ContractionSet& k : contraction_sets(g, fam)) {
          const NormalMonomial mono = weight_of_pair(g, k, fam);
          py::dict entry;
          entry["k"] = pairs_of(k);
          entry["weight"] = format_monomial(mono.key, mono.coeff);
          out.append(entry);
        }
        return out;
      },
      py::arg("family"), py::arg("object"),
      "Every contraction set of the object with its normal monomial.");

  m.def(
      "involution",
      [](const std::string& family, const py::dict& object,
         const std::vector<std::pair<int, int>>& k) {
        const ObjectFamily fam = family_from(family);
        const GMatrix g = gmatrix_from(object);
        validate(g, fam);
        const auto [image, tag] =
            involution(PairGK{g, resolve_links(g, fam, k)}, fam);
        py::dict d;
        d["g"] = gmatrix_to(image.g);
        d["k"] = pairs_of(image.k);
        d["case"] = to_string(tag);
        return d;
      },
      py::arg("family"), py::arg("object"), py::arg("k"),
      "Image of a bad pair under the sign-reversing involution.");

  m.def(
      "check_involution",
      [](const std::string& family, int n, int max_n) {
        const InvolutionReport r = check_involution_properties(
            family_from(family), n, max_n > 0 ? max_n : kDefaultMaxEnumerationN);
        py::dict d;
        d["family"] = family;
        d["n"] = n;
        d["object_count"] = r.object_count;
        d["pair_count"] = r.pair_count;
        d["good_count"] = r.good_count;
        d["bad_count"] = r.bad_count;
        d["involutive"] = r.involutive;
        d["weight_negated"] = r.weight_negated;
        d["pivot_preserved"] = r.pivot_preserved;
        d["case_exchanged"] = r.case_exchanged;
        d["fixed_point_free"] = r.fixed_point_free;
        d["bad_sum_zero"] = r.bad_sum_zero;
        d["ok"] = r.all_ok();
        d["violations"] = r.violation_samples;
        return d;
      },
      py::arg("family"), py::arg("n"), py::arg("max_n") = 0,
      "Run every involution property over all bad pairs at dimension n.");

  m.def(
      "good_guy_sum",
      [](const std::string& family, int n, int max_n) {
        return format_canonical(
            good_guy_sum(family_from(family), n,
                         max_n > 0 ? max_n : kDefaultMaxEnumerationN));
      },
      py::arg("family"), py::arg("n"), py::arg("max_n") = 0,
      "Canonical form of the sum over good pairs.");
}
