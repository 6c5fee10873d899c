#include "capelli/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "capelli/error.hpp"
#include "capelli/permutations.hpp"

namespace capelli {

SymmetryMode mode_of(ObjectFamily family) {
  return family == ObjectFamily::Capelli ? SymmetryMode::Generic
                                         : SymmetryMode::Symmetric;
}

std::string to_string(ObjectFamily family) {
  return family == ObjectFamily::Capelli ? "capelli" : "turnbull";
}

bool GMatrix::operator<(const GMatrix& o) const {
  return std::tie(n, a, d, b) < std::tie(o.n, o.a, o.d, o.b);
}

bool PairGK::operator<(const PairGK& o) const {
  return std::tie(g, k) < std::tie(o.g, o.k);
}

namespace {

std::string col_ref(const char* row, int i) {
  return std::string(row) + "[" + std::to_string(i) + "]";
}

}  // namespace

std::vector<std::string> violations(const GMatrix& g, ObjectFamily family) {
  std::vector<std::string> out;
  const int n = g.n;
  if (n < 1) {
    out.push_back("dimension must be at least 1");
    return out;
  }
  const std::size_t un = static_cast<std::size_t>(n);
  if (g.a.size() != un || g.b.size() != un || g.d.size() != un) {
    out.push_back("rows a, b, d must each have length " + std::to_string(n));
    return out;
  }

  std::vector<bool> seen(un, false);
  bool perm = true;
  for (int v : g.a) {
    if (v < 1 || v > n || seen[v - 1]) {
      perm = false;
      break;
    }
    seen[v - 1] = true;
  }
  if (!perm) out.push_back("row a is not a permutation of 1.." + std::to_string(n));

  const int max_d = family == ObjectFamily::Capelli ? 1 : 2;
  for (int i = 1; i <= n; ++i) {
    const int b = g.b[i - 1];
    const int d = g.d[i - 1];
    if (b < 1 || b > n)
      out.push_back(col_ref("b", i) + " = " + std::to_string(b) +
                    " out of range 1.." + std::to_string(n));
    if (d < 0 || d > max_d)
      out.push_back(col_ref("d", i) + " = " + std::to_string(d) +
                    " not allowed for the " + to_string(family) + " family");
    if (d == 1) {
      if (g.a[i - 1] != i)
        out.push_back(col_ref("d", i) + " = 1 requires " + col_ref("a", i) +
                      " = " + std::to_string(i));
      if (b < i + 1 || b > n)
        out.push_back(col_ref("d", i) + " = 1 requires " +
                      std::to_string(i + 1) + " <= " + col_ref("b", i) +
                      " <= " + std::to_string(n));
    }
    if (d == 2 && b != i)
      out.push_back(col_ref("d", i) + " = 2 requires " + col_ref("b", i) +
                    " = " + std::to_string(i));
  }
  return out;
}

void validate(const GMatrix& g, ObjectFamily family) {
  const std::vector<std::string> bad = violations(g, family);
  if (bad.empty()) return;
  std::string msg = "invalid " + to_string(family) + " object:";
  for (const std::string& v : bad) msg += " " + v + ";";
  msg.pop_back();
  throw std::domain_error(msg);
}

namespace {

bool direct_holds(const GMatrix& g, int i, int j) {
  return g.b[i - 1] == g.b[j - 1] && i == g.a[j - 1];
}

bool flipped_holds(const GMatrix& g, int i, int j) {
  return g.b[i - 1] == g.a[j - 1] && i == g.b[j - 1];
}

}  // namespace

std::vector<Link> links_of(const GMatrix& g, ObjectFamily family) {
  validate(g, family);
  std::vector<Link> out;
  for (int i = 1; i < g.n; ++i) {
    if (g.d[i - 1] % 2 != 0) continue;
    for (int j = i + 1; j <= g.n; ++j) {
      if (g.d[j - 1] % 2 != 0) continue;
      const bool direct = direct_holds(g, i, j);
      if (family == ObjectFamily::Capelli) {
        if (direct) out.push_back({i, j, LinkVariant::Direct});
        continue;
      }
      if (direct)
        out.push_back({i, j, LinkVariant::Direct});
      else if (flipped_holds(g, i, j))
        out.push_back({i, j, LinkVariant::Flipped});
    }
  }
  return out;
}

std::vector<ContractionSet> contraction_sets(const GMatrix& g,
                                             ObjectFamily family) {
  const std::vector<Link> links = links_of(g, family);
  const int m = static_cast<int>(links.size());
  if (m > kMaxLinksForContractionSets)
    throw ResourceError("object has " + std::to_string(m) +
                        " links; contraction-set enumeration caps at " +
                        std::to_string(kMaxLinksForContractionSets));
  std::vector<ContractionSet> out;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    ContractionSet k;
    bool ok = true;
    for (int bit = 0; bit < m && ok; ++bit) {
      if (!(mask >> bit & 1)) continue;
      for (const Link& prev : k)
        if (prev.source == links[bit].source || prev.end == links[bit].end) {
          ok = false;
          break;
        }
      if (ok) k.push_back(links[bit]);
    }
    if (ok) out.push_back(std::move(k));
  }
  return out;
}

void for_each_object(ObjectFamily family, int n,
                     const std::function<void(const GMatrix&)>& fn,
                     int max_n) {
  if (n < 1) throw std::domain_error("dimension must be at least 1");
  if (n > max_n)
    throw ResourceError("dimension " + std::to_string(n) +
                        " exceeds the enumeration maximum " +
                        std::to_string(max_n));
  const bool turnbull = family == ObjectFamily::Turnbull;
  GMatrix g;
  g.n = n;
  g.a.assign(n, 0);
  g.b.assign(n, 1);
  g.d.assign(n, 0);

  // Columns are filled left to right, d row before b row, so emission is
  // lexicographic on (a, d, b).
  std::function<void(int)> fill_b = [&](int col) {
    if (col == n) {
      fn(g);
      return;
    }
    const int d = g.d[col];
    if (d == 2) {
      g.b[col] = col + 1;
      fill_b(col + 1);
      return;
    }
    const int lo = d == 1 ? col + 2 : 1;
    for (int b = lo; b <= n; ++b) {
      g.b[col] = b;
      fill_b(col + 1);
    }
  };
  std::function<void(int)> fill_d = [&](int col) {
    if (col == n) {
      fill_b(0);
      return;
    }
    g.d[col] = 0;
    fill_d(col + 1);
    if (g.a[col] == col + 1 && col + 2 <= n) {
      g.d[col] = 1;
      fill_d(col + 1);
    }
    if (turnbull) {
      g.d[col] = 2;
      fill_d(col + 1);
    }
    g.d[col] = 0;
  };
  for_each_permutation(n, [&](const std::vector<int>& a, int) {
    g.a = a;
    fill_d(0);
  });
}

std::vector<GMatrix> enumerate_objects(ObjectFamily family, int n, int max_n) {
  std::vector<GMatrix> out;
  for_each_object(
      family, n, [&](const GMatrix& g) { out.push_back(g); }, max_n);
  return out;
}

long long count_objects(ObjectFamily family, int n, int max_n) {
  long long count = 0;
  for_each_object(
      family, n, [&](const GMatrix&) { ++count; }, max_n);
  return count;
}

Polynomial weight_of(const GMatrix& g, ObjectFamily family) {
  validate(g, family);
  const SymmetryMode mode = mode_of(family);
  Word w;
  w.coeff = permutation_sign(g.a);
  for (int i = 1; i <= g.n; ++i) {
    if (g.d[i - 1] == 1) {
      w.h_power += 1;
      continue;
    }
    const int b = g.b[i - 1];
    w.factors.push_back(
        canonical_variable(VarKind::X, b, g.a[i - 1], mode, g.n).variable());
    w.factors.push_back(canonical_variable(VarKind::P, b, i, mode, g.n).variable());
  }
  return Polynomial(AlgebraContext{mode, g.n}, {std::move(w)});
}

namespace {

/// Validates g and checks K against links_of(g): known (source, end)
/// pairs, distinct sources, distinct ends. Returns the link list of g.
std::vector<Link> require_contraction_set(const GMatrix& g,
                                          const ContractionSet& k,
                                          ObjectFamily family) {
  const std::vector<Link> links = links_of(g, family);
  for (std::size_t i = 0; i < k.size(); ++i) {
    const bool known = std::any_of(links.begin(), links.end(), [&](const Link& l) {
      return l.source == k[i].source && l.end == k[i].end;
    });
    if (!known)
      throw std::domain_error("(" + std::to_string(k[i].source) + "," +
                              std::to_string(k[i].end) +
                              ") is not a link of the object");
    for (std::size_t j = i + 1; j < k.size(); ++j)
      if (k[i].source == k[j].source || k[i].end == k[j].end)
        throw std::domain_error(
            "contraction set repeats a source or an end at (" +
            std::to_string(k[j].source) + "," + std::to_string(k[j].end) + ")");
  }
  return links;
}

}  // namespace

NormalMonomial weight_of_pair(const GMatrix& g, const ContractionSet& k,
                              ObjectFamily family) {
  require_contraction_set(g, k, family);
  const SymmetryMode mode = mode_of(family);
  const auto is_source = [&](int i) {
    return std::any_of(k.begin(), k.end(),
                       [&](const Link& l) { return l.source == i; });
  };
  const auto is_end = [&](int i) {
    return std::any_of(k.begin(), k.end(),
                       [&](const Link& l) { return l.end == i; });
  };

  NormalMonomial m;
  m.coeff = permutation_sign(g.a);
  m.key.h_power = static_cast<int>(k.size());
  for (int i = 1; i <= g.n; ++i) {
    if (g.d[i - 1] == 1) {
      m.key.h_power += 1;
      continue;
    }
    const int b = g.b[i - 1];
    if (!is_end(i))
      m.key.x_part.push_back(
          canonical_variable(VarKind::X, b, g.a[i - 1], mode, g.n).id);
    if (!is_source(i))
      m.key.p_part.push_back(canonical_variable(VarKind::P, b, i, mode, g.n).id);
  }
  std::sort(m.key.x_part.begin(), m.key.x_part.end());
  std::sort(m.key.p_part.begin(), m.key.p_part.end());
  return m;
}

bool is_good(const PairGK& pair) {
  return pair.k.empty() &&
         std::none_of(pair.g.d.begin(), pair.g.d.end(),
                      [](int d) { return d == 1; });
}

std::string to_string(PivotCase c) {
  switch (c) {
    case PivotCase::Case1:
      return "1";
    case PivotCase::Case2:
      return "2";
    case PivotCase::Case3Prime:
      return "3'";
    case PivotCase::Case3Double:
      return "3''";
    case PivotCase::Case3Triple:
      return "3'''";
  }
  throw std::domain_error("unknown pivot case");
}

PivotCase partner_case(PivotCase c) {
  switch (c) {
    case PivotCase::Case1:
      return PivotCase::Case2;
    case PivotCase::Case2:
      return PivotCase::Case1;
    case PivotCase::Case3Prime:
      return PivotCase::Case3Prime;
    case PivotCase::Case3Double:
      return PivotCase::Case3Triple;
    case PivotCase::Case3Triple:
      return PivotCase::Case3Double;
  }
  throw std::domain_error("unknown pivot case");
}

std::optional<Pivot> pivot_index(const PairGK& pair, ObjectFamily family) {
  const GMatrix& g = pair.g;
  require_contraction_set(g, pair.k, family);
  if (is_good(pair)) return std::nullopt;

  for (int i = g.n - 1; i >= 1; --i) {
    if (g.d[i - 1] == 1) return Pivot{i, PivotCase::Case2};
    const auto link = std::find_if(pair.k.begin(), pair.k.end(),
                                   [&](const Link& l) { return l.source == i; });
    if (link == pair.k.end()) continue;
    if (family == ObjectFamily::Capelli) return Pivot{i, PivotCase::Case1};

    const int j = link->end;
    if (g.d[i - 1] == 0 && direct_holds(g, i, j))
      return Pivot{i, PivotCase::Case1};
    if (!flipped_holds(g, i, j))
      throw std::logic_error("contraction set holds a non-link");
    if (g.d[i - 1] == 2) return Pivot{i, PivotCase::Case3Triple};
    return g.a[i - 1] == i ? Pivot{i, PivotCase::Case3Double}
                           : Pivot{i, PivotCase::Case3Prime};
  }
  throw std::logic_error("bad pair admits no pivot");
}

std::pair<PairGK, PivotCase> involution(const PairGK& pair,
                                        ObjectFamily family) {
  const std::optional<Pivot> piv = pivot_index(pair, family);
  if (!piv) throw std::domain_error("the involution is undefined on good pairs");

  GMatrix g = pair.g;
  const int i = piv->index;
  const int ai = g.a[i - 1];
  const int bi = g.b[i - 1];
  // K as bare (source, end) pairs; variants are recomputed at the end
  // against the rewritten object.
  std::vector<std::pair<int, int>> k;
  for (const Link& l : pair.k) k.emplace_back(l.source, l.end);

  const auto erase_pair = [&](int s, int e) {
    k.erase(std::find(k.begin(), k.end(), std::make_pair(s, e)));
  };
  const auto relabel_end = [&](int from, int to) {
    for (auto& [s, e] : k)
      if (e == from) e = to;
  };

  switch (piv->tag) {
    case PivotCase::Case1: {
      const int j = std::find_if(pair.k.begin(), pair.k.end(),
                                 [&](const Link& l) { return l.source == i; })
                        ->end;
      g.a[i - 1] = i;
      g.b[i - 1] = j;
      g.d[i - 1] = 1;
      g.a[j - 1] = ai;
      g.b[j - 1] = bi;
      erase_pair(i, j);
      relabel_end(i, j);
      break;
    }
    case PivotCase::Case2: {
      const int j = bi;
      g.a[i - 1] = g.a[j - 1];
      g.b[i - 1] = g.b[j - 1];
      g.d[i - 1] = 0;
      g.a[j - 1] = i;
      relabel_end(j, i);
      k.emplace_back(i, j);
      break;
    }
    case PivotCase::Case3Prime:
    case PivotCase::Case3Double:
    case PivotCase::Case3Triple: {
      const int j = std::find_if(pair.k.begin(), pair.k.end(),
                                 [&](const Link& l) { return l.source == i; })
                        ->end;
      g.a[i - 1] = bi;
      g.b[i - 1] = ai;
      g.d[i - 1] = piv->tag == PivotCase::Case3Double ? 2 : 0;
      g.a[j - 1] = ai;
      break;
    }
  }

  validate(g, family);
  const std::vector<Link> links = links_of(g, family);
  ContractionSet image;
  for (const auto& [s, e] : k) {
    const auto it = std::find_if(links.begin(), links.end(), [&](const Link& l) {
      return l.source == s && l.end == e;
    });
    if (it == links.end())
      throw std::logic_error("involution image lost the link (" +
                             std::to_string(s) + "," + std::to_string(e) + ")");
    image.push_back(*it);
  }
  std::sort(image.begin(), image.end());
  return {PairGK{std::move(g), std::move(image)}, piv->tag};
}

NormalPolynomial combinatorial_lhs(ObjectFamily family, int n, int max_n) {
  NormalPolynomial out;
  for_each_object(
      family, n,
      [&](const GMatrix& g) {
        for (const ContractionSet& k : contraction_sets(g, family))
          out.add(weight_of_pair(g, k, family));
      },
      max_n);
  return out;
}

NormalPolynomial good_guy_sum(ObjectFamily family, int n, int max_n) {
  NormalPolynomial out;
  for_each_object(
      family, n,
      [&](const GMatrix& g) {
        if (std::any_of(g.d.begin(), g.d.end(), [](int d) { return d == 1; }))
          return;
        out.add(weight_of_pair(g, {}, family));
      },
      max_n);
  return out;
}

InvolutionReport check_involution_properties(ObjectFamily family, int n,
                                             int max_n) {
  InvolutionReport report;
  report.family = family;
  report.n = n;
  constexpr std::size_t kMaxSamples = 10;
  const auto note = [&](bool& flag, const PairGK& p, const std::string& what) {
    flag = false;
    if (report.violation_samples.size() < kMaxSamples)
      report.violation_samples.push_back(what + " at " + describe(p.g) +
                                         " K=" + describe(p.k));
  };

  for_each_object(
      family, n,
      [&](const GMatrix& g) {
        ++report.object_count;
        for (const ContractionSet& k : contraction_sets(g, family)) {
          ++report.pair_count;
          const PairGK p{g, k};
          if (is_good(p)) {
            ++report.good_count;
            continue;
          }
          ++report.bad_count;
          const NormalMonomial wp = weight_of_pair(g, k, family);
          report.bad_weight_sum.add(wp);

          const std::optional<Pivot> piv = pivot_index(p, family);
          const auto [q, applied] = involution(p, family);
          if (applied != piv->tag)
            note(report.case_exchanged, p, "applied case differs from pivot");
          if (q == p) note(report.fixed_point_free, p, "fixed point");

          const NormalMonomial wq = weight_of_pair(q.g, q.k, family);
          if (!(wq.key == wp.key) || wq.coeff != -wp.coeff)
            note(report.weight_negated, p, "weight not negated");

          const std::optional<Pivot> qpiv = pivot_index(q, family);
          if (!qpiv || qpiv->index != piv->index)
            note(report.pivot_preserved, p, "pivot index moved");
          if (qpiv && qpiv->tag != partner_case(piv->tag))
            note(report.case_exchanged, p, "case not exchanged");

          if (!(involution(q, family).first == p))
            note(report.involutive, p, "omega^2 != id");
        }
      },
      max_n);
  report.bad_sum_zero = report.bad_weight_sum.is_zero();
  return report;
}

namespace {

std::string row_text(const std::vector<int>& row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(row[i]);
  }
  return out + "]";
}

}  // namespace

std::string describe(const GMatrix& g) {
  return "a=" + row_text(g.a) + " b=" + row_text(g.b) + " d=" + row_text(g.d);
}

std::string describe(const ContractionSet& k) {
  std::string out = "{";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) out += ',';
    out += "(" + std::to_string(k[i].source) + "," + std::to_string(k[i].end) +
           ")";
  }
  return out + "}";
}

}  // namespace capelli
