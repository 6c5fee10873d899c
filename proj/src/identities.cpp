#include "capelli/identities.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "capelli/error.hpp"
#include "capelli/permutations.hpp"

namespace capelli {

SymmetryMode mode_of(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Capelli:
      return SymmetryMode::Generic;
    case IdentityKind::Turnbull:
      return SymmetryMode::Symmetric;
    case IdentityKind::TurnbullAntisymmetric:
    case IdentityKind::HoweUmedaKostantSahi:
      return SymmetryMode::Antisymmetric;
  }
  throw std::domain_error("unknown identity kind");
}

std::string to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Capelli:
      return "cap";
    case IdentityKind::Turnbull:
      return "tur";
    case IdentityKind::TurnbullAntisymmetric:
      return "tur-anti";
    case IdentityKind::HoweUmedaKostantSahi:
      return "hu-ks";
  }
  throw std::domain_error("unknown identity kind");
}

namespace {

void require_dimension(int n) {
  if (n < 1) throw std::domain_error("dimension must be at least 1");
}

void require_within(int n, int max_n) {
  if (n > max_n)
    throw ResourceError("dimension " + std::to_string(n) +
                        " exceeds the configured maximum " +
                        std::to_string(max_n));
}

}  // namespace

PolyMatrix x_matrix(SymmetryMode mode, int n) {
  require_dimension(n);
  const AlgebraContext ctx{mode, n};
  PolyMatrix m(ctx, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m.at(i, j) = Polynomial::variable(ctx, VarKind::X, i, j);
  return m;
}

PolyMatrix momentum_matrix(SymmetryMode mode, int n, bool doubled_diagonal) {
  require_dimension(n);
  const AlgebraContext ctx{mode, n};
  PolyMatrix m(ctx, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Polynomial entry = Polynomial::variable(ctx, VarKind::P, i, j);
      if (doubled_diagonal && i == j)
        entry = Polynomial::scalar(ctx, 2) * entry;
      m.at(i, j) = std::move(entry);
    }
  return m;
}

PolyMatrix xt_p_matrix(SymmetryMode mode, int n) {
  require_dimension(n);
  const AlgebraContext ctx{mode, n};
  PolyMatrix m(ctx, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Polynomial entry = Polynomial::zero(ctx);
      for (int k = 1; k <= n; ++k)
        entry += Polynomial::variable(ctx, VarKind::X, k, i) *
                 Polynomial::variable(ctx, VarKind::P, k, j);
      m.at(i, j) = std::move(entry);
    }
  return m;
}

PolyMatrix build_A(IdentityKind kind, int n) {
  require_dimension(n);
  const SymmetryMode mode = mode_of(kind);
  const AlgebraContext ctx{mode, n};
  const bool doubled = kind == IdentityKind::Turnbull;
  PolyMatrix m(ctx, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Polynomial entry = Polynomial::zero(ctx);
      for (int k = 1; k <= n; ++k) {
        Polynomial word = Polynomial::variable(ctx, VarKind::X, k, i) *
                          Polynomial::variable(ctx, VarKind::P, k, j);
        if (doubled && k == j) word = Polynomial::scalar(ctx, 2) * word;
        entry += word;
      }
      if (i == j) {
        BigInt shift = n - i;
        if (kind == IdentityKind::HoweUmedaKostantSahi) shift = n - i - 1;
        if (kind == IdentityKind::TurnbullAntisymmetric) shift = -(n - i);
        entry += Polynomial::scalar(ctx, shift, 1);
      }
      m.at(i, j) = std::move(entry);
    }
  }
  return m;
}

namespace {

Polynomial signed_product(const PolyMatrix& m, const std::vector<int>& perm,
                          int sign, bool by_column) {
  const int n = m.n();
  Polynomial prod = Polynomial::scalar(m.context(), sign);
  for (int c = 1; c <= n; ++c) {
    const Polynomial& entry =
        by_column ? m.at(perm[c - 1], c) : m.at(c, perm[c - 1]);
    prod *= entry;
  }
  return prod;
}

}  // namespace

Polynomial column_determinant(const PolyMatrix& m, int max_n) {
  require_within(m.n(), max_n);
  Polynomial det = Polynomial::zero(m.context());
  for_each_permutation(m.n(), [&](const std::vector<int>& perm, int sign) {
    det += signed_product(m, perm, sign, /*by_column=*/true);
  });
  return det;
}

Polynomial row_determinant(const PolyMatrix& m, int max_n) {
  require_within(m.n(), max_n);
  Polynomial det = Polynomial::zero(m.context());
  for_each_permutation(m.n(), [&](const std::vector<int>& perm, int sign) {
    det += signed_product(m, perm, sign, /*by_row=*/false);
  });
  return det;
}

Polynomial column_permanent(const PolyMatrix& m, int max_n) {
  require_within(m.n(), max_n);
  Polynomial per = Polynomial::zero(m.context());
  for_each_permutation(m.n(), [&](const std::vector<int>& perm, int) {
    per += signed_product(m, perm, 1, /*by_column=*/true);
  });
  return per;
}

namespace {

/// Normal form of sign * M(.,1) ... M(.,n) for one permutation, built left
/// to right so like terms merge after every column instead of at the end.
NormalPolynomial fused_product(const PolyMatrix& m,
                               const std::vector<int>& perm, int sign,
                               CommutationSetting setting) {
  NormalPolynomial acc;
  acc.add(NormalKey{0, {}, {}}, sign);
  for (int c = 1; c <= m.n(); ++c) {
    acc = normal_order_mul(acc, m.at(perm[c - 1], c), setting);
    if (acc.is_zero()) break;
  }
  return acc;
}

/// Fused Σ_σ of ordered column products, signed or signless, optionally
/// chunked across threads (merging is commutative, so the schedule cannot
/// change the result).
NormalPolynomial fused_permutation_sum(const PolyMatrix& m,
                                       CommutationSetting setting, int threads,
                                       int max_n, bool signed_sum) {
  require_within(m.n(), max_n);
  const auto perms = all_permutations(m.n());
  const auto run = [&m, &perms, setting, signed_sum](std::size_t begin,
                                                     std::size_t end) {
    NormalPolynomial out;
    for (std::size_t i = begin; i < end; ++i)
      out += fused_product(m, perms[i].first,
                           signed_sum ? perms[i].second : 1, setting);
    return out;
  };
  if (threads <= 1 || perms.size() < 8) return run(0, perms.size());

  const std::size_t chunk = (perms.size() + threads - 1) / threads;
  std::vector<std::future<NormalPolynomial>> parts;
  for (std::size_t begin = 0; begin < perms.size(); begin += chunk)
    parts.push_back(std::async(std::launch::async, run, begin,
                               std::min(begin + chunk, perms.size())));
  NormalPolynomial out;
  for (auto& part : parts) out += part.get();
  return out;
}

}  // namespace

NormalPolynomial permanent_classical(const PolyMatrix& m, int max_n) {
  return fused_permutation_sum(m, CommutationSetting::Classical, 1, max_n,
                               /*signed_sum=*/false);
}

NormalPolynomial normal_ordered_column_determinant(const PolyMatrix& m,
                                                   CommutationSetting setting,
                                                   int threads, int max_n) {
  return fused_permutation_sum(m, setting, threads, max_n,
                               /*signed_sum=*/true);
}

NormalPolynomial normal_ordered_column_permanent(const PolyMatrix& m,
                                                 CommutationSetting setting,
                                                 int threads, int max_n) {
  return fused_permutation_sum(m, setting, threads, max_n,
                               /*signed_sum=*/false);
}

NormalPolynomial lhs_polynomial(IdentityKind kind, int n, int threads,
                                int max_n) {
  require_dimension(n);
  const PolyMatrix a = build_A(kind, n);
  return kind == IdentityKind::TurnbullAntisymmetric
             ? normal_ordered_column_permanent(
                   a, CommutationSetting::Quantum, threads, max_n)
             : normal_ordered_column_determinant(
                   a, CommutationSetting::Quantum, threads, max_n);
}

NormalPolynomial rhs_polynomial(IdentityKind kind, int n) {
  require_dimension(n);
  const SymmetryMode mode = mode_of(kind);
  if (kind == IdentityKind::TurnbullAntisymmetric)
    return permanent_classical(xt_p_matrix(mode, n));

  const Polynomial det_x = column_determinant(x_matrix(mode, n));
  const Polynomial det_p = column_determinant(
      momentum_matrix(mode, n, kind == IdentityKind::Turnbull));
  // All-x and all-p blocks each commute internally and the x block stays
  // left of the p block, so this product is already in normal form.
  return normal_order(det_x * det_p, CommutationSetting::Quantum);
}

VerificationReport verify_identity(IdentityKind kind, int n,
                                   const VerifyOptions& options) {
  require_dimension(n);
  require_within(n, options.max_n);
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.kind = kind;
  report.n = n;
  NormalPolynomial lhs =
      lhs_polynomial(kind, n, options.threads,
                     std::max(options.max_n, kDefaultMaxDeterminantN));
  NormalPolynomial rhs = rhs_polynomial(kind, n);
  report.lhs_term_count = lhs.size();
  report.rhs_term_count = rhs.size();
  lhs -= rhs;
  report.equal = lhs.is_zero();
  report.residual = std::move(lhs);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace capelli
