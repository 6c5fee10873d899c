#ifndef CAPELLI_TESTS_TEST_SUPPORT_HPP
#define CAPELLI_TESTS_TEST_SUPPORT_HPP

#include <numeric>
#include <random>
#include <vector>

#include "capelli/combinatorics.hpp"
#include "capelli/polynomial.hpp"

namespace capelli::testing {

/// Uniform random word over the context's variables: random coefficient in
/// [-3, 3] \ {0}, small h-power, `length` random x/p factors.
inline Word random_word(std::mt19937& rng, const AlgebraContext& ctx,
                        int length) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> h(0, 1);
  std::uniform_int_distribution<int> idx(1, ctx.n);
  std::uniform_int_distribution<int> kind(0, 1);
  Word w;
  do {
    w.coeff = coeff(rng);
  } while (w.coeff == 0);
  w.h_power = h(rng);
  for (int i = 0; i < length; ++i) {
    const VarKind k = kind(rng) ? VarKind::X : VarKind::P;
    const SignedVariable v =
        canonical_variable(k, idx(rng), idx(rng), ctx.mode, ctx.n);
    if (v.is_zero()) {
      w.coeff = 0;  // antisymmetric diagonal kills the word
      return w;
    }
    w.coeff *= v.sign;
    w.factors.push_back(v.variable());
  }
  return w;
}

/// Uniform random valid family object at dimension n.
inline GMatrix random_object(std::mt19937& rng, ObjectFamily family, int n) {
  GMatrix g;
  g.n = n;
  g.a.resize(n);
  std::iota(g.a.begin(), g.a.end(), 1);
  std::shuffle(g.a.begin(), g.a.end(), rng);
  g.b.resize(n);
  g.d.resize(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> choices{0};
    if (g.a[i - 1] == i && i + 1 <= n) choices.push_back(1);
    if (family == ObjectFamily::Turnbull) choices.push_back(2);
    const int d =
        choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    g.d[i - 1] = d;
    if (d == 2)
      g.b[i - 1] = i;
    else if (d == 1)
      g.b[i - 1] = std::uniform_int_distribution<int>(i + 1, n)(rng);
    else
      g.b[i - 1] = std::uniform_int_distribution<int>(1, n)(rng);
  }
  return g;
}

}  // namespace capelli::testing

#endif
