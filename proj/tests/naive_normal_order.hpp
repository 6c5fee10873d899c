#ifndef CAPELLI_TESTS_NAIVE_NORMAL_ORDER_HPP
#define CAPELLI_TESTS_NAIVE_NORMAL_ORDER_HPP

// Test-only oracle: normal ordering by repeated rewriting of one adjacent
// factor pair at a time, with a selectable strategy. Shares no code with
// the engine's insertion algorithm; agreement across strategies is the
// confluence check, agreement with normal_order validates the engine.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "capelli/polynomial.hpp"

namespace capelli::testing {

enum class RewriteStrategy { Leftmost, Rightmost };

inline NormalPolynomial naive_normal_order(const Polynomial& poly,
                                           CommutationSetting setting,
                                           RewriteStrategy strategy) {
  NormalPolynomial out;
  std::vector<Word> work = poly.terms();
  while (!work.empty()) {
    Word w = std::move(work.back());
    work.pop_back();
    if (w.coeff == 0) continue;
    if (setting == CommutationSetting::Classical && w.h_power > 0) continue;

    // A word is normal iff no p stands left of an x and both blocks are
    // sorted; any offending adjacent pair is a descent.
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i + 1 < w.factors.size(); ++i) {
      const Variable& f = w.factors[i];
      const Variable& g = w.factors[i + 1];
      const bool descent = (f.kind == VarKind::P && g.kind == VarKind::X) ||
                           (f.kind == g.kind && g.id < f.id);
      if (descent) {
        pos = i;
        if (strategy == RewriteStrategy::Leftmost) break;
      }
    }
    if (!pos) {
      NormalKey key;
      key.h_power = w.h_power;
      for (const Variable& f : w.factors)
        (f.kind == VarKind::X ? key.x_part : key.p_part).push_back(f.id);
      out.add(std::move(key), w.coeff);
      continue;
    }

    const std::size_t i = *pos;
    const bool contraction = setting == CommutationSetting::Quantum &&
                             w.factors[i].kind == VarKind::P &&
                             w.factors[i + 1].kind == VarKind::X &&
                             w.factors[i].id == w.factors[i + 1].id;
    if (contraction) {
      // p_v x_v -> x_v p_v + h
      Word rest = w;
      rest.factors.erase(rest.factors.begin() + i, rest.factors.begin() + i + 2);
      rest.h_power += 1;
      work.push_back(std::move(rest));
    }
    std::swap(w.factors[i], w.factors[i + 1]);
    work.push_back(std::move(w));
  }
  return out;
}

}  // namespace capelli::testing

#endif
