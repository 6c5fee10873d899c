#include "capelli/polynomial.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <utility>

namespace capelli {

namespace {

void require_same_context(const AlgebraContext& a, const AlgebraContext& b) {
  if (!(a == b))
    throw std::domain_error(
        "operands live in different algebras (mode/dimension mismatch)");
}

}  // namespace

Polynomial Polynomial::scalar(AlgebraContext ctx, BigInt coeff, int h_power) {
  if (coeff == 0) return zero(ctx);
  return Polynomial(ctx, {Word{std::move(coeff), h_power, {}}});
}

Polynomial Polynomial::variable(AlgebraContext ctx, VarKind kind, int i,
                                int j) {
  const SignedVariable v = canonical_variable(kind, i, j, ctx.mode, ctx.n);
  if (v.is_zero()) return zero(ctx);
  return Polynomial(ctx, {Word{v.sign, 0, {v.variable()}}});
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_context(ctx_, rhs.ctx_);
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  *this += -rhs;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (Word& w : out.terms_) w.coeff = -w.coeff;
  return out;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  require_same_context(lhs.ctx_, rhs.ctx_);
  std::vector<Word> product;
  product.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const Word& a : lhs.terms_) {
    for (const Word& b : rhs.terms_) {
      Word w;
      w.coeff = a.coeff * b.coeff;
      if (w.coeff == 0) continue;
      w.h_power = a.h_power + b.h_power;
      w.factors.reserve(a.factors.size() + b.factors.size());
      w.factors = a.factors;
      w.factors.insert(w.factors.end(), b.factors.begin(), b.factors.end());
      product.push_back(std::move(w));
    }
  }
  return Polynomial(lhs.ctx_, std::move(product));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial poly_mul(const Polynomial& lhs, const Polynomial& rhs) {
  return lhs * rhs;
}

void NormalPolynomial::add(NormalKey key, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

NormalPolynomial& NormalPolynomial::operator+=(const NormalPolynomial& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) add(key, coeff);
  return *this;
}

NormalPolynomial& NormalPolynomial::operator-=(const NormalPolynomial& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) add(key, -coeff);
  return *this;
}

NormalPolynomial NormalPolynomial::at_h_zero() const {
  NormalPolynomial out;
  for (const auto& [key, coeff] : terms_)
    if (key.h_power == 0) out.add(key, coeff);
  return out;
}

namespace {

struct PartialState {
  BigInt coeff;
  int h_power;
  std::vector<VarId> xs;
  std::vector<VarId> ps;
};

void sorted_insert(std::vector<VarId>& ids, VarId id) {
  ids.insert(std::upper_bound(ids.begin(), ids.end(), id), id);
}

}  // namespace

void accumulate_normal_ordered(NormalPolynomial& out, BigInt coeff, int h_power,
                               std::vector<VarId> xs, std::vector<VarId> ps,
                               const std::vector<Variable>& factors,
                               CommutationSetting setting) {
  if (coeff == 0) return;
  if (setting == CommutationSetting::Classical && h_power > 0) return;

  // Each state is the prefix in normal form. Appending p_v just joins the
  // p block. Appending x_v commutes it through the p block: X P x_v =
  // X' P + m h X P\{v} where m is the multiplicity of p_v in P.
  std::vector<PartialState> states;
  states.push_back({std::move(coeff), h_power, std::move(xs), std::move(ps)});
  std::vector<PartialState> next;
  for (const Variable& f : factors) {
    next.clear();
    for (PartialState& s : states) {
      if (f.kind == VarKind::P) {
        sorted_insert(s.ps, f.id);
        next.push_back(std::move(s));
        continue;
      }
      if (setting == CommutationSetting::Quantum) {
        const auto [lo, hi] = std::equal_range(s.ps.begin(), s.ps.end(), f.id);
        const auto multiplicity = hi - lo;
        if (multiplicity > 0) {
          PartialState contracted = s;
          contracted.ps.erase(contracted.ps.begin() + (lo - s.ps.begin()));
          contracted.h_power += 1;
          contracted.coeff *= static_cast<long long>(multiplicity);
          next.push_back(std::move(contracted));
        }
      }
      sorted_insert(s.xs, f.id);
      next.push_back(std::move(s));
    }
    states.swap(next);
  }
  for (PartialState& s : states)
    out.add(NormalKey{s.h_power, std::move(s.xs), std::move(s.ps)},
            s.coeff);
}

namespace {

NormalPolynomial normal_order_words(const std::vector<Word>& words,
                                    std::size_t begin, std::size_t end,
                                    CommutationSetting setting) {
  NormalPolynomial out;
  for (std::size_t i = begin; i < end; ++i) {
    const Word& w = words[i];
    accumulate_normal_ordered(out, w.coeff, w.h_power, {}, {}, w.factors,
                              setting);
  }
  return out;
}

}  // namespace

NormalPolynomial normal_order(const Polynomial& poly, CommutationSetting setting,
                              int threads) {
  const std::vector<Word>& words = poly.terms();
  if (threads <= 1 || words.size() < 64)
    return normal_order_words(words, 0, words.size(), setting);

  const std::size_t chunk = (words.size() + threads - 1) / threads;
  std::vector<std::future<NormalPolynomial>> parts;
  for (std::size_t begin = 0; begin < words.size(); begin += chunk) {
    const std::size_t end = std::min(begin + chunk, words.size());
    parts.push_back(std::async(std::launch::async, normal_order_words,
                               std::cref(words), begin, end, setting));
  }
  NormalPolynomial out;
  for (auto& part : parts) out += part.get();
  return out;
}

NormalPolynomial normal_order_mul(const NormalPolynomial& lhs,
                                  const Polynomial& rhs,
                                  CommutationSetting setting) {
  NormalPolynomial out;
  for (const auto& [key, coeff] : lhs.terms()) {
    for (const Word& w : rhs.terms()) {
      accumulate_normal_ordered(out, coeff * w.coeff, key.h_power + w.h_power,
                                key.x_part, key.p_part, w.factors, setting);
    }
  }
  return out;
}

bool poly_equal(const Polynomial& lhs, const Polynomial& rhs,
                CommutationSetting setting) {
  if (!(lhs.context() == rhs.context()))
    throw std::domain_error(
        "operands live in different algebras (mode/dimension mismatch)");
  return normal_order(lhs, setting) == normal_order(rhs, setting);
}

Polynomial to_polynomial(const NormalPolynomial& poly, AlgebraContext ctx) {
  std::vector<Word> words;
  words.reserve(poly.size());
  for (const auto& [key, coeff] : poly.terms()) {
    Word w;
    w.coeff = coeff;
    w.h_power = key.h_power;
    w.factors.reserve(key.x_part.size() + key.p_part.size());
    for (VarId id : key.x_part) w.factors.push_back({VarKind::X, id});
    for (VarId id : key.p_part) w.factors.push_back({VarKind::P, id});
    words.push_back(std::move(w));
  }
  return Polynomial(ctx, std::move(words));
}

namespace {

void append_coefficient(std::vector<std::string>& parts, const BigInt& coeff) {
  if (coeff != 1) parts.push_back(coeff.str());
}

void append_h(std::vector<std::string>& parts, int h_power) {
  if (h_power == 1)
    parts.push_back("h");
  else if (h_power > 1)
    parts.push_back("h^" + std::to_string(h_power));
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ' ';
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string format_monomial(const NormalKey& key, const BigInt& coeff) {
  std::vector<std::string> parts;
  append_coefficient(parts, coeff);
  append_h(parts, key.h_power);
  for (VarId id : key.x_part) parts.push_back(format_variable(VarKind::X, id));
  for (VarId id : key.p_part) parts.push_back(format_variable(VarKind::P, id));
  if (parts.empty()) return "1";
  return join(parts);
}

std::string format_canonical(const NormalPolynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : poly.terms()) {
    if (!first) out += " + ";
    out += format_monomial(key, coeff);
    first = false;
  }
  return out;
}

std::vector<std::string> head_terms(const NormalPolynomial& poly,
                                    std::size_t max_terms) {
  std::vector<std::string> out;
  for (const auto& [key, coeff] : poly.terms()) {
    if (out.size() == max_terms) break;
    out.push_back(format_monomial(key, coeff));
  }
  return out;
}

std::string format_word(const Word& word) {
  if (word.coeff == 0) return "0";
  std::vector<std::string> parts;
  append_coefficient(parts, word.coeff);
  append_h(parts, word.h_power);
  for (const Variable& f : word.factors)
    parts.push_back(format_variable(f.kind, f.id));
  if (parts.empty()) return "1";
  return join(parts);
}

}  // namespace capelli
