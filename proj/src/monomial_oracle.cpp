#include <vector>

#include "plethysm/errors.hpp"
#include "plethysm/symfunc.hpp"

namespace plethysm {

namespace {

// Exponent vectors bounded componentwise by `bound`, stored densely in
// mixed radix (bound_i + 1).
class BoundedBox {
 public:
  explicit BoundedBox(std::vector<int> bound) : bound_(std::move(bound)) {
    stride_.resize(bound_.size());
    std::size_t s = 1;
    for (std::size_t i = 0; i < bound_.size(); ++i) {
      stride_[i] = s;
      s *= static_cast<std::size_t>(bound_[i] + 1);
    }
    size_ = s;
    degree_.resize(size_);
    for (std::size_t idx = 0; idx < size_; ++idx) {
      int d = 0;
      for (std::size_t i = 0; i < bound_.size(); ++i) d += exponent(idx, i);
      degree_[idx] = d;
    }
  }

  std::size_t size() const { return size_; }
  int exponent(std::size_t idx, std::size_t var) const {
    return static_cast<int>((idx / stride_[var]) % (bound_[var] + 1));
  }
  int degree(std::size_t idx) const { return degree_[idx]; }

  // Index of a + b, or npos when the sum leaves the box.
  std::size_t add(std::size_t a, std::size_t b) const {
    std::size_t out = 0;
    for (std::size_t i = 0; i < bound_.size(); ++i) {
      int e = exponent(a, i) + exponent(b, i);
      if (e > bound_[i]) return npos;
      out += static_cast<std::size_t>(e) * stride_[i];
    }
    return out;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<int> bound_;
  std::vector<std::size_t> stride_;
  std::vector<int> degree_;
  std::size_t size_ = 0;
};

using Dense = std::vector<Integer>;

Dense multiply(const BoundedBox& box, const Dense& f, const Dense& g) {
  Dense out(box.size());
  for (std::size_t a = 0; a < box.size(); ++a) {
    if (f[a] == 0) continue;
    for (std::size_t b = 0; b < box.size(); ++b) {
      if (g[b] == 0) continue;
      std::size_t c = box.add(a, b);
      if (c != BoundedBox::npos) out[c] += f[a] * g[b];
    }
  }
  return out;
}

// h_a as the sum of all monomials of degree a inside the box.
Dense complete_homogeneous(const BoundedBox& box, int a) {
  Dense out(box.size());
  for (std::size_t idx = 0; idx < box.size(); ++idx)
    if (box.degree(idx) == a) out[idx] = 1;
  return out;
}

// h_n[G] where G has nonnegative integer coefficients: the coefficient of t^n
// in prod_a (1 - x^a t)^{-G_a}, i.e. multisets of n monomials drawn from G
// with G_a distinguishable copies of x^a.
Dense complete_plethysm(const BoundedBox& box, const Dense& g, int n) {
  std::vector<Dense> levels(n + 1, Dense(box.size()));
  levels[0][0] = 1;
  for (std::size_t a = 0; a < box.size(); ++a) {
    if (g[a] == 0 || box.degree(a) == 0) continue;
    unsigned long copies = g[a].get_ui();
    for (int t = n; t >= 1; --t) {
      for (int i = 1; i <= t; ++i) {
        // i copies (with repetition) of monomial a: C(copies + i - 1, i) ways.
        Integer ways = binomial(static_cast<unsigned>(copies + i - 1), static_cast<unsigned>(i));
        const Dense& source = levels[t - i];
        for (std::size_t e = 0; e < box.size(); ++e) {
          if (source[e] == 0) continue;
          std::size_t target = e;
          for (int r = 0; r < i && target != BoundedBox::npos; ++r) target = box.add(target, a);
          if (target != BoundedBox::npos) levels[t][target] += ways * source[e];
        }
      }
    }
  }
  return levels[n];
}

Integer monomial_coefficient(const Partition& nu, const Partition& mu, const Partition& weight) {
  BoundedBox box(weight.parts());
  Dense g(box.size());
  g[0] = 1;
  for (int part : mu) g = multiply(box, g, complete_homogeneous(box, part));
  Dense total(box.size());
  total[0] = 1;
  for (int part : nu) total = multiply(box, total, complete_plethysm(box, g, part));
  return total[box.size() - 1];
}

}  // namespace

std::map<Partition, Integer, RevLex> monomial_oracle_expand(const Partition& nu, const Partition& mu, int k) {
  int degree = nu.size() * mu.size();
  if (k < 1 && degree > 0) throw UsageError("monomial oracle needs at least one variable");
  std::map<Partition, Integer, RevLex> out;
  for (const Partition& w : enumerate_partitions(degree)) {
    if (w.length() > k) continue;
    Integer c = monomial_coefficient(nu, mu, w);
    if (c != 0) out.emplace(w, std::move(c));
  }
  return out;
}

SymExpr oracle_schur_expand(const Partition& nu, const Partition& mu, int k) {
  int degree = nu.size() * mu.size();
  if (k <= 0) k = std::max(degree, 1);
  auto monomials = monomial_oracle_expand(nu, mu, k);
  SymExpr out(Basis::S, degree);
  // Reverse-lex order refines dominance, so every kappa with K_{kappa,w} != 0
  // and kappa != w has already been solved for when w is reached.
  for (const Partition& w : enumerate_partitions(degree)) {
    if (w.length() > k) continue;
    auto it = monomials.find(w);
    Integer value = it == monomials.end() ? Integer(0) : it->second;
    for (const auto& [kappa, a] : out.terms()) value -= a.get_num() * kostka(kappa, w);
    if (value != 0) out.add_term(w, Rational(value));
  }
  return out;
}

}  // namespace plethysm
