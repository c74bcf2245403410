#include <map>

#include "plethysm/errors.hpp"
#include "plethysm/symfunc.hpp"

namespace plethysm {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::P: return 'P';
    case Basis::H: return 'H';
    case Basis::M: return 'M';
    case Basis::S: return 'S';
  }
  return '?';
}

Basis basis_from_letter(char c) {
  switch (c) {
    case 'P': return Basis::P;
    case 'H': return Basis::H;
    case 'M': return Basis::M;
    case 'S': return Basis::S;
    default: throw UsageError(std::string("unknown basis tag '") + c + "'");
  }
}

SymExpr SymExpr::monomial(Basis basis, const Partition& lambda, const Rational& coeff) {
  SymExpr e(basis, lambda.size());
  e.add_term(lambda, coeff);
  return e;
}

Rational SymExpr::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymExpr::add_term(const Partition& lambda, const Rational& coeff) {
  if (lambda.size() != degree_)
    throw UsageError("term " + lambda.to_string() + " does not have degree " + std::to_string(degree_));
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void SymExpr::require_compatible(const SymExpr& other) const {
  if (basis_ != other.basis_) throw UsageError("basis mismatch in symmetric function arithmetic");
  if (degree_ != other.degree_ && !is_zero() && !other.is_zero())
    throw UsageError("degree mismatch in symmetric function arithmetic");
}

SymExpr& SymExpr::operator+=(const SymExpr& other) {
  require_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& other) {
  require_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

SymExpr& SymExpr::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) c *= scalar;
  return *this;
}

namespace {

SymExpr h_n_to_p(int n) {
  SymExpr e(Basis::P, n);
  for (const Partition& rho : enumerate_partitions(n, n)) {
    Rational c(1);
    c /= Rational(z_of(rho));
    e.add_term(rho, c);
  }
  return e;
}

void require_p(const SymExpr& f) {
  if (f.basis() != Basis::P) throw UsageError("operation requires the power-sum basis");
}

}  // namespace

SymExpr multiply_p(const SymExpr& f, const SymExpr& g) {
  require_p(f);
  require_p(g);
  SymExpr out(Basis::P, f.degree() + g.degree());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) out.add_term(union_parts(a, b), ca * cb);
  }
  return out;
}

SymExpr h_to_p(const Partition& lambda) {
  SymExpr out = SymExpr::monomial(Basis::P, Partition());
  for (int part : lambda) out = multiply_p(out, h_n_to_p(part));
  return out;
}

SymExpr adams(const SymExpr& g, int k) {
  require_p(g);
  SymExpr out(Basis::P, g.degree() * k);
  for (const auto& [lambda, c] : g.terms()) {
    std::vector<int> parts(lambda.begin(), lambda.end());
    for (int& x : parts) x *= k;
    out.add_term(Partition(std::move(parts)), c);
  }
  return out;
}

SymExpr plethysm(const SymExpr& f, const SymExpr& g) {
  require_p(f);
  require_p(g);
  if (g.is_zero()) throw UsageError("plethysm requires a nonzero inner argument");
  std::map<int, SymExpr> adams_cache;
  auto p_k_of_g = [&](int k) -> const SymExpr& {
    auto it = adams_cache.find(k);
    if (it == adams_cache.end()) it = adams_cache.emplace(k, adams(g, k)).first;
    return it->second;
  };
  // Products over prefixes of lambda are shared between terms of f.
  std::map<Partition, SymExpr> prefix_products;
  prefix_products.emplace(Partition(), SymExpr::monomial(Basis::P, Partition()));
  std::function<const SymExpr&(const Partition&)> product_for = [&](const Partition& lambda) -> const SymExpr& {
    auto it = prefix_products.find(lambda);
    if (it != prefix_products.end()) return it->second;
    std::vector<int> head(lambda.begin(), lambda.end() - 1);
    SymExpr value = multiply_p(product_for(Partition(head)), p_k_of_g(lambda.parts().back()));
    return prefix_products.emplace(lambda, std::move(value)).first->second;
  };
  SymExpr out(Basis::P, f.degree() * g.degree());
  for (const auto& [lambda, c] : f.terms()) out += product_for(lambda) * c;
  return out;
}

SymExpr plethysm_h(const Partition& nu, const Partition& mu) {
  SymExpr g = h_to_p(mu);
  int top = nu.empty() ? 0 : nu[0];
  // n h_n[g] = sum_{k=1}^{n} p_k[g] h_{n-k}[g], since plethysm by g is a ring map.
  std::vector<SymExpr> h_of_g;
  h_of_g.push_back(SymExpr::monomial(Basis::P, Partition()));
  std::vector<SymExpr> p_of_g;
  for (int n = 1; n <= top; ++n) {
    p_of_g.push_back(adams(g, n));
    SymExpr acc(Basis::P, n * mu.size());
    for (int k = 1; k <= n; ++k) acc += multiply_p(p_of_g[k - 1], h_of_g[n - k]);
    acc *= Rational(1, n);
    h_of_g.push_back(std::move(acc));
  }
  SymExpr out = SymExpr::monomial(Basis::P, Partition());
  for (int part : nu) out = multiply_p(out, h_of_g[part]);
  return out;
}

}  // namespace plethysm
