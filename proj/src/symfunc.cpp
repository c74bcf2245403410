#include <map>
#include <unordered_map>

#include "plethysm/errors.hpp"
#include "plethysm/parallel.hpp"
#include "plethysm/symfunc.hpp"

namespace plethysm {

namespace {

void require_p(const SymExpr& f) {
  if (f.basis() != Basis::P) throw UsageError("Schur extraction requires the power-sum basis");
}

// Integer numerators over a common denominator, so inner products run in mpz.
struct ClearedExpr {
  Integer denominator = 1;
  std::vector<std::pair<int, Integer>> numerators;  // (character table column, numerator)
};

ClearedExpr clear_denominators(const SymExpr& f) {
  ClearedExpr out;
  for (const auto& [mu, c] : f.terms()) mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.get_den_mpz_t());
  CharacterTable& table = CharacterTable::shared();
  for (const auto& [mu, c] : f.terms()) {
    Integer num = c.get_num() * (out.denominator / c.get_den());
    out.numerators.emplace_back(table.index_of(mu), std::move(num));
  }
  return out;
}

Rational inner_with_character(const ClearedExpr& f, const Partition& lambda) {
  CharacterTable& table = CharacterTable::shared();
  const std::vector<Partition>& parts = table.partitions(lambda.size());
  Integer acc = 0;
  for (const auto& [mi, num] : f.numerators) {
    std::int64_t chi = table.value(lambda, parts[mi]);
    if (chi == 0) continue;
    Integer term = num;
    term *= static_cast<long>(chi);
    acc += term;
  }
  Rational q(acc, f.denominator);
  q.canonicalize();
  return q;
}

}  // namespace

Rational schur_coefficient(const SymExpr& f, const Partition& lambda) {
  require_p(f);
  if (f.is_zero()) return 0;
  if (lambda.size() != f.degree())
    throw UsageError("Schur coefficient index " + lambda.to_string() + " does not match degree " +
                     std::to_string(f.degree()));
  return inner_with_character(clear_denominators(f), lambda);
}

SymExpr schur_expand(const SymExpr& f, const ExpandOptions& options) {
  require_p(f);
  if (f.degree() > options.max_degree)
    throw ResourceError("degree " + std::to_string(f.degree()) + " exceeds the cap " +
                        std::to_string(options.max_degree));
  SymExpr out(Basis::S, f.degree());
  if (f.is_zero()) return out;
  const std::vector<Partition>& lambdas = CharacterTable::shared().partitions(f.degree());
  ClearedExpr cleared = clear_denominators(f);
  std::vector<Rational> coeffs(lambdas.size());
  parallel_for(lambdas.size(), options.threads,
               [&](std::size_t i) { coeffs[i] = inner_with_character(cleared, lambdas[i]); });
  for (std::size_t i = 0; i < lambdas.size(); ++i) out.add_term(lambdas[i], coeffs[i]);
  return out;
}

Integer plethysm_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda) {
  if (lambda.size() != nu.size() * mu.size())
    throw UsageError("lambda must be a partition of |nu||mu| = " + std::to_string(nu.size() * mu.size()));
  Rational c = schur_coefficient(plethysm_h(nu, mu), lambda);
  if (c.get_den() != 1) throw CrossCheckError("non-integral plethysm coefficient");
  return c.get_num();
}

namespace {

struct KostkaKey {
  std::vector<int> shape;
  std::vector<int> content;
  bool operator<(const KostkaKey& o) const {
    return std::tie(shape, content) < std::tie(o.shape, o.content);
  }
};

// Shapes obtained by deleting a horizontal strip of `size` cells from `shape`.
void strip_removals(const std::vector<int>& shape, int size, std::size_t row, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (row == shape.size()) {
    if (size == 0) out.push_back(current);
    return;
  }
  int below = row + 1 < shape.size() ? shape[row + 1] : 0;
  int max_remove = std::min(size, shape[row] - below);
  for (int r = 0; r <= max_remove; ++r) {
    current[row] = shape[row] - r;
    strip_removals(shape, size - r, row + 1, current, out);
  }
  current[row] = shape[row];
}

Integer kostka_rec(std::vector<int> shape, std::vector<int> content, std::map<KostkaKey, Integer>& memo) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  while (!content.empty() && content.back() == 0) content.pop_back();
  if (content.empty()) return shape.empty() ? 1 : 0;
  // Letter c can only occupy rows 1..c; more rows than letters is impossible.
  if (shape.size() > content.size()) return 0;
  KostkaKey key{shape, content};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int last = content.back();
  std::vector<int> rest(content.begin(), content.end() - 1);
  std::vector<std::vector<int>> smaller;
  std::vector<int> current = shape;
  strip_removals(shape, last, 0, current, smaller);
  Integer total = 0;
  for (auto& s : smaller) total += kostka_rec(s, rest, memo);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer kostka(const Partition& lambda, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw UsageError("content entries must be nonnegative");
    total += c;
  }
  if (total != lambda.size())
    throw UsageError("Kostka number needs |lambda| = |content|, got " + std::to_string(lambda.size()) + " and " +
                     std::to_string(total));
  std::map<KostkaKey, Integer> memo;
  return kostka_rec(lambda.parts(), content, memo);
}

Integer kostka(const Partition& lambda, const Partition& content) { return kostka(lambda, content.parts()); }

SymExpr PlethysmEngine::schur_of_plethysm(const Partition& nu, const Partition& mu) {
  int degree = nu.size() * mu.size();
  if (degree > options_.max_degree)
    throw ResourceError("plethysm h_" + nu.to_string() + "[h_" + mu.to_string() + "] has degree " +
                        std::to_string(degree) + ", above the cap " + std::to_string(options_.max_degree));
  auto key = std::make_pair(nu, mu);
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  std::optional<SymExpr> value;
  if (store_ && store_->load) value = store_->load(nu, mu);
  if (!value) {
    if (strategy_ == SchurStrategy::Characters)
      value = schur_expand(plethysm_h(nu, mu), options_);
    else
      value = oracle_schur_expand(nu, mu);
    if (store_ && store_->save) store_->save(nu, mu, *value);
  }
  std::lock_guard lock(mutex_);
  return memo_.emplace(key, std::move(*value)).first->second;
}

}  // namespace plethysm
