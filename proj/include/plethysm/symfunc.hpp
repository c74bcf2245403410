#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "plethysm/numeric.hpp"
#include "plethysm/partition.hpp"

namespace plethysm {

enum class Basis { P, H, M, S };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

// Homogeneous symmetric function as an exact table from index partitions to
// nonzero rational coefficients in one basis.
class SymExpr {
 public:
  using Terms = std::map<Partition, Rational, RevLex>;

  SymExpr(Basis basis, int degree) : basis_(basis), degree_(degree) {}

  static SymExpr monomial(Basis basis, const Partition& lambda, const Rational& coeff = 1);

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rational& coeff);

  SymExpr& operator+=(const SymExpr& other);
  SymExpr& operator-=(const SymExpr& other);
  SymExpr& operator*=(const Rational& scalar);

  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend SymExpr operator*(SymExpr a, const Rational& s) { return a *= s; }
  friend bool operator==(const SymExpr& a, const SymExpr& b) {
    return a.basis_ == b.basis_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const SymExpr& other) const;

  Basis basis_;
  int degree_;
  Terms terms_;
};

// Power-sum algebra.
SymExpr h_to_p(const Partition& lambda);
SymExpr multiply_p(const SymExpr& f, const SymExpr& g);
// p_k[g]: every p_j in g becomes p_{jk}.
SymExpr adams(const SymExpr& g, int k);
// f[g] with both arguments in the power-sum basis.
SymExpr plethysm(const SymExpr& f, const SymExpr& g);
// h_nu[h_mu] in the power-sum basis.
SymExpr plethysm_h(const Partition& nu, const Partition& mu);

// Irreducible characters of symmetric groups, memoized per degree. Entries
// are filled lazily by the Murnaghan-Nakayama recursion; concurrent callers
// may race to fill the same entry but always store the same value.
class CharacterTable {
 public:
  static CharacterTable& shared();

  std::int64_t value(const Partition& lambda, const Partition& mu);
  // Index of a partition within enumerate_partitions(n).
  int index_of(const Partition& p);
  const std::vector<Partition>& partitions(int n);

 private:
  struct Degree {
    std::vector<Partition> partitions;
    std::unordered_map<Partition, int, PartitionHash> index;
    std::unique_ptr<std::atomic<std::int64_t>[]> values;
  };
  Degree& degree(int n);
  std::int64_t compute(Degree& table, int li, int mi);

  std::mutex mutex_;
  std::map<int, std::unique_ptr<Degree>> degrees_;
};

std::int64_t character_value(const Partition& lambda, const Partition& mu);

// <f, s_lambda> for f in the power-sum basis.
Rational schur_coefficient(const SymExpr& f, const Partition& lambda);

enum class SchurStrategy { Characters, MonomialOracle };

struct ExpandOptions {
  unsigned threads = 1;
  int max_degree = 24;
};

// Full Schur expansion of f (basis P) by character extraction.
SymExpr schur_expand(const SymExpr& f, const ExpandOptions& options = {});

// a_{nu[mu]}^lambda.
Integer plethysm_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda);

// Number of semistandard tableaux of shape lambda and content alpha (any
// composition), by stripping horizontal strips of the largest letter.
Integer kostka(const Partition& lambda, const std::vector<int>& content);
Integer kostka(const Partition& lambda, const Partition& content);

// Monomial coefficients of h_nu[h_mu] in k variables, restricted to weights
// that are partitions (the rest follow by symmetry). Coefficients count
// multisets of monomials of h_mu, so no power sums or characters are used.
std::map<Partition, Integer, RevLex> monomial_oracle_expand(const Partition& nu, const Partition& mu, int k);

// Schur expansion of h_nu[h_mu] from the monomial table by a unitriangular
// Kostka solve. Exact for every lambda with at most k parts; with the default
// k = |nu||mu| it is exact for all lambda.
SymExpr oracle_schur_expand(const Partition& nu, const Partition& mu, int k = 0);

// Caches Schur expansions of h_nu[h_mu] and applies the degree cap. An optional
// external store (the CLI's disk cache) is consulted before computing.
class PlethysmEngine {
 public:
  struct Store {
    std::function<std::optional<SymExpr>(const Partition&, const Partition&)> load;
    std::function<void(const Partition&, const Partition&, const SymExpr&)> save;
  };

  explicit PlethysmEngine(ExpandOptions options = {}, SchurStrategy strategy = SchurStrategy::Characters)
      : options_(options), strategy_(strategy) {}

  void set_store(Store store) { store_ = std::move(store); }
  const ExpandOptions& options() const { return options_; }

  // Throws ResourceError when |nu||mu| exceeds the degree cap.
  SymExpr schur_of_plethysm(const Partition& nu, const Partition& mu);

 private:
  ExpandOptions options_;
  SchurStrategy strategy_;
  std::optional<Store> store_;
  std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, SymExpr> memo_;
};

}  // namespace plethysm
