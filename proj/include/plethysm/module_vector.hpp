#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plethysm/errors.hpp"
#include "plethysm/numeric.hpp"
#include "plethysm/sparse_matrix.hpp"

namespace plethysm {

// Formal rational combination of basis elements of one module. The space tag
// identifies the module; combining vectors from different spaces is an error.
template <class Key, class Space>
class ModuleVector {
 public:
  using Terms = std::map<Key, Rational>;

  explicit ModuleVector(Space space) : space_(std::move(space)) {}

  const Space& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  ModuleVector& operator+=(const ModuleVector& other) {
    require_same_space(other);
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  ModuleVector& operator-=(const ModuleVector& other) {
    require_same_space(other);
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  ModuleVector& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  void require_same_space(const ModuleVector& other) const {
    if (!(space_ == other.space_)) throw UsageError("module vectors belong to different spaces");
  }

 private:
  Space space_;
  Terms terms_;
};

// Rank of the matrix whose columns are the given vectors.
template <class Key, class Space>
std::size_t span_rank(const std::vector<ModuleVector<Key, Space>>& vs) {
  if (vs.empty()) return 0;
  std::map<Key, int> rows;
  for (const auto& v : vs) {
    vs.front().require_same_space(v);
    for (const auto& [k, c] : v.terms()) rows.emplace(k, 0);
  }
  int next = 0;
  for (auto& [k, index] : rows) index = next++;
  SparseRationalMatrix m(next, static_cast<int>(vs.size()));
  for (std::size_t c = 0; c < vs.size(); ++c) {
    SparseRationalMatrix::Column col;
    for (const auto& [k, q] : vs[c].terms()) col.emplace_back(rows.at(k), q);
    m.set_column(static_cast<int>(c), std::move(col));
  }
  return rank(m);
}

}  // namespace plethysm
