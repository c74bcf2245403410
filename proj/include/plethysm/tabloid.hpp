#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plethysm/module_vector.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/sparse_matrix.hpp"

namespace plethysm {

using Entry = std::uint8_t;
// sigma[x - 1] is the image of x; values are 1-based.
using Permutation = std::vector<int>;
using Composition = std::vector<int>;
// Rows of one inner tableau, top-level index = row.
using RawRows = std::vector<std::vector<int>>;

Permutation identity_permutation(int n);
// (a * b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

// Row-equivalence class of a tableau whose row lengths form a composition.
struct Tabloid {
  std::vector<std::vector<int>> rows;  // each row sorted ascending

  Composition shape() const;
  friend auto operator<=>(const Tabloid&, const Tabloid&) = default;
};

Tabloid make_tabloid(RawRows rows);
std::string format(const Tabloid& t);

using TabloidVector = ModuleVector<Tabloid, Composition>;

// nu[mu]: outer shape nu filled with inner tabloids of shape mu.
struct PlethysticShape {
  Partition outer;
  Partition inner;

  int size() const { return outer.size() * inner.size(); }
  std::string to_string() const;
  friend bool operator==(const PlethysticShape&, const PlethysticShape&) = default;
};

// Canonical plethystic tabloid stored as its entries in reading order: outer
// cells in row order, inside each cell the inner rows in order. Inner rows are
// sorted ascending and the inner tabloids of one outer row are sorted by their
// minimum entry, which picks one representative per orbit of R_T.
struct PlethysticTabloid {
  std::vector<Entry> entries;
  friend auto operator<=>(const PlethysticTabloid&, const PlethysticTabloid&) = default;
};

struct PlethysticTabloidHash {
  std::size_t operator()(const PlethysticTabloid& t) const noexcept;
};

using PlethysticVector = ModuleVector<PlethysticTabloid, PlethysticShape>;

// Ordered n-tuple of mu-tabloids: the tensor basis of M^{mu^n}. Same flat
// layout as PlethysticTabloid, but the tuple order is significant.
struct TensorShape {
  int factors = 0;
  Partition inner;

  int size() const { return factors * inner.size(); }
  friend bool operator==(const TensorShape&, const TensorShape&) = default;
};

struct TensorTabloid {
  std::vector<Entry> entries;
  friend auto operator<=>(const TensorTabloid&, const TensorTabloid&) = default;
};

using TensorVector = ModuleVector<TensorTabloid, TensorShape>;

// Raw plethystic tableau: one RawRows per outer cell, outer cells in row order.
PlethysticTabloid canonicalize(const PlethysticShape& shape, const std::vector<RawRows>& inner);
// Canonical form of a flat layout whose rows and blocks may be unsorted.
PlethysticTabloid canonicalize_flat(const PlethysticShape& shape, std::vector<Entry> entries);
std::vector<RawRows> inner_tabloids(const PlethysticShape& shape, const PlethysticTabloid& t);
std::string format(const PlethysticShape& shape, const PlethysticTabloid& t);

TensorTabloid make_tensor(const TensorShape& shape, const std::vector<RawRows>& factors);
std::vector<RawRows> tensor_factors(const TensorShape& shape, const TensorTabloid& t);

struct TabloidCaps {
  int max_degree = 12;
  std::size_t max_basis = 4'000'000;
  unsigned threads = 1;
};

// (nm)! / ((prod mu_i!)^n prod nu_j!).
Integer basis_size_formula(const Partition& nu, const Partition& mu);

// Visits every canonical plethystic tabloid once (in no particular order).
void for_each_basis_element(const PlethysticShape& shape, const std::function<void(const std::vector<Entry>&)>& visit,
                            const TabloidCaps& caps = {});

// Canonical basis of M^{nu[mu]}, sorted; dense indices follow this order.
class PlethysticBasis {
 public:
  PlethysticBasis(PlethysticShape shape, std::vector<PlethysticTabloid> elements);

  const PlethysticShape& shape() const { return shape_; }
  const std::vector<PlethysticTabloid>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const PlethysticTabloid& operator[](std::size_t i) const { return elements_[i]; }
  // Throws UsageError when t is not a basis element.
  std::size_t index_of(const PlethysticTabloid& t) const;

 private:
  PlethysticShape shape_;
  std::vector<PlethysticTabloid> elements_;
};

PlethysticBasis enumerate_basis(const Partition& nu, const Partition& mu, const TabloidCaps& caps = {});

PlethysticTabloid act(const Permutation& sigma, const PlethysticShape& shape, const PlethysticTabloid& t);
PlethysticVector act(const Permutation& sigma, const PlethysticVector& v);
TensorVector act(const Permutation& sigma, const TensorVector& v);
TabloidVector act(const Permutation& sigma, const TabloidVector& v);

// Projection M^{mu^n} -> M^{nu[mu]}: place the tuple in the outer cells of nu.
PlethysticVector phi(const TensorVector& v, const Partition& outer);
PlethysticTabloid phi(const TensorShape& shape, const TensorTabloid& t, const Partition& outer);
// Section M^{nu[mu]} -> M^{mu^n}: average over rearrangements inside outer rows.
TensorVector phi_tilde(const PlethysticVector& v);
// M^{mu^n} -> M^{nu^m}: transpose the entries x_{i,j} into nu-tableaux s_j,
// summed over the row groups of the mu-tabloids.
TensorVector psi(const TensorVector& v, const Partition& nu);
TensorVector psi(const TensorShape& shape, const TensorTabloid& t, const Partition& nu);
// Psi evaluated from an explicit (possibly unsorted) representative of each
// inner row; used to test independence of the representative.
TensorVector psi_from_representative(const TensorShape& shape, const std::vector<RawRows>& factors,
                                     const Partition& nu);

// Generalized Foulkes-Howe map F_{nu,mu} = phi o Psi o phi_tilde applied to a vector.
PlethysticVector fh_map_apply(const PlethysticVector& v);

struct FhMap {
  PlethysticBasis domain;    // basis of M^{nu[mu]}
  PlethysticBasis codomain;  // basis of M^{mu[nu]}
  SparseRationalMatrix matrix;
};

FhMap fh_map(const Partition& nu, const Partition& mu, const TabloidCaps& caps = {});
SparseRationalMatrix fh_map_matrix(const Partition& nu, const Partition& mu, const TabloidCaps& caps = {});

// Stacks the outer rows of T1 (shape nu1[mu]) and T2 (shape nu2[mu]) into
// shape (nu1 ⊔ nu2)[mu]; rows of equal length keep T1's rows first.
PlethysticTabloid union_outer_iso(const PlethysticShape& s1, const PlethysticTabloid& t1, const PlethysticShape& s2,
                                  const PlethysticTabloid& t2);
// Inverse of union_outer_iso for fixed nu1, nu2.
std::pair<PlethysticTabloid, PlethysticTabloid> split_outer(const Partition& nu1, const Partition& nu2,
                                                            const Partition& mu, const PlethysticTabloid& t);

// Sum over outer-row rearrangements of T1 (shape nu[mu1]) and T2 (shape
// nu[mu2]) of the cellwise union of inner tabloids, in M^{nu[mu1 ⊔ mu2]}.
PlethysticVector union_inner_inject(const PlethysticShape& s1, const PlethysticTabloid& t1,
                                    const PlethysticShape& s2, const PlethysticTabloid& t2);

// Given injective F1: M^{nu1[mu]} -> M^{mu[nu1]} and F2: M^{nu2[mu]} ->
// M^{mu[nu2]} in canonical bases, the composite M^{(nu1⊔nu2)[mu]} ->
// M^{mu[nu1⊔nu2]} through the outer union isomorphism, F1 ⊗ F2 on the induced
// module, and the inner union injection.
struct UnionComposite {
  PlethysticBasis domain;
  PlethysticBasis codomain;
  SparseRationalMatrix matrix;
};

UnionComposite union_compose_injection(const Partition& nu1, const Partition& nu2, const Partition& mu,
                                       const SparseRationalMatrix& f1, const SparseRationalMatrix& f2,
                                       const TabloidCaps& caps = {});

}  // namespace plethysm
