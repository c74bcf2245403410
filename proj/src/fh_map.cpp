#include <unordered_map>

#include "plethysm/errors.hpp"
#include "plethysm/parallel.hpp"
#include "plethysm/tabloid.hpp"
#include "tabloid_detail.hpp"

namespace plethysm {

FhMap fh_map(const Partition& nu, const Partition& mu, const TabloidCaps& caps) {
  PlethysticBasis domain = enumerate_basis(nu, mu, caps);
  PlethysticBasis codomain = enumerate_basis(mu, nu, caps);
  if (domain.size() > static_cast<std::size_t>(INT32_MAX) || codomain.size() > static_cast<std::size_t>(INT32_MAX))
    throw ResourceError("matrix dimensions exceed the index range");

  detail::Layout domain_layout(nu, mu);
  detail::Layout tensor_layout = detail::tensor_layout(TensorShape{nu.size(), mu});
  detail::Layout codomain_layout(mu, nu);
  Integer outer_order = 1;
  for (int part : nu) outer_order *= factorial(part);
  const Rational scale = Rational(1) / Rational(outer_order);

  std::vector<SparseRationalMatrix::Column> columns(domain.size());
  parallel_for(domain.size(), caps.threads, [&](std::size_t c) {
    std::unordered_map<PlethysticTabloid, long, PlethysticTabloidHash> counts;
    PlethysticTabloid key;
    detail::for_each_outer_rearrangement(domain_layout, domain[c].entries, [&](const std::vector<Entry>& tuple) {
      detail::for_each_psi_term(tensor_layout, nu, tuple, [&](const std::vector<Entry>& e) {
        key.entries = e;
        detail::canonicalize_in_place(codomain_layout, key.entries);
        ++counts[key];
      });
    });
    SparseRationalMatrix::Column col;
    col.reserve(counts.size());
    for (const auto& [t, k] : counts) col.emplace_back(static_cast<int>(codomain.index_of(t)), Rational(k) * scale);
    columns[c] = std::move(col);
  });

  SparseRationalMatrix m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(static_cast<int>(c), std::move(columns[c]));
  return FhMap{std::move(domain), std::move(codomain), std::move(m)};
}

SparseRationalMatrix fh_map_matrix(const Partition& nu, const Partition& mu, const TabloidCaps& caps) {
  return fh_map(nu, mu, caps).matrix;
}

}  // namespace plethysm
