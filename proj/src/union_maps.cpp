#include <algorithm>
#include <numeric>

#include "plethysm/errors.hpp"
#include "plethysm/parallel.hpp"
#include "plethysm/tabloid.hpp"
#include "tabloid_detail.hpp"

namespace plethysm {

namespace {

struct RowRef {
  int length;
  int source;  // 0 or 1
  int index;   // row index within its source
};

// Row order of a ⊔ b: stable by decreasing length, rows of a first on ties.
std::vector<RowRef> merged_rows(const Partition& a, const Partition& b) {
  std::vector<RowRef> rows;
  for (int i = 0; i < a.length(); ++i) rows.push_back({a[i], 0, i});
  for (int i = 0; i < b.length(); ++i) rows.push_back({b[i], 1, i});
  std::stable_sort(rows.begin(), rows.end(), [](const RowRef& x, const RowRef& y) { return x.length > y.length; });
  return rows;
}

std::vector<int> row_offsets(const Partition& p) {
  std::vector<int> out{0};
  for (int part : p) out.push_back(out.back() + part);
  return out;
}

void check_cover(const std::vector<Entry>& a, const std::vector<Entry>& b, std::size_t total) {
  std::vector<Entry> all(a);
  all.insert(all.end(), b.begin(), b.end());
  detail::check_entries(std::move(all), total, true);
}

}  // namespace

PlethysticTabloid union_outer_iso(const PlethysticShape& s1, const PlethysticTabloid& t1, const PlethysticShape& s2,
                                  const PlethysticTabloid& t2) {
  if (s1.inner != s2.inner) throw UsageError("outer union needs equal inner shapes");
  if (t1.entries.size() != static_cast<std::size_t>(s1.size()) ||
      t2.entries.size() != static_cast<std::size_t>(s2.size()))
    throw UsageError("tabloid does not match its shape");
  check_cover(t1.entries, t2.entries, s1.size() + s2.size());
  const int m = s1.inner.size();
  std::vector<int> off1 = row_offsets(s1.outer), off2 = row_offsets(s2.outer);
  std::vector<Entry> out;
  out.reserve(t1.entries.size() + t2.entries.size());
  for (const RowRef& r : merged_rows(s1.outer, s2.outer)) {
    const auto& src = r.source == 0 ? t1.entries : t2.entries;
    int first = (r.source == 0 ? off1 : off2)[r.index];
    out.insert(out.end(), src.begin() + first * m, src.begin() + (first + r.length) * m);
  }
  Partition outer = union_parts(s1.outer, s2.outer);
  detail::canonicalize_in_place(detail::Layout(outer, s1.inner), out);
  return PlethysticTabloid{std::move(out)};
}

std::pair<PlethysticTabloid, PlethysticTabloid> split_outer(const Partition& nu1, const Partition& nu2,
                                                            const Partition& mu, const PlethysticTabloid& t) {
  Partition outer = union_parts(nu1, nu2);
  if (t.entries.size() != static_cast<std::size_t>(outer.size() * mu.size()))
    throw UsageError("tabloid does not match its shape");
  const int m = mu.size();
  std::vector<Entry> a(nu1.size() * m), b(nu2.size() * m);
  std::vector<int> off1 = row_offsets(nu1), off2 = row_offsets(nu2);
  int block = 0;
  for (const RowRef& r : merged_rows(nu1, nu2)) {
    auto& dst = r.source == 0 ? a : b;
    int first = (r.source == 0 ? off1 : off2)[r.index];
    std::copy_n(t.entries.begin() + block * m, r.length * m, dst.begin() + first * m);
    block += r.length;
  }
  return {PlethysticTabloid{std::move(a)}, PlethysticTabloid{std::move(b)}};
}

PlethysticVector union_inner_inject(const PlethysticShape& s1, const PlethysticTabloid& t1,
                                    const PlethysticShape& s2, const PlethysticTabloid& t2) {
  if (s1.outer != s2.outer) throw UsageError("inner union needs equal outer shapes");
  if (t1.entries.size() != static_cast<std::size_t>(s1.size()) ||
      t2.entries.size() != static_cast<std::size_t>(s2.size()))
    throw UsageError("tabloid does not match its shape");
  check_cover(t1.entries, t2.entries, s1.size() + s2.size());
  const Partition& nu = s1.outer;
  Partition inner = union_parts(s1.inner, s2.inner);
  PlethysticShape shape{nu, inner};
  detail::Layout l1(nu, s1.inner), l2(nu, s2.inner), out_layout(nu, inner);
  const int m1 = s1.inner.size(), m2 = s2.inner.size();
  std::vector<int> off1 = row_offsets(s1.inner), off2 = row_offsets(s2.inner);
  std::vector<RowRef> rows = merged_rows(s1.inner, s2.inner);

  PlethysticVector out(shape);
  std::vector<Entry> e(shape.size());
  detail::for_each_outer_rearrangement(l1, t1.entries, [&](const std::vector<Entry>& a) {
    detail::for_each_outer_rearrangement(l2, t2.entries, [&](const std::vector<Entry>& b) {
      auto it = e.begin();
      for (int cell = 0; cell < l1.blocks; ++cell)
        for (const RowRef& r : rows) {
          const Entry* src = r.source == 0 ? a.data() + cell * m1 + off1[r.index] : b.data() + cell * m2 + off2[r.index];
          it = std::copy_n(src, r.length, it);
        }
      std::vector<Entry> key = e;
      detail::canonicalize_in_place(out_layout, key);
      out.add(PlethysticTabloid{std::move(key)}, 1);
    });
  });
  return out;
}

namespace {

// Column j of f as vectors over `codomain`, relabelled through `values`
// (values[k - 1] is the image of k).
std::vector<std::pair<PlethysticTabloid, Rational>> relabelled_column(const SparseRationalMatrix& f,
                                                                      const PlethysticBasis& codomain, int j,
                                                                      const std::vector<Entry>& values) {
  std::vector<std::pair<PlethysticTabloid, Rational>> out;
  for (const auto& [r, q] : f.column(j)) {
    std::vector<Entry> e = codomain[r].entries;
    for (Entry& x : e) x = values[x - 1];
    out.emplace_back(PlethysticTabloid{std::move(e)}, q);
  }
  return out;
}

int local_index(const PlethysticBasis& basis, const PlethysticTabloid& t, std::vector<Entry>& values) {
  values = t.entries;
  std::sort(values.begin(), values.end());
  std::vector<Entry> e = t.entries;
  for (Entry& x : e) x = static_cast<Entry>(std::lower_bound(values.begin(), values.end(), x) - values.begin() + 1);
  return static_cast<int>(basis.index_of(PlethysticTabloid{std::move(e)}));
}

}  // namespace

UnionComposite union_compose_injection(const Partition& nu1, const Partition& nu2, const Partition& mu,
                                       const SparseRationalMatrix& f1, const SparseRationalMatrix& f2,
                                       const TabloidCaps& caps) {
  if (nu1.empty() || nu2.empty() || mu.empty()) throw UsageError("union composite needs nonempty partitions");
  PlethysticBasis d1 = enumerate_basis(nu1, mu, caps), c1 = enumerate_basis(mu, nu1, caps);
  PlethysticBasis d2 = enumerate_basis(nu2, mu, caps), c2 = enumerate_basis(mu, nu2, caps);
  if (f1.cols() != static_cast<int>(d1.size()) || f1.rows() != static_cast<int>(c1.size()))
    throw UsageError("first factor has the wrong dimensions");
  if (f2.cols() != static_cast<int>(d2.size()) || f2.rows() != static_cast<int>(c2.size()))
    throw UsageError("second factor has the wrong dimensions");
  if (!is_injective(f1)) throw UsageError("first factor F1 is not injective");
  if (!is_injective(f2)) throw UsageError("second factor F2 is not injective");

  Partition nu = union_parts(nu1, nu2);
  PlethysticBasis domain = enumerate_basis(nu, mu, caps);
  PlethysticBasis codomain = enumerate_basis(mu, nu, caps);
  PlethysticShape s1{mu, nu1}, s2{mu, nu2};

  std::vector<SparseRationalMatrix::Column> columns(domain.size());
  parallel_for(domain.size(), caps.threads, [&](std::size_t c) {
    auto [t1, t2] = split_outer(nu1, nu2, mu, domain[c]);
    std::vector<Entry> values1, values2;
    int j1 = local_index(d1, t1, values1);
    int j2 = local_index(d2, t2, values2);
    PlethysticVector image(PlethysticShape{mu, nu});
    for (const auto& [u1, q1] : relabelled_column(f1, c1, j1, values1))
      for (const auto& [u2, q2] : relabelled_column(f2, c2, j2, values2)) {
        PlethysticVector part = union_inner_inject(s1, u1, s2, u2);
        part *= q1 * q2;
        image += part;
      }
    SparseRationalMatrix::Column col;
    for (const auto& [t, q] : image.terms()) col.emplace_back(static_cast<int>(codomain.index_of(t)), q);
    columns[c] = std::move(col);
  });

  SparseRationalMatrix m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(static_cast<int>(c), std::move(columns[c]));
  return UnionComposite{std::move(domain), std::move(codomain), std::move(m)};
}

}  // namespace plethysm
