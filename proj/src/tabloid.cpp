#include "plethysm/tabloid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "plethysm/errors.hpp"
#include "tabloid_detail.hpp"

namespace plethysm {

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

namespace {

void check_permutation(const Permutation& p) {
  std::vector<char> seen(p.size() + 1, 0);
  for (int x : p) {
    if (x < 1 || x > static_cast<int>(p.size()) || seen[x]) throw UsageError("not a permutation of 1..n");
    seen[x] = 1;
  }
}

}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw UsageError("permutations act on different sets");
  Permutation out(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i] - 1];
  return out;
}

Permutation inverse(const Permutation& p) {
  check_permutation(p);
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

Composition Tabloid::shape() const {
  Composition c;
  for (const auto& r : rows) c.push_back(static_cast<int>(r.size()));
  return c;
}

Tabloid make_tabloid(RawRows rows) {
  std::vector<int> all;
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    all.insert(all.end(), r.begin(), r.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw UsageError("tabloid repeats an entry");
  if (!all.empty() && all.front() < 1) throw UsageError("tabloid entries must be positive");
  return Tabloid{std::move(rows)};
}

std::string format(const Tabloid& t) {
  std::ostringstream os;
  os << '{';
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) os << " | ";
    for (std::size_t k = 0; k < t.rows[r].size(); ++k) os << (k ? " " : "") << t.rows[r][k];
  }
  os << '}';
  return os.str();
}

std::string PlethysticShape::to_string() const { return "(" + outer.to_string() + ")[(" + inner.to_string() + ")]"; }

std::size_t PlethysticTabloidHash::operator()(const PlethysticTabloid& t) const noexcept {
  return detail::hash_entries(t.entries);
}

namespace detail {

std::size_t hash_entries(const std::vector<Entry>& e) noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Entry x : e) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Layout::Layout(const Partition& outer, const Partition& inner) {
  m = inner.size();
  blocks = outer.size();
  for (int part : inner) inner_rows.push_back(part);
  int b = 0;
  for (int part : outer) {
    outer_rows.emplace_back(b, part);
    b += part;
  }
}

void sort_inner_rows(const Layout& L, Entry* block) {
  Entry* p = block;
  for (int len : L.inner_rows) {
    std::sort(p, p + len);
    p += len;
  }
}

Entry block_min(const Layout& L, const Entry* block) {
  Entry best = block[0];
  const Entry* p = block;
  for (int len : L.inner_rows) {
    best = std::min(best, *p);
    p += len;
  }
  return best;
}

void canonicalize_in_place(const Layout& L, std::vector<Entry>& e) {
  for (int b = 0; b < L.blocks; ++b) sort_inner_rows(L, e.data() + b * L.m);
  std::vector<Entry> scratch;
  for (auto [start, len] : L.outer_rows) {
    if (len < 2) continue;
    std::vector<std::pair<Entry, int>> order;
    for (int b = start; b < start + len; ++b) order.emplace_back(block_min(L, e.data() + b * L.m), b);
    if (std::is_sorted(order.begin(), order.end())) continue;
    std::sort(order.begin(), order.end());
    scratch.assign(e.begin() + start * L.m, e.begin() + (start + len) * L.m);
    for (int k = 0; k < len; ++k)
      std::copy_n(scratch.begin() + (order[k].second - start) * L.m, L.m, e.begin() + (start + k) * L.m);
  }
}

void sort_tensor_blocks(const Layout& L, std::vector<Entry>& e) {
  for (int b = 0; b < L.blocks; ++b) sort_inner_rows(L, e.data() + b * L.m);
}

void check_entries(std::vector<Entry> e, std::size_t expected, bool require_cover) {
  if (e.size() != expected) throw UsageError("wrong number of entries for the shape");
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw UsageError("an entry appears twice");
  if (!e.empty() && e.front() == 0) throw UsageError("entries must be positive");
  if (require_cover && !e.empty() && e.back() != e.size()) throw UsageError("entries must be exactly 1..N");
}

std::vector<Entry> to_entries(const std::vector<RawRows>& cells, const Partition& inner) {
  std::vector<Entry> flat;
  for (const RawRows& rows : cells) {
    if (rows.size() != inner.parts().size()) throw UsageError("inner tabloid has the wrong number of rows");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(rows[r].size()) != inner.parts()[r]) throw UsageError("inner row has the wrong length");
      for (int x : rows[r]) {
        if (x < 1 || x > 255) throw UsageError("entry out of range");
        flat.push_back(static_cast<Entry>(x));
      }
    }
  }
  return flat;
}

std::vector<RawRows> from_entries(const std::vector<Entry>& e, const Partition& inner, int blocks) {
  std::vector<RawRows> out(blocks);
  std::size_t k = 0;
  for (int b = 0; b < blocks; ++b)
    for (int len : inner) {
      std::vector<int> row;
      for (int j = 0; j < len; ++j) row.push_back(e[k++]);
      out[b].push_back(std::move(row));
    }
  return out;
}

std::vector<Entry> relabel(const Permutation& sigma, const std::vector<Entry>& e) {
  std::vector<Entry> out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > sigma.size()) throw UsageError("permutation does not cover the entries");
    out[i] = static_cast<Entry>(sigma[e[i] - 1]);
  }
  return out;
}

}  // namespace detail

PlethysticTabloid canonicalize(const PlethysticShape& shape, const std::vector<RawRows>& inner) {
  if (static_cast<int>(inner.size()) != shape.outer.size()) throw UsageError("wrong number of inner tabloids");
  return canonicalize_flat(shape, detail::to_entries(inner, shape.inner));
}

PlethysticTabloid canonicalize_flat(const PlethysticShape& shape, std::vector<Entry> entries) {
  detail::check_entries(entries, shape.size(), true);
  detail::canonicalize_in_place(detail::Layout(shape.outer, shape.inner), entries);
  return PlethysticTabloid{std::move(entries)};
}

std::vector<RawRows> inner_tabloids(const PlethysticShape& shape, const PlethysticTabloid& t) {
  return detail::from_entries(t.entries, shape.inner, shape.outer.size());
}

std::string format(const PlethysticShape& shape, const PlethysticTabloid& t) {
  auto cells = inner_tabloids(shape, t);
  std::ostringstream os;
  std::size_t b = 0;
  for (int r = 0; r < shape.outer.length(); ++r) {
    if (r) os << " / ";
    os << '[';
    for (int k = 0; k < shape.outer[r]; ++k, ++b) {
      if (k) os << ' ';
      os << format(Tabloid{cells[b]});
    }
    os << ']';
  }
  return os.str();
}

TensorTabloid make_tensor(const TensorShape& shape, const std::vector<RawRows>& factors) {
  if (static_cast<int>(factors.size()) != shape.factors) throw UsageError("wrong number of tensor factors");
  std::vector<Entry> e = detail::to_entries(factors, shape.inner);
  detail::check_entries(e, shape.size(), true);
  detail::sort_tensor_blocks(detail::tensor_layout(shape), e);
  return TensorTabloid{std::move(e)};
}

std::vector<RawRows> tensor_factors(const TensorShape& shape, const TensorTabloid& t) {
  return detail::from_entries(t.entries, shape.inner, shape.factors);
}

Integer basis_size_formula(const Partition& nu, const Partition& mu) {
  Integer den = 1;
  Integer inner = 1;
  for (int part : mu) inner *= factorial(part);
  for (int i = 0; i < nu.size(); ++i) den *= inner;
  for (int part : nu) den *= factorial(part);
  return factorial(nu.size() * mu.size()) / den;
}

namespace {

void check_caps(const PlethysticShape& shape, const TabloidCaps& caps) {
  if (shape.outer.empty() || shape.inner.empty()) throw UsageError("plethystic shapes need nonempty partitions");
  if (shape.size() > caps.max_degree)
    throw ResourceError("degree " + std::to_string(shape.size()) + " of " + shape.to_string() +
                        " exceeds the tabloid cap " + std::to_string(caps.max_degree));
  if (shape.size() > 64) throw ResourceError("tabloid degree above 64 is not supported");
}

// Fills the flat layout position by position with increasing values, so the
// visit order is lexicographic in the entry vector. A block that is not first
// in its outer row only uses values above the previous block's minimum.
class Enumerator {
 public:
  Enumerator(const PlethysticShape& shape, const std::function<void(const std::vector<Entry>&)>& visit)
      : layout_(shape.outer, shape.inner), n_(shape.size()), visit_(visit), buf_(n_) {
    for (auto [start, len] : layout_.outer_rows)
      for (int k = 0; k < len; ++k) row_start_.push_back(k == 0);
  }

  void run() { block(0, 0); }

 private:
  void block(int b, int floor) {
    if (b == layout_.blocks) {
      visit_(buf_);
      return;
    }
    int lower = row_start_[b] ? 0 : floor;
    if (n_ - lower - std::popcount(used_ >> lower) < layout_.m) return;
    fill(b, 0, 0, b * layout_.m, lower, lower, 255);
  }

  void fill(int b, int row, int col, int pos, int lower, int last, int min_seen) {
    int len = layout_.inner_rows[row];
    if (col == len) {
      if (row + 1 == static_cast<int>(layout_.inner_rows.size())) {
        block(b + 1, min_seen);
      } else {
        fill(b, row + 1, 0, pos, lower, lower, min_seen);
      }
      return;
    }
    for (int v = last + 1; v <= n_; ++v) {
      std::uint64_t bit = std::uint64_t{1} << (v - 1);
      if (used_ & bit) continue;
      used_ |= bit;
      buf_[pos] = static_cast<Entry>(v);
      fill(b, row, col + 1, pos + 1, lower, v, col == 0 ? std::min(min_seen, v) : min_seen);
      used_ &= ~bit;
    }
  }

  detail::Layout layout_;
  int n_;
  const std::function<void(const std::vector<Entry>&)>& visit_;
  std::vector<Entry> buf_;
  std::vector<bool> row_start_;
  std::uint64_t used_ = 0;
};

}  // namespace

void for_each_basis_element(const PlethysticShape& shape, const std::function<void(const std::vector<Entry>&)>& visit,
                            const TabloidCaps& caps) {
  check_caps(shape, caps);
  Enumerator(shape, visit).run();
}

PlethysticBasis::PlethysticBasis(PlethysticShape shape, std::vector<PlethysticTabloid> elements)
    : shape_(std::move(shape)), elements_(std::move(elements)) {
  if (!std::is_sorted(elements_.begin(), elements_.end())) std::sort(elements_.begin(), elements_.end());
}

std::size_t PlethysticBasis::index_of(const PlethysticTabloid& t) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), t);
  if (it == elements_.end() || *it != t) throw UsageError("tabloid is not a basis element of " + shape_.to_string());
  return static_cast<std::size_t>(it - elements_.begin());
}

PlethysticBasis enumerate_basis(const Partition& nu, const Partition& mu, const TabloidCaps& caps) {
  PlethysticShape shape{nu, mu};
  check_caps(shape, caps);
  Integer expected = basis_size_formula(nu, mu);
  if (expected > Integer(static_cast<unsigned long>(caps.max_basis)))
    throw ResourceError("basis of " + shape.to_string() + " has " + expected.get_str() + " elements, above the cap " +
                        std::to_string(caps.max_basis));
  std::vector<PlethysticTabloid> elements;
  elements.reserve(expected.get_ui());
  for_each_basis_element(shape, [&](const std::vector<Entry>& e) { elements.push_back(PlethysticTabloid{e}); }, caps);
  return PlethysticBasis(std::move(shape), std::move(elements));
}

PlethysticTabloid act(const Permutation& sigma, const PlethysticShape& shape, const PlethysticTabloid& t) {
  if (static_cast<int>(sigma.size()) != shape.size()) throw UsageError("permutation size does not match the module");
  std::vector<Entry> e = detail::relabel(sigma, t.entries);
  detail::canonicalize_in_place(detail::Layout(shape.outer, shape.inner), e);
  return PlethysticTabloid{std::move(e)};
}

PlethysticVector act(const Permutation& sigma, const PlethysticVector& v) {
  check_permutation(sigma);
  PlethysticVector out(v.space());
  for (const auto& [t, c] : v.terms()) out.add(act(sigma, v.space(), t), c);
  return out;
}

TensorVector act(const Permutation& sigma, const TensorVector& v) {
  check_permutation(sigma);
  if (static_cast<int>(sigma.size()) != v.space().size()) throw UsageError("permutation size does not match the module");
  detail::Layout layout = detail::tensor_layout(v.space());
  TensorVector out(v.space());
  for (const auto& [t, c] : v.terms()) {
    std::vector<Entry> e = detail::relabel(sigma, t.entries);
    detail::sort_tensor_blocks(layout, e);
    out.add(TensorTabloid{std::move(e)}, c);
  }
  return out;
}

TabloidVector act(const Permutation& sigma, const TabloidVector& v) {
  check_permutation(sigma);
  int n = std::accumulate(v.space().begin(), v.space().end(), 0);
  if (static_cast<int>(sigma.size()) != n) throw UsageError("permutation size does not match the module");
  TabloidVector out(v.space());
  for (const auto& [t, c] : v.terms()) {
    RawRows rows = t.rows;
    for (auto& r : rows)
      for (int& x : r) x = sigma[x - 1];
    out.add(make_tabloid(std::move(rows)), c);
  }
  return out;
}

namespace detail {

Layout tensor_layout(const TensorShape& shape) {
  return Layout(shape.factors > 0 ? Partition{shape.factors} : Partition(), shape.inner);
}

void for_each_outer_rearrangement(const Layout& L, const std::vector<Entry>& e,
                                  const std::function<void(const std::vector<Entry>&)>& f) {
  std::vector<int> order(L.blocks);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Entry> tuple(e.size());
  auto emit = [&] {
    for (int k = 0; k < L.blocks; ++k) std::copy_n(e.begin() + order[k] * L.m, L.m, tuple.begin() + k * L.m);
    f(tuple);
  };
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == L.outer_rows.size()) {
      emit();
      return;
    }
    auto [start, len] = L.outer_rows[r];
    do {
      rec(r + 1);
    } while (std::next_permutation(order.begin() + start, order.begin() + start + len));
  };
  rec(0);
}

void for_each_psi_term(const Layout& domain, const Partition& nu, const std::vector<Entry>& tuple,
                       const std::function<void(const std::vector<Entry>&)>& f) {
  // Domain: n blocks of shape mu. Output: m blocks of shape nu, block j holding
  // the j-th entries of the n inner tableaux in nu's reading order.
  int n = domain.blocks, m = domain.m;
  std::vector<std::pair<int, int>> segments;
  for (int b = 0; b < n; ++b) {
    int pos = b * m;
    for (int len : domain.inner_rows) {
      if (len > 1) segments.emplace_back(pos, len);
      pos += len;
    }
  }
  Layout out_layout(Partition{m}, nu);
  std::vector<Entry> work = tuple;
  std::vector<Entry> out(tuple.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == segments.size()) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) out[j * n + i] = work[i * m + j];
      sort_tensor_blocks(out_layout, out);
      f(out);
      return;
    }
    auto first = work.begin() + segments[k].first;
    auto last = first + segments[k].second;
    std::sort(first, last);
    do {
      rec(k + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
}

}  // namespace detail

PlethysticTabloid phi(const TensorShape& shape, const TensorTabloid& t, const Partition& outer) {
  if (outer.size() != shape.factors) throw UsageError("outer shape size must equal the number of tensor factors");
  return canonicalize_flat(PlethysticShape{outer, shape.inner}, t.entries);
}

PlethysticVector phi(const TensorVector& v, const Partition& outer) {
  PlethysticShape shape{outer, v.space().inner};
  if (outer.size() != v.space().factors) throw UsageError("outer shape size must equal the number of tensor factors");
  detail::Layout layout(outer, v.space().inner);
  PlethysticVector out(shape);
  for (const auto& [t, c] : v.terms()) {
    std::vector<Entry> e = t.entries;
    detail::canonicalize_in_place(layout, e);
    out.add(PlethysticTabloid{std::move(e)}, c);
  }
  return out;
}

TensorVector phi_tilde(const PlethysticVector& v) {
  const PlethysticShape& shape = v.space();
  TensorShape ts{shape.outer.size(), shape.inner};
  detail::Layout layout(shape.outer, shape.inner);
  Integer outer_order = 1;
  for (int part : shape.outer) outer_order *= factorial(part);
  TensorVector out(ts);
  for (const auto& [t, c] : v.terms()) {
    Rational share = c / Rational(outer_order);
    detail::for_each_outer_rearrangement(layout, t.entries,
                                         [&](const std::vector<Entry>& tuple) { out.add(TensorTabloid{tuple}, share); });
  }
  return out;
}

TensorVector psi(const TensorShape& shape, const TensorTabloid& t, const Partition& nu) {
  TensorVector v(shape);
  v.add(t, 1);
  return psi(v, nu);
}

TensorVector psi(const TensorVector& v, const Partition& nu) {
  const TensorShape& shape = v.space();
  if (nu.size() != shape.factors) throw UsageError("|nu| must equal the number of tensor factors");
  TensorShape out_shape{shape.inner.size(), nu};
  detail::Layout layout = detail::tensor_layout(shape);
  TensorVector out(out_shape);
  for (const auto& [t, c] : v.terms())
    detail::for_each_psi_term(layout, nu, t.entries,
                              [&](const std::vector<Entry>& e) { out.add(TensorTabloid{e}, c); });
  return out;
}

TensorVector psi_from_representative(const TensorShape& shape, const std::vector<RawRows>& factors,
                                     const Partition& nu) {
  if (nu.size() != shape.factors) throw UsageError("|nu| must equal the number of tensor factors");
  std::vector<Entry> rep = detail::to_entries(factors, shape.inner);
  detail::check_entries(rep, shape.size(), true);
  int n = shape.factors, m = shape.inner.size();
  // s_j built once from the representative, then moved by every element of
  // the row group acting on values.
  std::vector<Entry> s(rep.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) s[j * n + i] = rep[i * m + j];
  std::vector<std::vector<Entry>> rows;
  for (int i = 0; i < n; ++i) {
    int pos = i * m;
    for (int len : shape.inner) {
      std::vector<Entry> row(rep.begin() + pos, rep.begin() + pos + len);
      std::sort(row.begin(), row.end());
      if (len > 1) rows.push_back(std::move(row));
      pos += len;
    }
  }
  TensorShape out_shape{m, nu};
  detail::Layout out_layout(Partition{m}, nu);
  TensorVector out(out_shape);
  Permutation sigma = identity_permutation(shape.size());
  std::vector<std::vector<Entry>> images = rows;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == rows.size()) {
      std::vector<Entry> e = detail::relabel(sigma, s);
      detail::sort_tensor_blocks(out_layout, e);
      out.add(TensorTabloid{std::move(e)}, 1);
      return;
    }
    do {
      for (std::size_t a = 0; a < rows[k].size(); ++a) sigma[rows[k][a] - 1] = images[k][a];
      rec(k + 1);
    } while (std::next_permutation(images[k].begin(), images[k].end()));
  };
  rec(0);
  return out;
}

PlethysticVector fh_map_apply(const PlethysticVector& v) {
  const Partition& nu = v.space().outer;
  const Partition& mu = v.space().inner;
  return phi(psi(phi_tilde(v), nu), mu);
}

}  // namespace plethysm
