#include "plethysm/specht.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "plethysm/errors.hpp"
#include "plethysm/parallel.hpp"
#include "tabloid_detail.hpp"

namespace plethysm {

namespace {

std::vector<int> row_starts(const Partition& shape) {
  std::vector<int> out{0};
  for (int part : shape) out.push_back(out.back() + part);
  return out;
}

void require_same_shape(const Partition& a, const Partition& b) {
  if (a != b) throw UsageError("tableaux have different shapes");
}

}  // namespace

BijectiveTableau make_bijective(const Partition& shape, std::vector<int> entries) {
  if (static_cast<int>(entries.size()) != shape.size()) throw UsageError("entry count does not match the shape");
  std::vector<int> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) throw UsageError("bijective tableau must use 1..n once each");
  return BijectiveTableau{shape, std::move(entries)};
}

BijectiveTableau row_reading_tableau(const Partition& shape) {
  std::vector<int> e(shape.size());
  std::iota(e.begin(), e.end(), 1);
  return BijectiveTableau{shape, std::move(e)};
}

BijectiveTableau act(const Permutation& sigma, const BijectiveTableau& t) {
  if (sigma.size() != t.entries.size()) throw UsageError("permutation size does not match the tableau");
  std::vector<int> e(t.entries.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = sigma[t.entries[i] - 1];
  return make_bijective(t.shape, std::move(e));
}

std::vector<std::vector<int>> FilledTableau::rows() const {
  std::vector<std::vector<int>> out;
  auto start = row_starts(shape);
  for (int r = 0; r < shape.length(); ++r) out.emplace_back(entries.begin() + start[r], entries.begin() + start[r + 1]);
  return out;
}

bool FilledTableau::is_semistandard() const {
  auto start = row_starts(shape);
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape[r]; ++c) {
      int v = entries[start[r] + c];
      if (c > 0 && entries[start[r] + c - 1] > v) return false;
      if (r > 0 && entries[start[r - 1] + c] >= v) return false;
    }
  return true;
}

FilledTableau make_filled(const Partition& shape, std::vector<int> entries, int values) {
  if (static_cast<int>(entries.size()) != shape.size()) throw UsageError("entry count does not match the shape");
  int top = values;
  for (int v : entries) {
    if (v < 1) throw UsageError("tableau values must be positive");
    top = std::max(top, v);
  }
  if (values > 0 && top > values) throw UsageError("tableau value exceeds the content length");
  Composition content(top, 0);
  for (int v : entries) ++content[v - 1];
  return FilledTableau{shape, std::move(entries), std::move(content)};
}

FilledTableau filled_from_rows(const std::vector<std::vector<int>>& rows, int values) {
  std::vector<int> parts, entries;
  for (const auto& r : rows) {
    parts.push_back(static_cast<int>(r.size()));
    entries.insert(entries.end(), r.begin(), r.end());
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1] || parts[i] == 0) throw UsageError("row lengths must form a partition");
  return make_filled(Partition(parts), std::move(entries), values);
}

Composition repeated_content(const Partition& mu, int n) {
  Composition c;
  for (int i = 0; i < n; ++i) c.insert(c.end(), mu.begin(), mu.end());
  return c;
}

std::vector<FilledTableau> enumerate_ssyt(const Partition& lambda, const Composition& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw UsageError("content entries must be nonnegative");
    total += c;
  }
  if (total != lambda.size()) throw UsageError("content size differs from the shape size");
  std::vector<FilledTableau> out;
  auto start = row_starts(lambda);
  std::vector<int> cell_row, cell_col;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      cell_row.push_back(r);
      cell_col.push_back(c);
    }
  std::vector<int> e(total), left = content;
  const int k = static_cast<int>(content.size());
  std::function<void(int)> rec = [&](int pos) {
    if (pos == total) {
      out.push_back(FilledTableau{lambda, e, content});
      return;
    }
    int r = cell_row[pos], c = cell_col[pos];
    int lo = 1;
    if (c > 0) lo = std::max(lo, e[pos - 1]);
    if (r > 0) lo = std::max(lo, e[start[r - 1] + c] + 1);
    for (int v = lo; v <= k; ++v) {
      if (left[v - 1] == 0) continue;
      --left[v - 1];
      e[pos] = v;
      rec(pos + 1);
      ++left[v - 1];
    }
  };
  rec(0);
  return out;
}

std::vector<FilledTableau> enumerate_ssyt(const Partition& lambda, const Partition& content) {
  return enumerate_ssyt(lambda, Composition(content.begin(), content.end()));
}

namespace {

// Calls f(filling, sign) for every pair (tau' ~_R tau, pi in C_t) whose
// filling pi·tau' has distinct entries in each column; the remaining pairs
// cancel in signed pairs.
void for_each_theta_term(const FilledTableau& tau, const std::function<void(const std::vector<int>&, int)>& f) {
  const Partition& shape = tau.shape;
  auto start = row_starts(shape);
  std::vector<int> work = tau.entries;
  for (int r = 0; r < shape.length(); ++r) std::sort(work.begin() + start[r], work.begin() + start[r + 1]);
  std::vector<std::vector<int>> columns;  // cell positions of each column
  for (int c = 0; c < shape[0]; ++c) {
    std::vector<int> cells;
    for (int r = 0; r < shape.length() && shape[r] > c; ++r) cells.push_back(start[r] + c);
    columns.push_back(std::move(cells));
  }
  std::vector<int> filling(work.size());

  auto column_free = [&] {
    for (const auto& cells : columns)
      for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = a + 1; b < cells.size(); ++b)
          if (work[cells[a]] == work[cells[b]]) return false;
    return true;
  };

  std::function<void(std::size_t, int)> permute_columns = [&](std::size_t c, int sign) {
    if (c == columns.size()) {
      f(filling, sign);
      return;
    }
    const auto& cells = columns[c];
    std::vector<int> order(cells.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      int inversions = 0;
      for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
          if (order[a] > order[b]) ++inversions;
      for (std::size_t a = 0; a < cells.size(); ++a) filling[cells[a]] = work[cells[order[a]]];
      permute_columns(c + 1, inversions % 2 ? -sign : sign);
    } while (std::next_permutation(order.begin(), order.end()));
  };

  std::function<void(int)> rearrange_rows = [&](int r) {
    if (r == shape.length()) {
      if (column_free()) permute_columns(0, 1);
      return;
    }
    do {
      rearrange_rows(r + 1);
    } while (std::next_permutation(work.begin() + start[r], work.begin() + start[r + 1]));
  };
  rearrange_rows(0);
}

// Distinct row rearrangements tau' of tau.
void for_each_row_rearrangement(const FilledTableau& tau, const std::function<void(const std::vector<int>&)>& f) {
  auto start = row_starts(tau.shape);
  std::vector<int> work = tau.entries;
  for (int r = 0; r < tau.shape.length(); ++r) std::sort(work.begin() + start[r], work.begin() + start[r + 1]);
  std::function<void(int)> rec = [&](int r) {
    if (r == tau.shape.length()) {
      f(work);
      return;
    }
    do {
      rec(r + 1);
    } while (std::next_permutation(work.begin() + start[r], work.begin() + start[r + 1]));
  };
  rec(0);
}

// Flat f_t(filling): the rows of the content composition concatenated, each
// row listing the t-entries of the cells holding that value.
void fill_flat(const std::vector<int>& filling, const BijectiveTableau& t, const std::vector<int>& offsets,
               std::vector<int>& cursor, std::vector<Entry>& out) {
  std::copy(offsets.begin(), offsets.end() - 1, cursor.begin());
  for (std::size_t i = 0; i < filling.size(); ++i) out[cursor[filling[i] - 1]++] = static_cast<Entry>(t.entries[i]);
}

std::vector<int> content_offsets(const Composition& content) {
  std::vector<int> off{0};
  for (int c : content) off.push_back(off.back() + c);
  return off;
}

Tabloid flat_to_tabloid(const std::vector<Entry>& flat, const Composition& content) {
  RawRows rows;
  std::size_t k = 0;
  for (int c : content) {
    std::vector<int> row;
    for (int j = 0; j < c; ++j) row.push_back(flat[k++]);
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return Tabloid{std::move(rows)};
}

// mu with content(tau) = mu^n.
Partition block_shape(const Composition& content, int n) {
  if (n < 1 || content.size() % n != 0) throw UsageError("content is not of the form mu^n");
  std::size_t len = content.size() / n;
  std::vector<int> parts(content.begin(), content.begin() + len);
  for (std::size_t i = len; i < content.size(); ++i)
    if (content[i] != parts[i % len]) throw UsageError("content is not of the form mu^n");
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1])) throw UsageError("content is not of the form mu^n");
  return Partition(parts);
}

using TabloidCounts = std::unordered_map<PlethysticTabloid, long, PlethysticTabloidHash>;

TabloidCounts theta_bar_counts(const FilledTableau& tau, const BijectiveTableau& t, const Partition& nu,
                               const Partition& mu) {
  detail::Layout layout(nu, mu);
  std::vector<int> offsets = content_offsets(tau.content), cursor(tau.content.size());
  std::vector<Entry> flat(tau.entries.size());
  TabloidCounts counts;
  PlethysticTabloid key;
  for_each_theta_term(tau, [&](const std::vector<int>& filling, int sign) {
    fill_flat(filling, t, offsets, cursor, flat);
    key.entries = flat;
    detail::canonicalize_in_place(layout, key.entries);
    counts[key] += sign;
  });
  return counts;
}

}  // namespace

TabloidVector polytabloid(const BijectiveTableau& t) {
  std::vector<int> row_of;
  for (int r = 0; r < t.shape.length(); ++r)
    for (int c = 0; c < t.shape[r]; ++c) row_of.push_back(r + 1);
  // e(t) is theta of the filling that puts r in row r.
  return theta(make_filled(t.shape, std::move(row_of)), t);
}

Tabloid f_t(const FilledTableau& tau, const BijectiveTableau& t) {
  require_same_shape(tau.shape, t.shape);
  std::vector<int> offsets = content_offsets(tau.content), cursor(tau.content.size());
  std::vector<Entry> flat(tau.entries.size());
  fill_flat(tau.entries, t, offsets, cursor, flat);
  return flat_to_tabloid(flat, tau.content);
}

TabloidVector theta_hat(const FilledTableau& tau, const BijectiveTableau& t) {
  require_same_shape(tau.shape, t.shape);
  TabloidVector out(tau.content);
  FilledTableau current = tau;
  for_each_row_rearrangement(tau, [&](const std::vector<int>& e) {
    current.entries = e;
    out.add(f_t(current, t), 1);
  });
  return out;
}

TabloidVector theta(const FilledTableau& tau, const BijectiveTableau& t) {
  require_same_shape(tau.shape, t.shape);
  TabloidVector out(tau.content);
  std::vector<int> offsets = content_offsets(tau.content), cursor(tau.content.size());
  std::vector<Entry> flat(tau.entries.size());
  for_each_theta_term(tau, [&](const std::vector<int>& filling, int sign) {
    fill_flat(filling, t, offsets, cursor, flat);
    out.add(flat_to_tabloid(flat, tau.content), sign);
  });
  return out;
}

PlethysticVector theta_bar(const FilledTableau& tau, const BijectiveTableau& t, const Partition& nu) {
  require_same_shape(tau.shape, t.shape);
  Partition mu = block_shape(tau.content, nu.size());
  PlethysticVector out(PlethysticShape{nu, mu});
  for (const auto& [key, c] : theta_bar_counts(tau, t, nu, mu)) out.add(key, c);
  return out;
}

Integer theta_bar_coefficient(const FilledTableau& tau, const BijectiveTableau& t, const Partition& nu,
                              const PlethysticTabloid& target) {
  require_same_shape(tau.shape, t.shape);
  const int n = nu.size();
  Partition mu = block_shape(tau.content, n);
  const std::size_t cells = tau.entries.size();
  if (target.entries.size() != cells) throw UsageError("target tabloid has the wrong size");
  const int l = mu.length(), m = mu.size();

  auto start = row_starts(tau.shape);
  std::vector<std::vector<int>> want = tau.rows();
  for (auto& r : want) std::sort(r.begin(), r.end());
  std::vector<std::vector<int>> columns;
  for (int c = 0; c < (tau.shape.empty() ? 0 : tau.shape[0]); ++c) {
    std::vector<int> col;
    for (int r = 0; r < tau.shape.length() && tau.shape[r] > c; ++r) col.push_back(start[r] + c);
    columns.push_back(std::move(col));
  }

  std::vector<int> value_of(cells + 1), w(cells), filling(cells), row;
  Integer total = 0;
  auto rows_match = [&] {
    for (int r = 0; r < tau.shape.length(); ++r) {
      row.assign(filling.begin() + start[r], filling.begin() + start[r + 1]);
      std::sort(row.begin(), row.end());
      if (row != want[r]) return false;
    }
    return true;
  };
  std::function<void(std::size_t, int)> permute_columns = [&](std::size_t c, int sign) {
    if (c == columns.size()) {
      if (rows_match()) total += sign;
      return;
    }
    const auto& col = columns[c];
    std::vector<int> order(col.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      int inversions = 0;
      for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
          if (order[a] > order[b]) ++inversions;
      for (std::size_t a = 0; a < col.size(); ++a) filling[col[a]] = w[col[order[a]]];
      permute_columns(c + 1, inversions % 2 ? -sign : sign);
    } while (std::next_permutation(order.begin(), order.end()));
  };

  // Representatives of the class: the blocks of each outer row in every order.
  std::vector<int> block_at(n);
  std::iota(block_at.begin(), block_at.end(), 0);
  std::vector<int> row_first;
  for (int j = 0, b = 0; j < nu.length(); b += nu[j++]) row_first.push_back(b);
  std::function<void(int)> arrange = [&](int j) {
    if (j == nu.length()) {
      for (int i = 0; i < n; ++i) {
        const Entry* block = target.entries.data() + block_at[i] * m;
        for (int k = 0, pos = 0; k < l; pos += mu[k++])
          for (int e = 0; e < mu[k]; ++e) value_of[block[pos + e]] = i * l + k + 1;
      }
      for (std::size_t c = 0; c < cells; ++c) w[c] = value_of[t.entries[c]];
      permute_columns(0, 1);
      return;
    }
    auto first = block_at.begin() + row_first[j];
    do arrange(j + 1);
    while (std::next_permutation(first, first + nu[j]));
  };
  arrange(0);
  return total;
}

double theta_term_bound(const FilledTableau& tau) {
  double bound = 1;
  for (const auto& r : tau.rows()) {
    std::map<int, int> mult;
    for (int v : r) ++mult[v];
    bound *= factorial(static_cast<unsigned>(r.size())).get_d();
    for (const auto& [v, k] : mult) bound /= factorial(k).get_d();
  }
  for (int c = 0; c < (tau.shape.empty() ? 0 : tau.shape[0]); ++c) {
    int len = 0;
    while (len < tau.shape.length() && tau.shape[len] > c) ++len;
    bound *= factorial(len).get_d();
  }
  return bound;
}

std::size_t ssh_rank(const Partition& lambda, const Partition& nu, const Partition& mu, const SshOptions& options) {
  if (nu.empty() || mu.empty()) throw UsageError("ssh-rank needs nonempty partitions");
  if (lambda.size() != nu.size() * mu.size()) throw UsageError("|lambda| must equal |nu||mu|");
  if (lambda.size() > options.max_degree)
    throw ResourceError("degree " + std::to_string(lambda.size()) + " exceeds the tabloid cap " +
                        std::to_string(options.max_degree));
  std::vector<FilledTableau> taus = enumerate_ssyt(lambda, repeated_content(mu, nu.size()));
  BijectiveTableau t = row_reading_tableau(lambda);
  std::vector<PlethysticVector> images(taus.size(), PlethysticVector(PlethysticShape{nu, mu}));
  parallel_for(taus.size(), options.threads, [&](std::size_t i) { images[i] = theta_bar(taus[i], t, nu); });
  return span_rank(images);
}

FilledTableau join(const FilledTableau& tau1, const FilledTableau& tau2) {
  if (tau2.shape.length() > tau1.shape.length()) throw UsageError("second tableau of a join has too many rows");
  auto r1 = tau1.rows(), r2 = tau2.rows();
  for (std::size_t r = 0; r < r2.size(); ++r) r1[r].insert(r1[r].end(), r2[r].begin(), r2[r].end());
  std::vector<int> entries;
  for (const auto& row : r1) entries.insert(entries.end(), row.begin(), row.end());
  int values = static_cast<int>(std::max(tau1.content.size(), tau2.content.size()));
  return make_filled(add_parts(tau1.shape, tau2.shape), std::move(entries), values);
}

BijectiveTableau join(const BijectiveTableau& t1, const BijectiveTableau& t2) {
  if (t2.shape.length() > t1.shape.length()) throw UsageError("second tableau of a join has too many rows");
  auto s1 = row_starts(t1.shape), s2 = row_starts(t2.shape);
  std::vector<int> entries;
  for (int r = 0; r < t1.shape.length(); ++r) {
    entries.insert(entries.end(), t1.entries.begin() + s1[r], t1.entries.begin() + s1[r + 1]);
    if (r < t2.shape.length())
      entries.insert(entries.end(), t2.entries.begin() + s2[r], t2.entries.begin() + s2[r + 1]);
  }
  return make_bijective(add_parts(t1.shape, t2.shape), std::move(entries));
}

namespace {

void require_content(const FilledTableau& tau, const Partition& mu, int n) {
  if (tau.content != repeated_content(mu, n)) throw UsageError("tableau content is not mu^n");
}

// Renumbers values of a filling with blocks of `from` rows into blocks of `to` rows.
std::vector<int> widen_blocks(const std::vector<int>& entries, int from, int to) {
  std::vector<int> out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    int v = entries[i] - 1;
    out[i] = (v / from) * to + v % from + 1;
  }
  return out;
}

FilledTableau h_strip_tail(const Partition& mu_tilde, int n, int block) {
  std::vector<int> row;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < mu_tilde.length(); ++j) row.insert(row.end(), mu_tilde[j], i * block + j + 1);
  return filled_from_rows({row}, n * block);
}

FilledTableau two_column_head(int rows) {
  std::vector<std::vector<int>> r;
  for (int k = 1; k <= rows; ++k) r.push_back({k, k});
  return filled_from_rows(r, rows);
}

FilledTableau lift_filling_h(const std::vector<int>& filling, const Partition& shape, const Partition& mu, int n,
                             const Partition& mu_tilde) {
  int block = std::max(mu.length(), mu_tilde.length());
  FilledTableau base = make_filled(shape, widen_blocks(filling, mu.length(), block), n * block);
  return join(base, h_strip_tail(mu_tilde, n, block));
}

FilledTableau lift_filling_2col(const std::vector<int>& filling, const Partition& shape, const Partition& mu, int n) {
  return join(two_column_head(n * mu.length()), make_filled(shape, filling, n * mu.length()));
}

}  // namespace

FilledTableau stability_lift_h(const FilledTableau& tau, const Partition& mu, int n, const Partition& mu_tilde) {
  require_content(tau, mu, n);
  if (mu_tilde.empty()) return tau;
  return lift_filling_h(tau.entries, tau.shape, mu, n, mu_tilde);
}

BijectiveTableau stability_lift_h(const BijectiveTableau& t, int n, const Partition& mu_tilde) {
  if (mu_tilde.empty()) return t;
  int base = t.shape.size();
  std::vector<int> tail(n * mu_tilde.size());
  std::iota(tail.begin(), tail.end(), base + 1);
  std::vector<int> entries = t.entries;
  int first = t.shape.empty() ? 0 : t.shape[0];
  entries.insert(entries.begin() + first, tail.begin(), tail.end());
  Partition shape = add_parts(t.shape, Partition{static_cast<int>(tail.size())});
  return make_bijective(shape, std::move(entries));
}

FilledTableau stability_lift_2col(const FilledTableau& tau, const Partition& mu, int n) {
  require_content(tau, mu, n);
  return lift_filling_2col(tau.entries, tau.shape, mu, n);
}

BijectiveTableau stability_lift_2col(const BijectiveTableau& t, const Partition& mu, int n) {
  int rows = n * mu.length();
  if (t.shape.length() > rows) throw UsageError("tableau has more rows than the two-column block");
  int base = t.shape.size();
  std::vector<int> head(2 * rows);
  std::iota(head.begin(), head.end(), 1);
  BijectiveTableau head_tableau{Partition(std::vector<int>(rows, 2)), head};
  // Shift so the head holds nm+1, ... and t keeps its own entries.
  for (int& x : head_tableau.entries) x += base;
  std::vector<int> all;
  auto hs = row_starts(head_tableau.shape), ts = row_starts(t.shape);
  for (int r = 0; r < rows; ++r) {
    all.insert(all.end(), head_tableau.entries.begin() + hs[r], head_tableau.entries.begin() + hs[r + 1]);
    if (r < t.shape.length()) all.insert(all.end(), t.entries.begin() + ts[r], t.entries.begin() + ts[r + 1]);
  }
  return make_bijective(add_parts(head_tableau.shape, t.shape), std::move(all));
}

TransportCheck coefficient_transport(const FilledTableau& tau, const Partition& nu, const Partition& mu,
                                     const Partition& mu_tilde, LiftMode mode) {
  int n = nu.size();
  require_content(tau, mu, n);
  BijectiveTableau t = row_reading_tableau(tau.shape);
  TabloidCounts source = theta_bar_counts(tau, t, nu, mu);

  FilledTableau tau_hat = mode == LiftMode::HStrip ? stability_lift_h(tau, mu, n, mu_tilde)
                                                   : stability_lift_2col(tau, mu, n);
  BijectiveTableau t_hat = mode == LiftMode::HStrip ? stability_lift_h(t, n, mu_tilde)
                                                    : stability_lift_2col(t, mu, n);
  Partition mu_hat = mode == LiftMode::HStrip ? add_parts(mu, mu_tilde)
                                              : add_parts(mu, Partition(std::vector<int>(mu.length(), 2)));
  detail::Layout layout(nu, mu);
  detail::Layout hat_layout(nu, mu_hat);

  TransportCheck check;
  std::vector<int> offsets = content_offsets(tau.content), cursor(tau.content.size());
  std::vector<Entry> flat(tau.entries.size());
  std::optional<std::vector<int>> chosen;
  for_each_theta_term(tau, [&](const std::vector<int>& filling, int) {
    if (chosen) return;
    fill_flat(filling, t, offsets, cursor, flat);
    PlethysticTabloid key{flat};
    detail::canonicalize_in_place(layout, key.entries);
    auto it = source.find(key);
    if (it != source.end() && it->second != 0) {
      chosen = filling;
      check.source = key;
      check.source_coefficient = it->second;
    }
  });
  if (!chosen) return check;
  check.source_nonzero = true;

  FilledTableau lifted_filling = mode == LiftMode::HStrip ? lift_filling_h(*chosen, tau.shape, mu, n, mu_tilde)
                                                          : lift_filling_2col(*chosen, tau.shape, mu, n);
  std::vector<int> hat_offsets = content_offsets(tau_hat.content), hat_cursor(tau_hat.content.size());
  std::vector<Entry> hat_flat(tau_hat.entries.size());
  fill_flat(lifted_filling.entries, t_hat, hat_offsets, hat_cursor, hat_flat);
  check.lifted.entries = hat_flat;
  detail::canonicalize_in_place(hat_layout, check.lifted.entries);
  check.lifted_coefficient = theta_bar_coefficient(tau_hat, t_hat, nu, check.lifted);
  return check;
}

ProofDeviceCount proof_device(const FilledTableau& tau, const BijectiveTableau& t, const Partition& nu,
                              const PlethysticTabloid& target) {
  require_same_shape(tau.shape, t.shape);
  Partition mu = block_shape(tau.content, nu.size());
  detail::Layout layout(nu, mu);
  std::vector<int> offsets = content_offsets(tau.content), cursor(tau.content.size());
  std::vector<Entry> flat(tau.entries.size());
  ProofDeviceCount count;
  for_each_theta_term(tau, [&](const std::vector<int>& filling, int sign) {
    fill_flat(filling, t, offsets, cursor, flat);
    detail::canonicalize_in_place(layout, flat);
    if (flat == target.entries) (sign > 0 ? count.positive : count.negative)++;
  });
  return count;
}

}  // namespace plethysm
