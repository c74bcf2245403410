#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "plethysm/tabloid.hpp"

namespace plethysm::detail {

// Flat layout of an outer shape filled with blocks of one inner shape.
struct Layout {
  Layout(const Partition& outer, const Partition& inner);

  int m = 0;       // entries per block
  int blocks = 0;  // number of outer cells
  std::vector<int> inner_rows;
  std::vector<std::pair<int, int>> outer_rows;  // (first block, length)
};

Layout tensor_layout(const TensorShape& shape);

std::size_t hash_entries(const std::vector<Entry>& e) noexcept;

void sort_inner_rows(const Layout& L, Entry* block);
Entry block_min(const Layout& L, const Entry* block);
void canonicalize_in_place(const Layout& L, std::vector<Entry>& e);
void sort_tensor_blocks(const Layout& L, std::vector<Entry>& e);

void check_entries(std::vector<Entry> e, std::size_t expected, bool require_cover);
std::vector<Entry> to_entries(const std::vector<RawRows>& cells, const Partition& inner);
std::vector<RawRows> from_entries(const std::vector<Entry>& e, const Partition& inner, int blocks);
std::vector<Entry> relabel(const Permutation& sigma, const std::vector<Entry>& e);

// Every tuple obtained by permuting blocks inside each outer row.
void for_each_outer_rearrangement(const Layout& L, const std::vector<Entry>& e,
                                  const std::function<void(const std::vector<Entry>&)>& f);
// Every term of Psi on one tuple, as sorted nu-blocks.
void for_each_psi_term(const Layout& domain, const Partition& nu, const std::vector<Entry>& tuple,
                       const std::function<void(const std::vector<Entry>&)>& f);

}  // namespace plethysm::detail
