#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plethysm/partition.hpp"
#include "plethysm/symfunc.hpp"

namespace plethysm {

// Outcome of testing nu ⊴ mu, i.e. Schur positivity of h_mu[h_nu] - h_nu[h_mu].
struct RelationVerdict {
  Partition nu;
  Partition mu;
  bool holds = false;
  // Partition with the most negative coefficient (first in reverse-lex order
  // among ties); present iff the relation fails.
  std::optional<Partition> witness;
  SymExpr difference{Basis::S, 0};
};

SymExpr schur_difference(PlethysmEngine& engine, const Partition& nu, const Partition& mu);
RelationVerdict is_le(PlethysmEngine& engine, const Partition& nu, const Partition& mu);

// Pairwise relation table over a node list. Pairs above the degree cap are
// recorded as unknown rather than failing the whole computation.
class RelationTable {
 public:
  enum class State { Holds, Fails, Uncomputed };

  RelationTable(PlethysmEngine& engine, std::vector<Partition> nodes);

  const std::vector<Partition>& nodes() const { return nodes_; }
  State state(std::size_t a, std::size_t b) const { return states_[a * nodes_.size() + b]; }
  bool holds(std::size_t a, std::size_t b) const { return state(a, b) == State::Holds; }
  // Unordered pairs {a, b} (a < b) where at least one direction is unknown.
  std::vector<std::pair<std::size_t, std::size_t>> uncomputed_pairs() const;

 private:
  std::vector<Partition> nodes_;
  std::vector<State> states_;
};

struct HasseDiagram {
  std::vector<Partition> nodes;
  std::vector<std::pair<Partition, Partition>> edges;  // (nu, mu) with nu ⊴ mu covering
  std::vector<std::pair<Partition, Partition>> uncomputed;
};

// Sorts nodes by size, then reverse-lexicographically; rejects duplicates.
std::vector<Partition> normalize_nodes(std::vector<Partition> nodes);

HasseDiagram hasse_diagram(PlethysmEngine& engine, std::vector<Partition> nodes);
HasseDiagram hasse_diagram(const RelationTable& table);

struct ScanResult {
  std::vector<std::vector<Partition>> violations;
  std::vector<std::pair<Partition, Partition>> uncomputed;
};

// Triples (a, b, c) with a ⊴ b, b ⊴ c and not a ⊴ c.
ScanResult transitivity_scan(PlethysmEngine& engine, std::vector<Partition> nodes);
ScanResult transitivity_scan(const RelationTable& table);
// Distinct pairs (a, b) related in both directions.
ScanResult antisymmetry_scan(PlethysmEngine& engine, std::vector<Partition> nodes);
ScanResult antisymmetry_scan(const RelationTable& table);

// Partitions of 1..max_size in normalized order; columns (1^k) only on request.
std::vector<Partition> poset_nodes(int max_size, bool include_columns);

std::string to_dot(const HasseDiagram& diagram);

}  // namespace plethysm
