#include "plethysm/order.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "plethysm/errors.hpp"
#include "plethysm/parallel.hpp"

namespace plethysm {

SymExpr schur_difference(PlethysmEngine& engine, const Partition& nu, const Partition& mu) {
  if (nu.empty() || mu.empty()) throw UsageError("the order relation is defined on nonempty partitions");
  return engine.schur_of_plethysm(mu, nu) - engine.schur_of_plethysm(nu, mu);
}

RelationVerdict is_le(PlethysmEngine& engine, const Partition& nu, const Partition& mu) {
  RelationVerdict v;
  v.nu = nu;
  v.mu = mu;
  v.difference = schur_difference(engine, nu, mu);
  const Rational* worst = nullptr;
  for (const auto& [lambda, c] : v.difference.terms()) {
    if (c < 0 && (worst == nullptr || c < *worst)) {
      worst = &c;
      v.witness = lambda;
    }
  }
  v.holds = !v.witness.has_value();
  return v;
}

RelationTable::RelationTable(PlethysmEngine& engine, std::vector<Partition> nodes)
    : nodes_(normalize_nodes(std::move(nodes))) {
  std::size_t n = nodes_.size();
  states_.assign(n * n, State::Uncomputed);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) pairs.emplace_back(a, b);
  // One difference decides both directions: a ⊴ b iff it is Schur positive,
  // b ⊴ a iff its negation is.
  std::vector<State> forward(pairs.size()), backward(pairs.size());
  parallel_for(pairs.size(), engine.options().threads, [&](std::size_t i) {
    auto [a, b] = pairs[i];
    forward[i] = backward[i] = State::Uncomputed;
    if (nodes_[a].size() * nodes_[b].size() > engine.options().max_degree) return;
    SymExpr diff = schur_difference(engine, nodes_[a], nodes_[b]);
    bool any_negative = false, any_positive = false;
    for (const auto& [lambda, c] : diff.terms()) {
      if (c < 0) any_negative = true;
      if (c > 0) any_positive = true;
    }
    forward[i] = any_negative ? State::Fails : State::Holds;
    backward[i] = any_positive ? State::Fails : State::Holds;
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    states_[a * n + b] = forward[i];
    states_[b * n + a] = backward[i];
  }
}

std::vector<std::pair<std::size_t, std::size_t>> RelationTable::uncomputed_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < nodes_.size(); ++a)
    for (std::size_t b = a + 1; b < nodes_.size(); ++b)
      if (state(a, b) == State::Uncomputed || state(b, a) == State::Uncomputed) out.emplace_back(a, b);
  return out;
}

std::vector<Partition> normalize_nodes(std::vector<Partition> nodes) {
  std::sort(nodes.begin(), nodes.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return RevLex()(a, b);
  });
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
    throw UsageError("node list contains a repeated partition");
  return nodes;
}

namespace {

std::vector<std::pair<Partition, Partition>> uncomputed_list(const RelationTable& table) {
  std::vector<std::pair<Partition, Partition>> out;
  for (auto [a, b] : table.uncomputed_pairs()) out.emplace_back(table.nodes()[a], table.nodes()[b]);
  return out;
}

}  // namespace

HasseDiagram hasse_diagram(const RelationTable& table) {
  HasseDiagram d;
  d.nodes = table.nodes();
  std::size_t n = d.nodes.size();
  auto strict = [&](std::size_t a, std::size_t b) { return a != b && table.holds(a, b); };
  // a -> b is a cover when no computed c sits strictly between them.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!strict(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (c != a && c != b && strict(a, c) && strict(c, b)) covered = false;
      if (covered) d.edges.emplace_back(d.nodes[a], d.nodes[b]);
    }
  }
  d.uncomputed = uncomputed_list(table);
  return d;
}

HasseDiagram hasse_diagram(PlethysmEngine& engine, std::vector<Partition> nodes) {
  return hasse_diagram(RelationTable(engine, std::move(nodes)));
}

ScanResult transitivity_scan(const RelationTable& table) {
  ScanResult r;
  std::size_t n = table.nodes().size();
  const auto& nodes = table.nodes();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !table.holds(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b || !table.holds(b, c)) continue;
        if (table.state(a, c) == RelationTable::State::Fails) r.violations.push_back({nodes[a], nodes[b], nodes[c]});
      }
    }
  r.uncomputed = uncomputed_list(table);
  return r;
}

ScanResult transitivity_scan(PlethysmEngine& engine, std::vector<Partition> nodes) {
  return transitivity_scan(RelationTable(engine, std::move(nodes)));
}

ScanResult antisymmetry_scan(const RelationTable& table) {
  ScanResult r;
  std::size_t n = table.nodes().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (table.holds(a, b) && table.holds(b, a)) r.violations.push_back({table.nodes()[a], table.nodes()[b]});
  r.uncomputed = uncomputed_list(table);
  return r;
}

ScanResult antisymmetry_scan(PlethysmEngine& engine, std::vector<Partition> nodes) {
  return antisymmetry_scan(RelationTable(engine, std::move(nodes)));
}

std::vector<Partition> poset_nodes(int max_size, bool include_columns) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_size; ++n)
    for (Partition& p : enumerate_partitions(n))
      if (include_columns || !p.is_column()) out.push_back(std::move(p));
  return normalize_nodes(std::move(out));
}

std::string to_dot(const HasseDiagram& diagram) {
  std::ostringstream os;
  os << "digraph plethysm_order {\n";
  for (const Partition& p : diagram.nodes) os << "  \"" << p.to_string() << "\";\n";
  for (const auto& [a, b] : diagram.edges)
    os << "  \"" << a.to_string() << "\" -> \"" << b.to_string() << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace plethysm
