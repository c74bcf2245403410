#include <algorithm>
#include <limits>

#include "plethysm/errors.hpp"
#include "plethysm/symfunc.hpp"

namespace plethysm {

namespace {

constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::min();

// Partitions reachable from lambda by removing one rim hook of the given
// length, with the hook's sign (-1)^{height}. Uses beta-numbers: removing a
// rim hook of length k moves one bead from b to b-k.
template <class Visit>
void for_each_rim_hook(const Partition& lambda, int k, Visit&& visit) {
  int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (int j = 0; j < len; ++j) {
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++between;
    }
    if (occupied) continue;
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(len);
    for (int j = 0; j < len; ++j) parts[j] = moved[j] - (len - 1 - j);
    visit(Partition(std::move(parts)), between % 2 == 0 ? 1 : -1);
  }
}

}  // namespace

CharacterTable& CharacterTable::shared() {
  static CharacterTable table;
  return table;
}

CharacterTable::Degree& CharacterTable::degree(int n) {
  std::lock_guard lock(mutex_);
  auto it = degrees_.find(n);
  if (it != degrees_.end()) return *it->second;
  auto table = std::make_unique<Degree>();
  table->partitions = enumerate_partitions(n);
  for (std::size_t i = 0; i < table->partitions.size(); ++i)
    table->index.emplace(table->partitions[i], static_cast<int>(i));
  std::size_t count = table->partitions.size();
  table->values = std::make_unique<std::atomic<std::int64_t>[]>(count * count);
  for (std::size_t i = 0; i < count * count; ++i) table->values[i].store(kUnset, std::memory_order_relaxed);
  return *degrees_.emplace(n, std::move(table)).first->second;
}

const std::vector<Partition>& CharacterTable::partitions(int n) { return degree(n).partitions; }

int CharacterTable::index_of(const Partition& p) {
  Degree& table = degree(p.size());
  return table.index.at(p);
}

std::int64_t CharacterTable::value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw UsageError("character value needs partitions of equal size, got " + lambda.to_string() + " and " +
                     mu.to_string());
  Degree& table = degree(lambda.size());
  return compute(table, table.index.at(lambda), table.index.at(mu));
}

std::int64_t CharacterTable::compute(Degree& table, int li, int mi) {
  std::size_t count = table.partitions.size();
  std::atomic<std::int64_t>& slot = table.values[static_cast<std::size_t>(li) * count + mi];
  std::int64_t cached = slot.load(std::memory_order_acquire);
  if (cached != kUnset) return cached;

  const Partition& lambda = table.partitions[li];
  const Partition& mu = table.partitions[mi];
  std::int64_t result = 0;
  if (mu.empty()) {
    result = 1;
  } else {
    int k = mu[0];
    Partition rest(std::vector<int>(mu.begin() + 1, mu.end()));
    Degree& smaller = degree(mu.size() - k);
    int rest_index = smaller.index.at(rest);
    for_each_rim_hook(lambda, k, [&](const Partition& reduced, int sign) {
      result += sign * compute(smaller, smaller.index.at(reduced), rest_index);
    });
  }
  slot.store(result, std::memory_order_release);
  return result;
}

std::int64_t character_value(const Partition& lambda, const Partition& mu) {
  return CharacterTable::shared().value(lambda, mu);
}

}  // namespace plethysm
