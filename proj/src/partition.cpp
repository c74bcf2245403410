#include "plethysm/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "plethysm/errors.hpp"

namespace plethysm {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw UsageError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

bool Partition::is_column() const {
  return !parts_.empty() && parts_.front() == 1;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << p.to_string() << ')';
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : p.parts()) {
    h ^= static_cast<std::size_t>(x);
    h *= 0x100000001b3ull;
  }
  return h;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  if (p.empty()) return Partition();
  out.resize(p.parts().front());
  for (int part : p) {
    for (int i = 0; i < part; ++i) ++out[i];
  }
  return Partition(std::move(out));
}

Partition union_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.begin(), a.end());
  parts.insert(parts.end(), b.begin(), b.end());
  return Partition::from_unsorted(std::move(parts));
}

Partition add_parts(const Partition& a, const Partition& b) {
  std::size_t len = std::max(a.parts().size(), b.parts().size());
  std::vector<int> parts(len);
  for (std::size_t i = 0; i < len; ++i) parts[i] = a[i] + b[i];
  // Componentwise sums of two partitions are always weakly decreasing.
  return Partition(std::move(parts));
}

Partition repeat(const Partition& p, int n) {
  if (n < 1) throw UsageError("repeat count must be positive");
  std::vector<int> parts;
  for (int k = 0; k < n; ++k) parts.insert(parts.end(), p.begin(), p.end());
  return Partition::from_unsorted(std::move(parts));
}

Partition column(int k) { return Partition(std::vector<int>(k, 1)); }

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int cap) {
  if (n < 0) throw UsageError("cannot enumerate partitions of a negative integer");
  if (n > cap)
    throw ResourceError("partition enumeration of " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rec(n, n, prefix, out);
  return out;
}

Integer num_standard_tableaux(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  Integer hooks = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      int arm = lambda[r] - c - 1;
      int leg = conj[c] - r - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

Integer z_of(const Partition& lambda) {
  std::map<int, int> mult;
  for (int part : lambda) ++mult[part];
  Integer z = 1;
  for (auto [value, count] : mult) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), value, count);
    z *= pw * factorial(count);
  }
  return z;
}

Partition parse_partition(const std::string& text) {
  if (text.empty() || text == "--" || text == "()" || text == "[]") return Partition();
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("malformed partition '" + text + "'");
    parts.push_back(std::stoi(item));
  }
  return Partition(std::move(parts));
}

}  // namespace plethysm
