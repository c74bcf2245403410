#include <algorithm>
#include <map>

#include "plethysm/errors.hpp"
#include "plethysm/parallel.hpp"
#include "plethysm/specht.hpp"

namespace plethysm {

namespace {

struct LiftedShapes {
  Partition lambda;
  Partition mu;
};

LiftedShapes lifted_shapes(const Partition& lambda, const Partition& nu, const Partition& mu,
                           const Partition& mu_tilde, LiftMode mode) {
  int n = nu.size();
  if (mode == LiftMode::HStrip) {
    if (mu_tilde.empty()) return {lambda, mu};
    return {add_parts(lambda, Partition{n * mu_tilde.size()}), add_parts(mu, mu_tilde)};
  }
  int rows = n * mu.length();
  return {add_parts(lambda, Partition(std::vector<int>(rows, 2))),
          add_parts(mu, Partition(std::vector<int>(mu.length(), 2)))};
}

Integer coefficient_of(PlethysmEngine& engine, const Partition& nu, const Partition& mu, const Partition& lambda) {
  Rational q = engine.schur_of_plethysm(nu, mu).coefficient(lambda);
  if (q.get_den() != 1) throw CrossCheckError("non-integral plethysm coefficient");
  return q.get_num();
}

// Row echelon form keyed by each vector's smallest tabloid.
class Echelon {
 public:
  // Reduces v against the stored vectors; keeps it when something remains.
  bool insert(const PlethysticVector& v) {
    Row row(v.terms().begin(), v.terms().end());
    while (!row.empty()) {
      auto pivot = rows_.find(row.begin()->first);
      if (pivot == rows_.end()) {
        PlethysticTabloid key = row.begin()->first;
        rows_.emplace(std::move(key), std::move(row));
        return true;
      }
      Rational f = row.begin()->second / pivot->second.begin()->second;
      for (const auto& [k, c] : pivot->second) {
        Rational& x = row[k];
        x -= f * c;
        if (x == 0) row.erase(k);
      }
    }
    return false;
  }

 private:
  using Row = std::map<PlethysticTabloid, Rational>;
  std::map<PlethysticTabloid, Row> rows_;
};

}  // namespace

std::optional<std::vector<FilledTableau>> FamilyCache::find(const Partition& nu, const Partition& mu,
                                                           const Partition& lambda) const {
  std::lock_guard lock(mutex_);
  auto it = families_.find({nu, mu, lambda});
  if (it == families_.end()) return std::nullopt;
  return it->second;
}

void FamilyCache::store(const Partition& nu, const Partition& mu, const Partition& lambda,
                        std::vector<FilledTableau> family) {
  std::lock_guard lock(mutex_);
  families_.insert_or_assign({nu, mu, lambda}, std::move(family));
}

StabilityReport verify_stability(PlethysmEngine& engine, const Partition& nu, const Partition& mu,
                                 const Partition& mu_tilde, const Partition& lambda, LiftMode mode,
                                 const StabilityOptions& options) {
  if (nu.empty() || mu.empty()) throw UsageError("stability needs nonempty nu and mu");
  const int n = nu.size();
  if (lambda.size() != n * mu.size()) throw UsageError("|lambda| must equal |nu||mu|");
  LiftedShapes lifted = lifted_shapes(lambda, nu, mu, mu_tilde, mode);

  StabilityReport report;
  report.lambda = lambda;
  report.lifted_lambda = lifted.lambda;
  report.r = coefficient_of(engine, nu, mu, lambda);
  report.lifted = coefficient_of(engine, nu, lifted.mu, lifted.lambda);
  report.inequality_holds = report.lifted >= report.r;

  if (lifted.lambda.size() > options.max_tabloid_degree || report.r == 0) return report;

  // Pick tau_1..tau_r with independent images, lift them, and test the lifts.
  BijectiveTableau t = row_reading_tableau(lambda);
  std::optional<std::vector<FilledTableau>> cached;
  if (options.families) cached = options.families->find(nu, mu, lambda);
  std::vector<FilledTableau> chosen;
  if (cached) {
    chosen = std::move(*cached);
  } else {
    Echelon family;
    for (const FilledTableau& tau : enumerate_ssyt(lambda, repeated_content(mu, n))) {
      if (Integer(static_cast<unsigned long>(chosen.size())) == report.r) break;
      if (family.insert(theta_bar(tau, t, nu))) chosen.push_back(tau);
    }
    if (options.families) options.families->store(nu, mu, lambda, chosen);
  }
  if (Integer(static_cast<unsigned long>(chosen.size())) != report.r)
    throw CrossCheckError("semistandard images of " + lambda.to_string() + " span less than the plethysm coefficient");

  for (const FilledTableau& tau : chosen) {
    TransportCheck check = coefficient_transport(tau, nu, mu, mu_tilde, mode);
    if (check.source_nonzero && check.lifted_coefficient != 0) {
      report.witness_tableau = mode == LiftMode::HStrip ? stability_lift_h(tau, mu, n, mu_tilde)
                                                        : stability_lift_2col(tau, mu, n);
      break;
    }
  }

  std::vector<FilledTableau> lifted_taus;
  double work = 0;
  for (const FilledTableau& tau : chosen) {
    lifted_taus.push_back(mode == LiftMode::HStrip ? stability_lift_h(tau, mu, n, mu_tilde)
                                                   : stability_lift_2col(tau, mu, n));
    work += theta_term_bound(lifted_taus.back());
  }
  if (work > options.max_theta_terms) return report;
  BijectiveTableau t_hat = mode == LiftMode::HStrip ? stability_lift_h(t, n, mu_tilde) : stability_lift_2col(t, mu, n);
  std::vector<PlethysticVector> lifted_images(lifted_taus.size(), PlethysticVector(PlethysticShape{nu, lifted.mu}));
  parallel_for(lifted_taus.size(), options.threads,
               [&](std::size_t i) { lifted_images[i] = theta_bar(lifted_taus[i], t_hat, nu); });
  report.lifted_family_independent = span_rank(lifted_images) == lifted_images.size();
  return report;
}

std::vector<StabilityReport> verify_stability(PlethysmEngine& engine, const Partition& nu, const Partition& mu,
                                              const Partition& mu_tilde, LiftMode mode,
                                              const StabilityOptions& options) {
  std::vector<StabilityReport> out;
  for (const Partition& lambda : enumerate_partitions(nu.size() * mu.size()))
    out.push_back(verify_stability(engine, nu, mu, mu_tilde, lambda, mode, options));
  return out;
}

}  // namespace plethysm
