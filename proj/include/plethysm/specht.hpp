#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "plethysm/partition.hpp"
#include "plethysm/symfunc.hpp"
#include "plethysm/tabloid.hpp"

namespace plethysm {

// Cells are stored row by row, row 1 first and each row left to right.

struct BijectiveTableau {
  Partition shape;
  std::vector<int> entries;  // a permutation of 1..|shape|

  friend bool operator==(const BijectiveTableau&, const BijectiveTableau&) = default;
};

BijectiveTableau make_bijective(const Partition& shape, std::vector<int> entries);
// The filling 1..n in cell order.
BijectiveTableau row_reading_tableau(const Partition& shape);
BijectiveTableau act(const Permutation& sigma, const BijectiveTableau& t);

struct FilledTableau {
  Partition shape;
  std::vector<int> entries;  // values in 1..content.size()
  Composition content;       // content[v - 1] = number of cells holding v

  std::vector<std::vector<int>> rows() const;
  bool is_semistandard() const;
  friend bool operator==(const FilledTableau&, const FilledTableau&) = default;
};

// Content is derived from the entries; pass `values` to fix its length.
FilledTableau make_filled(const Partition& shape, std::vector<int> entries, int values = 0);
FilledTableau filled_from_rows(const std::vector<std::vector<int>>& rows, int values = 0);

// The content mu^n as a composition: mu repeated n times.
Composition repeated_content(const Partition& mu, int n);

std::vector<FilledTableau> enumerate_ssyt(const Partition& lambda, const Composition& content);
std::vector<FilledTableau> enumerate_ssyt(const Partition& lambda, const Partition& content);

TabloidVector polytabloid(const BijectiveTableau& t);

// Tabloid of shape content(tau) with t(c) in row tau(c).
Tabloid f_t(const FilledTableau& tau, const BijectiveTableau& t);

TabloidVector theta_hat(const FilledTableau& tau, const BijectiveTableau& t);
// Theta_tau(e(t)).
TabloidVector theta(const FilledTableau& tau, const BijectiveTableau& t);
// phi(Theta_tau(e(t))) in M^{nu[mu]}, where content(tau) = mu^|nu|.
PlethysticVector theta_bar(const FilledTableau& tau, const BijectiveTableau& t, const Partition& nu);

// Coefficient of {T} in theta_bar(tau, t), summed over the representatives of
// {T} and the column group without expanding the whole image.
Integer theta_bar_coefficient(const FilledTableau& tau, const BijectiveTableau& t, const Partition& nu,
                              const PlethysticTabloid& target);
// Upper bound on the terms visited when expanding theta(tau, t).
double theta_term_bound(const FilledTableau& tau);

struct SshOptions {
  int max_degree = 12;
  unsigned threads = 1;
};

// Dimension of the span of theta_bar(tau, t) over semistandard tau of shape
// lambda and content mu^n, for the row-reading t.
std::size_t ssh_rank(const Partition& lambda, const Partition& nu, const Partition& mu, const SshOptions& options = {});

// Row-wise concatenation; tau2 may not have more rows than tau1.
FilledTableau join(const FilledTableau& tau1, const FilledTableau& tau2);
BijectiveTableau join(const BijectiveTableau& t1, const BijectiveTableau& t2);

// tau ∨ tau~ with tau~ the one-row semistandard filling of content mu~^n.
// Values are renumbered so that each block has max(l(mu), l(mu~)) rows; the
// result has content (mu + mu~)^n.
FilledTableau stability_lift_h(const FilledTableau& tau, const Partition& mu, int n, const Partition& mu_tilde);
// t ∨ (nm+1 ... n(m + m~)).
BijectiveTableau stability_lift_h(const BijectiveTableau& t, int n, const Partition& mu_tilde);

// tau~ ∨ tau with tau~ of shape (2^{n l(mu)}) holding r twice in row r.
FilledTableau stability_lift_2col(const FilledTableau& tau, const Partition& mu, int n);
// t~ ∨ t with t~ the order-preserving filling of (2^{n l(mu)}) by nm+1, ...
BijectiveTableau stability_lift_2col(const BijectiveTableau& t, const Partition& mu, int n);

enum class LiftMode { HStrip, TwoColumn };

// Compares the coefficient of some {T} in theta_bar(tau, t) with the
// coefficient of the lifted {T^} in theta_bar(tau^, t^).
struct TransportCheck {
  bool source_nonzero = false;
  PlethysticTabloid source;
  PlethysticTabloid lifted;
  Rational source_coefficient;
  Rational lifted_coefficient;
};

TransportCheck coefficient_transport(const FilledTableau& tau, const Partition& nu, const Partition& mu,
                                     const Partition& mu_tilde, LiftMode mode);

// Number of pairs (tau', pi) with phi(f_t(pi·tau')) = {T}, split by sign.
struct ProofDeviceCount {
  long positive = 0;
  long negative = 0;
};

ProofDeviceCount proof_device(const FilledTableau& tau, const BijectiveTableau& t, const Partition& nu,
                              const PlethysticTabloid& target);

struct StabilityReport {
  Partition lambda;
  Partition lifted_lambda;
  Integer r;
  Integer lifted;
  bool inequality_holds = false;
  // A lifted tableau whose theta_bar has a nonzero coefficient at the
  // transported tabloid; unset when r = 0 or the lift exceeds the tabloid cap.
  std::optional<FilledTableau> witness_tableau;
  // Whether the lifted images of an independent family of size r stay
  // independent; unset when their expansion exceeds max_theta_terms.
  std::optional<bool> lifted_family_independent;
};

// Semistandard tableaux with independent theta_bar images, keyed by
// (nu, mu, lambda); lets repeated verifications share the unlifted work.
class FamilyCache {
 public:
  std::optional<std::vector<FilledTableau>> find(const Partition& nu, const Partition& mu,
                                                 const Partition& lambda) const;
  void store(const Partition& nu, const Partition& mu, const Partition& lambda, std::vector<FilledTableau> family);

 private:
  mutable std::mutex mutex_;
  std::map<std::tuple<Partition, Partition, Partition>, std::vector<FilledTableau>> families_;
};

struct StabilityOptions {
  int max_tabloid_degree = 12;
  double max_theta_terms = 1e5;
  unsigned threads = 1;
  FamilyCache* families = nullptr;
};

StabilityReport verify_stability(PlethysmEngine& engine, const Partition& nu, const Partition& mu,
                                 const Partition& mu_tilde, const Partition& lambda, LiftMode mode,
                                 const StabilityOptions& options = {});
std::vector<StabilityReport> verify_stability(PlethysmEngine& engine, const Partition& nu, const Partition& mu,
                                              const Partition& mu_tilde, LiftMode mode,
                                              const StabilityOptions& options = {});

}  // namespace plethysm
