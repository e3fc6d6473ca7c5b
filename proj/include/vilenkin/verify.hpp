// Copyright 2026 The Vilenkin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Numerical checks of the coefficient estimate |f^(n)| <= c_p n^{1/p-1} ||f||_{H_p}
// for 0 < p < 1 and of the martingale showing it cannot be improved.
//
// The estimate is driven by the weighted maximal operator
//   S~*_p f = sup_n |S_n f| / (n+1)^{1/p-1},
// whose tail integral off the support of a p-atom is bounded independently of
// the atom. The sharpness side builds
//   f = sum_k lambda_k a_k,  a_k = M_{alpha_k}^{1/p-1} / M * (D_{M_{alpha_k+1}} - D_{M_{alpha_k}}),
// with M = lambda, whose coefficients on the block [M_{alpha_k}, M_{alpha_k+1})
// grow faster than any admissible Phi.

#ifndef VILENKIN_VERIFY_HPP
#define VILENKIN_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vilenkin/hardy.hpp"

namespace vilenkin {

// ---------------------------------------------------------------------------
// Phi: the comparison function of the sharpness construction.

enum class PhiFamily { kPower, kLog, kConstant, kTabulated };

enum class Certification {
  kCertified,    // limsup n^{1/p-1} / Phi(n) = infinity holds analytically
  kUncertified,  // tabulated input, monotone but not certified
  kRejected,     // the family violates the growth condition
};

class Phi {
 public:
  /// n^gamma, gamma >= 0.
  static Phi power(double gamma);
  /// log(1 + n).
  static Phi log();
  /// c > 0.
  static Phi constant(double c);
  /// Right-continuous step function through (n_i, phi_i); n strictly
  /// increasing, phi nondecreasing and nonnegative. Below n_0 the value is phi_0.
  static Phi tabulated(std::vector<std::pair<double, double>> knots);
  /// Reads "n,phi" rows (header optional).
  static Phi tabulated_from_csv(std::string_view text);
  /// "pow:<gamma>", "log", "const:<c>" or "file:<path>".
  static Phi parse(std::string_view descriptor);

  double operator()(double n) const;
  PhiFamily family() const noexcept { return family_; }
  double parameter() const noexcept { return parameter_; }
  std::string describe() const;

  Certification certify(double p) const;
  /// Human-readable reason behind certify(p).
  std::string certification_note(double p) const;

 private:
  Phi(PhiFamily family, double parameter) : family_(family), parameter_(parameter) {}

  PhiFamily family_;
  double parameter_ = 0.0;
  std::vector<std::pair<double, double>> knots_;
};

// ---------------------------------------------------------------------------
// The weighted maximal operator and the atom estimates.

/// S~*_p f(x) = max_{1<=n<=n_max} |S_n f(x)| / (n+1)^{1/p-1}. Needs 0 < p < 1.
GridFunction maximal_operator_sp(const GridFunction& f, double p, std::uint64_t n_max);

/// lambda^{2p} sum_{s<rank} M_s^{p-1}: the bound for the tail integral of an
/// atom supported on an interval of the given rank.
double tail_bound(const Group& g, std::size_t rank, double p);

/// Integral of (S~*_p a)^p over the complement of the atom's interval, with
/// n running up to M_N.
double atom_tail_integral(const Atom& a, double p);

/// True iff max_x |S_n a(x)| <= 1e-10 ||a||_inf for every n <= M_rank.
bool atom_nullity_check(const Atom& a);

/// Pointwise form of the shell estimate: the largest value of
/// S~*_p a(x) / (lambda^2 M_s) over points x outside the support, where s is
/// the shell of x relative to the interval base. <= 1 when the estimate holds.
double atom_shell_ratio(const Atom& a, double p);

/// Largest value of
///   [(1/M_N) sum_{t in I_rank} |D_n(x - t)|] / (lambda M_s / M_rank)
/// over x outside I_rank (s the shell of x). <= 1 when the kernel-average
/// estimate holds.
double kernel_average_ratio(const Group& g, std::size_t rank, std::uint64_t n);

// ---------------------------------------------------------------------------
// Coefficient bound.

struct BoundEntry {
  std::uint64_t n_star = 0;  // maximizer of the (n+1) normalization
  double ratio = 0.0;        // |f^(n)| / ((n+1)^{1/p-1} ||f||_{H_p})
  std::uint64_t n_star_plain = 0;
  double ratio_plain = 0.0;  // same with n^{1/p-1}, n >= 1
  double hp_norm = 0.0;
};

/// Maximizes over n in [n_begin, n_end). Throws for the zero martingale.
BoundEntry coefficient_bound_ratio(const Martingale& f, double p, std::uint64_t n_begin,
                                   std::uint64_t n_end);

struct CoefficientIdentity {
  double max_deviation = 0.0;  // max_n |f^(n) - (S_{n+1} f - S_n f)(x) / psi_n(x)|
  bool dominated = true;       // |f^(n)| <= 2 max_n |S_n f(x)| for all n, x
};

/// f^(n) recovered from consecutive partial sums at every point.
CoefficientIdentity coefficient_identity_check(const GridFunction& f);

// ---------------------------------------------------------------------------
// Sharpness construction.

struct AlphaSelection {
  std::vector<std::size_t> alphas;
  std::vector<double> terms;  // (Phi(M_alpha) / M_alpha^{1/p-1})^{p/2}
  double budget_ratio = 0.5;
  /// False when the next index would need alpha + 1 > N.
  bool reached_requested = false;
};

/// Greedy: alpha_k is the smallest index above alpha_{k-1} (starting at 1)
/// whose term is <= r^k and strictly below the previous term. The series of
/// terms is then dominated by sum r^k. Stops at max_terms (0 = as many as
/// fit) or when alpha + 1 would exceed N. Throws if Phi is rejected for p or
/// if not a single index qualifies.
AlphaSelection choose_alphas(const Phi& phi, double p, const Group& g, double budget_ratio,
                             std::size_t max_terms = 0);

struct CounterexampleSpec {
  double p = 0.5;
  Phi phi = Phi::power(0.5);
  std::vector<std::size_t> alphas;
  double big_m = 2.0;            // lambda of the group
  std::vector<double> lambdas;   // (Phi(M_alpha) / M_alpha^{1/p-1})^{1/2}
};

CounterexampleSpec make_counterexample_spec(const Group& g, const Phi& phi, double p,
                                            std::vector<std::size_t> alphas);

/// The weighted atoms lambda_k a_k as a decomposition.
AtomicDecomposition counterexample_decomposition(const GroupPtr& g, const CounterexampleSpec& cs);

Martingale build_counterexample(const GroupPtr& g, const CounterexampleSpec& cs);

/// (1/M) M_alpha^{(1/p-1)/2} Phi(M_alpha)^{1/2}, the constant coefficient on block k.
double block_coefficient_closed(const Group& g, const CounterexampleSpec& cs, std::size_t k);

struct BlockRow {
  std::size_t k = 0;
  std::size_t alpha = 0;
  std::uint64_t m_alpha = 0;
  double coeff_numeric = 0.0;  // Re f^(M_alpha)
  double coeff_closed = 0.0;
  double phi_value = 0.0;
  double rho = 0.0;            // coeff_numeric / Phi(M_alpha)
};

struct CoefficientTable {
  std::vector<BlockRow> rows;
  double max_relative_error = 0.0;  // over every j inside every block
  double max_off_block = 0.0;       // max |f^(j)| outside all blocks
};

CoefficientTable counterexample_coefficients(const Martingale& f, const CounterexampleSpec& cs);

/// rho_k = f^(M_alpha_k) / Phi(M_alpha_k) from a table.
std::vector<double> divergence_ratios(const CoefficientTable& table);
/// The same from the closed form (1/M) (M_alpha^{1/p-1} / Phi(M_alpha))^{1/2}.
std::vector<double> divergence_ratios_closed(const Group& g, const CounterexampleSpec& cs);
bool strictly_increasing(const std::vector<double>& values);

// ---------------------------------------------------------------------------
// Auxiliary probes.

struct HardyInequality {
  double lhs = 0.0;  // sum_{k=1}^{M_N-1} |f^(k)|^p / k^{2-p}
  double rhs = 0.0;  // ||f||_{H_p}^p
  double ratio = 0.0;
};

/// 0 < p <= 1. Throws for the zero martingale (unless lhs-only use is wanted,
/// see hardy_inequality_lhs).
HardyInequality hardy_inequality_check(const Martingale& f, double p);
double hardy_inequality_lhs(const Spectrum& s, double p);

/// t_j = max{|f^(n)| : n in [j w, (j+1) w)}.
std::vector<double> riemann_lebesgue_probe(const GridFunction& f, std::uint64_t window);

// ---------------------------------------------------------------------------
// Trial populations.

/// Per-trial seed derived from (seed, trial).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Random p-atom on a random interval of rank in [1, N].
Atom random_trial_atom(const GroupPtr& g, double p, std::uint64_t seed, std::uint64_t trial);

/// Random p-atom on a random interval of the given rank.
Atom random_atom_of_rank(const GroupPtr& g, std::size_t rank, double p, std::uint64_t seed,
                         std::uint64_t trial);

}  // namespace vilenkin

#endif  // VILENKIN_VERIFY_HPP
