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

// Martingales on the truncated group, maximal functions, L_p and H_p
// quasinorms, p-atoms and atomic synthesis.

#ifndef VILENKIN_HARDY_HPP
#define VILENKIN_HARDY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vilenkin/transform.hpp"

namespace vilenkin {

/// E_n f: the average of f over I_n(x), i.e. over all ranks sharing the
/// residue mod M_n. Equals S_{M_n} f.
GridFunction condition(const GridFunction& f, std::size_t n);

/// A martingale f^(0), ..., f^(N). Only the finest level is stored; the
/// coarser ones are E_n of it, so consistency holds by construction.
class Martingale {
 public:
  explicit Martingale(GridFunction finest) : finest_(std::move(finest)) {}

  const Group& group() const noexcept { return finest_.group(); }
  const GroupPtr& group_ptr() const noexcept { return finest_.group_ptr(); }
  std::size_t depth() const noexcept { return finest_.group().depth(); }
  const GridFunction& finest() const noexcept { return finest_; }
  GridFunction level(std::size_t n) const { return condition(finest_, n); }

 private:
  GridFunction finest_;
};

/// f*(x) = max_{0<=n<=N} |f^(n)(x)| (imaginary part zero).
GridFunction maximal(const Martingale& f);

/// ((1/M_N) sum_x |g(x)|^p)^{1/p}. Throws for p <= 0.
double lp_quasinorm(const GridFunction& g, double p);

/// ||f||_{H_p} = ||f*||_p.
double hp_quasinorm(const Martingale& f, double p);

/// A p-atom: supported in interval, zero mean there, sup-norm at most
/// mu(interval)^{-1/p}.
struct Atom {
  double p = 1.0;
  Interval interval;
  GridFunction values;
};

/// mu(I)^{-1/p} = M_rank^{1/p}.
double atom_bound(const Group& g, const Atom& a);

/// Random p-atom on interval, deterministic in seed. Values are multiples of
/// a power of two so that every sum over a sub-interval, and hence the mean,
/// is exact; conditional expectations of the atom then vanish exactly where
/// they should. A rank-0 interval yields the zero atom.
Atom make_atom(const GroupPtr& g, const Interval& interval, double p, std::uint64_t seed);

struct AtomDiagnostics {
  bool support_ok = true;
  bool mean_ok = true;
  bool sup_ok = true;
  double mean = 0.0;
  double sup = 0.0;
  double bound = 0.0;

  bool valid() const noexcept { return support_ok && mean_ok && sup_ok; }
  explicit operator bool() const noexcept { return valid(); }
  std::string describe() const;
};

/// Checks support (exact), |mean| <= 1e-12 bound and sup <= bound (1 + 1e-12).
AtomDiagnostics validate_atom(const Atom& a);

struct AtomicDecomposition {
  double p = 1.0;
  std::vector<double> weights;
  std::vector<Atom> atoms;
};

/// f^(n) = sum_k mu_k S_{M_n} a_k. Every atom is N-measurable, so the finest
/// level is sum_k mu_k a_k and the rest follow by conditioning.
Martingale synthesize(const AtomicDecomposition& d);

/// "k,mu_k,interval_rank,base_rank" rows.
std::string decomposition_csv(const Group& g, const AtomicDecomposition& d);

/// lim_k of int f^(k) conj(psi_i); stable once M_k > i, so this is the
/// coefficient of the finest level. Throws for i >= M_N.
Complex martingale_coefficient(const Martingale& f, std::uint64_t i);

/// int f^(k) conj(psi_i) at a given level k (for stabilization checks).
Complex level_coefficient(const Martingale& f, std::size_t k, std::uint64_t i);

}  // namespace vilenkin

#endif  // VILENKIN_HARDY_HPP
