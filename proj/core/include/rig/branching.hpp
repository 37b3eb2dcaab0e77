#pragma once

#include <cstddef>
#include <cstdint>

#include "rig/model.hpp"

namespace rig {

/// Right-hand side of the extinction equation,
///   g(x) = prod_i [1 - p_i (1 - (1 - p_i (1 - x))^n)],
/// the type-0 generating function of the (m+1)-type process composed with
/// the attribute layer. Evaluated in log space:
///   inner_i = -expm1(n log1p(-p_i (1 - x))),  g = exp(sum_i log1p(-p_i inner_i)),
/// so that m ~ 1e7 factors close to 1 neither underflow nor lose digits.
/// Requires x in [0, 1]; g(1) == 1 exactly.
double gw_map(const AttributeWeights& w, double x);

struct ExtinctionOptions {
  double tol = 1e-12;
  std::size_t max_iter = 1'000'000;
  double epsilon_c = kDefaultEpsilonC;
};

struct ExtinctionSolution {
  double rho = 1.0;
  std::size_t iterations = 0;
  double residual = 0.0;  // |g(rho) - rho|
  bool converged = true;
  /// c in (1, 1 + epsilon_c]: rho = 1 is reported without iterating.
  bool critical_band = false;
};

/// Least fixed point of gw_map in [0, 1]. For c <= 1 + epsilon_c returns
/// rho = 1 immediately. Otherwise iterates x <- g(x) from 0, which increases
/// monotonically to the least fixed point, and stops once a step is <= tol.
/// Non-convergence is reported through `converged`, not thrown. Throws
/// std::invalid_argument for tol <= 0 or max_iter == 0, and std::logic_error
/// if an iterate ever decreases.
ExtinctionSolution extinction_probability(const AttributeWeights& w,
                                          const ExtinctionOptions& options = {});

/// Root in (0, 1) of exp(c (x - 1)) = x, by bisection. Requires c > 1.
double solve_zeta(double c);

/// Root in (0, 1) of exp(mp (exp(np (x - 1)) - 1)) = x, by bisection.
/// Requires np * mp > 1.
double solve_zeta_star(double np, double mp);

enum class UniformRegime { small_m, large_m, linear };

const char* to_string(UniformRegime regime) noexcept;

/// Closed-form extinction probabilities for uniform p = sqrt(c / (m n)):
///   small_m (m = o(n)):  1 - (1 - zeta) m p
///   large_m (n = o(m)):  zeta
///   linear  (m ~ n):     zeta*
/// The regime is chosen by the caller. Throws std::domain_error for c <= 1,
/// and for small_m when m p >= 1.
double uniform_extinction(UniformRegime regime, std::uint64_t n, std::uint64_t m, double c);

enum class GwStatus { extinct, survived_to_cap };

struct GwOutcome {
  GwStatus status = GwStatus::extinct;
  std::uint64_t total_type0_progeny = 0;  // root included
  std::uint64_t generations = 0;          // type-0 -> type-0 cycles run
};

/// Simulates the (m+1)-type process from one type-0 individual. A type-0
/// individual has a type-i child with probability p_i; a type-i individual has
/// Binomial(n, p_i) type-0 children. Individuals are aggregated as counts per
/// weight group, so a generation costs O(#distinct p) draws. Stops when the
/// type-0 generation is empty, reaches population_cap, or after
/// generation_cap cycles. Throws std::invalid_argument for zero caps.
GwOutcome simulate_gw(const AttributeWeights& w, std::uint64_t seed,
                      std::uint64_t population_cap, std::uint64_t generation_cap);

struct GwEstimate {
  std::uint64_t runs = 0;
  std::uint64_t extinct = 0;
  double frequency = 0.0;
  double standard_error = 0.0;
};

/// Runs simulate_gw with seeds derive_seed(seed, r), r = 0..runs-1, spread
/// over `workers` threads. Deterministic for any worker count.
GwEstimate estimate_extinction(const AttributeWeights& w, std::uint64_t runs,
                               std::uint64_t seed, std::uint64_t population_cap,
                               std::uint64_t generation_cap, unsigned workers = 1);

/// Checks the domination hypotheses between two weight vectors on the same n:
/// (i) outside a set S, q matches entries of p one-to-one; (ii) every
/// unmatched p entry is >= every entry of q in S; (iii) equal criticality
/// within 1e-10 relative.
bool domination_hypotheses_hold(const AttributeWeights& p, const AttributeWeights& q);

struct ExtinctionComparison {
  bool hypotheses_hold = false;
  double rho_p = 1.0;
  double rho_q = 1.0;
  bool ordering_respected = false;  // rho_p >= rho_q - ordering_tol
};

/// Throws std::invalid_argument when p and q have different n.
ExtinctionComparison compare_extinction(const AttributeWeights& p, const AttributeWeights& q,
                                        const ExtinctionOptions& options = {},
                                        double ordering_tol = 1e-9);

}  // namespace rig
