#ifndef MONOGEN_FACTORINT_HPP_
#define MONOGEN_FACTORINT_HPP_

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "monogen/intpoly.hpp"

namespace monogen {

inline constexpr std::uint64_t kDefaultSeed = 0x6d6f6e6f67656eULL;

/* How hard factor() and squarefree_status() try before giving up.
 *
 * trial_bound    every prime q <= trial_bound is divided out exactly
 * rho_iterations Brent-rho steps allowed per composite piece
 * seed           drives rho starting points and the random Miller-Rabin
 *                bases used above the deterministic range
 */
struct Budget {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = 10'000'000;
  std::uint64_t seed = kDefaultSeed;

  friend bool operator==(const Budget&, const Budget&) = default;
};

enum class Effort { kQuick, kDefault, kDeep };

Budget budget_for(Effort effort, std::uint64_t seed = kDefaultSeed);
Effort parse_effort(std::string_view name);
std::string_view to_string(Effort effort);

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Every probable prime that is found goes into `factors`; what remains in
// `cofactor` is a product of pieces that Miller-Rabin proved composite but
// rho could not split within the budget.
enum class CofactorStatus { kUnit, kComposite };

std::string_view to_string(CofactorStatus status);

struct Factorization {
  std::vector<PrimePower> factors;  // ascending by prime
  Integer cofactor = 1;
  CofactorStatus cofactor_status = CofactorStatus::kUnit;

  bool complete() const { return cofactor_status == CofactorStatus::kUnit; }
  // prod prime^exponent * cofactor; equals |x| for factor(x, ...).
  Integer product() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Trial division to budget.trial_bound, then Brent-rho with Miller-Rabin on
// the pieces. Sign is ignored. Deterministic for a fixed budget.
Factorization factor(const Integer& x, const Budget& budget = {});

// Deterministic Miller-Rabin (bases 2..41) below 3.3e24; above that,
// base 2 plus 40 rounds with bases drawn from `seed`. Requires x >= 2.
bool is_probable_prime(const Integer& x, std::uint64_t seed = kDefaultSeed);

struct Squarefree {
  friend bool operator==(const Squarefree&, const Squarefree&) = default;
};
// witness^2 divides the input. The witness is prime unless the only square
// found was an unsplittable composite piece appearing twice.
struct NotSquarefree {
  Integer witness;
  friend bool operator==(const NotSquarefree&, const NotSquarefree&) = default;
};
// No square of a prime <= searched_bound divides the input, but the
// remaining cofactor could not be decided.
struct SquarefreeUnknown {
  std::uint64_t searched_bound = 0;
  friend bool operator==(const SquarefreeUnknown&, const SquarefreeUnknown&) = default;
};

using SquarefreeStatus = std::variant<Squarefree, NotSquarefree, SquarefreeUnknown>;

SquarefreeStatus squarefree_status(const Integer& x, const Budget& budget = {});
// Same decision from an existing factorization of x.
SquarefreeStatus squarefree_status(const Factorization& fac, const Budget& budget);

}  // namespace monogen

#endif  // MONOGEN_FACTORINT_HPP_
