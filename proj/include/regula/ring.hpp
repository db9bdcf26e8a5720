#ifndef REGULA_RING_HPP
#define REGULA_RING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regula/ratfunc.hpp"

namespace regula {

/// The shipped stability rings A, each embedded in Q(var).
enum class RingId {
  PolyRing,         // Q[x]
  NoLinearSubring,  // Q[x^2, x^3]: polynomials with zero x^1 coefficient
  StableProper,     // proper rational functions with Hurwitz denominator
};

/// Problem-file names: "poly", "no-linear", "stable-proper".
std::string_view ring_name(RingId ring);
std::optional<RingId> parse_ring(std::string_view name);
std::string default_variable(RingId ring);

/// Degree cap for the bounded linear-algebra searches used where a ring has
/// no complete decision procedure.
struct DegreeBudget {
  int degree = 8;
};

inline constexpr int kDefaultDegreeBudget = 8;
/// Budgets tried in turn when the CLI is asked to escalate.
inline constexpr int kBudgetLadder[] = {8, 16, 32};

enum class SearchStatus {
  Found,
  Unsolvable,           // proven to have no solution
  UnknownWithinBudget,  // nothing found, nothing proven
};

template <class T>
struct Search {
  SearchStatus status = SearchStatus::UnknownWithinBudget;
  std::optional<T> value;

  static Search found(T v) { return {SearchStatus::Found, std::move(v)}; }
  static Search unsolvable() { return {SearchStatus::Unsolvable, std::nullopt}; }
  static Search unknown() { return {SearchStatus::UnknownWithinBudget, std::nullopt}; }

  bool ok() const noexcept { return status == SearchStatus::Found; }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

/// gamma/theta with both components in A and theta != 0.
struct FractionRep {
  RatFunc gamma;
  RatFunc theta;
  RingId ring = RingId::PolyRing;

  /// Validating constructor; throws PreconditionError on unstable parts.
  static FractionRep make(RingId ring, RatFunc gamma, RatFunc theta);
  RatFunc value() const { return gamma / theta; }
};

struct BezoutSolution {
  RatFunc alpha;
  RatFunc beta;
};

struct CoprimenessVerdict {
  enum class Status { Coprime, NotCoprime, WeaklyCoprime, NotWeaklyCoprime, UnknownUpToBound };

  Status status = Status::UnknownUpToBound;
  std::optional<RatFunc> alpha;  // Coprime: alpha*gamma - beta*theta = 1
  std::optional<RatFunc> beta;
  std::optional<RatFunc> k;      // NotWeaklyCoprime: k*gamma, k*theta in A, k not in A
  int bound = 0;
};

std::string_view to_string(CoprimenessVerdict::Status status);

/// Per-ring oracle. New rings plug in by implementing this interface.
class StabilityRing {
 public:
  virtual ~StabilityRing() = default;

  virtual RingId id() const = 0;
  virtual bool is_stable(const RatFunc& f) const = 0;
  /// f and 1/f both in A.
  virtual bool is_unit(const RatFunc& f) const;
  virtual FractionRep to_fraction(const RatFunc& f) const = 0;
  /// alpha*u - beta*v = w with alpha, beta in A.
  virtual Search<BezoutSolution> bezout(const RatFunc& u, const RatFunc& v, const RatFunc& w,
                                        DegreeBudget budget) const = 0;
  virtual CoprimenessVerdict weakly_coprime(const FractionRep& rep, DegreeBudget budget) const = 0;
  /// Whether bezout() never reports UnknownWithinBudget.
  virtual bool bezout_is_complete() const = 0;
  /// Simple stable elements of increasing "size", used by the solvability
  /// grid and by random sampling: index 0 is always the constant 1.
  virtual std::vector<RatFunc> basis(int max_degree, const std::string& var) const = 0;
};

const StabilityRing& ring_oracle(RingId ring);

bool is_stable(RingId ring, const RatFunc& f);

/// True iff every root of d lies in the open left half-plane. Decided by the
/// sign test followed by a fraction-free Routh array; a zero pivot counts as
/// not Hurwitz. Nonzero constants are Hurwitz. Throws on d = 0.
bool routh_hurwitz(const Poly& d);

FractionRep to_ring_fraction(RingId ring, const RatFunc& f);

Search<BezoutSolution> bezout_solve(RingId ring, const RatFunc& u, const RatFunc& v, const RatFunc& w,
                                    DegreeBudget budget = {});

CoprimenessVerdict is_coprime_factorization(const FractionRep& rep, DegreeBudget budget = {});
CoprimenessVerdict is_weakly_coprime(const FractionRep& rep, DegreeBudget budget = {});

/// Re-checks the witnesses carried by a verdict against `rep`. Verdicts
/// without witnesses (NotCoprime, WeaklyCoprime, UnknownUpToBound) hold
/// vacuously.
bool reverify(const FractionRep& rep, const CoprimenessVerdict& verdict);

}  // namespace regula

#endif  // REGULA_RING_HPP
