#ifndef LAMBDA_ORDERS_FROB_ACTION_HPP
#define LAMBDA_ORDERS_FROB_ACTION_HPP

#include "lambda_orders/mset.hpp"
#include "lambda_orders/numeric.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambda_orders {

class frob_error : public std::runtime_error {
 public:
  enum class Kind {
    bad_presentation,
    not_group_action,
    not_commuting,
    missing_ramified_prime,
    inconsistent_presentation,
  };
  frob_error(Kind k, std::string msg) : std::runtime_error(std::move(msg)), kind(k) {}
  Kind kind;
};

// Finite presentation of a continuous action of Zhat^* x N' on a finite set:
// the Galois side acts through (Z/c)^* via unit_action, finitely many
// exceptional primes act by explicit maps, and every other prime p acts by
// unit_action(p mod c).  Every prime dividing c must be exceptional, so the
// default rule is well defined.
class FrobPresentation {
 public:
  static FrobPresentation make(long set_size, long c,
                               std::map<long, std::vector<int>> unit_action,
                               std::map<long, std::vector<int>> exceptional);

  long size() const { return n_; }
  long c() const { return c_; }
  const std::map<long, std::vector<int>>& unit_action() const { return unit_action_; }
  const std::map<long, std::vector<int>>& exceptional() const { return exceptional_; }

  // action of a single prime
  const std::vector<int>& prime_action(long p) const;
  bool is_exceptional(long p) const { return exceptional_.count(p) > 0; }

 private:
  FrobPresentation() = default;
  long n_ = 0;
  long c_ = 1;
  std::map<long, std::vector<int>> unit_action_;
  std::map<long, std::vector<int>> exceptional_;
};

// multiplicative extension: the action of n in N'
std::vector<int> psi(const FrobPresentation& pres, long n);

struct StabilizationData {
  std::map<long, int> a_p;              // exceptional prime -> smallest a with
                                        // p^a T = p^{a+1} T
  long r0 = 1;                          // product of p^{a_p}
  std::map<long, std::vector<int>> dt;  // divisor d of r0 -> the subset dT, sorted
  std::map<long, long> c_d;             // divisor d of r0 -> conductor of dT
};

StabilizationData stabilization(const FrobPresentation& pres);

struct Witness {
  long d;
  long p;
  long c_d;
  int point;  // -1 when the gcd clause fails, else a point of dT
};

struct Verdict {
  bool factors;
  long level = 1;    // the r of the Yes branch
  std::optional<MSet> mset;
  std::optional<Witness> witness;
  // condition (i) of the criterion holds by the shape of the presentation:
  // all primes outside the finite exceptional list act through units
  static constexpr bool primes_cofinite_automatic = true;
};

Verdict check_factors(const FrobPresentation& pres);

// table of the factored action at level r; callers obtain r from
// check_factors.  Throws frob_error if the table fails validation.
MSet build_mset(const FrobPresentation& pres, long r);

enum class RunMode { serial, parallel };

struct BruteForceOptions {
  long sweep_bound = 0;  // integers 1..B tested per level; 0 = automatic
  RunMode mode = RunMode::serial;
};

// independent oracle: exhaustively tests each level r <= r_max by bucketing
// the action of every integer in the sweep by its residue; returns the
// smallest level through which the presentation factors, with its table
std::optional<std::pair<long, MSet>> brute_force_factor(const FrobPresentation& pres,
                                                        long r_max,
                                                        BruteForceOptions opts = {});

}  // namespace lambda_orders

#endif
