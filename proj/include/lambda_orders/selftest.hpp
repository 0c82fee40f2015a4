#ifndef LAMBDA_ORDERS_SELFTEST_HPP
#define LAMBDA_ORDERS_SELFTEST_HPP

#include "lambda_orders/mset.hpp"
#include "lambda_orders/orders.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lambda_orders {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

struct AcceptanceOptions {
  bool quick = false;
  long prime_bound = kDefaultPrimeBound;
  RunMode mode = RunMode::parallel;
};

// deterministic family of small M-sets (size <= 8, level <= 12) used by the
// round-trip, order-invariant and zero-image checks
std::vector<MSet> acceptance_corpus(bool quick);

// runs every acceptance criterion, printing one PASS/FAIL line per criterion
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            std::ostream& out);

}  // namespace lambda_orders

#endif
