// lambda-orders: batch CLI for the integral-model decision procedure and
// maximal-order computations.  JSON in, JSON out; diagnostics on stderr.
// Exit codes: 0 success/yes, 3 criterion-no, 2 invalid input, 1 internal error.

#include "lambda_orders/json_io.hpp"
#include "lambda_orders/selftest.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lo = lambda_orders;
using lo::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitNo = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long prime_bound_from_env() {
  const char* env = std::getenv("LAMBDA_ORDERS_PRIME_BOUND");
  if (!env) return lo::kDefaultPrimeBound;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 2)
    throw std::invalid_argument("LAMBDA_ORDERS_PRIME_BOUND must be an integer >= 2");
  return v;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_analyze(const std::string& file) {
  json j;
  lo::Verdict verdict{false, 1, std::nullopt, std::nullopt};
  try {
    j = json::parse(read_input(file));
  } catch (const std::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return kExitInput;
  }
  try {
    lo::FrobPresentation pres = lo::presentation_from_json(j);
    verdict = lo::check_factors(pres);
  } catch (const lo::frob_error& e) {
    std::cerr << "error: invalid presentation: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed presentation JSON: " << e.what() << "\n";
    return kExitInput;
  }
  if (!verdict.factors) {
    emit(lo::verdict_to_json(verdict));
    return kExitNo;
  }
  // report the minimal divisor level of the constructed table
  auto [level, reduced] = verdict.mset->minimal_level();
  verdict.level = level.value();
  verdict.mset = std::move(reduced);
  emit(lo::verdict_to_json(verdict));
  return kExitOk;
}

int cmd_maximal_order(const std::string& file, long prime_bound) {
  json j;
  try {
    j = json::parse(read_input(file));
  } catch (const std::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return kExitInput;
  }
  std::optional<lo::MSet> s;
  try {
    s = lo::mset_from_json(j);
  } catch (const std::exception& e) {
    std::cerr << "error: invalid M-set: " << e.what() << "\n";
    return kExitInput;
  }
  lo::LambdaOrder order = lo::maximal_order(*s);
  lo::VerifyReport rep = lo::verify_order(order, prime_bound);
  json components = json::array();
  for (const auto& f : lo::component_fields(*s))
    components.push_back(json{{"orbit", f.orbit}, {"conductor", f.conductor},
                              {"degree", f.degree}});
  lo::Rat index(1);
  if (order.lattice.rank > 0)
    index = lo::relative_index(order.lattice, lo::IntLattice::standard(order.lattice.dim));
  emit(json{{"level", s->level()},
            {"size", s->size()},
            {"components", components},
            {"lattice", lo::lattice_to_json(order.lattice)},
            {"index_over_basis_lattice", lo::to_string(index)},
            {"verify", lo::verify_report_to_json(rep)}});
  return rep.pass() ? kExitOk : kExitInternal;
}

int cmd_demo_theorem_b(long r, long prime_bound) {
  lo::LambdaOrder m = lo::maximal_order(lo::MSet::regular(lo::Level(r)));
  lo::IntLattice zmu = lo::zmu_image_lattice(*m.algebra);
  bool equal = m.lattice == zmu;
  lo::VerifyReport rep = lo::verify_order(m, prime_bound);
  std::cout << "maximal order of the regular " << r << "-set\n"
            << "  rank:            " << m.lattice.rank << "\n"
            << "  equals Z[mu_" << r << "]: " << (equal ? "OK" : "MISMATCH") << "\n"
            << "  verification:    " << (rep.pass() ? "all checks pass" : "FAILED")
            << "\n";
  emit(json{{"demo", "theorem-b"}, {"r", r}, {"equal", equal},
            {"lattice", lo::lattice_to_json(m.lattice)},
            {"verify", lo::verify_report_to_json(rep)}});
  return equal && rep.pass() ? kExitOk : kExitInternal;
}

int cmd_demo_group_ring(long p, long prime_bound) {
  if (!lo::is_prime(p) || p > 5) {
    std::cerr << "error: --p must be a prime <= 5\n";
    return kExitInput;
  }
  lo::GroupRingData gr = lo::group_ring_data(p);
  const lo::LambdaAlgebra& alg = *gr.algebra;
  lo::LambdaOrder m = lo::maximal_order(gr.algebra);
  bool psi_ok = alg.apply_psi(p, gr.x) == lo::qvec_scale(lo::Rat(p), alg.unit());
  bool sq_ok = alg.mul(gr.x, gr.x) == lo::qvec_scale(lo::Rat(p), gr.x);
  bool x_in_max = m.lattice.contains(gr.x);
  bool x_in_ring = gr.group_ring.contains(gr.x);
  lo::Int index = lo::lattice_index(gr.group_ring, m.lattice);
  lo::VerifyReport rep = lo::verify_order(m, prime_bound);
  std::cout << "group ring Z[V] for V = (Z/" << p << ")^2\n"
            << "  psi_" << p << "(x) = " << p << ":        " << (psi_ok ? "OK" : "FAIL")
            << "\n"
            << "  x^2 = " << p << " x:         " << (sq_ok ? "OK" : "FAIL") << "\n"
            << "  x in maximal order: " << (x_in_max ? "yes" : "no") << "\n"
            << "  x in group ring:    " << (x_in_ring ? "yes" : "no") << "\n"
            << "  index [max : Z[V]]: " << lo::to_string(index) << "\n";
  emit(json{{"demo", "group-ring"}, {"p", p}, {"psi_identity", psi_ok},
            {"square_identity", sq_ok}, {"x_in_maximal_order", x_in_max},
            {"x_in_group_ring", x_in_ring}, {"index", lo::to_string(index)},
            {"verify", lo::verify_report_to_json(rep)}});
  bool ok = psi_ok && sq_ok && x_in_max && !x_in_ring && index % p == 0 && rep.pass();
  return ok ? kExitOk : kExitInternal;
}

int cmd_demo_counterexample() {
  // the swap action of psi_2 admits no integral model
  std::map<long, std::vector<int>> units{{0, {0, 1}}};
  std::map<long, std::vector<int>> exc{{2, {1, 0}}};
  lo::FrobPresentation pres = lo::FrobPresentation::make(2, 1, units, exc);
  lo::Verdict v = lo::check_factors(pres);
  std::cout << "presentation: two points, psi_2 swaps them, Galois acts trivially\n";
  if (!v.factors && v.witness) {
    std::cout << "  criterion fails at d=" << v.witness->d << ", p=" << v.witness->p
              << ", c_d=" << v.witness->c_d << ": psi_" << v.witness->p
              << " is bijective on dT but does not act like a unit\n";
  }
  json out = lo::verdict_to_json(v);
  out["presentation"] = lo::presentation_to_json(pres);
  emit(out);
  return v.factors ? kExitInternal : kExitOk;
}

int cmd_selftest(bool quick, const std::string& inject_fault, long prime_bound) {
  if (!inject_fault.empty()) {
    if (inject_fault == "cyclotomic") {
      lo::test_corrupt_cyclotomic_cache(6);
    } else {
      std::cerr << "error: unknown fault target: " << inject_fault << "\n";
      return kExitInput;
    }
  }
  lo::AcceptanceOptions opts;
  opts.quick = quick;
  opts.prime_bound = prime_bound;
  auto results = lo::run_acceptance(opts, std::cout);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  std::cout << (all ? "selftest: all criteria pass" : "selftest: FAILURES above") << "\n";
  lo::test_corrupt_cyclotomic_cache(0);
  return all ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations with finite etale Lambda-rings over Q: integral-model "
               "decision (analyze), maximal Lambda-orders (maximal-order), worked "
               "demos and a selftest"};
  app.require_subcommand(1);

  std::string analyze_file;
  auto* analyze = app.add_subcommand("analyze",
                                     "decide whether a presented action factors "
                                     "through Z/r and build the M-set");
  analyze->add_option("file", analyze_file, "presentation JSON ('-' for stdin)")
      ->required();

  std::string order_file;
  auto* maxord = app.add_subcommand("maximal-order",
                                    "compute the maximal Lambda-order of the algebra "
                                    "of an M-set");
  maxord->add_option("file", order_file, "M-set JSON ('-' for stdin)")->required();

  auto* demo = app.add_subcommand("demo", "deterministic walkthroughs");
  std::string demo_name;
  long demo_r = 8, demo_p = 2;
  demo->add_option("name", demo_name, "theorem-b | group-ring | counterexample")
      ->required();
  demo->add_option("--r", demo_r, "level for theorem-b");
  demo->add_option("--p", demo_p, "prime for group-ring");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  bool quick = false;
  std::string inject_fault;
  selftest->add_flag("--quick", quick, "reduced corpus, finishes in a few seconds");
  selftest->add_option("--inject-fault", inject_fault,
                       "corrupt a module table first (testing the selftest itself)");

  CLI11_PARSE(app, argc, argv);

  try {
    long prime_bound = prime_bound_from_env();
    if (*analyze) return cmd_analyze(analyze_file);
    if (*maxord) return cmd_maximal_order(order_file, prime_bound);
    if (*demo) {
      if (demo_name == "theorem-b") {
        if (demo_r < 1 || demo_r > 24) {
          std::cerr << "error: --r must be in 1..24\n";
          return kExitInput;
        }
        return cmd_demo_theorem_b(demo_r, prime_bound);
      }
      if (demo_name == "group-ring") return cmd_demo_group_ring(demo_p, prime_bound);
      if (demo_name == "counterexample") return cmd_demo_counterexample();
      std::cerr << "error: unknown demo: " << demo_name << "\n";
      return kExitInput;
    }
    if (*selftest) return cmd_selftest(quick, inject_fault, prime_bound);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
