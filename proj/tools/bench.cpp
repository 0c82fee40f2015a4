// Benchmark of the enumeration kernels: the OpenMP-parallel path against the
// serial reference.  Both paths must return identical results; the serial
// implementation is the one the tests trust.

#include "lambda_orders/orders.hpp"
#include "lambda_orders/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lo = lambda_orders;

namespace {

double time_once(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-42s %10.3fs %10.3fs %7.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool heavy = argc > 1 && std::string(argv[1]) == "--heavy";
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled, parallel path runs serially\n");
#endif
  std::printf("%-42s %11s %11s %8s\n", "kernel", "serial", "parallel", "speedup");

  {
    long r = heavy ? 8 : 6;
    lo::LambdaOrder m = lo::maximal_order(lo::MSet::regular(lo::Level(r)));
    lo::CertificateOptions serial_opts, parallel_opts;
    serial_opts.mode = lo::RunMode::serial;
    parallel_opts.mode = lo::RunMode::parallel;
    lo::CertificateResult rs, rp;
    double ts = time_once([&] { rs = lo::maximality_certificate(m, 2, serial_opts); });
    double tp = time_once([&] { rp = lo::maximality_certificate(m, 2, parallel_opts); });
    bool same = rs.maximal == rp.maximal && rs.witness == rp.witness;
    std::string name = "certificate regular(" + std::to_string(r) + ") q=2";
    report(name.c_str(), ts, tp, same);
  }
  {
    lo::LambdaOrder m = lo::maximal_order(lo::MSet::regular(lo::Level(6)));
    lo::CertificateOptions serial_opts, parallel_opts;
    serial_opts.mode = lo::RunMode::serial;
    parallel_opts.mode = lo::RunMode::parallel;
    lo::CertificateResult rs, rp;
    double ts = time_once([&] { rs = lo::maximality_certificate(m, 3, serial_opts); });
    double tp = time_once([&] { rp = lo::maximality_certificate(m, 3, parallel_opts); });
    bool same = rs.maximal == rp.maximal && rs.witness == rp.witness;
    report("certificate regular(6) q=3", ts, tp, same);
  }
  {
    // the swap counterexample: every level up to the bound is refuted
    std::map<long, std::vector<int>> units{{0, {0, 1}}};
    std::map<long, std::vector<int>> exc{{2, {1, 0}}};
    lo::FrobPresentation pres = lo::FrobPresentation::make(2, 1, units, exc);
    long r_max = heavy ? 720 : 240;
    lo::BruteForceOptions so, po;
    so.mode = lo::RunMode::serial;
    po.mode = lo::RunMode::parallel;
    std::optional<std::pair<long, lo::MSet>> os, op;
    double ts = time_once([&] { os = lo::brute_force_factor(pres, r_max, so); });
    double tp = time_once([&] { op = lo::brute_force_factor(pres, r_max, po); });
    bool same = os.has_value() == op.has_value();
    std::string name = "brute-force sweep r<=" + std::to_string(r_max);
    report(name.c_str(), ts, tp, same);
  }
  return 0;
}
