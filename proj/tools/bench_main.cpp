// Compares the serial reference sweep against the OpenMP kernel on the same
// inputs and checks that both produce identical results.

#include <chrono>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "apery/engine.hpp"
#include "apery/modular.hpp"
#include "apery/report.hpp"

using namespace apery;

namespace {

double run_once(const std::string& suite, SweepConfig cfg, const BernoulliTable& table,
                const AperySums& sums, std::string* canonical) {
  const auto t0 = std::chrono::steady_clock::now();
  auto results = run_suite(suite, cfg, table, sums);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (canonical != nullptr) *canonical = canonical_lines(std::move(results));
  return dt;
}

}  // namespace

int main(int argc, char** argv) {
  std::string suite = "all";
  std::string primes_spec = "5..97";
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 2) threads = 2;
  int repeat = 3;

  CLI::App app{"benchmark: serial sweep vs OpenMP sweep"};
  app.add_option("--suite", suite)->capture_default_str();
  app.add_option("--primes", primes_spec, "inclusive range LO..HI")->capture_default_str();
  app.add_option("-j,--parallelism", threads)->capture_default_str();
  app.add_option("--repeat", repeat)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const auto dots = primes_spec.find("..");
  if (dots == std::string::npos) {
    std::cerr << "expected LO..HI\n";
    return 2;
  }
  SweepConfig cfg;
  cfg.primes = primes_in(std::stoull(primes_spec.substr(0, dots)),
                         std::stoull(primes_spec.substr(dots + 2)));
  if (cfg.primes.empty()) {
    std::cerr << "no primes in range\n";
    return 2;
  }

  const auto ids = suite_checks(suite);
  const BernoulliTable table(required_bernoulli_depth(ids, cfg));
  const AperySums sums = AperySums::build(required_apery_depth(ids, cfg));

  std::cout << "suite " << suite << ", " << cfg.primes.size() << " primes up to "
            << cfg.primes.back() << ", " << repeat << " repetitions\n";

  std::string serial_canon, parallel_canon;
  double serial_best = 0, parallel_best = 0;
  for (int r = 0; r < repeat; ++r) {
    cfg.parallelism = 1;
    const double s = run_once(suite, cfg, table, sums, r == 0 ? &serial_canon : nullptr);
    cfg.parallelism = threads;
    const double p = run_once(suite, cfg, table, sums, r == 0 ? &parallel_canon : nullptr);
    if (r == 0 || s < serial_best) serial_best = s;
    if (r == 0 || p < parallel_best) parallel_best = p;
  }

  if (serial_canon != parallel_canon) {
    std::cerr << "MISMATCH: serial and parallel sweeps disagree\n";
    return 1;
  }

  std::cout << "serial    : " << serial_best << " s\n";
  std::cout << "parallel " << threads << ": " << parallel_best << " s\n";
  std::cout << "speedup   : " << serial_best / parallel_best << "x\n";
  std::cout << "results identical across both paths\n";
  return 0;
}
