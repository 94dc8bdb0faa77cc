// Compares the serial reference path of the lemma harness against the
// OpenMP path and checks the reports agree byte for byte.
#include <chrono>
#include <cstdio>
#include <string>

#include "eexact/diagrams.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace eexact;

namespace {

double run(LemmaKind kind, int trials, std::uint64_t seed, bool parallel, std::string& text) {
  auto t0 = std::chrono::steady_clock::now();
  LemmaReport r = check_lemma(kind, trials, seed, GabrielTopology::goldie(), parallel);
  auto t1 = std::chrono::steady_clock::now();
  text = lemma_report_text(r);
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int trials = argc > 1 ? std::atoi(argv[1]) : 100;
  std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 42;
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not available, both runs serial\n");
#endif
  bool all_equal = true;
  for (LemmaKind kind : {LemmaKind::Four, LemmaKind::Five, LemmaKind::Grid, LemmaKind::FourF}) {
    std::string serial_text, parallel_text;
    double ts = run(kind, trials, seed, false, serial_text);
    double tp = run(kind, trials, seed, true, parallel_text);
    bool equal = serial_text == parallel_text;
    all_equal = all_equal && equal;
    std::printf("%-7s trials=%d serial=%.3fs parallel=%.3fs speedup=%.2fx reports_equal=%s\n",
                lemma_kind_name(kind), trials, ts, tp, ts / (tp > 0 ? tp : 1e-9),
                equal ? "yes" : "NO");
  }
  return all_equal ? 0 : 1;
}
