// Times the serial reference against the OpenMP kernel on the same
// enumeration ranges and reports the speedup.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "braidforms/enumerate.hpp"

using namespace braidforms;

namespace {

double run(VerifyReport (*fn)(const EnumSpec&), const EnumSpec& spec, VerifyReport& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = fn(spec);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench(const char* name, EnumSpec spec) {
  VerifyReport a, b;
  double ts = run(run_verify_serial, spec, a);
#ifdef _OPENMP
  spec.workers = omp_get_num_procs();
#else
  spec.workers = 1;
#endif
  double tp = run(run_verify_parallel, spec, b);
  bool same = a.words == b.words && a.spherical == b.spherical &&
              a.non_positive == b.non_positive && a.contradiction == b.contradiction;
  std::printf("%-28s serial %8.3fs   openmp(%d) %8.3fs   speedup %.2fx   %s\n", name, ts,
              spec.workers, tp, ts / tp, same ? "reports agree" : "REPORTS DIFFER");
}

}  // namespace

int main() {
  {
    EnumSpec spec;
    spec.strands_lo = 2;
    spec.strands_hi = 3;
    spec.len_hi = 10;
    spec.mode = VerifyMode::Full;
    bench("classify+witness 2..3 <=10", spec);
  }
  {
    EnumSpec spec;
    spec.strands_lo = 4;
    spec.strands_hi = 4;
    spec.len_hi = 10;
    spec.mode = VerifyMode::NoWitness;
    bench("classify 4 <=10", spec);
  }
  {
    EnumSpec spec;
    spec.strands_lo = 4;
    spec.strands_hi = 5;
    spec.len_hi = 11;
    spec.mode = VerifyMode::Min4Scan;
    bench("min4 scan 4..5 <=11", spec);
  }
  return 0;
}
