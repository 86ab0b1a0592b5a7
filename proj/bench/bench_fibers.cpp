#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "fibermovie/fiber.hpp"

using namespace fibermovie;

namespace {

template <typename Fn>
double seconds(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int samples = argc > 1 ? std::atoi(argv[1]) : 256;
  const std::vector<std::string> words = {
      "1 1 1",
      "-1 -1 -2 3 -1 3 -2",
      "1 -2 3 -4 5 1 -2 3 -4 5 1 -2 3 -4 5",
      "1 2 3 4 5 1 2 3 4 5 1 2 3 4 5 1 2 3 4 5",
  };
  std::printf("threads %d, samples %d\n", omp_get_max_threads(), samples);
  std::printf("%-44s %10s %10s %8s %s\n", "word", "serial_s", "omp_s", "speedup", "same");
  for (const auto& text : words) {
    const Movie m = build_movie(parse_braid_word(text));
    FiberReport serial, parallel;
    const double ts = seconds([&] { serial = fiber_report_serial(m, samples); });
    const double tp = seconds([&] { parallel = fiber_report(m, samples); });
    const bool same = serial.samples == parallel.samples && serial.consistent == parallel.consistent;
    std::printf("%-44s %10.4f %10.4f %8.2f %s\n", text.c_str(), ts, tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
    if (!same) return 1;
  }
  return 0;
}
