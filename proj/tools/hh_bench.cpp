// Compares the serial reference paths (jobs = 1) against the OpenMP-parallel
// ones on the same workloads and checks that the aggregates are identical.

#include <chrono>
#include <iostream>

#include "hh/cohomology.hpp"
#include "hh/gerstenhaber.hpp"
#include "hh/harness.hpp"
#include "hh/parallel.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool same_table(const hh::ProductTable& a, const hh::ProductTable& b) {
  if (a.entries.size() != b.entries.size() || a.trivial != b.trivial) return false;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].value.coordinates != b.entries[i].value.coordinates) return false;
  }
  return true;
}

std::string fuzz_digest(const hh::FuzzResult& r) {
  std::string s = std::to_string(r.passes) + "/" + std::to_string(r.failures) + "/" +
                  std::to_string(r.reports);
  for (const auto& v : r.findings) s += " " + v.digest + ":" + hh::verdict_name(v.verdict);
  return s;
}

}  // namespace

int main() {
  int threads = hh::hardware_jobs();
  std::cout << "parallel jobs: " << threads << "\n";

  {
    hh::RandomSpec spec;
    spec.target = hh::TargetClass::string_class;
    spec.vertices = 8;
    spec.arrows = 12;
    spec.seed = 2024;
    const int count = 60;

    auto t0 = Clock::now();
    hh::FuzzResult serial = hh::fuzz(spec, "cup-trivial", count, 1);
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    hh::FuzzResult parallel = hh::fuzz(spec, "cup-trivial", count, threads);
    double parallel_ms = ms_since(t0);

    bool same = fuzz_digest(serial) == fuzz_digest(parallel);
    std::cout << "fuzz cup-trivial x" << count << ": serial " << serial_ms << " ms, parallel "
              << parallel_ms << " ms, speedup " << serial_ms / parallel_ms
              << ", identical: " << (same ? "yes" : "NO") << "\n";
    if (!same) return 1;
  }

  {
    hh::Presentation p = hh::parse_presentation(hh::fixture("E5"));
    hh::Algebra alg(p);
    hh::MinimalComplex cx(alg);
    hh::Cohomology H(cx);

    auto t0 = Clock::now();
    hh::ProductTable serial = hh::lie_table(H, hh::Variant::literal, 1);
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    hh::ProductTable parallel = hh::lie_table(H, hh::Variant::literal, threads);
    double parallel_ms = ms_since(t0);

    bool same = same_table(serial, parallel);
    std::cout << "lie_table(E5): serial " << serial_ms << " ms, parallel " << parallel_ms
              << " ms, speedup " << serial_ms / parallel_ms
              << ", identical: " << (same ? "yes" : "NO") << "\n";
    if (!same) return 1;
  }
  return 0;
}
