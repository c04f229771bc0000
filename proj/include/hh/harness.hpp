// Randomized testing support: seeded presentation generation for four target
// classes, a registry of checkable properties with pass / fail / report-only
// verdicts, and a fuzz driver that aggregates many seeded runs.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hh/presentation.hpp"

namespace hh {

enum class TargetClass { quadratic, quadratic_s3, string_class, gentle };

std::string target_class_name(TargetClass c);
std::optional<TargetClass> parse_target_class(const std::string& s);

struct RandomSpec {
  TargetClass target = TargetClass::string_class;
  int vertices = 6;
  int arrows = 8;       // exact arrow count; generation fails if unplaceable
  double density = 0.5; // probability weight steering relation choices
  std::uint64_t seed = 0;
};

// splitmix64 stream; the whole artifact's only randomness source.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  int below(int n);  // uniform in [0, n)
  bool chance(double p);

 private:
  std::uint64_t state_;
};

struct GenerationExhausted : std::runtime_error {
  RandomSpec spec;
  explicit GenerationExhausted(const RandomSpec& s);
};

// Deterministic in spec.seed; the result's ClassReport satisfies the target
// class. Throws GenerationExhausted when the retry bound (10000) is hit.
Presentation random_presentation(const RandomSpec& spec);

struct Finding {
  // hard findings fail the verdict; report findings downgrade it to
  // report-only; info notes never change it.
  enum class Kind { hard, report, info };
  Kind kind = Kind::info;
  std::string message;
};

struct VerdictReport {
  enum class Verdict { pass, fail, report_only };
  std::string property;
  std::string digest;
  Verdict verdict = Verdict::pass;
  std::vector<Finding> findings;
  std::string counterexample;  // canonical DSL of the presentation when failing
  std::uint64_t seed = 0;      // filled by fuzz
  std::string replay;          // filled by fuzz

  bool failed() const { return verdict == Verdict::fail; }
};

std::string verdict_name(VerdictReport::Verdict v);
const std::vector<std::string>& known_properties();

// Runs one property suite. Throws std::invalid_argument for unknown ids.
VerdictReport verify(const Presentation& p, const std::string& property);

struct FuzzResult {
  std::string property;
  RandomSpec spec;
  int count = 0;
  int passes = 0;
  int failures = 0;
  int reports = 0;
  std::vector<VerdictReport> findings;  // non-pass verdicts, in iteration order
  std::optional<std::string> counterexample_file;
};

// Runs `count` seeded iterations, each on a fresh presentation whose size is
// drawn up to the spec's budgets. Iterations are independent; with jobs > 1
// they run in parallel and the aggregate is identical to the serial run.
// When emit_dir is nonempty the first hard counterexample is written there
// as a replayable DSL file.
FuzzResult fuzz(const RandomSpec& spec, const std::string& property, int count, int jobs = 1,
                const std::string& emit_dir = "");

// Built-in example presentations, keyed by short name.
const std::vector<std::pair<std::string, std::string>>& fixtures();
const std::string& fixture(const std::string& name);  // throws if unknown

}  // namespace hh
