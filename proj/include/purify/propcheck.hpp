#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "purify/term.hpp"

namespace purify {

struct GenConfig {
  int max_depth = 5;
  std::uint64_t seed = 0;
  Signature signature;
  Label label = Label::Src;
  std::optional<Ty> goal_type;
};

/// fetch, tick, put, post (effects) and concat, tag (pure).
Signature default_signature();

/// Type-directed random term of `cfg.goal_type` (random small type if unset)
/// at `cfg.label`. Deterministic in `cfg.seed`. Lambdas carry their type as
/// an ascription so that the result type is always determined. Throws
/// Unsatisfiable when nothing of the goal type fits in the depth.
TermPtr gen_term(const GenConfig& cfg);

struct SuiteFailure {
  std::uint64_t seed = 0;  // sub-seed of the failing trial
  std::string term_pretty;  // after shrinking
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  int passes = 0;
  std::vector<SuiteFailure> failures;

  bool ok() const { return passes == trials; }
  /// `{"v":1,"suite":...,"trials":...,"passes":...,"failures":[...],"seed":...}`
  std::string to_json() const;
};

/// types, semantics, span_work, smart_ctors, relabel, effect_free, laws,
/// normalize, baseline.
const std::vector<std::string>& suite_names();

struct SuiteOptions {
  /// Monad names for semantics, smart_ctors, relabel, laws, normalize and
  /// baseline. Empty means option, state, writer, trace.
  std::vector<std::string> monads;
  /// Failures kept in the report; the count in `passes` is always exact.
  int max_failures = 20;
};

/// Runs `trials` independent trials in parallel; trial i uses a sub-seed
/// derived from (cfg.seed, i). The suite fixes the label it generates at.
/// Throws ConfigError for an unknown suite or monad name.
SuiteReport run_suite(const std::string& name, const GenConfig& cfg, int trials,
                      const SuiteOptions& options = {});

/// Same trials, one after another. Reference for run_suite.
SuiteReport run_suite_serial(const std::string& name, const GenConfig& cfg, int trials,
                             const SuiteOptions& options = {});

}  // namespace purify
