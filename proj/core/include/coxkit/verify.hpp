#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxkit/coxeter.hpp"

// Exhaustive desk-scale property suites. Every structural law the library
// relies on is swept here: length and descent laws, Bruhat order axioms and
// its subword oracle, the double-coset decomposition and its extreme
// representatives, and the symmetric-group dominance criteria. The CLI
// `verify` command and the acceptance suite are thin wrappers over these.

namespace cox::verify {

/// Deliberate corruption hooks, for exercising the failure path.
enum class Fault {
  none,
  corrupt_max_rep,  // substitute the minimal rep where the maximal is due
};

struct Options {
  /// Sample (I, J) pairs and element pairs/triples instead of sweeping all.
  bool sampled = false;
  int ij_samples = 200;
  int pair_samples = 20000;
  int triple_samples = 20000;
  std::uint64_t seed = 987654321;
  Fault fault = Fault::none;
};

struct PropertyResult {
  std::string property;
  std::string system;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string note;  // first counterexample, empty when passing

  bool pass() const { return failures == 0; }
};

/// Core, Bruhat and parabolic suites for one system. Heavier sweeps gate
/// themselves on |W| so that desk-scale systems stay fast.
std::vector<PropertyResult> check_system(const CoxeterSystem& sys, const Options& opts = {});

/// Symmetric-group suites at their fixed degrees (dominance vs the generic
/// engine at n = 4, 5; block-matrix laws up to n = 6).
std::vector<PropertyResult> check_symmetric_groups(const Options& opts = {});

struct ScopeReport {
  std::vector<PropertyResult> results;
  std::uint64_t total_checked = 0;
  std::uint64_t total_failures = 0;

  bool pass() const { return total_failures == 0; }
};

/// Runs check_system over the given systems in order, then the symmetric
/// group block when requested. Result order is deterministic.
ScopeReport run_scope(const std::vector<CoxeterSystem>& systems, bool include_symgroup,
                      const Options& opts = {});

/// "A2", "A3", "B3", "I2(5)", "I2(7)", "A4", "H3".
const std::vector<std::string>& default_scope_names();

}  // namespace cox::verify
