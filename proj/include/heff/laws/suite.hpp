#pragma once

#include <cstdint>
#include <vector>

#include "heff/laws/equality.hpp"
#include "heff/laws/generators.hpp"
#include "heff/laws/reference.hpp"

namespace heff::laws {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_witness;
};

struct SuiteSummary {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool ok() const;
  std::size_t total_cases() const;
  std::size_t total_failures() const;
};

// Roundtrips for all six instances: iso2 . iso1 on generated specialized
// trees and iso1 . iso2 on generated generic trees, n of each per direction.
SuiteSummary run_roundtrips(std::uint64_t seed, std::size_t n);

// The three handler-equivalence theorems (fold_Alg/h_Alg, fold_Sc/h_Sc with
// the same algebra in both positions, fold_Par/h_Par), n generated inputs
// each, plus the worked pinned cases.
SuiteSummary run_handler_equivalences(std::uint64_t seed, std::size_t n);

// Kernel laws: monad laws observed under three handlers, algebraicity for
// inner-slot-free nodes, the higher-order functor laws for every registered
// kind, and coproduct case-split/injection roundtrips.
SuiteSummary run_kernel_laws(std::uint64_t seed, std::size_t n);

// Semantic properties: release-exactly-once, memoization force counts,
// nondeterminism leaf order, writer log homomorphism.
SuiteSummary run_semantic_properties(std::uint64_t seed);

// Deliberately corrupted clauses must be caught by the suites above.
SuiteSummary run_mutation_checks(std::uint64_t seed);

SuiteSummary run_all(std::uint64_t seed, std::size_t n);

std::string summary_to_json(const SuiteSummary& s);

// Single-tree roundtrip check with a witness (first mismatching subtree).
struct RoundtripReport {
  bool passed;
  std::string witness;
};
RoundtripReport check_roundtrip(Instance inst, const Computation& generic_tree);

}  // namespace heff::laws
