#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heff/bracket.hpp"

namespace heff::examples {

// A registered worked example: a named runner producing rendered output
// lines. Bracketing examples require a fixture world.
struct ExampleEntry {
  std::string name;
  std::string group;  // stable grouping locator (orders the listing)
  bool needs_fixture = false;
  std::function<std::vector<std::string>(const std::optional<SimWorld>&)> run;
};

const std::vector<ExampleEntry>& all();
const ExampleEntry* find(const std::string& name);

struct CheckOutcome {
  bool ok;
  std::vector<std::string> got;
  std::vector<std::string> want;
};

// Compares an example's output against its golden file (<dir>/<name>.txt).
CheckOutcome check(const ExampleEntry& entry, const std::optional<SimWorld>& fixture,
                   const std::string& golden_dir);

std::string default_golden_dir();   // HEFF_GOLDEN_DIR env, then the built-in path
std::string default_fixture_dir();

}  // namespace heff::examples
