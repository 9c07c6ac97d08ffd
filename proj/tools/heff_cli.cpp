// heff: replay the worked effect-handler examples and drive the law suite.
//
//   heff list [--json]
//   heff run <name> [--fixture <path>] [--check] [--golden-dir <dir>]
//   heff laws [--seed N] [--n N] [--json]

#include <pthread.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "heff/examples.hpp"
#include "heff/laws/suite.hpp"

namespace {

int cmd_list(bool as_json) {
  using heff::examples::all;
  if (as_json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : all()) j.push_back({{"name", e.name}, {"section", e.group}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 0;
  for (const auto& e : all()) width = std::max(width, e.name.size());
  for (const auto& e : all()) {
    std::cout << e.name << std::string(width - e.name.size() + 2, ' ') << e.group;
    if (e.needs_fixture) std::cout << "  (needs --fixture)";
    std::cout << "\n";
  }
  return 0;
}

int cmd_run(const std::string& name, const std::string& fixture_path, bool check,
            std::string golden_dir) {
  const auto* entry = heff::examples::find(name);
  if (!entry) {
    std::cerr << "unknown example '" << name << "' (see `heff list`)\n";
    return 2;
  }
  std::optional<heff::SimWorld> fixture;
  if (!fixture_path.empty()) {
    std::ifstream in(fixture_path);
    if (!in) {
      std::cerr << "cannot read fixture " << fixture_path << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    fixture = heff::world_from_json(buf.str());
  }
  if (entry->needs_fixture && !fixture) {
    std::cerr << "example '" << name << "' needs --fixture <path>\n";
    return 2;
  }
  if (golden_dir.empty()) golden_dir = heff::examples::default_golden_dir();
  if (!check) {
    for (const std::string& line : entry->run(fixture)) std::cout << line << "\n";
    return 0;
  }
  heff::examples::CheckOutcome out = heff::examples::check(*entry, fixture, golden_dir);
  for (const std::string& line : out.got) std::cout << line << "\n";
  if (out.ok) return 0;
  std::cerr << "golden mismatch for '" << name << "':\n";
  std::size_t rows = std::max(out.got.size(), out.want.size());
  for (std::size_t i = 0; i < rows; ++i) {
    std::string g = i < out.got.size() ? out.got[i] : "<missing>";
    std::string w = i < out.want.size() ? out.want[i] : "<missing>";
    if (g != w) std::cerr << "  line " << i + 1 << ": got  " << g << "\n  line " << i + 1
                          << ": want " << w << "\n";
  }
  return 1;
}

int cmd_laws(std::uint64_t seed, std::size_t n, bool as_json) {
  heff::laws::SuiteSummary s = heff::laws::run_all(seed, n);
  if (as_json) {
    std::cout << heff::laws::summary_to_json(s) << "\n";
  } else {
    for (const auto& c : s.checks) {
      std::cout << (c.failures == 0 ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
      if (c.failures) std::cout << " first failure: " << c.first_witness;
      std::cout << "\n";
    }
    std::cout << (s.ok() ? "OK" : "FAILED") << " " << s.total_cases() << " cases, "
              << s.total_failures() << " failures (seed " << s.seed << ")\n";
  }
  return s.ok() ? 0 : 1;
}

struct CliWork {
  int argc;
  char** argv;
  int rc = 1;
};

void* run_cli(void* arg) {
  auto* work = static_cast<CliWork*>(arg);
  CLI::App app{"higher-order effects & handlers: worked examples and law suite"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list the registered examples");
  bool list_json = false;
  list->add_flag("--json", list_json, "emit a JSON array of {name, section}");

  auto* run = app.add_subcommand("run", "run one example (optionally against its golden file)");
  std::string name, fixture_path, golden_dir;
  bool check = false;
  run->add_option("name", name, "example name")->required();
  run->add_option("--fixture", fixture_path, "fixture JSON (path -> file contents)");
  run->add_flag("--check", check, "compare against the golden file; exit 1 on mismatch");
  run->add_option("--golden-dir", golden_dir, "golden file directory");

  auto* laws = app.add_subcommand("laws", "run the law suite");
  std::uint64_t seed = 20250810;
  std::size_t n = 1000;
  bool laws_json = false;
  laws->add_option("--seed", seed, "generator seed");
  laws->add_option("--n", n, "trees per roundtrip direction");
  laws->add_flag("--json", laws_json, "emit a JSON summary");

  try {
    app.parse(work->argc, work->argv);
  } catch (const CLI::ParseError& e) {
    work->rc = app.exit(e);
    return nullptr;
  }

  try {
    if (list->parsed()) work->rc = cmd_list(list_json);
    if (run->parsed()) work->rc = cmd_run(name, fixture_path, check, golden_dir);
    if (laws->parsed()) work->rc = cmd_laws(seed, n, laws_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    work->rc = 1;
  }
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  // A generous stack keeps the documented recursion limit reachable before
  // the machine stack runs out.
  CliWork work{argc, argv, 1};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, 512u * 1024u * 1024u);
  pthread_t thread;
  if (pthread_create(&thread, &attr, run_cli, &work) != 0) {
    run_cli(&work);
    return work.rc;
  }
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  return work.rc;
}
