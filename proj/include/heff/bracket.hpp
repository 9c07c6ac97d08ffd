#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heff/algebraic.hpp"

namespace heff {

// --- Teletype (algebraic) -----------------------------------------------
// data Teletype a = HGetChar Handle (Char -> a) | Print String a
//                 | ReadFile FilePath (String -> a) | OpenFile FilePath IOMode (Handle -> a)

struct HGetCharOp final : AlgOp {
  HGetCharOp(std::int64_t h, ValueFn k) : h(h), k(std::move(k)) {}
  std::string_view name() const override { return "teletype.hgetchar"; }
  AlgOpPtr map(const ValueFn& f) const override;
  std::int64_t h;
  ValueFn k;
};

struct PrintOp final : AlgOp {
  PrintOp(std::string s, Value k) : s(std::move(s)), k(std::move(k)) {}
  std::string_view name() const override { return "teletype.print"; }
  AlgOpPtr map(const ValueFn& f) const override;
  std::string s;
  Value k;
};

struct ReadFileOp final : AlgOp {
  ReadFileOp(std::string path, ValueFn k) : path(std::move(path)), k(std::move(k)) {}
  std::string_view name() const override { return "teletype.readfile"; }
  AlgOpPtr map(const ValueFn& f) const override;
  std::string path;
  ValueFn k;
};

struct OpenFileOp final : AlgOp {
  OpenFileOp(std::string path, std::string mode, ValueFn k)
      : path(std::move(path)), mode(std::move(mode)), k(std::move(k)) {}
  std::string_view name() const override { return "teletype.openfile"; }
  AlgOpPtr map(const ValueFn& f) const override;
  std::string path;
  std::string mode;
  ValueFn k;
};

namespace tty {
Computation hGetC(std::int64_t handle);                      // char result
Computation prnt(const std::string& s);                      // appends one transcript line
Computation readF(const std::string& path);                  // whole contents, cursor-independent
Computation openF(const std::string& path, const std::string& mode);  // handle result
}  // namespace tty

// --- K^Res ----------------------------------------------------------------
// Bracket (f (f (), f a)): an inner computation producing a (release, use)
// pair; the node's result positions live in the use side's leaves.
class KResNode : public Op {
public:
  explicit KResNode(Value body) : body_(std::move(body)) {}

  std::string_view kind() const override { return "res"; }
  std::string describe() const override { return "res.bracket"; }

  OpPtr map_continuation(const ValueFn& f) const override;
  OpPtr map_inner(const ValueFn& t) const override;

  const Value& body() const { return body_; }

private:
  Value body_;
};

namespace res {
// brckt body: body acquires and yields (release, use); release runs exactly
// once after use, whether use completed or raised, after which a raised
// exception resumes propagating.
Computation brckt(const Computation& body);
}  // namespace res

// --- Simulated world --------------------------------------------------------

struct SimWorld {
  std::map<std::string, std::string> files;
  struct OpenHandle {
    std::string path;
    std::size_t cursor = 0;
  };
  std::map<std::int64_t, OpenHandle> handles;
  std::int64_t next_handle = 0;
  std::vector<std::string> transcript;
  std::optional<std::string> raised;  // empty: running

  static SimWorld with_files(std::map<std::string, std::string> files);
};

// Fixture format: a JSON object mapping file paths to string contents.
SimWorld world_from_json(const std::string& json_text);

struct BracketRun {
  SimWorld world;
  std::optional<std::string> exception;
  Value value;  // meaningful iff no exception
};

// h_Bracket over Teletype + Bracket into the simulated world.
BracketRun h_bracket(const Computation& m, const SimWorld& w0);

// Transcript lines plus, when raised, a final "***Exception: ..." line.
std::vector<std::string> transcript_lines(const BracketRun& run);

}  // namespace heff
