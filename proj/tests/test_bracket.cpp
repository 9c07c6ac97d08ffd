#include <doctest.h>

#include <random>

#include "heff/bracket.hpp"

using namespace heff;

namespace {

// firstTwo = brckt (do h <- openF "foo.txt" ReadMode
//                      return (prnt "released",
//                              do x <- hGetC h; y <- hGetC h; prnt (show (x, y))))
Computation first_two() {
  return res::brckt(bind(tty::openF("foo.txt", "ReadMode"), [](const Value& h) {
    std::int64_t handle = h.as<std::int64_t>();
    Computation use = bind(tty::hGetC(handle), [handle](const Value& x) {
      return bind(tty::hGetC(handle), [x](const Value& y) {
        return tty::prnt(render(pair(x, y)));
      });
    });
    return pure(pair(Value::of(tty::prnt("released")), Value::of(use)));
  }));
}

Computation demo() {
  // readF "foo.txt" >>= prnt >> firstTwo
  return seq(bind(tty::readF("foo.txt"), [](const Value& s) { return tty::prnt(s.as<std::string>()); }),
             first_two());
}

SimWorld fixture(const std::string& contents) {
  return SimWorld::with_files({{"foo.txt", contents}});
}

}  // namespace

TEST_CASE("bracket: enough characters, release still runs") {
  BracketRun run = h_bracket(demo(), fixture("HELLO, WORLD!"));
  std::vector<std::string> expect = {"HELLO, WORLD!", "('H','E')", "released"};
  REQUIRE(transcript_lines(run) == expect);
  REQUIRE(!run.exception);
  REQUIRE(!run.world.raised);
}

TEST_CASE("bracket: end of file raises after release") {
  BracketRun run = h_bracket(demo(), fixture("H"));
  std::vector<std::string> expect = {"H", "released",
                                     "***Exception: foo.txt hGetChar end of file"};
  REQUIRE(transcript_lines(run) == expect);
  REQUIRE(run.exception.has_value());
  REQUIRE(*run.exception == "foo.txt hGetChar end of file");
}

TEST_CASE("bracket with no exception path returns the use value") {
  Computation m = res::brckt(pure(pair(Value::of(tty::prnt("r")), Value::of(pure(from_int(7))))));
  BracketRun run = h_bracket(m, SimWorld{});
  REQUIRE(!run.exception);
  REQUIRE(deep_equal(run.value, from_int(7)));
  REQUIRE(run.world.transcript == std::vector<std::string>{"r"});
}

TEST_CASE("print alone appends one transcript line") {
  BracketRun run = h_bracket(tty::prnt("x"), SimWorld{});
  REQUIRE(run.world.transcript == std::vector<std::string>{"x"});
}

TEST_CASE("missing files and invalid handles raise") {
  BracketRun r1 = h_bracket(tty::readF("nope.txt"), SimWorld{});
  REQUIRE(*r1.exception == "file not found");
  BracketRun r2 = h_bracket(tty::openF("nope.txt", "ReadMode"), SimWorld{});
  REQUIRE(*r2.exception == "file not found");
  BracketRun r3 = h_bracket(tty::hGetC(4), SimWorld{});
  REQUIRE(*r3.exception == "invalid handle");
}

TEST_CASE("exception during acquisition skips the release") {
  Computation m = res::brckt(seq(tty::readF("missing"),
                                 pure(pair(Value::of(tty::prnt("rel")), Value::of(pure(unit()))))));
  BracketRun run = h_bracket(m, SimWorld{});
  REQUIRE(*run.exception == "file not found");
  REQUIRE(run.world.transcript.empty());
}

TEST_CASE("readF is a whole-contents read independent of handle cursors") {
  SimWorld w = fixture("abc");
  Computation m = bind(tty::openF("foo.txt", "ReadMode"), [](const Value& h) {
    std::int64_t handle = h.as<std::int64_t>();
    return seq(tty::hGetC(handle), bind(tty::readF("foo.txt"), [](const Value& s) {
                 return tty::prnt(s.as<std::string>());
               }));
  });
  BracketRun run = h_bracket(m, w);
  REQUIRE(run.world.transcript == std::vector<std::string>{"abc"});
}

TEST_CASE("cursor is nondecreasing across a run") {
  SimWorld w = fixture("abcd");
  Computation m = bind(tty::openF("foo.txt", "ReadMode"), [](const Value& h) {
    std::int64_t handle = h.as<std::int64_t>();
    return seq(tty::hGetC(handle), seq(tty::hGetC(handle), tty::hGetC(handle)));
  });
  BracketRun run = h_bracket(m, w);
  REQUIRE(run.world.handles.at(0).cursor == 3);
}

namespace {

// Generated bracket programs with unique release markers, plus a direct
// oracle interpreter; used for the release-exactly-once property.
struct BrProg {
  enum Kind { Prnt, GetC, Seq, Br } kind;
  std::string text;                 // Prnt
  int reads = 0;                    // GetC: how many chars to read
  std::vector<BrProg> children;     // Seq / Br (children[0] = use for Br)
  std::string marker;               // Br release marker
};

BrProg gen_prog(std::mt19937_64& rng, int depth, int& marker_id) {
  std::uniform_int_distribution<int> d(0, depth <= 0 ? 1 : 3);
  switch (d(rng)) {
    case 0: return BrProg{BrProg::Prnt, "p" + std::to_string(marker_id++), 0, {}, ""};
    case 1: {
      std::uniform_int_distribution<int> r(1, 3);
      return BrProg{BrProg::GetC, "", r(rng), {}, ""};
    }
    case 2: {
      BrProg s{BrProg::Seq, "", 0, {}, ""};
      std::uniform_int_distribution<int> w(1, 3);
      int n = w(rng);
      for (int i = 0; i < n; ++i) s.children.push_back(gen_prog(rng, depth - 1, marker_id));
      return s;
    }
    default: {
      BrProg b{BrProg::Br, "", 0, {}, "rel" + std::to_string(marker_id++)};
      b.children.push_back(gen_prog(rng, depth - 1, marker_id));
      return b;
    }
  }
}

Computation compile(const BrProg& p, std::int64_t handle) {
  switch (p.kind) {
    case BrProg::Prnt: return tty::prnt(p.text);
    case BrProg::GetC: {
      Computation m = pure(unit());
      for (int i = 0; i < p.reads; ++i) m = seq(tty::hGetC(handle), m);
      return m;
    }
    case BrProg::Seq: {
      Computation m = pure(unit());
      for (auto it = p.children.rbegin(); it != p.children.rend(); ++it) m = seq(compile(*it, handle), m);
      return m;
    }
    default:
      return res::brckt(pure(pair(Value::of(tty::prnt(p.marker)),
                                  Value::of(compile(p.children[0], handle)))));
  }
}

// Direct oracle; returns false when an exception escapes. A release fires
// once its use and the continuation up to the enclosing bracket boundary have
// finished (or raised): sequencing grafts the continuation into the use side,
// so releases nest like scope exits.
bool eval_scope(std::vector<const BrProg*> items, std::size_t& cursor, std::size_t len,
                std::vector<std::string>& out) {
  for (std::size_t idx = 0; idx < items.size(); ++idx) {
    const BrProg& p = *items[idx];
    switch (p.kind) {
      case BrProg::Prnt:
        out.push_back(p.text);
        break;
      case BrProg::GetC:
        for (int i = 0; i < p.reads; ++i) {
          if (cursor >= len) return false;
          ++cursor;
        }
        break;
      case BrProg::Seq: {
        std::vector<const BrProg*> spliced;
        for (const BrProg& c : p.children) spliced.push_back(&c);
        spliced.insert(spliced.end(), items.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                       items.end());
        return eval_scope(std::move(spliced), cursor, len, out);
      }
      case BrProg::Br: {
        bool ok = eval_scope({&p.children[0]}, cursor, len, out);
        if (!ok) {
          out.push_back(p.marker);
          return false;
        }
        std::vector<const BrProg*> rest(items.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                                        items.end());
        bool rest_ok = eval_scope(std::move(rest), cursor, len, out);
        out.push_back(p.marker);
        return rest_ok;
      }
    }
  }
  return true;
}

bool oracle(const BrProg& p, std::size_t& cursor, std::size_t len, std::vector<std::string>& out) {
  return eval_scope({&p}, cursor, len, out);
}

}  // namespace

TEST_CASE("release runs exactly once per entered bracket, raising or not") {
  std::mt19937_64 rng(20250809);
  for (int i = 0; i < 300; ++i) {
    int marker_id = 0;
    BrProg p = gen_prog(rng, 3, marker_id);
    std::uniform_int_distribution<int> flen(0, 5);
    std::string contents(static_cast<std::size_t>(flen(rng)), 'z');

    SimWorld w = SimWorld::with_files({{"f", contents}});
    Computation m = bind(tty::openF("f", "ReadMode"), [&p](const Value& h) {
      return compile(p, h.as<std::int64_t>());
    });
    BracketRun run = h_bracket(m, w);

    std::vector<std::string> expect;
    std::size_t cursor = 0;
    bool ok = oracle(p, cursor, contents.size(), expect);
    REQUIRE(run.world.transcript == expect);
    REQUIRE(run.exception.has_value() == !ok);
    if (run.exception) REQUIRE(*run.exception == "f hGetChar end of file");

    // Release-exactly-once, independent of the oracle: every entered
    // bracket's marker appears exactly once in the real transcript.
    for (const std::string& line : expect) {
      if (line.rfind("rel", 0) != 0) continue;
      REQUIRE(std::count(run.world.transcript.begin(), run.world.transcript.end(), line) == 1);
    }
  }
}
