#include "heff/examples.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "heff/exc.hpp"
#include "heff/latent.hpp"
#include "heff/parallel.hpp"
#include "heff/scoped.hpp"
#include "heff/writer.hpp"

namespace heff::examples {

namespace {

std::vector<std::string> lines(std::string s) { return {std::move(s)}; }

Computation show_int(const Value& v) {
  return pure(from_string(std::to_string(v.as<std::int64_t>())));
}

Computation prog_exc(std::int64_t x) {
  Computation inner = x >= 0 ? pure(from_int(x)) : exc::throw_();
  return exc::catch_(inner, [](const VOpt& mb) {
    if (!mb.v) return pure(from_string("Too small"));
    return show_int(*mb.v);
  });
}

Computation once_example(bool with_once) {
  Computation head = nd::or_(pure(from_int(1)), pure(from_int(5)));
  Computation scoped = with_once ? scope::once(head) : head;
  return bind(scoped, [](const Value& x) {
    return nd::or_(pure(x), pure(from_int(x.as<std::int64_t>() + 1)));
  });
}

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

std::vector<std::string> run_bracket_demo(const std::optional<SimWorld>& fixture) {
  if (!fixture) throw Error("bracket examples need a fixture world (--fixture)");
  Computation m = seq(
      bind(tty::readF("foo.txt"), [](const Value& s) { return tty::prnt(s.as<std::string>()); }),
      first_two());
  return transcript_lines(h_bracket(m, *fixture));
}

std::vector<std::string> run_lazy(bool eager) {
  Computation prog = lam::app(lam::abs_(pure(Value::of(Vnum{3}))),
                              seq(state::put(Value::of(Vnum{42})), pure(Value::of(Vnum{5}))));
  LazyResult r = eager ? h_eager(prog, Value::of(Vnum{0}), list(VList{}), ThunkStore{})
                       : h_lazy(prog, Value::of(Vnum{0}), list(VList{}), ThunkStore{});
  return lines("(" + render_v(r.state) + "," + render_store(r.store) + "," + render_v(r.result) + ")");
}

std::vector<ExampleEntry> build() {
  std::vector<ExampleEntry> out;

  out.push_back({"exc-pos", "core/exceptions", false, [](const auto&) {
                   VOpt r = exc::h_exc(prog_exc(5));
                   return lines(render(r.v ? some(*r.v) : none()));
                 }});
  out.push_back({"exc-neg", "core/exceptions", false, [](const auto&) {
                   VOpt r = exc::h_exc(prog_exc(-5));
                   return lines(render(r.v ? some(*r.v) : none()));
                 }});

  out.push_back({"state-basic", "algebraic/state", false, [](const auto&) {
                   // get >>= \s -> put (s+1) >> return s, from 0
                   Computation m = bind(state::get(), [](const Value& s) {
                     return seq(state::put(from_int(s.as<std::int64_t>() + 1)), pure(s));
                   });
                   VPair r = run_state(m, from_int(0));
                   return lines(render(pair(r.first, r.second)));
                 }});
  out.push_back({"state-incr", "algebraic/state", false, [](const auto&) {
                   // do x <- get; put (x+1); return 5, from 0
                   Computation m = bind(state::get(), [](const Value& x) {
                     return seq(state::put(from_int(x.as<std::int64_t>() + 1)),
                                pure(from_int(5)));
                   });
                   VPair r = run_state(m, from_int(0));
                   return lines(render(pair(r.first, r.second)));
                 }});
  out.push_back({"nd-flat", "algebraic/nondeterminism", false, [](const auto&) {
                   Computation m = nd::or_(
                       pure(from_int(1)),
                       nd::or_(nd::or_(pure(from_int(2)), pure(from_int(3))), nd::fail_()));
                   return lines(render(Value::of(run_nd(m))));
                 }});

  out.push_back({"once", "scoped/once", false, [](const auto&) {
                   return lines(render(Value::of(run_once(once_example(true)))));
                 }});
  out.push_back({"no-once", "scoped/once", false, [](const auto&) {
                   return lines(render(Value::of(run_once(once_example(false)))));
                 }});
  out.push_back({"censor", "scoped/censor", false, [](const auto&) {
                   const Monoid& w = text_concat();
                   Computation reset_c = scope::censor_scoped(
                       [](const Value&) { return from_string(""); }, pure(unit()));
                   Computation m = seq(wr::tell(from_string("post")),
                                       seq(reset_c, wr::tell(from_string("pre"))));
                   VPair r = run_censor(m, w);
                   return lines(render(pair(r.first, r.second)));
                 }});

  out.push_back({"accum-for", "parallel/accumulation", false, [](const auto&) {
                   std::vector<Computation> iters;
                   for (std::int64_t n : {1, 2, 10, 4}) iters.push_back(acc::accum(from_int(n)));
                   VPair r = run_accum(par::for_(iters), int_sum());
                   return lines(render(r.first));
                 }});

  out.push_back({"write-reset", "writer/reset", false, [](const auto&) {
                   const Monoid& w = text_concat();
                   Computation m = seq(wr::tell(from_string("post")),
                                       seq(wr::reset(w), wr::tell(from_string("pre"))));
                   VPair r = run_write(m, w);
                   return lines(render(pair(r.first, r.second)));
                 }});

  out.push_back({"lazy", "latent/call-by-need", false,
                 [](const auto&) { return run_lazy(false); }});
  out.push_back({"eager", "latent/call-by-value", false,
                 [](const auto&) { return run_lazy(true); }});

  out.push_back({"bracket-ok", "bracketing/teletype", true, run_bracket_demo});
  out.push_back({"bracket-eof", "bracketing/teletype", true, run_bracket_demo});
  return out;
}

}  // namespace

const std::vector<ExampleEntry>& all() {
  static const std::vector<ExampleEntry> entries = build();
  return entries;
}

const ExampleEntry* find(const std::string& name) {
  for (const ExampleEntry& e : all())
    if (e.name == name) return &e;
  return nullptr;
}

CheckOutcome check(const ExampleEntry& entry, const std::optional<SimWorld>& fixture,
                   const std::string& golden_dir) {
  CheckOutcome out;
  out.got = entry.run(fixture);
  std::ifstream in(golden_dir + "/" + entry.name + ".txt");
  if (!in) throw Error("no golden file for '" + entry.name + "' under " + golden_dir);
  std::string line;
  while (std::getline(in, line)) out.want.push_back(line);
  out.ok = out.got == out.want;
  return out;
}

std::string default_golden_dir() {
  if (const char* env = std::getenv("HEFF_GOLDEN_DIR")) return env;
#ifdef HEFF_GOLDEN_DIR
  return HEFF_GOLDEN_DIR;
#else
  return "golden";
#endif
}

std::string default_fixture_dir() {
  if (const char* env = std::getenv("HEFF_FIXTURE_DIR")) return env;
#ifdef HEFF_FIXTURE_DIR
  return HEFF_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

}  // namespace heff::examples
