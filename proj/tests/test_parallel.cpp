#include <doctest.h>

#include <random>

#include "heff/parallel.hpp"
#include "heff/writer.hpp"

using namespace heff;

namespace {
const Monoid& S = int_sum();

Computation accum_sum(std::int64_t n) { return acc::accum(from_int(n)); }
}  // namespace

TEST_CASE("parallel accumulation: summing a list") {
  // for (fmap (accum . Sum) [1,2,10,4]) ==> accumulated 17
  std::vector<Computation> iters;
  for (std::int64_t n : {1, 2, 10, 4}) iters.push_back(accum_sum(n));
  VPair out = run_accum(par::for_(iters), S);
  REQUIRE(render(out.first) == "17");
  REQUIRE(out.second.as<VList>().size() == 4);
}

TEST_CASE("parallel: generator pairs eps with the value") {
  VPair out = run_accum(pure(from_string("x")), S);
  REQUIRE(deep_equal(out.first, from_int(0)));
  REQUIRE(deep_equal(out.second, from_string("x")));
}

TEST_CASE("sequential accumulation without for") {
  VPair out = run_accum(seq(accum_sum(3), accum_sum(4)), S);
  REQUIRE(deep_equal(out.first, from_int(7)));
}

TEST_CASE("for over an empty collection applies the continuation to []") {
  VPair out = run_accum(par::for_({}), S);
  REQUIRE(deep_equal(out.first, from_int(0)));
  REQUIRE(out.second.as<VList>().empty());
}

TEST_CASE("for of pure branches accumulates eps and keeps order") {
  std::vector<Computation> iters = {pure(from_int(1)), pure(from_int(2))};
  VPair out = run_accum(par::for_(iters), S);
  REQUIRE(deep_equal(out.first, from_int(0)));
  REQUIRE(render(out.second) == "[1,2]");
}

TEST_CASE("singleton law: for [m] behaves like m up to collection") {
  Computation m = seq(accum_sum(5), pure(from_int(9)));
  VPair direct = run_accum(m, S);
  VPair forred = run_accum(par::for_({m}), S);
  REQUIRE(deep_equal(direct.first, forred.first));
  const VList& xs = forred.second.as<VList>();
  REQUIRE(xs.size() == 1);
  REQUIRE(deep_equal(xs[0], direct.second));
}

namespace {

// A random program over accum/for, compiled both to a computation and to a
// sequential oracle threading one accumulator.
struct ParProg {
  // op 0: accum(n); op 1: for of subprograms; op 2: pure value
  int tag;
  std::int64_t n = 0;
  std::vector<ParProg> branches;
};

ParProg gen_prog(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> d(0, depth <= 0 ? 1 : 2);
  std::uniform_int_distribution<std::int64_t> num(0, 9);
  int t = d(rng);
  if (t == 2) {
    std::uniform_int_distribution<int> w(0, 2);
    ParProg p{1, 0, {}};
    int width = w(rng);
    for (int i = 0; i < width; ++i) p.branches.push_back(gen_prog(rng, depth - 1));
    return p;
  }
  if (t == 0) return ParProg{0, num(rng), {}};
  return ParProg{2, num(rng), {}};
}

Computation compile(const ParProg& p) {
  switch (p.tag) {
    case 0: return seq(acc::accum(from_int(p.n)), pure(from_int(p.n)));
    case 2: return pure(from_int(p.n));
    default: {
      std::vector<Computation> iters;
      for (const ParProg& b : p.branches) iters.push_back(compile(b));
      return par::for_(iters);
    }
  }
}

// Sequential oracle: one threaded accumulator, branches run left to right.
std::int64_t oracle(const ParProg& p, std::int64_t& acc) {
  switch (p.tag) {
    case 0:
      acc += p.n;
      return p.n;
    case 2:
      return p.n;
    default: {
      for (const ParProg& b : p.branches) oracle(b, acc);
      return 0;
    }
  }
}

}  // namespace

TEST_CASE("branch isolation matches a sequential one-accumulator oracle") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    ParProg p = gen_prog(rng, 3);
    std::int64_t expected = 0;
    oracle(p, expected);
    VPair out = run_accum(compile(p), S);
    REQUIRE(out.first.as<std::int64_t>() == expected);
  }
}

TEST_CASE("optional data-parallel branch evaluation is observationally identical") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 50; ++i) {
    ParProg p = gen_prog(rng, 3);
    VPair seq_out = run_accum(compile(p), S, /*parallel_branches=*/false);
    VPair par_out = run_accum(compile(p), S, /*parallel_branches=*/true);
    REQUIRE(deep_equal(seq_out.first, par_out.first));
    REQUIRE(deep_equal(seq_out.second, par_out.second));
  }
}

TEST_CASE("accum forwards unknown algebraic effects") {
  Computation m = seq(wr::tell(from_string("t")), seq(accum_sum(2), pure(from_int(1))));
  Computation residual = h_accum(m, S);
  VPair out = run_write(residual, text_concat());
  // ((acc, value), log)
  const VPair& av = out.first.as<VPair>();
  REQUIRE(deep_equal(av.first, from_int(2)));
  REQUIRE(deep_equal(av.second, from_int(1)));
  REQUIRE(deep_equal(out.second, from_string("t")));
}
