#include "shifteq/bimodule.hpp"

#include <doctest.h>

#include <random>

using namespace shifteq;

namespace {

EdgeSet edges(std::initializer_list<std::initializer_list<long long>> rows) {
  return EdgeSet(IntMatrix(rows));
}

// Fills every engaged block with small random rationals.
BimoduleMap random_map(const BasedBimodule& dom, const BasedBimodule& cod,
                       std::mt19937_64& rng) {
  BimoduleMap f(dom, cod);
  std::uniform_int_distribution<long long> num(-2, 2);
  std::uniform_int_distribution<long long> den(1, 2);
  for (std::size_t v = 0; v < dom.sources(); ++v)
    for (std::size_t w = 0; w < dom.targets(); ++w)
      if (f.block(v, w)) {
        RatMatrix& b = f.mutable_block(v, w);
        for (std::size_t i = 0; i < b.rows(); ++i)
          for (std::size_t j = 0; j < b.cols(); ++j)
            b(i, j) = BigRat(num(rng), den(rng));
      }
  return f;
}

EdgeSet random_edges(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long long> entry(0, 2);
  IntMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M(i, j) = entry(rng);
  return EdgeSet(M);
}

bool check_named(const VerifyReport& rep, const std::string& needle, bool pass) {
  for (const RelationCheck& c : rep.checks)
    if (c.name.find(needle) != std::string::npos) return c.pass == pass;
  return false;
}

}  // namespace

TEST_CASE("edge sets") {
  EdgeSet e = edges({{1, 2}, {0, 1}});
  CHECK(e.sources() == 2);
  CHECK(e.targets() == 2);
  CHECK(e == edges({{1, 2}, {0, 1}}));
  CHECK(e != edges({{1, 2}, {1, 1}}));
  CHECK_THROWS_AS(edges({{-1}}), DomainError);
}

TEST_CASE("path bases are lexicographic and complete") {
  EdgeSet fib = edges({{1, 1}, {1, 0}});
  BasedBimodule one = BasedBimodule::of(fib);
  CHECK(one.length() == 1);
  CHECK(one.paths(0, 0).size() == 1);
  CHECK(one.paths(1, 1).empty());

  BasedBimodule two = BasedBimodule::power(fib, 2);
  CHECK(two.dims() == IntMatrix{{2, 1}, {1, 1}});
  const auto& block = two.paths(0, 0);
  REQUIRE(block.size() == 2);
  // Stay at 0 twice, or hop through 1; the stay-path sorts first.
  CHECK(block[0] == BasedBimodule::Path{{0, 0}, {0, 0}});
  CHECK(block[1] == BasedBimodule::Path{{1, 0}, {0, 0}});
  CHECK(two.path_index(0, 0, block[1]) == 1);
  CHECK_THROWS_AS(two.path_index(0, 0, (BasedBimodule::Path{{1, 0}, {1, 0}})),
                  DomainError);
  CHECK_THROWS_AS(two.paths(2, 0), DimensionError);

  // Multiplicities: parallel edges get distinct fiber indices.
  BasedBimodule multi = BasedBimodule::of(edges({{3}}));
  REQUIRE(multi.paths(0, 0).size() == 3);
  CHECK(multi.paths(0, 0)[2] == BasedBimodule::Path{{0, 2}});
}

TEST_CASE("word validation") {
  CHECK_THROWS_AS(BasedBimodule(std::vector<EdgeSet>{}), DomainError);
  CHECK_THROWS_AS(BasedBimodule({edges({{1, 1}}), edges({{1}})}), DimensionError);
  CHECK_THROWS_AS(BasedBimodule::power(edges({{1}}), 0), DomainError);
  CHECK_THROWS_AS(BasedBimodule::power(edges({{1, 1}}), 2), DimensionError);
}

TEST_CASE("tensor concatenates words and multiplies dimensions") {
  std::mt19937_64 rng(20240902);
  for (int trial = 0; trial < 20; ++trial) {
    BasedBimodule a = BasedBimodule::of(random_edges(rng, 2));
    BasedBimodule b = BasedBimodule::of(random_edges(rng, 2));
    BasedBimodule c = BasedBimodule::of(random_edges(rng, 2));
    CHECK(tensor(a, b).dims() == a.dims() * b.dims());
    // Concatenation is strictly associative: both groupings are the same
    // object, not merely isomorphic.
    CHECK(same_word(tensor(tensor(a, b), c), tensor(a, tensor(b, c))));
  }
}

TEST_CASE("maps store one block per populated fiber") {
  EdgeSet fib = edges({{1, 1}, {1, 0}});
  BimoduleMap f(BasedBimodule::of(fib), BasedBimodule::of(fib));
  CHECK(f.block(0, 0) != nullptr);
  CHECK(f.block(1, 1) == nullptr);
  CHECK_THROWS_AS(f.mutable_block(1, 1), DomainError);

  BimoduleMap g(BasedBimodule::of(edges({{2}})), BasedBimodule::of(edges({{2}})));
  CHECK_THROWS_AS(maps_equal(f, g), DimensionError);
}

TEST_CASE("identity and composition") {
  std::mt19937_64 rng(20240903);
  BasedBimodule a = BasedBimodule::of(edges({{2, 1}, {1, 1}}));
  BasedBimodule b = BasedBimodule::of(edges({{1, 2}, {2, 0}}));
  BasedBimodule c = BasedBimodule::of(edges({{1, 1}, {1, 2}}));
  BasedBimodule d = BasedBimodule::of(edges({{2, 2}, {1, 1}}));
  BimoduleMap f = random_map(a, b, rng);
  BimoduleMap g = random_map(b, c, rng);
  BimoduleMap h = random_map(c, d, rng);

  CHECK(maps_equal(compose(identity_map(b), f), f));
  CHECK(maps_equal(compose(f, identity_map(a)), f));
  CHECK(maps_equal(compose(h, compose(g, f)), compose(compose(h, g), f)));
  CHECK_THROWS_AS(compose(f, f), DimensionError);
}

TEST_CASE("tensor of maps is functorial") {
  std::mt19937_64 rng(20240904);
  for (int trial = 0; trial < 8; ++trial) {
    BasedBimodule e1 = BasedBimodule::of(random_edges(rng, 2));
    BasedBimodule f1 = BasedBimodule::of(random_edges(rng, 2));
    BasedBimodule g1 = BasedBimodule::of(random_edges(rng, 2));
    BasedBimodule e2 = BasedBimodule::of(random_edges(rng, 2));
    BasedBimodule f2 = BasedBimodule::of(random_edges(rng, 2));
    BasedBimodule g2 = BasedBimodule::of(random_edges(rng, 2));
    BimoduleMap f = random_map(e1, f1, rng), fp = random_map(f1, g1, rng);
    BimoduleMap g = random_map(e2, f2, rng), gp = random_map(f2, g2, rng);
    CHECK(maps_equal(tensor_map(compose(fp, f), compose(gp, g)),
                     compose(tensor_map(fp, gp), tensor_map(f, g))));
    CHECK(maps_equal(tensor_map(identity_map(e1), identity_map(e2)),
                     identity_map(tensor(e1, e2))));
  }
}

TEST_CASE("lex pairings invert each other") {
  BasedBimodule two_three = tensor(BasedBimodule::of(edges({{2}})),
                                   BasedBimodule::of(edges({{3}})));
  BasedBimodule six = BasedBimodule::of(edges({{6}}));
  REQUIRE(two_three.dims() == six.dims());
  BimoduleMap there = lex_pairing(two_three, six);
  BimoduleMap back = lex_pairing(six, two_three);
  CHECK(maps_equal(compose(back, there), identity_map(two_three)));
  CHECK(maps_equal(compose(there, back), identity_map(six)));

  CHECK_THROWS_AS(lex_pairing(six, BasedBimodule::of(edges({{5}}))), DomainError);
}

TEST_CASE("sigma needs the counting identity") {
  EdgeSet two = edges({{2}});
  EdgeSet line = edges({{1, 1}});
  EdgeSet ones = edges({{1, 1}, {1, 1}});
  CHECK_NOTHROW(build_sigma(two, line, ones));
  CHECK_THROWS_AS(build_sigma(two, edges({{1, 2}}), ones), DomainError);
}

TEST_CASE("module data from a matrix witness is sound") {
  EssentialMatrix two(IntMatrix{{2}});
  EssentialMatrix ones(IntMatrix{{1, 1}, {1, 1}});
  SEWitness w(two, ones, IntMatrix{{1, 1}}, IntMatrix{{1}, {1}}, 1);
  VerifyReport rep = verify_module_se(lex_module_data(w));
  CHECK(rep.ok());
  CHECK(rep.checks.size() == 12);

  EssentialMatrix fib(IntMatrix{{1, 1}, {1, 0}});
  SEWitness self(fib, fib, fib.matrix(), fib.matrix(), 2);
  CHECK(verify_module_se(lex_module_data(self)).ok());
}

TEST_CASE("soundness does not imply alignment") {
  // Conjugating by a vertex swap gives a perfectly valid witness, and its
  // straight-index module data is sound.  But the induced path orders on the
  // two alignment legs interleave differently (tracing the (0,0) block by
  // hand: one leg composes to a basis swap, the other to the identity), so
  // this data is NOT aligned.  Alignment is a strictly stronger property
  // than soundness, and the verifier sees the difference.
  EssentialMatrix fib(IntMatrix{{1, 1}, {1, 0}});
  IntMatrix P{{0, 1}, {1, 0}};
  EssentialMatrix flipped(P.transpose() * fib.matrix() * P);
  SEWitness w(fib, flipped, P, P.transpose() * fib.matrix(), 1);
  REQUIRE(verify_se(w).ok());
  ModuleSEData d = lex_module_data(w);
  CHECK(verify_module_se(d).ok());
  VerifyReport rep = verify_aligned(d);
  CHECK_FALSE(rep.ok());
  CHECK(check_named(rep, "alignment: mismatch at block (", false));
}

TEST_CASE("gutting a structure map is caught by name") {
  EssentialMatrix two(IntMatrix{{2}});
  EssentialMatrix ones(IntMatrix{{1, 1}, {1, 1}});
  SEWitness w(two, ones, IntMatrix{{1, 1}}, IntMatrix{{1}, {1}}, 1);
  ModuleSEData d = lex_module_data(w);
  RatMatrix& blk = d.omega_E.mutable_block(0, 0);
  for (std::size_t j = 0; j < blk.cols(); ++j) blk(0, j) = 0;
  VerifyReport rep = verify_module_se(d);
  CHECK_FALSE(rep.ok());
  CHECK(check_named(rep, "omega_E invertible", false));
  CHECK(check_named(rep, "omega_F invertible", true));
  // Alignment refuses to run on unsound data rather than comparing garbage.
  CHECK(check_named(verify_aligned(d), "alignment not evaluated", false));
}

TEST_CASE("alignment squares") {
  EssentialMatrix two(IntMatrix{{2}});
  EssentialMatrix ones(IntMatrix{{1, 1}, {1, 1}});
  SEWitness w(two, ones, IntMatrix{{1, 1}}, IntMatrix{{1}, {1}}, 1);
  CHECK(verify_aligned(lex_module_data(w)).ok());

  SEWitness self(two, two, IntMatrix{{2}}, IntMatrix{{2}}, 2);
  ModuleSEData d = lex_module_data(self);
  REQUIRE(verify_aligned(d).ok());

  // Twisting omega_E by a transposition keeps it invertible but breaks the
  // square on the A side only, and the report says where.  (The sigmas enter
  // both legs, so they are not usable for a one-sided tamper.)
  RatMatrix& blk = d.omega_E.mutable_block(0, 0);
  REQUIRE(blk.rows() >= 2);
  std::swap(blk(0, 0), blk(1, 0));
  std::swap(blk(0, 1), blk(1, 1));
  REQUIRE(verify_module_se(d).ok());
  VerifyReport rep = verify_aligned(d);
  CHECK_FALSE(rep.ok());
  CHECK(check_named(rep, "E-side alignment: mismatch at block (0,0)", false));
  CHECK(check_named(rep, "F-side", true));
}

TEST_CASE("unital alignment accepts either unital leg") {
  EssentialMatrix two(IntMatrix{{2}});
  EssentialMatrix ones(IntMatrix{{1, 1}, {1, 1}});

  // Forward leg R = (1 1) carries the unit.
  SEWitness w(two, ones, IntMatrix{{1, 1}}, IntMatrix{{1}, {1}}, 1);
  VerifyReport rep = verify_unitally_aligned(lex_module_data(w));
  CHECK(rep.ok());
  CHECK(check_named(rep, "one leg carries unit to unit", true));

  // Here only the backward leg S = (1) does.
  SEWitness skew(two, two, IntMatrix{{2}}, IntMatrix{{1}}, 1);
  REQUIRE(verify_se(skew).ok());
  CHECK(verify_unitally_aligned(lex_module_data(skew)).ok());

  // Doubling both ways: aligned, but no unital leg.
  SEWitness heavy(two, two, IntMatrix{{2}}, IntMatrix{{2}}, 2);
  VerifyReport bad = verify_unitally_aligned(lex_module_data(heavy));
  CHECK_FALSE(bad.ok());
  CHECK(check_named(bad, "one leg carries unit to unit", false));
  CHECK(verify_aligned(lex_module_data(heavy)).ok());
}

TEST_CASE("class-level action of an edge set matches matrix transport") {
  EssentialMatrix two(IntMatrix{{2}});
  EssentialMatrix ones(IntMatrix{{1, 1}, {1, 1}});
  EdgeSet G(IntMatrix{{1, 1}});
  std::vector<DimClass> images = bridging_K0_action(G, two, ones);
  REQUIRE(images.size() == 1);
  CHECK(images[0].v == IntMatrix{{1}, {1}});

  for (std::size_t i = 0; i < two.size(); ++i) {
    IntMatrix e(two.size(), 1);
    e(i, 0) = 1;
    CHECK(dim_equal(images[i],
                    apply_Rt_G(DimClass(two, e, 0), G.counts(), ones)));
  }

  CHECK_THROWS_AS(bridging_K0_action(EdgeSet(IntMatrix{{1}, {1}}), two, ones),
                  DimensionError);
  CHECK_THROWS_AS(bridging_K0_action(EdgeSet(IntMatrix{{1, 2}}), two, ones),
                  DomainError);
}

TEST_CASE("property: class action agrees with transport on sampled intertwiners") {
  std::mt19937_64 rng(20240905);
  std::uniform_int_distribution<long long> pick(0, 2);
  std::uniform_int_distribution<long long> entry(0, 2);
  std::uniform_int_distribution<std::size_t> size_d(1, 3);
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 20; ++trial) {
    const std::size_t n = size_d(rng), p = size_d(rng);
    IntMatrix MA(n, n), MB(p, p);
    std::uniform_int_distribution<std::size_t> ca(0, n - 1), cb(0, p - 1);
    for (std::size_t i = 0; i < n; ++i) {
      bool emits = false;
      for (std::size_t j = 0; j < n; ++j) {
        MA(i, j) = entry(rng);
        if (MA(i, j) > 0) emits = true;
      }
      if (!emits) MA(i, ca(rng)) = 1;
    }
    for (std::size_t i = 0; i < p; ++i) {
      bool emits = false;
      for (std::size_t j = 0; j < p; ++j) {
        MB(i, j) = entry(rng);
        if (MB(i, j) > 0) emits = true;
      }
      if (!emits) MB(i, cb(rng)) = 1;
    }
    EssentialMatrix A(MA), B(MB);
    std::vector<IntMatrix> basis = solve_intertwiners(A, B);
    if (basis.empty()) continue;
    IntMatrix R(n, p);
    for (const IntMatrix& b : basis) R = R + pick(rng) * b;
    if (!R.is_nonnegative()) continue;
    ++tested;
    std::vector<DimClass> images = bridging_K0_action(EdgeSet(R), A, B);
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix e(n, 1);
      e(i, 0) = 1;
      CHECK(dim_equal(images[i], apply_Rt_G(DimClass(A, e, 0), R, B)));
    }
  }
  CHECK(tested >= 8);
}
