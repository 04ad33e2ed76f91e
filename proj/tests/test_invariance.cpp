#include "tropctl/invariance.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "support/test_support.hpp"

using namespace tropctl;
using namespace tropctl::testing;

namespace {

Semimodule module(std::initializer_list<Vec> cols, std::size_t dim,
                  ScalarDomain domain = ScalarDomain::full) {
  GeneratorSet g{dim, {}};
  for (const Vec& c : cols) g.cols.push_back(c);
  return Semimodule(std::move(g), domain);
}

Semimodule lower_halfplane(std::int64_t k) {
  return module({vec({0, -k}), vece({0, kEps})}, 2);
}

// Swap dynamics with the diagonal control and K = {y >= x+1}.
struct SwapProblem {
  TropMatrix a = mat({{kEps, 0}, {0, kEps}});
  TropMatrix b = mat({{0}, {0}});
  Semimodule k = module({vec({-1, 0}), vece({kEps, 0})}, 2);
};

// Decaying dynamics with K = {y <= x-1}; the iteration never stabilizes.
struct DecayProblem {
  TropMatrix a = mat({{-1, kEps}, {kEps, 0}});
  TropMatrix b = mat({{0}, {0}});
  Semimodule k = lower_halfplane(1);
};

// One-expanding dynamics with the band K = {x+1 <= y <= x+l}; stabilizes
// in exactly vol(K)+1 = l+1 steps.
struct BandProblem {
  explicit BandProblem(std::int64_t l)
      : a(mat({{1, kEps}, {kEps, 0}})),
        b(mat({{0}, {0}})),
        k(module({vec({0, 1}), vec({0, l})}, 2)) {}

  TropMatrix a;
  TropMatrix b;
  Semimodule k;
};

// Order-dual encoding of the Nmin problem: A = [[1,+inf],[1,0]],
// B = (1,1)^T, K = {(x,y) : x <= y} over Nmin.
struct DualProblem {
  TropMatrix a = mat({{-1, kEps}, {-1, 0}});
  TropMatrix b = mat({{-1}, {-1}});
  Semimodule k =
      module({vec({0, 0}), vece({0, kEps})}, 2, ScalarDomain::nonpositive);
};

}  // namespace

TEST_CASE("phi pinned steps") {
  const SwapProblem swap;
  CHECK(phi(swap.k, swap.a, swap.b).trivial_module());

  const DecayProblem decay;
  for (std::int64_t k = 1; k <= 4; ++k) {
    CHECK(semimodule_equal(phi(lower_halfplane(k), decay.a, decay.b),
                           lower_halfplane(k + 1)));
  }

  CHECK(phi(Semimodule::trivial(2), swap.a, swap.b).trivial_module());
}

TEST_CASE("phi is contracting and monotone") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const TropMatrix a = random_matrix(rng, 2, 2, -3, 3);
    const TropMatrix b = random_matrix(rng, 2, 1, -3, 3);
    const Semimodule y = Semimodule::from_columns(random_matrix(rng, 2, 3, -3, 3));
    const Semimodule x = intersect(
        y, Semimodule::from_columns(random_matrix(rng, 2, 2, -3, 3)));
    const Semimodule fx = phi(x, a, b);
    const Semimodule fy = phi(y, a, b);
    CHECK(semimodule_subset(fx, x));
    CHECK(semimodule_subset(fx, fy));
  }
}

TEST_CASE("swap problem stabilizes at step 2 with a trivial K*") {
  const SwapProblem p;
  const InvarianceReport r = max_invariant(p.k, p.a, p.b, 16);
  REQUIRE(r.stabilized_at.has_value());
  CHECK(*r.stabilized_at == 2);
  CHECK(!r.cap_exceeded);
  REQUIRE(r.result.has_value());
  CHECK(r.result->trivial_module());
  CHECK(r.steps.size() == 3);
}

TEST_CASE("decay problem: strictly shrinking halfplanes, no stabilization") {
  const DecayProblem p;
  const InvarianceReport r = max_invariant(p.k, p.a, p.b, 10);
  CHECK(r.cap_exceeded);
  CHECK(!r.stabilized_at.has_value());
  CHECK(!r.result.has_value());
  REQUIRE(r.steps.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(semimodule_equal(r.steps[i],
                           lower_halfplane(static_cast<std::int64_t>(i) + 1)));
  }
  for (std::size_t i = 0; i + 1 < 10; ++i) {
    CHECK(semimodule_subset(r.steps[i + 1], r.steps[i]));
    CHECK(!semimodule_subset(r.steps[i], r.steps[i + 1]));
  }
}

TEST_CASE("band problem stabilizes in exactly l+1 steps") {
  for (std::int64_t l : {1, 2, 3}) {
    const BandProblem p(l);
    const InvarianceReport r = max_invariant(p.k, p.a, p.b, 64);
    REQUIRE(r.stabilized_at.has_value());
    CHECK(*r.stabilized_at == static_cast<std::size_t>(l) + 1);
    CHECK(r.result->trivial_module());
    // The steps shrink strictly until the fixed point.
    for (std::size_t i = 0; i + 2 < r.steps.size(); ++i) {
      CHECK(!semimodule_equal(r.steps[i + 1], r.steps[i]));
    }
  }
}

TEST_CASE("dual-encoded Nmin problem stabilizes at step 2") {
  const DualProblem p;
  const InvarianceReport r = max_invariant(p.k, p.a, p.b, 16);
  REQUIRE(r.stabilized_at.has_value());
  CHECK(*r.stabilized_at == 2);
  // K* decodes to {(x,y) : x <= y, 1 <= y} in Nmin.
  const Semimodule expected =
      module({vec({0, -1}), vec({-1, -1}), vece({0, kEps})}, 2,
             ScalarDomain::nonpositive);
  CHECK(semimodule_equal(*r.result, expected));
}

TEST_CASE("geometric invariance check") {
  const DecayProblem decay;
  const Semimodule x_omega = module({vece({0, kEps})}, 2);
  CHECK(check_geometric_invariance(x_omega, decay.a, decay.b));

  const SwapProblem swap;
  CHECK(!check_geometric_invariance(swap.k, swap.a, swap.b));
  CHECK(check_geometric_invariance(Semimodule::trivial(2), swap.a, swap.b));
}

TEST_CASE("stabilized results are invariant, contained, and maximal-ish") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const TropMatrix a = random_matrix(rng, 2, 2, -2, 2);
    const TropMatrix b = random_matrix(rng, 2, 1, -2, 2);
    const Semimodule k =
        Semimodule::from_columns(random_matrix(rng, 2, 2, -2, 2, false));
    const InvarianceReport r = max_invariant(k, a, b, 32);
    for (std::size_t i = 0; i + 1 < r.steps.size(); ++i) {
      CHECK(semimodule_subset(r.steps[i + 1], r.steps[i]));
    }
    REQUIRE(r.stabilized_at.has_value());  // all-finite K must stabilize
    CHECK(check_geometric_invariance(*r.result, a, b));
    CHECK(semimodule_subset(*r.result, k));
    REQUIRE(r.hilbert_bound.has_value());
    CHECK(*r.stabilized_at <= static_cast<std::size_t>(*r.hilbert_bound));
  }
}

TEST_CASE("cap is mandatory and respected") {
  const SwapProblem p;
  CHECK_THROWS_AS(max_invariant(p.k, p.a, p.b, 0), std::invalid_argument);
  const InvarianceReport r = max_invariant(p.k, p.a, p.b, 2);
  CHECK(r.cap_exceeded);  // needs 3 semimodules to see the repeat
  CHECK(r.steps.size() == 2);
}
