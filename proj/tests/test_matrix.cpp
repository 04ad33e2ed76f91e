#include "tropctl/matrix.hpp"

#include <doctest.h>

#include <optional>
#include <random>
#include <stdexcept>

#include "support/test_support.hpp"

using namespace tropctl;
using namespace tropctl::testing;

namespace {

// Max cycle mean by enumerating every simple cycle (oracle for Karp).
void extend_cycle(const TropMatrix& a, std::size_t start, std::size_t cur,
                  std::vector<bool>& used, std::int64_t weight,
                  std::size_t length, std::optional<Rational>& best) {
  for (std::size_t next = 0; next < a.rows(); ++next) {
    const Scalar w = a.at(next, cur);  // arc cur -> next
    if (w.is_neg_inf()) continue;
    if (next == start) {
      const Rational mean(weight + w.value(),
                          static_cast<std::int64_t>(length + 1));
      if (!best || *best < mean) best = mean;
      continue;
    }
    if (next < start || used[next]) continue;
    used[next] = true;
    extend_cycle(a, start, next, used, weight + w.value(), length + 1, best);
    used[next] = false;
  }
}

std::optional<Rational> brute_force_radius(const TropMatrix& a) {
  std::optional<Rational> best;
  std::vector<bool> used(a.rows(), false);
  for (std::size_t s = 0; s < a.rows(); ++s) {
    used[s] = true;
    extend_cycle(a, s, s, used, 0, 0, best);
    used[s] = false;
  }
  return best;
}

}  // namespace

TEST_CASE("product against the railway trajectory step") {
  const TropMatrix a = mat({{kEps, 17, kEps, kEps},
                            {kEps, kEps, 11, 9},
                            {14, kEps, 11, 9},
                            {14, kEps, 11, kEps}});
  CHECK(mat_vec(a, vec({17, 15, 18, 19})) == vec({32, 29, 31, 31}));

  const TropMatrix id = TropMatrix::identity(4);
  CHECK(mat_mul(id, a) == a);
  CHECK(mat_mul(a, id) == a);
  CHECK(mat_vec(TropMatrix::eps(4, 4), vec({1, 2, 3, 4})) ==
        Vec(4, Scalar::neg_inf()));
}

TEST_CASE("product laws on random triples") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const TropMatrix a = random_matrix(rng, 3, 4, -9, 9);
    const TropMatrix b = random_matrix(rng, 4, 2, -9, 9);
    const TropMatrix c = random_matrix(rng, 2, 3, -9, 9);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    const TropMatrix b2 = random_matrix(rng, 4, 2, -9, 9);
    CHECK(mat_mul(a, oplus(b, b2)) == oplus(mat_mul(a, b), mat_mul(a, b2)));
  }
  CHECK_THROWS_AS(mat_mul(TropMatrix::eps(2, 3), TropMatrix::eps(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("residuation: identity, Galois inequalities, adjunction") {
  std::mt19937_64 rng(5);
  const TropMatrix id = TropMatrix::identity(3);
  const TropMatrix x0 = random_matrix(rng, 3, 2, -5, 5);
  CHECK(left_residual(id, x0) == x0);

  for (int trial = 0; trial < 300; ++trial) {
    const TropMatrix d = random_matrix(rng, 3, 3, -6, 6);
    const TropMatrix c = random_matrix(rng, 3, 2, -6, 6);
    const TropMatrix x = random_matrix(rng, 3, 2, -6, 6);
    const TropMatrix dc = left_residual(d, c);
    // D (D\C) <= C and X <= D\(D X).
    CHECK(entrywise_le(mat_mul(d, dc), c));
    CHECK(entrywise_le(x, left_residual(d, mat_mul(d, x))));
    // D X <= C  iff  X <= D\C.
    CHECK(entrywise_le(mat_mul(d, x), c) == entrywise_le(x, dc));
  }
}

TEST_CASE("right residual mirrors the left one") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const TropMatrix d = random_matrix(rng, 2, 3, -6, 6);
    const TropMatrix c = random_matrix(rng, 2, 3, -6, 6);
    const TropMatrix x = right_residual(c, d);  // greatest X with X d <= c
    CHECK(entrywise_le(mat_mul(x, d), c));
  }
}

TEST_CASE("spectral radius: pinned examples") {
  CHECK(spectral_radius(mat({{-1, kEps}, {kEps, 0}})) == Rational(0, 1));
  CHECK(!spectral_radius(mat({{kEps, 3, 1}, {kEps, kEps, -2}, {kEps, kEps, kEps}}))
             .has_value());
  CHECK(spectral_radius(mat({{kEps, 3}, {-1, kEps}})) == Rational(1, 1));
  CHECK_THROWS_AS(spectral_radius(TropMatrix::eps(2, 3)), std::invalid_argument);
}

TEST_CASE("spectral radius equals the brute-force cycle maximum") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    const TropMatrix a = random_matrix(rng, 5, 5, -7, 7);
    CHECK(spectral_radius(a) == brute_force_radius(a));
  }
}

TEST_CASE("irreducibility is strong connectivity of the support") {
  CHECK(is_irreducible(mat({{5}})));
  CHECK(is_irreducible(mat({{kEps}})));
  CHECK(!is_irreducible(TropMatrix::eps(2, 2)));
  CHECK(is_irreducible(mat({{kEps, 3}, {-1, kEps}})));
  CHECK(!is_irreducible(mat({{0, 3}, {kEps, 0}})));
}

TEST_CASE("kleene star: pinned examples") {
  CHECK(kleene_star(TropMatrix::eps(3, 3)).star == TropMatrix::identity(3));
  CHECK(kleene_star(mat({{1}})).diverged());
  CHECK(kleene_star(mat({{0}})).star == TropMatrix::identity(1));
  CHECK(kleene_star(mat({{-3}})).star == TropMatrix::identity(1));
}

TEST_CASE("kleene star: idempotence and dominance of I when converged") {
  std::mt19937_64 rng(21);
  int converged = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // Nonpositive entries keep every cycle mean <= 0.
    const bool feasible = trial % 2 == 0;
    const TropMatrix e = feasible ? random_matrix(rng, 4, 4, -6, 0)
                                  : random_matrix(rng, 4, 4, -3, 3);
    const StarResult r = kleene_star(e);
    const std::optional<Rational> rho = spectral_radius(e);
    CHECK(r.diverged() == (rho.has_value() && Rational(0, 1) < *rho));
    if (r.diverged()) continue;
    ++converged;
    CHECK(mat_mul(*r.star, *r.star) == *r.star);
    CHECK(entrywise_le(TropMatrix::identity(4), *r.star));
    CHECK(entrywise_le(e, *r.star));
  }
  CHECK(converged >= 100);
}

TEST_CASE("positive radius with irreducibility forces divergence") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const TropMatrix e = random_matrix(rng, 4, 4, -2, 4);
    const std::optional<Rational> rho = spectral_radius(e);
    if (is_irreducible(e) && rho && Rational(0, 1) < *rho) {
      CHECK(kleene_star(e).diverged());
    }
  }
}

TEST_CASE("hilbert seminorm and column spread") {
  CHECK(hilbert_seminorm(vec({0, -3})) == 3);
  CHECK(hilbert_seminorm(vec({5, 5, 5})) == 0);
  CHECK_THROWS_AS(hilbert_seminorm(vece({0, kEps})), std::domain_error);
  CHECK(delta_hilbert(mat({{0, 0}, {1, 3}})) == 3);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Vec x = random_vec(rng, 4, -10, 10, /*allow_eps=*/false);
    const Vec y = random_vec(rng, 4, -10, 10, /*allow_eps=*/false);
    const Scalar lambda = random_finite(rng, -10, 10);
    CHECK(hilbert_seminorm(scale_vec(lambda, x)) == hilbert_seminorm(x));
    CHECK(hilbert_seminorm(oplus_vec(x, y)) <=
          std::max(hilbert_seminorm(x), hilbert_seminorm(y)));
  }
}

TEST_CASE("invertible matrices are scaled permutations") {
  CHECK(is_invertible(TropMatrix::identity(3)));
  CHECK(is_invertible(mat({{kEps, 4}, {-2, kEps}})));
  CHECK(!is_invertible(mat({{0, 0}, {kEps, 0}})));
  CHECK(!is_invertible(mat({{0, kEps}, {0, kEps}})));
  CHECK(!is_invertible(TropMatrix::eps(2, 2)));
}
