#include "tropctl/scalar.hpp"

#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "support/test_support.hpp"

using namespace tropctl;
using namespace tropctl::testing;

TEST_CASE("addition is max/min with the right neutral elements") {
  CHECK(trop_add(fin(3), fin(5), Mode::max) == fin(5));
  CHECK(trop_add(ninf(), fin(42), Mode::max) == fin(42));
  CHECK(trop_add(ninf(), ninf(), Mode::max) == ninf());
  CHECK(trop_add(Scalar::pos_inf(), fin(7), Mode::min) == fin(7));
  CHECK(trop_add(fin(-2), fin(-2), Mode::max) == fin(-2));  // idempotent
}

TEST_CASE("multiplication absorbs toward the mode's zero") {
  CHECK(trop_mul(fin(3), fin(4), Mode::max) == fin(7));
  CHECK(trop_mul(ninf(), Scalar::pos_inf(), Mode::max) == ninf());
  CHECK(trop_mul(Scalar::pos_inf(), ninf(), Mode::max) == ninf());
  CHECK(trop_mul(ninf(), Scalar::pos_inf(), Mode::min) == Scalar::pos_inf());
  CHECK(trop_mul(Scalar::pos_inf(), ninf(), Mode::min) == Scalar::pos_inf());
  CHECK(trop_mul(fin(-5), ninf(), Mode::max) == ninf());
}

TEST_CASE("semiring axioms hold on sampled triples") {
  std::mt19937_64 rng(7);
  std::vector<Scalar> pool;
  for (int i = 0; i < 200; ++i) pool.push_back(random_scalar(rng, -50, 50));
  pool.push_back(ninf());
  pool.push_back(Scalar::pos_inf());

  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const Scalar a = pool[pick(rng)], b = pool[pick(rng)], c = pool[pick(rng)];
    CHECK(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
    CHECK(trop_add(a, b) == trop_add(b, a));
    CHECK(trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c)));
    CHECK(trop_mul(a, b) == trop_mul(b, a));
    CHECK(trop_mul(a, trop_add(b, c)) ==
          trop_add(trop_mul(a, b), trop_mul(a, c)));
    CHECK(trop_add(a, ninf()) == a);
    CHECK(trop_mul(a, fin(0)) == a);
    CHECK(trop_mul(a, ninf()) == ninf());
  }
}

TEST_CASE("natural order matches the extended-integer order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Scalar a = random_scalar(rng, -20, 20);
    const Scalar b = random_scalar(rng, -20, 20);
    CHECK((trop_add(a, b) == b) == (a <= b));
  }
}

TEST_CASE("negation is the max/min duality") {
  std::mt19937_64 rng(13);
  std::vector<Scalar> pool{ninf(), Scalar::pos_inf()};
  for (int i = 0; i < 100; ++i) pool.push_back(random_scalar(rng, -30, 30));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Scalar a = pool[pick(rng)], b = pool[pick(rng)];
    CHECK(neg(trop_add(a, b, Mode::max)) ==
          trop_add(neg(a), neg(b), Mode::min));
    CHECK(neg(trop_mul(a, b, Mode::max)) ==
          trop_mul(neg(a), neg(b), Mode::min));
  }
}

TEST_CASE("overflow fails loudly instead of wrapping") {
  const Scalar big = fin((std::int64_t{1} << 62));
  CHECK_THROWS_AS(trop_mul(big, big), std::overflow_error);
  CHECK_THROWS_AS(Scalar::finite(std::numeric_limits<std::int64_t>::max()),
                  std::overflow_error);
  CHECK_THROWS_AS(ninf().value(), std::domain_error);
}

TEST_CASE("token round trip") {
  CHECK(to_string(ninf()) == "-inf");
  CHECK(to_string(Scalar::pos_inf()) == "+inf");
  CHECK(to_string(fin(-17)) == "-17");
  CHECK(parse_scalar("-inf") == ninf());
  CHECK(parse_scalar("+inf") == Scalar::pos_inf());
  CHECK(parse_scalar("123") == fin(123));
  CHECK_THROWS_AS(parse_scalar("twelve"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("12x"), std::invalid_argument);
}
