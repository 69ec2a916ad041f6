// Unit and property tests for the exact scalar substrate: rationals,
// cyclotomic numbers in the canonical power basis, localized integrality,
// and exact linear algebra.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ggv/cyclotomic.hpp"
#include "ggv/linalg.hpp"

using namespace ggv;

namespace {

CycNum rou(int m, long long k, int n) { return CycNum::root_of_unity(m, k, n); }

// random element with small rational coordinates
CycNum random_cyc(std::mt19937_64& rng, int n) {
  const CycContext* ctx = CycContext::get(n);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Int> num(ctx->phi);
  for (auto& c : num) c = coef(rng);
  return CycNum(ctx, std::move(num), Int(den(rng)));
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rat::of(4, 6) == Rat::of(2, 3));
  CHECK(Rat::of(-4, -6) == Rat::of(2, 3));
  CHECK(Rat::of(4, -6) == Rat::of(-2, 3));
  CHECK((Rat::of(1, 2) + Rat::of(1, 3)) == Rat::of(5, 6));
  CHECK((Rat::of(1, 2) * Rat::of(2, 5)) == Rat::of(1, 5));
  CHECK(Rat::of(3, 7).str() == "3/7");
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), DivisionByZero);
}

TEST_CASE("root_of_unity examples") {
  CHECK(rou(1, 0, 12).is_one());
  CHECK((rou(4, 1, 12) * rou(4, 1, 12)) == CycNum::from_rat(12, Rat(-1)));
  CHECK((rou(3, 1, 12) + rou(3, 2, 12)) == CycNum::from_rat(12, Rat(-1)));
  // multiplicative in k
  CHECK((rou(12, 5, 12) * rou(12, 9, 12)) == rou(12, 14, 12));
  CHECK_THROWS_AS(rou(5, 1, 12), ConductorMismatch);
}

TEST_CASE("even roots over an odd conductor") {
  // zeta_2 = -1 and zeta_6 live in Q(zeta_3)
  CHECK(rou(2, 1, 3) == CycNum::from_rat(3, Rat(-1)));
  CycNum z6 = rou(6, 1, 3);
  CycNum p = CycNum::one(3);
  for (int i = 0; i < 6; ++i) p = p * z6;
  CHECK(p.is_one());
  CHECK((z6 * z6) == rou(3, 1, 3));
}

TEST_CASE("field op examples") {
  CycNum half = CycNum::from_rat(5, Rat::of(1, 2));
  CycNum z5 = rou(5, 1, 5);
  CHECK(((half + z5) - z5) == half);
  CHECK(rou(8, 1, 8).inverse() == rou(8, 7, 8));
  CHECK(rou(7, 3, 7).conj() == rou(7, 4, 7));
}

TEST_CASE("conductor coercion") {
  CycNum a = rou(5, 1, 5).lifted_to(40);
  CHECK(a == rou(5, 1, 40));
  // mixed-conductor arithmetic lifts when one conductor divides the other
  CHECK((rou(5, 1, 5) * rou(5, 4, 40)).is_one());
  CHECK_THROWS_AS(rou(5, 1, 5) + rou(8, 1, 8), ConductorMismatch);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(20240817);
  for (int n : {5, 8, 12, 24, 40, 120}) {
    for (int it = 0; it < 200; ++it) {
      CycNum x = random_cyc(rng, n), y = random_cyc(rng, n), z = random_cyc(rng, n);
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
  }
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    CycNum x = random_cyc(rng, 24), y = random_cyc(rng, 24);
    CHECK(x.conj().conj() == x);
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK((x * y).conj() == x.conj() * y.conj());
  }
}

TEST_CASE("is_pm_integral examples and oracle") {
  LocalRingSpec r31{3, 1};
  CHECK(CycNum::from_rat(8, Rat::of(1, 3)).is_pm_integral(r31));
  CHECK(!CycNum::from_rat(8, Rat::of(1, 2)).is_pm_integral(r31));
  CycNum x = (CycNum::one(8) + rou(8, 1, 8)).scaled(Rat::of(1, 9));
  CHECK(x.is_pm_integral(r31));

  // oracle: (pM)^k * x has integral coordinates for some k <= 64
  std::mt19937_64 rng(99);
  LocalRingSpec ring{3, 10};
  for (int it = 0; it < 150; ++it) {
    CycNum v = random_cyc(rng, 24);
    bool oracle = false;
    CycNum w = v;
    Rat pm(Int(ring.p * ring.M));
    for (int k = 0; k <= 64 && !oracle; ++k) {
      bool integral = true;
      for (int i = 0; i < w.dim(); ++i)
        if (!w.coord(i).is_integer()) integral = false;
      oracle = integral;
      if (!oracle) w = w.scaled(pm);
    }
    CHECK(v.is_pm_integral(ring) == oracle);
  }
}

TEST_CASE("solve_exact examples") {
  int n = 12;
  CycMat A = CycMat::identity(3, n);
  CycVec b = {rou(12, 1, n), CycNum::from_rat(n, Rat::of(2, 3)), CycNum::zero(n)};
  auto res = solve_exact(A, b);
  REQUIRE(res.status == SolveStatus::Ok);
  CHECK(res.x == b);

  CycMat B(2, 2, CycNum::zero(1));
  B.at(0, 0) = CycNum(1);
  B.at(0, 1) = CycNum(1);
  B.at(1, 0) = CycNum(1);
  B.at(1, 1) = CycNum(-1);
  auto r2 = solve_exact(B, {CycNum(2), CycNum(0)});
  REQUIRE(r2.status == SolveStatus::Ok);
  CHECK(r2.x[0] == CycNum(1));
  CHECK(r2.x[1] == CycNum(1));
}

TEST_CASE("solve_exact inconsistent and ambiguous shapes") {
  CycMat A(2, 1, CycNum(0));
  A.at(0, 0) = CycNum(1);
  A.at(1, 0) = CycNum(1);
  CHECK(solve_exact(A, {CycNum(1), CycNum(2)}).status == SolveStatus::Inconsistent);
  CycMat B(1, 2, CycNum(1));
  CHECK(solve_exact(B, {CycNum(1)}).status == SolveStatus::Ambiguous);
}

TEST_CASE("solve_exact round-trip on random invertible systems") {
  std::mt19937_64 rng(20240818);
  int n = 12;
  for (int it = 0; it < 10; ++it) {
    CycMat A(6, 6, CycNum::zero(n));
    do {
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) A.at(i, j) = random_cyc(rng, n);
    } while (det_exact(A).is_zero());
    CycVec b(6);
    for (auto& v : b) v = random_cyc(rng, n);
    auto res = solve_exact(A, b);
    REQUIRE(res.status == SolveStatus::Ok);
    CycVec back = mat_vec(A, res.x);
    for (int i = 0; i < 6; ++i) CHECK(back[i] == b[i]);
  }
}

TEST_CASE("inverter agrees with solve_exact") {
  std::mt19937_64 rng(5);
  CycMat A(4, 4, CycNum::zero(8));
  do {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) A.at(i, j) = random_cyc(rng, 8);
  } while (det_exact(A).is_zero());
  Inverter inv(A);
  CycVec b(4);
  for (auto& v : b) v = random_cyc(rng, 8);
  auto res = solve_exact(A, b);
  REQUIRE(res.status == SolveStatus::Ok);
  CycVec x2 = inv.solve(b);
  for (int i = 0; i < 4; ++i) CHECK(x2[i] == res.x[i]);
}
