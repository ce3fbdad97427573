#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shapeslab/pre_schwarzian.hpp"
#include "shapeslab/strata.hpp"

using namespace shapeslab;

TEST_CASE("two-point collision angles") {
  // equal pair pi/3: angle pi - pi/3 = 2pi/3
  CHECK(collision_cone_angle(Rat(1, 3), Rat(1, 3)) == Rat(2, 3));
  // (pi/2, pi/3): 2pi - 5pi/6 = 7pi/6
  CHECK(collision_cone_angle(Rat(1, 2), Rat(1, 3)) == Rat(7, 6));
  // (pi, 2pi/3): sum 5pi/3 < 2pi, fine
  CHECK(collision_cone_angle(Rat(1), Rat(2, 3)) == Rat(1, 3));
  // the error fires only at sum >= 2pi
  CHECK_THROWS_AS(collision_cone_angle(Rat(1), Rat(3, 2)), std::domain_error);
  CHECK_THROWS_AS(collision_cone_angle(Rat(1), Rat(1)), std::domain_error);
}

TEST_CASE("equal-angle triple collisions: 24, 96, 600") {
  // alpha = 1/6, 1/4, 3/10 of a full turn; curvature 2*pi*alpha = pi * (2*alpha)
  for (auto [alpha_num, alpha_den, order] :
       {std::tuple<int64_t, int64_t, int64_t>{1, 6, 24}, {1, 4, 96}, {3, 10, 600}}) {
    Rat kappa = Rat(2) * Rat(alpha_num, alpha_den);  // units of pi
    auto mc = multi_collision({kappa, kappa, kappa});
    REQUIRE(mc.local_group_order.has_value());
    CHECK(*mc.local_group_order == order);
    // k!/(1 - k a)^{k-1} with k = 3
    Rat expect = Rat(6) / rat_pow(Rat(1) - Rat(3) * Rat(alpha_num, alpha_den), 2);
    CHECK(expect == Rat(order));
  }
}

TEST_CASE("unequal triple (19pi/30, 11pi/30, 29pi/30) has order 3600") {
  auto mc = multi_collision({Rat(19, 30), Rat(11, 30), Rat(29, 30)});
  CHECK(mc.scalar_cone_angle == Rat(1, 30));  // pi/30
  REQUIRE(mc.local_group_order.has_value());
  CHECK(*mc.local_group_order == 3600);
  CHECK(mc.real_link_fraction == Rat(1, 3600));
  CHECK(mc.complex_link_fraction == Rat(1, 60));
}

TEST_CASE("five equal pi/3 curvatures: 155520") {
  auto mc = multi_collision({Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  CHECK(mc.scalar_cone_angle == Rat(1, 3));
  REQUIRE(mc.local_group_order.has_value());
  CHECK(*mc.local_group_order == 155520);  // 6^4 * 5!
}

TEST_CASE("multi_collision errors") {
  CHECK_THROWS_AS(multi_collision({Rat(1), Rat(1)}), std::domain_error);
  CHECK_THROWS_AS(multi_collision({Rat(1, 3)}), std::domain_error);
}

TEST_CASE("pre-schwarzian: symmetric threefold configuration") {
  const double pi = 3.14159265358979323846;
  std::vector<std::complex<double>> y;
  for (int k = 0; k < 3; ++k)
    y.push_back(std::polar(1.0, 2 * pi * k / 3));
  std::vector<double> a(3, 4 * pi / 3);
  // threefold symmetry: S(w z) = conj-free rotation by w^{-1}
  std::complex<double> w = std::polar(1.0, 2 * pi / 3);
  std::complex<double> z(0.37, 0.21);
  auto s1 = pre_schwarzian(y, a, w * z);
  auto s2 = pre_schwarzian(y, a, z) / w;
  CHECK(std::abs(s1 - s2) < 1e-12);
  // residues -alpha/2pi = -2/3
  for (size_t i = 0; i < 3; ++i)
    CHECK(std::abs(residue_at(y, a, i) - std::complex<double>(-2.0 / 3.0, 0)) < 1e-8);
}

TEST_CASE("pre-schwarzian asymptotics and residues on random configurations") {
  const double pi = 3.14159265358979323846;
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> pos(-3.0, 3.0), curv(0.1, 1.9);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + int(rng() % 5);
    std::vector<std::complex<double>> y;
    std::vector<double> a;
    double total = 0;
    for (int i = 0; i < n - 1; ++i) {
      y.emplace_back(pos(rng), pos(rng));
      double c = curv(rng) * pi * 2.0 / n;
      a.push_back(c);
      total += c;
    }
    if (4 * pi - total <= 0 || 4 * pi - total >= 2 * pi) { --trial; continue; }
    y.emplace_back(pos(rng), pos(rng));
    a.push_back(4 * pi - total);

    std::complex<double> z(1e6, 3e5);
    CHECK(std::abs(z * pre_schwarzian(y, a, z) - std::complex<double>(-2, 0)) < 1e-5);
    for (size_t i = 0; i < y.size(); ++i) {
      bool clash = false;
      for (size_t j = 0; j < y.size(); ++j)
        if (j != i && std::abs(y[j] - y[i]) < 1e-3) clash = true;
      if (clash) continue;
      CHECK(std::abs(residue_at(y, a, i) + a[i] / (2 * pi)) < 1e-8);
    }
  }
  CHECK_THROWS_AS(
      pre_schwarzian({{0, 0}, {1, 0}, {2, 0}}, {4 * pi / 3, 4 * pi / 3, 4 * pi / 3}, {1, 0}),
      std::domain_error);
}
