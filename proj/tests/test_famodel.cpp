#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hofa/famodel.hpp"

using namespace hofa;

namespace {

FactorParams<Rational> random_params(const ModelSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  FactorParams<Rational> out(spec);
  for (int r = 2; r <= spec.k; ++r) {
    for (int j = 1; j <= spec.p; ++j) out.eps_order(r)[j] = Rational(num(rng));
    for (int j = 1; j <= spec.m; ++j) out.delta_order(r)[j] = Rational(num(rng));
  }
  for (int i = 1; i <= spec.p; ++i) {
    for (int j = 1; j <= std::min(i, spec.m); ++j) out.loading.set(i, j, Rational(num(rng)));
  }
  return out;
}

// Independent implementation of the order-2/3 case-split entry formulas.
Rational t2_formula(const FactorParams<Rational>& prm, int j1, int j2) {
  Rational acc(0);
  for (int l = 1; l <= std::min(j1, prm.spec.m); ++l) {
    acc += prm.delta_order(2)[l] * prm.loading(j1, l) * prm.loading(j2, l);
  }
  if (j1 == j2) acc += prm.eps_order(2)[j1];
  return acc;
}

Rational t3_formula(const FactorParams<Rational>& prm, int j1, int j2, int j3) {
  Rational acc(0);
  for (int l = 1; l <= std::min(j1, prm.spec.m); ++l) {
    acc += prm.delta_order(3)[l] * prm.loading(j1, l) * prm.loading(j2, l) * prm.loading(j3, l);
  }
  if (j1 == j2 && j2 == j3) acc += prm.eps_order(3)[j1];
  return acc;
}

}  // namespace

TEST_CASE("ModelSpec validation and counts") {
  CHECK_THROWS_AS(ModelSpec(2, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ModelSpec(0, 1, 2), std::invalid_argument);

  const ModelSpec s(4, 2, 3);
  CHECK(s.M() == 19);
  CHECK(s.N() == 30);
  CHECK(s.N_prime() == 20);
}

TEST_CASE("dims examples") {
  auto d1 = dims(ModelSpec(3, 1, 3));
  CHECK(d1.M == 11);
  CHECK(d1.N == 16);
  CHECK(d1.dim == 11);
  CHECK(d1.codim == 5);

  auto d2 = dims(ModelSpec(5, 1, 3));
  CHECK(d2.M == 17);
  CHECK(d2.N == 50);
  CHECK(d2.dim == 17);
  CHECK(d2.codim == 33);

  auto d3 = dims(ModelSpec(1, 1, 2));
  CHECK(d3.M == 3);
  CHECK(d3.N == 1);
  CHECK(d3.dim == 1);
  CHECK(d3.codim == 0);
}

TEST_CASE("N equals the order-wise sum of entry counts") {
  for (int k = 2; k <= 12; ++k) {
    for (int p = 1; p <= 12; ++p) {
      long long sum = 0;
      for (int r = 2; r <= k; ++r) sum += static_cast<long long>(binomial_u64(p + r - 1, r));
      CHECK(ModelSpec(p, 1, k).N() == sum);
    }
  }
}

TEST_CASE("k=2 parameter count exceeds the classical count by m") {
  for (int m = 1; m <= 5; ++m) {
    for (int p = m; p <= 9; ++p) {
      const long long classical = p + static_cast<long long>(p) * m - m * (m - 1) / 2;
      CHECK(ModelSpec(p, m, 2).M() == classical + m);
    }
  }
}

TEST_CASE("projection_sufficient matches M <= N' exhaustively") {
  for (int k = 2; k <= 6; ++k) {
    for (int m = 1; m <= 30; ++m) {
      for (int p = m; p <= 30; ++p) {
        const ModelSpec spec(p, m, k);
        const auto rep = projection_sufficient(spec);
        CHECK(rep.sufficient == (spec.M() <= spec.N_prime()));
        CHECK((rep.f_value >= 0) == rep.sufficient);
      }
    }
  }
}

TEST_CASE("m_star values") {
  CHECK(projection_sufficient(ModelSpec(3, 1, 3)).m_star == 12);
  CHECK_FALSE(projection_sufficient(ModelSpec(3, 1, 2)).m_star.has_value());

  // k=3: f_3(m+1) = m^2 - 5m, so p = m+1 suffices only from m = 5 on;
  // p = m+2 gives f_3 = m^2 - 3m + 4 > 0 for every m.
  for (int m = 1; m <= 12; ++m) {
    CHECK(projection_sufficient(ModelSpec(m + 1, m, 3)).sufficient == (m >= 5));
    CHECK(projection_sufficient(ModelSpec(m + 2, m, 3)).sufficient);
  }
  // k=3, m = 13: f_3 >= 0 for every p (checked at small p via p >= m constraint lifted by f directly)
  const auto r13 = projection_sufficient(ModelSpec(13, 13, 3));
  CHECK(r13.sufficient);
}

TEST_CASE("phi examples") {
  // all-zero parameters
  ModelSpec s0(2, 1, 3);
  FactorParams<Rational> z(s0);
  auto img0 = phi(z);
  for (int r = 2; r <= 3; ++r) {
    for (const auto& v : img0.order(r).data()) CHECK(v == Rational(0));
  }

  // delta = 1, eps = 0, Lambda = (1,1)^T: all-ones tensors
  FactorParams<Rational> ones(s0);
  ones.delta_order(2)[1] = 1;
  ones.delta_order(3)[1] = 1;
  ones.loading.set(1, 1, Rational(1));
  ones.loading.set(2, 1, Rational(1));
  auto img1 = phi(ones);
  for (int r = 2; r <= 3; ++r) {
    for (const auto& v : img1.order(r).data()) CHECK(v == Rational(1));
  }
  CHECK(img1.zero_mean);
}

TEST_CASE("phi matches the explicit case-split formulas") {
  std::mt19937_64 rng(23);
  const ModelSpec spec(3, 2, 3);
  for (int trial = 0; trial < 10; ++trial) {
    auto prm = random_params(spec, rng);
    auto img = phi(prm);
    for (int j1 = 1; j1 <= 3; ++j1) {
      for (int j2 = j1; j2 <= 3; ++j2) {
        CHECK(img.order(2)({j1, j2}) == t2_formula(prm, j1, j2));
        for (int j3 = j2; j3 <= 3; ++j3) {
          CHECK(img.order(3)({j1, j2, j3}) == t3_formula(prm, j1, j2, j3));
        }
      }
    }
  }
}

TEST_CASE("phi relabeling equivariance on the bottom rows") {
  // Swapping two bottom rows of Lambda (rows > m) together with the matching
  // eps coordinates permutes the image entries accordingly.
  std::mt19937_64 rng(29);
  const ModelSpec spec(5, 2, 3);
  auto prm = random_params(spec, rng);
  const int a = 4, b = 5;  // rows to swap, both > m

  auto swapped = prm;
  for (int j = 1; j <= spec.m; ++j) {
    const Rational tmp = swapped.loading(a, j);
    swapped.loading.set(a, j, swapped.loading(b, j));
    swapped.loading.set(b, j, tmp);
  }
  for (int r = 2; r <= spec.k; ++r) std::swap(swapped.eps_order(r)[a], swapped.eps_order(r)[b]);

  auto img = phi(prm);
  auto img2 = phi(swapped);
  auto relabel = [&](int i) { return i == a ? b : (i == b ? a : i); };
  for (int r = 2; r <= spec.k; ++r) {
    for (const auto& mi : enumerate_indices(spec.p, r)) {
      std::vector<int> moved;
      for (int s = 0; s < r; ++s) moved.push_back(relabel(mi[s]));
      CHECK(img2.order(r)(moved) == img.order(r).at(mi));
    }
  }
}

TEST_CASE("flatten/unflatten round trip and labels") {
  std::mt19937_64 rng(31);
  const ModelSpec spec(4, 2, 4);
  auto prm = random_params(spec, rng);
  const auto v = prm.flatten();
  REQUIRE(static_cast<long long>(v.size()) == spec.M());
  auto back = FactorParams<Rational>::unflatten(spec, v);
  CHECK(back.flatten() == v);

  const auto labels = coord_labels(spec);
  REQUIRE(static_cast<long long>(labels.size()) == spec.M());
  CHECK(labels.front() == "eps2_1");
  CHECK(labels[static_cast<std::size_t>(3 * spec.p)] == "delta2_1");
  // lambda block: diagonal first, then columns
  const std::size_t lambda0 = static_cast<std::size_t>(3 * (spec.p + spec.m));
  CHECK(labels[lambda0] == "lambda_1_1");
  CHECK(labels[lambda0 + 1] == "lambda_2_2");
  CHECK(labels[lambda0 + 2] == "lambda_2_1");
  CHECK(labels.back() == "lambda_4_2");

  CHECK_THROWS_AS(FactorParams<Rational>::unflatten(spec, std::vector<Rational>(3)),
                  std::invalid_argument);
}
