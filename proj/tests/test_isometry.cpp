#include <cmath>
#include <complex>
#include <cstring>
#include <vector>

#include "blochkit/isometry.hpp"
#include "doctest.h"

using namespace blochkit;

namespace {
const DiskGrid kGrid = DiskGrid::standard();
const Complex kOne{1.0, 0.0};
const double kTwoOverE = 0.7357588823428847;
}  // namespace

TEST_CASE("power seminorm bound closed form") {
  CHECK(power_norm_bound(2) ==
        doctest::Approx(4.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-15));
  CHECK(power_norm_bound(2) == doctest::Approx(0.7698003589195010).epsilon(1e-15));
  CHECK(power_norm_bound(3) == 0.75);
  CHECK_THROWS_AS(power_norm_bound(1), DomainError);
  CHECK_THROWS_AS(power_norm_bound(0), DomainError);

  // Strictly decreasing, trapped between 2/e and 1.
  double prev = 1.0;
  for (int n = 2; n <= 64; ++n) {
    double bn = power_norm_bound(n);
    CHECK(bn < prev);
    CHECK(bn < 1.0);
    CHECK(bn > kTwoOverE);
    prev = bn;
  }
}

TEST_CASE("reason tags have stable names") {
  CHECK(std::strcmp(to_string(IsometryReason::UnimodularConstant),
                    "unimodular_constant") == 0);
  CHECK(std::strcmp(to_string(IsometryReason::ConstantWrongModulus),
                    "constant_wrong_modulus") == 0);
  CHECK(std::strcmp(to_string(IsometryReason::NotConstant), "not_constant") == 0);
  CHECK(std::strcmp(to_string(IsometryReason::OriginFixedAndZero),
                    "origin_fixed_and_zero") == 0);
  CHECK(std::strcmp(to_string(IsometryReason::SeminormBelowOne),
                    "seminorm_below_one") == 0);
  CHECK(std::strcmp(to_string(IsometryReason::NormDrift), "norm_drift") == 0);
}

TEST_CASE("multiplication isometries are exactly unimodular constants") {
  IsometryVerdict yes = mult_isometry_check(constant({0.6, 0.8}), kGrid);
  CHECK(yes.is_isometry);
  CHECK(yes.reason == IsometryReason::UnimodularConstant);
  CHECK(yes.evidence.at("modulus") == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(yes.evidence.at("max_family_drift") <= 1e-6);

  IsometryVerdict wrong = mult_isometry_check(constant({0.5, 0.0}), kGrid);
  CHECK(!wrong.is_isometry);
  CHECK(wrong.reason == IsometryReason::ConstantWrongModulus);
  CHECK(wrong.evidence.at("modulus") == 0.5);

  // Structurally hidden constant still accepted via sampling.
  AnalyticFn hidden = add(constant({0.6, 0.8}),
                          add(identity(), scale({-1.0, 0.0}, identity())));
  IsometryVerdict sampled = mult_isometry_check(hidden, kGrid);
  CHECK(sampled.is_isometry);
  CHECK(sampled.reason == IsometryReason::UnimodularConstant);
}

TEST_CASE("non-constant multipliers are rejected with the decisive reason") {
  // Vanishing at the origin with unit norm: the squared symbol is evidence.
  IsometryVerdict id = mult_isometry_check(identity(), kGrid);
  CHECK(!id.is_isometry);
  CHECK(id.reason == IsometryReason::OriginFixedAndZero);
  CHECK(id.evidence.at("psi_squared_bloch_norm") ==
        doctest::Approx(0.7698003589195010).epsilon(1e-6));
  CHECK(id.evidence.at("psi_squared_bloch_norm") < 1.0);

  // Vanishing at the origin with small norm.
  IsometryVerdict sq = mult_isometry_check(monomial(2), kGrid);
  CHECK(!sq.is_isometry);
  CHECK(sq.reason == IsometryReason::SeminormBelowOne);
  CHECK(sq.evidence.at("bloch_norm_psi") < 1.0 - 1e-6);

  // Norm away from 1.
  IsometryVerdict aut = mult_isometry_check(automorphism(kOne, {0.5, 0.0}), kGrid);
  CHECK(!aut.is_isometry);
  CHECK(aut.reason == IsometryReason::NormDrift);
  CHECK(aut.evidence.at("bloch_norm_psi") == doctest::Approx(1.5).epsilon(1e-6));

  // Unit Bloch norm without being constant: the subtlest rejection.
  IsometryVerdict affine =
      mult_isometry_check(polynomial({{0.6, 0.0}, {0.4, 0.0}}), kGrid);
  CHECK(!affine.is_isometry);
  CHECK(affine.reason == IsometryReason::NotConstant);
  CHECK(affine.evidence.at("bloch_norm_psi") == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("composition isometries fix the origin with unit seminorm") {
  IsometryVerdict rot = comp_isometry_check(rotation_fn({0.0, 1.0}), kGrid);
  CHECK(rot.is_isometry);
  CHECK(rot.reason == IsometryReason::OriginFixedAndZero);
  CHECK(rot.evidence.at("abs_phi_at_origin") == 0.0);
  CHECK(rot.evidence.at("seminorm") == doctest::Approx(1.0).epsilon(1e-9));

  IsometryVerdict moved = comp_isometry_check(automorphism(kOne, {0.3, 0.0}), kGrid);
  CHECK(!moved.is_isometry);
  CHECK(moved.reason == IsometryReason::NormDrift);

  IsometryVerdict half =
      comp_isometry_check(scale({0.5, 0.0}, identity()), kGrid);
  CHECK(!half.is_isometry);
  CHECK(half.reason == IsometryReason::SeminormBelowOne);
  CHECK(half.evidence.at("seminorm") == doctest::Approx(0.5).epsilon(1e-9));

  // Two-zero product: origin fixed but the seminorm stays visibly below 1.
  IsometryVerdict two =
      comp_isometry_check(blaschke_product({{0.0, 0.0}, {0.9, 0.0}}, kOne), kGrid);
  CHECK(!two.is_isometry);
  CHECK(two.reason == IsometryReason::SeminormBelowOne);

  // A thin product with zeros racing to the boundary is accepted.
  ThinBlaschkeSpec thin = build_thin_blaschke(3, 0.0, 2e-4);
  IsometryVerdict iso = comp_isometry_check(thin.product, kGrid);
  CHECK(iso.is_isometry);
  CHECK(iso.reason == IsometryReason::OriginFixedAndZero);
  CHECK(iso.evidence.at("seminorm") >= 1.0 - 1e-3);
  CHECK(iso.evidence.at("seminorm") <= 1.0 + 1e-6);

  CHECK_THROWS_AS(comp_isometry_check(scale({1.5, 0.0}, identity()), kGrid),
                  DomainError);
}

TEST_CASE("powers of an origin-fixing self-map respect the seminorm bounds") {
  PowerNormReport rep = power_norm_check(identity(), 6, kGrid);
  REQUIRE(rep.rows.size() == 5);
  CHECK(rep.all_within);
  for (const PowerNormRow& row : rep.rows) {
    CHECK(row.bound == power_norm_bound(row.n));
    // z^n attains its bound: the estimate matches it from below.
    CHECK(row.beta == doctest::Approx(row.bound).epsilon(1e-6));
    CHECK(row.beta <= row.bound + 1e-6);
  }

  // A contraction stays strictly inside the bounds.
  PowerNormReport half = power_norm_check(scale({0.5, 0.0}, identity()), 4, kGrid);
  CHECK(half.all_within);
  for (const PowerNormRow& row : half.rows) CHECK(row.beta < row.bound);

  // Preconditions: origin must be fixed, symbol must stay in the closed disk.
  CHECK_THROWS_AS(power_norm_check(automorphism(kOne, {0.3, 0.0}), 4, kGrid),
                  DomainError);
  CHECK_THROWS_AS(power_norm_check(scale({1.5, 0.0}, identity()), 4, kGrid),
                  DomainError);
  CHECK_THROWS_AS(power_norm_check(identity(), 1, kGrid), DomainError);
}

TEST_CASE("zero-set experiment lists per-zero seminorm values") {
  AnalyticFn b = blaschke_product({{0.0, 0.0}, {0.9, 0.0}}, kOne);
  ZerosLemmaReport rep = zeros_lemma_experiment(b, kGrid);
  CHECK(!rep.constant_symbol);
  CHECK(rep.psi_zero_at_origin);
  REQUIRE(rep.zeros.size() == 2);
  REQUIRE(rep.seminorm_at_zeros.size() == 2);
  // Both zeros carry the separation value rho(0, 0.9) = 0.9, exactly.
  CHECK(rep.seminorm_at_zeros[0] == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(rep.seminorm_at_zeros[1] == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(rep.max_seminorm_at_zero == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(rep.hypothesis_met == (std::abs(rep.g_norm - 1.0) <= 1e-3));

  ZerosLemmaReport cst = zeros_lemma_experiment(constant({0.5, 0.0}), kGrid);
  CHECK(cst.constant_symbol);
  CHECK(cst.zeros.empty());

  // Non-product symbols report no zero list even when they vanish at 0.
  ZerosLemmaReport idr = zeros_lemma_experiment(identity(), kGrid);
  CHECK(idr.psi_zero_at_origin);
  CHECK(idr.zeros.empty());
  CHECK(idr.g_norm == doctest::Approx(0.7698003589195010).epsilon(1e-6));
}

TEST_CASE("thin product construction") {
  ThinBlaschkeSpec two = build_thin_blaschke(2, 0.0, 0.5);
  REQUIRE(two.zeros.size() == 2);
  CHECK(std::abs(two.zeros[0]) == 0.0);
  CHECK(std::abs(two.zeros[1] - Complex{0.9, 0.0}) == 0.0);
  REQUIRE(two.separation_products.size() == 2);
  CHECK(two.separation_products[0] == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(two.separation_products[1] == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(two.min_separation == doctest::Approx(0.9).epsilon(1e-15));

  // Two geometric schedules, frozen from an exact-arithmetic evaluation.
  ThinBlaschkeSpec coarse = build_thin_blaschke(8, 0.0, 0.1);
  CHECK(coarse.min_separation ==
        doctest::Approx(0.6407328262931861).epsilon(1e-9));
  CHECK(coarse.separation_products[0] ==
        doctest::Approx(0.8900101098880002).epsilon(1e-9));
  ThinBlaschkeSpec fine = build_thin_blaschke(8, 0.0, 0.01);
  CHECK(fine.min_separation ==
        doctest::Approx(0.8828830679496261).epsilon(1e-9));

  // Ray angle rotates the nonzero zeros rigidly.
  ThinBlaschkeSpec ray = build_thin_blaschke(3, 1.2, 0.5);
  CHECK(std::abs(std::arg(ray.zeros[1]) - 1.2) < 1e-15);
  CHECK(std::abs(ray.zeros[1]) == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(std::abs(ray.zeros[2]) == doctest::Approx(0.95).epsilon(1e-15));

  // The separation products equal the boundary-normalized derivative at each
  // zero: (1 - |a_j|^2) |B'(a_j)|.
  ThinBlaschkeSpec spec = build_thin_blaschke(5, 0.7, 0.3);
  for (std::size_t j = 0; j < spec.zeros.size(); ++j) {
    Complex a = spec.zeros[j];
    double d = std::abs(spec.product.eval_with_derivative(a).derivative);
    CHECK((1.0 - std::norm(a)) * d ==
          doctest::Approx(spec.separation_products[j]).epsilon(1e-9));
  }

  CHECK_THROWS_AS(build_thin_blaschke(1, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(build_thin_blaschke(3, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(build_thin_blaschke(3, 0.0, 1.0), DomainError);
  // A growth factor this small rounds the second radius onto the circle.
  CHECK_THROWS_AS(build_thin_blaschke(3, 0.0, 1e-17), DomainError);
}
