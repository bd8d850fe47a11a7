#include "doctest.h"

#include <cmath>

#include "qbtc/attack_calc.hpp"

using namespace qbtc;

TEST_SUITE("attack_calc") {
  TEST_CASE("gate totals") {
    CHECK(total_gates(BigUint(6'000'000'000ULL), BigUint(9)) == BigUint(54'000'000'000ULL));
    CHECK(total_gates(BigUint(1), BigUint(1)) == 1);
    CHECK(total_gates(BigUint(126'000'000'000ULL), BigUint(1)) == BigUint(126'000'000'000ULL));
    CHECK(total_gates(pow2(200), pow2(100)) == pow2(300));
    CHECK_THROWS_AS(total_gates(BigUint(0), BigUint(9)), ValidationError);
  }

  TEST_CASE("required clock") {
    CHECK(required_clock(BigUint(54'000'000'000ULL), Rational(3600)) == Rational(15'000'000));
    CHECK(required_clock(BigUint(126'000'000'000ULL), Rational(360)) == Rational(350'000'000));
    CHECK(required_clock(BigUint(1), Rational(1)) == 1);
    CHECK(to_sig_digits(required_clock(BigUint(7), Rational(3))) == "2.33333e+00");
    CHECK_THROWS_AS(required_clock(BigUint(1), Rational(0)), ValidationError);
    CHECK_THROWS_AS(required_clock(BigUint(1), Rational(-5)), ValidationError);
  }

  TEST_CASE("implied window") {
    const Rational w = implied_window(BigUint(54'000'000'000ULL), Rational(660'000'000));
    CHECK(w == Rational(900, 11));
    CHECK(to_sig_digits(w) == "8.18182e+01");
    CHECK(implied_window(BigUint(126'000'000'000ULL), Rational(350'000'000)) == 360);
    CHECK(implied_window(BigUint(12345), Rational(12345)) == 1);
    CHECK_THROWS_AS(implied_window(BigUint(1), Rational(0)), ValidationError);
  }

  TEST_CASE("clock and window are exact inverses") {
    for (std::uint64_t g : {1ULL, 7ULL, 54'000'000'000ULL, 126'000'000'000ULL}) {
      for (const Rational& w : {Rational(1), Rational(600), Rational(3600), Rational(7, 3), to_rational(81.8)}) {
        CHECK(implied_window(BigUint(g), required_clock(BigUint(g), w)) == w);
      }
    }
  }

  TEST_CASE("survival of a pending transaction") {
    CHECK(attack_survival(0.0, 1.0 / 600) == 1.0);
    CHECK(attack_survival(600.0, 1.0 / 600) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    const double t = to_double(implied_window(roetteler_profile().serial_gates, Rational(350'000'000)));
    CHECK(t == 360.0);
    CHECK(attack_survival(t, 1.0 / 600) == doctest::Approx(0.54881163609402644).epsilon(1e-15));
    CHECK(attack_survival(599.0, 0.0, SurvivalMode::FixedDeadline, 600.0) == 1.0);
    CHECK(attack_survival(600.0, 0.0, SurvivalMode::FixedDeadline, 600.0) == 0.0);
    CHECK_THROWS_AS(attack_survival(-1.0, 1.0), ValidationError);
  }

  TEST_CASE("survival decreases in break time and rate") {
    double prev = 2.0;
    for (int i = 0; i <= 100; ++i) {
      const double s = attack_survival(i * 50.0, 1.0 / 600);
      CHECK(s < prev);
      prev = s;
    }
    prev = 2.0;
    for (int i = 1; i <= 100; ++i) {
      const double s = attack_survival(360.0, i * 1e-4);
      CHECK(s < prev);
      prev = s;
    }
  }

  TEST_CASE("built-in profiles carry the published inputs") {
    const AttackProfile pz = proos_zalka_profile();
    CHECK(pz.qubits == 1500);
    CHECK(pz.serial_gates == BigUint(54'000'000'000ULL));
    const AttackProfile r = roetteler_profile();
    CHECK(r.qubits == 2330);
    CHECK(r.serial_gates == BigUint(126'000'000'000ULL));
    CHECK(find_profile("Proos_Zalka").has_value());
    CHECK(find_profile("ROETTELER")->qubits == 2330);
    CHECK_FALSE(find_profile("shor").has_value());
  }

  TEST_CASE("claimed clocks are audited against the gate counts") {
    const auto pz = audit_claim(proos_zalka_profile());
    REQUIRE(pz.has_value());
    CHECK_FALSE(pz->consistent);
    CHECK(pz->derived_clock_hz == 15'000'000);
    CHECK(pz->implied_window_s == Rational(900, 11));
    CHECK(pz->annotation.find("MISMATCH") == 0);
    CHECK(pz->annotation.find("1.50000e+07") != std::string::npos);
    CHECK(pz->annotation.find("8.18182e+01") != std::string::npos);

    const auto r = audit_claim(roetteler_profile());
    REQUIRE(r.has_value());
    CHECK_FALSE(r->consistent);
    CHECK(r->implied_window_s == 360);

    AttackProfile honest = roetteler_profile();
    honest.claimed_window_s = Rational(360);
    const auto h = audit_claim(honest);
    CHECK(h->consistent);
    CHECK(h->annotation.empty());

    AttackProfile silent = roetteler_profile();
    silent.claimed_clock_hz.reset();
    CHECK_FALSE(audit_claim(silent).has_value());
  }
}
