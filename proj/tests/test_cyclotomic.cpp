#include "blocklab/cyclotomic.hpp"

#include "doctest.h"

using namespace blocklab;

namespace {

Cyclotomic zeta(i64 n, i64 k = 1) { return Cyclotomic::root_of_unity(n, k); }

Cyclotomic random_element(SplitMix64& rng, i64 n, int coeff_range = 3) {
    RatPoly c(static_cast<std::size_t>(euler_phi(n)));
    for (auto& v : c) v = to_rat(rng.range(-coeff_range, coeff_range));
    return Cyclotomic::from_coeffs(n, std::move(c));
}

// Independent trace oracle: literally sum the Galois images.
Rat trace_by_conjugate_sum(const Cyclotomic& a) {
    Cyclotomic sum(0);
    for (const auto& c : galois_conjugates(a)) sum += c;
    REQUIRE(sum.is_rational());
    return sum.rational_value();
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("root of unity basics") {
    CHECK(zeta(1, 0) == Cyclotomic(1));
    CHECK(zeta(3, 1) + zeta(3, 2) == Cyclotomic(-1));
    CHECK(zeta(5).conj() * zeta(5) == Cyclotomic(1));
    CHECK(zeta(4).pow(2) == Cyclotomic(-1));
    CHECK(zeta(2) == Cyclotomic(-1));
}

TEST_CASE("canonical minimal conductor") {
    // zeta_6 = 1 + zeta_3 lives at conductor 3
    Cyclotomic z6 = zeta(6);
    CHECK(z6.conductor() == 3);
    CHECK(z6 == Cyclotomic(1) + zeta(3));
    CHECK(zeta(4, 2) == Cyclotomic(-1));
    CHECK(zeta(12, 4).conductor() == 3);
    CHECK((zeta(8) * zeta(8, 7)) == Cyclotomic(1));
    // a sum that collapses to a rational
    CHECK((zeta(5) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4)) == Cyclotomic(-1));
}

TEST_CASE("ring axioms on random triples, conductors <= 60") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        i64 n = rng.range(1, 60);
        auto a = random_element(rng, n);
        auto b = random_element(rng, n);
        auto c = random_element(rng, n);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("division is exact field division") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        i64 n = rng.range(1, 40);
        auto a = random_element(rng, n);
        auto b = random_element(rng, n);
        if (b.is_zero()) continue;
        CHECK((a / b) * b == a);
    }
    CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), DivisionByZero);
}

TEST_CASE("galois conjugates") {
    // rational: one copy at its own (trivial) conductor, phi(n) copies in an ambient field
    auto q = Cyclotomic(make_rat(Int(3), Int(2)));
    CHECK(galois_conjugates(q).size() == 1);
    CHECK(galois_conjugates(q, 5).size() == 4);
    for (const auto& c : galois_conjugates(q, 5)) CHECK(c == q);

    auto zs = galois_conjugates(zeta(5));
    CHECK(zs.size() == 4);
    for (i64 k = 1; k <= 4; ++k) CHECK(std::count(zs.begin(), zs.end(), zeta(5, k)) == 1);

    // zeta_8 + zeta_8^-1 (a square root of 2): images +-v, each twice
    auto v = zeta(8) + zeta(8, 7);
    auto conj8 = galois_conjugates(v);
    CHECK(conj8.size() == 4);
    CHECK(std::count(conj8.begin(), conj8.end(), v) == 2);
    CHECK(std::count(conj8.begin(), conj8.end(), -v) == 2);
}

TEST_CASE("conjugation involution and Galois invariance of trace") {
    auto sorted = [](std::vector<Cyclotomic> v) {
        std::sort(v.begin(), v.end(),
                  [](const Cyclotomic& x, const Cyclotomic& y) { return Cyclotomic::compare(x, y) < 0; });
        return v;
    };
    SplitMix64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        i64 n = rng.range(1, 40);
        auto a = random_element(rng, n);
        CHECK(a.conj().conj() == a);
        for (i64 k = 1; k < a.conductor(); ++k) {
            if (std::gcd(k, a.conductor()) != 1) continue;
            CHECK(trace_to_rationals(a.galois(k)) == trace_to_rationals(a));
            // the conjugate multiset is stable under further Galois action
            CHECK(sorted(galois_conjugates(a.galois(k))) == sorted(galois_conjugates(a)));
            break;
        }
    }
}

TEST_CASE("trace and conjugate average") {
    CHECK(trace_to_rationals(zeta(5)) == Rat(-1));
    CHECK(average_of_conjugates(Cyclotomic(1)) == Rat(1));
    // (1 + zeta_5)(1 + zeta_5^-1): trace 6 over degree 4
    auto alpha = (Cyclotomic(1) + zeta(5)) * (Cyclotomic(1) + zeta(5).conj());
    CHECK(trace_to_rationals(alpha) == Rat(6));
    CHECK(average_of_conjugates(alpha) == make_rat(Int(3), Int(2)));

    // Moebius-formula trace against the conjugate-sum oracle
    SplitMix64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        i64 n = rng.range(1, 40);
        auto a = random_element(rng, n);
        CHECK(trace_to_rationals(a) == trace_by_conjugate_sum(a));
    }
}

TEST_CASE("total positivity") {
    CHECK(is_totally_positive(Cyclotomic(1)));
    CHECK_FALSE(is_totally_positive(zeta(3)));
    CHECK_FALSE(is_totally_positive(Cyclotomic(0)));
    CHECK_FALSE(is_totally_positive(Cyclotomic(-2)));
    CHECK(is_totally_positive(norm_abs_squared(Cyclotomic(1) + zeta(5))));
    // sqrt(2) is real but its conjugate -sqrt(2) is negative
    auto sqrt2 = zeta(8) + zeta(8, 7);
    CHECK(sign_of_real(sqrt2) == 1);
    CHECK(sign_of_real(-sqrt2) == -1);
    CHECK_FALSE(is_totally_positive(sqrt2));
    CHECK(is_totally_positive(sqrt2 * sqrt2));
}

TEST_CASE("norm_abs_squared is conj-fixed with nonnegative conjugates") {
    SplitMix64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        i64 n = rng.range(1, 30);
        auto a = random_element(rng, n);
        auto nrm = norm_abs_squared(a);
        CHECK(nrm.conj() == nrm);
        if (!a.is_zero()) CHECK(is_totally_positive(nrm));
    }
}

TEST_CASE("roots of unity: detection and order") {
    CHECK(is_root_of_unity(-zeta(8, 3)));
    CHECK_FALSE(is_root_of_unity(Cyclotomic(2)));
    CHECK(is_root_of_unity(Cyclotomic(1) + zeta(3)));  // equals -zeta_3^2
    CHECK(root_of_unity_order(Cyclotomic(1) + zeta(3)) == 6);
    CHECK(root_of_unity_order(Cyclotomic(1)) == 1);
    CHECK(root_of_unity_order(Cyclotomic(-1)) == 2);
    CHECK(root_of_unity_order(zeta(9, 3)) == 3);
    CHECK_FALSE(root_of_unity_order(zeta(5) + zeta(5, 4)).has_value());
}

TEST_CASE("Kronecker consistency for conductors <= 30") {
    // exhaustive over +-zeta_n^k
    for (i64 n = 1; n <= 30; ++n) {
        for (i64 k = 0; k < n; ++k) {
            for (int sign = 0; sign < 2; ++sign) {
                Cyclotomic a = sign ? -zeta(n, k) : zeta(n, k);
                bool allnorm1 = true;
                for (const auto& c : galois_conjugates(a))
                    if (norm_abs_squared(c) != Cyclotomic(1)) allnorm1 = false;
                CHECK(is_root_of_unity(a) == allnorm1);
                CHECK(allnorm1);  // these really are roots of unity
            }
        }
    }
    // random non-roots: is_root_of_unity iff every conjugate has |.|^2 = 1
    SplitMix64 rng(23);
    int checked = 0;
    while (checked < 1000) {
        i64 n = rng.range(1, 30);
        auto a = random_element(rng, n, 2);
        if (a.is_zero()) continue;
        ++checked;
        bool allnorm1 = true;
        for (const auto& c : galois_conjugates(a))
            if (norm_abs_squared(c) != Cyclotomic(1)) {
                allnorm1 = false;
                break;
            }
        CHECK(is_root_of_unity(a) == allnorm1);
    }
}

TEST_CASE("siegel bound") {
    CHECK(siegel_bound_check(Cyclotomic(1)).kind == SiegelResult::Kind::IsOne);
    auto r2 = siegel_bound_check(Cyclotomic(2));
    CHECK(r2.kind == SiegelResult::Kind::AverageAtLeastThreeHalves);
    CHECK(r2.average == Rat(2));
    // the witness attaining 3/2
    auto alpha = (Cyclotomic(1) + zeta(5)) * (Cyclotomic(1) + zeta(5).conj());
    auto ra = siegel_bound_check(alpha);
    CHECK(ra.kind == SiegelResult::Kind::AverageAtLeastThreeHalves);
    CHECK(ra.average == make_rat(Int(3), Int(2)));
    CHECK(siegel_bound_check(zeta(3)).kind == SiegelResult::Kind::NotTotallyPositive);
    CHECK_THROWS_AS(siegel_bound_check(Cyclotomic(make_rat(Int(1), Int(2)))), NotAlgebraicInteger);

    // randomized: products beta * conj(beta) never land in (1, 3/2)
    SplitMix64 rng(29);
    int done = 0;
    while (done < 60) {
        i64 n = rng.range(1, 40);
        auto beta = random_element(rng, n, 2);
        auto a = norm_abs_squared(beta);
        if (a.is_zero() || a == Cyclotomic(1)) continue;
        auto res = siegel_bound_check(a);  // throws SiegelViolation on failure
        CHECK(res.kind == SiegelResult::Kind::AverageAtLeastThreeHalves);
        CHECK(res.average >= make_rat(Int(3), Int(2)));
        ++done;
    }
}

TEST_CASE("p-power root sum check") {
    auto z3 = zeta(3);
    auto r1 = p_power_root_sum_check({Cyclotomic(1), z3, z3 * z3}, 3);
    CHECK(r1.is_zero);
    CHECK(r1.count_divisible_by_p);

    auto r2 = p_power_root_sum_check({Cyclotomic(-1), Cyclotomic(-1)}, 2);
    CHECK_FALSE(r2.is_zero);

    auto i = zeta(4);
    auto r3 = p_power_root_sum_check({i, i.pow(3), Cyclotomic(1), Cyclotomic(-1)}, 2);
    CHECK(r3.is_zero);
    CHECK(r3.count_divisible_by_p);

    CHECK_THROWS_AS(p_power_root_sum_check({zeta(3)}, 2), NotPPowerRoot);
    CHECK_THROWS_AS(p_power_root_sum_check({Cyclotomic(2)}, 2), NotPPowerRoot);
    // -1 has order 2, not a 3-power
    CHECK_THROWS_AS(p_power_root_sum_check({Cyclotomic(-1)}, 3), NotPPowerRoot);
}

TEST_CASE("conductor cap") {
    CHECK_NOTHROW(zeta(10080));
    CHECK_THROWS_AS(zeta(10081), TooLarge);
    CHECK_THROWS_AS(Cyclotomic::from_coeffs(20000, {Rat(1)}), TooLarge);
}

TEST_CASE("integrality and rational-integer tests") {
    CHECK(Cyclotomic(7).is_rational_integer());
    CHECK_FALSE(Cyclotomic(make_rat(Int(1), Int(3))).is_rational_integer());
    CHECK(zeta(5).is_integral());
    CHECK_FALSE((zeta(5) / Cyclotomic(2)).is_integral());
}

TEST_CASE("serialization round trip") {
    CHECK(zeta(3).to_string() == "cyc(3; 0, 1)");
    CHECK(Cyclotomic(make_rat(Int(-7), Int(3))).to_string() == "cyc(1; -7/3)");
    SplitMix64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        i64 n = rng.range(1, 60);
        auto a = random_element(rng, n);
        CHECK(Cyclotomic::parse(a.to_string()) == a);
    }
    CHECK_THROWS_AS(Cyclotomic::parse("cyc(3; 1)"), ParseError);       // wrong length
    CHECK_THROWS_AS(Cyclotomic::parse("cyc(0; 1)"), ParseError);       // bad conductor
    CHECK_THROWS_AS(Cyclotomic::parse("zeta(3; 0, 1)"), ParseError);   // bad tag
    CHECK_THROWS_AS(Cyclotomic::parse("cyc(3; 1, x)"), ParseError);    // bad rational
}

}  // TEST_SUITE
