#include <doctest.h>

#include <cmath>
#include <complex>

#include "superzeta/divisor.hpp"
#include "superzeta/json_io.hpp"

using namespace superzeta;
using C = std::complex<double>;

TEST_CASE("divisor superzeta closed forms") {
    // progression at 0 with constant weight is the Hurwitz zeta
    auto d = DivisorFamily::progression(C(0.0), 1);
    const C s(1.7, 0.5), z(2.2, 0.0);
    CHECK(std::abs(divisor_superzeta({d}, s, z).value - hurwitz_zeta(s, z)) < 1e-13);
    // shifted progression: zeta_H(s, z - start)
    auto shifted = DivisorFamily::progression(C(-0.5), 3);
    CHECK(std::abs(divisor_superzeta({shifted}, s, z).value -
                   3.0 * hurwitz_zeta(s, z + 0.5)) < 1e-13);
    // multiple(2) progression at 0: zeta_2(3, 1) = pi^2/6
    auto m2 = DivisorFamily::progression(C(0.0), 1, 2);
    CHECK(divisor_superzeta({m2}, C(3.0), C(1.0)).value.real() ==
          doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
    // finite families are entire in s
    auto fin = DivisorFamily::finite({{C(1.0, 1.0), 2}, {C(-1.0, -2.0), -1}});
    const C expect = 2.0 * std::pow(z - C(1.0, 1.0), -s) - std::pow(z + C(1.0, 2.0), -s);
    CHECK(std::abs(divisor_superzeta({fin}, s, z).value - expect) < 1e-13);
}

TEST_CASE("closed form vs truncated direct sum") {
    auto prog = DivisorFamily::progression(C(-1.0), 1);
    const C s(2.5), z(1.4);
    C direct = 0.0;
    const long long L = 10000;
    for (long long l = 0; l < L; ++l)
        direct += std::pow(z + 1.0 + static_cast<double>(l), -s);
    const C w = z + 1.0 + static_cast<double>(L);
    direct += std::pow(w, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(w, -s);
    CHECK(std::abs(divisor_superzeta({prog}, s, z).value - direct) < 1e-8);
}

TEST_CASE("admissibility") {
    LabeledDivisor d;
    d.nontrivial = {DivisorFamily::finite({{C(1.0, 1.0), 1}})};
    CHECK(admissible(d, C(1.0)));
    LabeledDivisor d2;
    d2.nontrivial = {DivisorFamily::finite({{C(2.0), 1}})};
    CHECK(!admissible(d2, C(1.0)));  // z - 2 = -1 on the cut
    LabeledDivisor d3;
    d3.nontrivial = {DivisorFamily::progression(C(0.0), 1)};
    CHECK(!admissible(d3, C(-0.5)));
    CHECK(admissible(d3, C(0.5)));
    CHECK(admissible(d3, C(-0.5, 1.0)));  // off the real axis
    CHECK_THROWS_AS(divisor_superzeta(d2.nontrivial, C(2.0), C(1.0)), domain_error);
}

TEST_CASE("merge") {
    LabeledDivisor a, b;
    a.nontrivial = {DivisorFamily::finite({{C(2.0), 1}})};
    b.nontrivial = {DivisorFamily::finite({{C(2.0), -1}})};
    CHECK(merge(a, b).nontrivial.empty());  // orders cancel
    b.nontrivial = {DivisorFamily::finite({{C(2.0), -1}})};
    a.nontrivial = {DivisorFamily::finite({{C(2.0), 3}})};
    auto m = merge(a, b);
    REQUIRE(m.nontrivial.size() == 1);
    REQUIRE(m.nontrivial[0].points().size() == 1);
    CHECK(m.nontrivial[0].points()[0].order == 2);
    // disjoint supports concatenate
    LabeledDivisor c;
    c.nontrivial = {DivisorFamily::finite({{C(5.0, 1.0), 1}})};
    auto mc = merge(a, c);
    REQUIRE(mc.nontrivial.size() == 1);
    CHECK(mc.nontrivial[0].points().size() == 2);
    // identical progressions add orders
    LabeledDivisor p1, p2;
    p1.trivial = {DivisorFamily::progression(C(0.0), 2)};
    p2.trivial = {DivisorFamily::progression(C(0.0), 1)};
    auto mp = merge(p1, p2);
    REQUIRE(mp.trivial.size() == 1);
    CHECK(mp.trivial[0].order() == 3);
}

TEST_CASE("linearity of the superzeta under merge") {
    LabeledDivisor a, b;
    a.nontrivial = {DivisorFamily::finite({{C(0.5, 1.0), 2}}),
                    DivisorFamily::progression(C(-1.0), 1)};
    a.poles = {DivisorFamily::finite({{C(0.0, -1.0), 1}})};
    b.nontrivial = {DivisorFamily::finite({{C(0.5, 1.0), -1}})};
    b.trivial = {DivisorFamily::progression(C(0.0), 1, 2)};
    const C s(2.7, 0.3), z(2.1, 0.4);
    const C merged = labeled_superzeta(merge(a, b), s, z).value;
    const C split = labeled_superzeta(a, s, z).value + labeled_superzeta(b, s, z).value;
    CHECK(std::abs(merged - split) < 1e-10);
}

TEST_CASE("NT/T/P splitting identity") {
    // Z_f = Z^NT + Z^T - Z^P for any labeling, by construction
    LabeledDivisor labeled;
    labeled.nontrivial = {DivisorFamily::finite({{C(0.3, 2.0), 1}, {C(0.3, -2.0), 1}})};
    labeled.trivial = {DivisorFamily::progression(C(-1.0), 1)};
    labeled.poles = {DivisorFamily::finite({{C(0.0, 0.5), 2}})};
    const C s(1.9, -0.6), z(1.8, 0.1);
    const C total = labeled_superzeta(labeled, s, z).value;
    const C by_parts = divisor_superzeta(labeled.nontrivial, s, z).value +
                       divisor_superzeta(labeled.trivial, s, z).value -
                       divisor_superzeta(labeled.poles, s, z).value;
    CHECK(std::abs(total - by_parts) < 1e-14);
}

TEST_CASE("divisor JSON schema") {
    const auto j = json::parse(R"({
        "nontrivial": {"finite": [[0.5, 1.0, 2]],
                        "progressions": [{"start": [0.0, 0.0], "order": 1,
                                          "weight": {"multiple": 2}}]},
        "poles": {"finite": [[0.0, -1.0, 1]]}
    })");
    auto d = io::parse_labeled_divisor(j);
    REQUIRE(d.nontrivial.size() == 2);
    CHECK(d.nontrivial[0].points()[0].order == 2);
    CHECK(d.nontrivial[1].multiple() == 2);
    REQUIRE(d.poles.size() == 1);
    CHECK(d.trivial.empty());
    const auto bad = json::parse(R"({"finite": [[1.0, 2.0]]})");
    CHECK_THROWS_AS(io::parse_divisor(bad), parse_error);
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(DivisorFamily::finite({{C(1.0), 0}}), domain_error);
    CHECK_THROWS_AS(DivisorFamily::progression(C(0.0), 0), domain_error);
    CHECK_THROWS_AS(DivisorFamily::progression(C(0.0), 1, -1), domain_error);
}
