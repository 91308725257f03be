#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hbsum/sums.hpp"

using namespace hbsum;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

const FunctionTable& table() {
    static FunctionTable t(10);
    return t;
}

SumSpec spec_of(long c, SumWeight w, Rational z, FunctionSpec f1, FunctionSpec f2, int start = 0) {
    SumSpec s;
    s.modulus = c;
    s.weight = w;
    s.inner_shift = std::move(z);
    s.first = std::move(f1);
    s.second = std::move(f2);
    s.start = start;
    return s;
}

FunctionSpec factor(FunFamily fam, int order, long mult, Rational shift, int sign) {
    return FunctionSpec{fam, order, mult, std::move(shift), sign};
}

}  // namespace

TEST_CASE("kernel handles trivial and empty ranges") {
    const auto& t = table();
    // c=1, start=0: the single term f1(z + x) f2(z + y)
    auto s = spec_of(1, SumWeight::None, rat(0),
                     factor(FunFamily::BernoulliFun, 2, 1, rat(0), +1),
                     factor(FunFamily::BernoulliFun, 3, 1, rat(0), +1));
    CHECK(generalized_sum(t, s) == rat(0));  // B_3(0) = 0
    s.second.order = 2;
    CHECK(generalized_sum(t, s) == rat(1, 36));  // B_2(0)^2
    s.start = 1;
    CHECK(generalized_sum(t, s) == rat(0));  // empty range
    s.modulus = 0;
    CHECK_THROWS_AS(generalized_sum(t, s), std::domain_error);
}

TEST_CASE("kernel worked examples") {
    const auto& t = table();
    // sum_mu (-1)^mu B_1(mu/2)^2 = B_1(0)^2 = 1/4
    CHECK(S2_pq(t, 1, 1, 1, 1, 2, rat(0), rat(0), rat(0)) == rat(1, 4));
    // E_0(0)B_1(0) - E_0(1/2)B_1(1/2) = -1/2
    CHECK(S35_pq(t, 1, 1, 1, 1, 2, rat(0), rat(0), rat(0)) == rat(-1, 2));
}

TEST_CASE("classical sums match hand values") {
    CHECK(classical_sum(ClassicalKind::Dedekind, 1, 3) == rat(1, 18));
    CHECK(classical_sum(ClassicalKind::Dedekind, 5, 1) == rat(0));
    CHECK(classical_sum(ClassicalKind::Dedekind, 3, 7) == rat(-1, 14));
    CHECK(classical_sum(ClassicalKind::Dedekind, 5, 12) == rat(-1, 72));
    CHECK(classical_sum(ClassicalKind::S, 1, 2) == rat(1));
    CHECK(classical_sum(ClassicalKind::S, 3, 5) == rat(0));
    CHECK(classical_sum(ClassicalKind::S, 2, 7) == rat(2));
    CHECK(classical_sum(ClassicalKind::S1, 2, 5) == rat(-4, 5));
    CHECK(classical_sum(ClassicalKind::S1, 3, 8) == rat(0));
    CHECK(classical_sum(ClassicalKind::S2, 3, 7) == rat(0));
    CHECK(classical_sum(ClassicalKind::S3, 2, 5) == rat(4, 5));
    CHECK(classical_sum(ClassicalKind::S4, 3, 7) == rat(2));
    CHECK(classical_sum(ClassicalKind::S5, 3, 5) == rat(4, 5));
    CHECK(classical_sum(ClassicalKind::S5, 2, 9) == rat(0));
    CHECK_THROWS_AS(classical_sum(ClassicalKind::Dedekind, 1, 0), std::domain_error);
}

TEST_CASE("named wrappers match their defining sums") {
    const auto& t = table();
    CHECK(hwz_s(t, 2, 3, 3, 4, 5, rat(1, 2), rat(1, 3), rat(1, 4)) ==
          rat(2591, 810000));
    CHECK(carlitz_s(t, 2, 3, 5, rat(1, 3), rat(1, 2)) == rat(1, 15));
    CHECK(rademacher_s(t, 3, 5, rat(1, 3), rat(1, 2)) == rat(-1, 5));
    CHECK(mikolas_s(t, 2, 3, 3, 4, 5) == rat(0));
    CHECK(mikolas_s(t, 2, 2, 3, 4, 5) == rat(581, 22500));
    CHECK(mikolas_s(t, 1, 2, 2, 3, 7) == rat(-1, 12));
    CHECK(apostol_s(t, 3, 2, 5) == rat(-3, 625));
    // Mikolas over modulus 1 degenerates to the single term B_p(0) B_q(0)
    CHECK(mikolas_s(t, 2, 4, 3, 5, 1) == rat(1, 6) * rat(-1, 30));

    const Rational x(1, 2), y(1, 3), z(1, 4);
    CHECK(S_pq(t, 2, 2, 1, 2, 3, x, y, z) == rat(-2, 9));
    CHECK(S1_pq(t, 2, 2, 1, 2, 3, x, y, z) == rat(5, 432));
    CHECK(S2_pq(t, 2, 2, 1, 2, 3, x, y, z) == rat(17, 5184));
    CHECK(S35_pq(t, 2, 2, 1, 2, 3, x, y, z) == rat(-5, 432));
    CHECK(S4_pq(t, 2, 2, 1, 2, 3, x, y, z) == rat(1, 18));
    CHECK(S_pq_bar(t, 2, 2, 1, 2, 3, x, y, z) == rat(-1, 18));
    CHECK(S_pq_bar(t, 1, 1, 1, 1, 2, rat(0), rat(0), rat(0)) == rat(-1));
}

TEST_CASE("one-variable wrappers are the documented slices") {
    const auto& t = table();
    const Rational x(1, 3), z(1, 5);
    for (int p = 1; p <= 3; ++p) {
        for (long a : {1L, 2L, 3L}) {
            for (long c : {2L, 5L}) {
                CHECK(S_p(t, p, a, c, x, z) == S_pq(t, p, 1, a, 1, c, x, rat(0), z));
                CHECK(Sp1(t, p, a, c, x, z) == S1_pq(t, p, 1, a, 1, c, x, rat(0), z));
                CHECK(Sp2(t, p, a, c, x, z) == S2_pq(t, p, 1, a, 1, c, x, rat(0), z));
                CHECK(Sp5(t, p, a, c, x, z) == S35_pq(t, p, 1, a, 1, c, x, rat(0), z));
            }
        }
    }
    // Sq3 / Sq4 against direct loops
    const Rational y(1, 7);
    for (int q = 1; q <= 3; ++q) {
        Rational s3;
        for (long mu = 0; mu < 5; ++mu) {
            Rational base = (Rational(mu) + z) / Rational(5);
            Rational term = t.bernoulli_fun(q, Rational(3) * base + y) * t.euler_fun(0, base);
            s3 += (mu & 1) ? -term : term;
        }
        CHECK(Sq3(t, q, 3, 5, y, z) == s3);
        Rational s4;
        for (long mu = 0; mu < 5; ++mu) {
            Rational base = (Rational(mu) + y) / Rational(5);
            s4 += t.euler_fun(q - 1, Rational(3) * base + z) * t.euler_fun(0, base);
        }
        CHECK(Sq4(t, q, 3, 5, z, y) == s4);
    }
}

TEST_CASE("bar wrappers use the opposite shift sign") {
    const auto& t = table();
    // With order >= 2 factors the bar and plain families agree pointwise, so
    // the only difference is the sign on x and y.
    const Rational x(1, 3), y(1, 5), z(1, 7);
    CHECK(S2_bar(t, 2, 3, 2, 3, 5, x, y, z) == S2_pq(t, 2, 3, 2, 3, 5, -x, -y, z));
    CHECK(S4_bar(t, 3, 3, 2, 3, 5, x, y, z) == S4_pq(t, 3, 3, 2, 3, 5, -x, -y, z));
    CHECK(S1_bar(t, 3, 2, 2, 3, 5, x, y, z) == S1_pq(t, 3, 2, 2, 3, 5, -x, -y, z));
    CHECK(S35_bar(t, 3, 2, 2, 3, 5, x, y, z) == S35_pq(t, 3, 2, 2, 3, 5, -x, -y, z));
}

TEST_CASE("classical reductions of the generalized sums") {
    const auto& t = table();
    for (long a = 1; a <= 9; ++a) {
        for (long c = 1; c <= 9; ++c) {
            // sum_mu E_0(a mu/c) B_1(mu/c) = s1(a,c) + E_0(0) B_1(0)
            CHECK(S1_pq(t, 1, 1, a, 1, c, rat(0), rat(0), rat(0)) ==
                  classical_sum(ClassicalKind::S1, a, c) + rat(-1, 2));
            if (std::gcd(a, c) != 1) continue;
            // sum_mu (-1)^mu B_1(a mu/c) B_1(mu/c) = s2(a,c) + B_1(0)^2
            CHECK(S2_pq(t, 1, 1, a, 1, c, rat(0), rat(0), rat(0)) ==
                  classical_sum(ClassicalKind::S2, a, c) + rat(1, 4));
            CHECK(S35_pq(t, 1, 1, a, 1, c, rat(0), rat(0), rat(0)) ==
                  classical_sum(ClassicalKind::S5, a, c) - rat(1, 2));
            CHECK(S35_pq(t, 1, 1, 1, a, c, rat(0), rat(0), rat(0)) ==
                  classical_sum(ClassicalKind::S3, a, c) - rat(1, 2));
            CHECK(S4_pq(t, 1, 1, c, -1, a, rat(0), rat(0), rat(0)) ==
                  -classical_sum(ClassicalKind::S4, c, a) + rat(1));
            // Dedekind sum as an hwz slice
            CHECK(hwz_s(t, 1, 1, a, 1, c, rat(0), rat(0), rat(0)) ==
                  classical_sum(ClassicalKind::Dedekind, a, c));
        }
    }
}

TEST_CASE("inner shift period mod c, with the Euler antiperiod sign") {
    const auto& t = table();
    const Rational x(1, 3), y(2, 5), z(3, 7);
    // z -> z+c adds the first multiplier to one argument and the second to the
    // other, so each Euler factor contributes (-1)^multiplier.
    for (long c : {2L, 3L, 5L}) {
        const Rational zc = z + Rational(c);
        CHECK(hwz_s(t, 2, 2, 1, 2, c, x, y, zc) == hwz_s(t, 2, 2, 1, 2, c, x, y, z));
        CHECK(S2_pq(t, 2, 2, 1, 2, c, x, y, zc) == S2_pq(t, 2, 2, 1, 2, c, x, y, z));
        CHECK(S_pq(t, 2, 2, 1, 2, c, x, y, zc) == -S_pq(t, 2, 2, 1, 2, c, x, y, z));
        CHECK(S_pq(t, 2, 2, 1, 3, c, x, y, zc) == S_pq(t, 2, 2, 1, 3, c, x, y, z));
        CHECK(S_pq(t, 2, 2, 2, 2, c, x, y, zc) == S_pq(t, 2, 2, 2, 2, c, x, y, z));
        CHECK(S1_pq(t, 2, 2, 1, 2, c, x, y, zc) == -S1_pq(t, 2, 2, 1, 2, c, x, y, z));
        CHECK(S1_pq(t, 2, 2, 2, 3, c, x, y, zc) == S1_pq(t, 2, 2, 2, 3, c, x, y, z));
    }
}

TEST_CASE("outer shifts follow the factor family period") {
    const auto& t = table();
    const Rational x(1, 3), y(2, 5), z(3, 7);
    // Bernoulli factors: period 1. Euler factors: antiperiod 1.
    CHECK(hwz_s(t, 2, 3, 2, 3, 5, x + Rational(1), y, z) == hwz_s(t, 2, 3, 2, 3, 5, x, y, z));
    CHECK(S2_pq(t, 2, 2, 2, 3, 5, x + Rational(1), y, z) == S2_pq(t, 2, 2, 2, 3, 5, x, y, z));
    CHECK(S_pq(t, 2, 2, 2, 3, 5, x + Rational(1), y, z) == -S_pq(t, 2, 2, 2, 3, 5, x, y, z));
    CHECK(S_pq(t, 2, 2, 2, 3, 5, x + Rational(1), y + Rational(1), z) ==
          S_pq(t, 2, 2, 2, 3, 5, x, y, z));
    CHECK(S1_pq(t, 2, 2, 2, 3, 5, x + Rational(1), y, z) == -S1_pq(t, 2, 2, 2, 3, 5, x, y, z));
    CHECK(S1_pq(t, 2, 2, 2, 3, 5, x, y + Rational(1), z) == S1_pq(t, 2, 2, 2, 3, 5, x, y, z));
}

TEST_CASE("homogeneity under each family's parity regime") {
    const auto& t = table();
    const Rational x(1, 2), y(1, 3), z(1, 5);
    struct Case { long a, b, c; };
    for (auto [a, b, c] : {Case{1, 2, 3}, Case{1, 1, 2}, Case{3, 4, 5}}) {
        REQUIRE((a + b + c) % 2 == 0);
        for (long d : {2L, 3L}) {
            CHECK(S_pq(t, 2, 3, d * a, d * b, d * c, x, y, z) ==
                  Rational(d) * S_pq(t, 2, 3, a, b, c, x, y, z));
        }
    }
    for (auto [a, b, c] : {Case{1, 2, 3}, Case{2, 1, 2}, Case{3, 2, 5}}) {
        REQUIRE((a + c) % 2 == 0);
        for (long d : {2L, 3L}) {
            CHECK(S35_pq(t, 2, 3, d * a, d * b, d * c, x, y, z) ==
                  Rational(d) * S35_pq(t, 2, 3, a, b, c, x, y, z));
        }
    }
    for (auto [a, b, c] : {Case{1, 3, 2}, Case{2, 2, 3}, Case{1, 1, 5}}) {
        REQUIRE((a + b) % 2 == 0);
        for (long d : {2L, 3L}) {
            CHECK(S4_pq(t, 2, 3, d * a, d * b, d * c, x, y, z) ==
                  Rational(d) * S4_pq(t, 2, 3, a, b, c, x, y, z));
        }
    }
}

TEST_CASE("single-factor Euler sums collapse for odd modulus") {
    const auto& t = table();
    // sum_{mu=0}^{a-1} E_p(c(mu+x)/a + z) = a^-p E_p(az + cx), a odd, c even
    for (long a : {1L, 3L, 5L, 7L}) {
        for (long c : {2L, 4L, 8L}) {
            if (std::gcd(a, c) != 1) continue;
            for (int p = 0; p <= 4; ++p) {
                const Rational x(1, 3), z(2, 5);
                auto s = spec_of(a, SumWeight::None, x,
                                 factor(FunFamily::EulerFun, p, c, z, +1),
                                 factor(FunFamily::BernoulliFun, 0, 1, rat(0), +1));
                CHECK(generalized_sum(t, s) ==
                      Rational(a).pow(-p) * t.euler_fun(p, Rational(a) * z + Rational(c) * x));
            }
        }
    }
}

TEST_CASE("order table agrees with pointwise evaluation") {
    const auto& t = table();
    auto shape = spec_of(7, SumWeight::AlternatingMu, rat(2, 3),
                         factor(FunFamily::EulerFun, 0, 3, rat(1, 4), +1),
                         factor(FunFamily::BernoulliFun, 0, 5, rat(1, 6), -1));
    auto grid = generalized_sum_table(t, shape, 5, 5);
    REQUIRE(grid.size() == 6);
    for (int i = 0; i <= 5; ++i) {
        REQUIRE(grid[i].size() == 6);
        for (int j = 0; j <= 5; ++j) {
            auto s = shape;
            s.first.order = i;
            s.second.order = j;
            CHECK(grid[i][j] == generalized_sum(t, s));
        }
    }
    // bar families and start=1 take the same path
    shape = spec_of(6, SumWeight::None, rat(0),
                    factor(FunFamily::EulerBar, 0, 2, rat(1, 3), -1),
                    factor(FunFamily::BernoulliBar, 0, 3, rat(0), -1), 1);
    grid = generalized_sum_table(t, shape, 4, 4);
    for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j <= 4; ++j) {
            auto s = shape;
            s.first.order = i;
            s.second.order = j;
            CHECK(grid[i][j] == generalized_sum(t, s));
        }
    }
}

TEST_CASE("orders beyond the table are rejected") {
    FunctionTable small(3);
    auto s = spec_of(5, SumWeight::None, rat(0),
                     factor(FunFamily::BernoulliFun, 4, 1, rat(0), +1),
                     factor(FunFamily::BernoulliFun, 1, 1, rat(0), +1));
    CHECK_THROWS_AS(generalized_sum(small, s), DegreeError);
    CHECK_THROWS_AS(generalized_sum_table(small, s, 4, 1), DegreeError);
}
