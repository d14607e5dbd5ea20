#include <doctest.h>

#include "helpers.hpp"

using namespace puiseux;

TEST_CASE("characteristic_of") {
    CHECK(characteristic_of(3, {4, 7, 10}).b() == std::vector<long>{3, 4});
    CHECK(characteristic_of(4, {6, 7}).b() == std::vector<long>{4, 6, 7});
    CHECK(characteristic_of(4, {6, 7}).e() == std::vector<long>{4, 2, 1});
    CHECK(characteristic_of(2, {3}).b() == std::vector<long>{2, 3});
    CHECK(characteristic_of(1, {}).b() == std::vector<long>{1});
    CHECK_THROWS_AS(characteristic_of(4, {6, 8}), Error); // gcd 2
}

TEST_CASE("index_set") {
    auto ch34 = Characteristic::from_sequence({3, 4});
    CHECK(ch34.index_set_upto(10) == std::vector<long>{3, 4, 5, 6, 7, 8, 9, 10});
    auto ch467 = Characteristic::from_sequence({4, 6, 7});
    CHECK(ch467.index_set_upto(8) == std::vector<long>{4, 6, 7, 8});
    auto ch23 = Characteristic::from_sequence({2, 3});
    CHECK(ch23.index_set_upto(5) == std::vector<long>{2, 3, 4, 5});
}

TEST_CASE("validate_support") {
    auto ch34 = Characteristic::from_sequence({3, 4});
    CHECK(validate_support(ch34, {4, 7, 10}));
    CHECK_FALSE(validate_support(ch34, {7, 10})); // missing b_1 = 4
    auto ch467 = Characteristic::from_sequence({4, 6, 7});
    CHECK(validate_support(ch467, {6, 7, 9}));
    CHECK_FALSE(validate_support(ch467, {5, 6, 7})); // 5 not in I
}

TEST_CASE("unity_power_sum") {
    CHECK(unity_power_sum(3, 6) == 3);
    CHECK(unity_power_sum(3, 7) == 0);
    CHECK(unity_power_sum(1, 12345) == 1);
    CHECK(unity_power_sum(4, -8) == 4);
    CHECK(unity_power_sum(4, -7) == 0);
    // float oracle comparison for small n
    const double pi = 3.14159265358979323846;
    for (long n = 1; n <= 8; ++n)
        for (long i = -20; i <= 20; ++i) {
            std::complex<double> s(0);
            for (long k = 0; k < n; ++k) s += std::polar(1.0, 2.0 * pi * k * i / n);
            CHECK(std::abs(s - std::complex<double>(double(unity_power_sum(n, i)))) < 1e-9);
        }
}

TEST_CASE("weierstrass_from_puiseux examples") {
    // the (3,4)/{4,7,10} family with a = b = c = 1
    PuiseuxParam p{3, {{4, Rational(1)}, {7, Rational(1)}, {10, Rational(1)}}, 30};
    auto f = weierstrass_from_puiseux(p);
    CHECK(f.y_degree() == 3);
    CHECK(f.is_weierstrass());
    // Y^3 - (X^4 + 3X^5 + 6X^6 + 7X^7 + 6X^8 + 3X^9 + X^10)
    std::vector<long> expect{0, 0, 0, 0, -1, -3, -6, -7, -6, -3, -1};
    for (long i = 0; i <= 10; ++i) CHECK(f.coeff(0).at(i) == Rational(expect[static_cast<size_t>(i)]));
    for (long i = 0; i <= f.prec(); ++i) {
        CHECK(f.coeff(1).at(i) == Rational(0));
        CHECK(f.coeff(2).at(i) == Rational(0));
    }

    PuiseuxParam cusp{2, {{3, Rational(1)}}, 6};
    auto g = weierstrass_from_puiseux(cusp);
    CHECK(g.coeff(0).at(3) == Rational(-1));
    CHECK(g.coeff(1).is_zero_series());

    PuiseuxParam lin{1, {{1, Rational(1)}}, 4};
    auto l = weierstrass_from_puiseux(lin);
    CHECK(l.y_degree() == 1);
    CHECK(l.coeff(0).at(1) == Rational(-1)); // Y - X

    PuiseuxParam bad{4, {{6, Rational(1)}}, 6};
    CHECK_THROWS_AS(weierstrass_from_puiseux(bad), Error);
}

TEST_CASE("symbolic weierstrass coefficients for (3,4), support {4,7,10}") {
    auto ch = Characteristic::from_sequence({3, 4});
    auto F = symbolic_weierstrass_coeffs(ch, 30, std::set<long>{4, 7, 10});
    auto areg = F.areg;
    auto a = MultiPoly<Rational>::variable(areg, *areg->index_of(VarDescriptor::A(4)), Rational(1));
    auto b = MultiPoly<Rational>::variable(areg, *areg->index_of(VarDescriptor::A(7)), Rational(1));
    auto c = MultiPoly<Rational>::variable(areg, *areg->index_of(VarDescriptor::A(10)), Rational(1));

    CHECK(F.entry(4, 0) == -a.pow(3));
    CHECK(F.entry(5, 0) == -(a * a * b).scaled(Rational(3)));
    CHECK(F.entry(6, 0) == -((a * b * b).scaled(Rational(3)) + (a * a * c).scaled(Rational(3))));
    CHECK(F.entry(7, 0) == -(b.pow(3) + (a * b * c).scaled(Rational(6))));
    CHECK(F.entry(8, 0) == -((b * b * c).scaled(Rational(3)) + (a * c * c).scaled(Rational(3))));
    CHECK(F.entry(9, 0) == -(b * c * c).scaled(Rational(3)));
    CHECK(F.entry(10, 0) == -c.pow(3));
    CHECK(F.entry(0, 3) == MultiPoly<Rational>::constant(areg, Rational(1)));
    for (long i = 1; i <= 10; ++i) {
        CHECK(F.entry(i, 1).is_zero_poly());
        CHECK(F.entry(i, 2).is_zero_poly());
    }
}

TEST_CASE("symbolic weierstrass coefficients, other classes") {
    auto ch23 = Characteristic::from_sequence({2, 3});
    auto F = symbolic_weierstrass_coeffs(ch23, 6, std::set<long>{3});
    auto a3 = MultiPoly<Rational>::variable(F.areg, 0, Rational(1));
    CHECK(F.entry(3, 0) == -(a3 * a3));

    // degenerate n = 1: F_{i,0} = -A_i
    auto ch1 = Characteristic::from_sequence({1});
    auto F1 = symbolic_weierstrass_coeffs(ch1, 5, std::nullopt);
    for (long i = 1; i <= 5; ++i) {
        auto ai = MultiPoly<Rational>::variable(F1.areg, *F1.areg->index_of(VarDescriptor::A(i)), Rational(1));
        CHECK(F1.entry(i, 0) == -ai);
    }

    CHECK_THROWS_AS(symbolic_weierstrass_coeffs(ch23, 2, std::nullopt), Error); // P < b_m
}

TEST_CASE("verify_parametrisation") {
    PuiseuxParam cusp{2, {{3, Rational(1)}}, 9};
    auto f = weierstrass_from_puiseux(cusp);
    auto rep = verify_parametrisation(f, cusp);
    CHECK(rep.vanishes);

    // mismatched pair: f = Y^2 - X^3 against (T^2, T^3 + T^4)
    PuiseuxParam p2{2, {{3, Rational(1)}, {4, Rational(1)}}, 9};
    auto rep2 = verify_parametrisation(f, p2);
    CHECK_FALSE(rep2.vanishes);
    CHECK(rep2.order == 7);
}

TEST_CASE("power-sum shortcut agrees with the complex brute force") {
    std::mt19937 rng(1618);
    for (long n = 1; n <= 4; ++n) {
        for (int it = 0; it < 6; ++it) {
            const long P = 14;
            PuiseuxParam p;
            p.n = n;
            p.truncation = P;
            for (long i = 1; i <= P; ++i)
                if (th::rnd_int(rng, 0, 2) == 0) p.coeffs[i] = th::rnd_rational(rng, 4);
            long g = n;
            for (long i : p.support()) g = std::gcd(g, i);
            if (g != 1) p.coeffs[std::max(2L, n - 1)] = Rational(1);
            g = n;
            for (long i : p.support()) g = std::gcd(g, i);
            if (g != 1) continue;
            auto f = weierstrass_from_puiseux(p);
            auto brute = th::weierstrass_brute_force(n, p.coeffs, P);
            for (long j = 0; j <= n; ++j)
                for (long i = 0; i <= f.prec(); ++i) {
                    auto got = f.coeff(j).at(i).to_double();
                    auto want = brute[static_cast<size_t>(j)][static_cast<size_t>(n * i)];
                    CHECK(std::abs(std::complex<double>(got) - want) < 1e-9);
                }
        }
    }
}

TEST_CASE("exactness window: coefficients depend only on a_w with w <= n*i") {
    PuiseuxParam p{3, {{4, Rational(1)}, {7, Rational(2)}}, 21};
    auto f = weierstrass_from_puiseux(p);
    // perturb a_w beyond n*i = 12: entries (i <= 4, j) unchanged
    PuiseuxParam q = p;
    q.coeffs[13] = Rational(5);
    auto g = weierstrass_from_puiseux(q);
    for (long j = 0; j <= 3; ++j)
        for (long i = 0; i <= 4; ++i) CHECK(f.coeff(j).at(i) == g.coeff(j).at(i));
}

TEST_CASE("rotation by -1 for even n gives the same Weierstrass polynomial") {
    std::mt19937 rng(2718);
    for (int it = 0; it < 10; ++it) {
        PuiseuxParam p;
        p.n = 2 * th::rnd_int(rng, 1, 2);
        p.truncation = 12;
        for (long i = 1; i <= 12; ++i)
            if (th::rnd_int(rng, 0, 1) == 0) p.coeffs[i] = th::rnd_rational(rng, 3);
        long g = p.n;
        for (long i : p.support()) g = std::gcd(g, i);
        if (g != 1) continue;
        PuiseuxParam rot = p;
        for (auto& [i, c] : rot.coeffs)
            if (i % 2 == 1) c = -c;
        auto f = weierstrass_from_puiseux(p);
        auto h = weierstrass_from_puiseux(rot);
        CHECK(f == h);
    }
}

TEST_CASE("support characterization, both directions, on random data") {
    std::mt19937 rng(161803);
    int positives = 0, negatives = 0;
    while (positives < 200 || negatives < 200) {
        long n = th::rnd_int(rng, 2, 8);
        const long P = 24;
        // random valid support: all b_k plus random I-elements
        std::set<long> supp;
        long e = n;
        while (e > 1) {
            long cand = th::rnd_int(rng, 2, P);
            if (cand % e != 0) {
                // keep the increasing-b order: candidates must exceed previous picks
                if (!supp.empty() && cand <= *supp.rbegin()) continue;
                supp.insert(cand);
                e = std::gcd(e, cand);
            }
        }
        auto ch = characteristic_of(n, supp);
        // enrich with random extra I-elements
        for (long i = 1; i <= P; ++i)
            if (ch.in_index_set(i) && th::rnd_int(rng, 0, 3) == 0) supp.insert(i);
        if (positives < 200) {
            ++positives;
            CHECK(validate_support(ch, supp));
            CHECK(characteristic_of(n, supp) == ch);
        }
        if (negatives < 200 && ch.m() >= 1) {
            ++negatives;
            if (th::rnd_int(rng, 0, 1) == 0) {
                // drop a characteristic exponent
                auto broken = supp;
                broken.erase(ch.b()[1]);
                bool ok = validate_support(ch, broken);
                CHECK_FALSE(ok);
            } else {
                // insert an index outside I
                long bad = 0;
                for (long i = 2; i <= P; ++i)
                    if (!ch.in_index_set(i)) { bad = i; break; }
                if (bad != 0) {
                    auto broken = supp;
                    broken.insert(bad);
                    CHECK_FALSE(validate_support(ch, broken));
                    long g2 = n;
                    for (long i : broken) g2 = std::gcd(g2, i);
                    if (g2 == 1) CHECK_FALSE(characteristic_of(n, broken) == ch);
                }
            }
        }
    }
}
