#include <doctest.h>
#include <algorithm>

#include "genusfield/arith.hpp"
#include "genusfield/errors.hpp"
#include "oracles.hpp"

using namespace genusfield;
using namespace genusfield::arith;

TEST_CASE("is_prime on small inputs") {
    CHECK(is_prime(41));
    CHECK_FALSE(is_prime(33));
    CHECK(is_prime(2));
    CHECK_THROWS_AS(is_prime(1), DomainError);
    CHECK_THROWS_AS(is_prime(0), DomainError);
}

TEST_CASE("is_prime agrees with trial division below 200000") {
    for (std::int64_t n = 2; n < 200000; ++n) REQUIRE(is_prime(static_cast<std::uint64_t>(n)) == oracle::is_prime(n));
}

TEST_CASE("is_prime on large known values") {
    CHECK(is_prime(1'000'000'007ULL));
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime(3215031751ULL));       // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ULL));
    CHECK_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}

TEST_CASE("mod_pow examples") {
    CHECK(mod_pow(2, 10, 41) == 40);
    CHECK(mod_pow(2, 18, 73) == 1);
    for (std::int64_t x : {-7, 0, 3, 99}) CHECK(mod_pow(x, 0, 13) == 1);
    CHECK(mod_pow(-2, 3, 7) == 6);
}

TEST_CASE("mod_pow against repeated multiplication") {
    for (std::int64_t m = 2; m < 60; ++m)
        for (std::int64_t b = -20; b < 20; ++b)
            for (std::uint64_t e = 0; e < 25; ++e)
                REQUIRE(mod_pow(b, e, m) == oracle::power_mod(b, static_cast<std::int64_t>(e), m));
}

TEST_CASE("jacobi examples and errors") {
    CHECK(jacobi(2, 7) == 1);
    CHECK(jacobi(2, 5) == -1);
    CHECK(jacobi(15, 15) == 0);
    CHECK_THROWS_AS(jacobi(3, 8), DomainError);
}

TEST_CASE("jacobi matches the Legendre product") {
    for (std::int64_t n = 3; n < 400; n += 2)
        for (std::int64_t a = -50; a < 120; ++a) REQUIRE(jacobi(a, n) == oracle::jacobi(a, n));
}

TEST_CASE("jacobi equals Euler's criterion at primes") {
    for (std::int64_t p = 3; p < 3000; p += 2) {
        if (!oracle::is_prime(p)) continue;
        for (std::int64_t a = 1; a < 40; ++a) {
            if (a % p == 0) continue;
            const auto e = oracle::power_mod(a, (p - 1) / 2, p);
            REQUIRE(jacobi(a, p) == (e == 1 ? 1 : -1));
        }
    }
}

TEST_CASE("quartic_symbol_two examples") {
    CHECK(quartic_symbol_two(41) == QuarticSign::Minus);
    CHECK(quartic_symbol_two(73) == QuarticSign::Plus);
    CHECK(quartic_symbol_two(89) == QuarticSign::Plus);
    CHECK_THROWS_AS(quartic_symbol_two(13), DomainError);
    CHECK_THROWS_AS(quartic_symbol_two(105), DomainError);
}

TEST_CASE("quartic_symbol_two agrees with fourth-power search and a^2+64b^2") {
    int checked = 0;
    for (std::int64_t ell = 17; ell < 20000; ell += 8) {
        if (!oracle::is_prime(ell)) continue;
        const int expected = oracle::quartic_two(ell);
        REQUIRE(to_int(quartic_symbol_two(ell)) == expected);
        bool gauss = false;
        for (std::int64_t b = 1; 64 * b * b < ell && !gauss; ++b) {
            const std::int64_t rest = ell - 64 * b * b;
            for (std::int64_t a = 1; a * a <= rest && !gauss; ++a) gauss = a * a == rest;
        }
        REQUIRE(gauss == (expected == 1));
        ++checked;
    }
    CHECK(checked > 200);
}

TEST_CASE("factor_squarefree examples") {
    CHECK(factor_squarefree(65).primes == std::vector<std::int64_t>{5, 13});
    const auto neg = factor_squarefree(-33);
    CHECK(neg.primes == std::vector<std::int64_t>{3, 11});
    CHECK(neg.value == -33);
    CHECK(neg.abs_value() == 33);
    CHECK_THROWS_AS(factor_squarefree(45), NotSquareFree);
    CHECK_THROWS_AS(factor_squarefree(1), Degenerate);
    CHECK_THROWS_AS(factor_squarefree(-1), Degenerate);
    CHECK_THROWS_AS(factor_squarefree(0), Degenerate);
}

TEST_CASE("factor_squarefree against trial division") {
    for (std::int64_t d = 2; d < 30000; ++d) {
        const auto expected = oracle::prime_factors(d);
        bool square_free = true;
        for (std::size_t i = 1; i < expected.size(); ++i) square_free &= expected[i] != expected[i - 1];
        if (square_free)
            REQUIRE(factor_squarefree(d).primes == expected);
        else
            REQUIRE_THROWS_AS(factor_squarefree(d), NotSquareFree);
    }
}

TEST_CASE("factorize handles semiprimes past the trial-division bound") {
    const std::uint64_t p = 1'000'000'007ULL, q = 998'244'353ULL;
    const auto f = factorize(p * q);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::pair<std::uint64_t, int>{q, 1});
    CHECK(f[1] == std::pair<std::uint64_t, int>{p, 1});
}

TEST_CASE("from_primes validates a supplied factorization") {
    CHECK(from_primes(615, {41, 3, 5}).primes == std::vector<std::int64_t>{3, 5, 41});
    CHECK_THROWS_AS(from_primes(615, {3, 5}), DomainError);
    CHECK_THROWS_AS(from_primes(615, {3, 205}), DomainError);
    CHECK_THROWS_AS(from_primes(45, {3, 3, 5}), NotSquareFree);
}

TEST_CASE("sqrt_mod_all lists exactly the square roots") {
    for (std::uint64_t n = 3; n < 700; n += 2)
        for (std::int64_t a : {-1, -2, -8, -16, 2, 7}) {
            if (oracle::gcd(a, static_cast<std::int64_t>(n)) != 1) {
                CHECK_THROWS_AS(sqrt_mod_all(a, n), DomainError);
                continue;
            }
            std::vector<std::uint64_t> expected;
            for (std::uint64_t x = 0; x < n; ++x) {
                const auto lhs = static_cast<std::int64_t>(x * x % n);
                if (((lhs - a) % static_cast<std::int64_t>(n)) == 0) expected.push_back(x);
            }
            auto got = sqrt_mod_all(a, n);
            std::sort(got.begin(), got.end());
            REQUIRE(got == expected);
        }
}

TEST_CASE("isqrt and is_square") {
    for (std::uint64_t v : {0ULL, 1ULL, 15ULL, 16ULL, 17ULL, 18446744073709551615ULL, 4294967296ULL * 4294967295ULL}) {
        const auto r = isqrt(v);
        CHECK(static_cast<unsigned __int128>(r) * r <= v);
        CHECK(static_cast<unsigned __int128>(r + 1) * (r + 1) > v);
    }
    std::uint64_t root = 0;
    CHECK(is_square(1681, &root));
    CHECK(root == 41);
    CHECK_FALSE(is_square(1682));
}
