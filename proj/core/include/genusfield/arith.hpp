#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace genusfield::arith {

/// Distinct-prime factorization of a square-free integer.
/// `primes` is sorted ascending and multiplies to |value|.
struct Factorization {
    std::int64_t value = 0;
    std::vector<std::int64_t> primes;

    std::int64_t abs_value() const noexcept { return value < 0 ? -value : value; }
    bool contains(std::int64_t p) const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// (2/l)_4 for l = 1 (mod 8).
enum class QuarticSign : int { Minus = -1, Plus = 1 };

constexpr int to_int(QuarticSign s) noexcept { return static_cast<int>(s); }

struct FactorOptions {
    /// Trial division runs below this bound before Pollard-Brent takes over.
    std::uint64_t trial_division_limit = 1'000'000;
};

/// Witness set {2, ..., 41} is deterministic below 3.3e24, which covers all of uint64.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
/// base^exp mod modulus; base may be negative. modulus >= 1.
std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t modulus);

/// Jacobi symbol (a/n) for odd n >= 3.
int jacobi(std::int64_t a, std::int64_t n);

QuarticSign quartic_symbol_two(std::int64_t ell);

std::uint64_t isqrt(std::uint64_t n) noexcept;
unsigned __int128 isqrt(unsigned __int128 n) noexcept;
bool is_square(std::uint64_t n, std::uint64_t* root = nullptr) noexcept;
std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;

/// Full factorization with multiplicities, ascending primes. n >= 1.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n, const FactorOptions& opts = {});

/// Throws Degenerate for d in {0, +-1}, NotSquareFree on a repeated prime.
Factorization factor_squarefree(std::int64_t d, const FactorOptions& opts = {});

/// Validates a caller-supplied factorization of d (primality, distinctness, product).
Factorization from_primes(std::int64_t d, std::vector<std::int64_t> primes);

/// One square root of a modulo an odd prime p (a must be a residue).
std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

/// Every x in [0, n) with x^2 = a (mod n), for odd n coprime to a.
std::vector<std::uint64_t> sqrt_mod_all(std::int64_t a, std::uint64_t n, const FactorOptions& opts = {});

}  // namespace genusfield::arith
