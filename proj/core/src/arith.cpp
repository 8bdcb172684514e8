#include "genusfield/arith.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>

#include "genusfield/errors.hpp"

namespace genusfield::arith {

namespace {

using u128 = unsigned __int128;

std::uint64_t pow_mod_u(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) noexcept {
    std::uint64_t x = pow_mod_u(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, g = 1, q = 1, x = 0, ys = 0;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t root = 0;
    if (is_square(n, &root)) {
        factor_rec(root, out);
        factor_rec(root, out);
        return;
    }
    const std::uint64_t f = pollard_brent(n);
    factor_rec(f, out);
    factor_rec(n / f, out);
}

std::uint64_t umod(std::int64_t a, std::uint64_t m) noexcept {
    const auto r = static_cast<std::int64_t>(static_cast<__int128>(a) % static_cast<__int128>(m));
    return r < 0 ? static_cast<std::uint64_t>(r + static_cast<std::int64_t>(m)) : static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        const __int128 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw DomainError("value not invertible modulo " + std::to_string(m));
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

// Lifts a root of x^2 = a (mod p) to one modulo p^k.
std::uint64_t hensel_lift(std::uint64_t root, std::int64_t a, std::uint64_t p, int k) {
    std::uint64_t mod = p;
    for (int i = 1; i < k; ++i) {
        mod *= p;
        const std::uint64_t am = umod(a, mod);
        const std::uint64_t sq = mul_mod(root, root, mod);
        const std::uint64_t diff = (sq + mod - am) % mod;
        const std::uint64_t inv = inverse_mod((2 * static_cast<u128>(root)) % mod, mod);
        root = (root + mod - mul_mod(diff, inv, mod)) % mod;
    }
    return root;
}

}  // namespace

bool Factorization::contains(std::int64_t p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) throw DomainError("is_prime requires n >= 2");
    static constexpr std::array<std::uint64_t, 13> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (std::uint64_t p : witnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    return std::all_of(witnesses.begin(), witnesses.end(),
                       [&](std::uint64_t a) { return miller_rabin_round(n, a, d, r); });
}

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t modulus) {
    if (modulus < 1) throw DomainError("mod_pow requires modulus >= 1");
    const auto m = static_cast<std::uint64_t>(modulus);
    return static_cast<std::int64_t>(pow_mod_u(umod(base, m), exp, m));
}

int jacobi(std::int64_t a, std::int64_t n) {
    if (n < 3 || n % 2 == 0) throw DomainError("jacobi requires odd n >= 3");
    std::uint64_t m = static_cast<std::uint64_t>(n);
    std::uint64_t x = umod(a, m);
    int result = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            const std::uint64_t r = m & 7;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(x, m);
        if ((x & 3) == 3 && (m & 3) == 3) result = -result;
        x %= m;
    }
    return m == 1 ? result : 0;
}

QuarticSign quartic_symbol_two(std::int64_t ell) {
    if (ell < 17 || ell % 8 != 1) throw DomainError("(2/l)_4 requires l = 1 (mod 8), got " + std::to_string(ell));
    const auto v = mod_pow(2, static_cast<std::uint64_t>((ell - 1) / 4), ell);
    if (v == 1) return QuarticSign::Plus;
    if (v == ell - 1) return QuarticSign::Minus;
    throw DomainError("(2/l)_4: " + std::to_string(ell) + " is not prime");
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
    auto r = static_cast<std::uint64_t>(__builtin_sqrt(static_cast<double>(n)));
    while (static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

unsigned __int128 isqrt(unsigned __int128 n) noexcept {
    if (n < 2) return n;
    u128 r = static_cast<u128>(__builtin_sqrtl(static_cast<long double>(n)));
    // Newton polish for values beyond long double's mantissa.
    for (int i = 0; i < 4; ++i) {
        if (r == 0) break;
        r = (r + n / r) / 2;
    }
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(std::uint64_t n, std::uint64_t* root) noexcept {
    const std::uint64_t r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept {
    return std::gcd(a, b);
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n, const FactorOptions& opts) {
    if (n == 0) throw DomainError("cannot factor 0");
    std::vector<std::uint64_t> found;
    const std::uint64_t limit = opts.trial_division_limit;
    for (std::uint64_t p = 2; p < limit && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            found.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, found);
    std::sort(found.begin(), found.end());
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p : found) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

Factorization factor_squarefree(std::int64_t d, const FactorOptions& opts) {
    if (d == std::numeric_limits<std::int64_t>::min()) throw DomainError("d out of range");
    if (d == 0 || d == 1 || d == -1) throw Degenerate("d = " + std::to_string(d) + " has no prime divisors");
    const auto n = static_cast<std::uint64_t>(d < 0 ? -d : d);
    Factorization f{d, {}};
    for (auto [p, e] : factorize(n, opts)) {
        if (e > 1) throw NotSquareFree(d, static_cast<std::int64_t>(p));
        f.primes.push_back(static_cast<std::int64_t>(p));
    }
    return f;
}

Factorization from_primes(std::int64_t d, std::vector<std::int64_t> primes) {
    if (d == 0 || d == 1 || d == -1) throw Degenerate("d = " + std::to_string(d) + " has no prime divisors");
    if (d == std::numeric_limits<std::int64_t>::min()) throw DomainError("d out of range");
    std::sort(primes.begin(), primes.end());
    u128 product = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::int64_t p = primes[i];
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
            throw DomainError("supplied factor " + std::to_string(p) + " is not prime");
        if (i > 0 && primes[i - 1] == p) throw NotSquareFree(d, p);
        product *= static_cast<u128>(p);
        if (product > static_cast<u128>(std::numeric_limits<std::int64_t>::max()))
            throw DomainError("supplied factors overflow |d|");
    }
    const std::int64_t abs_d = d < 0 ? -d : d;
    if (product != static_cast<u128>(abs_d))
        throw DomainError("supplied primes do not multiply to |d| = " + std::to_string(abs_d));
    return Factorization{d, std::move(primes)};
}

std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (pow_mod_u(a, (p - 1) / 2, p) != 1)
        throw DomainError(std::to_string(a) + " is not a square modulo " + std::to_string(p));
    if (p % 4 == 3) return pow_mod_u(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod_u(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t c = pow_mod_u(z, q, p);
    std::uint64_t x = pow_mod_u(a, (q + 1) / 2, p);
    std::uint64_t t = pow_mod_u(a, q, p);
    int m = s;
    while (t != 1) {
        int i = 0;
        std::uint64_t t2 = t;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, p);
            ++i;
        }
        std::uint64_t b = c;
        for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
        x = mul_mod(x, b, p);
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        m = i;
    }
    return x;
}

std::vector<std::uint64_t> sqrt_mod_all(std::int64_t a, std::uint64_t n, const FactorOptions& opts) {
    if (n < 3 || n % 2 == 0) throw DomainError("sqrt_mod_all requires odd n >= 3");
    if (std::gcd(umod(a, n), n) != 1) throw DomainError("sqrt_mod_all requires gcd(a, n) = 1");
    std::vector<std::uint64_t> roots{0};
    std::uint64_t modulus = 1;
    for (auto [p, e] : factorize(n, opts)) {
        std::uint64_t pk = 1;
        for (int i = 0; i < e; ++i) pk *= p;
        if (jacobi(static_cast<std::int64_t>(umod(a, p)), static_cast<std::int64_t>(p)) != 1) return {};
        const std::uint64_t r0 = hensel_lift(sqrt_mod_prime(umod(a, p), p), a, p, e);
        const std::array<std::uint64_t, 2> local{r0, pk - r0};
        // CRT: x = r (mod modulus), x = l (mod pk)
        const std::uint64_t inv = inverse_mod(modulus % pk, pk);
        std::vector<std::uint64_t> next;
        next.reserve(roots.size() * 2);
        for (std::uint64_t r : roots) {
            for (std::uint64_t l : local) {
                const std::uint64_t diff = (l + pk - r % pk) % pk;
                const std::uint64_t k = mul_mod(diff, inv, pk);
                next.push_back(static_cast<std::uint64_t>(r + static_cast<u128>(modulus) * k));
            }
        }
        roots = std::move(next);
        modulus *= pk;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace genusfield::arith
