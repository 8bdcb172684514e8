#include "genusfield/represent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "genusfield/errors.hpp"

namespace genusfield::represent {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

bool definite(FormD d) noexcept {
    return d == FormD::One || d == FormD::Two || d == FormD::Eight || d == FormD::Sixteen;
}

std::string name(FormD d) {
    return d == FormD::MinusThirtyTwo ? "x^2-32y^2" : "x^2+" + std::to_string(coefficient(d)) + "y^2";
}

void sort_unique(std::vector<Representation>& v) {
    std::sort(v.begin(), v.end(), [](const Representation& a, const Representation& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Representation> exhaustive(FormD d, std::int64_t n) {
    const std::int64_t dc = coefficient(d);
    std::vector<Representation> out;
    for (std::int64_t y = 1; static_cast<i128>(dc) * y * y < n; ++y) {
        const auto rest = static_cast<std::uint64_t>(n - dc * y * y);
        std::uint64_t x = 0;
        if (arith::is_square(rest, &x) && x > 0 && std::gcd(static_cast<std::int64_t>(x), y) == 1)
            out.push_back({d, static_cast<std::int64_t>(x), y, n});
    }
    return out;
}

std::vector<Representation> cornacchia_all(FormD d, std::int64_t n, const SearchOptions& opts) {
    const std::int64_t dc = coefficient(d);
    const auto un = static_cast<std::uint64_t>(n);
    std::vector<Representation> out;
    for (std::uint64_t root : arith::sqrt_mod_all(-dc, un, opts.factor)) {
        std::uint64_t a = un, b = root;
        while (static_cast<u128>(b) * b > un) {
            const std::uint64_t r = a % b;
            a = b;
            b = r;
        }
        const std::uint64_t rest = un - b * b;
        if (b == 0 || rest % static_cast<std::uint64_t>(dc) != 0) continue;
        std::uint64_t y = 0;
        if (!arith::is_square(rest / static_cast<std::uint64_t>(dc), &y) || y == 0) continue;
        const auto x = static_cast<std::int64_t>(b);
        const auto yy = static_cast<std::int64_t>(y);
        if (std::gcd(x, yy) == 1) out.push_back({d, x, yy, n});
    }
    return out;
}

std::int64_t checked_product(std::int64_t a, std::int64_t b) {
    const i128 p = static_cast<i128>(a) * b;
    if (p > std::numeric_limits<std::int64_t>::max()) throw DomainError("target overflows int64");
    return static_cast<std::int64_t>(p);
}

std::int64_t normalize_mod4(std::int64_t v) noexcept {
    return ((v % 4) + 4) % 4 == 1 ? v : -v;
}

void require_nine_mod_sixteen(std::int64_t ell) {
    if (ell < 9 || ell % 16 != 9) throw DomainError(std::to_string(ell) + " is not 9 (mod 16)");
    if (!arith::is_prime(static_cast<std::uint64_t>(ell))) throw DomainError(std::to_string(ell) + " is not prime");
}

Representation first_or_contradiction(const std::vector<Representation>& sols, FormD d, std::int64_t n) {
    if (sols.empty())
        throw InternalContradiction("no admissible representation of " + std::to_string(n) + " by " + name(d));
    return sols.front();
}

}  // namespace

bool Representation::holds() const noexcept {
    const i128 lhs = static_cast<i128>(x) * x + static_cast<i128>(coefficient(form)) * y * y;
    return lhs == target;
}

bool Representation::primitive() const noexcept {
    return std::gcd(x, y) == 1;
}

std::vector<Representation> primitive_solutions(FormD d, std::int64_t n, const SearchOptions& opts) {
    if (!definite(d)) throw DomainError("primitive_solutions: unsupported form " + name(d));
    if (n < 2) throw DomainError("primitive_solutions requires N >= 2");
    std::vector<Representation> sols;
    if (n % 2 == 0) {
        if (n >= opts.exhaustive_limit)
            throw DomainError("Cornacchia requires gcd(N, 2D) = 1 above the exhaustive limit");
        sols = exhaustive(d, n);
    } else {
        sols = cornacchia_all(d, n, opts);
        if (d == FormD::One) {
            const std::size_t k = sols.size();
            for (std::size_t i = 0; i < k; ++i) sols.push_back({d, sols[i].y, sols[i].x, n});
        }
        if (sols.empty() && n < opts.exhaustive_limit) sols = exhaustive(d, n);
    }
    sort_unique(sols);
    return sols;
}

std::optional<Representation> cornacchia(FormD d, std::int64_t n, const SearchOptions& opts) {
    auto sols = primitive_solutions(d, n, opts);
    if (sols.empty()) return std::nullopt;
    return sols.front();
}

Representation solve_gamma(std::int64_t p1, std::int64_t pi, const SearchOptions& opts) {
    if (p1 % 8 != 5 || pi % 8 != 5 || p1 == pi)
        throw DomainError("solve_gamma requires distinct primes = 5 (mod 8)");
    const std::int64_t n = checked_product(p1, pi);
    auto sols = primitive_solutions(FormD::One, n, opts);
    std::erase_if(sols, [](const Representation& r) { return r.x % 2 == 0 || r.y % 4 != 0; });
    std::stable_partition(sols.begin(), sols.end(), [](const Representation& r) { return r.x % 4 == 1; });
    return first_or_contradiction(sols, FormD::One, n);
}

Representation solve_alpha(std::int64_t q1, std::int64_t qi, const SearchOptions& opts) {
    if (q1 % 8 != 3 || qi % 8 != 3 || q1 == qi)
        throw DomainError("solve_alpha requires distinct primes = 3 (mod 8)");
    const std::int64_t n = checked_product(q1, qi);
    auto sols = primitive_solutions(FormD::Two, n, opts);
    std::erase_if(sols, [](const Representation& r) { return r.x % 2 == 0 || r.y % 2 != 0; });
    return first_or_contradiction(sols, FormD::Two, n);
}

Representation solve_pi1(std::int64_t ell, const SearchOptions& opts) {
    require_nine_mod_sixteen(ell);
    auto r = first_or_contradiction(primitive_solutions(FormD::Sixteen, ell, opts), FormD::Sixteen, ell);
    r.x = normalize_mod4(r.x);
    return r;
}

Representation solve_pi3(std::int64_t ell, const SearchOptions& opts) {
    require_nine_mod_sixteen(ell);
    auto r = first_or_contradiction(primitive_solutions(FormD::Eight, ell, opts), FormD::Eight, ell);
    r.x = normalize_mod4(r.x);
    return r;
}

Representation solve_pi2(std::int64_t ell, const SearchOptions& opts) {
    require_nine_mod_sixteen(ell);
    const auto bound = static_cast<std::int64_t>(std::ceil(opts.pell_bound_factor * std::sqrt(static_cast<double>(ell))));
    for (std::int64_t f = 1; f <= bound; ++f) {
        const u128 e2 = static_cast<u128>(ell) + static_cast<u128>(32) * static_cast<u128>(f) * static_cast<u128>(f);
        const u128 e = arith::isqrt(e2);
        if (e * e != e2) continue;
        if (e > static_cast<u128>(std::numeric_limits<std::int64_t>::max()))
            throw DomainError("e overflows int64");
        const auto ev = static_cast<std::int64_t>(e);
        if (std::gcd(ev, f) != 1) continue;
        return {FormD::MinusThirtyTwo, normalize_mod4(ev), f, ell};
    }
    throw InternalContradiction("no solution of e^2 - 32 f^2 = " + std::to_string(ell) + " with f <= " +
                                std::to_string(bound));
}

}  // namespace genusfield::represent
