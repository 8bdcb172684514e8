#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "genusfield/arith.hpp"

namespace genusfield::represent {

/// Coefficient D of the form x^2 + D*y^2. `MinusThirtyTwo` is the
/// indefinite form x^2 - 32*y^2.
enum class FormD : int { One = 1, Two = 2, Eight = 8, Sixteen = 16, MinusThirtyTwo = -32 };

constexpr std::int64_t coefficient(FormD d) noexcept { return static_cast<std::int64_t>(d); }

/// A solved identity x^2 + D*y^2 = target.
///
/// Raw solver output has x > 0, y >= 0 and gcd(x, y) = 1. The pi-solvers
/// additionally flip the sign of x so that x = 1 (mod 4).
struct Representation {
    FormD form = FormD::One;
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t target = 0;

    /// Recomputes x^2 + D*y^2 == target exactly.
    bool holds() const noexcept;
    bool primitive() const noexcept;
    friend bool operator==(const Representation&, const Representation&) = default;
};

struct SearchOptions {
    /// Targets below this size also get an exhaustive y-search when Cornacchia finds nothing usable.
    std::int64_t exhaustive_limit = 1'000'000;
    /// e^2 - 32 f^2 = l is searched for f <= ceil(pell_bound_factor * sqrt(l)).
    double pell_bound_factor = 3.0;
    arith::FactorOptions factor{};
};

/// All primitive solutions (x > 0, y > 0) of x^2 + D*y^2 = N for D in {1, 2, 8, 16},
/// sorted by (y, x). Cornacchia over every square root of -D mod N.
std::vector<Representation> primitive_solutions(FormD d, std::int64_t n, const SearchOptions& opts = {});

/// Canonical primitive solution: minimal y, then minimal x. std::nullopt when none exists.
std::optional<Representation> cornacchia(FormD d, std::int64_t n, const SearchOptions& opts = {});

/// x^2 + y^2 = p1*pi with x odd, y = 0 (mod 4). Prefers x = 1 (mod 4), then minimal y.
Representation solve_gamma(std::int64_t p1, std::int64_t pi, const SearchOptions& opts = {});
/// x^2 + 2y^2 = q1*qi with x odd, y even, minimal y.
Representation solve_alpha(std::int64_t q1, std::int64_t qi, const SearchOptions& opts = {});
/// l = a^2 + 16 b^2, a = 1 (mod 4), b > 0.
Representation solve_pi1(std::int64_t ell, const SearchOptions& opts = {});
/// l = e^2 - 32 f^2, e = 1 (mod 4), minimal f > 0.
Representation solve_pi2(std::int64_t ell, const SearchOptions& opts = {});
/// l = u^2 + 8 v^2, u = 1 (mod 4), v > 0.
Representation solve_pi3(std::int64_t ell, const SearchOptions& opts = {});

}  // namespace genusfield::represent
