#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genusfield/arith.hpp"

namespace genusfield::classify {

/// Residue class of a prime divisor of d.
///   L9: p = 9 (mod 16)   P5: p = 5 (mod 8)   Q3: p = 3 (mod 8)
enum class PrimeLabel { L9, P5, Q3, Unsupported };

struct PrimeClass {
    PrimeLabel label = PrimeLabel::Unsupported;
    std::int64_t prime = 0;
};

enum class Branch { A, B };

/// Sentinel for signatures none of the fifteen cases handles.
inline constexpr int kNotCovered = 0;

struct CaseSignature {
    int r = 0;
    int s = 0;
    int t = 0;
    int case_id = kNotCovered;
    /// Ascending within each class; ells.front() is l_1, ps.front() is p_1, qs.front() is q_1.
    std::vector<std::int64_t> ells;
    std::vector<std::int64_t> ps;
    std::vector<std::int64_t> qs;
    /// (2/l_i)_4, aligned with `ells`.
    std::vector<arith::QuarticSign> quartic_signs;

    int n() const noexcept { return r + s + t; }
    bool covered() const noexcept { return case_id != kNotCovered; }
    /// Set for cases 5, 6, 7, 11 and 12 only.
    std::optional<Branch> branch() const;
    friend bool operator==(const CaseSignature&, const CaseSignature&) = default;
};

PrimeClass classify_prime(std::int64_t p);

/// Pure dispatch on (r, s, t); returns kNotCovered for the two uncovered families.
int case_for(int r, int s, int t) noexcept;

/// Throws UnsupportedPrime for the first prime outside L9/P5/Q3.
CaseSignature make_signature(const arith::Factorization& f);

/// Case 5/11: A iff some sign is +1. Case 6/12: A iff some sign is -1.
/// Case 7: A iff the signs are not all equal. Throws DomainError for other cases.
Branch sub_branch(const CaseSignature& sig);

std::string to_string(PrimeLabel label);
std::string to_string(Branch b);

}  // namespace genusfield::classify
