#include "genusfield/classify.hpp"

#include <algorithm>

#include "genusfield/errors.hpp"

namespace genusfield::classify {

namespace {

bool has_branch(int case_id) noexcept {
    return case_id == 5 || case_id == 6 || case_id == 7 || case_id == 11 || case_id == 12;
}

bool any_sign(const CaseSignature& sig, arith::QuarticSign s) {
    return std::find(sig.quartic_signs.begin(), sig.quartic_signs.end(), s) != sig.quartic_signs.end();
}

}  // namespace

PrimeClass classify_prime(std::int64_t p) {
    const std::int64_t a = p < 0 ? -p : p;
    if (a % 16 == 9) return {PrimeLabel::L9, p};
    if (a % 8 == 5) return {PrimeLabel::P5, p};
    if (a % 8 == 3) return {PrimeLabel::Q3, p};
    return {PrimeLabel::Unsupported, p};
}

int case_for(int r, int s, int t) noexcept {
    if (r + s + t < 1) return kNotCovered;
    if (r == 0) {
        if (t == 0 && s >= 2) return 1;
        if (s == 0 && t >= 2) return 2;
        if (s >= 2 && t >= 2) return 3;
        if (s == 1 && t == 1) return 13;
        if ((s == 1 && t == 0) || (s == 0 && t == 1)) return 14;
        return kNotCovered;  // (s = 1, t >= 2) and (s >= 2, t = 1)
    }
    if (s >= 2 && t >= 2) return 4;
    if (t == 0 && s >= 2) return 5;
    if (s == 0 && t >= 2) return 6;
    if (s == 0 && t == 0) return r >= 2 ? 7 : 15;
    if (s == 1 && t >= 2) return 8;
    if (t == 1 && s >= 2) return 9;
    if (s == 1 && t == 1) return 10;
    if (s == 1 && t == 0) return 11;
    return 12;  // s = 0, t = 1
}

CaseSignature make_signature(const arith::Factorization& f) {
    CaseSignature sig;
    for (std::int64_t p : f.primes) {
        switch (classify_prime(p).label) {
            case PrimeLabel::L9: sig.ells.push_back(p); break;
            case PrimeLabel::P5: sig.ps.push_back(p); break;
            case PrimeLabel::Q3: sig.qs.push_back(p); break;
            case PrimeLabel::Unsupported: throw UnsupportedPrime(p);
        }
    }
    std::sort(sig.ells.begin(), sig.ells.end());
    std::sort(sig.ps.begin(), sig.ps.end());
    std::sort(sig.qs.begin(), sig.qs.end());
    sig.r = static_cast<int>(sig.ells.size());
    sig.s = static_cast<int>(sig.ps.size());
    sig.t = static_cast<int>(sig.qs.size());
    for (std::int64_t ell : sig.ells) sig.quartic_signs.push_back(arith::quartic_symbol_two(ell));
    sig.case_id = case_for(sig.r, sig.s, sig.t);
    return sig;
}

Branch sub_branch(const CaseSignature& sig) {
    using arith::QuarticSign;
    switch (sig.case_id) {
        case 5:
        case 11: return any_sign(sig, QuarticSign::Plus) ? Branch::A : Branch::B;
        case 6:
        case 12: return any_sign(sig, QuarticSign::Minus) ? Branch::A : Branch::B;
        case 7:
            return any_sign(sig, QuarticSign::Plus) && any_sign(sig, QuarticSign::Minus) ? Branch::A : Branch::B;
        default: throw DomainError("case " + std::to_string(sig.case_id) + " has no sub-branch");
    }
}

std::optional<Branch> CaseSignature::branch() const {
    if (!has_branch(case_id)) return std::nullopt;
    return sub_branch(*this);
}

std::string to_string(PrimeLabel label) {
    switch (label) {
        case PrimeLabel::L9: return "L9";
        case PrimeLabel::P5: return "P5";
        case PrimeLabel::Q3: return "Q3";
        case PrimeLabel::Unsupported: return "Unsupported";
    }
    return "?";
}

std::string to_string(Branch b) {
    return b == Branch::A ? "A" : "B";
}

}  // namespace genusfield::classify
