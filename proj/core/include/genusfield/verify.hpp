#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "genusfield/arith.hpp"
#include "genusfield/genus.hpp"
#include "genusfield/zeta8.hpp"

namespace genusfield::verify {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Z[zeta_8] / 4

/// Residues mod 4 over the basis {1, z, z^2, z^3}; 256 elements.
struct Residue4 {
    std::array<std::uint8_t, 4> c{};

    static Residue4 from_index(unsigned idx) noexcept;
    unsigned index() const noexcept;
    friend Residue4 operator*(const Residue4& x, const Residue4& y) noexcept;
    friend bool operator==(const Residue4&, const Residue4&) = default;
};

Residue4 reduce_mod4(const genus::GeneratorElement& g) noexcept;

/// Membership table of {xi^2 : xi in Z[z]/4}, indexed by Residue4::index().
/// Built once by squaring all 256 elements.
const std::array<bool, 256>& square_table();

// ---------------------------------------------------------------------------
// Per-generator checks

/// A^2+B^2, A^2+2B^2, |A^2-2B^2| or p.
std::int64_t norm_to_q(const genus::GeneratorElement& g);

/// Every prime dividing norm_to_q(g) divides d, so the ideal (g) becomes a square in L.
bool check_ideal_square(const genus::GeneratorElement& g, const arith::Factorization& f);

/// Is g = xi^2 (mod 4) for some xi in Z[z]? Throws DomainError when g is not coprime to 2.
bool is_square_mod4(const genus::GeneratorElement& g);

// ---------------------------------------------------------------------------
// Independence modulo squares of L = Q(z, sqrt d)

struct CharacterOptions {
    /// Stop after this many character columns even if full rank was not reached.
    int max_characters = 512;
    std::uint64_t max_auxiliary_prime = 1u << 22;
};

struct IndependenceEvidence {
    bool independent = true;
    int rank = 0;
    int generator_count = 0;
    /// Number of quadratic characters evaluated.
    int characters = 0;
};

/// Each column is a quadratic character of L* / L*^2: a degree-one prime Q of Q(z)
/// (Q = 1 mod 8, one of its four embeddings z -> zeta mod Q) at which d is a square, so the
/// character is trivial on d. Full GF(2) rank proves independence.
IndependenceEvidence independence_gf2(const std::vector<genus::GeneratorElement>& gens,
                                      const arith::Factorization& f, const CharacterOptions& opts = {});

/// Exact square test in Z[z] through the tower Q(i)(z).
bool is_square_in_q_zeta8(const Zeta8<BigInt>& x);

/// Exhaustive subset check: true iff no nonempty subset product beta has beta or d*beta
/// a square in Q(z), i.e. the generators are independent modulo L*^2.
/// Throws DomainError above 12 generators.
bool brute_force_subset_oracle(const std::vector<genus::GeneratorElement>& gens, const arith::Factorization& f);

inline constexpr std::size_t kOracleMaxGenerators = 12;

// ---------------------------------------------------------------------------

struct GeneratorCheck {
    std::string label;
    std::int64_t norm = 0;
    bool norm_ok = false;
    bool ideal_square_ok = false;
    bool square_mod4_ok = false;
};

struct VerificationReport {
    std::vector<GeneratorCheck> generators;
    IndependenceEvidence independence;
    /// Empty when the generator count exceeds the oracle limit.
    std::optional<bool> subset_oracle;
    bool count_matches_rank = false;
    bool overall = false;
};

VerificationReport full_report(const genus::GenusField& g, const arith::Factorization& f,
                               const CharacterOptions& opts = {});

}  // namespace genusfield::verify
