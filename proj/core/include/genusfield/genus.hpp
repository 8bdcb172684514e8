#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genusfield/arith.hpp"
#include "genusfield/classify.hpp"
#include "genusfield/represent.hpp"

namespace genusfield::genus {

enum class ElementKind { RationalPrime, Gaussian, SqrtMinus2, Sqrt2 };

/// An element of Q(zeta_8) whose square root is adjoined.
///   RationalPrime: a (b = 0)
///   Gaussian:      a + b*sqrt(-1)
///   SqrtMinus2:    a + b*sqrt(-2)
///   Sqrt2:         a + b*sqrt(2)
struct GeneratorElement {
    ElementKind kind = ElementKind::RationalPrime;
    std::int64_t a = 0;
    std::int64_t b = 0;

    static GeneratorElement prime(std::int64_t p) { return {ElementKind::RationalPrime, p, 0}; }
    friend bool operator==(const GeneratorElement&, const GeneratorElement&) = default;
};

/// A generator plus where it came from. `label` is e.g. "p_1", "gamma_2", "pi2_1";
/// `expected_norm` is the rational integer its norm must equal (p, p1*pi, q1*qi or l).
struct Generator {
    GeneratorElement element;
    std::string label;
    std::int64_t expected_norm = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
};

struct GenusField {
    int m = 3;
    std::int64_t d = 0;
    classify::CaseSignature signature;
    std::vector<Generator> generators;
    int expected_rank = 0;
    std::vector<std::string> notes;

    int case_id() const noexcept { return signature.case_id; }
    std::vector<GeneratorElement> elements() const;
    friend bool operator==(const GenusField&, const GenusField&) = default;
};

/// 2-rank of the class group read off the case and sub-branch. Throws NotCovered.
int expected_rank(const classify::CaseSignature& sig);

/// Generator list of E(L_{m,d}) for the dispatched case, in product order:
/// per-l blocks (l_i, pi1_i, pi2_i, pi3_i), then p's, q's, gamma's, alpha's.
/// Throws NotCovered for uncovered signatures and propagates representation failures.
GenusField build_generators(const classify::CaseSignature& sig, const arith::Factorization& f, int m = 3,
                            const represent::SearchOptions& opts = {});

/// Same field one level up or down the cyclotomic tower; generators do not depend on m.
GenusField lift_to_level(const GenusField& g, int m);

/// Convenience: factor, classify and build. Negative d is replaced by |d| with a note.
/// Even d and |d| <= 2 raise Degenerate.
GenusField construct(std::int64_t d, int m = 3, const represent::SearchOptions& opts = {});
GenusField construct(const arith::Factorization& f, int m = 3, const represent::SearchOptions& opts = {});

std::string to_string(ElementKind kind);

}  // namespace genusfield::genus
