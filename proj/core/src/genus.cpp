#include "genusfield/genus.hpp"

#include <limits>
#include <string>

#include "genusfield/errors.hpp"

namespace genusfield::genus {

namespace {

using classify::Branch;

std::string signature_text(const classify::CaseSignature& sig) {
    return "(r=" + std::to_string(sig.r) + ", s=" + std::to_string(sig.s) + ", t=" + std::to_string(sig.t) + ")";
}

class Builder {
public:
    Builder(const classify::CaseSignature& sig, const represent::SearchOptions& opts) : sig_(sig), opts_(opts) {}

    void ell(int i) { add(GeneratorElement::prime(l(i)), "l_" + idx(i), l(i)); }
    void p(int i) { add(GeneratorElement::prime(sig_.ps[i]), "p_" + idx(i), sig_.ps[i]); }
    void q(int i) { add(GeneratorElement::prime(sig_.qs[i]), "q_" + idx(i), sig_.qs[i]); }

    void pi1(int i) {
        const auto rep = represent::solve_pi1(l(i), opts_);
        add({ElementKind::Gaussian, rep.x, 4 * rep.y}, "pi1_" + idx(i), l(i));
    }
    void pi2(int i) {
        const auto rep = represent::solve_pi2(l(i), opts_);
        add({ElementKind::Sqrt2, rep.x, 4 * rep.y}, "pi2_" + idx(i), l(i));
    }
    void pi3(int i) {
        const auto rep = represent::solve_pi3(l(i), opts_);
        add({ElementKind::SqrtMinus2, rep.x, 2 * rep.y}, "pi3_" + idx(i), l(i));
    }
    void gamma(int i) {
        const auto rep = represent::solve_gamma(sig_.ps[0], sig_.ps[i], opts_);
        add({ElementKind::Gaussian, rep.x, rep.y}, "gamma_" + idx(i), rep.target);
    }
    void alpha(int i) {
        const auto rep = represent::solve_alpha(sig_.qs[0], sig_.qs[i], opts_);
        add({ElementKind::SqrtMinus2, rep.x, rep.y}, "alpha_" + idx(i), rep.target);
    }

    // Q(sqrt l_i, sqrt pi1_i, sqrt pi2_i, sqrt pi3_i) for i = 1..r
    void ell_blocks() {
        for (int i = 0; i < sig_.r; ++i) {
            ell(i);
            pi_triple(i);
        }
    }
    void pi_triple(int i) {
        pi1(i);
        pi2(i);
        pi3(i);
    }
    // Products are written 1-based in the construction; `first`/`last` are 1-based inclusive.
    template <class F>
    void range(int first, int last, F&& f) {
        for (int i = first; i <= last; ++i) f(i - 1);
    }

    std::vector<Generator> take() { return std::move(out_); }

private:
    std::int64_t l(int i) const { return sig_.ells[i]; }
    static std::string idx(int i) { return std::to_string(i + 1); }
    void add(GeneratorElement e, std::string label, std::int64_t norm) {
        out_.push_back({e, std::move(label), norm});
    }

    const classify::CaseSignature& sig_;
    const represent::SearchOptions& opts_;
    std::vector<Generator> out_;
};

std::vector<std::string> case_notes(const classify::CaseSignature& sig) {
    std::vector<std::string> notes;
    switch (sig.case_id) {
        case 2:
            notes.emplace_back("case 2: the construction is applied for m >= 3 only, like every other case");
            break;
        case 4:
            notes.emplace_back("case 4: expected rank 4r+2s+2t-3 is the generator count of this case (not n-3)");
            break;
        case 5:
            notes.emplace_back(
                "case 5: branch A is taken when (2/l_i)_4 = +1 for some i; the rank 4r+2s-3 is also quoted "
                "under (2/l_i)_4 = -1, the branch test follows the case statement");
            break;
        case 13: {
            const auto p1 = sig.ps.front();
            const auto q1 = sig.qs.front();
            notes.emplace_back("case 13: sqrt(" + std::to_string(q1) + ") equivalent: L(sqrt(" + std::to_string(p1) +
                               ")) = L(sqrt(" + std::to_string(q1) + ")) because " + std::to_string(p1) + "*" +
                               std::to_string(q1) + " = |d|");
            break;
        }
        case 14: notes.emplace_back("case 14: E = L, the 2-rank is 0"); break;
        default: break;
    }
    return notes;
}

}  // namespace

std::vector<GeneratorElement> GenusField::elements() const {
    std::vector<GeneratorElement> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.element);
    return out;
}

int expected_rank(const classify::CaseSignature& sig) {
    const int r = sig.r, s = sig.s, t = sig.t, n = sig.n();
    const auto branch_a = [&] { return classify::sub_branch(sig) == Branch::A; };
    switch (sig.case_id) {
        case 1:
        case 2: return 2 * n - 2;
        case 3: return 2 * (s + t) - 3;
        case 4: return 4 * r + 2 * s + 2 * t - 3;
        case 5: return branch_a() ? 4 * r + 2 * s - 3 : 4 * r + 2 * s - 2;
        case 6: return branch_a() ? 4 * r + 2 * t - 3 : 4 * r + 2 * t - 2;
        case 7: return branch_a() ? 4 * r - 3 : 4 * r - 2;
        case 8: return 4 * r + 2 * t - 1;
        case 9: return 4 * r + 2 * s - 1;
        case 10: return 4 * r + 1;
        case 11:
        case 12: return branch_a() ? 4 * r - 1 : 4 * r;
        case 13: return 1;
        case 14: return 0;
        case 15: return 2;
        default: throw NotCovered("signature " + signature_text(sig) + " is not covered");
    }
}

GenusField build_generators(const classify::CaseSignature& sig, const arith::Factorization& f, int m,
                            const represent::SearchOptions& opts) {
    if (m < 3) throw DomainError("m must be >= 3, got " + std::to_string(m));
    if (!sig.covered())
        throw NotCovered("signature " + signature_text(sig) +
                         " matches none of the 15 covered cases (uncovered: r=0 with s=1, t>=2 or s>=2, t=1)");
    const int r = sig.r, s = sig.s, t = sig.t;
    Builder b(sig, opts);
    const auto ps = [&](int first, int last) { b.range(first, last, [&](int i) { b.p(i); }); };
    const auto qs = [&](int first, int last) { b.range(first, last, [&](int i) { b.q(i); }); };
    const auto ells = [&](int first, int last) { b.range(first, last, [&](int i) { b.ell(i); }); };
    const auto gammas = [&] { b.range(2, s, [&](int i) { b.gamma(i); }); };
    const auto alphas = [&] { b.range(2, t, [&](int i) { b.alpha(i); }); };
    const auto triples = [&](int last) { b.range(1, last, [&](int i) { b.pi_triple(i); }); };

    switch (sig.case_id) {
        case 1:
            ps(1, s - 1);
            gammas();
            break;
        case 2:
            qs(1, t - 1);
            alphas();
            break;
        case 3:
            ps(1, s);
            qs(1, t - 1);
            gammas();
            alphas();
            break;
        case 4:
            b.ell_blocks();
            ps(1, s);
            qs(1, t - 1);
            gammas();
            alphas();
            break;
        case 5:
            if (classify::sub_branch(sig) == Branch::A) {
                triples(r);
                ells(1, r - 1);
            } else {
                b.ell_blocks();
            }
            ps(1, s - 1);
            gammas();
            break;
        case 6:
            if (classify::sub_branch(sig) == Branch::A) {
                triples(r);
                ells(1, r - 1);
            } else {
                b.ell_blocks();
            }
            qs(1, t - 1);
            alphas();
            break;
        case 7:
            if (classify::sub_branch(sig) == Branch::A) {
                ells(1, r);
                triples(r - 1);
            } else {
                b.range(1, r, [&](int i) {
                    b.ell(i);
                    b.pi1(i);
                });
                b.range(1, r - 1, [&](int i) {
                    b.pi2(i);
                    b.pi3(i);
                });
            }
            break;
        case 8:
            b.ell_blocks();
            qs(1, t);
            alphas();
            break;
        case 9:
            b.ell_blocks();
            ps(1, s);
            gammas();
            break;
        case 10:
            b.ell_blocks();
            ps(1, 1);
            break;
        case 11:
        case 12:
            if (classify::sub_branch(sig) == Branch::A) {
                triples(r);
                ells(1, r - 1);
            } else {
                b.ell_blocks();
            }
            break;
        case 13: ps(1, 1); break;
        case 14: break;
        case 15:
            b.pi1(0);
            b.pi2(0);
            break;
        default: throw NotCovered("unknown case id " + std::to_string(sig.case_id));
    }

    GenusField g;
    g.m = m;
    g.d = f.value;
    g.signature = sig;
    g.generators = b.take();
    g.expected_rank = expected_rank(sig);
    g.notes = case_notes(sig);
    return g;
}

GenusField lift_to_level(const GenusField& g, int m) {
    if (m < 3) throw DomainError("m must be >= 3, got " + std::to_string(m));
    GenusField out = g;
    out.m = m;
    return out;
}

namespace {

void reject_degenerate(std::int64_t d) {
    if (d == std::numeric_limits<std::int64_t>::min()) throw DomainError("d out of range");
    const std::int64_t a = d < 0 ? -d : d;
    if (a <= 2) throw Degenerate("d = " + std::to_string(d) + " is degenerate");
    if (a % 2 == 0) throw Degenerate("d = " + std::to_string(d) + " is even; 2 is outside the supported prime classes");
}

}  // namespace

GenusField construct(const arith::Factorization& f, int m, const represent::SearchOptions& opts) {
    if (m < 3) throw DomainError("m must be >= 3, got " + std::to_string(m));
    reject_degenerate(f.value);
    std::vector<std::string> notes;
    arith::Factorization positive = f;
    if (f.value < 0) {
        positive.value = -f.value;
        notes.push_back("d = " + std::to_string(f.value) + " replaced by |d| = " + std::to_string(positive.value) +
                        " since sqrt(-1) lies in L");
    }
    auto g = build_generators(classify::make_signature(positive), positive, m, opts);
    notes.insert(notes.end(), g.notes.begin(), g.notes.end());
    g.notes = std::move(notes);
    return g;
}

GenusField construct(std::int64_t d, int m, const represent::SearchOptions& opts) {
    if (m < 3) throw DomainError("m must be >= 3, got " + std::to_string(m));
    reject_degenerate(d);
    return construct(arith::factor_squarefree(d, opts.factor), m, opts);
}

std::string to_string(ElementKind kind) {
    switch (kind) {
        case ElementKind::RationalPrime: return "rational_prime";
        case ElementKind::Gaussian: return "gaussian";
        case ElementKind::SqrtMinus2: return "sqrt_minus2";
        case ElementKind::Sqrt2: return "sqrt2";
    }
    return "?";
}

}  // namespace genusfield::genus
