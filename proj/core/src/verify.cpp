#include "genusfield/verify.hpp"

#include <bitset>
#include <limits>
#include <string>

#include "genusfield/errors.hpp"

namespace genusfield::verify {

namespace {

using genus::ElementKind;
using genus::GeneratorElement;

// --- Gaussian integers over BigInt, for the exact square test -------------

struct Gauss {
    BigInt re, im;
};

Gauss operator+(const Gauss& x, const Gauss& y) { return {x.re + y.re, x.im + y.im}; }
Gauss operator-(const Gauss& x, const Gauss& y) { return {x.re - y.re, x.im - y.im}; }
Gauss operator-(const Gauss& x) { return {-x.re, -x.im}; }
Gauss operator*(const Gauss& x, const Gauss& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
bool operator==(const Gauss& x, const Gauss& y) { return x.re == y.re && x.im == y.im; }
Gauss times_i(const Gauss& x) { return {-x.im, x.re}; }

bool perfect_square(const BigInt& v, BigInt& root) {
    if (v < 0) return false;
    root = boost::multiprecision::sqrt(v);
    return root * root == v;
}

bool halve(const Gauss& x, Gauss& out) {
    if (boost::multiprecision::bit_test(x.re, 0) || boost::multiprecision::bit_test(x.im, 0)) return false;
    out = {x.re / 2, x.im / 2};
    return true;
}

// Square root in Z[i]: (p + qi)^2 = u + vi.
bool gauss_sqrt(const Gauss& w, Gauss& out) {
    BigInt m;
    if (!perfect_square(w.re * w.re + w.im * w.im, m)) return false;
    BigInt p2 = m + w.re, q2 = m - w.re;
    if (boost::multiprecision::bit_test(p2, 0)) return false;
    p2 /= 2;
    q2 /= 2;
    BigInt p, q;
    if (!perfect_square(p2, p) || !perfect_square(q2, q)) return false;
    if (2 * p * q == w.im) {
        out = {p, q};
        return true;
    }
    if (-2 * p * q == w.im) {
        out = {p, -q};
        return true;
    }
    return false;
}

// --- Characters ------------------------------------------------------------

constexpr std::size_t kMaxCharacterRows = 256;
using Column = std::bitset<kMaxCharacterRows>;

std::uint64_t umod(std::int64_t a, std::uint64_t m) noexcept {
    const auto r = static_cast<std::int64_t>(static_cast<__int128>(a) % static_cast<__int128>(m));
    return r < 0 ? static_cast<std::uint64_t>(r + static_cast<std::int64_t>(m)) : static_cast<std::uint64_t>(r);
}

std::uint64_t image_mod(const GeneratorElement& g, std::uint64_t z, std::uint64_t q) {
    using arith::mul_mod;
    const std::uint64_t a = umod(g.a, q), b = umod(g.b, q);
    const std::uint64_t z2 = mul_mod(z, z, q);
    const std::uint64_t z3 = mul_mod(z2, z, q);
    std::uint64_t root = 0;
    switch (g.kind) {
        case ElementKind::RationalPrime: return a;
        case ElementKind::Gaussian: root = z2; break;
        case ElementKind::Sqrt2: root = (z + q - z3) % q; break;
        case ElementKind::SqrtMinus2: root = (z + z3) % q; break;
    }
    return (a + mul_mod(b, root, q)) % q;
}

// XOR basis keyed by leading bit.
class Gf2Basis {
public:
    bool insert(Column v) {
        for (std::size_t bit = kMaxCharacterRows; bit-- > 0;) {
            if (!v.test(bit)) continue;
            if (!pivots_[bit].any()) {
                pivots_[bit] = v;
                ++rank_;
                return true;
            }
            v ^= pivots_[bit];
        }
        return false;
    }
    int rank() const noexcept { return rank_; }

private:
    std::array<Column, kMaxCharacterRows> pivots_{};
    int rank_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------

Residue4 Residue4::from_index(unsigned idx) noexcept {
    Residue4 r;
    for (int k = 0; k < 4; ++k) r.c[k] = static_cast<std::uint8_t>((idx >> (2 * k)) & 3u);
    return r;
}

unsigned Residue4::index() const noexcept {
    return c[0] | (c[1] << 2) | (c[2] << 4) | (c[3] << 6);
}

Residue4 operator*(const Residue4& x, const Residue4& y) noexcept {
    std::array<int, 7> acc{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc[i + j] += x.c[i] * y.c[j];
    Residue4 r;
    for (int k = 0; k < 4; ++k) {
        const int v = acc[k] - (k + 4 < 7 ? acc[k + 4] : 0);
        r.c[k] = static_cast<std::uint8_t>(((v % 4) + 4) % 4);
    }
    return r;
}

Residue4 reduce_mod4(const GeneratorElement& g) noexcept {
    const auto z = embed<std::int64_t>(g);
    Residue4 r;
    for (int k = 0; k < 4; ++k) r.c[k] = static_cast<std::uint8_t>(((z.c[k] % 4) + 4) % 4);
    return r;
}

const std::array<bool, 256>& square_table() {
    static const std::array<bool, 256> table = [] {
        std::array<bool, 256> t{};
        for (unsigned i = 0; i < 256; ++i) {
            const auto x = Residue4::from_index(i);
            t[(x * x).index()] = true;
        }
        return t;
    }();
    return table;
}

std::int64_t norm_to_q(const GeneratorElement& g) {
    const __int128 a = g.a, b = g.b;
    __int128 n = 0;
    switch (g.kind) {
        case ElementKind::RationalPrime: n = a < 0 ? -a : a; break;
        case ElementKind::Gaussian: n = a * a + b * b; break;
        case ElementKind::SqrtMinus2: n = a * a + 2 * b * b; break;
        case ElementKind::Sqrt2: n = a * a - 2 * b * b; n = n < 0 ? -n : n; break;
    }
    if (n > std::numeric_limits<std::int64_t>::max()) throw DomainError("norm overflows int64");
    return static_cast<std::int64_t>(n);
}

bool check_ideal_square(const GeneratorElement& g, const arith::Factorization& f) {
    const std::int64_t n = norm_to_q(g);
    if (n <= 1) return false;
    for (auto [p, e] : arith::factorize(static_cast<std::uint64_t>(n)))
        if (!f.contains(static_cast<std::int64_t>(p))) return false;
    return true;
}

bool is_square_mod4(const GeneratorElement& g) {
    const Residue4 r = reduce_mod4(g);
    // z = 1 (mod 1 - z), so the residue field map is the coefficient sum mod 2.
    if (((r.c[0] + r.c[1] + r.c[2] + r.c[3]) & 1) == 0)
        throw DomainError("element is not coprime to 2");
    return square_table()[r.index()];
}

IndependenceEvidence independence_gf2(const std::vector<GeneratorElement>& gens, const arith::Factorization& f,
                                      const CharacterOptions& opts) {
    IndependenceEvidence ev;
    ev.generator_count = static_cast<int>(gens.size());
    if (gens.empty()) return ev;
    if (gens.size() > kMaxCharacterRows) throw DomainError("too many generators for the character matrix");

    const std::int64_t d = f.abs_value();
    Gf2Basis basis;
    for (std::uint64_t q = 17; q <= opts.max_auxiliary_prime && ev.characters < opts.max_characters; q += 8) {
        if (!arith::is_prime(q) || d % static_cast<std::int64_t>(q) == 0) continue;
        if (arith::jacobi(d, static_cast<std::int64_t>(q)) != 1) continue;
        std::uint64_t h = 2;
        while (arith::mod_pow(static_cast<std::int64_t>(h), (q - 1) / 2, static_cast<std::int64_t>(q)) == 1) ++h;
        const auto zeta = static_cast<std::uint64_t>(
            arith::mod_pow(static_cast<std::int64_t>(h), (q - 1) / 8, static_cast<std::int64_t>(q)));
        std::uint64_t z = zeta;
        for (int k = 0; k < 4; ++k, z = arith::mul_mod(z, arith::mul_mod(zeta, zeta, q), q)) {
            Column col;
            bool usable = true;
            for (std::size_t i = 0; i < gens.size() && usable; ++i) {
                const std::uint64_t v = image_mod(gens[i], z, q);
                if (v == 0) {
                    usable = false;
                    break;
                }
                col.set(i, arith::jacobi(static_cast<std::int64_t>(v), static_cast<std::int64_t>(q)) == -1);
            }
            if (!usable) continue;
            ++ev.characters;
            basis.insert(col);
            if (basis.rank() == ev.generator_count) break;
        }
        if (basis.rank() == ev.generator_count) break;
    }
    ev.rank = basis.rank();
    ev.independent = ev.rank == ev.generator_count;
    return ev;
}

bool is_square_in_q_zeta8(const Zeta8<BigInt>& x) {
    const Gauss a{x.c[0], x.c[2]};
    const Gauss b{x.c[1], x.c[3]};
    if (a.re == 0 && a.im == 0 && b.re == 0 && b.im == 0) return true;
    // x = a + b z with z^2 = i. If x = (c + e z)^2 then a = c^2 + i e^2, b = 2ce and
    // the relative norm a^2 - i b^2 equals (c^2 - i e^2)^2.
    Gauss n;
    if (!gauss_sqrt(a * a - times_i(b * b), n)) return false;
    for (const Gauss& s : {n, -n}) {
        Gauss c2, twice_ie2, c, e;
        if (!halve(a + s, c2) || !halve(a - s, twice_ie2)) continue;
        const Gauss e2 = times_i(-twice_ie2);  // divide by i
        if (!gauss_sqrt(c2, c) || !gauss_sqrt(e2, e)) continue;
        const Gauss ce = c * e;
        const Gauss two_ce{2 * ce.re, 2 * ce.im};
        if (two_ce == b || -two_ce == b) return true;
    }
    return false;
}

bool brute_force_subset_oracle(const std::vector<GeneratorElement>& gens, const arith::Factorization& f) {
    if (gens.size() > kOracleMaxGenerators)
        throw DomainError("subset oracle refuses more than " + std::to_string(kOracleMaxGenerators) + " generators");
    std::vector<Zeta8<BigInt>> elems;
    elems.reserve(gens.size());
    for (const auto& g : gens) elems.push_back(embed<BigInt>(g));
    const auto d = Zeta8<BigInt>::constant(BigInt(f.abs_value()));

    // Depth-first over subsets, extending the running product one generator at a time.
    bool independent = true;
    const auto visit = [&](auto&& self, std::size_t next, const Zeta8<BigInt>& product) -> void {
        for (std::size_t i = next; i < elems.size() && independent; ++i) {
            const auto beta = product * elems[i];
            if (is_square_in_q_zeta8(beta) || is_square_in_q_zeta8(d * beta)) {
                independent = false;
                return;
            }
            self(self, i + 1, beta);
        }
    };
    visit(visit, 0, Zeta8<BigInt>::constant(BigInt(1)));
    return independent;
}

VerificationReport full_report(const genus::GenusField& g, const arith::Factorization& f,
                               const CharacterOptions& opts) {
    VerificationReport rep;
    bool all_ok = true;
    for (const auto& gen : g.generators) {
        GeneratorCheck c;
        c.label = gen.label;
        c.norm = norm_to_q(gen.element);
        c.norm_ok = c.norm == gen.expected_norm;
        c.ideal_square_ok = check_ideal_square(gen.element, f);
        try {
            c.square_mod4_ok = is_square_mod4(gen.element);
        } catch (const DomainError&) {
            c.square_mod4_ok = false;
        }
        all_ok = all_ok && c.norm_ok && c.ideal_square_ok && c.square_mod4_ok;
        rep.generators.push_back(std::move(c));
    }
    const auto elems = g.elements();
    rep.independence = independence_gf2(elems, f, opts);
    if (elems.size() <= kOracleMaxGenerators) rep.subset_oracle = brute_force_subset_oracle(elems, f);
    rep.count_matches_rank = static_cast<int>(g.generators.size()) == g.expected_rank;
    rep.overall = all_ok && rep.independence.independent && rep.subset_oracle.value_or(true) &&
                  rep.count_matches_rank;
    return rep;
}

}  // namespace genusfield::verify
