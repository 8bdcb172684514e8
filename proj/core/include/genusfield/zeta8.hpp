#pragma once

#include <array>
#include <cstdint>

#include "genusfield/genus.hpp"

namespace genusfield {

/// Element c0 + c1*z + c2*z^2 + c3*z^3 of Z[z], z a primitive 8th root of unity (z^4 = -1).
template <class T>
struct Zeta8 {
    std::array<T, 4> c{};

    static Zeta8 constant(const T& v) { return Zeta8{{v, T(0), T(0), T(0)}}; }

    friend Zeta8 operator+(const Zeta8& x, const Zeta8& y) {
        Zeta8 r;
        for (int k = 0; k < 4; ++k) r.c[k] = x.c[k] + y.c[k];
        return r;
    }

    friend Zeta8 operator*(const Zeta8& x, const Zeta8& y) {
        std::array<T, 7> acc{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) acc[i + j] += x.c[i] * y.c[j];
        Zeta8 r;
        for (int k = 0; k < 4; ++k) r.c[k] = k + 4 < 7 ? T(acc[k] - acc[k + 4]) : acc[k];
        return r;
    }

    friend bool operator==(const Zeta8&, const Zeta8&) = default;
};

/// sqrt(-1) = z^2, sqrt(2) = z - z^3, sqrt(-2) = z + z^3.
template <class T>
Zeta8<T> embed(const genus::GeneratorElement& g) {
    const T a(g.a), b(g.b);
    switch (g.kind) {
        case genus::ElementKind::RationalPrime: return Zeta8<T>{{a, T(0), T(0), T(0)}};
        case genus::ElementKind::Gaussian: return Zeta8<T>{{a, T(0), b, T(0)}};
        case genus::ElementKind::Sqrt2: return Zeta8<T>{{a, b, T(0), T(-b)}};
        case genus::ElementKind::SqrtMinus2: return Zeta8<T>{{a, b, T(0), b}};
    }
    return {};
}

}  // namespace genusfield
