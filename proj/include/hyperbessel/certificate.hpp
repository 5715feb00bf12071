#pragma once

#include "hyperbessel/errors.hpp"

namespace hb {

/// Witness that a coefficient sequence obeys |b_n| <= C * a^{rn} on the
/// stored range: the computable shadow of membership in the exponential-type
/// class. `declared` certificates come from the caller and are never
/// silently replaced; `fitted` ones are computed from stored data and are
/// sound on that range only.
struct ExpTypeCertificate {
    enum class Source { declared, fitted };

    double C = 1.0;
    double a = 1.0;
    Source source = Source::fitted;

    ExpTypeCertificate() = default;
    ExpTypeCertificate(double c, double a_, Source s) : C(c), a(a_), source(s) {
        if (!(C > 0.0) || !(a > 0.0))
            throw ArgumentError("ExpTypeCertificate: C and a must be positive");
    }
};

} // namespace hb
