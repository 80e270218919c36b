#include "sfs/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sfs/error.hpp"

namespace sfs {

namespace {

std::string pair_text(long long alpha, long long beta) {
    return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
}

// Floor modulus: result in [0, alpha), alpha > 0.
long long floor_mod(long long value, long long alpha, long long& quotient) {
    long long r = value % alpha;
    if (r < 0) r += alpha;
    quotient = (value - r) / alpha;
    return r;
}

} // namespace

SeifertInvariants::SeifertInvariants(long long base_genus, long long b,
                                     std::vector<ExceptionalFiber> exceptional,
                                     long long boundary_components)
    : base_genus_(base_genus),
      b_(b),
      exceptional_(std::move(exceptional)),
      boundary_components_(boundary_components) {
    if (base_genus_ < 0)
        throw Error(ErrorCode::Normalization, "negative base genus");
    if (boundary_components_ < 0)
        throw Error(ErrorCode::Normalization, "negative boundary component count");
    for (const auto& f : exceptional_) {
        if (f.alpha < 2 || f.beta < 1 || f.beta >= f.alpha)
            throw Error(ErrorCode::Normalization,
                        "pair " + pair_text(f.alpha, f.beta) + " is not in normalized form");
        if (std::gcd(f.alpha, f.beta) != 1)
            throw Error(ErrorCode::Normalization,
                        "pair " + pair_text(f.alpha, f.beta) + " is not coprime");
    }
    std::sort(exceptional_.begin(), exceptional_.end());
}

SeifertInvariants normalize(const SeifertData& raw) {
    long long b = raw.b;
    std::vector<ExceptionalFiber> fibers;
    fibers.reserve(raw.exceptional.size());
    for (const auto& f : raw.exceptional) {
        if (f.alpha <= 0)
            throw Error(ErrorCode::Normalization,
                        "pair " + pair_text(f.alpha, f.beta) + " has alpha <= 0");
        if (f.alpha == 1) {
            // (1, beta) is a regular fiber; beta twists fold into b.
            b += f.beta;
            continue;
        }
        if (std::gcd(f.alpha, f.beta) != 1)
            throw Error(ErrorCode::Normalization,
                        "pair " + pair_text(f.alpha, f.beta) + " is not coprime");
        long long quotient = 0;
        long long beta = floor_mod(f.beta, f.alpha, quotient);
        b += quotient;
        fibers.push_back({f.alpha, beta});
    }
    return SeifertInvariants(raw.base_genus, b, std::move(fibers), raw.boundary_components);
}

Orbifold base_orbifold(const SeifertInvariants& m) {
    Orbifold o;
    o.underlying_genus = m.base_genus();
    o.cone_orders.reserve(m.exceptional().size());
    for (const auto& f : m.exceptional()) o.cone_orders.push_back(f.alpha);
    std::sort(o.cone_orders.begin(), o.cone_orders.end());
    return o;
}

Rational orbifold_euler_characteristic(const Orbifold& o) {
    Rational chi(2 - 2 * o.underlying_genus);
    for (long long alpha : o.cone_orders) chi -= Rational(alpha - 1, alpha);
    return chi;
}

Rational euler_number(const SeifertInvariants& m) {
    if (!m.is_closed())
        throw Error(ErrorCode::BoundedManifold,
                    "Euler number is defined here for closed manifolds only "
                    "(it vanishes whenever the boundary is non-empty)");
    Rational e(-m.b());
    for (const auto& f : m.exceptional()) e -= Rational(f.beta, f.alpha);
    return e;
}

} // namespace sfs
