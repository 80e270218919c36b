#include "sfs/heegaard.hpp"

#include <algorithm>

#include "sfs/classification.hpp"
#include "sfs/error.hpp"

namespace sfs {

namespace {

void require_closed(const SeifertInvariants& m, const char* op) {
    if (!m.is_closed())
        throw Error(ErrorCode::BoundedManifold, std::string(op) + " requires a closed manifold");
}

bool unit_euler_circle_bundle(const SeifertInvariants& m) {
    return m.is_circle_bundle() && m.is_closed() && abs(euler_number(m)) == Rational(1);
}

} // namespace

long long vertical_genus(const SeifertInvariants& m) {
    require_closed(m, "vertical Heegaard genus");
    long long g = m.base_genus();
    long long k = m.cone_point_count();
    return k < 2 ? 2 * g + 1 : 2 * g + k - 1;
}

GenusInterval genus_bounds(const SeifertInvariants& m) {
    require_closed(m, "genus bounds");
    if (has_finite_pi1(m))
        throw Error(ErrorCode::FinitePi1,
                    "genus bounds are certified for infinite fundamental group only");
    if (unit_euler_circle_bundle(m) && m.base_genus() >= 1) {
        long long g = circle_bundle_exact_genus(m);
        return {g, g, true};
    }
    long long lo = std::max<long long>(0, 2 * m.base_genus() + m.cone_point_count() - 2);
    long long hi = vertical_genus(m);
    return {lo, hi, lo == hi};
}

long long circle_bundle_exact_genus(const SeifertInvariants& m) {
    require_closed(m, "exact circle-bundle genus");
    if (!m.is_circle_bundle())
        throw Error(ErrorCode::Precondition,
                    "exact genus requires a circle bundle (no exceptional fibers)");
    if (abs(euler_number(m)) != Rational(1))
        throw Error(ErrorCode::Precondition, "exact genus requires |e| = 1");
    if (m.base_genus() < 1)
        throw Error(ErrorCode::Precondition, "exact genus requires base genus >= 1");
    return 2 * m.base_genus();
}

ChiInterval chi_h_interval(const SeifertInvariants& m) {
    GenusInterval g = genus_bounds(m);
    long long lo = std::max<long long>(0, 2 * g.lo - 2);
    long long hi = std::max<long long>(0, 2 * g.hi - 2);
    return {lo, hi, lo == hi};
}

std::optional<ChiInterval> chi_sh_interval(const SeifertInvariants& m) {
    if (!m.is_closed() || !unit_euler_circle_bundle(m)) return std::nullopt;
    if (has_finite_pi1(m)) return std::nullopt;  // S^3: outside the certified case
    ChiInterval chi = chi_h_interval(m);
    chi.exact = true;
    return chi;
}

} // namespace sfs
