#include "sfs/classification.hpp"

#include "sfs/error.hpp"

namespace sfs {

namespace {

void require_closed(const SeifertInvariants& m, const char* op) {
    if (!m.is_closed())
        throw Error(ErrorCode::BoundedManifold, std::string(op) + " requires a closed manifold");
}

} // namespace

const char* to_string(GeometryType g) {
    switch (g) {
        case GeometryType::Spherical: return "Spherical";
        case GeometryType::S2xR: return "S2xR";
        case GeometryType::Euclidean: return "Euclidean";
        case GeometryType::Nil: return "Nil";
        case GeometryType::H2xR: return "H2xR";
        case GeometryType::SL2Rtilde: return "SL2R-tilde";
    }
    return "unknown";
}

const char* to_string(GradientSign s) {
    return s == GradientSign::Negative ? "Negative" : "Zero";
}

bool has_finite_pi1(const SeifertInvariants& m) {
    require_closed(m, "pi_1 finiteness test");
    Rational chi = orbifold_euler_characteristic(base_orbifold(m));
    return chi.sign() > 0 && !euler_number(m).is_zero();
}

bool virtually_fibers_over_circle(const SeifertInvariants& m) {
    if (!m.is_closed()) return true;  // e vanishes for non-empty boundary
    return euler_number(m).is_zero();
}

bool virtually_fibers_over_surface(const SeifertInvariants& m) {
    if (!m.is_closed()) return true;
    return !has_finite_pi1(m);
}

GeometryType geometry(const SeifertInvariants& m) {
    require_closed(m, "geometry classification");
    int chi_sign = orbifold_euler_characteristic(base_orbifold(m)).sign();
    bool e_zero = euler_number(m).is_zero();
    if (chi_sign > 0) return e_zero ? GeometryType::S2xR : GeometryType::Spherical;
    if (chi_sign == 0) return e_zero ? GeometryType::Euclidean : GeometryType::Nil;
    return e_zero ? GeometryType::H2xR : GeometryType::SL2Rtilde;
}

GradientSign heegaard_gradient_sign(const SeifertInvariants& m) {
    if (!m.is_closed()) return GradientSign::Zero;
    return has_finite_pi1(m) ? GradientSign::Negative : GradientSign::Zero;
}

} // namespace sfs
