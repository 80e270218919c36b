#pragma once

#include "sfs/seifert.hpp"

namespace sfs {

/// The six geometries carried by closed orientable Seifert fibered
/// 3-manifolds with orientable base, keyed by (sign of chi(O), e == 0).
enum class GeometryType {
    Spherical,  // chi > 0, e != 0
    S2xR,       // chi > 0, e == 0
    Euclidean,  // chi == 0, e == 0
    Nil,        // chi == 0, e != 0
    H2xR,       // chi < 0, e == 0
    SL2Rtilde,  // chi < 0, e != 0
};

/// Sign of the infimal Heegaard gradient over all finite covers.
/// Negative exactly for the finite fundamental group (spherical) case;
/// zero otherwise.
enum class GradientSign { Negative, Zero };

const char* to_string(GeometryType g);
const char* to_string(GradientSign s);

/// True iff chi(O) > 0 and e(M) != 0. Closed manifolds only; bounded
/// ones always have infinite fundamental group and are rejected.
bool has_finite_pi1(const SeifertInvariants& m);

/// True iff e(M) = 0. Bounded manifolds always qualify.
bool virtually_fibers_over_circle(const SeifertInvariants& m);

/// True iff the fundamental group is infinite: the manifold then
/// virtually fibers over the circle or over a surface other than S^2.
bool virtually_fibers_over_surface(const SeifertInvariants& m);

/// Geometry table lookup. Closed manifolds only.
GeometryType geometry(const SeifertInvariants& m);

/// Negative iff pi_1 is finite; Zero otherwise (bounded manifolds have
/// e = 0, fiber virtually over the circle, and report Zero).
GradientSign heegaard_gradient_sign(const SeifertInvariants& m);

} // namespace sfs
