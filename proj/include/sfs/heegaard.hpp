#pragma once

#include <optional>

#include "sfs/seifert.hpp"

namespace sfs {

/// Certified integer interval for the Heegaard genus.
struct GenusInterval {
    long long lo = 0;
    long long hi = 0;
    bool exact = false;  // exact <=> lo == hi

    bool operator==(const GenusInterval&) const = default;
};

/// Certified interval for chi^h_- = 2*genus - 2 (closed manifolds).
/// Both endpoints are even and, for infinite fundamental group,
/// non-negative.
struct ChiInterval {
    long long lo = 0;
    long long hi = 0;
    bool exact = false;

    bool operator==(const ChiInterval&) const = default;
};

/// Genus of a vertical Heegaard surface: 2g(B)+1 when k < 2, else
/// 2g(B)+k-1. Depends only on (g(B), k). Closed manifolds only.
long long vertical_genus(const SeifertInvariants& m);

/// Certified bounds [max(0, 2g+k-2), vertical_genus(M)] for the
/// Heegaard genus; collapses to the exact value for circle bundles with
/// |e| = 1 over positive-genus surfaces (horizontal minimal surface).
/// Requires a closed manifold with infinite fundamental group.
GenusInterval genus_bounds(const SeifertInvariants& m);

/// Exact Heegaard genus 2g(B) of a circle bundle with |e| = 1 over a
/// surface of genus >= 1; the minimal surface is horizontal.
long long circle_bundle_exact_genus(const SeifertInvariants& m);

/// chi^h_- interval derived from genus_bounds, intersected with
/// [0, inf) (infinite fundamental group forces chi^h_- >= 0).
ChiInterval chi_h_interval(const SeifertInvariants& m);

/// chi^sh_- (strongly irreducible splittings only). Certified, and
/// equal to chi^h_-, exactly for circle bundles with |e| = 1; nullopt
/// ("undetermined") for every other input.
std::optional<ChiInterval> chi_sh_interval(const SeifertInvariants& m);

} // namespace sfs
