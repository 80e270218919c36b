#pragma once

#include <string>
#include <vector>

#include "sfs/covers.hpp"
#include "sfs/rational.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

struct RationalInterval {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    bool operator==(const RationalInterval&) const = default;
};

/// One cover's contribution to the gradient sequence: certified
/// enclosures of g(M_i)/d_i and chi^h_-(M_i)/d_i.
struct GradientTerm {
    long long index = 0;
    long long d = 1, m = 1, l = 1;
    RationalInterval genus_over_d;
    RationalInterval chi_over_d;

    bool operator==(const GradientTerm&) const = default;
};

enum class Verdict { Zero, Positive, Negative, UnknownFinitePrefix };

/// Which inequality chain produced the verdict.
enum class CertificateKind {
    SymbolicDecay,      // unbounded fiber degrees: upper chain terms -> 0
    UniformLowerBound,  // bounded fiber degrees: -chi(O)/m* > 0 uniformly
    FiniteFamilyBound,  // fully materialized family: min over term bounds
    TermAttainsZero,    // some term is exactly zero
    Inconclusive,
};

const char* to_string(Verdict v);
const char* to_string(CertificateKind k);

struct GradientReport {
    SeifertInvariants base;
    std::string family;
    bool finite_family = true;       // terms list IS the whole family
    bool strong = false;             // chi^sh values (equal to chi^h here)
    std::vector<GradientTerm> terms;
    Rational inf_upper_bound;        // min over term upper ends
    Rational inf_lower_bound;        // best proven uniform lower bound
    Verdict verdict = Verdict::UnknownFinitePrefix;
    CertificateKind certificate_kind = CertificateKind::Inconclusive;
    std::string certificate;
    bool upper_ends_nonincreasing = false;
    long long strictly_decreasing_from = 0;  // term index starting the decreasing tail
};

/// Certified enclosure for one constructed cover of `base`:
/// genus_over_d from the two degree chains
///   -chi(O)/m <= g(M_i)/d_i <= (-chi(O)+k/2)/m + 3/(m l)
/// intersected with the Heegaard bounds of the (known) total space, and
/// chi_over_d = 2*genus_over_d - 2/d clamped into [0, inf).
/// Requires infinite fundamental group of the base.
GradientTerm term_interval(const SeifertInvariants& base, const CoverDescriptor& cover);

/// Same enclosure from degree data alone (no total space known); used
/// for symbolic families. Requires chi(O) < 0.
GradientTerm term_from_degrees(const SeifertInvariants& base, long long index,
                               long long m, long long l);

/// Materializes a PropCircle / FiberCyclic / Explicit family and reports
/// interval-certified infimum bounds for it. Parametric families are
/// symbolic and belong to decide_zero_gradient.
GradientReport gradient_sequence(const SeifertInvariants& base, const FamilySpec& family);

/// Decision procedure for bases with chi(O) < 0: the gradient of a
/// family vanishes iff its fiber degrees are unbounded. Parametric
/// families get the symbolic verdict; materialized families are finite,
/// hence Positive. `prefix_terms` controls how many terms a symbolic
/// family materializes for display.
GradientReport decide_zero_gradient(const SeifertInvariants& base, const FamilySpec& family,
                                    long long prefix_terms = 10);

/// Self-check of the genus/chi equivalence: the zero-verdict derived
/// from the chi^h sequence must match the one derived from the genus
/// sequence. Requires an irreducible base with infinite fundamental
/// group (chi(O) <= 0). Returns true on every report this module makes.
bool genus_gradient_equivalence(const GradientReport& report);

/// Prop-circle family pushed through a fixed cover `via` of an
/// SL2R-tilde base by a circle bundle with e != 0. Totals have |e| = 1,
/// so chi^sh = chi^h holds exactly and the terms are exact; the family
/// extends to all i, fiber degrees unbounded, verdict Zero.
GradientReport strong_gradient_report(const SeifertInvariants& base, const CoverDescriptor& via,
                                      long long i_from, long long i_to);

/// chi^h twin of strong_gradient_report (identical term values).
GradientReport circle_bundle_family_report(const SeifertInvariants& base,
                                           const CoverDescriptor& via, long long i_from,
                                           long long i_to, bool strong);

} // namespace sfs
