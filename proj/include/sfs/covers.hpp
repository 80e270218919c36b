#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sfs/seifert.hpp"

namespace sfs {

/// One finite fiber-preserving cover total -> base with total degree d,
/// fiber degree m (degree between regular fibers) and orbifold degree l
/// (degree of the base-orbifold cover).
///
/// Construction validates the four covering invariants:
///   d = m * l
///   chi(O_total) = l * chi(O_base)        (Riemann-Hurwitz)
///   k_total <= l * k_base
///   e(total) = (l / m) * e(base)
class CoverDescriptor {
public:
    CoverDescriptor(SeifertInvariants base, SeifertInvariants total,
                    long long d, long long m, long long l);

    const SeifertInvariants& base() const { return base_; }
    const SeifertInvariants& total() const { return total_; }
    long long d() const { return d_; }
    long long m() const { return m_; }
    long long l() const { return l_; }

    bool operator==(const CoverDescriptor&) const = default;

private:
    SeifertInvariants base_;
    SeifertInvariants total_;
    long long d_, m_, l_;
};

/// Degree-1 cover of any closed manifold by itself.
CoverDescriptor identity_cover(const SeifertInvariants& m);

/// Genus of the connected i-fold cover of a closed orientable surface of
/// genus g >= 1: ig - i + 1 (chi multiplies by i). Rejects g = 0.
long long surface_cover_genus(long long g, long long i);

/// Pullback of a circle bundle (k = 0, base genus >= 1) along the l-fold
/// surface cover: obstruction multiplies by l. Descriptor (d=l, m=1, l).
CoverDescriptor pullback_circle_bundle(const SeifertInvariants& m, long long l);

/// m-fold cyclic cover of a circle bundle in the fiber direction:
/// obstruction divides by m. Requires m | |e|, or e = 0 (any m).
/// Descriptor (d=m, m, l=1).
CoverDescriptor fiber_cyclic_cover(const SeifertInvariants& m, long long cover_m);

/// Stacks `upper` on top of `first`: first covers the original base and
/// upper covers first's total. Degrees multiply componentwise.
CoverDescriptor compose(const CoverDescriptor& first, const CoverDescriptor& upper);

/// The degree-(|e| i^2) cover family of a circle bundle with e != 0 over
/// genus g >= 1: total is the circle bundle with |e| = 1 over the i-fold
/// surface cover; d = |e| i^2, m = |e| i, l = i. Requires i >= 2.
CoverDescriptor prop_circle_cover(const SeifertInvariants& m, long long i);
std::vector<CoverDescriptor> prop_circle_family(const SeifertInvariants& m,
                                                long long i_from, long long i_to);

/// Affine integer sequence a*i + c, used for symbolic degree data.
struct AffineExpr {
    long long slope = 0;
    long long intercept = 0;

    long long eval(long long i) const { return slope * i + intercept; }
    bool is_constant() const { return slope == 0; }

    /// "i", "2i+1", "7", ... Throws Error(Parse) on anything non-affine.
    static AffineExpr parse(const std::string& text);
    std::string str() const;

    bool operator==(const AffineExpr&) const = default;
};

// Family specifications. The text forms accepted by parse_family:
//   prop-circle:i=2..100
//   fiber-cyclic:m=1,2,4,8
//   parametric:l=i,m=7
//   explicit:@file.json   (resolved by the caller into ExplicitFamily)
struct PropCircleFamily {
    long long i_from = 2;
    long long i_to = 2;
};

struct FiberCyclicFamily {
    std::vector<long long> degrees;
};

struct ExplicitFamily {
    std::vector<CoverDescriptor> covers;
};

/// Symbolic family given by degree data only: for i = 1, 2, ... the
/// cover has orbifold degree l(i) and fiber degree m(i). Both sequences
/// must be positive and non-decreasing (slope >= 0, value >= 1 at i=1).
/// unbounded_m() is the bounded/unbounded certificate for m(i).
struct ParametricFamily {
    AffineExpr l;
    AffineExpr m;

    bool unbounded_m() const { return m.slope > 0; }
};

using FamilySpec = std::variant<PropCircleFamily, FiberCyclicFamily, ExplicitFamily, ParametricFamily>;

/// Parses the non-explicit text forms above. "explicit:@file" is
/// reported via needs_file so the caller can load and validate the
/// descriptors against its base manifold.
FamilySpec parse_family(const std::string& text);
bool family_needs_file(const std::string& text, std::string& path_out);

std::string family_text(const FamilySpec& family);

} // namespace sfs
