#include "sfs/covers.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "sfs/error.hpp"
#include "sfs/notation.hpp"

namespace sfs {

namespace {

void require_closed(const SeifertInvariants& m, const char* op) {
    if (!m.is_closed())
        throw Error(ErrorCode::BoundedManifold, std::string(op) + " requires a closed manifold");
}

void require_circle_bundle(const SeifertInvariants& m, const char* op) {
    if (!m.is_circle_bundle())
        throw Error(ErrorCode::Precondition,
                    std::string(op) + " requires a circle bundle (no exceptional fibers)");
}

} // namespace

CoverDescriptor::CoverDescriptor(SeifertInvariants base, SeifertInvariants total,
                                 long long d, long long m, long long l)
    : base_(std::move(base)), total_(std::move(total)), d_(d), m_(m), l_(l) {
    require_closed(base_, "cover validation");
    require_closed(total_, "cover validation");
    if (d_ < 1 || m_ < 1 || l_ < 1)
        throw Error(ErrorCode::CoverValidation, "cover degrees must be positive");
    if (d_ != m_ * l_)
        throw Error(ErrorCode::CoverValidation,
                    "total degree mismatch: d = " + std::to_string(d_) + " but m*l = " +
                        std::to_string(m_ * l_));
    Rational chi_base = orbifold_euler_characteristic(base_orbifold(base_));
    Rational chi_total = orbifold_euler_characteristic(base_orbifold(total_));
    if (chi_total != Rational(l_) * chi_base)
        throw Error(ErrorCode::CoverValidation,
                    "Riemann-Hurwitz violated: chi(O_total) = " + chi_total.str() +
                        " != l * chi(O_base) = " + (Rational(l_) * chi_base).str());
    if (total_.cone_point_count() > l_ * base_.cone_point_count())
        throw Error(ErrorCode::CoverValidation,
                    "cone point count exceeds l * k of the base");
    Rational e_expected = Rational(l_, m_) * euler_number(base_);
    if (euler_number(total_) != e_expected)
        throw Error(ErrorCode::CoverValidation,
                    "Euler number violated: e(total) = " + euler_number(total_).str() +
                        " != (l/m) e(base) = " + e_expected.str());
}

CoverDescriptor identity_cover(const SeifertInvariants& m) {
    return CoverDescriptor(m, m, 1, 1, 1);
}

long long surface_cover_genus(long long g, long long i) {
    if (g == 0)
        throw Error(ErrorCode::Precondition,
                    "the 2-sphere has no connected covers of degree > 1 by surfaces");
    if (g < 0 || i < 1)
        throw Error(ErrorCode::Precondition, "surface cover needs g >= 1 and i >= 1");
    return i * g - i + 1;
}

CoverDescriptor pullback_circle_bundle(const SeifertInvariants& m, long long l) {
    require_closed(m, "pullback");
    require_circle_bundle(m, "pullback");
    if (l < 1) throw Error(ErrorCode::Precondition, "pullback degree must be >= 1");
    long long genus = surface_cover_genus(m.base_genus(), l);
    SeifertInvariants total(genus, m.b() * l);
    return CoverDescriptor(m, std::move(total), l, 1, l);
}

CoverDescriptor fiber_cyclic_cover(const SeifertInvariants& m, long long cover_m) {
    require_closed(m, "fiber-cyclic cover");
    require_circle_bundle(m, "fiber-cyclic cover");
    if (cover_m < 1) throw Error(ErrorCode::Precondition, "fiber degree must be >= 1");
    long long b = m.b();
    if (b != 0 && b % cover_m != 0)
        throw Error(ErrorCode::Precondition,
                    "fiber-cyclic cover of degree " + std::to_string(cover_m) +
                        " needs m | |e| (here |e| = " + std::to_string(std::llabs(b)) + ")");
    SeifertInvariants total(m.base_genus(), b == 0 ? 0 : b / cover_m);
    return CoverDescriptor(m, std::move(total), cover_m, cover_m, 1);
}

CoverDescriptor compose(const CoverDescriptor& first, const CoverDescriptor& upper) {
    if (upper.base() != first.total())
        throw Error(ErrorCode::CoverValidation,
                    "composition mismatch: upper cover's base is " +
                        print_manifold(upper.base()) + " but lower total is " +
                        print_manifold(first.total()));
    return CoverDescriptor(first.base(), upper.total(), first.d() * upper.d(),
                           first.m() * upper.m(), first.l() * upper.l());
}

CoverDescriptor prop_circle_cover(const SeifertInvariants& m, long long i) {
    require_closed(m, "prop-circle family");
    require_circle_bundle(m, "prop-circle family");
    if (m.b() == 0)
        throw Error(ErrorCode::FamilyMismatch,
                    "prop-circle family needs e != 0 (use fiber-cyclic for e = 0)");
    if (m.base_genus() < 1)
        throw Error(ErrorCode::FamilyMismatch,
                    "prop-circle family needs base genus >= 1 (finite pi_1 otherwise)");
    if (i < 2) throw Error(ErrorCode::Precondition, "prop-circle index must be >= 2");
    long long b = std::llabs(m.b());
    long long genus = surface_cover_genus(m.base_genus(), i);
    // Obstruction bi of the pullback divided by the fiber degree bi: +-1,
    // with the sign of the original obstruction.
    SeifertInvariants total(genus, m.b() > 0 ? 1 : -1);
    return CoverDescriptor(m, std::move(total), b * i * i, b * i, i);
}

std::vector<CoverDescriptor> prop_circle_family(const SeifertInvariants& m,
                                                long long i_from, long long i_to) {
    if (i_from > i_to) throw Error(ErrorCode::Precondition, "empty prop-circle range");
    std::vector<CoverDescriptor> covers;
    covers.reserve(static_cast<std::size_t>(i_to - i_from + 1));
    for (long long i = i_from; i <= i_to; ++i) covers.push_back(prop_circle_cover(m, i));
    return covers;
}

// ---- affine expressions and family text forms ----

AffineExpr AffineExpr::parse(const std::string& text) {
    // Grammar: term ([+-] INT)?   with term = INT | 'i' | INT '*'? 'i'
    std::size_t pos = 0;
    auto fail = [&]() -> void {
        throw Error(ErrorCode::Parse, "malformed affine expression '" + text + "'");
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto integer = [&]() -> long long {
        skip_ws();
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        }
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return negative ? -v : v;
    };

    AffineExpr e;
    skip_ws();
    if (pos < text.size() && text[pos] == 'i') {
        ++pos;
        e.slope = 1;
    } else {
        long long v = integer();
        skip_ws();
        if (pos < text.size() && (text[pos] == '*' || text[pos] == 'i')) {
            if (text[pos] == '*') ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != 'i') fail();
            ++pos;
            e.slope = v;
        } else {
            e.intercept = v;
        }
    }
    skip_ws();
    if (pos < text.size()) {
        if (text[pos] != '+' && text[pos] != '-') fail();
        e.intercept = integer();
    }
    skip_ws();
    if (pos != text.size()) fail();
    return e;
}

std::string AffineExpr::str() const {
    std::ostringstream os;
    if (slope == 0) return std::to_string(intercept);
    if (slope != 1) os << slope;
    os << "i";
    if (intercept > 0) os << "+" << intercept;
    if (intercept < 0) os << intercept;
    return os.str();
}

namespace {

long long parse_int(const std::string& text) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "malformed integer '" + text + "'");
    }
    if (used != text.size())
        throw Error(ErrorCode::Parse, "malformed integer '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t at = text.find(sep, start);
        if (at == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, at - start));
        start = at + 1;
    }
}

void validate_parametric(const ParametricFamily& family) {
    for (const AffineExpr* e : {&family.l, &family.m}) {
        if (e->slope < 0 || e->eval(1) < 1)
            throw Error(ErrorCode::Parse,
                        "parametric degree sequence '" + e->str() +
                            "' must stay >= 1 for every i >= 1");
    }
}

} // namespace

bool family_needs_file(const std::string& text, std::string& path_out) {
    const std::string prefix = "explicit:@";
    if (text.rfind(prefix, 0) != 0) return false;
    path_out = text.substr(prefix.size());
    return true;
}

FamilySpec parse_family(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorCode::Parse, "malformed family spec '" + text + "'");
    std::string kind = text.substr(0, colon);
    std::string args = text.substr(colon + 1);

    if (kind == "prop-circle") {
        if (args.rfind("i=", 0) != 0)
            throw Error(ErrorCode::Parse, "prop-circle family needs i=<from>..<to>");
        std::string range = args.substr(2);
        std::size_t dots = range.find("..");
        if (dots == std::string::npos)
            throw Error(ErrorCode::Parse, "prop-circle family needs i=<from>..<to>");
        PropCircleFamily f;
        f.i_from = parse_int(range.substr(0, dots));
        f.i_to = parse_int(range.substr(dots + 2));
        if (f.i_from < 2 || f.i_from > f.i_to)
            throw Error(ErrorCode::Parse, "prop-circle range must satisfy 2 <= from <= to");
        return f;
    }
    if (kind == "fiber-cyclic") {
        if (args.rfind("m=", 0) != 0)
            throw Error(ErrorCode::Parse, "fiber-cyclic family needs m=<list>");
        FiberCyclicFamily f;
        for (const std::string& part : split(args.substr(2), ','))
            f.degrees.push_back(parse_int(part));
        if (f.degrees.empty())
            throw Error(ErrorCode::Parse, "fiber-cyclic family needs at least one degree");
        for (long long m : f.degrees)
            if (m < 1) throw Error(ErrorCode::Parse, "fiber-cyclic degrees must be >= 1");
        return f;
    }
    if (kind == "parametric") {
        ParametricFamily f;
        bool have_l = false, have_m = false;
        for (const std::string& part : split(args, ',')) {
            if (part.rfind("l=", 0) == 0) {
                f.l = AffineExpr::parse(part.substr(2));
                have_l = true;
            } else if (part.rfind("m=", 0) == 0) {
                f.m = AffineExpr::parse(part.substr(2));
                have_m = true;
            } else {
                throw Error(ErrorCode::Parse, "parametric family needs l=<expr>,m=<expr>");
            }
        }
        if (!have_l || !have_m)
            throw Error(ErrorCode::Parse, "parametric family needs both l= and m=");
        validate_parametric(f);
        return f;
    }
    if (kind == "explicit")
        throw Error(ErrorCode::Parse,
                    "explicit families are loaded from a file: explicit:@covers.json");
    throw Error(ErrorCode::Parse, "unknown family kind '" + kind + "'");
}

std::string family_text(const FamilySpec& family) {
    struct Printer {
        std::string operator()(const PropCircleFamily& f) const {
            return "prop-circle:i=" + std::to_string(f.i_from) + ".." + std::to_string(f.i_to);
        }
        std::string operator()(const FiberCyclicFamily& f) const {
            std::string out = "fiber-cyclic:m=";
            for (std::size_t j = 0; j < f.degrees.size(); ++j) {
                if (j) out += ',';
                out += std::to_string(f.degrees[j]);
            }
            return out;
        }
        std::string operator()(const ExplicitFamily& f) const {
            return "explicit:" + std::to_string(f.covers.size()) + " covers";
        }
        std::string operator()(const ParametricFamily& f) const {
            return "parametric:l=" + f.l.str() + ",m=" + f.m.str();
        }
    };
    return std::visit(Printer{}, family);
}

} // namespace sfs
