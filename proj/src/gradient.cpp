#include "sfs/gradient.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "sfs/classification.hpp"
#include "sfs/error.hpp"
#include "sfs/heegaard.hpp"
#include "sfs/notation.hpp"

namespace sfs {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Zero: return "Zero";
        case Verdict::Positive: return "Positive";
        case Verdict::Negative: return "Negative";
        case Verdict::UnknownFinitePrefix: return "UnknownFinitePrefix";
    }
    return "unknown";
}

const char* to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::SymbolicDecay: return "symbolic-decay";
        case CertificateKind::UniformLowerBound: return "uniform-lower-bound";
        case CertificateKind::FiniteFamilyBound: return "finite-family-bound";
        case CertificateKind::TermAttainsZero: return "term-attains-zero";
        case CertificateKind::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

void require_infinite_pi1(const SeifertInvariants& base) {
    if (!base.is_closed())
        throw Error(ErrorCode::BoundedManifold, "gradient terms require a closed base");
    if (has_finite_pi1(base))
        throw Error(ErrorCode::FinitePi1,
                    "gradient terms require infinite fundamental group "
                    "(finite pi_1 manifolds have negative gradient)");
}

// The two degree chains bounding g(M_i)/d_i from the base data alone.
struct DegreeChains {
    Rational lower;  // -chi(O)/m
    Rational upper;  // (-chi(O)+k/2)/m + 3/(m l)
};

DegreeChains chains_for(const Rational& chi, long long k, long long m, long long l) {
    Rational neg_chi = -chi;
    DegreeChains c;
    c.lower = neg_chi / Rational(m);
    c.upper = (neg_chi + Rational(k, 2)) / Rational(m) + Rational(3) / Rational(m * l);
    return c;
}

GradientTerm finish_term(const Rational& chi_base, long long index, long long d, long long m,
                         long long l, Rational glo, Rational ghi) {
    // Covers of an irreducible manifold with infinite pi_1 have Heegaard
    // genus >= 2, which also gives chi^h = 2g - 2 >= g.
    bool irreducible = chi_base.sign() <= 0;
    if (irreducible) glo = max(glo, Rational(2, d));
    if (glo > ghi)
        throw std::logic_error("gradient term: genus bounds crossed");

    Rational two_over_d(2, d);
    Rational clo = max(Rational(0), Rational(2) * glo - two_over_d);
    if (irreducible) clo = max(clo, glo);
    Rational chi_hi = Rational(2) * ghi - two_over_d;
    if (clo > chi_hi)
        throw std::logic_error("gradient term: chi bounds crossed");

    GradientTerm t;
    t.index = index;
    t.d = d;
    t.m = m;
    t.l = l;
    t.genus_over_d = {std::move(glo), std::move(ghi)};
    t.chi_over_d = {std::move(clo), std::move(chi_hi)};
    return t;
}

} // namespace

GradientTerm term_interval(const SeifertInvariants& base, const CoverDescriptor& cover) {
    require_infinite_pi1(base);
    if (cover.base() != base)
        throw Error(ErrorCode::FamilyMismatch,
                    "cover descriptor belongs to base " + print_manifold(cover.base()));

    Rational chi = orbifold_euler_characteristic(base_orbifold(base));
    DegreeChains chains = chains_for(chi, base.cone_point_count(), cover.m(), cover.l());

    GenusInterval gb = genus_bounds(cover.total());
    Rational d(cover.d());
    Rational glo = max(chains.lower, Rational(gb.lo) / d);
    Rational ghi = min(chains.upper, Rational(gb.hi) / d);

    // Sandwich checks: the degree chains must bracket the Heegaard
    // interval of the total space.
    if (chains.lower > Rational(gb.hi) / d || Rational(gb.lo) / d > chains.upper)
        throw std::logic_error("gradient term: degree chains do not bracket the genus bounds");

    return finish_term(chi, cover.d(), cover.d(), cover.m(), cover.l(), std::move(glo),
                       std::move(ghi));
}

GradientTerm term_from_degrees(const SeifertInvariants& base, long long index, long long m,
                               long long l) {
    require_infinite_pi1(base);
    if (m < 1 || l < 1)
        throw Error(ErrorCode::Precondition, "cover degrees must be positive");
    Rational chi = orbifold_euler_characteristic(base_orbifold(base));
    if (chi.sign() >= 0)
        throw Error(ErrorCode::Precondition,
                    "degree-only gradient terms need chi(O) < 0");
    DegreeChains chains = chains_for(chi, base.cone_point_count(), m, l);
    Rational glo = max(chains.lower, Rational(0));
    return finish_term(chi, index, m * l, m, l, std::move(glo), chains.upper);
}

namespace {

std::vector<CoverDescriptor> materialize(const SeifertInvariants& base, const FamilySpec& family,
                                         std::vector<long long>& indices) {
    struct Builder {
        const SeifertInvariants& base;
        std::vector<long long>& indices;

        std::vector<CoverDescriptor> operator()(const PropCircleFamily& f) const {
            std::vector<CoverDescriptor> covers = prop_circle_family(base, f.i_from, f.i_to);
            for (long long i = f.i_from; i <= f.i_to; ++i) indices.push_back(i);
            return covers;
        }
        std::vector<CoverDescriptor> operator()(const FiberCyclicFamily& f) const {
            if (!base.is_circle_bundle() || !base.is_closed() ||
                !euler_number(base).is_zero())
                throw Error(ErrorCode::FamilyMismatch,
                            "fiber-cyclic families are for circle bundles with e = 0");
            std::vector<CoverDescriptor> covers;
            covers.reserve(f.degrees.size());
            for (long long m : f.degrees) {
                covers.push_back(fiber_cyclic_cover(base, m));
                indices.push_back(m);
            }
            return covers;
        }
        std::vector<CoverDescriptor> operator()(const ExplicitFamily& f) const {
            if (f.covers.empty())
                throw Error(ErrorCode::FamilyMismatch, "explicit family has no covers");
            for (std::size_t j = 0; j < f.covers.size(); ++j) {
                if (f.covers[j].base() != base)
                    throw Error(ErrorCode::FamilyMismatch,
                                "explicit cover " + std::to_string(j + 1) +
                                    " does not cover the requested base");
                indices.push_back(static_cast<long long>(j + 1));
            }
            return f.covers;
        }
        std::vector<CoverDescriptor> operator()(const ParametricFamily&) const {
            throw Error(ErrorCode::FamilyMismatch,
                        "parametric families are symbolic; use decide_zero_gradient");
        }
    };
    return std::visit(Builder{base, indices}, family);
}

void fill_monotonicity(GradientReport& report) {
    const auto& terms = report.terms;
    if (terms.empty()) return;
    report.upper_ends_nonincreasing = true;
    for (std::size_t j = 0; j + 1 < terms.size(); ++j)
        if (terms[j].chi_over_d.hi < terms[j + 1].chi_over_d.hi)
            report.upper_ends_nonincreasing = false;
    std::size_t tail = terms.size() - 1;
    while (tail > 0 && terms[tail - 1].chi_over_d.hi > terms[tail].chi_over_d.hi) --tail;
    report.strictly_decreasing_from = terms[tail].index;
}

Rational min_upper(const std::vector<GradientTerm>& terms) {
    Rational m = terms.front().chi_over_d.hi;
    for (const auto& t : terms) m = min(m, t.chi_over_d.hi);
    return m;
}

Rational min_lower(const std::vector<GradientTerm>& terms) {
    Rational m = terms.front().chi_over_d.lo;
    for (const auto& t : terms) m = min(m, t.chi_over_d.lo);
    return m;
}

std::string chain_text_upper(const Rational& chi, long long k) {
    std::ostringstream os;
    os << "upper chain: g(M_i)/d_i <= (-chi(O)+k/2)/m_i + 3/(m_i l_i) = (" << (-chi).str()
       << "+" << Rational(k, 2).str() << ")/m_i + 3/(m_i l_i) -> 0 as m_i -> infinity, "
          "hence chi^h_-(M_i)/d_i = (2 g(M_i)-2)/d_i -> 0; the infimum is zero";
    return os.str();
}

std::string chain_text_lower(const Rational& chi, long long m_star) {
    std::ostringstream os;
    Rational bound = -chi / Rational(m_star);
    os << "lower chain: fiber degrees are bounded by m* = " << m_star
       << "; every cover satisfies g(M_i)/d_i >= -chi(O_i)/d_i = -chi(O)/m_i >= " << bound.str()
       << " > 0, and g(M_i) >= 2 gives chi^h_-(M_i)/d_i >= g(M_i)/d_i >= " << bound.str()
       << "; the infimum is positive";
    return os.str();
}

} // namespace

GradientReport gradient_sequence(const SeifertInvariants& base, const FamilySpec& family) {
    require_infinite_pi1(base);
    std::vector<long long> indices;
    std::vector<CoverDescriptor> covers = materialize(base, family, indices);

    GradientReport report{.base = base, .family = family_text(family)};
    report.terms.reserve(covers.size());
    for (std::size_t j = 0; j < covers.size(); ++j) {
        GradientTerm t = term_interval(base, covers[j]);
        t.index = indices[j];
        report.terms.push_back(std::move(t));
    }
    report.finite_family = true;
    report.inf_upper_bound = min_upper(report.terms);

    Rational lo = min_lower(report.terms);
    bool attains_zero = false;
    long long zero_index = 0;
    for (const auto& t : report.terms) {
        if (t.chi_over_d.hi.is_zero()) {
            attains_zero = true;
            zero_index = t.index;
            break;
        }
    }
    if (attains_zero) {
        report.verdict = Verdict::Zero;
        report.certificate_kind = CertificateKind::TermAttainsZero;
        report.inf_lower_bound = Rational(0);
        report.certificate = "term i=" + std::to_string(zero_index) +
                             " has chi^h_-(M_i)/d_i = 0 exactly; the infimum is zero";
    } else if (lo.sign() > 0) {
        report.verdict = Verdict::Positive;
        report.certificate_kind = CertificateKind::FiniteFamilyBound;
        report.inf_lower_bound = lo;
        report.certificate =
            "finite family: every term's certified lower end is >= " + lo.str() +
            " > 0 (chi^h_-(M_i) > 0 for covers of an irreducible manifold with "
            "infinite pi_1); the infimum over this family is positive";
    } else {
        report.verdict = Verdict::UnknownFinitePrefix;
        report.certificate_kind = CertificateKind::Inconclusive;
        report.inf_lower_bound = max(Rational(0), lo);
        report.certificate =
            "finite family with interval lower ends reaching 0; no positivity "
            "hypothesis applies and no term is exactly zero";
    }
    fill_monotonicity(report);
    return report;
}

GradientReport decide_zero_gradient(const SeifertInvariants& base, const FamilySpec& family,
                                    long long prefix_terms) {
    if (!base.is_closed())
        throw Error(ErrorCode::BoundedManifold, "the decision procedure needs a closed base");
    Rational chi = orbifold_euler_characteristic(base_orbifold(base));
    if (chi.sign() >= 0)
        throw Error(ErrorCode::Precondition,
                    "the decision procedure needs chi(O) < 0; use gradient_sequence");

    if (const auto* parametric = std::get_if<ParametricFamily>(&family)) {
        if (prefix_terms < 1)
            throw Error(ErrorCode::Precondition, "prefix length must be >= 1");
        GradientReport report{.base = base, .family = family_text(family)};
        report.finite_family = false;
        report.terms.reserve(static_cast<std::size_t>(prefix_terms));
        for (long long i = 1; i <= prefix_terms; ++i)
            report.terms.push_back(
                term_from_degrees(base, i, parametric->m.eval(i), parametric->l.eval(i)));
        report.inf_upper_bound = min_upper(report.terms);
        if (parametric->unbounded_m()) {
            report.verdict = Verdict::Zero;
            report.certificate_kind = CertificateKind::SymbolicDecay;
            report.inf_lower_bound = Rational(0);
            report.certificate = "fiber degrees m(i) = " + parametric->m.str() +
                                 " are unbounded; " + chain_text_upper(chi, base.cone_point_count());
        } else {
            long long m_star = parametric->m.intercept;
            report.verdict = Verdict::Positive;
            report.certificate_kind = CertificateKind::UniformLowerBound;
            report.inf_lower_bound = -chi / Rational(m_star);
            report.certificate = chain_text_lower(chi, m_star);
        }
        fill_monotonicity(report);
        return report;
    }

    GradientReport report = gradient_sequence(base, family);
    long long m_star = 0;
    for (const auto& t : report.terms) m_star = std::max(m_star, t.m);
    report.verdict = Verdict::Positive;
    report.certificate_kind = CertificateKind::FiniteFamilyBound;
    report.inf_lower_bound = max(report.inf_lower_bound, -chi / Rational(m_star));
    report.certificate =
        "the family is finite, so its fiber degrees are bounded by m* = " +
        std::to_string(m_star) + " and the infimum is positive: " +
        chain_text_lower(chi, m_star);
    return report;
}

bool genus_gradient_equivalence(const GradientReport& report) {
    Rational chi = orbifold_euler_characteristic(base_orbifold(report.base));
    if (chi.sign() > 0)
        throw Error(ErrorCode::Precondition,
                    "the genus/chi equivalence needs an irreducible base with "
                    "infinite pi_1 (chi(O) <= 0)");

    enum class Zeroness { Yes, No, Unknown };

    // chi^h side: read off the report verdict.
    Zeroness chi_side = Zeroness::Unknown;
    if (report.verdict == Verdict::Zero) chi_side = Zeroness::Yes;
    if (report.verdict == Verdict::Positive) chi_side = Zeroness::No;

    // Genus side, re-derived from the genus intervals and the family shape.
    Zeroness genus_side = Zeroness::Unknown;
    if (report.certificate_kind == CertificateKind::SymbolicDecay) {
        // The upper degree chain bounds the genus terms and tends to 0.
        genus_side = Zeroness::Yes;
    } else {
        bool attains_zero = false;
        Rational lo(0);
        bool first = true;
        for (const auto& t : report.terms) {
            if (t.genus_over_d.hi.is_zero()) attains_zero = true;
            lo = first ? t.genus_over_d.lo : min(lo, t.genus_over_d.lo);
            first = false;
        }
        if (attains_zero) {
            genus_side = Zeroness::Yes;
        } else if (report.finite_family) {
            if (!first && lo.sign() > 0) genus_side = Zeroness::No;
        } else if (report.certificate_kind == CertificateKind::UniformLowerBound) {
            genus_side = Zeroness::No;  // g(M_i)/d_i >= -chi(O)/m* > 0
        }
    }
    return chi_side == genus_side;
}

GradientReport circle_bundle_family_report(const SeifertInvariants& base,
                                           const CoverDescriptor& via, long long i_from,
                                           long long i_to, bool strong) {
    if (geometry(base) != GeometryType::SL2Rtilde)
        throw Error(ErrorCode::Precondition,
                    "circle-bundle family reports need an SL2R-tilde base");
    if (via.base() != base)
        throw Error(ErrorCode::CoverValidation,
                    "the supplied cover does not cover the requested base");
    const SeifertInvariants& bundle = via.total();
    if (!bundle.is_circle_bundle() || euler_number(bundle).is_zero())
        throw Error(ErrorCode::Precondition,
                    "the supplied cover must be a circle bundle with e != 0");
    if (i_from < 2 || i_from > i_to)
        throw Error(ErrorCode::Precondition, "index range must satisfy 2 <= from <= to");

    Rational chi = orbifold_euler_characteristic(base_orbifold(base));
    long long b = std::llabs(bundle.b());
    long long g = bundle.base_genus();

    GradientReport report{.base = base, .family = "prop-circle:i=" + std::to_string(i_from) +
                                                      ".." + std::to_string(i_to) +
                                                      " via degree-" + std::to_string(via.d()) +
                                                      " circle-bundle cover"};
    report.finite_family = false;
    report.strong = strong;
    for (long long i = i_from; i <= i_to; ++i) {
        CoverDescriptor composed = compose(via, prop_circle_cover(bundle, i));
        GradientTerm t = term_interval(base, composed);
        t.index = i;
        if (strong) {
            // Totals have |e| = 1, so every irreducible Heegaard surface is
            // strongly irreducible and chi^sh = chi^h exactly.
            if (!chi_sh_interval(composed.total()).has_value())
                throw std::logic_error("prop-circle total is not in the chi^sh-certified case");
        }
        report.terms.push_back(std::move(t));
    }
    report.inf_upper_bound = min_upper(report.terms);
    report.inf_lower_bound = Rational(0);
    report.verdict = Verdict::Zero;
    report.certificate_kind = CertificateKind::SymbolicDecay;
    {
        std::ostringstream os;
        os << (strong ? "chi^sh" : "chi^h") << " terms along the composed family equal (4("
           << g << "i-i+1)-2)/(" << via.d() * b
           << " i^2) -> 0 as i -> infinity, with fiber degrees " << via.m() * b
           << " i unbounded; zero gradient passes through the degree-" << via.d()
           << " cover, so the infimum is zero";
        report.certificate = os.str();
    }
    fill_monotonicity(report);
    return report;
}

GradientReport strong_gradient_report(const SeifertInvariants& base, const CoverDescriptor& via,
                                      long long i_from, long long i_to) {
    return circle_bundle_family_report(base, via, i_from, i_to, /*strong=*/true);
}

} // namespace sfs
