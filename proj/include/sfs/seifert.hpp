#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "sfs/rational.hpp"

namespace sfs {

/// One exceptional fiber in normalized coordinates:
/// alpha >= 2, 1 <= beta < alpha, gcd(alpha, beta) = 1.
struct ExceptionalFiber {
    long long alpha = 2;
    long long beta = 1;

    auto operator<=>(const ExceptionalFiber&) const = default;
};

/// Loose Seifert data as it arrives from user input: any integer beta,
/// alpha >= 1, fibers in any order. Feed to normalize().
struct SeifertData {
    long long base_genus = 0;
    long long b = 0;
    std::vector<ExceptionalFiber> exceptional;
    long long boundary_components = 0;
};

/// A compact orientable Seifert fibered 3-manifold with orientable base,
/// in normalized coordinates SFS(g; b; (a1,b1),...,(ak,bk)).
///
/// Invariants established at construction: every pair normalized, the
/// pair list sorted, base_genus and boundary_components non-negative.
/// Equality of values is therefore equality of the numerical data.
class SeifertInvariants {
public:
    /// Requires already-normalized pairs; sorts them. Throws
    /// Error(Normalization) if any pair is outside normalized form.
    SeifertInvariants(long long base_genus, long long b,
                      std::vector<ExceptionalFiber> exceptional = {},
                      long long boundary_components = 0);

    long long base_genus() const { return base_genus_; }
    long long b() const { return b_; }
    const std::vector<ExceptionalFiber>& exceptional() const { return exceptional_; }
    long long boundary_components() const { return boundary_components_; }

    /// Number of exceptional fibers (cone points of the base orbifold).
    long long cone_point_count() const { return static_cast<long long>(exceptional_.size()); }

    bool is_closed() const { return boundary_components_ == 0; }
    bool is_circle_bundle() const { return exceptional_.empty(); }

    bool operator==(const SeifertInvariants&) const = default;

private:
    long long base_genus_;
    long long b_;
    std::vector<ExceptionalFiber> exceptional_;
    long long boundary_components_;
};

/// Base 2-orbifold: underlying orientable surface genus plus the
/// multiset of cone orders (kept sorted).
struct Orbifold {
    long long underlying_genus = 0;
    std::vector<long long> cone_orders;

    bool operator==(const Orbifold&) const = default;
};

/// Canonicalizes loose data: each beta is reduced mod alpha into
/// [1, alpha-1] with the integer quotient absorbed into b, and alpha = 1
/// pairs are absorbed entirely. Preserves the Euler number.
/// Throws Error(Normalization) on alpha <= 0 or gcd(alpha, beta) != 1.
SeifertInvariants normalize(const SeifertData& raw);

/// Quotient orbifold of the fibration.
Orbifold base_orbifold(const SeifertInvariants& m);

/// chi(O) = 2 - 2g - sum_j (1 - 1/alpha_j), exact.
Rational orbifold_euler_characteristic(const Orbifold& o);

/// e(M) = -(b + sum_j beta_j/alpha_j), exact. Closed manifolds only;
/// throws Error(BoundedManifold) otherwise.
Rational euler_number(const SeifertInvariants& m);

} // namespace sfs
