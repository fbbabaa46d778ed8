#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topoinf/metric_complex.hpp"

namespace topoinf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FamilyKind { Complete, Cycle, Wheel, Star, Path, CompleteBipartite, ErdosRenyi };

/**
 * A graph family member.
 *
 * `n` is the total vertex count for every family except the complete
 * bipartite graph, where the graph is K_{m,n} on m + n vertices. The wheel
 * W_n and the star S_{n-1} both live on n vertices.
 */
struct FamilySpec
{
    FamilyKind kind = FamilyKind::Complete;
    std::size_t n = 1;
    std::size_t m = 0;
    double p = 0.0;
    std::uint64_t seed = 0;

    static FamilySpec complete(std::size_t n) { return {FamilyKind::Complete, n}; }
    static FamilySpec cycle(std::size_t n) { return {FamilyKind::Cycle, n}; }
    static FamilySpec wheel(std::size_t n) { return {FamilyKind::Wheel, n}; }
    static FamilySpec star(std::size_t n) { return {FamilyKind::Star, n}; }
    static FamilySpec path(std::size_t n) { return {FamilyKind::Path, n}; }
    static FamilySpec bipartite(std::size_t m, std::size_t n) { return {FamilyKind::CompleteBipartite, n, m}; }
    static FamilySpec erdos_renyi(std::size_t n, double p, std::uint64_t seed)
    {
        return {FamilyKind::ErdosRenyi, n, 0, p, seed};
    }

    std::size_t vertex_count() const noexcept { return kind == FamilyKind::CompleteBipartite ? m + n : n; }
    bool analytic() const noexcept { return kind != FamilyKind::ErdosRenyi; }
};

std::string_view to_string(FamilyKind kind) noexcept;
FamilyKind parse_family_kind(std::string_view name);
std::string describe(const FamilySpec& spec);

/// Throws InputError when the parameters violate the family's domain.
void validate(const FamilySpec& spec);

/**
 * Canonical realization: wheel and star put the center last, the bipartite
 * graph lists the m side first, the path runs endpoint to endpoint.
 * Erdős–Rényi includes each pair independently with probability p.
 */
NeighborComplex make_family(const FamilySpec& spec);

struct RoleValue
{
    std::string role;
    std::vector<std::size_t> vertices; ///< canonical indices carrying this role
    Rational shapley;
    Rational influence;

    std::size_t multiplicity() const noexcept { return vertices.size(); }
};

struct ClosedFormResult
{
    FamilySpec spec;
    std::vector<RoleValue> roles;
    double entropy = 0.0;

    /// Shapley value of each vertex in canonical order.
    std::vector<double> shapley_per_vertex() const;
    std::vector<double> influence_per_vertex() const;
};

/**
 * Closed-form Shapley values and influence scores for the analytic families.
 *
 * Evaluated in exact rationals; the influence is obtained by normalizing the
 * Shapley column and cross-checked against the closed-form influence
 * expression. Throws InputError for Erdős–Rényi specs.
 */
ClosedFormResult closed_form(const FamilySpec& spec);

double family_entropy(const FamilySpec& spec);

struct IdentityCheck
{
    int identity = 0;     ///< 1, 2 or 3
    std::size_t a = 0;    ///< N (identities 1, 3) or m (identity 2)
    std::size_t b = 0;    ///< m (identity 1) or n (identity 2)
    Rational lhs;
    Rational rhs;
};

struct IdentityReport
{
    std::size_t checked = 0;
    std::array<std::size_t, 3> checked_per_identity{};
    std::vector<IdentityCheck> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

/// (1/N!) sum_{k=0}^{N-m} C(N-m,k) k! (N-k-1)!  (expected 1/m)
Rational identity1_lhs(std::size_t N, std::size_t m);
/// (1/(m+n)!) sum_{k=2}^{m} C(m,k) (k-1) k! (m+n-k-1)!  (expected m(m-1)/(n(n+1)(m+n)))
Rational identity2_lhs(std::size_t m, std::size_t n);
/// Wheel double sum over T(N-1,k,m)  (expected (N-3)(N-4)/(6N))
Rational identity3_lhs(std::size_t N);

/**
 * Checks the three combinatorial identities behind the closed forms in
 * exact arithmetic: identity 1 for 1 <= m <= min(N, m_max), N <= n_max;
 * identity 2 for m <= m_max, m + n <= n_max; identity 3 for 3 <= N <= n_max.
 */
IdentityReport verify_closed_form_identities(std::size_t n_max, std::size_t m_max);

double to_double(const Rational& q);
std::string to_string(const Rational& q);

} // namespace topoinf
