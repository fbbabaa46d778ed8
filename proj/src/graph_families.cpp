#include "topoinf/graph_families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "topoinf/random.hpp"

namespace topoinf {

namespace {

BigInt factorial(std::size_t n)
{
    BigInt f = 1;
    for (std::size_t k = 2; k <= n; ++k)
        f *= k;
    return f;
}

BigInt binom(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt c = 1;
    for (std::size_t j = 1; j <= k; ++j)
        c = c * (n - k + j) / j;
    return c;
}

Rational q(long long num, long long den) { return Rational(num, den); }

std::vector<std::size_t> range(std::size_t first, std::size_t last)
{
    std::vector<std::size_t> v;
    for (std::size_t i = first; i < last; ++i)
        v.push_back(i);
    return v;
}

} // namespace

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_string(const Rational& x)
{
    return boost::multiprecision::numerator(x).str() +
           (boost::multiprecision::denominator(x) == 1 ? "" : "/" + boost::multiprecision::denominator(x).str());
}

std::string_view to_string(FamilyKind kind) noexcept
{
    switch (kind) {
    case FamilyKind::Complete: return "complete";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Wheel: return "wheel";
    case FamilyKind::Star: return "star";
    case FamilyKind::Path: return "path";
    case FamilyKind::CompleteBipartite: return "bipartite";
    case FamilyKind::ErdosRenyi: return "erdos_renyi";
    }
    return "unknown";
}

FamilyKind parse_family_kind(std::string_view name)
{
    for (auto k : {FamilyKind::Complete, FamilyKind::Cycle, FamilyKind::Wheel, FamilyKind::Star, FamilyKind::Path,
                   FamilyKind::CompleteBipartite, FamilyKind::ErdosRenyi})
        if (name == to_string(k))
            return k;
    if (name == "er")
        return FamilyKind::ErdosRenyi;
    throw InputError("unknown graph family '" + std::string(name) + "'");
}

std::string describe(const FamilySpec& spec)
{
    switch (spec.kind) {
    case FamilyKind::Complete: return "K" + std::to_string(spec.n);
    case FamilyKind::Cycle: return "C" + std::to_string(spec.n);
    case FamilyKind::Wheel: return "W" + std::to_string(spec.n);
    case FamilyKind::Star: return "S" + std::to_string(spec.n - 1);
    case FamilyKind::Path: return "P" + std::to_string(spec.n);
    case FamilyKind::CompleteBipartite: return "K" + std::to_string(spec.m) + "," + std::to_string(spec.n);
    case FamilyKind::ErdosRenyi:
        return "G(" + std::to_string(spec.n) + "," + std::to_string(spec.p) + ";" + std::to_string(spec.seed) + ")";
    }
    return "?";
}

void validate(const FamilySpec& spec)
{
    auto need = [&](bool ok, const char* what) {
        if (!ok)
            throw InputError(std::string(to_string(spec.kind)) + ": " + what);
    };
    switch (spec.kind) {
    case FamilyKind::Complete:
    case FamilyKind::Path: need(spec.n >= 1, "n must be at least 1"); break;
    case FamilyKind::Cycle: need(spec.n >= 3, "n must be at least 3"); break;
    case FamilyKind::Wheel: need(spec.n >= 4, "n must be at least 4"); break;
    case FamilyKind::Star: need(spec.n >= 2, "n must be at least 2"); break;
    case FamilyKind::CompleteBipartite: need(spec.m >= 1 && spec.n >= 1, "m and n must be at least 1"); break;
    case FamilyKind::ErdosRenyi:
        need(spec.n >= 1, "n must be at least 1");
        need(spec.p >= 0.0 && spec.p <= 1.0, "p must lie in [0, 1]");
        break;
    }
}

NeighborComplex make_family(const FamilySpec& spec)
{
    validate(spec);
    const std::size_t total = spec.vertex_count();
    NeighborComplex g(total, 1.0, describe(spec));
    switch (spec.kind) {
    case FamilyKind::Complete:
        for (std::size_t i = 0; i < total; ++i)
            for (std::size_t j = i + 1; j < total; ++j)
                g.add_edge(i, j);
        break;
    case FamilyKind::Cycle:
        for (std::size_t i = 0; i < total; ++i)
            g.add_edge(i, (i + 1) % total);
        break;
    case FamilyKind::Wheel: {
        const std::size_t rim = total - 1;
        for (std::size_t i = 0; i < rim; ++i) {
            g.add_edge(i, (i + 1) % rim);
            g.add_edge(i, rim);
        }
        break;
    }
    case FamilyKind::Star:
        for (std::size_t i = 0; i + 1 < total; ++i)
            g.add_edge(i, total - 1);
        break;
    case FamilyKind::Path:
        for (std::size_t i = 0; i + 1 < total; ++i)
            g.add_edge(i, i + 1);
        break;
    case FamilyKind::CompleteBipartite:
        for (std::size_t i = 0; i < spec.m; ++i)
            for (std::size_t j = 0; j < spec.n; ++j)
                g.add_edge(i, spec.m + j);
        break;
    case FamilyKind::ErdosRenyi: {
        StreamRng rng(spec.seed, 0x45524752ull);
        for (std::size_t i = 0; i < total; ++i)
            for (std::size_t j = i + 1; j < total; ++j)
                if (rng.uniform() < spec.p)
                    g.add_edge(i, j);
        break;
    }
    }
    return g;
}

std::vector<double> ClosedFormResult::shapley_per_vertex() const
{
    std::vector<double> out(spec.vertex_count(), 0.0);
    for (const auto& r : roles)
        for (auto v : r.vertices)
            out[v] = to_double(r.shapley);
    return out;
}

std::vector<double> ClosedFormResult::influence_per_vertex() const
{
    std::vector<double> out(spec.vertex_count(), 0.0);
    for (const auto& r : roles)
        for (auto v : r.vertices)
            out[v] = to_double(r.influence);
    return out;
}

ClosedFormResult closed_form(const FamilySpec& spec)
{
    validate(spec);
    if (!spec.analytic())
        throw InputError("Erdős–Rényi graphs have no closed-form influence");

    const auto N = static_cast<long long>(spec.vertex_count());
    const std::size_t total = spec.vertex_count();
    ClosedFormResult res;
    res.spec = spec;

    // Each role: name, vertices, Shapley value, closed-form influence expression.
    struct Row
    {
        std::string role;
        std::vector<std::size_t> vertices;
        Rational shapley;
        Rational printed_influence;
    };
    std::vector<Row> rows;

    switch (spec.kind) {
    case FamilyKind::Complete:
        rows.push_back({"all", range(0, total), q(1, N), q(1, N)});
        break;
    case FamilyKind::Cycle:
        rows.push_back({"all", range(0, total), q(2, 3) - q(1, N), q(1, N)});
        break;
    case FamilyKind::Wheel: {
        const long long d = N * N - 3 * N + 4;
        rows.push_back({"periphery", range(0, total - 1), q(1, 3) - q(1, N * (N - 1)),
                        q(2 * (N * N - N - 3), 3 * (N - 1) * d)});
        rows.push_back({"center", {total - 1}, q(N * N - 7 * N + 18, 6 * N), q(N * N - 7 * N + 18, 3 * d)});
        break;
    }
    case FamilyKind::Star: {
        const long long d = N * N - 2 * N + 2;
        rows.push_back({"periphery", range(0, total - 1), q(1, 2), q(N, 2 * d)});
        rows.push_back({"center", {total - 1}, q(N * N - 3 * N + 4, 2 * N), q(N * N - 3 * N + 4, 2 * d)});
        break;
    }
    case FamilyKind::Path:
        if (total == 1) {
            // A lone vertex only ever contributes |1 - 0|.
            rows.push_back({"single", {0}, q(1, 1), q(1, 1)});
        } else {
            rows.push_back({"ends", {0, total - 1}, q(1, 2), q(3, 2 * (2 * N - 1))});
            if (total > 2)
                rows.push_back({"middle", range(1, total - 1), q(2, 3), q(2, 2 * N - 1)});
        }
        break;
    case FamilyKind::CompleteBipartite: {
        const auto m = static_cast<long long>(spec.m);
        const auto n = static_cast<long long>(spec.n);
        const long long d = 2 * m * m + 2 * n * n + m + n - m * n - 1;
        rows.push_back({"m-side", range(0, spec.m), q(n * (n - 1), m * (m + 1) * (m + n)) + q(1, n + 1),
                        q(m * m * m + n * n * n + m * m * n + m * n + m * m - n, m * (m + n) * d)});
        rows.push_back({"n-side", range(spec.m, total), q(m * (m - 1), n * (n + 1) * (m + n)) + q(1, m + 1),
                        q(m * m * m + n * n * n + n * n * m + m * n + n * n - m, n * (m + n) * d)});
        break;
    }
    case FamilyKind::ErdosRenyi: break;
    }

    Rational sum = 0;
    for (const auto& r : rows)
        sum += r.shapley * static_cast<long long>(r.vertices.size());
    for (auto& r : rows) {
        Rational influence = r.shapley / sum;
        if (influence != r.printed_influence)
            throw std::logic_error("closed-form influence mismatch for " + describe(spec) + " role " + r.role +
                                   ": normalized " + to_string(influence) + " vs " + to_string(r.printed_influence));
        res.roles.push_back({r.role, r.vertices, r.shapley, influence});
    }

    double h = 0.0;
    for (const auto& r : res.roles) {
        const double p = to_double(r.influence);
        if (p > 0.0)
            h -= static_cast<double>(r.multiplicity()) * p * std::log(p);
    }
    res.entropy = h;
    return res;
}

double family_entropy(const FamilySpec& spec) { return closed_form(spec).entropy; }

Rational identity1_lhs(std::size_t N, std::size_t m)
{
    BigInt s = 0;
    for (std::size_t k = 0; k + m <= N; ++k)
        s += binom(N - m, k) * factorial(k) * factorial(N - k - 1);
    return Rational(s, factorial(N));
}

Rational identity2_lhs(std::size_t m, std::size_t n)
{
    BigInt s = 0;
    for (std::size_t k = 2; k <= m; ++k)
        s += binom(m, k) * (k - 1) * factorial(k) * factorial(m + n - k - 1);
    return Rational(s, factorial(m + n));
}

Rational identity3_lhs(std::size_t N)
{
    // T(N-1, k, m) = ((N-1)/m) C(m,k) C(N-m-2, k-1); the 1/m folds into m! below.
    Rational s = 0;
    for (std::size_t m = 2; m + 3 <= N; ++m) {
        const std::size_t l = std::min(m, N - m - 1);
        for (std::size_t k = 2; k <= l; ++k) {
            BigInt term = BigInt(N - 1) * binom(m, k) * binom(N - m - 2, k - 1) * (k - 1) * factorial(m - 1) *
                          factorial(N - m - 1);
            s += Rational(term);
        }
    }
    return s / Rational(factorial(N));
}

IdentityReport verify_closed_form_identities(std::size_t n_max, std::size_t m_max)
{
    if (n_max > 25)
        throw InputError("identity verification is limited to N <= 25");
    IdentityReport rep;
    auto record = [&](int id, std::size_t a, std::size_t b, Rational lhs, Rational rhs) {
        ++rep.checked;
        ++rep.checked_per_identity[static_cast<std::size_t>(id - 1)];
        if (lhs != rhs)
            rep.mismatches.push_back({id, a, b, std::move(lhs), std::move(rhs)});
    };
    for (std::size_t N = 1; N <= n_max; ++N)
        for (std::size_t m = 1; m <= std::min(N, m_max); ++m)
            record(1, N, m, identity1_lhs(N, m), Rational(1, static_cast<long long>(m)));
    for (std::size_t m = 1; m <= m_max; ++m)
        for (std::size_t n = 1; m + n <= n_max; ++n) {
            const auto mm = static_cast<long long>(m), nn = static_cast<long long>(n);
            record(2, m, n, identity2_lhs(m, n), Rational(mm * (mm - 1), nn * (nn + 1) * (mm + nn)));
        }
    for (std::size_t N = 3; N <= n_max; ++N) {
        const auto NN = static_cast<long long>(N);
        record(3, N, 0, identity3_lhs(N), Rational((NN - 3) * (NN - 4), 6 * NN));
    }
    return rep;
}

} // namespace topoinf
