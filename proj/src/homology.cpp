#include "topoinf/homology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace topoinf {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1)
{
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x)
{
    std::size_t root = x;
    while (parent_[root] != root)
        root = parent_[root];
    while (parent_[x] != root) {
        const std::size_t next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

bool DisjointSets::unite(std::size_t x, std::size_t y)
{
    x = find(x);
    y = find(y);
    if (x == y)
        return false;
    if (size_[x] < size_[y])
        std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
}

std::size_t betti0_union_find(const NeighborComplex& complex, const SubsetMask& subset)
{
    DisjointSets sets(complex.size());
    std::size_t components = 0;
    subset.for_each([&](std::size_t v) {
        ++components;
        (complex.neighbors(v) & subset).for_each([&](std::size_t u) {
            if (u < v && sets.unite(u, v))
                --components;
        });
    });
    return components;
}

Eigen::MatrixXd induced_laplacian(const NeighborComplex& complex, const SubsetMask& subset)
{
    const auto verts = subset.indices();
    const auto k = static_cast<Eigen::Index>(verts.size());
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b) {
            if (a != b && complex.has_edge(verts[a], verts[b])) {
                lap(a, b) = -1.0;
                lap(a, a) += 1.0;
            }
        }
    }
    return lap;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a, int max_iterations)
{
    const Eigen::Index n = a.rows();
    if (n != a.cols())
        throw InputError("eigenvalues require a square matrix");
    if (n == 0)
        return {};
    if (n == 1)
        return Eigen::VectorXd::Constant(1, a(0, 0));

    Eigen::Tridiagonalization<Eigen::MatrixXd> tri(a);
    Eigen::VectorXd d = tri.diagonal();
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e.head(n - 1) = tri.subDiagonal();

    const double eps = std::numeric_limits<double>::epsilon();
    for (Eigen::Index l = 0; l < n; ++l) {
        int iter = 0;
        Eigen::Index m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d(m)) + std::abs(d(m + 1));
                if (std::abs(e(m)) <= eps * dd)
                    break;
            }
            if (m == l)
                break;
            if (iter++ == max_iterations)
                throw NumericError("symmetric eigensolver did not converge");

            // Wilkinson-style shift from the leading 2x2 block, then chase the bulge up.
            double g = (d(l + 1) - d(l)) / (2.0 * e(l));
            double r = std::hypot(g, 1.0);
            g = d(m) - d(l) + e(l) / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool deflated = false;
            for (Eigen::Index i = m - 1; i >= l; --i) {
                double f = s * e(i);
                const double b = c * e(i);
                r = std::hypot(f, g);
                e(i + 1) = r;
                if (r == 0.0) {
                    d(i + 1) -= p;
                    e(m) = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d(i + 1) - p;
                r = (d(i) - g) * s + 2.0 * c * b;
                p = s * r;
                d(i + 1) = g + p;
                g = c * r - b;
            }
            if (deflated)
                continue;
            d(l) -= p;
            e(l) = g;
            e(m) = 0.0;
        } while (m != l);
    }
    std::sort(d.data(), d.data() + n);
    return d;
}

std::size_t betti0_laplacian(const NeighborComplex& complex, const SubsetMask& subset, const SpectralConfig& cfg)
{
    if (!(cfg.zero_tolerance > 0.0))
        throw InputError("zero_tolerance must be positive");
    if (subset.none())
        throw InputError("Laplacian beta_0 needs a nonempty subset");
    const Eigen::VectorXd spectrum = symmetric_eigenvalues(induced_laplacian(complex, subset), cfg.max_iterations);
    return static_cast<std::size_t>((spectrum.array().abs() <= cfg.zero_tolerance).count());
}

ComponentTracker::ComponentTracker(const NeighborComplex& complex)
    : complex_(&complex), sets_(complex.size()), members_(complex.size())
{
}

ComponentTracker::ComponentTracker(const NeighborComplex& complex, const SubsetMask& subset)
    : ComponentTracker(complex)
{
    if (subset.width() != complex.size())
        throw InputError("subset width does not match complex size");
    subset.for_each([&](std::size_t v) { add(v); });
}

std::size_t ComponentTracker::touched_components(std::size_t v)
{
    scratch_.clear();
    (complex_->neighbors(v) & members_).for_each([&](std::size_t u) { scratch_.push_back(sets_.find(u)); });
    std::sort(scratch_.begin(), scratch_.end());
    return static_cast<std::size_t>(std::unique(scratch_.begin(), scratch_.end()) - scratch_.begin());
}

std::size_t ComponentTracker::add(std::size_t v)
{
    if (v >= complex_->size())
        throw InputError("vertex out of range");
    if (members_.test(v))
        throw InputError("vertex " + std::to_string(v) + " is already in the subset");
    std::size_t merged = 0;
    (complex_->neighbors(v) & members_).for_each([&](std::size_t u) {
        if (sets_.unite(u, v))
            ++merged;
    });
    members_.set(v);
    components_ = components_ + 1 - merged;
    return components_;
}

std::size_t incremental_components(const NeighborComplex& complex, const SubsetMask& subset, std::size_t added_vertex)
{
    ComponentTracker tracker(complex, subset);
    return tracker.add(added_vertex);
}

} // namespace topoinf
