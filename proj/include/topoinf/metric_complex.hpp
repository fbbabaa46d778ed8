#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "topoinf/error.hpp"
#include "topoinf/vertex_set.hpp"

namespace topoinf {

/// Sample whose distances come from a precomputed matrix row/column.
struct OpaqueId
{
    std::size_t index = 0;
    friend bool operator==(const OpaqueId&, const OpaqueId&) = default;
};

using Sample = std::variant<std::string, Eigen::VectorXd, OpaqueId>;

/**
 * Ordered samples X = {x_0, ..., x_{n-1}} plus optional display labels.
 *
 * When the items are OpaqueId, `precomputed` must hold the n x n distance
 * matrix they index into.
 */
struct LabeledPointSet
{
    std::vector<Sample> items;
    std::vector<std::string> labels;
    std::optional<Eigen::MatrixXd> precomputed;

    std::size_t size() const noexcept { return items.size(); }

    /// Label for display: the explicit label, the string itself, or the index.
    std::string label(std::size_t i) const;

    static LabeledPointSet from_strings(std::vector<std::string> strings);
    static LabeledPointSet from_vectors(std::vector<Eigen::VectorXd> rows);
    static LabeledPointSet from_matrix(Eigen::MatrixXd distances);
};

enum class Metric { Edit, Hamming, Euclidean, Precomputed };

std::string_view to_string(Metric m) noexcept;
Metric parse_metric(std::string_view name);

/// Levenshtein distance with unit insert/delete/substitute costs.
std::size_t edit_distance(std::string_view a, std::string_view b);

/**
 * Symmetric, zero-diagonal, finite, nonnegative n x n matrix.
 *
 * The triangle inequality is deliberately not checked: precomputed inputs
 * may violate it and nothing downstream relies on it.
 */
template <typename Scalar>
class BasicDistanceMatrix
{
  public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    static constexpr double kSymmetryTolerance = 1e-9;

    BasicDistanceMatrix() = default;

    /// Validates the invariants; throws InputError on violation.
    explicit BasicDistanceMatrix(Matrix d) : d_(std::move(d))
    {
        if (d_.rows() != d_.cols())
            throw InputError("distance matrix must be square");
        if (d_.rows() == 0)
            throw InputError("distance matrix must be nonempty");
        const Eigen::Index n = d_.rows();
        for (Eigen::Index i = 0; i < n; ++i) {
            if (d_(i, i) != Scalar(0))
                throw InputError("distance matrix diagonal must be zero (row " + std::to_string(i) + ")");
            for (Eigen::Index j = 0; j < n; ++j) {
                const Scalar v = d_(i, j);
                if (!std::isfinite(static_cast<double>(v)) || v < Scalar(0))
                    throw InputError("distance matrix entries must be finite and nonnegative");
                if (std::abs(static_cast<double>(v - d_(j, i))) > kSymmetryTolerance)
                    throw InputError("distance matrix is asymmetric at (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ")");
            }
        }
    }

    std::size_t size() const noexcept { return static_cast<std::size_t>(d_.rows()); }
    Scalar operator()(std::size_t i, std::size_t j) const
    {
        return d_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    const Matrix& matrix() const noexcept { return d_; }
    Scalar max_entry() const { return d_.maxCoeff(); }

  private:
    Matrix d_;
};

using DistanceMatrix = BasicDistanceMatrix<double>;

/// Euclidean distance between two real vectors of equal dimension.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar euclidean_distance(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b)
{
    return (a - b).norm();
}

/// Number of coordinates in which two vectors differ.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar hamming_distance(const Eigen::MatrixBase<DerivedA>& a,
                                           const Eigen::MatrixBase<DerivedB>& b)
{
    return static_cast<typename DerivedA::Scalar>((a.array() != b.array()).count());
}

DistanceMatrix build_distance_matrix(const LabeledPointSet& points, Metric metric);

/**
 * 1-skeleton of the neighbor complex at a fixed resolution.
 *
 * Vertices are 0..n-1; adjacency rows are VertexSets. The graph is simple:
 * symmetric, no self-loops.
 */
class NeighborComplex
{
  public:
    NeighborComplex() = default;
    explicit NeighborComplex(std::size_t n, double resolution = 0.0, std::string source = {});

    static NeighborComplex from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                      std::string source = "edges");

    std::size_t size() const noexcept { return rows_.size(); }
    double resolution() const noexcept { return resolution_; }
    const std::string& source() const noexcept { return source_; }

    void add_edge(std::size_t i, std::size_t j);
    bool has_edge(std::size_t i, std::size_t j) const { return rows_.at(i).test(j); }
    const VertexSet& neighbors(std::size_t i) const { return rows_.at(i); }
    std::size_t degree(std::size_t i) const { return rows_.at(i).count(); }
    std::size_t edge_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Subgraph induced on `keep`, vertices renumbered in ascending order.
    NeighborComplex induced(const VertexSet& keep) const;

    /// Relabeled copy: vertex v of this complex becomes perm[v].
    NeighborComplex permuted(const std::vector<std::size_t>& perm) const;

    friend bool operator==(const NeighborComplex& a, const NeighborComplex& b)
    {
        return a.rows_ == b.rows_;
    }

  private:
    std::vector<VertexSet> rows_;
    double resolution_ = 0.0;
    std::string source_;
};

/// Edge (i, j), i != j, iff d(i, j) <= r. Throws InputError for r < 0 or NaN.
NeighborComplex build_complex(const DistanceMatrix& dm, double r);

/// True when every edge of `lower` is present in `upper`.
bool is_subcomplex(const NeighborComplex& lower, const NeighborComplex& upper);

} // namespace topoinf
