#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "topoinf/metric_complex.hpp"
#include "topoinf/vertex_set.hpp"

namespace topoinf {

/// Union by size with path compression.
class DisjointSets
{
  public:
    explicit DisjointSets(std::size_t n = 0);

    std::size_t find(std::size_t x);
    /// Returns true when x and y were in different sets.
    bool unite(std::size_t x, std::size_t y);

  private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/**
 * Number of connected components of the subgraph induced by `subset`.
 *
 * beta_0 of the empty subset is 0.
 */
std::size_t betti0_union_find(const NeighborComplex& complex, const SubsetMask& subset);

struct SpectralConfig
{
    double zero_tolerance = 1e-8;
    int max_iterations = 64; ///< per eigenvalue
};

/// Graph Laplacian D - A of the subgraph induced by `subset` (rows in ascending vertex order).
Eigen::MatrixXd induced_laplacian(const NeighborComplex& complex, const SubsetMask& subset);

/**
 * All eigenvalues of a real symmetric matrix, ascending.
 *
 * Householder tridiagonalization followed by implicit-shift QL sweeps.
 * Throws NumericError if an eigenvalue fails to converge within
 * `max_iterations` sweeps.
 */
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a, int max_iterations = 64);

/**
 * beta_0 as the multiplicity of the zero eigenvalue of the induced Laplacian.
 *
 * Throws InputError for an empty subset and NumericError when the
 * eigensolver does not converge.
 */
std::size_t betti0_laplacian(const NeighborComplex& complex, const SubsetMask& subset,
                             const SpectralConfig& cfg = {});

/**
 * Union-find snapshot of an induced subcomplex that grows one vertex at a time.
 *
 * Single-owner; copy it to branch.
 */
class ComponentTracker
{
  public:
    explicit ComponentTracker(const NeighborComplex& complex);
    ComponentTracker(const NeighborComplex& complex, const SubsetMask& subset);

    std::size_t components() const noexcept { return components_; }
    const SubsetMask& members() const noexcept { return members_; }
    bool contains(std::size_t v) const { return members_.test(v); }

    /// Distinct components of the current subset adjacent to v.
    std::size_t touched_components(std::size_t v);

    /// beta_0 after inserting v; updates the snapshot. Throws InputError if v is present.
    std::size_t add(std::size_t v);

  private:
    const NeighborComplex* complex_;
    DisjointSets sets_;
    SubsetMask members_;
    std::size_t components_ = 0;
    std::vector<std::size_t> scratch_;
};

/// beta_0(subset + {v}) via an incremental merge. Throws InputError if v is already in subset.
std::size_t incremental_components(const NeighborComplex& complex, const SubsetMask& subset,
                                   std::size_t added_vertex);

} // namespace topoinf
