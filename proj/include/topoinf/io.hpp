#pragma once

#include <filesystem>
#include <istream>
#include <string_view>

#include "topoinf/metric_complex.hpp"

namespace topoinf {

/// Which of the four accepted input layouts a file uses.
enum class InputKind { Strings, Vectors, Matrix, Graph };

InputKind parse_input_kind(std::string_view name);
std::string_view to_string(InputKind kind) noexcept;

/// Default layout for a metric: strings for edit/hamming, vectors for euclidean, matrix for precomputed.
InputKind default_input_kind(Metric metric) noexcept;

/**
 * One sample per line; the first whitespace-separated field is the sample,
 * anything after it is ignored. Blank lines and lines starting with '#' are
 * skipped, as is a leading "string,..." header row.
 */
LabeledPointSet read_strings(std::istream& in);

/// CSV, one real vector per row. A non-numeric first row is treated as a header.
LabeledPointSet read_vectors(std::istream& in);

/// Square CSV distance matrix; validated when the distance matrix is built.
LabeledPointSet read_matrix(std::istream& in);

/**
 * Edge list, one `u v` pair per line (0-based). The vertex count is one past
 * the largest endpoint unless a `# vertices: K` line raises it.
 */
NeighborComplex read_edge_list(std::istream& in);

LabeledPointSet read_points(const std::filesystem::path& path, InputKind kind);
NeighborComplex read_graph(const std::filesystem::path& path);

} // namespace topoinf
