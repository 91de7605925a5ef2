#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latgrade/linalg.hpp"

namespace latgrade {

/// Ordered integer vectors a_1..a_n in Z^m. Column i corresponds to variable x_i.
class VectorConfiguration {
public:
    VectorConfiguration() = default;
    /// Labels are optional; when given they must be unique and one per column.
    VectorConfiguration(std::size_t ambient_dim, std::vector<IntVector> columns,
                        std::vector<std::string> labels = {});

    /// Columns of an m x n matrix.
    static VectorConfiguration from_matrix(const IntMatrix& m, std::vector<std::string> labels = {});

    std::size_t ambient_dim() const { return dim_; }
    std::size_t size() const { return columns_.size(); }
    const IntVector& column(std::size_t i) const { return columns_.at(i); }
    const std::vector<IntVector>& columns() const { return columns_; }

    bool has_labels() const { return !labels_.empty(); }
    /// Falls back to the 1-based column number.
    std::string label(std::size_t i) const;
    std::vector<std::string> labels() const;
    std::optional<std::size_t> index_of(const std::string& label) const;

    IntMatrix matrix() const;

    bool operator==(const VectorConfiguration& other) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<IntVector> columns_;
    std::vector<std::string> labels_;
};

} // namespace latgrade
