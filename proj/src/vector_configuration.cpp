#include "latgrade/vector_configuration.hpp"

#include <set>

#include "latgrade/errors.hpp"

namespace latgrade {

VectorConfiguration::VectorConfiguration(std::size_t ambient_dim, std::vector<IntVector> columns,
                                         std::vector<std::string> labels)
    : dim_(ambient_dim), columns_(std::move(columns)), labels_(std::move(labels))
{
    for (const auto& c : columns_)
        if (c.size() != dim_)
            throw DimensionError("configuration column has wrong length");
    if (!labels_.empty()) {
        if (labels_.size() != columns_.size())
            throw DimensionError("one label per column required");
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size())
            throw PreconditionError("configuration labels must be unique");
    }
}

VectorConfiguration VectorConfiguration::from_matrix(const IntMatrix& m, std::vector<std::string> labels)
{
    std::vector<IntVector> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        cols.push_back(m.column(j));
    return VectorConfiguration(m.rows(), std::move(cols), std::move(labels));
}

std::string VectorConfiguration::label(std::size_t i) const
{
    if (labels_.empty())
        return std::to_string(i + 1);
    return labels_.at(i);
}

std::vector<std::string> VectorConfiguration::labels() const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i)
        out.push_back(label(i));
    return out;
}

std::optional<std::size_t> VectorConfiguration::index_of(const std::string& l) const
{
    for (std::size_t i = 0; i < size(); ++i)
        if (label(i) == l)
            return i;
    return std::nullopt;
}

IntMatrix VectorConfiguration::matrix() const
{
    IntMatrix m(dim_, columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (std::size_t i = 0; i < dim_; ++i)
            m(i, j) = columns_[j][i];
    return m;
}

} // namespace latgrade
