#include "widthone/tensor.hpp"

#include <stdexcept>
#include <string>

namespace widthone {

DenseTensor::DenseTensor(Shape shape, std::size_t max_entries) : shape_(std::move(shape)) {
    std::size_t cells = 0;
    try {
        cells = shape_.cell_count();
    } catch (const std::overflow_error&) {
        throw GuardError("max_tensor_entries", "more cells than size_t holds",
                         std::to_string(max_entries));
    }
    if (cells > max_entries)
        throw GuardError("max_tensor_entries", std::to_string(cells),
                         std::to_string(max_entries));
    entries_.assign(cells, BigInt(0));
}

void DenseTensor::accumulate(const DenseTensor& other) {
    if (shape_ != other.shape_)
        throw std::domain_error("accumulate: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
}

BigInt DenseTensor::total() const {
    BigInt t = 0;
    for (const BigInt& e : entries_) t += e;
    return t;
}

std::vector<MultiIndex> DenseTensor::support() const {
    std::vector<MultiIndex> supp;
    for (std::size_t off = 0; off < entries_.size(); ++off)
        if (entries_[off] != 0) supp.push_back(multi_index(shape_, off));
    return supp;
}

DenseTensor elementary(const Shape& n, const MultiIndex& x, std::size_t max_entries) {
    DenseTensor t(n, max_entries);
    t.at(x) = 1;
    return t;
}

} // namespace widthone
