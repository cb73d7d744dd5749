#include "weylgpd/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace weylgpd {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : dim_(rows.size()), data_() {
    data_.reserve(dim_ * dim_);
    for (const auto &r : rows) {
        if (r.size() != dim_)
            throw std::invalid_argument("IntMatrix: rows must form a square matrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
    std::vector<Int> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * dim_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * dim_)};
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
    if (rhs.dim_ != dim_)
        throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Int a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < dim_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int> &v) const {
    if (v.size() != dim_)
        throw std::invalid_argument("IntMatrix: vector length mismatch");
    std::vector<Int> out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out = *this;
    for (auto &x : out.data_)
        x = -x;
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < dim_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < dim_; ++c)
            os << (c ? "," : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace weylgpd
