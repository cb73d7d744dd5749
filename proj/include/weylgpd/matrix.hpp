#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace weylgpd {

using Int = std::int64_t;

/// Square integer matrix, row-major. Acts on column vectors of Z^rank.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    Int &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    const std::vector<Int> &data() const noexcept { return data_; }

    std::vector<Int> column(std::size_t c) const;
    std::vector<Int> row(std::size_t r) const;

    IntMatrix operator*(const IntMatrix &rhs) const;
    std::vector<Int> operator*(const std::vector<Int> &v) const;
    IntMatrix operator-() const;

    bool operator==(const IntMatrix &) const = default;
    auto operator<=>(const IntMatrix &) const = default;

    std::string to_string() const;

  private:
    std::size_t dim_ = 0;
    std::vector<Int> data_;
};

} // namespace weylgpd
