#pragma once

#include <cstddef>
#include <vector>

#include "nilgeo/rational.hpp"

namespace nilgeo {

/// Dense rank-3 array of rationals, cube of side `dim`.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t dim) : dim_(dim), e_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }
    Rational& operator()(std::size_t a, std::size_t b, std::size_t c) {
        return e_[(a * dim_ + b) * dim_ + c];
    }
    const Rational& operator()(std::size_t a, std::size_t b, std::size_t c) const {
        return e_[(a * dim_ + b) * dim_ + c];
    }
    bool is_zero() const {
        for (const auto& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }
    Rational max_abs() const {
        Rational m = 0;
        for (const auto& v : e_)
            if (abs(v) > m) m = abs(v);
        return m;
    }
    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> e_;
};

/// Dense rank-4 array of rationals.
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(std::size_t dim) : dim_(dim), e_(dim * dim * dim * dim) {}

    std::size_t dim() const { return dim_; }
    Rational& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        return e_[((a * dim_ + b) * dim_ + c) * dim_ + d];
    }
    const Rational& operator()(std::size_t a, std::size_t b, std::size_t c,
                               std::size_t d) const {
        return e_[((a * dim_ + b) * dim_ + c) * dim_ + d];
    }
    bool is_zero() const {
        for (const auto& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }
    Rational max_abs() const {
        Rational m = 0;
        for (const auto& v : e_)
            if (abs(v) > m) m = abs(v);
        return m;
    }
    friend bool operator==(const Tensor4&, const Tensor4&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> e_;
};

}  // namespace nilgeo
