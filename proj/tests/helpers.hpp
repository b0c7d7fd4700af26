#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "monoglue/glue.hpp"
#include "monoglue/linalg.hpp"
#include "monoglue/matrix.hpp"
#include "monoglue/rational.hpp"

namespace testutil {

using monoglue::Matrix;
using monoglue::Rational;

/// Integer matrix literal for tests.
inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

/// Whether the pair (f, g) lies in the span of the given hom-space basis.
inline bool in_span(const std::vector<monoglue::GlueMorphism>& basis, const Matrix& f,
                    const Matrix& g) {
    std::size_t nf = f.rows() * f.cols();
    std::size_t ng = g.rows() * g.cols();
    Matrix a(nf + ng, basis.size());
    Matrix b(nf + ng, 1);
    auto fill = [](Matrix& dst, std::size_t col, std::size_t offset, const Matrix& src) {
        for (std::size_t i = 0; i < src.rows(); ++i)
            for (std::size_t j = 0; j < src.cols(); ++j)
                dst(offset + i * src.cols() + j, col) = src(i, j);
    };
    for (std::size_t k = 0; k < basis.size(); ++k) {
        fill(a, k, 0, basis[k].f);
        fill(a, k, nf, basis[k].g);
    }
    fill(b, 0, 0, f);
    fill(b, 0, nf, g);
    return monoglue::solve(a, b).has_value();
}

} // namespace testutil
