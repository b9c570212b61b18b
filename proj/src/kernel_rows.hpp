#pragma once

// Per-row bodies shared by the serial and OpenMP kernels.

#include "vpspec/dense.hpp"
#include "vpspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace vpspec::kernels::detail {

inline void check_apply_x(const DerivativeMatrix& d, const Matrix& in, Matrix& out) {
    if (d.size != in.rows()) throw std::invalid_argument("apply_x: matrix size does not match row count");
    if (!out.same_shape(in)) out = Matrix(in.rows(), in.cols());
}

inline void check_apply_v(const DerivativeMatrix& d, const Matrix& in, Matrix& out) {
    if (d.size != in.cols()) throw std::invalid_argument("apply_v: matrix size does not match column count");
    if (!out.same_shape(in)) out = Matrix(in.rows(), in.cols());
}

inline void apply_x_row(const DerivativeMatrix& d, const Matrix& in, Matrix& out, std::size_t n) {
    auto dst = out.row(n);
    std::fill(dst.begin(), dst.end(), 0.0);
    const double* drow = d.entries.data() + n * d.size;
    for (std::size_t i = 0; i < d.size; ++i) {
        const double w = drow[i];
        if (w == 0.0) continue;
        const auto src = in.row(i);
        for (std::size_t m = 0; m < dst.size(); ++m) dst[m] += w * src[m];
    }
}

inline void apply_v_row(const DerivativeMatrix& d, const Matrix& in, Matrix& out, std::size_t n) {
    const auto src = in.row(n);
    auto dst = out.row(n);
    for (std::size_t m = 0; m < d.size; ++m) {
        const double* drow = d.entries.data() + m * d.size;
        double acc = 0.0;
        for (std::size_t j = 0; j < d.size; ++j) acc += drow[j] * src[j];
        dst[m] = acc;
    }
}

inline void check_transport(std::span<const double> v, std::span<const double> e, const Matrix& dx_c,
                            const Matrix& dv_c, Matrix& out) {
    if (!dx_c.same_shape(dv_c) || v.size() != dx_c.cols() || e.size() != dx_c.rows())
        throw std::invalid_argument("assemble_transport: shape mismatch");
    if (!out.same_shape(dx_c)) out = Matrix(dx_c.rows(), dx_c.cols());
}

inline void transport_row(std::span<const double> v, std::span<const double> e, const Matrix& dx_c,
                          const Matrix& dv_c, Matrix& out, std::size_t n) {
    const auto a = dx_c.row(n);
    const auto b = dv_c.row(n);
    auto dst = out.row(n);
    const double en = e[n];
    for (std::size_t m = 0; m < dst.size(); ++m) dst[m] = -v[m] * a[m] + en * b[m];
}

inline void check_taylor(const Matrix& term, const Matrix& disp_x, const Matrix& disp_v, const Matrix& out) {
    if (!term.same_shape(disp_x) || !term.same_shape(disp_v) || !term.same_shape(out))
        throw std::invalid_argument("accumulate_taylor_term: shape mismatch");
}

inline void taylor_row(const Matrix& term, const Matrix& disp_x, const Matrix& disp_v, int r, int q, double coef,
                       Matrix& out, std::size_t n) {
    const auto t = term.row(n);
    const auto ix = disp_x.row(n);
    const auto jv = disp_v.row(n);
    auto dst = out.row(n);
    for (std::size_t m = 0; m < dst.size(); ++m) {
        double w = coef;
        for (int k = 0; k < r; ++k) w *= ix[m];
        for (int k = 0; k < q; ++k) w *= jv[m];
        dst[m] += w * t[m];
    }
}

inline void check_basis_sum(const NodeGrid1D& xgrid, const NodeGrid1D& vgrid, const Matrix& c, const Matrix& px,
                            const Matrix& pv, Matrix& out) {
    if (c.rows() != xgrid.count || c.cols() != vgrid.count)
        throw std::invalid_argument("basis_sum_eval: coefficient matrix does not match grids");
    if (xgrid.count % 2 != 0 || vgrid.count % 2 != 0)
        throw std::invalid_argument("basis_sum_eval: node counts must be even");
    if (!px.same_shape(pv)) throw std::invalid_argument("basis_sum_eval: point arrays differ in shape");
    if (!out.same_shape(px)) out = Matrix(px.rows(), px.cols());
}

inline void basis_sum_row(const NodeGrid1D& xgrid, const NodeGrid1D& vgrid, const Matrix& c, const Matrix& px,
                          const Matrix& pv, Matrix& out, std::size_t n) {
    std::vector<double> bx(xgrid.count);
    std::vector<double> bv(vgrid.count);
    for (std::size_t m = 0; m < px.cols(); ++m) {
        const double x = xgrid.wrap(px(n, m));
        const double v = vgrid.wrap(pv(n, m));
        for (std::size_t i = 0; i < xgrid.count; ++i) bx[i] = basis_value(xgrid, i, x);
        for (std::size_t j = 0; j < vgrid.count; ++j) bv[j] = basis_value(vgrid, j, v);
        double acc = 0.0;
        for (std::size_t i = 0; i < xgrid.count; ++i) {
            const auto crow = c.row(i);
            double inner = 0.0;
            for (std::size_t j = 0; j < vgrid.count; ++j) inner += crow[j] * bv[j];
            acc += bx[i] * inner;
        }
        out(n, m) = acc;
    }
}

} // namespace vpspec::kernels::detail
