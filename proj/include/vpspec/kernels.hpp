#pragma once

// Hot loops of the solver. Every kernel exists twice with identical
// signatures: `serial` is the plain reference loop nest, `parallel` is the
// OpenMP version the library calls. Both share the same per-row arithmetic
// and write disjoint outputs, so their results are bit-identical.

#include "vpspec/dense.hpp"
#include "vpspec/spectral.hpp"

#include <span>

namespace vpspec::kernels {

namespace serial {

/// out = D · in (derivative along the x index).
void apply_x(const DerivativeMatrix& d, const Matrix& in, Matrix& out);
/// out = in · Dᵀ (derivative along the v index).
void apply_v(const DerivativeMatrix& d, const Matrix& in, Matrix& out);
/// out[n][m] = −v[m]·dx_c[n][m] + e[n]·dv_c[n][m].
void assemble_transport(std::span<const double> v, std::span<const double> e, const Matrix& dx_c,
                        const Matrix& dv_c, Matrix& out);
/// out += coef · disp_x^r · disp_v^q · term, element-wise.
void accumulate_taylor_term(const Matrix& term, const Matrix& disp_x, const Matrix& disp_v, int r, int q,
                            double coef, Matrix& out);
/// out[n][m] = Σ_i Σ_j c[i][j] B_i(px[n][m]) B_j(pv[n][m]).
void basis_sum_eval(const NodeGrid1D& xgrid, const NodeGrid1D& vgrid, const Matrix& c, const Matrix& px,
                    const Matrix& pv, Matrix& out);

} // namespace serial

namespace parallel {

void apply_x(const DerivativeMatrix& d, const Matrix& in, Matrix& out);
void apply_v(const DerivativeMatrix& d, const Matrix& in, Matrix& out);
void assemble_transport(std::span<const double> v, std::span<const double> e, const Matrix& dx_c,
                        const Matrix& dv_c, Matrix& out);
void accumulate_taylor_term(const Matrix& term, const Matrix& disp_x, const Matrix& disp_v, int r, int q,
                            double coef, Matrix& out);
void basis_sum_eval(const NodeGrid1D& xgrid, const NodeGrid1D& vgrid, const Matrix& c, const Matrix& px,
                    const Matrix& pv, Matrix& out);

} // namespace parallel

using parallel::accumulate_taylor_term;
using parallel::apply_v;
using parallel::apply_x;
using parallel::assemble_transport;
using parallel::basis_sum_eval;

} // namespace vpspec::kernels
