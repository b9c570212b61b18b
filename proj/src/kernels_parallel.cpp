#include "vpspec/kernels.hpp"

#include "kernel_rows.hpp"

#include <cstddef>

namespace vpspec::kernels::parallel {

void apply_x(const DerivativeMatrix& d, const Matrix& in, Matrix& out) {
    detail::check_apply_x(d, in, out);
    const auto rows = static_cast<std::ptrdiff_t>(in.rows());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 0; n < rows; ++n)
        detail::apply_x_row(d, in, out, static_cast<std::size_t>(n));
}

void apply_v(const DerivativeMatrix& d, const Matrix& in, Matrix& out) {
    detail::check_apply_v(d, in, out);
    const auto rows = static_cast<std::ptrdiff_t>(in.rows());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 0; n < rows; ++n)
        detail::apply_v_row(d, in, out, static_cast<std::size_t>(n));
}

void assemble_transport(std::span<const double> v, std::span<const double> e, const Matrix& dx_c,
                        const Matrix& dv_c, Matrix& out) {
    detail::check_transport(v, e, dx_c, dv_c, out);
    const auto rows = static_cast<std::ptrdiff_t>(dx_c.rows());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 0; n < rows; ++n)
        detail::transport_row(v, e, dx_c, dv_c, out, static_cast<std::size_t>(n));
}

void accumulate_taylor_term(const Matrix& term, const Matrix& disp_x, const Matrix& disp_v, int r, int q,
                            double coef, Matrix& out) {
    detail::check_taylor(term, disp_x, disp_v, out);
    const auto rows = static_cast<std::ptrdiff_t>(term.rows());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 0; n < rows; ++n)
        detail::taylor_row(term, disp_x, disp_v, r, q, coef, out, static_cast<std::size_t>(n));
}

void basis_sum_eval(const NodeGrid1D& xgrid, const NodeGrid1D& vgrid, const Matrix& c, const Matrix& px,
                    const Matrix& pv, Matrix& out) {
    detail::check_basis_sum(xgrid, vgrid, c, px, pv, out);
    const auto rows = static_cast<std::ptrdiff_t>(px.rows());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 0; n < rows; ++n)
        detail::basis_sum_row(xgrid, vgrid, c, px, pv, out, static_cast<std::size_t>(n));
}

} // namespace vpspec::kernels::parallel
