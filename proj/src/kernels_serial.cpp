#include "vpspec/kernels.hpp"

#include "kernel_rows.hpp"

namespace vpspec::kernels::serial {

void apply_x(const DerivativeMatrix& d, const Matrix& in, Matrix& out) {
    detail::check_apply_x(d, in, out);
    for (std::size_t n = 0; n < in.rows(); ++n) detail::apply_x_row(d, in, out, n);
}

void apply_v(const DerivativeMatrix& d, const Matrix& in, Matrix& out) {
    detail::check_apply_v(d, in, out);
    for (std::size_t n = 0; n < in.rows(); ++n) detail::apply_v_row(d, in, out, n);
}

void assemble_transport(std::span<const double> v, std::span<const double> e, const Matrix& dx_c,
                        const Matrix& dv_c, Matrix& out) {
    detail::check_transport(v, e, dx_c, dv_c, out);
    for (std::size_t n = 0; n < dx_c.rows(); ++n) detail::transport_row(v, e, dx_c, dv_c, out, n);
}

void accumulate_taylor_term(const Matrix& term, const Matrix& disp_x, const Matrix& disp_v, int r, int q,
                            double coef, Matrix& out) {
    detail::check_taylor(term, disp_x, disp_v, out);
    for (std::size_t n = 0; n < term.rows(); ++n) detail::taylor_row(term, disp_x, disp_v, r, q, coef, out, n);
}

void basis_sum_eval(const NodeGrid1D& xgrid, const NodeGrid1D& vgrid, const Matrix& c, const Matrix& px,
                    const Matrix& pv, Matrix& out) {
    detail::check_basis_sum(xgrid, vgrid, c, px, pv, out);
    for (std::size_t n = 0; n < px.rows(); ++n) detail::basis_sum_row(xgrid, vgrid, c, px, pv, out, n);
}

} // namespace vpspec::kernels::serial
