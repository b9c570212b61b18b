#include "vpspec/phase_space.hpp"

#include "vpspec/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace vpspec {

namespace {

void require_grid(const DistributionField& field, const char* what) {
    if (!field.grid) throw std::invalid_argument(std::string(what) + ": field has no grid");
}

// Orders 0..max_order for one axis; orders 1 and 2 come from the grid cache.
class DerivativeLadder {
public:
    DerivativeLadder(const NodeGrid1D& grid, const DerivativeMatrix& d1, const DerivativeMatrix& d2, int max_order)
        : built_(static_cast<std::size_t>(max_order + 1)), refs_(static_cast<std::size_t>(max_order + 1)) {
        for (int s = 0; s <= max_order; ++s) {
            const auto idx = static_cast<std::size_t>(s);
            if (s == 1) {
                refs_[idx] = &d1;
            } else if (s == 2) {
                refs_[idx] = &d2;
            } else {
                built_[idx] = derivative_matrix(grid, s);
                refs_[idx] = &built_[idx];
            }
        }
    }

    const DerivativeMatrix& operator[](int s) const { return *refs_[static_cast<std::size_t>(s)]; }

private:
    std::vector<DerivativeMatrix> built_;
    std::vector<const DerivativeMatrix*> refs_;
};

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

PhaseGridPtr make_phase_grid(NodeGrid1D xgrid, NodeGrid1D vgrid) {
    auto grid = std::make_shared<PhaseGrid>();
    grid->dx1 = derivative_matrix(xgrid, 1);
    grid->dx2 = derivative_matrix(xgrid, 2);
    grid->dv1 = derivative_matrix(vgrid, 1);
    grid->dv2 = derivative_matrix(vgrid, 2);
    grid->xgrid = std::move(xgrid);
    grid->vgrid = std::move(vgrid);
    return grid;
}

PhaseGridPtr make_phase_grid(std::size_t nx, double x_min, double x_max, std::size_t nv, double v_min, double v_max) {
    return make_phase_grid(make_grid(nx, x_min, x_max - x_min), make_grid(nv, v_min, v_max - v_min));
}

DistributionField::DistributionField(PhaseGridPtr g, Matrix v) : grid(std::move(g)), values(std::move(v)) {
    if (!grid) throw std::invalid_argument("DistributionField: null grid");
    if (values.rows() != grid->nx() || values.cols() != grid->nv())
        throw std::invalid_argument("DistributionField: value matrix is " + std::to_string(values.rows()) + "x" +
                                    std::to_string(values.cols()) + ", grid is " + std::to_string(grid->nx()) +
                                    "x" + std::to_string(grid->nv()));
}

DistributionField DistributionField::zeros(PhaseGridPtr g) {
    const auto nx = g->nx();
    const auto nv = g->nv();
    return DistributionField(std::move(g), Matrix(nx, nv));
}

DistributionField DistributionField::sample(PhaseGridPtr g, const std::function<double(double, double)>& f) {
    Matrix values(g->nx(), g->nv());
    for (std::size_t n = 0; n < g->nx(); ++n)
        for (std::size_t m = 0; m < g->nv(); ++m) values(n, m) = f(g->xgrid.nodes[n], g->vgrid.nodes[m]);
    return DistributionField(std::move(g), std::move(values));
}

bool DistributionField::all_finite() const noexcept {
    for (double v : values.flat())
        if (!std::isfinite(v)) return false;
    return true;
}

Matrix taylor_shifted_eval(const DistributionField& field, const DisplacementField& disp, int order) {
    require_grid(field, "taylor_shifted_eval");
    if (order < 1) throw std::invalid_argument("taylor_shifted_eval: truncation order must be at least 1");
    const Matrix& c = field.values;
    if (!disp.dxs.same_shape(c) || !disp.dvs.same_shape(c))
        throw std::invalid_argument("taylor_shifted_eval: displacement shape does not match field");

    const PhaseGrid& g = *field.grid;
    for (double d : disp.dxs.flat())
        if (!(std::abs(d) < g.xgrid.length))
            throw std::invalid_argument("taylor_shifted_eval: x displacement exceeds the domain length");
    for (double d : disp.dvs.flat())
        if (!(std::abs(d) < g.vgrid.length))
            throw std::invalid_argument("taylor_shifted_eval: v displacement exceeds the domain length");

    const DerivativeLadder dx(g.xgrid, g.dx1, g.dx2, order);
    const DerivativeLadder dv(g.vgrid, g.dv1, g.dv2, order);

    Matrix out = c;
    Matrix x_deriv;
    Matrix mixed;
    for (int r = 0; r <= order; ++r) {
        if (r > 0) kernels::apply_x(dx[r], c, x_deriv);
        const Matrix& base = (r == 0) ? c : x_deriv;
        for (int q = 0; q + r <= order; ++q) {
            const int s = r + q;
            if (s == 0) continue;
            if (q > 0) kernels::apply_v(dv[q], base, mixed);
            const Matrix& term = (q == 0) ? base : mixed;
            const double coef = ((s % 2 == 0) ? 1.0 : -1.0) / (factorial(r) * factorial(q));
            kernels::accumulate_taylor_term(term, disp.dxs, disp.dvs, r, q, coef, out);
        }
    }
    return out;
}

Matrix exact_shifted_eval(const DistributionField& field, const ShiftedPoints& points) {
    require_grid(field, "exact_shifted_eval");
    Matrix out;
    kernels::basis_sum_eval(field.grid->xgrid, field.grid->vgrid, field.values, points.xs, points.vs, out);
    return out;
}

Matrix phi_transport(const DistributionField& field, std::span<const double> e_nodes) {
    require_grid(field, "phi_transport");
    const PhaseGrid& g = *field.grid;
    if (e_nodes.size() != g.nx())
        throw std::invalid_argument("phi_transport: expected " + std::to_string(g.nx()) + " field values, got " +
                                    std::to_string(e_nodes.size()));
    Matrix dx_c;
    Matrix dv_c;
    Matrix out;
    kernels::apply_x(g.dx1, field.values, dx_c);
    kernels::apply_v(g.dv1, field.values, dv_c);
    kernels::assemble_transport(g.vgrid.nodes, e_nodes, dx_c, dv_c, out);
    return out;
}

} // namespace vpspec
