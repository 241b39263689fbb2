#include "entloc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace entloc {

cplx polynomial_eval(const std::vector<cplx>& coeffs, cplx z) {
    cplx acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

cplx derivative_eval(const std::vector<cplx>& coeffs, cplx z) {
    cplx acc = 0.0;
    for (std::size_t k = coeffs.size() - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * coeffs[k];
    return acc;
}

double backward_error(const std::vector<cplx>& coeffs, cplx z) {
    double scale = 0.0;
    double zk = 1.0;
    for (const cplx& c : coeffs) {
        scale += std::abs(c) * zk;
        zk *= std::abs(z);
    }
    const double r = std::abs(polynomial_eval(coeffs, z));
    return scale > 0.0 ? r / scale : r;
}

}  // namespace

PolyRoots polynomial_roots(const std::vector<cplx>& coeffs, int max_iterations, double residual_tol) {
    if (coeffs.empty()) throw InputError("empty polynomial");
    const std::size_t n = coeffs.size() - 1;
    if (coeffs[n] == cplx{}) throw InputError("leading coefficient is zero");
    PolyRoots out;
    if (n == 0) return out;

    // Roots at zero: the relative backward error is 1 for every z near a
    // multiple root at the origin, so deflate them first.
    if (coeffs[0] == cplx{}) {
        std::size_t zeros = 1;
        while (coeffs[zeros] == cplx{}) ++zeros;
        out = polynomial_roots(std::vector<cplx>(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end()),
                               max_iterations, residual_tol);
        out.roots.insert(out.roots.end(), zeros, cplx{});
        return out;
    }

    // Initial radius from the Cauchy bound.
    double radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(coeffs[k] / coeffs[n]));
    radius = 0.5 * (1.0 + radius);
    std::vector<cplx> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z[k] = std::polar(radius, angle);
    }

    bool converged = false;
    int it = 0;
    for (; it < max_iterations && !converged; ++it) {
        converged = true;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx p = polynomial_eval(coeffs, z[k]);
            if (p == cplx{}) continue;
            const cplx ratio = p / derivative_eval(coeffs, z[k]);
            cplx repulsion = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k && z[j] != z[k]) repulsion += 1.0 / (z[k] - z[j]);
            }
            const cplx step = ratio / (1.0 - ratio * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
            z[k] -= step;
            if (std::abs(step) > 1e-15 * (1.0 + std::abs(z[k]))) converged = false;
        }
    }

    for (cplx& r : z) {
        const cplx d = derivative_eval(coeffs, r);
        if (std::abs(d) > 0.0) {
            const cplx polished = r - polynomial_eval(coeffs, r) / d;
            if (std::isfinite(polished.real()) && std::isfinite(polished.imag()) &&
                backward_error(coeffs, polished) <= backward_error(coeffs, r)) {
                r = polished;
            }
        }
        out.max_backward_error = std::max(out.max_backward_error, backward_error(coeffs, r));
        out.max_abs_residual = std::max(out.max_abs_residual, std::abs(polynomial_eval(coeffs, r)));
    }
    out.iterations = it;
    out.roots = std::move(z);
    if (out.max_backward_error > residual_tol) {
        throw ConvergenceError("root finder did not converge: backward error " +
                               std::to_string(out.max_backward_error) + " after " + std::to_string(it) +
                               " iterations");
    }
    return out;
}

PreimageRoots sep_I_preimage_roots(const Mat& a, cplx c0) {
    if (a.rows() != 3 || a.cols() != 3) throw DimensionError("sep_I_preimage_roots expects a 3x3 operator");
    if (std::abs(c0) < kStateEps) throw InputError("c0 must be nonzero");
    const double r2 = std::sqrt(2.0);
    // Column-wise: A Psi = c0^2 A e0 + c1^2 A e1 + sqrt2 c0 c1 A e2, each
    // component a quadratic alpha + beta c1 + gamma c1^2.
    std::array<std::array<cplx, 3>, 3> w{};
    for (int i = 0; i < 3; ++i) w[i] = {c0 * c0 * a(i, 0), r2 * c0 * a(i, 2), a(i, 1)};
    auto mul = [](const std::array<cplx, 3>& p, const std::array<cplx, 3>& q) {
        std::vector<cplx> r(5, 0.0);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) r[i + j] += p[i] * q[j];
        }
        return r;
    };
    const auto sq = mul(w[2], w[2]);
    const auto cross = mul(w[0], w[1]);
    PreimageRoots out;
    out.coefficients.resize(5);
    for (int k = 0; k < 5; ++k) out.coefficients[k] = sq[k] - 2.0 * cross[k];

    const double na = spectral_norm(a);
    const double scale = 1e-12 * na * na * std::pow(std::max(1.0, std::abs(c0)), 4);
    std::vector<cplx> trimmed = out.coefficients;
    while (!trimmed.empty() && std::abs(trimmed.back()) <= scale) trimmed.pop_back();
    if (trimmed.empty()) {
        out.tautology = true;
        return out;
    }
    for (auto& c : trimmed) {
        if (std::abs(c) <= scale) c = 0.0;
    }
    out.solution = polynomial_roots(trimmed);
    return out;
}

}  // namespace entloc
