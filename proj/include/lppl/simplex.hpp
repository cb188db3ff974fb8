#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

namespace lppl {

// Derivative-free simplex descent (Nelder-Mead) in 3 dimensions with box
// bounds handled by projection: every candidate vertex is clamped into the
// box before evaluation, so the objective is only ever called on feasible
// points. Deterministic: no internal randomness.
//
// The objective returns nullopt to signal an unusable evaluation (e.g. a
// singular inner solve); the whole descent is then abandoned.

using Vec3 = std::array<double, 3>;

struct Box3 {
    Vec3 lo{};
    Vec3 hi{};

    Vec3 clamp(Vec3 x) const {
        for (int i = 0; i < 3; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
        return x;
    }
};

struct SimplexResult {
    Vec3 x{};
    double fx = 0.0;
    int iterations = 0;
    bool aborted = false;  // objective returned nullopt
};

template <class F>
SimplexResult nelder_mead(F&& objective, Vec3 x0, const Box3& box, int max_iters,
                          double step_frac = 0.05, double ftol_rel = 1e-12,
                          double ftol_abs = 1e-14) {
    constexpr int kDim = 3;
    constexpr int kVerts = kDim + 1;

    std::array<Vec3, kVerts> xs;
    std::array<double, kVerts> fs;

    SimplexResult res;
    auto eval = [&](const Vec3& x) -> std::optional<double> { return objective(x); };

    // Initial simplex: x0 plus one step along each axis, flipped when the
    // step would leave the box.
    xs[0] = box.clamp(x0);
    for (int i = 0; i < kDim; ++i) {
        Vec3 v = xs[0];
        double h = step_frac * (box.hi[i] - box.lo[i]);
        if (h <= 0.0) h = step_frac;
        if (v[i] + h > box.hi[i]) h = -h;
        v[i] += h;
        xs[i + 1] = box.clamp(v);
    }
    for (int i = 0; i < kVerts; ++i) {
        auto f = eval(xs[i]);
        if (!f) {
            res.aborted = true;
            return res;
        }
        fs[i] = *f;
    }

    auto order = [&] {
        std::array<int, kVerts> idx{0, 1, 2, 3};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
        std::array<Vec3, kVerts> xs2;
        std::array<double, kVerts> fs2;
        for (int i = 0; i < kVerts; ++i) {
            xs2[i] = xs[idx[i]];
            fs2[i] = fs[idx[i]];
        }
        xs = xs2;
        fs = fs2;
    };

    int iter = 0;
    for (; iter < max_iters; ++iter) {
        order();
        if (std::abs(fs[kVerts - 1] - fs[0]) <=
            ftol_abs + ftol_rel * std::max(std::abs(fs[0]), std::abs(fs[kVerts - 1]))) {
            break;
        }

        Vec3 centroid{};
        for (int i = 0; i < kDim; ++i) {
            for (int j = 0; j < kDim; ++j) centroid[j] += xs[i][j];
        }
        for (int j = 0; j < kDim; ++j) centroid[j] /= kDim;

        auto along = [&](double coeff) {
            Vec3 x;
            for (int j = 0; j < kDim; ++j)
                x[j] = centroid[j] + coeff * (xs[kVerts - 1][j] - centroid[j]);
            return box.clamp(x);
        };

        Vec3 xr = along(-1.0);  // reflection
        auto fr = eval(xr);
        if (!fr) {
            res.aborted = true;
            return res;
        }

        if (*fr < fs[0]) {
            Vec3 xe = along(-2.0);  // expansion
            auto fe = eval(xe);
            if (!fe) {
                res.aborted = true;
                return res;
            }
            if (*fe < *fr) {
                xs[kVerts - 1] = xe;
                fs[kVerts - 1] = *fe;
            } else {
                xs[kVerts - 1] = xr;
                fs[kVerts - 1] = *fr;
            }
            continue;
        }
        if (*fr < fs[kVerts - 2]) {
            xs[kVerts - 1] = xr;
            fs[kVerts - 1] = *fr;
            continue;
        }

        bool outside = *fr < fs[kVerts - 1];
        Vec3 xc = along(outside ? -0.5 : 0.5);  // contraction
        auto fc = eval(xc);
        if (!fc) {
            res.aborted = true;
            return res;
        }
        if (*fc < std::min(*fr, fs[kVerts - 1])) {
            xs[kVerts - 1] = xc;
            fs[kVerts - 1] = *fc;
            continue;
        }

        // Shrink toward the best vertex.
        for (int i = 1; i < kVerts; ++i) {
            Vec3 x;
            for (int j = 0; j < kDim; ++j) x[j] = xs[0][j] + 0.5 * (xs[i][j] - xs[0][j]);
            xs[i] = box.clamp(x);
            auto f = eval(xs[i]);
            if (!f) {
                res.aborted = true;
                return res;
            }
            fs[i] = *f;
        }
    }

    order();
    res.x = xs[0];
    res.fx = fs[0];
    res.iterations = iter;
    return res;
}

} // namespace lppl
