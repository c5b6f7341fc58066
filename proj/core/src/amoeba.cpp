#include "hdm/amoeba.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <map>
#include <numbers>
#include <queue>

namespace hdm {

namespace {

using cd = std::complex<double>;

// coeff[k] multiplies t^k.
bool roots(const std::vector<cd>& coeff, std::vector<cd>& out) {
    int deg = static_cast<int>(coeff.size()) - 1;
    while (deg > 0 && std::abs(coeff[deg]) < 1e-300) --deg;
    if (deg <= 0) return false;
    double scale = 0;
    for (int k = 0; k <= deg; ++k) scale = std::max(scale, std::abs(coeff[k]));
    if (std::abs(coeff[deg]) < 1e-13 * scale) return false;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
    for (int k = 1; k < deg; ++k) C(k, k - 1) = 1;
    for (int k = 0; k < deg; ++k) C(k, deg - 1) = -coeff[k] / coeff[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    if (es.info() != Eigen::Success) return false;
    for (int k = 0; k < deg; ++k) out.push_back(es.eigenvalues()(k));
    return true;
}

// rows[i] = coefficients of P in the second variable, as a polynomial in the first.
struct Sweep {
    std::map<int, std::vector<std::pair<int, double>>> by_power;  // power of solved var -> (power of fixed var, coeff)
    int lo = 0, hi = 0;
};

Sweep make_sweep(const LaurentPoly2& P, bool solve_for_w) {
    Sweep s;
    bool first = true;
    for (auto& [e, c] : P.terms()) {
        int fixed = solve_for_w ? e.first : e.second;
        int solved = solve_for_w ? e.second : e.first;
        s.by_power[solved].push_back({fixed, c.get_d()});
        if (first || solved < s.lo) s.lo = solved;
        if (first || solved > s.hi) s.hi = solved;
        first = false;
    }
    return s;
}

void run_sweep(const Sweep& s, const AmoebaGrid& g, bool solve_for_w, AmoebaCloud& out) {
    if (s.hi == s.lo) return;  // no roots in the solved variable
    auto work = [&](int l0, int l1) {
        AmoebaCloud part;
        std::vector<cd> coeff(s.hi - s.lo + 1);
        std::vector<cd> rts;
        for (int l = l0; l < l1; ++l) {
            double x = g.lines == 1 ? g.lo : g.lo + (g.hi - g.lo) * l / (g.lines - 1);
            for (int a = 0; a < g.angles; ++a) {
                double th = 2 * std::numbers::pi * (a + 0.5) / g.angles;
                cd z = std::exp(cd(x, th));
                std::fill(coeff.begin(), coeff.end(), cd(0));
                for (auto& [pw, list] : s.by_power)
                    for (auto& [fp, c] : list) coeff[pw - s.lo] += c * std::pow(z, fp);
                rts.clear();
                if (!roots(coeff, rts)) {
                    ++part.skipped_slices;
                    continue;
                }
                for (auto& r : rts) {
                    if (std::abs(r) == 0) continue;
                    double y = std::log(std::abs(r));
                    part.points.push_back(solve_for_w ? std::pair{x, y} : std::pair{y, x});
                }
            }
        }
        return part;
    };
    int t = std::max(1, std::min(g.threads, g.lines));
    std::vector<std::future<AmoebaCloud>> fs;
    for (int k = 0; k < t; ++k) fs.push_back(std::async(t == 1 ? std::launch::deferred : std::launch::async, work, g.lines * k / t, g.lines * (k + 1) / t));
    for (auto& f : fs) {
        auto p = f.get();
        out.points.insert(out.points.end(), p.points.begin(), p.points.end());
        out.skipped_slices += p.skipped_slices;
    }
}

}  // namespace

AmoebaCloud amoeba_cloud(const LaurentPoly2& P, const AmoebaGrid& grid) {
    if (grid.angles < 1 || grid.lines < 1 || !(grid.hi > grid.lo)) throw std::invalid_argument("bad amoeba grid");
    AmoebaCloud out;
    if (P.size() < 2) return out;  // a monomial never vanishes on the torus
    run_sweep(make_sweep(P, true), grid, true, out);
    run_sweep(make_sweep(P, false), grid, false, out);
    return out;
}

GasPhase gas_phase_detect(const AmoebaCloud& cloud, const AmoebaGrid& grid, int raster, int min_cells) {
    const int R = raster;
    const double cell = (grid.hi - grid.lo) / R;
    std::vector<char> hit(R * R, 0);
    auto idx = [R](int i, int j) { return j * R + i; };
    for (auto& [x, y] : cloud.points) {
        int i = static_cast<int>(std::floor((x - grid.lo) / cell));
        int j = static_cast<int>(std::floor((y - grid.lo) / cell));
        if (i < 0 || j < 0 || i >= R || j >= R) continue;
        for (int di = -1; di <= 1; ++di)
            for (int dj = -1; dj <= 1; ++dj) {
                int a = i + di, b = j + dj;
                if (a >= 0 && b >= 0 && a < R && b < R) hit[idx(a, b)] = 1;
            }
    }
    // 0 unknown, 1 amoeba, 2 reached from the frame, 3+ bounded component labels
    std::vector<int> lab(R * R, 0);
    for (int k = 0; k < R * R; ++k) lab[k] = hit[k] ? 1 : 0;
    auto fill = [&](int si, int sj, int label) {
        int count = 0;
        double sx = 0, sy = 0;
        std::queue<std::pair<int, int>> q;
        q.push({si, sj});
        lab[idx(si, sj)] = label;
        while (!q.empty()) {
            auto [i, j] = q.front();
            q.pop();
            ++count;
            sx += i;
            sy += j;
            const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                int a = i + di[d], b = j + dj[d];
                if (a < 0 || b < 0 || a >= R || b >= R || lab[idx(a, b)] != 0) continue;
                lab[idx(a, b)] = label;
                q.push({a, b});
            }
        }
        return std::tuple{count, sx / count, sy / count};
    };
    for (int i = 0; i < R; ++i)
        for (int j : {0, R - 1}) {
            if (lab[idx(i, j)] == 0) fill(i, j, 2);
            if (lab[idx(j, i)] == 0) fill(j, i, 2);
        }
    GasPhase g;
    int best = 0, next = 3;
    for (int j = 0; j < R; ++j)
        for (int i = 0; i < R; ++i) {
            if (lab[idx(i, j)] != 0) continue;
            auto [count, cx, cy] = fill(i, j, next++);
            if (count < min_cells) {
                g.inconclusive = true;
                continue;
            }
            if (count > best) {
                best = count;
                g.witness = {grid.lo + (cx + 0.5) * cell, grid.lo + (cy + 0.5) * cell};
            }
        }
    g.has_bounded_hole = best > 0;
    if (g.has_bounded_hole) g.inconclusive = false;
    g.hole_area = best * cell * cell;
    return g;
}

}  // namespace hdm
