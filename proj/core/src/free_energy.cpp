#include "hdm/free_energy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <future>
#include <limits>
#include <numbers>
#include <vector>

namespace hdm {

namespace {

struct Term {
    int i, j;
    double c;
};

}  // namespace

double torus_mean_log(const LaurentPoly2& P, int n, int threads) {
    if (P.is_zero()) throw std::invalid_argument("free energy of the zero polynomial");
    std::vector<Term> terms;
    for (auto& [e, c] : P.terms()) terms.push_back({e.first, e.second, c.get_d()});
    const double h = 2 * std::numbers::pi / n;
    // per-row sums added in row order, so the result does not depend on the thread count
    std::vector<double> row_sum(n, 0.0);
    auto rows = [&](int r0, int r1) {
        std::vector<std::complex<double>> zi(terms.size());
        for (int a = r0; a < r1; ++a) {
            double th = (a + 0.5) * h;
            for (std::size_t t = 0; t < terms.size(); ++t) zi[t] = terms[t].c * std::polar(1.0, terms[t].i * th);
            double acc = 0;
            for (int b = 0; b < n; ++b) {
                double ph = (b + 0.5) * h;
                std::complex<double> v = 0;
                for (std::size_t t = 0; t < terms.size(); ++t) v += zi[t] * std::polar(1.0, terms[t].j * ph);
                // an exact zero on a node only happens for degenerate P; skip it
                double m = std::abs(v);
                if (m > 0) acc += std::log(m);
            }
            row_sum[a] = acc;
        }
    };
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        rows(0, n);
    } else {
        std::vector<std::future<void>> parts;
        for (int k = 0; k < threads; ++k) parts.push_back(std::async(std::launch::async, rows, n * k / threads, n * (k + 1) / threads));
        for (auto& f : parts) f.get();
    }
    double total = 0;
    for (double r : row_sum) total += r;
    return total / (static_cast<double>(n) * n);
}

FreeEnergy free_energy(const LaurentPoly2& P, double tol, int threads, int max_resolution) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    std::vector<double> m;
    std::vector<double> ext;
    int n = 32;
    m.push_back(torus_mean_log(P, n, threads));
    while (true) {
        n *= 2;
        if (n > max_resolution) throw NoConvergence("free energy did not converge by resolution " + std::to_string(max_resolution));
        m.push_back(torus_mean_log(P, n, threads));
        std::size_t k = m.size() - 1;
        // Richardson with the observed order when three levels are available.
        double e = m[k];
        if (k >= 2) {
            double d1 = m[k - 1] - m[k - 2], d2 = m[k] - m[k - 1];
            if (d1 != 0 && d2 != 0 && d1 / d2 > 1.5) {
                double r = d1 / d2;
                e = m[k] + d2 / (r - 1);
            }
        }
        ext.push_back(e);
        if (ext.size() >= 2) {
            double diff = std::abs(ext.back() - ext[ext.size() - 2]);
            if (diff < tol / 4 && std::abs(m[k] - m[k - 1]) < tol) return {ext.back(), diff + std::abs(ext.back() - m[k]) / 4, n};
        }
    }
}

}  // namespace hdm
