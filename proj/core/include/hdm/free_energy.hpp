#pragma once

#include "hdm/laurent.hpp"

#include <stdexcept>

namespace hdm {

struct FreeEnergy {
    double value = 0;
    double error = 0;  // estimated
    int resolution = 0;  // grid points per axis at the last level
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Average of log|P| over the unit torus: tensor midpoint rule, doubled until two
// extrapolated levels agree within tol.
FreeEnergy free_energy(const LaurentPoly2& P, double tol = 1e-4, int threads = 1, int max_resolution = 4096);

// Midpoint rule at a fixed N x N grid.
double torus_mean_log(const LaurentPoly2& P, int n, int threads = 1);

}  // namespace hdm
