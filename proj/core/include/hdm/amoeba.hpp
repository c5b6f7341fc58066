#pragma once

#include "hdm/laurent.hpp"

#include <utility>
#include <vector>

namespace hdm {

struct AmoebaGrid {
    int angles = 256;
    int lines = 256;
    double lo = -4, hi = 4;  // range of log|z| (and log|w| for the transpose sweep)
    int threads = 1;
};

struct AmoebaCloud {
    std::vector<std::pair<double, double>> points;  // (log|z|, log|w|)
    int skipped_slices = 0;  // degenerate slices (leading coefficient vanished or solver failed)
};

// Slice x = log|z|, angle theta: roots w of P(e^{x+i theta}, .); then the same with
// the roles of z and w exchanged.
AmoebaCloud amoeba_cloud(const LaurentPoly2& P, const AmoebaGrid& grid = {});

struct GasPhase {
    bool has_bounded_hole = false;
    bool inconclusive = false;  // only holes at the size of a raster cell were seen
    std::pair<double, double> witness{0, 0};
    double hole_area = 0;  // largest bounded component, in log-coordinates
};

// Rasterizes the cloud (dilated by one cell), flood-fills the complement from the
// frame and reports the largest bounded component with at least min_cells cells.
GasPhase gas_phase_detect(const AmoebaCloud& cloud, const AmoebaGrid& grid, int raster = 160, int min_cells = 4);

}  // namespace hdm
