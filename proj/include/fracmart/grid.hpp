#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fracmart {

// Uniform discretization of [0, t]: grid points t_i = i * (t / n), i = 0..n.
class TimeGrid {
public:
    TimeGrid(double horizon, std::size_t cells) : horizon_(horizon), cells_(cells) {
        if (!(horizon > 0.0)) throw std::invalid_argument("TimeGrid: horizon must be positive");
        if (cells < 1) throw std::invalid_argument("TimeGrid: need at least one cell");
    }

    double horizon() const { return horizon_; }
    std::size_t cells() const { return cells_; }
    double step() const { return horizon_ / static_cast<double>(cells_); }
    double point(std::size_t i) const { return static_cast<double>(i) * step(); }

    // Grid over [0, prefix_cells * step], sharing this grid's step.
    TimeGrid prefix(std::size_t prefix_cells) const {
        if (prefix_cells < 1 || prefix_cells > cells_)
            throw std::invalid_argument("TimeGrid::prefix: cell count out of range");
        return TimeGrid(step() * static_cast<double>(prefix_cells), prefix_cells);
    }

    bool operator==(const TimeGrid& other) const {
        return horizon_ == other.horizon_ && cells_ == other.cells_;
    }

private:
    double horizon_;
    std::size_t cells_;
};

// A process sampled at the n+1 grid points.
struct SamplePath {
    TimeGrid grid;
    std::vector<double> values;  // size grid.cells() + 1

    SamplePath(TimeGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.cells() + 1)
            throw std::invalid_argument("SamplePath: values must have n+1 entries");
    }

    static SamplePath zeros(TimeGrid g) {
        return SamplePath(g, std::vector<double>(g.cells() + 1, 0.0));
    }
};

}  // namespace fracmart
