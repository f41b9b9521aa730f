#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "relgas/gas_core.hpp"

namespace relgas {

/// Uniformly sampled coordinate axis: count nodes from origin to origin + length.
struct Axis {
    double origin = 0.0;
    double length = 1.0;
    int count = 2;

    double spacing() const { return length / (count - 1); }
    double at(int i) const { return origin + i * spacing(); }
    double end() const { return origin + length; }

    bool operator==(const Axis&) const = default;
};

/// Dense row-major array indexed (i, j) with i along the first axis.
class Array2 {
public:
    Array2() = default;
    Array2(int n0, int n1, double fill = 0.0)
        : n0_(n0), n1_(n1), data_(static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1), fill)
    {
    }

    int n0() const { return n0_; }
    int n1() const { return n1_; }

    double& operator()(int i, int j) { return data_[index(i, j)]; }
    double operator()(int i, int j) const { return data_[index(i, j)]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool operator==(const Array2&) const = default;

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n1_) + static_cast<std::size_t>(j);
    }

    int n0_ = 0;
    int n1_ = 0;
    std::vector<double> data_;
};

/// Fields of the 1+1 system on the (t, x) lattice; arrays are indexed (it, ix).
struct FieldGrid1D {
    Axis t;
    Axis x;
    Array2 rho, v, p, e;

    FieldGrid1D() = default;
    FieldGrid1D(const Axis& tAxis, const Axis& xAxis);

    GasState1D state(int i, int j) const { return {rho(i, j), v(i, j), p(i, j), e(i, j)}; }
    void set(int i, int j, const GasState1D& s);

    bool operator==(const FieldGrid1D&) const = default;
};

/// Fields of the steady plane system on the (x, y) lattice; arrays are indexed (ix, iy).
struct FieldGrid2D {
    Axis x;
    Axis y;
    Array2 rho, u, v, p, e;

    FieldGrid2D() = default;
    FieldGrid2D(const Axis& xAxis, const Axis& yAxis);

    GasState2D state(int i, int j) const { return {rho(i, j), u(i, j), v(i, j), p(i, j), e(i, j)}; }
    void set(int i, int j, const GasState2D& s);

    bool operator==(const FieldGrid2D&) const = default;
};

/// Throws InvalidGrid unless both axes have at least 8 nodes and every sample
/// passes validate_state.
void validate_grid(const FieldGrid1D& grid, const ModelConstants& constants);
void validate_grid(const FieldGrid2D& grid, const ModelConstants& constants);

// Columnar CSV with a one-line header: "t,x,rho,v,p,e" or "x,y,rho,u,v,p,e".
void write_csv(std::ostream& os, const FieldGrid1D& grid);
void write_csv(std::ostream& os, const FieldGrid2D& grid);
FieldGrid1D read_csv_1d(std::istream& is);
FieldGrid2D read_csv_2d(std::istream& is);

/// Peeks at a CSV header: returns 1 or 2, or 0 when unrecognized.
int csv_dimension(const std::string& headerLine);

} // namespace relgas
