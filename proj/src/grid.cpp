#include "relgas/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace relgas {

FieldGrid1D::FieldGrid1D(const Axis& tAxis, const Axis& xAxis)
    : t(tAxis), x(xAxis), rho(t.count, x.count), v(t.count, x.count), p(t.count, x.count), e(t.count, x.count)
{
}

void FieldGrid1D::set(int i, int j, const GasState1D& s)
{
    rho(i, j) = s.rho;
    v(i, j) = s.v;
    p(i, j) = s.p;
    e(i, j) = s.e;
}

FieldGrid2D::FieldGrid2D(const Axis& xAxis, const Axis& yAxis)
    : x(xAxis), y(yAxis), rho(x.count, y.count), u(x.count, y.count), v(x.count, y.count), p(x.count, y.count),
      e(x.count, y.count)
{
}

void FieldGrid2D::set(int i, int j, const GasState2D& s)
{
    rho(i, j) = s.rho;
    u(i, j) = s.u;
    v(i, j) = s.v;
    p(i, j) = s.p;
    e(i, j) = s.e;
}

namespace {

void check_axes(const Axis& a, const Axis& b)
{
    if (a.count < 8 || b.count < 8) {
        throw DomainError(ErrorKind::InvalidGrid, "grids need at least 8 nodes per axis");
    }
    if (!(a.length > 0.0) || !(b.length > 0.0)) {
        throw DomainError(ErrorKind::InvalidGrid, "axis lengths must be positive");
    }
}

template <class Grid>
void check_samples(const Grid& grid, int n0, int n1, const ModelConstants& constants)
{
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n1; ++j) {
            const ValidationReport r = validate_state(grid.state(i, j), constants);
            if (!r.ok()) {
                std::ostringstream os;
                os << "sample (" << i << ", " << j << "): " << r.violations.front().message;
                throw DomainError(ErrorKind::InvalidGrid, os.str());
            }
        }
    }
}

std::string fmt17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<double> split_numbers(const std::string& line, std::size_t expected)
{
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(cell, &used);
        }
        catch (const std::exception&) {
            throw DomainError(ErrorKind::InvalidGrid, "non-numeric CSV cell '" + cell + "'");
        }
        out.push_back(value);
    }
    if (out.size() != expected) {
        throw DomainError(ErrorKind::InvalidGrid, "CSV row has the wrong number of columns: " + line);
    }
    return out;
}

std::string trim(std::string s)
{
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == '\r' || ch == ' '; }), s.end());
    return s;
}

/// Recovers a uniform axis from the distinct coordinate values seen in a file.
Axis recover_axis(const std::vector<double>& raw, const char* name)
{
    std::vector<double> values = raw;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() < 2) {
        throw DomainError(ErrorKind::InvalidGrid, std::string("axis ") + name + " has fewer than two nodes");
    }
    Axis axis{values.front(), values.back() - values.front(), static_cast<int>(values.size())};
    const double h = axis.spacing();
    for (int i = 0; i < axis.count; ++i) {
        if (std::abs(values[static_cast<std::size_t>(i)] - axis.at(i)) > 1e-9 * std::max(h, std::abs(axis.at(i)))) {
            throw DomainError(ErrorKind::InvalidGrid, std::string("axis ") + name + " is not uniformly spaced");
        }
    }
    return axis;
}

int node_index(const Axis& axis, double value)
{
    return static_cast<int>(std::lround((value - axis.origin) / axis.spacing()));
}

struct CsvTable {
    std::vector<std::vector<double>> rows;
};

CsvTable read_table(std::istream& is, const std::string& expectedHeader, std::size_t columns)
{
    std::string header;
    if (!std::getline(is, header) || trim(header) != expectedHeader) {
        throw DomainError(ErrorKind::InvalidGrid, "expected CSV header '" + expectedHeader + "'");
    }
    CsvTable table;
    std::string line;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        table.rows.push_back(split_numbers(line, columns));
    }
    return table;
}

} // namespace

void validate_grid(const FieldGrid1D& grid, const ModelConstants& constants)
{
    check_axes(grid.t, grid.x);
    check_samples(grid, grid.t.count, grid.x.count, constants);
}

void validate_grid(const FieldGrid2D& grid, const ModelConstants& constants)
{
    check_axes(grid.x, grid.y);
    check_samples(grid, grid.x.count, grid.y.count, constants);
}

void write_csv(std::ostream& os, const FieldGrid1D& g)
{
    os << "t,x,rho,v,p,e\n";
    for (int i = 0; i < g.t.count; ++i) {
        for (int j = 0; j < g.x.count; ++j) {
            os << fmt17(g.t.at(i)) << ',' << fmt17(g.x.at(j)) << ',' << fmt17(g.rho(i, j)) << ','
               << fmt17(g.v(i, j)) << ',' << fmt17(g.p(i, j)) << ',' << fmt17(g.e(i, j)) << '\n';
        }
    }
}

void write_csv(std::ostream& os, const FieldGrid2D& g)
{
    os << "x,y,rho,u,v,p,e\n";
    for (int i = 0; i < g.x.count; ++i) {
        for (int j = 0; j < g.y.count; ++j) {
            os << fmt17(g.x.at(i)) << ',' << fmt17(g.y.at(j)) << ',' << fmt17(g.rho(i, j)) << ','
               << fmt17(g.u(i, j)) << ',' << fmt17(g.v(i, j)) << ',' << fmt17(g.p(i, j)) << ','
               << fmt17(g.e(i, j)) << '\n';
        }
    }
}

FieldGrid1D read_csv_1d(std::istream& is)
{
    const CsvTable table = read_table(is, "t,x,rho,v,p,e", 6);
    std::vector<double> ts, xs;
    for (const auto& r : table.rows) {
        ts.push_back(r[0]);
        xs.push_back(r[1]);
    }
    FieldGrid1D g(recover_axis(ts, "t"), recover_axis(xs, "x"));
    if (table.rows.size() != static_cast<std::size_t>(g.t.count) * static_cast<std::size_t>(g.x.count)) {
        throw DomainError(ErrorKind::InvalidGrid, "CSV rows do not fill the (t, x) lattice");
    }
    for (const auto& r : table.rows) {
        g.set(node_index(g.t, r[0]), node_index(g.x, r[1]), {r[2], r[3], r[4], r[5]});
    }
    return g;
}

FieldGrid2D read_csv_2d(std::istream& is)
{
    const CsvTable table = read_table(is, "x,y,rho,u,v,p,e", 7);
    std::vector<double> xs, ys;
    for (const auto& r : table.rows) {
        xs.push_back(r[0]);
        ys.push_back(r[1]);
    }
    FieldGrid2D g(recover_axis(xs, "x"), recover_axis(ys, "y"));
    if (table.rows.size() != static_cast<std::size_t>(g.x.count) * static_cast<std::size_t>(g.y.count)) {
        throw DomainError(ErrorKind::InvalidGrid, "CSV rows do not fill the (x, y) lattice");
    }
    for (const auto& r : table.rows) {
        g.set(node_index(g.x, r[0]), node_index(g.y, r[1]), {r[2], r[3], r[4], r[5], r[6]});
    }
    return g;
}

int csv_dimension(const std::string& headerLine)
{
    const std::string h = trim(headerLine);
    if (h == "t,x,rho,v,p,e") {
        return 1;
    }
    if (h == "x,y,rho,u,v,p,e") {
        return 2;
    }
    return 0;
}

} // namespace relgas
