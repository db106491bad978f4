#include "scn/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace scn {

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 2) throw std::domain_error("linspace: needs at least 2 points");
    std::vector<double> xs(points);
    const double step = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i) xs[i] = lo + step * i;
    xs.back() = hi;
    return xs;
}

std::vector<double> logspace(double lo, double hi, int points) {
    if (!(lo > 0.0 && hi > lo))
        throw std::domain_error("logspace: needs 0 < lo < hi");
    std::vector<double> xs = linspace(std::log(lo), std::log(hi), points);
    for (double& x : xs) x = std::exp(x);
    xs.back() = hi;
    return xs;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v,
                             std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no newline surprises
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

}  // namespace

void write_curve_csv(const std::string& path, const std::string& abscissa_name,
                     const std::string& value_name, const EvalGrid& grid) {
    auto out = open_out(path);
    out << abscissa_name << ',' << value_name << '\n';
    for (std::size_t i = 0; i < grid.abscissae.size(); ++i)
        out << format_double(grid.abscissae[i]) << ','
            << format_double(grid.values[i]) << '\n';
}

void write_sample_csv(const std::string& path,
                      const std::vector<DrawRecord>& rows) {
    auto out = open_out(path);
    out << "trial,kappa_sq,lambda_min\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        out << i << ',' << format_double(rows[i].kappa_sq) << ','
            << format_double(rows[i].lambda_min) << '\n';
}

}  // namespace scn
