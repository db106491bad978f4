#pragma once

#include <string>
#include <vector>

#include "scn/ensemble.hpp"

namespace scn {

// Ordered abscissae with matching values, the unit every curve command
// produces and serializes.
struct EvalGrid {
    std::vector<double> abscissae;
    std::vector<double> values;
};

std::vector<double> linspace(double lo, double hi, int points);
std::vector<double> logspace(double lo, double hi, int points);

// Locale-independent decimal formatting with 17 significant digits, so
// written files survive read-back round-trips bit-exactly.
std::string format_double(double v);

void write_curve_csv(const std::string& path, const std::string& abscissa_name,
                     const std::string& value_name, const EvalGrid& grid);

// Header: trial,kappa_sq,lambda_min
void write_sample_csv(const std::string& path,
                      const std::vector<DrawRecord>& rows);

}  // namespace scn
