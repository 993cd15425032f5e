#pragma once

namespace econ {

// Upper-tail probabilities used by the test statistics.
double chi2_sf(double x, double df);
double f_sf(double x, double df1, double df2);
double t_sf_2sided(double t, double df);

} // namespace econ
