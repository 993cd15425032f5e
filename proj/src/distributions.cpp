#include "econ/distributions.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <cmath>

namespace econ {

double chi2_sf(double x, double df) {
    if (x <= 0.0) return 1.0;
    boost::math::chi_squared dist(df);
    return boost::math::cdf(boost::math::complement(dist, x));
}

double f_sf(double x, double df1, double df2) {
    if (x <= 0.0) return 1.0;
    boost::math::fisher_f dist(df1, df2);
    return boost::math::cdf(boost::math::complement(dist, x));
}

double t_sf_2sided(double t, double df) {
    boost::math::students_t dist(df);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

} // namespace econ
