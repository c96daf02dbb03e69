#pragma once

#include <vector>

namespace specsing {

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    bool dropped_first = false;  // smallest N rejected as a > 3 sigma outlier
};

// Least squares of log(y) on log(x); needs >= 3 positive points.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

// As fit_loglog, then refit without the first point if its residual exceeds
// three standard deviations of the others (kept only if >= 3 points remain).
LogLogFit fit_loglog_robust(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace specsing
