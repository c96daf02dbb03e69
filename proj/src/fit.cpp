#include "specsing/fit.hpp"

#include <cmath>

#include "specsing/errors.hpp"

namespace specsing {

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3) throw ValidationError("fit_loglog: need >= 3 paired points");
    const double n = double(x.size());
    double sx = 0, sy = 0;
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0 && y[i] > 0.0)) throw ValidationError("fit_loglog: values must be positive");
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
        sx += lx.back();
        sy += ly.back();
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (sxx == 0.0) throw ValidationError("fit_loglog: degenerate abscissae");
    LogLogFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

LogLogFit fit_loglog_robust(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() < 4) return fit_loglog(x, y);
    const std::vector<double> xr(x.begin() + 1, x.end()), yr(y.begin() + 1, y.end());
    const LogLogFit rest = fit_loglog(xr, yr);
    double ss = 0.0;
    for (std::size_t i = 0; i < xr.size(); ++i) {
        const double r = std::log(yr[i]) - (rest.intercept + rest.slope * std::log(xr[i]));
        ss += r * r;
    }
    const double sigma = std::sqrt(ss / double(xr.size()));
    const double r0 = std::log(y[0]) - (rest.intercept + rest.slope * std::log(x[0]));
    if (std::abs(r0) > 3.0 * sigma && std::abs(r0) > 1e-12) {
        LogLogFit f = rest;
        f.dropped_first = true;
        return f;
    }
    return fit_loglog(x, y);
}

}  // namespace specsing
