#include "scn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace scn {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK QK15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    double fv[15];
    fv[7] = f(c);
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }

    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        double pair = fv[i] + fv[14 - i];
        resk += kWgk[i] * pair;
        if (i % 2 == 1) resg += kWg[i / 2] * pair;
    }

    // QUADPACK-style error: scale |K15-G7| by the spread of f about its mean.
    double mean = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
    resasc *= std::fabs(h);

    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {a, b, resk * h, err};
}

}  // namespace

IntegrationResult integrate(const std::function<double(double)>& f,
                            double a, double b,
                            double abs_tol, double rel_tol, int max_panels) {
    std::function<double(double)> g = f;
    double lo = a, hi = b;
    if (std::isinf(b)) {
        // x = a + t/(1-t) maps [0,1) onto [a, inf).
        g = [&f, a](double t) {
            const double om = 1.0 - t;
            return f(a + t / om) / (om * om);
        };
        lo = 0.0;
        hi = 1.0;
    }
    if (!(lo < hi)) return {0.0, 0.0, 0};

    std::priority_queue<Panel> queue;
    queue.push(evaluate_panel(g, lo, hi));
    double total = queue.top().value;
    double total_err = queue.top().error;
    int panels = 1;

    while (total_err > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (panels >= max_panels)
            throw std::runtime_error("integrate: panel budget exhausted");
        Panel worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval at machine resolution; keep its estimate.
            queue.push({worst.a, worst.b, worst.value, 0.0});
            total_err -= worst.error;
            continue;
        }
        Panel left = evaluate_panel(g, worst.a, mid);
        Panel right = evaluate_panel(g, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++panels;
    }
    return {total, total_err, panels};
}

double integrate_2d_ordered(const std::function<double(double, double)>& f,
                            double tol) {
    auto outer = [&](double x) {
        auto inner = [&](double y) { return f(x, y); };
        return integrate(inner, x, std::numeric_limits<double>::infinity(),
                         tol * 1e-3, tol * 1e-3).value;
    };
    return integrate(outer, 0.0, std::numeric_limits<double>::infinity(),
                     tol, tol).value;
}

}  // namespace scn
