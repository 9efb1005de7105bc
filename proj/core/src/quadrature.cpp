#include "ramanujan/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace ramanujan::quad {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK dqk15).
// xgk[1], xgk[3], ... are the Gauss nodes.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

[[noreturn]] void throw_nonfinite(double x, double v) {
    std::ostringstream os;
    os << "integrand returned non-finite value " << v << " at x = " << x;
    throw std::runtime_error(os.str());
}

double eval_checked(const Integrand& f, double x) {
    const double v = f.fn(x);
    if (!std::isfinite(v)) throw_nonfinite(x, v);
    return v;
}

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

// One GK15 application on (a, b); 15 evaluations.
Panel gk15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = eval_checked(f, center);
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    double fv[15];
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const double f1 = eval_checked(f, center - dx);
        const double f2 = eval_checked(f, center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        resk += wgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }

    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));
    resasc *= std::abs(half);

    const double value = resk * half;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    // Round-off floor: the panel value cannot be more accurate than this.
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 50.0 * eps * std::abs(value));
    return Panel{a, b, value, err};
}

double tolerance_target(const QuadratureConfig& cfg, double value) {
    return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
}

QuadratureResult adapt_gk(const Integrand& f, double a, double b,
                          const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw std::invalid_argument("integrate_finite: requires a < b");

    QuadratureResult res;

    // Initial panels no wider than ~4 so that a 15-point rule cannot step
    // over an isolated feature of a wide interval.
    const int n0 = std::clamp(static_cast<int>(std::ceil((b - a) / 4.0)), 1, 32);
    std::priority_queue<Panel> heap;
    double total = 0.0, total_err = 0.0;
    for (int i = 0; i < n0; ++i) {
        const double pa = a + (b - a) * i / n0;
        const double pb = (i + 1 == n0) ? b : a + (b - a) * (i + 1) / n0;
        Panel p = gk15(f, pa, pb);
        res.evaluations += 15;
        total += p.value;
        total_err += p.error;
        heap.push(p);
    }

    int panels = n0;
    const double eps = std::numeric_limits<double>::epsilon();
    while (total_err > tolerance_target(cfg, total) &&
           panels < cfg.max_subdivisions) {
        Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b) ||
            (worst.b - worst.a) < 4.0 * eps * std::max(std::abs(worst.a), std::abs(worst.b))) {
            break;  // cannot refine further in double precision
        }
        heap.pop();
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        res.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }

    res.value = total;
    res.error_estimate = total_err;
    res.converged = total_err <= tolerance_target(cfg, total);
    return res;
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0))
        throw std::invalid_argument("QuadratureConfig: tolerances must be non-negative");
    if (abs_tol <= 0.0 && rel_tol <= 0.0)
        throw std::invalid_argument("QuadratureConfig: at least one tolerance must be positive");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureConfig: max_subdivisions must be positive");
    if (truncation_bound < 0.0)
        throw std::invalid_argument("QuadratureConfig: truncation_bound must be positive or zero");
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg) {
    return adapt_gk(f, a, b, cfg);
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureConfig& cfg) {
    cfg.validate();
    if (cfg.truncation_bound > 0.0) {
        // Caller supplies the tail bound beyond a + U.
        return adapt_gk(f, a, a + cfg.truncation_bound, cfg);
    }
    // t = a + u/(1-u), dt = du/(1-u)^2, u in (0,1).
    Integrand mapped(
        [&f, a](double u) {
            const double one_minus = 1.0 - u;
            const double t = a + u / one_minus;
            return f.fn(t) / (one_minus * one_minus);
        },
        {Endpoint::upper});
    return adapt_gk(mapped, 0.0, 1.0, cfg);
}

QuadratureResult integrate_real_line(const Integrand& f,
                                     const QuadratureConfig& cfg) {
    cfg.validate();
    if (cfg.truncation_bound > 0.0) {
        return adapt_gk(f, -cfg.truncation_bound, cfg.truncation_bound, cfg);
    }
    // t = s/(1-s^2), dt = (1+s^2)/(1-s^2)^2 ds, s in (-1,1).
    Integrand mapped(
        [&f](double s) {
            const double d = 1.0 - s * s;
            const double t = s / d;
            return f.fn(t) * (1.0 + s * s) / (d * d);
        },
        {Endpoint::lower, Endpoint::upper});
    return adapt_gk(mapped, -1.0, 1.0, cfg);
}

QuadratureResult integrate_tanh_sinh(const Integrand& f, double a, double b,
                                     const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw std::invalid_argument("integrate_tanh_sinh: requires a < b");

    const double half = 0.5 * (b - a);
    const double pi_half = 1.5707963267948966;
    const double eps = std::numeric_limits<double>::epsilon();

    QuadratureResult res;

    // Nodes in distance-to-endpoint form: for tau > 0,
    //   1 - tanh(T) = 2/(1 + e^{2T}),  T = (pi/2) sinh(tau),
    // which keeps full relative precision arbitrarily close to the
    // endpoints (x = a + half*ds never cancels for a = 0).
    auto add_pair = [&](double tau, double& sum) {
        const double T = pi_half * std::sinh(tau);
        if (2.0 * T > 700.0) return false;  // offsets underflow past here
        const double ds = 2.0 / (1.0 + std::exp(2.0 * T));
        const double xm = a + half * ds;   // node near the lower endpoint
        const double xp = b - half * ds;   // node near the upper endpoint
        // w = half * (pi/2) cosh(tau) sech^2(T); sech^2 = ds*(2 - ds)
        const double w = half * pi_half * std::cosh(tau) * ds * (2.0 - ds);
        if (!(w > 0.0)) return false;
        // the sides collapse at different rates when |a| != |b|; keep
        // whichever node is still distinguishable from its endpoint
        bool alive = false;
        if (xm > a) {
            sum += w * eval_checked(f, xm);
            ++res.evaluations;
            alive = true;
        }
        if (xp < b) {
            sum += w * eval_checked(f, xp);
            ++res.evaluations;
            alive = true;
        }
        return alive;
    };

    double h = 1.0;
    double sum = 0.0;
    {
        sum = half * pi_half * eval_checked(f, a + half);  // tau = 0
        res.evaluations = 1;
        for (double tau = h; tau < 7.0; tau += h)
            if (!add_pair(tau, sum)) break;
    }
    double prev = sum * h;
    double prev2 = 0.0;
    int level = 0;
    const int max_levels = 12;
    double value = prev, err = std::abs(prev);
    while (++level <= max_levels) {
        h *= 0.5;
        // new nodes are the odd multiples of h
        for (double tau = h; tau < 7.0; tau += 2.0 * h)
            if (!add_pair(tau, sum)) break;
        value = sum * h;
        const double diff = std::abs(value - prev);
        // double-exponential convergence: the next difference is roughly
        // the square of the current ratio
        if (level >= 2 && prev2 != prev) {
            const double prev_diff = std::abs(prev - prev2);
            err = (prev_diff > 0.0 && diff < prev_diff) ? diff * (diff / prev_diff) : diff;
        } else {
            err = diff;
        }
        err = std::max(err, 10.0 * eps * std::abs(value));
        if (level >= 4 && err <= tolerance_target(cfg, value)) {
            res.converged = true;
            break;
        }
        prev2 = prev;
        prev = value;
    }
    res.value = value;
    res.error_estimate = err;
    if (!res.converged)
        res.converged = err <= tolerance_target(cfg, value);
    return res;
}

}  // namespace ramanujan::quad
