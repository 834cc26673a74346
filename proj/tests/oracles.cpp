// oracles.cpp — reference implementations; see oracles.hpp.

#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

// ---------------------------------------------------------------- exact 2x2

mat2 piece_step(double v, double lambda, double w) {
    // y'' = (v - lambda) y.  kappa2 = v - lambda.
    const double k2 = v - lambda;
    mat2 m;
    if (std::abs(k2) < 1e-14) {  // y'' = 0
        m.a = 1.0;
        m.b = w;
        m.c = 0.0;
        m.d = 1.0;
        return m;
    }
    if (k2 > 0.0) {  // forbidden region: cosh/sinh
        const double kappa = std::sqrt(k2);
        const double ch = std::cosh(kappa * w), sh = std::sinh(kappa * w);
        m.a = ch;
        m.b = sh / kappa;
        m.c = kappa * sh;
        m.d = ch;
    } else {  // oscillatory: cos/sin
        const double k = std::sqrt(-k2);
        const double cs = std::cos(k * w), sn = std::sin(k * w);
        m.a = cs;
        m.b = sn / k;
        m.c = -k * sn;
        m.d = cs;
    }
    return m;
}

mat2 mul(const mat2& s, const mat2& f) {
    mat2 r;
    r.a = s.a * f.a + s.b * f.c;
    r.b = s.a * f.b + s.b * f.d;
    r.c = s.c * f.a + s.d * f.c;
    r.d = s.c * f.b + s.d * f.d;
    return r;
}

mono from_mat(const mat2& m) {
    // theta: y(0)=1, y'(0)=0; phi: y(0)=0, y'(0)=1.
    mono o;
    o.theta1 = m.a;
    o.theta1_x = m.c;
    o.phi1 = m.b;
    o.phi1_x = m.d;
    return o;
}

mono const_monodromy(double c, double lambda) {
    return from_mat(piece_step(c, lambda, 1.0));
}

double const_delta(double c, double lambda) {
    const double k2 = c - lambda;
    if (k2 > 0.0) return std::cosh(std::sqrt(k2));
    return std::cos(std::sqrt(-k2));
}

double const_delta_dlambda(double c, double lambda) {
    // d/dlambda cos(sqrt(lambda-c)) = -sin(k)/(2k), smooth through k = 0.
    const double k2 = lambda - c;
    if (std::abs(k2) < 1e-14) return -0.5;
    if (k2 > 0.0) {
        const double k = std::sqrt(k2);
        return -std::sin(k) / (2.0 * k);
    }
    const double kappa = std::sqrt(-k2);
    return -std::sinh(kappa) / (2.0 * kappa);
}

double const_m_plus(double c, double lambda) {
    if (!(lambda < c)) throw std::domain_error("const_m_plus: lambda >= c");
    return -std::sqrt(c - lambda);
}

double const_m_minus(double c, double lambda) {
    if (!(lambda < c)) throw std::domain_error("const_m_minus: lambda >= c");
    return std::sqrt(c - lambda);
}

mono pw_monodromy(const std::vector<double>& breaks,
                  const std::vector<double>& vals, double lambda, double t) {
    if (breaks.empty() || breaks.size() != vals.size() || breaks.front() != 0.0)
        throw std::invalid_argument("pw_monodromy: bad piece grid");
    // value at a point (period 1)
    auto value_at = [&](double x) {
        double u = x - std::floor(x);
        std::size_t i = breaks.size() - 1;
        while (i > 0 && breaks[i] > u + 1e-15) --i;
        return vals[i];
    };
    // walk [t, t+1] splitting at every wrapped breakpoint
    std::vector<double> cuts;
    cuts.push_back(t);
    for (double b : breaks) {
        double x = b + std::ceil(t - b);
        for (; x < t + 1.0 - 1e-15; x += 1.0)
            if (x > t + 1e-15) cuts.push_back(x);
    }
    cuts.push_back(t + 1.0);
    std::sort(cuts.begin(), cuts.end());
    mat2 m;  // identity
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double x0 = cuts[i], x1 = cuts[i + 1];
        if (x1 - x0 < 1e-15) continue;
        const double v = value_at(0.5 * (x0 + x1));
        m = mul(piece_step(v, lambda, x1 - x0), m);
    }
    return from_mat(m);
}

double pw_delta(const std::vector<double>& breaks,
                const std::vector<double>& vals, double lambda) {
    return pw_monodromy(breaks, vals, lambda, 0.0).delta();
}

// --------------------------------------------------- trigonometric (Eigen)

namespace {

// Fourier coefficient p_hat(k) of p = mean + sum amp[m] cos(2 pi m x) in the
// exponential basis: p_hat(0) = mean, p_hat(+-m) = amp[m]/2.
double p_hat(double mean, const std::vector<double>& amp, int k) {
    if (k == 0) return mean;
    const int m = std::abs(k);
    if (m <= static_cast<int>(amp.size())) return 0.5 * amp[m - 1];
    return 0.0;
}

std::vector<double> lowest_eigs(const Eigen::MatrixXd& H, int count) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    std::vector<double> out;
    const int n = static_cast<int>(es.eigenvalues().size());
    for (int i = 0; i < std::min(count, n); ++i)
        out.push_back(es.eigenvalues()[i]);
    return out;
}

}  // namespace

std::vector<double> trig_bloch_eigs(double mean, const std::vector<double>& amp,
                                    bool antiperiodic, int K, int count) {
    const int N = 2 * K + 1;
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(N, N);
    const double half = antiperiodic ? 0.5 : 0.0;
    for (int i = 0; i < N; ++i) {
        const double n = i - K + half;
        const double w = 2.0 * M_PI * n;
        H(i, i) = w * w + p_hat(mean, amp, 0);
        for (int j = i + 1; j < N; ++j) {
            const double c = p_hat(mean, amp, j - i);
            H(i, j) = c;
            H(j, i) = c;
        }
    }
    return lowest_eigs(H, count);
}

std::vector<double> trig_dirichlet_eigs(double mean, const std::vector<double>& amp,
                                        double t, int K, int count) {
    // basis sqrt(2) sin(pi j u), u = x - t in [0, 1];
    // p(u + t) = mean + sum_m amp[m] (cos(2 pi m u) cos(2 pi m t)
    //                                 - sin(2 pi m u) sin(2 pi m t)).
    // 2 sin(pi j u) sin(pi k u) = cos(pi (j-k) u) - cos(pi (j+k) u), and
    //   int_0^1 cos(pi r u) cos(2 pi m u) du = (1/2)(d_{|r|,2m} + d_{r,0} d_{m,0})
    //   int_0^1 cos(pi r u) sin(2 pi m u) du = 4m/pi / (4m^2 - r^2), r odd.
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(K, K);
    const int M = static_cast<int>(amp.size());
    for (int j = 1; j <= K; ++j) {
        for (int k = j; k <= K; ++k) {
            double h = (j == k) ? (M_PI * j) * (M_PI * j) + mean : 0.0;
            for (int m = 1; m <= M; ++m) {
                const double cm = amp[m - 1] * std::cos(2.0 * M_PI * m * t);
                const double sm = amp[m - 1] * std::sin(2.0 * M_PI * m * t);
                // cosine part
                double ic = 0.0;
                if (std::abs(j - k) == 2 * m) ic += 0.5;
                if (j + k == 2 * m) ic -= 0.5;
                h += cm * ic;
                // sine part (nonzero only for odd j + k, where j - k is odd too)
                if ((j + k) % 2 == 1) {
                    const double r1 = j - k, r2 = j + k;
                    const double is = 4.0 * m / M_PI / (4.0 * m * m - r1 * r1) -
                                      4.0 * m / M_PI / (4.0 * m * m - r2 * r2);
                    h += -sm * is;
                }
            }
            H(j - 1, k - 1) = h;
            H(k - 1, j - 1) = h;
        }
    }
    return lowest_eigs(H, count);
}

std::vector<double> trig_neumann_eigs(double mean, const std::vector<double>& amp,
                                      double t, int K, int count) {
    // basis e_0 = 1, e_j = sqrt(2) cos(pi j u), j >= 1.
    // 2 cos(pi j u) cos(pi k u) = cos(pi (j-k) u) + cos(pi (j+k) u).
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(K + 1, K + 1);
    const int M = static_cast<int>(amp.size());
    auto cos_int = [](int r, int m) {  // int_0^1 cos(pi r u) cos(2 pi m u) du
        if (std::abs(r) == 2 * m) return (r == 0) ? 1.0 : 0.5;
        return 0.0;
    };
    auto sin_int = [](int r, int m) {  // int_0^1 cos(pi r u) sin(2 pi m u) du
        if (r % 2 == 0) return 0.0;
        return 4.0 * m / M_PI / (4.0 * m * m - static_cast<double>(r) * r);
    };
    for (int j = 0; j <= K; ++j) {
        for (int k = j; k <= K; ++k) {
            const double norm =
                (j == 0 ? 1.0 : std::sqrt(2.0)) * (k == 0 ? 1.0 : std::sqrt(2.0));
            double h = (j == k) ? (M_PI * j) * (M_PI * j) + mean : 0.0;
            for (int m = 1; m <= M; ++m) {
                const double cm = amp[m - 1] * std::cos(2.0 * M_PI * m * t);
                const double sm = amp[m - 1] * std::sin(2.0 * M_PI * m * t);
                const double ic =
                    0.5 * (cos_int(j - k, m) + cos_int(j + k, m)) * norm;
                const double is =
                    0.5 * (sin_int(j - k, m) + sin_int(j + k, m)) * norm;
                h += cm * ic - sm * is;
            }
            H(j, k) = h;
            H(k, j) = h;
        }
    }
    return lowest_eigs(H, count);
}

// -------------------------------------------------------- shooting oracle

int box_oracle::count_below(double E) const {
    // Shoot y(x0) = 0, y'(x0) = 1 and count sign changes of y; renormalize
    // to dodge overflow in forbidden regions.
    double y = 0.0, yp = 1.0;
    int changes = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const mat2 m = piece_step(vs[i], E, xs[i + 1] - xs[i]);
        const double k2 = E - vs[i];
        const double w = xs[i + 1] - xs[i];
        // interior zeros inside an oscillatory cell wider than half a wave
        if (k2 > 0.0) {
            const double k = std::sqrt(k2);
            if (k * w > M_PI) {
                // Prufer angle advance: theta' = k + O(1) terms; for a
                // constant cell the angle advances exactly by the rotation
                // of (k y, y').  Count multiples of pi crossed.
                const double th0 = std::atan2(k * y, yp);
                const double th1 = th0 + k * w;  // exact for constant cell
                changes += static_cast<int>(std::floor(th1 / M_PI)) -
                           static_cast<int>(std::floor(th0 / M_PI));
                const double ny = m.a * y + m.b * yp;
                const double nyp = m.c * y + m.d * yp;
                y = ny;
                yp = nyp;
                const double s = std::max(std::abs(y), std::abs(yp));
                if (s > 1e120) {
                    y /= s;
                    yp /= s;
                }
                continue;
            }
        }
        const double ny = m.a * y + m.b * yp;
        const double nyp = m.c * y + m.d * yp;
        if ((y > 0.0 && ny < 0.0) || (y < 0.0 && ny > 0.0)) ++changes;
        y = ny;
        yp = nyp;
        const double s = std::max(std::abs(y), std::abs(yp));
        if (s > 1e120) {
            y /= s;
            yp /= s;
        }
    }
    return changes;
}

double box_oracle::eigenvalue(int k, double lo, double hi) const {
    // count_below(E) = k+1 first happens at the k-th eigenvalue
    double a = lo, b = hi;
    if (count_below(a) > k) throw std::domain_error("eigenvalue: lo too high");
    if (count_below(b) <= k) throw std::domain_error("eigenvalue: hi too low");
    while (b - a > 1e-13 * (1.0 + std::abs(a) + std::abs(b))) {
        const double mid = 0.5 * (a + b);
        if (count_below(mid) <= k)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

std::vector<double> box_oracle::eigs_in(double lo, double hi) const {
    const int n0 = count_below(lo), n1 = count_below(hi);
    std::vector<double> out;
    for (int k = n0; k < n1; ++k) out.push_back(eigenvalue(k, lo, hi));
    return out;
}

box_oracle make_box(const std::function<double(double)>& left,
                    const std::vector<double>& left_breaks,
                    const std::vector<double>& left_vals,
                    const std::function<double(double)>& right,
                    const std::vector<double>& right_breaks,
                    const std::vector<double>& right_vals, double t, double L,
                    int cells_per_unit) {
    box_oracle box;
    auto add_cells = [&](double x0, double x1,
                         const std::function<double(double)>& f,
                         const std::vector<double>& breaks,
                         const std::vector<double>& vals, double shift) {
        // exact grid for piecewise sides
        if (!breaks.empty()) {
            std::vector<double> cuts;
            cuts.push_back(x0);
            for (double b : breaks) {
                double x = b - shift + std::ceil(x0 - (b - shift));
                for (; x < x1 - 1e-12; x += 1.0)
                    if (x > x0 + 1e-12) cuts.push_back(x);
            }
            cuts.push_back(x1);
            std::sort(cuts.begin(), cuts.end());
            auto value_at = [&](double x) {
                double u = x + shift;
                u -= std::floor(u);
                std::size_t i = breaks.size() - 1;
                while (i > 0 && breaks[i] > u + 1e-15) --i;
                return vals[i];
            };
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
                if (cuts[i + 1] - cuts[i] < 1e-12) continue;
                box.xs.push_back(cuts[i]);
                box.vs.push_back(value_at(0.5 * (cuts[i] + cuts[i + 1])));
            }
            return;
        }
        // Simpson cell averages for smooth sides
        const int n = static_cast<int>(std::lround((x1 - x0) * cells_per_unit));
        for (int i = 0; i < n; ++i) {
            const double a = x0 + (x1 - x0) * i / n;
            const double b = x0 + (x1 - x0) * (i + 1) / n;
            const double mid = 0.5 * (a + b);
            box.xs.push_back(a);
            box.vs.push_back((f(a + shift) + 4.0 * f(mid + shift) + f(b + shift)) / 6.0);
        }
    };
    add_cells(-L, 0.0, left, left_breaks, left_vals, 0.0);
    add_cells(0.0, L, right, right_breaks, right_vals, t);
    box.xs.push_back(L);
    return box;
}

// ------------------------------------------------------------------- misc

double loglog_slope(const std::vector<double>& t, const std::vector<double>& err) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < t.size() && i < err.size(); ++i) {
        if (!(t[i] > 0.0) || !(err[i] > 0.0) || !std::isfinite(err[i])) continue;
        const double x = std::log(t[i]), y = std::log(err[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) return 0.0;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
