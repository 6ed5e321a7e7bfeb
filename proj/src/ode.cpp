#include "hypspec/ode.hpp"

namespace hypspec {

namespace {

// Dormand-Prince coefficients
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

}  // namespace

void integrate_dopri5(
    const std::function<void(double, const Eigen::VectorXcd&, Eigen::VectorXcd&)>& f, double x0,
    double x1, const Eigen::VectorXcd& y0, const std::vector<double>& samples,
    const std::function<void(std::size_t, const Eigen::VectorXcd&)>& emit, const OdeOptions& opt) {
    using Vec = Eigen::VectorXcd;
    const Eigen::Index dim = y0.size();
    Vec y = y0, ynew(dim);
    Vec k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim), err(dim), ytmp(dim);
    double x = x0;
    double h = std::min(opt.h_max, (x1 - x0) / 16.0);
    std::size_t next_sample = 0;
    while (next_sample < samples.size() && samples[next_sample] <= x0) {
        emit(next_sample, y);
        ++next_sample;
    }
    f(x, y, k1);
    long steps = 0;
    while (x < x1) {
        if (++steps > opt.max_steps)
            fail(Errc::IntegratorFailure, "dopri5: step limit exceeded");
        if (h < 1e-14 * std::max(1.0, std::abs(x)))
            fail(Errc::IntegratorFailure, "dopri5: step size underflow");
        h = std::min(h, x1 - x);

        ytmp = y + h * (a21 * k1);
        f(x + c2 * h, ytmp, k2);
        ytmp = y + h * (a31 * k1 + a32 * k2);
        f(x + c3 * h, ytmp, k3);
        ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        f(x + c4 * h, ytmp, k4);
        ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        f(x + c5 * h, ytmp, k5);
        ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        f(x + h, ytmp, k6);
        ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        f(x + h, ynew, k7);
        err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double nrm = 0.0;
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double sc =
                opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double q = std::abs(err[i]) / sc;
            nrm += q * q;
        }
        nrm = std::sqrt(nrm / static_cast<double>(dim));

        if (nrm <= 1.0) {
            // dense output over [x, x+h]
            if (next_sample < samples.size() && samples[next_sample] <= x + h) {
                const Vec ydiff = ynew - y;
                const Vec bspl = h * k1 - ydiff;
                const Vec cont3 = ydiff - h * k7 - bspl;
                const Vec cont4 =
                    h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
                while (next_sample < samples.size() && samples[next_sample] <= x + h) {
                    const double th = (samples[next_sample] - x) / h;
                    const double th1 = 1.0 - th;
                    ytmp = y + th * (ydiff + th1 * (bspl + th * (cont3 + th1 * cont4)));
                    emit(next_sample, ytmp);
                    ++next_sample;
                }
            }
            x += h;
            y.swap(ynew);
            k1.swap(k7);  // FSAL
            const double fac = (nrm == 0.0) ? 5.0 : 0.9 * std::pow(nrm, -0.2);
            h = std::min(opt.h_max, h * std::clamp(fac, 0.2, 5.0));
        } else {
            h *= std::max(0.2, 0.9 * std::pow(nrm, -0.2));
        }
    }
    while (next_sample < samples.size()) {  // trailing points at/after x1
        emit(next_sample, y);
        ++next_sample;
    }
}

}  // namespace hypspec
