#include "stablefrac/gridfun.hpp"

#include <cmath>
#include <stdexcept>

#include <fftw3.h>
#include "json.hpp"

namespace stablefrac {

void GridFunction::validate() const {
    if (!(dx > 0.0))
        throw std::invalid_argument("GridFunction: dx must be positive");
    if (values.size() < 2)
        throw std::invalid_argument("GridFunction: need at least 2 samples");
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("GridFunction: non-finite sample");
}

void SpectralFunction::validate() const {
    if (!(du > 0.0))
        throw std::invalid_argument("SpectralFunction: du must be positive");
    if (coeffs.size() < 2 || coeffs.size() % 2 != 0)
        throw std::invalid_argument("SpectralFunction: length must be even and >= 2");
    for (const auto& c : coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("SpectralFunction: non-finite coefficient");
}

namespace {

// Unnormalized DFT, sign = +1 or -1 in exp(sign * 2*pi*i*k*n/N).
void dft(std::vector<std::complex<double>>& data, int sign) {
    const int n = static_cast<int>(data.size());
    fftw_complex* buf = fftw_alloc_complex(n);
    for (int i = 0; i < n; ++i) {
        buf[i][0] = data[static_cast<std::size_t>(i)].real();
        buf[i][1] = data[static_cast<std::size_t>(i)].imag();
    }
    // FFTW_FORWARD is the e^{-...} direction, so sign=+1 maps to BACKWARD.
    fftw_plan plan = fftw_plan_dft_1d(n, buf, buf,
                                      sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                                      FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    for (int i = 0; i < n; ++i)
        data[static_cast<std::size_t>(i)] = {buf[i][0], buf[i][1]};
    fftw_free(buf);
}

} // namespace

SpectralFunction fft_forward(const GridFunction& f) {
    f.validate();
    const std::size_t n = f.size();
    if (n % 2 != 0)
        throw std::invalid_argument("fft_forward: grid length must be even");

    std::vector<std::complex<double>> work(n);
    for (std::size_t i = 0; i < n; ++i)
        work[i] = f.values[i];
    dft(work, +1);

    SpectralFunction s;
    s.du = 2.0 * M_PI / (static_cast<double>(n) * f.dx);
    s.coeffs.resize(n);
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
        // ascending index i corresponds to DFT bin k = i - n/2 (mod n)
        const long k = static_cast<long>(i) - static_cast<long>(half);
        const std::size_t bin = static_cast<std::size_t>((k + static_cast<long>(n)) % static_cast<long>(n));
        const double uk = static_cast<double>(k) * s.du;
        s.coeffs[i] = f.dx * std::polar(1.0, uk * f.x0) * work[bin];
    }
    return s;
}

GridFunction fft_inverse(const SpectralFunction& s, double x0) {
    s.validate();
    const std::size_t n = s.size();
    const std::size_t half = n / 2;
    const double dx = 2.0 * M_PI / (static_cast<double>(n) * s.du);

    std::vector<std::complex<double>> work(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long k = static_cast<long>(i) - static_cast<long>(half);
        const std::size_t bin = static_cast<std::size_t>((k + static_cast<long>(n)) % static_cast<long>(n));
        const double uk = static_cast<double>(k) * s.du;
        work[bin] = s.coeffs[i] * std::polar(1.0, -uk * x0);
    }
    dft(work, -1);

    GridFunction g;
    g.x0 = x0;
    g.dx = dx;
    g.values.resize(n);
    const double scale = s.du / (2.0 * M_PI);
    for (std::size_t i = 0; i < n; ++i)
        g.values[i] = scale * work[i].real();
    return g;
}

GridFunction fft_inverse(const SpectralFunction& s) {
    const double dx = 2.0 * M_PI / (static_cast<double>(s.size()) * s.du);
    return fft_inverse(s, -dx * static_cast<double>(s.size()) / 2.0);
}

std::string to_json_string(const GridFunction& f) {
    nlohmann::json j;
    j["x0"] = f.x0;
    j["dx"] = f.dx;
    j["values"] = f.values;
    return j.dump();
}

std::string to_json_string(const SpectralFunction& s) {
    nlohmann::json j;
    j["du"] = s.du;
    std::vector<double> re(s.size()), im(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        re[i] = s.coeffs[i].real();
        im[i] = s.coeffs[i].imag();
    }
    j["re"] = re;
    j["im"] = im;
    return j.dump();
}

GridFunction grid_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    GridFunction f;
    f.x0 = j.at("x0").get<double>();
    f.dx = j.at("dx").get<double>();
    f.values = j.at("values").get<std::vector<double>>();
    f.validate();
    return f;
}

SpectralFunction spectral_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    SpectralFunction s;
    s.du = j.at("du").get<double>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != im.size())
        throw std::invalid_argument("spectral_from_json: re/im length mismatch");
    s.coeffs.resize(re.size());
    for (std::size_t i = 0; i < re.size(); ++i)
        s.coeffs[i] = {re[i], im[i]};
    s.validate();
    return s;
}

UniformSpline::UniformSpline(const GridFunction& f)
    : x0_(f.x0), dx_(f.dx), y_(f.values), m_(f.values.size(), 0.0) {
    const std::size_t n = y_.size();
    if (n < 4)
        throw std::invalid_argument("UniformSpline: need at least 4 samples");
    // Tridiagonal solve for second derivatives, natural end conditions.
    std::vector<double> c(n, 0.0), d(n, 0.0);
    // interior rows: m[i-1] + 4 m[i] + m[i+1] = 6 (y[i-1] - 2 y[i] + y[i+1]) / dx^2
    c[1] = 4.0;
    d[1] = 6.0 * (y_[0] - 2.0 * y_[1] + y_[2]) / (dx_ * dx_);
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double w = 1.0 / c[i - 1];
        c[i] = 4.0 - w;
        d[i] = 6.0 * (y_[i - 1] - 2.0 * y_[i] + y_[i + 1]) / (dx_ * dx_) - w * d[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = (d[i] - (i + 2 < n ? m_[i + 1] : 0.0)) / c[i];
        if (i == 1) break;
    }
}

double UniformSpline::operator()(double x) const {
    const double t = (x - x0_) / dx_;
    if (t < 0.0 || t > static_cast<double>(y_.size() - 1))
        return 0.0;
    std::size_t i = static_cast<std::size_t>(t);
    if (i >= y_.size() - 1) i = y_.size() - 2;
    const double a = t - static_cast<double>(i); // in [0,1]
    const double b = 1.0 - a;
    return b * y_[i] + a * y_[i + 1] +
           dx_ * dx_ / 6.0 * ((b * b * b - b) * m_[i] + (a * a * a - a) * m_[i + 1]);
}

} // namespace stablefrac
