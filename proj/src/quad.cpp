#include "deltazeta/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "deltazeta/errors.hpp"

namespace deltazeta::quad {

namespace {

// 21-point Gauss-Kronrod abscissae and weights (QUADPACK qk21).
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0,
};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

constexpr double epmach = std::numeric_limits<double>::epsilon();
constexpr double uflow = std::numeric_limits<double>::min();

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const std::complex<double>& v)
{
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

template <class T>
struct Segment {
    double a;
    double b;
    T result;
    double error;
};

template <class T>
struct ErrorLess {
    bool operator()(const Segment<T>& x, const Segment<T>& y) const { return x.error < y.error; }
};

template <class T, class F>
T sample(const F& f, double x, long& evaluations)
{
    ++evaluations;
    const T v = f(x);
    if (!is_finite(v))
        throw IntegrandError("integrand returned a non-finite value at x = " + std::to_string(x), x);
    return v;
}

template <class T, class F>
Segment<T> kronrod21(const F& f, double a, double b, long& evaluations)
{
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const T fc = sample<T>(f, centr, evaluations);
    T resg{};
    T resk = wgk[10] * fc;
    double resabs = std::abs(resk);
    std::array<T, 10> fv1{};
    std::array<T, 10> fv2{};
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * xgk[jtw];
        const T f1 = sample<T>(f, centr - absc, evaluations);
        const T f2 = sample<T>(f, centr + absc, evaluations);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += wg[j] * (f1 + f2);
        resk += wgk[jtw] * (f1 + f2);
        resabs += wgk[jtw] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * xgk[jtwm1];
        const T f1 = sample<T>(f, centr - absc, evaluations);
        const T f2 = sample<T>(f, centr + absc, evaluations);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += wgk[jtwm1] * (f1 + f2);
        resabs += wgk[jtwm1] * (std::abs(f1) + std::abs(f2));
    }
    const T reskh = 0.5 * resk;
    double resasc = wgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    resabs *= std::abs(hlgth);
    resasc *= std::abs(hlgth);
    double abserr = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    if (resabs > uflow / (50.0 * epmach)) abserr = std::max(50.0 * epmach * resabs, abserr);
    return {a, b, resk * hlgth, abserr};
}

std::vector<double> breakpoints(double lo, double hi, const std::vector<double>& split)
{
    std::vector<double> pts{lo};
    for (double s : split)
        if (s > lo && s < hi) pts.push_back(s);
    pts.push_back(hi);
    return pts;
}

template <class T, class F>
BasicQuadratureResult<T> adaptive(const F& f, const std::vector<double>& pts, const QuadratureSpec& spec)
{
    BasicQuadratureResult<T> out;
    std::vector<Segment<T>> heap;
    std::vector<Segment<T>> frozen;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        heap.push_back(kronrod21<T>(f, pts[i], pts[i + 1], out.evaluations));
    std::make_heap(heap.begin(), heap.end(), ErrorLess<T>{});

    auto totals = [&](T& value, double& error) {
        value = T{};
        error = 0.0;
        for (const auto& s : heap) {
            value += s.result;
            error += s.error;
        }
        for (const auto& s : frozen) {
            value += s.result;
            error += s.error;
        }
    };

    T value{};
    double error = 0.0;
    totals(value, error);
    int subdivisions = 0;
    while (true) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
        if (error <= tol) {
            out.converged = true;
            break;
        }
        if (subdivisions >= spec.max_subdivisions || heap.empty()) break;
        std::pop_heap(heap.begin(), heap.end(), ErrorLess<T>{});
        const Segment<T> worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        const double scale = std::max({1.0, std::abs(worst.a), std::abs(worst.b)});
        if (worst.b - worst.a <= 1e3 * epmach * scale || mid <= worst.a || mid >= worst.b) {
            frozen.push_back(worst);
            continue;
        }
        Segment<T> left = kronrod21<T>(f, worst.a, mid, out.evaluations);
        Segment<T> right = kronrod21<T>(f, mid, worst.b, out.evaluations);
        value += left.result + right.result - worst.result;
        error += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), ErrorLess<T>{});
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), ErrorLess<T>{});
        ++subdivisions;
        if (subdivisions % 64 == 0) totals(value, error);
    }
    totals(value, error);
    out.value = value;
    out.error_estimate = error;
    if (!out.converged) out.converged = error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
    return out;
}

template <class T, class F>
BasicQuadratureResult<T> finite_impl(const F& f, double lo, double hi, const QuadratureSpec& spec)
{
    spec.validate();
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw DomainError("integrate_finite: requires finite lo < hi");
    return adaptive<T>(f, breakpoints(lo, hi, spec.split_points), spec);
}

template <class T, class F>
BasicQuadratureResult<T> mapped_impl(const F& f, double lo, const QuadratureSpec& spec)
{
    auto g = [&f, lo](double u) -> T {
        const double w = 1.0 - u;
        const double v = lo + u / w;
        if (std::isinf(v)) return T{};
        return f(v) / (w * w);
    };
    std::vector<double> split;
    for (double s : spec.split_points)
        if (s > lo) split.push_back((s - lo) / (1.0 + (s - lo)));
    QuadratureSpec mapped = spec;
    mapped.split_points = split;
    return adaptive<T>(g, breakpoints(0.0, 1.0, split), mapped);
}

// Kahan-Babuska accumulator.
template <class T>
struct CompensatedSum {
    T sum{};
    T c{};
    void add(T x)
    {
        const T t = sum + x;
        c += compensation(sum, x, t);
        sum = t;
    }
    T value() const { return sum + c; }

private:
    static double comp1(double s, double x, double t)
    {
        return std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    }
    static double compensation(double s, double x, double t) { return comp1(s, x, t); }
    static std::complex<double> compensation(const std::complex<double>& s,
                                             const std::complex<double>& x,
                                             const std::complex<double>& t)
    {
        return {comp1(s.real(), x.real(), t.real()), comp1(s.imag(), x.imag(), t.imag())};
    }
};

template <class T, class F>
class PeriodLedger {
public:
    PeriodLedger(const F& f, double lo, double period, const QuadratureSpec& spec)
        : f_(f), lo_(lo), period_(period)
    {
        panel_spec_.abs_tol = spec.abs_tol * 1e-3;
        panel_spec_.rel_tol = std::min(spec.rel_tol * 1e-2, 1e-12);
        panel_spec_.max_subdivisions = 200;
        partial_.push_back(T{});
    }

    double position(long k) const { return lo_ + double(k) * period_; }

    /// Partial integral from lo to lo + k periods.
    T partial(long k)
    {
        while (long(partial_.size()) <= k) {
            const long j = long(partial_.size()) - 1;
            const double a = position(j);
            const double b = position(j + 1);
            const double m = 0.5 * (a + b);
            for (auto [x0, x1] : {std::pair{a, m}, std::pair{m, b}}) {
                const auto r = adaptive<T>(f_, std::vector<double>{x0, x1}, panel_spec_);
                sum_.add(r.value);
                error_ += r.error_estimate;
                evaluations_ += r.evaluations;
                all_converged_ = all_converged_ && r.converged;
            }
            partial_.push_back(sum_.value());
        }
        return partial_[std::size_t(k)];
    }

    double panel_error() const { return error_; }
    long evaluations() const { return evaluations_; }
    bool panels_converged() const { return all_converged_; }

private:
    const F& f_;
    double lo_;
    double period_;
    QuadratureSpec panel_spec_;
    std::vector<T> partial_;
    CompensatedSum<T> sum_;
    double error_ = 0.0;
    long evaluations_ = 0;
    bool all_converged_ = true;
};

// Sidi's W-algorithm: for samples F(x_l) = W + omega_l * sum_i beta_i x_l^{-i},
// with omega_l = x_l (F(x_l + P) - F(x_l)),
// returns the diagonal estimates W_n^{(0)}, n = 0..size-1.
template <class T>
std::vector<T> w_algorithm(const std::vector<double>& x, const std::vector<T>& partial,
                           const std::vector<T>& omega)
{
    const std::size_t n = x.size();
    std::vector<T> m(n);
    std::vector<T> q(n);
    std::vector<double> t(n);
    for (std::size_t l = 0; l < n; ++l) {
        t[l] = 1.0 / x[l];
        m[l] = partial[l] / omega[l];
        q[l] = T(1.0) / omega[l];
    }
    std::vector<T> diag{m[0] / q[0]};
    for (std::size_t order = 1; order < n; ++order) {
        for (std::size_t j = 0; j + order < n; ++j) {
            const double dt = t[j + order] - t[j];
            m[j] = (m[j + 1] - m[j]) / dt;
            q[j] = (q[j + 1] - q[j]) / dt;
        }
        diag.push_back(m[0] / q[0]);
    }
    return diag;
}

template <class T, class F>
BasicQuadratureResult<T> oscillatory_impl(const F& f, double lo, double period, const QuadratureSpec& spec)
{
    PeriodLedger<T, F> ledger(f, lo, period, spec);
    const long max_periods = std::max(8, spec.max_subdivisions);
    constexpr int max_samples = 12;
    constexpr double growth = 1.3;

    long start = 8;
    while (ledger.position(start) <= 0.0 && start < max_periods) start *= 2;

    BasicQuadratureResult<T> best;
    double best_diff = std::numeric_limits<double>::infinity();
    bool have_best = false;

    while (true) {
        // Whole-period sample points growing geometrically from start.
        std::vector<long> ks;
        for (int l = 0; l < max_samples; ++l) {
            long k = std::lround(double(start) * std::pow(growth, l));
            if (!ks.empty() && k <= ks.back()) k = ks.back() + 1;
            if (k + 1 > max_periods) break;
            ks.push_back(k);
        }
        if (ks.size() < 5 || ledger.position(start) <= 0.0) break;

        std::vector<double> x;
        std::vector<T> partial;
        std::vector<T> omega;
        bool all_zero = true;
        for (long k : ks) {
            x.push_back(ledger.position(k));
            partial.push_back(ledger.partial(k));
            omega.push_back(x.back() * (ledger.partial(k + 1) - partial.back()));
            if (omega.back() != T{}) all_zero = false;
        }
        if (all_zero) {
            best.value = partial.back();
            best.error_estimate = ledger.panel_error();
            best.converged = ledger.panels_converged();
            best.evaluations = ledger.evaluations();
            return best;
        }
        for (auto& w : omega)
            if (w == T{}) w = T(std::numeric_limits<double>::min());

        const auto diag = w_algorithm(x, partial, omega);
        for (std::size_t n = 2; n < diag.size(); ++n) {
            const double diff = std::max(std::abs(diag[n] - diag[n - 1]), std::abs(diag[n - 1] - diag[n - 2]));
            if (std::isfinite(diff) && diff < best_diff) {
                best_diff = diff;
                best.value = diag[n];
                have_best = true;
            }
        }
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(best.value));
        if (have_best && best_diff + ledger.panel_error() <= tol) {
            best.error_estimate = best_diff + ledger.panel_error();
            best.converged = ledger.panels_converged();
            best.evaluations = ledger.evaluations();
            return best;
        }
        start *= 2;
    }
    if (!have_best) {
        best.value = ledger.partial(std::min(start, max_periods));
        best_diff = std::abs(best.value);
    }
    best.error_estimate = best_diff + ledger.panel_error();
    best.converged = false;
    best.evaluations = ledger.evaluations();
    return best;
}

template <class T, class F>
BasicQuadratureResult<T> infinite_impl(const F& f, double lo, const QuadratureSpec& spec)
{
    spec.validate();
    if (!std::isfinite(lo)) throw DomainError("integrate_to_infinity: lo must be finite");
    if (spec.oscillation_period) return oscillatory_impl<T>(f, lo, *spec.oscillation_period, spec);
    return mapped_impl<T>(f, lo, spec);
}

}  // namespace

void QuadratureSpec::validate() const
{
    if (!(std::isfinite(abs_tol) && abs_tol > 0.0)) throw DomainError("QuadratureSpec: abs_tol must be positive");
    if (!(std::isfinite(rel_tol) && rel_tol > 0.0)) throw DomainError("QuadratureSpec: rel_tol must be positive");
    if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be at least 1");
    for (std::size_t i = 0; i < split_points.size(); ++i) {
        if (!std::isfinite(split_points[i])) throw DomainError("QuadratureSpec: split points must be finite");
        if (i > 0 && !(split_points[i] > split_points[i - 1]))
            throw DomainError("QuadratureSpec: split points must be strictly increasing");
    }
    if (oscillation_period && !(std::isfinite(*oscillation_period) && *oscillation_period > 0.0))
        throw DomainError("QuadratureSpec: oscillation period must be positive");
}

QuadratureResult integrate_finite(const Integrand& f, double lo, double hi, const QuadratureSpec& spec)
{
    return finite_impl<double>(f, lo, hi, spec);
}

ComplexQuadratureResult integrate_finite(const ComplexIntegrand& f, double lo, double hi,
                                         const QuadratureSpec& spec)
{
    return finite_impl<std::complex<double>>(f, lo, hi, spec);
}

QuadratureResult integrate_to_infinity(const Integrand& f, double lo, const QuadratureSpec& spec)
{
    return infinite_impl<double>(f, lo, spec);
}

ComplexQuadratureResult integrate_to_infinity(const ComplexIntegrand& f, double lo, const QuadratureSpec& spec)
{
    return infinite_impl<std::complex<double>>(f, lo, spec);
}

}  // namespace deltazeta::quad
