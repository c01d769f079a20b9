#include "moduli/power_series.hpp"

#include <algorithm>
#include <sstream>

namespace moduli {

namespace {
int min_order(const PowerSeries& a, const PowerSeries& b) {
    return std::min(a.order(), b.order());
}
}  // namespace

bool PowerSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order >= this->order()) {
        PowerSeries r(variable_, order);
        for (int i = 0; i <= this->order(); ++i) r.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)];
        return r;
    }
    PowerSeries r(variable_, order);
    for (int i = 0; i <= order; ++i) r.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)];
    return r;
}

PowerSeries PowerSeries::inflated_even(std::string variable) const {
    PowerSeries r(std::move(variable), 2 * order());
    for (int i = 0; i <= order(); ++i) r.set(2 * i, coeffs_[static_cast<size_t>(i)]);
    return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    int n = min_order(*this, o);
    coeffs_.resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) coeffs_[static_cast<size_t>(i)] += o[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    int n = min_order(*this, o);
    coeffs_.resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) coeffs_[static_cast<size_t>(i)] -= o[i];
    return *this;
}

PowerSeries operator-(const PowerSeries& a) {
    PowerSeries r(a.variable_, a.order());
    for (int i = 0; i <= a.order(); ++i) r.coeffs_[static_cast<size_t>(i)] = -a[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int n = min_order(a, b);
    PowerSeries r(a.variable_, n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            r.coeffs_[static_cast<size_t>(i + j)] += a[i] * b[j];
    return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    if (b[0].is_zero()) throw std::domain_error("non-unit divisor");
    int n = min_order(a, b);
    PowerSeries q(a.variable_, n);
    for (int i = 0; i <= n; ++i) {
        Rational acc = (i <= a.order()) ? a[i] : Rational(0);
        for (int j = 0; j < i; ++j) acc -= q[j] * b[i - j];
        q.coeffs_[static_cast<size_t>(i)] = acc / b[0];
    }
    return q;
}

PowerSeries operator*(const Rational& c, PowerSeries a) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
}

std::string PowerSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= order(); ++i) {
        if (coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        Rational abs = c.sign() < 0 ? -c : c;
        if (i == 0) {
            os << abs.str();
        } else {
            if (abs != Rational(1)) os << abs.str() << " ";
            os << variable_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

PowerSeries exp(const PowerSeries& a) {
    if (!a[0].is_zero()) throw std::domain_error("exp of series with nonzero constant term");
    int n = a.order();
    PowerSeries y(a.variable(), n);
    y.set(0, 1);
    // y' = a' y termwise: n y_n = sum_{k=1..n} k a_k y_{n-k}.
    for (int i = 1; i <= n; ++i) {
        Rational acc(0);
        for (int k = 1; k <= i; ++k) acc += Rational(k) * a[k] * y[i - k];
        y.set(i, acc / Rational(i));
    }
    return y;
}

PowerSeries log(const PowerSeries& a) {
    if (a[0] != Rational(1)) throw std::domain_error("log of series with constant term != 1");
    int n = a.order();
    PowerSeries l(a.variable(), n);
    // From a = exp(l): n a_n = sum_{k=1..n} k l_k a_{n-k}.
    for (int i = 1; i <= n; ++i) {
        Rational acc = Rational(i) * a[i];
        for (int k = 1; k < i; ++k) acc -= Rational(k) * l[k] * a[i - k];
        l.set(i, acc / Rational(i));
    }
    return l;
}

PowerSeries derivative(const PowerSeries& a) {
    int n = std::max(a.order() - 1, 0);
    PowerSeries r(a.variable(), n);
    for (int i = 1; i <= a.order(); ++i) r.set(i - 1, Rational(i) * a[i]);
    return r;
}

PowerSeries shifted_up(const PowerSeries& a, int k) {
    PowerSeries r(a.variable(), a.order());
    for (int i = 0; i + k <= a.order(); ++i) r.set(i + k, a[i]);
    return r;
}

namespace {
// v/sinh(v) indexed by v^2, degrees 0..order in v.
PowerSeries v_over_sinh_v(const std::string& label, int order) {
    int n = order / 2;
    PowerSeries sinh_over_v(label, n);  // sinh(v)/v, coefficient i at v^{2i}
    for (int i = 0; i <= n; ++i) sinh_over_v.set(i, Rational(Int(1), factorial(2 * i + 1)));
    PowerSeries one(label, n);
    one.set(0, 1);
    return one / sinh_over_v;
}
}  // namespace

PowerSeries t_over_sinh_t(int order) { return v_over_sinh_v("t2", order); }

PowerSeries u_over_sinh_u_power(int m, int order) {
    if (m < 0) throw std::domain_error("negative power of u/sinh u");
    int n = order / 2;
    PowerSeries base = v_over_sinh_v("u2", order);
    PowerSeries r("u2", n);
    r.set(0, 1);
    for (int i = 0; i < m; ++i) r = r * base;
    return r;
}

PowerSeries sinh_ku_over_u(long k, int order) {
    int n = order / 2;
    PowerSeries r("u2", n);
    for (int i = 0; i <= n; ++i) {
        Int kp;
        mpz_pow_ui(kp.get_mpz_t(), Int(k).get_mpz_t(), static_cast<unsigned long>(2 * i + 1));
        r.set(i, Rational(kp, factorial(2 * i + 1)));
    }
    return r;
}

PowerSeries two_cosh_sqrt(int order) {
    int n = order / 2;
    PowerSeries r("b", n);
    for (int i = 0; i <= n; ++i) r.set(i, Rational(Int(2), factorial(2 * i)));
    return r;
}

}  // namespace moduli
