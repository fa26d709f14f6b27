#include "tequi/int_polynomial.hpp"

#include <cmath>
#include <sstream>

#include "tequi/errors.hpp"

namespace tequi {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::from_coeffs(const std::vector<long>& coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::parse_text(const std::string& text) {
    std::istringstream in(text);
    long d = -1;
    char colon = 0;
    if (!(in >> d >> colon) || colon != ':')
        throw DegenerateInput("polynomial text must start with \"<degree>:\"");
    if (d < 1) throw DegenerateInput("polynomial degree must be at least 1");
    std::vector<mpz_class> c;
    c.reserve(static_cast<std::size_t>(d) + 1);
    std::string tok;
    for (long j = 0; j <= d; ++j) {
        if (!(in >> tok))
            throw DegenerateInput("polynomial text needs degree+1 coefficient tokens");
        mpz_class v;
        if (v.set_str(tok, 10) != 0)
            throw DegenerateInput("bad integer token '" + tok + "' in polynomial text");
        c.push_back(std::move(v));
    }
    if (in >> tok) throw DegenerateInput("trailing tokens after polynomial coefficients");
    if (c.back() == 0) throw DegenerateInput("leading coefficient must be nonzero");
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_text() const {
    std::ostringstream out;
    out << degree() << ':';
    for (const auto& v : c_) out << ' ' << v.get_str();
    return out.str();
}

const mpz_class& IntPolynomial::coeff(int j) const {
    if (j < 0 || j > degree()) return kZero;
    return c_[static_cast<std::size_t>(j)];
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() < 1) return IntPolynomial();
    std::vector<mpz_class> c(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) c[j - 1] = c_[j] * static_cast<long>(j);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reflected() const {
    std::vector<mpz_class> c = c_;
    for (std::size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reversed() const {
    if (is_zero() || c_.front() == 0)
        throw DegenerateInput("reversal requires a nonzero constant term");
    std::vector<mpz_class> c(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(c));
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> z) const {
    std::complex<double> p = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) p = p * z + it->get_d();
    return p;
}

void IntPolynomial::evaluate_with_derivative(std::complex<double> z, std::complex<double>& p,
                                             std::complex<double>& dp) const {
    p = 0.0;
    dp = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + it->get_d();
    }
}

IntPolynomial::DoubleView IntPolynomial::double_view() const {
    DoubleView view;
    view.coeffs.assign(c_.size(), 0.0);
    long max_exp = 0;
    bool any = false;
    for (const auto& v : c_) {
        if (v == 0) continue;
        long e = 0;
        mpz_get_d_2exp(&e, v.get_mpz_t());
        if (!any || e > max_exp) max_exp = e;
        any = true;
    }
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        long e = 0;
        const double m = mpz_get_d_2exp(&e, c_[j].get_mpz_t());
        view.coeffs[j] = std::ldexp(m, static_cast<int>(e - max_exp));
        view.nonzero.push_back(static_cast<int>(j));
        view.norm1 += std::fabs(view.coeffs[j]);
    }
    return view;
}

namespace {

// Exact pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B, all in Z[x].
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const auto degb = static_cast<long>(b.size()) - 1;
    const mpz_class& lb = b.back();
    long dega = static_cast<long>(a.size()) - 1;
    while (dega >= degb) {
        const mpz_class top = a.back();
        for (long j = 0; j < dega; ++j) a[static_cast<std::size_t>(j)] *= lb;
        for (long j = 0; j <= degb - 1; ++j)
            a[static_cast<std::size_t>(dega - degb + j)] -= top * b[static_cast<std::size_t>(j)];
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        dega = static_cast<long>(a.size()) - 1;
    }
    return a;
}

void divide_out_content(std::vector<mpz_class>& a) {
    mpz_class g = 0;
    for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

bool squarefree_check(const IntPolynomial& p) {
    if (p.degree() < 1) throw DegenerateInput("squarefree test needs degree >= 1");
    if (p.degree() == 1) return true;
    // Primitive pseudo-remainder sequence for gcd(P, P').  Content is divided
    // out at each step; that changes nothing about the gcd degree and keeps
    // coefficient growth polynomial.
    std::vector<mpz_class> r0, r1;
    for (int j = 0; j <= p.degree(); ++j) r0.push_back(p.coeff(j));
    const IntPolynomial dp = p.derivative();
    for (int j = 0; j <= dp.degree(); ++j) r1.push_back(dp.coeff(j));
    divide_out_content(r0);
    divide_out_content(r1);
    while (true) {
        std::vector<mpz_class> r = pseudo_rem(r0, r1);
        if (r.empty()) return r1.size() == 1;  // gcd ~ r1; constant iff degree 0
        divide_out_content(r);
        r0 = std::move(r1);
        r1 = std::move(r);
        if (r1.size() == 1) return true;  // gcd is a nonzero constant
    }
}

}  // namespace tequi
