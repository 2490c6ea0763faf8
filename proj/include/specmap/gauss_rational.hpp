#ifndef SPECMAP_GAUSS_RATIONAL_HPP
#define SPECMAP_GAUSS_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace specmap {

/// Complex scalar a+bi with arbitrary-precision rational a, b.
/// mpq_class keeps fractions canonical (reduced, positive denominator),
/// so all arithmetic here is closed and exact.
struct GaussRational {
    mpq_class re;
    mpq_class im;

    GaussRational() : re(0), im(0) {}
    GaussRational(long v) : re(v), im(0) {} // NOLINT: implicit on purpose
    GaussRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational fromParts(long re_num, long re_den, long im_num, long im_den) {
        if (re_den == 0 || im_den == 0)
            throw std::domain_error("GaussRational: zero denominator");
        mpq_class r(re_num, re_den), i(im_num, im_den);
        r.canonicalize();
        i.canonicalize();
        return {r, i};
    }

    bool isZero() const { return re == 0 && im == 0; }

    GaussRational conj() const { return {re, -im}; }

    /// |z|^2, a rational.
    mpq_class normSq() const { return re * re + im * im; }

    std::complex<double> toComplex() const { return {re.get_d(), im.get_d()}; }

    std::string str() const {
        return re.get_str() + (sgn(im) < 0 ? "" : "+") + im.get_str() + "i";
    }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        mpq_class d = b.normSq();
        if (d == 0) throw std::domain_error("GaussRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    GaussRational& operator+=(const GaussRational& b) { re += b.re; im += b.im; return *this; }
    GaussRational& operator-=(const GaussRational& b) { re -= b.re; im -= b.im; return *this; }
    GaussRational& operator*=(const GaussRational& b) { *this = *this * b; return *this; }
    GaussRational& operator/=(const GaussRational& b) { *this = *this / b; return *this; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

/// Nearest rational p/q to x with q <= maxDen (continued fractions).
/// Returns false when the best candidate misses x by more than tol.
bool rationalReconstruct(double x, long maxDen, double tol, mpq_class& out);

/// Entrywise reconstruction of a complex value.
bool rationalReconstruct(std::complex<double> z, long maxDen, double tol, GaussRational& out);

} // namespace specmap

#endif
