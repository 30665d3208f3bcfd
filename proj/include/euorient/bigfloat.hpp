#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace euorient {
namespace analysis {

// Arbitrary-precision decimal float; working precision is a run-wide
// constant (>= 50 digits, default 250). MPFR precision defaults are
// thread-local, so worker threads must call ensure_thread_precision().
using BigFloat = boost::multiprecision::mpfr_float;

void set_working_precision(int digits);
int working_precision();
void ensure_thread_precision();

// Minimal complex arithmetic over BigFloat (root finding, exponents).
struct Complex {
    BigFloat re, im;

    Complex() : re(0), im(0) {}
    Complex(BigFloat r) : re(std::move(r)), im(0) {}
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& x, const Complex& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend Complex operator-(const Complex& x, const Complex& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend Complex operator*(const Complex& x, const Complex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend Complex operator/(const Complex& x, const Complex& y) {
        BigFloat d = y.re * y.re + y.im * y.im;
        return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
    }
    Complex& operator+=(const Complex& y) {
        re += y.re;
        im += y.im;
        return *this;
    }
    Complex& operator-=(const Complex& y) {
        re -= y.re;
        im -= y.im;
        return *this;
    }
};

inline BigFloat abs_c(const Complex& x) {
    return sqrt(BigFloat(x.re * x.re + x.im * x.im));
}

} // namespace analysis
} // namespace euorient
