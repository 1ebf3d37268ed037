#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "asymcg/error.hpp"

namespace asymcg {

using BigRational = boost::multiprecision::cpp_rational;

/// Element of Q(i): exact field arithmetic, no rounding anywhere.
struct GaussianRational {
    BigRational re;
    BigRational im;

    GaussianRational() = default;
    GaussianRational(BigRational r, BigRational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(int r) : re(r) {}

    static GaussianRational i_unit() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    BigRational norm_sq() const { return re * re + im * im; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        BigRational n = o.norm_sq();
        if (n == 0) throw Error(ErrorKind::Internal, "division by zero in Q(i)");
        GaussianRational num = *this * o.conj();
        return {num.re / n, num.im / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    bool operator==(const GaussianRational&) const = default;

    std::complex<double> to_complex() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }

    std::string str() const {
        std::string s = re.str();
        if (im != 0) {
            s += (im > 0 ? "+" : "-");
            BigRational m = abs(im);
            if (m != 1) s += m.str() + "*";
            s += "i";
        }
        return s;
    }
};

} // namespace asymcg
