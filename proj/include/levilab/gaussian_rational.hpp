#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace levilab {

/// Exact element of Q(i), both parts arbitrary-precision rationals kept in
/// lowest terms.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational i() { return {0, 1}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// `p/q`, `p/q+r/s*i`, `r/s*i`.
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

/// num/den reduced to lowest terms.
GaussianRational rational(long num, long den = 1);

/// (re_num/re_den) + (im_num/im_den) i.
GaussianRational gaussian(long re_num, long re_den, long im_num, long im_den);

/// Integer power, negative exponents allowed for nonzero bases.
GaussianRational pow(const GaussianRational& base, int exponent);

/// Parses the output of GaussianRational::to_string.
GaussianRational parse_gaussian(const std::string& text);

} // namespace levilab
