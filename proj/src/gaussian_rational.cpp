#include "levilab/gaussian_rational.hpp"

#include <cctype>

#include "levilab/errors.hpp"

namespace levilab {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    const mpq_class den = o.norm2();
    if (sgn(den) == 0)
        throw PreconditionError("GaussianRational: division by zero");
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / den;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::to_string() const
{
    if (sgn(im_) == 0)
        return re_.get_str();
    std::string out;
    if (sgn(re_) != 0) {
        out = re_.get_str();
        if (sgn(im_) > 0)
            out += '+';
    }
    return out + im_.get_str() + "*i";
}

GaussianRational rational(long num, long den)
{
    if (den == 0)
        throw PreconditionError("rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return {q, 0};
}

GaussianRational gaussian(long re_num, long re_den, long im_num, long im_den)
{
    return rational(re_num, re_den) + rational(im_num, im_den) * GaussianRational::i();
}

GaussianRational pow(const GaussianRational& base, int exponent)
{
    if (exponent < 0)
        return GaussianRational(1) / pow(base, -exponent);
    GaussianRational result(1);
    GaussianRational square = base;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1U)
            result *= square;
        if (e > 1)
            square *= square;
    }
    return result;
}

namespace {

mpq_class parse_rational(std::string text)
{
    if (text.empty() || text == "+")
        return 1;
    if (text == "-")
        return -1;
    if (text.front() == '+')
        text.erase(0, 1);
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw PreconditionError("parse_gaussian: malformed rational '" + text + "'");
    if (sgn(q.get_den()) == 0)
        throw PreconditionError("parse_gaussian: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

} // namespace

GaussianRational parse_gaussian(const std::string& raw)
{
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            text += c;
    if (text.empty())
        throw PreconditionError("parse_gaussian: empty input");
    if (text.back() != 'i')
        return {parse_rational(text), 0};

    text.pop_back();
    if (!text.empty() && text.back() == '*')
        text.pop_back();
    // split at the last sign that is not the leading one
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if (text[k] == '+' || text[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos)
        return {0, parse_rational(text)};
    return {parse_rational(text.substr(0, split)), parse_rational(text.substr(split))};
}

} // namespace levilab
