#include "hyperclass/gauss_rational.hpp"

#include "hyperclass/errors.hpp"

namespace hyperclass {

GaussRational::GaussRational(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw DomainError("zero denominator");
    re_.canonicalize();
}

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussRational GaussRational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw DomainError("not a rational literal: " + s);
    if (q.get_den() == 0) throw DomainError("zero denominator: " + s);
    q.canonicalize();
    return GaussRational(q);
}

bool GaussRational::is_integer() const { return sgn(im_) == 0 && re_.get_den() == 1; }

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string GaussRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string im_part;
    if (im_ == 1)
        im_part = "i";
    else if (im_ == -1)
        im_part = "-i";
    else
        im_part = im_.get_str() + "i";
    if (sgn(re_) == 0) return im_part;
    std::string sep = (sgn(im_) > 0) ? "+" : "";
    return "(" + re_.get_str() + sep + im_part + ")";
}

}  // namespace hyperclass
