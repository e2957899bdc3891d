#include "wick/scalar.hpp"

#include "wick/error.hpp"

namespace wick {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw MathError("zero divisor");
  return Scalar(mpq_class(num, den));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw MathError("zero divisor");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) < 0) {
    mpq_class mag = -im_;
    std::string m = mag == 1 ? "i" : mag.get_str() + "*i";
    return "(" + re_.get_str() + " - " + m + ")";
  }
  return "(" + re_.get_str() + " + " + imag + ")";
}

}  // namespace wick
