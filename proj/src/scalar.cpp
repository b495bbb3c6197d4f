#include "symlie/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace symlie {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (is_real()) return Scalar(1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  if (a.is_real() && b.is_real()) {
    re_ -= a.re_ * b.re_;
    return;
  }
  *this -= a * b;
}

bool Scalar::prints_negative() const {
  if (sgn(re_) != 0) return sgn(re_) < 0;
  return sgn(im_) < 0;
}

namespace {

std::string imaginary_part(const mpq_class& im) {
  // im is nonzero; sign handled by the caller.
  mpq_class a = abs(im);
  if (a == 1) return "i";
  return a.get_str() + "*i";
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imaginary_part(im_);
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imaginary_part(im_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace symlie
