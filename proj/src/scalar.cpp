#include "kappa/scalar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kappa {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero Gaussian rational");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
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
  if (imag[0] == '-') return re_.get_str() + " - " + imag.substr(1);
  return re_.get_str() + " + " + imag;
}

Scalar::Scalar(GaussianRational c, int lambda_power) {
  if (!c.is_zero()) terms_.emplace_back(lambda_power, std::move(c));
}

int Scalar::min_power() const { return terms_.empty() ? 0 : terms_.front().first; }
int Scalar::max_power() const { return terms_.empty() ? 0 : terms_.back().first; }

Scalar Scalar::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("scalar is not a unit of the Laurent ring");
  return {terms_[0].second.inverse(), -terms_[0].first};
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  for (auto& [k, c] : r.terms_) c = c.conj();
  return r;
}

void Scalar::add_term(int power, const GaussianRational& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), power,
                             [](const Term& t, int p) { return t.first < p; });
  if (it != terms_.end() && it->first == power) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (!c.is_zero()) {
    terms_.insert(it, Term{power, c});
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    r.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
    return r;
  }
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Scalar exact_div(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero scalar");
  if (b.is_unit()) return a * b.unit_inverse();
  // Long division from the top exponent down.
  std::map<int, GaussianRational> rem;
  for (const auto& [k, c] : a.terms_) rem.emplace(k, c);
  const auto& [bk, bc] = b.terms_.back();
  const int b_low = b.terms_.front().first;
  GaussianRational lead_inv = bc.inverse();
  Scalar q;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (top->first - bk < rem.begin()->first - b_low) break;
    int shift = top->first - bk;
    GaussianRational f = top->second * lead_inv;
    q.add_term(shift, f);
    for (const auto& [k, c] : b.terms_) {
      auto [it, inserted] = rem.try_emplace(k + shift, GaussianRational());
      it->second -= f * c;
      if (it->second.is_zero()) rem.erase(it);
    }
  }
  if (!rem.empty()) throw std::domain_error("inexact scalar division");
  return q;
}

namespace {

std::string lambda_power_string(int k) {
  if (k == -1) return "k";
  if (k < 0) return "k^" + std::to_string(-k);
  return "k^-" + std::to_string(k);
}

std::string term_string(int k, const GaussianRational& c) {
  if (k == 0) return c.to_string();
  std::string p = lambda_power_string(k);
  if (c.is_one()) return p;
  if (c == GaussianRational(-1)) return "-" + p;
  if (sgn(c.re()) != 0 && sgn(c.im()) != 0) return "(" + c.to_string() + ")*" + p;
  return c.to_string() + "*" + p;
}

}  // namespace

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string t = term_string(k, c);
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

bool Scalar::needs_parens() const {
  if (terms_.size() > 1) return true;
  if (terms_.size() == 1) {
    const auto& [k, c] = terms_[0];
    return k == 0 && sgn(c.re()) != 0 && sgn(c.im()) != 0;
  }
  return false;
}

}  // namespace kappa
