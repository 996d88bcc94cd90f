#include "fusion/polynomial.hpp"

#include "fusion/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fusion {

namespace {

void enumerate_rec(int pos, int remaining, Exponent& cur, std::vector<Exponent>& out) {
  const int d = static_cast<int>(cur.size());
  if (pos == d - 1) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    enumerate_rec(pos + 1, remaining - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponent> enumerate_monomials(int d, int degree) {
  std::vector<Exponent> out;
  if (d < 1 || degree < 0) return out;
  Exponent cur(static_cast<std::size_t>(d), 0);
  enumerate_rec(0, degree, cur, out);
  return out;
}

HomogeneousPoly::HomogeneousPoly(int ambient_dim, int degree) : d_(ambient_dim), degree_(degree) {
  if (ambient_dim < 1 || degree < 0) {
    throw Error(Errc::DimensionError, "polynomial needs d >= 1 and degree >= 0");
  }
}

HomogeneousPoly HomogeneousPoly::quadratic_form(const Matrix& q) {
  const int d = static_cast<int>(q.rows());
  HomogeneousPoly out(d, 2);
  Exponent e(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < d; ++i) {
    e[i] = 2;
    out.add_term(e, q(i, i));
    e[i] = 0;
    for (int j = i + 1; j < d; ++j) {
      e[i] = 1;
      e[j] = 1;
      out.add_term(e, q(i, j) + q(j, i));
      e[i] = 0;
      e[j] = 0;
    }
  }
  return out;
}

HomogeneousPoly HomogeneousPoly::sphere_power(int d, int p) {
  return quadratic_form(Matrix::Identity(d, d)).pow(p);
}

void HomogeneousPoly::check_exponent(const Exponent& e) const {
  if (static_cast<int>(e.size()) != d_ ||
      std::accumulate(e.begin(), e.end(), 0) != degree_) {
    throw Error(Errc::DimensionError, "exponent vector does not match polynomial shape");
  }
}

double HomogeneousPoly::coeff(const Exponent& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? 0.0 : it->second;
}

void HomogeneousPoly::add_term(const Exponent& e, double c) {
  check_exponent(e);
  if (c == 0.0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) coeffs_.erase(it);
  }
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& other) {
  if (other.d_ != d_ || other.degree_ != degree_) {
    throw Error(Errc::DimensionError, "adding polynomials of different shape");
  }
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator-=(const HomogeneousPoly& other) {
  if (other.d_ != d_ || other.degree_ != degree_) {
    throw Error(Errc::DimensionError, "subtracting polynomials of different shape");
  }
  for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator*=(double s) {
  if (s == 0.0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, c] : coeffs_) c *= s;
  return *this;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.d_ != b.d_) throw Error(Errc::DimensionError, "multiplying polynomials in different d");
  HomogeneousPoly out(a.d_, a.degree_ + b.degree_);
  Exponent e(static_cast<std::size_t>(a.d_), 0);
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      for (int i = 0; i < a.d_; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.coeffs_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0.0; });
  return out;
}

HomogeneousPoly HomogeneousPoly::pow(int p) const {
  if (p < 0) throw Error(Errc::ParameterError, "negative polynomial power");
  HomogeneousPoly out(d_, 0);
  out.add_term(Exponent(static_cast<std::size_t>(d_), 0), 1.0);
  for (int i = 0; i < p; ++i) out = out * *this;
  return out;
}

double HomogeneousPoly::evaluate(const Vector& x) const {
  if (x.size() != d_) throw Error(Errc::DimensionError, "evaluation point has wrong length");
  double total = 0.0;
  for (const auto& [e, c] : coeffs_) {
    double term = c;
    for (int i = 0; i < d_; ++i) {
      if (e[i] != 0) term *= std::pow(x(i), e[i]);
    }
    total += term;
  }
  return total;
}

double HomogeneousPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace fusion
