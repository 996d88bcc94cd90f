#include "fusion/jacobi.hpp"

#include "fusion/error.hpp"

#include <string>

namespace fusion {

namespace {

using Poly = std::vector<long double>;

long double inner(const Poly& f, const Poly& g, const std::vector<long double>& mom) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) s += f[i] * g[j] * mom[i + j];
  }
  return s;
}

Poly times_y(const Poly& f) {
  Poly out(f.size() + 1, 0.0L);
  for (std::size_t i = 0; i < f.size(); ++i) out[i + 1] = f[i];
  return out;
}

long double value_at_one(const Poly& f) {
  long double s = 0.0L;
  for (long double c : f) s += c;
  return s;
}

}  // namespace

std::vector<long double> beta_moments(double a, double b, int count) {
  std::vector<long double> mom(static_cast<std::size_t>(count));
  long double m = 1.0L;
  for (int i = 0; i < count; ++i) {
    mom[static_cast<std::size_t>(i)] = m;
    // E[y^{i+1}] / E[y^i] = (a + 1 + i) / (a + b + 2 + i)
    m *= (static_cast<long double>(a) + 1.0L + i) / (static_cast<long double>(a) + b + 2.0L + i);
  }
  return mom;
}

double JacobiFamily::evaluate(int l, double y) const {
  const auto& c = polys.at(static_cast<std::size_t>(l));
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * y + *it;
  return s;
}

JacobiFamily jacobi_family(int k, int d, int p_max) {
  const double ea = (k - 2) / 2.0;
  const double eb = (d - 2 - k) / 2.0;
  if (!(ea > -1.0) || !(eb > -1.0)) {
    throw Error(Errc::ParameterError, "weight exponents must exceed -1 (k=" + std::to_string(k) +
                                          ", d=" + std::to_string(d) + ")");
  }
  if (p_max < 0 || p_max > kJacobiMaxDegree) {
    throw Error(Errc::ParameterError, "p_max must be in [0, 10]");
  }

  const int top = p_max;
  // <y P_l, P_l> needs moments up to degree 2 p_max + 1.
  const auto mom = beta_moments(ea, eb, 2 * top + 2);

  std::vector<Poly> basis;
  std::vector<long double> norms;
  for (int l = 0; l <= top; ++l) {
    Poly q(static_cast<std::size_t>(l) + 1, 0.0L);
    q[static_cast<std::size_t>(l)] = 1.0L;
    // Two passes of classical Gram-Schmidt against the previous members.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const long double coef = inner(q, basis[j], mom) / norms[j];
        for (std::size_t i = 0; i < basis[j].size(); ++i) q[i] -= coef * basis[j][i];
      }
    }
    const long double at_one = value_at_one(q);
    for (auto& c : q) c /= at_one;
    norms.push_back(inner(q, q, mom));
    basis.push_back(std::move(q));
  }

  JacobiFamily fam;
  fam.k = k;
  fam.d = d;
  for (int l = 0; l <= p_max; ++l) {
    const Poly& q = basis[static_cast<std::size_t>(l)];
    fam.polys.emplace_back(q.begin(), q.end());
  }
  for (int l = 0; l < p_max; ++l) {
    const auto ul = static_cast<std::size_t>(l);
    const Poly yp = times_y(basis[ul]);
    Recurrence r;
    r.a = static_cast<double>(basis[ul].back() / basis[ul + 1].back());
    r.b = static_cast<double>(inner(yp, basis[ul], mom) / norms[ul]);
    r.c = l == 0 ? 0.0 : static_cast<double>(inner(yp, basis[ul - 1], mom) / norms[ul - 1]);
    fam.recurrence.push_back(r);
  }
  return fam;
}

}  // namespace fusion
