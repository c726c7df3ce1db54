#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lpq::testing {

long double theta_naive(long double a, long double x) {
  long double sum = 0;
  for (int j = 0; j < 200; ++j) {
    const long double term = std::pow(x, j) * std::pow(a, -static_cast<long double>(j) * j);
    sum += term;
    if (j > 5 && std::fabs(term) < 1e-30L) {
      break;
    }
  }
  return sum;
}

long double alternating_grid_min(long double a2, int n, int samples) {
  long double best = 1e300L;
  for (int i = 1; i < samples; ++i) {
    const long double s = 1 + (a2 - 1) * i / samples;
    long double sum = 0;
    for (int j = 0; j <= n; ++j) {
      const long double sign = (j % 2 == 0) ? 1 : -1;
      sum += sign * std::pow(s, j) * std::pow(a2, -0.5L * j * (j - 1));
    }
    best = std::min(best, sum);
  }
  return best;
}

int discriminant_z_c(const RealPolynomial& p) {
  if (p.degree() == 2) {
    const Rational disc = p.coefficient(1) * p.coefficient(1) - 4 * p.coefficient(0) * p.coefficient(2);
    return disc < 0 ? 2 : 0;
  }
  if (p.degree() == 3) {
    const Rational a = p.coefficient(3);
    const Rational b = p.coefficient(2);
    const Rational c = p.coefficient(1);
    const Rational d = p.coefficient(0);
    const Rational disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
    return disc < 0 ? 2 : 0;
  }
  return p.degree() < 2 ? 0 : -1;
}

int grid_sign_changes(const RealPolynomial& p, double lo, double hi, int samples) {
  int changes = 0;
  int last = 0;
  for (int i = 0; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    double v = 0;
    for (int k = p.degree(); k >= 0; --k) {
      v = v * x + to_double(p.coefficient(k));
    }
    const int s = (v > 0) - (v < 0);
    if (s != 0 && last != 0 && s != last) {
      ++changes;
    }
    if (s != 0) {
      last = s;
    }
  }
  return changes;
}

RealPolynomial random_polynomial(std::mt19937_64& rng, int degree, int range) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) {
    v = coef(rng);
  }
  while (c.back() == 0) {
    c.back() = coef(rng);
  }
  return RealPolynomial(std::move(c));
}

RealPolynomial random_hyperbolic(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> num(1, 60);
  std::uniform_int_distribution<int> den(1, 7);
  std::set<Rational> roots;
  while (static_cast<int>(roots.size()) < degree) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    roots.insert(r);
  }
  RealPolynomial p({Rational(1)});
  for (const auto& r : roots) {
    p *= RealPolynomial({r, Rational(1)});
  }
  return p;
}

double s4_grid_min(double q2, double q3, double q4, int samples) {
  const double c[5] = {1, -1, 1 / q2, -1 / (q2 * q2 * q3), 1 / (q2 * q2 * q2 * q3 * q3 * q4)};
  double best = 1e300;
  for (int i = 0; i < samples; ++i) {
    const std::complex<double> z = std::polar(q2, 2 * M_PI * i / samples);
    std::complex<double> v = 0;
    for (int k = 4; k >= 0; --k) {
      v = v * z + c[k];
    }
    best = std::min(best, std::abs(v));
  }
  return best;
}

double r5_grid_max(double q2, double q3, double q4, int samples) {
  double best = 0;
  for (int i = 0; i < samples; ++i) {
    const std::complex<double> z = std::polar(q2, 2 * M_PI * i / samples);
    std::complex<double> v = 0;
    std::complex<double> zk = 1;
    double a = 1;
    double p = 1;
    for (int k = 1; k < 40; ++k) {
      if (k >= 2) {
        p *= (k == 2 ? q2 : k == 3 ? q3 : q4);
      }
      a /= p;
      zk *= z;
      if (k >= 5) {
        v += (k % 2 == 0 ? a : -a) * zk;
      }
    }
    best = std::max(best, std::abs(v));
  }
  return best;
}

}  // namespace lpq::testing
