#include "lpq/numeric_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>

#include "lpq/errors.hpp"

namespace lpq {
namespace {

using MpReal = boost::multiprecision::mpfr_float;

template <class Matrix>
void balance(Matrix& a) {
  // Parlett-Reinsch: scale rows/columns by powers of 2 until row and column
  // norms match within 5%. Graded companion matrices are useless without it.
  using S = typename Matrix::Scalar;
  using std::abs;
  const int n = static_cast<int>(a.rows());
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      S c = 0;
      S r = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) {
          c += abs(a(j, i));
          r += abs(a(i, j));
        }
      }
      if (c == 0 || r == 0) {
        continue;
      }
      S g = r / 2;
      S f = 1;
      const S s = c + r;
      while (c < g) {
        f *= 2;
        c *= 4;
      }
      g = r * 2;
      while (c > g) {
        f /= 2;
        c /= 4;
      }
      if ((c + r) / f < S(0.95) * s) {
        done = false;
        for (int j = 0; j < n; ++j) {
          a(i, j) /= f;
          a(j, i) *= f;
        }
      }
    }
  }
}

template <class S>
S from_rational(const Rational& q);

template <>
double from_rational<double>(const Rational& q) {
  return to_double(q);
}

template <>
MpReal from_rational<MpReal>(const Rational& q) {
  MpReal num(q.get_num().get_mpz_t());
  MpReal den(q.get_den().get_mpz_t());
  return num / den;
}

template <class S>
RootCensus census(const RealPolynomial& p, const S& threshold, double trust_radius) {
  if (p.is_zero()) {
    throw InputError("root census of the zero polynomial");
  }
  using std::abs;
  using std::sqrt;
  RootCensus out;
  out.degree = p.degree();
  // Zero roots are factored off exactly.
  int zeros = 0;
  while (p.coefficient(zeros) == 0) {
    ++zeros;
  }
  const int n = p.degree() - zeros;
  out.real_count = zeros;
  for (int i = 0; i < zeros; ++i) {
    out.roots.emplace_back(0.0, 0.0);
  }
  if (n == 0) {
    return out;
  }
  using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix c = Matrix::Zero(n, n);
  const S lead = from_rational<S>(p.leading());
  for (int i = 1; i < n; ++i) {
    c(i, i - 1) = 1;
  }
  for (int i = 0; i < n; ++i) {
    c(i, n - 1) = -from_rational<S>(p.coefficient(i + zeros)) / lead;
  }
  balance(c);
  Eigen::EigenSolver<Matrix> solver(c, false);
  if (solver.info() != Eigen::Success) {
    throw InconclusiveError("companion eigenvalue iteration did not converge");
  }
  const auto ev = solver.eigenvalues();
  for (int i = 0; i < n; ++i) {
    const S re = ev(i).real();
    const S im = ev(i).imag();
    const S mod = sqrt(re * re + im * im);
    const double re_d = static_cast<double>(re);
    const double im_d = static_cast<double>(im);
    out.roots.emplace_back(re_d, im_d);
    if (abs(im) < threshold * (1 + mod)) {
      ++out.real_count;
    } else {
      ++out.nonreal_count;
      if (im > 0 && static_cast<double>(mod) < trust_radius) {
        ++out.nonreal_pairs_inside;
      }
    }
  }
  return out;
}

}  // namespace

RootCensus oracle_census_double(const RealPolynomial& p, double trust_radius) {
  return census<double>(p, std::sqrt(std::numeric_limits<double>::epsilon()), trust_radius);
}

RootCensus oracle_census(const RealPolynomial& p, int digits, double trust_radius) {
  const unsigned saved = MpReal::default_precision();
  MpReal::default_precision(static_cast<unsigned>(digits));
  try {
    const MpReal threshold = pow(MpReal(10), -digits / 4);
    RootCensus out = census<MpReal>(p, threshold, trust_radius);
    MpReal::default_precision(saved);
    return out;
  } catch (...) {
    MpReal::default_precision(saved);
    throw;
  }
}

RootCensus oracle_census_auto(const RealPolynomial& p) {
  RootCensus out = oracle_census_double(p);
  const double threshold = std::sqrt(std::numeric_limits<double>::epsilon());
  for (const auto& z : out.roots) {
    const double scaled = std::abs(z.imag()) / (1 + std::abs(z));
    if (scaled > threshold / 100 && scaled < threshold * 100) {
      return oracle_census(p, 60);
    }
  }
  return out;
}

}  // namespace lpq
