#include "lpq/sturm.hpp"

#include <algorithm>
#include <functional>

#include "lpq/errors.hpp"

namespace lpq {
namespace {

using IntPoly = std::vector<Integer>;

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

void make_primitive(IntPoly& p) {
  Integer content = 0;
  for (const auto& v : p) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  if (content > 1) {
    for (auto& v : p) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    }
  }
}

// Remainder of |lc(b)|^k * a by b for some k >= 0; a positive scale keeps Sturm signs.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = degree(b);
  const Integer& lc = b.back();
  const Integer abs_lc = lc < 0 ? Integer(-lc) : lc;
  while (degree(a) >= db) {
    const Integer lead = a.back();
    const int shift = degree(a) - db;
    for (auto& v : a) {
      v *= abs_lc;
    }
    // lc(b) * lead / |lc(b)| = sign(lc) * lead.
    const Integer factor = lc < 0 ? Integer(-lead) : lead;
    for (int j = 0; j <= db; ++j) {
      a[static_cast<std::size_t>(shift + j)] -= factor * b[static_cast<std::size_t>(j)];
    }
    trim(a);
  }
  return a;
}

int sign_at(const IntPoly& p, const Endpoint& x) {
  if (p.empty()) {
    return 0;
  }
  switch (x.kind) {
    case Endpoint::Kind::pos_inf:
      return sgn(p.back());
    case Endpoint::Kind::neg_inf:
      return (degree(p) % 2 == 0) ? sgn(p.back()) : -sgn(p.back());
    case Endpoint::Kind::finite:
      break;
  }
  const Integer& num = x.value.get_num();
  const Integer& den = x.value.get_den();
  Integer acc = p.back();
  Integer qpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    qpow *= den;
    acc = acc * num + p[i] * qpow;
  }
  return sgn(acc);
}

RealPolynomial squarefree_part(const RealPolynomial& p) {
  if (p.degree() < 1) {
    return p;
  }
  const RealPolynomial g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

Integer cauchy_bound(const RealPolynomial& p) {
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) {
    m = std::max(m, abs(Rational(p.coefficient(k) / p.leading())));
  }
  Integer b = 1;
  while (b <= m + 1) {
    b *= 2;
  }
  return b;
}

}  // namespace

SturmChain::SturmChain(const RealPolynomial& p) {
  if (p.is_zero()) {
    throw InputError("Sturm chain of the zero polynomial");
  }
  const RealPolynomial sf = squarefree_part(p);
  IntPoly a = primitive_integer_coefficients(sf);
  chain_.push_back(a);
  if (degree(a) < 1) {
    return;
  }
  IntPoly b = primitive_integer_coefficients(sf.derivative());
  while (!b.empty()) {
    chain_.push_back(b);
    IntPoly r = pseudo_remainder(a, b);
    for (auto& v : r) {
      v = -v;
    }
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
}

int SturmChain::variations(const Endpoint& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = sign_at(p, x);
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++changes;
    }
    last = s;
  }
  return changes;
}

int SturmChain::count(const Endpoint& lo, const Endpoint& hi) const {
  return variations(lo) - variations(hi);
}

int sturm_count(const RealPolynomial& p, const Endpoint& lo, const Endpoint& hi) {
  return SturmChain(p).count(lo, hi);
}

int real_root_count(const RealPolynomial& p) {
  if (p.is_zero()) {
    throw InputError("root count of the zero polynomial");
  }
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    total += mult * sturm_count(factor, Endpoint::neg_inf(), Endpoint::pos_inf());
  }
  return total;
}

HyperbolicityReport hyperbolicity_report(const RealPolynomial& p, const Rational& width) {
  if (p.is_zero()) {
    throw InputError("hyperbolicity report of the zero polynomial");
  }
  HyperbolicityReport report;
  report.degree = p.degree();
  if (p.degree() == 0) {
    report.all_negative = report.all_nonpositive = report.all_simple = true;
    return report;
  }

  const RealPolynomial sf = squarefree_part(p);
  const SturmChain chain(sf);
  const Integer bound = cauchy_bound(sf);

  std::vector<RootBracket> brackets;
  std::function<void(const Rational&, const Rational&, int)> split =
      [&](const Rational& lo, const Rational& hi, int n) {
        if (n == 0) {
          return;
        }
        if (n == 1) {
          if (sf(hi) == 0) {
            brackets.push_back({hi, hi, 1});
          } else {
            brackets.push_back({lo, hi, 1});
          }
          return;
        }
        const Rational mid = (lo + hi) / 2;
        const int left = chain.count(Endpoint::at(lo), Endpoint::at(mid));
        split(lo, mid, left);
        split(mid, hi, n - left);
      };
  const Rational b(bound);
  const int negative = chain.count(Endpoint::at(-b), Endpoint::at(Rational(0)));
  const int positive = chain.count(Endpoint::at(Rational(0)), Endpoint::at(b));
  split(-b, Rational(0), negative);
  split(Rational(0), b, positive);

  for (auto& br : brackets) {
    while (br.lo != br.hi && br.hi - br.lo > width) {
      const Rational mid = (br.lo + br.hi) / 2;
      if (sf(mid) == 0) {
        br.lo = br.hi = mid;
        break;
      }
      if (chain.count(Endpoint::at(br.lo), Endpoint::at(mid)) == 1) {
        br.hi = mid;
      } else {
        br.lo = mid;
      }
    }
  }

  const auto factors = squarefree_decomposition(p);
  for (auto& br : brackets) {
    for (const auto& [factor, mult] : factors) {
      const bool hit = br.lo == br.hi
                           ? factor(br.hi) == 0
                           : sturm_count(factor, Endpoint::at(br.lo), Endpoint::at(br.hi)) == 1;
      if (hit) {
        br.multiplicity = mult;
        break;
      }
    }
    report.real_root_count += br.multiplicity;
  }
  report.z_c = report.degree - report.real_root_count;
  report.all_simple = std::all_of(brackets.begin(), brackets.end(),
                                  [](const RootBracket& br) { return br.multiplicity == 1; });
  const bool nonpositive = std::all_of(brackets.begin(), brackets.end(),
                                       [](const RootBracket& br) { return br.hi <= 0; });
  // An open bracket (lo, 0] excludes 0 because exact roots are recorded as points.
  const bool negative_only =
      std::all_of(brackets.begin(), brackets.end(), [](const RootBracket& br) {
        return br.lo == br.hi ? br.hi < 0 : br.hi <= 0;
      });
  report.all_nonpositive = report.z_c == 0 && nonpositive;
  report.all_negative = report.z_c == 0 && negative_only;
  report.brackets = std::move(brackets);
  return report;
}

CzdsResult czds_check(const std::vector<Rational>& gamma, const RealPolynomial& p) {
  if (p.is_zero()) {
    throw InputError("CZDS check of the zero polynomial");
  }
  if (gamma.size() < static_cast<std::size_t>(p.degree()) + 1) {
    throw InputError("multiplier sequence needs at least degree + 1 entries");
  }
  CzdsResult r;
  r.z_c_before = p.degree() - real_root_count(p);
  const RealPolynomial q = p.termwise(gamma);
  r.z_c_after = q.is_zero() ? 0 : q.degree() - real_root_count(q);
  r.satisfied = r.z_c_after <= r.z_c_before;
  return r;
}

}  // namespace lpq
