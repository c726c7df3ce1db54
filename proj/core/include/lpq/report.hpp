#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <nlohmann/json.hpp>
#include <string>
#include <thread>
#include <vector>

#include "lpq/classify.hpp"
#include "lpq/partial_theta.hpp"
#include "lpq/series.hpp"
#include "lpq/sturm.hpp"

namespace lpq {

/// fn(0..n-1) on up to `jobs` threads; results in index order. The first
/// exception (lowest index) is rethrown after all workers stop.
template <class F>
auto parallel_map(int jobs, std::size_t n, F fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, jobs));
  if (threads == 1 || n < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(threads, n); ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

/// Decimal with `digits` significant digits rounded down (up), so that a
/// printed [lower, upper] pair encloses the value.
std::string format_lower(const Rational& x, int digits = 20);
std::string format_upper(const Rational& x, int digits = 20);

/// Header "n,p_n,q_n"; q_1 is empty.
std::string quotients_csv(const QuotientProfile& profile);
/// Header "n,c_n_lo,c_n_hi".
std::string cn_csv(const std::vector<ThetaSectionConstant>& constants);
/// Header "k,a_lo,a_hi".
std::string spectrum_csv(const std::vector<SpectrumPoint>& points);
/// Header "m,n,z_c,negative,simple".
std::string hutchinson_csv(const HutchinsonReport& report);

nlohmann::json to_json(const QuotientProfile& profile);
nlohmann::json to_json(const HyperbolicityReport& report);
nlohmann::json to_json(const ThetaSectionConstant& c);
nlohmann::json to_json(const QinfBracket& b);
nlohmann::json to_json(const SpectrumPoint& p);
nlohmann::json to_json(const HutchinsonReport& r);
nlohmann::json to_json(const Classification& c);

}  // namespace lpq
