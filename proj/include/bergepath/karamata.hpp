#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bergepath/error.hpp"

namespace bergepath {

struct KaramataResult {
  bool majorizes = false;
  bool inequality_holds = false;
};

/// Second differences of a value table, f(t+1) - 2 f(t) + f(t-1) >= 0.
template <class T>
bool is_convex_table(std::span<const T> f) {
  for (std::size_t t = 1; t + 1 < f.size(); ++t)
    if (f[t + 1] + f[t - 1] < f[t] + f[t]) return false;
  return true;
}

/// Majorization of y by x (both sorted non-increasing here) and the comparison
/// sum f(x_i) >= sum f(y_i) for a convex f tabulated on 0, 1, ..., |f| - 1.
///
/// T must be an exact ordered ring type (integers, or a rational); the
/// convex + majorizes => holds implication is enforced and a violation is a
/// logic error, not a data error.
template <class T>
KaramataResult karamata_check(std::span<const T> f, std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  if (x.size() != y.size()) throw error(errc::invalid_input, "sequences must have equal length");
  if (!is_convex_table(f)) throw error(errc::convexity_violation, "value table is not convex");
  auto in_domain = [&](std::int64_t v) { return v >= 0 && static_cast<std::size_t>(v) < f.size(); };
  if (!std::all_of(x.begin(), x.end(), in_domain) || !std::all_of(y.begin(), y.end(), in_domain))
    throw error(errc::invalid_input, "sequence value outside the tabulated domain");

  std::vector<std::int64_t> xs(x.begin(), x.end()), ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());

  KaramataResult out;
  out.majorizes = true;
  std::int64_t px = 0, py = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    px += xs[i];
    py += ys[i];
    if (px < py) out.majorizes = false;
  }
  if (px != py) out.majorizes = false;

  T fx{}, fy{};
  for (auto v : xs) fx = fx + f[static_cast<std::size_t>(v)];
  for (auto v : ys) fy = fy + f[static_cast<std::size_t>(v)];
  out.inequality_holds = !(fx < fy);

  if (out.majorizes && !out.inequality_holds)
    throw std::logic_error("majorization with a convex table must give sum f(x) >= sum f(y)");
  return out;
}

template <class T>
KaramataResult karamata_check(const std::vector<T>& f, const std::vector<std::int64_t>& x,
                              const std::vector<std::int64_t>& y) {
  return karamata_check(std::span<const T>(f), std::span<const std::int64_t>(x), std::span<const std::int64_t>(y));
}

}  // namespace bergepath
