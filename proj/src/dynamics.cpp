#include "kneading/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace kneading {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSlack = 1e-12;

std::string format_param(const char* name, double v) {
  std::ostringstream out;
  out.precision(17);
  out << name << "(" << v << ")";
  return out.str();
}

// Root of a continuous g with g(lo) and g(hi) of opposite signs.
double bisect(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  for (int i = 0; i < 200 && hi - lo > 0; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double gm = g(mid);
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

UnimodalMap logistic_map(double r) {
  if (!(r > 0 && r <= 4)) throw std::invalid_argument("logistic parameter must lie in (0, 4]");
  return {format_param("logistic", r), [r](double x) { return r * x * (1 - x); },
          [r](double x) { return r * (1 - 2 * x); }, 0.5, 1e-9};
}

UnimodalMap tent_map(double slope) {
  if (!(slope > 0 && slope <= 2)) throw std::invalid_argument("tent slope must lie in (0, 2]");
  return {format_param("tent", slope), [slope](double x) { return x < 0.5 ? slope * x : slope * (1 - x); },
          [slope](double x) { return x < 0.5 ? slope : -slope; }, 0.5, 1e-9};
}

UnimodalMap piecewise_linear_map(double c0, double height) {
  if (!(c0 > 0 && c0 < 1)) throw std::invalid_argument("critical point must lie in (0, 1)");
  if (!(height > 0 && height <= 1)) throw std::invalid_argument("height must lie in (0, 1]");
  const double up = height / c0, down = height / (1 - c0);
  std::ostringstream name;
  name.precision(17);
  name << "piecewise(" << c0 << "," << height << ")";
  return {name.str(), [=](double x) { return x < c0 ? up * x : down * (1 - x); },
          [=](double x) { return x < c0 ? up : -down; }, c0, 1e-9};
}

std::size_t Itinerary::reliable_prefix() const {
  auto it = std::find(reliable.begin(), reliable.end(), false);
  return static_cast<std::size_t>(it - reliable.begin());
}

Itinerary itinerary(const UnimodalMap& map, double x, std::size_t n) {
  if (!(x >= 0 && x <= 1)) throw std::invalid_argument("starting point must lie in [0, 1]");
  Itinerary out;
  out.reliable.reserve(n);
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out.symbols.push_back(x >= map.c0 ? 1 : 0);
    out.reliable.push_back(std::abs(x - map.c0) >= std::max(map.eta, err));
    if (i + 1 == n) break;
    const double slope = std::abs(map.derivative(x));
    x = map(x);
    err = slope * err + 2 * kEps * std::max(1.0, std::abs(x));
    if (x < -kSlack || x > 1 + kSlack) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "orbit of " << map.name << " left [0,1] at step " << i + 1 << " (x = " << x << ")";
      throw OrbitEscaped(msg.str());
    }
    x = std::clamp(x, 0.0, 1.0);
  }
  return out;
}

Itinerary kneading(const UnimodalMap& map, std::size_t n) {
  double c1 = map(map.c0);
  if (c1 > 1 + kSlack) throw OrbitEscaped(map.name + " maps its critical point above 1");
  return itinerary(map, std::clamp(c1, 0.0, 1.0), n);
}

Rational tau_truncation(const Itinerary& it) { return tau_of_word(xi(it.symbols.prefix(it.reliable_prefix()))); }

RenormalizedMap renormalize_map(const UnimodalMap& map) {
  const double c0 = map.c0;
  const double c1 = map(c0);
  if (!(c1 > c0)) throw NotRenormalizable(map.name + ": no fixed point in (c0, 1)");
  const double b = bisect([&](double x) { return map(x) - x; }, c0, 1.0);
  if (!(b > c0 && b < 1)) throw NotRenormalizable(map.name + ": no fixed point in (c0, 1)");
  const double a = bisect([&](double x) { return map(x) - b; }, 0.0, c0);
  if (!(a > 0 && a < c0) || std::abs(map(a) - b) > 1e-12) {
    throw NotRenormalizable(map.name + ": no preimage of the fixed point in (0, c0)");
  }
  const double c2 = map(c1);
  if (c2 < a) {
    std::ostringstream msg;
    msg.precision(17);
    msg << map.name << ": f(f(c0)) = " << c2 << " < a = " << a << ", so Rf does not map [0,1] into itself";
    throw NotRenormalizable(msg.str());
  }
  const double scale = a - b;
  UnimodalMap r;
  r.name = "R[" + map.name + "]";
  auto f = map.f;
  auto df = map.derivative;
  r.f = [f, b, scale](double x) { return (f(f(scale * x + b)) - b) / scale; };
  r.derivative = [f, df, b, scale](double x) {
    double y = scale * x + b;
    return df(f(y)) * df(y);
  };
  r.c0 = (c0 - b) / scale;
  r.eta = map.eta;
  return {std::move(r), a, b};
}

double locate_logistic_parameter(const Rational& target, double lo, double hi, std::size_t n, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("empty parameter interval");
  auto below = [&](double r) {
    Itinerary k = kneading(logistic_map(r), n);
    return tau_of_word(xi(k.symbols)) < target;
  };
  if (!below(lo) || below(hi)) throw std::domain_error("target τ is not bracketed by the parameter interval");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (below(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

OrderReport order_preservation_check(const UnimodalMap& map, std::size_t pairs, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  OrderReport rep;
  const std::size_t max_attempts = 100 * pairs + 1000;
  for (std::size_t attempt = 0; attempt < max_attempts && rep.decided < pairs; ++attempt) {
    double x = unit(rng), y = unit(rng);
    if (x > y) std::swap(x, y);
    Itinerary ix = itinerary(map, x, n), iy = itinerary(map, y, n);
    WordOrder o = word_order(xi(ix.symbols), xi(iy.symbols));
    if (o == WordOrder::EqualPrefix) {
      ++rep.equal_prefix;
      continue;
    }
    // The τ digits first differ where the symbols first differ.
    std::size_t d = 1;
    while (ix.symbols.at(d) == iy.symbols.at(d)) ++d;
    if (ix.reliable_prefix() < d || iy.reliable_prefix() < d) {
      ++rep.unreliable;
      continue;
    }
    ++rep.decided;
    if (o == WordOrder::Greater) ++rep.violations;
  }
  return rep;
}

std::vector<double> linear_grid(double from, double to, std::size_t steps) {
  if (steps == 0) throw std::invalid_argument("grid needs at least one point");
  std::vector<double> g(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    g[i] = steps == 1 ? from : from + (to - from) * double(i) / double(steps - 1);
  }
  return g;
}

ScanReport monotonicity_scan(const std::vector<double>& grid, std::size_t n) {
  ScanReport rep;
  for (double r : grid) {
    if (!(r >= 2.9 && r <= 4.0)) throw std::invalid_argument("scan parameters must lie in [2.9, 4]");
    Itinerary k = kneading(logistic_map(r), n);
    rep.rows.push_back({r, k.reliable_prefix(), tau_truncation(k), k.symbols});
  }
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    const auto& p = rep.rows[i - 1];
    const auto& c = rep.rows[i];
    std::size_t common = std::min(p.reliable, c.reliable);
    Rational tp = tau_of_word(xi(p.kneading.prefix(common)));
    Rational tc = tau_of_word(xi(c.kneading.prefix(common)));
    if (tc < tp) ++rep.decreases;
  }
  return rep;
}

}  // namespace kneading
