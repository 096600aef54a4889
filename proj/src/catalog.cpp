#include "hypercurv/curvature.hpp"

#include "hypercurv/error.hpp"

#include <limits>

namespace hypercurv {

std::optional<CatalogFamily> catalog_family_from_string(std::string_view name) {
  if (name == "complete") return CatalogFamily::complete;
  if (name == "cycle") return CatalogFamily::cycle;
  if (name == "line_ends") return CatalogFamily::line_ends;
  if (name == "line_end_next") return CatalogFamily::line_end_next;
  if (name == "line_both_next") return CatalogFamily::line_both_next;
  return std::nullopt;
}

std::string_view to_string(CatalogFamily f) {
  switch (f) {
    case CatalogFamily::complete: return "complete";
    case CatalogFamily::cycle: return "cycle";
    case CatalogFamily::line_ends: return "line_ends";
    case CatalogFamily::line_end_next: return "line_end_next";
    case CatalogFamily::line_both_next: return "line_both_next";
  }
  return "unknown";
}

namespace {

void require_range(bool ok, CatalogFamily f, int n) {
  if (!ok) {
    throw Error(ErrorCode::OutOfCatalogRange,
                std::string(to_string(f)) + " has no closed form for size " + std::to_string(n));
  }
}

// a * hp1 - b * hp0 over c * h1, with b == 0 never touching hp0.
std::optional<double> limit(const ConcaveCost& h, double a, double b, double c) {
  if (b != 0 && !h.hp0_finite()) return std::nullopt;
  const double hp0_term = b == 0 ? 0.0 : b * h.hp0();
  return (a * h.hp1() - hp0_term) / (c * h.h1());
}

}  // namespace

CatalogInstance catalog_instance(CatalogFamily f, int n) {
  auto s = [](int i) { return std::to_string(i); };
  auto make = [](Hypergraph g, const std::string& x, const std::string& y) {
    const VertexId xi = g.id(x);
    const VertexId yi = g.id(y);
    return CatalogInstance{std::move(g), xi, yi};
  };
  switch (f) {
    case CatalogFamily::complete:
      require_range(n >= 2, f, n);
      return make(generate(Family::complete, n), "0", "1");
    case CatalogFamily::cycle:
      require_range(n >= 2, f, n);
      return make(generate(Family::cycle, n), "0", "1");
    case CatalogFamily::line_ends:
      require_range(n >= 1, f, n);
      return make(generate(Family::path, n), "0", s(n));
    case CatalogFamily::line_end_next:
      require_range(n >= 1, f, n);
      return make(generate(Family::path, n + 1), "0", s(n));
    case CatalogFamily::line_both_next:
      require_range(n >= 1, f, n);
      return make(generate(Family::path, n + 2), "1", s(n + 1));
  }
  throw Error(ErrorCode::OutOfCatalogRange, "unknown catalog family");
}

CatalogValues catalog(CatalogFamily f, int n, const ConcaveCost& h, const std::optional<Rational>& alpha) {
  if (alpha && (*alpha < 0 || *alpha > 1)) {
    throw Error(ErrorCode::AlphaOutOfRange, "alpha " + to_string(*alpha) + " is outside [0,1]");
  }
  // C_2 = K_2 and a line of length one is K_2.
  if (f == CatalogFamily::cycle && n == 2) return catalog(CatalogFamily::complete, 2, h, alpha);
  if (f == CatalogFamily::line_ends && n == 1) return catalog(CatalogFamily::complete, 2, h, alpha);

  CatalogValues out;
  const double h1 = h.h1();
  const Rational a = alpha.value_or(Rational(0));
  const Rational b = 1 - a;
  auto H = [&](const Rational& t) { return h.eval(t); };
  std::optional<Rational> w1;  // W_1, i.e. W_h for h = identity
  std::optional<double> wh;

  switch (f) {
    case CatalogFamily::complete: {
      require_range(n >= 2, f, n);
      out.distance = 1;
      out.kappa = Rational(n, n - 1);
      out.kappa_h = limit(h, static_cast<double>(n) / (n - 1), 0, 1);
      const Rational m = boost::multiprecision::abs(a - b / (n - 1));
      w1 = m;
      wh = H(m);
      break;
    }
    case CatalogFamily::cycle: {
      require_range(n >= 3, f, n);
      out.distance = 1;
      if (n <= 5) {
        out.kappa = Rational(6 - n, 2);
        out.kappa_h = limit(h, 3, n - 3, 2);
        w1 = boost::multiprecision::abs(a - b / 2) + (n - 3) * (b / 2);
        wh = H(boost::multiprecision::abs(a - b / 2)) + (n - 3) * H(b / 2);
      } else {
        out.kappa = 0;
        out.kappa_h = limit(h, 1, 1, 1);
        w1 = a + b;
        wh = H(a) + 2 * H(b / 2);
      }
      break;
    }
    case CatalogFamily::line_ends: {
      require_range(n >= 2, f, n);
      const int d = n;
      out.distance = d;
      out.kappa = Rational(2, d);
      out.kappa_h = limit(h, 2, 0, d);
      w1 = d - 2 * (1 - a);
      wh = d * h1 - 2 * (h1 - H(a));
      break;
    }
    case CatalogFamily::line_end_next: {
      require_range(n >= 1, f, n);
      const int d = n;
      out.distance = d;
      if (d == 1) {
        out.kappa = 1;
        out.kappa_h = limit(h, 3, 1, 2);
        w1 = boost::multiprecision::abs(a - b / 2) + b / 2;
        wh = H(boost::multiprecision::abs(a - b / 2)) + H(b / 2);
      } else {
        out.kappa = Rational(1, d);
        out.kappa_h = limit(h, 3, 1, 2 * d);
        w1 = a + (d - 2) + (a + b / 2) + b / 2;
        wh = H(a) + (d - 2) * h1 + H(a + b / 2) + H(b / 2);
      }
      break;
    }
    case CatalogFamily::line_both_next: {
      require_range(n >= 1, f, n);
      const int d = n;
      out.distance = d;
      out.kappa = 0;
      if (d == 1) {
        out.kappa_h = limit(h, 1, 1, 1);
        w1 = a + b;
        wh = H(a) + 2 * H(b / 2);
      } else {
        out.kappa_h = limit(h, 1, 1, d);
        w1 = 2 * (a + b / 2) + (d - 2) + b;
        wh = 2 * H(a + b / 2) + (d - 2) * h1 + 2 * H(b / 2);
      }
      break;
    }
  }
  if (alpha) {
    out.kappa_alpha = 1 - *w1 / out.distance;
    out.wh = *wh;
    out.kappa_h_alpha = 1 - *wh / (h1 * out.distance);
  }
  return out;
}

}  // namespace hypercurv
