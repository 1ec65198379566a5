#include "eqsum4/derivation.hpp"

#include <algorithm>

#include "eqsum4/expr.hpp"
#include "eqsum4/families.hpp"
#include "eqsum4/solution.hpp"

namespace eqsum4 {

namespace {

// The printed intermediate forms, kept verbatim.
constexpr const char* kProductForm =
    "2m(m^2pquw+m^2pqrv+m^2ptrw+m^2sqrw+ptuv+squv+stuw+strv)";
constexpr const char* kScaledPowerForm =
    "-8(q^4w^3r^2u-w^6r^3v+p^4r^3w^2v-w^3r^6u)m^3"
    "-8(q^4w^3u^3-w^4r^3v^3+p^4r^3v^3-w^3r^4u^3)m";
constexpr const char* kFinalForm =
    "8m(q-r)(q+r)(q^2+r^2)(p-w)(p+w)(p^2+w^2)(q^4+p^4-w^4-r^4)(-q^4+p^4-w^4+r^4)";

MPoly v(const char* name) { return MPoly::variable(name); }

DerivationStep step(std::string name, std::string claim, MPoly difference) {
  bool ok = difference.is_zero();
  return {std::move(name), std::move(claim), ok, std::move(difference)};
}

}  // namespace

bool DerivationReport::passed() const {
  return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.passed; });
}

DerivationReport n4_derivation_check() {
  const MPoly m = v("m"), p = v("p"), q = v("q"), r = v("r"), w = v("w");
  const MPoly s = v("s"), t = v("t"), u = v("u"), vv = v("v");
  std::vector<MPoly> xs{p * m + s, q * m + t, r * m + u, w * m + vv};
  std::vector<MPoly> ys{p * m - s, q * m - t, r * m - u, w * m - vv};
  MPoly product = product_residual(xs, ys);
  MPoly power = power_sum_residual(xs, ys, 4);

  DerivationReport rep;
  rep.steps.push_back(step("product-residual", "prod x - prod y = " + std::string(kProductForm),
                           product - parse_poly(kProductForm)));

  // t = -qu/r and s = -pv/w, clearing r and w.
  auto eliminate = [&](const MPoly& f, unsigned scale) {
    return f.substitute_fraction("s", -(p * vv), w, scale).substitute_fraction("t", -(q * u), r, scale);
  };
  rep.steps.push_back(step("elimination", "t = -qu/r, s = -pv/w make prod x - prod y vanish",
                           eliminate(product, std::max(product.degree("s"), product.degree("t")))));

  MPoly scaled = eliminate(power, 3);
  rep.steps.push_back(step("scaled-power-residual",
                           "r^3 w^3 (sum x^4 - sum y^4) = " + std::string(kScaledPowerForm),
                           scaled - parse_poly(kScaledPowerForm)));

  const MPoly uu = -(r * (p.pow(4) - w.pow(4))), vsub = w * (q.pow(4) - r.pow(4));
  std::map<std::string, MPoly, std::less<>> uv{{"u", uu}, {"v", vsub}};
  rep.steps.push_back(step("m3-coefficient", "u = -r(-w^4+p^4), v = w(q^4-r^4) kill the m^3 coefficient",
                           scaled.coefficient("m", 3).substitute(uv)));

  // With u, v fixed, s and t are polynomials as well.
  std::map<std::string, MPoly, std::less<>> all{
      {"u", uu}, {"v", vsub}, {"s", -(p * (q.pow(4) - r.pow(4)))}, {"t", q * (p.pow(4) - w.pow(4))}};
  MPoly final_residual = power.substitute(all);
  MPoly printed = parse_poly(kFinalForm);
  MPoly diff = final_residual - printed;
  if (!diff.is_zero() && (final_residual + printed).is_zero()) diff = MPoly();
  rep.steps.push_back(step("final-factorization", "sum x^4 - sum y^4 = " + std::string(kFinalForm) + " up to sign",
                           diff));

  MPoly eq1 = p.pow(4) + q.pow(4) - r.pow(4) - w.pow(4);
  auto quotient = final_residual.divide(eq1);
  rep.steps.push_back(step("divisible-by-relation", "(q^4+p^4-w^4-r^4) divides the final residual",
                           quotient ? MPoly() : final_residual));

  // The substituted entries are the stated family.
  auto family = n4_construct(p, q, r, w, m);
  MPoly entry_diff;
  for (std::size_t i = 0; i < 4; ++i) {
    MPoly dx = xs[i].substitute(all) - family.xs[i];
    MPoly dy = ys[i].substitute(all) - family.ys[i];
    // x1 and y1 come out negated; the sign is immaterial for both constraints
    if (!dx.is_zero() && (xs[i].substitute(all) + family.xs[i]).is_zero()) dx = MPoly();
    if (!dy.is_zero() && (ys[i].substitute(all) + family.ys[i]).is_zero()) dy = MPoly();
    entry_diff += dx * dx + dy * dy;
  }
  rep.steps.push_back(step("family-entries", "substituted x, y equal the n = 4 family up to sign", entry_diff));

  Assignment at{{"p", Rational(134)}, {"q", Rational(133)}, {"r", Rational(59)}, {"w", Rational(158)}};
  MPoly at_quadruple;
  for (long mv : {1L, 2L, 17L}) {
    at["m"] = Rational(mv);
    at_quadruple += MPoly(final_residual.eval(at).num().abs());
  }
  rep.steps.push_back(step("numeric-vanishing", "residual is 0 at (p,q,r,w) = (134,133,59,158)", at_quadruple));
  return rep;
}

}  // namespace eqsum4
