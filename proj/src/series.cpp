#include "mellint/series.hpp"

#include "mellint/errors.hpp"

#include <string>

namespace mellint {

namespace {

// c_n / c_{n-1} = ((n - 1/2) / n)^3
BigReal coefficient_ratio(unsigned n, const PrecisionContext& ctx) {
  const BigReal r = ctx.ratio(2 * static_cast<long>(n) - 1, 2 * static_cast<long>(n));
  return r * r * r;
}

BigReal coefficient(unsigned n, const PrecisionContext& ctx) {
  BigReal c = ctx.real(1);
  for (unsigned k = 1; k <= n; ++k) c *= coefficient_ratio(k, ctx);
  return c;
}

void require_unit_disc(const BigReal& a, const char* what) {
  if (!(abs(a) < 1)) throw DomainError(std::string(what) + " requires |a| < 1");
}

}  // namespace

std::string_view to_string(SeriesId id) {
  switch (id) {
    case SeriesId::clausen: return "CLAUSEN";
    case SeriesId::clausen_da: return "CLAUSEN_DA";
    case SeriesId::legsum: return "LEGSUM";
    case SeriesId::guillera_bb: return "GUILLERA_BB";
    case SeriesId::bb_sqrt3: return "BB_SQRT3";
  }
  return "unknown";
}

void SeriesSpec::validate() const {
  if (terms < 1) throw DomainError("series spec needs at least one term");
  switch (series_id) {
    case SeriesId::clausen:
    case SeriesId::clausen_da:
    case SeriesId::legsum:
      require_unit_disc(param_a, "series parameter");
      break;
    default:
      break;
  }
}

BigReal evaluate(const SeriesSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  switch (spec.series_id) {
    case SeriesId::clausen: return clausen_sum(spec.param_a, spec.terms, ctx);
    case SeriesId::clausen_da: return clausen_sum_da(spec.param_a, spec.terms, ctx);
    case SeriesId::legsum: return legendre_sum(spec.param_a, spec.terms, ctx);
    case SeriesId::guillera_bb:
    case SeriesId::bb_sqrt3: return ramanujan_sum(spec.series_id, spec.terms, ctx);
  }
  throw DomainError("unknown series id");
}

BigReal clausen_sum(const BigReal& a, unsigned terms, const PrecisionContext& ctx) {
  require_unit_disc(a, "clausen_sum");
  const BigReal minus_a2 = -with_precision(a * a, ctx.bits());
  BigReal term = ctx.real(1);
  BigReal sum = ctx.real(1);
  for (unsigned n = 1; n <= terms; ++n) {
    term *= coefficient_ratio(n, ctx) * minus_a2;
    sum += term;
  }
  return sum;
}

BigReal clausen_sum_da(const BigReal& a, unsigned terms, const PrecisionContext& ctx) {
  require_unit_disc(a, "clausen_sum_da");
  const BigReal aw = with_precision(a, ctx.bits());
  const BigReal minus_a2 = -(aw * aw);
  // u_n = c_n (-1)^n a^(2n-1); term_n = 2 n u_n.
  BigReal u = -coefficient_ratio(1, ctx) * aw;
  BigReal sum = ctx.real(0);
  for (unsigned n = 1; n <= terms; ++n) {
    if (n > 1) u *= coefficient_ratio(n, ctx) * minus_a2;
    sum += 2 * static_cast<long>(n) * u;
  }
  return sum;
}

BigReal legendre_sum(const BigReal& a, unsigned terms, const PrecisionContext& ctx) {
  return ctx.pi() * ctx.pi() / 4 * clausen_sum(a, terms, ctx);
}

RamanujanSeries ramanujan_series(SeriesId id, const PrecisionContext& ctx) {
  const BigReal sqrt2 = sqrt(ctx.real(2));
  const BigReal sqrt3 = sqrt(ctx.real(3));
  switch (id) {
    case SeriesId::guillera_bb:
      return {ctx.real(6), ctx.real(1), -ctx.ratio(1, 8), 2 * sqrt2 / ctx.pi()};
    case SeriesId::bb_sqrt3:
      return {30 - 6 * sqrt3, 7 - 3 * sqrt3, -(26 - 15 * sqrt3) / 16, 4 * sqrt2 / ctx.pi()};
    default:
      throw DomainError("not a Ramanujan-type series: " + std::string(to_string(id)));
  }
}

BigReal ramanujan_sum(SeriesId id, unsigned terms, const PrecisionContext& ctx) {
  const RamanujanSeries s = ramanujan_series(id, ctx);
  BigReal power = ctx.real(1);  // c_n z^n
  BigReal sum = s.intercept;
  for (unsigned n = 1; n <= terms; ++n) {
    power *= coefficient_ratio(n, ctx) * s.z;
    sum += power * (s.slope * static_cast<long>(n) + s.intercept);
  }
  return sum;
}

BigReal bridge_term_residual(const LinearBridge& bridge, const RamanujanSeries& series, unsigned n,
                             const PrecisionContext& ctx) {
  const BigReal c = coefficient(n, ctx);
  const BigReal minus_a2 = -(bridge.a_star * bridge.a_star);
  const BigReal clausen_term = c * pow(minus_a2, static_cast<long>(n));
  // c_n n (-1)^n 2 a^(2n-1) = 2 n c_n (-a^2)^n / a
  const BigReal da_term = 2 * static_cast<long>(n) * clausen_term / bridge.a_star;
  const BigReal target = c * (series.slope * static_cast<long>(n) + series.intercept) *
                         pow(series.z, static_cast<long>(n));
  return abs(bridge.alpha * clausen_term + bridge.beta * da_term - target);
}

LinearBridge linear_bridge(SeriesId id, const PrecisionContext& ctx) {
  const RamanujanSeries s = ramanujan_series(id, ctx);
  LinearBridge bridge;
  bridge.a_star = sqrt(-s.z);
  // n = 0: only clausen contributes, with term 1.
  bridge.alpha = s.intercept;
  // n = 1: c_1 z alpha + beta (2 c_1 z / a*) = c_1 z (A + B).
  bridge.beta = (s.slope + s.intercept - bridge.alpha) * bridge.a_star / 2;

  const BigReal tol = ctx.pass_tol();
  for (unsigned n = 0; n <= 5; ++n) {
    const BigReal scale = abs(coefficient(n, ctx) * pow(s.z, static_cast<long>(n))) + ctx.epsilon();
    if (bridge_term_residual(bridge, s, n, ctx) > tol * scale) {
      throw InconsistencyError("linear bridge fails to match term n = " + std::to_string(n));
    }
  }
  return bridge;
}

}  // namespace mellint
