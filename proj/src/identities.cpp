#include "mellint/identities.hpp"

#include "mellint/elliptic.hpp"
#include "mellint/errors.hpp"
#include "mellint/parallel.hpp"
#include "mellint/quadrature.hpp"
#include "mellint/series.hpp"
#include "mellint/singular_values.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace mellint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ParamDomain real_param(std::string name, double lo, double hi, bool lo_open, bool hi_open,
                       std::string default_value) {
  return {std::move(name), lo, hi, lo_open, hi_open, false, std::move(default_value)};
}

ParamDomain terms_param() { return {"terms", 1, 1e7, false, false, true, "auto"}; }

LhsValue quadrature_lhs(IntegrandId id, std::vector<BigReal> params, const PrecisionContext& ctx) {
  const IntegralSpec spec = IntegralSpec::make(id, std::move(params), ctx);
  QuadResult q = is_complex_kernel(id) ? integrate_complex_kernel(spec, ctx) : integrate(spec, ctx);
  return {std::move(q.value), std::move(q.err_estimate)};
}

LhsValue series_lhs(BigReal value, const PrecisionContext& ctx) {
  return {BigComplex(std::move(value)), ctx.real(0)};
}

unsigned terms_of(const ParamMap& p) { return static_cast<unsigned>(p.at("terms").to_double()); }

SeriesId ramanujan_id(const ParamMap& p) {
  return p.at("series") == 1 ? SeriesId::guillera_bb : SeriesId::bb_sqrt3;
}

template <typename Fn>
auto no_params(Fn fn) {
  return [fn](const ParamMap&, const PrecisionContext& ctx) { return fn(ctx); };
}

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> rows;
  const auto rhs_real = [](auto fn) {
    return [fn](const ParamMap& p, const PrecisionContext& ctx) { return BigComplex(fn(p, ctx)); };
  };

  rows.push_back({{IdentityId::I1,
                   "int_0^1 K(2 sqrt(x(1-x))) / sqrt(1 - 2(2x-1)a + a^2) dx",
                   "[K(sqrt((1 - sqrt(1+a^2))/2))]^2",
                   {real_param("a", 0, 1, false, false, "1/2")},
                   "quadrature",
                   "kernel log-singular at x = 1/2"},
                  [](const ParamMap& p, const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::ode_kernel, {p.at("a")}, ctx);
                  },
                  rhs_real([](const ParamMap& p, const PrecisionContext& ctx) {
                    return rhs_ode_closed_form(p.at("a"), ctx);
                  })});

  rows.push_back({{IdentityId::I1_ext,
                   "int_0^1 K(2 sqrt(x(1-x))) / sqrt(1 - 2(2x-1)a + a^2) dx",
                   "(1/a) [K(sqrt((1 - sqrt(1+a^-2))/2))]^2",
                   {real_param("a", 1, kInf, true, true, "2")},
                   "quadrature",
                   "closed form switches branch at a = 1, which is excluded"},
                  [](const ParamMap& p, const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::ode_kernel, {p.at("a")}, ctx);
                  },
                  rhs_real([](const ParamMap& p, const PrecisionContext& ctx) {
                    return rhs_ode_closed_form(p.at("a"), ctx);
                  })});

  rows.push_back({{IdentityId::I2,
                   "int_0^1 K(2 sqrt(x(1-x))) (4x + 3 sqrt2 - 2) / (4 sqrt2 + 9 - 8 sqrt2 x)^(3/2) dx",
                   "pi / (4 sqrt2)",
                   {},
                   "quadrature",
                   "Clausen series plus its a-derivative at a = 1/sqrt8"},
                  no_params([](const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::motivating_derivative, {}, ctx);
                  }),
                  no_params([](const PrecisionContext& ctx) {
                    return BigComplex(ctx.pi() / (4 * sqrt(ctx.real(2))));
                  })});

  rows.push_back({{IdentityId::I3,
                   "int_0^1 K(2 sqrt(x(1-x))) / sqrt(9/8 + (1-2x)/sqrt2) dx",
                   "Gamma(1/4)^4 / (16 sqrt2 pi)",
                   {},
                   "quadrature",
                   "singular value lambda*(4) = 3 - 2 sqrt2"},
                  no_params([](const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::singular_r4, {}, ctx);
                  }),
                  no_params([](const PrecisionContext& ctx) {
                    return BigComplex(rhs_constant(GammaConstant::r4, ctx));
                  })});

  rows.push_back({{IdentityId::I4,
                   "int_0^1 K(2 sqrt(x(1-x))) / sqrt(3 + 4i(1-2x)) dx",
                   "sqrt3 Gamma(1/3)^6 / (2^(17/3) pi^2)",
                   {},
                   "quadrature",
                   "singular value lambda*(3); complex kernel, Im must vanish"},
                  no_params([](const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::complex_r3, {}, ctx);
                  }),
                  no_params([](const PrecisionContext& ctx) {
                    return BigComplex(rhs_constant(GammaConstant::r3, ctx));
                  }),
                  true});

  rows.push_back({{IdentityId::I5,
                   "int_0^1 K(2 sqrt(x(1-x))) / sqrt(63 + 16i(1-2x)) dx",
                   "[Gamma(1/7) Gamma(2/7) Gamma(4/7)]^2 / (128 sqrt7 pi^2)",
                   {},
                   "quadrature",
                   "singular value lambda*(7); complex kernel, Im must vanish"},
                  no_params([](const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::complex_r7, {}, ctx);
                  }),
                  no_params([](const PrecisionContext& ctx) {
                    return BigComplex(rhs_constant(GammaConstant::r7, ctx));
                  }),
                  true});

  rows.push_back({{IdentityId::I6,
                   "int_0^(pi/2) K(sqrt(4c tan t / (b^2 + (c + tan t)^2))) sin t / sqrt(b^2 + (c + tan t)^2) dt",
                   "pi / (2 sqrt((b+1)^2 + c^2))",
                   {real_param("b", 0, kInf, false, true, "1"), real_param("c", 0, kInf, false, true, "1")},
                   "quadrature",
                   "log-singular at t = arctan(c) when b = 0"},
                  [](const ParamMap& p, const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::pde_theta, {p.at("b"), p.at("c")}, ctx);
                  },
                  rhs_real([](const ParamMap& p, const PrecisionContext& ctx) {
                    const BigReal b1 = p.at("b") + 1;
                    const BigReal& c = p.at("c");
                    return ctx.pi() / (2 * sqrt(b1 * b1 + c * c));
                  })});

  rows.push_back({{IdentityId::I7,
                   "int_0^1 K(2 sqrt(x(1-x))) x(1-x) / (1 - 2x(1-x))^(3/2) dx",
                   "pi / (2 sqrt2)",
                   {},
                   "quadrature",
                   "b = 0, c = 1 member of I6 after tan t = x/(1-x)"},
                  no_params([](const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::pde_corollary, {}, ctx);
                  }),
                  no_params([](const PrecisionContext& ctx) {
                    return BigComplex(ctx.pi() / (2 * sqrt(ctx.real(2))));
                  })});

  rows.push_back({{IdentityId::I8,
                   "int_0^1 K(2 sqrt(x(1-x))) dx",
                   "pi^2 / 4",
                   {},
                   "quadrature",
                   "a = 0 member of I1"},
                  no_params([](const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::base_kernel, {}, ctx);
                  }),
                  no_params([](const PrecisionContext& ctx) {
                    return BigComplex(ctx.pi() * ctx.pi() / 4);
                  })});

  rows.push_back({{IdentityId::I9,
                   "int_0^inf Re[K(x)] c x / (1 + c^2 x^2)^(3/2) dx",
                   "pi / (2 sqrt(1 + c^2))",
                   {real_param("c", 0, kInf, true, true, "1")},
                   "quadrature",
                   "b = 0 boundary of I6; split at the branch point x = 1"},
                  [](const ParamMap& p, const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::axis_re_k, {p.at("c")}, ctx);
                  },
                  rhs_real([](const ParamMap& p, const PrecisionContext& ctx) {
                    const BigReal& c = p.at("c");
                    return ctx.pi() / (2 * sqrt(1 + c * c));
                  })});

  rows.push_back({{IdentityId::I10,
                   "int_0^1 K(2 sqrt(x(1-x))) [24 - 18 sqrt3 + sqrt2 (6 sqrt3 - 11)(2x-1)] / "
                   "[42 - 15 sqrt3 - 4 sqrt2 (3 sqrt3 - 5)(2x-1)]^(3/2) dx",
                   "-pi / (8 sqrt2)",
                   {},
                   "quadrature",
                   "Clausen series plus its a-derivative at a^2 = (26 - 15 sqrt3)/16"},
                  no_params([](const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::bb_sqrt3_integral, {}, ctx);
                  }),
                  no_params([](const PrecisionContext& ctx) {
                    return BigComplex(-ctx.pi() / (8 * sqrt(ctx.real(2))));
                  })});

  rows.push_back({{IdentityId::I11,
                   "1 + sum_{n>=1} ((1/2)_n / n!)^3 (-a^2)^n",
                   "(4/pi^2) [K(sqrt((1 - sqrt(1+a^2))/2))]^2",
                   {real_param("a", 0, 1, false, true, "1/2"), terms_param()},
                   "series",
                   "partial sum through `terms`"},
                  [](const ParamMap& p, const PrecisionContext& ctx) {
                    return series_lhs(clausen_sum(p.at("a"), terms_of(p), ctx), ctx);
                  },
                  rhs_real([](const ParamMap& p, const PrecisionContext& ctx) {
                    return 4 * rhs_ode_closed_form(p.at("a"), ctx) / (ctx.pi() * ctx.pi());
                  })});

  rows.push_back({{IdentityId::I12,
                   "series=1: 1 + sum ((1/2)_n/n!)^3 (6n+1)(-1/8)^n; series=2: sum ((1/2)_n/n!)^3 "
                   "[(30 - 6 sqrt3)n + 7 - 3 sqrt3] (-(26 - 15 sqrt3)/16)^n",
                   "series=1: 2 sqrt2 / pi; series=2: 4 sqrt2 / pi",
                   {{"series", 1, 2, false, false, true, "1"}, terms_param()},
                   "series",
                   "Ramanujan-type series for 1/pi"},
                  [](const ParamMap& p, const PrecisionContext& ctx) {
                    return series_lhs(ramanujan_sum(ramanujan_id(p), terms_of(p), ctx), ctx);
                  },
                  rhs_real([](const ParamMap& p, const PrecisionContext& ctx) {
                    return ramanujan_series(ramanujan_id(p), ctx).target;
                  })});

  rows.push_back({{IdentityId::I13,
                   "(pi^2/4) [1 + sum_{n>=1} (-1)^n ((1/2)_n / n!)^3 a^(2n)]",
                   "int_0^1 K(2 sqrt(x(1-x))) / sqrt(1 - 2(2x-1)a + a^2) dx",
                   {real_param("a", 0, 1, false, true, "1/2"), terms_param()},
                   "series",
                   "right side by quadrature; Legendre orthogonality route"},
                  [](const ParamMap& p, const PrecisionContext& ctx) {
                    return series_lhs(legendre_sum(p.at("a"), terms_of(p), ctx), ctx);
                  },
                  [](const ParamMap& p, const PrecisionContext& ctx) {
                    return quadrature_lhs(IntegrandId::ode_kernel, {p.at("a")}, ctx).value;
                  }});
  return rows;
}

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> rows = build_catalog();
  return rows;
}

std::string format_bound(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::I1: return "I1";
    case IdentityId::I1_ext: return "I1-ext";
    case IdentityId::I2: return "I2";
    case IdentityId::I3: return "I3";
    case IdentityId::I4: return "I4";
    case IdentityId::I5: return "I5";
    case IdentityId::I6: return "I6";
    case IdentityId::I7: return "I7";
    case IdentityId::I8: return "I8";
    case IdentityId::I9: return "I9";
    case IdentityId::I10: return "I10";
    case IdentityId::I11: return "I11";
    case IdentityId::I12: return "I12";
    case IdentityId::I13: return "I13";
  }
  return "unknown";
}

std::optional<IdentityId> parse_identity_id(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (IdentityId id : kAllIdentities) {
    std::string name(to_string(id));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (name == lowered) return id;
  }
  return std::nullopt;
}

bool ParamDomain::contains(const BigReal& x) const {
  if (!x.is_finite()) return false;
  const BigReal lo_b = BigReal::from_double(lo, x.precision());
  if (lo_open ? !(x > lo_b) : !(x >= lo_b)) return false;
  if (!std::isinf(hi)) {
    const BigReal hi_b = BigReal::from_double(hi, x.precision());
    if (hi_open ? !(x < hi_b) : !(x <= hi_b)) return false;
  }
  if (integer) {
    BigReal rounded(0, x.precision());
    mpfr_rint(rounded.get(), x.get(), MPFR_RNDN);
    if (rounded != x) return false;
  }
  return true;
}

std::string ParamDomain::describe() const {
  std::string out = name + (integer ? " integer in " : " in ");
  out += lo_open ? "(" : "[";
  out += format_bound(lo) + ", " + format_bound(hi);
  out += (hi_open || std::isinf(hi)) ? ")" : "]";
  return out;
}

std::vector<IdentitySummary> list_identities() {
  std::vector<IdentitySummary> out;
  for (const auto& row : catalog()) out.push_back(row.summary);
  return out;
}

const IdentityRecord& identity_record(IdentityId id) {
  for (const auto& row : catalog()) {
    if (row.summary.id == id) return row;
  }
  throw DomainError("unknown identity id");
}

unsigned auto_series_terms(const BigReal& a, const PrecisionContext& ctx) {
  const double av = std::fabs(a.to_double());
  if (av == 0.0) return 1;
  const double needed = (ctx.digits() + 10) * std::log(10.0) / (-2.0 * std::log(av));
  return static_cast<unsigned>(std::min(std::ceil(needed) + 5.0, 1e7));
}

ParamMap resolve_params(IdentityId id, const ParamMap& given, const PrecisionContext& ctx) {
  const auto& domains = identity_record(id).summary.params;
  for (const auto& [name, value] : given) {
    const bool known = std::any_of(domains.begin(), domains.end(),
                                   [&](const ParamDomain& d) { return d.name == name; });
    if (!known) {
      throw DomainError("identity " + std::string(to_string(id)) + " has no parameter '" + name + "'");
    }
  }
  ParamMap out;
  for (const auto& d : domains) {
    if (auto it = given.find(d.name); it != given.end()) {
      out.emplace(d.name, with_precision(it->second, ctx.bits()));
    } else if (d.default_value.empty()) {
      throw DomainError("identity " + std::string(to_string(id)) + " needs parameter '" + d.name + "'");
    } else if (d.default_value != "auto") {
      out.emplace(d.name, ctx.parse(d.default_value));
    }
  }
  // "auto" term counts depend on the other parameters.
  for (const auto& d : domains) {
    if (out.count(d.name) != 0 || d.default_value != "auto") continue;
    unsigned terms = 1;
    if (auto a = out.find("a"); a != out.end()) {
      terms = auto_series_terms(a->second, ctx);
    } else if (auto s = out.find("series"); s != out.end()) {
      terms = s->second == 1 ? 200 : 400;
    }
    out.emplace(d.name, ctx.real(static_cast<long>(terms)));
  }
  for (const auto& d : domains) {
    const BigReal& v = out.at(d.name);
    if (!d.contains(v)) {
      throw DomainError("parameter " + d.name + " = " + v.to_string(20) + " outside " + d.describe());
    }
  }
  return out;
}

VerificationReport verify(IdentityId id, const ParamMap& params, const PrecisionContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  const IdentityRecord& record = identity_record(id);
  const ParamMap resolved = resolve_params(id, params, ctx);

  VerificationReport report;
  report.id = id;
  for (const auto& d : record.summary.params) report.params.emplace_back(d.name, resolved.at(d.name));
  LhsValue lhs = record.lhs(resolved, ctx);
  report.lhs_value = std::move(lhs.value);
  report.err_estimate = std::move(lhs.err_estimate);
  report.rhs_value = record.rhs(resolved, ctx);
  report.abs_err = abs(report.lhs_value - report.rhs_value);
  const BigReal rhs_mag = abs(report.rhs_value);
  report.rel_err = rhs_mag.is_zero() ? report.abs_err : report.abs_err / rhs_mag;
  report.passed = report.abs_err <= ctx.pass_tol() * max(ctx.real(1), rhs_mag);
  if (record.complex_kernel) {
    report.passed = report.passed && abs(report.lhs_value.im) <= 10 * report.err_estimate;
  }
  report.digits_used = ctx.digits();
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> sweep(IdentityId id, const std::string& param, const BigReal& lo,
                                      const BigReal& hi, unsigned steps, const ParamMap& fixed,
                                      const PrecisionContext& ctx) {
  if (steps < 2) throw DomainError("sweep needs at least 2 steps");
  if (!(lo < hi)) throw DomainError("sweep range is degenerate: need lo < hi");
  const auto& domains = identity_record(id).summary.params;
  const auto domain = std::find_if(domains.begin(), domains.end(),
                                   [&](const ParamDomain& d) { return d.name == param; });
  if (domain == domains.end()) {
    throw DomainError("identity " + std::string(to_string(id)) + " has no parameter '" + param + "'");
  }
  if (!domain->contains(lo) || !domain->contains(hi)) {
    throw DomainError("sweep range [" + lo.to_string(12) + ", " + hi.to_string(12) + "] leaves " +
                      domain->describe());
  }
  const BigReal lo_w = with_precision(lo, ctx.bits());
  const BigReal step = (with_precision(hi, ctx.bits()) - lo_w) / static_cast<long>(steps - 1);
  return parallel_map<VerificationReport>(steps, [&](std::size_t k) {
    ParamMap point = fixed;
    // The last point is hi itself, not lo + (steps-1) step with rounding.
    point[param] = k + 1 == steps ? with_precision(hi, ctx.bits()) : lo_w + step * static_cast<long>(k);
    return verify(id, point, ctx);
  });
}

}  // namespace mellint
