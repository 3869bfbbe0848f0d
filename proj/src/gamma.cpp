#include "mvsr/gamma.hpp"

#include <algorithm>

#include "mvsr/error.hpp"
#include "mvsr/limits.hpp"
#include "mvsr/rng.hpp"

namespace mvsr {

std::string to_string(GammaDomain d) {
  return d == GammaDomain::Full ? "full" : "nonnegative";
}

Rational gamma(const TropicalUSemifield& f, const TropicalRational& a) {
  if (a.is_top()) return f.unit();
  const Rational& v = a.value();
  if (v < 0) return Rational(0);
  return v > f.unit() ? f.unit() : v;
}

namespace {

TropicalRational draw(SeededRng& rng, std::int64_t num_span, std::int64_t max_den,
                      GammaDomain domain) {
  if (rng.one_in(20)) return TropicalRational::top();
  const std::int64_t num =
      rng.uniform(domain == GammaDomain::Full ? -num_span : 0, num_span);
  const std::int64_t den = rng.uniform(1, max_den);
  return TropicalRational(Rational(num, den));
}

}  // namespace

GammaReport gamma_property_report(const Rational& unit, std::uint64_t samples,
                                  std::uint64_t seed, GammaDomain domain) {
  const TropicalUSemifield f(unit);
  GammaReport report;
  report.unit = unit;
  report.domain = domain;
  report.samples = samples;
  report.seed = seed;
  SeededRng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const TropicalRational a = draw(rng, 20, 12, domain);
    const TropicalRational b = draw(rng, 20, 12, domain);
    const Rational ga = gamma(f, a);
    const Rational gb = gamma(f, b);
    const Rational meet = gamma(f, trop_sum(a, b));
    if (meet != std::min(ga, gb)) {
      if (!report.first_failure) report.first_failure = GammaFailure{"meet", a, b};
      ++report.meet_failures;
    }
    const Rational sum = gamma(f, trop_prod(a, b));
    if (sum != std::min(Rational(ga + gb), unit)) {
      if (!report.first_failure) report.first_failure = GammaFailure{"sum", a, b};
      ++report.sum_failures;
    }
  }
  return report;
}

GammaChain gamma_chain(std::size_t k, std::uint64_t samples, std::uint64_t seed,
                       GammaDomain domain) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "gamma_chain needs k >= 1");
  guard_carrier(k + 1, "gamma chain");
  const std::size_t n = k + 1;
  std::vector<Rational> values(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = Rational(static_cast<long long>(i), static_cast<long long>(k));
    labels[i] = to_string(values[i]);
  }
  const auto index_of = [&](const Rational& v) {
    const auto it = std::find(values.begin(), values.end(), v);
    if (it == values.end())
      fail(ErrorKind::InvalidArgument, "value outside the chain: " + to_string(v));
    return static_cast<Elem>(it - values.begin());
  };
  Table oplus(n, n);
  std::vector<Elem> star(n);
  for (Elem i = 0; i < n; ++i) {
    star[i] = index_of(Rational(1) - values[i]);
    for (Elem j = 0; j < n; ++j)
      oplus(i, j) = index_of(std::min(Rational(values[i] + values[j]), Rational(1)));
  }
  GammaChain out{MvAlgebra(n, std::move(oplus), std::move(star), index_of(0),
                           labels, values)};

  const MvAlgebra reference = lukasiewicz_chain(n);
  out.matches_chain = out.algebra.same_structure(reference) &&
                      out.algebra.labels() == reference.labels() &&
                      out.algebra.values() == reference.values();

  const TropicalUSemifield f(Rational(1));
  const FiniteSemiring target = reduct_wedge_oplus(out.algebra);
  SeededRng rng(seed);
  const auto span = static_cast<std::int64_t>(3 * k);
  const auto sample = [&]() {
    if (rng.one_in(20)) return TropicalRational::top();
    return TropicalRational(
        Rational(rng.uniform(domain == GammaDomain::Full ? -span : 0, span),
                 static_cast<long long>(k)));
  };
  for (std::uint64_t s = 0; s < samples; ++s) {
    const TropicalRational a = sample();
    const TropicalRational b = sample();
    const Elem ga = index_of(gamma(f, a));
    const Elem gb = index_of(gamma(f, b));
    ++out.checks;
    if (index_of(gamma(f, trop_sum(a, b))) != target.add(ga, gb)) ++out.failures;
    ++out.checks;
    if (index_of(gamma(f, trop_prod(a, b))) != target.mul(ga, gb)) ++out.failures;
  }
  // Constants: Top and 0 go to the reduct's zero and one.
  ++out.checks;
  if (index_of(gamma(f, TropicalRational::top())) != target.zero()) ++out.failures;
  ++out.checks;
  if (index_of(gamma(f, trop_one())) != target.one()) ++out.failures;
  return out;
}

}  // namespace mvsr
