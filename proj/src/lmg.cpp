#include "spinqcorr/lmg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace spinqcorr {

LmgMeasures lmg_closed_measures(double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("lmg_closed_measures: lambda must be >= 0");
  LmgMeasures m;
  if (lambda >= 1.0) return m;  // fully polarized, all correlations vanish

  double s = std::sqrt(1.0 - lambda * lambda);
  m.core.negativity = 0.5 * s;
  m.core.tdd = 0.5 * s;
  // Binary-entropy form of the deficit; identical to the atanh expression
  // but free of the log(1-lambda) cancellation near lambda = 1.
  auto xlog2x = [](double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); };
  m.core.deficit = 1.0 - 0.5 * (xlog2x(1.0 + lambda) + xlog2x(1.0 - lambda));
  m.core.lqu = 1.0 - lambda * lambda;
  m.lqu_paper = 1.0 - lambda;
  return m;
}

LmgPoint lmg_validate(double lambda) {
  LmgMeasures closed = lmg_closed_measures(lambda);
  XState state = lmg_pair_state(lambda, true);

  LmgPoint p;
  p.lambda = lambda;
  p.alpha = 0.5 * std::acos(std::min(lambda, 1.0));
  p.closed = closed.core;
  p.lqu_paper = closed.lqu_paper;
  p.definitional = definitional_measures(state);

  double rn = std::abs(p.closed.negativity - p.definitional.negativity);
  double ri = std::abs(p.closed.deficit - p.definitional.deficit);
  double rd = std::abs(p.closed.tdd - p.definitional.tdd);
  p.max_residual = std::max({rn, ri, rd});
  p.lqu_residual_def = std::abs(p.definitional.lqu - p.closed.lqu);
  p.lqu_residual_paper = std::abs(p.definitional.lqu - p.lqu_paper);

  if (p.max_residual > 1e-8) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "lmg_validate(lambda=%.6f): closed vs definitional residuals N=%.3e I=%.3e "
                  "D=%.3e exceed 1e-8",
                  lambda, rn, ri, rd);
    throw ValidationError(buf);
  }
  return p;
}

}  // namespace spinqcorr
