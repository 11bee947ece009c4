#include "qwalk/kspace.hpp"
#include "qwalk/error.hpp"

#include <cmath>

namespace qwalk {

LaurentSpinor::LaurentSpinor(std::map<long, Spinor> coefficients, Parity parity)
    : coefficients_(std::move(coefficients)), parity_(parity) {
  for (const auto &[x, s] : coefficients_)
    if (parity_of(x) != parity_)
      throw InvalidState("Laurent spinor support at " + std::to_string(x) +
                         " does not have the declared parity");
}

Spinor LaurentSpinor::operator()(double k) const {
  Spinor out;
  for (const auto &[x, s] : coefficients_)
    out += std::polar(1.0, -k * static_cast<double>(x)) * s;
  return out;
}

LaurentSpinor fourier_initial(const WalkState &state) {
  const auto parity = support_parity(state);
  if (!parity)
    throw InvalidState("initial support mixes even and odd sites; "
                       "momentum-space propagation needs a single parity");
  std::map<long, Spinor> coefficients;
  for (const auto &[x, s] : state.amplitudes())
    if (s.a != Complex{} || s.b != Complex{})
      coefficients.emplace(x, s);
  return LaurentSpinor(std::move(coefficients), *parity);
}

bool fully_degenerate(const CoinPair &coins) {
  const CoinTrig t(coins);
  constexpr double eps = 1e-9;
  const bool both_flip = std::abs(t.c0) < eps && std::abs(t.c1) < eps;
  const bool both_diagonal = std::abs(t.s0) < eps && std::abs(t.s1) < eps;
  return both_flip || both_diagonal;
}

std::optional<EigenSystem> try_eigen_system(double k, const CoinTrig &t, Parity support,
                                            const Spinor &init_at_k) {
  const double x = t.c0 * t.c1 * std::cos(2.0 * k) + t.s0 * t.s1;
  const double root = std::sqrt(std::max(0.0, 1.0 - x * x));
  if (root < degenerate_w_threshold)
    return std::nullopt;

  EigenSystem e;
  e.lambda0 = {x, root};
  e.lambda1 = {x, -root};
  const Complex phase = std::polar(1.0, 2.0 * k);
  e.u = support == Parity::even ? t.s0 * t.c1 * phase - t.c0 * t.s1
                                : t.s1 * t.c0 * phase - t.c1 * t.s0;
  e.v = {0.0, -t.c0 * t.c1 * std::sin(2.0 * k)};
  e.w = {0.0, root};
  const double u2 = std::norm(e.u);
  e.n0 = u2 + std::norm(e.v + e.w);
  e.n1 = u2 + std::norm(e.v - e.w);
  if (std::min(e.n0, e.n1) < degenerate_norm_threshold)
    return std::nullopt;
  e.f = std::conj(e.u) * init_at_k.a + std::conj(e.v + e.w) * init_at_k.b;
  e.g = std::conj(e.u) * init_at_k.a + std::conj(e.v - e.w) * init_at_k.b;
  return e;
}

EigenSystem eigen_system(double k, const CoinPair &coins, Parity support,
                         const LaurentSpinor &init) {
  if (fully_degenerate(coins))
    throw DegenerateParameters("coin angles are on a fully degenerate line");
  const auto e = try_eigen_system(k, CoinTrig(coins), support, init(k));
  if (!e)
    throw DegenerateMomentum(k);
  return *e;
}

std::optional<Spinor> try_spinor_at(double k, long t, const CoinTrig &trig,
                                    const LaurentSpinor &init) {
  if (t == 0)
    return init(k);
  const auto e = try_eigen_system(k, trig, init.parity(), init(k));
  if (!e)
    return std::nullopt;
  const long pairs = t / 2;
  const double phi = std::arg(e->lambda0);
  const Complex p0 = std::polar(1.0, phi * static_cast<double>(pairs)) * e->f / e->n0;
  const Complex p1 = std::polar(1.0, -phi * static_cast<double>(pairs)) * e->g / e->n1;
  const Complex sum = p0 + p1;
  const Complex diff = p0 - p1;
  if (t % 2 == 0)
    return Spinor{e->u * sum, e->v * sum + e->w * diff};

  // One more step with the coin of the current support parity.
  const bool even = init.parity() == Parity::even;
  const double c = even ? trig.c0 : trig.c1;
  const double s = even ? trig.s0 : trig.s1;
  return Spinor{std::polar(1.0, k) * ((c * e->u + s * e->v) * sum + s * e->w * diff),
                std::polar(1.0, -k) * ((s * e->u - c * e->v) * sum - c * e->w * diff)};
}

Spinor spinor_at(double k, long t, const CoinPair &coins, const LaurentSpinor &init) {
  if (t < 0)
    throw std::invalid_argument("spinor_at: negative step count");
  if (fully_degenerate(coins))
    throw DegenerateParameters("coin angles are on a fully degenerate line");
  const auto s = try_spinor_at(k, t, CoinTrig(coins), init);
  if (!s)
    throw DegenerateMomentum(k);
  return *s;
}

Spinor inverse_fourier(const MomentumSpinor &psi, long x, const QuadratureSpec &spec) {
  const NodeFunction f = [&psi, x](double k, std::span<Complex> out) {
    const auto s = psi(k);
    if (!s)
      return false;
    const Complex mode = std::polar(1.0, k * static_cast<double>(x));
    out[0] = mode * s->a;
    out[1] = mode * s->b;
    return true;
  };
  const auto r = integrate_periodic(f, 2, spec, Execution::serial);
  return {r.values[0], r.values[1]};
}

MomentumSpinor propagated(const CoinPair &coins, const LaurentSpinor &init, long t) {
  if (fully_degenerate(coins))
    throw DegenerateParameters("coin angles are on a fully degenerate line");
  return [trig = CoinTrig(coins), init, t](double k) { return try_spinor_at(k, t, trig, init); };
}

} // namespace qwalk
