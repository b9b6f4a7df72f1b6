"""Poisson brackets and the terminating Moyal-Weyl star product.

For an ordered position pair (m, n) the componentwise Poisson bracket is

    {f, g}_mn = (d_m f)(d_n g) - (d_n f)(d_m g)

with the left operand's derivative kept leftmost — coefficients are
quaternions, so the factor order is part of the definition.  The star
product applies the antisymmetric bidifferential operator

    B = sum_{m<n} Theta_mn (d_m (x) d_n  -  d_n (x) d_m)

iteratively to the tensor pair (f, g) and multiplies out:

    f * g = sum_{s>=0} (1/s!) (nu/2)^s  mul(B^s (f (x) g)).

Because B only differentiates in a..d, the series terminates at
s = min(position degree f, position degree g).  Theta and nu may stay formal
(fresh central variables) or be given exact rational values.

The tensor state after s applications of B is held as a map from derivative
multi-index pairs (alpha, beta) to central weight polynomials; equal pairs
are merged and branches whose derivative vanishes are pruned as they appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .poly import QPolynomial, VAR_INDEX

PAIRS = ("ab", "ac", "ad", "bc", "bd", "cd")

_PAIR_INDICES = {pair: (VAR_INDEX[pair[0]], VAR_INDEX[pair[1]]) for pair in PAIRS}
_PAIR_THETA = {pair: VAR_INDEX["Theta_" + pair] for pair in PAIRS}


def pair_indices(pair: str) -> tuple[int, int]:
    try:
        return _PAIR_INDICES[pair]
    except KeyError:
        raise DomainError(f"unknown bracket pair {pair!r}; expected one of {', '.join(PAIRS)}") from None


def poisson_bracket(f: QPolynomial, g: QPolynomial, pair: str) -> QPolynomial:
    m, n = pair_indices(pair)
    return f.partial(m) * g.partial(n) - f.partial(n) * g.partial(m)


@dataclass(frozen=True)
class ThetaSpec:
    """Formal Theta symbols (values=None) or six exact rational values."""

    values: tuple | None = None

    @classmethod
    def formal(cls) -> "ThetaSpec":
        return cls(None)

    @classmethod
    def zero(cls) -> "ThetaSpec":
        return cls((Fraction(0),) * 6)

    @classmethod
    def numeric(cls, mapping) -> "ThetaSpec":
        values = [Fraction(0)] * 6
        for pair, value in mapping.items():
            if pair not in _PAIR_INDICES:
                raise DomainError(f"unknown bracket pair {pair!r}")
            values[PAIRS.index(pair)] = Fraction(value)
        return cls(tuple(values))

    def is_formal(self) -> bool:
        return self.values is None


@dataclass(frozen=True)
class StarConfig:
    """Evaluation policy for star products.

    theta: formal symbols or numeric values for the six Theta_mn.
    nu: the string "formal" or an exact rational value.
    order_cap: optional cap on the correction order s (None = run to
    natural termination).
    """

    theta: ThetaSpec = ThetaSpec(None)
    nu: object = "formal"
    order_cap: int | None = None

    def __post_init__(self):
        if self.nu != "formal":
            try:
                object.__setattr__(self, "nu", Fraction(self.nu))
            except (ValueError, TypeError, ZeroDivisionError):
                raise DomainError(f"nu must be 'formal' or a rational value, got {self.nu!r}")
        if self.order_cap is not None and self.order_cap < 0:
            raise DomainError("order_cap must be non-negative")


DEFAULT_CONFIG = StarConfig()

_ZERO4 = (0, 0, 0, 0)
_NU_POLY = QPolynomial.variable("nu")


def _bump(alpha, m):
    return alpha[:m] + (alpha[m] + 1,) + alpha[m + 1:]


class _DerivTable:
    """Cache of iterated partials of one polynomial, keyed by multi-index."""

    def __init__(self, poly):
        self._cache = {_ZERO4: poly}

    def get(self, alpha) -> QPolynomial:
        cached = self._cache.get(alpha)
        if cached is None:
            m = next(i for i, e in enumerate(alpha) if e)
            lower = alpha[:m] + (alpha[m] - 1,) + alpha[m + 1:]
            cached = self.get(lower).partial(m)
            self._cache[alpha] = cached
        return cached


def _theta_factors(theta: ThetaSpec):
    """(m, n, weight) triples for the active pairs; zero-weight pairs dropped."""
    factors = []
    for pos, pair in enumerate(PAIRS):
        m, n = _PAIR_INDICES[pair]
        if theta.is_formal():
            weight = QPolynomial.variable(_PAIR_THETA[pair])
        else:
            value = theta.values[pos]
            if not value:
                continue
            weight = QPolynomial.constant(value)
        factors.append((m, n, weight))
    return factors


def _natural_cap(f, g, config):
    smax = min(f.position_degree(), g.position_degree())
    if smax < 0:
        smax = 0
    if config.order_cap is not None:
        smax = min(smax, config.order_cap)
    return smax


def _correction_terms(f, g, theta, max_order):
    """Yield (s, sum-of-weighted-derivative-products, 1/(s! 2^s)) for s >= 1."""
    if max_order < 1:
        return
    factors = _theta_factors(theta)
    if not factors:
        return
    df = _DerivTable(f)
    dg = _DerivTable(g)
    state = {(_ZERO4, _ZERO4): QPolynomial.constant(1)}
    prefactor = Fraction(1)
    for s in range(1, max_order + 1):
        new_state = {}
        for (alpha, beta), weight in state.items():
            for m, n, wpoly in factors:
                for am, bn, sign in ((m, n, 1), (n, m, -1)):
                    a2 = _bump(alpha, am)
                    if df.get(a2).is_zero():
                        continue
                    b2 = _bump(beta, bn)
                    if dg.get(b2).is_zero():
                        continue
                    delta = weight * wpoly
                    if sign < 0:
                        delta = -delta
                    if (a2, b2) in new_state:
                        merged = new_state[(a2, b2)] + delta
                        if merged.is_zero():
                            del new_state[(a2, b2)]
                        else:
                            new_state[(a2, b2)] = merged
                    else:
                        new_state[(a2, b2)] = delta
        state = new_state
        if not state:
            return
        prefactor /= 2 * s
        term = QPolynomial.zero()
        for (alpha, beta), weight in state.items():
            term = term + (df.get(alpha) * dg.get(beta)) * weight
        yield s, term, prefactor


def star(f: QPolynomial, g: QPolynomial, config: StarConfig = DEFAULT_CONFIG) -> QPolynomial:
    """The full (terminating) star product of f and g under `config`."""
    result = f * g
    if config.nu != "formal" and config.nu == 0:
        return result
    for s, term, prefactor in _correction_terms(f, g, config.theta, _natural_cap(f, g, config)):
        term = term * prefactor
        if config.nu == "formal":
            term = term * (_NU_POLY ** s)
        else:
            term = term * (config.nu ** s)
        result = result + term
    return result


def star_order_term(f: QPolynomial, g: QPolynomial, s: int,
                    config: StarConfig = DEFAULT_CONFIG) -> QPolynomial:
    """The coefficient of nu^s in the star expansion (nu kept formal)."""
    if s < 0:
        raise DomainError("correction order must be non-negative")
    if s == 0:
        return f * g
    cap = _natural_cap(f, g, config)
    if s > cap:
        return QPolynomial.zero()
    for order, term, prefactor in _correction_terms(f, g, config.theta, s):
        if order == s:
            return term * prefactor
    return QPolynomial.zero()


def star_commutator(f: QPolynomial, g: QPolynomial,
                    config: StarConfig = DEFAULT_CONFIG) -> QPolynomial:
    return star(f, g, config) - star(g, f, config)


def associator(f: QPolynomial, g: QPolynomial, h: QPolynomial,
               config: StarConfig = DEFAULT_CONFIG) -> QPolynomial:
    return star(star(f, g, config), h, config) - star(f, star(g, h, config), config)
