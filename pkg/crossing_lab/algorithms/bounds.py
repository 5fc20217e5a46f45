"""Closed-form crossing-number and edge-count bounds.

All values are 64-bit floats. Expressions whose exponents grow like ``1/alpha``
are evaluated in log space once ``alpha`` drops below ``LOG_SPACE_ALPHA``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..core.errors import InvalidParameterError

__all__ = [
    "LOG_BASE",
    "LOG_SPACE_ALPHA",
    "BoundParams",
    "BoundValue",
    "DualParams",
    "bs_max_edges",
    "corollary_c2k_lb",
    "crossing_lemma_lb",
    "dual_constants",
    "dual_contradiction",
    "dual_edge_bound",
    "euler_lb",
    "girth_lb",
    "pst_lb",
    "theorem2_constants",
    "theorem2_lb",
]

LOG_SPACE_ALPHA = 0.25
LOG_BASE = "e"


@dataclass(frozen=True, slots=True)
class BoundValue:
    value: float
    applicable: bool
    hypothesis: str
    metadata: dict[str, str] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict[str, object]:
        return {
            "value": self.value,
            "applicable": self.applicable,
            "hypothesis": self.hypothesis,
            **({"metadata": dict(self.metadata)} if self.metadata else {}),
        }


@dataclass(frozen=True, slots=True)
class BoundParams:
    """Constants ``c`` and ``c'`` of the monotone-property bound for ``(A, alpha)``."""

    A: float
    alpha: float
    c: float
    c_prime: float

    def to_dict(self) -> dict[str, float]:
        return {"A": self.A, "alpha": self.alpha, "c": self.c, "c_prime": self.c_prime}


@dataclass(frozen=True, slots=True)
class DualParams:
    N: float
    alpha: float
    A_dual: float
    threshold_exponent: float

    def threshold(self, edges: float) -> float:
        """Crossing budget ``e^2 / 2^(16 + 3/alpha)`` for a subgraph with ``edges`` edges."""

        return _power_ratio(2.0 * _safe_log(edges) - self.threshold_exponent * math.log(2.0))

    def to_dict(self) -> dict[str, float]:
        return {
            "N": self.N,
            "alpha": self.alpha,
            "A_dual": self.A_dual,
            "threshold_exponent": self.threshold_exponent,
        }


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0:
            raise InvalidParameterError(f"{name} must be positive, got {value}")


def _safe_log(value: float) -> float:
    return math.log(value) if value > 0 else -math.inf


def _power_ratio(log_value: float) -> float:
    if log_value == -math.inf:
        return 0.0
    try:
        return math.exp(log_value)
    except OverflowError:
        return math.inf


def crossing_lemma_lb(n: int, e: int) -> BoundValue:
    if n < 1 or e < 0:
        raise InvalidParameterError(f"crossing lemma needs n >= 1 and e >= 0, got n={n}, e={e}")
    return BoundValue(value=e**3 / (64 * n**2), applicable=e >= 4 * n, hypothesis="e >= 4n")


def euler_lb(n: int, e: int) -> BoundValue:
    if n < 3:
        raise InvalidParameterError(f"Euler bound needs n >= 3, got {n}")
    return BoundValue(value=float(max(0, e - 3 * n + 6)), applicable=True, hypothesis="n >= 3")


def girth_lb(n: int, e: int, girth: float) -> BoundValue:
    """``cr >= e - g(n-2)/(g-2)``: a planar graph of girth ``g`` is that sparse."""

    if n < 3:
        raise InvalidParameterError(f"girth bound needs n >= 3, got {n}")
    if math.isinf(girth):
        return BoundValue(value=0.0, applicable=True, hypothesis="acyclic")
    g = int(girth)
    if g < 3:
        raise InvalidParameterError(f"girth must be at least 3, got {girth}")
    surplus = Fraction(e) - Fraction(g * (n - 2), g - 2)
    return BoundValue(
        value=float(max(0, math.ceil(surplus))),
        applicable=True,
        hypothesis=f"girth {g}",
    )


def theorem2_constants(A: float, alpha: float) -> BoundParams:
    """``c = 88^(2a) 2^(a+2) A`` and ``c' = 1 / (180^2 2^(1+2/a) A^(1/a))``."""

    _require_positive(A=A, alpha=alpha)
    if alpha < LOG_SPACE_ALPHA:
        log_c = 2 * alpha * math.log(88) + (alpha + 2) * math.log(2) + math.log(A)
        log_c_prime = -(
            2 * math.log(180) + (1 + 2 / alpha) * math.log(2) + math.log(A) / alpha
        )
        return BoundParams(
            A=A, alpha=alpha, c=_power_ratio(log_c), c_prime=_power_ratio(log_c_prime)
        )
    c = 88 ** (2 * alpha) * 2 ** (alpha + 2) * A
    c_prime = 1 / (180**2 * 2 ** (1 + 2 / alpha) * A ** (1 / alpha))
    return BoundParams(A=A, alpha=alpha, c=c, c_prime=c_prime)


def _density_bound(n: int, e: int, alpha: float, c_prime: float) -> float:
    """``c' e^(2+1/a) / n^(1+1/a)``."""

    if e == 0:
        return 0.0
    if alpha < LOG_SPACE_ALPHA:
        log_value = (
            math.log(c_prime) + (2 + 1 / alpha) * math.log(e) - (1 + 1 / alpha) * math.log(n)
        )
        return _power_ratio(log_value)
    return c_prime * e ** (2 + 1 / alpha) / n ** (1 + 1 / alpha)


def theorem2_lb(n: int, e: int, params: BoundParams) -> BoundValue:
    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    return BoundValue(
        value=_density_bound(n, e, params.alpha, params.c_prime),
        applicable=e >= params.c * n,
        hypothesis=f"e >= c n with c = {params.c!r}",
    )


def pst_lb(
    n: int,
    e: int,
    alpha: float,
    c_user: float,
    c_prime_user: float,
) -> BoundValue:
    """Bound under the ``e >= c n log^2 n`` hypothesis; constants are caller supplied."""

    _require_positive(alpha=alpha, c_user=c_user, c_prime_user=c_prime_user)
    if n < 2:
        raise InvalidParameterError(f"n must be at least 2, got {n}")
    threshold = c_user * n * math.log(n) ** 2
    return BoundValue(
        value=_density_bound(n, e, alpha, c_prime_user),
        applicable=e >= threshold,
        hypothesis=f"e >= c n log^2 n = {threshold!r}",
        metadata={"log_base": LOG_BASE},
    )


def corollary_c2k_lb(n: int, e: int, k: int) -> BoundValue:
    """Bound for graphs without a cycle of length ``2k`` via ``A = 100k, alpha = 1/k``."""

    if k < 2:
        raise InvalidParameterError(f"cycle parameter k must be at least 2, got {k}")
    return theorem2_lb(n, e, theorem2_constants(100 * k, 1 / k))


def bs_max_edges(n: int, k: int) -> float:
    """Edge cap ``100 k n^(1+1/k)`` for graphs without a cycle of length ``2k``."""

    if k < 2:
        raise InvalidParameterError(f"cycle parameter k must be at least 2, got {k}")
    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    return 100 * k * n ** (1 + 1 / k)


def dual_constants(N: float, alpha: float) -> DualParams:
    _require_positive(N=N, alpha=alpha)
    exponent = 16 + 3 / alpha
    if alpha < LOG_SPACE_ALPHA:
        floor = _power_ratio(2 * math.log(88) + (1 + 3 / alpha) * math.log(2))
    else:
        floor = 88**2 * 2 ** (1 + 3 / alpha)
    return DualParams(N=N, alpha=alpha, A_dual=max(floor, N), threshold_exponent=exponent)


def dual_edge_bound(n: int, params: DualParams) -> BoundValue:
    """Edge cap ``A n^(1+alpha)`` implied by the crossing budget on dense subgraphs."""

    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    return BoundValue(
        value=params.A_dual * n ** (1 + params.alpha),
        applicable=True,
        hypothesis=(
            f"every subgraph H with e(H) >= {params.N!r} has "
            f"cr(H) <= e(H)^2 / 2^{params.threshold_exponent!r}"
        ),
    )


def dual_contradiction(alpha: float) -> bool:
    """True when ``1/2^(16+3/a) < 1/(180^2 2^(1+3/a))``, i.e. the dual argument closes.

    Equivalent to ``180^2 < 2^15`` after cancelling ``2^(1+3/a)``.
    """

    _require_positive(alpha=alpha)
    log_lhs = -(16 + 3 / alpha) * math.log(2)
    log_rhs = -(2 * math.log(180) + (1 + 3 / alpha) * math.log(2))
    return log_lhs < log_rhs
