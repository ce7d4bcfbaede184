"""Exact and asymptotic sizes of symbol-weight spaces.

The constant symbol-weight space SW(n,q,r) holds all length-n words over a
q-ary alphabet whose most frequent symbol occurs exactly r times; the bounded
space SW(n,q,<=r) relaxes "exactly" to "at most".  Exact sizes follow by
summing multinomial coefficients over the admissible frequency compositions:

    |SW(n,q,r)|   = sum_{k=k0}^{floor(n/r)} C(q,k) * C(n; r x k, n-rk)
                    * sum_{x bounded composition of n-rk into q-k parts <= r-1}
                      C(n-rk; x_1..x_{q-k})
    |SW(n,q,<=r)| = sum over compositions y of n into q parts <= r of C(n; y)

where k counts the symbols hitting frequency r, and

    k0 = max(n - (r-1)q, 1)

is the smallest number of symbols that can occur exactly r times.  All sizes
use arbitrary-precision integers; rates are reported in double precision as
(1/n) log_q(size).

Asymptotically (q = theta * n^epsilon), the per-symbol rate of SW(n,q,r)
tends to the q-ary entropy h_q(1 - r/n) for r above the optimal weight
ceil(n/q), and to 1 at the optimal weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .compositions import (
    count_all_compositions,
    count_bounded_compositions,
    iter_compositions,
)
from .limits import check_cap


def multinomial(n: int, parts) -> int:
    """C(n; parts) with sum(parts) <= n; a final implicit part absorbs the rest."""
    result = 1
    remaining = n
    for p in parts:
        result *= math.comb(remaining, p)
        remaining -= p
    if remaining < 0:
        raise ValueError("parts sum beyond n")
    return result


def min_symbols_at_weight(n: int, q: int, r: int) -> int:
    """Smallest number of symbols that can occur exactly r times in a word of
    symbol weight r: max(n - (r-1)q, 1).  Equals q - D when r = ceil(n/q) =
    (n+D)/q with 0 <= D <= q-1, and 1 otherwise."""
    if r < -(-n // q):
        raise ValueError(f"weight {r} below pigeonhole minimum for (n={n}, q={q})")
    return max(n - (r - 1) * q, 1)


def count_exact_weight_compositions(n: int, q: int, r: int) -> int:
    """Number of compositions of n into q parts with largest part exactly r."""
    if not (-(-n // q) <= r <= n):
        raise ValueError(f"weight {r} out of range for (n={n}, q={q})")
    k0 = min_symbols_at_weight(n, q, r)
    total = 0
    for k in range(k0, n // r + 1):
        if k > q:
            break
        if k == q:
            inner = 1 if n == r * q else 0
        else:
            inner = count_bounded_compositions(n - r * k, q - k, r - 1) if r >= 1 else 0
        total += math.comb(q, k) * inner
    return total


def constant_space_size(n: int, q: int, r: int, cap: int | None = None) -> int:
    """|SW(n,q,r)|: words whose top symbol frequency is exactly r.

    Streams the inner composition families rather than materialising them;
    refuses above the enumeration cap.
    """
    if not (-(-n // q) <= r <= n):
        raise ValueError(f"weight {r} out of range for (n={n}, q={q})")
    if n == 0:
        return 1 if r == 0 else 0
    k0 = min_symbols_at_weight(n, q, r)
    total = 0
    for k in range(k0, n // r + 1):
        if k > q:
            break
        rest = n - r * k
        placements = math.comb(q, k) * multinomial(n, [r] * k)
        if k == q:
            if rest == 0:
                total += placements
            continue
        check_cap(
            f"inner compositions of {rest} into {q - k} parts <= {r - 1}",
            count_bounded_compositions(rest, q - k, r - 1) if r >= 1 else 0,
            cap,
        )
        inner = 0
        for comp in iter_compositions(rest, q - k, max_weight=r - 1):
            inner += multinomial(rest, comp.parts)
        total += placements * inner
    return total


def bounded_space_size(n: int, q: int, r: int, cap: int | None = None) -> int:
    """|SW(n,q,<=r)|: sum of multinomial weights over bounded compositions."""
    if not (1 <= r <= n):
        if n == 0:
            return 1
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    check_cap(
        f"compositions of {n} into {q} parts <= {r}",
        count_bounded_compositions(n, q, r),
        cap,
    )
    total = 0
    for comp in iter_compositions(n, q, max_weight=r):
        total += multinomial(n, comp.parts)
    return total


def q_ary_entropy(x: float, q: float) -> float:
    """h_q(x) = -x log_q(x/(q-1)) - (1-x) log_q(1-x), with h_q(0) = 0 and the
    continuous extension at x = 1."""
    if q <= 1:
        raise ValueError("need q > 1")
    if x < 0 or x > 1:
        raise ValueError(f"entropy argument {x} outside [0, 1]")
    lq = math.log(q)
    if x == 0:
        return 0.0
    if x == 1:
        return math.log(q - 1) / lq
    return (-x * math.log(x / (q - 1)) - (1 - x) * math.log(1 - x)) / lq


@dataclass(frozen=True)
class AsymptoticRegime:
    """Block-length scaling q = theta * n^epsilon with limits rho = r/n and
    delta = d/n (delta optional for size-only questions)."""

    theta: float
    epsilon: float
    rho: float
    delta: float | None = None

    def __post_init__(self):
        if self.theta <= 0:
            raise ValueError("theta must be positive")
        if not (0 <= self.epsilon <= 1):
            raise ValueError("epsilon must lie in [0, 1]")
        if not (0 <= self.rho <= 1):
            raise ValueError("rho must lie in [0, 1]")

    @property
    def constant_q(self) -> bool:
        return self.epsilon == 0

    def alphabet_size(self) -> int:
        if not self.constant_q:
            raise ValueError("alphabet grows with n in this regime")
        q = round(self.theta)
        if q < 2 or abs(q - self.theta) > 1e-9:
            raise ValueError("constant-q regime needs integer theta >= 2")
        return q


def asymptotic_space_rate(regime: AsymptoticRegime, *, optimal_weight: bool = False) -> float:
    """Leading term of (1/n) log_q |SW(n,q,r)|.

    1 when r is the optimal weight ceil(n/q); otherwise h_q(1 - rho) for
    constant q, and its large-q limit 1 - rho when q grows with n.  The o(1)
    corrections are never estimated.
    """
    if optimal_weight:
        return 1.0
    if regime.constant_q:
        return q_ary_entropy(1 - regime.rho, regime.alphabet_size())
    return 1 - regime.rho


def empirical_space_rate(n: int, q: int, r: int, cap: int | None = None) -> float:
    """(1/n) log_q |SW(n,q,r)| computed from the exact size."""
    size = constant_space_size(n, q, r, cap)
    if size <= 0:
        raise ValueError("empty space has no rate")
    # math.log of huge ints stays exact enough via log2
    return math.log2(size) / (n * math.log2(q))
