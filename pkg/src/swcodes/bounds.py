"""Upper and lower bounds on the maximum size of symbol-weight codes.

Every bound evaluates to a BoundResult carrying its direction, its value (an
exact integer for size bounds, a float for asymptotic rate bounds) and a
provenance tag naming the method.  `best_bounds` evaluates everything
applicable to an instance, cross-checks max-lower <= min-upper, and returns
both winners with the full candidate lists.

Size lower bounds combine a binary constant-weight code (which frequency
patterns to use) with constant-composition codes inside each pattern; the
constant-composition sizes come from a caller-supplied oracle of known code
sizes, since good constant-composition codes at interesting distances are
literature values rather than desk-scale computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .compositions import Composition, dplus_parts, refinement_witness
from .limits import EnumerationCapError
from .spaces import (
    AsymptoticRegime,
    bounded_space_size,
    constant_space_size,
    min_symbols_at_weight,
    q_ary_entropy,
)


class NotApplicableError(ValueError):
    """The bound's hypothesis fails on these inputs."""


@dataclass(frozen=True)
class BoundResult:
    value: int | float
    direction: str            # "lower" | "upper"
    kind: str                 # "size" | "rate"
    provenance: str
    inputs: dict
    exact: bool = False       # value is the true optimum, not just a bound
    clamped: bool = False     # negative rate clamped to 0
    details: tuple = ()       # per-term breakdown for composed bounds

    def __str__(self):
        tag = "=" if self.exact else (">=" if self.direction == "lower" else "<=")
        return f"[{self.provenance}] {tag} {self.value}"


# --- binary constant-weight code sizes A2(q, d, w) ---

@dataclass(frozen=True)
class CWTableEntry:
    q: int
    d: int
    w: int
    value: int
    exact: bool
    source: str


# Only table values with solid published sources; everything else comes from
# the closed-form regimes below or the GV quotient.
CW_TABLE: dict[tuple[int, int, int], CWTableEntry] = {
    (8, 4, 4): CWTableEntry(8, 4, 4, 14, True, "Agrell-Vardy-Zeger 2000 upper/lower tables"),
    (16, 14, 8): CWTableEntry(16, 14, 8, 2, True, "Agrell-Vardy-Zeger 2000 upper/lower tables"),
    (16, 6, 8): CWTableEntry(16, 6, 8, 120, False, "Agrell-Vardy-Zeger 2000 lower-bound table"),
}


def _cw_structural(q: int, d: int, w: int) -> tuple[int, str] | None:
    """Closed-form exact values of A2(q,d,w) in degenerate regimes."""
    if w == 0 or w == q:
        return 1, "single word"
    if d <= 2:
        return math.comb(q, w), "distance 2 excludes nothing in the constant-weight space"
    span = 2 * min(w, q - w)
    if d > span:
        return 1, "required distance exceeds the space diameter"
    if d == 2 * w:
        return q // w, "disjoint supports"
    return None


def cw_gv_value(q: int, d: int, w: int) -> int:
    """GV quotient ceil(C(q,w) / sum_{i=0}^{d-2} C(w,i) C(q-w,i)).

    The denominator over-counts the relevant ball (index i runs to d-2 rather
    than to d/2-1), which only weakens the bound; it is evaluated as stated.
    """
    denom = sum(math.comb(w, i) * math.comb(q - w, i) for i in range(0, d - 1))
    return -(-math.comb(q, w) // denom)


def cw_lower(q: int, d2: int, k: int) -> BoundResult:
    """Best available lower bound on A2(q, d2, k).

    Constant-weight distances are even, so odd d2 is normalised up to d2+1.
    Returns the max of the structural exact regimes, the curated table, and
    the GV quotient, with provenance naming the winner.
    """
    if not (0 <= k <= q):
        raise ValueError("need 0 <= k <= q")
    if d2 % 2:
        d2 += 1
    inputs = {"q": q, "d": d2, "w": k}
    structural = _cw_structural(q, d2, k)
    if structural is not None:
        value, why = structural
        return BoundResult(value, "lower", "size", "cw-structural", inputs,
                           exact=True, details=(why,))
    best_val = cw_gv_value(q, d2, k)
    best = BoundResult(best_val, "lower", "size", "cw-gv", inputs)
    entry = CW_TABLE.get((q, d2, k))
    if entry is not None and entry.value >= best_val:
        best = BoundResult(entry.value, "lower", "size", "cw-table", inputs,
                           exact=entry.exact, details=(entry.source,))
    return best


def levenshtein_significance(q: int, d: int, k: int) -> bool:
    """Whether the constant-weight GV bound grows exponentially for these
    parameters: k inside the window (q/2)(1 -+ sqrt(1 - 4d/q)) and
    d <= k (1 - k/q).  Here d is half the Hamming distance (as in A2(q,2d,k))."""
    if 4 * d > q:
        return False
    s = math.sqrt(1 - 4 * d / q)
    lo = q / 2 * (1 - s)
    hi = q / 2 * (1 + s)
    return lo <= k <= hi and d <= k * (1 - k / q)


# --- permutation-code anticode bound ---

def derangements(i: int) -> int:
    if i == 0:
        return 1
    if i == 1:
        return 0
    a, b = 1, 0
    for m in range(2, i + 1):
        a, b = b, (m - 1) * (a + b)
    return b


def permutation_ball_volume(r: int, radius: int) -> int:
    """Words of the symmetric group on r symbols within Hamming distance
    `radius` of a fixed permutation: sum_i C(r,i) D_i over i <= radius."""
    return sum(math.comb(r, i) * derangements(i) for i in range(0, min(radius, r) + 1))


def perm_anticode_lower(r: int, d: int) -> BoundResult:
    """GV-style lower bound r! / V(2d-1, S_r) on the number of weight-r
    compositions pairwise >= d apart, for the staircase frequency pattern
    (frequencies 1..r, so n = r(r+1)/2 and q = r).  Rounded up: a family at
    least as large as the real-valued quotient exists."""
    if r < 1 or d < 1:
        raise ValueError("need r >= 1 and d >= 1")
    vol = permutation_ball_volume(r, 2 * d - 1)
    value = -(-math.factorial(r) // vol)
    return BoundResult(value, "lower", "size", "perm-gv",
                       {"r": r, "d": d, "n": r * (r + 1) // 2, "q": r})


# --- rate bounds ---

def gv_rate_lower(regime: AsymptoticRegime, mode: str = "exact") -> BoundResult:
    """Existence rate lower bound.

    Constant q: h_q(1-rho) - h_q(delta) for the exact-weight space and
    1 - h_q(delta) for the bounded space.  Growing q: 1 - rho - delta and
    1 - delta.  Negative values clamp to 0 (flagged): the empty-code bound.
    """
    if regime.delta is None:
        raise ValueError("regime needs delta for distance bounds")
    if mode not in ("exact", "bounded"):
        raise ValueError("mode must be 'exact' or 'bounded'")
    if regime.constant_q:
        q = regime.alphabet_size()
        if not (0 < regime.delta <= (q - 1) / q):
            raise ValueError("need 0 < delta <= (q-1)/q")
        if mode == "exact":
            value = q_ary_entropy(1 - regime.rho, q) - q_ary_entropy(regime.delta, q)
        else:
            value = 1 - q_ary_entropy(regime.delta, q)
    else:
        value = (1 - regime.rho - regime.delta) if mode == "exact" else (1 - regime.delta)
    clamped = value < 0
    return BoundResult(max(value, 0.0), "lower", "rate", "gv-rate",
                       {"mode": mode, "rho": regime.rho, "delta": regime.delta,
                        "constant_q": regime.constant_q},
                       clamped=clamped)


def lp_kappa(x: float, q: int) -> float:
    """(q-1)/q - (q-2)x/q - (2/q) sqrt((q-1)x(1-x))."""
    return (q - 1) / q - (q - 2) * x / q - 2 / q * math.sqrt((q - 1) * x * (1 - x))


def lp_rate_upper(delta: float, q: int) -> BoundResult:
    """Linear-programming rate upper bound h_q(kappa_q(delta)) for the full
    Hamming space; applies to symbol-weight codes as subsets of it."""
    if not (0 <= delta <= (q - 1) / q):
        raise ValueError("need 0 <= delta <= (q-1)/q")
    value = q_ary_entropy(lp_kappa(delta, q), q)
    return BoundResult(value, "upper", "rate", "lp", {"delta": delta, "q": q})


def singleton_upper(n: int, d: int, q: int) -> BoundResult:
    """A_q(n,d) <= q^(n-d+1)."""
    if not (1 <= d <= n):
        raise ValueError("need 1 <= d <= n")
    return BoundResult(q ** (n - d + 1), "upper", "size", "singleton",
                       {"n": n, "d": d, "q": q})


def singleton_rate_upper(delta: float) -> BoundResult:
    return BoundResult(1 - delta, "upper", "rate", "singleton-rate", {"delta": delta})


def trivial_q_regime(n: int, d: int, r: int, q: int) -> BoundResult | None:
    """Exactly q codewords exist when d >= r > 2n/3: two codewords cannot
    repeat the same symbol r times, and the shift family x + a*1 attains q."""
    if d >= r and 3 * r > 2 * n:
        return BoundResult(q, "upper", "size", "shift-family-exact",
                           {"n": n, "d": d, "r": r, "q": q}, exact=True)
    return None


def johnson_upper(n: int, d: int, r: int, q: int) -> BoundResult:
    """Puncturing recursion A(n) <= floor(n q / (n-r) * A(n-1)), applied while
    r <= 2n/3 and anchored at the exact value q once r > 2(length)/3 (which
    needs d >= r)."""
    if d < r:
        raise NotApplicableError("johnson recursion needs d >= r to anchor")
    if r >= n:
        raise NotApplicableError("johnson recursion needs r < n")
    anchor = n
    while 3 * r <= 2 * anchor:
        anchor -= 1
    if anchor < r:  # cannot happen for r >= 1, kept as a guard
        raise NotApplicableError("no anchor length")
    value = q
    steps = []
    for m in range(anchor + 1, n + 1):
        value = (m * q * value) // (m - r)
        steps.append((m, value))
    return BoundResult(value, "upper", "size", "johnson",
                       {"n": n, "d": d, "r": r, "q": q, "anchor": anchor},
                       details=tuple(steps))


def large_weight_rate_upper(rho: float, delta: float, q: int | None = None) -> BoundResult:
    """Rate upper bound from the johnson recursion, for r <= 2n/3 and d >= r.

    Constant q: h_q(1 - 3rho/2) - (1-rho) h_q((1 - 3rho/2)/(1-rho)) + 1 - 3rho/2.
    Growing q: 1 - 3rho/2.
    """
    if rho > 2 / 3 + 1e-12:
        raise NotApplicableError("needs rho <= 2/3")
    if delta < rho - 1e-12:
        raise NotApplicableError("needs delta >= rho")
    lam = max(1 - 1.5 * rho, 0.0)
    if q is None:
        value = lam
        prov = "johnson-rate-growing-q"
    else:
        value = (q_ary_entropy(lam, q)
                 - (1 - rho) * q_ary_entropy(lam / (1 - rho), q)
                 + lam) if rho < 1 else 0.0
        prov = "johnson-rate"
    return BoundResult(value, "upper", "rate", prov,
                       {"rho": rho, "delta": delta, "q": q})


def dukes_upper(n: int, d: int, q: int) -> BoundResult:
    """Falling factorial q(q-1)...(q-n+d) for injective words (weight 1),
    valid when q > n."""
    if q <= n:
        raise NotApplicableError("needs q > n")
    if not (1 <= d <= n):
        raise ValueError("need 1 <= d <= n")
    value = 1
    for f in range(q, q - n + d - 1, -1):
        value *= f
    return BoundResult(value, "upper", "size", "dukes-injective",
                       {"n": n, "d": d, "q": q})


# --- constant-composition oracle ---

@dataclass(frozen=True)
class OracleEntry:
    parts: tuple[int, ...]      # nonzero parts, sorted ascending
    total: int
    value: int
    min_distance: int | None    # None: caller guarantees validity at query d
    source: str


def _key_parts(parts: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(p for p in parts if p > 0))


class CCOracle:
    """Known lower bounds on constant-composition code sizes A_q(n-vector, d).

    Lookup matches the composition as a multiset of nonzero parts (symbol
    relabelling is an isometry), and falls back to refinement inheritance: a
    composition inherits the bound of any stored composition it refines.
    """

    def __init__(self):
        self.entries: list[OracleEntry] = []

    def add(self, composition, value: int, min_distance: int | None = None,
            source: str = "user") -> None:
        if isinstance(composition, str):
            comp = Composition.from_exponents(composition)
        elif isinstance(composition, Composition):
            comp = composition
        else:
            comp = Composition.from_parts(composition)
        self.entries.append(OracleEntry(_key_parts(comp.parts), comp.n,
                                        int(value), min_distance, source))

    def lookup(self, comp: Composition, d: int) -> tuple[int, str] | None:
        """Best stored bound valid for this composition at distance d."""
        key = _key_parts(comp.parts)
        best: tuple[int, str] | None = None
        for e in self.entries:
            if e.total != comp.n:
                continue
            if e.min_distance is not None and e.min_distance < d:
                continue
            if e.parts == key:
                cand = (e.value, f"oracle:{e.source}")
            elif len(e.parts) <= comp.q and refinement_witness(
                    comp, Composition.from_parts(e.parts)) is not None:
                cand = (e.value, f"oracle-refinement:{e.source}")
            else:
                continue
            if best is None or cand[0] > best[0]:
                best = cand
        return best


def near_uniform_composition(n: int, q: int, k: int, r: int) -> tuple[int, ...]:
    """The composition with k parts equal to r and the remaining q-k parts as
    equal as possible: (q-k)*frac parts of ceil and the rest floor, sorted
    descending."""
    if k == q:
        if n != r * q:
            raise ValueError("k = q needs n = r q")
        return (r,) * q
    rest = n - r * k
    share = rest // (q - k)
    ceil_count = rest - share * (q - k)
    parts = [r] * k + [share + 1] * ceil_count + [share] * (q - k - ceil_count)
    return tuple(parts)


def csw_lower_composed(n: int, q: int, d: int, r: int,
                       oracle: CCOracle | None = None) -> BoundResult:
    """Lower bound on the constant-weight-r code size by uniting
    constant-composition codes over near-uniform frequency patterns.

    For each admissible count k of symbols at frequency r, the patterns form
    a binary constant-weight code on q coordinates; pattern sets at binary
    distance D give compositions at least (D/2)(r - l1) apart in the overlap
    metric, so the binary code only needs distance 2*ceil(d/(r-l1)).  Counts
    k1, k1+2d, k1+4d, ... can be combined (bounded-weight binary words);
    the best starting count wins.  Missing oracle values contribute the
    trivial bound 1 (every nonempty composition space holds a code).
    """
    if not (-(-n // q) <= r <= n):
        raise ValueError(f"weight {r} out of range for (n={n}, q={q})")
    if d < 1:
        raise ValueError("need d >= 1")
    k0 = min_symbols_at_weight(n, q, r)
    kmax = min(n // r, q) if r >= 1 else q
    best_value = 0
    best_terms: tuple = ()
    best_k1 = None
    for k1 in range(k0, kmax + 1):
        b = (kmax - k1) // (2 * d)
        total = 0
        terms = []
        for i in range(b + 1):
            k = k1 + 2 * d * i
            comp_parts = near_uniform_composition(n, q, k, r)
            comp = Composition(comp_parts)
            if k == q:
                cw_val, cw_prov = 1, "single-pattern"
            else:
                l1 = comp_parts[k]  # largest non-r part
                gap = r - l1
                dreq = 2 * -(-d // gap)
                cw = cw_lower(q, dreq, k)
                cw_val, cw_prov = int(cw.value), cw.provenance
            hit = oracle.lookup(comp, d) if oracle is not None else None
            ccc_val, ccc_prov = hit if hit is not None else (1, "trivial")
            total += cw_val * ccc_val
            terms.append({"k": k, "composition": comp_parts,
                          "cw": cw_val, "cw_provenance": cw_prov,
                          "ccc": ccc_val, "ccc_provenance": ccc_prov})
        if total > best_value:
            best_value = total
            best_terms = tuple(terms)
            best_k1 = k1
    return BoundResult(best_value, "lower", "size", "cw-ccc-composed",
                       {"n": n, "q": q, "d": d, "r": r, "k1": best_k1},
                       details=best_terms)


def bsw_lower_composed(n: int, q: int, d: int, r: int,
                       oracle: CCOracle | None = None) -> BoundResult:
    """Bounded-weight lower bound: best constant-weight bound over the
    admissible weights s <= r."""
    smin = -(-n // q)
    if r < smin:
        raise ValueError(f"bounded weight {r} below pigeonhole minimum")
    best = None
    for s in range(smin, r + 1):
        cand = csw_lower_composed(n, q, d, s, oracle)
        if best is None or cand.value > best.value:
            best = BoundResult(cand.value, "lower", "size", "bounded-best-weight",
                               {"n": n, "q": q, "d": d, "r": r, "s": s,
                                "k1": cand.inputs["k1"]},
                               details=cand.details)
    return best


def anticode_sum_lower(family, d: int, oracle: CCOracle | None = None) -> BoundResult:
    """Sum of constant-composition bounds over an anticode family.

    The family must be pairwise >= d in the overlap metric (audited here);
    each member may inherit its oracle value from any composition it refines.
    Members without any oracle value contribute 1.
    """
    members = list(family)
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if dplus_parts(a.parts, b.parts) < d:
                raise ValueError(
                    f"family is not an anticode at distance {d}: "
                    f"{a.to_exponents()} vs {b.to_exponents()}")
    total = 0
    detail = []
    for m in members:
        hit = oracle.lookup(m, d) if oracle is not None else None
        val, prov = hit if hit is not None else (1, "trivial")
        total += val
        detail.append({"composition": m.parts, "ccc": val, "ccc_provenance": prov})
    return BoundResult(total, "lower", "size", "anticode-sum",
                       {"d": d, "members": len(members)}, details=tuple(detail))


# --- aggregation ---

@dataclass
class BestBounds:
    lower: BoundResult
    upper: BoundResult
    lower_candidates: list[BoundResult] = dc_field(default_factory=list)
    upper_candidates: list[BoundResult] = dc_field(default_factory=list)


def best_bounds(n: int, q: int, d: int, r: int, mode: str = "exact",
                oracle: CCOracle | None = None,
                exhaustive_limit: int = 1000) -> BestBounds:
    """Evaluate every applicable bound; brute-force the exact optimum when the
    whole Hamming space fits under `exhaustive_limit` words."""
    from .codes import exhaustive_optimum  # local import: codes uses cliques only

    if mode not in ("exact", "bounded"):
        raise ValueError("mode must be 'exact' or 'bounded'")
    if mode == "exact":
        space = constant_space_size(n, q, r)
    else:
        space = bounded_space_size(n, q, r)
    lowers: list[BoundResult] = []
    uppers: list[BoundResult] = []
    inputs = {"n": n, "q": q, "d": d, "r": r, "mode": mode}

    if space >= 1:
        lowers.append(BoundResult(1, "lower", "size", "nonempty-space", inputs))
    if d == 1:
        lowers.append(BoundResult(space, "lower", "size", "whole-space", inputs,
                                  exact=True))
    try:
        if mode == "exact":
            lowers.append(csw_lower_composed(n, q, d, r, oracle))
        else:
            lowers.append(bsw_lower_composed(n, q, d, r, oracle))
    except EnumerationCapError:
        pass

    uppers.append(BoundResult(space, "upper", "size", "space-size", inputs))
    uppers.append(singleton_upper(n, d, q))
    if mode == "exact":
        exact_regime = trivial_q_regime(n, d, r, q)
        if exact_regime is not None:
            uppers.append(exact_regime)
            lowers.append(BoundResult(q, "lower", "size", "shift-family-exact",
                                      inputs, exact=True))
        try:
            uppers.append(johnson_upper(n, d, r, q))
        except NotApplicableError:
            pass
        if r == 1 and q > n:
            uppers.append(dukes_upper(n, d, q))

    if q ** n <= exhaustive_limit:
        if mode == "exact":
            opt, _ = exhaustive_optimum(n, q, d, exact_weight=r)
        else:
            opt, _ = exhaustive_optimum(n, q, d, max_weight=r)
        result = BoundResult(opt, "lower", "size", "exhaustive", inputs, exact=True)
        lowers.append(result)
        uppers.append(BoundResult(opt, "upper", "size", "exhaustive", inputs,
                                  exact=True))

    best_lower = max(lowers, key=lambda b: b.value)
    best_upper = min(uppers, key=lambda b: b.value)
    if best_lower.value > best_upper.value:
        raise AssertionError(
            f"bound inversion on {inputs}: {best_lower} vs {best_upper}")
    return BestBounds(best_lower, best_upper, lowers, uppers)


# --- rate-curve sampling (the data behind the bound comparison figures) ---

def rate_curves_fixed_delta(q: int, delta: float, grid: int,
                            growing_q: bool = False) -> list[dict]:
    """Sample every rate bound on a rho grid at fixed delta."""
    rows = []
    for i in range(grid + 1):
        rho = i / grid
        row: dict = {"rho": rho, "delta": delta}
        if growing_q:
            row["gv"] = max(1 - rho - delta, 0.0)
            row["singleton"] = 1 - delta
            row["lp"] = None
        else:
            row["gv"] = gv_rate_lower(
                AsymptoticRegime(q, 0.0, rho, delta), "exact").value
            row["singleton"] = 1 - delta
            row["lp"] = lp_rate_upper(delta, q).value
        try:
            row["johnson"] = large_weight_rate_upper(
                rho, delta, None if growing_q else q).value
        except NotApplicableError:
            row["johnson"] = None
        rows.append(row)
    return rows


def rate_curves_fixed_rho(q: int, rho: float, grid: int,
                          growing_q: bool = False) -> list[dict]:
    """Sample every rate bound on a delta grid at fixed rho."""
    rows = []
    dmax = 1.0 if growing_q else (q - 1) / q
    for i in range(1, grid + 1):
        delta = i * dmax / grid
        row: dict = {"rho": rho, "delta": delta}
        if growing_q:
            row["gv"] = max(1 - rho - delta, 0.0)
            row["singleton"] = 1 - delta
            row["lp"] = None
        else:
            row["gv"] = gv_rate_lower(
                AsymptoticRegime(q, 0.0, rho, delta), "exact").value
            row["singleton"] = 1 - delta
            row["lp"] = lp_rate_upper(delta, q).value
        try:
            row["johnson"] = large_weight_rate_upper(
                rho, delta, None if growing_q else q).value
        except NotApplicableError:
            row["johnson"] = None
        rows.append(row)
    return rows
