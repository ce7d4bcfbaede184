"""Compositions of n into q non-negative parts and the overlap distance on them.

A composition records per-symbol frequencies of a word: part i is the number
of times symbol i occurs.  The overlap distance

    dplus(a, b) = n - sum_i min(a_i, b_i) = sum_i max(a_i - b_i, 0)

is a metric on compositions and lower-bounds the Hamming distance between any
two words realising the two compositions.  This module provides counting and
enumeration of bounded-part compositions, the metric, refinement testing, and
greedy/exhaustive searches for families that are pairwise far apart in dplus.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .cliques import max_clique
from .limits import check_cap

_EXP_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def count_bounded_compositions(total: int, parts: int, max_part: int) -> int:
    """Number of compositions of `total` into `parts` parts, each in [0, max_part].

    Inclusion-exclusion over parts forced above max_part:
    sum_i (-1)^i C(parts,i) C(parts+total-(max_part+1)i-1, parts-1).
    """
    if total < 0 or parts < 1 or max_part < 0:
        raise ValueError("need total >= 0, parts >= 1, max_part >= 0")
    result = 0
    for i in range(0, min(parts, total // (max_part + 1)) + 1):
        top = parts + total - (max_part + 1) * i - 1
        if top < parts - 1:
            break
        result += (-1) ** i * math.comb(parts, i) * math.comb(top, parts - 1)
    return result


def count_all_compositions(total: int, parts: int) -> int:
    return math.comb(total + parts - 1, parts - 1)


@dataclass(frozen=True)
class Composition:
    """Ordered vector of q non-negative symbol frequencies summing to n."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 0 for p in self.parts):
            raise ValueError("composition parts must be non-negative")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def q(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        """Symbol weight: the largest part (0 for the empty composition)."""
        return max(self.parts, default=0)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Composition":
        return cls(tuple(int(p) for p in parts))

    @classmethod
    def from_exponents(cls, text: str) -> "Composition":
        """Parse exponential notation, e.g. "1^4 5^4" -> (1,1,1,1,5,5,5,5)."""
        parts: list[int] = []
        for token in text.split():
            m = _EXP_TOKEN.match(token)
            if not m:
                raise ValueError(f"bad composition token {token!r}")
            value = int(m.group(1))
            repeat = int(m.group(2)) if m.group(2) else 1
            parts.extend([value] * repeat)
        if not parts:
            raise ValueError("empty composition text")
        return cls(tuple(parts))

    @classmethod
    def from_json(cls, text: str) -> "Composition":
        return cls.from_parts(json.loads(text))

    def to_exponents(self) -> str:
        out = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            run = j - i
            out.append(f"{self.parts[i]}^{run}" if run > 1 else f"{self.parts[i]}")
            i = j
        return " ".join(out)

    def to_json(self) -> str:
        return json.dumps(list(self.parts))

    def dplus(self, other: "Composition") -> int:
        return dplus(self, other)

    def hamming(self, other: "Composition") -> int:
        return hamming_distance(self, other)

    def __str__(self) -> str:
        return self.to_exponents()


def _check_same_space(a: Composition, b: Composition) -> None:
    if a.q != b.q or a.n != b.n:
        raise ValueError(
            f"compositions live in different spaces: (n={a.n},q={a.q}) vs (n={b.n},q={b.q})"
        )


def dplus_parts(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x - y for x, y in zip(a, b) if x > y)


def dplus(a: Composition, b: Composition) -> int:
    """Overlap distance n - sum_i min(a_i, b_i)."""
    _check_same_space(a, b)
    return dplus_parts(a.parts, b.parts)


def hamming_distance(a: Composition, b: Composition) -> int:
    """Number of coordinates where the two part vectors differ."""
    _check_same_space(a, b)
    return sum(1 for x, y in zip(a.parts, b.parts) if x != y)


def _iter_bounded_parts(total: int, parts: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Part vectors in descending colexicographic order.

    Generates the reversed vector in descending lexicographic order, which is
    exactly descending colex on the vector itself.
    """
    def rec(tot: int, k: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            if tot == 0:
                yield ()
            return
        hi = min(max_part, tot)
        lo = max(0, tot - (k - 1) * max_part)
        for v in range(hi, lo - 1, -1):
            for rest in rec(tot - v, k - 1):
                yield (v,) + rest

    for rev in rec(total, parts):
        yield rev[::-1]


def iter_compositions(
    total: int,
    parts: int,
    *,
    exact_weight: int | None = None,
    max_weight: int | None = None,
) -> Iterator[Composition]:
    """Stream compositions in descending colex order, optionally weight-filtered."""
    if exact_weight is not None and max_weight is not None:
        raise ValueError("give at most one of exact_weight / max_weight")
    if parts == 0:
        if total == 0:
            yield Composition(())
        return
    bound = total
    if max_weight is not None:
        bound = max_weight
    elif exact_weight is not None:
        bound = exact_weight
    for vec in _iter_bounded_parts(total, parts, bound):
        if exact_weight is not None and max(vec, default=0) != exact_weight:
            continue
        yield Composition(vec)


@dataclass(frozen=True)
class CompositionFamily:
    """A set of compositions sharing (n, q), tagged with how it was built."""

    members: tuple[Composition, ...]
    kind: str  # "all" | "exact-weight" | "bounded-weight" | "anticode"
    n: int
    q: int
    weight: int | None = None
    min_dplus: int | None = None  # anticode separation requirement

    def __post_init__(self):
        for c in self.members:
            if c.n != self.n or c.q != self.q:
                raise ValueError("family member with mismatched (n, q)")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def pairwise_min_dplus(self) -> int | None:
        """Smallest dplus over distinct member pairs (None for < 2 members)."""
        best = None
        for i, a in enumerate(self.members):
            for b in self.members[i + 1:]:
                d = dplus_parts(a.parts, b.parts)
                if best is None or d < best:
                    best = d
        return best

    def validate(self) -> None:
        if self.kind == "exact-weight":
            assert all(c.weight == self.weight for c in self.members)
        elif self.kind == "bounded-weight":
            assert all(c.weight <= self.weight for c in self.members)
        elif self.kind == "anticode":
            assert all(c.weight == self.weight for c in self.members)
            sep = self.pairwise_min_dplus()
            assert sep is None or sep >= self.min_dplus


def enumerate_compositions(
    n: int,
    q: int,
    *,
    exact_weight: int | None = None,
    max_weight: int | None = None,
    cap: int | None = None,
) -> CompositionFamily:
    """Materialise a composition family; refuses above the enumeration cap.

    The cap check uses the bounded-part count, an upper estimate for the
    exact-weight case.
    """
    if n < 0 or q < 1:
        raise ValueError("need n >= 0 and q >= 1")
    if exact_weight is not None and max_weight is not None:
        raise ValueError("give at most one of exact_weight / max_weight")
    if exact_weight is not None:
        size_estimate = count_bounded_compositions(n, q, exact_weight)
        kind, weight = "exact-weight", exact_weight
    elif max_weight is not None:
        size_estimate = count_bounded_compositions(n, q, max_weight)
        kind, weight = "bounded-weight", max_weight
    else:
        size_estimate = count_all_compositions(n, q)
        kind, weight = "all", None
    check_cap(f"compositions of {n} into {q} parts", size_estimate, cap)
    members = tuple(
        iter_compositions(n, q, exact_weight=exact_weight, max_weight=max_weight)
    )
    return CompositionFamily(members, kind, n, q, weight)


def refinement_witness(
    fine: Composition, coarse: Composition
) -> tuple[tuple[int, ...], ...] | None:
    """Partition of fine's indices whose group sums equal coarse's parts, or None.

    Exhaustive backtracking with symmetry pruning over equal remaining targets;
    zero parts are appended to the first group at the end.
    """
    if fine.n != coarse.n:
        return None
    targets = list(coarse.parts)
    p = len(targets)
    nonzero = sorted(
        (i for i, v in enumerate(fine.parts) if v > 0),
        key=lambda i: -fine.parts[i],
    )
    zeros = [i for i, v in enumerate(fine.parts) if v == 0]
    groups: list[list[int]] = [[] for _ in range(p)]
    remaining = targets[:]

    def assign(pos: int) -> bool:
        if pos == len(nonzero):
            return all(r == 0 for r in remaining)
        idx = nonzero[pos]
        v = fine.parts[idx]
        seen: set[int] = set()
        for j in range(p):
            if remaining[j] < v or remaining[j] in seen:
                continue
            seen.add(remaining[j])
            remaining[j] -= v
            groups[j].append(idx)
            if assign(pos + 1):
                return True
            groups[j].pop()
            remaining[j] += v
        return False

    if not assign(0):
        return None
    if zeros:
        groups[0].extend(zeros)
    return tuple(tuple(sorted(g)) for g in groups)


def is_refinement(fine: Composition, coarse: Composition) -> bool:
    """True iff fine's parts can be grouped to sum to coarse's parts."""
    return refinement_witness(fine, coarse) is not None


def search_anticode(
    n: int,
    q: int,
    r: int,
    d: int,
    strategy: str = "greedy",
    cap: int | None = None,
) -> CompositionFamily:
    """Family of weight-r compositions pairwise >= d apart in dplus.

    greedy: one pass over all weight-r compositions in descending colex
    order, accepting whenever the candidate is >= d from everything accepted.
    Maximal but not necessarily maximum; deterministic.

    exhaustive: exact maximum via branch-and-bound clique search over the
    dplus >= d compatibility graph (only under the enumeration cap).
    """
    if d < 1:
        raise ValueError("need d >= 1")
    if not (-(-n // q) <= r <= n):
        raise ValueError(f"weight {r} out of range for (n={n}, q={q})")
    size_estimate = count_bounded_compositions(n, q, r)

    if strategy == "greedy":
        accepted: list[tuple[int, ...]] = []
        for comp in _iter_bounded_parts(n, q, r):
            if max(comp, default=0) != r:
                continue
            if all(dplus_parts(comp, a) >= d for a in accepted):
                accepted.append(comp)
        members = tuple(Composition(c) for c in accepted)
    elif strategy == "exhaustive":
        check_cap(f"anticode search over weight-{r} compositions", size_estimate, cap)
        vecs = [c for c in _iter_bounded_parts(n, q, r) if max(c, default=0) == r]
        masks = [0] * len(vecs)
        for i in range(len(vecs)):
            for j in range(i + 1, len(vecs)):
                if dplus_parts(vecs[i], vecs[j]) >= d:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        _, chosen = max_clique(masks)
        members = tuple(Composition(vecs[i]) for i in sorted(chosen))
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    return CompositionFamily(members, "anticode", n, q, r, d)
