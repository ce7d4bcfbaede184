"""Arithmetic over GF(p^m) and univariate polynomial machinery.

Field elements are encoded as integers 0..q-1: the element with base-p digit
vector (c_0, ..., c_{m-1}) gets the encoding sum c_i p^i, and that encoding is
also its symbol label in words.  The canonical element order is encoding
order; the nonzero elements are 1..q-1 in that order.

Polynomials over a field are coefficient tuples in ascending degree with
trailing zeros trimmed; () is the zero polynomial with degree -inf.

Extension fields pick the modulus deterministically: the monic irreducible of
degree m over GF(p) with the smallest integer encoding.  Any other choice
gives an isomorphic field, so results differ at most by symbol relabelling.

Fields are desk-scale by design (q <= 64 by default).
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, Iterator

from .limits import check_cap

MINUS_INF = float("-inf")

MAX_FIELD_SIZE = 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation as {prime: multiplicity}."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(t: int) -> int:
    if t < 1:
        raise ValueError("mobius needs t >= 1")
    if t == 1:
        return 1
    fac = factorize(t)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def count_monic_irreducibles(q: int, t: int) -> int:
    """(1/t) sum_{s | t} mobius(s) q^(t/s)."""
    if t < 1:
        raise ValueError("need t >= 1")
    total = 0
    for s in range(1, t + 1):
        if t % s == 0:
            total += mobius(s) * q ** (t // s)
    assert total % t == 0
    return total // t


def count_rootfree_monic(q: int, t: int) -> int:
    """Monic degree-t polynomials with no roots in GF(q): inclusion-exclusion
    over forced distinct root sets."""
    if t < 0:
        raise ValueError("need t >= 0")
    return sum((-1) ** j * math.comb(q, j) * q ** (t - j) for j in range(min(t, q) + 1))


class Field:
    """GF(p^m) with integer-encoded elements and full operation tables."""

    def __init__(self, q: int):
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"field size {q} beyond desk-scale cap {MAX_FIELD_SIZE}")
        fac = factorize(q)
        if len(fac) != 1:
            raise ValueError(f"{q} is not a prime power")
        (self.p, self.m), = fac.items()
        self.q = q
        if self.m == 1:
            self.modulus: tuple[int, ...] | None = None
        else:
            self.modulus = _find_modulus(self.p, self.m)
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        if m == 1:
            self._add = [[(a + b) % p for b in range(p)] for a in range(p)]
            self._mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            digits = [self._decode(e) for e in range(q)]
            self._add = [
                [self._encode([(x + y) % p for x, y in zip(digits[a], digits[b])])
                 for b in range(q)]
                for a in range(q)
            ]
            base = field(p)
            mod = self.modulus
            self._mul = []
            for a in range(q):
                row = []
                da = _ptrim(tuple(digits[a]))
                for b in range(q):
                    db = _ptrim(tuple(digits[b]))
                    prod = poly_mod(base, poly_mul(base, da, db), mod)
                    row.append(self._encode(list(prod) + [0] * (m - len(prod))))
                self._mul.append(row)
        self._neg = [self.sub(0, a) if self.m == 1 else self._neg_ext(a) for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def _neg_ext(self, a: int) -> int:
        return self._encode([(-x) % self.p for x in self._decode(a)])

    def _decode(self, e: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(e % self.p)
            e //= self.p
        return out

    def _encode(self, digits: Iterable[int]) -> int:
        e = 0
        for d in reversed(list(digits)):
            e = e * self.p + d
        return e

    # element ops on integer encodings
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]] if self.m > 1 else (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverting 0 in a finite field")
        return self._inv[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul[result][base]
            base = self._mul[base][base]
            e >>= 1
        return result

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def element_digits(self, a: int) -> tuple[int, ...]:
        """Coefficient vector over GF(p), ascending."""
        return tuple(self._decode(a))

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m,
                "modulus": list(self.modulus) if self.modulus else None}

    def __repr__(self):
        return f"Field(GF({self.q}))"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self):
        return hash((self.p, self.m))


@functools.lru_cache(maxsize=None)
def field(q: int) -> Field:
    return Field(q)


# --- polynomials as trimmed coefficient tuples (ascending degree) ---

def _ptrim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def poly_degree(c: tuple[int, ...]):
    return len(c) - 1 if c else MINUS_INF


def poly_add(F: Field, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = F.add(out[i], x)
    return _ptrim(tuple(out))


def poly_scale(F: Field, a: tuple[int, ...], s: int) -> tuple[int, ...]:
    return _ptrim(tuple(F.mul(x, s) for x in a))


def poly_mul(F: Field, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            row = F._mul[x]
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], row[y])
    return _ptrim(tuple(out))


def poly_divmod(F: Field, a: tuple[int, ...], b: tuple[int, ...]):
    a, b = _ptrim(tuple(a)), _ptrim(tuple(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    quo = [0] * max(0, len(a) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        factor = F.mul(c, lead_inv)
        quo[i - db] = factor
        for j in range(db + 1):
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(factor, b[j]))
    return _ptrim(tuple(quo)), _ptrim(tuple(rem))


def poly_mod(F: Field, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return poly_divmod(F, a, b)[1]


def poly_gcd(F: Field, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    while b:
        a, b = b, poly_mod(F, a, b)
    if a:
        a = poly_scale(F, a, F.inv(a[-1]))  # monic normal form
    return a


def poly_pow_mod(F: Field, a: tuple[int, ...], e: int, mod: tuple[int, ...]) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    base = poly_mod(F, a, mod)
    while e:
        if e & 1:
            result = poly_mod(F, poly_mul(F, result, base), mod)
        base = poly_mod(F, poly_mul(F, base, base), mod)
        e >>= 1
    return result


def poly_eval(F: Field, c: tuple[int, ...], x: int) -> int:
    acc = 0
    for coef in reversed(c):
        acc = F.add(F.mul(acc, x), coef)
    return acc


def poly_from_roots(F: Field, roots: Iterable[int], lead: int = 1) -> tuple[int, ...]:
    c: tuple[int, ...] = (lead,)
    for r in roots:
        c = poly_mul(F, c, (F.neg(r), 1))
    return c


def evaluation_word(F: Field, c: tuple[int, ...]) -> tuple[int, ...]:
    """Evaluate at every nonzero element in canonical order; symbols are the
    element encodings, so the word lives in Z_q^(q-1)."""
    return tuple(poly_eval(F, c, x) for x in F.nonzero())


def poly_interpolate(F: Field, xs: list[int], ys: list[int]) -> tuple[int, ...]:
    """Lagrange interpolation through distinct points."""
    n = len(xs)
    result: tuple[int, ...] = ()
    for i in range(n):
        num: tuple[int, ...] = (1,)
        denom = 1
        for j in range(n):
            if j == i:
                continue
            num = poly_mul(F, num, (F.neg(xs[j]), 1))
            denom = F.mul(denom, F.sub(xs[i], xs[j]))
        result = poly_add(F, result, poly_scale(F, num, F.mul(ys[i], F.inv(denom))))
    return result


def _find_modulus(p: int, m: int) -> tuple[int, ...]:
    base = field(p)
    for enc in range(p ** m, 2 * p ** m):
        coeffs = []
        e = enc
        for _ in range(m + 1):
            coeffs.append(e % p)
            e //= p
        c = _ptrim(tuple(coeffs))
        if is_irreducible(base, c):
            return c
    raise RuntimeError(f"no irreducible of degree {m} over GF({p})")  # unreachable


def has_root(F: Field, c: tuple[int, ...]) -> bool:
    return any(poly_eval(F, c, x) == 0 for x in F.elements())


def is_irreducible(F: Field, c: tuple[int, ...]) -> bool:
    """Trial-gcd test: f of degree t is irreducible iff it shares no factor
    with x^(q^i) - x for any 1 <= i <= t/2 (that product covers all
    irreducibles of degree dividing i)."""
    t = poly_degree(c)
    if t is MINUS_INF or t < 1:
        return False
    if t == 1:
        return True
    if has_root(F, c):
        return False
    x: tuple[int, ...] = (0, 1)
    for i in range(2, t // 2 + 1):
        xq = poly_pow_mod(F, x, F.q ** i, c)
        probe = poly_add(F, xq, poly_scale(F, x, F.neg(1)))  # x^(q^i) - x
        if poly_degree(poly_gcd(F, c, probe)) != 0:
            return False
    return True


def _decode_monic(q: int, t: int, enc: int) -> tuple[int, ...]:
    coeffs = []
    for _ in range(t):
        coeffs.append(enc % q)
        enc //= q
    coeffs.append(1)
    return tuple(coeffs)


def _rootfree_encodings(F: Field, t: int) -> Iterator[int]:
    """Encodings of monic degree-t polynomials with no roots, ascending.

    Prime fields above a size threshold take a vectorised numpy pre-filter;
    otherwise a plain scan.
    """
    q = F.q
    total = q ** t
    if F.m == 1 and total >= 20000:
        import numpy as np

        encs = np.arange(total, dtype=np.int64)
        digits = []
        rem = encs
        for _ in range(t):
            digits.append(rem % q)
            rem = rem // q
        ok = np.ones(total, dtype=bool)
        for x in range(q):
            acc = np.ones(total, dtype=np.int64)  # leading monic coefficient
            for d in reversed(digits):
                acc = (acc * x + d) % q
            ok &= acc != 0
        yield from (int(e) for e in np.nonzero(ok)[0])
        return
    for enc in range(total):
        c = _decode_monic(q, t, enc)
        if not has_root(F, c):
            yield enc


def iter_monic_irreducibles(F: Field, t: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """All monic irreducibles of degree t, ascending by coefficient encoding."""
    if t < 1:
        raise ValueError("need degree >= 1")
    check_cap(f"monic degree-{t} candidates over GF({F.q})", F.q ** t, cap)
    if t == 1:
        for c0 in F.elements():
            yield (c0, 1)
        return
    for enc in _rootfree_encodings(F, t):
        c = _decode_monic(F.q, t, enc)
        if is_irreducible(F, c):
            yield c


def iter_rootfree_monic(F: Field, t: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Monic degree-t polynomials with no roots in the field (equivalently no
    linear factors): the valid cofactors in the constant-weight subcode
    construction.  Degree 0 yields only the constant 1; degree 1 is empty."""
    if t < 0:
        raise ValueError("need degree >= 0")
    if t == 0:
        yield (1,)
        return
    if t == 1:
        return
    check_cap(f"monic degree-{t} candidates over GF({F.q})", F.q ** t, cap)
    for enc in _rootfree_encodings(F, t):
        yield _decode_monic(F.q, t, enc)
