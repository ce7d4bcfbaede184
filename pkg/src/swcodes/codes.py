"""Code containers, verification oracles, and constructions.

Holds the word-level machinery: symbol weight, brute-force minimum distance,
exact maximum-code search (branch-and-bound clique over the distance-at-least
graph), ball sizes in symbol-weight spaces, the juxtaposition and
concatenation constructions, Reed-Solomon codes and their cosets, the
constant-symbol-weight Reed-Solomon subcode, the MDS weight distribution, and
the weight-r factorisation search over irreducible cofactors.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

import numpy as np

from . import galois
from .cliques import max_clique
from .galois import Field, evaluation_word, poly_from_roots, poly_interpolate
from .limits import MATERIALISE_CAP, check_cap

Word = tuple[int, ...]


def symbol_weight(word: Sequence[int]) -> int:
    """Largest frequency of any single symbol in the word."""
    counts: dict[int, int] = {}
    for s in word:
        counts[s] = counts.get(s, 0) + 1
    return max(counts.values(), default=0)


def word_composition(word: Sequence[int], q: int) -> tuple[int, ...]:
    counts = [0] * q
    for s in word:
        counts[s] += 1
    return tuple(counts)


def hamming(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return sum(1 for a, b in zip(u, v) if a != b)


class Code:
    """Immutable set of equal-length words over Z_q with lazy distance data."""

    def __init__(self, words: Sequence[Sequence[int]], q: int):
        raw = [tuple(int(s) for s in w) for w in words]
        ws = sorted(set(raw))
        if len(ws) != len(raw):
            raise ValueError("duplicate words in code")
        if not ws:
            raise ValueError("empty code")
        n = len(ws[0])
        for w in ws:
            if len(w) != n:
                raise ValueError("words of differing length")
            if any(s < 0 or s >= q for s in w):
                raise ValueError("symbol outside alphabet")
        self.words: tuple[Word, ...] = tuple(ws)
        self.n = n
        self.q = q
        self._min_distance: int | None = None

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return tuple(w) in set(self.words)

    def min_distance(self) -> int:
        """Minimum pairwise Hamming distance, brute force, cached."""
        if len(self.words) < 2:
            raise ValueError("minimum distance needs at least two words")
        if self._min_distance is None:
            arr = np.array(self.words, dtype=np.int16)
            best = self.n
            for i in range(len(arr) - 1):
                d = int((arr[i + 1:] != arr[i]).sum(axis=1).min())
                if d < best:
                    best = d
            self._min_distance = best
        return self._min_distance

    def symbol_weights(self) -> set[int]:
        return {symbol_weight(w) for w in self.words}

    def to_text(self) -> str:
        lines = [f"{self.n} {self.q} {self.min_distance() if len(self.words) > 1 else self.n} "
                 f"{max(self.symbol_weights())}"]
        lines.extend(" ".join(map(str, w)) for w in self.words)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> tuple["Code", dict]:
        """Parse `n q [d] [r]` header plus one word per line; returns the code
        and the header claims (d/r may be absent)."""
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty code file")
        head = lines[0].split()
        if len(head) < 2:
            raise ValueError("header must contain at least n and q")
        n, q = int(head[0]), int(head[1])
        claims = {}
        if len(head) >= 3:
            claims["d"] = int(head[2])
        if len(head) >= 4:
            claims["r"] = int(head[3])
        words = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
        code = cls(words, q)
        if code.n != n:
            raise ValueError(f"header says n={n} but words have length {code.n}")
        return code, claims

    def to_json(self) -> str:
        return json.dumps({"schema": 1, "n": self.n, "q": self.q,
                           "words": [list(w) for w in self.words]})

    @classmethod
    def from_json(cls, text: str) -> "Code":
        obj = json.loads(text)
        return cls(obj["words"], obj["q"])


# --- space iteration and balls ---

def iter_space(
    n: int,
    q: int,
    *,
    exact_weight: int | None = None,
    max_weight: int | None = None,
    composition: Sequence[int] | None = None,
) -> Iterator[Word]:
    """Words of a symbol-weight or constant-composition space in lex order."""
    if composition is not None:
        comp = tuple(composition)
        if len(comp) != q or sum(comp) != n:
            raise ValueError("composition must have q parts summing to n")
    for w in itertools.product(range(q), repeat=n):
        counts = [0] * q
        for s in w:
            counts[s] += 1
        if composition is not None and tuple(counts) != comp:
            continue
        m = max(counts) if n else 0
        if exact_weight is not None and m != exact_weight:
            continue
        if max_weight is not None and m > max_weight:
            continue
        yield w


def space_word_list(n, q, *, exact_weight=None, max_weight=None, composition=None,
                    cap: int | None = None) -> list[Word]:
    check_cap(f"scan of Z_{q}^{n}", q ** n, cap)
    return list(iter_space(n, q, exact_weight=exact_weight, max_weight=max_weight,
                           composition=composition))


def ball_size(
    center: Sequence[int],
    radius: int,
    q: int,
    *,
    exact_weight: int | None = None,
    max_weight: int | None = None,
    cap: int | None = None,
) -> int:
    """Number of space words within Hamming distance `radius` of `center`.

    Symbol-weight spaces are not ball-homogeneous, so this is an honest scan.
    """
    n = len(center)
    check_cap(f"ball scan in Z_{q}^{n}", q ** n, cap)
    c = tuple(center)
    count = 0
    for w in iter_space(n, q, exact_weight=exact_weight, max_weight=max_weight):
        if hamming(w, c) <= radius:
            count += 1
    return count


# --- exact optimum ---

def max_code_in_words(words: list[Word], d: int) -> tuple[int, list[Word]]:
    """Largest subset with pairwise distance >= d (exact, branch-and-bound)."""
    N = len(words)
    if N == 0:
        return 0, []
    if d <= 1:
        return N, list(words)
    arr = np.array(words, dtype=np.int16)
    masks = [0] * N
    for i in range(N):
        far = np.nonzero((arr[i + 1:] != arr[i]).sum(axis=1) >= d)[0]
        for off in far.tolist():
            j = i + 1 + off
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    size, chosen = max_clique(masks)
    return size, [words[i] for i in chosen]


def exhaustive_optimum(
    n: int,
    q: int,
    d: int,
    *,
    exact_weight: int | None = None,
    max_weight: int | None = None,
    composition: Sequence[int] | None = None,
    cap: int | None = None,
) -> tuple[int, Code | None]:
    """Exact maximum code size in the requested space, with a witness code."""
    words = space_word_list(n, q, exact_weight=exact_weight, max_weight=max_weight,
                            composition=composition, cap=cap)
    size, chosen = max_code_in_words(words, d)
    return size, (Code(chosen, q) if chosen else None)


# --- constructions ---

def is_fpa(code: Code) -> int | None:
    """If every symbol occurs the same number of times in every word, return
    that frequency, else None."""
    if code.n % code.q != 0:
        return None
    lam = code.n // code.q
    for w in code.words:
        if word_composition(w, code.q) != (lam,) * code.q:
            return None
    return lam


def uv_construct(code: Code, fpa: Code) -> Code:
    """Append a frequency-permutation-array word to every codeword.

    For C(n,M,d,r)_q and an FPA C'(r'q, M', d')_q the result has parameters
    (n + r'q, M*M', min(d,d'), r + r')_q.  All three output parameters are
    verified, not assumed.
    """
    if code.q != fpa.q:
        raise ValueError("u|v construction needs matching alphabets")
    lam = is_fpa(fpa)
    if lam is None:
        raise ValueError("second code is not a frequency permutation array")
    weights = code.symbol_weights()
    if len(weights) != 1:
        raise ValueError("first code must have constant symbol weight")
    r = weights.pop()
    check_cap("u|v product size", len(code) * len(fpa), MATERIALISE_CAP)
    out = Code([u + v for u in code.words for v in fpa.words], code.q)
    assert len(out) == len(code) * len(fpa)
    assert out.symbol_weights() == {r + lam}
    if len(code) > 1 or len(fpa) > 1:
        expected = []
        if len(code) > 1:
            expected.append(code.min_distance())
        if len(fpa) > 1:
            expected.append(fpa.min_distance())
        assert out.min_distance() == min(expected)
    return out


def concat_construct(outer: Code, inner: Code) -> Code:
    """Replace every symbol of the outer code by the matching inner FPA word.

    Outer C(n,M,d)_q, inner FPA C'(rp, M', d')_p with M' >= q: result is
    (n*r*p, M, >= d*d', r*n)_p.  Size, weight, and the distance floor are
    verified on the output.
    """
    lam = is_fpa(inner)
    if lam is None:
        raise ValueError("inner code is not a frequency permutation array")
    if len(inner) < outer.q:
        raise ValueError("inner code needs at least q words to index symbols")
    check_cap("concatenated code size", len(outer), MATERIALISE_CAP)
    table = inner.words[:outer.q]
    out_words = []
    for w in outer.words:
        parts: list[int] = []
        for s in w:
            parts.extend(table[s])
        out_words.append(tuple(parts))
    out = Code(out_words, inner.q)
    assert len(out) == len(outer)
    assert out.symbol_weights() == {lam * outer.n}
    if len(outer) > 1:
        assert out.min_distance() >= outer.min_distance() * inner.min_distance()
    return out


# --- Reed-Solomon machinery (n = q - 1, evaluation at all nonzero points) ---

def iter_rs_codewords(F: Field, k: int) -> Iterator[Word]:
    """Evaluations of every polynomial of degree < k, in coefficient-encoding
    order."""
    if not (1 <= k <= F.q - 1):
        raise ValueError("need 1 <= k <= q-1")
    for coeffs in itertools.product(F.elements(), repeat=k):
        yield evaluation_word(F, galois._ptrim(tuple(coeffs)))


def rs_code(F: Field, k: int, cap: int | None = None) -> Code:
    check_cap(f"Reed-Solomon codebook GF({F.q}) k={k}", F.q ** k,
              cap if cap is not None else MATERIALISE_CAP)
    return Code(list(iter_rs_codewords(F, k)), F.q)


def rs_reencode_check(F: Field, k: int, word: Sequence[int]) -> bool:
    """True iff the word interpolates to a polynomial of degree < k."""
    xs = list(F.nonzero())
    coeffs = poly_interpolate(F, xs, list(word))
    deg = galois.poly_degree(coeffs)
    return deg is galois.MINUS_INF or deg < k


def rs_weight_census(F: Field, k: int, cap: int | None = None) -> dict[int, int]:
    """Symbol-weight histogram of the full Reed-Solomon code (exhaustive)."""
    check_cap(f"Reed-Solomon scan GF({F.q}) k={k}", F.q ** k, cap)
    census: dict[int, int] = {}
    for w in iter_rs_codewords(F, k):
        sw = symbol_weight(w)
        census[sw] = census.get(sw, 0) + 1
    return census


def count_rs_constant_weight(F: Field, k: int, r: int, cap: int | None = None) -> int:
    """Exact number of Reed-Solomon codewords of symbol weight exactly r."""
    if not (1 <= r <= k - 1):
        raise ValueError("need 1 <= r <= k-1")
    return rs_weight_census(F, k, cap).get(r, 0)


def best_coset_intersection(F: Field, k: int, r: int, cap: int | None = None
                            ) -> tuple[Word, int]:
    """Scan all q^(n-k) cosets of the Reed-Solomon code and return a
    representative word of a coset meeting SW(n,q,r) most often, with the
    count.  Averaging over the partition guarantees
    count >= ceil(|SW(n,q,r)| / q^(n-k))."""
    n = F.q - 1
    if not (1 <= k <= n):
        raise ValueError("need 1 <= k <= n")
    if not (-(-n // F.q) <= r <= n):
        raise ValueError(f"weight {r} out of range for (n={n}, q={F.q})")
    check_cap(f"coset scan of Z_{F.q}^{n}", F.q ** n, cap)
    xs = list(F.nonzero())
    tallies: dict[tuple[int, ...], int] = {}
    for w in itertools.product(range(F.q), repeat=n):
        if symbol_weight(w) != r:
            continue
        coeffs = poly_interpolate(F, xs, list(w))
        padded = tuple(coeffs) + (0,) * (n - len(coeffs))
        syndrome = padded[k:]
        tallies[syndrome] = tallies.get(syndrome, 0) + 1
    best_syndrome = max(tallies, key=lambda s: (tallies[s], tuple(-c for c in s)))
    rep_poly = (0,) * k + best_syndrome
    rep = evaluation_word(F, galois._ptrim(rep_poly))
    return rep, tallies[best_syndrome]


def iter_rs_csw_subcode(F: Field, k: int, r: int) -> Iterator[Word]:
    """Stream the constant-symbol-weight Reed-Solomon subcode.

    Emits the evaluation of beta * (x - a_1)...(x - a_r) * g(x) for every
    nonzero beta, every r-subset {a_i} of nonzero elements, and every monic
    root-free g of degree k-1-r.  Under the hypothesis k-1 >= r >= n/2 each
    emitted word has symbol weight exactly r: the word is zero exactly on the
    chosen roots, and only q-1-r <= n/2 <= r positions remain for any other
    value.  Distinct (beta, root set, g) triples give distinct polynomials
    (unique factorisation; g contributes no roots), hence distinct words.
    """
    n = F.q - 1
    if not (k - 1 >= r and 2 * r >= n):
        raise ValueError("construction needs k-1 >= r >= n/2")
    if not (1 <= r <= n):
        raise ValueError("weight out of range")
    deg_g = k - 1 - r
    pts = list(F.nonzero())
    gevs = [
        [galois.poly_eval(F, g, x) for x in pts]
        for g in galois.iter_rootfree_monic(F, deg_g)
    ]
    for subset in itertools.combinations(pts, r):
        root_factor = [1] * len(pts)
        for i, x in enumerate(pts):
            v = 1
            for a in subset:
                v = F.mul(v, F.sub(x, a))
            root_factor[i] = v
        for beta in F.nonzero():
            scaled = [F.mul(beta, v) for v in root_factor]
            for gev in gevs:
                yield tuple(F.mul(a, b) for a, b in zip(scaled, gev))


def rs_csw_subcode_size(F: Field, k: int, r: int) -> int:
    """Number of words the stream will emit (no duplicates arise)."""
    n = F.q - 1
    return (F.q - 1) * math.comb(n, r) * galois.count_rootfree_monic(F.q, k - 1 - r)


# --- MDS weight distribution ---

@dataclass
class WeightDistribution:
    """B_w for a linear MDS [n,k]_q code; zero between 1 and d-1, B_0 = 1."""

    n: int
    k: int
    q: int
    B: dict[int, int] = dc_field(default_factory=dict)

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    def first_term_upper(self, w: int) -> int:
        """C(n,w) (q^(w-d+1) - 1): the leading inclusion-exclusion term."""
        return math.comb(self.n, w) * (self.q ** (w - self.d + 1) - 1)

    def total(self) -> int:
        return sum(self.B.values())


def mds_weight_distribution(n: int, k: int, q: int) -> WeightDistribution:
    """Weight distribution of a linear MDS [n,k,d]_q code, d = n-k+1:

        B_w = C(n,w) sum_{j=0}^{w-d} (-1)^j C(w,j) (q^(w-d+1-j) - 1)

    evaluated as given (empty sum = 0); B_0 = 1 and B_w = 0 for 0 < w < d.
    """
    wd = WeightDistribution(n, k, q)
    d = wd.d
    wd.B[0] = 1
    for w in range(1, n + 1):
        if w < d:
            wd.B[w] = 0
            continue
        s = 0
        for j in range(0, w - d + 1):
            s += (-1) ** j * math.comb(w, j) * (q ** (w - d + 1 - j) - 1)
        wd.B[w] = math.comb(n, w) * s
    return wd


# --- factorisation search over irreducible cofactors ---

def conjecture_check(F: Field, k: int, r: int, cap: int | None = None) -> dict:
    """For each admissible cofactor g of degree k-1-r, search r-subsets of the
    nonzero elements for one making (x-a_1)...(x-a_r) g(x) have symbol weight
    exactly r.

    Cofactors: monic irreducibles of the stated degree when it is >= 2, the
    constant 1 at degree 0, and none at degree 1 (a linear cofactor adds a
    root, so no root-free choice exists; reported as vacuous).  Scalar
    multiples permute symbols and never change the symbol weight, so the
    leading factor is fixed to 1.  Subsets are visited in lexicographic order
    with early exit on the first witness.
    """
    n = F.q - 1
    if not (1 <= r < k < n):
        raise ValueError("need 1 <= r < k < n")
    deg_g = k - 1 - r
    report = {
        "schema": 1,
        "q": F.q,
        "k": k,
        "r": r,
        "cofactor_degree": deg_g,
        "results": [],
        "counterexample": False,
    }
    if deg_g == 1:
        report["vacuous"] = "no root-free cofactor of degree 1 exists"
        return report
    check_cap(f"subset search C({n},{r})", math.comb(n, r), cap)
    if deg_g == 0:
        gs: list[tuple[int, ...]] = [(1,)]
    else:
        gs = list(galois.iter_monic_irreducibles(F, deg_g, cap))
    pts = list(F.nonzero())
    for g in gs:
        gev = [galois.poly_eval(F, g, x) for x in pts]
        witness = None
        for subset in itertools.combinations(pts, r):
            counts = [0] * F.q
            ok = True
            for i, x in enumerate(pts):
                v = gev[i]
                for a in subset:
                    v = F.mul(v, F.sub(x, a))
                counts[v] += 1
                if v and counts[v] > r:
                    ok = False
                    break
            if ok and counts[0] == r:
                witness = list(subset)
                break
        entry = {"g": list(g), "ok": witness is not None}
        if witness is not None:
            entry["witness"] = witness
        report["results"].append(entry)
        if witness is None:
            report["counterexample"] = True
    return report


def conjecture_sweep_pairs(q: int) -> list[tuple[int, int]]:
    """(k, r) pairs in the searched range: (k-1)/2 <= r < k < n."""
    n = q - 1
    pairs = []
    for k in range(2, n):
        for r in range(1, k):
            if 2 * r >= k - 1:
                pairs.append((k, r))
    return pairs
