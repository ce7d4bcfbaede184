"""Exact maximum clique on small graphs, with adjacency stored as int bitsets.

Branch-and-bound: vertices are expanded in greedy-colouring order, the colour
count bounds the residual clique size, and a greedy clique seeded from the
highest-degree vertices gives the initial incumbent.  Deterministic for a
fixed adjacency list.
"""

from __future__ import annotations


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _greedy_clique(masks: list[int], tries: int = 40) -> list[int]:
    n = len(masks)
    order = sorted(range(n), key=lambda v: -masks[v].bit_count())
    best: list[int] = []
    for start in order[:tries]:
        clique = [start]
        cand = masks[start]
        while cand:
            pick, score = -1, -1
            for v in _bits(cand):
                s = (masks[v] & cand).bit_count()
                if s > score:
                    score, pick = s, v
            clique.append(pick)
            cand &= masks[pick]
        if len(clique) > len(best):
            best = clique
    return best


def max_clique(masks: list[int]) -> tuple[int, list[int]]:
    """Return (size, vertex list) of a maximum clique.

    masks[v] is the neighbour bitset of vertex v (bit v itself clear).
    """
    n = len(masks)
    if n == 0:
        return 0, []
    best = _greedy_clique(masks)
    best_size = len(best)

    def expand(depth: int, cand: int, current: list[int]) -> None:
        nonlocal best, best_size
        # greedy colouring of cand; vertices listed colour class by colour class
        order: list[int] = []
        bound: list[int] = []
        colour = 0
        left = cand
        while left:
            colour += 1
            avail = left
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(masks[v] | (1 << v))
                left &= ~(1 << v)
                order.append(v)
                bound.append(colour)
        for i in range(len(order) - 1, -1, -1):
            if depth + bound[i] <= best_size:
                return
            v = order[i]
            current.append(v)
            nxt = cand & masks[v]
            if nxt:
                expand(depth + 1, nxt, current)
            elif depth + 1 > best_size:
                best_size = depth + 1
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1, [])
    return best_size, sorted(best)
