"""Rainbow probabilities of short paths under random edge colorings.

Edges are colored i.i.d. uniformly over a palette of k ids; some edges may
already have fixed colors.  A path is rainbow within an allowed color set
when every edge color lies in the set and all colors are pairwise
distinct.  With d distinct fixed colors (all inside the allowed set) and u
free edges, the count of good completions is the falling factorial
(|allowed| - d) * (|allowed| - d - 1) * ... over k^u, which the tests
cross-check against brute-force enumeration.
"""

from __future__ import annotations

from typing import Sequence


def _falling(a: int, u: int) -> int:
    out = 1
    for i in range(u):
        out *= a - i
        if out <= 0:
            return 0
    return out


def _rainbow_count(
    assigned: Sequence[int | None],
    k: int,
    allowed: frozenset[int] | None,
) -> tuple[int, int]:
    """(good completions, total completions) as exact integers."""
    if k < 1:
        raise ValueError("palette size must be >= 1")
    size = k if allowed is None else len(allowed)
    fixed = [c for c in assigned if c is not None]
    total = k ** (len(assigned) - len(fixed))
    if allowed is not None and any(c not in allowed for c in fixed):
        return 0, total
    if len(set(fixed)) != len(fixed):
        return 0, total
    return _falling(size - len(fixed), len(assigned) - len(fixed)), total


def p_rainbow(
    assigned: Sequence[int | None],
    k: int,
    allowed: frozenset[int] | None = None,
) -> float:
    """P(path is rainbow within ``allowed``), unassigned edges uniform.

    ``assigned`` holds one entry per path edge, None when still free.
    ``allowed`` defaults to the whole palette range(k).
    """
    good, total = _rainbow_count(assigned, k, allowed)
    return good / total


def p_not_rainbow(
    assigned: Sequence[int | None],
    k: int,
    allowed: frozenset[int] | None = None,
) -> float:
    # single exact division: the correctly rounded probability, not
    # 1.0 minus an already-rounded one (those differ by one ulp at 1/3)
    good, total = _rainbow_count(assigned, k, allowed)
    return (total - good) / total


def p_not_rainbow_worst_last(
    first: int | None, second: int | None, last: int | None, k: int
) -> float:
    """Failure bound for a 3-edge path whose last edge may be unassigned.

    When the last color is unknown the bound takes the worst case over its
    k possibilities, so later assigning the real color can only lower it.
    """
    if last is not None:
        return p_not_rainbow([first, second, last], k)
    return max(p_not_rainbow([first, second, c], k) for c in range(k))


