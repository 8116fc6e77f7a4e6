"""Arithmetic and combinatorics in Z/dZ and its unit group.

Everything here works with plain ints reduced mod d.  The bracket [x] is
the representative in [0, d-1]; it is the basic quantity in all the
combinatorial criteria, so it gets a dedicated helper even though it is
just ``x % d``.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable


def bracket(x: int, d: int) -> int:
    """Representative of x mod d in [0, d-1]."""
    return x % d


def units(d: int) -> list[int]:
    """Sorted list of units of Z/dZ."""
    return [x for x in range(1, d) if math.gcd(x, d) == 1]


def is_cyclic_ap(values: Iterable[int], d: int) -> bool:
    """True iff the sorted representatives in [0, d-1] have a constant
    difference, i.e. the set is b, b+k, ..., b+(m-1)k without wrapping
    past d.

    A wraparound scan over (b, k) would also classify sets like {1, 2, 6}
    mod 9 (= 2, 6, 10) as progressions; the search criteria need those to
    count as non-progressions, so the non-wrapping reading is used.
    """
    s = sorted({v % d for v in values})
    if len(s) <= 2:
        return True
    k = s[1] - s[0]
    return all(b - a == k for a, b in zip(s, s[1:]))


class UnitSubgroup:
    """A subgroup of (Z/dZ)^x, stored as a sorted tuple of elements."""

    __slots__ = ("modulus", "elements")

    def __init__(self, modulus: int, elements: Iterable[int]):
        elems = sorted({e % modulus for e in elements})
        if 1 not in elems:
            raise ValueError("subgroup must contain 1")
        for a in elems:
            if math.gcd(a, modulus) != 1:
                raise ValueError(f"{a} is not a unit mod {modulus}")
            for b in elems:
                if (a * b) % modulus not in elems:
                    raise ValueError("not closed under multiplication")
        self.modulus = modulus
        self.elements = tuple(elems)

    def __contains__(self, x: int) -> bool:
        return x % self.modulus in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UnitSubgroup)
            and self.modulus == other.modulus
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.elements))

    def __repr__(self) -> str:
        return f"UnitSubgroup({self.modulus}, {list(self.elements)})"

    def issubset(self, other: "UnitSubgroup") -> bool:
        return set(self.elements) <= set(other.elements)


def closure(d: int, gens: Iterable[int]) -> UnitSubgroup:
    """Subgroup of (Z/dZ)^x generated by the given units."""
    elems = {1} | {g % d for g in gens}
    while True:
        new = {(a * b) % d for a in elems for b in elems}
        if new <= elems:
            return UnitSubgroup(d, elems)
        elems |= new


def unit_subgroups(d: int) -> list[UnitSubgroup]:
    """Every subgroup of (Z/dZ)^x, each once, sorted by (order, elements).

    Iterated closure: extend each known subgroup by each unit until no new
    subgroup appears.  Group orders in scope are <= phi(168) = 48.
    """
    us = units(d)
    found = {UnitSubgroup(d, [1])}
    frontier = list(found)
    while frontier:
        h = frontier.pop()
        for g in us:
            if g in h:
                continue
            bigger = closure(d, list(h.elements) + [g])
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return sorted(found, key=lambda h: (len(h), h.elements))


def complements(u: UnitSubgroup) -> list[UnitSubgroup]:
    """All V with U∩V = {1} and UV = (Z/dZ)^x."""
    d = u.modulus
    phi = len(units(d))
    out = []
    for v in unit_subgroups(d):
        if len(u) * len(v) != phi:
            continue
        if set(u.elements) & set(v.elements) != {1}:
            continue
        prod = {(a * b) % d for a in u.elements for b in v.elements}
        if len(prod) == phi:
            out.append(v)
    return out


def difference_multiset(v: Iterable[int], d: int) -> Counter:
    """Multiset {v_i - v_j mod d} over all ordered pairs (size |v|^2)."""
    vals = [x % d for x in v]
    return Counter((a - b) % d for a in vals for b in vals)
