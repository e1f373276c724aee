"""Exact arithmetic for cyclic, dihedral and dicyclic groups.

Elements are kept in normal form ``h^i x^j`` (``a^i b^j`` for dihedral,
``g^i`` for cyclic) and stored as ``(rotation_index, flip)`` pairs.
Multiplication uses closed-form index rules derived from the presentations

    C_n      = <g | g^n = e>
    D_{2.2m} = <a, b | a^{2m} = b^2 = e, bab = a^{-1}>
    Q_{4m}   = <h, x | h^{2m} = e, h^m = x^2, x^{-1}hx = h^{-1}>

so no Cayley table is ever stored.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

from sympy import primefactors


class Family(enum.Enum):
    CYCLIC = "C"
    DIHEDRAL = "D"
    DICYCLIC = "Q"


class GroupElement(NamedTuple):
    rotation_index: int
    flip: int = 0


IDENTITY = GroupElement(0, 0)

# generator symbols used for canonical element names
_SYMBOLS = {
    Family.CYCLIC: ("g", None),
    Family.DIHEDRAL: ("a", "b"),
    Family.DICYCLIC: ("h", "x"),
}

_DESCRIPTOR_RE = re.compile(r"^\s*([CDQ])\s*(\d+)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class FiniteGroup:
    """One member of the cyclic / dihedral / dicyclic families.

    ``parameter`` is the order ``n`` for cyclic groups and ``m`` (order
    ``4m``) for dihedral and dicyclic groups.
    """

    family: Family
    parameter: int

    def __post_init__(self):
        if not isinstance(self.parameter, int) or self.parameter < 1:
            raise ValueError(f"group parameter must be a positive integer, got {self.parameter!r}")

    # -- basic shape ------------------------------------------------------

    @property
    def order(self) -> int:
        if self.family is Family.CYCLIC:
            return self.parameter
        return 4 * self.parameter

    @property
    def rotation_order(self) -> int:
        """Order of the rotation part ``<h>`` / ``<a>`` / ``<g>``."""
        if self.family is Family.CYCLIC:
            return self.parameter
        return 2 * self.parameter

    @property
    def is_generalized_quaternion(self) -> bool:
        m = self.parameter
        return self.family is Family.DICYCLIC and m & (m - 1) == 0

    @property
    def descriptor(self) -> str:
        return f"{self.family.value}{self.order}"

    def __str__(self):
        return self.descriptor

    @property
    def identity(self) -> GroupElement:
        return IDENTITY

    def elements(self) -> Iterator[GroupElement]:
        """Rotation index ascending, flip 0 before flip 1."""
        flips = (0,) if self.family is Family.CYCLIC else (0, 1)
        for i in range(self.rotation_order):
            for j in flips:
                yield GroupElement(i, j)

    @cached_property
    def element_list(self) -> tuple[GroupElement, ...]:
        return tuple(self.elements())

    def element(self, i: int, j: int = 0) -> GroupElement:
        if self.family is Family.CYCLIC and j:
            raise ValueError("cyclic groups have no flip generator")
        if j not in (0, 1):
            raise ValueError(f"flip bit must be 0 or 1, got {j}")
        return GroupElement(i % self.rotation_order, j)

    def contains(self, s) -> bool:
        try:
            i, j = s
        except (TypeError, ValueError):
            return False
        if j not in (0, 1) or (j and self.family is Family.CYCLIC):
            return False
        return isinstance(i, int) and 0 <= i < self.rotation_order

    # -- naming -----------------------------------------------------------

    def label(self, s: GroupElement) -> str:
        rot, flip = _SYMBOLS[self.family]
        i, j = s
        return f"{rot}^{i}*{flip}" if j else f"{rot}^{i}"

    def parse_label(self, text: str) -> GroupElement:
        rot, flip = _SYMBOLS[self.family]
        pattern = rf"{rot}\^(\d+)" + (rf"(\*{flip})?" if flip else "")
        match = re.fullmatch(pattern, text.strip())
        if not match:
            raise ValueError(f"{text!r} is not an element name of {self}")
        i = int(match.group(1))
        j = 1 if flip and match.group(2) else 0
        if i >= self.rotation_order:
            raise ValueError(f"{text!r}: exponent out of range for {self}")
        return GroupElement(i, j)

    # -- arithmetic -------------------------------------------------------

    def multiply(self, s: GroupElement, t: GroupElement) -> GroupElement:
        i, e = s
        j, f = t
        r = self.rotation_order
        # x^e h^j = h^{(-1)^e j} x^e
        rot = i - j if e else i + j
        if e and f and self.family is Family.DICYCLIC:
            rot += self.parameter  # x^2 = h^m
        return GroupElement(rot % r, e ^ f)

    def inverse(self, s: GroupElement) -> GroupElement:
        i, e = s
        r = self.rotation_order
        if not e:
            return GroupElement(-i % r, 0)
        if self.family is Family.DICYCLIC:
            return GroupElement((i + self.parameter) % r, 1)
        return s

    def power(self, s: GroupElement, k: int) -> GroupElement:
        if k < 0:
            s, k = self.inverse(s), -k
        result = IDENTITY
        for _ in range(k):
            result = self.multiply(result, s)
        return result

    def commutes(self, s: GroupElement, t: GroupElement) -> bool:
        return self.multiply(s, t) == self.multiply(t, s)

    def element_order(self, s: GroupElement) -> int:
        k, p = 1, s
        while p != IDENTITY:
            p = self.multiply(p, s)
            k += 1
        return k

    def cyclic_subgroup(self, s: GroupElement) -> frozenset[GroupElement]:
        out = [IDENTITY]
        p = s
        while p != IDENTITY:
            out.append(p)
            p = self.multiply(p, s)
        return frozenset(out)

    def closure(self, gens) -> frozenset[GroupElement]:
        """Subgroup generated by ``gens`` (breadth-first over right multiplication)."""
        gens = list(gens)
        seen = {IDENTITY}
        frontier = [IDENTITY]
        while frontier:
            nxt = []
            for u in frontier:
                for g in gens:
                    w = self.multiply(u, g)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return frozenset(seen)

    def generates_cyclic(self, s: GroupElement, t: GroupElement) -> bool:
        sub = self.closure((s, t))
        size = len(sub)
        return any(self.element_order(z) == size for z in sub)

    def center(self) -> frozenset[GroupElement]:
        elems = self.element_list
        return frozenset(z for z in elems if all(self.commutes(z, t) for t in elems))

    def centralizer(self, s: GroupElement) -> frozenset[GroupElement]:
        return frozenset(t for t in self.element_list if self.commutes(s, t))

    @cached_property
    def orders(self) -> dict[GroupElement, int]:
        return {s: self.element_order(s) for s in self.element_list}

    # -- subgroup detectors ----------------------------------------------

    def has_cyclic_pq_subgroup(self) -> bool:
        """True iff some element order has two distinct prime divisors."""
        return any(len(primefactors(k)) >= 2 for k in set(self.orders.values()))

    def has_elementary_p_squared_subgroup(self) -> bool:
        """True iff two commuting elements of the same prime order p
        generate distinct subgroups (a copy of C_p x C_p)."""
        by_prime: dict[int, list[GroupElement]] = {}
        for s, k in self.orders.items():
            if k > 1 and primefactors(k) == [k]:
                by_prime.setdefault(k, []).append(s)
        for elems in by_prime.values():
            for a, s in enumerate(elems):
                sub = self.cyclic_subgroup(s)
                for t in elems[a + 1:]:
                    if t not in sub and self.commutes(s, t):
                        return True
        return False


def make_group(family: Family | str, parameter: int) -> FiniteGroup:
    if isinstance(family, str):
        family = Family[family.upper()] if len(family) > 1 else Family(family.upper())
    return FiniteGroup(family, parameter)


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(Family.CYCLIC, n)


def dihedral(m: int) -> FiniteGroup:
    """Dihedral group of order 4m."""
    return FiniteGroup(Family.DIHEDRAL, m)


def dicyclic(m: int) -> FiniteGroup:
    """Dicyclic group of order 4m."""
    return FiniteGroup(Family.DICYCLIC, m)


def generalized_quaternion(n: int) -> FiniteGroup:
    """Q_{2^{n+1}}, the dicyclic group with m = 2^{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return dicyclic(2 ** (n - 1))


def parse_group(text: str) -> FiniteGroup:
    """Parse ``C<n>``, ``D<order>`` or ``Q<order>``; D and Q need order = 0 mod 4."""
    match = _DESCRIPTOR_RE.match(text)
    if not match:
        raise ValueError(f"bad group descriptor {text!r} (expected C<n>, D<4m> or Q<4m>)")
    family = Family(match.group(1).upper())
    order = int(match.group(2))
    if order < 1:
        raise ValueError(f"group order must be positive in {text!r}")
    if family is Family.CYCLIC:
        return cyclic(order)
    if order % 4:
        raise ValueError(f"{text!r}: dihedral and dicyclic orders must be multiples of 4")
    return FiniteGroup(family, order // 4)
