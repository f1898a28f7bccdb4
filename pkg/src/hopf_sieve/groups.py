"""Exact arithmetic for small finite groups via dense Cayley tables.

Groups are realized from explicit permutation models, compiled once to an
index-based Cayley table, and frozen; every other module works with element
indices 0..|G|-1 (identity is always index 0).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

ORDER_CAP = 240
SELF_CHECK_ORDER_CAP = 60


class GroupBuildError(ValueError):
    """Raised when a group spec cannot be realized (order cap, bad family)."""


@dataclass(frozen=True)
class GroupSpec:
    """Symbolic description of a bundled group family.

    ``family`` is one of "C", "D", "S", "A", "V4", "x"; ``n`` is the family
    parameter and ``left``/``right`` hold the factors of a direct product.
    """

    family: str
    n: int = 0
    left: Optional[GroupSpec] = None
    right: Optional[GroupSpec] = None

    def __post_init__(self) -> None:
        if self.family == "C" and self.n < 1:
            raise ValueError(f"cyclic group needs n >= 1, got {self.n}")
        if self.family == "D" and self.n < 3:
            raise ValueError(f"dihedral group needs n >= 3, got {self.n}")
        if self.family in ("S", "A") and not 1 <= self.n <= 5:
            raise ValueError(f"{self.family}{self.n}: symmetric/alternating families are capped at n <= 5")
        if self.family == "x" and (self.left is None or self.right is None):
            raise ValueError("direct product needs two factors")
        if self.family not in ("C", "D", "S", "A", "V4", "x"):
            raise ValueError(f"unknown group family {self.family!r}")

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        return cls("C", n)

    @classmethod
    def dihedral(cls, n: int) -> GroupSpec:
        return cls("D", n)

    @classmethod
    def symmetric(cls, n: int) -> GroupSpec:
        return cls("S", n)

    @classmethod
    def alternating(cls, n: int) -> GroupSpec:
        return cls("A", n)

    @classmethod
    def klein(cls) -> GroupSpec:
        return cls("V4")

    @classmethod
    def product(cls, left: GroupSpec, right: GroupSpec) -> GroupSpec:
        return cls("x", 0, left, right)

    @property
    def order(self) -> int:
        if self.family == "C":
            return self.n
        if self.family == "D":
            return 2 * self.n
        if self.family == "S":
            return _factorial(self.n)
        if self.family == "A":
            return max(1, _factorial(self.n) // 2)
        if self.family == "V4":
            return 4
        return self.left.order * self.right.order

    @property
    def name(self) -> str:
        if self.family == "V4":
            return "V4"
        if self.family == "x":
            return f"{self.left.name}x{self.right.name}"
        return f"{self.family}{self.n}"

    def __str__(self) -> str:
        return self.name


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


_SPEC_RE = re.compile(r"^([CDSA])(\d+)$|^V4$", re.IGNORECASE)


def parse_spec(text: str) -> GroupSpec:
    """Parse "C6", "D5", "S4", "A5", "V4", or products like "D3xD5"."""
    text = text.strip()
    parts = text.split("x")
    if len(parts) > 1 and not text.upper().startswith("V4X") and text.upper() != "V4":
        # 'x' inside "V4" never splits since V4 has no x; rejoin accidental splits of V4
        rejoined: list[str] = []
        for p in parts:
            rejoined.append(p)
        specs = [parse_spec(p) for p in rejoined]
        out = specs[0]
        for s in specs[1:]:
            out = GroupSpec.product(out, s)
        return out
    m = _SPEC_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse group spec {text!r} (expected C<n>, D<n>, S<n>, A<n>, V4, or products with 'x')")
    if text.upper() == "V4":
        return GroupSpec.klein()
    family, n = m.group(1).upper(), int(m.group(2))
    return GroupSpec(family, n)


@dataclass(frozen=True)
class FiniteGroup:
    """Immutable Cayley-table group; identity is index 0."""

    spec: GroupSpec
    order: int
    cayley: tuple[tuple[int, ...], ...]
    inverses: tuple[int, ...]
    labels: tuple[str, ...]
    identity: int = 0

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conjugate(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.mul(self.mul(h, g), self.inv(h))

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        return self.labels[a]

    def __str__(self) -> str:
        return f"{self.spec.name} (order {self.order})"


@dataclass(frozen=True)
class ConjugacyClassPartition:
    """Disjoint conjugacy classes covering the group, ordered by minimal element."""

    classes: tuple[tuple[int, ...], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def class_of(self, a: int) -> tuple[int, ...]:
        for c in self.classes:
            if a in c:
                return c
        raise ValueError(f"element {a} not in any class")


# module-level element models -------------------------------------------------

def _perm_compose(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """(f*g)(x) = f(g(x))."""
    return tuple(f[g[x]] for x in range(len(f)))


def _cycle_label(p: tuple[int, ...]) -> str:
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        cycles.append("(" + " ".join(str(i) for i in cyc) + ")")
    return "".join(cycles) if cycles else "e"


def _perm_parity(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    parity = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _elements_for(spec: GroupSpec) -> tuple[list, list[str], callable]:
    """Concrete elements (identity first), labels, and a multiplication callable."""
    fam = spec.family
    if fam == "C":
        n = spec.n
        elems = list(range(n))
        labels = ["e"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
        return elems, labels, lambda a, b: (a + b) % n
    if fam == "D":
        n = spec.n
        # (k, 0) is the rotation r^k; (k, 1) is the reflection s*r^k (x -> -x-k mod n)
        elems = [(k, 0) for k in range(n)] + [(k, 1) for k in range(n)]

        def dmul(a, b):
            (ka, sa), (kb, sb) = a, b
            if sa == 0 and sb == 0:
                return ((ka + kb) % n, 0)
            if sa == 0 and sb == 1:
                return ((kb - ka) % n, 1)
            if sa == 1 and sb == 0:
                return ((ka + kb) % n, 1)
            return ((kb - ka) % n, 0)

        labels = []
        for k in range(n):
            labels.append("e" if k == 0 else ("r" if k == 1 else f"r^{k}"))
        for k in range(n):
            labels.append("s" if k == 0 else ("s*r" if k == 1 else f"s*r^{k}"))
        return elems, labels, dmul
    if fam == "S" or fam == "A":
        n = spec.n
        perms = sorted(itertools.permutations(range(n)))
        if fam == "A":
            perms = [p for p in perms if _perm_parity(p) == 0]
        return perms, [_cycle_label(p) for p in perms], _perm_compose
    if fam == "V4":
        elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
        labels = ["e", "a", "b", "ab"]
        return elems, labels, lambda x, y: ((x[0] ^ y[0]), (x[1] ^ y[1]))
    # direct product
    left = build_group(spec.left)
    right = build_group(spec.right)
    elems = [(i, j) for i in left.elements() for j in right.elements()]
    labels = [f"({left.label(i)},{right.label(j)})" for i, j in elems]
    return elems, labels, lambda a, b: (left.mul(a[0], b[0]), right.mul(a[1], b[1]))


@lru_cache(maxsize=None)
def build_group(spec: GroupSpec) -> FiniteGroup:
    """Realize a spec as a Cayley-table group; identity lands at index 0."""
    if spec.order > ORDER_CAP:
        raise GroupBuildError(f"group {spec.name} has order {spec.order} > cap {ORDER_CAP}")
    elems, labels, mul = _elements_for(spec)
    order = len(elems)
    index = {e: i for i, e in enumerate(elems)}
    cayley = tuple(tuple(index[mul(a, b)] for b in elems) for a in elems)
    identity = next(i for i in range(order) if all(cayley[i][j] == j for j in range(order)))
    if identity != 0:
        raise GroupBuildError(f"element model for {spec.name} does not put the identity first")
    inverses = []
    for a in range(order):
        inv = next(b for b in range(order) if cayley[a][b] == 0)
        inverses.append(inv)
    group = FiniteGroup(spec, order, cayley, tuple(inverses), tuple(labels))
    if order <= SELF_CHECK_ORDER_CAP:
        _self_check(group)
    return group


def _self_check(g: FiniteGroup) -> None:
    n = g.order
    full = frozenset(range(n))
    for i in range(n):
        if frozenset(g.cayley[i]) != full or frozenset(row[i] for row in g.cayley) != full:
            raise GroupBuildError(f"Cayley table of {g.spec.name} is not a Latin square")
    for a in range(n):
        for b in range(n):
            ab = g.cayley[a][b]
            for c in range(n):
                if g.cayley[ab][c] != g.cayley[a][g.cayley[b][c]]:
                    raise GroupBuildError(f"associativity fails in {g.spec.name} at ({a},{b},{c})")
    for a in range(n):
        if g.cayley[a][g.inverses[a]] != 0 or g.cayley[g.inverses[a]][a] != 0:
            raise GroupBuildError(f"inverse table of {g.spec.name} is wrong at {a}")


def element_order(g: FiniteGroup, a: int) -> int:
    if not 0 <= a < g.order:
        raise ValueError(f"element index {a} out of range for {g.spec.name}")
    k, x = 1, a
    while x != g.identity:
        x = g.mul(x, a)
        k += 1
    return k


def conjugacy_classes(g: FiniteGroup) -> ConjugacyClassPartition:
    remaining = set(g.elements())
    classes = []
    while remaining:
        a = min(remaining)
        orbit = sorted({g.conjugate(h, a) for h in g.elements()})
        classes.append(tuple(orbit))
        remaining -= set(orbit)
    classes.sort(key=lambda c: c[0])
    return ConjugacyClassPartition(tuple(classes))


def subgroup_generated_by(g: FiniteGroup, seed: Iterable[int]) -> frozenset[int]:
    """Smallest subset containing the seed and identity, closed under products."""
    current = set(seed) | {g.identity}
    for a in current:
        if not 0 <= a < g.order:
            raise ValueError(f"element index {a} out of range for {g.spec.name}")
    frontier = list(current)
    while frontier:
        new = []
        for a in frontier:
            for b in list(current):
                for prod in (g.mul(a, b), g.mul(b, a)):
                    if prod not in current:
                        current.add(prod)
                        new.append(prod)
        frontier = new
    return frozenset(current)


def commutator_subgroup(g: FiniteGroup) -> frozenset[int]:
    commutators = {
        g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))
        for a in g.elements()
        for b in g.elements()
    }
    return subgroup_generated_by(g, commutators)


def abelianization_order(g: FiniteGroup) -> int:
    return g.order // len(commutator_subgroup(g))
