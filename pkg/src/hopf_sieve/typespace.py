"""Coalgebra types (1, n; d1, n1; ...) and their enumeration under counting constraints.

A semisimple coalgebra splits as k^(n) + sum of matrix blocks M_d(k)^(n_d).
Freeness over the group-like subalgebra (Nichols-Zoeller) forces n to divide
both the total dimension and each block total n_d * d^2; those two divisibility
filters are all that ``enumerate_raw`` knows about.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

ENUMERATION_CAP = 600


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True, order=True)
class CoalgebraType:
    """Canonical multiset of simple-block sizes: n group-likes plus (d, n_d) entries.

    ``entries`` is strictly increasing in d with every d >= 2 and n_d >= 1; the
    dataclass ordering (n first, then entries lexicographically) is the
    canonical report order.
    """

    n: int
    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"degree-1 count must be >= 1, got {self.n}")
        last = 1
        for d, count in self.entries:
            if d <= last:
                raise ValueError(f"entries not strictly increasing in degree: {self.entries}")
            if count < 1:
                raise ValueError(f"entry count must be >= 1, got ({d}, {count})")
            last = d

    @classmethod
    def of(cls, n: int, *entries: tuple[int, int]) -> CoalgebraType:
        return cls(n, tuple(sorted(entries)))

    @classmethod
    def parse(cls, text: str) -> CoalgebraType:
        """Parse "(1, 12; 4, 3)" style notation (the leading "1," names the group-likes)."""
        parts = [p for p in re.split(r"[;]", text.strip().strip("()")) if p.strip()]
        pairs = []
        for part in parts:
            nums = [int(x) for x in re.findall(r"-?\d+", part)]
            if len(nums) != 2:
                raise ValueError(f"bad type component {part!r} in {text!r}")
            pairs.append((nums[0], nums[1]))
        if not pairs or pairs[0][0] != 1:
            raise ValueError(f"type must start with a (1, n) component: {text!r}")
        return cls(pairs[0][1], tuple(sorted(pairs[1:])))

    def __str__(self) -> str:
        inner = "; ".join(f"{d}, {c}" for d, c in (((1, self.n),) + self.entries))
        return f"({inner})"

    @property
    def dimension(self) -> int:
        return self.n + sum(c * d * d for d, c in self.entries)

    @property
    def is_pointed(self) -> bool:
        """True for the group-algebra (cocommutative) candidate (1, N)."""
        return not self.entries

    def count(self, d: int) -> int:
        """Number of degree-d simples (0 when the degree is absent)."""
        if d == 1:
            return self.n
        for dd, c in self.entries:
            if dd == d:
                return c
        return 0

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.entries)

    def embeds_in(self, other: CoalgebraType) -> bool:
        """Entrywise count comparison; used for 'k^Gamma fits inside H' checks."""
        if self.n > other.n:
            return False
        return all(c <= other.count(d) for d, c in self.entries)


def dimension(t: CoalgebraType) -> int:
    return t.dimension


@dataclass(frozen=True)
class OrbitConfig:
    """One way to split the degree-d simples into orbits under the group-likes.

    Orbit sizes divide n; the complementary stabilizer orders n/o must divide
    gcd(n, d^2).
    """

    degree: int
    n: int
    orbit_sizes: tuple[int, ...]

    @property
    def stabilizer_orders(self) -> tuple[int, ...]:
        return tuple(self.n // o for o in self.orbit_sizes)


def _valid_orbit_sizes(n: int, d: int) -> list[int]:
    g = gcd(n, d * d)
    return [o for o in divisors(n) if g % (n // o) == 0]


def orbit_configs(t: CoalgebraType, d: int) -> list[OrbitConfig]:
    """All orbit-size multisets for degree d; empty means the type is infeasible there."""
    n_d = t.count(d)
    if d < 2 or n_d == 0:
        raise ValueError(f"degree {d} does not appear in {t}")
    sizes = _valid_orbit_sizes(t.n, d)
    configs: list[OrbitConfig] = []

    def rec(remaining: int, max_size: int, acc: tuple[int, ...]) -> None:
        if remaining == 0:
            configs.append(OrbitConfig(d, t.n, acc))
            return
        for o in sizes:
            if o <= max_size and o <= remaining:
                rec(remaining - o, o, acc + (o,))

    rec(n_d, max(sizes, default=0), ())
    configs.sort(key=lambda c: c.orbit_sizes, reverse=True)
    return configs


def feasible_stabilizer_orders(t: CoalgebraType, d: int) -> set[int]:
    """Stabilizer orders n/o realized by at least one orbit config at degree d.

    Subset-sum bookkeeping instead of enumerating configs, so large counts stay cheap.
    """
    n_d = t.count(d)
    if n_d == 0:
        return set()
    sizes = _valid_orbit_sizes(t.n, d)
    reachable = [False] * (n_d + 1)
    reachable[0] = True
    for m in range(1, n_d + 1):
        reachable[m] = any(o <= m and reachable[m - o] for o in sizes)
    return {t.n // o for o in sizes if o <= n_d and reachable[n_d - o]}


@lru_cache(maxsize=None)
def enumerate_raw(N: int) -> tuple[CoalgebraType, ...]:
    """All canonical types of dimension N passing the two divisibility filters.

    Ordered by n ascending, then lexicographically on entries; the pointed
    type (1, N) is always present (as the n = N candidate).
    """
    if not 1 <= N <= ENUMERATION_CAP:
        raise ValueError(f"dimension must be in 1..{ENUMERATION_CAP}, got {N}")
    result: list[CoalgebraType] = []
    for n in divisors(N):
        found: list[tuple[tuple[int, int], ...]] = []

        def rec(d: int, remaining: int, acc: tuple[tuple[int, int], ...]) -> None:
            if remaining == 0:
                found.append(acc)
                return
            if d * d > remaining:
                return
            rec(d + 1, remaining, acc)
            # n | count*d^2  <=>  count is a multiple of n / gcd(n, d^2)
            step = n // gcd(n, d * d)
            count = step
            while count * d * d <= remaining:
                rec(d + 1, remaining - count * d * d, acc + ((d, count),))
                count += step

        rec(2, N - n, ())
        result.extend(CoalgebraType(n, e) for e in sorted(found))
    return tuple(result)
