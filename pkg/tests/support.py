"""Shared caches for the test suite.

Enumeration and classification of all lattices up to size 8 are needed
by several tests; caching them keeps the suite fast while the first
caller (the timed exhaustive acceptance check) still pays full price.
"""

from __future__ import annotations

from functools import lru_cache

import finlat as fl

EXPECTED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53, 8: 222}


@lru_cache(maxsize=None)
def lattices_of(n: int) -> tuple[fl.FiniteLattice, ...]:
    return tuple(fl.enumerate_lattices(n))


def lattices_up_to(max_n: int) -> list[fl.FiniteLattice]:
    out: list[fl.FiniteLattice] = []
    for n in range(1, max_n + 1):
        out.extend(lattices_of(n))
    return out


@lru_cache(maxsize=None)
def classified(n: int) -> tuple[tuple[fl.FiniteLattice, fl.PropertyReport], ...]:
    return tuple((lat, fl.classify(lat)) for lat in lattices_of(n))


def classified_up_to(max_n: int) -> list[tuple[fl.FiniteLattice, fl.PropertyReport]]:
    out: list[tuple[fl.FiniteLattice, fl.PropertyReport]] = []
    for n in range(1, max_n + 1):
        out.extend(classified(n))
    return out


def catalog() -> dict[str, fl.FiniteLattice]:
    return {
        "chain1": fl.standard_lattice("chain", 1),
        "chain2": fl.standard_lattice("chain", 2),
        "chain3": fl.standard_lattice("chain", 3),
        "chain4": fl.standard_lattice("chain", 4),
        "boolean2": fl.standard_lattice("boolean", 2),
        "boolean3": fl.standard_lattice("boolean", 3),
        "n5": fl.standard_lattice("n5"),
        "m3": fl.standard_lattice("m3"),
    }
