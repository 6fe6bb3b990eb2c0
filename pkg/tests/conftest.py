"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's orbit and partition
machinery: classes are computed by conjugating with every group element,
centralizers by a full sweep, and the dihedral reference table is built
straight from the presentation.  Tests compare the fast paths against
these slow but obviously correct computations.
"""

from __future__ import annotations

import pytest

from classprod import (
    ConstructionSpec,
    Element,
    build,
)


# ---------------------------------------------------------------------------
# brute-force oracles


def brute_class(g, a: Element) -> frozenset[Element]:
    """Conjugacy class of ``a`` by conjugating with every element of ``g``."""
    return frozenset(g.conjugate(a, x) for x in g.elements())


def brute_centralizer(g, a: Element) -> frozenset[Element]:
    out = set()
    for x in g.elements():
        if g.multiply(x, a) == g.multiply(a, x):
            out.add(x)
    return frozenset(out)


def brute_center(g) -> frozenset[Element]:
    elems = g.elements()
    out = set()
    for z in elems:
        if all(g.multiply(z, x) == g.multiply(x, z) for x in elems):
            out.add(z)
    return frozenset(out)


def brute_class_partition(g) -> list[frozenset[Element]]:
    """All conjugacy classes, via repeated full-sweep orbits."""
    seen: set[Element] = set()
    out = []
    for x in g.elements():
        if x in seen:
            continue
        cls = brute_class(g, x)
        seen |= cls
        out.append(cls)
    return out


def brute_eta(g, a: Element, b: Element) -> int:
    """Number of classes in a^G b^G, computed entirely with full sweeps."""
    xa = brute_class(g, a)
    xb = brute_class(g, b)
    product = {g.multiply(x, y) for x in xa for y in xb}
    count = 0
    while product:
        x = next(iter(product))
        product -= brute_class(g, x)
        count += 1
    return count


def brute_quadratic_image(r: int, s: int, t: int, p: int) -> frozenset[int]:
    return frozenset((r * i * i + s * i + t) % p for i in range(p))


def dihedral_reference_table(order: int) -> list[list[int]]:
    """Cayley table of the dihedral group of the given (even) order.

    Built directly from the presentation r^m = s^2 = 1, s r s = r^-1,
    with element k = r^(k % m) s^(k // m).  Independent of the library's
    dihedral backend.
    """
    m = order // 2

    def mul(x: int, y: int) -> int:
        i, u = x % m, x // m
        j, v = y % m, y // m
        k = (j + i) % m if v == 0 else (j - i) % m
        return k + m * (u ^ v)

    return [[mul(x, y) for y in range(order)] for x in range(order)]


def random_pairs(g, count: int, seed: int = 0):
    """Deterministic list of element pairs for property sweeps."""
    import random

    rng = random.Random(seed)
    elems = g.elements()
    return [(rng.choice(elems), rng.choice(elems)) for _ in range(count)]


# ---------------------------------------------------------------------------
# fixtures for groups reused across files


@pytest.fixture(scope="session")
def cyclic9():
    return build(ConstructionSpec(kind="cyclic", n=9))


@pytest.fixture(scope="session")
def dihedral8():
    return build(ConstructionSpec(kind="dihedral", n=8))


@pytest.fixture(scope="session")
def quaternion8():
    return build(ConstructionSpec(kind="quaternion8"))


@pytest.fixture(scope="session")
def heisenberg27():
    return build(ConstructionSpec(kind="extraspecial-exponent-p", p=3, l=1))


@pytest.fixture(scope="session")
def wreath81():
    return build(ConstructionSpec(
        kind="wreath-cyclic", p=3, base=ConstructionSpec(kind="cyclic", n=3)))


@pytest.fixture(scope="session")
def affine162():
    return build(ConstructionSpec(kind="affine-wreath", p=3))
