"""Conjugacy classes, class products, and the class-count invariant.

The central quantity everywhere below is eta(X) for a G-invariant set X:
the number of distinct conjugacy classes whose union is X.  Products of
two classes are always G-invariant, so :func:`class_product` reports
their decomposition directly; the invariant is exposed as
``decomposition.eta``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    EvenPrimeError,
    GroupMismatchError,
    InvalidParameterError,
    InvalidPrimeError,
    NotCentralError,
    PreconditionViolatedError,
)
from .groups import Element, GroupHandle, SubgroupView, centralizer
from .util import is_prime


class ConjugacyClass:
    """The orbit of one element under conjugation by the whole group."""

    __slots__ = ("group", "_raw", "_rep_raw")

    def __init__(self, group: GroupHandle, raw_members: frozenset[bytes]):
        self.group = group
        self._raw = raw_members
        self._rep_raw = min(raw_members)

    @property
    def representative(self) -> Element:
        """The encoding-least member; canonical for the class."""
        return Element(self._rep_raw)

    @property
    def size(self) -> int:
        return len(self._raw)

    @property
    def members(self) -> frozenset[Element]:
        return frozenset(Element(raw) for raw in self._raw)

    def __contains__(self, x: Element) -> bool:
        return x.encoding in self._raw

    def __len__(self) -> int:
        return len(self._raw)

    def __iter__(self) -> Iterator[Element]:
        return (Element(raw) for raw in sorted(self._raw))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConjugacyClass):
            return NotImplemented
        return (self.group._identity_raw == other.group._identity_raw
                and self._raw == other._raw)

    def __hash__(self) -> int:
        return hash((self.group._identity_raw, self._rep_raw, len(self._raw)))

    def __repr__(self) -> str:
        return (f"ConjugacyClass(rep={self._rep_raw.hex()}, "
                f"size={len(self._raw)})")


def _orbit_raw(g: GroupHandle, seed: bytes) -> frozenset[bytes]:
    """Conjugation orbit of one raw element under the group generators."""
    pairs = [(gr, g._inv(gr)) for gr in g._generators_raw]
    mul = g._mul
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for gen, geninv in pairs:
                y = mul(mul(geninv, x), gen)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def conjugacy_class(g: GroupHandle, a: Element) -> ConjugacyClass:
    g._check(a.encoding)
    return ConjugacyClass(g, _orbit_raw(g, a.encoding))


class ClassPartition:
    """All conjugacy classes of a group, computed once and cached."""

    def __init__(self, g: GroupHandle):
        self.group = g
        assigned: dict[bytes, int] = {}
        classes: list[ConjugacyClass] = []
        for raw in g._raw_elements():
            if raw in assigned:
                continue
            orbit = _orbit_raw(g, raw)
            idx = len(classes)
            classes.append(ConjugacyClass(g, orbit))
            for member in orbit:
                assigned[member] = idx
        # The scan visits encodings in ascending order, so each class is
        # first met at its least member and the list is already sorted
        # by representative.
        self.classes: tuple[ConjugacyClass, ...] = tuple(classes)
        self._index_of = assigned

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[ConjugacyClass]:
        return iter(self.classes)

    def class_of(self, x: Element) -> ConjugacyClass:
        self.group._check(x.encoding)
        return self.classes[self._index_of[x.encoding]]

    def classes_of_size(self, size: int) -> tuple[ConjugacyClass, ...]:
        return tuple(c for c in self.classes if c.size == size)

    def size_histogram(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.classes:
            out[c.size] = out.get(c.size, 0) + 1
        return dict(sorted(out.items()))


def class_partition(g: GroupHandle) -> ClassPartition:
    if g._partition is None:
        g._partition = ClassPartition(g)
    return g._partition


@dataclass(frozen=True)
class CommutatorSet:
    """The set [a, G] = {a^-1 * a^g : g in G}.

    Satisfies a * [a,G] = a^G elementwise, hence |[a,G]| = |a^G|.  It
    always contains the identity but is generally only a set, not a
    subgroup.
    """

    base: Element
    elements: frozenset[Element]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Element) -> bool:
        return x in self.elements

    def __iter__(self) -> Iterator[Element]:
        return iter(sorted(self.elements))


def commutator_set(g: GroupHandle, a: Element) -> CommutatorSet:
    """[a, G], computed as a^-1 * (a's conjugacy class)."""
    g._check(a.encoding)
    ainv = g._inv(a.encoding)
    members = frozenset(Element(g._mul(ainv, raw))
                        for raw in _orbit_raw(g, a.encoding))
    return CommutatorSet(a, members)


@dataclass(frozen=True)
class ClassDecomposition:
    """A G-invariant set written as the disjoint union of classes."""

    group: GroupHandle
    source: frozenset[Element]
    classes: tuple[ConjugacyClass, ...]

    @property
    def eta(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    def representatives(self) -> tuple[Element, ...]:
        return tuple(c.representative for c in self.classes)


def _same_group(g1: GroupHandle, g2: GroupHandle) -> bool:
    if g1 is g2:
        return True
    return (type(g1) is type(g2) and g1.order == g2.order
            and g1._identity_raw == g2._identity_raw
            and g1._generators_raw == g2._generators_raw)


def _decompose_raw(g: GroupHandle,
                   members: set[bytes]) -> tuple[ConjugacyClass, ...]:
    """Split a raw G-invariant set into classes.

    Uses the cached whole-group partition when one exists; otherwise
    peels orbits off directly, always starting from the least remaining
    encoding, so the class order never depends on anything but the set.
    """
    if g._partition is not None:
        index_of = g._partition._index_of
        seen_idx = sorted({index_of[raw] for raw in members})
        classes = tuple(g._partition.classes[i] for i in seen_idx)
    else:
        remaining = set(members)
        heap = list(remaining)
        heapq.heapify(heap)
        out = []
        while remaining:
            while heap[0] not in remaining:
                heapq.heappop(heap)
            seed = heapq.heappop(heap)
            orbit = _orbit_raw(g, seed)
            stray = orbit - remaining
            if stray:
                raise PreconditionViolatedError(
                    "set is not closed under conjugation; the class of "
                    f"{seed.hex()} leaves it (e.g. {min(stray).hex()})")
            remaining -= orbit
            out.append(ConjugacyClass(g, orbit))
        classes = tuple(sorted(out, key=lambda c: c._rep_raw))
    total = sum(c.size for c in classes)
    if total != len(members):
        raise PreconditionViolatedError(
            f"classes cover {total} elements but the set has {len(members)}")
    return classes


def class_product(x: ConjugacyClass, y: ConjugacyClass) -> ClassDecomposition:
    """Decompose the product set x * y into conjugacy classes.

    The product of two classes is G-invariant, so it is a disjoint union
    of classes; they are returned sorted by representative encoding.
    """
    if not _same_group(x.group, y.group):
        raise GroupMismatchError(
            "cannot multiply conjugacy classes of different groups")
    g = x.group
    mul = g._mul
    product = {mul(u, v) for u in x._raw for v in y._raw}
    classes = _decompose_raw(g, product)
    return ClassDecomposition(g, frozenset(Element(raw) for raw in product),
                              classes)


def decompose_invariant_set(g: GroupHandle,
                            members: Iterable[Element]) -> ClassDecomposition:
    """Decompose an arbitrary conjugation-closed set into classes."""
    raw = set()
    for x in members:
        g._check(x.encoding)
        raw.add(x.encoding)
    if not raw:
        raise InvalidParameterError("cannot decompose an empty set")
    return ClassDecomposition(g, frozenset(Element(b) for b in raw),
                              _decompose_raw(g, raw))


def eta(g: GroupHandle, a: Element, b: Element) -> int:
    """Number of distinct classes in a^G * b^G."""
    return class_product(conjugacy_class(g, a), conjugacy_class(g, b)).eta


def _require_odd_prime(p, where: str) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidPrimeError(f"{where} needs a prime p, got {p!r}")
    if p == 2:
        raise EvenPrimeError(f"{where} needs an odd prime p, got 2")


def quadratic_image(r: int, s: int, t: int, p: int) -> frozenset[int]:
    """Values of r*i^2 + s*i + t as i runs over the integers mod p."""
    _require_odd_prime(p, "quadratic_image")
    return frozenset((r * i * i + s * i + t) % p for i in range(p))


def quadratic_image_size(r: int, s: int, t: int, p: int) -> int:
    """Size of the image of i -> r*i^2 + s*i + t mod p, in closed form.

    A constant map hits 1 value and a degenerate-linear map all p; an
    honest quadratic hits exactly (p+1)/2 values, since each value is
    taken by i and -i - s/r, which coincide only at the vertex.
    """
    _require_odd_prime(p, "quadratic_image_size")
    if r % p == 0:
        return 1 if s % p == 0 else p
    return (p + 1) // 2


def as_subgroup(g: GroupHandle, members: Iterable[Element]) -> SubgroupView | None:
    """View a set as a subgroup if it is one, else None (no closure taken)."""
    raw = sorted({x.encoding for x in members})
    for b in raw:
        g._check(b)
    if g._identity_raw not in raw:
        return None
    rawset = set(raw)
    mul = g._mul
    for u in raw:
        for v in raw:
            if mul(u, v) not in rawset:
                return None
    return SubgroupView(g, (Element(b) for b in raw))


HYPOTHESIS_SAME_SIZES = "same-class-sizes"
HYPOTHESIS_EQUAL_CENTRALIZERS = "equal-centralizers"


def eta_one_criterion(g: GroupHandle, a: Element, b: Element,
                      hypothesis: str = HYPOTHESIS_SAME_SIZES) -> bool:
    """Commutator-set test for a^G b^G collapsing to the single class (ab)^G.

    True iff [ab,G] = [a,G] = [b,G] as sets and that common set is a
    normal subgroup.  Under either stated hypothesis this is equivalent
    to eta(a^G b^G) = 1; the hypothesis is re-verified, not trusted:
    ``same-class-sizes`` demands |a^G| = |b^G| = |(ab)^G|, and
    ``equal-centralizers`` demands C_G(a) = C_G(b).
    """
    g._check(a.encoding)
    g._check(b.encoding)
    ab = Element(g._mul(a.encoding, b.encoding))
    if hypothesis == HYPOTHESIS_SAME_SIZES:
        na = len(_orbit_raw(g, a.encoding))
        nb = len(_orbit_raw(g, b.encoding))
        nab = len(_orbit_raw(g, ab.encoding))
        if not na == nb == nab:
            raise PreconditionViolatedError(
                f"hypothesis {hypothesis!r} fails: |a^G|={na}, |b^G|={nb}, "
                f"|(ab)^G|={nab}")
    elif hypothesis == HYPOTHESIS_EQUAL_CENTRALIZERS:
        if centralizer(g, a) != centralizer(g, b):
            raise PreconditionViolatedError(
                f"hypothesis {hypothesis!r} fails: the centralizers of a and "
                "b differ")
    else:
        raise InvalidParameterError(
            f"unknown hypothesis {hypothesis!r}; expected "
            f"{HYPOTHESIS_SAME_SIZES!r} or {HYPOTHESIS_EQUAL_CENTRALIZERS!r}")
    ka = commutator_set(g, a).elements
    kb = commutator_set(g, b).elements
    kab = commutator_set(g, ab).elements
    if not ka == kb == kab:
        return False
    view = as_subgroup(g, kab)
    return view is not None and view.is_normal


def central_translate_classes(x: ConjugacyClass,
                              n_set: SubgroupView) -> tuple[ConjugacyClass, ...]:
    """The distinct classes among {x * n : n in the central subgroup}.

    Every member of ``n_set`` must commute with all of G; then x*n is
    itself a class ((bn)^G for b the representative) and two translates
    coincide exactly when the two n differ by a commutator of b.
    """
    g = x.group
    if n_set.parent is not g:
        raise GroupMismatchError("subgroup and class live in different groups")
    mul = g._mul
    for n in sorted(n_set._raw):
        for gen in g._generators_raw:
            if mul(n, gen) != mul(gen, n):
                raise NotCentralError(
                    f"subgroup member {n.hex()} does not commute with "
                    f"generator {gen.hex()}")
    seen: dict[bytes, frozenset[bytes]] = {}
    for n in sorted(n_set._raw):
        translate = frozenset(mul(m, n) for m in x._raw)
        rep = min(translate)
        if rep not in seen:
            seen[rep] = translate
    return tuple(ConjugacyClass(g, seen[rep]) for rep in sorted(seen))


def check_product_identity(g: GroupHandle, a: Element, b: Element) -> bool:
    """Check a^G b^G = ab * [a^b, G] * [b, G] elementwise.

    The identity holds in every finite group; it is exposed as a
    cross-check because a wrong multiplication convention in a backend
    breaks it immediately.
    """
    g._check(a.encoding)
    g._check(b.encoding)
    mul = g._mul
    ab = mul(a.encoding, b.encoding)
    a_conj_b = g._conj(a.encoding, b.encoding)
    left = {mul(u, v)
            for u in _orbit_raw(g, a.encoding)
            for v in _orbit_raw(g, b.encoding)}
    ka = commutator_set(g, Element(a_conj_b)).elements
    kb = commutator_set(g, b).elements
    right = {mul(ab, mul(u.encoding, v.encoding)) for u in ka for v in kb}
    return left == right
