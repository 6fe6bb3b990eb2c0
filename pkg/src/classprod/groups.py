"""Finite-group backends over canonical byte encodings.

Every backend realizes one small kernel (identity, multiply, inverse,
generators, enumeration) on opaque fixed-width byte strings.  Orbit and
closure code upstream can therefore dedup with plain hash sets and pick
canonical representatives by byte order, independent of the backend.

Handles are immutable after construction and safe to share; the only
mutation is idempotent caching (the sorted element list and the class
partition attached by :mod:`classprod.classes`).
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    EnumerationCapError,
    ForeignElementError,
    GroupMismatchError,
    InvalidParameterError,
    NotNormalError,
)
from .util import int_byte_width

#: Full-enumeration operations refuse to run on groups larger than this
#: unless the caller raises the cap explicitly.
DEFAULT_ORDER_CAP = 200_000

#: A quotient materializes an explicit multiplication table, which is
#: quadratic in the quotient order; keep that honest.
QUOTIENT_TABLE_CAP = 4096


class Element(NamedTuple):
    """Opaque group element: a fixed-width canonical byte encoding.

    Equality, hashing and the total order all come straight from the
    bytes, so the smallest element of any set is well defined and the
    same on every run.
    """

    encoding: bytes

    def hex(self) -> str:
        return self.encoding.hex()

    def __repr__(self) -> str:
        return f"Element({self.encoding.hex()})"


class GroupHandle(ABC):
    """A finite group: identity, multiplication, inverses, generators.

    Subclasses implement the raw-bytes kernel (``_mul``, ``_inv``,
    ``_check``, ``_enumerate_raw``); everything else is shared.  Public
    methods validate their arguments and work with :class:`Element`;
    internal callers that have already validated may use the raw kernel
    directly for speed.
    """

    backend = "abstract"

    def __init__(self, order: int, identity: bytes, generators: Iterable[bytes],
                 order_cap: int = DEFAULT_ORDER_CAP):
        gens = tuple(bytes(g) for g in generators)
        if order < 1:
            raise InvalidParameterError(f"group order must be positive, got {order}")
        if not gens:
            raise InvalidParameterError("generator list must be nonempty")
        self.order = int(order)
        self.order_cap = int(order_cap)
        self._identity_raw = bytes(identity)
        self._generators_raw = gens
        self._sorted_raw: tuple[bytes, ...] | None = None
        self._partition = None  # cached by classprod.classes.class_partition

    # ------------------------------------------------------------------
    # kernel on raw encodings, implemented per backend

    @abstractmethod
    def _mul(self, x: bytes, y: bytes) -> bytes: ...

    @abstractmethod
    def _inv(self, x: bytes) -> bytes: ...

    @abstractmethod
    def _check(self, x: bytes) -> None:
        """Raise ForeignElementError unless x is a valid encoding here."""

    @abstractmethod
    def _enumerate_raw(self) -> Iterator[bytes]:
        """Yield every element encoding exactly once, in any order."""

    def _conj(self, a: bytes, x: bytes) -> bytes:
        """x^-1 * a * x on raw encodings."""
        return self._mul(self._mul(self._inv(x), a), x)

    def _raw_elements(self) -> tuple[bytes, ...]:
        if self._sorted_raw is None:
            if self.order > self.order_cap:
                raise EnumerationCapError(
                    f"group order {self.order} exceeds the enumeration cap "
                    f"{self.order_cap}; raise the cap to force this")
            elems = sorted(self._enumerate_raw())
            if len(elems) != self.order:
                raise InvalidParameterError(
                    f"backend enumerated {len(elems)} encodings but claims "
                    f"order {self.order}")
            for i in range(1, len(elems)):
                if elems[i - 1] == elems[i]:
                    raise InvalidParameterError(
                        f"duplicate encoding {elems[i].hex()} in enumeration")
            self._sorted_raw = tuple(elems)
        return self._sorted_raw

    # ------------------------------------------------------------------
    # public interface

    @property
    def identity(self) -> Element:
        return Element(self._identity_raw)

    @property
    def generators(self) -> tuple[Element, ...]:
        return tuple(Element(g) for g in self._generators_raw)

    @property
    def encoding_width(self) -> int:
        return len(self._identity_raw)

    def element(self, encoding: bytes) -> Element:
        """Validate an encoding and wrap it."""
        raw = bytes(encoding)
        self._check(raw)
        return Element(raw)

    def multiply(self, x: Element, y: Element) -> Element:
        self._check(x.encoding)
        self._check(y.encoding)
        return Element(self._mul(x.encoding, y.encoding))

    def inverse(self, x: Element) -> Element:
        self._check(x.encoding)
        return Element(self._inv(x.encoding))

    def conjugate(self, a: Element, x: Element) -> Element:
        """a conjugated by x, i.e. x^-1 * a * x."""
        self._check(a.encoding)
        self._check(x.encoding)
        return Element(self._conj(a.encoding, x.encoding))

    def commutator(self, a: Element, g: Element) -> Element:
        """a^-1 * (a conjugated by g)."""
        self._check(a.encoding)
        self._check(g.encoding)
        return Element(self._mul(self._inv(a.encoding),
                                 self._conj(a.encoding, g.encoding)))

    def power(self, x: Element, k: int) -> Element:
        """x**k by square-and-multiply; negative k goes through the inverse."""
        self._check(x.encoding)
        base = x.encoding
        if k < 0:
            base = self._inv(base)
            k = -k
        acc = self._identity_raw
        while k:
            if k & 1:
                acc = self._mul(acc, base)
            base = self._mul(base, base)
            k >>= 1
        return Element(acc)

    def elements(self) -> tuple[Element, ...]:
        """All elements, sorted by encoding.  Guarded by the order cap."""
        return tuple(Element(b) for b in self._raw_elements())

    def __repr__(self) -> str:
        return f"<{type(self).__name__} backend={self.backend} order={self.order}>"


class CayleyTableGroup(GroupHandle):
    """Group given by an explicit multiplication table over 0..n-1.

    Element i is encoded as the fixed-width big-endian integer i; element
    0 must be the identity.  The constructor validates that every row is
    a bijection, that 0 really is a two-sided identity, that two-sided
    inverses exist, and that multiplication is associative (exhaustively
    for small tables, on a seeded sample otherwise).
    """

    backend = "cayley-table"

    def __init__(self, table: Sequence[Sequence[int]],
                 generators: Sequence[int] | None = None,
                 order_cap: int = DEFAULT_ORDER_CAP):
        n = len(table)
        if n < 1:
            raise InvalidParameterError("multiplication table must be nonempty")
        rows = []
        for i, row in enumerate(table):
            row = tuple(int(v) for v in row)
            if len(row) != n:
                raise InvalidParameterError(
                    f"row {i} has {len(row)} entries, expected {n}")
            if sorted(row) != list(range(n)):
                raise InvalidParameterError(
                    f"row {i} is not a bijection of 0..{n - 1}")
            rows.append(row)
        if rows[0] != tuple(range(n)):
            raise InvalidParameterError(
                "row 0 must be the identity row (element 0 is the identity)")
        for i in range(n):
            if rows[i][0] != i:
                raise InvalidParameterError(
                    f"column 0 must fix every element, but {i}*0 = {rows[i][0]}")
        invtab = [0] * n
        for i in range(n):
            j = rows[i].index(0)
            if rows[j][i] != 0:
                raise InvalidParameterError(
                    f"element {i} has no two-sided inverse "
                    f"({i}*{j} = 0 but {j}*{i} = {rows[j][i]})")
            invtab[i] = j
        self._assert_associative(rows)

        width = int_byte_width(n - 1)
        self._width = width
        self._enc = [i.to_bytes(width, "big") for i in range(n)]
        self._dec = {b: i for i, b in enumerate(self._enc)}
        self._table = rows
        self._invtab = invtab
        if generators is None:
            gen_idx = self._greedy_generators(rows)
        else:
            gen_idx = [int(i) for i in generators]
            for i in gen_idx:
                if not 0 <= i < n:
                    raise InvalidParameterError(f"generator index {i} out of range")
            if self._mulclose(rows, gen_idx) != set(range(n)):
                raise InvalidParameterError("given generators do not generate")
        super().__init__(n, self._enc[0], (self._enc[i] for i in gen_idx),
                         order_cap)

    @staticmethod
    def _assert_associative(rows) -> None:
        n = len(rows)
        if n <= 32:
            triples = ((i, j, k) for i in range(n) for j in range(n)
                       for k in range(n))
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(1000))
        for i, j, k in triples:
            if rows[rows[i][j]][k] != rows[i][rows[j][k]]:
                raise InvalidParameterError(
                    f"table is not associative at ({i},{j},{k})")

    @staticmethod
    def _mulclose(rows, gens) -> set[int]:
        known = {0}
        frontier = [0]
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    z = rows[a][g]
                    if z not in known:
                        known.add(z)
                        new.append(z)
            frontier = new
        return known

    @classmethod
    def _greedy_generators(cls, rows) -> list[int]:
        # Smallest-index-first generating set; deterministic and short.
        n = len(rows)
        gens: list[int] = []
        known = {0}
        while len(known) < n:
            gens.append(min(set(range(n)) - known))
            known = cls._mulclose(rows, gens)
        return gens or [0]

    def index_of(self, x: Element) -> int:
        self._check(x.encoding)
        return self._dec[x.encoding]

    def _mul(self, x: bytes, y: bytes) -> bytes:
        return self._enc[self._table[self._dec[x]][self._dec[y]]]

    def _inv(self, x: bytes) -> bytes:
        return self._enc[self._invtab[self._dec[x]]]

    def _check(self, x: bytes) -> None:
        if x not in self._dec:
            raise ForeignElementError(
                f"{x.hex()!r} is not an element index of this {self.order}-element "
                "table group")

    def _enumerate_raw(self) -> Iterator[bytes]:
        return iter(self._enc)


class PermutationGroup(GroupHandle):
    """Group generated by permutations of 0..degree-1.

    An element is encoded as its image vector, one byte per point, so the
    backend supports degrees up to 255.  The full element set is closed
    over eagerly at construction (the order is not known beforehand),
    guarded by the order cap.
    """

    backend = "permutation"

    def __init__(self, generators: Sequence[Sequence[int]],
                 order_cap: int = DEFAULT_ORDER_CAP):
        gens = [tuple(int(v) for v in g) for g in generators]
        if not gens:
            raise InvalidParameterError("at least one generator is required")
        degree = len(gens[0])
        if not 1 <= degree <= 255:
            raise InvalidParameterError(
                f"degree {degree} unsupported (1..255)")
        raw_gens = []
        for i, g in enumerate(gens):
            if len(g) != degree:
                raise InvalidParameterError(
                    f"generator {i} has degree {len(g)}, expected {degree}")
            if sorted(g) != list(range(degree)):
                raise InvalidParameterError(
                    f"generator {i} is not a bijection of 0..{degree - 1}")
            raw_gens.append(bytes(g))
        self.degree = degree
        ident = bytes(range(degree))
        elems = {ident}
        frontier = [ident]
        while frontier:
            new = []
            for a in frontier:
                for g in raw_gens:
                    z = bytes(map(g.__getitem__, a))
                    if z not in elems:
                        if len(elems) >= order_cap:
                            raise EnumerationCapError(
                                f"permutation closure exceeded the cap {order_cap}")
                        elems.add(z)
                        new.append(z)
            frontier = new
        self._element_set = frozenset(elems)
        super().__init__(len(elems), ident, raw_gens, order_cap)

    def _mul(self, x: bytes, y: bytes) -> bytes:
        # apply x first, then y
        return bytes(map(y.__getitem__, x))

    def _inv(self, x: bytes) -> bytes:
        out = bytearray(self.degree)
        for i, v in enumerate(x):
            out[v] = i
        return bytes(out)

    def _check(self, x: bytes) -> None:
        if x not in self._element_set:
            raise ForeignElementError(
                f"{x.hex()!r} is not an element of this degree-{self.degree} "
                "permutation group")

    def _enumerate_raw(self) -> Iterator[bytes]:
        return iter(self._element_set)


class SubgroupView:
    """An enumerated subgroup of a parent group.

    Callers must pass a multiplicatively closed set containing the
    identity (:func:`closure` builds one); only cheap smell tests run
    here.  Normality is decided against the parent's generators and
    cached.
    """

    def __init__(self, parent: GroupHandle, elements: Iterable[Element]):
        raw = frozenset(e.encoding for e in elements)
        if parent._identity_raw not in raw:
            raise InvalidParameterError("a subgroup must contain the identity")
        if parent.order % len(raw) != 0:
            raise InvalidParameterError(
                f"subgroup size {len(raw)} does not divide the group order "
                f"{parent.order}")
        self.parent = parent
        self._raw = raw
        self.elements = frozenset(Element(b) for b in raw)
        self._normal: bool | None = None

    def __len__(self) -> int:
        return len(self._raw)

    def __contains__(self, x: Element) -> bool:
        return x.encoding in self._raw

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubgroupView)
                and self.parent is other.parent and self._raw == other._raw)

    def __hash__(self) -> int:
        return hash((id(self.parent), self._raw))

    @property
    def is_normal(self) -> bool:
        if self._normal is None:
            par = self.parent
            self._normal = all(par._conj(h, g) in self._raw
                               for g in par._generators_raw
                               for h in self._raw)
        return self._normal

    def __repr__(self) -> str:
        return f"<SubgroupView order={len(self._raw)} of {self.parent!r}>"


def closure(g: GroupHandle, seed: Iterable[Element]) -> SubgroupView:
    """Subgroup generated by ``seed``, via breadth-first products.

    A finite set closed under multiplication is a subgroup, so products
    against the seed elements suffice; inverses appear as powers.
    """
    seeds = sorted({e.encoding for e in seed})
    if not seeds:
        raise InvalidParameterError("closure needs a nonempty seed")
    for s in seeds:
        g._check(s)
    known = {g._identity_raw}
    known.update(seeds)
    frontier = sorted(known)
    while frontier:
        new = []
        for a in frontier:
            for s in seeds:
                z = g._mul(a, s)
                if z not in known:
                    known.add(z)
                    new.append(z)
        frontier = new
        if len(known) > g.order_cap:
            raise EnumerationCapError(
                f"closure exceeded the enumeration cap {g.order_cap}")
    return SubgroupView(g, (Element(b) for b in known))


def centralizer(g: GroupHandle, a: Element) -> SubgroupView:
    """All x with a^x = a.  Needs full enumeration, so the cap applies."""
    g._check(a.encoding)
    ar = a.encoding
    hits = [b for b in g._raw_elements() if g._conj(ar, b) == ar]
    return SubgroupView(g, (Element(b) for b in hits))


def center(g: GroupHandle) -> SubgroupView:
    """Elements fixed by conjugation; checking the generators suffices."""
    gens = g._generators_raw
    hits = [b for b in g._raw_elements()
            if all(g._conj(b, x) == b for x in gens)]
    return SubgroupView(g, (Element(b) for b in hits))


class QuotientGroup(CayleyTableGroup):
    """Cayley-table group on the cosets of a normal subgroup.

    Each coset is represented by its minimum element encoding; cosets are
    indexed with the identity coset first and the rest in ascending
    representative order, so the table is the same on every run.
    ``project`` maps a parent element to its coset.
    """

    def __init__(self, parent: GroupHandle, subgroup: SubgroupView,
                 table, generators, coset_reps: Sequence[bytes],
                 coset_of: dict[bytes, int]):
        super().__init__(table, generators=generators, order_cap=parent.order_cap)
        self.parent = parent
        self.subgroup = subgroup
        self._coset_reps = tuple(coset_reps)
        self._coset_of = coset_of

    def project(self, x: Element) -> Element:
        self.parent._check(x.encoding)
        return Element(self._enc[self._coset_of[x.encoding]])

    def coset_representative(self, q: Element) -> Element:
        """The minimum parent element of the coset ``q``."""
        self._check(q.encoding)
        return Element(self._coset_reps[self._dec[q.encoding]])


def quotient_group(g: GroupHandle, n: SubgroupView) -> QuotientGroup:
    """The quotient of ``g`` by the normal subgroup ``n``."""
    if n.parent is not g:
        raise GroupMismatchError("subgroup does not belong to this group")
    if not n.is_normal:
        raise NotNormalError(
            f"subgroup of order {len(n)} is not normal; cannot form a quotient")
    elems = g._raw_elements()
    q = g.order // len(n)
    if q > QUOTIENT_TABLE_CAP:
        raise EnumerationCapError(
            f"quotient order {q} exceeds the table cap {QUOTIENT_TABLE_CAP}")
    nraw = sorted(n._raw)
    coset_of_elem: dict[bytes, int] = {}
    reps: list[bytes] = []
    for x in elems:  # ascending, so the first member seen is the coset minimum
        if x in coset_of_elem:
            continue
        idx = len(reps)
        reps.append(x)
        for h in nraw:
            coset_of_elem[g._mul(x, h)] = idx
    ident_idx = coset_of_elem[g._identity_raw]
    order_map = [ident_idx] + [i for i in range(len(reps)) if i != ident_idx]
    new_index = {old: new for new, old in enumerate(order_map)}
    reps = [reps[old] for old in order_map]
    coset_of_elem = {x: new_index[i] for x, i in coset_of_elem.items()}
    table = [[coset_of_elem[g._mul(a, b)] for b in reps] for a in reps]
    gen_idx = []
    for x in g._generators_raw:
        i = coset_of_elem[x]
        if i != 0 and i not in gen_idx:
            gen_idx.append(i)
    if not gen_idx:
        gen_idx = [0]
    return QuotientGroup(g, n, table, gen_idx, reps, coset_of_elem)


def sample_elements(g: GroupHandle, count: int, seed: int = 0) -> list[Element]:
    """Deterministic pseudo-random elements.

    Enumerable groups are sampled uniformly; beyond the cap we take short
    random generator words, which is enough for law smoke tests.
    """
    rng = random.Random(seed)
    if g.order <= g.order_cap:
        pool = g._raw_elements()
        return [Element(rng.choice(pool)) for _ in range(count)]
    gens = g._generators_raw
    out = []
    for _ in range(count):
        w = g._identity_raw
        for _ in range(rng.randrange(1, 9)):
            w = g._mul(w, rng.choice(gens))
        out.append(Element(w))
    return out


def assert_group_laws(g: GroupHandle, samples: int = 1000, seed: int = 0) -> None:
    """Spot-check associativity, identity and inverses on random triples."""
    e = g._identity_raw
    pool = [x.encoding for x in sample_elements(g, 3 * samples, seed)]
    for i in range(samples):
        x, y, z = pool[3 * i], pool[3 * i + 1], pool[3 * i + 2]
        if g._mul(g._mul(x, y), z) != g._mul(x, g._mul(y, z)):
            raise AssertionError(
                f"associativity fails at ({x.hex()}, {y.hex()}, {z.hex()})")
        if g._mul(e, x) != x or g._mul(x, e) != x:
            raise AssertionError(f"identity law fails at {x.hex()}")
        xi = g._inv(x)
        if g._mul(xi, x) != e or g._mul(x, xi) != e:
            raise AssertionError(f"inverse law fails at {x.hex()}")
