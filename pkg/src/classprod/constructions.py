"""Builders for the group families the tool ships with.

A :class:`ConstructionSpec` is a small JSON-shaped tree (``kind`` plus
kind-specific integers and children) that pins a group down exactly;
:func:`build` turns it into a live handle.  ``corpus`` assembles the
deterministic battery of p-groups the exhaustive checkers sweep, and
``distinguished_element`` hands out the named elements those checks
revolve around.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import (
    EvenPrimeError,
    ForeignElementError,
    InvalidParameterError,
    InvalidPrimeError,
    UnsupportedRoleError,
)
from .groups import (
    DEFAULT_ORDER_CAP,
    CayleyTableGroup,
    Element,
    GroupHandle,
    PermutationGroup,
    center,
)
from .util import int_byte_width, is_prime

KINDS = (
    "cyclic",
    "elementary-abelian",
    "dihedral",
    "quaternion8",
    "extraspecial-exponent-p",
    "direct-product",
    "wreath-cyclic",
    "affine-wreath",
    "iterated-wreath-sylow",
)

ROLES = ("a-standard", "b-double", "noncentral-witness")

_FIELDS = ("kind", "p", "l", "n", "copies", "base", "factors", "role")


@dataclass(frozen=True)
class ConstructionSpec:
    """Serializable description of one group construction."""

    kind: str
    p: int | None = None
    l: int | None = None
    n: int | None = None
    copies: int | None = None
    base: "ConstructionSpec | None" = None
    factors: tuple["ConstructionSpec", ...] = ()
    role: str | None = None

    def to_plain(self) -> dict:
        """JSON-ready dict with only the fields this kind uses."""
        out: dict = {"kind": self.kind}
        for name in ("p", "l", "n", "copies"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.base is not None:
            out["base"] = self.base.to_plain()
        if self.factors:
            out["factors"] = [f.to_plain() for f in self.factors]
        if self.role is not None:
            out["role"] = self.role
        return out

    @staticmethod
    def from_plain(obj) -> "ConstructionSpec":
        if not isinstance(obj, dict):
            raise InvalidParameterError(
                f"a construction spec must be an object, got {type(obj).__name__}")
        unknown = sorted(set(obj) - set(_FIELDS))
        if unknown:
            raise InvalidParameterError(f"unknown spec fields: {', '.join(unknown)}")
        if "kind" not in obj:
            raise InvalidParameterError("spec is missing the 'kind' field")
        kwargs: dict = {"kind": obj["kind"]}
        for name in ("p", "l", "n", "copies"):
            if name in obj:
                value = obj[name]
                if not isinstance(value, int) or isinstance(value, bool):
                    raise InvalidParameterError(f"field {name!r} must be an integer")
                kwargs[name] = value
        if "base" in obj:
            kwargs["base"] = ConstructionSpec.from_plain(obj["base"])
        if "factors" in obj:
            if not isinstance(obj["factors"], list):
                raise InvalidParameterError("field 'factors' must be a list")
            kwargs["factors"] = tuple(ConstructionSpec.from_plain(f)
                                      for f in obj["factors"])
        if "role" in obj:
            if not isinstance(obj["role"], str):
                raise InvalidParameterError("field 'role' must be a string")
            kwargs["role"] = obj["role"]
        return ConstructionSpec(**kwargs)

    def to_json(self) -> str:
        return json.dumps(self.to_plain(), sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "ConstructionSpec":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidParameterError(f"spec is not valid JSON: {exc}") from exc
        return ConstructionSpec.from_plain(obj)

    def __str__(self) -> str:
        bits = []
        for name in ("p", "l", "n", "copies"):
            value = getattr(self, name)
            if value is not None:
                bits.append(f"{name}={value}")
        if self.base is not None:
            bits.append(f"base={self.base}")
        if self.factors:
            bits.append("factors=[" + ", ".join(str(f) for f in self.factors) + "]")
        return f"{self.kind}({', '.join(bits)})"


# ----------------------------------------------------------------------
# spec validation and order prediction

def _require_prime(p, what: str) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidPrimeError(f"{what} requires a prime p, got {p!r}")


def _require_odd_prime(p, what: str) -> None:
    _require_prime(p, what)
    if p == 2:
        raise EvenPrimeError(f"{what} requires an odd prime p, got 2")


def validate_spec(spec: ConstructionSpec) -> None:
    kind = spec.kind
    if kind not in KINDS:
        raise InvalidParameterError(f"unknown construction kind {kind!r}")
    if kind == "cyclic":
        if spec.n is None or spec.n < 1:
            raise InvalidParameterError("cyclic needs an order n >= 1")
    elif kind == "elementary-abelian":
        _require_prime(spec.p, "elementary-abelian")
        if spec.n is None or spec.n < 1:
            raise InvalidParameterError("elementary-abelian needs a rank n >= 1")
    elif kind == "dihedral":
        if spec.n is None or spec.n < 4 or spec.n % 2:
            raise InvalidParameterError(
                f"dihedral needs an even order n >= 4, got {spec.n!r}")
    elif kind == "quaternion8":
        pass
    elif kind == "extraspecial-exponent-p":
        _require_odd_prime(spec.p, "extraspecial-exponent-p")
        if spec.l is None or spec.l < 1:
            raise InvalidParameterError("extraspecial-exponent-p needs l >= 1")
    elif kind == "direct-product":
        if not spec.factors:
            raise InvalidParameterError("direct-product needs at least one factor")
        for f in spec.factors:
            validate_spec(f)
    elif kind == "wreath-cyclic":
        _require_odd_prime(spec.p, "wreath-cyclic")
        if spec.base is None:
            raise InvalidParameterError("wreath-cyclic needs a base spec")
        validate_spec(spec.base)
    elif kind == "affine-wreath":
        _require_prime(spec.p, "affine-wreath")
    elif kind == "iterated-wreath-sylow":
        _require_prime(spec.p, "iterated-wreath-sylow")
        if spec.copies is None or spec.copies < 1:
            raise InvalidParameterError(
                "iterated-wreath-sylow needs copies >= 1 (wreath levels)")


def predicted_order(spec: ConstructionSpec) -> int:
    """Group order implied by the spec, without building anything."""
    validate_spec(spec)
    kind = spec.kind
    if kind == "cyclic":
        return spec.n
    if kind == "elementary-abelian":
        return spec.p ** spec.n
    if kind == "dihedral":
        return spec.n
    if kind == "quaternion8":
        return 8
    if kind == "extraspecial-exponent-p":
        return spec.p ** (2 * spec.l + 1)
    if kind == "direct-product":
        out = 1
        for f in spec.factors:
            out *= predicted_order(f)
        return out
    if kind == "wreath-cyclic":
        return predicted_order(spec.base) ** spec.p * spec.p
    if kind == "affine-wreath":
        return spec.p ** spec.p * spec.p * (spec.p - 1)
    if kind == "iterated-wreath-sylow":
        exponent = (spec.p ** spec.copies - 1) // (spec.p - 1)
        return spec.p ** exponent
    raise InvalidParameterError(f"unknown construction kind {kind!r}")


# ----------------------------------------------------------------------
# structured backends

class CyclicGroup(GroupHandle):
    """Integers mod n, encoded as fixed-width big-endian residues."""

    backend = "structured-construction"

    def __init__(self, n: int, order_cap: int = DEFAULT_ORDER_CAP):
        if n < 1:
            raise InvalidParameterError(f"cyclic order must be >= 1, got {n}")
        self.n = n
        self._width = int_byte_width(n - 1)
        ident = self._encode(0)
        super().__init__(n, ident, [self._encode(1 % n)], order_cap)

    def _encode(self, v: int) -> bytes:
        return v.to_bytes(self._width, "big")

    def _mul(self, x: bytes, y: bytes) -> bytes:
        return self._encode((int.from_bytes(x, "big") + int.from_bytes(y, "big"))
                            % self.n)

    def _inv(self, x: bytes) -> bytes:
        return self._encode(-int.from_bytes(x, "big") % self.n)

    def _check(self, x: bytes) -> None:
        if len(x) != self._width or int.from_bytes(x, "big") >= self.n:
            raise ForeignElementError(
                f"{x.hex()!r} is not a residue encoding mod {self.n}")

    def _enumerate_raw(self) -> Iterator[bytes]:
        return (self._encode(v) for v in range(self.n))


class DirectProductGroup(GroupHandle):
    """Componentwise product of factor groups; encodings concatenate."""

    backend = "structured-construction"

    def __init__(self, factors: Sequence[GroupHandle],
                 order_cap: int = DEFAULT_ORDER_CAP):
        if not factors:
            raise InvalidParameterError("direct product needs at least one factor")
        self.factor_groups = tuple(factors)
        widths = [f.encoding_width for f in factors]
        self._slices = []
        start = 0
        for w in widths:
            self._slices.append((start, start + w))
            start += w
        order = 1
        for f in factors:
            order *= f.order
        ident = b"".join(f._identity_raw for f in factors)
        gens = []
        for i, f in enumerate(factors):
            for g in f._generators_raw:
                parts = [fac._identity_raw for fac in factors]
                parts[i] = g
                gens.append(b"".join(parts))
        super().__init__(order, ident, gens, order_cap)

    def pack(self, parts: Sequence[Element]) -> Element:
        if len(parts) != len(self.factor_groups):
            raise InvalidParameterError(
                f"expected {len(self.factor_groups)} components, got {len(parts)}")
        raw = []
        for f, part in zip(self.factor_groups, parts):
            f._check(part.encoding)
            raw.append(part.encoding)
        return Element(b"".join(raw))

    def unpack(self, x: Element) -> tuple[Element, ...]:
        self._check(x.encoding)
        return tuple(Element(x.encoding[a:b]) for a, b in self._slices)

    def _mul(self, x: bytes, y: bytes) -> bytes:
        return b"".join(f._mul(x[a:b], y[a:b])
                        for f, (a, b) in zip(self.factor_groups, self._slices))

    def _inv(self, x: bytes) -> bytes:
        return b"".join(f._inv(x[a:b])
                        for f, (a, b) in zip(self.factor_groups, self._slices))

    def _check(self, x: bytes) -> None:
        if len(x) != self._slices[-1][1]:
            raise ForeignElementError(
                f"direct-product encoding must have {self._slices[-1][1]} bytes, "
                f"got {len(x)}")
        for f, (a, b) in zip(self.factor_groups, self._slices):
            f._check(x[a:b])

    def _enumerate_raw(self) -> Iterator[bytes]:
        pools = [f._raw_elements() for f in self.factor_groups]
        return (b"".join(combo) for combo in itertools.product(*pools))


class DihedralGroup(GroupHandle):
    """Symmetries of a regular (n/2)-gon: rotations plus reflections.

    An element is (rotation, flip); with r the unit rotation and s a
    reflection, s*r*s = r^-1.
    """

    backend = "structured-construction"

    def __init__(self, order: int, order_cap: int = DEFAULT_ORDER_CAP):
        if order < 4 or order % 2:
            raise InvalidParameterError(
                f"dihedral order must be even and >= 4, got {order}")
        self.m = order // 2
        self._rw = int_byte_width(self.m - 1)
        ident = self._encode(0, 0)
        gens = [self._encode(1, 0), self._encode(0, 1)]
        super().__init__(order, ident, gens, order_cap)

    def _encode(self, rot: int, flip: int) -> bytes:
        return rot.to_bytes(self._rw, "big") + bytes([flip])

    def _decode(self, x: bytes) -> tuple[int, int]:
        return int.from_bytes(x[:-1], "big"), x[-1]

    def _mul(self, x: bytes, y: bytes) -> bytes:
        i, s = self._decode(x)
        j, t = self._decode(y)
        rot = (i - j) % self.m if s else (i + j) % self.m
        return self._encode(rot, s ^ t)

    def _inv(self, x: bytes) -> bytes:
        i, s = self._decode(x)
        return x if s else self._encode(-i % self.m, 0)

    def _check(self, x: bytes) -> None:
        ok = (len(x) == self._rw + 1 and x[-1] <= 1
              and int.from_bytes(x[:-1], "big") < self.m)
        if not ok:
            raise ForeignElementError(
                f"{x.hex()!r} is not a (rotation, flip) encoding for order "
                f"{self.order}")

    def _enumerate_raw(self) -> Iterator[bytes]:
        return (self._encode(i, s) for i in range(self.m) for s in (0, 1))


class ExtraspecialGroup(GroupHandle):
    """Exponent-p extraspecial group of order p^(2l+1), p odd.

    Realized on triples (x, y, z) with x, y vectors of length l over the
    integers mod p and z a scalar:
    (x, y, z)(x', y', z') = (x+x', y+y', z+z'+x.y').  The center is the
    z-axis and every commutator lands in it.
    """

    backend = "structured-construction"

    def __init__(self, p: int, l: int, order_cap: int = DEFAULT_ORDER_CAP):
        _require_odd_prime(p, "extraspecial-exponent-p")
        if l < 1:
            raise InvalidParameterError(f"extraspecial l must be >= 1, got {l}")
        if p > 255:
            raise InvalidParameterError("extraspecial residues must fit one byte")
        self.p = p
        self.l = l
        width = 2 * l + 1
        ident = bytes(width)
        gens = []
        for i in range(l):
            x = bytearray(width)
            x[i] = 1
            gens.append(bytes(x))
        for i in range(l):
            y = bytearray(width)
            y[l + i] = 1
            gens.append(bytes(y))
        super().__init__(p ** width, ident, gens, order_cap)

    def pack(self, xvec: Sequence[int], yvec: Sequence[int], z: int) -> Element:
        if len(xvec) != self.l or len(yvec) != self.l:
            raise InvalidParameterError(f"vectors must have length {self.l}")
        p = self.p
        return Element(bytes([v % p for v in xvec] + [v % p for v in yvec]
                             + [z % p]))

    def unpack(self, e: Element) -> tuple[tuple[int, ...], tuple[int, ...], int]:
        self._check(e.encoding)
        raw = e.encoding
        return tuple(raw[:self.l]), tuple(raw[self.l:2 * self.l]), raw[-1]

    def _mul(self, x: bytes, y: bytes) -> bytes:
        p = self.p
        l = self.l
        dot = 0
        for i in range(l):
            dot += x[i] * y[l + i]
        out = bytearray(2 * l + 1)
        for i in range(2 * l):
            out[i] = (x[i] + y[i]) % p
        out[2 * l] = (x[2 * l] + y[2 * l] + dot) % p
        return bytes(out)

    def _inv(self, x: bytes) -> bytes:
        p = self.p
        l = self.l
        dot = 0
        for i in range(l):
            dot += x[i] * x[l + i]
        out = bytearray(2 * l + 1)
        for i in range(2 * l):
            out[i] = -x[i] % p
        out[2 * l] = (dot - x[2 * l]) % p
        return bytes(out)

    def _check(self, x: bytes) -> None:
        if len(x) != 2 * self.l + 1 or any(v >= self.p for v in x):
            raise ForeignElementError(
                f"{x.hex()!r} is not an (x, y, z) encoding mod {self.p}")

    def _enumerate_raw(self) -> Iterator[bytes]:
        return (bytes(t) for t in
                itertools.product(range(self.p), repeat=2 * self.l + 1))


class WreathCyclicGroup(GroupHandle):
    """Base^p extended by a cyclic shift of the p coordinates.

    Elements are (f, k) with f a p-tuple of base elements and k the
    shift; conjugating a tuple by the shift generator moves the entry at
    position i to position i+1 (mod p).
    """

    backend = "structured-construction"

    def __init__(self, base: GroupHandle, p: int,
                 order_cap: int = DEFAULT_ORDER_CAP):
        _require_odd_prime(p, "wreath-cyclic")
        self.base = base
        self.p = p
        self._w = base.encoding_width
        ident = base._identity_raw * p + b"\x00"
        gens = []
        for g in base._generators_raw:
            gens.append(g + base._identity_raw * (p - 1) + b"\x00")
        gens.append(base._identity_raw * p + b"\x01")
        super().__init__(base.order ** p * p, ident, gens, order_cap)

    def pack(self, parts: Sequence[Element], shift: int) -> Element:
        if len(parts) != self.p:
            raise InvalidParameterError(f"expected {self.p} coordinates")
        for part in parts:
            self.base._check(part.encoding)
        if not 0 <= shift < self.p:
            raise InvalidParameterError(f"shift must be in 0..{self.p - 1}")
        return Element(b"".join(part.encoding for part in parts) + bytes([shift]))

    def unpack(self, x: Element) -> tuple[tuple[Element, ...], int]:
        self._check(x.encoding)
        w = self._w
        parts = tuple(Element(x.encoding[i * w:(i + 1) * w]) for i in range(self.p))
        return parts, x.encoding[-1]

    def _mul(self, x: bytes, y: bytes) -> bytes:
        w = self._w
        p = self.p
        k = x[-1]
        bm = self.base._mul
        parts = []
        for i in range(p):
            j = (i + k) % p
            parts.append(bm(x[i * w:(i + 1) * w], y[j * w:(j + 1) * w]))
        parts.append(bytes([(k + y[-1]) % p]))
        return b"".join(parts)

    def _inv(self, x: bytes) -> bytes:
        w = self._w
        p = self.p
        k = x[-1]
        bi = self.base._inv
        parts = []
        for i in range(p):
            j = (i - k) % p
            parts.append(bi(x[j * w:(j + 1) * w]))
        parts.append(bytes([-k % p]))
        return b"".join(parts)

    def _check(self, x: bytes) -> None:
        w = self._w
        if len(x) != self.p * w + 1 or x[-1] >= self.p:
            raise ForeignElementError(
                f"{x.hex()!r} is not a (tuple, shift) encoding for this wreath "
                "product")
        for i in range(self.p):
            self.base._check(x[i * w:(i + 1) * w])

    def _enumerate_raw(self) -> Iterator[bytes]:
        pool = self.base._raw_elements()
        return (b"".join(combo) + bytes([k])
                for combo in itertools.product(pool, repeat=self.p)
                for k in range(self.p))


class AffineWreathGroup(GroupHandle):
    """Residue tuples indexed by the prime field, extended by its affine maps.

    Elements are (f, u, v): f assigns a residue mod p to each point of
    the field, and x -> u*x + v (u nonzero) permutes the points.  The
    affine maps compose right-to-left and conjugation permutes the
    coordinates of f.
    """

    backend = "structured-construction"

    def __init__(self, p: int, order_cap: int = DEFAULT_ORDER_CAP):
        _require_prime(p, "affine-wreath")
        if p > 255:
            raise InvalidParameterError("affine-wreath residues must fit one byte")
        self.p = p
        self._invmod = [0] * p
        for u in range(1, p):
            self._invmod[u] = pow(u, p - 2, p)
        ident = bytes(p) + bytes([1, 0])
        gens = [bytes([1] + [0] * (p - 1)) + bytes([1, 0]),
                bytes(p) + bytes([1, 1])]
        if p > 2:
            gens.append(bytes(p) + bytes([self._primitive_root(p), 0]))
        super().__init__(p ** p * p * (p - 1), ident, gens, order_cap)

    @staticmethod
    def _primitive_root(p: int) -> int:
        for g in range(2, p):
            seen = set()
            acc = 1
            for _ in range(p - 1):
                acc = acc * g % p
                seen.add(acc)
            if len(seen) == p - 1:
                return g
        raise InvalidParameterError(f"no primitive root mod {p}")

    def pack(self, values: Sequence[int], u: int, v: int) -> Element:
        p = self.p
        if len(values) != p:
            raise InvalidParameterError(f"expected {p} coordinate values")
        if u % p == 0:
            raise InvalidParameterError("the affine scale u must be nonzero")
        return Element(bytes([val % p for val in values]) + bytes([u % p, v % p]))

    def unpack(self, x: Element) -> tuple[tuple[int, ...], int, int]:
        self._check(x.encoding)
        p = self.p
        return tuple(x.encoding[:p]), x.encoding[p], x.encoding[p + 1]

    def _mul(self, x: bytes, y: bytes) -> bytes:
        p = self.p
        u1, v1 = x[p], x[p + 1]
        u2, v2 = y[p], y[p + 1]
        u1i = self._invmod[u1]
        vals = bytes((x[t] + y[u1i * (t - v1) % p]) % p for t in range(p))
        return vals + bytes([u1 * u2 % p, (u1 * v2 + v1) % p])

    def _inv(self, x: bytes) -> bytes:
        p = self.p
        u, v = x[p], x[p + 1]
        ui = self._invmod[u]
        vals = bytes(-x[(u * t + v) % p] % p for t in range(p))
        return vals + bytes([ui, -ui * v % p])

    def _check(self, x: bytes) -> None:
        p = self.p
        ok = (len(x) == p + 2 and all(v < p for v in x[:p])
              and 1 <= x[p] < p and x[p + 1] < p)
        if not ok:
            raise ForeignElementError(
                f"{x.hex()!r} is not an (f, u, v) encoding mod {p}")

    def _enumerate_raw(self) -> Iterator[bytes]:
        p = self.p
        return (bytes(vals) + bytes([u, v])
                for vals in itertools.product(range(p), repeat=p)
                for u in range(1, p)
                for v in range(p))


# ----------------------------------------------------------------------
# table- and permutation-backed constructions

def _quaternion8(order_cap: int) -> CayleyTableGroup:
    # Signed quaternion units, +1 first so index 0 is the identity.
    def qmul(a, b):
        a1, b1, c1, d1 = a
        a2, b2, c2, d2 = b
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    units = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    elems = units + [tuple(-v for v in u) for u in units]
    index = {u: i for i, u in enumerate(elems)}
    table = [[index[qmul(a, b)] for b in elems] for a in elems]
    return CayleyTableGroup(table, generators=[1, 2], order_cap=order_cap)


def _sylow_permutation(p: int, levels: int,
                       order_cap: int) -> PermutationGroup:
    # One shift generator per wreath level: level k advances each point
    # by p^(k-1) within its block of p^k points.
    degree = p ** levels
    if degree > 255:
        raise InvalidParameterError(
            f"iterated-wreath-sylow degree {degree} exceeds the permutation "
            "backend limit of 255 points")
    gens = []
    for k in range(1, levels + 1):
        block = p ** k
        step = p ** (k - 1)
        gens.append([(x + step) % block if x < block else x
                     for x in range(degree)])
    return PermutationGroup(gens, order_cap=order_cap)


# ----------------------------------------------------------------------
# build / distinguished elements / corpus

def build(spec: ConstructionSpec,
          order_cap: int = DEFAULT_ORDER_CAP) -> GroupHandle:
    """Build the group a spec describes.  The result's order always
    equals :func:`predicted_order`."""
    validate_spec(spec)
    kind = spec.kind
    if kind == "cyclic":
        g: GroupHandle = CyclicGroup(spec.n, order_cap)
    elif kind == "elementary-abelian":
        g = DirectProductGroup([CyclicGroup(spec.p, order_cap)
                                for _ in range(spec.n)], order_cap)
    elif kind == "dihedral":
        g = DihedralGroup(spec.n, order_cap)
    elif kind == "quaternion8":
        g = _quaternion8(order_cap)
    elif kind == "extraspecial-exponent-p":
        g = ExtraspecialGroup(spec.p, spec.l, order_cap)
    elif kind == "direct-product":
        g = DirectProductGroup([build(f, order_cap) for f in spec.factors],
                               order_cap)
    elif kind == "wreath-cyclic":
        g = WreathCyclicGroup(build(spec.base, order_cap), spec.p, order_cap)
    elif kind == "affine-wreath":
        g = AffineWreathGroup(spec.p, order_cap)
    else:
        g = _sylow_permutation(spec.p, spec.copies, order_cap)
    want = predicted_order(spec)
    if g.order != want:
        raise InvalidParameterError(
            f"built order {g.order} does not match predicted order {want} "
            f"for {spec}")
    return g


def _base_seed_element(base_spec: ConstructionSpec, base: GroupHandle,
                       order_cap: int) -> bytes:
    """The base element the wreath roles are built from: a generator of a
    cyclic base, the least non-central element of an extraspecial base."""
    if base_spec.kind == "cyclic":
        if base_spec.n < 2:
            raise UnsupportedRoleError("a trivial base has no seed element")
        return base._generators_raw[0]
    if base_spec.kind == "extraspecial-exponent-p":
        central = center(base)._raw
        for raw in base._raw_elements():
            if raw not in central:
                return raw
        raise UnsupportedRoleError("extraspecial base has no non-central element")
    raise UnsupportedRoleError(
        f"no seed element defined for wreath base kind {base_spec.kind!r}")


def distinguished_element(spec: ConstructionSpec, role: str,
                          order_cap: int = DEFAULT_ORDER_CAP) -> Element:
    """The named element a construction's checks revolve around.

    Deterministic: the same spec and role always give the same encoding.
    """
    if role not in ROLES:
        raise UnsupportedRoleError(
            f"unknown role {role!r}; expected one of {', '.join(ROLES)}")
    validate_spec(spec)
    kind = spec.kind
    if kind == "wreath-cyclic" and role in ("a-standard", "b-double"):
        base = build(spec.base, order_cap)
        seed = _base_seed_element(spec.base, base, order_cap)
        count = 1 if role == "a-standard" else 2
        parts = [seed] * count + [base._identity_raw] * (spec.p - count)
        return Element(b"".join(parts) + b"\x00")
    if kind == "affine-wreath" and role in ("a-standard", "b-double"):
        count = 1 if role == "a-standard" else 2
        values = [1] * count + [0] * (spec.p - count)
        return Element(bytes(values) + bytes([1, 0]))
    if kind == "extraspecial-exponent-p" and role == "noncentral-witness":
        g = build(spec, order_cap)
        central = center(g)._raw
        for raw in g._raw_elements():
            if raw not in central:
                return Element(raw)
    raise UnsupportedRoleError(
        f"role {role!r} is not defined for construction kind {kind!r}")


def _S(**kwargs) -> ConstructionSpec:
    return ConstructionSpec(**kwargs)


def corpus(p: int, max_order: int) -> list[ConstructionSpec]:
    """The deterministic battery of p-groups of order <= max_order.

    Odd p: cyclic and elementary-abelian towers, a mixed abelian group,
    extraspecial groups (both widths), extraspecial x cyclic products,
    the cyclic wreaths, and the Sylow p-subgroups of symmetric groups.
    p = 2 swaps the odd-only families for the dihedral and quaternion
    ones (plus their products with the 2-element group).
    """
    _require_prime(p, "corpus")
    if max_order < p ** 3:
        raise InvalidParameterError(
            f"max_order {max_order} is below p^3 = {p ** 3}; the corpus "
            "needs room for at least one nonabelian group")
    specs: list[ConstructionSpec] = []
    k = 1
    while p ** k <= max_order:
        specs.append(_S(kind="cyclic", n=p ** k))
        k += 1
    k = 2
    while p ** k <= max_order:
        specs.append(_S(kind="elementary-abelian", p=p, n=k))
        k += 1
    if p ** 3 <= max_order:
        specs.append(_S(kind="direct-product",
                        factors=(_S(kind="cyclic", n=p * p),
                                 _S(kind="cyclic", n=p))))
    if p == 2:
        n = 8
        while n <= max_order:
            specs.append(_S(kind="dihedral", n=n))
            n *= 2
        if max_order >= 8:
            specs.append(_S(kind="quaternion8"))
        n = 8
        while 2 * n <= max_order:
            specs.append(_S(kind="direct-product",
                            factors=(_S(kind="dihedral", n=n),
                                     _S(kind="cyclic", n=2))))
            n *= 2
        if max_order >= 16:
            specs.append(_S(kind="direct-product",
                            factors=(_S(kind="quaternion8"),
                                     _S(kind="cyclic", n=2))))
    else:
        for l in (1, 2):
            if p ** (2 * l + 1) <= max_order:
                specs.append(_S(kind="extraspecial-exponent-p", p=p, l=l))
        for l in (1, 2):
            m = 1
            while p ** (2 * l + 1) * p ** m <= max_order:
                specs.append(_S(kind="direct-product",
                                factors=(_S(kind="extraspecial-exponent-p",
                                            p=p, l=l),
                                         _S(kind="cyclic", n=p ** m))))
                m += 1
        if p ** (p + 1) <= max_order:
            specs.append(_S(kind="wreath-cyclic", p=p,
                            base=_S(kind="cyclic", n=p)))
        if p ** (3 * p + 1) <= max_order:
            specs.append(_S(kind="wreath-cyclic", p=p,
                            base=_S(kind="extraspecial-exponent-p", p=p, l=1)))
    levels = 2
    while predicted_order(_S(kind="iterated-wreath-sylow", p=p,
                             copies=levels)) <= max_order \
            and p ** levels <= 255:
        specs.append(_S(kind="iterated-wreath-sylow", p=p, copies=levels))
        levels += 1
    return specs
