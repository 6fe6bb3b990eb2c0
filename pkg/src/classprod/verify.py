"""Falsification harnesses for the class-product claims.

Each checker sweeps every qualifying class pair of a group and records a
violation for any pair that escapes the claimed constraint, so a clean
report is an exhaustive certificate for that group and a dirty one
carries reproducible counterexamples.  Nothing here "corrects" an
observation to match a claim: the claims are treated as falsifiable.

Labels used in reports:

- ``A``: size-p class pairs in an odd-p p-group give eta = 1 or
  eta >= (p+1)/2.
- ``B``: size-p class squares give eta = 1 with [a,G] = [a^2,G] a normal
  subgroup, or eta = (p+1)/2 with every class of size exactly p.
- ``Prop2.1``: size-2 class pairs in any finite group give eta in {1,2}.
- ``Prop4.1``: the standard element of a wreath-by-cyclic group has
  |a^G| = p^n and eta(a^G a^G) = (p+1)/2.
- ``Remark4.2``: the claim eta(a^G b^G) = p-1 for the standard and
  doubled elements of the cyclic wreath group.
- ``Prop4.3``: the standard element of the affine wreath group has
  |a^G| = p and its class square splits as (a^2)^G plus the two-spike
  class, eta = 2.
- ``spectrum``: not a claim check; tallies observed eta values.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .classes import (
    ConjugacyClass,
    as_subgroup,
    class_partition,
    class_product,
    commutator_set,
    conjugacy_class,
)
from .constructions import (
    ConstructionSpec,
    build,
    corpus,
    distinguished_element,
    predicted_order,
)
from .errors import (
    EnumerationCapError,
    EvenPrimeError,
    FormatError,
    InvalidParameterError,
    InvalidPrimeError,
    NotAPGroupError,
    TheoremViolationError,
)
from .groups import DEFAULT_ORDER_CAP, Element, GroupHandle
from .util import is_prime

THEOREM_LABELS = ("A", "B", "Prop2.1", "Prop4.1", "Prop4.3", "Remark4.2")
SPECTRUM_LABEL = "spectrum"


@dataclass(frozen=True)
class Violation:
    """One class pair that escaped the checked constraint."""

    a: str  # hex encoding of the first representative
    b: str
    eta: int
    expected: str

    def to_record(self) -> dict:
        return {"a": self.a, "b": self.b, "eta": self.eta,
                "expected": self.expected}


@dataclass(frozen=True)
class SpectrumEntry:
    """Occurrence count for one eta value, with its first witness."""

    count: int
    witness_group: dict
    witness_a: str
    witness_b: str

    def to_record(self) -> dict:
        return {"count": self.count,
                "witness": {"group": self.witness_group,
                            "a": self.witness_a, "b": self.witness_b}}


@dataclass
class TheoremReport:
    """Outcome of one checker run over one group (or merged corpus)."""

    theorem: str
    group: dict
    p: int | None
    pairs_checked: int
    violations: list[Violation] = field(default_factory=list)
    spectrum: dict[int, SpectrumEntry] = field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def consistent(self) -> bool:
        return not self.violations

    def to_record(self, include_timing: bool = False) -> dict:
        return {
            "theorem": self.theorem,
            "group": self.group,
            "p": self.p,
            "pairs_checked": self.pairs_checked,
            "violations": [v.to_record() for v in self.violations],
            "spectrum": {str(k): self.spectrum[k].to_record()
                         for k in sorted(self.spectrum)},
            "elapsed_ms": self.elapsed_ms if include_timing else 0,
        }


def parse_report_record(obj: dict) -> TheoremReport:
    """Parse one emitted report record back into a TheoremReport.

    Shipped so every record the tool writes can be round-tripped; raises
    a file-format error on any shape mismatch.
    """
    if not isinstance(obj, dict):
        raise FormatError(f"report record must be an object, got "
                          f"{type(obj).__name__}")
    required = {"theorem", "group", "p", "pairs_checked", "violations",
                "spectrum", "elapsed_ms"}
    missing = sorted(required - set(obj))
    if missing:
        raise FormatError(f"report record is missing fields: "
                          f"{', '.join(missing)}")
    extra = sorted(set(obj) - required)
    if extra:
        raise FormatError(f"report record has unknown fields: "
                          f"{', '.join(extra)}")
    if obj["theorem"] not in THEOREM_LABELS + (SPECTRUM_LABEL,):
        raise FormatError(f"unknown theorem label {obj['theorem']!r}")
    violations = []
    for v in obj["violations"]:
        if set(v) != {"a", "b", "eta", "expected"}:
            raise FormatError(f"malformed violation record: {v!r}")
        violations.append(Violation(v["a"], v["b"], int(v["eta"]),
                                    v["expected"]))
    spectrum = {}
    for key, entry in obj["spectrum"].items():
        if set(entry) != {"count", "witness"} \
                or set(entry["witness"]) != {"group", "a", "b"}:
            raise FormatError(f"malformed spectrum entry for eta={key!r}")
        spectrum[int(key)] = SpectrumEntry(
            int(entry["count"]), entry["witness"]["group"],
            entry["witness"]["a"], entry["witness"]["b"])
    return TheoremReport(obj["theorem"], obj["group"], obj["p"],
                         int(obj["pairs_checked"]), violations, spectrum,
                         int(obj["elapsed_ms"]))


def _ms(t0: float) -> int:
    return max(0, round((time.perf_counter() - t0) * 1000))


def _require_odd_prime(p, where: str) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidPrimeError(f"{where} needs a prime p, got {p!r}")
    if p == 2:
        raise EvenPrimeError(f"{where} needs an odd prime p, got 2")


def _require_p_group(g: GroupHandle, p: int) -> None:
    order = g.order
    while order % p == 0:
        order //= p
    if order != 1:
        raise NotAPGroupError(
            f"group order {g.order} is not a power of {p}")


def _descriptor(g: GroupHandle, given: dict | None) -> dict:
    if given is not None:
        return given
    return {"kind": "opaque", "backend": g.backend, "order": g.order}


def verify_theorem_a(g: GroupHandle, p: int,
                     group_desc: dict | None = None) -> TheoremReport:
    """Sweep all ordered pairs of size-p classes for the eta gap.

    Records a violation whenever 1 < eta < (p+1)/2.
    """
    t0 = time.perf_counter()
    _require_odd_prime(p, "the size-p pair check")
    _require_p_group(g, p)
    bound = (p + 1) // 2
    sized = class_partition(g).classes_of_size(p)
    violations = []
    for x in sized:
        for y in sized:
            d = class_product(x, y)
            if d.eta != 1 and d.eta < bound:
                violations.append(Violation(
                    x.representative.hex(), y.representative.hex(), d.eta,
                    f"eta=1 or eta>={bound}"))
    return TheoremReport("A", _descriptor(g, group_desc), p,
                         len(sized) ** 2, violations, {}, _ms(t0))


def verify_theorem_b(g: GroupHandle, p: int,
                     group_desc: dict | None = None) -> TheoremReport:
    """Check the dichotomy for every size-p class square.

    Clause i: eta = 1, and then [a,G] = [a^2,G] must hold with that set
    a normal subgroup.  Clause ii: eta = (p+1)/2 with every class in the
    decomposition of size exactly p.  Anything else is a violation.
    """
    t0 = time.perf_counter()
    _require_odd_prime(p, "the class-square check")
    _require_p_group(g, p)
    bound = (p + 1) // 2
    sized = class_partition(g).classes_of_size(p)
    violations = []
    for x in sized:
        d = class_product(x, x)
        a = x.representative
        ahex = a.hex()
        if d.eta == 1:
            ka = commutator_set(g, a).elements
            ka2 = commutator_set(g, g.power(a, 2)).elements
            view = as_subgroup(g, ka) if ka == ka2 else None
            if view is None or not view.is_normal:
                violations.append(Violation(
                    ahex, ahex, d.eta,
                    "eta=1 forces [a,G]=[a^2,G], a normal subgroup"))
        elif not (d.eta == bound and all(c.size == p for c in d.classes)):
            violations.append(Violation(
                ahex, ahex, d.eta,
                f"eta=1, or eta={bound} with all classes of size {p}"))
    return TheoremReport("B", _descriptor(g, group_desc), p,
                         len(sized), violations, {}, _ms(t0))


def verify_size_two(g: GroupHandle, p: int | None = None,
                    group_desc: dict | None = None) -> TheoremReport:
    """Sweep all ordered pairs of size-2 classes: eta must be 1 or 2."""
    t0 = time.perf_counter()
    sized = class_partition(g).classes_of_size(2)
    violations = []
    for x in sized:
        for y in sized:
            d = class_product(x, y)
            if d.eta not in (1, 2):
                violations.append(Violation(
                    x.representative.hex(), y.representative.hex(), d.eta,
                    "eta in {1, 2}"))
    return TheoremReport("Prop2.1", _descriptor(g, group_desc), p,
                         len(sized) ** 2, violations, {}, _ms(t0))


# ----------------------------------------------------------------------
# reproductions of the worked examples

REPRODUCTION_CHECKS = ("wreath-square", "wreath-square-extraspecial-base",
                       "shifted-pair", "affine-square")


def reproduction_plan(p: int) -> list[tuple[str, str, ConstructionSpec]]:
    """(check name, report label, spec) for each worked-example check."""
    wreath_cyclic = ConstructionSpec(
        kind="wreath-cyclic", p=p, base=ConstructionSpec(kind="cyclic", n=p))
    wreath_es = ConstructionSpec(
        kind="wreath-cyclic", p=p,
        base=ConstructionSpec(kind="extraspecial-exponent-p", p=p, l=1))
    affine = ConstructionSpec(kind="affine-wreath", p=p)
    return [
        ("wreath-square", "Prop4.1", wreath_cyclic),
        ("wreath-square-extraspecial-base", "Prop4.1", wreath_es),
        ("shifted-pair", "Remark4.2", wreath_cyclic),
        ("affine-square", "Prop4.3", affine),
    ]


def run_reproduction_check(check: str, p: int,
                           order_cap: int = DEFAULT_ORDER_CAP) -> TheoremReport:
    """Run one named reproduction and report what was observed."""
    _require_odd_prime(p, "the example reproductions")
    plan = {name: (label, spec) for name, label, spec in reproduction_plan(p)}
    if check not in plan:
        raise InvalidParameterError(
            f"unknown reproduction check {check!r}; expected one of "
            f"{', '.join(REPRODUCTION_CHECKS)}")
    label, spec = plan[check]
    if predicted_order(spec) > order_cap:
        raise EnumerationCapError(
            f"reproduction {check!r} at p={p} needs a group of order "
            f"{predicted_order(spec)}, above the cap {order_cap}")
    t0 = time.perf_counter()
    g = build(spec, order_cap)
    a = distinguished_element(spec, "a-standard", order_cap)
    xa = conjugacy_class(g, a)
    violations: list[Violation] = []

    def expect(cond: bool, b_elem: Element, observed_eta: int,
               constraint: str) -> None:
        if not cond:
            violations.append(Violation(a.hex(), b_elem.hex(), observed_eta,
                                        constraint))

    if check in ("wreath-square", "wreath-square-extraspecial-base"):
        n = 1 if check == "wreath-square" else 2
        d = class_product(xa, xa)
        expect(xa.size == p ** n, a, d.eta, f"|a^G|={p ** n}")
        expect(d.eta == (p + 1) // 2, a, d.eta, f"eta={(p + 1) // 2}")
    elif check == "shifted-pair":
        b = distinguished_element(spec, "b-double", order_cap)
        d = class_product(xa, conjugacy_class(g, b))
        if d.eta != p - 1:
            violations.append(Violation(a.hex(), b.hex(), d.eta,
                                        f"eta={p - 1}"))
    else:  # affine-square
        d = class_product(xa, xa)
        expect(xa.size == p, a, d.eta, f"|a^G|={p}")
        expect(d.eta == 2, a, d.eta, "eta=2")
        square_class = conjugacy_class(g, g.power(a, 2))
        spike_class = conjugacy_class(
            g, distinguished_element(spec, "b-double", order_cap))
        expect(set(d.classes) == {square_class, spike_class}, a, d.eta,
               "product = (a^2)^G union (c,c,e,...,e)^G")
    return TheoremReport(label, spec.to_plain(), p, 1, violations, {},
                         _ms(t0))


def reproduce_examples(p: int,
                       order_cap: int = DEFAULT_ORDER_CAP) -> list[TheoremReport]:
    """Run every worked-example reproduction that fits under the cap.

    Checks whose group would exceed the enumeration cap are skipped
    silently as long as at least one check fits; if none fits the whole
    call fails with the cap error.
    """
    _require_odd_prime(p, "the example reproductions")
    plan = reproduction_plan(p)
    runnable = [name for name, _, spec in plan
                if predicted_order(spec) <= order_cap]
    if not runnable:
        smallest = min(predicted_order(spec) for _, _, spec in plan)
        raise EnumerationCapError(
            f"every reproduction at p={p} needs a group of order at least "
            f"{smallest}, above the cap {order_cap}")
    return [run_reproduction_check(name, p, order_cap) for name in runnable]


# ----------------------------------------------------------------------
# corpus sweeps and the eta spectrum

def corpus_theorem_report(theorem: str, spec: ConstructionSpec, p: int,
                          order_cap: int = DEFAULT_ORDER_CAP) -> TheoremReport:
    """Run one theorem checker over one corpus group."""
    g = build(spec, order_cap)
    desc = spec.to_plain()
    if theorem == "a":
        return verify_theorem_a(g, p, desc)
    if theorem == "b":
        return verify_theorem_b(g, p, desc)
    if theorem == "size2":
        return verify_size_two(g, p, desc)
    raise InvalidParameterError(
        f"unknown theorem selector {theorem!r}; expected a, b or size2")


def spectrum_for_group(g: GroupHandle, p: int,
                       group_desc: dict | None = None) -> TheoremReport:
    """Tally eta over all ordered pairs of size-p classes of one group.

    The group is a p-group, hence nilpotent, so any eta strictly between
    1 and (p+1)/2 is recorded as a violation (it would falsify the gap).
    """
    t0 = time.perf_counter()
    _require_odd_prime(p, "the spectrum sweep")
    _require_p_group(g, p)
    desc = _descriptor(g, group_desc)
    bound = (p + 1) // 2
    sized = class_partition(g).classes_of_size(p)
    counts: dict[int, int] = {}
    witnesses: dict[int, tuple[str, str]] = {}
    violations = []
    for x in sized:
        for y in sized:
            d = class_product(x, y)
            counts[d.eta] = counts.get(d.eta, 0) + 1
            if d.eta not in witnesses:
                witnesses[d.eta] = (x.representative.hex(),
                                    y.representative.hex())
            if 1 < d.eta < bound:
                violations.append(Violation(
                    x.representative.hex(), y.representative.hex(), d.eta,
                    f"eta=1 or eta>={bound}"))
    spectrum = {value: SpectrumEntry(counts[value], desc, *witnesses[value])
                for value in counts}
    return TheoremReport(SPECTRUM_LABEL, desc, p, len(sized) ** 2,
                         violations, spectrum, _ms(t0))


def spectrum_corpus_report(spec: ConstructionSpec, p: int,
                           order_cap: int = DEFAULT_ORDER_CAP) -> TheoremReport:
    """Build one corpus group and tally its spectrum."""
    return spectrum_for_group(build(spec, order_cap), p, spec.to_plain())


def merge_spectrum_reports(p: int, max_order: int,
                           reports: list[TheoremReport]) -> TheoremReport:
    """Combine per-group spectrum tallies into one corpus-level record.

    Counts add; the witness for each eta value comes from the first
    report that attained it, so merging is associative and independent
    of how the per-group work was scheduled.
    """
    merged: dict[int, SpectrumEntry] = {}
    scanned = 0
    elapsed = 0
    for report in reports:
        scanned += report.pairs_checked
        elapsed += report.elapsed_ms
        for value in sorted(report.spectrum):
            entry = report.spectrum[value]
            if value in merged:
                old = merged[value]
                merged[value] = SpectrumEntry(
                    old.count + entry.count, old.witness_group,
                    old.witness_a, old.witness_b)
            else:
                merged[value] = entry
    return TheoremReport(
        SPECTRUM_LABEL, {"kind": "corpus", "p": p, "max_order": max_order},
        p, scanned, [], merged, elapsed)


def eta_spectrum(p: int, max_order: int,
                 order_cap: int = DEFAULT_ORDER_CAP) -> list[TheoremReport]:
    """Per-group spectrum reports over the corpus, plus the merged tally.

    If a group contradicts the gap (eta strictly between 1 and (p+1)/2),
    scanning stops at that group and the run aborts with the
    counterexample records attached to the raised error.
    """
    _require_odd_prime(p, "the spectrum sweep")
    reports = []
    for spec in corpus(p, max_order):
        report = spectrum_corpus_report(spec, p, order_cap)
        reports.append(report)
        if report.violations:
            raise TheoremViolationError(
                f"gap violation: group {spec} attains eta="
                f"{report.violations[0].eta} with 1 < eta < {(p + 1) // 2}",
                records=[r.to_record() for r in reports])
    reports.append(merge_spectrum_reports(p, max_order, reports))
    return reports


def verify_corpus(theorem: str, p: int, max_order: int,
                  order_cap: int = DEFAULT_ORDER_CAP) -> list[TheoremReport]:
    """Run one theorem checker over every corpus group, in corpus order."""
    return [corpus_theorem_report(theorem, spec, p, order_cap)
            for spec in corpus(p, max_order)]
