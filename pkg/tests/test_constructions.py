"""Construction specs, builders, distinguished elements, and the corpus."""

import json

import pytest

from classprod import (
    ConstructionSpec,
    EvenPrimeError,
    InvalidParameterError,
    UnsupportedRoleError,
    build,
    conjugacy_class,
    corpus,
    distinguished_element,
    predicted_order,
)
from classprod.classes import class_partition
from classprod.constructions import KINDS, ROLES, validate_spec
from classprod.groups import assert_group_laws, center

from conftest import brute_center


# ---------------------------------------------------------------------------
# spec round trips and validation


def test_spec_json_round_trip():
    spec = ConstructionSpec(
        kind="wreath-cyclic", p=5,
        base=ConstructionSpec(kind="extraspecial-exponent-p", p=5, l=1))
    again = ConstructionSpec.from_json(spec.to_json())
    assert again == spec


def test_spec_plain_round_trip_all_corpus_members():
    for spec in corpus(3, 729) + corpus(2, 64):
        assert ConstructionSpec.from_plain(spec.to_plain()) == spec


def test_spec_rejects_unknown_fields():
    with pytest.raises(InvalidParameterError):
        ConstructionSpec.from_plain({"kind": "cyclic", "n": 3, "frobs": 1})


def test_spec_rejects_unknown_kind():
    with pytest.raises(InvalidParameterError):
        validate_spec(ConstructionSpec(kind="octonion"))


@pytest.mark.parametrize("bad", [
    ConstructionSpec(kind="cyclic"),                       # missing n
    ConstructionSpec(kind="cyclic", n=0),
    ConstructionSpec(kind="dihedral", n=7),                # odd order
    ConstructionSpec(kind="dihedral", n=2),                # too small
    ConstructionSpec(kind="extraspecial-exponent-p", p=4, l=1),
    ConstructionSpec(kind="extraspecial-exponent-p", p=3, l=0),
    ConstructionSpec(kind="wreath-cyclic", p=3),           # missing base
    ConstructionSpec(kind="affine-wreath", p=6),
    ConstructionSpec(kind="iterated-wreath-sylow", p=3, copies=0),
    ConstructionSpec(kind="direct-product"),               # missing factors
])
def test_spec_validation_rejects(bad):
    with pytest.raises(InvalidParameterError):
        validate_spec(bad)


def test_even_prime_has_specific_error():
    with pytest.raises(EvenPrimeError):
        validate_spec(ConstructionSpec(kind="extraspecial-exponent-p", p=2, l=1))


# ---------------------------------------------------------------------------
# builders


@pytest.mark.parametrize("spec,order", [
    (ConstructionSpec(kind="cyclic", n=7), 7),
    (ConstructionSpec(kind="elementary-abelian", p=3, n=3), 27),
    (ConstructionSpec(kind="dihedral", n=16), 16),
    (ConstructionSpec(kind="quaternion8"), 8),
    (ConstructionSpec(kind="extraspecial-exponent-p", p=3, l=2), 243),
    (ConstructionSpec(kind="direct-product", factors=(
        ConstructionSpec(kind="cyclic", n=4),
        ConstructionSpec(kind="cyclic", n=6))), 24),
    (ConstructionSpec(kind="wreath-cyclic", p=3,
                      base=ConstructionSpec(kind="cyclic", n=3)), 81),
    (ConstructionSpec(kind="affine-wreath", p=3), 162),
    (ConstructionSpec(kind="affine-wreath", p=5), 62500),
    (ConstructionSpec(kind="iterated-wreath-sylow", p=2, copies=3), 128),
    (ConstructionSpec(kind="iterated-wreath-sylow", p=3, copies=2), 81),
])
def test_predicted_order_matches_built(spec, order):
    assert predicted_order(spec) == order
    assert build(spec).order == order


@pytest.mark.parametrize("spec", [
    ConstructionSpec(kind="elementary-abelian", p=2, n=3),
    ConstructionSpec(kind="dihedral", n=12),
    ConstructionSpec(kind="quaternion8"),
    ConstructionSpec(kind="direct-product", factors=(
        ConstructionSpec(kind="extraspecial-exponent-p", p=3, l=1),
        ConstructionSpec(kind="cyclic", n=9))),
    ConstructionSpec(kind="affine-wreath", p=3),
    ConstructionSpec(kind="iterated-wreath-sylow", p=2, copies=2),
])
def test_built_groups_satisfy_laws(spec):
    assert_group_laws(build(spec))


def test_quaternion8_distinct_from_dihedral8(quaternion8, dihedral8):
    # same class sizes, different number of involutions
    def involutions(g):
        return sum(1 for x in g.elements()
                   if x != g.identity and g.multiply(x, x) == g.identity)
    assert involutions(quaternion8) == 1
    assert involutions(dihedral8) == 5


def test_heisenberg_center_and_classes(heisenberg27):
    assert len(center(heisenberg27)) == 3
    assert center(heisenberg27).elements == brute_center(heisenberg27)
    assert class_partition(heisenberg27).size_histogram() == {1: 3, 3: 8}


def test_heisenberg_has_exponent_p(heisenberg27):
    for x in heisenberg27.elements():
        assert heisenberg27.power(x, 3) == heisenberg27.identity


def test_larger_extraspecial_class_histogram():
    g = build(ConstructionSpec(kind="extraspecial-exponent-p", p=3, l=2))
    assert class_partition(g).size_histogram() == {1: 3, 3: 80}


def test_wreath_conjugation_by_shift_rotates_coordinates(wreath81):
    # conjugating a tuple concentrated in coordinate 0 by the shift
    # generator moves the entry to coordinate 1
    base_gen, shift = wreath81.generators
    a = base_gen                      # (1,0,0) with trivial shift
    moved = wreath81.conjugate(a, shift)
    assert moved.encoding == bytes([0, 1, 0, 0])
    again = wreath81.conjugate(moved, shift)
    assert again.encoding == bytes([0, 0, 1, 0])


def test_wreath_shift_has_order_p(wreath81):
    shift = wreath81.generators[1]
    assert wreath81.power(shift, 3) == wreath81.identity
    assert wreath81.power(shift, 1) != wreath81.identity


def test_affine_scaling_part_has_order_p_minus_1(affine162):
    scaling = affine162.generators[2]
    k = 1
    y = scaling
    while y != affine162.identity:
        y = affine162.multiply(y, scaling)
        k += 1
    assert k == 2  # p - 1 with p = 3


def test_affine_class_of_delta_has_size_p(affine162):
    a = distinguished_element(ConstructionSpec(kind="affine-wreath", p=3),
                              "a-standard")
    assert conjugacy_class(affine162, a).size == 3


def test_sylow_tower_matches_wreath_class_structure(wreath81):
    sylow = build(ConstructionSpec(kind="iterated-wreath-sylow", p=3, copies=2))
    assert sylow.order == wreath81.order == 81
    assert (class_partition(sylow).size_histogram()
            == class_partition(wreath81).size_histogram())


def test_sylow_tower_order_2():
    g = build(ConstructionSpec(kind="iterated-wreath-sylow", p=2, copies=2))
    d8 = build(ConstructionSpec(kind="dihedral", n=8))
    assert g.order == 8
    assert (class_partition(g).size_histogram()
            == class_partition(d8).size_histogram())


# ---------------------------------------------------------------------------
# distinguished elements


def test_roles_enumerated():
    assert set(ROLES) == {"a-standard", "b-double", "noncentral-witness"}
    assert len(KINDS) == 9


def test_wreath_standard_element_has_class_size_p(wreath81):
    spec = ConstructionSpec(kind="wreath-cyclic", p=3,
                            base=ConstructionSpec(kind="cyclic", n=3))
    a = distinguished_element(spec, "a-standard")
    assert conjugacy_class(wreath81, a).size == 3


def test_wreath_double_element_structure(wreath81):
    spec = ConstructionSpec(kind="wreath-cyclic", p=3,
                            base=ConstructionSpec(kind="cyclic", n=3))
    b = distinguished_element(spec, "b-double")
    assert b.encoding == bytes([1, 1, 0, 0])


def test_extraspecial_witness_not_central(heisenberg27):
    spec = ConstructionSpec(kind="extraspecial-exponent-p", p=3, l=1)
    w = distinguished_element(spec, "noncentral-witness")
    assert w not in center(heisenberg27)


def test_unsupported_role_rejected():
    spec = ConstructionSpec(kind="cyclic", n=5)
    with pytest.raises(UnsupportedRoleError):
        distinguished_element(spec, "b-double")
    with pytest.raises(UnsupportedRoleError):
        distinguished_element(spec, "no-such-role")


# ---------------------------------------------------------------------------
# corpus


def test_corpus_is_deterministic():
    assert corpus(3, 729) == corpus(3, 729)
    assert [json.loads(s.to_json()) for s in corpus(5, 625)] \
        == [json.loads(s.to_json()) for s in corpus(5, 625)]


def test_corpus_orders_within_bound():
    for p, max_order in ((2, 64), (3, 729), (5, 625)):
        for spec in corpus(p, max_order):
            assert predicted_order(spec) <= max_order


def test_corpus_minimum_coverage_odd():
    kinds = {s.kind for s in corpus(3, 729)}
    assert {"elementary-abelian", "extraspecial-exponent-p",
            "direct-product", "wreath-cyclic"} <= kinds


def test_corpus_minimum_coverage_two():
    kinds = {s.kind for s in corpus(2, 64)}
    assert {"dihedral", "quaternion8", "direct-product"} <= kinds
    orders = sorted({predicted_order(s) for s in corpus(2, 64)
                     if s.kind == "dihedral"})
    assert orders == [8, 16, 32, 64]


def test_corpus_requires_room_for_p_cubed():
    with pytest.raises(InvalidParameterError):
        corpus(3, 9)


def test_corpus_all_groups_are_p_groups():
    for p, max_order in ((3, 243), (5, 625)):
        for spec in corpus(p, max_order):
            n = predicted_order(spec)
            while n % p == 0:
                n //= p
            assert n == 1, f"{spec} is not a {p}-group"
