"""Conjugacy-class products and their decompositions in finite groups.

The package computes a^G * b^G for conjugacy classes of finite groups,
splits the product into classes (the eta invariant), and runs exhaustive
falsification sweeps of the structural claims about those products on a
deterministic corpus of p-groups.
"""

from .classes import (
    ClassDecomposition,
    ClassPartition,
    CommutatorSet,
    ConjugacyClass,
    central_translate_classes,
    check_product_identity,
    class_partition,
    class_product,
    commutator_set,
    conjugacy_class,
    decompose_invariant_set,
    eta,
    eta_one_criterion,
    quadratic_image,
    quadratic_image_size,
)
from .constructions import (
    ConstructionSpec,
    build,
    corpus,
    distinguished_element,
    predicted_order,
)
from .errors import (
    ClassprodError,
    EnumerationCapError,
    EvenPrimeError,
    ForeignElementError,
    FormatError,
    GroupMismatchError,
    InvalidParameterError,
    InvalidPrimeError,
    NotAPGroupError,
    NotCentralError,
    NotNormalError,
    PreconditionViolatedError,
    TheoremViolationError,
    UnknownGeneratorError,
    UnsupportedRoleError,
    WordParseError,
)
from .groups import (
    DEFAULT_ORDER_CAP,
    CayleyTableGroup,
    Element,
    GroupHandle,
    PermutationGroup,
    SubgroupView,
    center,
    centralizer,
    closure,
    quotient_group,
)
from .verify import (
    SpectrumEntry,
    TheoremReport,
    Violation,
    eta_spectrum,
    parse_report_record,
    reproduce_examples,
    verify_size_two,
    verify_theorem_a,
    verify_theorem_b,
)
from .words import parse_element_word

__version__ = "0.1.0"

__all__ = [
    "CayleyTableGroup",
    "ClassDecomposition",
    "ClassPartition",
    "ClassprodError",
    "CommutatorSet",
    "ConjugacyClass",
    "ConstructionSpec",
    "DEFAULT_ORDER_CAP",
    "Element",
    "EnumerationCapError",
    "EvenPrimeError",
    "ForeignElementError",
    "FormatError",
    "GroupHandle",
    "GroupMismatchError",
    "InvalidParameterError",
    "InvalidPrimeError",
    "NotAPGroupError",
    "NotCentralError",
    "NotNormalError",
    "PermutationGroup",
    "PreconditionViolatedError",
    "SpectrumEntry",
    "SubgroupView",
    "TheoremReport",
    "TheoremViolationError",
    "UnknownGeneratorError",
    "UnsupportedRoleError",
    "Violation",
    "WordParseError",
    "build",
    "center",
    "centralizer",
    "central_translate_classes",
    "check_product_identity",
    "class_partition",
    "class_product",
    "closure",
    "commutator_set",
    "conjugacy_class",
    "corpus",
    "decompose_invariant_set",
    "distinguished_element",
    "eta",
    "eta_one_criterion",
    "eta_spectrum",
    "parse_element_word",
    "parse_report_record",
    "predicted_order",
    "quadratic_image",
    "quadratic_image_size",
    "quotient_group",
    "reproduce_examples",
    "verify_size_two",
    "verify_theorem_a",
    "verify_theorem_b",
]
