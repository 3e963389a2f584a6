"""Finite multiplicative hyperrings and the 1-absorbing hyperideal hierarchy."""
from .hypercore import (
    AxiomViolation, CapExceeded, FiniteHyperring, HyperringError, MalformedTable,
    from_json, label, parse_label, validate_hyperring,
)
from .ideals import Hyperideal, enumerate_hyperideals, generate_hyperideal, ideal
from .classify import ClassificationReport
from .construct import z4h, zn_template

__all__ = [
    "AxiomViolation", "CapExceeded", "FiniteHyperring", "HyperringError", "MalformedTable",
    "from_json", "label", "parse_label", "validate_hyperring", "Hyperideal",
    "enumerate_hyperideals", "generate_hyperideal", "ideal", "ClassificationReport", "z4h",
    "zn_template", "load_fixture",
]


def load_fixture(name: str = "z4h") -> FiniteHyperring:
    """Load a ring shipped in the package data directory."""
    import json
    from importlib.resources import files

    doc = json.loads(files(__package__).joinpath("data", f"{name}.json").read_text(encoding="utf-8"))
    return from_json(doc)
