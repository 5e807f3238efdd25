"""Result record shared by the constructive labellers and the exact solver."""

from __future__ import annotations

from dataclasses import dataclass

from tesgraph.labelling import TotalLabelling

METHOD_TREE = "tree-construction"
METHOD_AUGMENT = "incremental-augmentation"
METHOD_COMPOSITION = "composition"
METHOD_EXACT = "exact-search-fallback"
METHOD_FORMULA = "formula-only"

_METHODS = {METHOD_TREE, METHOD_AUGMENT, METHOD_COMPOSITION, METHOD_EXACT, METHOD_FORMULA}


@dataclass(frozen=True)
class TesResult:
    """Computed strength with provenance and (usually) a verified certificate."""

    value: int
    certificate: TotalLabelling | None
    method: str
    fallback_used: bool

    def __post_init__(self):
        if self.method not in _METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.method == METHOD_FORMULA and self.certificate is not None:
            raise ValueError("formula-only results carry no certificate")
