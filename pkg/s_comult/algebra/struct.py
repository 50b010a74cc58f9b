"""
Various structures to be utilized
"""

from __future__ import annotations

import dataclasses
import enum
import time
from typing import Any, Dict, Tuple


class Stopwatch:
    """
    Timing class used by the verifier to stamp reports.
    """

    def __init__(self) -> None:
        self.started: float = time.perf_counter()

    def reset(self) -> None:
        self.started = time.perf_counter()

    def elapsed_ms(self) -> int:
        return int((time.perf_counter() - self.started) * 1000)


@dataclasses.dataclass(slots=True)
class Caps:
    """
    Caps - Size limits for enumeration based operations

    Every operation that enumerates ideals, submodules,
    equivalence classes or homomorphisms checks the relevant cap
    before starting, and raises SizeCap when it is exceeded.

    The transitivity scan of the localization relation is quadratic in
    the number of pairs (r, s), so it has a cap of its own;
    above it the scan is skipped (and logged), not failed.
    """

    ring_order: int = 64  # Largest ring admitted to enumeration
    module_order: int = 64  # Largest module carrier admitted to enumeration
    localization_pairs: int = 4096  # Largest |R| * |S| (or |M| * |S|) for localization
    transitivity_scan_pairs: int = 512  # Pair count up to which transitivity is scanned
    hom_source_order: int = 16  # Largest source carrier for full hom enumeration


DEFAULT_CAPS = Caps()

CACHE_SIZE = 4096  # Entries kept by each memoised lattice or table builder


class WitnessKind(enum.Enum):
    """
    Shape of the data certifying an existential S-condition.
    """

    SINGLE_S = "single-s"
    S_AND_IDEAL = "s-and-ideal"
    S_AND_ELEMENT = "s-and-element"
    NONE = "none"


@dataclasses.dataclass(frozen=True, slots=True)
class Witness:
    """
    Witness - the 'there exists s in S' of a definition, made concrete.

    Elements are stored as indices into the canonical element order
    of the ring (for s) and module (for element).
    """

    kind: WitnessKind
    s: int | None = None  # Ring index of the chosen s
    ideal: Any = None  # Ideal, when the condition quantifies one
    element: int | None = None  # Module index, when the condition quantifies one
    extra: Tuple[Any, ...] = ()  # Anything else the certificate needs

    def describe(self, ring: Any, module: Any = None) -> Dict[str, Any]:
        """
        Human readable form of the witness.

        :param ring: Ring the s lives in
        :type ring: Ring
        :param module: Module the element lives in, if any
        :type module: Module
        :return: Dictionary of printable values
        :rtype: Dict[str, Any]
        """

        out: Dict[str, Any] = {"kind": self.kind.value}
        if self.s is not None:
            out["s"] = ring.format(self.s)
        if self.ideal is not None:
            out["ideal"] = self.ideal.format()
        if self.element is not None and module is not None:
            out["element"] = module.format(self.element)
        return out
