"""
Statement registry

Statements are registered by id with an 'module:Class' entry point,
and only imported when first made.
"""

from __future__ import annotations

import dataclasses
import importlib
from typing import TYPE_CHECKING, Dict, List

from s_comult.algebra.errors import UnknownStatement

if TYPE_CHECKING:
    # Only import for typechecking to prevent circular dependency
    from s_comult.verifier.statements.base import BaseStatement


@dataclasses.dataclass(frozen=True, slots=True)
class StatementSpec:
    id: str
    entry_point: str  # 'package.module:ClassName'
    anchor: str = ""  # The quoted phrase the statement checks


_registry: Dict[str, StatementSpec] = {}


def register(id: str, entry_point: str, anchor: str = "") -> None:
    """
    Registers a statement class under an id.

    :param id: Statement id, such as 'L-EQ'
    :type id: str
    :param entry_point: Where the class lives, as 'module:Class'
    :type entry_point: str
    :param anchor: Short description shown in reports
    :type anchor: str
    """

    if id in _registry:
        raise ValueError(f"statement {id} registered twice")
    _registry[id] = StatementSpec(id, entry_point, anchor)


def registered() -> List[str]:
    """
    Every registered id, sorted.
    """

    return sorted(_registry)


def spec(id: str) -> StatementSpec:
    try:
        return _registry[id]
    except KeyError:
        raise UnknownStatement(id) from None


def make(id: str) -> BaseStatement:
    """
    Imports and instantiates the statement registered under id.

    :raise UnknownStatement: If id was never registered
    """

    found = spec(id)
    module_name, class_name = found.entry_point.split(":")
    cls = getattr(importlib.import_module(module_name), class_name)
    return cls(found.id, found.anchor)
