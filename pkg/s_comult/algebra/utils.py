"""
Various utility components that do not fit elsewhere
"""

from __future__ import annotations

import itertools
from typing import Callable, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import numpy as np
import numpy.typing as npt


def radix_weights(moduli: Sequence[int]) -> npt.NDArray[np.int64]:
    """
    Determines the mixed radix weights of a product of cyclic groups.

    With these weights, the index of a residue tuple is its position
    in lexicographic order, so index order IS canonical element order.

    :param moduli: Moduli of the cyclic factors, most significant first
    :type moduli: Sequence[int]
    :return: Weight per component
    :rtype: npt.NDArray[np.int64]
    """

    weights = [1] * len(moduli)
    for pos in range(len(moduli) - 2, -1, -1):
        weights[pos] = weights[pos + 1] * moduli[pos + 1]
    return np.array(weights, dtype=np.int64)


def residue_grid(moduli: Sequence[int]) -> npt.NDArray[np.int64]:
    """
    Lists every residue tuple of Z_{d1} x ... x Z_{dk} in lexicographic order.

    :param moduli: Moduli of the cyclic factors
    :type moduli: Sequence[int]
    :return: Array of shape (order, k)
    :rtype: npt.NDArray[np.int64]
    """

    if not moduli:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices(tuple(moduli), dtype=np.int64)
    return grid.reshape(len(moduli), -1).T.copy()


def encode(residues: npt.NDArray[np.int64], moduli: npt.NDArray[np.int64],
           weights: npt.NDArray[np.int64]) -> npt.NDArray[np.int64]:
    """
    Reduces residues componentwise and maps them to element indices.

    :param residues: Array whose last axis holds residue components
    :type residues: npt.NDArray[np.int64]
    :param moduli: Moduli of the components
    :type moduli: npt.NDArray[np.int64]
    :param weights: Radix weights from radix_weights()
    :type weights: npt.NDArray[np.int64]
    :return: Indices, with the last axis dropped
    :rtype: npt.NDArray[np.int64]
    """

    return (np.mod(residues, moduli) * weights).sum(axis=-1)


def divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def format_label(label: object) -> str:
    """
    Formats an element label the way instance files spell it.

    Single residues print as integers, tuples as '(a,b)'.
    """

    if isinstance(label, tuple):
        if len(label) == 1:
            return str(label[0])
        return "(" + ",".join(format_label(part) for part in label) + ")"
    return str(label)


def canonical_key(elements: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    """
    Sorting key for subsets: cardinality first, then the sorted element list.
    """

    ordered = tuple(sorted(elements))
    return (len(ordered), ordered)


def closure_lattice(order: int,
                    cyclic: Callable[[int], FrozenSet[int]],
                    join: Callable[[FrozenSet[int], FrozenSet[int]], FrozenSet[int]]
                    ) -> List[FrozenSet[int]]:
    """
    Enumerates every substructure generated by joins of cyclic ones.

    We start from the substructure generated by 0,
    extend each known substructure by one outside element,
    close it (join with the cyclic substructure of that element),
    and keep going until nothing new appears.
    Every finitely generated substructure is reached this way,
    and over a finite carrier that is every substructure.

    :param order: Size of the carrier
    :type order: int
    :param cyclic: Maps an element to the substructure it generates
    :type cyclic: Callable[[int], FrozenSet[int]]
    :param join: Least substructure containing two substructures
    :type join: Callable[[FrozenSet[int], FrozenSet[int]], FrozenSet[int]]
    :return: All substructures, sorted by canonical_key
    :rtype: List[FrozenSet[int]]
    """

    cyclics = [cyclic(x) for x in range(order)]
    bottom = min(cyclics, key=len)  # generated by zero
    seen = {bottom}
    frontier = [bottom]

    while frontier:
        grown: List[FrozenSet[int]] = []
        for sub in frontier:
            for x in range(order):
                if x in sub:
                    continue
                bigger = join(sub, cyclics[x])
                if bigger not in seen:
                    seen.add(bigger)
                    grown.append(bigger)
        frontier = grown

    return sorted(seen, key=canonical_key)


def subsets(universe: Sequence[int]) -> Iterator[FrozenSet[int]]:
    """
    Iterates over every subset of a (small) universe.

    Only used by brute force oracles, so no caps are applied here.
    """

    for size in range(len(universe) + 1):
        for combo in itertools.combinations(universe, size):
            yield frozenset(combo)
