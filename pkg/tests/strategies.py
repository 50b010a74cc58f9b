"""
Helpers and hypothesis strategies shared by the tests.
"""

from hypothesis import strategies as st

from s_comult.algebra.ring import TablePresentation, multiplicative_closure, validate_mcs, zn


def mcs(ring, *labels):
    """
    Validated m.c.s. of ring from its labels.
    """

    return validate_mcs(ring, [ring.index_of(label) for label in labels])


def local_ring_tables():
    """
    F2[x,y]/(x,y)^2, element a + bx + cy at index 4a + 2b + c.
    """

    def split(i):
        return i >> 2, (i >> 1) & 1, i & 1

    def join(a, b, c):
        return 4 * (a % 2) + 2 * (b % 2) + (c % 2)

    add = tuple(tuple(i ^ j for j in range(8)) for i in range(8))
    mul = []
    for i in range(8):
        a, b, c = split(i)
        row = []
        for j in range(8):
            d, e, f = split(j)
            row.append(join(a * d, a * e + b * d, a * f + c * d))
        mul.append(tuple(row))
    return TablePresentation(add=add, mul=tuple(mul), zero=0, one=4, name="F2[x,y]/(x,y)^2")


_RINGS = {n: zn(n) for n in range(2, 13)}


def small_rings(max_order=12):
    return st.sampled_from([_RINGS[n] for n in range(2, max_order + 1)])


@st.composite
def rings_with_mcs(draw, max_order=12):
    """
    A ring Z_n with an m.c.s. generated by a random subset,
    redrawn until the closure avoids 0.
    """

    ring = draw(small_rings(max_order))
    seeds = draw(st.sets(st.sampled_from(list(ring.elements)), max_size=3))
    closed = multiplicative_closure(ring, seeds)
    if ring.zero in closed:
        closed = multiplicative_closure(ring, [])
    return ring, validate_mcs(ring, closed)
