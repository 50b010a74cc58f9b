"""
Finite commutative rings, their modules, homomorphisms and localizations.

Everything is held as small operation tables over integer-coded carriers,
so every construction can be enumerated exhaustively.
"""
