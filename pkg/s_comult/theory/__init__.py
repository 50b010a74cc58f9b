"""
Predicates relative to a multiplicatively closed subset S,
and independent re-checks of the witnesses they return.
"""
