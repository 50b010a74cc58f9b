from s_comult.verifier.registry import register

_STATEMENTS = "s_comult.verifier.statements"

register(
     id="L-EQ",
     entry_point=f"{_STATEMENTS}.comultiplication:LemmaEquivalence",
     anchor="definition, annihilator form and pair form of S-comultiplication agree",
)
register(
     id="P-MONO",
     entry_point=f"{_STATEMENTS}.comultiplication:Monotonicity",
     anchor="S1-comultiplication passes to a larger S2",
)
register(
     id="P-SAT",
     entry_point=f"{_STATEMENTS}.comultiplication:Saturation",
     anchor="S-comultiplication iff S*-comultiplication",
)
register(
     id="P-LOC",
     entry_point=f"{_STATEMENTS}.locality:LocalizationComultiplication",
     anchor="S^-1 M of an S-comultiplication module is comultiplication",
)
register(
     id="T-LOC",
     entry_point=f"{_STATEMENTS}.locality:MaximalMultiple",
     anchor="with a maximal multiple, S-comultiplication iff S^-1 M comultiplication",
)
register(
     id="T-HOM",
     entry_point=f"{_STATEMENTS}.comultiplication:HomTransfer",
     anchor="transfer along f with t Ker(f) = 0",
)
register(
     id="C-SUB",
     entry_point=f"{_STATEMENTS}.comultiplication:SubmoduleQuotient",
     anchor="submodules, and quotients by N containing some tM",
)
register(
     id="P-PROD",
     entry_point=f"{_STATEMENTS}.comultiplication:ProductPair",
     anchor="M1 x M2 over S1 x S2 iff both factors",
)
register(
     id="T-PRODN",
     entry_point=f"{_STATEMENTS}.comultiplication:ProductTriple",
     anchor="the product criterion for three factors",
)
register(
     id="T-COM",
     entry_point=f"{_STATEMENTS}.locality:LocalCharacterization",
     anchor="comultiplication iff P-comultiplication at every prime or maximal P",
)
register(
     id="P-PF",
     entry_point=f"{_STATEMENTS}.nakayama:FaithfulIdeal",
     anchor="(0 :_M I) = 0 gives sM inside IM, sm = am and (s + a)M = 0",
)
register(
     id="T-DU",
     entry_point=f"{_STATEMENTS}.nakayama:DualNakayama",
     anchor="tI inside Jac(R) with (0 :_M tI) = 0 gives sM = 0",
)
register(
     id="C-DU",
     entry_point=f"{_STATEMENTS}.nakayama:ClassicalDualNakayama",
     anchor="I inside Jac(R) with (0 :_M I) = 0 gives M = 0",
)
register(
     id="P-CY1",
     entry_point=f"{_STATEMENTS}.cyclic:MinimalIdealCyclic",
     anchor="a minimal ideal with (0 :_M N) = 0 makes M S-cyclic",
)
register(
     id="P-FAM",
     entry_point=f"{_STATEMENTS}.cyclic:FamilyIntersection",
     anchor="s times the intersection of the N + M_i lies in N",
)
register(
     id="P-EXT",
     entry_point=f"{_STATEMENTS}.cyclic:IdealExtension",
     anchor="N inside s(0 :_M I) extends I to J with s(0 :_M J) inside N",
)
register(
     id="T-TOR",
     entry_point=f"{_STATEMENTS}.cyclic:TorsionOrCyclic",
     anchor="S-cyclic or torsion",
)
register(
     id="T-CY2",
     entry_point=f"{_STATEMENTS}.cyclic:FaithfulMultiplesCyclic",
     anchor="over a domain, faithful sM makes M S-cyclic",
)
register(
     id="T-CY3",
     entry_point=f"{_STATEMENTS}.cyclic:TorsionFreeCyclic",
     anchor="S-torsion free makes M S-cyclic",
)
register(
     id="T-MIN",
     entry_point=f"{_STATEMENTS}.cyclic:PrimeMinimal",
     anchor="a prime module is S-minimal",
)
register(
     id="P-HOMS",
     entry_point=f"{_STATEMENTS}.second:MonicEpicBridge",
     anchor="monic and epic maps against their S-versions",
)
register(
     id="P-SPR",
     entry_point=f"{_STATEMENTS}.second:PrimeHomothety",
     anchor="S-prime via (P :_M s) and via homotheties of M/P",
)
register(
     id="T-SEC",
     entry_point=f"{_STATEMENTS}.second:SecondCharacterizations",
     anchor="S-second via homotheties and via saN = 0 or sN inside aN",
)
register(
     id="T-M3",
     entry_point=f"{_STATEMENTS}.second:SecondViaAnnihilator",
     anchor="S-second iff ann(N) S-prime with a uniform multiple",
)
register(
     id="C-M3",
     entry_point=f"{_STATEMENTS}.second:SecondPrimeAnnihilator",
     anchor="second iff ann(N) prime",
)
register(
     id="T-SSUM",
     entry_point=f"{_STATEMENTS}.second:SecondInsideSum",
     anchor="an S-second N inside a sum has sN inside one summand",
)
