"""
s-comult command line

    s-comult check INSTANCE PREDICATE [--module M] [--mcs S] [--submodule N] [--hom f]
    s-comult verify [--statements IDS] [--max-ring n] [--max-module n] [--report PATH] [--mutation]
    s-comult enumerate INSTANCE {ideals,submodules,mcs,maximal}
    s-comult dump RING [--output PATH]

Exit codes: 0 true or pass, 1 false or fail, 2 a precondition of the
predicate does not hold, 3 the input or a flag is invalid.
"""

from __future__ import annotations

import dataclasses
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import click

import s_comult  # noqa: F401  registers the statements
from s_comult.algebra import morphism
from s_comult.algebra import ring as ring_core
from s_comult.algebra.errors import AlgebraError, DisjointnessFailure, PreconditionUnmet
from s_comult.algebra.module import Module, Submodule, enumerate_submodules, parse_submodule, whole
from s_comult.algebra.morphism import ModuleHom
from s_comult.algebra.ring import MCS, validate_mcs
from s_comult.algebra.struct import Caps, Witness
from s_comult.cli.instance import Instance, InstanceParseError, dump_instance, load_instance, parse_labels
from s_comult.theory import certify, predicates
from s_comult.verifier import mutation
from s_comult.verifier.catalog import CatalogParams, generate_catalog
from s_comult.verifier.engine import Verifier, passed
from s_comult.verifier.report import summary_line, write_report

logger = logging.getLogger(__name__)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_PRECONDITION = 2
EXIT_INPUT = 3


@dataclasses.dataclass(slots=True)
class Query:
    """
    Query - everything a predicate may ask for, resolved from the flags.
    """

    instance: Instance
    module: Module
    mcs: MCS
    submodule: Optional[Submodule]
    hom: Optional[ModuleHom]
    caps: Caps

    def need_submodule(self) -> Submodule:
        if self.submodule is None:
            raise click.UsageError("this predicate needs --submodule")
        return self.submodule

    def need_hom(self) -> ModuleHom:
        if self.hom is None:
            raise click.UsageError("this predicate needs --hom")
        return self.hom

    def describe(self, witness: Witness) -> str:
        return ", ".join(f"{k}={v}" for k, v in witness.describe(self.module.ring, self.module).items())


Outcome = Tuple[bool, List[str]]


def _from_witness(query: Query, witness: Optional[Witness]) -> Outcome:
    if witness is None:
        return False, ["no s in S works"]
    return True, [query.describe(witness)]


def _s_comultiplication(query: Query) -> Outcome:
    module, mcs = query.module, query.mcs
    witnesses = predicates.is_s_comultiplication(module, mcs, query.caps)
    if witnesses is None:
        _, failing = predicates.comultiplication_failure(module, mcs, query.caps)
        return False, [f"failing submodule {failing.format()}"]
    certify.certify_comultiplication(module, mcs, witnesses)
    return True, [f"{sub.format()}: {query.describe(w)}" for sub, w in witnesses.items()]


def _comultiplication(query: Query) -> Outcome:
    one = validate_mcs(query.module.ring, [query.module.ring.one])
    ok, failing = predicates.comultiplication_failure(query.module, one, query.caps)
    return ok, [] if ok else [f"failing submodule {failing.format()}"]


def _s_prime(query: Query) -> Outcome:
    sub = query.need_submodule()
    witness = predicates.is_s_prime_submodule(query.module, sub, query.mcs)
    if witness is not None:
        certify.certify_s_prime(query.module, sub, query.mcs, witness)
    return _from_witness(query, witness)


def _s_second(query: Query) -> Outcome:
    sub = query.need_submodule()
    witness = predicates.is_s_second(query.module, sub, query.mcs)
    if witness is not None:
        certify.certify_s_second(query.module, sub, query.mcs, witness)
    return _from_witness(query, witness)


def _s_cyclic(query: Query) -> Outcome:
    witness = predicates.is_s_cyclic(query.module, query.mcs)
    if witness is not None:
        certify.certify_s_cyclic(query.module, query.mcs, witness)
    return _from_witness(query, witness)


def _s_torsion_free(query: Query) -> Outcome:
    witness = predicates.is_s_torsion_free(query.module, query.mcs)
    if witness is not None:
        certify.certify_s_torsion_free(query.module, query.mcs, witness)
    return _from_witness(query, witness)


def _s_minimal(query: Query) -> Outcome:
    sub = query.submodule if query.submodule is not None else whole(query.module)
    witness = predicates.is_s_minimal(query.module, sub, query.mcs, caps=query.caps)
    if witness is None:
        return False, ["some nonzero L has no s with sK inside L"]
    certify.certify_s_minimal(query.module, sub, query.mcs, witness)
    return True, [f"{small.format()}: s={query.module.ring.format(s)}" for small, s in witness.extra]


def _s_finite(query: Query) -> Outcome:
    sub = query.submodule if query.submodule is not None else whole(query.module)
    witness = predicates.is_s_finite(query.module, sub, query.mcs)
    certify.certify_finite(query.module, sub, witness)
    return True, ["generators " + " ".join(query.module.format(m) for m in witness.extra)]


def _lemma_equivalence(query: Query) -> Outcome:
    verdicts = predicates.lemma_equivalence_bundle(query.module, query.mcs, query.caps)
    return verdicts.agree, [f"{k}={v}" for k, v in verdicts.as_dict().items()]


def _hom(kind: str, check: Callable[[ModuleHom, MCS], Optional[Witness]]) -> Callable[[Query], Outcome]:

    def run(query: Query) -> Outcome:
        f = query.need_hom()
        witness = check(f, query.mcs)
        certify.certify_hom_witness(f, kind, witness)
        return _from_witness(query, witness)

    return run


def _plain(check: Callable[[Query], bool]) -> Callable[[Query], Outcome]:

    def run(query: Query) -> Outcome:
        return bool(check(query)), []

    return run


PREDICATES: Dict[str, Callable[[Query], Outcome]] = {
    "s-comultiplication": _s_comultiplication,
    "comultiplication": _comultiplication,
    "lemma-equivalence": _lemma_equivalence,
    "multiplication": _plain(lambda q: predicates.is_multiplication(q.module, q.caps)),
    "s-multiplication": _plain(lambda q: predicates.is_s_multiplication(q.module, q.mcs, q.caps)),
    "s-prime": _s_prime,
    "prime": _plain(lambda q: predicates.is_prime_submodule(q.module, q.need_submodule())),
    "prime-module": _plain(lambda q: predicates.is_prime_module(q.module, q.caps)),
    "s-second": _s_second,
    "second": _plain(lambda q: predicates.is_second_submodule(q.module, q.need_submodule())),
    "s-cyclic": _s_cyclic,
    "s-torsion-free": _s_torsion_free,
    "s-minimal": _s_minimal,
    "s-finite": _s_finite,
    "s-noetherian": _plain(lambda q: ring_core.is_s_noetherian(q.module.ring, q.mcs)[0]),
    "maximal-multiple": _plain(lambda q: ring_core.has_maximal_multiple(q.mcs) is not None),
    "s-zero": _hom("zero", morphism.is_s_zero),
    "s-monic": _hom("monic", morphism.is_s_monic),
    "s-epic": _hom("epic", morphism.is_s_epic),
}


def _load(path: str, caps: Caps) -> Instance:
    try:
        return load_instance(path, caps)
    except OSError as e:
        raise InstanceParseError(0, path, e.strerror or str(e)) from None


def _resolve_module(instance: Instance, name: Optional[str]) -> Module:
    try:
        return instance.module(name)
    except KeyError:
        raise click.BadParameter(f"no module {name!r} in the instance", param_hint="--module") from None


def _resolve_mcs(instance: Instance, value: Optional[str]) -> MCS:
    """
    --mcs is either a declared name or a label list such as '{1,3}'.
    """

    ring = instance.ring
    if value is None:
        if instance.mcs:
            return next(iter(instance.mcs.values()))
        return validate_mcs(ring, [ring.one])
    if value in instance.mcs:
        return instance.mcs[value]
    labels = parse_labels(value)
    if not labels:
        raise click.BadParameter(f"{value!r} is neither a declared m.c.s. nor a label list", param_hint="--mcs")
    try:
        indices = [ring.index_of(label) for label in labels]
    except (ValueError, TypeError) as e:
        raise click.BadParameter(str(e), param_hint="--mcs") from None
    return validate_mcs(ring, indices)


def _resolve_submodule(instance: Instance, module: Module, value: Optional[str]) -> Optional[Submodule]:
    if value is None:
        return None
    if value in instance.submodules:
        found = instance.submodules[value]
        if found.module is not module:
            raise click.BadParameter(f"{value!r} is a submodule of another module", param_hint="--submodule")
        return found
    try:
        return parse_submodule(module, parse_labels(value))
    except (ValueError, TypeError) as e:
        raise click.BadParameter(str(e), param_hint="--submodule") from None


def _resolve_hom(instance: Instance, value: Optional[str]) -> Optional[ModuleHom]:
    if value is None:
        return None
    try:
        return instance.homs[value]
    except KeyError:
        raise click.BadParameter(f"no hom {value!r} in the instance", param_hint="--hom") from None


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log at DEBUG level.")
def cli(verbose: bool) -> None:
    """
    Finite S-comultiplication modules: predicates, enumeration and statement verification.
    """

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


@cli.command()
@click.argument("instance_file", type=click.Path(dir_okay=False))
@click.argument("predicate", type=click.Choice(sorted(PREDICATES)))
@click.option("--module", "module_name", default=None, help="Module name (first declared by default).")
@click.option("--mcs", default=None, help="m.c.s. name or label list such as '{1,3}' (first declared, else {1}).")
@click.option("--submodule", default=None, help="Submodule name or generator labels.")
@click.option("--hom", default=None, help="Homomorphism name.")
def check(instance_file: str, predicate: str, module_name: Optional[str], mcs: Optional[str],
          submodule: Optional[str], hom: Optional[str]) -> int:
    """
    Evaluates one predicate on an instance file.
    """

    caps = Caps()
    instance = _load(instance_file, caps)
    module = _resolve_module(instance, module_name)
    found_hom = _resolve_hom(instance, hom)
    query = Query(instance, module, _resolve_mcs(instance, mcs), _resolve_submodule(instance, module, submodule),
                  found_hom, caps)

    verdict, details = PREDICATES[predicate](query)
    click.echo(f"{predicate}: {'true' if verdict else 'false'}")
    for line in details:
        click.echo(f"  {line}")
    return EXIT_TRUE if verdict else EXIT_FALSE


@cli.command()
@click.option("--statements", default=None, help="Comma separated statement ids (all by default).")
@click.option("--max-ring", type=click.IntRange(min=0), default=12, show_default=True)
@click.option("--max-module", type=click.IntRange(min=0), default=16, show_default=True)
@click.option("--jobs", "-j", type=click.IntRange(min=1), default=1, show_default=True,
              help="Statements checked in parallel.")
@click.option("--report", type=click.Path(dir_okay=False), default=None, help="Write the JSON report here.")
@click.option("--mutation", is_flag=True, help="Run the statements against every shipped mutant.")
def verify(statements: Optional[str], max_ring: int, max_module: int, jobs: int, report: Optional[str],
           mutation: bool) -> int:
    """
    Runs the statement suite over the generated catalog.
    """

    ids = None
    if statements is not None:
        ids = [s.strip() for s in statements.split(",") if s.strip()]

    params = CatalogParams(max_ring=max_ring, max_module=max_module)
    catalog = generate_catalog(params)

    if mutation:
        return _verify_mutants(catalog, ids, report)

    reports = Verifier(catalog, jobs).verify_all(ids)
    for r in reports:
        click.echo(summary_line(r))
    if report is not None:
        write_report(report, reports, params.as_dict())
    return EXIT_TRUE if passed(reports) else EXIT_FALSE


def _verify_mutants(catalog, ids: Optional[List[str]], report: Optional[str]) -> int:
    """
    Mutation runs exit 1 when some mutant was caught, which is the expected outcome.
    """

    results = mutation.run_mutants(catalog, ids)
    for result in results:
        status = "killed" if result.killed else ("survived (equivalent)" if result.mutant.equivalent else "survived")
        detail = f" by {', '.join(result.failing)}" if result.killed else ""
        click.echo(f"{result.mutant.name:24} {status}{detail}")
    if report is not None:
        write_report(report, [], catalog.params.as_dict(), [r.as_dict() for r in results])
    return EXIT_FALSE if any(r.killed for r in results) else EXIT_TRUE


@cli.command(name="enumerate")
@click.argument("instance_file", type=click.Path(dir_okay=False))
@click.argument("what", type=click.Choice(["ideals", "submodules", "mcs", "maximal"]))
@click.option("--module", "module_name", default=None, help="Module for 'submodules' (first declared by default).")
def enumerate_command(instance_file: str, what: str, module_name: Optional[str]) -> int:
    """
    Lists ideals, submodules, m.c.s. or maximal ideals in canonical order, one per line.
    """

    caps = Caps()
    instance = _load(instance_file, caps)
    ring = instance.ring

    if what == "ideals":
        items = ring_core.enumerate_ideals(ring, caps)
    elif what == "maximal":
        items = ring_core.maximal_ideals(ring, caps)
    elif what == "mcs":
        items = ring_core.enumerate_mcs(ring, caps)
    else:
        items = enumerate_submodules(_resolve_module(instance, module_name), caps)

    for item in items:
        click.echo(item.format())
    return EXIT_TRUE


@cli.command()
@click.argument("ring_name")
@click.option("--max-ring", type=click.IntRange(min=0), default=12, show_default=True)
@click.option("--max-module", type=click.IntRange(min=0), default=16, show_default=True)
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Write here instead of stdout.")
def dump(ring_name: str, max_ring: int, max_module: int, output: Optional[str]) -> int:
    """
    Writes a catalog ring (such as Z6 or Z2xZ2) with its modules and m.c.s. as an instance file.
    """

    catalog = generate_catalog(CatalogParams(max_ring=max_ring, max_module=max_module))
    try:
        entry = catalog.entry(ring_name)
    except KeyError:
        raise click.BadParameter(f"no ring {ring_name!r} in the catalog", param_hint="RING_NAME") from None

    text = dump_instance(entry.ring, entry.modules, entry.mcs)
    if output is None:
        click.echo(text, nl=False)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    return EXIT_TRUE


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Runs the command line and returns its exit code.

    :param argv: Arguments, sys.argv[1:] by default
    :type argv: Optional[Sequence[str]]
    :return: Exit code
    :rtype: int
    """

    try:
        code = cli.main(args=list(argv) if argv is not None else None, prog_name="s-comult", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_INPUT
    except click.exceptions.Abort:
        return EXIT_INPUT
    except InstanceParseError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_INPUT
    except (PreconditionUnmet, DisjointnessFailure) as e:
        click.echo(f"precondition: {e}", err=True)
        return EXIT_PRECONDITION
    except AlgebraError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_INPUT

    return code if isinstance(code, int) else EXIT_TRUE


def run() -> None:
    sys.exit(main())
