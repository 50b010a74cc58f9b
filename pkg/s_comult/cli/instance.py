"""
Instance files

An instance file describes one ring together with named modules,
multiplicatively closed sets, submodules and homomorphisms over it.
The format is line oriented; see docs/instance_format.md for the grammar.

    ring zn 6
    module M self
    module N zn_over_zk 2
    mcs S 1 3
    submodule K M 2
    hom f M N 0 1 0 1 0 1

Elements are written as labels: residues for Z_n, '(a,b)' tuples for
products of Z_n, and plain indices for table-presented structures.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from s_comult.algebra.errors import AlgebraError
from s_comult.algebra.module import (Module, Submodule, direct_sum, from_tables, parse_submodule,
                                     quotient_module, self_module, submodule_as_module, zero_module, zn_over_zk)
from s_comult.algebra.morphism import ModuleHom, make_hom
from s_comult.algebra.ring import MCS, Ring, TablePresentation, ZnProduct, make_ring, validate_mcs
from s_comult.algebra.struct import DEFAULT_CAPS, Caps

_LABEL = re.compile(r"\(\s*-?\d+(?:\s*,\s*-?\d+)*\s*\)|-?\d+")


class InstanceParseError(AlgebraError):
    """
    An instance file could not be read.

    :param line: 1-based line number, 0 when the file as a whole is at fault
    :type line: int
    :param field: The keyword or name being read
    :type field: str
    :param message: What went wrong
    :type message: str
    """

    def __init__(self, line: int, field: str, message: str) -> None:
        self.line: int = line
        self.field: str = field
        self.message: str = message
        super().__init__(f"line {line}: {field}: {message}")


@dataclasses.dataclass(slots=True)
class Instance:
    """
    Instance - a parsed instance file.
    """

    ring: Ring
    modules: Dict[str, Module] = dataclasses.field(default_factory=dict)
    mcs: Dict[str, MCS] = dataclasses.field(default_factory=dict)
    submodules: Dict[str, Submodule] = dataclasses.field(default_factory=dict)
    homs: Dict[str, ModuleHom] = dataclasses.field(default_factory=dict)

    def module(self, name: Optional[str] = None) -> Module:
        """
        The module called name, or the first declared one.

        :raise KeyError: If there is no such module
        """

        if name is None:
            if not self.modules:
                raise KeyError("the instance declares no module")
            return next(iter(self.modules.values()))
        return self.modules[name]


def parse_label(token: str) -> object:
    """
    Reads one element label: an integer or a tuple '(a,b,...)'.
    """

    token = token.strip()
    if token.startswith("("):
        return tuple(int(part) for part in token.strip("()").split(","))
    return int(token)


def parse_labels(text: str) -> List[object]:
    """
    Reads every label in text; braces, commas and spaces all separate.

    '{1,3}', '1 3' and '{(1,0),(0,1)}' are all accepted.
    """

    return [parse_label(token) for token in _LABEL.findall(text)]


def _lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


class _Parser:
    """
    Single pass over the lines of a file.
    """

    def __init__(self, text: str, caps: Caps) -> None:

        self.lines = list(_lines(text))
        self.position = 0
        self.caps = caps
        self.instance: Optional[Instance] = None

    def fail(self, line: int, field: str, message: str) -> InstanceParseError:
        return InstanceParseError(line, field, message)

    def next_line(self) -> Tuple[int, List[str]]:
        if self.position >= len(self.lines):
            last = self.lines[-1][0] if self.lines else 0
            raise self.fail(last, "end", "file ended inside a block")
        line = self.lines[self.position]
        self.position += 1
        return line

    def rows(self, keyword: str, count: int, width: int) -> List[List[int]]:
        """
        Reads count rows 'keyword i1 ... iwidth' of element indices.
        """

        out = []
        for _ in range(count):
            number, tokens = self.next_line()
            if tokens[0] != keyword:
                raise self.fail(number, tokens[0], f"expected a '{keyword}' row")
            try:
                row = [int(t) for t in tokens[1:]]
            except ValueError:
                raise self.fail(number, keyword, "table entries are element indices") from None
            if len(row) != width:
                raise self.fail(number, keyword, f"expected {width} entries, found {len(row)}")
            out.append(row)
        return out

    def close_block(self, field: str) -> Dict[str, int]:
        """
        Reads optional 'zero i' / 'one i' lines up to 'end'.
        """

        extras = {}
        while True:
            number, tokens = self.next_line()
            if tokens[0] == "end":
                return extras
            if tokens[0] in ("zero", "one") and len(tokens) == 2 and tokens[1].isdigit():
                extras[tokens[0]] = int(tokens[1])
                continue
            raise self.fail(number, field, f"unexpected '{tokens[0]}' in table block")

    def guarded(self, number: int, field: str, build: Callable[[], Any]) -> Any:
        """
        Runs a constructor, turning its errors into parse errors at this line.
        """

        try:
            return build()
        except InstanceParseError:
            raise
        except (AlgebraError, ValueError, KeyError, IndexError, TypeError) as e:
            raise self.fail(number, field, str(e)) from None

    def parse(self) -> Instance:

        while self.position < len(self.lines):
            number, tokens = self.next_line()
            keyword = tokens[0]
            if keyword == "ring":
                if self.instance is not None:
                    raise self.fail(number, "ring", "an instance has exactly one ring")
                self.instance = Instance(self.ring(number, tokens))
                continue
            if self.instance is None:
                raise self.fail(number, keyword, "the ring must be declared first")
            handler = {
                "module": self.module,
                "mcs": self.mcs,
                "submodule": self.submodule,
                "hom": self.hom,
            }.get(keyword)
            if handler is None:
                raise self.fail(number, keyword, "unknown keyword")
            handler(number, tokens)

        if self.instance is None:
            raise self.fail(0, "ring", "no ring declared")
        return self.instance

    def ring(self, number: int, tokens: List[str]) -> Ring:

        if len(tokens) < 3 or tokens[1] not in ("zn", "table"):
            raise self.fail(number, "ring", "expected 'ring zn n1 ...' or 'ring table n'")
        try:
            sizes = [int(t) for t in tokens[2:]]
        except ValueError:
            raise self.fail(number, "ring", "sizes must be integers") from None

        if tokens[1] == "zn":
            return self.guarded(number, "ring", lambda: make_ring(ZnProduct(tuple(sizes)), self.caps))

        if len(sizes) != 1 or sizes[0] < 1:
            raise self.fail(number, "ring", "a table ring takes one positive size")
        n = sizes[0]
        if n > self.caps.ring_order:
            raise self.fail(number, "ring", f"order {n} is above the cap of {self.caps.ring_order}")
        add = self.rows("add", n, n)
        mul = self.rows("mul", n, n)
        extras = self.close_block("ring")
        presentation = TablePresentation(
            add=tuple(map(tuple, add)),
            mul=tuple(map(tuple, mul)),
            zero=extras.get("zero", 0),
            one=extras.get("one", 1),
        )
        return self.guarded(number, "ring", lambda: make_ring(presentation, self.caps))

    def named(self, number: int, tokens: List[str], kind: str, minimum: int) -> str:
        if len(tokens) < minimum:
            raise self.fail(number, kind, "missing arguments")
        name = tokens[1]
        taken = (self.instance.modules, self.instance.mcs, self.instance.submodules, self.instance.homs)
        if any(name in table for table in taken):
            raise self.fail(number, name, "name already used")
        return name

    def known_module(self, number: int, name: str) -> Module:
        try:
            return self.instance.modules[name]
        except KeyError:
            raise self.fail(number, name, "unknown module") from None

    def module(self, number: int, tokens: List[str]) -> None:

        name = self.named(number, tokens, "module", 3)
        ring = self.instance.ring
        rule, args = tokens[2], tokens[3:]

        if rule == "self":
            build = lambda: self_module(ring, self.caps)  # noqa: E731
        elif rule == "zero":
            build = lambda: zero_module(ring)  # noqa: E731
        elif rule == "zn_over_zk":
            if len(args) != 1 or not args[0].isdigit():
                raise self.fail(number, name, "zn_over_zk takes one divisor")
            build = lambda: zn_over_zk(ring, int(args[0]), self.caps)  # noqa: E731
        elif rule == "sum":
            if len(args) != 2:
                raise self.fail(number, name, "sum takes two module names")
            left, right = (self.known_module(number, a) for a in args)
            build = lambda: direct_sum(left, right, self.caps)  # noqa: E731
        elif rule in ("quotient", "restrict"):
            if not args:
                raise self.fail(number, name, f"{rule} takes a module name and generators")
            base = self.known_module(number, args[0])
            labels = parse_labels(" ".join(args[1:]))
            if rule == "quotient":
                build = lambda: quotient_module(base, parse_submodule(base, labels), self.caps)  # noqa: E731
            else:
                build = lambda: submodule_as_module(parse_submodule(base, labels), self.caps)  # noqa: E731
        elif rule == "table":
            if len(args) != 1 or not args[0].isdigit():
                raise self.fail(number, name, "a table module takes one carrier size")
            n = int(args[0])
            if n > self.caps.module_order:
                raise self.fail(number, name, f"carrier {n} is above the cap of {self.caps.module_order}")
            add = self.rows("add", n, n)
            act = self.rows("act", ring.order, n)
            extras = self.close_block(name)
            build = lambda: from_tables(ring, add, act, extras.get("zero", 0), name=name,  # noqa: E731
                                        caps=self.caps, allow_zero=True)
        else:
            raise self.fail(number, name, f"unknown module rule '{rule}'")

        module = self.guarded(number, name, build)
        module.name = name
        self.instance.modules[name] = module

    def mcs(self, number: int, tokens: List[str]) -> None:
        name = self.named(number, tokens, "mcs", 3)
        ring = self.instance.ring
        labels = parse_labels(" ".join(tokens[2:]))
        self.instance.mcs[name] = self.guarded(
            number, name, lambda: validate_mcs(ring, [ring.index_of(label) for label in labels]))

    def submodule(self, number: int, tokens: List[str]) -> None:
        name = self.named(number, tokens, "submodule", 3)
        module = self.known_module(number, tokens[2])
        labels = parse_labels(" ".join(tokens[3:]))
        self.instance.submodules[name] = self.guarded(number, name, lambda: parse_submodule(module, labels))

    def hom(self, number: int, tokens: List[str]) -> None:
        name = self.named(number, tokens, "hom", 4)
        source = self.known_module(number, tokens[2])
        target = self.known_module(number, tokens[3])
        labels = parse_labels(" ".join(tokens[4:]))
        if len(labels) != source.order:
            raise self.fail(number, name, f"expected {source.order} values, found {len(labels)}")
        self.instance.homs[name] = self.guarded(
            number, name, lambda: make_hom(source, target, [target.index_of(label) for label in labels], name))


def parse_instance(text: str, caps: Caps = DEFAULT_CAPS) -> Instance:
    """
    Parses the text of an instance file.

    :param text: File contents
    :type text: str
    :param caps: Size caps for every structure built
    :type caps: Caps
    :return: The validated instance
    :rtype: Instance
    :raise InstanceParseError: On the first line that cannot be read or validated
    """

    return _Parser(text, caps).parse()


def load_instance(path, caps: Caps = DEFAULT_CAPS) -> Instance:
    with open(path, encoding="utf-8") as handle:
        return parse_instance(handle.read(), caps)


# Dumping:

def _row(keyword: str, values: Sequence[int]) -> str:
    return keyword + " " + " ".join(str(int(v)) for v in values)


class _Dumper:
    """
    Writes modules in dependency order, naming each one once.
    """

    def __init__(self, ring: Ring) -> None:

        self.ring = ring
        self.lines: List[str] = [self.ring_block()]
        self.names: Dict[int, str] = {}
        self.spelled: Dict[int, Callable[[int], str]] = {}

    def ring_block(self) -> str:
        ring = self.ring
        if ring.kind == Ring.ZN_PRODUCT:
            return "ring zn " + " ".join(str(n) for n in ring.moduli)
        lines = [f"ring table {ring.order}"]
        lines.extend(_row("add", ring.add_table[a]) for a in ring.elements)
        lines.extend(_row("mul", ring.mul_table[a]) for a in ring.elements)
        lines.append(f"zero {ring.zero}")
        lines.append(f"one {ring.one}")
        lines.append("end")
        return "\n".join(lines)

    def spell(self, module: Module, m: int) -> str:
        return self.spelled[id(module)](m)

    def declare(self, module: Module, name: Optional[str] = None) -> str:
        """
        Declares module (and whatever it is built from), returning its name.
        """

        if id(module) in self.names:
            return self.names[id(module)]
        if module.ring is not self.ring:
            raise ValueError(f"{module.name} is not over {self.ring.name}")

        rule = module.rule
        kind = rule[0]
        by_rule = None
        if kind == "self":
            by_rule = "self"
        elif kind == "zero":
            by_rule = "zero"
        elif kind == "zn_over_zk":
            by_rule = f"zn_over_zk {rule[1]}"
        elif kind == "direct_sum":
            by_rule = f"sum {self.declare(rule[1])} {self.declare(rule[2])}"
        elif kind == "quotient":
            base, sub = rule[1], rule[2]
            by_rule = f"quotient {self.declare(base)} " + " ".join(self.spell(base, m) for m in sub.sorted)
        elif kind == "submodule":
            sub = rule[1]
            base = sub.module
            if base.ring is self.ring:
                by_rule = f"restrict {self.declare(base)} " + " ".join(self.spell(base, m) for m in sub.sorted)

        name = name or f"M{len(self.names) + 1}"
        self.names[id(module)] = name
        if by_rule is not None:
            self.lines.append(f"module {name} {by_rule}  # {module.name}")
            self.spelled[id(module)] = module.format
            return name

        block = [f"module {name} table {module.order}  # {module.name}"]
        block.extend(_row("add", module.add_table[m]) for m in module.elements)
        block.extend(_row("act", module.act_table[r]) for r in self.ring.elements)
        block.append(f"zero {module.zero}")
        block.append("end")
        self.lines.append("\n".join(block))
        self.spelled[id(module)] = str
        return name

    def mcs(self, name: str, mcs: MCS) -> None:
        self.lines.append(f"mcs {name} " + " ".join(self.ring.format(s) for s in mcs))

    def submodule(self, name: str, sub: Submodule) -> None:
        owner = self.declare(sub.module)
        self.lines.append(f"submodule {name} {owner} " + " ".join(self.spell(sub.module, m) for m in sub.sorted))

    def hom(self, name: str, f: ModuleHom) -> None:
        source, target = self.declare(f.source), self.declare(f.target)
        values = " ".join(self.spell(f.target, int(y)) for y in f.table)
        self.lines.append(f"hom {name} {source} {target} {values}")


def dump_instance(ring: Ring, modules: Sequence[Module] = (), mcs: Sequence[MCS] = (),
                  submodules: Sequence[Submodule] = (), homs: Sequence[ModuleHom] = ()) -> str:
    """
    Writes structures over one ring as instance file text.

    Standard modules are written by their constructor, anything else as explicit tables.
    Names are generated: M1, M2, ... for modules, S1, ... for m.c.s.,
    K1, ... for submodules and f1, ... for homomorphisms.

    :param ring: The ring every structure lives over
    :type ring: Ring
    :return: Instance file text that parse_instance reads back
    :rtype: str
    :raise ValueError: If a structure is over another ring
    """

    dumper = _Dumper(ring)
    for module in modules:
        dumper.declare(module)
    for i, found in enumerate(mcs, start=1):
        dumper.mcs(f"S{i}", found)
    for i, sub in enumerate(submodules, start=1):
        dumper.submodule(f"K{i}", sub)
    for i, f in enumerate(homs, start=1):
        dumper.hom(f"f{i}", f)
    return "\n".join(dumper.lines) + "\n"


def dump(instance: Instance) -> str:
    """
    Writes a parsed instance back out, keeping its names.
    """

    dumper = _Dumper(instance.ring)
    for name, module in instance.modules.items():
        dumper.declare(module, name)
    for name, found in instance.mcs.items():
        dumper.mcs(name, found)
    for name, sub in instance.submodules.items():
        dumper.submodule(name, sub)
    for name, f in instance.homs.items():
        dumper.hom(name, f)
    return "\n".join(dumper.lines) + "\n"
