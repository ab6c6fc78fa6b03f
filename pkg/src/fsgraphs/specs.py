"""A small text language for naming graphs on the command line.

::

    spec   := family | "comp(" spec ")" | "union(" spec "," spec ")"
    family := path(n) | cycle(n) | star(n) | fruit(n) | tad(c,p) | grid(r,c)
            | spider(l1,...,lk) | spycle(l1,...;g1,...) | edges(n; u-v,...)

Parsing validates parameters too, so every parsed spec builds a valid graph.
Errors carry the byte offset of the offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .errors import FSError
from .families import SpycleSignature, cycle, fruit, grid, path, spider, spycle, star, tadpole
from .graph import MAX_VERTICES, Graph, complement, disjoint_union


class SpecError(FSError, ValueError):
    def __init__(self, message, offset, expected=()):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.expected = tuple(expected)


class SpecSyntaxError(SpecError):
    pass


class SpecArityError(SpecError):
    pass


class SpecConstraintError(SpecError):
    pass


FIXED_ARITY = {"path": 1, "cycle": 1, "star": 1, "fruit": 1, "tad": 2, "grid": 2}
FAMILIES = sorted(set(FIXED_ARITY) | {"spider", "spycle", "edges", "comp", "union"})


@dataclass(frozen=True)
class Family:
    name: str
    args: tuple
    extra: tuple = ()  # cycle lengths for spycle
    offset: int = field(default=0, compare=False)

    def text(self) -> str:
        if self.name == "spycle":
            return f"spycle({_ints(self.args)};{_ints(self.extra)})"
        return f"{self.name}({_ints(self.args)})"


@dataclass(frozen=True)
class Edges:
    n: int
    pairs: tuple
    offset: int = field(default=0, compare=False)

    def text(self) -> str:
        return f"edges({self.n};" + ",".join(f"{u}-{v}" for u, v in self.pairs) + ")"


@dataclass(frozen=True)
class Comp:
    inner: "GraphSpec"
    offset: int = field(default=0, compare=False)

    def text(self) -> str:
        return f"comp({self.inner.text()})"


@dataclass(frozen=True)
class Union_:
    left: "GraphSpec"
    right: "GraphSpec"
    offset: int = field(default=0, compare=False)

    def text(self) -> str:
        return f"union({self.left.text()},{self.right.text()})"


GraphSpec = Union[Family, Edges, Comp, Union_]


def _ints(values) -> str:
    return ",".join(map(str, values))


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_]\w*)|(?P<punct>[(),;\-]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        if not m:
            off = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise SpecSyntaxError(f"unexpected character {text[off]!r}", off)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def expect(self, value, kind="punct"):
        k, v, off = self.tok
        if k != kind or (value is not None and v != value):
            shown = v if k != "end" else "end of input"
            raise SpecSyntaxError(f"expected {value or kind!r}, found {shown!r}", off, [value or kind])
        self.i += 1
        return v, off

    def peek_is(self, value):
        return self.tok[0] == "punct" and self.tok[1] == value

    def integer(self):
        v, _ = self.expect(None, "int")
        return int(v)

    def int_list(self, stop):
        """Comma-separated integers, possibly empty, up to (not past) ``stop``."""
        values = []
        if self.tok[0] == "punct" and self.tok[1] in stop:
            return values
        values.append(self.integer())
        while self.peek_is(","):
            self.i += 1
            values.append(self.integer())
        return values

    def spec(self):
        kind, name, off = self.tok
        if kind != "ident":
            raise SpecSyntaxError(f"expected a graph family, found {name or 'end of input'!r}", off, FAMILIES)
        if name not in FAMILIES:
            raise SpecSyntaxError(f"unknown graph family {name!r}", off, FAMILIES)
        self.i += 1
        self.expect("(")
        if name == "comp":
            node = Comp(self.spec(), off)
        elif name == "union":
            left = self.spec()
            self.expect(",")
            node = Union_(left, self.spec(), off)
        elif name == "edges":
            n = self.integer()
            self.expect(";")
            pairs = []
            if not self.peek_is(")"):
                while True:
                    u = self.integer()
                    self.expect("-")
                    pairs.append((u, self.integer()))
                    if not self.peek_is(","):
                        break
                    self.i += 1
            node = Edges(n, tuple(pairs), off)
        elif name == "spycle":
            legs = self.int_list(";)")
            cycles = []
            if self.peek_is(";"):
                self.i += 1
                cycles = self.int_list(")")
            node = Family(name, tuple(legs), tuple(cycles), off)
        else:
            args = self.int_list(")")
            if name in FIXED_ARITY and len(args) != FIXED_ARITY[name]:
                raise SpecArityError(
                    f"{name} takes {FIXED_ARITY[name]} argument(s), got {len(args)}", off
                )
            if name == "spider" and not args:
                raise SpecArityError("spider needs at least one leg", off)
            node = Family(name, tuple(args), (), off)
        self.expect(")")
        return node


def _check_constraints(node) -> int:
    """Vertex count of ``node``, raising a positioned error on bad parameters."""
    off = node.offset
    if isinstance(node, Comp):
        return _check_constraints(node.inner)
    if isinstance(node, Union_):
        total = _check_constraints(node.left) + _check_constraints(node.right)
        if total > MAX_VERTICES:
            raise SpecConstraintError(f"union has {total} vertices, limit is {MAX_VERTICES}", off)
        return total
    if isinstance(node, Edges):
        if node.n < 1:
            raise SpecConstraintError("edges needs n >= 1", off)
        for u, v in node.pairs:
            if not (1 <= u <= node.n and 1 <= v <= node.n) or u == v:
                raise SpecConstraintError(f"bad edge {u}-{v} for n={node.n}", off)
        count = node.n
    else:
        a = node.args
        rules = {
            "path": (a and a[0] >= 1, "path needs n >= 1"),
            "cycle": (a and a[0] >= 3, "cycle length must be >= 3"),
            "star": (a and a[0] >= 2, "star needs n >= 2"),
            "fruit": (a and a[0] >= 4, "fruit needs n >= 4"),
            "tad": (a and a[0] >= 3, "cycle length must be >= 3"),
            "grid": (a and min(a) >= 1, "grid dimensions must be positive"),
            "spider": (min(a, default=0) >= 1, "leg lengths must be positive"),
            "spycle": (min(a, default=1) >= 1 and min(node.extra, default=3) >= 3,
                       "leg lengths must be positive and cycle length must be >= 3"),
        }
        ok, msg = rules[node.name]
        if not ok:
            raise SpecConstraintError(msg, off)
        if node.name == "tad":
            count = a[0] + a[1]
        elif node.name == "grid":
            count = a[0] * a[1]
        elif node.name == "spider":
            count = 1 + sum(a)
        elif node.name == "spycle":
            count = SpycleSignature(a, node.extra).n
        else:
            count = a[0]
    if count > MAX_VERTICES:
        raise SpecConstraintError(f"{count} vertices exceeds the limit of {MAX_VERTICES}", off)
    return count


def parse_spec(text: str) -> GraphSpec:
    parser = _Parser(text)
    node = parser.spec()
    kind, value, off = parser.tok
    if kind != "end":
        raise SpecSyntaxError(f"unexpected trailing {value!r}", off, ["end of input"])
    _check_constraints(node)
    return node


def build(node: GraphSpec) -> Graph:
    if isinstance(node, Comp):
        return complement(build(node.inner))
    if isinstance(node, Union_):
        return disjoint_union(build(node.left), build(node.right))
    if isinstance(node, Edges):
        return Graph.from_edges(node.n, node.pairs)
    a = node.args
    return {
        "path": lambda: path(a[0]),
        "cycle": lambda: cycle(a[0]),
        "star": lambda: star(a[0]),
        "fruit": lambda: fruit(a[0]),
        "tad": lambda: tadpole(a[0], a[1]),
        "grid": lambda: grid(a[0], a[1]),
        "spider": lambda: spider(a),
        "spycle": lambda: spycle(SpycleSignature(a, node.extra)),
    }[node.name]()


def graph_from_spec(text: str) -> Graph:
    return build(parse_spec(text))
