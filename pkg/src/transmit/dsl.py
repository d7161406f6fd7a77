"""Topology description language: expression tree, parser, validation.

Grammar (whitespace permitted around tokens, input is a single expression):

    expr := "complete(" INT ")" | "cycle(" INT ")" | "star(" INT ")"
          | "path(" INT ")" | "mesh(" INT {"," INT} ")" | "tree(" INT "," INT ")"
          | "wedge(" expr {"," expr} ")" | "rprod(" expr "," expr ")"
          | "power(" expr "," INT ")" | "attach(" expr ")"
    INT  := [0-9]+

``attach`` adds a pendant vertex to the root and re-roots there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import TopologyParseError, ValidationError


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Star:
    """Star with ``n`` leaves (``n + 1`` vertices), rooted at the center."""

    n: int


@dataclass(frozen=True)
class Path:
    """Path with ``n`` vertices, rooted at an endpoint."""

    n: int


@dataclass(frozen=True)
class Mesh:
    """Cartesian product of paths with the given side lengths, rooted at a corner."""

    dims: tuple[int, ...]


@dataclass(frozen=True)
class Tree:
    """Perfect tree: every internal vertex has ``arity`` children, leaves at ``depth``."""

    arity: int
    depth: int


@dataclass(frozen=True)
class Wedge:
    """One-point union: children glued at their roots."""

    children: tuple["TopologyExpr", ...]


@dataclass(frozen=True)
class RootedProduct:
    """A copy of ``right`` hung at its root off every vertex of ``left``."""

    left: "TopologyExpr"
    right: "TopologyExpr"


@dataclass(frozen=True)
class Power:
    """``exponent``-fold rooted product of ``base`` with itself."""

    base: "TopologyExpr"
    exponent: int


@dataclass(frozen=True)
class Attach:
    """Pendant vertex added at the root; the pendant becomes the new root."""

    child: "TopologyExpr"


TopologyExpr = Union[
    Complete, Cycle, Star, Path, Mesh, Tree, Wedge, RootedProduct, Power, Attach
]


class _Parser:
    """Recursive-descent parser. Offsets in errors are 1-based."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, expected: str) -> TopologyParseError:
        if self.pos >= len(self.text):
            found = "end of input"
        else:
            found = repr(self.text[self.pos])
        return TopologyParseError(self.pos + 1, expected, found)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, token: str) -> None:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
        else:
            raise self.error(f'"{token}"')

    def peek_is(self, token: str) -> bool:
        self.skip_ws()
        return self.text.startswith(token, self.pos)

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("an integer")
        return int(self.text[start : self.pos])

    def parse_keyword(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            raise self.error("a topology keyword")
        word = self.text[start : self.pos]
        if word not in _KEYWORDS:
            self.pos = start
            raise self.error("one of " + ", ".join(sorted(_KEYWORDS)))
        return word

    def parse_expr(self) -> TopologyExpr:
        keyword = self.parse_keyword()
        self.expect("(")
        node = _KEYWORDS[keyword](self)
        self.expect(")")
        return node

    def parse_all(self) -> TopologyExpr:
        node = self.parse_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("end of input")
        return node


def _int_args(parser: _Parser) -> list[int]:
    values = [parser.parse_int()]
    while parser.peek_is(","):
        parser.expect(",")
        values.append(parser.parse_int())
    return values


def _parse_mesh(parser: _Parser) -> Mesh:
    return Mesh(tuple(_int_args(parser)))


def _parse_tree(parser: _Parser) -> Tree:
    arity = parser.parse_int()
    parser.expect(",")
    depth = parser.parse_int()
    return Tree(arity, depth)


def _parse_wedge(parser: _Parser) -> Wedge:
    children = [parser.parse_expr()]
    while parser.peek_is(","):
        parser.expect(",")
        children.append(parser.parse_expr())
    return Wedge(tuple(children))


def _parse_rprod(parser: _Parser) -> RootedProduct:
    left = parser.parse_expr()
    parser.expect(",")
    right = parser.parse_expr()
    return RootedProduct(left, right)


def _parse_power(parser: _Parser) -> Power:
    base = parser.parse_expr()
    parser.expect(",")
    exponent = parser.parse_int()
    return Power(base, exponent)


_KEYWORDS = {
    "complete": lambda p: Complete(p.parse_int()),
    "cycle": lambda p: Cycle(p.parse_int()),
    "star": lambda p: Star(p.parse_int()),
    "path": lambda p: Path(p.parse_int()),
    "mesh": _parse_mesh,
    "tree": _parse_tree,
    "wedge": _parse_wedge,
    "rprod": _parse_rprod,
    "power": _parse_power,
    "attach": lambda p: Attach(p.parse_expr()),
}


def parse(text: str) -> TopologyExpr:
    """Parse topology text; raises TopologyParseError with a 1-based offset.

    The result is structurally well formed but parameter ranges are not yet
    checked; run :func:`validate` before building or evaluating.
    """
    return _Parser(text).parse_all()


def validate(expr: TopologyExpr) -> list[str]:
    """Collect every parameter-range violation, each tagged with a node path.

    Returns an empty list when the expression is valid; never raises.
    """
    violations: list[str] = []

    def visit(node: TopologyExpr, path: str) -> None:
        if isinstance(node, Complete):
            if node.n < 1:
                violations.append(f"{path}: complete size must be >= 1")
        elif isinstance(node, Cycle):
            if node.n < 3:
                violations.append(f"{path}: cycle size must be >= 3")
        elif isinstance(node, Star):
            if node.n < 1:
                violations.append(f"{path}: star leaf count must be >= 1")
        elif isinstance(node, Path):
            if node.n < 1:
                violations.append(f"{path}: path size must be >= 1")
        elif isinstance(node, Mesh):
            if not node.dims:
                violations.append(f"{path}: mesh needs at least one dimension")
            for i, r in enumerate(node.dims):
                if r < 1:
                    violations.append(f"{path}: mesh dimension {i} must be >= 1")
        elif isinstance(node, Tree):
            if node.arity < 1:
                violations.append(f"{path}: tree arity must be >= 1")
            if node.depth < 0:
                violations.append(f"{path}: tree depth must be >= 0")
        elif isinstance(node, Wedge):
            if not node.children:
                violations.append(f"{path}: wedge needs at least one child")
            for i, child in enumerate(node.children):
                visit(child, f"{path}.children[{i}]")
        elif isinstance(node, RootedProduct):
            visit(node.left, f"{path}.left")
            visit(node.right, f"{path}.right")
        elif isinstance(node, Power):
            if node.exponent < 1:
                violations.append(f"{path}: power exponent must be >= 1")
            visit(node.base, f"{path}.base")
        elif isinstance(node, Attach):
            visit(node.child, f"{path}.child")
        else:
            raise ValidationError(f"unknown expression node {node!r}")

    visit(expr, "$")
    return violations


def require_valid(expr: TopologyExpr) -> None:
    """Raise ValidationError listing every violation, if any."""
    violations = validate(expr)
    if violations:
        raise ValidationError("; ".join(violations))


def estimated_size(expr: TopologyExpr) -> int:
    """Exact vertex count of the built graph, without building it."""
    if isinstance(expr, (Complete, Cycle, Path)):
        return expr.n
    if isinstance(expr, Star):
        return expr.n + 1
    if isinstance(expr, Mesh):
        size = 1
        for r in expr.dims:
            size *= r
        return size
    if isinstance(expr, Tree):
        if expr.arity == 1:
            return expr.depth + 1
        return (expr.arity ** (expr.depth + 1) - 1) // (expr.arity - 1)
    if isinstance(expr, Wedge):
        return sum(estimated_size(c) for c in expr.children) - (len(expr.children) - 1)
    if isinstance(expr, RootedProduct):
        return estimated_size(expr.left) * estimated_size(expr.right)
    if isinstance(expr, Power):
        return estimated_size(expr.base) ** expr.exponent
    if isinstance(expr, Attach):
        return estimated_size(expr.child) + 1
    raise ValidationError(f"unknown expression node {expr!r}")


def render(expr: TopologyExpr) -> str:
    """Canonical text form; ``parse(render(e))`` reproduces ``e``."""
    if isinstance(expr, Complete):
        return f"complete({expr.n})"
    if isinstance(expr, Cycle):
        return f"cycle({expr.n})"
    if isinstance(expr, Star):
        return f"star({expr.n})"
    if isinstance(expr, Path):
        return f"path({expr.n})"
    if isinstance(expr, Mesh):
        return "mesh(" + ",".join(str(r) for r in expr.dims) + ")"
    if isinstance(expr, Tree):
        return f"tree({expr.arity},{expr.depth})"
    if isinstance(expr, Wedge):
        return "wedge(" + ",".join(render(c) for c in expr.children) + ")"
    if isinstance(expr, RootedProduct):
        return f"rprod({render(expr.left)},{render(expr.right)})"
    if isinstance(expr, Power):
        return f"power({render(expr.base)},{expr.exponent})"
    if isinstance(expr, Attach):
        return f"attach({render(expr.child)})"
    raise ValidationError(f"unknown expression node {expr!r}")
