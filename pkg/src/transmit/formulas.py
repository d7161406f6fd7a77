"""Exact closed-form transmission arithmetic, compositional over expressions.

Every operation returns a :class:`TransmissionTriple` of Python integers:
the vertex count, the transmission delta (sum of distances over ordered
vertex pairs) and the root transmission delta0 (sum of distances from the
root). No graph is ever materialized here, so these scale far beyond what
the BFS oracle can check directly.

Recurrences are the authoritative computation path for trees and power
coefficients because they are integer-only and defined at arity 1; the
matching closed forms (which divide by powers of n - 1) are exposed
separately as cross-checks for n >= 2. Every division is asserted exact:
a remainder means a formula was transcribed wrong, never a rounding issue.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import dsl
from .dsl import TopologyExpr
from .errors import InexactDivisionError, ValidationError


def exact_div(numerator: int, denominator: int) -> int:
    """Integer division that insists on a zero remainder."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder != 0:
        raise InexactDivisionError(
            f"{numerator} is not divisible by {denominator}"
        )
    return quotient


@dataclass(frozen=True)
class TransmissionTriple:
    """(|G|, delta(G), delta0(G)) for some connected rooted graph G.

    Construction enforces the identities every connected rooted graph
    satisfies, so an invalid triple cannot circulate.
    """

    size: int
    delta: int
    delta0: int

    def __post_init__(self):
        if self.size < 1:
            raise ValidationError(f"size must be >= 1, got {self.size}")
        if self.delta < 0 or self.delta0 < 0:
            raise ValidationError("transmissions must be nonnegative")
        if self.delta % 2 != 0:
            raise ValidationError(f"delta must be even, got {self.delta}")
        if self.size >= 2 and self.delta < self.size * (self.size - 1):
            raise ValidationError(
                f"delta {self.delta} below the distinct-pair floor for size {self.size}"
            )
        if 2 * self.delta0 > self.delta:
            raise ValidationError(
                f"delta0 {self.delta0} exceeds half of delta {self.delta}"
            )
        if self.size >= 2 and self.delta0 < self.size - 1:
            raise ValidationError(
                f"delta0 {self.delta0} below size - 1 = {self.size - 1}"
            )


SINGLE_VERTEX = TransmissionTriple(1, 0, 0)


@dataclass(frozen=True)
class SeriesTerms:
    """Power-series coefficients: terms[k] = delta of the depth-(k+1) tree."""

    arity: int
    terms: tuple[int, ...]

    def __post_init__(self):
        if self.arity < 2:
            raise ValidationError(f"series arity must be >= 2, got {self.arity}")
        if not self.terms:
            raise ValidationError("series needs at least one term")
        expected = 2 * self.arity**2
        if self.terms[0] != expected:
            raise ValidationError(
                f"leading term must be 2*arity^2 = {expected}, got {self.terms[0]}"
            )


def complete_triple(n: int) -> TransmissionTriple:
    if n < 1:
        raise ValidationError(f"complete size must be >= 1, got {n}")
    return TransmissionTriple(n, n * (n - 1), n - 1)


def cycle_triple(n: int) -> TransmissionTriple:
    if n < 3:
        raise ValidationError(f"cycle size must be >= 3, got {n}")
    if n % 2 == 1:
        delta = exact_div(n**3 - n, 4)
    else:
        delta = exact_div(n**3, 4)
    return TransmissionTriple(n, delta, n**2 // 4)


def star_triple(n: int) -> TransmissionTriple:
    """Star with n leaves, rooted at the center."""
    if n < 1:
        raise ValidationError(f"star leaf count must be >= 1, got {n}")
    return TransmissionTriple(n + 1, 2 * n**2, n)


def path_triple(n: int) -> TransmissionTriple:
    """Path with n vertices, rooted at an endpoint."""
    if n < 1:
        raise ValidationError(f"path size must be >= 1, got {n}")
    return TransmissionTriple(n, exact_div(n**3 - n, 3), n * (n - 1) // 2)


def mesh_triple(dims: tuple[int, ...]) -> TransmissionTriple:
    """Mesh (cartesian product of paths), rooted at a corner.

    delta sums, per axis, the path pair-distance total scaled by the
    squared sizes of the other axes; delta0 is the corner's coordinatewise
    distance sum.
    """
    dims = tuple(dims)
    if not dims:
        raise ValidationError("mesh needs at least one dimension")
    if any(r < 1 for r in dims):
        raise ValidationError(f"mesh dimensions must be >= 1, got {dims}")
    size = 1
    for r in dims:
        size *= r
    delta = 0
    delta0 = 0
    for axis, r in enumerate(dims):
        others = 1
        for other_axis, s in enumerate(dims):
            if other_axis != axis:
                others *= s
        delta += others**2 * exact_div(r**3 - r, 3)
        delta0 += others * (r * (r - 1) // 2)
    return TransmissionTriple(size, delta, delta0)


def primitive_triple(kind: str, params: tuple[int, ...]) -> TransmissionTriple:
    """Dispatch on the primitive kind name used by the DSL."""
    if kind == "mesh":
        return mesh_triple(tuple(params))
    if kind == "tree":
        if len(params) != 2:
            raise ValidationError("tree takes exactly (arity, depth)")
        return tree_triple(params[0], params[1])
    if len(params) != 1:
        raise ValidationError(f"{kind} takes exactly one parameter")
    forms = {
        "complete": complete_triple,
        "cycle": cycle_triple,
        "star": star_triple,
        "path": path_triple,
    }
    if kind not in forms:
        raise ValidationError(f"unknown primitive kind {kind!r}")
    return forms[kind](params[0])


def wedge_triple(parts: list[TransmissionTriple]) -> TransmissionTriple:
    """One-point union of the parts at their roots.

    delta0 adds up; each part's delta gains cross-part paths through the
    shared root, counted as 2 * delta0_i * (other parts' non-root vertices).
    """
    if not parts:
        raise ValidationError("wedge needs at least one part")
    m = len(parts)
    size = sum(p.size for p in parts) - (m - 1)
    delta0 = sum(p.delta0 for p in parts)
    delta = sum(p.delta for p in parts)
    total = sum(p.size for p in parts)
    for p in parts:
        delta += 2 * p.delta0 * (total - p.size - (m - 1))
    return TransmissionTriple(size, delta, delta0)


def attach_root_triple(t: TransmissionTriple) -> TransmissionTriple:
    """Pendant vertex added at the root; the pendant is the new root.

    Every distance from the new root is one hop longer than from the old
    root, and the pendant adds one more vertex to reach.
    """
    return TransmissionTriple(
        t.size + 1,
        t.delta + 2 * t.delta0 + 2 * t.size,
        t.delta0 + t.size,
    )


def rooted_product_triple(
    g: TransmissionTriple, h: TransmissionTriple
) -> TransmissionTriple:
    """Rooted product: one copy of h at its root on every vertex of g."""
    size = g.size * h.size
    delta = g.size * h.delta + 2 * g.size * (g.size - 1) * h.size * h.delta0 + h.size**2 * g.delta
    delta0 = h.size * g.delta0 + g.size * h.delta0
    return TransmissionTriple(size, delta, delta0)


def tree_triple(arity: int, depth: int) -> TransmissionTriple:
    """Perfect tree, by iterating the level recurrence from a single vertex.

    Each level wedges ``arity`` pendant-rooted copies of the previous tree;
    this is integer-only and valid for arity 1 (a path) as well.
    """
    if arity < 1:
        raise ValidationError(f"tree arity must be >= 1, got {arity}")
    if depth < 0:
        raise ValidationError(f"tree depth must be >= 0, got {depth}")
    t = SINGLE_VERTEX
    for _ in range(depth):
        t = wedge_triple([attach_root_triple(t)] * arity)
    return t


def tree_closed_forms(arity: int, depth: int) -> tuple[int, int, int]:
    """Closed forms for the perfect tree: (delta, delta0, delta0 of the
    pendant-rooted tree).

    Only defined for arity >= 2; the denominators vanish at arity 1, where
    :func:`tree_triple` remains the computation path.
    """
    if arity < 2:
        raise ValidationError(
            f"closed forms divide by (arity - 1)^2, need arity >= 2, got {arity}"
        )
    if depth < 0:
        raise ValidationError(f"tree depth must be >= 0, got {depth}")
    n, k = arity, depth
    den = (n - 1) ** 2
    geometric = exact_div(n**k - 1, n - 1)
    delta = exact_div(2 * n ** (k + 1) * (k * n ** (k + 1) + k - 2 * n * geometric), den)
    delta0 = exact_div(k * n ** (k + 2) - (k + 1) * n ** (k + 1) + n, den)
    delta0_attached = exact_div((k + 1) * n ** (k + 2) - (k + 2) * n ** (k + 1) + 1, den)
    return delta, delta0, delta0_attached


def power_coefficients(n: int, k: int) -> tuple[int, int]:
    """Coefficients (a_k, b_k) with delta(G^k) = a_k * delta + b_k * delta0,
    where n = |G|.

    Computed by the recurrence a_1 = 1, a_{k+1} = n^k + n^2 a_k and
    b_1 = 0, b_{k+1} = 2 n^{k+1} (n^k - 1) + n^2 b_k, which is integer-only
    and valid at n = 1.
    """
    if n < 1:
        raise ValidationError(f"base size must be >= 1, got {n}")
    if k < 1:
        raise ValidationError(f"power exponent must be >= 1, got {k}")
    a, b = 1, 0
    for j in range(1, k):
        a = n**j + n**2 * a
        b = 2 * n ** (j + 1) * (n**j - 1) + n**2 * b
    return a, b


def power_coefficients_closed_form(n: int, k: int) -> tuple[int, int]:
    """Closed forms for (a_k, b_k); requires n >= 2 (they divide by n - 1)."""
    if n < 2:
        raise ValidationError(
            f"closed forms divide by n - 1, need n >= 2, got {n}"
        )
    if k < 1:
        raise ValidationError(f"power exponent must be >= 1, got {k}")
    a = n ** (k - 1) * exact_div(n**k - 1, n - 1)
    b = 2 * (k - 1) * n ** (2 * k - 1) - 2 * n**k * exact_div(n ** (k - 1) - 1, n - 1)
    return a, b


def power_triple(base: TransmissionTriple, k: int) -> TransmissionTriple:
    """k-fold rooted product of a graph with itself."""
    if k < 1:
        raise ValidationError(f"power exponent must be >= 1, got {k}")
    n = base.size
    a, b = power_coefficients(n, k)
    size = n**k
    delta = a * base.delta + b * base.delta0
    delta0 = k * n ** (k - 1) * base.delta0
    return TransmissionTriple(size, delta, delta0)


def gf_series(arity: int, terms: int) -> SeriesTerms:
    """Tree transmissions as generating-series coefficients.

    The series 2 n^2 / ((1 - nx)^2 (1 - n^2 x)^2) generates the deltas of
    the depth-(k+1) perfect trees; the coefficient of x^k is computed by
    exact convolution of the two factor series (i+1) n^i and (j+1) n^{2j}.
    """
    if arity < 2:
        raise ValidationError(f"series arity must be >= 2, got {arity}")
    if terms < 1:
        raise ValidationError(f"series needs at least one term, got {terms}")
    n = arity
    first = [(i + 1) * n**i for i in range(terms)]
    second = [(j + 1) * n ** (2 * j) for j in range(terms)]
    coefficients = tuple(
        2 * n**2 * sum(first[i] * second[k - i] for i in range(k + 1))
        for k in range(terms)
    )
    return SeriesTerms(arity, coefficients)


def evaluate_expr(expr: TopologyExpr) -> TransmissionTriple:
    """Bottom-up closed-form evaluation of a validated expression."""
    dsl.require_valid(expr)
    return _evaluate(expr)


def _evaluate(expr: TopologyExpr) -> TransmissionTriple:
    if isinstance(expr, dsl.Complete):
        return complete_triple(expr.n)
    if isinstance(expr, dsl.Cycle):
        return cycle_triple(expr.n)
    if isinstance(expr, dsl.Star):
        return star_triple(expr.n)
    if isinstance(expr, dsl.Path):
        return path_triple(expr.n)
    if isinstance(expr, dsl.Mesh):
        return mesh_triple(expr.dims)
    if isinstance(expr, dsl.Tree):
        return tree_triple(expr.arity, expr.depth)
    if isinstance(expr, dsl.Wedge):
        return wedge_triple([_evaluate(c) for c in expr.children])
    if isinstance(expr, dsl.RootedProduct):
        return rooted_product_triple(_evaluate(expr.left), _evaluate(expr.right))
    if isinstance(expr, dsl.Power):
        return power_triple(_evaluate(expr.base), expr.exponent)
    if isinstance(expr, dsl.Attach):
        return attach_root_triple(_evaluate(expr.child))
    raise ValidationError(f"unknown expression node {expr!r}")
