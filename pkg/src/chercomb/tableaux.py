"""Semistandard tableaux between multipartitions and their degrees.

A tableau of shape lambda and weight mu assigns to every node of lambda a
point of mu's loading with the same residue.  Semistandardness is three
exact-coordinate inequalities.  The degree of a tableau is the signed
crossing count of the monotone strand diagram that joins each lambda-node
coordinate (south) to its assigned mu-coordinate (north):

  * two strands of equal residue crossing:          -2
  * black strand over a ghost one residue down:     +1
  * black strand over a red line of its residue:    +1

Ghosts are strands shifted left by the scale g; monotone strands with no
bigons cross if and only if their endpoints interleave, so the count is
well-defined without drawing anything.
"""

from __future__ import annotations

from .gamma import GammaContext
from .laurent import LaurentPoly
from .loadings import loading_of, residue_multiset
from .params import ParamContext
from .partitions import Multipartition, Node


class ContextMismatch(ValueError):
    pass


class Tableau:
    """A residue-preserving bijection from nodes of the shape to nodes of
    the weight, stored node-to-node via loading provenance."""

    __slots__ = ("shape", "weight", "mapping", "_degree")

    def __init__(self, shape, weight, mapping, degree=None):
        self.shape = shape
        self.weight = weight
        self.mapping = mapping
        self._degree = degree

    def __eq__(self, other):
        return (
            isinstance(other, Tableau)
            and self.shape == other.shape
            and self.weight == other.weight
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash((self.shape, self.weight, frozenset(self.mapping.items())))

    def __repr__(self):
        moved = {str(a): str(b) for a, b in sorted(self.mapping.items()) if a != b}
        return f"Tableau({self.shape} -> {self.weight}, moved={moved})"

    def target(self, node: Node) -> Node:
        return self.mapping[node]

    def degree(self, ctx: ParamContext) -> int:
        if self._degree is None:
            self._degree = tableau_degree(self, ctx)
        return self._degree

    def entry_coord(self, node: Node, ctx: ParamContext):
        return ctx.node_coord(self.mapping[node])

    def is_residue_preserving(self, ctx: ParamContext) -> bool:
        return all(
            ctx.residue_of(a) == ctx.residue_of(b) for a, b in self.mapping.items()
        )

    def is_semistandard(self, ctx: ParamContext) -> bool:
        """Direct check of the three defining inequalities."""
        g = ctx.g
        for node in self.shape.nodes():
            v = self.entry_coord(node, ctx)
            r, c, k = node
            if r == 1 and c == 1 and not v > ctx.red_line(k):
                return False
            if r > 1:
                up = self.entry_coord(Node(r - 1, c, k), ctx)
                if not v > up.shift(g):
                    return False
            if c > 1:
                left = self.entry_coord(Node(r, c - 1, k), ctx)
                if not v > left.shift(-g):
                    return False
        return True


def identity_tableau(lam: Multipartition) -> Tableau:
    mapping = {node: node for node in lam.nodes()}
    return Tableau(lam, lam, mapping, degree=0)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def enumerate_sstd(lam, mu, ctx: ParamContext, gctx: GammaContext | None = None):
    """All semistandard tableaux of shape lam and weight mu.

    With a GammaContext the base nodes are pinned in place and only the
    added nodes are matched (to weakly-right targets), which keeps the
    search small however large the base is; the two modes agree wherever
    both apply.
    """
    if gctx is not None:
        return _enumerate_restricted(lam, mu, gctx)
    return _enumerate_general(lam, mu, ctx)


def _enumerate_general(lam, mu, ctx):
    if lam.size != mu.size or residue_multiset(lam, ctx) != residue_multiset(mu, ctx):
        return []
    weight_loading = loading_of(mu, ctx)
    by_res: dict[int, list[Node]] = {}
    for c, r in weight_loading.points:
        by_res.setdefault(r, []).append(weight_loading.node_at(c))

    cells = sorted(lam.nodes(), key=lambda n: ctx.node_coord(n))
    g = ctx.g
    assignment: dict[Node, Node] = {}
    used: set[Node] = set()
    results: list[Tableau] = []

    def ok(cell: Node, value: Node) -> bool:
        v = ctx.node_coord(value)
        r, c, k = cell
        if r == 1 and c == 1 and not v > ctx.red_line(k):
            return False
        up = Node(r - 1, c, k)
        if r > 1 and up in assignment:
            if not v > ctx.node_coord(assignment[up]).shift(g):
                return False
        left = Node(r, c - 1, k)
        if c > 1 and left in assignment:
            if not v > ctx.node_coord(assignment[left]).shift(-g):
                return False
        down = Node(r + 1, c, k)
        if down in assignment:
            if not ctx.node_coord(assignment[down]) > v.shift(g):
                return False
        right = Node(r, c + 1, k)
        if right in assignment:
            if not ctx.node_coord(assignment[right]) > v.shift(-g):
                return False
        return True

    def search(i: int):
        if i == len(cells):
            results.append(Tableau(lam, mu, dict(assignment)))
            return
        cell = cells[i]
        for value in by_res.get(ctx.residue_of(cell), ()):
            if value in used or not ok(cell, value):
                continue
            assignment[cell] = value
            used.add(value)
            search(i + 1)
            del assignment[cell]
            used.discard(value)

    search(0)
    return results


def iter_index_bijections(sources, targets):
    """Bijections f between two equal-size ascending index tuples with
    f(s) >= s, yielded as tuples of (source, target) pairs."""
    if len(sources) != len(targets):
        return
    n = len(sources)

    def rec(i, remaining):
        if i == n:
            yield ()
            return
        s = sources[i]
        for j, t in enumerate(remaining):
            if t >= s:
                rest = remaining[:j] + remaining[j + 1 :]
                for tail in rec(i + 1, rest):
                    yield ((s, t),) + tail

    yield from rec(0, tuple(targets))


def _enumerate_restricted(lam, mu, gctx: GammaContext):
    gctx.require(lam)
    gctx.require(mu)
    src = gctx.added_positions(lam)
    dst = gctx.added_positions(mu)
    residues = sorted(r for r in src if src[r])
    per_residue = []
    for r in residues:
        options = list(iter_index_bijections(src[r], dst[r]))
        if not options:
            return []
        per_residue.append((r, options))

    base_mapping = {node: node for node in gctx.gamma.nodes()}
    results = []

    def build(i, mapping):
        if i == len(per_residue):
            results.append(Tableau(lam, mu, dict(mapping)))
            return
        r, options = per_residue[i]
        nodes = gctx.addable[r]
        for pairs in options:
            for s, t in pairs:
                mapping[nodes[s - 1]] = nodes[t - 1]
            build(i + 1, mapping)
            for s, t in pairs:
                del mapping[nodes[s - 1]]

    build(0, base_mapping)
    return results


# ---------------------------------------------------------------------------
# degree
# ---------------------------------------------------------------------------


def tableau_degree(tab: Tableau, ctx: ParamContext) -> int:
    """Signed crossing count of the minimal monotone diagram of the tableau."""
    strands = []
    for node, target in tab.mapping.items():
        strands.append(
            (ctx.node_coord(node), ctx.node_coord(target), ctx.residue_of(node))
        )
    moving = [s for s in strands if s[0] != s[1]]
    vertical = [s for s in strands if s[0] == s[1]]
    if not moving:
        return 0
    g = ctx.g
    deg = 0

    # strand pairs of equal residue: -2 per crossing; pairs of verticals
    # are parallel and skipped
    for i, a in enumerate(moving):
        for b in moving[i + 1 :]:
            if a[2] == b[2] and _cross(a[0], a[1], b[0], b[1]):
                deg -= 2
        for b in vertical:
            if a[2] == b[2] and _cross(a[0], a[1], b[0], b[1]):
                deg -= 2

    # black strand x over ghost of y: +1 when res(y) = res(x) - 1; a strand
    # is parallel to its own ghost and to every other vertical's ghost
    def ghost_hits(x, y) -> bool:
        return ctx.residue(x[2] - 1) == y[2] and _cross(
            x[0], x[1], y[0].shift(-g), y[1].shift(-g)
        )

    for i, x in enumerate(moving):
        for j, y in enumerate(moving):
            if i != j and ghost_hits(x, y):
                deg += 1
        for y in vertical:
            if ghost_hits(x, y):
                deg += 1
    for x in vertical:
        for y in moving:
            if ghost_hits(x, y):
                deg += 1

    # black strand over a red line of its own residue: +1
    for a in moving:
        for k in range(1, ctx.level + 1):
            if a[2] != ctx.multicharge[k - 1]:
                continue
            red = ctx.red_line(k)
            if (a[0] < red) != (a[1] < red):
                deg += 1

    return deg


def _cross(s1, t1, s2, t2) -> bool:
    return (s1 < s2) != (t1 < t2)


def index_pair_degree(pairs_by_residue) -> int:
    """Degree of a base-pinned tableau from its added-node index pairs alone.

    Each strand climbing from addable slot s to slot t passes t - s visible
    diagonals (+1 each, invisible ones are free), and every same-residue
    interleaving pair of strands costs a -2 crossing.
    """
    deg = 0
    for pairs in pairs_by_residue.values():
        for s, t in pairs:
            deg += t - s
        for i in range(len(pairs)):
            for j in range(i + 1, len(pairs)):
                s1, t1 = pairs[i]
                s2, t2 = pairs[j]
                if (s1 < s2) != (t1 < t2):
                    deg -= 2
    return deg


def tableau_index_pairs(tab: Tableau, gctx: GammaContext):
    """Added-node index pairs of a base-pinned tableau, per residue."""
    out: dict[int, list[tuple[int, int]]] = {}
    for r, positions in gctx.added_positions(tab.shape).items():
        nodes = gctx.addable[r]
        slot = {node: i for i, node in enumerate(nodes, start=1)}
        pairs = []
        for s in positions:
            target = tab.mapping[nodes[s - 1]]
            pairs.append((s, slot[target]))
        if pairs:
            out[r] = pairs
    return out


# ---------------------------------------------------------------------------
# graded characters
# ---------------------------------------------------------------------------


def delta_character(
    lam,
    mu,
    ctx: ParamContext,
    gctx: GammaContext | None = None,
    degree_mode: str = "geometric",
) -> LaurentPoly:
    """Graded dimension of the mu-weight space of the standard module of lam:
    the sum of t^deg(T) over semistandard tableaux."""
    if degree_mode == "fast":
        if gctx is None:
            raise ContextMismatch("fast degree mode needs a GammaContext")
        return _delta_character_fast(lam, mu, gctx)
    coeffs: dict[int, int] = {}
    for tab in enumerate_sstd(lam, mu, ctx, gctx):
        d = tab.degree(ctx)
        coeffs[d] = coeffs.get(d, 0) + 1
    return LaurentPoly(coeffs)


def _delta_character_fast(lam, mu, gctx: GammaContext) -> LaurentPoly:
    """Character via index combinatorics only (single-residue contexts).

    Justified by the degree-preservation of the slot-indexed transport; the
    geometric path stays available as the reference implementation and the
    two are cross-checked in the test suite.
    """
    if not gctx.single_residue:
        raise ContextMismatch("fast degree mode is limited to single-residue contexts")
    gctx.require(lam)
    gctx.require(mu)
    if lam == mu:
        return LaurentPoly.one()
    r = gctx.residue
    src = gctx.added_positions(lam)[r]
    dst = gctx.added_positions(mu)[r]
    coeffs: dict[int, int] = {}
    for pairs in iter_index_bijections(src, dst):
        d = index_pair_degree({r: pairs})
        coeffs[d] = coeffs.get(d, 0) + 1
    return LaurentPoly(coeffs)
