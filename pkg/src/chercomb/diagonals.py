"""Diagonals of a fixed residue, their brick decomposition, and the signed
symbol sequence that fingerprints a subquotient up to graded isomorphism.

For an admissible base multipartition, each diagonal carrying the working
residue decomposes into one bottom brick (left of, right of, or centred on
its red line), a stack of full middle bricks, and, when the diagonal has no
addable node of the residue, a single top brick containing whichever
neighbour the top node kept.  The sequence of signed symbols, read in
x-order across all components, is the fingerprint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coords import ExactCoord
from .gamma import removable_nodes
from .params import ParamContext
from .partitions import Multipartition, Node

LEFT, RIGHT, CENTRE = 4, 5, 6  # bottom-brick kinds, by side of the red line
VISIBLE, TOP_LOWER, TOP_UPPER = 0, 2, 3  # top kinds: none, kept lower / upper neighbour


class DiagonalModelViolation(ValueError):
    """The base multipartition has a removable node of the working residue."""


@dataclass(frozen=True)
class IDiagonal:
    comp: int
    offset: int  # r - c of the residue-i positions
    nodes: tuple[Node, ...]  # the i-nodes, bottom to top
    visible: bool
    side: int  # LEFT / RIGHT / CENTRE
    top_kind: int  # VISIBLE / TOP_LOWER / TOP_UPPER
    x: ExactCoord

    @property
    def b1(self) -> int:
        return len(self.nodes) if self.visible else len(self.nodes) - 1

    @property
    def sign(self) -> int:
        return -1 if self.b1 % 2 else 1

    def brick_counts(self) -> dict[str, int]:
        counts = {f"b{k}": 0 for k in range(1, 7)}
        counts["b1"] = self.b1
        if not self.visible:
            counts["b2" if self.top_kind == TOP_LOWER else "b3"] = 1
        counts[f"b{self.side}"] = 1
        return counts


def i_diagonals(gamma: Multipartition, residue: int, ctx: ParamContext) -> list[IDiagonal]:
    """All diagonals of the given residue meeting the diagram or its addable
    nodes, in x-order."""
    r = ctx.residue(residue)
    bad = removable_nodes(gamma, ctx, [r])
    if bad:
        raise DiagonalModelViolation(
            f"{gamma} has removable nodes of residue {r}: {[str(n) for n in bad]}"
        )
    out = []
    for k in range(1, gamma.level + 1):
        out.extend(_component_diagonals(gamma, k, r, ctx))
    out.sort(key=lambda d: d.x)
    return out


def _component_diagonals(gamma, comp, residue, ctx):
    part = gamma.comps[comp - 1]
    rows = len(part)
    offsets = set()
    # offsets carrying residue-i nodes of the component
    for row, length in enumerate(part, start=1):
        if ctx.finite:
            kappa = ctx.multicharge[comp - 1]
            # columns c in 1..length with kappa + c - row = residue (mod e)
            first = (residue - kappa + row) % ctx.e
            if first == 0:
                first = ctx.e
            for col in range(first, length + 1, ctx.e):
                offsets.add(row - col)
        else:
            col = residue - ctx.multicharge[comp - 1] + row
            if 1 <= col <= length:
                offsets.add(row - col)
    # offsets whose next free slot is an addable node of the residue
    addable_offset = {}
    for row in range(1, rows + 2):
        node = Node(row, gamma.row_length(comp, row) + 1, comp)
        if gamma.is_addable(node) and ctx.residue_of(node) == residue:
            offsets.add(node.row - node.col)
            addable_offset[node.row - node.col] = node

    diagonals = []
    for offset in offsets:
        nodes = []
        row = offset + 1 if offset >= 0 else 1
        col = row - offset
        while gamma.contains(Node(row, col, comp)):
            nodes.append(Node(row, col, comp))
            row += 1
            col += 1
        addable = addable_offset.get(offset)
        if addable is None and not nodes:
            continue
        visible = addable is not None
        if visible:
            top_kind = VISIBLE
            anchor = addable
            eps = anchor.row + anchor.col - 2
        else:
            top = nodes[-1]
            has_upper = gamma.contains(Node(top.row, top.col + 1, comp))
            has_lower = gamma.contains(Node(top.row + 1, top.col, comp))
            # admissibility forces exactly one neighbour on an invisible top
            top_kind = TOP_UPPER if has_upper else TOP_LOWER
            eps = top.row + top.col
        side = CENTRE if offset == 0 else (LEFT if offset < 0 else RIGHT)
        base = ctx.theta[comp - 1] + ctx.g * offset
        diagonals.append(
            IDiagonal(
                comp=comp,
                offset=offset,
                nodes=tuple(nodes),
                visible=visible,
                side=side,
                top_kind=top_kind,
                x=ExactCoord(base, eps),
            )
        )
    return diagonals


# ---------------------------------------------------------------------------
# signed symbol sequences
# ---------------------------------------------------------------------------

EMPTY = "o"  # the formal symbol created by cancelling a pair


@dataclass(frozen=True)
class ChiSymbol:
    """One entry of the fingerprint: sign * d_kind^top, or a formal empty."""

    sign: int  # +1 / -1
    kind: int  # LEFT / RIGHT / CENTRE, or 0 for the formal empty
    top: int = 0  # VISIBLE / TOP_LOWER / TOP_UPPER

    @property
    def is_empty(self) -> bool:
        return self.kind == 0

    def __str__(self):
        if self.is_empty:
            return EMPTY if self.sign > 0 else "-" + EMPTY
        s = "+" if self.sign > 0 else "-"
        return f"{s}d{self.kind}^{self.top}"


def empty_symbol(sign: int = 1) -> ChiSymbol:
    return ChiSymbol(sign, 0, 0)


def symbol_of(diag: IDiagonal) -> ChiSymbol:
    return ChiSymbol(diag.sign, diag.side, diag.top_kind)


ChiSequence = tuple  # of ChiSymbol


def chi_sequence(gamma: Multipartition, residue: int, ctx: ParamContext) -> ChiSequence:
    return tuple(symbol_of(d) for d in i_diagonals(gamma, residue, ctx))


def format_chi(seq) -> str:
    return ",".join(str(s) for s in seq)


def parse_chi(text: str) -> ChiSequence:
    """Inverse of format_chi; accepts entries like +d4^0, -d6^2, o, -o."""
    out = []
    text = text.strip()
    if not text:
        return ()
    for raw in text.split(","):
        token = raw.strip()
        sign = 1
        if token.startswith(("+", "-")):
            sign = -1 if token[0] == "-" else 1
            token = token[1:]
        if token == EMPTY:
            out.append(empty_symbol(sign))
            continue
        if not token.startswith("d") or "^" not in token:
            raise ValueError(f"cannot parse symbol {raw!r}")
        kind_str, top_str = token[1:].split("^", 1)
        kind, top = int(kind_str), int(top_str)
        if kind not in (LEFT, RIGHT, CENTRE) or top not in (VISIBLE, TOP_LOWER, TOP_UPPER):
            raise ValueError(f"symbol {raw!r} out of range")
        out.append(ChiSymbol(sign, kind, top))
    return tuple(out)
