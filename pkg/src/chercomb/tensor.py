"""Splitting an adjacency-free family along residues.

Because added residues are pairwise non-adjacent, a member splits into one
single-residue member per active residue (delete the added nodes of every
other residue), tableaux split by restriction, degrees add up, and the
decomposition matrix is the entrywise product of the single-residue
matrices.  factor_check verifies the last two statements exhaustively with
both sides computed independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gamma import GammaContext, build_gamma_set
from .laurent import LaurentPoly
from .partitions import Multipartition
from .peeling import gamma_peel_matrix
from .tableaux import Tableau, enumerate_sstd


@dataclass
class FactoredContext:
    parent: GammaContext
    children: dict[int, GammaContext] = field(default_factory=dict)

    @property
    def active_residues(self) -> list[int]:
        return sorted(self.children)


def factor_context(gctx: GammaContext) -> FactoredContext:
    children = {}
    for r, m in sorted(gctx.multiset.items()):
        if m == 0:
            continue
        children[r] = build_gamma_set(gctx.gamma, [r], {r: m}, gctx.ctx)
    return FactoredContext(gctx, children)


def psi_multipartition(lam: Multipartition, fctx: FactoredContext) -> dict[int, Multipartition]:
    """Per active residue, keep only that residue's added nodes on the base."""
    gctx = fctx.parent
    gctx.require(lam)
    out = {}
    for r in fctx.active_residues:
        out[r] = gctx.gamma.with_nodes(gctx.added_nodes(lam, r))
    return out


def psi_inverse(parts: dict[int, Multipartition], fctx: FactoredContext) -> Multipartition:
    gctx = fctx.parent
    nodes = []
    for r, lam_r in parts.items():
        nodes.extend(fctx.children[r].added_nodes(lam_r, r))
    return gctx.gamma.with_nodes(nodes)


def psi_tableau(tab: Tableau, fctx: FactoredContext) -> dict[int, Tableau]:
    """Restrict a base-pinned tableau to each residue factor."""
    parts_shape = psi_multipartition(tab.shape, fctx)
    parts_weight = psi_multipartition(tab.weight, fctx)
    gctx = fctx.parent
    out = {}
    for r in fctx.active_residues:
        mapping = {node: node for node in gctx.gamma.nodes()}
        for node in gctx.added_nodes(tab.shape, r):
            mapping[node] = tab.mapping[node]
        out[r] = Tableau(parts_shape[r], parts_weight[r], mapping)
    return out


@dataclass
class FactorReport:
    ok: bool
    pairs_checked: int
    tableaux_checked: int
    failure: str | None = None


def factor_check(fctx: FactoredContext, degree_mode: str = "geometric") -> FactorReport:
    """Verify degree additivity and matrix factorization over every pair.

    Both sides are computed independently: the left from the full context,
    the right from the per-residue contexts, with no shared caches.
    """
    gctx = fctx.parent
    ctx = gctx.ctx
    pairs = 0
    tableaux = 0

    # degree additivity, tableau by tableau, with a count cross-check
    for lam in gctx.elements:
        for mu in gctx.elements:
            tabs = enumerate_sstd(lam, mu, ctx, gctx)
            pairs += 1
            split_counts = 1
            split_sets = {}
            for r in fctx.active_residues:
                child = fctx.children[r]
                parts_l = psi_multipartition(lam, fctx)[r]
                parts_m = psi_multipartition(mu, fctx)[r]
                split_sets[r] = enumerate_sstd(parts_l, parts_m, ctx, child)
                split_counts *= len(split_sets[r])
            if split_counts != len(tabs):
                return FactorReport(
                    False,
                    pairs,
                    tableaux,
                    f"tableau count mismatch at ({lam}, {mu}): "
                    f"{len(tabs)} vs product {split_counts}",
                )
            for tab in tabs:
                tableaux += 1
                factors = psi_tableau(tab, fctx)
                total = sum(factors[r].degree(ctx) for r in fctx.active_residues)
                if total != tab.degree(ctx):
                    return FactorReport(
                        False,
                        pairs,
                        tableaux,
                        f"degree additivity fails at ({lam}, {mu}): "
                        f"{tab.degree(ctx)} != {total}",
                    )

    # decomposition-matrix factorization
    full = gamma_peel_matrix(gctx, degree_mode=degree_mode)
    children_matrices = {
        r: gamma_peel_matrix(fctx.children[r], degree_mode=degree_mode)
        for r in fctx.active_residues
    }
    for lam in gctx.elements:
        parts_l = psi_multipartition(lam, fctx)
        for mu in gctx.elements:
            parts_m = psi_multipartition(mu, fctx)
            product = LaurentPoly.one()
            for r in fctx.active_residues:
                product = product * children_matrices[r].entry(parts_l[r], parts_m[r])
            if full.entry(lam, mu) != product:
                return FactorReport(
                    False,
                    pairs,
                    tableaux,
                    f"matrix factorization fails at ({lam}, {mu}): "
                    f"{full.entry(lam, mu)} != {product}",
                )
    return FactorReport(True, pairs, tableaux)
