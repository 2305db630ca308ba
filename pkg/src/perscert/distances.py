"""Exact bottleneck distance between barcodes and the stability cross-checks
tying barcodes to interleaving certificates.

Every candidate optimum lies in the finite set of pairwise endpoint
differences and half-lengths, so the threshold scan below is exact; no
floating point is involved anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ValidationError
from .invariants import Bar, Barcode, barcode, homology_cert
from .persist import (
    InterleavingCert,
    check_interleaving,
    interleaving_distance_search,
)


INFINITY = None  # sentinel for infinite distances / deaths


@dataclass
class Matching:
    """A partial bijection between two barcodes; unmatched bars are deleted
    to the diagonal at half their length."""

    pairs: list[tuple[int, int]]
    deleted_left: list[int]
    deleted_right: list[int]

    def cost(self, b1: Barcode, b2: Barcode) -> Optional[Fraction]:
        worst = Fraction(0)
        for i, j in self.pairs:
            c = match_cost(b1.bars[i], b2.bars[j])
            if c is INFINITY:
                return INFINITY
            worst = max(worst, c)
        for i in self.deleted_left:
            h = b1.bars[i].half_length()
            if h is None:
                return INFINITY
            worst = max(worst, h)
        for j in self.deleted_right:
            h = b2.bars[j].half_length()
            if h is None:
                return INFINITY
            worst = max(worst, h)
        return worst


def match_cost(a: Bar, b: Bar) -> Optional[Fraction]:
    """L-infinity endpoint distance; infinite-death bars only match each
    other, at the birth difference."""
    if (a.death is None) != (b.death is None):
        return INFINITY
    if a.death is None:
        return abs(a.birth - b.birth)
    return max(abs(a.birth - b.birth), abs(a.death - b.death))


def _max_bipartite_matching(n_left: int, n_right: int, adj: list[list[int]]) -> list[int]:
    """Simple augmenting-path matching; returns match_right (-1 when free)."""
    match_right = [-1] * n_right
    match_left = [-1] * n_left

    def augment(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] == -1 or augment(match_right[v], seen):
                    match_right[v] = u
                    match_left[u] = v
                    return True
        return False

    for u in range(n_left):
        augment(u, [False] * n_right)
    return match_left


def _feasible(b1: Barcode, b2: Barcode, t: Fraction) -> Optional[Matching]:
    """Perfect matching test at threshold t, with one diagonal slot per bar."""
    n1, n2 = len(b1.bars), len(b2.bars)
    # left nodes: bars of b1, then n2 diagonal slots (one per right bar);
    # right nodes: bars of b2, then n1 diagonal slots. Diagonal-to-diagonal
    # is always allowed at zero cost.
    adj: list[list[int]] = []
    for i, bar in enumerate(b1.bars):
        row = [j for j, other in enumerate(b2.bars)
               if (c := match_cost(bar, other)) is not INFINITY and c <= t]
        h = bar.half_length()
        if h is not None and h <= t:
            row.extend(range(n2, n2 + n1))
        adj.append(row)
    for j, bar in enumerate(b2.bars):
        h = bar.half_length()
        row = []
        if h is not None and h <= t:
            row.append(j)
        row.extend(range(n2, n2 + n1))
        adj.append(row)

    match_left = _max_bipartite_matching(n1 + n2, n2 + n1, adj)
    if any(v == -1 for v in match_left):
        return None
    pairs = [(i, match_left[i]) for i in range(n1) if match_left[i] < n2]
    deleted_left = [i for i in range(n1) if match_left[i] >= n2]
    matched_right = {j for _, j in pairs}
    deleted_right = [j for j in range(n2) if j not in matched_right]
    return Matching(pairs, deleted_left, deleted_right)


def bottleneck(b1: Barcode, b2: Barcode) -> tuple[Optional[Fraction], Optional[Matching]]:
    """Exact bottleneck distance with an optimal matching; None means
    infinity (mismatched counts of infinite bars)."""
    inf1 = sum(1 for b in b1.bars if b.death is None)
    inf2 = sum(1 for b in b2.bars if b.death is None)
    if inf1 != inf2:
        return INFINITY, None
    thresholds = {Fraction(0)}
    for a in b1.bars:
        h = a.half_length()
        if h is not None:
            thresholds.add(h)
        for b in b2.bars:
            c = match_cost(a, b)
            if c is not INFINITY:
                thresholds.add(c)
    for b in b2.bars:
        h = b.half_length()
        if h is not None:
            thresholds.add(h)
    for t in sorted(thresholds):
        matching = _feasible(b1, b2, t)
        if matching is not None:
            return t, matching
    return INFINITY, None


def bottleneck_bruteforce(b1: Barcode, b2: Barcode) -> Optional[Fraction]:
    """Oracle: enumerate every partial bijection. Exponential; tests only."""
    n1, n2 = len(b1.bars), len(b2.bars)
    best = INFINITY
    idx2 = list(range(n2))
    for k in range(min(n1, n2) + 1):
        for left in itertools.combinations(range(n1), k):
            for right in itertools.permutations(idx2, k):
                matching = Matching(
                    list(zip(left, right)),
                    [i for i in range(n1) if i not in left],
                    [j for j in idx2 if j not in right],
                )
                c = matching.cost(b1, b2)
                if c is INFINITY:
                    continue
                if best is INFINITY or c < best:
                    best = c
    return best


# -- stability cross-checks ---------------------------------------------------


@dataclass
class StabilityReport:
    holds: bool
    bound: Optional[Fraction]      # the interleaving bound (max of the shifts)
    distance: Optional[Fraction]   # d_B of the degree-n barcodes
    barcode_x: Barcode = None
    barcode_y: Barcode = None
    matching: Optional[Matching] = None
    module_cert_valid: bool = False


def stability_audit(cert: InterleavingCert, n: int) -> StabilityReport:
    """Push a complex-level interleaving through degree-n homology and check
    the algebraic stability inequality d_B <= delta on the barcodes."""
    report = check_interleaving(cert)
    if not report.valid:
        raise ValidationError(f"input certificate invalid: {report.reason}")
    mod_cert = homology_cert(cert, n)
    mod_report = check_interleaving(mod_cert)
    bx = barcode(mod_cert.f.source)
    by = barcode(mod_cert.f.target)
    d, matching = bottleneck(bx, by)
    bound = max(cert.epsilon.coords[0], cert.delta.coords[0])
    holds = mod_report.valid and d is not INFINITY and d <= bound
    return StabilityReport(holds, bound, d, bx, by, matching, mod_report.valid)


@dataclass
class CrosscheckReport:
    holds: bool
    bottleneck_distance: Optional[Fraction]
    certified_delta: Optional[Fraction]
    certificate: Optional[InterleavingCert] = None


def module_distance_crosscheck(f, g, budget: int = 200_000) -> CrosscheckReport:
    """d_B of the barcodes against the least certified interleaving delta of
    two persistent modules; stability demands d_B <= delta."""
    bx = barcode(f)
    by = barcode(g)
    d, _ = bottleneck(bx, by)
    result = interleaving_distance_search(f, g, budget=budget)
    if result.distance is None:
        holds = True  # d_B <= infinity always
    elif d is INFINITY:
        holds = False
    else:
        holds = d <= result.distance
    return CrosscheckReport(holds, d, result.distance, result.certificate)
