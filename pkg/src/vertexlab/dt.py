"""Enumeration of box stacks asymptotic to a partition triple (the DT side).

A configuration is the minimal order ideal (the three positive legs plus all
overlap boxes) together with a finite set of extra boxes; its weight is
|extras| - |II| - 2|III|.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .partitions import Partition
from .qseries import LaurentSeries
from .regions import Box, RegionClassifier, in_octant, predecessors, successors


class WindowOverflowError(Exception):
    """An addable box reached the internal coordinate cap."""


class DtConfiguration:
    """Minimal ideal plus finitely many extra boxes."""

    __slots__ = ("extras", "classifier")

    def __init__(self, extras: Iterable[Box], classifier: RegionClassifier):
        object.__setattr__(self, "extras", frozenset(extras))
        object.__setattr__(self, "classifier", classifier)
        for b in self.extras:
            assert in_octant(b) and not classifier.in_base(b)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("DtConfiguration is immutable")

    def contains(self, b: Box) -> bool:
        return self.classifier.in_base(b) or b in self.extras

    def weight(self) -> int:
        return len(self.extras) + self.classifier.w_min()

    def is_order_ideal(self) -> bool:
        return all(
            self.contains(p)
            for b in self.extras
            for p in predecessors(b)
            if in_octant(p)
        )

    def __eq__(self, other):
        if not isinstance(other, DtConfiguration):
            return NotImplemented
        return self.extras == other.extras and self.classifier.mus == other.classifier.mus

    def __hash__(self):
        return hash((self.extras, self.classifier.mus))


def minimal_dt(classifier: RegionClassifier) -> DtConfiguration:
    cfg = DtConfiguration(frozenset(), classifier)
    # the base is a union of order ideals, hence an order ideal itself;
    # spot-check inside the scan box.
    L = classifier.scan_bound()
    for x in range(L):
        for y in range(L):
            for z in range(L):
                if classifier.in_base((x, y, z)):
                    for p in predecessors((x, y, z)):
                        if in_octant(p):
                            assert classifier.in_base(p)
    return cfg


def weight(cfg: DtConfiguration) -> int:
    return cfg.weight()


def _base_addable(classifier: RegionClassifier) -> List[Box]:
    """Boxes outside the base whose octant predecessors all lie in the base."""
    M = classifier.scan_bound()
    out = []
    for x in range(M + 1):
        for y in range(M + 1):
            for z in range(M + 1):
                b = (x, y, z)
                if classifier.in_base(b):
                    continue
                if all(not in_octant(p) or classifier.in_base(p) for p in predecessors(b)):
                    out.append(b)
    return sorted(out)


def _addable(
    classifier: RegionClassifier,
    extras: FrozenSet[Box],
    base_addable: List[Box],
    cap: int,
    window: Optional[int],
) -> List[Box]:
    def in_config(b: Box) -> bool:
        return classifier.in_base(b) or b in extras

    cands = set(b for b in base_addable if b not in extras)
    for e in extras:
        for s in successors(e):
            if not in_config(s):
                cands.add(s)
    out = []
    for c in sorted(cands):
        if not all(not in_octant(p) or in_config(p) for p in predecessors(c)):
            continue
        if max(c) >= cap:
            raise WindowOverflowError(
                f"addable box {c} touches the coordinate cap {cap}"
            )
        if window is not None and max(c) > window:
            continue
        out.append(c)
    return out


def enumerate_dt(
    classifier: RegionClassifier,
    k_max: int,
    window: Optional[int] = None,
) -> Dict[int, List[DtConfiguration]]:
    """All configurations with at most k_max extra boxes, grouped by |extras|.

    Breadth-first layering with dedup; provably complete because removing a
    maximal extra box of any ideal yields an ideal one layer down.  `window`
    restricts extras to coordinates <= window (for dimer-window truncation).
    """
    base_addable = _base_addable(classifier)
    cap = classifier.scan_bound() + k_max + 1
    if window is not None:
        cap = max(cap, window + 2)
    layers: Dict[int, List[DtConfiguration]] = {0: [DtConfiguration(frozenset(), classifier)]}
    frontier = {frozenset()}
    for k in range(1, k_max + 1):
        nxt = set()
        for extras in frontier:
            for c in _addable(classifier, extras, base_addable, cap, window):
                nxt.add(extras | {c})
        if not nxt:
            layers[k] = []
            frontier = set()
            continue
        layers[k] = [DtConfiguration(e, classifier) for e in sorted(nxt, key=sorted)]
        frontier = nxt
    return layers


def enumerate_dt_dfs_counts(classifier: RegionClassifier, k_max: int) -> List[int]:
    """Canonical-order DFS counter; must agree with the BFS layering."""
    base_addable = _base_addable(classifier)
    cap = classifier.scan_bound() + k_max + 1
    counts = [0] * (k_max + 1)

    def canonical_last(extras: FrozenSet[Box]) -> Box:
        def in_config(b):
            return classifier.in_base(b) or b in extras
        removable = [
            e for e in extras
            if not any(s in extras for s in successors(e))
        ]
        return max(removable)

    def rec(extras: FrozenSet[Box]):
        k = len(extras)
        counts[k] += 1
        if k == k_max:
            return
        for c in _addable(classifier, extras, base_addable, cap, None):
            nxt = extras | {c}
            if canonical_last(nxt) == c:
                rec(nxt)

    rec(frozenset())
    return counts


def dt_counts(classifier: RegionClassifier, k_max: int, window: Optional[int] = None) -> List[int]:
    layers = enumerate_dt(classifier, k_max, window)
    return [len(layers.get(k, [])) for k in range(k_max + 1)]


def dt_vertex(mu1: Partition, mu2: Partition, mu3: Partition, n: int) -> LaurentSeries:
    """Truncated generating function sum q^{weight}; order n (exponents < n valid)."""
    cl = RegionClassifier(mu1, mu2, mu3)
    w_min = cl.w_min()
    if n <= w_min:
        raise ValueError(f"order {n} at or below the minimal weight {w_min}")
    k_max = n - 1 - w_min
    counts = dt_counts(cl, k_max)
    return LaurentSeries(w_min, counts, n)
