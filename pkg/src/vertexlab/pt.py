"""AB box configurations, their labelling algorithm, and the PT-side vertex.

A and B are finite box sets in the leg-overlap regions, closed under stacking
away from the origin.  The labelling propagates leg membership through
connected components; components touching two different legs kill the
configuration.
"""

from __future__ import annotations

from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .partitions import Partition
from .qseries import LaurentSeries
from .regions import (
    Box,
    RegionClassifier,
    in_octant,
    predecessors,
    successors,
)

SECTOR = "sector"
FREE = "free"


class AbConfiguration:
    """A pair of stacking-closed box sets (A in I-/III, B in II/III)."""

    __slots__ = ("a_boxes", "b_boxes", "classifier")

    def __init__(self, a_boxes: Iterable[Box], b_boxes: Iterable[Box], classifier: RegionClassifier):
        object.__setattr__(self, "a_boxes", frozenset(a_boxes))
        object.__setattr__(self, "b_boxes", frozenset(b_boxes))
        object.__setattr__(self, "classifier", classifier)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("AbConfiguration is immutable")

    def total(self) -> int:
        return len(self.a_boxes) + len(self.b_boxes)

    def __eq__(self, other):
        if not isinstance(other, AbConfiguration):
            return NotImplemented
        return (self.a_boxes, self.b_boxes, self.classifier.mus) == (
            other.a_boxes, other.b_boxes, other.classifier.mus)

    def __hash__(self):
        return hash((self.a_boxes, self.b_boxes, self.classifier.mus))

    def __repr__(self):
        return f"AbConfiguration(A={sorted(self.a_boxes)}, B={sorted(self.b_boxes)})"


class LabelResult:
    """Outcome of the component labelling: success with labelled components, or failure."""

    __slots__ = ("success", "components")

    def __init__(self, success: bool, components: Sequence[Tuple[FrozenSet[Box], Optional[Tuple]]]):
        object.__setattr__(self, "success", success)
        object.__setattr__(self, "components", tuple(components))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("LabelResult is immutable")

    def labels(self) -> List[Optional[Tuple]]:
        return [lab for _, lab in self.components]

    def free_components(self) -> List[FrozenSet[Box]]:
        return [c for c, lab in self.components if lab == (FREE,)]

    def __repr__(self):
        if not self.success:
            return "LabelResult(failure)"
        return f"LabelResult(success, {list(self.components)})"


def _a_region(cl: RegionClassifier, b: Box) -> bool:
    return cl.in_i_minus_or_iii(b)


def _b_region(cl: RegionClassifier, b: Box) -> bool:
    return cl.in_region_ii_or_iii(b)


def _closed(boxes: FrozenSet[Box], region) -> bool:
    # closure: any region box one step above a member must itself be a member
    for b in boxes:
        for s in successors(b):
            if region(s) and s not in boxes:
                return False
    return True


def is_ab_config(a_boxes: Iterable[Box], b_boxes: Iterable[Box],
                 classifier: RegionClassifier) -> bool:
    A = frozenset(a_boxes)
    B = frozenset(b_boxes)
    if not all(_a_region(classifier, b) for b in A):
        return False
    if not all(_b_region(classifier, b) for b in B):
        return False
    return _closed(A, lambda b: _a_region(classifier, b)) and _closed(
        B, lambda b: _b_region(classifier, b))


def _components(boxes: Set[Box]) -> List[FrozenSet[Box]]:
    """Connected components under face adjacency in Z^3."""
    remaining = set(boxes)
    out = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        stack = [seed]
        while stack:
            x, y, z = stack.pop()
            for nb in ((x + 1, y, z), (x - 1, y, z), (x, y + 1, z),
                       (x, y - 1, z), (x, y, z + 1), (x, y, z - 1)):
                if nb in remaining:
                    remaining.remove(nb)
                    comp.add(nb)
                    stack.append(nb)
        out.append(frozenset(comp))
    return out


def label_ab(cfg: AbConfiguration) -> LabelResult:
    """Label the cells (I- ∩ A) ∪ (II \\ B) ∪ (III ∩ (A Δ B)) per component.

    A component meeting Cyl_i- ∪ II_bar_i for two different i fails the whole
    configuration; a component meeting exactly one gets that sector; the rest
    are free.
    """
    cl = cfg.classifier
    ii, iii = cl.region_sets()
    labelled: Set[Box] = set()
    for b in cfg.a_boxes:
        if cl.in_i_minus(b):
            labelled.add(b)
    labelled |= ii - cfg.b_boxes
    sym = (cfg.a_boxes | cfg.b_boxes) - (cfg.a_boxes & cfg.b_boxes)
    labelled |= iii & sym

    def box_sectors(b: Box) -> Set[int]:
        tags = set()
        cyls = cl.cylinders(b)
        if not in_octant(b):
            tags.update(cyls)  # Cyl_i^- membership
        elif len(cyls) == 2:
            tags.add(({1, 2, 3} - set(cyls)).pop())  # II_bar_i membership
        return tags

    comps = []
    failed = False
    for comp in _components(labelled):
        sectors: Set[int] = set()
        for b in comp:
            sectors |= box_sectors(b)
        if len(sectors) > 1:
            failed = True
            comps.append((comp, None))
        elif len(sectors) == 1:
            comps.append((comp, (SECTOR, sectors.pop())))
        else:
            comps.append((comp, (FREE,)))
    comps.sort(key=lambda cl_: sorted(cl_[0]))
    if failed:
        return LabelResult(False, [(c, None) for c, _ in comps])
    # free components live entirely in III ∩ (A Δ B)
    for comp, lab in comps:
        if lab == (FREE,):
            assert comp <= (iii & sym)
    return LabelResult(True, comps)


def _a_candidates(cl: RegionClassifier, n_max: int) -> List[Box]:
    """III plus the boxes of I- within stacking depth n_max of the octant."""
    from .partitions import cells as _cells

    _, iii = cl.region_sets()
    out = set(iii)
    mus = cl.mus
    for d in range(1, n_max + 1):
        for (u, v) in _cells(mus[0]):
            out.add((-d, u, v))
        for (u, v) in _cells(mus[1]):
            out.add((v, -d, u))
        for (u, v) in _cells(mus[2]):
            out.add((u, v, -d))
    return sorted(out)


def _closed_subsets(candidates: List[Box], region, n_max: int) -> Dict[int, List[FrozenSet[Box]]]:
    """Stacking-closed subsets of the candidate pool, grouped by size.

    Layered growth: S ∪ {c} is closed iff every region successor of c is in S,
    and every closed set of size k+1 arises from one of size k this way.
    """
    by_size: Dict[int, List[FrozenSet[Box]]] = {0: [frozenset()]}
    frontier = {frozenset()}
    for k in range(1, n_max + 1):
        nxt = set()
        for s in frontier:
            for c in candidates:
                if c in s:
                    continue
                if all((not region(t)) or t in s for t in successors(c)):
                    nxt.add(s | {c})
        by_size[k] = sorted(nxt, key=sorted)
        frontier = nxt
        if not nxt:
            break
    return by_size


def enumerate_ab(cl: RegionClassifier, n_max: int) -> List[Tuple[AbConfiguration, LabelResult]]:
    """All successfully labelled configurations with |A| + |B| <= n_max."""
    ii, iii = cl.region_sets()
    a_region = lambda b: _a_region(cl, b)
    b_region = lambda b: _b_region(cl, b)
    a_sets = _closed_subsets(_a_candidates(cl, n_max), a_region, n_max)
    b_sets = _closed_subsets(sorted(ii | iii), b_region, n_max)
    out = []
    for ka, a_list in sorted(a_sets.items()):
        for kb, b_list in sorted(b_sets.items()):
            if ka + kb > n_max:
                continue
            for A, B in product(a_list, b_list):
                cfg = AbConfiguration(A, B, cl)
                res = label_ab(cfg)
                if res.success:
                    out.append((cfg, res))
    out.sort(key=lambda pair: (pair[0].total(), sorted(pair[0].a_boxes), sorted(pair[0].b_boxes)))
    return out


def ab_counts(cl: RegionClassifier, n_max: int) -> List[int]:
    counts = [0] * (n_max + 1)
    for cfg, _ in enumerate_ab(cl, n_max):
        counts[cfg.total()] += 1
    return counts


def pt_vertex(mu1: Partition, mu2: Partition, mu3: Partition, n: int) -> LaurentSeries:
    """Truncated generating function sum q^{|A|+|B|}; order n."""
    if n < 1:
        raise ValueError("order must be >= 1")
    cl = RegionClassifier(mu1, mu2, mu3)
    counts = ab_counts(cl, n - 1)
    return LaurentSeries(0, counts, n)
