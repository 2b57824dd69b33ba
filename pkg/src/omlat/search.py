"""Enumeration of small bounded lattices and orthocomplementations.

Lattices are generated one isomorphism class at a time by growing
meet-semilattices element by element: a bounded lattice on n elements minus
its top is exactly a meet-semilattice on n-1 elements, and adjoining a fresh
maximal element with a chosen down-set extends one semilattice to the next
size.  Candidate extensions are deduplicated with a canonical key that
minimizes the relabeled order matrix over permutations respecting an
iso-invariant refinement partition, so each class is kept exactly once.
Orthocomplement search backtracks over involutions that pair each element
with one of its lattice complements, pruning by antitony as pairs are fixed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .errors import SizeLimitExceededError, UnknownAxiomIdError
from .order import (
    DEFAULT_PERMUTATION_BUDGET,
    BoundedLattice,
    FinitePoset,
    canonical_certificate,
    lattice_from_poset,
)
from .ortho import (
    OrthoCandidate,
    UnaryTable,
    check_orthomodularity,
    complementation_witness,
    distributivity_witness,
    verify_ortholattice,
)
from .reports import Witness
from .residuated import ALL_AXIOMS, LrGroupoid, verify_lrg

MAX_ENUMERATION_SIZE = 9


@dataclass(frozen=True)
class EnumerationConfig:
    max_size: int
    require_orthomodular: bool = False
    permutation_budget: int = DEFAULT_PERMUTATION_BUDGET

    def __post_init__(self):
        if self.max_size < 1:
            raise ValueError("max_size must be at least 1")
        needed = factorial(max(self.max_size - 2, 0))
        if self.permutation_budget < needed:
            raise SizeLimitExceededError(
                f"exact canonicalization at size {self.max_size} needs a "
                f"permutation budget of {needed}, got {self.permutation_budget}"
            )


def enumerate_orthocomplements(
    l: BoundedLattice, require_omod: bool = False
) -> list[UnaryTable]:
    """All unary tables making the lattice an ortholattice (or an OML).

    Search space: involutions pairing every element with one of its lattice
    complements, with bottom and top pinned to each other; antitony is pruned
    incrementally and the surviving tables are filtered through the full
    checkers.  The result is duplicate-free and sorted.
    """
    n = l.n
    join, meet, leq = l.join, l.meet, l.leq
    bottom, top = l.bottom, l.top
    candidates = [
        [y for y in range(n) if join[x][y] == top and meet[x][y] == bottom]
        for x in range(n)
    ]
    if any(not c for c in candidates):
        return []

    found: list[UnaryTable] = []
    comp: dict[int, int] = {}

    def antitone_with_assigned(x: int) -> bool:
        for u in comp:
            if u == x:
                continue
            if leq[u][x] and not leq[comp[x]][comp[u]]:
                return False
            if leq[x][u] and not leq[comp[u]][comp[x]]:
                return False
        return True

    def extend() -> None:
        x = next((v for v in range(n) if v not in comp), None)
        if x is None:
            table = tuple(comp[v] for v in range(n))
            report = verify_ortholattice(OrthoCandidate(l, table))
            if not report.overall:
                return
            if require_omod and not check_orthomodularity(
                OrthoCandidate(l, table)
            ).overall:
                return
            found.append(table)
            return
        for y in candidates[x]:
            if y in comp or (y == x and n > 1):
                continue
            comp[x] = y
            comp[y] = x
            if antitone_with_assigned(x) and antitone_with_assigned(y):
                extend()
            del comp[x]
            if y != x:
                del comp[y]

    comp[bottom] = top
    comp[top] = bottom
    if n == 1:
        comp.clear()
        comp[bottom] = bottom
    extend()
    return sorted(found)


def _downsets_from_upsets(up: list[int], n: int) -> list[int]:
    down = [0] * n
    for x in range(n):
        for y in range(n):
            if (up[x] >> y) & 1:
                down[y] |= 1 << x
    return down


def _refinement_cells(up: list[int], down: list[int], n: int) -> list[list[int]]:
    """Partition elements by an iso-invariant iterated signature."""
    color: list = [((up[x]).bit_count(), (down[x]).bit_count()) for x in range(n)]
    classes = len(set(color))
    while True:
        sigs = []
        for x in range(n):
            above = tuple(sorted(color[y] for y in range(n) if y != x and (up[x] >> y) & 1))
            below = tuple(sorted(color[y] for y in range(n) if y != x and (down[x] >> y) & 1))
            sigs.append((color[x], above, below))
        palette = sorted(set(sigs))
        color = [palette.index(s) for s in sigs]
        if len(palette) == classes:
            break
        classes = len(palette)
    cells: dict[int, list[int]] = {}
    for x in range(n):
        cells.setdefault(color[x], []).append(x)
    return [cells[c] for c in sorted(cells)]


def _canonical_order_key(up: list[int], n: int) -> tuple[int, ...]:
    """Minimal relabeled order matrix over partition-respecting permutations.

    The refinement partition is isomorphism-invariant and its cells are laid
    out in an invariant order, so two structures get equal keys iff they are
    isomorphic; within cells all permutations are tried.
    """
    down = _downsets_from_upsets(up, n)
    cells = _refinement_cells(up, down, n)
    best: tuple[int, ...] | None = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        inv = [x for part in parts for x in part]
        rows = []
        for i in range(n):
            u = up[inv[i]]
            row = 0
            for j in range(n):
                if (u >> inv[j]) & 1:
                    row |= 1 << j
            rows.append(row)
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return best


def _semilattice_extensions(up: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    """All one-element extensions by a new maximal element.

    The new element's strict down-set D must be down-closed and, for every
    x outside D, D intersected with the down-set of x must have a unique
    maximum (that maximum becomes the meet of the new element with x).
    """
    down = _downsets_from_upsets(list(up), n)
    out = []
    for mask in range(1, 1 << n):
        ok = True
        for d in range(n):
            if (mask >> d) & 1 and down[d] & mask != down[d]:
                ok = False
                break
        if not ok:
            continue
        for x in range(n):
            if (mask >> x) & 1:
                continue
            s = mask & down[x]
            has_max = False
            probe = s
            while probe:
                m = (probe & -probe).bit_length() - 1
                probe &= probe - 1
                if s & down[m] == s:
                    has_max = True
                    break
            if not has_max:
                ok = False
                break
        if not ok:
            continue
        new_up = [up[x] | (1 << n) if (mask >> x) & 1 else up[x] for x in range(n)]
        new_up.append(1 << n)
        out.append(tuple(new_up))
    return out


def _lattice_from_order_rows(up, n: int) -> BoundedLattice:
    names = tuple(f"e{i}" for i in range(n))
    leq = tuple(
        tuple(bool((up[x] >> y) & 1) for y in range(n)) for x in range(n)
    )
    return lattice_from_poset(FinitePoset(names, leq))


def enumerate_bounded_lattices(cfg: EnumerationConfig) -> list[BoundedLattice]:
    """One representative per isomorphism class, sizes 1 through max_size.

    Output is sorted by (size, certificate bytes) and therefore reproducible.
    With require_orthomodular set, only lattices admitting at least one
    orthomodular complementation are kept.
    """
    if cfg.max_size > MAX_ENUMERATION_SIZE:
        raise SizeLimitExceededError(
            f"enumeration is supported up to size {MAX_ENUMERATION_SIZE}, "
            f"got {cfg.max_size}"
        )
    lattices_by_size: dict[int, list[BoundedLattice]] = {
        1: [_lattice_from_order_rows((1,), 1)]
    }
    # meet-semilattices with k elements stand for lattices with k+1: adjoin a top
    level: list[tuple[int, ...]] = [(1,)]
    for k in range(1, cfg.max_size):
        lattices_by_size[k + 1] = []
        for up in level:
            rows = [u | (1 << k) for u in up]
            rows.append(1 << k)
            lattices_by_size[k + 1].append(_lattice_from_order_rows(rows, k + 1))
        if k + 1 >= cfg.max_size:
            break
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for up in level:
            for ext in _semilattice_extensions(up, k):
                key = _canonical_order_key(list(ext), k + 1)
                if key not in nxt:
                    nxt[key] = ext
        level = list(nxt.values())
    results: list[BoundedLattice] = []
    for n in sorted(lattices_by_size):
        with_certs = [
            (canonical_certificate(l, budget=cfg.permutation_budget).data, l)
            for l in lattices_by_size[n]
        ]
        with_certs.sort(key=lambda pair: pair[0])
        for _, l in with_certs:
            if cfg.require_orthomodular and not enumerate_orthocomplements(
                l, require_omod=True
            ):
                continue
            results.append(l)
    return results


def enumerate_omls(cfg: EnumerationConfig) -> list[OrthoCandidate]:
    """Every (lattice class, orthomodular complementation) pair up to max_size."""
    pairs: list[OrthoCandidate] = []
    base = EnumerationConfig(
        cfg.max_size, require_orthomodular=False,
        permutation_budget=cfg.permutation_budget,
    )
    for l in enumerate_bounded_lattices(base):
        for table in enumerate_orthocomplements(l, require_omod=True):
            pairs.append(OrthoCandidate(l, table))
    return pairs


ORTHO_AXIOM_IDS = frozenset(
    {
        "complement-join",
        "complement-meet",
        "antitony",
        "involution",
        "de-morgan-join",
        "de-morgan-meet",
        "de-morgan-derived",
        "orthomodularity",
        "orthomodularity-dual",
        "orthomodularity-agreement",
        "distributivity",
        "complementation",
    }
)

GROUPOID_AXIOM_IDS = frozenset(
    {
        "unit-left",
        "unit-right",
        "left-adjointness",
        "divisibility",
        "antitony",
        "double-negation",
        "sasaki-product",
        "sasaki-hook",
        "join-absorption",
    }
)

_OMOD_IDS = frozenset(
    {"orthomodularity", "orthomodularity-dual", "orthomodularity-agreement"}
)


def find_counterexample(structure, axiom: str) -> Witness | None:
    """First witness violating the named axiom, or None when it holds.

    Dispatches on the structure: ortho candidates answer for the
    ortholattice/orthomodularity/Boolean vocabulary, groupoids for the
    residuation vocabulary.  Unknown ids raise UnknownAxiomIdError.
    """
    if isinstance(structure, OrthoCandidate):
        if axiom not in ORTHO_AXIOM_IDS:
            raise UnknownAxiomIdError(
                f"unknown axiom id {axiom!r} for an ortho candidate"
            )
        if axiom == "distributivity":
            return distributivity_witness(structure.lattice)
        if axiom == "complementation":
            return complementation_witness(structure.lattice, structure.comp)
        if axiom in _OMOD_IDS:
            return check_orthomodularity(structure).witness(axiom)
        return verify_ortholattice(structure).witness(axiom)
    if isinstance(structure, LrGroupoid):
        if axiom not in GROUPOID_AXIOM_IDS:
            raise UnknownAxiomIdError(f"unknown axiom id {axiom!r} for a groupoid")
        return verify_lrg(structure, ALL_AXIOMS).witness(axiom)
    raise TypeError(
        f"expected OrthoCandidate or LrGroupoid, got {type(structure).__name__}"
    )
