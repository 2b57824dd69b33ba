"""Finite posets and bounded lattices as dense index tables.

Elements are dense integer ids 0..n-1 with display names kept alongside; all
computation runs on indices and every report renders names.  Join and meet are
precomputed n x n tables so each axiom check elsewhere in the package is a
plain table scan.  Structures are frozen after construction and safe to share.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .errors import (
    CycleDetectedError,
    DuplicateNameError,
    NotALatticeError,
    NotBoundedError,
    SizeLimitExceededError,
    TableNotTotalError,
    UnknownElementError,
)
from .reports import AxiomResult, VerificationReport, bind

ElementId = int

# 8! permutations: exhaustive canonicalization for lattices with up to 10
# elements (bottom and top are pinned, only the rest are permuted).
DEFAULT_PERMUTATION_BUDGET = 40320


@dataclass(frozen=True)
class FinitePoset:
    """Reflexive, antisymmetric, transitive order on named elements."""

    names: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> ElementId:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownElementError(f"unknown element {name!r}") from None


@dataclass(frozen=True)
class BoundedLattice:
    """Poset with total join/meet tables and distinguished bottom/top."""

    poset: FinitePoset
    join: tuple[tuple[ElementId, ...], ...]
    meet: tuple[tuple[ElementId, ...], ...]
    bottom: ElementId
    top: ElementId

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def names(self) -> tuple[str, ...]:
        return self.poset.names

    @property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        return self.poset.leq

    @property
    def is_trivial(self) -> bool:
        """True for the one-element lattice (bottom equals top)."""
        return self.bottom == self.top

    def index(self, name: str) -> ElementId:
        return self.poset.index(name)


@dataclass(frozen=True)
class CanonicalCertificate:
    """Serialization of a structure under its minimizing relabeling.

    Certificates are equal iff the structures are isomorphic (as bounded
    lattices, or as lattices-with-unary-table when one is included).
    """

    data: bytes


def poset_from_covers(names, covers) -> FinitePoset:
    """Build the reflexive-transitive closure of a cover relation.

    `covers` is an iterable of (lower, upper) name pairs.  Rejects duplicate
    or empty names, unknown cover endpoints, and cyclic input.
    """
    names = tuple(names)
    seen: set[str] = set()
    for name in names:
        if not name:
            raise ValueError("element names must be nonempty strings")
        if name in seen:
            raise DuplicateNameError(f"duplicate element name {name!r}")
        seen.add(name)
    idx = {name: i for i, name in enumerate(names)}
    n = len(names)
    rel = [[x == y for y in range(n)] for x in range(n)]
    for lo, hi in covers:
        if lo not in idx:
            raise UnknownElementError(f"unknown element {lo!r} in cover {lo}<{hi}")
        if hi not in idx:
            raise UnknownElementError(f"unknown element {hi!r} in cover {lo}<{hi}")
        rel[idx[lo]][idx[hi]] = True
    for k in range(n):
        rk = rel[k]
        for x in range(n):
            if rel[x][k]:
                rx = rel[x]
                for y in range(n):
                    if rk[y]:
                        rx[y] = True
    for x in range(n):
        for y in range(x + 1, n):
            if rel[x][y] and rel[y][x]:
                raise CycleDetectedError(
                    f"cycle through {names[x]!r} and {names[y]!r}: input is not a partial order"
                )
    return FinitePoset(names, tuple(tuple(row) for row in rel))


def lattice_from_poset(p: FinitePoset) -> BoundedLattice:
    """Check that every pair has a unique lub/glb and precompute the tables.

    Bottom and top are discovered from the order; their absence raises
    NotBoundedError, a pair without a least upper (greatest lower) bound
    raises NotALatticeError naming the offending pair.
    """
    n = p.n
    if n == 0:
        raise NotBoundedError("empty carrier has no bottom element")
    leq = p.leq
    bottoms = [x for x in range(n) if all(leq[x][y] for y in range(n))]
    if not bottoms:
        raise NotBoundedError("no bottom element")
    tops = [x for x in range(n) if all(leq[y][x] for y in range(n))]
    if not tops:
        raise NotBoundedError("no top element")
    join_rows: list[tuple[ElementId, ...]] = []
    meet_rows: list[tuple[ElementId, ...]] = []
    for x in range(n):
        jrow: list[ElementId] = []
        mrow: list[ElementId] = []
        for y in range(n):
            ubs = [z for z in range(n) if leq[x][z] and leq[y][z]]
            least = [u for u in ubs if all(leq[u][z] for z in ubs)]
            if len(least) != 1:
                raise NotALatticeError(
                    f"no least upper bound for ({p.names[x]}, {p.names[y]})",
                    pair=(p.names[x], p.names[y]),
                    kind="join",
                )
            jrow.append(least[0])
            lbs = [z for z in range(n) if leq[z][x] and leq[z][y]]
            greatest = [u for u in lbs if all(leq[z][u] for z in lbs)]
            if len(greatest) != 1:
                raise NotALatticeError(
                    f"no greatest lower bound for ({p.names[x]}, {p.names[y]})",
                    pair=(p.names[x], p.names[y]),
                    kind="meet",
                )
            mrow.append(greatest[0])
        join_rows.append(tuple(jrow))
        meet_rows.append(tuple(mrow))
    return BoundedLattice(p, tuple(join_rows), tuple(meet_rows), bottoms[0], tops[0])


def lattice_from_covers(names, covers) -> BoundedLattice:
    return lattice_from_poset(poset_from_covers(names, covers))


def transitive_reduction(p: FinitePoset) -> tuple[tuple[ElementId, ElementId], ...]:
    """Cover pairs (x, y): x < y with no element strictly between."""
    n = p.n
    leq = p.leq
    covers: list[tuple[ElementId, ElementId]] = []
    for x in range(n):
        for y in range(n):
            if x == y or not leq[x][y]:
                continue
            if any(z != x and z != y and leq[x][z] and leq[z][y] for z in range(n)):
                continue
            covers.append((x, y))
    return tuple(covers)


def verify_lattice(l: BoundedLattice) -> VerificationReport:
    """Exhaustively check the join/meet tables against the order.

    Verifies that join/meet really are the unique lub/glb, that both are
    idempotent, commutative, associative and absorb each other, that the
    stated bounds bound, and that order and tables agree pointwise.
    """
    n, leq, names = l.n, l.leq, l.names
    join, meet = l.join, l.meet
    results: list[AxiomResult] = []

    witness = None
    for x in range(n):
        for y in range(n):
            j = join[x][y]
            ubs = [z for z in range(n) if leq[x][z] and leq[y][z]]
            if j not in ubs or not all(leq[j][z] for z in ubs):
                witness = bind("x,y", names, (x, y))
                break
        if witness:
            break
    results.append(AxiomResult("join-is-lub", witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            m = meet[x][y]
            lbs = [z for z in range(n) if leq[z][x] and leq[z][y]]
            if m not in lbs or not all(leq[z][m] for z in lbs):
                witness = bind("x,y", names, (x, y))
                break
        if witness:
            break
    results.append(AxiomResult("meet-is-glb", witness is None, witness))

    witness = None
    for x in range(n):
        if not (leq[l.bottom][x] and leq[x][l.top]):
            witness = bind("x", names, (x,))
            break
    results.append(AxiomResult("bounded", witness is None, witness))

    witness = None
    for x in range(n):
        if join[x][x] != x or meet[x][x] != x:
            witness = bind("x", names, (x,))
            break
    results.append(AxiomResult("idempotence", witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            if join[x][y] != join[y][x] or meet[x][y] != meet[y][x]:
                witness = bind("x,y", names, (x, y))
                break
        if witness:
            break
    results.append(AxiomResult("commutativity", witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if (
                    join[join[x][y]][z] != join[x][join[y][z]]
                    or meet[meet[x][y]][z] != meet[x][meet[y][z]]
                ):
                    witness = bind("x,y,z", names, (x, y, z))
                    break
            if witness:
                break
        if witness:
            break
    results.append(AxiomResult("associativity", witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            if meet[x][join[x][y]] != x or join[x][meet[x][y]] != x:
                witness = bind("x,y", names, (x, y))
                break
        if witness:
            break
    results.append(AxiomResult("absorption", witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            if leq[x][y] != (join[x][y] == y) or leq[x][y] != (meet[x][y] == x):
                witness = bind("x,y", names, (x, y))
                break
        if witness:
            break
    results.append(AxiomResult("order-agreement", witness is None, witness))

    return VerificationReport(tuple(results))


def relabel_lattice(l: BoundedLattice, perm) -> BoundedLattice:
    """Relabel elements by the bijection perm, where perm[old] = new index."""
    n = l.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    names = tuple(l.names[inv[i]] for i in range(n))
    leq = tuple(tuple(l.leq[inv[i]][inv[j]] for j in range(n)) for i in range(n))
    join = tuple(
        tuple(perm[l.join[inv[i]][inv[j]]] for j in range(n)) for i in range(n)
    )
    meet = tuple(
        tuple(perm[l.meet[inv[i]][inv[j]]] for j in range(n)) for i in range(n)
    )
    return BoundedLattice(
        FinitePoset(names, leq), join, meet, perm[l.bottom], perm[l.top]
    )


def canonical_certificate(
    l: BoundedLattice, u=None, budget: int = DEFAULT_PERMUTATION_BUDGET
) -> CanonicalCertificate:
    """Minimize the serialized structure over all relabelings.

    Bottom is pinned to index 0 and top to index n-1 (any isomorphism must
    preserve them); the remaining elements are permuted exhaustively.  When a
    unary table `u` is given it participates in the minimization, so the
    certificate distinguishes lattices-with-unary-op up to isomorphism.
    Raises SizeLimitExceededError when (n-2)! exceeds the budget.
    """
    n = l.n
    if u is not None:
        u = tuple(u)
        if len(u) != n or any(not (0 <= v < n) for v in u):
            raise TableNotTotalError("unary table must be total on the carrier")
    middle = [x for x in range(n) if x != l.bottom and x != l.top]
    if factorial(len(middle)) > budget:
        raise SizeLimitExceededError(
            f"canonicalization needs {factorial(len(middle))} permutations, "
            f"budget is {budget}"
        )
    leq = l.leq
    head = (l.bottom,)
    tail = () if l.top == l.bottom else (l.top,)
    best = None
    best_inv = None
    for mid in itertools.permutations(middle):
        inv = head + mid + tail
        rows = []
        for i in range(n):
            li = leq[inv[i]]
            row = 0
            for j in range(n):
                if li[inv[j]]:
                    row |= 1 << j
            rows.append(row)
        if u is None:
            key = (tuple(rows), ())
        else:
            pos = {old: new for new, old in enumerate(inv)}
            key = (tuple(rows), tuple(pos[u[inv[i]]] for i in range(n)))
        if best is None or key < best:
            best, best_inv = key, inv
    pos_list = [0] * n
    for new, old in enumerate(best_inv):
        pos_list[old] = new
    canon = relabel_lattice(l, pos_list)
    parts = [f"n={n}"]
    parts.append(
        "leq=" + ";".join("".join("1" if v else "0" for v in row) for row in canon.leq)
    )
    parts.append("join=" + ";".join(",".join(map(str, row)) for row in canon.join))
    parts.append("meet=" + ";".join(",".join(map(str, row)) for row in canon.meet))
    if u is not None:
        cu = [0] * n
        for old in range(n):
            cu[pos_list[old]] = pos_list[u[old]]
        parts.append("comp=" + ",".join(map(str, cu)))
    return CanonicalCertificate("|".join(parts).encode("ascii"))
