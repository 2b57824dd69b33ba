"""Orthocomplementation axioms on a bounded lattice.

An OrthoCandidate is a lattice plus a candidate complementation table; nothing
about the table is assumed.  The checkers scan exhaustively, never abort on a
failure, and report every axiom independently, so a single run fully
characterizes a structure.  Witnesses are the first failing tuple in row-major
index order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TableNotTotalError
from .order import BoundedLattice, ElementId
from .reports import AxiomResult, VerificationReport, Witness, bind

# total map ElementId -> ElementId, as a dense tuple
UnaryTable = tuple[ElementId, ...]


def check_unary_table(n: int, u) -> UnaryTable:
    u = tuple(u)
    if len(u) != n or any(not (0 <= v < n) for v in u):
        raise TableNotTotalError("unary table must be total on the carrier")
    return u


@dataclass(frozen=True)
class OrthoCandidate:
    """Bounded lattice with a candidate complementation (checked, not assumed)."""

    lattice: BoundedLattice
    comp: UnaryTable

    def __post_init__(self):
        object.__setattr__(self, "comp", check_unary_table(self.lattice.n, self.comp))

    @property
    def names(self) -> tuple[str, ...]:
        return self.lattice.names


def verify_ortholattice(c: OrthoCandidate) -> VerificationReport:
    """Check complement-join, antitony, involution, and the derived laws.

    Derived entries: complement-meet (x and x' meet at bottom) and both
    de Morgan laws, plus the meta assertion that antitony with involution
    forces the de Morgan laws.
    """
    l = c.lattice
    n, names, comp = l.n, l.names, c.comp
    join, meet, leq = l.join, l.meet, l.leq
    bottom, top = l.bottom, l.top
    results: list[AxiomResult] = []

    witness = None
    for x in range(n):
        if join[x][comp[x]] != top:
            witness = bind("x", names, (x,))
            break
    results.append(AxiomResult("complement-join", witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            if leq[x][y] and not leq[comp[y]][comp[x]]:
                witness = bind("x,y", names, (x, y))
                break
        if witness:
            break
    results.append(AxiomResult("antitony", witness is None, witness))

    witness = None
    for x in range(n):
        if comp[comp[x]] != x:
            witness = bind("x", names, (x,))
            break
    results.append(AxiomResult("involution", witness is None, witness))

    witness = None
    for x in range(n):
        if meet[x][comp[x]] != bottom:
            witness = bind("x", names, (x,))
            break
    results.append(
        AxiomResult("complement-meet", witness is None, witness, note="derived law")
    )

    witness = None
    for x in range(n):
        for y in range(n):
            if comp[join[x][y]] != meet[comp[x]][comp[y]]:
                witness = bind("x,y", names, (x, y))
                break
        if witness:
            break
    results.append(
        AxiomResult("de-morgan-join", witness is None, witness, note="derived law")
    )

    witness = None
    for x in range(n):
        for y in range(n):
            if comp[meet[x][y]] != join[comp[x]][comp[y]]:
                witness = bind("x,y", names, (x, y))
                break
        if witness:
            break
    results.append(
        AxiomResult("de-morgan-meet", witness is None, witness, note="derived law")
    )

    by_id = {r.axiom: r for r in results}
    applicable = by_id["antitony"].passed and by_id["involution"].passed
    dm_ok = by_id["de-morgan-join"].passed and by_id["de-morgan-meet"].passed
    if not applicable:
        meta = AxiomResult(
            "de-morgan-derived",
            True,
            note="not applicable: antitony or involution fails",
        )
    else:
        bad = by_id["de-morgan-join"] if not by_id["de-morgan-join"].passed else by_id["de-morgan-meet"]
        meta = AxiomResult(
            "de-morgan-derived",
            dm_ok,
            None if dm_ok else bad.witness,
            note="antitony and involution must force both de Morgan laws",
        )
    results.append(meta)

    return VerificationReport(tuple(results))


def check_orthomodularity(c: OrthoCandidate) -> VerificationReport:
    """Check the orthomodular law, its dual form, and their agreement.

    Both forms are scanned over comparable pairs only.  The agreement entry
    asserts that whenever complement-join, antitony, and involution all hold,
    the two forms pass or fail together; when those prerequisites fail, the
    main entries are still computed but marked conditional.
    """
    l = c.lattice
    n, names, comp = l.n, l.names, c.comp
    join, meet, leq = l.join, l.meet, l.leq
    ortho = verify_ortholattice(c)
    note = "" if ortho.overall else "conditional: ortholattice axioms do not all hold"
    results: list[AxiomResult] = []

    witness = None
    for x in range(n):
        for y in range(n):
            if leq[x][y] and join[x][meet[y][comp[x]]] != y:
                witness = bind("x,y", names, (x, y))
                break
        if witness:
            break
    v_ok = witness is None
    results.append(AxiomResult("orthomodularity", v_ok, witness, note=note))

    witness = None
    for x in range(n):
        for y in range(n):
            if leq[x][y] and meet[y][join[x][comp[y]]] != x:
                witness = bind("x,y", names, (x, y))
                break
        if witness:
            break
    vi_ok = witness is None
    results.append(AxiomResult("orthomodularity-dual", vi_ok, witness, note=note))

    applicable = (
        ortho.passed("complement-join")
        and ortho.passed("antitony")
        and ortho.passed("involution")
    )
    if not applicable:
        meta = AxiomResult(
            "orthomodularity-agreement",
            True,
            note="not applicable: an ortholattice axiom fails",
        )
    else:
        meta = AxiomResult(
            "orthomodularity-agreement",
            v_ok == vi_ok,
            note="the two orthomodularity forms must agree on ortholattices",
        )
    results.append(meta)

    return VerificationReport(tuple(results))


def distributivity_witness(l: BoundedLattice) -> Witness | None:
    """First triple violating x ^ (y v z) = (x ^ y) v (x ^ z), if any."""
    n, names = l.n, l.names
    join, meet = l.join, l.meet
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
                    return bind("x,y,z", names, (x, y, z))
    return None


def complementation_witness(l: BoundedLattice, comp: UnaryTable) -> Witness | None:
    """First element where comp is not a complement (x v x' = 1, x ^ x' = 0)."""
    for x in range(l.n):
        if l.join[x][comp[x]] != l.top or l.meet[x][comp[x]] != l.bottom:
            return bind("x", l.names, (x,))
    return None


def is_boolean(c: OrthoCandidate) -> tuple[bool, Witness | None]:
    """True iff the lattice is distributive and comp is a complementation."""
    witness = distributivity_witness(c.lattice)
    if witness is not None:
        return False, witness
    witness = complementation_witness(c.lattice, c.comp)
    if witness is not None:
        return False, witness
    return True, None
