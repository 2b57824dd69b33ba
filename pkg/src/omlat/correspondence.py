"""The two constructions tying orthomodular lattices to residuated groupoids.

sasaki_groupoid equips an orthomodular lattice with the Sasaki product
x odot y = (x v y') ^ y and hook x imp y = (y ^ x) v x'.  induced_oml goes the
other way, recovering a complementation from a qualifying groupoid as the
derived negation x imp 0.  round_trip_check verifies that composing the two
reproduces the original structure bit-exactly, table by table, not merely up
to isomorphism: both constructions keep the carrier fixed.
"""

from __future__ import annotations

from .errors import HypothesisViolatedError, NotOrthomodularError
from .ortho import OrthoCandidate, check_orthomodularity, verify_ortholattice
from .reports import AxiomResult, VerificationReport, bind
from .residuated import (
    RECOVERY_AXIOMS,
    ROUND_TRIP_AXIOMS,
    AxiomProfile,
    LrGroupoid,
    derived_negation,
    verify_lrg,
)


def sasaki_groupoid(c: OrthoCandidate, override: bool = False) -> LrGroupoid:
    """Build the groupoid with the Sasaki product and hook tables.

    Requires the input to pass the full ortholattice and orthomodularity
    suites; `override` skips that gate so non-orthomodular inputs can be
    pushed through the defining equations for counterexample studies.
    """
    if not override:
        report = verify_ortholattice(c).merged(check_orthomodularity(c))
        if not report.overall:
            failed = ", ".join(r.axiom for r in report.failures)
            raise NotOrthomodularError(
                f"input is not an orthomodular lattice (failing: {failed})",
                report=report,
            )
    l = c.lattice
    n, join, meet, comp = l.n, l.join, l.meet, c.comp
    odot = tuple(
        tuple(meet[join[x][comp[y]]][y] for y in range(n)) for x in range(n)
    )
    imp = tuple(
        tuple(join[meet[y][x]][comp[x]] for y in range(n)) for x in range(n)
    )
    return LrGroupoid(l, odot, imp)


def induced_oml(
    g: LrGroupoid, profile: AxiomProfile = RECOVERY_AXIOMS
) -> OrthoCandidate:
    """Recover an orthomodular lattice from a qualifying groupoid.

    The groupoid must pass the given profile (the default is the recovery
    hypothesis set); violations raise HypothesisViolatedError carrying the
    failing axiom and witness.  The conclusion is then verified, never
    assumed: the candidate with comp = derived negation must pass the full
    ortholattice and orthomodularity suites.
    """
    hypothesis = verify_lrg(g, profile)
    if not hypothesis.overall:
        first = hypothesis.failures[0]
        raise HypothesisViolatedError(
            f"groupoid violates {first.axiom}",
            axiom=first.axiom,
            witness=first.witness,
        )
    candidate = OrthoCandidate(g.lattice, derived_negation(g))
    conclusion = verify_ortholattice(candidate).merged(
        check_orthomodularity(candidate)
    )
    if not conclusion.overall:
        failed = ", ".join(r.axiom for r in conclusion.failures)
        raise NotOrthomodularError(
            f"induced structure is not an orthomodular lattice (failing: {failed})",
            report=conclusion,
        )
    return candidate


def _table_mismatch(names, got, want, axiom: str) -> AxiomResult:
    n = len(names)
    for x in range(n):
        for y in range(n):
            if got[x][y] != want[x][y]:
                return AxiomResult(axiom, False, bind("x,y", names, (x, y)))
    return AxiomResult(axiom, True)


def _unary_mismatch(names, got, want, axiom: str) -> AxiomResult:
    for x in range(len(names)):
        if got[x] != want[x]:
            return AxiomResult(axiom, False, bind("x", names, (x,)))
    return AxiomResult(axiom, True)


def round_trip_check(structure) -> VerificationReport:
    """Verify the one-to-one correspondence on a single structure.

    For an orthomodular lattice L: rebuild L from its Sasaki groupoid and
    compare order and complement tables cell by cell.  For a groupoid A
    passing the round-trip profile: rebuild A from its induced lattice and
    compare the product and residual tables.  Mismatches are report entries
    carrying the first differing cell, never exceptions.
    """
    if isinstance(structure, OrthoCandidate):
        c = structure
        g = sasaki_groupoid(c)
        back = induced_oml(g, ROUND_TRIP_AXIOMS)
        results = (
            _table_mismatch(c.names, back.lattice.leq, c.lattice.leq, "roundtrip-order"),
            _unary_mismatch(c.names, back.comp, c.comp, "roundtrip-complement"),
        )
        return VerificationReport(results)
    if isinstance(structure, LrGroupoid):
        g = structure
        hypothesis = verify_lrg(g, ROUND_TRIP_AXIOMS)
        if not hypothesis.overall:
            first = hypothesis.failures[0]
            raise HypothesisViolatedError(
                f"groupoid violates {first.axiom}",
                axiom=first.axiom,
                witness=first.witness,
            )
        candidate = induced_oml(g, ROUND_TRIP_AXIOMS)
        back = sasaki_groupoid(candidate)
        results = (
            _table_mismatch(g.names, back.odot, g.odot, "roundtrip-odot"),
            _table_mismatch(g.names, back.imp, g.imp, "roundtrip-imp"),
        )
        return VerificationReport(results)
    raise TypeError(f"expected OrthoCandidate or LrGroupoid, got {type(structure).__name__}")
