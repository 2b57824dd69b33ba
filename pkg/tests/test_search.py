"""Enumeration completeness, complement search, and witness lookup."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import make_boolean, make_mo2, make_o6
from omlat import (
    EnumerationConfig,
    SizeLimitExceededError,
    UnknownAxiomIdError,
    canonical_certificate,
    check_orthomodularity,
    enumerate_bounded_lattices,
    enumerate_omls,
    enumerate_orthocomplements,
    find_counterexample,
    sasaki_groupoid,
    verify_ortholattice,
)

# class counts per size, frozen from the enumeration run and cross-checked
# against the labeled brute-force oracle below for sizes 1-6
EXPECTED_CLASS_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53, 8: 222}

CORPUS8 = enumerate_bounded_lattices(EnumerationConfig(8))


def counts_by_size(lattices) -> dict[int, int]:
    out: dict[int, int] = {}
    for l in lattices:
        out[l.n] = out.get(l.n, 0) + 1
    return out


class TestEnumerationConfig:
    def test_max_size_must_be_positive(self):
        with pytest.raises(ValueError):
            EnumerationConfig(0)

    def test_budget_floor(self):
        with pytest.raises(SizeLimitExceededError):
            EnumerationConfig(8, permutation_budget=100)

    def test_size_cap(self):
        with pytest.raises(SizeLimitExceededError):
            enumerate_bounded_lattices(EnumerationConfig(10))


class TestEnumerateBoundedLattices:
    def test_frozen_class_counts(self):
        assert counts_by_size(CORPUS8) == EXPECTED_CLASS_COUNTS

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_counts_match_labeled_oracle(self, n):
        labeled = oracles.labeled_lattices(n)
        assert oracles.iso_class_count(labeled, n) == sum(
            1 for l in CORPUS8 if l.n == n
        )

    def test_count_at_six_matches_oracle_by_orbit_sum(self):
        """n = 6 classes vs the labeled oracle via the orbit-size identity.

        Each class contributes n!/|Aut| labeled copies, so the orbit sizes of
        the returned representatives must add up to the oracle's labeled
        count exactly; any missed or duplicated class breaks the sum.
        """
        labeled = oracles.labeled_lattices(6)
        reps = [l.leq for l in CORPUS8 if l.n == 6]
        assert oracles.orbit_sum(reps, 6) == len(labeled)

    def test_no_duplicate_certificates(self):
        certs = [canonical_certificate(l).data for l in CORPUS8]
        assert len(certs) == len(set(certs))

    def test_all_are_valid_lattices(self):
        from omlat import verify_lattice

        for l in CORPUS8:
            assert verify_lattice(l).overall

    def test_deterministic_output(self):
        again = enumerate_bounded_lattices(EnumerationConfig(6))
        prefix = [l for l in CORPUS8 if l.n <= 6]
        assert [l.leq for l in again] == [l.leq for l in prefix]

    def test_require_orthomodular_filter(self):
        filtered = enumerate_bounded_lattices(
            EnumerationConfig(6, require_orthomodular=True)
        )
        assert counts_by_size(filtered) == {1: 1, 2: 1, 4: 1, 6: 1}


class TestEnumerateOrthocomplements:
    def test_boolean_four_unique(self):
        tables = enumerate_orthocomplements(make_boolean(2).lattice)
        assert tables == [(3, 2, 1, 0)]

    def test_mo2_matches_brute_force_oracle(self):
        l = make_mo2().lattice
        expected = oracles.brute_force_complement_tables(
            l.leq, l.join, l.meet, l.bottom, l.top, require_omod=False
        )
        got = enumerate_orthocomplements(l)
        assert got == sorted(expected)
        assert len(got) == 3
        # on MO2 every ortholattice complementation is orthomodular
        assert enumerate_orthocomplements(l, require_omod=True) == got

    def test_o6_has_one_ortho_and_no_omod(self):
        l = make_o6().lattice
        assert enumerate_orthocomplements(l) == [(5, 4, 3, 2, 1, 0)]
        assert enumerate_orthocomplements(l, require_omod=True) == []
        oracle = oracles.brute_force_complement_tables(
            l.leq, l.join, l.meet, l.bottom, l.top, require_omod=True
        )
        assert oracle == []

    def test_four_chain_has_none(self):
        from omlat import lattice_from_covers

        l = lattice_from_covers(
            ["0", "p", "q", "1"], [("0", "p"), ("p", "q"), ("q", "1")]
        )
        assert enumerate_orthocomplements(l) == []

    @pytest.mark.parametrize(
        "l", enumerate_bounded_lattices(EnumerationConfig(5)), ids=lambda l: f"n{l.n}"
    )
    def test_small_corpus_matches_oracle(self, l):
        for omod in (False, True):
            expected = sorted(
                oracles.brute_force_complement_tables(
                    l.leq, l.join, l.meet, l.bottom, l.top, omod
                )
            )
            assert enumerate_orthocomplements(l, require_omod=omod) == expected

    def test_omod_subset_of_ortho(self):
        for l in CORPUS8:
            everything = enumerate_orthocomplements(l)
            omod = enumerate_orthocomplements(l, require_omod=True)
            assert set(omod) <= set(everything)


class TestEnumerateOmls:
    def test_pair_counts(self):
        pairs = enumerate_omls(EnumerationConfig(8))
        sizes = counts_by_size(c.lattice for c in pairs)
        assert sizes == {1: 1, 2: 1, 4: 1, 6: 3, 8: 16}

    def test_pipeline_property_small(self):
        from omlat import ALL_AXIOMS, derived_negation, round_trip_check, verify_lrg

        for c in enumerate_omls(EnumerationConfig(6)):
            assert verify_ortholattice(c).overall
            assert check_orthomodularity(c).overall
            g = sasaki_groupoid(c)
            assert verify_lrg(g, ALL_AXIOMS).overall
            assert derived_negation(g) == c.comp
            assert round_trip_check(c).overall


class TestFindCounterexample:
    def test_o6_orthomodularity_pair(self, o6):
        assert find_counterexample(o6, "orthomodularity") == (
            ("x", "x"),
            ("y", "y"),
        )

    def test_mo2_distributivity_triple(self, mo2):
        assert find_counterexample(mo2, "distributivity") == (
            ("x", "a"),
            ("y", "a'"),
            ("z", "b"),
        )

    def test_mo2_orthomodularity_none(self, mo2):
        assert find_counterexample(mo2, "orthomodularity") is None

    def test_complementation_id(self, mo2):
        assert find_counterexample(mo2, "complementation") is None

    def test_groupoid_ids(self, o6):
        g = sasaki_groupoid(o6, override=True)
        assert find_counterexample(g, "left-adjointness") == (
            ("x", "x"),
            ("y", "y"),
            ("z", "x"),
        )
        assert find_counterexample(g, "divisibility") == (("x", "y"), ("y", "x"))
        assert find_counterexample(g, "unit-left") is None

    def test_unknown_id_raises(self, mo2, o6):
        with pytest.raises(UnknownAxiomIdError):
            find_counterexample(mo2, "left-adjointness")
        with pytest.raises(UnknownAxiomIdError):
            find_counterexample(sasaki_groupoid(o6, override=True), "distributivity")
        with pytest.raises(UnknownAxiomIdError):
            find_counterexample(mo2, "bogus")

    def test_wrong_type(self):
        with pytest.raises(TypeError):
            find_counterexample("nope", "antitony")

    def test_witness_matches_report(self, o6):
        report = check_orthomodularity(o6)
        assert find_counterexample(o6, "orthomodularity") == report.witness(
            "orthomodularity"
        )


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_enumerated_representatives_are_canonical_forms(data):
    """Certificates of relabeled copies match the representative's."""
    from omlat import relabel_lattice

    l = data.draw(st.sampled_from([x for x in CORPUS8 if x.n <= 6]))
    perm = data.draw(st.permutations(range(l.n)))
    assert (
        canonical_certificate(relabel_lattice(l, list(perm))).data
        == canonical_certificate(l).data
    )
