"""Signature-based Groebner engine: criteria accounting, oracle equivalence."""

import random
import warnings

import pytest

from detf5.algebra import parse_poly, random_homogeneous
from detf5.field import PrimeField
from detf5.hilbert import hf_semiregular, mono_count
from detf5.macaulay import ROWSTATS_CSV_HEADER
from detf5.sig_gb import SyzygySignatureSet, is_groebner_up_to, lazard_gb, sig_gb

K = PrimeField(65521)


def P(text, n=2):
    return parse_poly(text, n, K)


class TestSyzygySignatureSet:
    def test_covers_multiples_same_position(self):
        S = SyzygySignatureSet([((1, 0), 2)])
        assert S.covers((1, 0), 2)
        assert S.covers((2, 1), 2)
        assert not S.covers((0, 3), 2)
        assert not S.covers((1, 0), 1)

    def test_add_prunes_multiples(self):
        S = SyzygySignatureSet()
        assert S.add((2, 1), 0)
        assert S.add((1, 0), 0)  # divides the stored (2,1): prunes it
        assert len(S) == 1
        assert not S.add((3, 3), 0)  # already covered

    def test_shifted(self):
        S = SyzygySignatureSet([((1, 0), 0)])
        T = S.shifted(5)
        assert T.covers((1, 0), 5)
        assert not T.covers((1, 0), 0)

    def test_count_layer(self):
        S = SyzygySignatureSet([((1, 0), 0)])
        # multiples of x1 among degree-2 monomials in 2 vars: x1^2, x1*x2
        assert S.count_layer(2, 2) == 2

    def test_tuple_positions(self):
        S = SyzygySignatureSet([((1, 0), (0, 2))])
        assert S.covers((1, 1), (0, 2))
        assert not S.covers((1, 1), (0, 1))


class TestToyRuns:
    def test_two_variables_basis(self):
        res = sig_gb((P("x1"), P("x2")), 3)
        assert res.lm_set() == {(0, (1, 0)), (0, (0, 1))}
        assert res.total_zero_reductions() == 0

    def test_f5_skips_koszul_signature(self):
        res = sig_gb((P("x1"), P("x2")), 3)
        by_degree = {st.degree: st for st in res.stats}
        # at d=2 the candidate x1*e_1 (gen index 1) is skipped by the
        # F5 criterion; at d=3 two of the six candidates are skipped
        assert by_degree[2].rows_skipped_by_crit == 1
        assert by_degree[2].rows_built == 3
        assert by_degree[2].rank == 3

    def test_external_s_duplicating_f5_changes_nothing(self):
        base = sig_gb((P("x1"), P("x2")), 3)
        S = SyzygySignatureSet([((1, 0), 1)])  # x1*e_1, what F5 would skip
        seeded = sig_gb((P("x1"), P("x2")), 3, S)
        assert seeded.lm_set() == base.lm_set()
        for a, b in zip(base.stats, seeded.stats):
            assert (a.rows_built, a.rows_skipped_by_crit) == (
                b.rows_built,
                b.rows_skipped_by_crit,
            )

    def test_regular_sequence_no_zero_reductions(self):
        rng = random.Random(1)
        F = [random_homogeneous(3, 2, K, rng) for _ in range(3)]
        res = sig_gb(F, 7)
        assert res.total_zero_reductions() == 0
        for st in res.stats:
            assert st.rank == mono_count(3, st.degree) - hf_semiregular(3, 3, 2, st.degree)

    def test_degree_bound_below_generators_warns_empty(self):
        with pytest.warns(UserWarning):
            res = sig_gb((P("x1^2"),), 1)
        assert res.basis_size() == 0

    def test_unsorted_degrees_sorted_internally(self):
        res = sig_gb((P("x1^2 + x2^2"), P("x2")), 3)
        assert res.basis_size() >= 2

    def test_unsorted_degrees_with_seeded_s_rejected(self):
        S = SyzygySignatureSet([((1, 1), 0)])
        with pytest.raises(ValueError):
            sig_gb((P("x1^2 + x2^2"), P("x2")), 3, S)

    def test_inhomogeneous_rejected_at_poly_level(self):
        with pytest.raises(ValueError):
            P("x1^2 + x2")


class TestLazard:
    def test_same_lm_more_rows(self):
        ours = sig_gb((P("x1"), P("x2")), 3)
        full = lazard_gb((P("x1"), P("x2")), 3)
        assert ours.lm_set() == full.lm_set()
        assert full.total_rows_built() > ours.total_rows_built()

    def test_below_min_degree_empty(self):
        with pytest.warns(UserWarning):
            res = lazard_gb((P("x1^3"),), 2)
        assert res.basis_size() == 0

    def test_no_skips_ever(self):
        full = lazard_gb((P("x1"), P("x2")), 4)
        assert all(st.rows_skipped_by_crit == 0 for st in full.stats)


class TestIsGroebner:
    def test_full_basis_true(self):
        assert is_groebner_up_to([P("x1"), P("x2")], [P("x1"), P("x2")], 4)

    def test_partial_basis_false(self):
        assert not is_groebner_up_to([P("x1")], [P("x1"), P("x2")], 2)

    def test_non_member_false(self):
        # x2 is not in <x1>, membership check must fail
        assert not is_groebner_up_to([P("x2")], [P("x1")], 2)

    def test_sig_gb_output_passes(self):
        rng = random.Random(7)
        F = [random_homogeneous(3, 2, K, rng) for _ in range(2)]
        res = sig_gb(F, 5)
        assert is_groebner_up_to(res.polys(), F, 5)


class TestAccounting:
    def test_stats_csv_shape(self):
        res = sig_gb((P("x1"), P("x2")), 3)
        assert ROWSTATS_CSV_HEADER == "d,rows_built,rows_skipped,zero_reductions,rank"
        lines = res.stats_csv()
        assert len(lines) == len(res.stats)
        for line in lines:
            assert len(line.split(",")) == 5
        assert lines[0] == "1,2,0,0,2"

    def test_candidates_partition(self):
        rng = random.Random(3)
        F = [random_homogeneous(2, 2, K, rng) for _ in range(3)]
        res = sig_gb(F, 6)
        for st in res.stats:
            assert st.candidates == st.rows_built + st.rows_skipped_by_crit

    def test_monotone_in_sound_s(self):
        # a sound S (true syzygy leading monomials) can only reduce work
        rng = random.Random(5)
        F = [random_homogeneous(2, 2, K, rng) for _ in range(2)]
        bare = sig_gb(F, 6)
        # Koszul syzygy of (f1, f2): leading monomial is LM(f1) * e_1
        S = SyzygySignatureSet([(F[0].lm(), 1)])
        seeded = sig_gb(F, 6, S)
        assert seeded.lm_set() == bare.lm_set()
        assert seeded.total_rows_built() <= bare.total_rows_built()
        assert seeded.total_zero_reductions() <= bare.total_zero_reductions()

    def test_zero_sigs_recorded(self):
        # x1, x2 with criteria off: the Koszul row must reduce to zero
        full = lazard_gb((P("x1"), P("x2")), 2)
        assert len(full.zero_sigs) == 1
        (sig,) = full.zero_sigs
        assert sig.gen == 1 and sig.tau == (1, 0)
