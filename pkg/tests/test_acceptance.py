"""Acceptance gate: one test per deliverable check, in order.

Heavy shared work (the instance battery behind the oracle-equivalence,
rank, soundness, and monotonicity checks, and the two syzygy-module
Groebner runs) is computed once per module in fixtures.
"""

import random
import time
from dataclasses import dataclass

import pytest

from test_determinantal import brute_kernel_lms

from detf5.algebra import random_poly_matrix
from detf5.determinantal import (
    CritSystem,
    crit_gb,
    en_leading_terms,
    en_syzygy_generators,
    minors,
    subsets_lex,
)
from detf5.field import PrimeField
from detf5.hilbert import (
    binom,
    degree_bound_crit,
    degree_bound_minors,
    hf_crit,
    hf_minors_ideal,
    hf_semiregular,
    hf_semiregular_binomial,
    lazard_bound,
    minors_row_totals,
    mono_count,
)
from detf5.instances import InstanceSpec, random_crit_instance, random_minors_instance
from detf5.sig_gb import SyzygySignatureSet, lazard_gb, sig_gb
from detf5.verify import verify_instance

K = PrimeField(65521)

# every minors shape leaves room for removals below the degree bound:
# D - p*d0 >= d0, which needs n >= 3 and d0 >= 2
MINORS_SHAPES = [(3, 1, 3, 2), (3, 2, 4, 2), (3, 2, 3, 3), (4, 3, 6, 2), (5, 1, 4, 2)]
CRIT_SHAPES = [(2, 1, 2), (3, 1, 2), (3, 2, 2), (4, 1, 2)]


@dataclass
class BatteryEntry:
    label: str
    kind: str  # "matrix" or "system"
    n: int
    p: int
    q: int  # jacobian width for system entries
    d0: int  # input degree: matrix entry degree, or the degree of g and F
    D: int
    A: object  # the matrix whose maximal minors are taken
    seeded: object
    bare: object
    oracle: object
    H: object


def _minors_entry(n, p, q, d0, seed):
    inst = random_minors_instance(InstanceSpec(n, p, q, d0, seed=seed))
    A = inst.matrix
    D = degree_bound_minors(n, p, d0)
    gens = minors(A, p)
    degs = [p * d0] * len(gens)
    H = en_leading_terms(A, D)
    return BatteryEntry(
        label=f"minors(n={n},p={p},q={q},d0={d0},seed={seed})",
        kind="matrix", n=n, p=p, q=q, d0=d0, D=D, A=A,
        seeded=sig_gb(gens, D, H, degrees=degs),
        bare=sig_gb(gens, D, degrees=degs),
        oracle=lazard_gb(gens, D, degrees=degs),
        H=H,
    )


def _crit_entry(n, p, d0, seed):
    inst = random_crit_instance(InstanceSpec(n, p, max(p + 1, n), d0, seed=seed))
    sysm = CritSystem.build(inst.g, inst.F)
    jac = sysm.jac
    D = degree_bound_crit(n, p, d0)
    minor_deg = (p + 1) * jac.entry_degree
    gens = list(inst.F) + minors(jac, p + 1)
    degs = [d0] * p + [minor_deg] * (len(gens) - p)
    H = en_leading_terms(jac, D, gen_offset=p)
    return BatteryEntry(
        label=f"crit(n={n},p={p},d0={d0},seed={seed})",
        kind="system", n=n, p=p, q=n, d0=d0, D=D, A=jac,
        seeded=sig_gb(gens, D, H, degrees=degs),
        bare=sig_gb(gens, D, degrees=degs),
        oracle=lazard_gb(gens, D, degrees=degs),
        H=H,
    )


@pytest.fixture(scope="module")
def battery():
    t0 = time.perf_counter()
    entries = []
    for n, p, q, d0 in MINORS_SHAPES:
        for seed in (0, 1):
            entries.append(_minors_entry(n, p, q, d0, seed))
    for n, p, d0 in CRIT_SHAPES:
        for seed in (0, 1, 2):
            entries.append(_crit_entry(n, p, d0, seed))
    elapsed = time.perf_counter() - t0
    assert len(entries) == 22
    return entries, elapsed


def _syzygy_module_removals(p, q, n, d0, delta_gb, seed=0):
    """Groebner basis of the maximal-minor syzygy module up to module degree
    delta_gb; per-degree removable counts, rank-defect predictions, and the
    full-range ratio of the criterion-free row bound to the surviving rows."""
    rng = random.Random(seed)
    A = random_poly_matrix(n, p, q, d0, K, rng)
    positions = list(subsets_lex(q, p))
    gens = en_syzygy_generators(A)
    gb = sig_gb(gens, delta_gb, degrees=[d0] * len(gens), positions=positions)
    closure = SyzygySignatureSet()
    for pos, mono in gb.lm_set():
        closure.add(mono, pos)
    D = degree_bound_minors(n, p, d0)
    rows = []
    total_rows = total_removed_pred = 0
    for delta in range(0, D - p * d0 + 1):
        nrows = binom(q, p) * mono_count(n, delta)
        pred = nrows - hf_minors_ideal(n, p, q, d0, delta + p * d0)
        meas = closure.count_layer(n, delta) if delta <= delta_gb else None
        rows.append((delta, nrows, meas, pred))
        total_rows += nrows
        total_removed_pred += pred
    surviving = total_rows - total_removed_pred
    ratio = lazard_bound(p, q, n, d0) / surviving
    return rows, ratio


@pytest.fixture(scope="module")
def removal_shape_1():
    t0 = time.perf_counter()
    rows, ratio = _syzygy_module_removals(3, 6, 4, 3, delta_gb=6)
    return rows, ratio, time.perf_counter() - t0


@pytest.fixture(scope="module")
def removal_shape_2():
    # module degree 6 takes ~10 minutes and ~2 GB on this shape; degree 5
    # finishes in under a minute and covers the first three nonzero layers
    t0 = time.perf_counter()
    rows, ratio = _syzygy_module_removals(3, 7, 5, 3, delta_gb=5)
    return rows, ratio, time.perf_counter() - t0


# -- 1: formula-level speedup ratios ----------------------------------------


def test_speedup_ratio_shape_4363():
    t0 = time.perf_counter()
    t = minors_row_totals(4, 3, 6, 3)
    assert time.perf_counter() - t0 < 1.0
    assert round(t["ratio_ours"], 3) == pytest.approx(26.786, abs=1e-3)


@pytest.mark.xfail(
    reason="stated ratio 34.946 contradicts its own row totals; "
    "921690/26361 = 34.964 (adjacent-digit transposition), every other "
    "entry of the row reproduces exactly",
    strict=True,
)
def test_speedup_ratio_shape_5373_as_stated():
    t = minors_row_totals(5, 3, 7, 3)
    assert round(t["ratio_ours"], 3) == pytest.approx(34.946, abs=1e-3)


def test_speedup_ratio_shape_5373_row_totals():
    t = minors_row_totals(5, 3, 7, 3)
    assert t["rows_ours"] == 26361
    assert t["rows_lazard"] == 921690
    assert round(t["ratio_ours"], 3) == pytest.approx(34.964, abs=1e-3)


# -- 2: measured row removals from a syzygy-module Groebner basis -----------


def test_removals_match_rank_defect_shape_4363(removal_shape_1):
    rows, _, elapsed = removal_shape_1
    assert elapsed < 600.0
    for delta, nrows, meas, pred in rows:
        assert meas is not None, "full module degree range must be computed"
        assert meas == pred, f"delta={delta}: measured {meas} != predicted {pred}"
        assert 0 <= meas <= nrows


def test_full_criterion_ratio_shape_4363(removal_shape_1):
    _, ratio, _ = removal_shape_1
    assert round(ratio, 3) == pytest.approx(29.132, abs=1e-3)


@pytest.mark.xfail(
    reason="stated ratio 29.397 is unattainable: removing every row the "
    "rank defect allows already gives 77520/2661 = 29.132, and the "
    "measured removals meet that bound at every degree",
    strict=True,
)
def test_full_criterion_ratio_shape_4363_as_stated(removal_shape_1):
    _, ratio, _ = removal_shape_1
    assert round(ratio, 3) == pytest.approx(29.397, abs=1e-3)


def test_removals_match_rank_defect_shape_5373(removal_shape_2):
    rows, _, elapsed = removal_shape_2
    assert elapsed < 600.0
    computed = [r for r in rows if r[2] is not None]
    assert len(computed) >= 6  # module degrees 0..5 of 0..8
    for delta, nrows, meas, pred in computed:
        assert meas == pred, f"delta={delta}: measured {meas} != predicted {pred}"
    # the three layers beyond the computed range use the same prediction,
    # which the computed range validated degree by degree
    assert [r[3] for r in computed[3:]] == [105, 525, 1575]


def test_full_criterion_ratio_shape_5373(removal_shape_2):
    _, ratio, _ = removal_shape_2
    assert round(ratio, 3) == pytest.approx(43.412, abs=1e-3)


@pytest.mark.xfail(
    reason="stated ratio 41.006 matches neither the rank-defect removal "
    "count (921690/21231 = 43.412) nor the closed-form removal count "
    "(921690/26361 = 34.964)",
    strict=True,
)
def test_full_criterion_ratio_shape_5373_as_stated(removal_shape_2):
    _, ratio, _ = removal_shape_2
    assert round(ratio, 3) == pytest.approx(41.006, abs=1e-3)


# -- 3: oracle equivalence on the instance battery --------------------------


def test_oracle_equivalence_battery(battery):
    entries, elapsed = battery
    assert len(entries) >= 20
    for e in entries:
        assert e.seeded.lm_set() == e.oracle.lm_set(), e.label
    assert elapsed < 300.0


# -- 4: per-degree ranks equal the Hilbert-function closed forms ------------


def test_ranks_match_hilbert_functions(battery):
    entries, _ = battery
    for e in entries:
        for st in e.oracle.stats:
            if e.kind == "matrix":
                pred = hf_minors_ideal(e.n, e.p, e.q, e.d0, st.degree)
            else:
                pred = mono_count(e.n, st.degree) - hf_crit(
                    e.n, e.p, e.d0, st.degree, "derived"
                )
            assert st.rank == pred, f"{e.label} degree {st.degree}"


# -- 5: H is sound against the brute-force syzygy kernel --------------------


def test_h_sound_against_kernel(battery):
    entries, _ = battery
    seen_nonempty = 0
    for e in entries:
        A = e.A
        offset = 0 if e.kind == "matrix" else e.p
        cols = subsets_lex(A.q, A.p)
        layers = {}
        for tau, gen in e.H:
            if sum(tau) <= 2:
                layers.setdefault(sum(tau), []).append((tau, gen - offset))
        if layers:
            seen_nonempty += 1
        for delta, items in layers.items():
            lm_true = brute_kernel_lms(A, delta)
            for tau, gen in items:
                assert (cols[gen], tau) in lm_true, e.label
    assert seen_nonempty >= 10


# -- 6: binomial closed form equals the series truncation -------------------


def test_semiregular_closed_form_full_grid():
    t0 = time.perf_counter()
    for n in range(1, 7):
        for m in range(1, 13):
            for d0 in range(1, 5):
                for d in range(0, 31):
                    assert hf_semiregular_binomial(n, m, d0, d) == hf_semiregular(
                        n, m, d0, d
                    ), (n, m, d0, d)
    assert time.perf_counter() - t0 < 1.0


# -- 7: the seeded syzygy set only ever saves work ---------------------------


def test_row_saving_monotonicity(battery):
    entries, _ = battery
    strict_seen = 0
    for e in entries:
        assert e.seeded.total_rows_built() <= e.bare.total_rows_built(), e.label
        assert (
            e.seeded.total_zero_reductions() <= e.bare.total_zero_reductions()
        ), e.label
        # for p = 1 the prefix ideals coincide with what the earlier-generator
        # rule already skips, so the seed only wins strictly from p >= 2 on
        if e.kind == "matrix" and e.q > e.p >= 2:
            assert e.seeded.total_rows_built() < e.bare.total_rows_built(), e.label
            strict_seen += 1
    assert strict_seen >= 6


# -- 8: the basis is stable past the degree bound ----------------------------


def test_degree_bound_stability():
    t0 = time.perf_counter()
    assert degree_bound_crit(3, 1, 2) == 9
    for seed in (0, 1):
        inst = random_crit_instance(InstanceSpec(3, 1, 3, 2, seed=seed))
        at_bound = crit_gb(inst.F, inst.g, 9)
        beyond = crit_gb(inst.F, inst.g, 11)
        assert at_bound.lm_set() == beyond.lm_set()
    assert time.perf_counter() - t0 < 60.0


# -- 9: the rank data picks exactly one entry-degree convention --------------


def test_mode_verdict_unanimous():
    reports = []
    for n, p, d0 in [(2, 1, 2), (3, 1, 2), (3, 2, 2), (4, 1, 2), (3, 1, 3)]:
        inst = random_crit_instance(InstanceSpec(n, p, max(p + 1, n), d0, seed=0))
        reports.append(verify_instance(inst))
    assert len(reports) >= 5
    for rep in reports:
        assert rep.verdict == "derived"
        assert rep.ranks_ok and rep.h_ok
        assert "mode verdict: derived" in rep.text()
