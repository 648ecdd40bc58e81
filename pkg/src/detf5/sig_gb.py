"""Matrix-F5 over a free module with a precomputed syzygy-signature set,
the criterion-free Lazard oracle, and a Groebner-basis checker.

Candidate rows at degree d for generator i are all signatures tau*e_i with
deg tau = d - deg f_i.  A candidate is skipped when

  * its signature is covered by the syzygy set (a stored tau'*e_i divides
    tau*e_i), or
  * s = 1 and tau is a leading monomial of the echelonized prefix matrix
    of f_0..f_{i-1} at degree d - deg f_i (the F5 criterion).

Signatures of rows that reduce to zero are added to the syzygy set, which
is divisibility-closed, so every later multiple of a collapsed signature
is skipped without being built.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .algebra import (
    ModuleElement,
    Poly,
    enumerate_monomials,
    mono_divides,
    pot_key,
)
from .macaulay import MacaulayMatrix, RowStats, Signature, build_macaulay, full_macaulay


class SyzygySignatureSet:
    """Leading monomials of known syzygies, bucketed by generator position;
    membership is closed under multiples at query time."""

    def __init__(self, entries=None):
        self.by_gen: dict = {}
        if entries:
            for tau, gen in entries:
                self.add(tau, gen)

    def covers(self, tau: tuple, gen: int) -> bool:
        return any(mono_divides(t, tau) for t in self.by_gen.get(gen, ()))

    def add(self, tau: tuple, gen: int) -> bool:
        """Insert unless already covered; drops stored multiples of tau."""
        if self.covers(tau, gen):
            return False
        bucket = self.by_gen.setdefault(gen, [])
        bucket[:] = [t for t in bucket if not mono_divides(tau, t)]
        bucket.append(tau)
        return True

    def copy(self) -> "SyzygySignatureSet":
        out = SyzygySignatureSet()
        out.by_gen = {g: list(ts) for g, ts in self.by_gen.items()}
        return out

    def shifted(self, offset: int) -> "SyzygySignatureSet":
        out = SyzygySignatureSet()
        out.by_gen = {g + offset: list(ts) for g, ts in self.by_gen.items()}
        return out

    def count_layer(self, n: int, delta: int, gens=None) -> int:
        """Number of degree-delta module monomials covered, over the given
        generator positions (default: all stored positions)."""
        positions = self.by_gen.keys() if gens is None else gens
        total = 0
        for g in positions:
            bucket = self.by_gen.get(g, ())
            if not bucket:
                continue
            total += sum(
                1
                for m in enumerate_monomials(n, delta)
                if any(mono_divides(t, m) for t in bucket)
            )
        return total

    def __len__(self):
        return sum(len(ts) for ts in self.by_gen.values())

    def __iter__(self):
        for g, ts in sorted(self.by_gen.items(), key=lambda kv: str(kv[0])):
            for t in ts:
                yield (t, g)


@dataclass
class GBResult:
    """Per-generator basis sets plus run accounting."""

    n: int
    field: object
    positions: list
    D: int
    basis: dict  # gen index -> list of (Signature, lm (index, mono), ModuleElement)
    stats: list  # RowStats per degree
    zero_sigs: list  # Signature list, chronological
    # (degree, gen) -> echelon lead monomials of rows with that signature
    # generator; populated only on rank-1 runs, where generator prefixes are
    # stable under the signature-ordered elimination
    lm_by_deg_gen: dict = dc_field(default_factory=dict)

    def lm_set(self) -> frozenset:
        return frozenset(lm for elems in self.basis.values() for (_, lm, _) in elems)

    def elements(self) -> list:
        return [el for elems in self.basis.values() for (_, _, el) in elems]

    def polys(self) -> list:
        return [el.as_poly() for el in self.elements()]

    def basis_size(self) -> int:
        return sum(len(v) for v in self.basis.values())

    def total_rows_built(self) -> int:
        return sum(st.rows_built for st in self.stats)

    def total_zero_reductions(self) -> int:
        return sum(st.rows_reduced_to_zero for st in self.stats)

    def stats_csv(self) -> list:
        return [st.csv() for st in self.stats]


def _normalize_gens(F, degrees=None):
    """Wrap Poly inputs as rank-1 module elements; return (gens, degrees, positions)."""
    gens = []
    for f in F:
        gens.append(ModuleElement.from_poly(f) if isinstance(f, Poly) else f)
    if degrees is None:
        degrees = []
        for f in gens:
            if f.is_zero():
                raise ValueError(
                    "zero generator without a declared degree; pass degrees="
                )
            degrees.append(f.degree)
    if len(degrees) != len(gens):
        raise ValueError("degrees list does not match generator count")
    return gens, list(degrees)


def _lm_divisible(lm, basis_lms: dict) -> bool:
    idx, mono = lm
    return any(mono_divides(t, mono) for t in basis_lms.get(idx, ()))


def _run(F, D, S, *, degrees=None, positions=None, use_criteria=True):
    gens, degrees = _normalize_gens(F, degrees)
    n = gens[0].n
    fld = gens[0].field
    s_positions = positions
    if s_positions is None:
        seen = {idx for g in gens for idx in g.components}
        s_positions = sorted(seen, key=lambda i: (isinstance(i, tuple), i)) or [0]
    if any(degrees[i] > degrees[i + 1] for i in range(len(degrees) - 1)):
        if S is not None and len(S):
            raise ValueError(
                "generators must be sorted by non-decreasing degree when a "
                "syzygy set is supplied (its positions index the given order)"
            )
        order = sorted(range(len(gens)), key=lambda i: degrees[i])
        gens = [gens[i] for i in order]
        degrees = [degrees[i] for i in order]
    s_is_one = s_positions == [0]
    crit = S.copy() if (use_criteria and S is not None) else SyzygySignatureSet()
    basis: dict = {i: [] for i in range(len(gens))}
    basis_lms: dict = {}  # position -> list of lead monomials collected so far
    lm_by_deg_gen: dict = {}  # (delta, i) -> set of lead monomials (s=1 only)
    prefix_cache: dict = {}
    stats: list = []
    zero_sigs: list = []

    def prefix_lms(delta: int, upto: int) -> frozenset:
        # leading monomials of the echelonized matrix of f_0..f_{upto-1}
        key = (delta, upto)
        if key not in prefix_cache:
            acc = set()
            for m in range(upto):
                acc |= lm_by_deg_gen.get((delta, m), set())
            prefix_cache[key] = frozenset(acc)
        return prefix_cache[key]

    dmin = min(degrees)
    if D < dmin:
        warnings.warn(f"degree bound {D} below all generator degrees; empty basis")
        return GBResult(n, fld, s_positions, D, basis, stats, zero_sigs)

    for d in range(dmin, D + 1):
        st = RowStats(degree=d)
        sigs = []
        for i, deg in enumerate(degrees):
            if deg > d:
                continue
            delta = d - deg
            f5_set = (
                prefix_lms(delta, i)
                if (use_criteria and s_is_one and i > 0)
                else None
            )
            for tau in enumerate_monomials(n, delta):
                if use_criteria and crit.covers(tau, i):
                    st.rows_skipped_by_crit += 1
                    continue
                if f5_set is not None and tau in f5_set:
                    st.rows_skipped_by_crit += 1
                    continue
                sigs.append(Signature(tau, i))
        st.rows_built = len(sigs)
        M = build_macaulay(gens, degrees, d, s_positions, sigs=sigs)
        M.echelonize()
        st.rank = M.rank
        st.rows_reduced_to_zero = len(M.zero_sigs)
        for sig in M.zero_sigs:
            zero_sigs.append(sig)
            if use_criteria:
                crit.add(sig.tau, sig.gen)
        leads = M.leading_monomials()
        for r, sig in enumerate(M.out_sigs):
            lm = leads[r]
            if not _lm_divisible(lm, basis_lms):
                basis_lms.setdefault(lm[0], []).append(lm[1])
                basis[sig.gen].append((sig, lm, M.row_as_element(r)))
            if s_is_one:
                # feeds the F5 criterion of later degrees: these are the
                # leading monomials of the echelonized degree-d matrix
                lm_by_deg_gen.setdefault((d, sig.gen), set()).add(lm[1])
        stats.append(st)
    return GBResult(n, fld, s_positions, D, basis, stats, zero_sigs, lm_by_deg_gen)


def sig_gb(F, D: int, S: Optional[SyzygySignatureSet] = None, *, degrees=None, positions=None) -> GBResult:
    """(D, POT)-Groebner basis of <F> with all criteria active."""
    return _run(F, D, S, degrees=degrees, positions=positions, use_criteria=True)


def lazard_gb(F, D: int, *, degrees=None, positions=None) -> GBResult:
    """Criterion-free oracle: every candidate row of every degree is built."""
    return _run(F, D, None, degrees=degrees, positions=positions, use_criteria=False)


def is_groebner_up_to(G: list, I_gens: list, D: int, *, degrees=None, positions=None) -> bool:
    """True iff LM(G) covers the leading monomials of the full echelonized
    Macaulay matrix of I_gens in every degree <= D, and G lies in <I_gens>."""
    import numpy as np

    gens, degrees = _normalize_gens(I_gens, degrees)
    n = gens[0].n
    if positions is None:
        seen = {idx for g in gens for idx in g.components}
        positions = sorted(seen, key=lambda i: (isinstance(i, tuple), i)) or [0]
    G_elems = [ModuleElement.from_poly(g) if isinstance(g, Poly) else g for g in G]
    g_lms: dict = {}
    for g in G_elems:
        idx, mono = g.lm()
        g_lms.setdefault(idx, []).append(mono)
    mats: dict = {}

    def mat(d):
        if d not in mats:
            mats[d] = full_macaulay(gens, degrees, d, positions)
        return mats[d]

    # membership: each element of G must reduce to zero against the full
    # matrix at its own degree
    for g in G_elems:
        M = mat(g.degree)
        vec = np.zeros(M.ncols)
        for idx, poly in g.components.items():
            for mono, c in poly.terms.items():
                vec[M.col_index[(idx, mono)]] = c
        if np.any(M.reduce_vector(vec)):
            return False
    for d in range(min(degrees), D + 1):
        for lm in mat(d).leading_monomials():
            if not _lm_divisible(lm, g_lms):
                return False
    return True
