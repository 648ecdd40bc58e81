"""Minors and Jacobians, the first boundary of the Eagon-Northcott complex,
the syzygy leading-term set H built from column-prefix ideals, and the two
drivers: the maximal-minor run and the critical-point run.

Column conventions are 0-based internally: J_k is the ideal of the first k
columns (indices 0..k-1), and the positions paired with its leading
monomials are the p-subsets T with min(T) = k, i.e. exactly the minors
whose leftmost column is the first one outside the prefix.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .algebra import ModuleElement, Poly, PolyMatrix, mono_divides, partial_derivative
from .hilbert import (
    degree_bound_crit,
    degree_bound_minors,
    hf_ideal_generic_forms,
)
from .sig_gb import GBResult, SyzygySignatureSet, lazard_gb, sig_gb


@lru_cache(maxsize=None)
def subsets_lex(q: int, r: int) -> tuple:
    """All r-subsets of range(q), ascending lexicographic."""
    return tuple(combinations(range(q), r))


@dataclass(frozen=True)
class MinorIndex:
    """A column selection and its rank in the ascending-lex enumeration."""

    cols: tuple
    ordinal: int

    @classmethod
    def from_cols(cls, q: int, cols: tuple) -> "MinorIndex":
        cols = tuple(cols)
        return cls(cols, subsets_lex(q, len(cols)).index(cols))

    @classmethod
    def all(cls, q: int, r: int) -> list:
        return [cls(c, i) for i, c in enumerate(subsets_lex(q, r))]


def _det(A: PolyMatrix, rows: tuple, cols: tuple, memo: dict) -> Poly:
    """Determinant of the selected square submatrix, cofactor expansion
    along the first selected row with shared-subdeterminant memoization."""
    key = (rows, cols)
    if key in memo:
        return memo[key]
    if len(rows) == 1:
        out = A.entries[rows[0]][cols[0]]
    else:
        out = Poly.zero(A.n, A.field)
        sub_rows = rows[1:]
        for t, c in enumerate(cols):
            entry = A.entries[rows[0]][c]
            if entry.is_zero():
                continue
            minor = _det(A, sub_rows, cols[:t] + cols[t + 1 :], memo)
            term = entry.mul(minor)
            out = out.add(term) if t % 2 == 0 else out.sub(term)
    memo[key] = out
    return out


def minors(A: PolyMatrix, r: int) -> list:
    """Order-r minors.  r = p: the C(q,p) maximal minors in ascending lex
    column order.  r < p: ascending lex on (column tuple, row tuple)."""
    if not 1 <= r <= A.p:
        raise ValueError(f"minor order {r} out of range 1..{A.p}")
    memo: dict = {}
    if r == A.p:
        rows = tuple(range(A.p))
        return [_det(A, rows, cols, memo) for cols in subsets_lex(A.q, r)]
    return [
        _det(A, rows, cols, memo)
        for cols in subsets_lex(A.q, r)
        for rows in subsets_lex(A.p, r)
    ]


def jacobian(g: Poly, F: list) -> PolyMatrix:
    """(p+1) x n matrix of partials: row 0 is the gradient of g, row i+1 the
    gradient of f_i.  Entry degree is one below the common input degree."""
    degs = {g.degree} | {f.degree for f in F}
    if len(degs) != 1 or None in degs:
        raise ValueError(f"g and F must share one degree, got {degs}")
    d0 = g.degree
    if d0 == 1:
        warnings.warn("degree-1 system: Jacobian entries are constants")
    n = g.n
    rows = [g] + list(F)
    entries = [[partial_derivative(h, j) for j in range(n)] for h in rows]
    return PolyMatrix(len(rows), n, d0 - 1, entries)


@dataclass
class CritSystem:
    """A critical-point input: p forms F, objective g, and jac(g, F)."""

    F: list
    g: Poly
    jac: PolyMatrix

    @classmethod
    def build(cls, g: Poly, F: list) -> "CritSystem":
        if len(F) < 1:
            raise ValueError("need p >= 1 constraint forms")
        if len(F) + 1 > g.n:
            raise ValueError(f"need p + 1 <= n, got p={len(F)}, n={g.n}")
        return cls(list(F), g, jacobian(g, F))

    @property
    def d0(self) -> int:
        return self.g.degree


# ---------------------------------------------------------------------------
# Eagon-Northcott first syzygies


def en_first_syzygy(A: PolyMatrix, dup_row: int, cols: tuple) -> ModuleElement:
    """Image of e_dup_row (x) (e_{cols}) under the first boundary map: the
    Laplace expansion of the maximal minor of the (p+1)-column selection with
    row dup_row duplicated, written over the wedge basis of p-subsets."""
    cols = tuple(cols)
    if len(cols) != A.p + 1 or any(a >= b for a, b in zip(cols, cols[1:])):
        raise ValueError(f"need a strictly increasing (p+1)-tuple, got {cols}")
    if not 0 <= dup_row < A.p:
        raise ValueError(f"row {dup_row} out of range 0..{A.p - 1}")
    comps = {}
    for t, c in enumerate(cols):
        entry = A.entries[dup_row][c]
        if entry.is_zero():
            continue
        pos = cols[:t] + cols[t + 1 :]
        comps[pos] = entry if t % 2 == 0 else entry.scale(-1)
    return ModuleElement(A.n, A.field, comps)


def en_syzygy_generators(A: PolyMatrix) -> list:
    """All first-boundary images, (dup_row, column tuple) ascending."""
    return [
        en_first_syzygy(A, i, J)
        for i in range(A.p)
        for J in subsets_lex(A.q, A.p + 1)
    ]


def minor_eval(elem: ModuleElement, minors_by_pos: dict) -> Poly:
    """Apply the evaluation map sending each wedge position to its minor."""
    out = Poly.zero(elem.n, elem.field)
    for pos, poly in elem.components.items():
        out = out.add(poly.mul(minors_by_pos[pos]))
    return out


# ---------------------------------------------------------------------------
# the leading-term set H


def en_leading_terms(
    A: PolyMatrix, D: int, *, gen_offset: int = 0
) -> SyzygySignatureSet:
    """Syzygy signatures for the maximal-minor system of A up to degree D:
    for k = 1..q-p, a Groebner basis of the column-prefix ideal J_k up to
    degree D - p*entry_degree contributes LM(g)*e_T for every position T
    with smallest column exactly k (0-based).

    Signature positions are minor ordinals plus gen_offset, matching a
    generator list whose minors block starts at index gen_offset.

    One sig_gb run on the column-major flattening of the first q-p columns
    yields every prefix lead-monomial ideal at once: signature-ordered
    elimination only ever adds earlier-generator rows, so the echelon leads
    attributed to generators 0..p*k-1 are exactly LM(J_k) degree by degree.
    The globally minimalized basis is not enough here: a J_k element whose
    lead is absorbed by a later column's lead never enters it.
    """
    p, q = A.p, A.q
    H = SyzygySignatureSet()
    delta_max = D - p * A.entry_degree
    if q == p or delta_max < A.entry_degree:
        return H
    col_gens = [A.entries[i][k] for k in range(q - p) for i in range(p)]
    degrees = [A.entry_degree] * len(col_gens)
    gb = sig_gb(col_gens, delta_max, degrees=degrees)
    ordinal = {c: j for j, c in enumerate(subsets_lex(q, p))}
    for k in range(1, q - p + 1):
        by_deg: dict = {}
        for (d, m), lms in gb.lm_by_deg_gen.items():
            if m < p * k:
                by_deg.setdefault(d, set()).update(lms)
        kept: list = []  # minimal generators of the prefix lead ideal
        for d in sorted(by_deg):
            for mono in sorted(by_deg[d]):
                if not any(mono_divides(t, mono) for t in kept):
                    kept.append(mono)
        if not kept:
            continue
        tails = subsets_lex(q - k - 1, p - 1)  # relative choices above column k
        for mono in kept:
            for tail in tails:
                T = (k,) + tuple(k + 1 + t for t in tail)
                H.add(mono, gen_offset + ordinal[T])
    return H


# ---------------------------------------------------------------------------
# drivers


def max_minors_sig_gb(A: PolyMatrix, D: Optional[int] = None) -> GBResult:
    """(D, grevlex)-Groebner basis of the maximal-minor ideal, seeding the
    syzygy criterion with H."""
    if D is None:
        D = degree_bound_minors(A.n, A.p, A.entry_degree)
    H = en_leading_terms(A, D)
    gens = minors(A, A.p)
    degrees = [A.p * A.entry_degree] * len(gens)
    _warn_if_degenerate(A, D)
    return sig_gb(gens, D, H, degrees=degrees)


def _warn_if_degenerate(A: PolyMatrix, D: int):
    """Cheap genericity probe: the full column ideal of the first q-p columns
    must have the Hilbert function of as many generic forms in low degree."""
    k = A.q - A.p
    if k < 1:
        return
    d0 = A.entry_degree
    if d0 < 1:
        return
    gens = [A.entries[i][c] for c in range(k) for i in range(A.p)]
    probe = min(2 * d0, D)
    gb = lazard_gb(gens, probe, degrees=[d0] * len(gens))
    for st in gb.stats:
        expected = hf_ideal_generic_forms(A.n, A.p * k, d0, st.degree)
        if st.rank != expected:
            warnings.warn(
                f"column ideal rank {st.rank} != generic {expected} at degree "
                f"{st.degree}: matrix is not generic, H may be unsound"
            )
            return


def crit_gb(F: list, g: Poly, D: Optional[int] = None) -> GBResult:
    """(D, grevlex)-Groebner basis of <F> + maximal minors of jac(g, F).

    Generator order: f_1..f_p first, then the minors in ascending lex column
    order at positions p..p+C(n,p+1)-1; H is built from the column-prefix
    ideals of the Jacobian and shifted onto the minors block.
    """
    if g.degree is not None and g.degree < 2:
        raise ValueError("degree-1 critical systems have a constant Jacobian")
    sysm = CritSystem.build(g, F)
    d0 = sysm.d0
    n, p = g.n, len(F)
    if D is None:
        D = degree_bound_crit(n, p, d0)
    jac = sysm.jac
    minor_deg = (p + 1) * jac.entry_degree
    M = minors(jac, p + 1)
    H = en_leading_terms(jac, D, gen_offset=p)
    gens = list(F) + M
    degrees = [d0] * p + [minor_deg] * len(M)
    return sig_gb(gens, D, H, degrees=degrees)


# ---------------------------------------------------------------------------
# direct-sum syzygy report


@dataclass
class DirectSumRow:
    degree: int
    dim_syz_total: int
    dim_syz_F: int
    dim_syz_minors: int
    dim_cross: int
    dim_product: int

    @property
    def ok(self) -> bool:
        return self.dim_cross == self.dim_product


@dataclass
class DirectSumReport:
    rows: list

    @property
    def all_ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def text(self) -> str:
        lines = ["d  syz(F+M)  syz(F)  syz(M)  cross  product  ok"]
        for r in self.rows:
            lines.append(
                f"{r.degree:<3d}{r.dim_syz_total:>8d}{r.dim_syz_F:>8d}"
                f"{r.dim_syz_minors:>8d}{r.dim_cross:>7d}{r.dim_product:>9d}  "
                f"{'yes' if r.ok else 'NO'}"
            )
        return "\n".join(lines)


def _dim_syzygies(gens, degrees, d) -> int:
    """Rows minus rank of the full degree-d matrix."""
    from .hilbert import mono_count

    n = gens[0].n
    nrows = sum(mono_count(n, d - deg) for deg in degrees)
    if nrows == 0:
        return 0
    from .macaulay import full_macaulay

    M = full_macaulay(
        [ModuleElement.from_poly(f) if isinstance(f, Poly) else f for f in gens],
        degrees,
        d,
        [0],
    )
    return nrows - M.rank


def _ideal_dim(gens, degrees, d) -> int:
    from .macaulay import full_macaulay

    live = [(f, deg) for f, deg in zip(gens, degrees) if deg <= d]
    if not live:
        return 0
    M = full_macaulay(
        [ModuleElement.from_poly(f) for f, _ in live],
        [deg for _, deg in live],
        d,
        [0],
    )
    return M.rank


def syzygy_direct_sum_check(F: list, g: Poly, D: int) -> DirectSumReport:
    """Degree-by-degree comparison of the syzygies of the concatenated
    critical system against the blockwise syzygies plus the unavoidable
    cross part, which generically is exactly the product ideal <F>*I_minors
    (the content of the Tor-independence property).  Degenerate inputs show
    up as cross > product."""
    if len(F) < 1:
        raise ValueError("need p >= 1")
    sysm = CritSystem.build(g, F)
    d0 = sysm.d0
    p = len(F)
    M = minors(sysm.jac, p + 1)
    minor_deg = (p + 1) * sysm.jac.entry_degree
    degF = [d0] * p
    degM = [minor_deg] * len(M)
    prod = [f.mul(m) for f in F for m in M]
    degP = [d0 + minor_deg] * len(prod)
    rows = []
    for d in range(min(d0, minor_deg), D + 1):
        total = _dim_syzygies(list(F) + M, degF + degM, d)
        sF = _dim_syzygies(F, degF, d)
        sM = _dim_syzygies(M, degM, d)
        cross = total - sF - sM
        dim_prod = _ideal_dim(prod, degP, d) if d >= degP[0] else 0
        rows.append(DirectSumRow(d, total, sF, sM, cross, dim_prod))
    return DirectSumReport(rows)
