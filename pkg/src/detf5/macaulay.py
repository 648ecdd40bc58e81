"""Degree-d Macaulay matrices with signature-tagged rows, echelonized by
valid row operations only (a row may absorb multiples of strictly
smaller-signature rows, never the reverse).

Rows are processed in increasing signature order, so every registered
pivot has smaller signature than the row being reduced.  Reduction uses a
shadow copy of the pivot rows kept fully interreduced (unit pivots, pivot
columns cleared everywhere): each shadow row is a combination of
smaller-signature rows, so reducing against the shadow is a valid
operation and yields the canonical fully-reduced form in one pass.  The
output row stored for each signature is its state at registration time;
later pivots never touch it.

Arithmetic: coefficients live in [0, p) inside float64 arrays.  With
p <= 65521 a dot product of up to ~2 million terms stays below 2**53, so
BLAS matmuls are exact; _mod_matmul splits longer sums defensively.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import NamedTuple, Optional

import numpy as np

from .algebra import (
    ModuleElement,
    Poly,
    grevlex_key,
    mono_mul,
    pot_key,
)
from .field import PrimeField


class Signature(NamedTuple):
    """The module monomial tau*e_gen labeling the row encoding tau*f_gen."""

    tau: tuple
    gen: int

    def key(self):
        return (self.gen, grevlex_key(self.tau))


@dataclass
class RowStats:
    """Per-degree accounting for one matrix-building pass."""

    degree: int
    rows_built: int = 0
    rows_skipped_by_crit: int = 0
    rows_reduced_to_zero: int = 0
    rank: int = 0

    @property
    def candidates(self) -> int:
        return self.rows_built + self.rows_skipped_by_crit

    def csv(self) -> str:
        return (
            f"{self.degree},{self.rows_built},{self.rows_skipped_by_crit},"
            f"{self.rows_reduced_to_zero},{self.rank}"
        )


ROWSTATS_CSV_HEADER = "d,rows_built,rows_skipped,zero_reductions,rank"


def _mod_matmul(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Exact (A @ B) % p in float64, splitting the inner dimension whenever
    the accumulated sum could reach 2**53."""
    k = A.shape[-1]
    kmax = max(1, int(2**53 // ((p - 1) * (p - 1))))
    if k <= kmax:
        return (A @ B) % p
    acc = np.zeros((A.shape[0], B.shape[1]))
    for lo in range(0, k, kmax):
        acc = (acc + A[:, lo : lo + kmax] @ B[lo : lo + kmax]) % p
    return acc


class MacaulayMatrix:
    """Coefficient matrix of {tau * f_gen} at one degree.

    columns: module monomials (index, monomial), strictly decreasing POT,
    so the leading term of a row is its first nonzero column.
    """

    def __init__(self, degree: int, n: int, field: PrimeField, columns: list):
        self.degree = degree
        self.n = n
        self.field = field
        self.columns = columns
        self.col_index = {c: j for j, c in enumerate(columns)}
        self.sigs: list = []
        self.block: Optional[np.ndarray] = None
        self.echelonized = False
        self.zero_sigs: list = []
        self.lead_cols: list = []  # per surviving row, aligned with out_sigs
        self.out_sigs: list = []
        self.out_rows: Optional[np.ndarray] = None
        self._shadow: Optional[np.ndarray] = None
        self._pivot_cols: Optional[np.ndarray] = None
        self._npiv = 0

    # -- construction

    @property
    def ncols(self) -> int:
        return len(self.columns)

    @property
    def nrows(self) -> int:
        return len(self.sigs)

    @property
    def rank(self) -> int:
        if not self.echelonized:
            raise RuntimeError("echelonize first")
        return self._npiv

    # -- echelonization

    def echelonize(self, chunk: int = 256):
        """Valid-operation echelonization; afterwards out_sigs/out_rows hold
        the surviving rows (unit leading coefficient, fully reduced against
        smaller-signature pivots) and zero_sigs the collapsed signatures."""
        if self.echelonized:
            return self
        p = self.field.modulus
        A = self.block
        nrows, ncols = (A.shape if A is not None else (0, self.ncols))
        cap = min(nrows, ncols)
        shadow = np.zeros((cap, ncols))
        pcols = np.zeros(cap, dtype=np.int64)
        npiv = 0
        out_rows = np.zeros((cap, ncols))
        keys = [s.key() for s in self.sigs]
        assert all(keys[i] < keys[i + 1] for i in range(len(keys) - 1)), (
            "rows must arrive in strictly increasing signature order"
        )
        for lo in range(0, nrows, chunk):
            hi = min(lo + chunk, nrows)
            block = A[lo:hi]
            base = npiv  # pivots known before this chunk
            if base:
                block -= _mod_matmul(block[:, pcols[:base]], shadow[:base], p)
                block %= p
            for r in range(hi - lo):
                row = block[r]
                if npiv > base:
                    new_cols = pcols[base:npiv]
                    coeffs = row[new_cols]
                    if np.any(coeffs):
                        row -= _mod_matmul(coeffs[None, :], shadow[base:npiv], p)[0]
                        row %= p
                nz = np.nonzero(row)[0]
                if nz.size == 0:
                    self.zero_sigs.append(self.sigs[lo + r])
                    continue
                c = int(nz[0])
                inv = self.field.inv(int(row[c]))
                row *= inv
                row %= p
                out_rows[npiv] = row
                self.out_sigs.append(self.sigs[lo + r])
                self.lead_cols.append(c)
                if npiv:
                    colvals = shadow[:npiv, c].copy()
                    touched = np.nonzero(colvals)[0]
                    if touched.size:
                        shadow[touched] -= colvals[touched, None] * row[None, :]
                        shadow[touched] %= p
                shadow[npiv] = row
                pcols[npiv] = c
                npiv += 1
        self._shadow = shadow[:npiv]
        self._pivot_cols = pcols[:npiv]
        self._npiv = npiv
        self.out_rows = out_rows[:npiv]
        self.block = None  # raw rows no longer needed
        self.echelonized = True
        return self

    def reduce_vector(self, vec: np.ndarray) -> np.ndarray:
        """Canonical residue of a coefficient vector modulo the row space."""
        if not self.echelonized:
            raise RuntimeError("echelonize first")
        p = self.field.modulus
        v = np.asarray(vec, dtype=np.float64) % p
        if self._npiv:
            coeffs = v[self._pivot_cols]
            if np.any(coeffs):
                v = (v - _mod_matmul(coeffs[None, :], self._shadow, p)[0]) % p
        return v

    # -- views

    def leading_monomials(self) -> list:
        """(index, monomial) leading module monomial per surviving row."""
        return [self.columns[c] for c in self.lead_cols]

    def row_as_element(self, i: int) -> ModuleElement:
        comps: dict = {}
        row = self.out_rows[i]
        for j in np.nonzero(row)[0]:
            idx, mono = self.columns[j]
            comps.setdefault(idx, {})[mono] = int(row[j])
        return ModuleElement(
            self.n,
            self.field,
            {idx: Poly(self.n, self.field, t) for idx, t in comps.items()},
        )

    def rows_as_elements(self) -> list:
        return [(self.out_sigs[i], self.row_as_element(i)) for i in range(self._npiv)]

    def dump_rows(self) -> str:
        """Debug text: one row per line, `signature ; col:coeff pairs`."""
        from .algebra import format_poly  # local import to avoid cycle noise

        def mono_text(m):
            f = Poly.monomial(self.n, self.field, m)
            return format_poly(f)

        lines = []
        for i in range(self._npiv):
            sig = self.out_sigs[i]
            row = self.out_rows[i]
            pairs = " ".join(
                f"{self.columns[j][0]}*{mono_text(self.columns[j][1])}:{int(row[j])}"
                for j in np.nonzero(row)[0]
            )
            lines.append(f"{mono_text(sig.tau)}*e{sig.gen} ; {pairs}")
        return "\n".join(lines)


def module_columns(positions: list, n: int, d: int) -> list:
    """Columns (index, monomial) of the degree-d slice, strictly decreasing POT."""
    from .algebra import enumerate_monomials

    cols = [(idx, m) for idx in positions for m in enumerate_monomials(n, d)]
    cols.sort(key=lambda c: pot_key(c[0], c[1]), reverse=True)
    return cols


def build_macaulay(
    gens: list,
    degrees: list,
    d: int,
    positions: list,
    sigs: Optional[list] = None,
) -> MacaulayMatrix:
    """Assemble the degree-d matrix.

    gens: ModuleElement generators f_0..f_{t-1} (zero allowed, its declared
    degree coming from `degrees`).  sigs: explicit row signatures; default is
    every tau*e_i with deg tau = d - degrees[i] (the full Lazard row set).
    """
    from .algebra import ModuleElement, enumerate_monomials

    if not gens:
        raise ValueError("no generators")
    gens = [f if isinstance(f, ModuleElement) else ModuleElement.from_poly(f) for f in gens]
    n = gens[0].n
    fld = gens[0].field
    for f, deg in zip(gens, degrees):
        if not f.is_zero() and f.degree != deg:
            raise ValueError(f"declared degree {deg} != actual {f.degree}")
    if sigs is None:
        sigs = [
            Signature(tau, i)
            for i, deg in enumerate(degrees)
            if d >= deg
            for tau in enumerate_monomials(n, d - deg)
        ]
    sigs = sorted(sigs, key=Signature.key)
    for a, b in zip(sigs, sigs[1:]):
        assert a != b, f"duplicate signature {a}"
    columns = module_columns(positions, n, d)
    M = MacaulayMatrix(d, n, fld, columns)
    M.sigs = sigs
    block = np.zeros((len(sigs), len(columns)))
    for r, sig in enumerate(sigs):
        f = gens[sig.gen]
        for idx, poly in f.components.items():
            for mono, c in poly.terms.items():
                block[r, M.col_index[(idx, mono_mul(sig.tau, mono))]] = c
    M.block = block
    return M


def full_macaulay(gens: list, degrees: list, d: int, positions: list) -> MacaulayMatrix:
    """Build the complete (criterion-free) degree-d matrix and echelonize."""
    return build_macaulay(gens, degrees, d, positions).echelonize()
