"""Hilbert-series closed forms: truncated series, Hilbert functions of
semi-regular quotients, column ideals, maximal-minor ideals and critical
ideals, syzygy counts, per-degree row counts, degree bounds and the
arithmetic-complexity estimate.

All counts are exact Python integers.  Binomials with a negative or
undersized upper index evaluate to 0; the alternating sums below rely on
that vanishing convention.

The entry-degree mode: 'derived' takes Jacobian entries at the degree
differentiation gives them, d0-1; 'literal' takes the input degree d0 at
face value.  Both are implemented; rank cross-validation (cmd_verify)
decides which one predicts actual Macaulay ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

MODES = ("derived", "literal")


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or a < b:
        return 0
    return comb(a, b)


def mono_count(n: int, d: int) -> int:
    """dim of the degree-d slice of k[x1..xn]."""
    if d < 0:
        return 0
    return binom(n + d - 1, n - 1)


# ---------------------------------------------------------------------------
# truncated power series


@dataclass(frozen=True)
class TruncatedSeries:
    """Non-negative power series kept up to its first non-positive
    coefficient.  coefficients[d] is valid for d < trunc_index; every later
    coefficient reads as 0."""

    coefficients: tuple
    nominal_length: int

    @property
    def trunc_index(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, d: int) -> int:
        if 0 <= d < len(self.coefficients):
            return self.coefficients[d]
        return 0


def series_quotient_truncate(P: list, Q: list, N: int) -> TruncatedSeries:
    """[P(t)/Q(t)]_+ up to degree N: power-series long division, cut at the
    first coefficient <= 0."""
    if not Q or Q[0] == 0:
        raise ValueError("Q(0) must be invertible")
    if abs(Q[0]) != 1:
        raise ValueError("Q(0) must be +-1 for integer series division")
    inv0 = Q[0]  # 1 or -1, its own inverse
    coeffs = []
    for d in range(N + 1):
        c = P[d] if d < len(P) else 0
        for k in range(1, min(d, len(Q) - 1) + 1):
            c -= Q[k] * coeffs[d - k]
        c *= inv0
        if c <= 0:
            break
        coeffs.append(c)
    return TruncatedSeries(tuple(coeffs), N)


def poly_mul_z(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_pow_z(a: list, e: int) -> list:
    out = [1]
    for _ in range(e):
        out = poly_mul_z(out, a)
    return out


def one_minus_t_pow(d0: int, m: int) -> list:
    """(1 - t^d0)^m as an integer coefficient list."""
    base = [0] * (d0 + 1)
    base[0] = 1
    base[d0] = -1
    return poly_pow_z(base, m)


# ---------------------------------------------------------------------------
# semi-regular sequences (Froberg truncation)


@lru_cache(maxsize=None)
def _semiregular_series(n: int, m: int, d0: int, length: int) -> TruncatedSeries:
    return series_quotient_truncate(one_minus_t_pow(d0, m), one_minus_t_pow(1, n), length)


def hf_semiregular(n: int, m: int, d0: int, d: int) -> int:
    """Quotient Hilbert function of n variables modulo m generic forms of
    degree d0: coefficient of t^d in [(1-t^d0)^m / (1-t)^n]_+ ."""
    if m < 1 or d0 < 1:
        raise ValueError("need m >= 1 and d0 >= 1")
    if d < 0:
        return 0
    return _semiregular_series(n, m, d0, d)[d]


def hf_semiregular_binomial(n: int, m: int, d0: int, d: int) -> int:
    """Closed alternating-binomial form of the same coefficient, with the
    first-non-positive truncation applied by scanning raw values upward.
    Uses no series arithmetic."""
    if d < 0:
        return 0

    def raw(e):
        return sum(
            (-1) ** j * binom(m, j) * mono_count(n, e - j * d0) for j in range(e // d0 + 1)
        )

    v = 1
    for e in range(0, d + 1):
        v = raw(e)
        if v <= 0:
            return 0
    return v


def semiregular_regularity(n: int, m: int, d0: int) -> int:
    """First degree with a non-positive series coefficient (the operational
    regularity used for case splits)."""
    # the quotient of m >= n generic forms is Artinian; n forms already give
    # socle degree n*(d0-1), so this window always contains the truncation
    probe = max(n, m) * d0 + n + 1
    return _semiregular_series(n, m, d0, probe).trunc_index


def hf_ideal_generic_forms(n: int, m: int, d0: int, d: int) -> int:
    """Ideal Hilbert function of m generic degree-d0 forms."""
    return mono_count(n, d) - hf_semiregular(n, m, d0, d)


# ---------------------------------------------------------------------------
# column ideals of the Jacobian (critical-point side)


def jac_entry_degree(d0: int, mode: str) -> int:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    return d0 - 1 if mode == "derived" else d0


def hf_column_ideal(n: int, p: int, d0: int, k: int, d: int, mode: str = "derived") -> int:
    """Ideal Hilbert function of J_k, the ideal of the leftmost k columns of
    the (p+1) x n Jacobian: (p+1)k generic forms of the mode's entry degree."""
    if not 1 <= k <= n - p - 1:
        raise ValueError(f"k={k} out of range 1..{n - p - 1}")
    return hf_ideal_generic_forms(n, (p + 1) * k, jac_entry_degree(d0, mode), d)


# ---------------------------------------------------------------------------
# maximal-minor ideals (via the Eagon-Northcott resolution)


def hf_minors_ideal(n: int, p: int, q: int, e: int, d: int) -> int:
    """Ideal Hilbert function of the maximal minors of a generic p x q matrix
    with entries of degree e: alternating sum over the resolution ranks."""
    if p > q:
        raise ValueError("need p <= q")
    total = 0
    for j in range(q - p + 1):
        total += (
            (-1) ** j
            * mono_count(n, d - (p + j) * e)
            * binom(p + j - 1, p - 1)
            * binom(q, p + j)
        )
    return total


# ---------------------------------------------------------------------------
# critical ideal <F> + maximal minors of jac(g, F)


def hf_crit(n: int, p: int, d0: int, d: int, mode: str = "derived") -> int:
    """Quotient Hilbert function of R / (<F> + I_{p+1}(jac)): convolution of
    the minor-ideal quotient with (1 - t^d0)^p for the p forms of F."""
    if p + 1 > n:
        raise ValueError("need p + 1 <= n")
    e = jac_entry_degree(d0, mode)
    total = 0
    for i in range(p + 1):
        dd = d - i * d0
        if dd < 0:
            continue
        quot_minors = mono_count(n, dd) - hf_minors_ideal(n, p + 1, n, e, dd)
        total += (-1) ** i * binom(p, i) * quot_minors
    return total


def hf_crit_series(n: int, p: int, d0: int, d: int, mode: str = "derived") -> int:
    """Same value through the explicit series product, for cross-checking."""
    e = jac_entry_degree(d0, mode)
    quot = [mono_count(n, dd) - hf_minors_ideal(n, p + 1, n, e, dd) for dd in range(d + 1)]
    factor = one_minus_t_pow(d0, p)
    return sum(factor[k] * quot[d - k] for k in range(min(d, len(factor) - 1) + 1))


# ---------------------------------------------------------------------------
# syzygy counts and row counts


def syzygy_count(n: int, p: int, q: int, d0: int, d: int) -> int:
    """Number of degree-(d - p*d0) leading terms contributed by the
    column-prefix construction for a generic p x q matrix with entries of
    degree d0 (the rows the criterion removes at matrix degree d)."""
    delta = d - p * d0
    if delta < 0:
        return 0
    total = 0
    for k in range(1, q - p + 1):
        hf_jk = hf_ideal_generic_forms(n, p * k, d0, delta)
        total += hf_jk * binom(q - k - 1, p - 1)
    return total


def rows_minors(n: int, p: int, q: int, d0: int, d: int) -> int:
    """Rows of the degree-d matrix for the maximal-minor system after the
    syzygy-criterion removals."""
    if d < p * d0:
        return 0
    return binom(q, p) * mono_count(n, d - p * d0) - syzygy_count(n, p, q, d0, d)


def crit_syzygy_count(n: int, p: int, d0: int, delta: int, mode: str = "derived") -> int:
    """Number of degree-delta leading terms the column-prefix construction
    contributes for the (p+1) x n Jacobian (the minors-block rows removed at
    matrix degree delta + (p+1)*entry_degree)."""
    if delta < 0:
        return 0
    total = 0
    for k in range(1, n - p - 1 + 1):
        total += hf_column_ideal(n, p, d0, k, delta, mode) * binom(n - k - 1, p)
    return total


def rows_crit(n: int, p: int, d0: int, d: int, mode: str = "derived") -> int:
    """Rows of the degree-d matrix for the critical-point system after the
    syzygy-criterion removals: p shifted copies for F, the minor block, minus
    the column-prefix removals."""
    e = jac_entry_degree(d0, mode)
    minor_deg = (p + 1) * e
    total = p * mono_count(n, d - d0) + mono_count(n, d - minor_deg) * binom(n, p + 1)
    return total - crit_syzygy_count(n, p, d0, d - minor_deg, mode)


# ---------------------------------------------------------------------------
# bounds


def degree_bound_minors(n: int, p: int, d0: int) -> int:
    return d0 * (p - 1) + (d0 - 1) * n + 1


def degree_bound_crit(n: int, p: int, d0: int) -> int:
    return (n + p) * d0 + 1


def lazard_bound(p: int, q: int, n: int, d0: int) -> int:
    D = degree_bound_minors(n, p, d0)
    return binom(q, p) * binom(D + n, n)


# ---------------------------------------------------------------------------
# complexity estimate


@dataclass(frozen=True)
class EstimatorParams:
    n: int
    p: int
    q: int
    d0: int
    omega: float = 2.81
    mode: str = "derived"

    def __post_init__(self):
        if not 2 <= self.omega <= 3:
            raise ValueError("omega must lie in [2, 3]")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")


def complexity_estimate(params: EstimatorParams):
    """Sum over d of (cols - quotient)^(omega-2) * rows * cols for the
    critical-point run.  Exact integer for integral omega, float otherwise."""
    n, p, d0 = params.n, params.p, params.d0
    D = degree_bound_crit(n, p, d0)
    exact = float(params.omega).is_integer()
    total = 0 if exact else 0.0
    for d in range(d0, D + 1):
        cols = mono_count(n, d)
        rank = cols - hf_crit(n, p, d0, d, params.mode)
        rows = rows_crit(n, p, d0, d, params.mode)
        if rank < 0 or rows <= 0:
            continue
        if exact:
            total += rank ** int(params.omega - 2) * rows * cols
        else:
            total += float(rank) ** (params.omega - 2) * rows * cols
    return total


# ---------------------------------------------------------------------------
# comparison table


def minors_row_totals(n: int, p: int, q: int, d0: int) -> dict:
    """Aggregate row counts for one maximal-minor shape."""
    D = degree_bound_minors(n, p, d0)
    ours = sum(rows_minors(n, p, q, d0, d) for d in range(p * d0, D + 1))
    fullrank = sum(hf_minors_ideal(n, p, q, d0, d) for d in range(p * d0, D + 1))
    laz = lazard_bound(p, q, n, d0)
    return {
        "n": n,
        "p": p,
        "q": q,
        "d0": d0,
        "D": D,
        "rows_ours": ours,
        "rows_lazard": laz,
        "rows_fullrank": fullrank,
        "ratio_ours": round(laz / ours, 3) if ours else float("inf"),
        "ratio_fullrank": round(laz / fullrank, 3) if fullrank else float("inf"),
    }


SPEEDUP_HEADER = "n,p,q,d0,D,rows_ours,rows_lazard,rows_fullrank,ratio_ours,ratio_fullrank"


def speedup_table(shapes) -> list:
    """CSV rows (strings, no header) for an iterable of (n, p, q, d0)."""
    lines = []
    for n, p, q, d0 in shapes:
        r = minors_row_totals(n, p, q, d0)
        lines.append(
            f"{r['n']},{r['p']},{r['q']},{r['d0']},{r['D']},"
            f"{r['rows_ours']},{r['rows_lazard']},{r['rows_fullrank']},"
            f"{r['ratio_ours']:.3f},{r['ratio_fullrank']:.3f}"
        )
    return lines
