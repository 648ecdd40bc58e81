"""Instance generation and the flat text format.

File layout: line 1 `prime P`, line 2 `nvars N`, line 3 either
`matrix P Q degree D0` or `system P degree D0`, then one polynomial per
line.  Matrix entries are row-major.  A `system` file lists the objective
g first, then the constraints f_1..f_p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .algebra import Poly, PolyMatrix, format_poly, parse_poly, random_homogeneous
from .field import DEFAULT_PRIME, PrimeField


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    p: int
    q: int
    d0: int
    prime: int = DEFAULT_PRIME
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        if not 1 <= self.p <= self.q:
            raise ValueError("need 1 <= p <= q")
        if self.d0 < 1:
            raise ValueError("need d0 >= 1")


class InstanceFormatError(ValueError):
    pass


@dataclass
class Instance:
    kind: str  # "matrix" or "system"
    field: PrimeField
    n: int
    p: int
    q: int  # n for system instances (Jacobian width)
    d0: int
    matrix: Optional[PolyMatrix] = None
    g: Optional[Poly] = None
    F: Optional[list] = None


def random_minors_instance(spec: InstanceSpec) -> Instance:
    fld = PrimeField(spec.prime)
    rng = random.Random(spec.seed)
    rows = [
        [random_homogeneous(spec.n, spec.d0, fld, rng) for _ in range(spec.q)]
        for _ in range(spec.p)
    ]
    return Instance(
        kind="matrix",
        field=fld,
        n=spec.n,
        p=spec.p,
        q=spec.q,
        d0=spec.d0,
        matrix=PolyMatrix(spec.p, spec.q, spec.d0, rows),
    )


def random_crit_instance(spec: InstanceSpec) -> Instance:
    """g and p constraint forms of one degree; q is ignored (the Jacobian is
    (p+1) x n)."""
    if spec.p + 1 > spec.n:
        raise ValueError("need p + 1 <= n for a critical system")
    fld = PrimeField(spec.prime)
    rng = random.Random(spec.seed)
    g = random_homogeneous(spec.n, spec.d0, fld, rng)
    F = [random_homogeneous(spec.n, spec.d0, fld, rng) for _ in range(spec.p)]
    return Instance(
        kind="system", field=fld, n=spec.n, p=spec.p, q=spec.n, d0=spec.d0, g=g, F=F
    )


def write_instance(inst: Instance, path: str):
    lines = [f"prime {inst.field.modulus}", f"nvars {inst.n}"]
    if inst.kind == "matrix":
        lines.append(f"matrix {inst.p} {inst.q} degree {inst.d0}")
        for row in inst.matrix.entries:
            lines.extend(format_poly(f) for f in row)
    elif inst.kind == "system":
        lines.append(f"system {inst.p} degree {inst.d0}")
        lines.append(format_poly(inst.g))
        lines.extend(format_poly(f) for f in inst.F)
    else:
        raise ValueError(f"unknown kind {inst.kind}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_instance(path: str) -> Instance:
    with open(path) as fh:
        raw = [ln.strip() for ln in fh]
    lines = [ln for ln in raw if ln]
    if len(lines) < 4:
        raise InstanceFormatError("instance file too short")
    try:
        if not lines[0].startswith("prime "):
            raise InstanceFormatError("line 1 must be `prime P`")
        prime = int(lines[0].split()[1])
        if not lines[1].startswith("nvars "):
            raise InstanceFormatError("line 2 must be `nvars N`")
        n = int(lines[1].split()[1])
        head = lines[2].split()
        fld = PrimeField(prime)
        if head[0] == "matrix":
            if len(head) != 5 or head[3] != "degree":
                raise InstanceFormatError("line 3 must be `matrix P Q degree D0`")
            p, q, d0 = int(head[1]), int(head[2]), int(head[4])
            polys = [parse_poly(t, n, fld) for t in lines[3:]]
            if len(polys) != p * q:
                raise InstanceFormatError(
                    f"expected {p * q} entries, found {len(polys)}"
                )
            rows = [polys[i * q : (i + 1) * q] for i in range(p)]
            return Instance(
                kind="matrix",
                field=fld,
                n=n,
                p=p,
                q=q,
                d0=d0,
                matrix=PolyMatrix(p, q, d0, rows),
            )
        if head[0] == "system":
            if len(head) != 4 or head[2] != "degree":
                raise InstanceFormatError("line 3 must be `system P degree D0`")
            p, d0 = int(head[1]), int(head[3])
            polys = [parse_poly(t, n, fld) for t in lines[3:]]
            if len(polys) != p + 1:
                raise InstanceFormatError(
                    f"expected 1 + {p} polynomials, found {len(polys)}"
                )
            for f in polys:
                if not f.is_zero() and f.degree != d0:
                    raise InstanceFormatError(
                        f"polynomial degree {f.degree} != declared {d0}"
                    )
            return Instance(
                kind="system",
                field=fld,
                n=n,
                p=p,
                q=n,
                d0=d0,
                g=polys[0],
                F=polys[1:],
            )
        raise InstanceFormatError(f"unknown payload kind {head[0]!r}")
    except (ValueError, IndexError) as e:
        if isinstance(e, InstanceFormatError):
            raise
        raise InstanceFormatError(str(e)) from None
