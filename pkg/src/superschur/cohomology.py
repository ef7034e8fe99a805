"""Graded 2-cochains with trivial coefficients and the multiplier superdimension.

A parity-``p`` cochain is a super-antisymmetric bilinear form f that
vanishes on pairs of basis vectors whose parities do not add up to ``p``.
Its coordinates are the values f(e_i, e_j) on the index pairs returned by
:func:`cochain_pairs`.  The differential is

    (df)(x,y,z) = (-1)^{|x||z|} f([x,y],z) + (-1)^{|x||y|} f([y,z],x)
                + (-1)^{|y||z|} f([z,x],y),

which is exactly the condition for ``[x,y] + f(x,y)c`` to define a Lie
superalgebra on L + Fc with c central.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .algebra import LieSuperalgebra
from .core import GradedSubspace, SuperDim, echelonize, nullspace

__all__ = [
    "CohomologyError",
    "Cochain2",
    "cochain_pairs",
    "cochain2_basis",
    "coboundary_rows",
    "cocycle_space",
    "coboundary_space",
    "cocycle_sdim",
    "coboundary_sdim",
    "multiplier_sdim",
    "kernel_bound",
]


class CohomologyError(RuntimeError):
    """B^2 is not inside Z^2, which can only mean a sign-convention bug."""


def cochain_pairs(L: LieSuperalgebra, parity: int) -> List[Tuple[int, int]]:
    """Index pairs i <= j carrying the free values of a parity-``parity`` cochain."""
    par = L.parities
    return [(i, j) for i in range(L.dim) for j in range(i, L.dim)
            if (par[i] + par[j]) % 2 == parity and not (i == j and par[i] == 0)]


@dataclass(frozen=True, eq=False)
class Cochain2:
    algebra: LieSuperalgebra
    parity: int
    coefficients: Dict[Tuple[int, int], object]

    def __call__(self, i: int, j: int):
        """f(e_i, e_j), using super-antisymmetry for i > j."""
        par = self.algebra.parities
        zero = self.algebra.field.zero
        if i <= j:
            return self.coefficients.get((i, j), zero)
        c = self.coefficients.get((j, i), zero)
        return c if par[i] and par[j] else -c

    def evaluate(self, u, v):
        total = self.algebra.field.zero
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        total += a * b * self(i, j)
        return total


def cochain2_basis(L: LieSuperalgebra, parity: int) -> List[Cochain2]:
    one = L.field.one
    return [Cochain2(L, parity, {pair: one}) for pair in cochain_pairs(L, parity)]


def _form_row(L, index, u: dict, z: int, scale, row: dict) -> None:
    """row += scale * f(u, e_z) written in cochain coordinates."""
    par = L.parities
    for k, c in u.items():
        if k <= z:
            col = index.get((k, z))
            coeff = scale * c
        else:
            col = index.get((z, k))
            coeff = scale * c if par[k] and par[z] else -scale * c
        if col is not None:
            v = row.get(col)
            v = coeff if v is None else v + coeff
            if v:
                row[col] = v
            else:
                del row[col]


def _sgn(a, b):
    return -1 if a and b else 1


def differential_rows(L: LieSuperalgebra, parity: int, all_triples: bool = False) -> List[dict]:
    """Linear forms (df)(e_x, e_y, e_z) in cochain coordinates.

    df is super-antisymmetric in its three arguments, so triples x <= y <= z
    suffice; ``all_triples`` is there for cross-checking.
    """
    index = {pair: n for n, pair in enumerate(cochain_pairs(L, parity))}
    par = L.parities
    n = L.dim
    one = L.field.one
    rows = []
    for x in range(n):
        for y in range(0 if all_triples else x, n):
            for z in range(0 if all_triples else y, n):
                if (par[x] + par[y] + par[z]) % 2 != parity:
                    continue
                row: dict = {}
                _form_row(L, index, L.br(x, y), z, _sgn(par[x], par[z]) * one, row)
                _form_row(L, index, L.br(y, z), x, _sgn(par[x], par[y]) * one, row)
                _form_row(L, index, L.br(z, x), y, _sgn(par[y], par[z]) * one, row)
                if row:
                    rows.append(row)
    return rows


def _host(L: LieSuperalgebra, parity: int) -> Tuple[int, ...]:
    return (parity,) * len(cochain_pairs(L, parity))


def cocycle_space(L: LieSuperalgebra, parity: int) -> GradedSubspace:
    N = len(cochain_pairs(L, parity))
    vecs = nullspace(differential_rows(L, parity), N, L.field)
    return echelonize(vecs, _host(L, parity), L.field)


def coboundary_rows(L: LieSuperalgebra, parity: int) -> List[tuple]:
    """Cochains g([.,.]) for the coordinate functionals g = e_k^* of parity ``parity``."""
    pairs = cochain_pairs(L, parity)
    zero = L.field.zero
    out = []
    for k in range(L.dim):
        if L.parities[k] != parity:
            continue
        v = tuple(L.br(i, j).get(k, zero) for i, j in pairs)
        if any(v):
            out.append(v)
    return out


def coboundary_space(L: LieSuperalgebra, parity: int) -> GradedSubspace:
    return echelonize(coboundary_rows(L, parity), _host(L, parity), L.field)


def _split(spaces) -> SuperDim:
    return SuperDim(spaces[0].dim(), spaces[1].dim())


def cocycle_sdim(L: LieSuperalgebra) -> SuperDim:
    return _split([cocycle_space(L, 0), cocycle_space(L, 1)])


def coboundary_sdim(L: LieSuperalgebra) -> SuperDim:
    return _split([coboundary_space(L, 0), coboundary_space(L, 1)])


def multiplier_sdim(L: LieSuperalgebra) -> SuperDim:
    """sdim Z^2 - sdim B^2, parity by parity, after checking B^2 ⊆ Z^2."""
    dims = []
    for parity in (0, 1):
        Z = cocycle_space(L, parity)
        B = coboundary_space(L, parity)
        if not B <= Z:
            raise CohomologyError(f"parity-{parity} coboundaries are not cocycles")
        dims.append(Z.dim() - B.dim())
    return SuperDim(*dims)


def kernel_bound(sdim_L: SuperDim) -> SuperDim:
    """Upper bound on the kernel of any stem extension of an (s|t)-dimensional algebra."""
    s, t = sdim_L.even, sdim_L.odd
    return SuperDim(s * (s - 1) // 2 + t * (t + 1) // 2 + s, s * t)
