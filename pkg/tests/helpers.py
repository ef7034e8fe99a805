"""Shared algebra catalogue and constructions for the test suite."""

from fractions import Fraction

from superschur import (
    LieSuperalgebra,
    abelian,
    direct_sum,
    heisenberg_even,
    heisenberg_odd,
    model_filiform,
)
from superschur.cohomology import Cochain2
from superschur.freepres import free_nilpotent


def catalogue():
    """Small algebras of every shape the library handles."""
    out = []
    out += [(f"H({n})", heisenberg_odd(n)) for n in (1, 2, 3)]
    out += [(f"H({p},{q})", heisenberg_even(p, q))
            for s in (1, 2, 3) for p in range(s + 1) for q in [s - p]]
    out += [(f"F({n},{m})", model_filiform(n, m)) for n in (1, 2, 3) for m in range(4)]
    out += [(f"A({s}|{t})", abelian(s, t)) for s in range(3) for t in range(3) if s + t]
    out.append(("H(1)+A(0|1)", direct_sum(heisenberg_odd(1), abelian(0, 1))))
    out.append(("free(0,1;3)", free_nilpotent((0, 1), 3).algebra))
    out.append(("free(1,1;2)", free_nilpotent((1, 1), 2).algebra))
    return out


def central_extension(L: LieSuperalgebra, cochains):
    """L + span(c_k) with [x, y] + sum_k f_k(x, y) c_k; c_k has the parity of f_k."""
    n = L.dim
    names = L.names + tuple(f"c{k}" for k in range(len(cochains)))
    parities = L.parities + tuple(f.parity for f in cochains)
    table = {}
    for i in range(n):
        for j in range(n):
            val = dict(L.br(i, j))
            for k, f in enumerate(cochains):
                c = f(i, j)
                if c:
                    val[n + k] = c
            if val:
                table[i, j] = val
    return LieSuperalgebra(names, parities, table, L.field)


def cochain_from_vector(L, parity, pairs, vec):
    return Cochain2(L, parity, {pr: c for pr, c in zip(pairs, vec) if c})


def frac(s):
    return Fraction(s)
