"""Heisenberg and model filiform superalgebras, their covers and multiplier formulas.

Basis order throughout: even block first, then odd; in a cover the
generators come before the vectors spanning the multiplier.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .algebra import HomSpec, LieSuperalgebra
from .core import RATIONAL, Field, SuperDim
from .extensions import ExtensionSpec

__all__ = [
    "FamilyId",
    "heisenberg_even",
    "heisenberg_odd",
    "model_filiform",
    "cover_heisenberg_odd",
    "cover_filiform",
    "multiplier_formula",
    "build",
    "build_cover",
]

KINDS = ("heisenberg_even", "heisenberg_odd", "model_filiform")


@dataclass(frozen=True)
class FamilyId:
    kind: str
    p: int = 0
    q: int = 0
    n: int = 0
    m: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if min(self.p, self.q, self.n, self.m) < 0:
            raise ValueError("family parameters must be nonnegative")
        if self.kind == "heisenberg_even" and self.p + self.q < 1:
            raise ValueError("heisenberg_even needs p + q >= 1")
        if self.kind == "heisenberg_odd" and self.n < 1:
            raise ValueError("heisenberg_odd needs n >= 1")
        if self.kind == "model_filiform" and self.n < 1:
            raise ValueError("model_filiform needs n >= 1")

    @property
    def params(self) -> Dict[str, int]:
        if self.kind == "heisenberg_even":
            return {"p": self.p, "q": self.q}
        if self.kind == "heisenberg_odd":
            return {"n": self.n}
        return {"n": self.n, "m": self.m}

    @property
    def is_model_filiform(self) -> bool:
        return self.kind == "model_filiform" and (self.n, self.m) not in ((1, 0), (1, 1))

    def __str__(self):
        args = ",".join(str(v) for v in self.params.values())
        return f"{self.kind}({args})"


class _Builder:
    """Collects basis vectors and bracket entries by name."""

    def __init__(self):
        self.even: List[str] = []
        self.odd: List[str] = []
        self.entries: List[Tuple[str, str, Dict[str, int]]] = []

    def bracket(self, a: str, b: str, value: Dict[str, int]):
        self.entries.append((a, b, value))

    def algebra(self, field: Field) -> LieSuperalgebra:
        names = self.even + self.odd
        pos = {nm: i for i, nm in enumerate(names)}
        brackets = {}
        for a, b, val in self.entries:
            brackets[pos[a], pos[b]] = {pos[k]: c for k, c in val.items()}
        parities = [0] * len(self.even) + [1] * len(self.odd)
        return LieSuperalgebra.from_brackets(names, parities, brackets, field)


def heisenberg_even(p: int, q: int, field: Field = RATIONAL) -> LieSuperalgebra:
    """H(p,q): [u_i, v_i] = z, [w_k, w_k] = z, with z even."""
    FamilyId("heisenberg_even", p=p, q=q)
    b = _Builder()
    b.even = [f"u{i}" for i in range(1, p + 1)] + [f"v{i}" for i in range(1, p + 1)] + ["z"]
    b.odd = [f"w{k}" for k in range(1, q + 1)]
    for i in range(1, p + 1):
        b.bracket(f"u{i}", f"v{i}", {"z": 1})
    for k in range(1, q + 1):
        b.bracket(f"w{k}", f"w{k}", {"z": 1})
    return b.algebra(field)


def heisenberg_odd(n: int, field: Field = RATIONAL) -> LieSuperalgebra:
    """H(n): [u_i, w_i] = z, with z odd."""
    FamilyId("heisenberg_odd", n=n)
    b = _Builder()
    b.even = [f"u{i}" for i in range(1, n + 1)]
    b.odd = ["z"] + [f"w{i}" for i in range(1, n + 1)]
    for i in range(1, n + 1):
        b.bracket(f"u{i}", f"w{i}", {"z": 1})
    return b.algebra(field)


def model_filiform(n: int, m: int, field: Field = RATIONAL) -> LieSuperalgebra:
    """F(n,m): [x_0, x_i] = x_{i+1}, [x_0, y_j] = y_{j+1}."""
    FamilyId("model_filiform", n=n, m=m)
    b = _Builder()
    b.even = [f"x{i}" for i in range(n + 1)]
    b.odd = [f"y{j}" for j in range(1, m + 1)]
    for i in range(1, n):
        b.bracket("x0", f"x{i}", {f"x{i + 1}": 1})
    for j in range(1, m):
        b.bracket("x0", f"y{j}", {f"y{j + 1}": 1})
    return b.algebra(field)


def _extension(total: LieSuperalgebra, kernel_names: List[str], base: LieSuperalgebra,
               images: Dict[str, str]) -> ExtensionSpec:
    """Extension whose projection sends total basis vectors to named base vectors."""
    F = total.field
    kernel = total.span(total.unit(total.index(nm)) for nm in kernel_names)
    cols = []
    for nm in total.names:
        cols.append(base.unit(base.index(images[nm])) if nm in images else base.vector({}))
    matrix = tuple(tuple(col[r] for col in cols) for r in range(base.dim))
    return ExtensionSpec(total, kernel, base, HomSpec(total, base, matrix))


def cover_heisenberg_odd(n: int, field: Field = RATIONAL) -> ExtensionSpec:
    """0 -> MH(n) -> Ĥ(n) -> H(n) -> 0.

    For n >= 2 the odd generators satisfy [b_i, b_j] = w_{i,j} for all
    i <= j, diagonal included: the b_i are odd, so the bracket is symmetric
    and the squares [b_i, b_i] are free central elements.  Dropping the
    diagonal would leave only n(n-1) even kernel vectors instead of n^2.
    """
    base = heisenberg_odd(n, field)
    b = _Builder()
    if n == 1:
        b.even = ["a", "w"]
        b.odd = ["b", "c", "m"]
        b.bracket("a", "b", {"c": 1})
        b.bracket("a", "c", {"m": 1})
        b.bracket("b", "b", {"w": 1})
        kernel = ["w", "m"]
        images = {"a": "u1", "b": "w1", "c": "z"}
    else:
        rng = range(1, n + 1)
        a = [f"a{i}" for i in rng]
        y2 = [f"y{i}_{j}" for i in rng for j in rng if i < j]
        w2 = [f"w{i}_{j}" for i in rng for j in rng if i <= j]
        bs = [f"b{i}" for i in rng]
        y1 = [f"y{i}" for i in range(2, n + 1)]
        z2 = [f"z{i}_{j}" for i in rng for j in rng if i != j]
        b.even = a + y2 + w2
        b.odd = bs + ["c"] + y1 + z2
        for i in rng:
            for j in rng:
                if i < j:
                    b.bracket(f"a{i}", f"a{j}", {f"y{i}_{j}": 1})
                if i <= j:
                    b.bracket(f"b{i}", f"b{j}", {f"w{i}_{j}": 1})
                if i != j:
                    b.bracket(f"a{i}", f"b{j}", {f"z{i}_{j}": 1})
        b.bracket("a1", "b1", {"c": 1})
        for i in range(2, n + 1):
            b.bracket(f"a{i}", f"b{i}", {"c": 1, f"y{i}": 1})
        kernel = y2 + w2 + y1 + z2
        images = {f"a{i}": f"u{i}" for i in rng}
        images.update({f"b{i}": f"w{i}" for i in rng})
        images["c"] = "z"
    return _extension(b.algebra(field), kernel, base, images)


def _filiform_even_part(b: _Builder, n: int):
    """Even generators a_0..a_n and kernel vectors y_2..y_n.

    [a_i, a_j] for odd j - i is tied to its anti-diagonal by
    [a_i, a_j] = -[a_{i+1}, a_{j-1}]; the diagonal through (k, k+1) is
    labelled y_{k+1}, so [a_1, a_2] = y_2 and [a_{n-1}, a_n] = y_n.
    """
    b.even = [f"a{i}" for i in range(n + 1)] + [f"y{j}" for j in range(2, n + 1)]
    for i in range(1, n):
        b.bracket("a0", f"a{i}", {f"a{i + 1}": 1})
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (j - i) % 2:
                sign = -1 if ((j - i - 1) // 2) % 2 else 1
                b.bracket(f"a{i}", f"a{j}", {f"y{(i + j + 1) // 2}": sign})
    return [f"y{j}" for j in range(2, n + 1)]


def cover_filiform(n: int, m: int, field: Field = RATIONAL) -> ExtensionSpec:
    """The four-case cover construction for F(n,m) as tabulated in the literature.

    The construction is reproduced as published (up to the sign and index
    normalisation described in :func:`_filiform_even_part`), not repaired;
    for most (n, m) the result fails the Jacobi identity or is not maximal.
    :func:`superschur.freepres.cover_from_free` builds a genuine cover.
    """
    fam = FamilyId("model_filiform", n=n, m=m)
    if not fam.is_model_filiform:
        raise ValueError(f"F({n},{m}) is abelian and has no model filiform cover")
    base = model_filiform(n, m, field)
    b = _Builder()
    images = {f"a{i}": f"x{i}" for i in range(n + 1)}
    images.update({f"b{p}": f"y{p}" for p in range(1, m + 1)})
    if n == 1:
        b.even = ["a0", "a1"]
        b.odd = [f"b{p}" for p in range(1, m + 1)] + ["t"]
        for p in range(1, m):
            b.bracket("a0", f"b{p}", {f"b{p + 1}": 1})
        b.bracket("a1", "b1", {"t": 1})
        kernel = ["t"]
    elif m == 0:
        kernel = _filiform_even_part(b, n)
    elif m == 1:
        kernel = _filiform_even_part(b, n)
        b.even.append("z")
        b.odd = ["b1", "t"]
        b.bracket("a1", "b1", {"t": 1})
        b.bracket("b1", "b1", {"z": 1})
        kernel = kernel + ["z", "t"]
    else:
        kernel = _filiform_even_part(b, n)
        ts = [f"t{s}" for s in range(2, m + n + 1)]
        b.odd = [f"b{p}" for p in range(1, m + 1)] + ts
        for p in range(1, m):
            b.bracket("a0", f"b{p}", {f"b{p + 1}": 1})
        for i in range(1, n + 1):
            for p in range(1, m + 1):
                s = i + p
                # sign alternates along the anti-diagonal, + at its smallest i
                sign = -1 if (i - max(1, s - m)) % 2 else 1
                b.bracket(f"a{i}", f"b{p}", {f"t{s}": sign})
        kernel = kernel + ts
    return _extension(b.algebra(field), kernel, base, images)


def multiplier_formula(f: FamilyId) -> SuperDim:
    """Closed-form multiplier superdimensions as stated for each family."""
    if f.kind == "heisenberg_even":
        p, q = f.p, f.q
        if (p, q) == (0, 1):
            return SuperDim(0, 0)
        if (p, q) == (1, 0):
            return SuperDim(2, 0)
        return SuperDim(2 * p * p - p + (q * q + q) // 2 - 1, 2 * p * q)
    if f.kind == "heisenberg_odd":
        n = f.n
        return SuperDim(1, 1) if n == 1 else SuperDim(n * n, n * n - 1)
    n, m = f.n, f.m
    if not f.is_model_filiform:
        raise ValueError(f"no closed form for the abelian algebra F({n},{m})")
    if n == 1:
        return SuperDim(0, 1)
    if m == 0:
        return SuperDim(n - 1, 0)
    if m == 1:
        return SuperDim(n, 1)
    return SuperDim(n - 1, n + m - 1)


def build(f: FamilyId, field: Field = RATIONAL) -> LieSuperalgebra:
    if f.kind == "heisenberg_even":
        return heisenberg_even(f.p, f.q, field)
    if f.kind == "heisenberg_odd":
        return heisenberg_odd(f.n, field)
    return model_filiform(f.n, f.m, field)


def build_cover(f: FamilyId, field: Field = RATIONAL) -> ExtensionSpec:
    if f.kind == "heisenberg_odd":
        return cover_heisenberg_odd(f.n, field)
    if f.kind == "model_filiform":
        return cover_filiform(f.n, f.m, field)
    raise ValueError("no tabulated cover for heisenberg_even")
