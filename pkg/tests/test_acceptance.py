"""Acceptance criteria, one test each.

Every check inside a criterion is evaluated and recorded before the
criterion asserts, so a failing criterion still reports all of its
mismatches.  ``conftest.py`` prints one PASS/FAIL line per criterion at the
end of the run; running this file directly does the same without pytest.
"""

import io
import json
import time
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superschur import (
    ExtensionSpec,
    FamilyId,
    HomSpec,
    LieSuperalgebra,
    abelian,
    build,
    build_cover,
    derived,
    is_maximal_stem,
    is_stem,
    multiplier_formula,
    multiplier_sdim,
    quotient,
    stem_deformation,
    stem_denominator,
    validate,
    verify_extension,
    verify_iso,
)
from superschur.algebra import bracket_span
from superschur.cli import main
from superschur.cohomology import (
    cochain_pairs,
    coboundary_sdim,
    coboundary_space,
    cocycle_space,
    kernel_bound,
)
from superschur.freepres import cover_from_free, hopf
from superschur.serialize import (
    algebra_to_doc,
    doc_to_algebra,
    doc_to_extension,
    dumps,
    extension_to_doc,
)

from helpers import catalogue, central_extension, cochain_from_vector

RESULTS = {}

TITLES = {
    1: "Heisenberg odd-center multipliers, n = 1..6, under 30 s",
    2: "Heisenberg even-center multipliers, 1 <= p+q <= 5",
    3: "model filiform multipliers, n = 1..6, m = 0..6",
    4: "covers are maximal stem extensions with quotient isomorphic to the base",
    5: "Hopf-type [R,F] multiplier equals the cohomological one, under 2 min",
    6: "property suites",
    7: "document round-trips and table commands for criteria 1-3",
}


class Criterion:
    def __init__(self, number):
        self.number = number
        self.failures = []
        self.notes = []
        self.checked = 0

    def check(self, ok, label):
        self.checked += 1
        if not ok:
            self.failures.append(label)

    def note(self, text):
        self.notes.append(text)

    def finish(self):
        RESULTS[self.number] = (not self.failures, self.checked, self.failures, self.notes)
        if self.failures:
            shown = "; ".join(self.failures[:12])
            more = len(self.failures) - 12
            suffix = f" (+{more} more)" if more > 0 else ""
            pytest.fail(f"criterion {self.number}: {len(self.failures)} of {self.checked} checks failed: "
                        f"{shown}{suffix}", pytrace=False)


def heisenberg_odd_ids(N):
    return [FamilyId("heisenberg_odd", n=n) for n in range(1, N + 1)]


def heisenberg_even_ids(N):
    return [FamilyId("heisenberg_even", p=p, q=s - p) for s in range(1, N + 1) for p in range(s + 1)]


def filiform_ids(N, M):
    return [f for n in range(1, N + 1) for m in range(M + 1)
            for f in [FamilyId("model_filiform", n=n, m=m)] if f.is_model_filiform]


def test_criterion_1_heisenberg_odd():
    led = Criterion(1)
    start = time.perf_counter()
    for f in heisenberg_odd_ids(6):
        got, want = multiplier_sdim(build(f)), multiplier_formula(f)
        led.check(got == want, f"{f}: computed {got}, closed form {want}")
    elapsed = time.perf_counter() - start
    led.check(elapsed < 30, f"runtime {elapsed:.1f} s exceeds 30 s")
    led.note(f"runtime {elapsed:.2f} s")
    led.finish()


def test_criterion_2_heisenberg_even():
    led = Criterion(2)
    for f in heisenberg_even_ids(5):
        got, want = multiplier_sdim(build(f)), multiplier_formula(f)
        led.check(got == want, f"{f}: computed {got}, closed form {want}")
    led.finish()


def test_criterion_3_model_filiform():
    led = Criterion(3)
    for f in filiform_ids(6, 6):
        got, want = multiplier_sdim(build(f)), multiplier_formula(f)
        led.check(got == want, f"F({f.n},{f.m}): computed {got}, closed form {want}")
    led.finish()


def _cover_checks(led, label, e):
    report = verify_extension(e)
    led.check(report.ok, f"{label}: verify_extension: {'; '.join(report.problems)[:120]}")
    led.check(is_stem(e), f"{label}: not stem")
    M = multiplier_sdim(e.base)
    led.check(is_maximal_stem(e), f"{label}: not maximal (kernel {e.kernel.sdim()}, multiplier {M})")
    if report.ok:
        Q, proj = quotient(e.total, e.kernel)
        induced = e.projection.compose(HomSpec(Q, e.total, proj.section))
        led.check(verify_iso(HomSpec(Q, e.base, induced.matrix)), f"{label}: quotient map not an isomorphism")
    else:
        led.check(False, f"{label}: quotient not checked, extension invalid")


def test_criterion_4_covers():
    led = Criterion(4)
    for f in heisenberg_odd_ids(4) + filiform_ids(4, 4):
        _cover_checks(led, str(f), build_cover(f))
    # the presentation-built covers of the same filiform algebras, for comparison
    good = 0
    ids = filiform_ids(4, 4)
    for f in ids:
        e = cover_from_free(build(f))
        good += verify_extension(e).ok and is_maximal_stem(e)
    led.note(f"covers built from free presentations: {good}/{len(ids)} filiform instances are maximal stem")
    led.finish()


def test_criterion_5_hopf_oracle():
    led = Criterion(5)
    algebras = [(str(f), build(f)) for f in heisenberg_odd_ids(3) + heisenberg_even_ids(3) + filiform_ids(3, 3)]
    algebras += [(f"model_filiform({n},{m})", build(FamilyId("model_filiform", n=n, m=m)))
                 for n, m in ((1, 0), (1, 1))]
    algebras += [(f"abelian({s},{t})", abelian(s, t)) for s in range(4) for t in range(4) if s + t]
    start = time.perf_counter()
    rr_rows = []
    for label, L in algebras:
        res = hopf(L)
        h2 = multiplier_sdim(L)
        led.check(res.rf == h2, f"{label}: [R,F] gives {res.rf}, cohomology gives {h2}")
        rr_rows.append(f"{label}: RF {res.rf} RR {res.rr}{'' if res.rr == h2 else ' (differs)'}")
    elapsed = time.perf_counter() - start
    led.check(elapsed < 120, f"runtime {elapsed:.1f} s exceeds 120 s")
    led.note(f"runtime {elapsed:.2f} s; RR variant:")
    led.notes.extend("  " + r for r in rr_rows)
    led.finish()


def _tested_algebras():
    out = [(label, L) for label, L in catalogue()]
    out += [(str(f), build(f)) for f in heisenberg_odd_ids(4) + heisenberg_even_ids(4) + filiform_ids(5, 5)]
    return out


def _undetected_mutations(L):
    missed = []
    for (i, j), val in sorted(L.table.items()):
        for k in range(L.dim):
            table = {key: dict(v) for key, v in L.table.items()}
            table[i, j][k] = table[i, j].get(k, Fraction(0)) + 1
            if not table[i, j][k]:
                del table[i, j][k]
            if validate(LieSuperalgebra(L.names, L.parities, table, L.field), limit=1).ok:
                missed.append((i, j, k))
    for i in range(L.dim):
        for j in range(L.dim):
            if (i, j) in L.table:
                continue
            for k in range(L.dim):
                table = {key: dict(v) for key, v in L.table.items()}
                table[i, j] = {k: Fraction(1)}
                if validate(LieSuperalgebra(L.names, L.parities, table, L.field), limit=1).ok:
                    missed.append((i, j, k))
    return missed


def _deformation_failures(L, draws):
    """Random central extensions of L: the stem deformation must be stem with the right kernel."""
    bad = []

    @settings(max_examples=draws, deadline=None, derandomize=True, database=None)
    @given(data=st.data())
    def run(data):
        cochains = []
        for _ in range(data.draw(st.integers(1, 3))):
            parity = data.draw(st.sampled_from([0, 1]))
            Z = cocycle_space(L, parity)
            if not Z.basis:
                continue
            cs = data.draw(st.lists(st.integers(-2, 2), min_size=len(Z.basis), max_size=len(Z.basis)))
            pairs = cochain_pairs(L, parity)
            vec = [sum(Fraction(c) * b[i] for c, b in zip(cs, Z.basis)) for i in range(len(pairs))]
            cochains.append(cochain_from_vector(L, parity, pairs, vec))
        E = central_extension(L, cochains)
        n = L.dim
        kernel = E.span(E.unit(i) for i in range(n, E.dim))
        proj = tuple(tuple(L.field.one if c == r else L.field.zero for c in range(E.dim)) for r in range(n))
        e = ExtensionSpec(E, kernel, L, HomSpec(E, L, proj))
        want = (kernel & derived(E)).sdim() - bracket_span(E, kernel, E.full()).sdim()
        d = stem_deformation(e, stem_denominator(e))
        if not (is_stem(d) and d.kernel.sdim() == want):
            bad.append(f"{len(cochains)} cocycles")

    run()
    return bad


def test_criterion_6_properties():
    led = Criterion(6)
    for label, L in _tested_algebras():
        for parity in (0, 1):
            led.check(coboundary_space(L, parity) <= cocycle_space(L, parity), f"{label}: B^2 not in Z^2")
        led.check(coboundary_sdim(L) == derived(L).sdim(), f"{label}: sdim B^2 != sdim [L,L]")
        M = multiplier_sdim(L)
        led.check(M.leq(kernel_bound(L.sdim())), f"{label}: multiplier {M} above bound")
    for label, L in [(str(f), build(f)) for f in heisenberg_odd_ids(2)] + \
                    [("heisenberg_even(1,1)", build(FamilyId("heisenberg_even", p=1, q=1))),
                     ("model_filiform(3,2)", build(FamilyId("model_filiform", n=3, m=2)))]:
        for failure in _deformation_failures(L, 25):
            led.check(False, f"{label}: stem deformation wrong for {failure}")
        led.check(True, f"{label}: deformations")
    missed = _undetected_mutations(build(FamilyId("heisenberg_odd", n=2)))
    led.check(not missed, f"H(2) mutations not detected: {missed[:5]}")
    led.finish()


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), out, err), out.getvalue()


def test_criterion_7_roundtrip_and_tables():
    led = Criterion(7)
    ids = heisenberg_odd_ids(6) + heisenberg_even_ids(5) + filiform_ids(6, 6)
    for f in ids:
        text = dumps(algebra_to_doc(build(f)))
        led.check(dumps(algebra_to_doc(doc_to_algebra(json.loads(text)))) == text, f"{f}: algebra round-trip")
    for f in heisenberg_odd_ids(4) + filiform_ids(4, 4):
        text = dumps(extension_to_doc(build_cover(f)))
        led.check(dumps(extension_to_doc(doc_to_extension(json.loads(text)))) == text, f"{f}: cover round-trip")
    for kind, N in (("heisenberg-odd", 6), ("heisenberg-even", 5), ("model-filiform", 6)):
        code, out = _cli("table", kind, "--max", str(N), "--format", "csv")
        bad = [line.split(",")[0] for line in out.splitlines()[1:] if line.endswith(",false")]
        led.check(code == 0, f"table {kind} --max {N} exits {code} ({len(bad)} mismatched rows)")
    led.finish()


def summary_lines():
    lines = []
    for k in sorted(TITLES):
        if k not in RESULTS:
            lines.append(f"criterion {k}: NOT RUN  {TITLES[k]}")
            continue
        ok, checked, failures, notes = RESULTS[k]
        status = "PASS" if ok else "FAIL"
        detail = f"{checked} checks" if ok else f"{len(failures)}/{checked} checks failed"
        lines.append(f"criterion {k}: {status}  {TITLES[k]} ({detail})")
    return lines


if __name__ == "__main__":
    import sys

    for name, fn in sorted((n, f) for n, f in globals().items() if n.startswith("test_criterion_")):
        try:
            fn()
        except BaseException:
            pass
    for line in summary_lines():
        print(line)
    sys.exit(0 if all(r[0] for r in RESULTS.values()) else 1)
