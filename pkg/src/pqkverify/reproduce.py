"""Every printed reference value, recomputed and compared.

Each check yields a record (id, anchor, expected, computed, status).  Status
is ``pass``, ``fail`` or ``typo-noted``; the last marks a printed value that
is wrong as printed but matches once an evident misprint is corrected.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from . import golden as G
from .exact.affine import ParamAffine, rat_str
from .exact.parse import parse_expression

__all__ = ["Check", "Record", "Report", "CHECKS", "reproduce_all", "serialize"]

PASS, FAIL, TYPO = "pass", "fail", "typo-noted"


@dataclass
class Record:
    id: str
    anchor: str
    expected: object
    computed: object
    status: str
    note: str = ""
    elapsed: float = 0.0

    def as_dict(self, timings: bool = False) -> dict:
        out = {
            "id": self.id,
            "anchor": self.anchor,
            "expected": serialize(self.expected),
            "computed": serialize(self.computed),
            "status": self.status,
            "note": self.note,
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
        return out


@dataclass
class Report:
    records: list[Record]

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, TYPO: 0}
        for r in self.records:
            out[r.status] += 1
        return out

    def to_json(self, timings: bool = False) -> str:
        body = {"status": "pass" if self.ok else "fail", "counts": self.counts(),
                "records": [r.as_dict(timings) for r in self.records]}
        return json.dumps(body, indent=2, sort_keys=False) + "\n"

    def to_csv(self, timings: bool = False) -> str:
        buf = io.StringIO()
        fields = ["id", "anchor", "expected", "computed", "status", "note"] + (["elapsed"] if timings else [])
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in self.records:
            row = r.as_dict(timings)
            row["expected"], row["computed"] = json.dumps(row["expected"]), json.dumps(row["computed"])
            w.writerow(row)
        return buf.getvalue()

    def to_markdown(self, timings: bool = False) -> str:
        head = "| id | anchor | expected | computed | status |" + (" s |" if timings else "")
        lines = [head, "|" + "---|" * (6 if timings else 5)]
        for r in self.records:
            cells = [r.id, r.anchor, _md(r.expected), _md(r.computed), r.status]
            if timings:
                cells.append(f"{r.elapsed:.3f}")
            lines.append("| " + " | ".join(c.replace("|", "\\|") for c in cells) + " |")
        c = self.counts()
        lines.append("")
        lines.append(f"{c[PASS]} pass, {c[FAIL]} fail, {c[TYPO]} typo-noted")
        return "\n".join(lines) + "\n"


def serialize(x):
    """JSON-safe form; rationals become "num/den" strings, floats stay floats."""
    if isinstance(x, Fraction):
        return rat_str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, complex):
        return [serialize(x.real), serialize(x.imag)]
    if isinstance(x, dict):
        return {str(k): serialize(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [serialize(v) for v in x]
        return sorted(items, key=json.dumps) if isinstance(x, (set, frozenset)) else items
    return str(x)


def _md(x) -> str:
    s = json.dumps(serialize(x))
    return s if len(s) <= 80 else s[:77] + "..."


@dataclass
class Check:
    id: str
    anchor: str
    run: Callable[[], tuple]  # -> (expected, computed, status[, note])


# -- shared computations --------------------------------------------------------


@lru_cache(maxsize=None)
def _ring():
    from .exact.graded import Ring

    return Ring.pqk(5)


def _poly(text: str):
    ring = _ring()
    return parse_expression(text, lambda s: ring.var(s))


def _aff(text: str) -> ParamAffine:
    return parse_expression(text, lambda s: ParamAffine.param(s))


@lru_cache(maxsize=None)
def _solution():
    from .index import solve_fundamental

    return solve_fundamental(5)


@lru_cache(maxsize=None)
def _hilbert():
    from .hilbert import solve_f_values

    return solve_f_values(5)


@lru_cache(maxsize=None)
def _dim16():
    from .special import dim16_search

    return dim16_search()


@lru_cache(maxsize=None)
def _dim24():
    from .special import dim24_b4_1

    return dim24_b4_1(sweep=True)


@lru_cache(maxsize=None)
def _parabola():
    from .index import parabola_bound

    return parabola_bound()


def _upoly(text: str):
    from .exact.unipoly import UniPoly

    return parse_expression(text, {"x": UniPoly.x()})


def _eq(expected, computed, note: str = "") -> tuple:
    return expected, computed, PASS if expected == computed else FAIL, note


def _close(expected: float, computed: float, tol: float, rel: bool = False) -> tuple:
    err = abs(expected - computed) / (abs(expected) if rel and expected else 1.0)
    return expected, computed, PASS if err <= tol else FAIL, f"tolerance {tol}{' relative' if rel else ''}"


# -- check groups ---------------------------------------------------------------


def _charclass_checks() -> Iterable[Check]:
    from .charclass import ahat_class, bundle_E, bundle_H

    ring = _ring()
    yield Check("charclass.chH", "Chern character of H", lambda: _eq(str(_poly(G.CH_H)), str(bundle_H(ring).character)))
    yield Check("charclass.chE", "Chern character of E", lambda: _eq(str(_poly(G.CH_E)), str(bundle_E(ring).character)))

    def ahat():
        printed, ours = _poly(G.AHAT), ahat_class(ring)
        n = len(printed.terms)
        return str(printed), str(ours), PASS if printed == ours and n >= 17 else FAIL, f"{n} coefficients"

    yield Check("charclass.ahat", "A-hat class up to weight 10", ahat)


def _index_checks() -> Iterable[Check]:
    from .index import index_form

    for (p, q), (den, text) in sorted(G.INDEX_DISPLAYS.items()):
        def run(p=p, q=q, den=den, text=text):
            printed = _poly(text) / den
            ours = index_form(p, q, 5).poly
            if printed == ours:
                return str(printed), str(ours), PASS, ""
            if (p, q) in G.INDEX_TYPOS:
                fixed = _poly(text.replace("73985 u^4", "73985 u^5")) / den
                if fixed == ours:
                    return str(printed), str(ours), TYPO, G.INDEX_TYPOS[(p, q)]
            return str(printed), str(ours), FAIL, ""

        yield Check(f"index.i{p}{q}", f"index i^{{{p},{q}}} in dimension 20", run)


def _solve_checks() -> Iterable[Check]:
    from .index import positivity_form, to_volume

    yield Check("solve.c2u4", "c2 u^4 from the index system",
                lambda: _eq(str(_aff(G.C2U4)), str(_solution().value("c2*u^4"))))

    def c2sq():
        form = to_volume(positivity_form(0, 1, 0, 0, _solution()), 5) * G.C2SQ_U3_DENOMINATOR
        return _eq(str(_aff(G.C2SQ_U3_NUMERATOR)), str(form))

    yield Check("solve.c2sq_u3", "c2^2 u^3 numerator over 35840", c2sq)


def _hilbert_checks() -> Iterable[Check]:
    for q, text in sorted(G.HILBERT_VALUES.items()):
        yield Check(f"hilbert.f{q}", f"Hilbert value f({q})",
                    lambda q=q, text=text: _eq(str(_aff(text)), str(_hilbert().values[q])))

    def degree():
        h = _hilbert()
        ok = all(h(q) == v for q, v in h.values.items())
        return 11, h.polynomial.degree, PASS if ok and h.polynomial.degree == 11 else FAIL, "reproduces all 12 values" if ok else ""

    yield Check("hilbert.degree", "degree of the Hilbert polynomial", degree)


def _bound_checks() -> Iterable[Check]:
    from .hilbert import admissible_pairs, ahat_bounds, congruences

    yield Check("bounds.ahat_lower", "lower A-hat bound", lambda: _eq(Fraction(1053, 32768), ahat_bounds().lower))
    yield Check("bounds.ahat_upper", "upper A-hat bound", lambda: _eq(Fraction(182325, 262144), ahat_bounds().upper))
    yield Check("bounds.ahat_decimal", "A-hat bounds to 10 digits",
                lambda: _eq(list(G.AHAT_BOUNDS_DECIMAL), list(ahat_bounds().decimal(10)), "rounded outward"))
    yield Check("bounds.ahat_combination", "v-free combination for the lower bound",
                lambda: _eq(str(_aff(G.AHAT_LOWER_COMBINATION)), str(ahat_bounds().combination)))

    def disjunction():
        res = congruences(Fraction(0), 2)
        computed = " and ".join(str(c) for c in res.conditions) if res.is_conjunction() else "other"
        expected = "d = 1 mod 7 or v = 4 mod 20"
        return expected, computed, PASS if res.is_disjunction() else FAIL, "residue set mod 140 is the conjunction"

    yield Check("congruence.f9", "integrality of f(9) for A-hat = 0", disjunction)

    def pairs():
        got: dict[int, list[int]] = {}
        for d, v in admissible_pairs():
            got.setdefault(d, []).append(v)
        return _eq(G.ADMISSIBLE_PAIRS, got)

    yield Check("pairs.admissible", "admissible (d, v) for A-hat = 0", pairs)


def _name_set(names) -> list[str]:
    from .lie import parse_group

    return sorted(parse_group(s).name for s in names)


def _lie_checks() -> Iterable[Check]:
    from .lie import (
        dims_mod,
        embedding_obstructed,
        enumerate_groups,
        max_dim_per_rank,
        parse_group,
        recognition_threshold,
        survivors_above_threshold,
        threshold_detail,
        wolf_isom_dims,
    )

    def table():
        found: dict[int, list[str]] = {}
        for g in enumerate_groups(5, 15, 36, (1, 7)):
            found.setdefault(g.dim, []).append(g.name)
        expected = {d: _name_set(v) for d, v in G.ISOMETRY_GROUPS_20.items()}
        return _eq(expected, {d: sorted(v) for d, v in found.items()})

    yield Check("groups.isometry_table", "possible isometry groups in dimension 20", table)

    def mod7():
        got = dims_mod(7)
        computed = {f: [got[f"{f}{n}"] for n in range(1, 6)] for f in "ABCD"}
        computed.update(G2=got["G2"], F4=got["F4"])
        return _eq(G.DIMS_MOD_7, computed)

    yield Check("groups.dims_mod7", "dimensions modulo 7", mod7)
    for r, (dim, names) in sorted(G.MAX_DIM_PER_RANK.items()):
        def run(r=r, dim=dim, names=names):
            d, groups = max_dim_per_rank(r)
            return _eq([dim, _name_set(names)], [d, sorted(g.name for g in groups)])

        yield Check(f"groups.maxdim.r{r}", f"largest groups of rank {r}", run)
    for n, value in sorted(G.RECOGNITION_THRESHOLD.items()):
        yield Check(f"groups.threshold.n{n}", f"recognition threshold n = {n}",
                    lambda n=n, value=value: _eq(value, recognition_threshold(n)))

    def general():
        bad = [n for n in range(29, 61) if recognition_threshold(n) != parse_expression(G.RECOGNITION_THRESHOLD_GENERAL, {"n": n})]
        return _eq([], bad, "n = 29..60")

    yield Check("groups.threshold.general", "recognition threshold beyond the table", general)

    def label21():
        groups = sorted(g.name for g in threshold_detail(21).groups)
        printed, meant = parse_group(G.THRESHOLD_21_LABEL), parse_group(G.THRESHOLD_21_GROUP)
        ok = meant.name in groups and meant.dim == 303
        status = TYPO if ok and printed.dim != 303 else (PASS if printed.name in groups else FAIL)
        return G.THRESHOLD_21_LABEL, groups, status, f"{G.THRESHOLD_21_LABEL} has dimension {printed.dim}; 303 = dim {meant.name}"

    yield Check("groups.threshold21_label", "group realising the threshold at n = 21", label21)
    for n, pattern in ((22, G.SURVIVORS_EVEN), (23, G.SURVIVORS_ODD)):
        def run(n=n, pattern=pattern):
            from .lie.embedding import instantiate

            expected = sorted(instantiate(p, {"n": n}).name for p in pattern)
            return _eq(expected, sorted(g.name for g in survivors_above_threshold(n)))

        yield Check(f"groups.survivors.n{n}", f"groups above the quadratic bound, n = {n}", run)

    def stabilizers():
        found = {g.name for g in enumerate_groups(4, 18, 36)}
        missing = [s for s in _name_set(G.STABILIZER_CANDIDATES) if s not in found]
        return _eq([], missing, "listed candidates missing from the enumeration")

    yield Check("groups.stabilizers", "subgroup candidates of dimension 18..36, rank <= 4", stabilizers)
    for a, b in G.OBSTRUCTED_PAIRS:
        yield Check(f"groups.obstruct.{a}|{b}".replace(" ", ""), f"no inclusion {a} in {b}",
                    lambda a=a, b=b: _eq("obstructed", embedding_obstructed(a, b).status))
    for a, b in G.CHAIN_PAIRS:
        yield Check(f"groups.chain.{a}|{b}", f"blockwise inclusion {a} in {b}",
                    lambda a=a, b=b: _eq("chain-found", embedding_obstructed(a, b).status))
    yield Check("groups.wolf_dims", "isometry dimensions of the Wolf spaces, n = 5",
                lambda: _eq(G.WOLF_DIMS_5, wolf_isom_dims(5)))


def _special_checks() -> Iterable[Check]:
    from .special import dim20_b4_1

    def hit():
        rep = _dim16()
        computed = {"x": rep.x, "d": rep.d(rep.x), "v": rep.v(rep.x), "b4": rep.b4(rep.x)} if rep.x is not None else None
        return _eq({k: Fraction(v) for k, v in G.DIM16_HIT.items()}, computed)

    yield Check("dim16.hit", "integral c2 multiple in dimension 16", hit)

    def rejected():
        rep = _dim16()
        br = next((b for b in rep.branches if b.betti == (3, 2, 3)), None)
        return _eq([True, G.DIM16_BRANCHES[(3, 2, 3)]["c4sq"]], [br.rejected, br.values["c4^2"]] if br else None)

    yield Check("dim16.branch323", "Betti branch (3,2,3) rejected by c4^2", rejected)

    def c4u2():
        rep = _dim16()
        br = next((b for b in rep.branches if b.betti == (3, 0, 4)), None)
        return _eq(G.DIM16_BRANCHES[(3, 0, 4)]["c4u2"], br.values["c4*u^2"] if br else None, "printed with branch (3,0,4)")

    yield Check("dim16.c4u2", "c4 u^2 on the surviving branch", c4u2)
    yield Check("dim16.datum", "surviving datum (d, v, b4, b6, b8)",
                lambda: _eq([list(G.DIM16_DATUM)], [[int(x) for x in t] for t in _dim16().surviving]))

    def vrel():
        from .special import dim16_volume_relations
        rel = dim16_volume_relations()
        ok = []
        for key, name in (("d_from_v", "d"), ("b4_from_v", "b4")):
            const, slope = rel[name]
            for xv in (Fraction(-3), Fraction(1), Fraction(5, 2)):
                for vv in (Fraction(1), Fraction(84)):
                    printed = parse_expression(G.DIM16[key], {"x": xv, "v": vv})
                    ok.append(printed == const(xv) + slope(xv) * vv)
        return _eq(True, all(ok), "compared at sample points")

    yield Check("dim16.volume_relations", "d and b4 in terms of v and x", vrel)

    def d20():
        rep = dim20_b4_1(5)
        b = rep.unique
        computed = None if b is None else {k: b.values.get(k) for k in ("b6", "b8", "b10", "u^5")} | {"d": b.d}
        expected = {"b6": 0, "b8": 1, "b10": 0, "u^5": 1, "d": 78}
        return _eq({k: Fraction(v) for k, v in expected.items()}, computed)

    yield Check("dim20.b4_1", "b4 = 1 in dimension 20", d20)

    def d16all():
        rep = dim20_b4_1(4)
        b = rep.unique
        computed = None if b is None else {"d": b.d, "b6": b.values.get("b6"), "b8": b.values.get("b8"), "u^4": b.values.get("u^4")}
        e = G.DIM16_ALL_MULTIPLES
        return _eq({"d": Fraction(e["d"]), "b6": Fraction(e["b6"]), "b8": Fraction(e["b8"]), "u^4": Fraction(e["u4"])}, computed)

    yield Check("dim16.b4_1", "b4 = 1 in dimension 16", d16all)
    yield Check("dim24.rational", "rational values of d in dimension 24",
                lambda: _eq(sorted(G.DIM24_RATIONAL_D), sorted(_dim24().rational_d())))
    yield Check("dim24.septic", "septic in the printed variable",
                lambda: _eq(str(_upoly(G.DIM24_SEPTIC)), str(_dim24().septic_printed_variable)))
    yield Check("dim24.d_coeffs", "d modulo the septic", lambda: _eq(G.DIM24_D_COEFFS, _dim24().d_coeffs))

    def roots():
        ours = [r.value for r in _dim24().roots]
        worst = max(min(abs(p - o) for o in ours) for p in G.DIM24_ROOTS)
        return [str(r) for r in G.DIM24_ROOTS], [str(r) for r in ours], PASS if worst < 1e-6 else FAIL, f"max deviation {worst:.2e}"

    yield Check("dim24.roots", "roots of the septic", roots)

    def sweep():
        s = _dim24().sweep
        return ">= 1e-4", s.min_distance, PASS if s.min_distance >= 1e-4 else FAIL, \
            f"{s.combinations} combinations, closest {s.closest.real:.7f} at {s.argmin}"

    yield Check("dim24.sweep", "no root combination gives d near an integer", sweep)
    yield Check("dim24.exact", "no conjugate value of d is an integer",
                lambda: _eq([], _dim24().integral_conjugates(), "characteristic polynomial of d"))


def _betti_checks() -> Iterable[Check]:
    from .betti import BettiVector, betti_relation, lemma_b4_b8, min_euler

    e = G.BETTI_EXTREMAL
    yield Check("betti.extremal_relation", "Betti relation at the extremal configuration",
                lambda: _eq(Fraction(0), betti_relation(5, BettiVector.from_values(5, b4=e["b4"], b6=e["b6"], b8=e["b8"], b10=e["b10"]))))

    def mineuler():
        chi, bv = min_euler(e["b4"])
        return _eq([e["chi"], [e["b4"], e["b6"], e["b8"], e["b10"]]], [chi, list(bv.even[2:])])

    yield Check("betti.min_euler", "smallest Euler characteristic for b4 >= 3382", mineuler)
    yield Check("betti.lemma_pairs", "(b4, b8) pairs for b4 <= 5", lambda: _eq(G.LEMMA_PAIRS, lemma_b4_b8(5).feasible))


def _optimize_checks() -> Iterable[Check]:
    from .index import euler_combination, positivity_form, to_volume

    def apex():
        num, den = G.PARABOLA_APEX.split(")/(")
        pb = _parabola()
        expected = [str(_aff(num.lstrip("("))), str(_aff(den.rstrip(")")))]
        return _eq(expected, [str(pb.apex_num), str(pb.apex_den)])

    yield Check("optimize.apex", "apex of the parabola in m", apex)
    yield Check("optimize.rectangle_max", "maximum of the bound on the rectangle",
                lambda: _close(G.PARABOLA_MAX, _parabola().rectangle_max, 0.01))

    def argmax():
        A, v = _parabola().argmax
        eA, ev = G.PARABOLA_ARGMAX
        ok = v == ev and abs(A - eA) < 1e-6
        return [eA, ev], [A, v], PASS if ok else FAIL, "exact on v, 1e-6 on A-hat"

    yield Check("optimize.rectangle_argmax", "position of the maximum", argmax)

    def combination():
        k, l, m, n = euler_combination(G.EULER_COMBINATION_INPUT["n"], G.EULER_COMBINATION_INPUT["m"])
        f = to_volume(positivity_form(k, l, m, n, _solution(), fixes={"d": 0}, eliminate_with=["b10"]), 5)
        got = {"1": f.constant, **{key: f.coeff(key) for key in ("b4", "b6", "A", "v")}}
        worst = max(abs(got[key] - val) / abs(val) for key, val in G.EULER_COMBINATION_RESULT.items())
        return G.EULER_COMBINATION_RESULT, got, PASS if worst <= 1e-3 else FAIL, f"max relative deviation {worst:.1e}"

    yield Check("optimize.euler_combination", "float combination for the Euler estimate", combination)


GROUPS = {
    "charclass": _charclass_checks,
    "index": _index_checks,
    "solve": _solve_checks,
    "hilbert": _hilbert_checks,
    "bounds": _bound_checks,
    "groups": _lie_checks,
    "dim": _special_checks,
    "betti": _betti_checks,
    "optimize": _optimize_checks,
}


def all_checks() -> list[Check]:
    return [c for make in GROUPS.values() for c in make()]


CHECKS = all_checks


def reproduce_all(only: Iterable[str] | None = None) -> Report:
    """Run every check (or those whose id equals or starts with an entry of ``only``)."""
    wanted = list(only) if only else None
    records = []
    for c in all_checks():
        if wanted and not any(c.id == w or c.id.startswith(w + ".") for w in wanted):
            continue
        t0 = time.perf_counter()
        try:
            out = c.run()
        except Exception as exc:  # a crashing check is a failing check
            out = (None, f"{type(exc).__name__}: {exc}", FAIL, "")
        expected, computed, status = out[:3]
        note = out[3] if len(out) > 3 else ""
        records.append(Record(c.id, c.anchor, expected, computed, status, note, time.perf_counter() - t0))
    return Report(records)
