"""Command line interface.

Four subcommands cover the workflows:

  enumerate   stream one object family as JSON lines (or CSV rows)
  formula     evaluate a registered formula exactly
  verify      run a cross-checking suite, exit 0 only on full agreement
  conjecture  tabulate the refined swap comparison over a shape range

Exit codes: 0 success, 1 verification mismatch, 2 resource budget
exceeded, 3 precondition violated.  All output is UTF-8 and exact;
polynomials are printed as term lists, never as floating point.  The
GOGMAGOG_WORKERS environment variable sets the thread count used to run
verification cases; reports come back in deterministic order either
way, so output bytes depend only on the inputs (timings are opt-in via
--timings precisely to keep that true).
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import fields as dataclass_fields
from fractions import Fraction
from math import prod
from typing import Callable, NamedTuple

from . import __version__
from .errors import (
    GogmagogError,
    NotApplicableError,
    PreconditionError,
    ResourceBudgetError,
)
from .formulas import (
    asm_determinants,
    asm_number,
    ct_mt,
    ct_mt_top,
    ct_st_tree,
    gog_bottom_rows,
    gog_ct,
    gog_ct_fixed_minima,
    gog_ct_minmax_m0,
    gog_ct_total,
    magog_bottom_rows,
    magog_ct_bottom,
    magog_ct_fixed_minima,
    magog_ct_total,
    magog_lgv_det,
    magog_q_slice_det,
    magog_v2_det,
    pentagon_bottom_rows,
    pentagon_ct,
    verify_antisymmetrizer_identities,
    verify_behrend_limits,
    verify_lemma_zeilberger,
    verify_summation_identity,
    verify_symmetrizer_mt,
    verify_theorem_zeil,
)
from .jsonio import dumps_canonical, parampoly_to_terms, scalar_to_string
from .matchings import ARGraph, matching_class, weighted_matching_sum
from .operators import OperatorRing, mt_count_operator, mt_gf_operator, mt_gf_top_operator
from .polyring import PARAMS, ParamPoly
from .triangles import (
    MonotoneTriangle,
    STTreeShape,
    conjecture_check,
    enumerate_gog_pentagons,
    enumerate_gog_trapezoids,
    enumerate_magog_trapezoids,
    enumerate_monotone_triangles,
    enumerate_st_trees,
    gt_count_formula,
    mt_generating_function,
)
from .triangles.stats import StatVector

SUITES = ("gog", "magog", "pentagon", "sttree", "operator", "identities", "appendix")


# -- small helpers ------------------------------------------------------


def _int_tuple(text):
    if text is None or text == "":
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise PreconditionError(f"expected a comma-separated integer list, got {text!r}")


def _budget(args):
    return {"budget_terms": args.budget_terms, "budget_vars": args.budget_vars}


def _need(args, names, formula):
    for nm in names:
        if getattr(args, nm) is None:
            raise PreconditionError(f"{formula} requires --{nm.replace('_', '-')}")


def _value_json(v):
    if isinstance(v, bool):
        return v
    if isinstance(v, str):
        return v
    return parampoly_to_terms(v)


def _print(text, out=None):
    stream = out if out is not None else sys.stdout
    stream.write(text + "\n")


# -- formula registry ---------------------------------------------------


class FormulaEntry(NamedTuple):
    route: str
    flags: str
    summary: str
    run: Callable


def _gog_runner(mode):
    def run(a, budget):
        _need(a, ("m", "n", "k"), "gog formulas")
        if a.bottom is None:
            if mode == "inv_pair":
                raise PreconditionError("gog-inv-pair has no total form, pass --bottom")
            return gog_ct_total(a.m, a.n, a.k, mode=mode, top=a.top, **budget)
        return gog_ct(a.m, a.n, a.k, _int_tuple(a.bottom), mode=mode, top=a.top, **budget)

    return run


def _pentagon_runner(mode):
    def run(a, budget):
        _need(a, ("m", "n", "kl", "kr", "bottom"), "pentagon formula")
        return pentagon_ct(a.m, a.n, a.kl, a.kr, _int_tuple(a.bottom), mode=mode, top=a.top, **budget)

    return run


def _run_mt(mode):
    def run(a, budget):
        _need(a, ("bottom",), "mt formula")
        return ct_mt(_int_tuple(a.bottom), mode=mode, **budget)

    return run


def _run_mt_top(a, budget):
    _need(a, ("bottom", "a"), "mt-top")
    return ct_mt_top(_int_tuple(a.bottom), a.a, a.lo, a.hi, **budget)


def _run_sttree(a, budget):
    _need(a, ("bottom",), "sttree-ct")
    b = _int_tuple(a.bottom)
    top = None
    if a.a is not None:
        top = (a.a, b[0] if a.lo is None else a.lo, b[-1] if a.hi is None else a.hi)
    return ct_st_tree(
        _int_tuple(a.s),
        _int_tuple(a.t),
        b,
        include_i=_int_tuple(a.include_i),
        include_j=_int_tuple(a.include_j),
        top=top,
        weighted=not a.unweighted,
        **budget,
    )


def _run_fixed_minima(a, budget):
    _need(a, ("m", "n", "k", "p"), "gog-fixed-minima")
    return gog_ct_fixed_minima(a.m, a.n, a.k, a.p, _int_tuple(a.tail), **budget)


def _magog_pq(fn, name, ct=True):
    def run(a, budget):
        _need(a, ("m", "n", "k", "q"), name)
        return fn(a.m, a.n, a.k, a.q, **budget) if ct else fn(a.m, a.n, a.k, a.q)

    return run


FORMULAS = {
    "mt-uv": FormulaEntry(
        "constant-term", "bottom",
        "coincidence polynomial in u, v for a strictly increasing bottom row",
        _run_mt("standard")),
    "mt-count": FormulaEntry(
        "constant-term", "bottom",
        "plain bottom-row count through the series route",
        _run_mt("alternative")),
    "mt-antisym": FormulaEntry(
        "antisymmetrizer", "bottom",
        "plain bottom-row count through explicit antisymmetrization",
        _run_mt("antisym")),
    "mt-top": FormulaEntry(
        "constant-term", "bottom, a [, lo, hi]",
        "coincidence polynomial with the top entry pinned to a",
        _run_mt_top),
    "mt-uv-op": FormulaEntry(
        "operator", "bottom",
        "coincidence polynomial via the difference-operator route",
        lambda a, budget: (_need(a, ("bottom",), "mt-uv-op"), mt_gf_operator(_int_tuple(a.bottom)))[1]),
    "mt-count-op": FormulaEntry(
        "operator", "bottom",
        "plain count via the difference-operator route",
        lambda a, budget: (_need(a, ("bottom",), "mt-count-op"), mt_count_operator(_int_tuple(a.bottom)))[1]),
    "mt-top-op": FormulaEntry(
        "operator", "bottom, a [, lo, hi]",
        "pinned-top coincidence polynomial via the operator route",
        lambda a, budget: (_need(a, ("bottom", "a"), "mt-top-op"),
                           mt_gf_top_operator(_int_tuple(a.bottom), a.a, a.lo, a.hi))[1]),
    "gt-count": FormulaEntry(
        "product", "bottom",
        "weak-pattern count by the closed product formula",
        lambda a, budget: (_need(a, ("bottom",), "gt-count"), gt_count_formula(_int_tuple(a.bottom)))[1]),
    "sttree-ct": FormulaEntry(
        "constant-term", "bottom [, s, t, include-i, include-j, a, lo, hi, unweighted]",
        "deletion-shape generating function by constant term extraction",
        _run_sttree),
    "gog-count": FormulaEntry(
        "constant-term", "m, n, k [, bottom, top]",
        "trapezoid count; totals over all bottom rows when --bottom is absent",
        _gog_runner("count")),
    "gog-inv-pair": FormulaEntry(
        "constant-term", "m, n, k, bottom [, top]",
        "trapezoid coincidence polynomial in u, v",
        _gog_runner("inv_pair")),
    "gog-min-max": FormulaEntry(
        "constant-term", "m, n, k [, bottom, top]",
        "trapezoid polynomial graded by minima (P) and maxima (Q)",
        _gog_runner("min_max")),
    "gog-fixed-minima": FormulaEntry(
        "constant-term", "m, n, k, p [, tail]",
        "count with exactly p minima and bottom row (1, tail...)",
        _run_fixed_minima),
    "gog-minmax-m0": FormulaEntry(
        "constant-term", "n, k",
        "single-expression form of the spliced min-max total at m = 0",
        lambda a, budget: (_need(a, ("n", "k"), "gog-minmax-m0"),
                           gog_ct_minmax_m0(a.n, a.k, **budget))[1]),
    "pentagon-count": FormulaEntry(
        "constant-term", "m, n, kl, kr, bottom [, top]",
        "pentagon count for one bottom row",
        _pentagon_runner("count")),
    "pentagon-inv-pair": FormulaEntry(
        "constant-term", "m, n, kl, kr, bottom [, top]",
        "pentagon coincidence polynomial in u, v",
        _pentagon_runner("inv_pair")),
    "pentagon-min-max": FormulaEntry(
        "constant-term", "m, n, kl, kr, bottom [, top]",
        "pentagon polynomial graded by bottom minima (QL) and maxima (QR)",
        _pentagon_runner("min_max")),
    "pentagon-four-weight": FormulaEntry(
        "constant-term", "m, n, kl, kr, bottom",
        "four-parameter grading by top and bottom extremes (PL, PR, QL, QR)",
        _pentagon_runner("four_weight")),
    "magog-lgv": FormulaEntry(
        "determinant", "m, n, k, bottom",
        "bottom-row polynomial in P, Q by the lattice-path determinant",
        lambda a, budget: (_need(a, ("m", "n", "k", "bottom"), "magog-lgv"),
                           magog_lgv_det(a.m, a.n, a.k, _int_tuple(a.bottom)))[1]),
    "magog-v1": FormulaEntry(
        "constant-term", "m, n, k, bottom",
        "bottom-row polynomial in P, Q by constant term extraction",
        lambda a, budget: (_need(a, ("m", "n", "k", "bottom"), "magog-v1"),
                           magog_ct_bottom(a.m, a.n, a.k, _int_tuple(a.bottom), **budget))[1]),
    "magog-v1-total": FormulaEntry(
        "constant-term", "m, n, k",
        "total polynomial in P, Q over all bottom rows",
        lambda a, budget: (_need(a, ("m", "n", "k"), "magog-v1-total"),
                           magog_ct_total(a.m, a.n, a.k, **budget))[1]),
    "magog-v2": FormulaEntry(
        "constant-term", "m, n, k, q",
        "maxima polynomial in P at exactly q minima",
        _magog_pq(magog_ct_fixed_minima, "magog-v2")),
    "magog-v2-det": FormulaEntry(
        "determinant", "m, n, k, q",
        "determinant form of the fixed-minima maxima polynomial",
        _magog_pq(magog_v2_det, "magog-v2-det", ct=False)),
    "magog-q-det": FormulaEntry(
        "determinant", "m, n, k, q",
        "minima-slice determinant of the P, Q polynomial",
        _magog_pq(magog_q_slice_det, "magog-q-det", ct=False)),
    "asm-number": FormulaEntry(
        "product", "n",
        "closed product count of order-n alternating sign matrices",
        lambda a, budget: (_need(a, ("n",), "asm-number"), asm_number(a.n))[1]),
}

_ECHO_FLAGS = ("m", "n", "k", "kl", "kr", "p", "q", "top", "a", "lo", "hi",
               "bottom", "tail", "s", "t", "include_i", "include_j", "unweighted")


def cmd_formula(args):
    if args.list:
        listing = [
            {"id": fid, "route": e.route, "flags": e.flags, "summary": e.summary}
            for fid, e in sorted(FORMULAS.items())
        ]
        _print(dumps_canonical({"formulas": listing}))
        return 0
    if args.formula_id is None:
        raise PreconditionError("a formula id is required (or --list)")
    entry = FORMULAS.get(args.formula_id)
    if entry is None:
        known = ", ".join(sorted(FORMULAS))
        raise PreconditionError(f"unknown formula {args.formula_id!r}; known ids: {known}")
    value = entry.run(args, _budget(args))
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(list(PARAMS) + ["coeff"])
        for exp, c in ParamPoly.coerce(value).sorted_terms():
            w.writerow(list(exp) + [scalar_to_string(c)])
        return 0
    used = {}
    for name in _ECHO_FLAGS:
        v = getattr(args, name, None)
        if v is None or v is False:
            continue
        used[name] = v
    record = {
        "formula": args.formula_id,
        "route": entry.route,
        "parameters": used,
        "value": parampoly_to_terms(value),
    }
    _print(dumps_canonical(record))
    return 0


# -- enumerate ----------------------------------------------------------


def _enumeration(args):
    bottom = _int_tuple(args.bottom) if args.bottom is not None else None
    if args.kind == "gog":
        _need(args, ("m", "n", "k"), "enumerate gog")
        return enumerate_gog_trapezoids(args.m, args.n, args.k, bottom_row=bottom)
    if args.kind == "magog":
        _need(args, ("m", "n", "k"), "enumerate magog")
        return enumerate_magog_trapezoids(args.m, args.n, args.k, bottom_row=bottom)
    _need(args, ("m", "n", "kl", "kr"), "enumerate pentagon")
    return enumerate_gog_pentagons(args.m, args.n, args.kl, args.kr, bottom_row=bottom)


def cmd_enumerate(args):
    stat_names = [f.name for f in dataclass_fields(StatVector)]
    writer = None
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["rows"] + stat_names)
    count = 0
    for obj, st in _enumeration(args):
        count += 1
        if count > args.max_objects:
            raise ResourceBudgetError(
                f"enumeration exceeded --max-objects={args.max_objects}",
                budget=args.max_objects,
            )
        rows = [list(r) for r in obj.rows]
        if writer is not None:
            cells = [dumps_canonical(rows)]
            for name in stat_names:
                v = getattr(st, name)
                if v is None:
                    cells.append("")
                elif isinstance(v, bool):
                    cells.append("true" if v else "false")
                elif isinstance(v, tuple):
                    cells.append(dumps_canonical(list(v)))
                else:
                    cells.append(v)
            writer.writerow(cells)
        else:
            _print(dumps_canonical({"rows": rows, "stats": st.as_dict()}))
    return 0


# -- verification suites ------------------------------------------------


class SuiteCase(NamedTuple):
    suite: str
    name: str
    parameters: dict
    run: Callable  # -> (route_a_name, value_a, route_b_name, value_b)


def _case_record(case, timings):
    t0 = time.perf_counter()
    route_a, value_a, route_b, value_b = case.run()
    dt = time.perf_counter() - t0
    rec = {
        "case": case.name,
        "parameters": case.parameters,
        "route_a": {"name": route_a, "value": _value_json(value_a)},
        "route_b": {"name": route_b, "value": _value_json(value_b)},
        "equal": bool(value_a == value_b),
    }
    if timings:
        rec["seconds"] = round(dt, 6)
    return rec


P = ParamPoly.var("P")
Q = ParamPoly.var("Q")
U = ParamPoly.var("u")
V = ParamPoly.var("v")
PL = ParamPoly.var("PL")
PR = ParamPoly.var("PR")
QL = ParamPoly.var("QL")
QR = ParamPoly.var("QR")


def _gog_brute(m, n, k, b=None, weight=None):
    total = ParamPoly.zero()
    for _, st in enumerate_gog_trapezoids(m, n, k, bottom_row=b):
        total = total + (weight(st) if weight else ParamPoly.const(1))
    return total


def _w_gog_minmax(st):
    q = st.maxima - (1 if st.bottom_right_max else 0)
    return P ** st.minima * Q ** q


def _w_inv_pair(st):
    return U ** st.inv * V ** st.inv_prime


def _suite_gog(max_m, max_n, budget):
    cases = []
    for m in range(max_m + 1):
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                shape = {"m": m, "n": n, "k": k}

                def total_count(m=m, n=n, k=k):
                    return ("enumeration", _gog_brute(m, n, k),
                            "constant-term total", gog_ct_total(m, n, k, **budget))

                cases.append(SuiteCase("gog", f"count-total m={m} n={n} k={k}", shape, total_count))

                def total_minmax(m=m, n=n, k=k):
                    brute = _gog_brute(m, n, k, weight=lambda st: P ** st.minima * Q ** st.maxima)
                    return ("enumeration", brute,
                            "spliced constant-term total", gog_ct_total(m, n, k, mode="min_max", **budget))

                cases.append(SuiteCase("gog", f"min-max-total m={m} n={n} k={k}", shape, total_minmax))

                if m == 0:
                    def minmax_m0(n=n, k=k):
                        brute = _gog_brute(0, n, k, weight=lambda st: P ** st.minima * Q ** st.maxima)
                        return ("enumeration", brute,
                                "one-expression total", gog_ct_minmax_m0(n, k, **budget))

                    cases.append(SuiteCase("gog", f"min-max-m0 n={n} k={k}", shape, minmax_m0))

                for b in gog_bottom_rows(m, n, k):
                    params = dict(shape, bottom=list(b))

                    def count_b(m=m, n=n, k=k, b=b):
                        return ("enumeration", _gog_brute(m, n, k, b),
                                "constant-term", gog_ct(m, n, k, b, **budget))

                    cases.append(SuiteCase("gog", f"count m={m} n={n} k={k} b={b}", params, count_b))

                    def invpair_b(m=m, n=n, k=k, b=b):
                        return ("enumeration", _gog_brute(m, n, k, b, _w_inv_pair),
                                "constant-term", gog_ct(m, n, k, b, mode="inv_pair", **budget))

                    cases.append(SuiteCase("gog", f"inv-pair m={m} n={n} k={k} b={b}", params, invpair_b))

                    def minmax_b(m=m, n=n, k=k, b=b):
                        return ("enumeration", _gog_brute(m, n, k, b, _w_gog_minmax),
                                "constant-term", gog_ct(m, n, k, b, mode="min_max", **budget))

                    cases.append(SuiteCase("gog", f"min-max m={m} n={n} k={k} b={b}", params, minmax_b))

                    for a in range(1, m + n + 1):
                        def minmax_top(m=m, n=n, k=k, b=b, a=a):
                            def w(st):
                                return _w_gog_minmax(st) if st.top_entry == a else ParamPoly.zero()

                            return ("enumeration", _gog_brute(m, n, k, b, w),
                                    "constant-term", gog_ct(m, n, k, b, mode="min_max", top=a, **budget))

                        cases.append(SuiteCase(
                            "gog", f"min-max-top m={m} n={n} k={k} b={b} a={a}",
                            dict(params, top=a), minmax_top))

                    if b[0] == 1:
                        for p in range(1, n + 1):
                            def fixed_min(m=m, n=n, k=k, b=b, p=p):
                                def w(st):
                                    return ParamPoly.const(1 if st.minima == p else 0)

                                return ("enumeration", _gog_brute(m, n, k, b, w),
                                        "constant-term", gog_ct_fixed_minima(m, n, k, p, b[1:], **budget))

                            cases.append(SuiteCase(
                                "gog", f"fixed-minima m={m} n={n} k={k} b={b} p={p}",
                                dict(params, p=p), fixed_min))
    return cases


def _magog_brute(m, n, k, b=None, weight=None):
    total = ParamPoly.zero()
    for _, st in enumerate_magog_trapezoids(m, n, k, bottom_row=b):
        total = total + (weight(st) if weight else ParamPoly.const(1))
    return total


def _w_magog_bottom(st):
    q = st.minima - (1 if st.bottom_left_min else 0)
    return P ** st.maxima * Q ** q


def _suite_magog(max_m, max_n, budget):
    cases = []
    for m in range(max_m + 1):
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                shape = {"m": m, "n": n, "k": k}

                def total(m=m, n=n, k=k):
                    brute = _magog_brute(m, n, k, weight=lambda st: P ** st.maxima * Q ** st.minima)
                    return ("enumeration", brute,
                            "constant-term total", magog_ct_total(m, n, k, **budget))

                cases.append(SuiteCase("magog", f"total m={m} n={n} k={k}", shape, total))

                for b in magog_bottom_rows(m, n, k):
                    params = dict(shape, bottom=list(b))

                    def lgv(m=m, n=n, k=k, b=b):
                        return ("enumeration", _magog_brute(m, n, k, b, _w_magog_bottom),
                                "lattice-path determinant", magog_lgv_det(m, n, k, b))

                    cases.append(SuiteCase("magog", f"lgv m={m} n={n} k={k} b={b}", params, lgv))

                    def ctb(m=m, n=n, k=k, b=b):
                        return ("enumeration", _magog_brute(m, n, k, b, _w_magog_bottom),
                                "constant-term", magog_ct_bottom(m, n, k, b, **budget))

                    cases.append(SuiteCase("magog", f"ct-bottom m={m} n={n} k={k} b={b}", params, ctb))

                for q in range(0, n - k + 2):
                    params = dict(shape, q=q)

                    def brute_q(m=m, n=n, k=k, q=q):
                        def w(st):
                            return P ** st.maxima if st.minima == q else ParamPoly.zero()

                        return _magog_brute(m, n, k, weight=w)

                    def slice_det(m=m, n=n, k=k, q=q, brute_q=brute_q):
                        return ("enumeration", brute_q(),
                                "slice determinant", magog_q_slice_det(m, n, k, q))

                    cases.append(SuiteCase("magog", f"q-det m={m} n={n} k={k} q={q}", params, slice_det))

                    def v2_det(m=m, n=n, k=k, q=q, brute_q=brute_q):
                        try:
                            got = magog_v2_det(m, n, k, q)
                        except NotApplicableError:
                            return ("excluded", True, "excluded", True)
                        return ("enumeration", brute_q(), "determinant", got)

                    cases.append(SuiteCase("magog", f"v2-det m={m} n={n} k={k} q={q}", params, v2_det))

                    def v2_ct(m=m, n=n, k=k, q=q, brute_q=brute_q):
                        try:
                            got = magog_ct_fixed_minima(m, n, k, q, **budget)
                        except NotApplicableError:
                            return ("excluded", True, "excluded", True)
                        return ("enumeration", brute_q(), "constant-term", got)

                    cases.append(SuiteCase("magog", f"v2-ct m={m} n={n} k={k} q={q}", params, v2_ct))
    return cases


def _pentagon_brute(m, n, kl, kr, b=None, weight=None):
    total = ParamPoly.zero()
    for _, st in enumerate_gog_pentagons(m, n, kl, kr, bottom_row=b):
        total = total + (weight(st) if weight else ParamPoly.const(1))
    return total


def _w_pentagon_minmax(st):
    ql = st.bottom_minima - (1 if st.bottom_left_min else 0)
    qr = st.bottom_maxima - (1 if st.bottom_right_max else 0)
    return QL ** ql * QR ** qr


def _w_pentagon_four(st):
    if st.top_minima < 1 or st.top_maxima < 1:
        return ParamPoly.zero()
    return PL ** st.top_minima * PR ** st.top_maxima * _w_pentagon_minmax(st)


def _suite_pentagon(max_m, max_n, budget):
    cases = []
    for m in range(max_m + 1):
        for n in range(1, max_n + 1):
            for kl in range(1, n + 1):
                for kr in range(max(1, n + 1 - kl), n + 1):
                    shape = {"m": m, "n": n, "kl": kl, "kr": kr}
                    for b in pentagon_bottom_rows(m, n, kl, kr):
                        params = dict(shape, bottom=list(b))
                        oracles = (
                            ("count", None, "count"),
                            ("inv-pair", _w_inv_pair, "inv_pair"),
                            ("min-max", _w_pentagon_minmax, "min_max"),
                        )
                        for label, w, mode in oracles:
                            def run(m=m, n=n, kl=kl, kr=kr, b=b, w=w, mode=mode):
                                return ("enumeration", _pentagon_brute(m, n, kl, kr, b, w),
                                        "constant-term", pentagon_ct(m, n, kl, kr, b, mode=mode, **budget))

                            cases.append(SuiteCase(
                                "pentagon", f"{label} m={m} n={n} kl={kl} kr={kr} b={b}", params, run))

                        if kl <= n - 1 and kr <= n - 1:
                            def four(m=m, n=n, kl=kl, kr=kr, b=b):
                                return ("enumeration", _pentagon_brute(m, n, kl, kr, b, _w_pentagon_four),
                                        "constant-term",
                                        pentagon_ct(m, n, kl, kr, b, mode="four_weight", **budget))

                            cases.append(SuiteCase(
                                "pentagon", f"four-weight m={m} n={n} kl={kl} kr={kr} b={b}", params, four))

                            def four_top_excluded(m=m, n=n, kl=kl, kr=kr, b=b):
                                try:
                                    pentagon_ct(m, n, kl, kr, b, mode="four_weight", top=1, **budget)
                                except NotApplicableError:
                                    return ("raises", True, "expected", True)
                                return ("raises", False, "expected", True)

                            cases.append(SuiteCase(
                                "pentagon", f"four-weight-top-excluded m={m} n={n} kl={kl} kr={kr} b={b}",
                                params, four_top_excluded))

                        for a in range(1, m + n + 1):
                            def count_top(m=m, n=n, kl=kl, kr=kr, b=b, a=a):
                                def w(st):
                                    return ParamPoly.const(1 if st.top_entry == a else 0)

                                return ("enumeration", _pentagon_brute(m, n, kl, kr, b, w),
                                        "constant-term",
                                        pentagon_ct(m, n, kl, kr, b, top=a, **budget))

                            cases.append(SuiteCase(
                                "pentagon", f"count-top m={m} n={n} kl={kl} kr={kr} b={b} a={a}",
                                dict(params, top=a), count_top))
    return cases


def _sttree_shapes(max_n):
    for n in range(2, max_n + 1):
        yield n, (), ()
        yield n, (1,), ()
        yield n, (), (1,)
        if n >= 3:
            yield n, (1,), (0, 1)
            yield n, (2, 1), ()
            yield n, (1, 1), (1,)


def _tree_brute(shape, b, inc_i, inc_j):
    total = ParamPoly.zero()
    for _, st in enumerate_st_trees(shape, b, include_i=inc_i, include_j=inc_j):
        total = total + U ** st.inv_j * V ** st.inv_prime_i
    return total


def _suite_sttree(max_m, max_n, budget):
    cases = []
    for n, s, t in _sttree_shapes(max(max_n, 2)):
        shape = STTreeShape(n, s, t)
        bottoms = [tuple(range(1, n + 1)), tuple(2 * i + 1 for i in range(n))]
        for b in bottoms:
            for inc_i, inc_j in ((frozenset(), frozenset()),
                                 (shape.exceptional_columns(), shape.exceptional_diagonals())):
                params = {"n": n, "s": list(s), "t": list(t), "bottom": list(b),
                          "include_i": sorted(inc_i), "include_j": sorted(inc_j)}
                tag = f"n={n} s={s} t={t} b={b} inc=({sorted(inc_i)},{sorted(inc_j)})"

                def op(shape=shape, s=s, t=t, b=b, inc_i=inc_i, inc_j=inc_j):
                    return ("enumeration", _tree_brute(shape, b, inc_i, inc_j),
                            "operator", OperatorRing(shape.n).st_gf(s, t, b, include_i=inc_i, include_j=inc_j))

                cases.append(SuiteCase("sttree", f"operator {tag}", params, op))

                def ct(shape=shape, s=s, t=t, b=b, inc_i=inc_i, inc_j=inc_j):
                    return ("enumeration", _tree_brute(shape, b, inc_i, inc_j),
                            "constant-term",
                            ct_st_tree(s, t, b, include_i=inc_i, include_j=inc_j, **budget))

                cases.append(SuiteCase("sttree", f"constant-term {tag}", params, ct))
    return cases


def _mt_brute(b, apex=None):
    total = ParamPoly.zero()
    for _, st in enumerate_monotone_triangles(b):
        if apex is not None and st.top_entry != apex:
            continue
        total = total + U ** st.inv * V ** st.inv_prime
    return total


def _suite_operator(max_m, max_n, budget):
    import itertools

    cases = []
    for n in range(1, max_n + 1):
        for b in itertools.combinations(range(1, n + 3), n):
            params = {"bottom": list(b)}

            def opgf(b=b):
                return ("enumeration", _mt_brute(b), "operator", mt_gf_operator(b))

            cases.append(SuiteCase("operator", f"uv-operator b={b}", params, opgf))

            def ct_std(b=b):
                return ("enumeration", _mt_brute(b), "constant-term", ct_mt(b, **budget))

            cases.append(SuiteCase("operator", f"uv-constant-term b={b}", params, ct_std))

            def ct_alt(b=b):
                count = _mt_brute(b).substitute(u=1, v=1)
                return ("enumeration", count, "series route", ct_mt(b, mode="alternative", **budget))

            cases.append(SuiteCase("operator", f"count-series b={b}", params, ct_alt))

            def ct_anti(b=b):
                count = _mt_brute(b).substitute(u=1, v=1)
                return ("enumeration", count, "antisymmetrizer", ct_mt(b, mode="antisym", **budget))

            cases.append(SuiteCase("operator", f"count-antisym b={b}", params, ct_anti))

            for a in range(b[0], b[-1] + 1):
                def top_op(b=b, a=a):
                    return ("enumeration", _mt_brute(b, apex=a),
                            "operator", mt_gf_top_operator(b, a))

                cases.append(SuiteCase("operator", f"top-operator b={b} a={a}",
                                       dict(params, a=a), top_op))

                def top_ct(b=b, a=a):
                    return ("enumeration", _mt_brute(b, apex=a),
                            "constant-term", ct_mt_top(b, a, **budget))

                cases.append(SuiteCase("operator", f"top-constant-term b={b} a={a}",
                                       dict(params, a=a), top_ct))
        weak = {1: ((1,),), 2: ((1, 1),), 3: ((1, 1, 2),)}.get(n, ())
        for b in weak:
            def weak_count(b=b):
                count = sum(1 for _ in enumerate_monotone_triangles(b))
                return ("enumeration", ParamPoly.const(count),
                        "constant-term", ct_mt(b, **budget))

            cases.append(SuiteCase("operator", f"weak-count b={b}", {"bottom": list(b)}, weak_count))
    return cases


def _bool_case(suite, name, params, thunk):
    def run():
        return ("exact check", bool(thunk()), "expected", True)

    return SuiteCase(suite, name, params, run)


def _suite_identities(max_m, max_n, budget):
    cases = []
    for r in range(1, min(max_n + 1, 4) + 1):
        cases.append(_bool_case("identities", f"cyclic-shift-lemma r={r}", {"r": r},
                                lambda r=r: verify_lemma_zeilberger(r)))
    for r in range(1, min(max_n, 3) + 1):
        for base in (0, 1):
            cases.append(_bool_case(
                "identities", f"ordered-sum r={r} base={base}", {"r": r, "base": base},
                lambda r=r, base=base: verify_summation_identity(r, base, 6)))
    for n in range(1, min(max_n, 3) + 1):
        for sym in ("1", "e1", "e2"):
            cases.append(_bool_case(
                "identities", f"symmetrizer-swap n={n} sym={sym} symbolic", {"n": n, "sym": sym},
                lambda n=n, sym=sym: verify_theorem_zeil(n, sym=sym, **budget)))
            cases.append(_bool_case(
                "identities", f"symmetrizer-swap n={n} sym={sym} t=1", {"n": n, "sym": sym, "t": 1},
                lambda n=n, sym=sym: verify_theorem_zeil(n, sym=sym, t=Fraction(1), **budget)))
    for variant in ("quadratic", "linear"):
        for n in range(1, min(max_n, 3) + 1):
            cases.append(_bool_case(
                "identities", f"antisymmetrizer-{variant} n={n}", {"n": n, "variant": variant},
                lambda n=n, variant=variant: verify_antisymmetrizer_identities(n, variant=variant)))
    for n in range(1, min(max_n, 3) + 1):
        cases.append(_bool_case(
            "identities", f"coincident-limit-bivariate n={n}", {"n": n},
            lambda n=n: verify_behrend_limits(n, f={(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})))
        flist = [{(0,): (j + 1) ** 2, (1,): 2 * (j + 1), (2,): 1} for j in range(n)]
        cases.append(_bool_case(
            "identities", f"coincident-limit-univariate n={n}", {"n": n},
            lambda n=n, flist=flist: verify_behrend_limits(n, f_list=flist)))
    for source in ("standard", "alternative", "antisym"):
        for n in range(1, min(max_n, 2) + 1):
            cases.append(_bool_case(
                "identities", f"symmetrizer-closed-form {source} n={n}", {"n": n, "source": source},
                lambda n=n, source=source: verify_symmetrizer_mt(n, source=source)))
    for n in range(1, min(max_n + 2, 6) + 1):
        for conjugate in (False, True):
            def dets(n=n, conjugate=conjugate):
                _, _, verdicts = asm_determinants(n, conjugate=conjugate)
                holds = all(v for v in verdicts.values() if v is not None)
                return ("determinant verdicts", holds, "expected", True)

            cases.append(SuiteCase(
                "identities", f"asm-determinants n={n} root={'second' if conjugate else 'first'}",
                {"n": n, "conjugate": conjugate}, dets))
    for n, reference in enumerate((1, 2, 7, 42, 429, 7436), start=1):
        cases.append(SuiteCase(
            "identities", f"asm-number n={n}", {"n": n},
            lambda n=n, reference=reference: (
                "product formula", ParamPoly.const(asm_number(n)),
                "reference count", ParamPoly.const(reference))))
    return cases


def _hex_product(b):
    n = len(b)
    return prod(Fraction(b[j] - b[i], j - i) for i in range(n) for j in range(i + 1, n))


def _suite_appendix(max_m, max_n, budget):
    import itertools

    cases = []
    one_minus_u = ParamPoly.const(1) - U
    for n in range(1, min(max_n, 3) + 1):
        for m in range(n, min(n + 2, 5) + 1):
            for b in itertools.combinations(range(1, m + 1), n):
                params = {"n": n, "m": m, "bottom": list(b)}

                def gf_match(n=n, m=m, b=b):
                    return ("matching sum", weighted_matching_sum(ARGraph(n, m, b)),
                            "triangle polynomial at v=1-u",
                            mt_generating_function(b).substitute(v=one_minus_u))

                cases.append(SuiteCase("appendix", f"weighted-sum n={n} m={m} b={b}", params, gf_match))

                def two_enum(n=n, m=m, b=b):
                    scale = 2 ** (n * (n - 1) // 2)
                    val = weighted_matching_sum(ARGraph(n, m, b)).substitute(u=Fraction(1, 2))
                    return ("half-weight matching sum", val * scale,
                            "hexagonal product", ParamPoly.const(_hex_product(b) * scale))

                cases.append(SuiteCase("appendix", f"two-enumeration n={n} m={m} b={b}", params, two_enum))

                if n <= 2:
                    def classes(n=n, m=m, b=b):
                        from .matchings import enumerate_perfect_matchings

                        g = ARGraph(n, m, b)
                        groups = {}
                        for mm in enumerate_perfect_matchings(g):
                            tri, exp = matching_class(mm)
                            rec = groups.setdefault(tri.rows, [exp, 0, ParamPoly.zero()])
                            if rec[0] != exp:
                                return ("class partition", False, "expected", True)
                            rec[1] += 1
                            rec[2] = rec[2] + mm.weight()
                        total = 0
                        for rows, (exp, size, wsum) in groups.items():
                            st = MonotoneTriangle(rows).statistics()
                            if size != 2 ** exp or wsum != U ** st.inv * one_minus_u ** st.inv_prime:
                                return ("class partition", False, "expected", True)
                            total += size
                        count = sum(1 for _ in enumerate_perfect_matchings(g))
                        tri_count = sum(1 for _ in enumerate_monotone_triangles(b))
                        holds = total == count and len(groups) == tri_count
                        return ("class partition", holds, "expected", True)

                    cases.append(SuiteCase("appendix", f"classes n={n} m={m} b={b}", params, classes))

    def orientation():
        # weight of the matching using the NW edge of the single cell:
        # NW pairs with SE, so the product must be exactly u
        g = ARGraph(1, 1, (1,))
        from .matchings import enumerate_perfect_matchings

        for mm in enumerate_perfect_matchings(g):
            sides = {g.edges[ei].side for ei in mm.edges}
            if "NW" in sides:
                return ("NW+SE matching weight", mm.weight(), "u", U)
        return ("NW+SE matching weight", ParamPoly.zero(), "u", U)

    cases.append(SuiteCase("appendix", "cell-orientation", {}, orientation))
    return cases


SUITE_BUILDERS = {
    "gog": _suite_gog,
    "magog": _suite_magog,
    "pentagon": _suite_pentagon,
    "sttree": _suite_sttree,
    "operator": _suite_operator,
    "identities": _suite_identities,
    "appendix": _suite_appendix,
}


def run_suite(name, max_m, max_n, budget, timings=False):
    """Build and run one suite; returns the report dict."""
    cases = SUITE_BUILDERS[name](max_m, max_n, budget)
    workers = max(1, int(os.environ.get("GOGMAGOG_WORKERS", "1")))
    if workers == 1:
        records = [_case_record(c, timings) for c in cases]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda c: _case_record(c, timings), cases))
    failed = sum(1 for r in records if not r["equal"])
    return {
        "suite": name,
        "summary": {"cases": len(records), "passed": len(records) - failed, "failed": failed},
        "cases": records,
    }


def cmd_verify(args):
    budget = _budget(args)
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(nm, args.max_m, args.max_n, budget, args.timings) for nm in names]
    if len(reports) == 1:
        document = reports[0]
        failed = document["summary"]["failed"]
    else:
        failed = sum(r["summary"]["failed"] for r in reports)
        total = sum(r["summary"]["cases"] for r in reports)
        document = {
            "suites": reports,
            "summary": {"cases": total, "passed": total - failed, "failed": failed},
        }
    out = None
    if args.out:
        out = open(args.out, "w", encoding="utf-8")
    try:
        if args.format == "csv":
            stream = out if out is not None else sys.stdout
            w = csv.writer(stream, lineterminator="\n")
            w.writerow(["suite", "case", "parameters", "route_a", "value_a",
                        "route_b", "value_b", "equal"])
            for rep in reports:
                for r in rep["cases"]:
                    w.writerow([
                        rep["suite"], r["case"], dumps_canonical(r["parameters"]),
                        r["route_a"]["name"], dumps_canonical(r["route_a"]["value"]),
                        r["route_b"]["name"], dumps_canonical(r["route_b"]["value"]),
                        "true" if r["equal"] else "false",
                    ])
        else:
            _print(dumps_canonical(document), out)
    finally:
        if out is not None:
            out.close()
    return 1 if failed else 0


# -- conjecture tables --------------------------------------------------


def cmd_conjecture(args):
    if args.m is not None or args.n is not None or args.k is not None:
        _need(args, ("m", "n", "k"), "a fixed conjecture shape")
        shapes = [(args.m, args.n, args.k)]
    else:
        shapes = [
            (m, n, k)
            for m in range(args.max_m + 1)
            for n in range(1, args.max_n + 1)
            for k in range(1, n + 1)
        ]
    records = []
    all_true = True
    for m, n, k in shapes:
        gog, magog, verdict = conjecture_check(m, n, k)
        all_true = all_true and verdict
        records.append({
            "m": m, "n": n, "k": k,
            "gog": [{"minima": p, "maxima": q, "count": c} for (p, q), c in sorted(gog.items())],
            "magog": [{"minima": p, "maxima": q, "count": c} for (p, q), c in sorted(magog.items())],
            "verdict": verdict,
        })
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["m", "n", "k", "minima", "maxima", "gog", "magog_swapped", "equal"])
        for rec, (m, n, k) in zip(records, shapes):
            gog = {(r["minima"], r["maxima"]): r["count"] for r in rec["gog"]}
            swapped = {(r["maxima"], r["minima"]): r["count"] for r in rec["magog"]}
            for key in sorted(set(gog) | set(swapped)):
                a, b = gog.get(key, 0), swapped.get(key, 0)
                w.writerow([m, n, k, key[0], key[1], a, b, "true" if a == b else "false"])
    else:
        _print(dumps_canonical({"shapes": records, "all_verdicts_true": all_true}))
    return 0 if all_true else 1


# -- parser -------------------------------------------------------------


def _add_budget_flags(p):
    p.add_argument("--budget-terms", type=int, default=2_000_000,
                   help="cap on intermediate polynomial terms (default 2000000)")
    p.add_argument("--budget-vars", type=int, default=8,
                   help="cap on bound variables per expression (default 8)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="gogmagog",
        description="Exact enumeration and cross-checked formulas for the"
                    " Gog and Magog families.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("enumerate", help="stream one object family with statistics")
    pe.add_argument("kind", choices=("gog", "magog", "pentagon"))
    for flag in ("m", "n", "k", "kl", "kr"):
        pe.add_argument(f"--{flag}", type=int)
    pe.add_argument("--bottom", help="restrict to one bottom row (comma separated)")
    pe.add_argument("--max-objects", type=int, default=200000,
                    help="abort with exit code 2 past this many objects")
    pe.add_argument("--format", choices=("json", "csv"), default="json")
    pe.set_defaults(func=cmd_enumerate)

    pf = sub.add_parser("formula", help="evaluate one registered formula exactly")
    pf.add_argument("formula_id", nargs="?")
    pf.add_argument("--list", action="store_true", help="list the registered formula ids")
    for flag in ("m", "n", "k", "kl", "kr", "p", "q", "top", "a", "lo", "hi"):
        pf.add_argument(f"--{flag}", type=int)
    for flag in ("bottom", "tail", "s", "t", "include-i", "include-j"):
        pf.add_argument(f"--{flag}")
    pf.add_argument("--unweighted", action="store_true")
    pf.add_argument("--format", choices=("json", "csv"), default="json")
    _add_budget_flags(pf)
    pf.set_defaults(func=cmd_formula)

    pv = sub.add_parser("verify", help="run a cross-checking suite")
    pv.add_argument("suite", choices=SUITES + ("all",))
    pv.add_argument("--max-n", type=int, default=2)
    pv.add_argument("--max-m", type=int, default=1)
    pv.add_argument("--out", help="write the report to a file instead of stdout")
    pv.add_argument("--timings", action="store_true",
                    help="include per-case runtimes (breaks byte reproducibility)")
    pv.add_argument("--format", choices=("json", "csv"), default="json")
    _add_budget_flags(pv)
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("conjecture", help="tabulate the refined swap comparison")
    for flag in ("m", "n", "k"):
        pc.add_argument(f"--{flag}", type=int, help="fix one shape (give all three)")
    pc.add_argument("--max-m", type=int, default=1)
    pc.add_argument("--max-n", type=int, default=3)
    pc.add_argument("--format", choices=("json", "csv"), default="json")
    pc.set_defaults(func=cmd_conjecture)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceBudgetError as e:
        print(f"resource budget exceeded: {e}", file=sys.stderr)
        return 2
    except PreconditionError as e:
        print(f"precondition violated: {e}", file=sys.stderr)
        return 3
    except GogmagogError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
