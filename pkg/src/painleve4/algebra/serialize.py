"""JSON-friendly forms of exact values.

Rationals are strings ``"p/q"`` (``"p"`` when ``q == 1``); univariate
polynomials are coefficient lists, lowest degree first; multivariate
polynomials are lists of ``[exponents, coefficient]`` pairs.
"""

from __future__ import annotations

from .hirota import GaugedFn
from .multivariate import MultiPoly
from .numbers import fmt_rational, parse_rational
from .univariate import UniPoly, UniRatFunc


def rational_to_str(q) -> str:
    return fmt_rational(q)


def rational_from_str(s):
    return parse_rational(s)


def unipoly_to_list(p: UniPoly) -> list[str]:
    return [fmt_rational(c) for c in p.coeffs]


def unipoly_from_list(items) -> UniPoly:
    return UniPoly(parse_rational(s) for s in items)


def ratfunc_to_dict(r: UniRatFunc) -> dict:
    return {"num": unipoly_to_list(r.num), "den": unipoly_to_list(r.den)}


def ratfunc_from_dict(d: dict) -> UniRatFunc:
    return UniRatFunc(unipoly_from_list(d["num"]), unipoly_from_list(d["den"]))


def gauged_to_dict(g: GaugedFn) -> dict:
    return {"eps": g.eps, "a": fmt_rational(g.a), "coeffs": unipoly_to_list(g.u)}


def gauged_from_dict(d: dict) -> GaugedFn:
    return GaugedFn(int(d["eps"]), parse_rational(d["a"]), unipoly_from_list(d["coeffs"]))


def multipoly_to_dict(p: MultiPoly) -> dict:
    return {"nvars": p.nvars, "terms": [[list(e), fmt_rational(c)] for e, c in p.sorted_items()]}


def multipoly_from_dict(d: dict) -> MultiPoly:
    return MultiPoly({tuple(e): parse_rational(c) for e, c in d["terms"]}, int(d["nvars"]))
