"""JSON interchange for trees, forests, algebra and tensor elements and Hopf verdicts.

Trees are ``{"d": deco or null, "c": [children]}``; triple decorations are
``[i, u1, u2]``.  Coefficients are strings ``"p"`` or ``"p/q"``.  Terms are
written in sorted order and keys are sorted, so output is byte-stable.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .algebra import AlgebraElement, TensorElement
from .rational import format_rational, parse_rational
from .trees import MODES, PLANAR, Tree, canonicalize_forest


class DecodeError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def encode_tree(t: Tree) -> dict:
    deco = list(t.deco) if isinstance(t.deco, tuple) else t.deco
    return {"d": deco, "c": [encode_tree(c) for c in t.children]}


def decode_tree(obj, path: str = "$") -> Tree:
    if not isinstance(obj, dict) or set(obj) - {"d", "c"}:
        raise DecodeError(path, "a tree is an object with keys 'd' and 'c'")
    kids = obj.get("c", [])
    if not isinstance(kids, list):
        raise DecodeError(path + ".c", "children must be a list")
    deco = obj.get("d")
    if isinstance(deco, list):
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in deco):
            raise DecodeError(path + ".d", "decoration lists hold integers")
        deco = tuple(deco)
    elif deco is not None and not isinstance(deco, (int, str)):
        raise DecodeError(path + ".d", "unsupported decoration")
    children = tuple(decode_tree(c, f"{path}.c[{k}]") for k, c in enumerate(kids))
    return Tree(1 + sum(c.weight for c in children), deco, children)


def encode_forest(f) -> list:
    return [encode_tree(t) for t in f]


def decode_forest(obj, path: str = "$", mode: str = PLANAR) -> tuple:
    if not isinstance(obj, list):
        raise DecodeError(path, "a forest is a list of trees")
    return canonicalize_forest(tuple(decode_tree(t, f"{path}[{k}]") for k, t in enumerate(obj)), mode)


def _coeff(obj, path: str) -> Fraction:
    try:
        return parse_rational(obj, path)
    except ValueError as exc:
        raise DecodeError(path, str(exc)) from None


def _mode(obj, path: str) -> str:
    mode = obj.get("mode")
    if mode not in MODES:
        raise DecodeError(path + ".mode", f"expected one of {MODES}")
    return mode


def encode_element(x: AlgebraElement) -> dict:
    return {"mode": x.mode,
            "terms": [{"forest": encode_forest(f), "coeff": format_rational(c)}
                      for f, c in x.sorted_items()]}


def decode_element(obj, path: str = "$") -> AlgebraElement:
    if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
        raise DecodeError(path, "an element is {'mode', 'terms': [...]}")
    mode = _mode(obj, path)
    terms: dict = {}
    for k, term in enumerate(obj["terms"]):
        p = f"{path}.terms[{k}]"
        if not isinstance(term, dict) or set(term) != {"forest", "coeff"}:
            raise DecodeError(p, "a term is {'forest', 'coeff'}")
        f = decode_forest(term["forest"], p + ".forest", mode)
        terms[f] = terms.get(f, 0) + _coeff(term["coeff"], p + ".coeff")
    return AlgebraElement(terms, mode)


def encode_tensor(x: TensorElement) -> dict:
    return {"mode": x.mode,
            "terms": [{"left": encode_forest(l), "right": encode_forest(r),
                       "coeff": format_rational(c)}
                      for (l, r), c in x.sorted_items()]}


def decode_tensor(obj, path: str = "$") -> TensorElement:
    if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
        raise DecodeError(path, "a tensor is {'mode', 'terms': [...]}")
    mode = _mode(obj, path)
    terms: dict = {}
    for k, term in enumerate(obj["terms"]):
        p = f"{path}.terms[{k}]"
        if not isinstance(term, dict) or set(term) != {"left", "right", "coeff"}:
            raise DecodeError(p, "a term is {'left', 'right', 'coeff'}")
        key = (decode_forest(term["left"], p + ".left", mode),
               decode_forest(term["right"], p + ".right", mode))
        terms[key] = terms.get(key, 0) + _coeff(term["coeff"], p + ".coeff")
    return TensorElement(terms, mode)


def encode_verdict(v) -> dict:
    cand = None
    if v.candidate is not None:
        cand = [None if c is None else format_rational(c) for c in v.candidate]
    return {
        "pass": v.passed,
        "order": v.order,
        "mode": v.mode,
        "failing_weight": v.failing_weight,
        "residual": None if v.residual is None else encode_tensor(v.residual),
        "candidate": cand,
        "matches_family": v.matches_family,
    }


def decode_verdict(obj, path: str = "$"):
    from .hopfcheck import HopfVerdict

    if not isinstance(obj, dict) or "pass" not in obj:
        raise DecodeError(path, "a verdict is an object with a 'pass' key")
    cand = obj.get("candidate")
    if cand is not None:
        cand = tuple(None if c is None else _coeff(c, f"{path}.candidate[{k}]")
                     for k, c in enumerate(cand))
    res = obj.get("residual")
    return HopfVerdict(
        passed=bool(obj["pass"]),
        order=obj.get("order"),
        mode=obj.get("mode"),
        failing_weight=obj.get("failing_weight"),
        residual=None if res is None else decode_tensor(res, path + ".residual"),
        candidate=cand,
        matches_family=obj.get("matches_family"),
    )


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
