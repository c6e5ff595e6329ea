# /src/charfunc/standard.py

from typing import Dict, List

from src.charfunc.char_func import CharFunction, Ring, make_char


def simplex_char(n: int, ring: Ring = Ring.Z) -> CharFunction:
    """lambda(F_i) = e_i for i <= n and lambda(F_{n+1}) = -(e_1 + ... + e_n); the fan of CP^n."""
    vectors: Dict[str, List[int]] = {}
    for i in range(1, n + 1):
        vectors[f"F{i}"] = [1 if k == i else 0 for k in range(1, n + 1)]
    if n:
        vectors[f"F{n + 1}"] = [-1] * n
    return make_char(vectors, ring)


def product_char(*chars: CharFunction) -> CharFunction:
    """Block sum, with facet names matching ``generators.product``."""
    ring = Ring.F2 if any(c.ring is Ring.F2 for c in chars) else Ring.Z
    total = sum(c.rank for c in chars)
    vectors: Dict[str, List[int]] = {}
    offset = 0
    for k, char in enumerate(chars, start=1):
        for facet, vector in zip(char.facets, char.vectors):
            padded = [0] * total
            padded[offset:offset + char.rank] = vector
            vectors[f"{facet}_{k}"] = padded
        offset += char.rank
    return make_char(vectors, ring)


def hirzebruch_char(r: int) -> CharFunction:
    """The square F1..F4 (bottom, right, top, left) with F3 twisted by r."""
    return make_char({"F1": [1, 0], "F2": [0, 1], "F3": [1, r], "F4": [0, 1]})


def connected_sum_char() -> CharFunction:
    """The square function whose toric manifold is CP^2 # CP^2."""
    return make_char({"F1": [1, 0], "F2": [-1, 1], "F3": [1, -2], "F4": [0, 1]})


def prism_char() -> CharFunction:
    # triangle fan on x, y and the interval fan on z
    return make_char({
        "F1": [0, 1, 0],
        "F2": [-1, -1, 0],
        "F3": [1, 0, 0],
        "F4": [0, 0, 1],
        "F5": [0, 0, -1],
    })
