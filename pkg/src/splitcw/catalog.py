"""Named small graphs with documented, fixed vertex orderings.

Every builder pins an explicit vertex layout so that witnesses (embeddings,
partitions, expression leaves) are reproducible across runs:

* ``path(r)``      P_r   : 0-1-...-(r-1)
* ``cycle(r)``     C_r   : 0-1-...-(r-1)-0, r >= 3
* ``complete(r)``  K_r   : all pairs among 0..r-1
* ``star(s)``      K_{1,s}: centre 0, leaves 1..s
* ``subdivided_claw(h,i,j)`` S_{h,i,j}: centre 0, then the three legs in
  order: 1..h, h+1..h+i, h+i+1..h+i+j (1 <= h <= i <= j)
* ``bull()``   vertices a,b,c,d,e = 0..4; edges ab,bc,ca,ad,be
* ``dart()``   bull plus the edge bd
* ``f1()``     K4 on a,b,c,d = 0..3, pendant e(4)-a, pendant f(5)-d
* ``f2()``     K4 on 0..3, pendant e(4)-a, f(5) adjacent to c and d
* ``f3()``     K4 on 0..3, z(4) adjacent to a and b, pendant y(5)-b
* ``q()``      triangle j1,j2,j3 = 0..2; i1(3)-j1, i2(4)-j2, i3(5)-j2 and j3
* ``f4()``     diamond a-b-d-c-a with chord a-d (0..3 = a,b,c,d), pendant
  y(4)-a, pendant x(5)-d, isolated z(6)
* ``f5()``     K4 on 0..3, z(4) adjacent to a and b, pendant y(5)-b,
  pendant f(6)-d

``catalog(name)`` resolves a small grammar over these:
``TERM ('+' TERM)*`` where ``TERM`` is ``[count] BASE`` and ``BASE`` is one of
``P<r>``, ``C<r>``, ``K<r>``, ``K1,<s>``, ``S<h>,<i>,<j>``, ``bull``,
``dart``, ``Q``, ``F1``..``F5``.  Examples: ``P4``, ``2K2``, ``K1,3+2P1``,
``bull+P1``.
"""

from __future__ import annotations

import re

from .graphs import Graph, disjoint_union


class CatalogError(ValueError):
    """Unknown graph name or parameters out of range."""


def path(r: int) -> Graph:
    if r < 1:
        raise CatalogError("P_r needs r >= 1")
    return Graph(r, [(i, i + 1) for i in range(r - 1)])


def cycle(r: int) -> Graph:
    if r < 3:
        raise CatalogError("C_r needs r >= 3")
    return Graph(r, [(i, (i + 1) % r) for i in range(r)])


def complete(r: int) -> Graph:
    if r < 1:
        raise CatalogError("K_r needs r >= 1")
    return Graph(r, [(i, j) for i in range(r) for j in range(i + 1, r)])


def empty(r: int) -> Graph:
    if r < 1:
        raise CatalogError("rP_1 needs r >= 1")
    return Graph(r)


def star(leaves: int) -> Graph:
    if leaves < 1:
        raise CatalogError("K_{1,s} needs s >= 1")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def subdivided_claw(h: int, i: int, j: int) -> Graph:
    if not 1 <= h <= i <= j:
        raise CatalogError("S_{h,i,j} needs 1 <= h <= i <= j")
    edges = []
    start = 1
    for leg in (h, i, j):
        prev = 0
        for k in range(start, start + leg):
            edges.append((prev, k))
            prev = k
        start += leg
    return Graph(1 + h + i + j, edges)


def bull() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])


def dart() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (1, 3)])


def f1() -> Graph:
    return Graph(6, _k4() + [(4, 0), (5, 3)])


def f2() -> Graph:
    return Graph(6, _k4() + [(4, 0), (5, 2), (5, 3)])


def f3() -> Graph:
    return Graph(6, _k4() + [(4, 0), (4, 1), (5, 1)])


def q() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (2, 0), (3, 0), (4, 1), (5, 1), (5, 2)])


def f4() -> Graph:
    return Graph(7, [(0, 1), (1, 3), (3, 2), (2, 0), (0, 3), (4, 0), (5, 3)])


def f5() -> Graph:
    return Graph(7, _k4() + [(4, 0), (4, 1), (5, 1), (6, 3)])


def _k4() -> list[tuple[int, int]]:
    return [(i, j) for i in range(4) for j in range(i + 1, 4)]


_FIXED = {"bull": bull, "dart": dart, "Q": q, "F1": f1, "F2": f2, "F3": f3,
          "F4": f4, "F5": f5}

_TERM_RE = re.compile(r"^(\d*)([A-Za-z].*)$")


def _base(name: str) -> Graph:
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"P(\d+)", name)
    if m:
        return path(int(m.group(1)))
    m = re.fullmatch(r"C(\d+)", name)
    if m:
        return cycle(int(m.group(1)))
    m = re.fullmatch(r"K1,(\d+)", name)
    if m:
        return star(int(m.group(1)))
    m = re.fullmatch(r"K(\d+)", name)
    if m:
        return complete(int(m.group(1)))
    m = re.fullmatch(r"S(\d+),(\d+),(\d+)", name)
    if m:
        return subdivided_claw(*(int(x) for x in m.groups()))
    raise CatalogError(f"unknown graph name {name!r}")


def catalog(name: str) -> Graph:
    """Resolve a graph name like ``P4``, ``2K2``, ``K1,3+2P1`` or ``F5``."""
    text = name.replace(" ", "")
    if not text:
        raise CatalogError("empty graph name")
    result: Graph | None = None
    for term in text.split("+"):
        m = _TERM_RE.match(term)
        if not m:
            raise CatalogError(f"cannot parse term {term!r} in {name!r}")
        count = int(m.group(1)) if m.group(1) else 1
        if count < 1:
            raise CatalogError(f"multiplier must be positive in {term!r}")
        base = _base(m.group(2))
        for _ in range(count):
            result = base if result is None else disjoint_union(result, base)
    assert result is not None
    return result
