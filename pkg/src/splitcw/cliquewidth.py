"""k-expressions and exact clique-width.

An expression is a term over four operations: create a labelled vertex, take
a disjoint union (vertices keep their labels, so equal labels merge into one
class), join every label-i vertex to every label-j vertex (i != j), and
rename label i to j.  ``evaluate`` runs a term bottom-up and yields the
labelled graph; ``clique_width`` is the least number of labels over all terms
evaluating to the graph.

Exact solver.  The search runs over a quotient state space: a state is a
vertex subset S together with a partition of S into at most k unnamed label
classes, meaning some k-expression builds exactly the induced subgraph on S
with those final classes.  Two pruning facts make this complete and small:

* classes only ever merge on the way up a term, so in a state that can still
  grow into the whole graph, every class must look the same from outside S
  (each vertex not in S is adjacent to all of a class or none of it);

* any term can be normalized so that immediately after each union all edges
  between the two sides are created by joins before anything else happens.
  A union transition therefore picks a partial matching between the two
  sides' classes, where a matched pair either shares a label at the union
  (allowed when no edges are needed between the pair) or is joined first and
  renamed together afterwards (allowed when the pair is fully adjacent); the
  label budget at the union instant is sides' classes minus label-sharing
  pairs.  After the union, any class pair that needs at least one cross edge
  is joined, which forces that pair to be fully adjacent in the target.

Witness expressions are rebuilt from parent pointers, with ties broken by
the deterministic scan order (splits by submask value, matchings in
enumeration order), and the returned expression always evaluates to a graph
isomorphic to the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .graphs import Graph, GraphSizeError, _bits
from .split import SplitPartition, check_partition
from .graphs import independence_number, canonical_code

SOLVER_LIMIT = 10


class MalformedExpressionError(ValueError):
    """Structurally invalid expression (join with i = j, label < 1, ...)."""


class ExpressionParseError(ValueError):
    """Unparseable expression text."""


@dataclass(frozen=True)
class Create:
    label: int


@dataclass(frozen=True)
class UnionOp:
    left: "KExpression"
    right: "KExpression"


@dataclass(frozen=True)
class Join:
    i: int
    j: int
    child: "KExpression"


@dataclass(frozen=True)
class Rename:
    old: int
    new: int
    child: "KExpression"


KExpression = Union[Create, UnionOp, Join, Rename]


@dataclass(frozen=True)
class LabelledGraph:
    graph: Graph
    labels: tuple[int, ...]


def width(e: KExpression) -> int:
    """Number of distinct labels mentioned anywhere in the expression."""
    labels: set[int] = set()
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Create):
            labels.add(node.label)
        elif isinstance(node, UnionOp):
            stack.extend((node.left, node.right))
        elif isinstance(node, Join):
            labels.update((node.i, node.j))
            stack.append(node.child)
        elif isinstance(node, Rename):
            labels.update((node.old, node.new))
            stack.append(node.child)
        else:
            raise MalformedExpressionError(f"unknown node {node!r}")
    return len(labels)


def evaluate(e: KExpression) -> LabelledGraph:
    """Build the labelled graph bottom-up.

    Vertices are numbered by create-leaf order, left to right.  Join adds all
    missing edges between the two classes; rename with old == new is a no-op.
    """
    if isinstance(e, Create):
        if e.label < 1:
            raise MalformedExpressionError("labels must be positive")
        return LabelledGraph(Graph(1), (e.label,))
    if isinstance(e, UnionOp):
        lg, rg = evaluate(e.left), evaluate(e.right)
        n = lg.graph.n
        edges = lg.graph.edges + [(u + n, v + n) for u, v in rg.graph.edges]
        return LabelledGraph(
            Graph(n + rg.graph.n, edges), lg.labels + rg.labels
        )
    if isinstance(e, Join):
        if e.i < 1 or e.j < 1:
            raise MalformedExpressionError("labels must be positive")
        if e.i == e.j:
            raise MalformedExpressionError("join requires two distinct labels")
        sub = evaluate(e.child)
        edges = set(sub.graph.edges)
        left = [v for v, lab in enumerate(sub.labels) if lab == e.i]
        right = [v for v, lab in enumerate(sub.labels) if lab == e.j]
        for u in left:
            for v in right:
                edges.add((min(u, v), max(u, v)))
        return LabelledGraph(Graph(sub.graph.n, sorted(edges)), sub.labels)
    if isinstance(e, Rename):
        if e.old < 1 or e.new < 1:
            raise MalformedExpressionError("labels must be positive")
        sub = evaluate(e.child)
        labels = tuple(e.new if lab == e.old else lab for lab in sub.labels)
        return LabelledGraph(sub.graph, labels)
    raise MalformedExpressionError(f"unknown node {e!r}")


# -- text format --------------------------------------------------------------


def serialize_expression(e: KExpression) -> str:
    """Emit the text form with no whitespace: v(i), u(a,b), j(i,j,E), r(i>j,E)."""
    if isinstance(e, Create):
        return f"v({e.label})"
    if isinstance(e, UnionOp):
        return f"u({serialize_expression(e.left)},{serialize_expression(e.right)})"
    if isinstance(e, Join):
        return f"j({e.i},{e.j},{serialize_expression(e.child)})"
    if isinstance(e, Rename):
        return f"r({e.old}>{e.new},{serialize_expression(e.child)})"
    raise MalformedExpressionError(f"unknown node {e!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise ExpressionParseError(
                f"expected {ch!r} at position {self.pos} in {self.text!r}"
            )
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ExpressionParseError(
                f"expected integer at position {start} in {self.text!r}"
            )
        return int(self.text[start : self.pos])

    def expression(self) -> KExpression:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise ExpressionParseError("unexpected end of input")
        head = self.text[self.pos]
        self.pos += 1
        self.expect("(")
        if head == "v":
            label = self.integer()
            self.expect(")")
            if label < 1:
                raise ExpressionParseError("labels must be positive")
            return Create(label)
        if head == "u":
            left = self.expression()
            self.expect(",")
            right = self.expression()
            self.expect(")")
            return UnionOp(left, right)
        if head == "j":
            i = self.integer()
            self.expect(",")
            j = self.integer()
            self.expect(",")
            child = self.expression()
            self.expect(")")
            if i == j:
                raise ExpressionParseError("join requires distinct labels")
            return Join(i, j, child)
        if head == "r":
            old = self.integer()
            self.expect(">")
            new = self.integer()
            self.expect(",")
            child = self.expression()
            self.expect(")")
            return Rename(old, new, child)
        raise ExpressionParseError(f"unknown operator {head!r}")


def parse_expression(text: str) -> KExpression:
    """Parse the text grammar; whitespace-insensitive."""
    p = _Parser(text)
    e = p.expression()
    p.skip_ws()
    if p.pos != len(p.text):
        raise ExpressionParseError(
            f"trailing input at position {p.pos} in {text!r}"
        )
    return e


# -- exact solver --------------------------------------------------------------

_NOEDGE, _COMPLETE, _MIXED = 0, 1, 2


class _DP:
    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.adj = g._adj
        self.full = g.full_mask
        self.rel_cache: dict[tuple[int, int], int] = {}
        self.ext_cache: dict[tuple[int, int], Optional[int]] = {}
        # states[S][partition] = parent record
        self.states: dict[int, dict[tuple[int, ...], tuple]] = {}

    def rel(self, a: int, b: int) -> int:
        key = (a, b) if a < b else (b, a)
        got = self.rel_cache.get(key)
        if got is not None:
            return got
        seen_edge = False
        seen_gap = False
        for v in _bits(a):
            inter = self.adj[v] & b
            if inter:
                seen_edge = True
            if inter != b:
                seen_gap = True
            if seen_edge and seen_gap:
                break
        res = _MIXED if (seen_edge and seen_gap) else (_COMPLETE if seen_edge else _NOEDGE)
        self.rel_cache[(key[0], key[1])] = res
        return res

    def ext(self, cls: int, smask: int) -> Optional[int]:
        """Outside-neighbour mask when the class is externally uniform, else None."""
        key = (cls, smask)
        got = self.ext_cache.get(key, -1)
        if got != -1:
            return got
        outside = self.full & ~smask
        res: Optional[int] = 0
        rest = outside
        while rest:
            b = rest & -rest
            w = b.bit_length() - 1
            rest ^= b
            inter = self.adj[w] & cls
            if inter == cls:
                res |= b
            elif inter:
                res = None
                break
        self.ext_cache[key] = res
        return res

    def run(self) -> bool:
        g, k = self.g, self.k
        n = g.n
        adj = self.adj
        full = self.full
        # Subsets where vertices show more external-neighbourhood profiles
        # than there are labels can never carry a state.
        alive = [False] * (full + 1)
        for smask in range(1, full + 1):
            profiles = {adj[v] & ~smask for v in _bits(smask)}
            alive[smask] = len(profiles) <= k
        for v in range(n):
            s = 1 << v
            if alive[s]:
                self.states[s] = {(s,): ("leaf", v)}

        by_size: list[list[int]] = [[] for _ in range(n + 1)]
        for smask in range(1, full + 1):
            if alive[smask]:
                by_size[smask.bit_count()].append(smask)

        for size in range(2, n + 1):
            for smask in by_size[size]:
                found: dict[tuple[int, ...], tuple] = {}
                low = smask & -smask
                sub = (smask - 1) & smask
                while sub:
                    if sub & low:
                        s1, s2 = sub, smask ^ sub
                        p1map = self.states.get(s1)
                        p2map = self.states.get(s2)
                        if p1map and p2map:
                            for pi1 in p1map:
                                for pi2 in p2map:
                                    for rho, info in self._unions(
                                        pi1, pi2, s1, s2, smask
                                    ):
                                        if rho not in found:
                                            found[rho] = (
                                                "union", s1, pi1, s2, pi2, info,
                                            )
                    sub = (sub - 1) & smask
                if found:
                    self._merge_closure(smask, found)
                    self.states[smask] = found
        return bool(self.states.get(full))

    def _merge_closure(self, smask: int, found: dict) -> None:
        queue = list(found)
        while queue:
            pi = queue.pop()
            classes = list(pi)
            for i in range(len(classes)):
                for j in range(i + 1, len(classes)):
                    ei = self.ext(classes[i], smask)
                    ej = self.ext(classes[j], smask)
                    if ei is None or ei != ej:
                        continue
                    merged = tuple(
                        sorted(
                            [classes[x] for x in range(len(classes)) if x not in (i, j)]
                            + [classes[i] | classes[j]]
                        )
                    )
                    if merged not in found:
                        found[merged] = ("rename", pi, classes[i], classes[j])
                        queue.append(merged)

    def _unions(
        self, pi1: tuple, pi2: tuple, s1: int, s2: int, smask: int
    ) -> Iterator[tuple[tuple, tuple]]:
        k = self.k
        a, b = len(pi1), len(pi2)
        if a + b > 2 * k:
            return
        # candidate matched pairs with their kind
        share_ok: list[list[bool]] = [[False] * b for _ in range(a)]
        join_ok: list[list[bool]] = [[False] * b for _ in range(a)]
        any_pair = False
        for i, c in enumerate(pi1):
            ec = self.ext(c, smask)
            if ec is None:
                continue
            for j, d in enumerate(pi2):
                ed = self.ext(d, smask)
                if ed is None or ec != ed:
                    continue
                r = self.rel(c, d)
                if r == _NOEDGE:
                    share_ok[i][j] = True
                    any_pair = True
                elif r == _COMPLETE:
                    join_ok[i][j] = True
                    any_pair = True
        min_shares = a + b - k
        if min_shares > min(a, b):
            return
        if min_shares > 0 and not any_pair:
            return

        # also every unmatched class must stay externally uniform
        uniform1 = [self.ext(c, smask) is not None for c in pi1]
        uniform2 = [self.ext(d, smask) is not None for d in pi2]

        pairs: list[tuple[int, int, bool]] = []  # (i, j, shared)

        def emit() -> Optional[tuple[tuple, tuple]]:
            shares = sum(1 for _, _, sh in pairs if sh)
            if a + b - shares > k:
                return None
            matched1 = {i for i, _, _ in pairs}
            matched2 = {j for _, j, _ in pairs}
            for i in range(a):
                if i not in matched1 and not uniform1[i]:
                    return None
            for j in range(b):
                if j not in matched2 and not uniform2[j]:
                    return None
            # granularity right after the union: shared pairs are single
            # classes, everything else separate
            gran: list[tuple[int, int, int]] = []  # (part in S1, part in S2, union)
            shared1 = {i for i, _, sh in pairs if sh}
            shared2 = {j for _, j, sh in pairs if sh}
            for i, j, sh in pairs:
                if sh:
                    gran.append((pi1[i], pi2[j], pi1[i] | pi2[j]))
            for i in range(a):
                if i not in shared1:
                    gran.append((pi1[i], 0, pi1[i]))
            for j in range(b):
                if j not in shared2:
                    gran.append((0, pi2[j], pi2[j]))
            # forced joins: any pair of granularity classes with at least one
            # needed cross edge must be fully adjacent
            joins: list[tuple[int, int]] = []
            for x in range(len(gran)):
                ax1, ax2, axu = gran[x]
                for y in range(x + 1, len(gran)):
                    by1, by2, byu = gran[y]
                    pending = False
                    if ax1 and by2 and self.rel(ax1, by2) != _NOEDGE:
                        pending = True
                    if not pending and ax2 and by1 and self.rel(ax2, by1) != _NOEDGE:
                        pending = True
                    if pending:
                        if self.rel(axu, byu) != _COMPLETE:
                            return None
                        joins.append((axu, byu))
            # final partition: matched pairs merged
            final = []
            for i, j, _ in pairs:
                final.append(pi1[i] | pi2[j])
            for i in range(a):
                if i not in matched1:
                    final.append(pi1[i])
            for j in range(b):
                if j not in matched2:
                    final.append(pi2[j])
            rho = tuple(sorted(final))
            info = (tuple(pairs), tuple(joins))
            return rho, info

        def search(i: int) -> Iterator[tuple[tuple, tuple]]:
            if i == a:
                res = emit()
                if res is not None:
                    yield res
                return
            used2 = {j for _, j, _ in pairs}
            # leave class i unmatched
            yield from search(i + 1)
            for j in range(b):
                if j in used2:
                    continue
                if share_ok[i][j]:
                    pairs.append((i, j, True))
                    yield from search(i + 1)
                    pairs.pop()
                if join_ok[i][j]:
                    pairs.append((i, j, False))
                    yield from search(i + 1)
                    pairs.pop()

        yield from search(0)

    # -- witness reconstruction ---------------------------------------------

    def expression(self) -> KExpression:
        full = self.full
        target = min(self.states[full])
        return self._rebuild(full, target, self._assign_labels(target))

    def _assign_labels(self, pi: tuple) -> dict[int, int]:
        return {cls: idx + 1 for idx, cls in enumerate(pi)}

    def _rebuild(self, smask: int, pi: tuple, labels: dict[int, int]) -> KExpression:
        record = self.states[smask][pi]
        kind = record[0]
        if kind == "leaf":
            (_, v) = record
            return Create(labels[1 << v])
        if kind == "rename":
            _, child_pi, p, qcls = record
            merged = p | qcls
            child_labels = dict(labels)
            target = labels[merged]
            del child_labels[merged]
            child_labels[p] = target
            used = set(child_labels.values())
            free = next(x for x in range(1, self.k + 1) if x not in used)
            child_labels[qcls] = free
            child = self._rebuild(smask, child_pi, child_labels)
            return Rename(free, target, child)
        if kind == "union":
            _, s1, pi1, s2, pi2, (pairs, joins) = record
            matched1 = {i for i, _, _ in pairs}
            matched2 = {j for _, j, _ in pairs}
            lab1: dict[int, int] = {}
            lab2: dict[int, int] = {}
            renames: list[tuple[int, int]] = []
            used: set[int] = set()
            gran_label: dict[int, int] = {}
            for i, j, shared in pairs:
                final = labels[pi1[i] | pi2[j]]
                lab1[pi1[i]] = final
                used.add(final)
                if shared:
                    lab2[pi2[j]] = final
                    gran_label[pi1[i] | pi2[j]] = final
                else:
                    gran_label[pi1[i]] = final
            for i in range(len(pi1)):
                if i not in matched1:
                    final = labels[pi1[i]]
                    lab1[pi1[i]] = final
                    used.add(final)
                    gran_label[pi1[i]] = final
            for j in range(len(pi2)):
                if j not in matched2:
                    final = labels[pi2[j]]
                    lab2[pi2[j]] = final
                    used.add(final)
                    gran_label[pi2[j]] = final
            free_iter = (x for x in range(1, self.k + 1) if x not in used)
            for i, j, shared in pairs:
                if not shared:
                    temp = next(free_iter)
                    lab2[pi2[j]] = temp
                    gran_label[pi2[j]] = temp
                    renames.append((temp, labels[pi1[i] | pi2[j]]))
            left = self._rebuild(s1, pi1, lab1)
            right = self._rebuild(s2, pi2, lab2)
            expr: KExpression = UnionOp(left, right)
            for axu, byu in joins:
                li = gran_label.get(axu)
                lj = gran_label.get(byu)
                expr = Join(li, lj, expr)
            for old, new in renames:
                expr = Rename(old, new, expr)
            return expr
        raise AssertionError(f"unknown record {kind}")


def _trivial_expression(g: Graph) -> KExpression:
    """Distinct labels per vertex, then one join per edge; width n."""
    expr: KExpression = Create(1)
    for v in range(1, g.n):
        expr = UnionOp(expr, Create(v + 1))
    for u, v in g.edges:
        expr = Join(u + 1, v + 1, expr)
    return expr


def _edgeless_expression(n: int) -> KExpression:
    expr: KExpression = Create(1)
    for _ in range(n - 1):
        expr = UnionOp(expr, Create(1))
    return expr


def cw_at_most(g: Graph, k: int) -> Optional[KExpression]:
    """A width-<= k expression evaluating to a graph isomorphic to g, or None.

    The search is complete over the quotient state space described in the
    module docstring, so a None answer certifies cw(g) > k.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0:
        raise ValueError("expressions are non-empty; the empty graph has none")
    if g.n > SOLVER_LIMIT:
        raise GraphSizeError(f"solver supports n <= {SOLVER_LIMIT}")
    if g.m == 0:
        return _edgeless_expression(g.n)
    if k == 1:
        return None
    if k >= g.n:
        return _trivial_expression(g)
    dp = _DP(g, k)
    if not dp.run():
        return None
    return dp.expression()


_CW_CACHE: dict[bytes, int] = {}


def clique_width(g: Graph) -> int:
    """Least k such that a width-k expression builds g.

    Conventions: the empty graph has clique-width 0 and edgeless non-empty
    graphs have clique-width 1.
    """
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    if g.n > SOLVER_LIMIT:
        raise GraphSizeError(f"solver supports n <= {SOLVER_LIMIT}")
    code = canonical_code(g)
    got = _CW_CACHE.get(code)
    if got is not None:
        return got
    k = 2
    while cw_at_most(g, k) is None:
        k += 1
    _CW_CACHE[code] = k
    return k


# -- constructive bound for sparse-free split graphs --------------------------


def build_rp1_expression(g: Graph, p: SplitPartition, r: int) -> KExpression:
    """Width <= r+1 expression for a split graph whose independence number is
    below r, built directly from a split partition with |I| <= r-1.

    The independent side gets one private label per vertex.  Clique vertices
    arrive one at a time under a shared "new" label, are joined to the
    already-processed clique label and to the private labels of their
    neighbours on the independent side, and are then renamed to "processed".
    """
    check_partition(g, p)
    if g.n == 0:
        raise ValueError("expressions are non-empty; the empty graph has none")
    alpha = independence_number(g)
    if alpha >= r:
        raise ValueError(
            f"graph has an independent set of size {alpha} >= r = {r}"
        )
    iverts = sorted(p.I)
    kverts = sorted(p.K)
    if len(iverts) > r - 1:
        raise ValueError(f"|I| = {len(iverts)} exceeds r-1 = {r - 1}")
    ilabel = {v: idx + 1 for idx, v in enumerate(iverts)}
    new_label = len(iverts) + 1
    processed = len(iverts) + 2

    expr: Optional[KExpression] = None
    for v in iverts:
        leaf = Create(ilabel[v])
        expr = leaf if expr is None else UnionOp(expr, leaf)
    first_k = True
    for v in kverts:
        leaf = Create(new_label)
        expr = leaf if expr is None else UnionOp(expr, leaf)
        if not first_k:
            expr = Join(new_label, processed, expr)
        for u in sorted(p.I & set(g.neighbours(v))):
            expr = Join(new_label, ilabel[u], expr)
        expr = Rename(new_label, processed, expr)
        first_k = False
    assert expr is not None
    return expr


def expression_vertex_order(g: Graph, p: SplitPartition) -> list[int]:
    """Vertex order of the leaves emitted by build_rp1_expression."""
    return sorted(p.I) + sorted(p.K)
