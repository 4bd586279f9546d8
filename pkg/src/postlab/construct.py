"""Explicit circuit constructions, each verified against brute-force oracles.

Covers the checkpoint depth reduction of layered branching programs,
threshold circuits, the induced-subgraph extractor, graph-property padding,
dummy-input padding, and the monotone CSP-SAT circuits for the tractable
fragments (forward chaining and transitive closure by repeated squaring).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Sequence

from .boolfun import Relation, RelationSet
from .circuit import (
    BOUNDED2,
    UNBOUNDED,
    Builder,
    Circuit,
    monotone_violation,
    truth_tables,
)
from .config import Budgets, budgets
from .csp import CspInstance, _menu_kind, _or_fragment_side
from .errors import BudgetExceededError, FragmentMismatchError
from .graphlab import pair_index
from .reductions import CONST, PROJ, BitReduction

PARITY = "parity"
REACH = "reach"

CONST_GUARD = "const"
LIT_GUARD = "lit"


@dataclass(frozen=True)
class LayeredBP:
    """Layered branching program: nodes (t, i) with 0 <= i < widths[t], edges
    only between consecutive layers, guarded by a literal or a constant.

    edges[t] lists (u, v, guard) from layer t to t+1; guards are
    ("const", b) or ("lit", var, positive).  Every start-accept path has
    length len(widths) - 1.
    """

    n: int
    widths: tuple[int, ...]
    edges: tuple[tuple[tuple[int, int, tuple], ...], ...]
    start: int = 0
    accept: int = 0

    def __post_init__(self):
        if len(self.widths) < 2:
            raise ValueError("need at least two layers")
        if len(self.edges) != len(self.widths) - 1:
            raise ValueError("edge layer count mismatch")
        for t, layer in enumerate(self.edges):
            for u, v, guard in layer:
                if not (0 <= u < self.widths[t] and 0 <= v < self.widths[t + 1]):
                    raise ValueError(f"edge out of range in layer {t}")
                if guard[0] == CONST_GUARD:
                    if guard[1] not in (0, 1):
                        raise ValueError("bad constant guard")
                elif guard[0] == LIT_GUARD:
                    if not 0 <= guard[1] < self.n:
                        raise ValueError("guard variable out of range")
                else:
                    raise ValueError(f"unknown guard {guard[0]!r}")
        if not 0 <= self.start < self.widths[0]:
            raise ValueError("start out of range")
        if not 0 <= self.accept < self.widths[-1]:
            raise ValueError("accept out of range")

    @property
    def length(self) -> int:
        return len(self.widths) - 1

    def guard_value(self, guard: tuple, x: int) -> int:
        if guard[0] == CONST_GUARD:
            return guard[1]
        _, var, positive = guard
        bit = (x >> var) & 1
        return bit if positive else 1 - bit

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "widths": list(self.widths),
            "start": self.start,
            "accept": self.accept,
            "edges": [
                [[u, v, list(guard)] for u, v, guard in layer] for layer in self.edges
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LayeredBP":
        edges = tuple(
            tuple((u, v, tuple(guard)) for u, v, guard in layer)
            for layer in obj["edges"]
        )
        return cls(
            int(obj["n"]),
            tuple(obj["widths"]),
            edges,
            int(obj["start"]),
            int(obj["accept"]),
        )


def bp_paths_mod2(bp: LayeredBP, x: int) -> int:
    """Parity of accepting paths on input x (enumeration oracle)."""
    counts = [0] * bp.widths[0]
    counts[bp.start] = 1
    for t, layer in enumerate(bp.edges):
        nxt = [0] * bp.widths[t + 1]
        for u, v, guard in layer:
            if bp.guard_value(guard, x):
                nxt[v] += counts[u]
        counts = nxt
    return counts[bp.accept] & 1


def bp_reachable(bp: LayeredBP, x: int) -> int:
    reach = [False] * bp.widths[0]
    reach[bp.start] = True
    for t, layer in enumerate(bp.edges):
        nxt = [False] * bp.widths[t + 1]
        for u, v, guard in layer:
            if reach[u] and bp.guard_value(guard, x):
                nxt[v] = True
        reach = nxt
    return int(reach[bp.accept])


def checkpoint_circuit(bp: LayeredBP, d: int, mode: str = PARITY) -> Circuit:
    """Unbounded fan-in circuit of depth exactly 2*d for the guarded BP.

    Each of the d recursion levels splits its interval into about L**(1/r)
    balanced segments, sums (XOR in parity mode, OR in reach mode) over all
    checkpoint choices the AND of the segment subcircuits, and bottoms out by
    enumerating full paths.  Depth is exactly 2*d whenever some start-accept
    path exists structurally.
    """
    if mode not in (PARITY, REACH):
        raise ValueError(f"unknown mode {mode!r}")
    if d < 1:
        raise ValueError("d must be >= 1")
    b = Builder(bp.n, UNBOUNDED)
    combine = b.xor_ if mode == PARITY else b.or_

    def guard_gate(guard: tuple) -> int:
        if guard[0] == CONST_GUARD:
            return b.const(guard[1])
        _, var, positive = guard
        g = b.input(var)
        return g if positive else b.not_(g)

    adjacency: list[dict[int, list[tuple[int, tuple]]]] = []
    for layer in bp.edges:
        adj: dict[int, list[tuple[int, tuple]]] = {}
        for u, v, guard in layer:
            adj.setdefault(u, []).append((v, guard))
        adjacency.append(adj)

    def enumerate_paths(t0: int, t1: int, s: int, t: int) -> list[list[tuple]]:
        if t0 == t1:
            return [[]] if s == t else []
        out = []
        for v, guard in adjacency[t0].get(s, ()):
            for rest in enumerate_paths(t0 + 1, t1, v, t):
                out.append([guard] + rest)
        return out

    memo: dict[tuple[int, int, int, int, int], int] = {}

    def build(t0: int, t1: int, s: int, t: int, r: int) -> int:
        key = (t0, t1, s, t, r)
        got = memo.get(key)
        if got is not None:
            return got
        length = t1 - t0
        if r == 1:
            paths = enumerate_paths(t0, t1, s, t)
            gate = combine([b.and_([guard_gate(g) for g in p]) for p in paths])
        else:
            segments = max(1, math.ceil(length ** (1.0 / r)))
            segments = min(segments, max(length, 1))
            base, extra = divmod(length, segments)
            boundaries = [t0]
            for i in range(segments):
                boundaries.append(boundaries[-1] + base + (1 if i < extra else 0))
            inner = boundaries[1:-1]
            choices = itertools.product(*(range(bp.widths[t_]) for t_ in inner))
            terms = []
            for choice in choices:
                nodes = (s,) + choice + (t,)
                terms.append(
                    b.and_(
                        [
                            build(boundaries[i], boundaries[i + 1], nodes[i], nodes[i + 1], r - 1)
                            for i in range(segments)
                        ]
                    )
                )
            gate = combine(terms)
        memo[key] = gate
        return gate

    top = build(0, bp.length, bp.start, bp.accept, d)
    return b.build([top])


def random_layered_bp(
    rng: random.Random, n: int, max_length: int = 9, max_width: int = 3
) -> LayeredBP:
    """Random layered BP with at least one structural start-accept path."""
    length = rng.randrange(1, max_length + 1)
    widths = [rng.randrange(1, max_width + 1) for _ in range(length + 1)]
    start = rng.randrange(widths[0])
    accept = rng.randrange(widths[-1])
    spine = [start]
    for t in range(1, length):
        spine.append(rng.randrange(widths[t]))
    spine.append(accept)

    def rand_guard():
        roll = rng.random()
        if roll < 0.12:
            return (CONST_GUARD, 1)
        if roll < 0.18:
            return (CONST_GUARD, 0)
        return (LIT_GUARD, rng.randrange(n), rng.random() < 0.5)

    edges = []
    for t in range(length):
        layer = {(spine[t], spine[t + 1]): rand_guard()}
        for _ in range(rng.randrange(0, 2 * max_width)):
            u = rng.randrange(widths[t])
            v = rng.randrange(widths[t + 1])
            layer.setdefault((u, v), rand_guard())
        edges.append(tuple((u, v, g) for (u, v), g in sorted(layer.items())))
    return LayeredBP(n, tuple(widths), tuple(edges), start, accept)


# Threshold circuits.

LOGDEPTH = "logdepth"
FLAT = "flat"


def _merge_sorted(b: Builder, left: list[int], right: list[int]) -> list[int]:
    la, lb = len(left), len(right)
    out = []
    for t in range(1, la + lb + 1):
        terms = []
        for i in range(max(0, t - lb), min(la, t) + 1):
            j = t - i
            if i == 0:
                terms.append(right[j - 1])
            elif j == 0:
                terms.append(left[i - 1])
            else:
                terms.append(b.and_([left[i - 1], right[j - 1]]))
        out.append(b.or_(terms))
    return out


def _sorted_unary(b: Builder, bits: list[int]) -> list[int]:
    """bits sorted descending: entry t-1 computes (count >= t).  Pairwise
    merge tree of counting merges, AND/OR only."""
    if len(bits) <= 1:
        return list(bits)
    mid = len(bits) // 2
    return _merge_sorted(b, _sorted_unary(b, bits[:mid]), _sorted_unary(b, bits[mid:]))


def capped_counter(b: Builder, bits: Sequence[int], cap: int) -> list[int]:
    """Incremental unary counter: entry t-1 computes (count >= t), t <= cap."""
    counts: list[int] = []
    for x in bits:
        new = []
        for t in range(min(len(counts) + 1, cap)):
            carry = b.and_([counts[t - 1], x]) if t >= 1 else x
            if t < len(counts):
                new.append(b.or_([counts[t], carry]))
            else:
                new.append(carry)
        counts = new
    while len(counts) < cap:
        counts.append(b.const(0))
    return counts


def threshold_circuit(
    k: int, n: int, mode: str = LOGDEPTH, budget: Budgets | None = None
) -> Circuit:
    """Monotone circuit for THR_{k,n}(x) = 1 iff weight(x) >= k.

    LOGDEPTH: fan-in-two pairwise-merge counting network (depth about
    log^2 n at this scale).  FLAT: unbounded fan-in OR over all k-subsets.
    """
    if not 0 <= k <= n + 1:
        raise ValueError("k out of range")
    if mode == LOGDEPTH:
        b = Builder(n, BOUNDED2)
        if k == 0:
            return b.build([b.const(1)])
        if k == n + 1:
            return b.build([b.const(0)])
        sorted_bits = _sorted_unary(b, [b.input(i) for i in range(n)])
        return b.build([sorted_bits[k - 1]])
    if mode != FLAT:
        raise ValueError(f"unknown mode {mode!r}")
    bud = budgets(budget)
    b = Builder(n, UNBOUNDED)
    if k == 0:
        return b.build([b.const(1)])
    if k == n + 1:
        return b.build([b.const(0)])
    if math.comb(n, k) > bud.flat_threshold_terms:
        raise BudgetExceededError(f"C({n},{k}) terms exceed the flat threshold budget")
    ins = [b.input(i) for i in range(n)]
    terms = [b.and_([ins[i] for i in subset]) for subset in itertools.combinations(range(n), k)]
    return b.build([b.or_(terms)])


# Induced subgraph extraction.

NC1 = "nc1"
AC0 = "ac0"
AC0_XOR = "ac0_xor"


def induced_subgraph_circuit(n: int, k: int, profile: str = NC1) -> Circuit:
    """Inputs: C(n,2) adjacency bits then n selector bits; outputs the
    adjacency of the subgraph induced by the selected vertices in selection
    order, padded with isolated vertices below k.

    Output bit for pair (i, j) ORs, over vertex pairs a < b, the test that a
    is the i-th selected vertex, b the j-th, and the edge ab present.  When
    more than k vertices are selected the outputs describe the first k, which
    callers must guard against (the padding construction does).
    """
    if not 0 <= k <= n:
        raise ValueError("k out of range")
    ne = n * (n - 1) // 2
    b = Builder(ne + n, BOUNDED2 if profile == NC1 else UNBOUNDED)
    edge_in = [b.input(i) for i in range(ne)]
    alpha = [b.input(ne + a) for a in range(n)]
    # sel[i][a]: alpha_a is the (i+1)-th non-zero selector entry
    sel = [[None] * n for _ in range(k)]
    counts: list[int] = []
    for a in range(n):
        new = []
        for t in range(min(len(counts) + 1, k + 1)):
            carry = b.and_([counts[t - 1], alpha[a]]) if t >= 1 else alpha[a]
            if t < len(counts):
                new.append(b.or_([counts[t], carry]))
            else:
                new.append(carry)
        counts = new
        for i in range(k):
            if i < len(counts):
                exactly = counts[i]
                if i + 1 < len(counts):
                    exactly = b.and_([counts[i], b.not_(counts[i + 1])])
                sel[i][a] = b.and_([alpha[a], exactly])
            else:
                sel[i][a] = b.const(0)
    outputs = []
    for i in range(k):
        for j in range(i + 1, k):
            terms = []
            for a in range(n):
                for bb in range(a + 1, n):
                    terms.append(
                        b.and_([sel[i][a], sel[j][bb], edge_in[pair_index(a, bb, n)]])
                    )
            outputs.append(b.or_(terms))
    return b.build(outputs)


# Graph-property padding.

@dataclass(frozen=True)
class GraphPropertyCircuit:
    vertices: int
    circuit: Circuit
    name: str = ""

    def __post_init__(self):
        expect = self.vertices * (self.vertices - 1) // 2
        if self.circuit.n != expect:
            raise ValueError(f"circuit must take {expect} edge inputs")

    def value(self, edge_bits: int) -> int:
        from .circuit import evaluate

        return evaluate(self.circuit, edge_bits) & 1


def padded_graph_property(
    prop: GraphPropertyCircuit, big_n: int, profile: str = NC1
) -> tuple[GraphPropertyCircuit, BitReduction]:
    """Lift an n-vertex monotone graph property to big_n vertices.

    The lifted property accepts when the edge count exceeds C(n,2), or more
    than n vertices are non-isolated, or the original property holds on the
    subgraph induced by the non-isolated vertices (padded with isolated
    vertices).  Also returns the planted-copy embedding, a monotone
    projection with f(G) = g(embed(G)).
    """
    n = prop.vertices
    if big_n <= n:
        raise ValueError("padding needs big_n > n")
    small_edges = n * (n - 1) // 2
    viol = monotone_violation(small_edges, truth_tables(prop.circuit)[0]) if small_edges <= 16 else None
    if viol is not None:
        raise FragmentMismatchError("property is not monotone; padding needs monotone f")
    ne = big_n * (big_n - 1) // 2
    b = Builder(ne, BOUNDED2 if profile == NC1 else UNBOUNDED)
    edge_in = [b.input(i) for i in range(ne)]
    alpha = []
    for i in range(big_n):
        alpha.append(b.or_([edge_in[pair_index(i, j, big_n)] for j in range(big_n) if j != i]))
    edge_over = capped_counter(b, edge_in, small_edges + 1)[small_edges]
    weight_over = capped_counter(b, alpha, n + 1)[n]
    extractor = induced_subgraph_circuit(big_n, n, profile)
    induced = b.emit_circuit(extractor, edge_in + alpha)
    f_out = b.emit_circuit(prop.circuit, induced)[0]
    g = b.or_([edge_over, weight_over, f_out])
    circuit = b.build([g])
    bits: list[tuple] = [(CONST, 0)] * ne
    for i in range(n):
        for j in range(i + 1, n):
            bits[pair_index(i, j, big_n)] = (PROJ, pair_index(i, j, n))
    embedding = BitReduction(small_edges, ne, tuple(bits))
    name = f"{prop.name}_padded{big_n}" if prop.name else f"padded{big_n}"
    return GraphPropertyCircuit(big_n, circuit, name), embedding


def pad_dummy_inputs(c: Circuit, extra: int) -> Circuit:
    """Same circuit over extra ignored input variables; measures unchanged."""
    if extra < 0:
        raise ValueError("extra must be >= 0")
    return Circuit(c.n + extra, c.gates, c.outputs, c.fanin_mode)


# Monotone CSP-SAT circuits for the tractable fragments.

HORN = "horn"
ANTIHORN = "antihorn"
TWOSAT = "2sat"
OR_FRAGMENT = "or_fragment"


def _clause_shape(rel: Relation) -> tuple[tuple[int, ...], tuple[int, ...]] | str | None:
    """Literals of the single clause whose solutions are rel.

    Returns (positive coords, negative coords), or "skip" for the full
    relation, "direct" for the empty one, and None when the complement is
    not a subcube (not a clause).
    """
    if rel.is_full:
        return "skip"
    if rel.is_empty:
        return "direct"
    violating = [t for t in range(1 << rel.arity) if not rel.member(t)]
    and_mask = violating[0]
    or_mask = violating[0]
    for t in violating[1:]:
        and_mask &= t
        or_mask |= t
    free = or_mask & ~and_mask
    if len(violating) != 1 << bin(free).count("1"):
        return None
    pos = tuple(j for j in range(rel.arity) if not (or_mask >> j) & 1)
    neg = tuple(j for j in range(rel.arity) if (and_mask >> j) & 1)
    return pos, neg


def detect_fragment(sset: RelationSet) -> str:
    shapes = [_clause_shape(rel) for rel in sset]
    if all(s is not None for s in shapes):
        literal = [s for s in shapes if isinstance(s, tuple)]
        if all(len(pos) <= 1 for pos, _ in literal):
            return HORN
        if all(len(neg) <= 1 for _, neg in literal):
            return ANTIHORN
        if all(len(pos) + len(neg) <= 2 for pos, neg in literal):
            return TWOSAT
    try:
        _or_fragment_side(sset)
        return OR_FRAGMENT
    except FragmentMismatchError:
        pass
    raise FragmentMismatchError("relation set fits no supported monotone-circuit fragment")


def emit_monotone_csp_circuit(
    sset: RelationSet, n: int, fragment: str = "auto"
) -> Circuit:
    """Syntactically monotone circuit over the N instance bits computing CSP-SAT.

    Horn/anti-Horn unroll n rounds of forward-chain marking; the 2-SAT and
    OR-fragment emitters build the implication (or entailment) graph, whose
    edges are ORs of instance bits, and close it by repeated squaring.
    """
    if fragment == "auto":
        fragment = detect_fragment(sset)
    if fragment == HORN:
        return _emit_horn(sset, n)
    if fragment == ANTIHORN:
        from .boolfun import negate_relation

        negated = RelationSet(tuple(negate_relation(r) for r in sset), sset.name)
        if detect_fragment(negated) != HORN:
            raise FragmentMismatchError("relations are not anti-Horn clauses")
        return _emit_horn(negated, n)
    if fragment == TWOSAT:
        return _emit_twosat(sset, n)
    if fragment == OR_FRAGMENT:
        return _emit_or_fragment(sset, n)
    raise ValueError(f"unknown fragment {fragment!r}")


def _instantiated_clauses(sset: RelationSet, n: int):
    """Per instance bit: ("imp", head, body vars), ("neg", body vars),
    ("direct",) or None for tautological/vacuous applications."""
    inst = CspInstance(sset, n, 0)
    shapes = [_clause_shape(rel) for rel in sset]
    out = []
    for j in range(inst.size):
        r, variables = inst.decode(j)
        shape = shapes[r]
        if shape == "skip":
            out.append(None)
            continue
        if shape == "direct":
            out.append(("direct",))
            continue
        if shape is None:
            raise FragmentMismatchError(f"relation {r} is not a clause relation")
        pos_c, neg_c = shape
        pos = {variables[c] for c in pos_c}
        neg = {variables[c] for c in neg_c}
        if pos & neg:
            out.append(None)  # tautological instantiation
            continue
        out.append(("clause", tuple(sorted(pos)), tuple(sorted(neg))))
    return inst, out


def _emit_horn(sset: RelationSet, n: int) -> Circuit:
    inst, clauses = _instantiated_clauses(sset, n)
    b = Builder(inst.size, UNBOUNDED)
    bits = [b.input(j) for j in range(inst.size)]
    direct = []
    seeds: dict[int, list[int]] = {}
    implications: list[tuple[int, int, tuple[int, ...]]] = []  # (bit, head, body)
    violations: list[tuple[int, tuple[int, ...]]] = []
    for j, cl in enumerate(clauses):
        if cl is None:
            continue
        if cl[0] == "direct":
            direct.append(bits[j])
            continue
        _, pos, neg = cl
        if len(pos) > 1:
            raise FragmentMismatchError("clause has more than one positive literal")
        if len(pos) == 1 and not neg:
            seeds.setdefault(pos[0], []).append(bits[j])
        elif len(pos) == 1:
            implications.append((bits[j], pos[0], neg))
        else:
            violations.append((bits[j], neg))
    marks = [b.or_(seeds.get(v, [])) for v in range(n)]
    for _ in range(n):
        new = list(marks)
        for bit, head, body in implications:
            term = b.and_([bit] + [marks[v] for v in body])
            new[head] = b.or_([new[head], term])
        marks = new
    refuted = [b.and_([bit] + [marks[v] for v in body]) for bit, body in violations]
    return b.build([b.or_(direct + refuted)])


def _closure_by_squaring(b: Builder, base: list[list[int]], rounds: int) -> list[list[int]]:
    size = len(base)
    reach = [row[:] for row in base]
    for _ in range(rounds):
        nxt = [[None] * size for _ in range(size)]
        for u in range(size):
            for v in range(size):
                terms = [reach[u][v]]
                terms.extend(b.and_([reach[u][w], reach[w][v]]) for w in range(size))
                nxt[u][v] = b.or_(terms)
        reach = nxt
    return reach


def _emit_twosat(sset: RelationSet, n: int) -> Circuit:
    inst, clauses = _instantiated_clauses(sset, n)
    b = Builder(inst.size, UNBOUNDED)
    bits = [b.input(j) for j in range(inst.size)]
    direct = []
    # literal node for (v, value): 2v + (1 - value)
    edge_bits: dict[tuple[int, int], list[int]] = {}

    def lit(v: int, value: int) -> int:
        return 2 * v + (1 - value)

    def add_edge(u: int, w: int, bit: int) -> None:
        edge_bits.setdefault((u, w), []).append(bit)

    for j, cl in enumerate(clauses):
        if cl is None:
            continue
        if cl[0] == "direct":
            direct.append(bits[j])
            continue
        _, pos, neg = cl
        literals = [(v, 1) for v in pos] + [(v, 0) for v in neg]
        if len(literals) == 1:
            (v, val) = literals[0]
            add_edge(lit(v, 1 - val), lit(v, val), bits[j])
        elif len(literals) == 2:
            (v1, a1), (v2, a2) = literals
            add_edge(lit(v1, 1 - a1), lit(v2, a2), bits[j])
            add_edge(lit(v2, 1 - a2), lit(v1, a1), bits[j])
        else:
            raise FragmentMismatchError("clause wider than 2 in the 2-SAT emitter")
    size = 2 * n
    base = [
        [
            b.const(1) if u == v else b.or_(edge_bits.get((u, v), []))
            for v in range(size)
        ]
        for u in range(size)
    ]
    rounds = max(1, (size - 1).bit_length())
    reach = _closure_by_squaring(b, base, rounds)
    contradictions = [
        b.and_([reach[2 * v][2 * v + 1], reach[2 * v + 1][2 * v]]) for v in range(n)
    ]
    return b.build([b.or_(direct + contradictions)])


def _emit_or_fragment(sset: RelationSet, n: int) -> Circuit:
    side = _or_fragment_side(sset)
    inst = CspInstance(sset, n, 0)
    b = Builder(inst.size, UNBOUNDED)
    bits = [b.input(j) for j in range(inst.size)]
    kinds = [_menu_kind(rel) for rel in sset]
    edge_bits: dict[tuple[int, int], list[int]] = {}
    unit_bits: dict[int, list[int]] = {}
    disjunctions: list[tuple[int, tuple[int, ...]]] = []
    unit_kind = "nand" if side == "or" else "or"
    for j in range(inst.size):
        r, variables = inst.decode(j)
        kind = kinds[r]
        if kind == "imp":
            a, c = variables
            if a != c:
                edge_bits.setdefault((a, c), []).append(bits[j])
        elif kind == "imp_rev":
            c, a = variables
            if a != c:
                edge_bits.setdefault((a, c), []).append(bits[j])
        elif kind == "eq":
            a, c = variables
            if a != c:
                edge_bits.setdefault((a, c), []).append(bits[j])
                edge_bits.setdefault((c, a), []).append(bits[j])
        elif kind == unit_kind and sset[r].arity == 1:
            unit_bits.setdefault(variables[0], []).append(bits[j])
        else:
            disjunctions.append((bits[j], tuple(sorted(set(variables)))))
    base = [
        [b.const(1) if u == v else b.or_(edge_bits.get((u, v), [])) for v in range(n)]
        for u in range(n)
    ]
    rounds = max(1, (n - 1).bit_length())
    reach = _closure_by_squaring(b, base, rounds)
    units = [b.or_(unit_bits.get(v, [])) for v in range(n)]
    if side == "or":
        bad = [b.or_([b.and_([reach[v][w], units[w]]) for w in range(n)]) for v in range(n)]
    else:
        bad = [b.or_([b.and_([reach[u][v], units[u]]) for u in range(n)]) for v in range(n)]
    failures = [
        b.and_([bit] + [bad[v] for v in vars_]) for bit, vars_ in disjunctions
    ]
    return b.build([b.or_(failures)])
