"""Gate-level circuit DAGs with measures, DNFs, decision trees, dualization.

Gates are topologically ordered by construction: operands always point at
earlier gates.  A circuit is syntactically monotone when it contains no NOT
and no XOR gate.  Depth counts AND/OR/XOR gates along input-to-output paths;
NOT gates are treated as free literal inverters, matching the convention
where circuit inputs are literals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MonotonePreconditionError

INPUT = "input"
CONST0 = "const0"
CONST1 = "const1"
AND = "and"
OR = "or"
NOT = "not"
XOR = "xor"

_LOGIC = (AND, OR, NOT, XOR)
BOUNDED2 = "bounded2"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[tuple[str, tuple[int, ...]], ...]
    outputs: tuple[int, ...]
    fanin_mode: str = UNBOUNDED

    def __post_init__(self):
        for idx, (kind, args) in enumerate(self.gates):
            if kind == INPUT:
                if len(args) != 1 or not 0 <= args[0] < self.n:
                    raise ValueError(f"gate {idx}: bad input reference")
            elif kind in (CONST0, CONST1):
                if args:
                    raise ValueError(f"gate {idx}: constants take no operands")
            elif kind == NOT:
                if len(args) != 1:
                    raise ValueError(f"gate {idx}: NOT takes one operand")
            elif kind in (AND, OR, XOR):
                if not args:
                    raise ValueError(f"gate {idx}: empty operand list")
                if self.fanin_mode == BOUNDED2 and len(args) > 2:
                    raise ValueError(f"gate {idx}: fan-in above 2 in bounded mode")
            else:
                raise ValueError(f"gate {idx}: unknown kind {kind!r}")
            if kind in _LOGIC and any(not 0 <= a < idx for a in args):
                raise ValueError(f"gate {idx}: operand fails topological order")
        for o in self.outputs:
            if not 0 <= o < len(self.gates):
                raise ValueError("output index out of range")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "fanin_mode": self.fanin_mode,
            "gates": [[kind, list(args)] for kind, args in self.gates],
            "outputs": list(self.outputs),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Circuit":
        gates = tuple((kind, tuple(args)) for kind, args in obj["gates"])
        return cls(int(obj["n"]), gates, tuple(obj["outputs"]), obj["fanin_mode"])


@dataclass(frozen=True)
class Measures:
    size: int
    depth: int
    monotone: bool


def measures(c: Circuit) -> Measures:
    depth = [0] * len(c.gates)
    size = 0
    monotone = True
    for idx, (kind, args) in enumerate(c.gates):
        if kind in _LOGIC:
            size += 1
            base = max((depth[a] for a in args), default=0)
            depth[idx] = base if kind == NOT else base + 1
            if kind in (NOT, XOR):
                monotone = False
    out_depth = max((depth[o] for o in c.outputs), default=0)
    return Measures(size, out_depth, monotone)


def is_syntactically_monotone(c: Circuit) -> bool:
    return all(kind not in (NOT, XOR) for kind, _ in c.gates)


def evaluate(c: Circuit, x: int) -> int:
    """Gate-by-gate evaluation; output bit i of the result is outputs[i]."""
    vals = [0] * len(c.gates)
    for idx, (kind, args) in enumerate(c.gates):
        if kind == INPUT:
            vals[idx] = (x >> args[0]) & 1
        elif kind == CONST0:
            vals[idx] = 0
        elif kind == CONST1:
            vals[idx] = 1
        elif kind == NOT:
            vals[idx] = 1 - vals[args[0]]
        elif kind == AND:
            vals[idx] = int(all(vals[a] for a in args))
        elif kind == OR:
            vals[idx] = int(any(vals[a] for a in args))
        else:
            acc = 0
            for a in args:
                acc ^= vals[a]
            vals[idx] = acc
    out = 0
    for i, o in enumerate(c.outputs):
        out |= vals[o] << i
    return out


def evaluate_ref(c: Circuit, x: int) -> int:
    """Independent reference evaluator: memoized recursion from the outputs."""
    memo: dict[int, int] = {}

    def rec(idx: int) -> int:
        if idx in memo:
            return memo[idx]
        kind, args = c.gates[idx]
        if kind == INPUT:
            val = (x >> args[0]) & 1
        elif kind == CONST0:
            val = 0
        elif kind == CONST1:
            val = 1
        elif kind == NOT:
            val = 1 - rec(args[0])
        elif kind == AND:
            val = 1
            for a in args:
                if rec(a) == 0:
                    val = 0
                    break
        elif kind == OR:
            val = 0
            for a in args:
                if rec(a) == 1:
                    val = 1
                    break
        else:
            val = 0
            for a in args:
                val ^= rec(a)
        memo[idx] = val
        return val

    out = 0
    for i, o in enumerate(c.outputs):
        out |= rec(o) << i
    return out


def input_pattern(i: int, n: int) -> int:
    """Truth table (over 2**n inputs) of the i-th input variable."""
    block = 1 << i
    pattern = 0
    for x in range(block, 1 << n, 2 * block):
        pattern |= ((1 << block) - 1) << x
    return pattern


def truth_tables(c: Circuit) -> list[int]:
    """Truth tables of all outputs at once, bit-parallel across assignments."""
    full = (1 << (1 << c.n)) - 1
    vals: list[int] = [0] * len(c.gates)
    for idx, (kind, args) in enumerate(c.gates):
        if kind == INPUT:
            vals[idx] = input_pattern(args[0], c.n)
        elif kind == CONST0:
            vals[idx] = 0
        elif kind == CONST1:
            vals[idx] = full
        elif kind == NOT:
            vals[idx] = vals[args[0]] ^ full
        elif kind == AND:
            acc = full
            for a in args:
                acc &= vals[a]
            vals[idx] = acc
        elif kind == OR:
            acc = 0
            for a in args:
                acc |= vals[a]
            vals[idx] = acc
        else:
            acc = 0
            for a in args:
                acc ^= vals[a]
            vals[idx] = acc
    return [vals[o] for o in c.outputs]


class Builder:
    """Incremental circuit builder with structural deduplication.

    In bounded2 mode the convenience combinators split wide gates into
    balanced fan-in-two trees.
    """

    def __init__(self, n: int, fanin_mode: str = UNBOUNDED):
        self.n = n
        self.fanin_mode = fanin_mode
        self.gates: list[tuple[str, tuple[int, ...]]] = []
        self._memo: dict[tuple[str, tuple[int, ...]], int] = {}

    def _emit(self, kind: str, args: tuple[int, ...]) -> int:
        key = (kind, args)
        got = self._memo.get(key)
        if got is not None:
            return got
        self.gates.append(key)
        idx = len(self.gates) - 1
        self._memo[key] = idx
        return idx

    def input(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise ValueError("input index out of range")
        return self._emit(INPUT, (i,))

    def const(self, b: int) -> int:
        return self._emit(CONST1 if b else CONST0, ())

    def not_(self, a: int) -> int:
        return self._emit(NOT, (a,))

    def _assoc(self, kind: str, args: Sequence[int], empty: int) -> int:
        args = list(args)
        if not args:
            return self.const(empty)
        if self.fanin_mode == BOUNDED2:
            while len(args) > 1:
                nxt = []
                for i in range(0, len(args) - 1, 2):
                    nxt.append(self._emit(kind, (args[i], args[i + 1])))
                if len(args) % 2:
                    nxt.append(args[-1])
                args = nxt
            return args[0]
        return self._emit(kind, tuple(args))

    def and_(self, args: Sequence[int]) -> int:
        return self._assoc(AND, args, 1)

    def or_(self, args: Sequence[int]) -> int:
        return self._assoc(OR, args, 0)

    def xor_(self, args: Sequence[int]) -> int:
        return self._assoc(XOR, args, 0)

    def emit_circuit(self, sub: Circuit, input_gates: Sequence[int]) -> list[int]:
        """Inline another circuit, wiring its inputs to existing gates.

        Wide gates are re-split when this builder is fan-in bounded.
        """
        if len(input_gates) != sub.n:
            raise ValueError("input mapping length mismatch")
        combinators = {AND: self.and_, OR: self.or_, XOR: self.xor_}
        mapping: list[int] = []
        for kind, args in sub.gates:
            if kind == INPUT:
                mapping.append(input_gates[args[0]])
            elif kind in (CONST0, CONST1):
                mapping.append(self._emit(kind, ()))
            elif kind == NOT:
                mapping.append(self.not_(mapping[args[0]]))
            else:
                mapping.append(combinators[kind]([mapping[a] for a in args]))
        return [mapping[o] for o in sub.outputs]

    def build(self, outputs: Sequence[int]) -> Circuit:
        return Circuit(self.n, tuple(self.gates), tuple(outputs), self.fanin_mode)


def dualize(c: Circuit) -> Circuit:
    """Swap AND with OR and the two constants; computes x -> not c(not x).

    Valid for any NOT-circuit (a NOT gate commutes with the swap); XOR gates
    are rejected because the dual of parity is its complement, not a parity.
    Size and depth are preserved exactly.
    """
    swapped = []
    for kind, args in c.gates:
        if kind == AND:
            kind = OR
        elif kind == OR:
            kind = AND
        elif kind == CONST0:
            kind = CONST1
        elif kind == CONST1:
            kind = CONST0
        elif kind == XOR:
            raise ValueError("dualize does not accept XOR gates")
        swapped.append((kind, args))
    return Circuit(c.n, tuple(swapped), c.outputs, c.fanin_mode)


# DNFs.

@dataclass(frozen=True)
class Dnf:
    """Terms as (positive literal mask, negative literal mask) pairs.

    Size is the number of terms.  Canonical order is (total weight, masks).
    A term with both masks empty is the constant-true term.
    """

    nvars: int
    terms: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, nvars: int, terms: Iterable[tuple[int, int]]) -> "Dnf":
        uniq = set()
        for pos, neg in terms:
            if pos & neg:
                continue  # contradictory term accepts nothing
            uniq.add((pos, neg))
        ordered = sorted(
            uniq, key=lambda t: (bin(t[0]).count("1") + bin(t[1]).count("1"), t[0], t[1])
        )
        return cls(nvars, tuple(ordered))

    def evaluate(self, x: int) -> bool:
        return any((x & pos) == pos and (x & neg) == 0 for pos, neg in self.terms)

    def truth_table(self) -> int:
        table = 0
        for x in range(1 << self.nvars):
            if self.evaluate(x):
                table |= 1 << x
        return table

    def has_negative_literals(self) -> bool:
        return any(neg for _, neg in self.terms)

    def to_text(self) -> str:
        lines = []
        for pos, neg in self.terms:
            lits = [f"x{i}" for i in range(self.nvars) if (pos >> i) & 1]
            lits += [f"~x{i}" for i in range(self.nvars) if (neg >> i) & 1]
            lines.append(" ".join(lits) if lits else "TRUE")
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, nvars: int, text: str) -> "Dnf":
        terms = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            pos = neg = 0
            if line != "TRUE":
                for tok in line.split():
                    if tok.startswith("~x"):
                        neg |= 1 << int(tok[2:])
                    elif tok.startswith("x"):
                        pos |= 1 << int(tok[1:])
                    else:
                        raise ValueError(f"bad literal {tok!r}")
            terms.append((pos, neg))
        return cls.make(nvars, terms)

    def to_circuit(self) -> Circuit:
        b = Builder(self.nvars)
        ins = [b.input(i) for i in range(self.nvars)]
        term_gates = []
        for pos, neg in self.terms:
            lits = [ins[i] for i in range(self.nvars) if (pos >> i) & 1]
            lits += [b.not_(ins[i]) for i in range(self.nvars) if (neg >> i) & 1]
            term_gates.append(b.and_(lits))
        return b.build([b.or_(term_gates)])


def monotone_violation(nvars: int, table: int) -> tuple[int, int] | None:
    """A pair x <= y with f(x)=1 and f(y)=0, or None when f is monotone."""
    for x in range(1 << nvars):
        if not (table >> x) & 1:
            continue
        for j in range(nvars):
            y = x | (1 << j)
            if y != x and not (table >> y) & 1:
                return (x, y)
    return None


def quine_strip(d: Dnf) -> Dnf:
    """Drop every negative literal; sound exactly for monotone functions.

    Raises MonotonePreconditionError with a violating input pair otherwise.
    """
    table = d.truth_table()
    bad = monotone_violation(d.nvars, table)
    if bad is not None:
        raise MonotonePreconditionError(
            f"DNF computes a non-monotone function: f({bad[0]:b}) > f({bad[1]:b})",
            bad[0],
            bad[1],
        )
    stripped = Dnf.make(d.nvars, ((pos, 0) for pos, _ in d.terms))
    assert stripped.truth_table() == table
    return stripped


def minterm_dnf(nvars: int, table: int) -> Dnf:
    """Canonical DNF of a monotone function: one positive term per minterm."""
    bad = monotone_violation(nvars, table)
    if bad is not None:
        raise MonotonePreconditionError(
            f"not monotone: f({bad[0]:b}) > f({bad[1]:b})", bad[0], bad[1]
        )
    terms = []
    for x in range(1 << nvars):
        if not (table >> x) & 1:
            continue
        m = x
        minimal = True
        while m:
            low = m & -m
            if (table >> (x ^ low)) & 1:
                minimal = False
                break
            m ^= low
        if minimal:
            terms.append((x, 0))
    return Dnf.make(nvars, terms)


def monotone_table_to_circuit(nvars: int, table: int) -> Circuit:
    """Monotone circuit (minterm DNF form) for a monotone truth table."""
    if table == 0:
        b = Builder(nvars)
        return b.build([b.const(0)])
    return minterm_dnf(nvars, table).to_circuit()


def count_minterms(nvars: int, table: int) -> int:
    """Number of minimal 1-inputs under the bitwise order."""
    count = 0
    for x in range(1 << nvars):
        if not (table >> x) & 1:
            continue
        minimal = True
        m = x
        while m:
            low = m & -m
            if (table >> (x ^ low)) & 1:
                minimal = False
                break
            m ^= low
        count += minimal
    return count


# Decision trees.

@dataclass(frozen=True)
class DecisionTree:
    """Nodes: ("leaf", value) or ("node", var, low_index, high_index),
    stored in a flat tuple with the root last."""

    nvars: int
    nodes: tuple[tuple, ...]

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    def evaluate(self, x: int) -> int:
        idx = self.root
        while True:
            node = self.nodes[idx]
            if node[0] == "leaf":
                return node[1]
            _, var, lo, hi = node
            idx = hi if (x >> var) & 1 else lo

    def leaf_count(self) -> int:
        return sum(1 for n in self.nodes if n[0] == "leaf")

    def paths_to_one(self) -> list[tuple[int, int]]:
        """(positive mask, negative mask) of variables tested on each 1-path."""

        out: list[tuple[int, int]] = []

        def walk(idx: int, pos: int, neg: int) -> None:
            node = self.nodes[idx]
            if node[0] == "leaf":
                if node[1]:
                    out.append((pos, neg))
                return
            _, var, lo, hi = node
            walk(lo, pos, neg | (1 << var))
            walk(hi, pos | (1 << var), neg)

        walk(self.root, 0, 0)
        return out


def _subtable(nvars: int, table: int, var: int, bit: int) -> tuple[int, int]:
    """Cofactor: fix var to bit, reindex over nvars-1 variables."""
    sub = 0
    pos = 0
    for x in range(1 << nvars):
        if (x >> var) & 1 == bit:
            if (table >> x) & 1:
                sub |= 1 << pos
            pos += 1
    return nvars - 1, sub


GREEDY = "greedy"
EXACT = "exact"


def build_decision_tree(nvars: int, table: int, mode: str = GREEDY) -> DecisionTree:
    """GREEDY splits on the smallest remaining variable index, pruning
    constant subfunctions and splits whose cofactors agree; EXACT additionally
    minimizes leaves over all variable orders (n <= 4)."""
    if mode == GREEDY:
        nodes = _build_for_order(nvars, table, tuple(range(nvars)))
        return DecisionTree(nvars, nodes)
    if mode != EXACT:
        raise ValueError(f"unknown mode {mode!r}")
    if nvars > 4:
        raise ValueError("exact mode limited to 4 variables")
    best = None
    for order in itertools.permutations(range(nvars)):
        nodes = _build_for_order(nvars, table, order)
        leaves = sum(1 for n in nodes if n[0] == "leaf")
        if best is None or leaves < best[0]:
            best = (leaves, nodes)
    return DecisionTree(nvars, best[1])


def _build_for_order(nvars: int, table: int, order: tuple[int, ...]) -> tuple[tuple, ...]:
    nodes: list[tuple] = []

    def emit(node: tuple) -> int:
        nodes.append(node)
        return len(nodes) - 1

    def rec(k: int, tbl: int, varmap: tuple[int, ...], split_order: tuple[int, ...]) -> int:
        # varmap[pos] = original index of the pos-th variable of tbl
        full = (1 << (1 << k)) - 1
        if tbl == 0:
            return emit(("leaf", 0))
        if tbl == full:
            return emit(("leaf", 1))
        var = split_order[0]
        pos = varmap.index(var)
        _, lo_t = _subtable(k, tbl, pos, 0)
        _, hi_t = _subtable(k, tbl, pos, 1)
        new_map = varmap[:pos] + varmap[pos + 1 :]
        if lo_t == hi_t:
            return rec(k - 1, lo_t, new_map, split_order[1:])
        lo = rec(k - 1, lo_t, new_map, split_order[1:])
        hi = rec(k - 1, hi_t, new_map, split_order[1:])
        return emit(("node", var, lo, hi))

    rec(nvars, table, tuple(range(nvars)), order)
    return tuple(nodes)


def dt_to_monotone_dnf(tree: DecisionTree, nvars: int, table: int) -> Dnf:
    """Terms from the 1-leaves, then Quine stripping; requires monotone f."""
    raw = Dnf.make(nvars, tree.paths_to_one())
    if raw.truth_table() != table:
        raise ValueError("decision tree does not compute the given function")
    return quine_strip(raw)
