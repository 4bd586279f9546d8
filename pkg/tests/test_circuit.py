"""Circuit DAG semantics, measures, DNF/Quine, decision trees, dualization."""

import random

import pytest

from postlab.circuit import (
    BOUNDED2,
    EXACT,
    GREEDY,
    Builder,
    Circuit,
    Dnf,
    build_decision_tree,
    count_minterms,
    dt_to_monotone_dnf,
    dualize,
    evaluate,
    evaluate_ref,
    input_pattern,
    is_syntactically_monotone,
    measures,
    minterm_dnf,
    monotone_table_to_circuit,
    quine_strip,
    truth_tables,
)
from postlab.errors import MonotonePreconditionError

MAJ_TABLE = 0b11101000
XOR2_TABLE = 0b0110


def random_circuit(rng, n):
    b = Builder(n)
    pool = [b.input(i) for i in range(n)] + [b.const(rng.randrange(2))]
    for _ in range(rng.randrange(3, 30)):
        kind = rng.choice(["and", "or", "xor", "not"])
        if kind == "not":
            pool.append(b.not_(rng.choice(pool)))
        else:
            ops = [rng.choice(pool) for _ in range(rng.randrange(1, 4))]
            pool.append(getattr(b, kind + "_")(ops))
    return b.build([rng.choice(pool) for _ in range(rng.randrange(1, 3))])


def test_simple_gates():
    b = Builder(2)
    c = b.build([b.or_([b.input(0), b.input(1)])])
    assert evaluate(c, 0b11) == 1 and evaluate(c, 0) == 0
    b = Builder(3)
    c = b.build([b.xor_([b.input(0), b.input(1), b.input(2)])])
    assert evaluate(c, 0b101) == 0


def test_two_evaluators_agree():
    rng = random.Random(3)
    for _ in range(1000):
        n = rng.randrange(1, 10)
        c = random_circuit(rng, n)
        tts = truth_tables(c)
        for _ in range(10):
            x = rng.getrandbits(n)
            a = evaluate(c, x)
            r = evaluate_ref(c, x)
            t = 0
            for i, tt in enumerate(tts):
                t |= ((tt >> x) & 1) << i
            assert a == r == t


def test_input_pattern():
    for n in range(1, 6):
        for i in range(n):
            p = input_pattern(i, n)
            for x in range(1 << n):
                assert ((p >> x) & 1) == (x >> i) & 1


def test_measures_balanced_tree():
    b = Builder(8, BOUNDED2)
    c = b.build([b.and_([b.input(i) for i in range(8)])])
    m = measures(c)
    assert m.size == 7 and m.depth == 3 and m.monotone


def test_not_makes_non_monotone():
    b = Builder(1)
    c = b.build([b.not_(b.input(0))])
    assert not measures(c).monotone
    assert not is_syntactically_monotone(c)


def test_circuit_validation():
    with pytest.raises(ValueError):
        Circuit(1, (("and", (0,)),), (0,))  # operand not before gate
    with pytest.raises(ValueError):
        Circuit(1, (("input", (0,)), ("and", (0, 0, 0))), (1,), BOUNDED2)


def test_circuit_json_roundtrip():
    rng = random.Random(5)
    for _ in range(20):
        c = random_circuit(rng, 4)
        assert Circuit.from_json(c.to_json()) == c


def test_quine_strip_example():
    d = Dnf.make(2, [(0b01, 0b10), (0b11, 0)])
    s = quine_strip(d)
    assert not s.has_negative_literals()
    assert s.truth_table() == d.truth_table() == 0b1010
    assert len(s.terms) <= len(d.terms)


def test_quine_strip_already_monotone_unchanged():
    d = minterm_dnf(3, MAJ_TABLE)
    assert quine_strip(d) == d


def test_quine_strip_rejects_parity_with_witness():
    d = Dnf.make(2, [(0b01, 0b10), (0b10, 0b01)])
    with pytest.raises(MonotonePreconditionError) as err:
        quine_strip(d)
    lo, hi = err.value.lo, err.value.hi
    assert lo | hi == hi and d.evaluate(lo) and not d.evaluate(hi)


def test_dnf_text_roundtrip():
    d = Dnf.make(3, [(0b011, 0b100), (0, 0)])
    assert Dnf.from_text(3, d.to_text()) == d


def test_decision_tree_single_variable():
    t = build_decision_tree(1, 0b10)
    assert t.leaf_count() == 2 and t.evaluate(1) == 1 and t.evaluate(0) == 0


def test_decision_tree_modes_compute_f():
    rng = random.Random(11)
    for _ in range(80):
        n = rng.randrange(1, 5)
        table = rng.getrandbits(1 << n)
        greedy = build_decision_tree(n, table, GREEDY)
        exact = build_decision_tree(n, table, EXACT)
        for x in range(1 << n):
            want = (table >> x) & 1
            assert greedy.evaluate(x) == want
            assert exact.evaluate(x) == want
        assert exact.leaf_count() <= greedy.leaf_count()


def test_exact_mode_bound():
    with pytest.raises(ValueError):
        build_decision_tree(5, 0, EXACT)


def test_dt_to_monotone_dnf_pipeline():
    tree = build_decision_tree(3, MAJ_TABLE)
    dnf = dt_to_monotone_dnf(tree, 3, MAJ_TABLE)
    assert dnf.truth_table() == MAJ_TABLE
    assert not dnf.has_negative_literals()
    assert set(dnf.terms) == {(0b011, 0), (0b101, 0), (0b110, 0)}


def test_dt_to_monotone_dnf_rejects_parity():
    tree = build_decision_tree(2, XOR2_TABLE)
    with pytest.raises(MonotonePreconditionError):
        dt_to_monotone_dnf(tree, 2, XOR2_TABLE)


def test_count_minterms():
    assert count_minterms(3, MAJ_TABLE) == 3
    assert count_minterms(4, 1 << 15) == 1  # AND of four variables
    assert count_minterms(3, 0) == 0
    assert count_minterms(2, 0b1111) == 1  # constant one: the empty input


def test_monotone_table_to_circuit():
    c = monotone_table_to_circuit(3, MAJ_TABLE)
    assert is_syntactically_monotone(c)
    assert truth_tables(c)[0] == MAJ_TABLE
    z = monotone_table_to_circuit(2, 0)
    assert truth_tables(z)[0] == 0


def test_dualize_or_is_and():
    b = Builder(2)
    c = b.build([b.or_([b.input(0), b.input(1)])])
    assert truth_tables(dualize(c))[0] == 0b1000


def test_dualize_involution_and_semantics():
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randrange(1, 8)
        b = Builder(n)
        pool = [b.input(i) for i in range(n)] + [b.const(rng.randrange(2))]
        for _ in range(rng.randrange(2, 20)):
            kind = rng.choice(["and", "or", "not"])
            if kind == "not":
                pool.append(b.not_(rng.choice(pool)))
            else:
                ops = [rng.choice(pool) for _ in range(rng.randrange(1, 4))]
                pool.append(getattr(b, kind + "_")(ops))
        c = b.build([pool[-1]])
        d = dualize(c)
        full = (1 << n) - 1
        for _ in range(12):
            x = rng.getrandbits(n)
            assert evaluate(d, x) == 1 - evaluate(c, x ^ full)
        dd = dualize(d)
        assert truth_tables(dd) == truth_tables(c)
        assert measures(d).size == measures(c).size
        assert measures(d).depth == measures(c).depth


def test_dualize_rejects_xor():
    b = Builder(2)
    c = b.build([b.xor_([b.input(0), b.input(1)])])
    with pytest.raises(ValueError):
        dualize(c)
