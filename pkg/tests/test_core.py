import pytest
from hypothesis import given, strategies as st

from lrskit import (
    EmptyInstance,
    IndexOutOfRange,
    NonIncreasingIndices,
    ParseError,
    RepeatedRunSymbol,
    build_occ_index,
    format_solution,
    instance_from_tokens,
    instance_to_text,
    parse_instance,
    run_decompose,
    validate_solution,
)

from oracles import count_in_window, is_run_subsequence, split_runs

WORKED = "a b a c a a b b a b"
SCAFFOLD = "y1 y1 y2 y1 y4 y2 y4 y3 y3"


def test_parse_worked_string():
    inst = parse_instance(WORKED)
    assert inst.n == 10
    assert inst.alphabet_size == 3
    assert inst.token_table == ("a", "b", "c")
    assert inst.symbols == (0, 1, 0, 2, 0, 0, 1, 1, 0, 1)


def test_parse_scaffold_string():
    inst = parse_instance(SCAFFOLD)
    assert inst.n == 9
    assert inst.alphabet_size == 4


def test_parse_single_symbol():
    inst = parse_instance("x")
    assert inst.n == 1
    assert inst.alphabet_size == 1


def test_parse_comments_and_blank_lines():
    inst = parse_instance("// header\n\na b\n// trailing\nb a\n")
    assert inst.tokens() == ["a", "b", "b", "a"]


def test_parse_empty_is_error():
    with pytest.raises(EmptyInstance):
        parse_instance("")
    with pytest.raises(EmptyInstance):
        parse_instance("// only a comment\n")


def test_parse_error_reports_line_number():
    with pytest.raises(ParseError) as exc:
        parse_instance("a b\nc d // not at line start\n")
    assert exc.value.line_no == 2


def test_instance_from_tokens_rejects_empty():
    with pytest.raises(EmptyInstance):
        instance_from_tokens([])


token = st.text(alphabet="abcxyz123", min_size=1, max_size=3)


@given(st.lists(token, min_size=1, max_size=30))
def test_text_round_trip(tokens):
    inst = instance_from_tokens(tokens)
    again = parse_instance(instance_to_text(inst))
    assert again.symbols == inst.symbols
    assert again.token_table == inst.token_table
    assert again.tokens() == list(tokens)


def test_occ_index_worked_positions():
    idx = build_occ_index(parse_instance(WORKED))
    assert idx.positions[0] == (1, 3, 5, 6, 9)
    assert idx.positions[1] == (2, 7, 8, 10)
    assert idx.positions[2] == (4,)
    assert idx.max_occ == 5


def test_occ_index_small():
    idx = build_occ_index(parse_instance("a b a"))
    assert idx.positions[0] == (1, 3)
    assert idx.positions[1] == (2,)


def test_occ_window_counting():
    idx = build_occ_index(parse_instance("a a a"))
    assert idx.occ_window(0, 0, 3) == 3
    assert idx.occ_window(0, 1, 3) == 2
    assert idx.occ_window(0, 2, 2) == 0


@given(st.lists(st.integers(0, 3), min_size=1, max_size=40), st.data())
def test_occ_window_matches_direct_scan(ids, data):
    inst = instance_from_tokens([f"s{i}" for i in ids])
    idx = build_occ_index(inst)
    sym = data.draw(st.integers(0, inst.alphabet_size - 1))
    i = data.draw(st.integers(0, inst.n))
    j = data.draw(st.integers(0, i))
    assert idx.occ_window(sym, j, i) == count_in_window(inst.symbols, sym, j, i)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=40))
def test_occ_index_invariants(ids):
    inst = instance_from_tokens([f"s{i}" for i in ids])
    idx = build_occ_index(inst)
    assert sum(len(p) for p in idx.positions) == inst.n
    for plist in idx.positions:
        assert list(plist) == sorted(set(plist))


def test_validate_worked_optimum():
    inst = parse_instance(WORKED)
    sol = validate_solution(inst, [1, 3, 5, 6, 7, 8, 10])
    assert sol.length == 7
    assert sol.run_count == 2
    assert [(inst.token(s), z) for s, z, _ in sol.runs] == [("a", 4), ("b", 3)]


def test_validate_empty_selection():
    sol = validate_solution(parse_instance(WORKED), [])
    assert sol.length == 0
    assert sol.run_count == 0


def test_validate_rejects_repeated_run_symbol():
    inst = parse_instance(WORKED)
    with pytest.raises(RepeatedRunSymbol):
        validate_solution(inst, list(range(1, 11)))


def test_validate_rejects_non_increasing():
    inst = parse_instance(WORKED)
    with pytest.raises(NonIncreasingIndices):
        validate_solution(inst, [1, 1])
    with pytest.raises(NonIncreasingIndices):
        validate_solution(inst, [2, 1])


def test_validate_rejects_out_of_range():
    inst = parse_instance(WORKED)
    with pytest.raises(IndexOutOfRange):
        validate_solution(inst, [0])
    with pytest.raises(IndexOutOfRange):
        validate_solution(inst, [11])


@given(st.lists(st.integers(0, 3), min_size=1, max_size=12), st.data())
def test_validate_matches_definition(ids, data):
    inst = instance_from_tokens([f"s{i}" for i in ids])
    indices = sorted(
        data.draw(st.sets(st.integers(1, inst.n), max_size=inst.n))
    )
    ok = is_run_subsequence(inst, indices)
    try:
        sol = validate_solution(inst, indices)
    except Exception:
        assert not ok
    else:
        assert ok
        assert sol.length == len(indices)


def test_run_decompose_worked():
    inst = parse_instance(WORKED)
    runs = [(inst.token(s), z) for s, z in run_decompose(inst)]
    assert runs == [
        ("a", 1), ("b", 1), ("a", 1), ("c", 1),
        ("a", 2), ("b", 2), ("a", 1), ("b", 1),
    ]


@given(st.lists(st.integers(0, 3), min_size=1, max_size=40))
def test_run_decompose_matches_split(ids):
    inst = instance_from_tokens([f"s{i}" for i in ids])
    assert run_decompose(inst) == split_runs(inst.symbols)
    assert sum(z for _, z in run_decompose(inst)) == inst.n


def test_format_solution_shape():
    inst = parse_instance(WORKED)
    sol = validate_solution(inst, [1, 3, 5, 6, 7, 8, 10])
    text = format_solution(inst, sol)
    assert text.splitlines() == [
        "length 7",
        "indices 1 3 5 6 7 8 10",
        "runs a:4 b:3",
    ]
