import pytest
from hypothesis import given, strategies as st

from lrskit import GenSpec, ParameterError, build_occ_index, gen_string


def test_shuffled_multiset_exact_shape():
    spec = GenSpec(n=20, sigma=5, occ_cap=6, distribution="shuffled-multiset", seed=3)
    inst = gen_string(spec)
    assert inst.n == 20
    assert inst.alphabet_size == 5
    assert build_occ_index(inst).max_occ <= 6


def test_shuffled_multiset_every_symbol_present():
    spec = GenSpec(n=7, sigma=7, distribution="shuffled-multiset", seed=0)
    inst = gen_string(spec)
    assert sorted(set(inst.symbols)) == list(range(7))


@given(st.integers(0, 1000))
def test_shuffled_multiset_deterministic(seed):
    spec = GenSpec(n=12, sigma=3, occ_cap=8, distribution="shuffled-multiset", seed=seed)
    assert gen_string(spec).symbols == gen_string(spec).symbols


def test_tight_cap():
    spec = GenSpec(n=10, sigma=5, occ_cap=2, distribution="shuffled-multiset", seed=1)
    inst = gen_string(spec)
    assert inst.n == 10
    idx = build_occ_index(inst)
    assert idx.max_occ == 2
    assert all(idx.occ(a) == 2 for a in range(5))


def test_uniform_shape():
    spec = GenSpec(n=15, sigma=4, distribution="uniform", seed=3)
    inst = gen_string(spec)
    assert inst.n == 15
    assert inst.alphabet_size <= 4


def test_uniform_deterministic():
    spec = GenSpec(n=30, sigma=6, distribution="uniform", seed=11)
    assert gen_string(spec).symbols == gen_string(spec).symbols


def test_parameter_errors():
    with pytest.raises(ParameterError):
        gen_string(GenSpec(n=5, sigma=6, distribution="shuffled-multiset", seed=0))
    with pytest.raises(ParameterError):
        gen_string(GenSpec(n=10, sigma=2, occ_cap=3, distribution="shuffled-multiset", seed=0))
    with pytest.raises(ParameterError):
        gen_string(GenSpec(n=10, sigma=2, occ_cap=3, distribution="uniform", seed=0))
    with pytest.raises(ParameterError):
        gen_string(GenSpec(n=10, sigma=2, distribution="zipf", seed=0))
    with pytest.raises(ParameterError):
        gen_string(GenSpec(n=0, sigma=1, distribution="uniform", seed=0))
