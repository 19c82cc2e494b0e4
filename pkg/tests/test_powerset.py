import pytest
from hypothesis import given, strategies as st

from setdev.finset import FiniteSet, Mapping, image, kernel_partition
from setdev.powerset import (
    direct_image_map,
    iota,
    kappa,
    power_set,
    preimage_map,
    restrict_preimage_to_image,
)
from setdev.verifier import enumerate_mappings


def m(nx, ny, table):
    return Mapping(FiniteSet(nx), FiniteSet(ny), tuple(table))


def test_power_set_sizes():
    assert power_set(FiniteSet(0)).as_set.size == 1
    assert power_set(FiniteSet(3)).as_set.size == 8
    carrier = power_set(FiniteSet(4))
    assert carrier.as_set.size == 16
    assert carrier.decode(5).to_list() == [0, 2]
    assert carrier.encode(carrier.decode(5)) == 5


def test_power_set_bound():
    with pytest.raises(ValueError):
        power_set(FiniteSet(13))
    power_set(FiniteSet(5), max_base=5)
    with pytest.raises(ValueError):
        power_set(FiniteSet(6), max_base=5)


def test_direct_image_examples():
    ident = Mapping.identity(FiniteSet(2))
    assert direct_image_map(ident).table == (0, 1, 2, 3)
    const = m(2, 2, [0, 0])
    assert direct_image_map(const).table == (0, 1, 1, 1)
    for nx in range(4):
        for ny in range(4):
            for f in enumerate_mappings(FiniteSet(nx), FiniteSet(ny)):
                tilde = direct_image_map(f)
                assert tilde.table[0] == 0
                assert all(v != 0 for v in tilde.table[1:])


def test_preimage_examples():
    const = m(2, 2, [0, 0])
    assert preimage_map(const).table == (0, 3, 0, 3)
    for nx in range(4):
        for ny in range(4):
            for f in enumerate_mappings(FiniteSet(nx), FiniteSet(ny)):
                pre = preimage_map(f)
                assert pre.table[0] == 0
                assert pre.table[-1] == (1 << nx) - 1
    bij = m(3, 3, [2, 0, 1])
    assert preimage_map(bij).is_bijective()


def test_restriction_examples():
    surj = m(3, 2, [0, 0, 1])
    assert restrict_preimage_to_image(surj) == preimage_map(surj)
    const = m(2, 2, [0, 0])
    restricted = restrict_preimage_to_image(const)
    assert restricted.dom.size == 2
    assert restricted.table == (0, 3)
    for nx in range(4):
        for ny in range(4):
            for f in enumerate_mappings(FiniteSet(nx), FiniteSet(ny)):
                assert restrict_preimage_to_image(f).is_injective()


def test_iota():
    assert iota(FiniteSet(1)).table == (0,)
    assert iota(FiniteSet(3)).table == (0, 1, 2)
    assert iota(FiniteSet(3)).is_bijective()


def test_kappa_surjective_is_identity_shaped():
    surj = m(3, 2, [0, 0, 1])
    ka = kappa(surj)
    assert ka.dom.size == 4 and ka.cod.size == 4
    assert ka.is_bijective()
    # Kernel classes of the preimage map are singletons, indexed like P(Y).
    assert kernel_partition(preimage_map(surj)).to_lists() == [[0], [1], [2], [3]]


def test_kappa_constant_two_blocks():
    const = m(2, 2, [0, 0])
    ka = kappa(const)
    assert ka.dom.size == 2 and ka.cod.size == 2
    assert ka.table == (0, 1)
    assert kernel_partition(preimage_map(const)).to_lists() == [[0, 2], [1, 3]]


def test_kappa_bijective_full_size():
    bij = m(3, 3, [1, 2, 0])
    ka = kappa(bij)
    assert ka.dom.size == 8 and ka.cod.size == 8 and ka.is_bijective()


@given(st.data())
def test_subset_grows_under_preimage_of_image(data):
    nx = data.draw(st.integers(min_value=0, max_value=5))
    ny = data.draw(st.integers(min_value=1, max_value=5))
    table = tuple(data.draw(st.integers(min_value=0, max_value=ny - 1)) for _ in range(nx))
    f = m(nx, ny, table)
    tilde = direct_image_map(f, max_base=5)
    pre = preimage_map(f, max_base=5)
    a = data.draw(st.integers(min_value=0, max_value=(1 << nx) - 1))
    assert a & ~pre.table[tilde.table[a]] == 0


@given(st.data())
def test_image_retracts_preimage_on_image_subsets(data):
    nx = data.draw(st.integers(min_value=0, max_value=5))
    ny = data.draw(st.integers(min_value=1, max_value=5))
    table = tuple(data.draw(st.integers(min_value=0, max_value=ny - 1)) for _ in range(nx))
    f = m(nx, ny, table)
    tilde = direct_image_map(f, max_base=5)
    pre = preimage_map(f, max_base=5)
    img = image(f).bits
    v = data.draw(st.integers(min_value=0, max_value=(1 << ny) - 1)) & img
    assert tilde.table[pre.table[v]] == v
