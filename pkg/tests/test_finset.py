import pytest
from hypothesis import given, strategies as st

from setdev.finset import (
    FiniteSet,
    Mapping,
    Partition,
    SubsetOf,
    all_partitions,
    canonical_factorization,
    classify,
    deviation,
    deviation_leq,
    discrete,
    image,
    indiscrete,
    kernel_partition,
    partition_leq,
    rho,
)
from setdev.verifier import enumerate_mappings


def m(nx, ny, table):
    return Mapping(FiniteSet(nx), FiniteSet(ny), tuple(table))


# --- carriers and validation -------------------------------------------------


def test_finite_set_rejects_negative_size():
    with pytest.raises(ValueError):
        FiniteSet(-1)


def test_labels_must_be_distinct_and_sized():
    with pytest.raises(ValueError):
        FiniteSet(2, labels=("a",))
    with pytest.raises(ValueError):
        FiniteSet(2, labels=("a", "a"))
    assert FiniteSet(2, labels=("a", "b")) == FiniteSet(2)  # presentation-only


def test_subset_bounds():
    base = FiniteSet(3)
    assert SubsetOf.of(base, [0, 2]).to_list() == [0, 2]
    with pytest.raises(ValueError):
        SubsetOf(base, 1 << 3)
    with pytest.raises(ValueError):
        SubsetOf.of(base, [3])


def test_partition_validation():
    base = FiniteSet(3)
    with pytest.raises(ValueError):
        Partition.of(base, [[0, 1], [1, 2]])  # overlap
    with pytest.raises(ValueError):
        Partition.of(base, [[0, 1]])  # not covering
    with pytest.raises(ValueError):
        Partition.of(base, [[0, 1], [2], []])  # empty block
    canonical = Partition.of(base, [[2], [0, 1]])
    assert canonical.to_lists() == [[0, 1], [2]]


def test_empty_carrier_has_exactly_the_empty_partition():
    base = FiniteSet(0)
    parts = list(all_partitions(base))
    assert parts == [Partition(base, ())]
    assert discrete(base) == indiscrete(base) == parts[0]


def test_mapping_validation():
    with pytest.raises(ValueError):
        m(2, 2, [5, 0])
    with pytest.raises(ValueError):
        m(2, 2, [0])
    with pytest.raises(ValueError):
        m(1, 0, [0])


# --- image / kernel / factorization ------------------------------------------


def test_image_examples():
    assert image(Mapping.identity(FiniteSet(3))).to_list() == [0, 1, 2]
    assert image(m(3, 2, [0, 0, 0])).to_list() == [0]
    assert image(m(3, 3, [0, 0, 2])).to_list() == [0, 2]


def test_kernel_partition_examples():
    assert kernel_partition(Mapping.identity(FiniteSet(3))).to_lists() == [[0], [1], [2]]
    assert kernel_partition(m(3, 1, [0, 0, 0])).to_lists() == [[0, 1, 2]]
    assert kernel_partition(m(3, 3, [0, 0, 2])).to_lists() == [[0, 1], [2]]
    assert kernel_partition(m(0, 2, [])).to_lists() == []


def test_factorization_shapes():
    ident = Mapping.identity(FiniteSet(3))
    fact = canonical_factorization(ident)
    assert fact.proj.is_bijective() and fact.incl.is_bijective()

    fact = canonical_factorization(m(2, 2, [0, 0]))
    assert (fact.proj.dom.size, fact.proj.cod.size) == (2, 1)
    assert (fact.mid.dom.size, fact.mid.cod.size) == (1, 1)
    assert (fact.incl.dom.size, fact.incl.cod.size) == (1, 2)

    fact = canonical_factorization(m(3, 3, [0, 0, 2]))
    assert fact.proj.table == (0, 0, 1)
    assert fact.mid.table == (0, 1)
    assert fact.incl.table == (0, 2)


def test_factorization_exhaustive_small():
    for nx in range(4):
        for ny in range(4):
            for f in enumerate_mappings(FiniteSet(nx), FiniteSet(ny)):
                fact = canonical_factorization(f)
                assert fact.proj.is_surjective()
                assert fact.mid.is_bijective()
                assert fact.incl.is_injective()
                assert fact.recompose() == f


def test_factorization_block_labels():
    fact = canonical_factorization(m(3, 3, [0, 0, 2]))
    assert fact.proj.cod.labels == ("{0,1}", "{2}")


# --- deviation and classification ---------------------------------------------


def test_deviation_examples():
    dev = deviation(Mapping.identity(FiniteSet(3)))
    assert dev.part == discrete(FiniteSet(3)) and dev.missed.to_list() == []

    dev = deviation(m(3, 2, [0, 0, 0]))
    assert dev.part.to_lists() == [[0, 1, 2]] and dev.missed.to_list() == [1]

    dev = deviation(m(2, 3, [0, 2]))
    assert dev.part == discrete(FiniteSet(2)) and dev.missed.to_list() == [1]


def test_classification_examples():
    assert classify(Mapping.identity(FiniteSet(3))).flags() == (
        "injective",
        "surjective",
        "bijective",
    )
    assert classify(m(3, 2, [0, 0, 1])).flags() == ("surjective",)
    assert classify(m(2, 2, [1, 1])).flags() == ("constant",)


def test_empty_mapping_classification():
    # The empty mapping is injective and vacuously constant; it is surjective
    # (hence bijective) only onto the empty codomain.
    assert classify(m(0, 0, [])).flags() == ("injective", "surjective", "bijective", "constant")
    assert classify(m(0, 2, [])).flags() == ("injective", "constant")


# --- orders ---------------------------------------------------------------------


def test_partition_leq_examples():
    base = FiniteSet(3)
    top = indiscrete(base)
    for p in all_partitions(base):
        assert partition_leq(discrete(base), p)
        assert partition_leq(p, top)
    p = Partition.of(base, [[0, 1], [2]])
    q = Partition.of(base, [[0], [1, 2]])
    assert not partition_leq(p, q)
    assert not partition_leq(q, p)


def test_partition_leq_base_mismatch():
    with pytest.raises(ValueError):
        partition_leq(discrete(FiniteSet(2)), discrete(FiniteSet(3)))


def test_deviation_leq_examples():
    x, y = FiniteSet(3), FiniteSet(3)
    bij = Mapping.identity(x)
    for g in enumerate_mappings(x, y):
        assert deviation_leq(bij, g)
    f = m(3, 2, [0, 0, 0])
    assert deviation_leq(f, f)
    assert not deviation_leq(f, m(3, 2, [0, 1, 0]))


def test_deviation_leq_signature_mismatch():
    with pytest.raises(ValueError):
        deviation_leq(m(2, 2, [0, 1]), m(2, 3, [0, 1]))


def test_rho_examples():
    bij = m(3, 3, [2, 0, 1])
    r = rho(bij)
    assert r.is_bijective() and r.dom.size == 3
    assert rho(m(3, 2, [0, 0, 0])).dom.size == 1
    assert rho(m(3, 3, [0, 0, 2])).dom.size == 2


# --- properties -----------------------------------------------------------------


def test_bell_numbers():
    counts = [sum(1 for _ in all_partitions(FiniteSet(n))) for n in range(6)]
    assert counts == [1, 1, 2, 5, 15, 52]


@st.composite
def partitions(draw, max_size=5):
    n = draw(st.integers(min_value=0, max_value=max_size))
    base = FiniteSet(n)
    if n == 0:
        return Partition(base, ())
    rgs = [0]
    for _ in range(n - 1):
        rgs.append(draw(st.integers(min_value=0, max_value=max(rgs) + 1)))
    blocks: dict[int, list[int]] = {}
    for x, v in enumerate(rgs):
        blocks.setdefault(v, []).append(x)
    return Partition.of(base, blocks.values())


@given(partitions())
def test_partition_leq_reflexive(p):
    assert partition_leq(p, p)


@given(st.data())
def test_partition_leq_antisymmetric_and_transitive(data):
    n = data.draw(st.integers(min_value=0, max_value=4))
    base = FiniteSet(n)
    pool = list(all_partitions(base))
    p = data.draw(st.sampled_from(pool))
    q = data.draw(st.sampled_from(pool))
    r = data.draw(st.sampled_from(pool))
    if partition_leq(p, q) and partition_leq(q, p):
        assert p == q
    if partition_leq(p, q) and partition_leq(q, r):
        assert partition_leq(p, r)


@given(st.data())
def test_kernel_partition_blocks_are_fibres(data):
    nx = data.draw(st.integers(min_value=0, max_value=5))
    ny = data.draw(st.integers(min_value=1, max_value=5))
    table = tuple(data.draw(st.integers(min_value=0, max_value=ny - 1)) for _ in range(nx))
    f = m(nx, ny, table)
    part = kernel_partition(f)
    for blk in part.blocks:
        values = {f(x) for x in blk.elements()}
        assert len(values) == 1
    assert sum(len(b) for b in part.blocks) == nx


def test_json_round_trip():
    f = m(3, 2, [0, 0, 1])
    assert Mapping.from_json_dict(f.to_json_dict()) == f
    with pytest.raises(ValueError):
        Mapping.from_json_dict({"dom": 2, "table": [0, 0]})
