"""Self-validation of the test oracles against frozen literature values.

If anything here fails, the oracles themselves are wrong and every
downstream comparison is meaningless, so this file pins them first.
"""

from math import factorial

from oracles import (
    Cyclotomic,
    charge,
    dominance_leq,
    gelfand_graev_gl2,
    inner_product_gl2,
    kostka_foulkes,
    mn_char,
    modified_kostka_foulkes,
    n_stat,
    partitions,
    steinberg_gl2,
    transpose,
)


def class_size(rho: tuple[int, ...]) -> int:
    n = sum(rho)
    size = factorial(n)
    for k in set(rho):
        m = rho.count(k)
        size //= k**m * factorial(m)
    return size


def test_partition_utilities():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose(transpose((4, 2, 1))) == (4, 2, 1)
    assert n_stat((2, 1, 1)) == 3
    assert n_stat((1, 1, 1, 1)) == 6
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    assert dominance_leq((2, 1, 1), (2, 1, 1))


def test_murnaghan_nakayama_s3():
    classes = [(1, 1, 1), (2, 1), (3,)]
    table = {lam: [mn_char(lam, rho) for rho in classes] for lam in partitions(3)}
    assert table[(3,)] == [1, 1, 1]
    assert table[(2, 1)] == [2, 0, -1]
    assert table[(1, 1, 1)] == [1, -1, 1]


def test_murnaghan_nakayama_s4():
    classes = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    table = {lam: [mn_char(lam, rho) for rho in classes] for lam in partitions(4)}
    assert table[(4,)] == [1, 1, 1, 1, 1]
    assert table[(3, 1)] == [3, 1, -1, 0, -1]
    assert table[(2, 2)] == [2, 0, 2, -1, 0]
    assert table[(2, 1, 1)] == [3, -1, -1, 0, 1]
    assert table[(1, 1, 1, 1)] == [1, -1, 1, 1, -1]


def test_murnaghan_nakayama_orthogonality_s5():
    classes = partitions(5)
    sizes = [class_size(rho) for rho in classes]
    labels = partitions(5)
    for lam in labels:
        for mu in labels:
            total = sum(
                size * mn_char(lam, rho) * mn_char(mu, rho)
                for rho, size in zip(classes, sizes)
            )
            assert total == (factorial(5) if lam == mu else 0)


def test_charge_small_words():
    assert charge((1, 2)) == 1
    assert charge((2, 1)) == 0
    assert charge((1, 1, 2)) == 1
    assert charge((2, 1, 1)) == 0
    assert charge((1, 2, 3)) == 3


def test_kostka_foulkes_frozen():
    assert kostka_foulkes((2,), (2,)) == {0: 1}
    assert kostka_foulkes((2,), (1, 1)) == {1: 1}
    assert kostka_foulkes((1, 1), (1, 1)) == {0: 1}
    assert kostka_foulkes((1, 1), (2,)) == {}
    assert kostka_foulkes((3,), (1, 1, 1)) == {3: 1}
    assert kostka_foulkes((2, 1), (1, 1, 1)) == {1: 1, 2: 1}
    assert kostka_foulkes((2, 1), (2, 1)) == {0: 1}
    assert kostka_foulkes((1, 1, 1), (1, 1, 1)) == {0: 1}
    # The mu = (1^n) column obeys the q-hook-length formula
    # t^{n(lam')}[n]_t!/prod [hook]_t, giving t^2+t^4, t^3+t^4+t^5,
    # t+t^2+t^3 for the three middle shapes of n = 4.
    assert kostka_foulkes((2, 2), (1, 1, 1, 1)) == {2: 1, 4: 1}
    assert kostka_foulkes((3, 1), (1, 1, 1, 1)) == {3: 1, 4: 1, 5: 1}
    assert kostka_foulkes((2, 1, 1), (1, 1, 1, 1)) == {1: 1, 2: 1, 3: 1}
    assert kostka_foulkes((2, 2), (2, 1, 1)) == {1: 1}
    assert kostka_foulkes((3, 1), (2, 1, 1)) == {1: 1, 2: 1}
    assert kostka_foulkes((4,), (1, 1, 1, 1)) == {6: 1}


def test_kostka_foulkes_at_one_counts_tableaux():
    # K_{lam,mu}(1) is the classical Kostka number, nonzero only when
    # mu <= lam in dominance; the (2,1,1) row of the n = 4 table is
    # 0, 0, 0, 1, 3 over mu in reverse lexicographic order (the last
    # entry counts the 3 standard tableaux of shape (2,1,1)).
    values = [sum(kostka_foulkes((2, 1, 1), mu).values()) for mu in partitions(4)]
    assert values == [0, 0, 0, 1, 3]


def test_modified_kostka_shift():
    assert modified_kostka_foulkes((1, 1), (1, 1)) == {1: 1}
    assert modified_kostka_foulkes((2,), (1, 1)) == {0: 1}
    assert modified_kostka_foulkes((2, 1), (1, 1, 1)) == {1: 1, 2: 1}


def test_gelfand_graev_gl2_f2():
    values = gelfand_graev_gl2(2)
    identity = (1, 0, 0, 1)
    regular = (1, 1, 0, 1)
    assert values[identity] == Cyclotomic.integer(2, 3)  # (q-1)(q^2-1) at q=2
    assert values[regular] == Cyclotomic.integer(2, -1)  # 1-q at q=2
    triv = {g: 1 for g in values}
    st = steinberg_gl2(2)
    assert inner_product_gl2(2, values, triv) == Cyclotomic.integer(2, 0)
    assert inner_product_gl2(2, values, st) == Cyclotomic.integer(2, 1)


def test_gelfand_graev_gl2_f3():
    values = gelfand_graev_gl2(3)
    identity = (1, 0, 0, 1)
    regular = (1, 1, 0, 1)
    assert values[identity] == Cyclotomic.integer(3, 16)  # (q-1)(q^2-1) at q=3
    assert values[regular] == Cyclotomic.integer(3, -2)  # 1-q at q=3
    triv = {g: 1 for g in values}
    st = steinberg_gl2(3)
    assert inner_product_gl2(3, values, triv) == Cyclotomic.integer(3, 0)
    assert inner_product_gl2(3, values, st) == Cyclotomic.integer(3, 1)
