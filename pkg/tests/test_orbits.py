"""Tests for nilpotent orbit data: diagrams, dimensions, closures, Springer maps.

Expected diagrams and dimensions were worked out by hand from the
sl2-triple weight recipe (sort the multiset of Jordan-block weight
strings, take consecutive differences) and cross-checked against the
tables in Carter chapter 13 and Collingwood-McGovern chapter 6.
"""

import pytest

from gggr.orbits import (
    NilOrbit,
    closure_leq,
    induced_orbit,
    orbit_dimension,
    orbits_of,
    springer,
    weight_spaces,
)
from gggr.rootdata import RootDatum, get_datum
from gggr.weyl import weyl_group

import oracles


def gl_datum(n):
    """An inline GL_n datum, for sizes the catalog does not carry."""
    simples = []
    cosimples = []
    for i in range(n - 1):
        v = [0] * n
        v[i] = 1
        v[i + 1] = -1
        simples.append(tuple(v))
        cosimples.append(tuple(v))
    return RootDatum.from_simple_system(simples, cosimples, name=f"GL{n}", rank=n)


def by_label(datum):
    return {orb.label: orb for orb in orbits_of(datum)}


def label_of(partition):
    return "(" + ",".join(str(p) for p in partition) + ")"


# Weighted Dynkin diagrams in the catalog's simple order, worked out by
# hand from sl2 weight strings.
GL_DIAGRAMS = {
    "GL2": {"(2)": (2,), "(1,1)": (0,)},
    "GL3": {"(3)": (2, 2), "(2,1)": (1, 1), "(1,1,1)": (0, 0)},
    "GL4": {
        "(4)": (2, 2, 2),
        "(3,1)": (2, 0, 2),
        "(2,2)": (0, 2, 0),
        "(2,1,1)": (1, 0, 1),
        "(1,1,1,1)": (0, 0, 0),
    },
}

# Sp4 simples are (short, long); SO5 and G2 start with the long root.
RANK2_DIAGRAMS = {
    "Sp4": {"(4)": (2, 2), "(2,2)": (0, 2), "(2,1,1)": (1, 0), "(1,1,1,1)": (0, 0)},
    "SO5": {"(5)": (2, 2), "(3,1,1)": (2, 0), "(2,2,1)": (0, 1), "(1,1,1,1,1)": (0, 0)},
    "G2": {"G2": (2, 2), "G2(a1)": (2, 0), "A1~": (0, 1), "A1": (1, 0), "0": (0, 0)},
}

RANK2_DIMS = {
    "Sp4": {"(4)": 8, "(2,2)": 6, "(2,1,1)": 4, "(1,1,1,1)": 0},
    "SO5": {"(5)": 8, "(3,1,1)": 6, "(2,2,1)": 4, "(1,1,1,1,1)": 0},
    "G2": {"G2": 12, "G2(a1)": 10, "A1~": 8, "A1": 6, "0": 0},
}

# |A(u)| per orbit, in the order of decreasing orbit dimension.  The
# simply connected values for B2 follow from Spin5 = Sp4.
COMPONENT_ORDERS = {
    "Sp4": (2, 2, 2, 1),
    "PSp4": (1, 2, 1, 1),
    "Spin5": (2, 2, 2, 1),
    "SO5": (1, 2, 1, 1),
    "G2": (1, 6, 1, 1, 1),
}


class TestTypeA:
    @pytest.mark.parametrize("name", sorted(GL_DIAGRAMS))
    def test_diagrams(self, name):
        orbs = by_label(get_datum(name))
        assert {o.label: o.weighted_diagram for o in orbs.values()} == GL_DIAGRAMS[name]

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_dimension_is_transpose_formula(self, n):
        datum = get_datum(f"GL{n}") if n <= 5 else gl_datum(n)
        for orb in orbits_of(datum):
            lam = orb.partition
            expected = n * n - sum(m * m for m in oracles.transpose(lam))
            assert orb.dim_orbit == expected

    def test_orbit_count_is_partition_count(self):
        assert len(orbits_of(get_datum("GL5"))) == 7
        assert len(orbits_of(gl_datum(6))) == 11

    def test_order_is_decreasing_dimension(self):
        for name in ("GL4", "GL5", "Sp4", "G2"):
            dims = [o.dim_orbit for o in orbits_of(get_datum(name))]
            assert dims == sorted(dims, reverse=True)

    def test_regular_and_zero(self):
        orbs = orbits_of(get_datum("GL4"))
        assert orbs[0].label == "(4)"
        assert orbs[0].dim_orbit == 12
        assert orbs[-1].label == "(1,1,1,1)"
        assert orbs[-1].dim_orbit == 0
        assert orbs[-1].dim_centralizer == 16

    def test_sl_and_pgl_share_diagrams_with_gl(self):
        for name in ("SL3", "PGL3"):
            orbs = by_label(get_datum(name))
            for lab, diag in GL_DIAGRAMS["GL3"].items():
                assert orbs[lab].weighted_diagram == diag

    def test_sl_dimension_drops_by_central_rank(self):
        gl = by_label(get_datum("GL3"))
        sl = by_label(get_datum("SL3"))
        for lab in gl:
            assert sl[lab].dim_orbit == gl[lab].dim_orbit
            assert sl[lab].dim_centralizer == gl[lab].dim_centralizer - 1

    def test_torus_datum(self):
        orbs = orbits_of(get_datum("GL1"))
        assert len(orbs) == 1
        assert orbs[0].label == "(1)"
        assert orbs[0].weighted_diagram == ()
        assert orbs[0].dim_orbit == 0
        assert orbs[0].dim_centralizer == 1


class TestComponentGroups:
    def test_gl_trivial(self):
        for name in ("GL2", "GL3", "GL4", "GL5"):
            assert all(o.component_group_order == 1 for o in orbits_of(get_datum(name)))

    def test_pgl_trivial(self):
        for name in ("PGL2", "PGL3", "PGL4", "PGL5"):
            assert all(o.component_group_order == 1 for o in orbits_of(get_datum(name)))

    def test_sl_is_gcd(self):
        expected = {
            "SL2": {"(2)": 2, "(1,1)": 1},
            "SL3": {"(3)": 3, "(2,1)": 1, "(1,1,1)": 1},
            "SL4": {"(4)": 4, "(3,1)": 1, "(2,2)": 2, "(2,1,1)": 1, "(1,1,1,1)": 1},
            "SL5": {
                "(5)": 5,
                "(4,1)": 1,
                "(3,2)": 1,
                "(3,1,1)": 1,
                "(2,2,1)": 1,
                "(2,1,1,1)": 1,
                "(1,1,1,1,1)": 1,
            },
        }
        for name, table in expected.items():
            orbs = by_label(get_datum(name))
            assert {lab: orbs[lab].component_group_order for lab in table} == table

    @pytest.mark.parametrize("name", sorted(COMPONENT_ORDERS))
    def test_rank2(self, name):
        orders = tuple(o.component_group_order for o in orbits_of(get_datum(name)))
        assert orders == COMPONENT_ORDERS[name]


class TestRank2Tables:
    @pytest.mark.parametrize("name", sorted(RANK2_DIAGRAMS))
    def test_diagrams(self, name):
        orbs = by_label(get_datum(name))
        assert {o.label: o.weighted_diagram for o in orbs.values()} == RANK2_DIAGRAMS[name]

    @pytest.mark.parametrize("name", sorted(RANK2_DIMS))
    def test_dimensions(self, name):
        orbs = by_label(get_datum(name))
        assert {o.label: o.dim_orbit for o in orbs.values()} == RANK2_DIMS[name]

    def test_isogenous_presentations_share_tables(self):
        for a, b in (("Sp4", "PSp4"), ("SO5", "Spin5")):
            da, db = get_datum(a), get_datum(b)
            ta = [(o.label, o.weighted_diagram, o.dim_orbit) for o in orbits_of(da)]
            tb = [(o.label, o.weighted_diagram, o.dim_orbit) for o in orbits_of(db)]
            assert ta == tb


class TestWeightSpaces:
    def test_sl2_regular(self):
        datum = get_datum("SL2")
        orb = by_label(datum)["(2)"]
        assert weight_spaces(datum, orb) == {-2: 1, 0: 1, 2: 1}

    def test_sl3_subregular(self):
        datum = get_datum("SL3")
        orb = by_label(datum)["(2,1)"]
        assert weight_spaces(datum, orb) == {-2: 1, -1: 2, 0: 2, 1: 2, 2: 1}

    def test_g2_subregular(self):
        datum = get_datum("G2")
        orb = by_label(datum)["G2(a1)"]
        ws = weight_spaces(datum, orb)
        assert ws[0] == 4
        assert ws[2] == 4
        assert sum(ws.values()) == 14

    def test_invariants(self):
        names = ("GL2", "GL4", "SL3", "PGL4", "Sp4", "SO5", "Spin5", "G2")
        for name in names:
            datum = get_datum(name)
            dim_g = datum.group_dimension()
            for orb in orbits_of(datum):
                ws = weight_spaces(datum, orb)
                assert all(ws[i] == ws[-i] for i in ws)
                assert sum(ws.values()) == dim_g
                assert orb.dim_orbit % 2 == 0
                assert orb.dim_orbit + orb.dim_centralizer == dim_g
                assert orb.dim_orbit == dim_g - ws[0] - ws.get(1, 0)
                assert set(orb.weighted_diagram) <= {0, 1, 2}

    def test_orbit_dimension_function(self):
        datum = get_datum("GL4")
        for orb in orbits_of(datum):
            assert orbit_dimension(datum, orb) == orb.dim_orbit


class TestClosure:
    def test_gl4_chain(self):
        orbs = by_label(get_datum("GL4"))
        assert closure_leq(orbs["(2,2)"], orbs["(3,1)"])
        assert not closure_leq(orbs["(3,1)"], orbs["(2,2)"])
        assert closure_leq(orbs["(2,1,1)"], orbs["(2,2)"])
        assert closure_leq(orbs["(1,1,1,1)"], orbs["(2,1,1)"])
        assert closure_leq(orbs["(2,2)"], orbs["(2,2)"])

    def test_gl6_incomparable(self):
        orbs = by_label(gl_datum(6))
        a, b = orbs["(4,1,1)"], orbs["(3,3)"]
        assert not closure_leq(a, b)
        assert not closure_leq(b, a)

    def test_rank2_chains(self):
        for name in ("Sp4", "SO5", "G2"):
            orbs = orbits_of(get_datum(name))
            for i, top in enumerate(orbs):
                for bottom in orbs[i:]:
                    assert closure_leq(bottom, top)
                    assert closure_leq(top, bottom) == (top is bottom)

    def test_reflexive_antisymmetric_on_gl5(self):
        orbs = orbits_of(get_datum("GL5"))
        for a in orbs:
            for b in orbs:
                if closure_leq(a, b) and closure_leq(b, a):
                    assert a is b


class TestSpringer:
    def test_type_a_is_partition_bijection(self):
        for name in ("GL2", "GL3", "GL4", "GL5"):
            datum = get_datum(name)
            sp = springer(datum)
            w = weyl_group(datum)
            chars = set(w.character_table().labels)
            seen = set()
            for orb in orbits_of(datum):
                lab = sp.char_of(orb.label)
                assert lab == "chi" + orb.label
                seen.add(lab)
            assert seen == chars

    def test_type_a_b_invariant_matches_springer_fiber(self):
        datum = get_datum("GL4")
        w = weyl_group(datum)
        reg_dim = orbits_of(datum)[0].dim_orbit
        for orb in orbits_of(datum):
            b = w.b_invariant(springer(datum).char_of(orb.label))
            assert b == (reg_dim - orb.dim_orbit) // 2

    def test_sp4_principal_block(self):
        sp = springer(get_datum("Sp4"))
        assert sp.char_of("(4)") == "triv"
        assert sp.char_of("(2,2)") == "refl"
        assert sp.char_of("(2,2)", "sgn") == "eps_short"
        assert sp.char_of("(2,1,1)") == "eps_long"
        assert sp.char_of("(1,1,1,1)") == "sign"
        assert len(sp.pairs) == 5

    def test_so5_principal_block(self):
        sp = springer(get_datum("SO5"))
        assert sp.char_of("(5)") == "triv"
        assert sp.char_of("(3,1,1)") == "refl"
        assert sp.char_of("(3,1,1)", "sgn") == "eps_short"
        assert sp.char_of("(2,2,1)") == "eps_long"
        assert sp.char_of("(1,1,1,1,1)") == "sign"
        assert len(sp.pairs) == 5

    def test_g2_principal_block(self):
        sp = springer(get_datum("G2"))
        assert sp.char_of("G2") == "triv"
        assert sp.char_of("G2(a1)") == "refl"
        assert sp.char_of("G2(a1)", "dim2") == "eps_short"
        assert sp.char_of("A1~") == "twodim"
        assert sp.char_of("A1") == "eps_long"
        assert sp.char_of("0") == "sign"
        assert len(sp.pairs) == 6

    def test_principal_block_exhausts_characters(self):
        # The principal-series part of the generalized Springer
        # correspondence is a bijection onto Irr(W).
        for name in ("Sp4", "SO5", "G2"):
            datum = get_datum(name)
            sp = springer(datum)
            chars = [c for (_, _, c) in sp.pairs]
            assert sorted(chars) == sorted(weyl_group(datum).character_table().labels)

    def test_orbit_of_inverts_char_of(self):
        for name in ("GL4", "Sp4", "G2"):
            sp = springer(get_datum(name))
            for orb_label, local, char in sp.pairs:
                assert sp.orbit_of(char) == (orb_label, local)

    def test_duality_between_sp4_and_so5(self):
        # Sp4 and Spin5 are the same group.  The identification scales
        # the C2 root system onto B2 by a single factor, which forces
        # long roots onto long roots, so the two Springer tables must
        # agree verbatim once orbits are matched by dimension.
        sp_c = springer(get_datum("Sp4"))
        sp_b = springer(get_datum("SO5"))
        dim_c = {o.label: o.dim_orbit for o in orbits_of(get_datum("Sp4"))}
        dim_b = {o.label: o.dim_orbit for o in orbits_of(get_datum("SO5"))}
        table_c = {(dim_c[o], loc): c for (o, loc, c) in sp_c.pairs}
        table_b = {(dim_b[o], loc): c for (o, loc, c) in sp_b.pairs}
        assert table_c == table_b

    def test_regular_orbit_carries_trivial_character(self):
        for name in ("GL3", "SL4", "Sp4", "SO5", "G2"):
            datum = get_datum(name)
            sp = springer(datum)
            top = orbits_of(datum)[0]
            assert sp.char_of(top.label) == weyl_group(datum).trivial_label()

    def test_zero_orbit_carries_sign_character(self):
        for name in ("GL3", "SL4", "Sp4", "SO5", "G2"):
            datum = get_datum(name)
            sp = springer(datum)
            bottom = orbits_of(datum)[-1]
            assert sp.char_of(bottom.label) == weyl_group(datum).sign_label()


class TestInducedOrbit:
    def test_two_by_two_regulars(self):
        datum = get_datum("GL4")
        orb = induced_orbit(datum, (0, 2), ((2,), (2,)))
        assert orb.label == "(4)"

    def test_two_by_two_zeros(self):
        datum = get_datum("GL4")
        orb = induced_orbit(datum, (0, 2), ((1, 1), (1, 1)))
        assert orb.label == "(2,2)"

    def test_from_torus_is_regular(self):
        datum = get_datum("GL4")
        orb = induced_orbit(datum, (), ((1,), (1,), (1,), (1,)))
        assert orb.label == "(4)"

    def test_full_levi_is_identity(self):
        datum = get_datum("GL4")
        for lam in oracles.partitions(4):
            orb = induced_orbit(datum, (0, 1, 2), (lam,))
            assert orb.label == label_of(lam)

    def test_mixed_blocks(self):
        datum = get_datum("GL5")
        orb = induced_orbit(datum, (0, 1, 3), ((2, 1), (1, 1)))
        assert orb.label == "(3,2)"

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_dimension_identity_exhaustive(self, n):
        import itertools

        datum = get_datum(f"GL{n}")
        dim_by_label = {o.label: o.dim_orbit for o in orbits_of(datum)}
        for mask in range(2 ** (n - 1)):
            levi = tuple(i for i in range(n - 1) if mask >> i & 1)
            blocks = []
            size = 1
            for i in range(n - 1):
                if i in levi:
                    size += 1
                else:
                    blocks.append(size)
                    size = 1
            blocks.append(size)
            dim_levi_part = n * (n - 1) - sum(c * (c - 1) for c in blocks)
            for lams in itertools.product(*(oracles.partitions(c) for c in blocks)):
                orb = induced_orbit(datum, levi, lams)
                dim_small = sum(
                    c * c - sum(m * m for m in oracles.transpose(lam))
                    for c, lam in zip(blocks, lams)
                )
                assert orb.dim_orbit == dim_levi_part + dim_small

    def test_rejects_wrong_block_count(self):
        datum = get_datum("GL4")
        with pytest.raises(ValueError):
            induced_orbit(datum, (0, 2), ((2,),))

    def test_rejects_wrong_partition_size(self):
        datum = get_datum("GL4")
        with pytest.raises(ValueError):
            induced_orbit(datum, (0, 2), ((3,), (2,)))


class TestUnsupported:
    def test_unsupported_type_raises(self):
        simples = [(1, -1, 0, 0, 0), (0, 1, -1, 0, 0), (0, 0, 1, -1, 0)]
        two_blocks = [simples[0], simples[2]]
        datum = RootDatum.from_simple_system(two_blocks, two_blocks, rank=5)
        with pytest.raises(ValueError):
            orbits_of(datum)
