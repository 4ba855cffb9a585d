"""Nilpotent orbit data for the supported root systems.

Type A orbits are computed from scratch: Jordan types are partitions,
the weighted Dynkin diagram is read off the sorted multiset of sl2
weight strings, and dimensions come from counting root weights.  The
rank-two types B2, C2 and G2 are served from a bundled table
(data/orbit_tables.txt) whose provenance is documented in the file
itself.  Everything else raises.
"""

import os
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .rootdata import cartan_type, quotient_torsion
from .weyl import _partitions


@dataclass(frozen=True)
class NilOrbit:
    """One nilpotent orbit of the group scheme attached to a root datum.

    weighted_diagram has one entry per simple root, in the datum's
    simple order.  partition is the Jordan type where one exists (types
    A, B2, C2) and None for the G2 labels.
    """

    label: str
    partition: tuple
    weighted_diagram: tuple
    dim_orbit: int
    dim_centralizer: int
    component_group_order: int


@dataclass(frozen=True)
class SpringerMap:
    """The orbit/local-system pairs of the principal Springer block.

    pairs is a tuple of (orbit_label, local_system, character_label)
    triples; local systems are named "triv", "sgn" or "dim2".  Pairs
    carrying a cuspidal local system do not appear.
    """

    pairs: tuple

    def char_of(self, orbit_label, local="triv"):
        for orb, loc, char in self.pairs:
            if orb == orbit_label and loc == local:
                return char
        raise KeyError((orbit_label, local))

    def orbit_of(self, char_label):
        for orb, loc, char in self.pairs:
            if char == char_label:
                return (orb, loc)
        raise KeyError(char_label)


def orbits_of(datum):
    """All nilpotent orbits, sorted by decreasing dimension."""
    return _orbits_cached(datum)


@lru_cache(maxsize=None)
def _orbits_cached(datum):
    kind = _orbit_kind(datum)
    if kind[0] == "A":
        orbs = _type_a_orbits(datum, kind[1])
    else:
        orbs = _rank2_orbits(datum, kind[0])
    return tuple(sorted(orbs, key=lambda o: (-o.dim_orbit, o.label)))


def _orbit_kind(datum):
    ct = cartan_type(datum)
    if len(ct) == 0:
        return ("A", 1)
    if len(ct) == 1 and ct[0][0] == "A":
        return ("A", ct[0][1] + 1)
    if ct == (("B", 2),):
        return ("B2",)
    if ct == (("C", 2),):
        return ("C2",)
    if ct == (("G", 2),):
        return ("G2",)
    raise ValueError(f"no orbit data for root system of type {ct}")


def _simple_cartan(datum):
    simples = datum.simples
    cosimples = datum.simple_coroots
    s = len(simples)
    return [[datum.pair(simples[i], cosimples[j]) for j in range(s)] for i in range(s)]


def _chain_order(datum):
    """Simple positions listed along the type A chain."""
    c = _simple_cartan(datum)
    s = len(c)
    if s == 0:
        return []
    adj = {i: [j for j in range(s) if j != i and c[i][j] != 0] for i in range(s)}
    start = min(i for i in range(s) if len(adj[i]) <= 1)
    order = [start]
    prev = None
    while len(order) < s:
        here = order[-1]
        nxt = [j for j in adj[here] if j != prev]
        assert len(nxt) == 1
        prev = here
        order.append(nxt[0])
    return order


def _label_of(partition):
    return "(" + ",".join(str(p) for p in partition) + ")"


def _transpose(partition):
    if not partition:
        return ()
    return tuple(
        sum(1 for p in partition if p > i) for i in range(partition[0])
    )


def _torsion_exponent(datum):
    factors = quotient_torsion(datum.rank, datum.roots)
    return factors[-1] if factors else 1


def _type_a_orbits(datum, n):
    chain = _chain_order(datum)
    assert len(chain) == n - 1
    exponent = _torsion_exponent(datum)
    dim_g = datum.group_dimension()
    out = []
    for lam in _partitions(n):
        weights = sorted(
            (m - 1 - 2 * k for m in lam for k in range(m)), reverse=True
        )
        diagram = [0] * len(chain)
        for k, pos in enumerate(chain):
            diagram[pos] = weights[k] - weights[k + 1]
        diagram = tuple(diagram)
        m0, m1 = _low_weight_counts(datum, diagram)
        dim = dim_g - m0 - m1
        # The weight count must reproduce the transpose-sum formula; the
        # central torus cancels out of both sides.
        assert dim == n * n - sum(t * t for t in _transpose(lam))
        assert dim % 2 == 0
        out.append(
            NilOrbit(
                label=_label_of(lam),
                partition=tuple(lam),
                weighted_diagram=diagram,
                dim_orbit=dim,
                dim_centralizer=dim_g - dim,
                component_group_order=gcd(exponent, *lam),
            )
        )
    return out


def _low_weight_counts(datum, diagram):
    m0 = datum.rank
    m1 = 0
    for coords in datum.simple_coords:
        w = sum(c * d for c, d in zip(coords, diagram))
        if w == 0:
            m0 += 1
        elif w == 1:
            m1 += 1
    return m0, m1


def weight_spaces(datum, orbit):
    """Multiplicities of the grading weights on the Lie algebra."""
    ws = {0: datum.rank}
    for coords in datum.simple_coords:
        w = sum(c * d for c, d in zip(coords, orbit.weighted_diagram))
        ws[w] = ws.get(w, 0) + 1
    return dict(sorted(ws.items()))


def orbit_dimension(datum, orbit):
    ws = weight_spaces(datum, orbit)
    return datum.group_dimension() - ws[0] - ws.get(1, 0)


# -- rank-two tables ---------------------------------------------------------

_TABLE_PATH = os.path.join(os.path.dirname(__file__), "data", "orbit_tables.txt")


@lru_cache(maxsize=None)
def _orbit_tables(path=None):
    tables = {}
    section = None
    with open(path or _TABLE_PATH, encoding="ascii") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("[") and line.endswith("]"):
                section = line[1:-1]
                tables[section] = []
                continue
            key, _, rest = line.partition("=")
            if key.strip() != "orbit" or section is None:
                raise ValueError(f"malformed orbit table line: {raw.rstrip()}")
            fields = [f.strip() for f in rest.split("|")]
            label, diagram, dim, a_sc, a_ad, pairs = fields
            springer_pairs = []
            for item in pairs.split(","):
                loc, _, char = item.strip().partition(":")
                springer_pairs.append((loc, char))
            tables[section].append(
                {
                    "label": label,
                    "diagram": tuple(int(v) for v in diagram.split()),
                    "dim": int(dim),
                    "a_sc": int(a_sc),
                    "a_ad": int(a_ad),
                    "springer": tuple(springer_pairs),
                }
            )
    return tables


def _canonical_to_datum_order(datum, kind):
    """Map the table's canonical simple order onto the datum's order.

    The tables list C2 diagrams as (short, long) and B2/G2 diagrams as
    (long, short).  A simple root is long exactly when its pairing
    against the other simple coroot is -2 or -3.
    """
    c = _simple_cartan(datum)
    long_first = c[0][1] <= -2
    if kind == "C2":
        swap = long_first
    else:
        swap = not long_first
    if kind in ("B2", "C2"):
        # cartan_type already distinguishes B2 from C2 by presentation
        # order, so the table order must match the datum order.
        assert not swap
    return swap


def _rank2_orbits(datum, kind):
    if not datum.is_semisimple():
        raise ValueError("rank-two orbit tables need a semisimple datum")
    rows = _orbit_tables()[kind]
    swap = _canonical_to_datum_order(datum, kind)
    sc = quotient_torsion(datum.rank, datum.coroots) == ()
    ad = quotient_torsion(datum.rank, datum.roots) == ()
    if not sc and not ad:
        raise ValueError(
            "component groups are tabulated only for the simply connected "
            "and adjoint forms"
        )
    dim_g = datum.group_dimension()
    out = []
    for row in rows:
        diagram = row["diagram"]
        if swap:
            diagram = (diagram[1], diagram[0])
        dim = dim_g - sum(
            1 for v in _root_weights(datum, diagram) if v in (0, 1)
        ) - datum.rank
        assert dim == row["dim"]
        partition = None
        if row["label"].startswith("("):
            partition = tuple(int(p) for p in row["label"][1:-1].split(","))
        out.append(
            NilOrbit(
                label=row["label"],
                partition=partition,
                weighted_diagram=diagram,
                dim_orbit=row["dim"],
                dim_centralizer=dim_g - row["dim"],
                component_group_order=row["a_sc"] if sc else row["a_ad"],
            )
        )
    return out


def _root_weights(datum, diagram):
    for coords in datum.simple_coords:
        yield sum(c * d for c, d in zip(coords, diagram))


# -- closure order -----------------------------------------------------------


def _dominated(mu, lam):
    """mu <= lam in the dominance order on partitions of one number."""
    total_mu = 0
    total_lam = 0
    for i in range(max(len(mu), len(lam))):
        total_mu += mu[i] if i < len(mu) else 0
        total_lam += lam[i] if i < len(lam) else 0
        if total_mu > total_lam:
            return False
    return total_mu == total_lam


def closure_leq(a, b):
    """Whether the orbit a lies in the Zariski closure of b."""
    if a.partition is not None and b.partition is not None:
        if sum(a.partition) != sum(b.partition):
            raise ValueError("orbits belong to different root data")
        return _dominated(a.partition, b.partition)
    if a.partition is None and b.partition is None:
        # The G2 closure order is a chain, so dimension decides.
        return a.dim_orbit <= b.dim_orbit
    raise ValueError("orbits belong to different root data")


# -- Springer correspondence -------------------------------------------------


def springer(datum):
    """The principal block of the Springer correspondence."""
    kind = _orbit_kind(datum)
    if kind[0] == "A":
        pairs = tuple(
            (orb.label, "triv", "chi" + orb.label) for orb in orbits_of(datum)
        )
        return SpringerMap(pairs=pairs)
    rows = {row["label"]: row for row in _orbit_tables()[kind[0]]}
    pairs = []
    for orb in orbits_of(datum):
        for loc, char in rows[orb.label]["springer"]:
            pairs.append((orb.label, loc, char))
    return SpringerMap(pairs=tuple(pairs))


# -- induction from a Levi ---------------------------------------------------


def induced_orbit(datum, levi, orbits_in):
    """Lusztig-Spaltenstein induction from a standard Levi, type A only.

    levi lists the simple positions (datum order) generating the Levi;
    orbits_in gives one partition per diagonal block, blocks read along
    the chain.  Induction adds Jordan strings componentwise.
    """
    kind = _orbit_kind(datum)
    if kind[0] != "A":
        raise ValueError("orbit induction is implemented for type A only")
    n = kind[1]
    chain = _chain_order(datum)
    levi = set(levi)
    if not levi <= set(range(len(chain))):
        raise ValueError("levi positions outside the simple system")
    blocks = []
    size = 1
    for pos in chain:
        if pos in levi:
            size += 1
        else:
            blocks.append(size)
            size = 1
    blocks.append(size)
    if len(orbits_in) != len(blocks):
        raise ValueError(
            f"expected {len(blocks)} partitions for this Levi, got {len(orbits_in)}"
        )
    for lam, c in zip(orbits_in, blocks):
        if sorted(lam, reverse=True) != list(lam) or sum(lam) != c or min(lam) < 1:
            raise ValueError(f"{lam} is not a partition of the block size {c}")
    width = max(len(lam) for lam in orbits_in)
    mu = tuple(
        sum(lam[i] for lam in orbits_in if i < len(lam)) for i in range(width)
    )
    assert sum(mu) == n
    result = next(o for o in orbits_of(datum) if o.partition == mu)
    roots_levi = sum(c * (c - 1) for c in blocks)
    dims_small = sum(
        c * c - sum(t * t for t in _transpose(lam))
        for c, lam in zip(blocks, orbits_in)
    )
    assert result.dim_orbit == n * (n - 1) - roots_levi + dims_small
    return result
