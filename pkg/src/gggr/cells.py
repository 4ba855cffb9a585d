"""Two-sided cells, families, special characters, and the cell-to-orbit map.

Three realizations share one interface.  Symmetric groups get the
Robinson-Schensted model: a two-sided cell is a fiber of the shape map,
its family is the single character labelled by that shape, and every
character is special.  The rank-two dihedral groups get the classical
three-cell partition {e} / middle / {w0} with family membership read
from a bundled table (data/cell_families.txt).  Young subgroups of a
symmetric group get product cells: fibers of the tuple of blockwise
shapes.

Cells are stored as frozensets -- of element indices when the group is
a WeylGroup or one of its reflection subgroups, of permutation tuples
for the standalone symmetric-group model.  The sign-tensor involution
on cells (`dagger`) and the map sending a cell to the nilpotent orbit
of the truncated induction of its special character (`cell_to_orbit`)
are computed, never stored; the bundled table's pairing column is
validated against the computation at load time.
"""

import itertools
import os
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .orbits import orbits_of, springer
from .rootdata import cartan_type
from .weyl import ReflectionSubgroup, WeylGroup, _mn_character

_FAMILY_PATH = os.path.join(os.path.dirname(__file__), "data", "cell_families.txt")


# -- Robinson-Schensted ------------------------------------------------------


def rsk_shape(perm):
    """Shape of the insertion tableau of a permutation of 0..n-1."""
    rows = []
    for value in perm:
        for row in rows:
            j = bisect_left(row, value)
            if j == len(row):
                row.append(value)
                value = None
                break
            row[j], value = value, row[j]
        if value is not None:
            rows.append([value])
    return tuple(len(row) for row in rows)


def _chi_label(shape):
    return "chi(" + ",".join(str(part) for part in shape) + ")"


def _parse_chi(label):
    inner = label[len("chi(") : -1]
    return tuple(int(part) for part in inner.split(","))


def _transpose_chi(label):
    shape = _parse_chi(label)
    out = tuple(sum(1 for part in shape if part > i) for i in range(shape[0]))
    return _chi_label(out)


# -- partitions of groups into cells -----------------------------------------


@dataclass(frozen=True)
class PermutationModel:
    """A symmetric group on 0..n-1 with elements as permutation tuples."""

    n: int
    elements: tuple


def _group_size(group):
    if isinstance(group, WeylGroup):
        return group.order
    if isinstance(group, PermutationModel):
        return len(group.elements)
    return len(group)


@dataclass(frozen=True)
class CellPartition:
    group: object
    cells: tuple
    families: tuple
    specials: tuple

    def __post_init__(self):
        total = sum(len(cell) for cell in self.cells)
        union = set().union(*self.cells) if self.cells else set()
        assert total == len(union) == _group_size(self.group), (
            "cells do not partition the group"
        )
        assert len(self.cells) == len(self.families) == len(self.specials)
        for fam, special in zip(self.families, self.specials):
            assert special in fam, "special character outside its family"

    def cell_index(self, cell):
        try:
            return self.cells.index(cell)
        except ValueError:
            raise ValueError("cell is not in the partition") from None

    def family_of_cell(self, cell):
        return self.families[self.cell_index(cell)]

    def special_of_cell(self, cell):
        return self.specials[self.cell_index(cell)]


@lru_cache(maxsize=None)
def rsk_cells(n):
    """The two-sided cells of the symmetric group on n letters, as
    fibers of the Robinson-Schensted shape map."""
    if not 1 <= n <= 7:
        raise ValueError("symmetric-group cells are enumerated for n <= 7 only")
    elements = tuple(itertools.permutations(range(n)))
    fibers = {}
    for perm in elements:
        fibers.setdefault(rsk_shape(perm), []).append(perm)
    shapes = sorted(fibers, reverse=True)
    return CellPartition(
        group=PermutationModel(n=n, elements=elements),
        cells=tuple(frozenset(fibers[s]) for s in shapes),
        families=tuple(frozenset({_chi_label(s)}) for s in shapes),
        specials=tuple(_chi_label(s) for s in shapes),
    )


@lru_cache(maxsize=None)
def cells_of(w):
    """The two-sided cell partition of a Weyl group, with cells as sets
    of element indices.

    Type A is computed through the Robinson-Schensted model; the
    rank-two dihedral types use the bundled family table.
    """
    ct = cartan_type(w.datum)
    if len(ct) == 0 or (len(ct) == 1 and ct[0][0] == "A"):
        perms = _permutation_table(w)
        fibers = {}
        for x in range(w.order):
            fibers.setdefault(rsk_shape(perms[x]), []).append(x)
        shapes = sorted(fibers, reverse=True)
        return CellPartition(
            group=w,
            cells=tuple(frozenset(fibers[s]) for s in shapes),
            families=tuple(frozenset({_chi_label(s)}) for s in shapes),
            specials=tuple(_chi_label(s) for s in shapes),
        )
    if len(ct) == 1 and ct[0] in (("B", 2), ("C", 2), ("G", 2)):
        kind = "G2" if ct[0][0] == "G" else "BC2"
        return _dihedral_cells(w, kind)
    raise ValueError("unsupported type for two-sided cells")


def _dihedral_cells(w, kind):
    rows = _family_tables()[kind]
    labels = w.character_table().labels
    seen = [lab for members, _, _ in rows for lab in members]
    if sorted(seen) != sorted(labels):
        raise ValueError("family table does not cover the character table")
    for members, _, partner in rows:
        image = {w.tensor_sign_label(lab) for lab in members}
        matches = [r for r in rows if set(r[0]) == image]
        if len(matches) != 1 or matches[0][1] != partner:
            raise ValueError("family table pairing is inconsistent")
    # The longest element is central here (rotation by half a turn), and
    # it is the only nontrivial element commuting with both generators.
    central = [
        x
        for x in range(1, w.order)
        if all(w.mult(x, g) == w.mult(g, x) for g in w.generator_indices)
    ]
    assert len(central) == 1, "dihedral center should be {e, w0}"
    w0 = central[0]
    middle = frozenset(range(w.order)) - {0, w0}
    by_label = {}
    for members, special, _ in rows:
        for lab in members:
            by_label[lab] = (frozenset(members), special)
    order = [by_label[w.trivial_label()], by_label[w.sign_label()]]
    order.insert(1, next(v for v in by_label.values() if v not in order))
    return CellPartition(
        group=w,
        cells=(frozenset({0}), middle, frozenset({w0})),
        families=tuple(fam for fam, _ in order),
        specials=tuple(special for _, special in order),
    )


@lru_cache(maxsize=None)
def _family_tables(path=None):
    tables = {}
    section = None
    with open(path or _FAMILY_PATH, encoding="ascii") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("[") and line.endswith("]"):
                section = line[1:-1]
                tables[section] = []
                continue
            key, _, value = line.partition("=")
            assert key.strip() == "family", line
            members, special, partner = (p.strip() for p in value.split("|"))
            tables[section].append(
                (tuple(m.strip() for m in members.split(",")), special, partner)
            )
    return tables


def young_cell_partition(w, lam):
    """Product cells of a Young subgroup: fibers of the tuple of
    blockwise Robinson-Schensted shapes, one shape per part of lam.
    Families and specials are tuples of per-block character labels."""
    sub = w.young_subgroup(lam)
    perms = _permutation_table(w)
    blocks = _blocks_of(lam)
    fibers = {}
    for x in sub.elements:
        key = _block_shapes(perms[x], blocks)
        fibers.setdefault(key, []).append(x)
    keys = sorted(fibers, reverse=True)
    return CellPartition(
        group=sub,
        cells=tuple(frozenset(fibers[k]) for k in keys),
        families=tuple(
            frozenset({tuple(_chi_label(s) for s in k)}) for k in keys
        ),
        specials=tuple(tuple(_chi_label(s) for s in k) for k in keys),
    )


def _blocks_of(lam):
    blocks = []
    start = 0
    for part in lam:
        blocks.append(tuple(range(start, start + part)))
        start += part
    return tuple(blocks)


def _relative_permutation(perm, block):
    rel = {letter: slot for slot, letter in enumerate(block)}
    assert all(perm[letter] in rel for letter in block), (
        "element does not preserve the blocks"
    )
    return tuple(rel[perm[letter]] for letter in block)


def _block_shapes(perm, blocks):
    return tuple(
        rsk_shape(_relative_permutation(perm, block)) for block in blocks
    )


# -- the sign-tensor involution ----------------------------------------------


def _tensor_sign_label(group, label):
    if isinstance(label, tuple):
        return tuple(_transpose_chi(part) for part in label)
    if isinstance(group, WeylGroup):
        return group.tensor_sign_label(label)
    return _transpose_chi(label)


def dagger(cp, cell):
    """The cell whose family is the sign-tensor of the given cell's."""
    idx = cp.cell_index(cell)
    image = frozenset(
        _tensor_sign_label(cp.group, lab) for lab in cp.families[idx]
    )
    for j, fam in enumerate(cp.families):
        if fam == image:
            return cp.cells[j]
    raise ValueError("image family not found (table inconsistency)")


# -- permutation extraction for type A Weyl groups ---------------------------

_PERM_CACHE = {}


def _permutation_table(w):
    """Element index -> permutation of 0..n-1, computed from the action
    on the simple roots.  Works on any type A root datum: the image of
    a simple root is a signed interval of consecutive simple roots, and
    the interval endpoints chain together into the permutation."""
    cached = _PERM_CACHE.get(w.datum)
    if cached is not None:
        return cached
    ct = cartan_type(w.datum)
    n = 1 if len(ct) == 0 else ct[0][1] + 1
    if n == 1:
        table = ((0,),) * w.order
        _PERM_CACHE[w.datum] = table
        return table
    simples = w.datum.simples
    rank = w.datum.rank
    gram = [[sum(a * b for a, b in zip(u, v)) for v in simples] for u in simples]
    gram_inv = _fraction_inverse(gram)
    table = []
    for x in range(w.order):
        mat = w.elements[x]
        sigma = [None] * n
        for i in range(n - 1):
            img = tuple(
                sum(simples[i][a] * mat[a][b] for a in range(rank))
                for b in range(rank)
            )
            y = [sum(c * d for c, d in zip(img, row)) for row in simples]
            coords = [
                sum(y[k] * gram_inv[k][j] for k in range(n - 1))
                for j in range(n - 1)
            ]
            support = [j for j, c in enumerate(coords) if c != 0]
            lo, hi = support[0], support[-1]
            signs = {coords[j] for j in support}
            assert support == list(range(lo, hi + 1)) and signs in (
                {Fraction(1)},
                {Fraction(-1)},
            ), "image of a simple root is not a signed interval"
            first, second = (
                (lo, hi + 1) if signs == {Fraction(1)} else (hi + 1, lo)
            )
            assert sigma[i] in (None, first), "interval chain is inconsistent"
            sigma[i] = first
            sigma[i + 1] = second
        assert sorted(sigma) == list(range(n))
        table.append(tuple(sigma))
    table = tuple(table)
    _PERM_CACHE[w.datum] = table
    return table


def _fraction_inverse(matrix):
    m = len(matrix)
    aug = [
        [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(m)]
        for i, row in enumerate(matrix)
    ]
    for col in range(m):
        pivot = next(r for r in range(col, m) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col]
        aug[col] = [v / scale for v in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[m:] for row in aug]


# -- cells to nilpotent orbits ------------------------------------------------


def cell_to_orbit(datum, hsub, cell):
    """The nilpotent orbit attached to a cell of a reflection subgroup:
    truncated induction of the cell's special character, then the
    Springer correspondence.  The subgroup may be the whole Weyl group,
    the trivial subgroup, or a Young subgroup of a type A group."""
    if isinstance(hsub, WeylGroup):
        if hsub.datum != datum:
            raise ValueError("subgroup does not belong to the given root datum")
        return _orbit_of_character(datum, cells_of(hsub).special_of_cell(cell))
    if not isinstance(hsub, ReflectionSubgroup) or hsub.parent.datum != datum:
        raise ValueError("subgroup does not belong to the given root datum")
    w = hsub.parent
    if len(hsub) == w.order:
        return _orbit_of_character(datum, cells_of(w).special_of_cell(cell))
    if len(hsub) == 1:
        if cell != frozenset({0}):
            raise ValueError("cell is not in the partition")
        label = _j_induce(w, hsub, {0: Fraction(1)}, 0)
        return _orbit_of_character(datum, label)
    lam = _young_parts(w, hsub)
    cp = young_cell_partition(w, lam)
    shapes = tuple(_parse_chi(part) for part in cp.special_of_cell(cell))
    blocks = _blocks_of(lam)
    perms = _permutation_table(w)
    chi = {
        x: _product_character_value(perms[x], blocks, shapes)
        for x in hsub.elements
    }
    b_sub = sum(i * part for shape in shapes for i, part in enumerate(shape))
    label = _j_induce(w, hsub, chi, b_sub)
    return _orbit_of_character(datum, label)


def _j_induce(w, hsub, chi, b_sub):
    try:
        return w.j_induce(hsub, chi, b_sub=b_sub)
    except ValueError as exc:
        raise ValueError("j-induction not irreducible (data error)") from exc


def _young_parts(w, hsub):
    positions = [
        pos
        for pos, g in enumerate(w.generator_indices)
        if g in hsub.generator_indices
    ]
    ct = cartan_type(w.datum)
    single_a = len(ct) == 0 or (len(ct) == 1 and ct[0][0] == "A")
    if not single_a or len(positions) != len(hsub.generator_indices):
        raise ValueError("only standard Young subgroups are supported")
    n = 1 if len(ct) == 0 else ct[0][1] + 1
    parts = []
    size = 1
    for i in range(n - 1):
        if i in positions:
            size += 1
        else:
            parts.append(size)
            size = 1
    parts.append(size)
    return tuple(parts)


def _product_character_value(perm, blocks, shapes):
    value = Fraction(1)
    for block, shape in zip(blocks, shapes):
        if len(block) == 1:
            continue
        rel = _relative_permutation(perm, block)
        value *= _mn_character(shape, _cycle_type_of(rel))
    return value


def _cycle_type_of(perm):
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        size = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths, reverse=True))


def _orbit_of_character(datum, label):
    orb_label, local = springer(datum).orbit_of(label)
    if local != "triv":
        raise ValueError("Springer label has a nontrivial local system")
    for orb in orbits_of(datum):
        if orb.label == orb_label:
            return orb
    raise AssertionError("Springer table names an unknown orbit")
