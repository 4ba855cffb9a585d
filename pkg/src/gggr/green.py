"""Green functions of the principal block by Lusztig's algorithm.

The pipeline has three stages. `principal_block` lists the orbit and
local-system pairs of the Springer correspondence together with their
dimension data. `build_omega` forms the symmetric matrix of inner
products

    omega_{i,j} = q^(-dim G - (a_i + a_j)/2) * (1/|W|)
                  * sum_w Tr(w, E_i) Tr(w, E_j) |G^F| / |T_w^F|,

a polynomial matrix for the split form. `lusztig_solve` then factors
omega = P^T Lambda P where the rows of P are indexed by the supporting
pair, P is unitriangular with support controlled by closure order, and
Lambda is block diagonal per orbit. The factorization exists and is
unique, so the solver works by plain substitution: starting from the
smallest orbit, each Lambda block is the corresponding omega block
minus the contributions of the already-solved smaller orbits, and each
off-block column of P is recovered from one linear solve against a
known Lambda block.

Everything is exact; entries live in the rational function field of q
and are asserted to be polynomials at the points the theory says they
must be.
"""

from dataclasses import dataclass
from functools import lru_cache

from .orbits import closure_leq, orbits_of, springer
from .qpoly import (
    PolyQ,
    RatFuncQ,
    mat_identity,
    mat_inverse,
    mat_mul,
    mat_transpose,
)
from .weyl import group_order_poly, weyl_group

__all__ = [
    "BlockData",
    "GreenTables",
    "build_omega",
    "green_tables",
    "green_values",
    "group_order_poly",
    "lusztig_solve",
    "p_star",
    "principal_block",
    "torus_order_poly",
]


@dataclass(frozen=True)
class BlockData:
    """Ordered pair data for one block of the generalized Springer
    correspondence (here always the principal block).

    pairs holds (orbit label, local system label) in a linear extension
    of decreasing orbit dimension. a_values and b_values are the usual
    dimension statistics: a = -dim O - z_dim and
    b = dim G - dim O - z_dim, with z_dim the dimension of the centre
    of the Levi carrying the block, so the rank of the datum here.
    springer_chars names the Weyl group character attached to each
    pair, and closure[i][j] says whether the orbit under pair i lies in
    the closure of the orbit under pair j.
    """

    datum: object
    pairs: tuple
    a_values: tuple
    b_values: tuple
    springer_chars: tuple
    closure: tuple
    z_dim: int


@dataclass(frozen=True)
class GreenTables:
    """Solved tables for one block: omega = P^T Lambda P, with the
    inverses that downstream consumers keep asking for."""

    block: BlockData
    omega: tuple
    p: tuple
    lam: tuple
    p_inv: tuple
    omega_inv: tuple


def torus_order_poly(datum, element_index):
    """|T_w^F| as a monic polynomial in q."""
    return weyl_group(datum).torus_order_poly(element_index)


@lru_cache(maxsize=None)
def principal_block(datum):
    orbs = orbits_of(datum)
    by_label = {o.label: o for o in orbs}
    chars = {(o, loc): char for o, loc, char in springer(datum).pairs}
    z_dim = datum.rank
    dim_g = datum.group_dimension()

    keyed = sorted(
        chars,
        key=lambda pair: (-by_label[pair[0]].dim_orbit, pair[0], pair[1]),
    )
    a_values = []
    b_values = []
    w = weyl_group(datum)
    for label, local in keyed:
        dim = by_label[label].dim_orbit
        a_values.append(-dim - z_dim)
        b = dim_g - dim - z_dim
        assert b % 2 == 0, "odd b-value in a principal block"
        b_values.append(b)
        # The character attached to the trivial local system sits in the
        # top cohomology of the Springer fiber, so its b-invariant equals
        # the fiber dimension b/2.  Characters at other local systems sit
        # strictly deeper in the coinvariant algebra.  This cross-checks
        # the stored Springer data against the orbit dimensions.
        b_inv = w.b_invariant(chars[(label, local)])
        if local == "triv":
            assert 2 * b_inv == b, "misplaced Springer character"
        else:
            assert 2 * b_inv > b, "misplaced Springer character"
    closure = tuple(
        tuple(
            closure_leq(by_label[first[0]], by_label[second[0]])
            for second in keyed
        )
        for first in keyed
    )
    return BlockData(
        datum=datum,
        pairs=tuple(keyed),
        a_values=tuple(a_values),
        b_values=tuple(b_values),
        springer_chars=tuple(chars[pair] for pair in keyed),
        closure=closure,
        z_dim=z_dim,
    )


def build_omega(block, table=None):
    """The matrix of pairings between the characteristic functions of
    the block, one character sum per entry."""
    datum = block.datum
    w = weyl_group(datum)
    tab = table if table is not None else w.character_table()
    order_ratio = []
    full_order = group_order_poly(datum)
    for k in range(len(w.class_sizes)):
        order_ratio.append(RatFuncQ.of(full_order, w.char_poly_of_class(k)))
    rows = {label: tab.row(label) for label in set(block.springer_chars)}
    dim_g = datum.group_dimension()

    m = len(block.pairs)
    omega = [[None] * m for _ in range(m)]
    for i in range(m):
        chi_i = rows[block.springer_chars[i]]
        for j in range(i + 1):
            chi_j = rows[block.springer_chars[j]]
            if (block.a_values[i] + block.a_values[j]) % 2:
                raise ValueError("non-integral prefactor exponent in omega")
            shift = -dim_g - (block.a_values[i] + block.a_values[j]) // 2
            total = RatFuncQ.zero()
            for k, size in enumerate(w.class_sizes):
                coeff = chi_i[k] * chi_j[k] * size
                if coeff:
                    total = total + order_ratio[k] * coeff
            total = total / w.order
            if shift >= 0:
                total = total * RatFuncQ.of(PolyQ.monomial(shift))
            else:
                total = total / RatFuncQ.of(PolyQ.monomial(-shift))
            if not total.is_polynomial():
                raise ValueError("omega entry is not a polynomial")
            omega[i][j] = omega[j][i] = total
    return tuple(tuple(row) for row in omega)


def _orbit_runs(block):
    runs = []
    for i, (label, _) in enumerate(block.pairs):
        if runs and block.pairs[runs[-1][0]][0] == label:
            runs[-1].append(i)
        else:
            runs.append([i])
    return runs


def lusztig_solve(omega, block):
    """Factor omega = P^T Lambda P under the support constraints.

    The system is solved bottom-up: the smallest orbit determines its
    Lambda block outright, and every step upward determines first the P
    entries supported on already-finished orbits, then its own Lambda
    block. Uniqueness is a theorem, so every assertion here is a check
    on the input data rather than on the algorithm.
    """
    m = len(block.pairs)
    runs = _orbit_runs(block)
    zero = RatFuncQ.zero()
    p = [[zero] * m for _ in range(m)]
    lam = [[zero] * m for _ in range(m)]
    for i in range(m):
        p[i][i] = RatFuncQ.one()

    def residual(r, c, outside):
        """omega[r][c] minus P[x][r] Lambda[x][y] P[y][c] summed over the
        solved orbits below the run index `outside`."""
        total = omega[r][c]
        for run in runs[outside + 1:]:
            for x in run:
                if p[x][r].is_zero():
                    continue
                for y in run:
                    if not lam[x][y].is_zero() and not p[y][c].is_zero():
                        total = total - p[x][r] * lam[x][y] * p[y][c]
        return total

    for pos in range(len(runs) - 1, -1, -1):
        cols = runs[pos]
        for rpos in range(len(runs) - 1, pos, -1):
            support = runs[rpos]
            rhs = [
                [residual(r, c, rpos) for c in cols]
                for r in support
            ]
            lam_block = [[lam[x][y] for y in support] for x in support]
            try:
                solved = mat_mul(mat_inverse(lam_block), rhs)
            except ValueError:
                raise ValueError(
                    "singular Lambda block at orbit "
                    f"{block.pairs[support[0]][0]}"
                )
            for a, r in enumerate(support):
                for b, c in enumerate(cols):
                    p[r][c] = solved[a][b]
        for r in cols:
            for c in cols:
                lam[r][c] = residual(r, c, pos)

    for i in range(m):
        for j in range(m):
            entry = p[i][j]
            if i != j and (
                block.pairs[i][0] == block.pairs[j][0] or not block.closure[i][j]
            ):
                assert entry.is_zero(), (
                    f"P entry off the closure support: {block.pairs[i]} "
                    f"against {block.pairs[j]}"
                )
            assert entry.is_polynomial(), "non-polynomial P entry"
            poly = entry.as_poly()
            for exponent in range(poly.degree + 1):
                coeff = poly.coefficient(exponent)
                assert coeff.denominator == 1 and coeff >= 0, (
                    "P entry with a negative or fractional coefficient: "
                    f"{poly}"
                )
            assert lam[i][j] == lam[j][i], "asymmetric Lambda block"
            assert lam[i][j].is_polynomial(), "non-polynomial Lambda entry"

    p = tuple(tuple(row) for row in p)
    lam = tuple(tuple(row) for row in lam)
    check = mat_mul(mat_transpose(p), mat_mul(lam, p))
    assert all(
        check[i][j] == omega[i][j] for i in range(m) for j in range(m)
    ), "solve failed to reproduce omega"
    p_inv = tuple(tuple(row) for row in mat_inverse(p))
    omega_inv = tuple(tuple(row) for row in mat_inverse(omega))
    return GreenTables(
        block=block,
        omega=omega,
        p=p,
        lam=lam,
        p_inv=p_inv,
        omega_inv=omega_inv,
    )


@lru_cache(maxsize=None)
def green_tables(datum):
    """Block, omega and solved tables in one call."""
    block = principal_block(datum)
    return lusztig_solve(build_omega(block), block)


def p_star(tables):
    """P with q replaced by 1/q, entrywise, as rational functions."""
    return tuple(
        tuple(entry.subs_qinv() for entry in row) for row in tables.p
    )


def green_values(tables, element_index):
    """Green function values Q_{T_w}(u), one per orbit.

    Needs every component group to be trivial so that the orbit
    indicator functions form a basis dual to the rows of P; that is the
    situation in type A for GL_n and its central quotients.
    """
    block = tables.block
    datum = block.datum
    for orb in orbits_of(datum):
        if orb.component_group_order != 1:
            raise ValueError(
                "nontrivial component group without embedded Y-data"
            )
    w = weyl_group(datum)
    table = w.character_table()
    klass = w.class_of[element_index]
    values = []
    for nu in range(len(block.pairs)):
        total = RatFuncQ.zero()
        for i, char in enumerate(block.springer_chars):
            if tables.p[nu][i].is_zero():
                continue
            weight = RatFuncQ.of(PolyQ.monomial(block.b_values[i] // 2))
            total = total + tables.p[nu][i] * table.row(char)[klass] * weight
        values.append(total.as_poly())
    return tuple(values)
