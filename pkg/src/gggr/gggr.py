"""Decomposition of generalised Gelfand-Graev characters.

The characters handled here are supported on the unipotent classes of a
split reductive group over F_q whose root system is type A, one
character per nilpotent class (Kawanaka's construction).  Three
coordinate systems for unipotently supported class functions share the
ClassFnUni container: coefficients against the Springer basis functions
whose value columns are the columns of the Green matrix P (the
X-basis), coefficients against the class indicator functions (the
Y-basis), and plain pointwise value vectors.  When every component
group is trivial the indicator functions are honest class indicators
and the Y-basis coincides with pointwise values; that is the situation
the conversions guard for, and it always holds for GL_n and its central
quotients with connected centralizers.

gamma_coeffs expands a Gelfand-Graev character in the X-basis by a
finite sum over the block: a q-power shift assembled from orbit
dimensions, the Weyl-group mean of a product of two Springer characters
weighted by torus order polynomials, and one row of the inverted-q
Green matrix.  The two scalar factors that appear for twisted forms or
non-torus blocks are both 1 here, which is why anything else is
rejected.  From the X-coefficients everything downstream is pointwise
arithmetic: unipotent character values through the Green functions,
inner products through exact centralizer orders (Macdonald's formula),
and the multiplicity matrix.

Wave-front and unipotent-support maps compose the cell pipeline with
the sign-tensor involution.  Alvis-Curtis duality acts on unipotent
characters of GL_n by transposing the indexing partition, the same move
dagger makes on families, so the support map reads the undaggered cell
while the wave front reads the daggered one.
"""

from dataclasses import dataclass
from fractions import Fraction

from .cells import (
    _young_parts,
    cell_to_orbit,
    cells_of,
    dagger,
    young_cell_partition,
)
from .green import green_values, green_tables, p_star
from .orbits import orbits_of
from .qpoly import PolyQ, RatFuncQ
from .rootdata import cartan_type
from .weyl import ReflectionSubgroup, WeylGroup, group_order_poly, weyl_group

__all__ = [
    "ClassFnUni",
    "GammaCoeffs",
    "centralizer_order_poly",
    "decomposition_polynomial",
    "gamma_coeffs",
    "multiplicity",
    "to_pointwise",
    "to_x_basis",
    "to_y_basis",
    "unipotent_character_values",
    "unipotent_support",
    "wave_front",
]

_BASES = ("X-basis", "Y-basis", "pointwise")


@dataclass(frozen=True)
class ClassFnUni:
    """A class function seen only on the F-stable unipotent classes.

    values run parallel to the pairs of the principal block, so classes
    appear in decreasing dimension order, the identity class last."""

    values: tuple
    basis: str

    def __post_init__(self):
        assert self.basis in _BASES, "unknown basis tag"


@dataclass(frozen=True)
class GammaCoeffs:
    """X-basis coefficients of one generalised Gelfand-Graev character,
    tagged with the label of the class it is attached to."""

    coeffs: tuple
    source: str


def _type_a_letters(datum):
    """n with W = S_n for a type A datum; everything else is rejected,
    as are the type A isogenies whose centralizers disconnect."""
    ct = cartan_type(datum)
    if len(ct) == 0:
        n = 1
    elif len(ct) == 1 and ct[0][0] == "A":
        n = ct[0][1] + 1
    else:
        raise ValueError("unsupported block: the root system is not type A")
    for orb in orbits_of(datum):
        if orb.component_group_order != 1:
            raise ValueError(
                "unsupported block: a class has a nontrivial component group"
            )
    return n


def _partition_of(mu, n):
    key = tuple(sorted(mu, reverse=True))
    assert key and sum(key) == n and key[-1] > 0, "not a partition of n"
    return key


def _chi_label(shape):
    return "chi(" + ",".join(str(part) for part in shape) + ")"


def _q_power(exponent):
    if exponent >= 0:
        return RatFuncQ.of(PolyQ.monomial(exponent))
    return RatFuncQ.one() / RatFuncQ.of(PolyQ.monomial(-exponent))


def _half(numerator):
    if numerator % 2 != 0:
        raise ValueError("non-integral exponent in the coefficient expansion")
    return numerator // 2


def gamma_coeffs(datum, tables, u_orbit):
    """X-basis expansion of the Gelfand-Graev character of a class.

    The coefficient of the basis function at a target pair sums, over
    the pairs of the block, a power of q read off the dimension data
    times the Weyl-group mean of the product of the source pair's
    Springer character with the sign-tensor partner of the target's,
    weighted by the torus order polynomials, times the entry of the
    inverted-q Green matrix at the row of the class the character is
    attached to.  Powers of q may be negative for large classes; the
    mean is exact rational-polynomial arithmetic throughout.
    """
    block = tables.block
    if block.datum != datum:
        raise ValueError("tables were solved for a different root datum")
    _type_a_letters(datum)
    try:
        source = block.pairs.index((u_orbit.label, "triv"))
    except ValueError:
        raise ValueError("class is not carried by the block") from None

    w = weyl_group(datum)
    table = w.character_table()
    chars = block.springer_chars
    partner = tuple(chars.index(w.tensor_sign_label(c)) for c in chars)
    rows = tuple(table.row(c) for c in chars)
    weights = tuple(
        RatFuncQ.of(w.torus_order_poly(cls[0])) * Fraction(size, w.order)
        for cls, size in zip(w.conjugacy_classes, table.class_sizes)
    )

    def mean(i, j):
        total = RatFuncQ.zero()
        for k, weight in enumerate(weights):
            scale = rows[i][k] * rows[j][k]
            if scale != 0:
                total = total + weight * scale
        return total

    star = p_star(tables)
    dim_g = datum.group_dimension()
    dims = tuple(dim_g - block.z_dim - b for b in block.b_values)
    span = dim_g - block.z_dim

    coeffs = []
    for target in range(len(block.pairs)):
        total = RatFuncQ.zero()
        for i in range(len(block.pairs)):
            if star[source][i].is_zero():
                continue
            shift = _half(span + dims[i] - dims[target] - u_orbit.dim_orbit)
            total = total + (
                _q_power(shift) * mean(i, partner[target]) * star[source][i]
            )
        coeffs.append(total)
    return GammaCoeffs(coeffs=tuple(coeffs), source=u_orbit.label)


# -- basis conversions --------------------------------------------------------


def _indicator_guard(tables):
    for orb in orbits_of(tables.block.datum):
        if orb.component_group_order != 1:
            raise ValueError(
                "nontrivial component group without embedded Y-data"
            )


def _apply(matrix, values):
    return tuple(
        sum(
            (entry * value for entry, value in zip(row, values)),
            RatFuncQ.zero(),
        )
        for row in matrix
    )


def to_pointwise(fn, tables):
    """Values on the unipotent classes, in block order."""
    _indicator_guard(tables)
    if fn.basis == "pointwise":
        return fn
    if fn.basis == "Y-basis":
        return ClassFnUni(values=fn.values, basis="pointwise")
    return ClassFnUni(values=_apply(tables.p, fn.values), basis="pointwise")


def to_x_basis(fn, tables):
    """Coefficients against the Springer basis functions."""
    _indicator_guard(tables)
    if fn.basis == "X-basis":
        return fn
    values = to_pointwise(fn, tables).values
    return ClassFnUni(values=_apply(tables.p_inv, values), basis="X-basis")


def to_y_basis(fn, tables):
    """Coefficients against the class indicator functions."""
    _indicator_guard(tables)
    if fn.basis == "Y-basis":
        return fn
    return ClassFnUni(values=to_pointwise(fn, tables).values, basis="Y-basis")


# -- characters and inner products --------------------------------------------


def unipotent_character_values(datum, lam, tables):
    """Pointwise unipotent character values on the unipotent classes:
    the Weyl-group mean of the Green function columns against the
    symmetric group character of the indexing partition."""
    n = _type_a_letters(datum)
    key = _partition_of(lam, n)
    w = weyl_group(datum)
    table = w.character_table()
    row = table.row(_chi_label(key))
    values = [RatFuncQ.zero()] * len(tables.block.pairs)
    for k, cls in enumerate(w.conjugacy_classes):
        weight = Fraction(table.class_sizes[k], w.order) * row[k]
        if weight == 0:
            continue
        greens = green_values(tables, cls[0])
        for nu in range(len(values)):
            values[nu] = values[nu] + RatFuncQ.of(greens[nu] * weight)
    return ClassFnUni(values=tuple(values), basis="pointwise")


def centralizer_order_poly(datum, mu):
    """|C(u)^F| for a unipotent element of GL_n with Jordan type mu.

    Macdonald's formula: q to the sum of squared transpose parts, with
    one factorial-type factor per part multiplicity.  The identity
    class returns the full group order.
    """
    n = _type_a_letters(datum)
    key = _partition_of(mu, n)
    conj = tuple(sum(1 for part in key if part > i) for i in range(key[0]))
    exponent = sum(c * c for c in conj)
    poly = PolyQ.constant(1)
    mults = {}
    for part in key:
        mults[part] = mults.get(part, 0) + 1
    for m in mults.values():
        exponent -= m * (m + 1) // 2
        for k in range(1, m + 1):
            poly = poly * (PolyQ.monomial(k) - 1)
    return RatFuncQ.of(poly * PolyQ.monomial(exponent))


def _class_of_type(datum, mu, n):
    key = _partition_of(mu, n)
    for orb in orbits_of(datum):
        if orb.partition == key:
            return orb
    raise ValueError("no unipotent class of that Jordan type")


def decomposition_polynomial(datum, mu, lam):
    """The inner product of the Gelfand-Graev character of the class of
    type mu with the unipotent character of lam, symbolically in q.

    For GL_n this is the Kostka-Foulkes polynomial indexed by the
    transpose of lam and by mu (Kawanaka), but it is computed here from
    the X-basis expansion and exact centralizer orders, not from
    tableaux, so the tableau combinatorics stays available as an
    independent check.
    """
    n = _type_a_letters(datum)
    tables = green_tables(datum)
    block = tables.block
    gamma = gamma_coeffs(datum, tables, _class_of_type(datum, mu, n))
    gvals = to_pointwise(
        ClassFnUni(values=gamma.coeffs, basis="X-basis"), tables
    )
    cvals = unipotent_character_values(datum, lam, tables)
    orbs = {orb.label: orb for orb in orbits_of(datum)}
    total = RatFuncQ.zero()
    for nu, (label, _) in enumerate(block.pairs):
        term = gvals.values[nu] * cvals.values[nu]
        if term.is_zero():
            continue
        total = total + term / centralizer_order_poly(
            datum, orbs[label].partition
        )
    assert total.is_polynomial(), "inner product is not a polynomial in q"
    return total


def multiplicity(datum, mu, lam):
    """The count of the unipotent character of lam inside the
    Gelfand-Graev character of the class of type mu, when that count
    does not grow with q.  Entries on or outside the closure of the
    transpose class are of this kind; entries strictly inside grow with
    q (the identity class column is the character degree) and are
    rejected rather than truncated."""
    value = decomposition_polynomial(datum, mu, lam)
    poly = value.as_poly()
    constant = poly.coefficient(0)
    if poly.degree > 0 or constant.denominator != 1 or constant < 0:
        raise ValueError("non-constant or non-integer result")
    return value


# -- wave front and unipotent support ------------------------------------------


def _series_cells(datum, hsub):
    """The cell partition cell_to_orbit reads its cells from, or None
    for the trivial subgroup, whose one cell is its own dagger image."""
    if isinstance(hsub, WeylGroup):
        if hsub.datum != datum:
            raise ValueError("subgroup does not belong to the given root datum")
        return cells_of(hsub)
    if not isinstance(hsub, ReflectionSubgroup) or hsub.parent.datum != datum:
        raise ValueError("subgroup does not belong to the given root datum")
    w = hsub.parent
    if len(hsub) == w.order:
        return cells_of(w)
    if len(hsub) == 1:
        return None
    return young_cell_partition(w, _young_parts(w, hsub))


def wave_front(datum, series):
    """The largest class whose Gelfand-Graev character contains the
    characters of the series: the orbit of the daggered cell."""
    hsub, cell = series
    cp = _series_cells(datum, hsub)
    image = cell if cp is None else dagger(cp, cell)
    return cell_to_orbit(datum, hsub, image)


def unipotent_support(datum, series):
    """The largest class where the characters of the series have
    nonzero average value: the wave front of the Alvis-Curtis dual.
    The dual transposes the indexing, dagger transposes it back, so
    this is the orbit of the cell itself."""
    hsub, cell = series
    return cell_to_orbit(datum, hsub, cell)
