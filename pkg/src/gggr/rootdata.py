"""Root data as pairs of integer lattices with a fixed perfect pairing.

A datum is stored with both the character lattice X and the cocharacter
lattice Y identified with Z^rank, paired by the standard dot product.
Roots live in X, coroots in Y, and the two tuples are kept in matching
order. Everything downstream (prime classification, covers, orbit and
Green function machinery) works through this module, so all arithmetic
here is exact integer linear algebra: Smith and Hermite normal forms,
integer kernels, and integer linear solving.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

__all__ = [
    "RootDatum",
    "PrimeReport",
    "smith_normal_form",
    "quotient_torsion",
    "right_kernel",
    "lattice_saturation",
    "lattice_basis",
    "solve_integer_linear",
    "cartan_type",
    "derived_subdatum",
    "coinduced_datum",
    "simply_connected_cover_datum",
    "classify_prime",
    "proximate_cover",
    "isomorphic",
    "list_catalog",
    "get_datum",
]


# ---------------------------------------------------------------------------
# Integer matrix utilities.


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _as_tuple(m):
    return tuple(tuple(row) for row in m)


def smith_normal_form(matrix):
    """Return (U, D, V) with U*matrix*V = D, U and V unimodular.

    D is diagonal with nonnegative entries d_1 | d_2 | ... ; zero rows
    and columns of D come after the nonzero part.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    a = [list(row) for row in matrix]
    u = _identity(rows)
    v = _identity(cols)

    def row_add(i, j, c):
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def col_add(j, i, c):
        for k in range(rows):
            a[k][j] += c * a[k][i]
        for k in range(cols):
            v[k][j] += c * v[k][i]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for k in range(rows):
            a[k][i], a[k][j] = a[k][j], a[k][i]
        for k in range(cols):
            v[k][i], v[k][j] = v[k][j], v[k][i]

    def smallest_pivot(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(rows, cols):
        pos = smallest_pivot(t)
        if pos is None:
            break
        row_swap(t, pos[0])
        col_swap(t, pos[1])
        while True:
            # Clear the pivot column, then the pivot row, by remainders.
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_add(i, t, -q)
                    if a[i][t] != 0:
                        row_swap(i, t)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_add(j, t, -q)
                    if a[t][j] != 0:
                        col_swap(j, t)
                        dirty = True
            if not dirty:
                break
        # Divisibility: the pivot must divide the rest of the submatrix.
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    row_add(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            t += 1
    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return _as_tuple(u), _as_tuple(a), _as_tuple(v)


def _snf_diagonal(matrix):
    """Just the invariant factors, skipping the transform bookkeeping."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    a = [list(row) for row in matrix]
    diag = []
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        a[t], a[best[0]] = a[best[0]], a[t]
        if best[1] != t:
            for row in a:
                row[t], row[best[1]] = row[best[1]], row[t]
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t] != 0:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j] != 0:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                break
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    a[t] = [x + y for x, y in zip(a[t], a[i])]
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            diag.append(abs(a[t][t]))
            t += 1
    diag.extend(0 for _ in range(min(rows, cols) - len(diag)))
    return tuple(diag)


def quotient_torsion(ambient, generators):
    """Invariant factors > 1 of Z^ambient modulo the row span."""
    if not generators:
        return ()
    diag = _snf_diagonal(generators)
    return tuple(d for d in diag if d > 1)


def hermite_normal_form(generators, ambient):
    """Canonical row-style basis of the lattice spanned by the rows."""
    work = [list(row) for row in generators if any(row)]
    basis = []
    col = 0
    while col < ambient and work:
        live = [r for r in work if r[col] != 0]
        if not live:
            col += 1
            continue
        while True:
            live.sort(key=lambda r: abs(r[col]))
            pivot = live[0]
            done = True
            for r in live[1:]:
                q = r[col] // pivot[col]
                for k in range(ambient):
                    r[k] -= q * pivot[k]
                if r[col] != 0:
                    done = False
            live = [pivot] + [r for r in live[1:] if r[col] != 0]
            if done or len(live) == 1:
                break
        pivot = live[0]
        if pivot[col] < 0:
            pivot[:] = [-x for x in pivot]
        basis.append(pivot)
        work = [r for r in work if r is not pivot and any(r)]
        col += 1
    # Reduce entries above each pivot.
    for i in reversed(range(len(basis))):
        pcol = next(j for j in range(ambient) if basis[i][j] != 0)
        for k in range(i):
            q = basis[k][pcol] // basis[i][pcol]
            if q:
                basis[k] = [x - q * y for x, y in zip(basis[k], basis[i])]
    return _as_tuple(basis)


def lattice_basis(generators, ambient):
    return hermite_normal_form(generators, ambient)


def right_kernel(matrix, ambient=None):
    """Basis (as rows) of {v : matrix . v = 0}."""
    if not matrix:
        if ambient is None:
            raise ValueError("ambient rank required for an empty matrix")
        return _as_tuple(_identity(ambient))
    cols = len(matrix[0])
    _, d, v = smith_normal_form(matrix)
    rank = sum(1 for i in range(min(len(matrix), cols)) if d[i][i] != 0)
    kernel = tuple(tuple(v[i][j] for i in range(cols)) for j in range(rank, cols))
    return hermite_normal_form(kernel, cols) if kernel else ()


def lattice_saturation(generators, ambient):
    """Largest sublattice of Z^ambient with the same rational span."""
    ker = right_kernel(generators, ambient=ambient)
    return right_kernel(ker, ambient=ambient)


def _solve_matrix_int(m, c):
    """Integer solutions of m.x = c: (particular or None, kernel columns as rows)."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0:
        return (), ()
    u, d, v = smith_normal_form(m)
    rank = sum(1 for i in range(min(rows, cols)) if d[i][i] != 0)
    cprime = [sum(u[i][k] * c[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        di = d[i][i] if i < min(rows, cols) else 0
        if di != 0:
            if cprime[i] % di != 0:
                return None, _kernel_cols(v, rank, cols)
            y[i] = cprime[i] // di
        elif cprime[i] != 0:
            return None, _kernel_cols(v, rank, cols)
    x = tuple(sum(v[a][i] * y[i] for i in range(cols)) for a in range(cols))
    return x, _kernel_cols(v, rank, cols)


def _kernel_cols(v, rank, cols):
    return tuple(tuple(v[a][j] for a in range(cols)) for j in range(rank, cols))


def solve_integer_linear(gens, target):
    """Solve x . gens = target over Z: (x or None, kernel basis rows)."""
    if not gens:
        return ((), ()) if not any(target) else (None, ())
    m = tuple(tuple(gens[i][k] for i in range(len(gens))) for k in range(len(gens[0])))
    return _solve_matrix_int(m, target)


def _int_matrix_inverse(m):
    """Inverse of a unimodular integer matrix."""
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        aug[col] = [x / aug[col][col] for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            val = aug[i][n + j]
            if val.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(int(val))
        out.append(row)
    return _as_tuple(out)


def _det(m):
    n = len(m)
    if n == 0:
        return 1
    work = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det *= work[col][col]
        inv = 1 / work[col][col]
        for r in range(col + 1, n):
            if work[r][col] != 0:
                factor = work[r][col] * inv
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return det


# ---------------------------------------------------------------------------
# The datum itself.


@dataclass(frozen=True)
class RootDatum:
    rank: int
    roots: tuple
    coroots: tuple
    simple_indices: tuple
    simple_coords: tuple
    name: str = ""

    @staticmethod
    def pair(x, y):
        return sum(a * b for a, b in zip(x, y))

    @classmethod
    def from_simple_system(cls, simple_roots, simple_coroots, name="", rank=None):
        simple_roots = _as_tuple(simple_roots)
        simple_coroots = _as_tuple(simple_coroots)
        if len(simple_roots) != len(simple_coroots):
            raise ValueError("mismatched numbers of simple roots and coroots")
        if simple_roots:
            inferred = len(simple_roots[0])
            if rank is None:
                rank = inferred
            if rank != inferred or any(len(v) != rank for v in simple_roots + simple_coroots):
                raise ValueError("inconsistent vector lengths")
        elif rank is None:
            raise ValueError("rank required for a torus datum")
        s = len(simple_roots)
        for i in range(s):
            for j in range(s):
                val = cls.pair(simple_roots[i], simple_coroots[j])
                if i == j and val != 2:
                    raise ValueError("simple pairing must be 2 on the diagonal")
                if i != j and val > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
        for mat in (simple_roots, simple_coroots):
            if mat and len(_snf_diagonal(mat)) != sum(1 for d in _snf_diagonal(mat) if d != 0):
                raise ValueError("simple system is linearly dependent")

        # Reflection closure on paired (root, coroot) vectors.
        pairs = {simple_roots[i]: simple_coroots[i] for i in range(s)}
        frontier = list(pairs.items())
        while frontier:
            beta, betav = frontier.pop()
            for i in range(s):
                nb = tuple(
                    b - cls.pair(beta, simple_coroots[i]) * a
                    for b, a in zip(beta, simple_roots[i])
                )
                nbv = tuple(
                    bv - cls.pair(simple_roots[i], betav) * av
                    for bv, av in zip(betav, simple_coroots[i])
                )
                if nb in pairs:
                    if pairs[nb] != nbv:
                        raise ValueError("reflection closure is inconsistent")
                    continue
                pairs[nb] = nbv
                frontier.append((nb, nbv))
                if len(pairs) > 1000:
                    raise ValueError("root system does not close up (not finite type)")
        for beta in pairs:
            if tuple(2 * x for x in beta) in pairs:
                raise ValueError("root system is not reduced")

        # Coordinates in the simple basis; integral, all of one sign.
        coords = {}
        for beta in pairs:
            coords[beta] = _coords_in_basis(simple_roots, beta)
        positives = []
        for beta, c in coords.items():
            if all(x >= 0 for x in c) and any(c):
                positives.append(beta)
            elif not (all(x <= 0 for x in c) and any(c)):
                raise ValueError("root has mixed-sign simple coordinates")
        positives.sort(key=lambda b: (sum(coords[b]), coords[b]))
        ordered = positives + [tuple(-x for x in b) for b in positives]
        roots = tuple(ordered)
        coroots = tuple(
            pairs[b] if b in pairs else tuple(-x for x in pairs[tuple(-y for y in b)])
            for b in roots
        )
        simple_idx = tuple(roots.index(simple_roots[i]) for i in range(s))
        all_coords = tuple(
            coords[b] if b in coords else tuple(-x for x in coords[tuple(-y for y in b)])
            for b in roots
        )
        return cls(
            rank=rank,
            roots=roots,
            coroots=coroots,
            simple_indices=simple_idx,
            simple_coords=all_coords,
            name=name,
        )

    @property
    def simples(self):
        return tuple(self.roots[i] for i in self.simple_indices)

    @property
    def simple_coroots(self):
        return tuple(self.coroots[i] for i in self.simple_indices)

    @property
    def num_positive(self):
        return len(self.roots) // 2

    @property
    def positive_roots(self):
        return self.roots[: self.num_positive]

    @property
    def positive_coroots(self):
        return self.coroots[: self.num_positive]

    def is_semisimple(self):
        return len(self.simple_indices) == self.rank

    def group_dimension(self):
        return self.rank + len(self.roots)

    def coroot_of(self, root):
        return self.coroots[self.roots.index(root)]


def _coords_in_basis(basis, vector):
    """Integer coordinates of vector in the given independent rows."""
    sol, _ = solve_integer_linear(basis, vector)
    if sol is None:
        raise ValueError("vector does not lie in the lattice spanned by the basis")
    return sol


# ---------------------------------------------------------------------------
# Cartan classification.


def _cartan_entries(datum):
    simples = datum.simples
    cosimples = datum.simple_coroots
    s = len(simples)
    return [[datum.pair(simples[i], cosimples[j]) for j in range(s)] for i in range(s)]


def cartan_type(datum):
    """Component labels like (("A", 2), ("B", 2)), sorted."""
    c = _cartan_entries(datum)
    s = len(c)
    seen = [False] * s
    labels = []
    for start in range(s):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(s):
                if not seen[j] and c[i][j] != 0:
                    seen[j] = True
                    comp.append(j)
                    queue.append(j)
        comp.sort()
        labels.append(_classify_component(c, comp))
    return tuple(sorted(labels))


def _classify_component(c, comp):
    n = len(comp)
    edges = {}
    for i in comp:
        for j in comp:
            if i < j and c[i][j] != 0:
                edges[(i, j)] = c[i][j] * c[j][i]
    degrees = {i: sum(1 for e in edges if i in e) for i in comp}
    if n == 1:
        return ("A", 1)
    if any(d > 3 for d in degrees.values()) or len(edges) != n - 1:
        raise ValueError("not a finite-type Cartan matrix")
    multiplicities = sorted(edges.values())
    branch = [i for i in comp if degrees[i] == 3]
    if multiplicities[-1] == 1:
        if not branch:
            return ("A", n)
        if len(branch) > 1:
            raise ValueError("not a finite-type Cartan matrix")
        arms = sorted(_arm_lengths(edges, comp, branch[0]))
        if arms[0] == 1 and arms[1] == 1:
            return ("D", n)
        if arms == [1, 2, 2]:
            return ("E", 6)
        if arms == [1, 2, 3]:
            return ("E", 7)
        if arms == [1, 2, 4]:
            return ("E", 8)
        raise ValueError("not a finite-type Cartan matrix")
    if branch:
        raise ValueError("not a finite-type Cartan matrix")
    if multiplicities[-1] == 3:
        if n != 2:
            raise ValueError("not a finite-type Cartan matrix")
        return ("G", 2)
    if multiplicities.count(2) != 1:
        raise ValueError("not a finite-type Cartan matrix")
    (di, dj) = next(e for e, m in edges.items() if m == 2)
    ends = [i for i in comp if degrees[i] == 1]
    if n == 2:
        # Presentation order decides: long root first is B, short first C.
        first, second = comp
        long_first = c[first][second] == -2
        return ("B", 2) if long_first else ("C", 2)
    if di in ends or dj in ends:
        end = di if di in ends else dj
        other = dj if end == di else di
        # c[end][other] = -2 means the end node is long, so type C.
        return ("C", n) if c[end][other] == -2 else ("B", n)
    if n == 4:
        return ("F", 4)
    raise ValueError("not a finite-type Cartan matrix")


def _arm_lengths(edges, comp, center):
    adj = {i: [] for i in comp}
    for (i, j) in edges:
        adj[i].append(j)
        adj[j].append(i)
    lengths = []
    for start in adj[center]:
        length = 1
        prev, cur = center, start
        while True:
            nxt = [k for k in adj[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return lengths


# ---------------------------------------------------------------------------
# Derived datum, coinduction, covers.


def derived_subdatum(datum):
    """Quotient X by the coroot-perp; the semisimple part of the datum."""
    sat = lattice_saturation(datum.coroots, datum.rank)
    s = len(sat)
    if s == 0:
        return RootDatum.from_simple_system((), (), rank=0, name=_derive_name(datum))
    new_simples = tuple(
        tuple(RootDatum.pair(alpha, sat[j]) for j in range(s)) for alpha in datum.simples
    )
    new_cosimples = tuple(
        _coords_in_basis(sat, alphav) for alphav in datum.simple_coroots
    )
    out = RootDatum.from_simple_system(new_simples, new_cosimples, name=_derive_name(datum))
    if len(out.roots) != len(datum.roots):
        raise AssertionError("derived datum lost roots")
    return out


def _derive_name(datum):
    return f"derived({datum.name})" if datum.name else ""


def coinduced_datum(datum, lattice_generators):
    """Transport the datum to a sublattice B of Y containing the coroots.

    The new cocharacter lattice is B with its own basis; the new
    character lattice is the dual of B, into which X maps by restricting
    characters along the inclusion.
    """
    basis = lattice_basis(lattice_generators, ambient=datum.rank)
    b = len(basis)
    for alphav in datum.coroots:
        sol, _ = solve_integer_linear(basis, alphav)
        if sol is None:
            raise ValueError("lattice does not contain the coroots")
    if not datum.simple_indices:
        return RootDatum.from_simple_system((), (), rank=b, name=_coind_name(datum))
    new_simples = tuple(
        tuple(RootDatum.pair(alpha, basis[j]) for j in range(b))
        for alpha in datum.simples
    )
    new_cosimples = tuple(
        _coords_in_basis(basis, alphav) for alphav in datum.simple_coroots
    )
    out = RootDatum.from_simple_system(new_simples, new_cosimples, name=_coind_name(datum))
    if len(out.roots) != len(datum.roots):
        raise AssertionError("coinduced datum lost roots")
    return out


def _coind_name(datum):
    return f"coinduced({datum.name})" if datum.name else ""


def simply_connected_cover_datum(datum):
    """Put the simple coroots on a standard basis of their own lattice."""
    s = len(datum.simple_indices)
    if s == 0:
        return RootDatum.from_simple_system((), (), rank=0, name=_sc_name(datum))
    cosimples = datum.simple_coroots
    new_simples = tuple(
        tuple(RootDatum.pair(alpha, cosimples[i]) for i in range(s))
        for alpha in datum.simples
    )
    new_cosimples = _as_tuple(_identity(s))
    return RootDatum.from_simple_system(new_simples, new_cosimples, name=_sc_name(datum))


def _sc_name(datum):
    return f"sc({datum.name})" if datum.name else ""


# ---------------------------------------------------------------------------
# Prime classification.


@dataclass(frozen=True)
class PrimeReport:
    datum: str
    p: int
    good: bool
    very_good: bool
    pretty_good: bool
    proximate: bool
    acceptable: str  # "yes" | "no" | "unknown"


_BAD_PRIMES = {
    "A": frozenset(),
    "B": frozenset({2}),
    "C": frozenset({2}),
    "D": frozenset({2}),
    "G": frozenset({2, 3}),
    "F": frozenset({2, 3}),
    "E": frozenset({2, 3}),
}


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _bad_primes(datum):
    bad = set()
    for letter, n in cartan_type(datum):
        bad |= _BAD_PRIMES[letter]
        if letter == "E" and n == 8:
            bad.add(5)
    return bad


_SUBSET_TORSION_CACHE = {}


def _subset_torsion_primes(datum):
    """Primes dividing the torsion of X/ZPsi or Y/ZPsi-vee, any subset Psi.

    Negating a root does not change its span, so subsets of the positive
    roots see every possible span.
    """
    key = (datum.rank, datum.roots, datum.coroots)
    if key in _SUBSET_TORSION_CACHE:
        return _SUBSET_TORSION_CACHE[key]
    primes = set()
    for side in (datum.positive_roots, datum.positive_coroots):
        m = len(side)
        for mask in range(1, 1 << m):
            subset = [side[i] for i in range(m) if mask & (1 << i)]
            for t in quotient_torsion(datum.rank, subset):
                d = 2
                while d * d <= t:
                    if t % d == 0:
                        primes.add(d)
                        while t % d == 0:
                            t //= d
                    d += 1
                if t > 1:
                    primes.add(t)
    _SUBSET_TORSION_CACHE[key] = frozenset(primes)
    return _SUBSET_TORSION_CACHE[key]


def _standard_gl(n):
    simples = tuple(
        tuple(1 if j == i else (-1 if j == i + 1 else 0) for j in range(n))
        for i in range(n - 1)
    )
    return RootDatum.from_simple_system(simples, simples, rank=n, name=f"GL{n}")


def _is_gl_shaped(datum):
    ct = cartan_type(datum)
    if len(ct) > 1:
        return False
    if not ct:
        n = 1
    else:
        letter, m = ct[0]
        if letter != "A":
            return False
        n = m + 1
    if datum.rank != n:
        return False
    if quotient_torsion(datum.rank, datum.roots) or quotient_torsion(
        datum.rank, datum.coroots
    ):
        return False
    return isomorphic(datum, _standard_gl(n))


def classify_prime(datum, p):
    if not _is_prime(p):
        raise ValueError(f"{p} is not a prime")
    proximate = all(t % p != 0 for t in quotient_torsion(datum.rank, datum.coroots))
    good = p not in _bad_primes(datum)
    very_good = good and all(
        not (letter == "A" and p != 0 and (n + 1) % p == 0)
        for letter, n in cartan_type(datum)
    )
    pretty_good = p not in _subset_torsion_primes(datum)
    if very_good or _is_gl_shaped(datum):
        acceptable = "yes"
    elif not pretty_good:
        acceptable = "no"
    else:
        acceptable = "unknown"
    return PrimeReport(
        datum=datum.name,
        p=p,
        good=good,
        very_good=very_good,
        pretty_good=pretty_good,
        proximate=proximate,
        acceptable=acceptable,
    )


def proximate_cover(datum, p):
    """Smallest cover of the datum that is proximate at p.

    Already-proximate data come back unchanged with the identity
    inclusion. For semisimple data the cover replaces Y by the preimage
    of the prime-to-p part of Y / Z Phi-vee, which is the unique
    smallest admissible lattice. With a central torus and p-torsion
    present there is no smallest choice, so that case is an error.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not a prime")
    torsion = quotient_torsion(datum.rank, datum.coroots)
    if all(t % p != 0 for t in torsion):
        return datum, _as_tuple(_identity(datum.rank))
    if not datum.is_semisimple():
        raise ValueError(
            "no smallest proximate cover: the datum has a central torus "
            "and p-torsion in the cocharacter quotient"
        )
    cosimples = datum.simple_coroots
    _, d, v = smith_normal_form(cosimples)
    vinv = _int_matrix_inverse(v)
    rows = []
    for i in range(datum.rank):
        di = d[i][i]
        power = 1
        while di % p == 0:
            di //= p
            power *= p
        rows.append(tuple(power * x for x in vinv[i]))
    inclusion = lattice_basis(rows, ambient=datum.rank)
    cover = coinduced_datum(datum, inclusion)
    if any(t % p == 0 for t in quotient_torsion(cover.rank, cover.coroots)):
        raise AssertionError("constructed cover is not proximate")
    return cover, inclusion


# ---------------------------------------------------------------------------
# Isomorphism testing.


def isomorphic(d1, d2):
    """Is there a unimodular map X1 -> X2 matching roots and coroots?"""
    if d1.rank != d2.rank or len(d1.roots) != len(d2.roots):
        return False
    # B2 and C2 label the same abstract system (presentation order picks
    # the letter), so fold them together before comparing.
    def fold(ct):
        return tuple(sorted(("C", 2) if t == ("B", 2) else t for t in ct))

    if fold(cartan_type(d1)) != fold(cartan_type(d2)):
        return False
    for a, b in (
        (d1.roots, d2.roots),
        (d1.coroots, d2.coroots),
    ):
        ta = quotient_torsion(d1.rank, a) if a else ()
        tb = quotient_torsion(d2.rank, b) if b else ()
        if ta != tb:
            return False
    if not d1.roots:
        return True
    simples1 = d1.simples
    cosimples1 = d1.simple_coroots
    s = len(simples1)
    cartan1 = [
        [RootDatum.pair(simples1[i], cosimples1[j]) for j in range(s)] for i in range(s)
    ]
    candidates = list(zip(d2.roots, d2.coroots))

    def extend(chosen):
        if len(chosen) == s:
            return _try_linear_map(d1, d2, chosen)
        i = len(chosen)
        for beta, betav in candidates:
            if any(beta == c[0] for c in chosen):
                continue
            ok = True
            for j, (gamma, gammav) in enumerate(chosen):
                if RootDatum.pair(beta, gammav) != cartan1[i][j]:
                    ok = False
                    break
                if RootDatum.pair(gamma, betav) != cartan1[j][i]:
                    ok = False
                    break
            if ok and RootDatum.pair(beta, betav) == 2:
                if extend(chosen + [(beta, betav)]):
                    return True
        return False

    return extend([])


def _try_linear_map(d1, d2, images):
    """Solve for unimodular g with alpha_i g = beta_i, g beta_i-vee^T = alpha_i-vee^T."""
    r = d1.rank
    simples1 = d1.simples
    cosimples1 = d1.simple_coroots
    s = len(simples1)
    nvars = r * r
    rows = []
    rhs = []
    for i in range(s):
        alpha = simples1[i]
        beta = images[i][0]
        for b in range(r):
            row = [0] * nvars
            for a in range(r):
                row[a * r + b] = alpha[a]
            rows.append(row)
            rhs.append(beta[b])
    for i in range(s):
        alphav = cosimples1[i]
        betav = images[i][1]
        for a in range(r):
            row = [0] * nvars
            for b in range(r):
                row[a * r + b] = betav[b]
            rows.append(row)
            rhs.append(alphav[a])
    particular, kernel = _solve_matrix_int(_as_tuple(rows), tuple(rhs))
    if particular is None:
        return False
    k = len(kernel)
    if k == 0:
        g = _unflatten(particular, r)
        return abs(_det(g)) == 1
    if k > 6:
        return False
    bound = 3 if k <= 3 else 1
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=k):
        vec = list(particular)
        for c, basis_vec in zip(coeffs, kernel):
            if c:
                vec = [x + c * y for x, y in zip(vec, basis_vec)]
        g = _unflatten(vec, r)
        if abs(_det(g)) == 1:
            return True
    return False


def _unflatten(vec, r):
    return tuple(tuple(vec[a * r + b] for b in range(r)) for a in range(r))


# ---------------------------------------------------------------------------
# Catalog.


_CATALOG_CACHE = {}


def _catalog_path(path=None):
    if path is not None:
        return os.fspath(path)
    env = os.environ.get("GGGR_CATALOG")
    if env:
        return env
    return str(resources.files("gggr").joinpath("data/catalog.txt"))


def _parse_vectors(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(
        tuple(int(tok) for tok in chunk.split()) for chunk in text.split(";")
    )


def _load_catalog(path):
    entries = {}
    current = None
    fields = {}
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("[") and line.endswith("]"):
                if current is not None:
                    entries[current] = fields
                current = line[1:-1].strip()
                fields = {}
            else:
                if current is None or "=" not in line:
                    raise ValueError(f"malformed catalog line: {raw!r}")
                key, _, value = line.partition("=")
                fields[key.strip()] = value.strip()
    if current is not None:
        entries[current] = fields
    data = {}
    for name, f in entries.items():
        rank = int(f["rank"])
        roots = _parse_vectors(f.get("simple_roots", ""))
        coroots = _parse_vectors(f.get("simple_coroots", ""))
        data[name] = RootDatum.from_simple_system(roots, coroots, rank=rank, name=name)
    return data


def _catalog(path=None):
    resolved = _catalog_path(path)
    if resolved not in _CATALOG_CACHE:
        _CATALOG_CACHE[resolved] = _load_catalog(resolved)
    return _CATALOG_CACHE[resolved]


def list_catalog(path=None):
    return tuple(sorted(_catalog(path)))


def get_datum(name, path=None):
    catalog = _catalog(path)
    if name not in catalog:
        raise KeyError(
            f"unknown catalog datum {name!r}; available: {', '.join(sorted(catalog))}"
        )
    return catalog[name]
