"""Weyl groups with exact character tables and invariant theory.

Groups are generated as integer matrices acting on the character
lattice. Character tables are computed by the class-algebra eigenvector
method, entirely over rationals: class-sum matrices commute, and their
simultaneous eigenspaces, found by iterated splitting with integer
eigenvalues, are the columns of the table. Weyl group characters are
integer valued, which the code asserts rather than assumes silently.

Fake degrees come from Molien series over the span of the coroots, and
truncated (lowest fake degree preserving) induction from reflection
subgroups is built on top of plain induced characters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .qpoly import ONE, Q, ZERO, PolyQ, RatFuncQ
from .rootdata import _int_matrix_inverse

__all__ = [
    "WeylGroup",
    "CharacterTable",
    "ReflectionSubgroup",
    "weyl_group",
    "group_order_poly",
]


def _mat_mul_int(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _poly_det(matrix):
    """Determinant of a small matrix of PolyQ by cofactor expansion."""
    n = len(matrix)
    if n == 0:
        return ONE
    if n == 1:
        return matrix[0][0]
    total = ZERO
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = entry * _poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _char_poly_matrix(m):
    """det(q I - m) for an integer matrix."""
    n = len(m)
    entries = [
        [
            (Q if i == j else ZERO) - PolyQ.constant(m[i][j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(entries)


def _det_one_minus_q(m):
    """det(I - q m) for an integer matrix."""
    n = len(m)
    entries = [
        [
            (ONE if i == j else ZERO) - Q * PolyQ.constant(m[i][j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(entries)


def _int_det(m):
    n = len(m)
    work = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = -det
        det *= work[col][col]
        inv = 1 / work[col][col]
        for r in range(col + 1, n):
            if work[r][col]:
                f = work[r][col] * inv
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    assert det.denominator == 1
    return int(det)


# ---------------------------------------------------------------------------
# Class-algebra character table machinery (works for any small group
# presented as indices with a multiplication map).


def _conjugacy_classes(n_elements, mult, inv, generators):
    seen = [False] * n_elements
    classes = []
    for start in range(n_elements):
        if seen[start]:
            continue
        orbit = {start}
        queue = [start]
        seen[start] = True
        while queue:
            x = queue.pop()
            for g in generators:
                y = mult(mult(g, x), inv(g))
                if y not in orbit:
                    orbit.add(y)
                    seen[y] = True
                    queue.append(y)
        classes.append(tuple(sorted(orbit)))
    return classes


def _character_rows(classes, class_of, mult, inv, order):
    """All irreducible character values, one row per character.

    Burnside's class-sum relations make the vectors
    (|C_k| chi(g_k) / chi(1))_k simultaneous eigenvectors of the
    structure-constant matrices; split eigenspaces until everything is
    one dimensional, then renormalize.
    """
    c = len(classes)
    reps = [cls[0] for cls in classes]
    sizes = [len(cls) for cls in classes]
    inv_class = [class_of[inv(reps[k])] for k in range(c)]

    def structure_matrix(i):
        m = [[0] * c for _ in range(c)]
        for k in range(c):
            z = reps[k]
            for x in classes[i]:
                j = class_of[mult(inv(x), z)]
                m[j][k] += 1
        return m

    # Subspaces are lists of basis vectors (rows of rational numbers).
    subspaces = [[tuple(Fraction(int(i == j)) for j in range(c)) for i in range(c)]]
    for i in range(1, c):
        if all(len(s) == 1 for s in subspaces):
            break
        mat = structure_matrix(i)
        new_subspaces = []
        for basis in subspaces:
            if len(basis) == 1:
                new_subspaces.append(basis)
                continue
            new_subspaces.extend(_split_eigenspaces(mat, basis))
        subspaces = new_subspaces
    if any(len(s) != 1 for s in subspaces):
        raise AssertionError("class algebra failed to split into lines")

    rows = []
    for (vec,) in subspaces:
        if vec[0] == 0:
            raise AssertionError("eigenvector vanishes on the identity class")
        omega = [v / vec[0] for v in vec]
        denom = sum(omega[k] * omega[inv_class[k]] / sizes[k] for k in range(c))
        dim_sq = Fraction(order) / denom
        assert dim_sq.denominator == 1 and dim_sq > 0
        dim = _exact_isqrt(int(dim_sq))
        values = []
        for k in range(c):
            val = omega[k] * dim / sizes[k]
            assert val.denominator == 1, "non-integral character value"
            values.append(int(val))
        rows.append(tuple(values))
    rows.sort(key=lambda r: (r[0], [-x for x in r]))
    assert sum(r[0] ** 2 for r in rows) == order
    return tuple(rows)


def _exact_isqrt(n):
    r = int(n**0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    if r * r != n:
        raise AssertionError(f"{n} is not a perfect square")
    return r


def _split_eigenspaces(mat, basis):
    """Split span(basis) into eigenspaces of mat (acting on columns)."""
    d = len(basis)
    c = len(basis[0])
    # Matrix of the restricted action: mat . basis[t] = sum_s R[s][t] basis[s].
    images = []
    for vec in basis:
        img = tuple(
            sum(Fraction(mat[j][k]) * vec[k] for k in range(c)) for j in range(c)
        )
        images.append(img)
    coords = [_solve_in_span(basis, img) for img in images]
    r = [[coords[t][s] for t in range(d)] for s in range(d)]
    charpoly = _char_poly_matrix_fractions(r)
    roots = _integer_roots(charpoly)
    # One subspace per eigenvalue; repeated eigenvalues stay together and
    # are split by a later class-sum matrix.
    out = []
    found = 0
    for root in roots:
        shifted = [
            [r[i][j] - (root if i == j else 0) for j in range(d)] for i in range(d)
        ]
        null = _nullspace(shifted)
        if null:
            vecs = [
                tuple(
                    sum(coeffs[t] * basis[t][k] for t in range(d))
                    for k in range(c)
                )
                for coeffs in null
            ]
            out.append(vecs)
            found += len(vecs)
    assert found == d, "class-sum matrix is not diagonalizable over the rationals"
    return out


def _char_poly_matrix_fractions(m):
    n = len(m)
    entries = [
        [
            (Q if i == j else ZERO) - PolyQ.constant(m[i][j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(entries)


def _integer_roots(poly):
    coeffs = list(poly.coeffs)
    assert all(Fraction(x).denominator == 1 for x in coeffs), coeffs
    roots = []
    shift = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.append(0)
    if not coeffs or len(coeffs) == 1:
        return roots
    constant = int(coeffs[0])
    for cand in _divisors_signed(constant):
        val = 0
        for c in reversed(coeffs):
            val = val * cand + c
        if val == 0:
            roots.append(cand)
    return sorted(set(roots))


def _divisors_signed(n):
    n = abs(int(n))
    divs = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            divs.update((d, -d, n // d, -(n // d)))
        d += 1
    return sorted(divs)


def _solve_in_span(basis, target):
    """Coordinates of target in span(basis); basis rows independent."""
    d = len(basis)
    c = len(target)
    aug = [[basis[t][k] for t in range(d)] + [target[k]] for k in range(c)]
    coords = [Fraction(0)] * d
    row = 0
    pivots = []
    for col in range(d):
        piv = next((r for r in range(row, c) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        scale = aug[row][col]
        aug[row] = [x / scale for x in aug[row]]
        for r in range(c):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, c):
        if aug[r][d] != 0:
            raise AssertionError("vector not in span")
    for r, col in enumerate(pivots):
        coords[col] = aug[r][d]
    return coords


def _nullspace(m):
    """Basis of the right nullspace of a square rational matrix."""
    n = len(m)
    work = [[Fraction(x) for x in row] for row in m]
    pivots = {}
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        scale = work[row][col]
        work[row] = [x / scale for x in work[row]]
        for r in range(n):
            if r != row and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[row])]
        pivots[col] = row
        row += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for col, r in pivots.items():
            vec[col] = -work[r][fc]
        basis.append(tuple(vec))
    return basis


# ---------------------------------------------------------------------------
# The Weyl group of a root datum.


@dataclass(frozen=True)
class CharacterTable:
    labels: tuple
    values: tuple  # rows parallel to labels, columns parallel to classes
    class_labels: tuple
    class_sizes: tuple
    order: int

    def inner_product(self, v1, v2):
        total = sum(
            Fraction(size) * a * b
            for size, a, b in zip(self.class_sizes, v1, v2)
        )
        val = total / self.order
        return val

    def row(self, label):
        return self.values[self.labels.index(label)]


class WeylGroup:
    def __init__(self, datum, max_order=2000):
        self.datum = datum
        rank = datum.rank
        gens = [self._reflection(i) for i in range(len(datum.simple_indices))]
        elements = [_identity(rank)]
        index = {elements[0]: 0}
        frontier = [elements[0]]
        while frontier:
            new_frontier = []
            for m in frontier:
                for g in gens:
                    prod = _mat_mul_int(m, g)
                    if prod not in index:
                        index[prod] = len(elements)
                        elements.append(prod)
                        new_frontier.append(prod)
                        if len(elements) > max_order:
                            raise ValueError("Weyl group exceeds the order bound")
            frontier = new_frontier
        self.elements = tuple(elements)
        self._index = index
        self.order = len(elements)
        self.generator_indices = tuple(index[g] for g in gens) if gens else ()
        self._inverses = tuple(
            index[_int_matrix_inverse(m)] if rank else 0 for m in elements
        ) if rank else tuple(0 for _ in elements)
        self._mult_cache = {}
        self._build_classes()
        self._table = None
        self._fake = None
        self._degrees_u = None

    # -- basic group operations ------------------------------------------

    def _reflection(self, simple_pos):
        alpha = self.datum.simples[simple_pos]
        alphav = self.datum.simple_coroots[simple_pos]
        r = self.datum.rank
        return tuple(
            tuple((1 if a == b else 0) - alphav[a] * alpha[b] for b in range(r))
            for a in range(r)
        )

    def reflection_matrix(self, simple_pos):
        return self._reflection(simple_pos)

    def mult(self, i, j):
        key = (i, j)
        out = self._mult_cache.get(key)
        if out is None:
            out = self._index[_mat_mul_int(self.elements[i], self.elements[j])]
            self._mult_cache[key] = out
        return out

    def inverse(self, i):
        return self._inverses[i]

    def det_of(self, i):
        return _int_det(self.elements[i])

    # -- conjugacy classes -------------------------------------------------

    def _build_classes(self):
        gens = self.generator_indices or (0,)
        classes = _conjugacy_classes(
            self.order, self.mult, self.inverse, gens
        )
        keyed = []
        for cls in classes:
            rep = cls[0]
            if rep == 0:
                key = (0, "", ())
            else:
                key = (len(cls), str(self.char_poly(rep)), self.elements[cls[0]])
            keyed.append((key, cls))
        keyed.sort(key=lambda kc: kc[0])
        self.conjugacy_classes = tuple(cls for _, cls in keyed)
        self.class_sizes = tuple(len(cls) for cls in self.conjugacy_classes)
        class_of = [0] * self.order
        for k, cls in enumerate(self.conjugacy_classes):
            for x in cls:
                class_of[x] = k
        self.class_of = tuple(class_of)
        self.class_labels = self._label_classes()

    def char_poly(self, element_index):
        return _char_poly_matrix(self.elements[element_index])

    def char_poly_of_class(self, class_index):
        return self.char_poly(self.conjugacy_classes[class_index][0])

    def torus_order_poly(self, element_index):
        # The action on Y is the inverse transpose; finite order makes
        # the characteristic polynomial the same on both lattices.
        return self.char_poly(element_index)

    @property
    def reflection_rank(self):
        return len(self.datum.simple_indices)

    def _is_single_type_a(self):
        from .rootdata import cartan_type

        ct = cartan_type(self.datum)
        if len(ct) == 0:
            return 1
        if len(ct) == 1 and ct[0][0] == "A":
            return ct[0][1] + 1
        return None

    def _rank2_kind(self):
        from .rootdata import cartan_type

        ct = cartan_type(self.datum)
        if len(ct) != 1:
            return None
        if ct[0] in (("B", 2), ("C", 2)):
            return "BC2"
        if ct[0] == ("G", 2):
            return "G2"
        return None

    def _label_classes(self):
        n = self._is_single_type_a()
        if n is not None:
            labels = []
            for k in range(len(self.conjugacy_classes)):
                cycles = self._cycle_type(k, n)
                labels.append(f"cyc({','.join(map(str, cycles))})")
            assert len(set(labels)) == len(labels)
            return tuple(labels)
        if self._rank2_kind() is not None:
            return self._label_classes_rank2()
        return tuple(f"c{k}" for k in range(len(self.conjugacy_classes)))

    def _cycle_type(self, class_index, n):
        rank = self.datum.rank
        s = self.reflection_rank
        poly = self.char_poly_of_class(class_index)
        # Strip the fixed central directions, then add one (q - 1) back:
        # the standard n-point permutation action.
        for _ in range(rank - s):
            poly, rem = divmod(poly, Q - 1)
            assert rem.is_zero()
        poly = poly * (Q - 1)
        parts = _cycle_type_from_poly(poly, n)
        if parts is None:
            raise AssertionError("characteristic polynomial is not a cycle product")
        return parts

    def _label_classes_rank2(self):
        kind = self._rank2_kind()
        long_simple, short_simple = self._long_short_simples()
        labels = [None] * len(self.conjugacy_classes)
        long_refl = self._index[self._reflection(long_simple)]
        short_refl = self._index[self._reflection(short_simple)]
        cox = self.mult(long_refl, short_refl)
        for k, cls in enumerate(self.conjugacy_classes):
            rep = cls[0]
            if rep == 0:
                labels[k] = "e"
            elif long_refl in cls:
                labels[k] = "s_long"
            elif short_refl in cls:
                labels[k] = "s_short"
        cox_class = self.class_of[cox]
        if kind == "BC2":
            labels[cox_class] = "rot4"
            w0 = self.mult(cox, cox)
            labels[self.class_of[w0]] = "w0"
        else:
            labels[cox_class] = "rot6"
            rot3 = self.mult(cox, cox)
            labels[self.class_of[rot3]] = "rot3"
            w0 = self.mult(rot3, cox)
            labels[self.class_of[w0]] = "w0"
        assert all(lab is not None for lab in labels)
        return tuple(labels)

    def _long_short_simples(self):
        simples = self.datum.simples
        cosimples = self.datum.simple_coroots
        pair = self.datum.pair
        # pair(alpha_i, alphav_j) in {-2, -3} marks alpha_i as the long one.
        if pair(simples[0], cosimples[1]) <= -2:
            return 0, 1
        return 1, 0

    # -- character table ----------------------------------------------------

    def character_table(self):
        if self._table is None:
            rows = _character_rows(
                self.conjugacy_classes,
                self.class_of,
                self.mult,
                self.inverse,
                self.order,
            )
            labels = self._label_rows(rows)
            self._table = CharacterTable(
                labels=labels,
                values=rows,
                class_labels=self.class_labels,
                class_sizes=self.class_sizes,
                order=self.order,
            )
        return self._table

    def _label_rows(self, rows):
        n = self._is_single_type_a()
        if n is not None:
            return self._label_rows_type_a(rows, n)
        if self._rank2_kind() is not None:
            return self._label_rows_rank2(rows)
        return tuple(f"chi{i}" for i in range(len(rows)))

    def _label_rows_type_a(self, rows, n):
        cycle_types = []
        for k in range(len(self.conjugacy_classes)):
            lab = self.class_labels[k]
            cycle_types.append(tuple(int(x) for x in lab[4:-1].split(",")))
        wanted = {}
        for lam in _partitions(n):
            vec = tuple(_mn_character(lam, rho) for rho in cycle_types)
            wanted[vec] = f"chi({','.join(map(str, lam))})"
        labels = []
        for row in rows:
            if row not in wanted:
                raise AssertionError(
                    "character table row does not match any symmetric group character"
                )
            labels.append(wanted[row])
        assert len(set(labels)) == len(labels)
        return tuple(labels)

    def _label_rows_rank2(self, rows):
        kind = self._rank2_kind()
        k_long = self.class_labels.index("s_long")
        k_short = self.class_labels.index("s_short")
        dets = tuple(
            _int_det(self.elements[cls[0]]) for cls in self.conjugacy_classes
        )
        refl_vec = tuple(
            sum(self.elements[cls[0]][a][a] for a in range(self.datum.rank))
            - (self.datum.rank - self.reflection_rank)
            for cls in self.conjugacy_classes
        )
        labels = []
        for row in rows:
            if row[0] == 1:
                if all(v == 1 for v in row):
                    labels.append("triv")
                elif row == dets:
                    labels.append("sign")
                elif row[k_long] == -1 and row[k_short] == 1:
                    labels.append("eps_long")
                elif row[k_long] == 1 and row[k_short] == -1:
                    labels.append("eps_short")
                else:
                    raise AssertionError("unexpected linear character")
            else:
                if row == refl_vec:
                    labels.append("refl")
                elif kind == "G2":
                    labels.append("twodim")
                else:
                    raise AssertionError("unexpected character dimension")
        assert len(set(labels)) == len(labels)
        return tuple(labels)

    def trivial_label(self):
        t = self.character_table()
        for lab, row in zip(t.labels, t.values):
            if all(v == 1 for v in row):
                return lab
        raise AssertionError("no trivial character found")

    def sign_label(self):
        t = self.character_table()
        dets = tuple(
            _int_det(self.elements[cls[0]]) for cls in self.conjugacy_classes
        )
        for lab, row in zip(t.labels, t.values):
            if row == dets:
                return lab
        raise AssertionError("no sign character found")

    def tensor_sign_label(self, label):
        t = self.character_table()
        sign = t.row(self.sign_label())
        target = tuple(a * b for a, b in zip(t.row(label), sign))
        for lab, row in zip(t.labels, t.values):
            if row == target:
                return lab
        raise AssertionError("sign twist left the character table")

    # -- invariant theory ---------------------------------------------------

    def _det_one_minus_q_on_u(self, element_index):
        full = _det_one_minus_q(self.elements[element_index])
        s = self.reflection_rank
        for _ in range(self.datum.rank - s):
            full, rem = divmod(full, ONE - Q)
            assert rem.is_zero()
        return full

    def molien_series(self, values):
        total = RatFuncQ.zero()
        for k, cls in enumerate(self.conjugacy_classes):
            den = self._det_one_minus_q_on_u(cls[0])
            total = total + RatFuncQ(
                PolyQ.constant(len(cls) * Fraction(values[k])), den
            )
        return total * RatFuncQ.of(PolyQ.constant(Fraction(1, self.order)))

    def _degrees_on_u(self):
        if self._degrees_u is None:
            triv = tuple(1 for _ in self.conjugacy_classes)
            molien = self.molien_series(triv)
            recip = RatFuncQ.of(ONE) / molien
            assert recip.den == ONE
            poly = recip.num
            degrees = []
            while poly.degree > 0:
                d = next(
                    k
                    for k in range(1, poly.degree + 1)
                    if poly.coefficient(k) != 0
                )
                poly, rem = divmod(poly, ONE - Q**d)
                assert rem.is_zero()
                degrees.append(d)
            assert poly == ONE
            assert len(degrees) == self.reflection_rank
            self._degrees_u = tuple(sorted(degrees))
        return self._degrees_u

    def invariant_degrees(self):
        central = self.datum.rank - self.reflection_rank
        return tuple(sorted((1,) * central + self._degrees_on_u()))

    def fake_degrees(self):
        if self._fake is None:
            t = self.character_table()
            norm = ONE
            for d in self._degrees_on_u():
                norm = norm * (ONE - Q**d)
            out = {}
            for lab, row in zip(t.labels, t.values):
                f = self.molien_series(row) * RatFuncQ.of(norm)
                assert f.den == ONE
                out[lab] = f.num
            self._fake = out
        return self._fake

    def b_invariant(self, label):
        f = self.fake_degrees()[label]
        assert not f.is_zero()
        return next(k for k in range(f.degree + 1) if f.coefficient(k) != 0)

    # -- subgroups and induction --------------------------------------------

    def parabolic_subgroup(self, simple_positions):
        gens = tuple(
            self._index[self._reflection(i)] for i in simple_positions
        )
        return ReflectionSubgroup(self, gens)

    def young_subgroup(self, lam):
        n = self._is_single_type_a()
        if n is None or sum(lam) != n:
            raise ValueError("Young subgroups need a type A group and a partition of n")
        cuts = set(itertools.accumulate(lam))
        positions = tuple(i for i in range(n - 1) if (i + 1) not in cuts)
        return self.parabolic_subgroup(positions)

    def induce_by_element(self, sub, chi_by_element):
        values = []
        inv = self._inverses
        for cls in self.conjugacy_classes:
            z = cls[0]
            total = Fraction(0)
            for x in range(self.order):
                y = self.mult(self.mult(x, z), inv[x])
                if y in chi_by_element:
                    total += chi_by_element[y]
            values.append(total / len(sub))
        return tuple(values)

    def decompose(self, class_values):
        t = self.character_table()
        out = {}
        for lab, row in zip(t.labels, t.values):
            m = t.inner_product(class_values, row)
            assert m.denominator == 1 and m >= 0, (lab, m)
            if m:
                out[lab] = int(m)
        return out

    def j_induce(self, sub, chi_by_element, b_sub=None):
        """Truncated induction: the constituent with the same lowest
        fake-degree exponent as the subgroup character. Errors unless
        that constituent is unique with multiplicity one."""
        if b_sub is None:
            b_sub = sub.b_of_character(chi_by_element)
        ind = self.induce_by_element(sub, chi_by_element)
        decomp = self.decompose(ind)
        hits = [lab for lab in decomp if self.b_invariant(lab) == b_sub]
        for lab in decomp:
            assert self.b_invariant(lab) >= b_sub, "induction lowered the b-invariant"
        if len(hits) != 1 or decomp[hits[0]] != 1:
            raise ValueError(
                "truncated induction is not a single multiplicity-one character"
            )
        return hits[0]

    def j_induce_sign_from_young(self, lam):
        sub = self.young_subgroup(lam)
        sign = {x: Fraction(self.det_of(x)) for x in sub}
        b_sub = sum(part * (part - 1) // 2 for part in lam)
        return self.j_induce(sub, sign, b_sub=b_sub)


class ReflectionSubgroup:
    """A subgroup of a Weyl group generated by reflections."""

    def __init__(self, parent, generator_indices):
        self.parent = parent
        elements = {0}
        frontier = [0]
        while frontier:
            new = []
            for x in frontier:
                for g in generator_indices:
                    y = parent.mult(x, g)
                    if y not in elements:
                        elements.add(y)
                        new.append(y)
            frontier = new
        self.elements = tuple(sorted(elements))
        self.generator_indices = tuple(generator_indices)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def _local(self):
        pos = {x: i for i, x in enumerate(self.elements)}
        parent = self.parent

        def mult(i, j):
            return pos[parent.mult(self.elements[i], self.elements[j])]

        def inv(i):
            return pos[parent.inverse(self.elements[i])]

        return pos, mult, inv

    def reflection_rank(self):
        parent = self.parent
        rank = parent.datum.rank
        rows = []
        for x in self.elements:
            m = parent.elements[x]
            if _int_det(m) == -1:
                moved = [
                    [m[a][b] - (1 if a == b else 0) for b in range(rank)]
                    for a in range(rank)
                ]
                rows.extend(moved)
        if not rows:
            return 0
        return _rank_of(rows)

    def b_of_character(self, chi_by_element):
        """Lowest fake-degree exponent of a character given by element."""
        pos, mult, inv = self._local()
        gens = tuple(pos[g] for g in self.generator_indices) or (0,)
        classes = _conjugacy_classes(len(self.elements), mult, inv, gens)
        srank = self.reflection_rank()
        parent = self.parent
        rank = parent.datum.rank
        molien = RatFuncQ.zero()
        for cls in classes:
            rep = self.elements[cls[0]]
            den = _det_one_minus_q(parent.elements[rep])
            for _ in range(rank - srank):
                den, rem = divmod(den, ONE - Q)
                assert rem.is_zero()
            molien = molien + RatFuncQ(
                PolyQ.constant(len(cls) * Fraction(chi_by_element[rep])), den
            )
        molien = molien * RatFuncQ.of(PolyQ.constant(Fraction(1, len(self.elements))))
        # Multiply by the subgroup's own invariant-degree product.
        triv = RatFuncQ.zero()
        for cls in classes:
            rep = self.elements[cls[0]]
            den = _det_one_minus_q(parent.elements[rep])
            for _ in range(rank - srank):
                den, rem = divmod(den, ONE - Q)
                assert rem.is_zero()
            triv = triv + RatFuncQ(PolyQ.constant(Fraction(len(cls))), den)
        triv = triv * RatFuncQ.of(PolyQ.constant(Fraction(1, len(self.elements))))
        recip = RatFuncQ.of(ONE) / triv
        assert recip.den == ONE
        poly = recip.num
        norm = ONE
        while poly.degree > 0:
            d = next(k for k in range(1, poly.degree + 1) if poly.coefficient(k) != 0)
            poly, rem = divmod(poly, ONE - Q**d)
            assert rem.is_zero()
            norm = norm * (ONE - Q**d)
        f = molien * RatFuncQ.of(norm)
        assert f.den == ONE and not f.num.is_zero()
        fd = f.num
        return next(k for k in range(fd.degree + 1) if fd.coefficient(k) != 0)


def _rank_of(rows):
    work = [[Fraction(x) for x in row] for row in rows]
    cols = len(work[0])
    rank = 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, len(work)) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        scale = work[row][col]
        work[row] = [x / scale for x in work[row]]
        for r in range(len(work)):
            if r != row and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[row])]
        rank += 1
        row += 1
    return rank


def _cycle_type_from_poly(poly, n):
    """Write poly as a product of (q^c - 1) with the c summing to n."""
    if n == 0:
        return () if poly == ONE else None
    for c in range(n, 0, -1):
        factor = Q**c - 1
        quotient, rem = divmod(poly, factor)
        if rem.is_zero():
            rest = _cycle_type_from_poly(quotient, n - c)
            if rest is not None:
                return (c,) + rest
    return None


def _partitions(n, bound=None):
    if bound is None:
        bound = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _mn_character(lam, rho):
    """Symmetric group character by the Murnaghan-Nakayama rule."""
    return _mn_rec(tuple(lam), tuple(rho))


_MN_CACHE = {}


def _mn_rec(lam, rho):
    if not rho:
        return 1 if not lam else (1 if sum(lam) == 0 else 0)
    key = (lam, rho)
    if key in _MN_CACHE:
        return _MN_CACHE[key]
    k = rho[0]
    rest = rho[1:]
    total = 0
    # Beta-numbers: first-column hook lengths.
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    for i in range(m):
        new = beta[i] - k
        if new < 0 or new in beta:
            continue
        height = sum(1 for b in beta if new < b < beta[i])
        nb = sorted([b for j, b in enumerate(beta) if j != i] + [new], reverse=True)
        newlam = []
        mm = len(nb)
        for idx, b in enumerate(nb):
            part = b - (mm - 1 - idx)
            if part > 0:
                newlam.append(part)
        total += (-1) ** height * _mn_rec(tuple(newlam), rest)
    _MN_CACHE[key] = total
    return total


_WEYL_CACHE = {}


def weyl_group(datum):
    key = (datum.rank, datum.roots, datum.coroots, datum.simple_indices)
    if key not in _WEYL_CACHE:
        _WEYL_CACHE[key] = WeylGroup(datum)
    return _WEYL_CACHE[key]


def group_order_poly(datum):
    """Order of the split connected group over F_q, as a polynomial."""
    w = weyl_group(datum)
    out = Q ** datum.num_positive
    for d in w.invariant_degrees():
        out = out * (Q**d - 1)
    return out
