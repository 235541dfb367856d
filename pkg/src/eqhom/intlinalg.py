"""Exact integer linear algebra.

Everything here runs over Python's arbitrary-precision integers; there is
no floating point and no fixed-width arithmetic anywhere.  The module
provides Smith normal forms with unimodular transforms, integer kernel
lattices, cokernel invariants, and the homology of a pair of consecutive
boundary matrices, plus a coordinate calculus on such homology groups
(Smith-basis coordinates of cycles, lifts of generators).

Two computation paths coexist:

* ``smith_normal_form`` is the classical dense elimination with a fixed
  pivot rule (smallest absolute nonzero entry, ties broken by (row, col)
  order).  It carries the unimodular transforms and their inverses and is
  fully deterministic.
* ``invariant_factors`` skips the transforms and eliminates unit pivots
  sparsely before falling back to the dense routine on the residual.
  Invariant factors are canonical, so both paths agree by construction.
"""

from dataclasses import dataclass

from .errors import PreconditionError


class ChainConditionViolated(PreconditionError):
    """d_k . d_{k+1} != 0; the boundary construction upstream is broken."""


class NoIntegerSolution(PreconditionError):
    """The linear system has no solution over the integers."""


class IntMatrix:
    """A dense rows x cols matrix of Python ints.

    Instances are treated as immutable after construction; all operations
    return new matrices.

    >>> IntMatrix.identity(2) @ IntMatrix.from_rows([[1, 2], [3, 4]])
    IntMatrix([[1, 2], [3, 4]])
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("data shape does not match rows x cols")
        self.rows = rows
        self.cols = cols
        self.data = [list(map(int, r)) for r in data]

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, data, cols=None):
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(rows, cols, data)

    @classmethod
    def column(cls, vector):
        return cls(len(vector), 1, [[v] for v in vector])

    def entry(self, i, j):
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [r[j] for r in self.data]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         [[self.data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def is_zero(self):
        return all(v == 0 for r in self.data for v in r)

    def __matmul__(self, other):
        return matmul(self, other)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        if self.rows * self.cols <= 16:
            return f"IntMatrix({self.data!r})"
        return f"IntMatrix({self.rows}x{self.cols})"


def matmul(a, b):
    """Product a.b, skipping zero entries (boundary matrices are sparse)."""
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    out = []
    bd = b.data
    for arow in a.data:
        acc = [0] * b.cols
        for k, v in enumerate(arow):
            if v:
                brow = bd[k]
                if v == 1:
                    acc = [x + y for x, y in zip(acc, brow)]
                elif v == -1:
                    acc = [x - y for x, y in zip(acc, brow)]
                else:
                    acc = [x + v * y for x, y in zip(acc, brow)]
        out.append(acc)
    return IntMatrix(a.rows, b.cols, out)


def matvec(a, v):
    if a.cols != len(v):
        raise ValueError("shape mismatch in matvec")
    out = []
    for arow in a.data:
        s = 0
        for x, y in zip(arow, v):
            if x and y:
                s += x * y
        out.append(s)
    return out


def hstack(a, b):
    if a.rows != b.rows:
        raise ValueError("hstack row mismatch")
    return IntMatrix(a.rows, a.cols + b.cols,
                     [ra + rb for ra, rb in zip(a.data, b.data)])


def vstack(a, b):
    if a.cols != b.cols:
        raise ValueError("vstack col mismatch")
    return IntMatrix(a.rows + b.rows, a.cols, a.data + b.data)


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """A finitely generated abelian group: Z^free_rank + sum of Z/d.

    torsion is the ascending divisibility chain d_1 | d_2 | ..., each >= 2.

    >>> str(AbelianGroupInvariants(1, (2,)))
    'Z^1 + Z/2'
    """

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        tor = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", tor)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in tor:
            if d < 2:
                raise ValueError(f"torsion order {d} < 2")
        for a, b in zip(tor, tor[1:]):
            if b % a:
                raise ValueError(f"torsion chain broken: {a} does not divide {b}")

    @classmethod
    def from_cokernel(cls, ambient_rank, factors):
        """Z^ambient_rank / (image with the given invariant factors)."""
        nonzero = [d for d in factors if d]
        return cls(ambient_rank - len(nonzero), tuple(d for d in nonzero if d > 1))

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def order(self):
        """Group order, or 0 when infinite."""
        if self.free_rank:
            return 0
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SmithForm:
    """U.A.V = S with U, V unimodular and S diagonal in divisibility order.

    invariant_factors has length min(rows, cols): the positive chain
    d_1 | d_2 | ... | d_r followed by zeros.  uinv and vinv are the exact
    integer inverses of U and V.
    """

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    invariant_factors: tuple
    uinv: IntMatrix
    vinv: IntMatrix

    @property
    def rank(self):
        return sum(1 for d in self.invariant_factors if d)


def _snf_inplace(md, m, n, U=None, Uinv=None, V=None, Vinv=None):
    """Reduce the row-list matrix md to Smith form in place.

    Pivot rule: smallest absolute nonzero entry of the active submatrix,
    ties broken by (row, col).  The optional transform accumulators are
    row-lists updated alongside.  Returns the list of diagonal entries
    (positive chain, then zeros) of length min(m, n).
    """

    def row_op(i, t, q):
        # R_i -= q R_t  (columns < t are zero in both rows)
        ri, rt = md[i], md[t]
        md[i] = ri[:t] + [a - q * b for a, b in zip(ri[t:], rt[t:])]
        if U is not None:
            U[i] = [a - q * b for a, b in zip(U[i], U[t])]
        if Uinv is not None:
            for r in Uinv:
                r[t] += q * r[i]

    def add_row(t, i):
        # R_t += R_i
        md[t] = md[t][:t] + [a + b for a, b in zip(md[t][t:], md[i][t:])]
        if U is not None:
            U[t] = [a + b for a, b in zip(U[t], U[i])]
        if Uinv is not None:
            for r in Uinv:
                r[i] -= r[t]

    def swap_rows(i, t):
        md[i], md[t] = md[t], md[i]
        if U is not None:
            U[i], U[t] = U[t], U[i]
        if Uinv is not None:
            for r in Uinv:
                r[i], r[t] = r[t], r[i]

    def negate_row(t):
        md[t] = [-a for a in md[t]]
        if U is not None:
            U[t] = [-a for a in U[t]]
        if Uinv is not None:
            for r in Uinv:
                r[t] = -r[t]

    def col_op(j, t, q):
        # C_j -= q C_t
        for r in md:
            if r[t]:
                r[j] -= q * r[t]
        if V is not None:
            for r in V:
                if r[t]:
                    r[j] -= q * r[t]
        if Vinv is not None:
            Vinv[t] = [a + q * b for a, b in zip(Vinv[t], Vinv[j])]

    def swap_cols(j, t):
        for r in md:
            r[j], r[t] = r[t], r[j]
        if V is not None:
            for r in V:
                r[j], r[t] = r[t], r[j]
        if Vinv is not None:
            Vinv[j], Vinv[t] = Vinv[t], Vinv[j]

    t = 0
    limit = min(m, n)
    while t < limit:
        # Locate the pivot: minimal |entry|, first in (row, col) order.
        best = None
        best_abs = 0
        for i in range(t, m):
            row = md[i]
            for j in range(t, n):
                v = row[j]
                if v:
                    a = -v if v < 0 else v
                    if best is None or a < best_abs:
                        best, best_abs = (i, j), a
                        if a == 1:
                            break
            if best_abs == 1:
                break
        if best is None:
            break
        if best[0] != t:
            swap_rows(best[0], t)
        if best[1] != t:
            swap_cols(best[1], t)
        if md[t][t] < 0:
            negate_row(t)

        while True:
            # Clear column t below the pivot.
            restart = False
            i = t + 1
            while i < m:
                v = md[i][t]
                if v:
                    q = v // md[t][t]
                    if q:
                        row_op(i, t, q)
                    if md[i][t]:
                        # Remainder is a strictly smaller positive pivot.
                        swap_rows(i, t)
                        restart = True
                        break
                i += 1
            if restart:
                continue
            # Clear row t right of the pivot.
            j = t + 1
            while j < n:
                v = md[t][j]
                if v:
                    q = v // md[t][t]
                    if q:
                        col_op(j, t, q)
                    if md[t][j]:
                        swap_cols(j, t)
                        restart = True
                        break
                j += 1
            if restart:
                continue
            # Pivot row and column are clear; enforce divisibility.
            p = md[t][t]
            offender = None
            if p != 1:
                for i in range(t + 1, m):
                    row = md[i]
                    for j in range(t + 1, n):
                        if row[j] % p:
                            offender = i
                            break
                    if offender is not None:
                        break
            if offender is None:
                break
            add_row(t, offender)
        t += 1

    return [md[i][i] for i in range(limit)]


def smith_normal_form(A):
    """Full Smith normal form with unimodular transforms.

    >>> sf = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
    >>> sf.invariant_factors
    (1, 6)
    >>> (sf.U @ IntMatrix.from_rows([[2, 0], [0, 3]])) @ sf.V == sf.S
    True
    """
    m, n = A.rows, A.cols
    md = [list(r) for r in A.data]
    U = [list(r) for r in IntMatrix.identity(m).data]
    Uinv = [list(r) for r in IntMatrix.identity(m).data]
    V = [list(r) for r in IntMatrix.identity(n).data]
    Vinv = [list(r) for r in IntMatrix.identity(n).data]
    diag = _snf_inplace(md, m, n, U=U, Uinv=Uinv, V=V, Vinv=Vinv)
    return SmithForm(
        U=IntMatrix(m, m, U),
        S=IntMatrix(m, n, md),
        V=IntMatrix(n, n, V),
        invariant_factors=tuple(diag),
        uinv=IntMatrix(m, m, Uinv),
        vinv=IntMatrix(n, n, Vinv),
    )


def _snf_with(A, want_U=False, want_Uinv=False, want_V=False, want_Vinv=False):
    m, n = A.rows, A.cols
    md = [list(r) for r in A.data]
    U = [list(r) for r in IntMatrix.identity(m).data] if want_U else None
    Uinv = [list(r) for r in IntMatrix.identity(m).data] if want_Uinv else None
    V = [list(r) for r in IntMatrix.identity(n).data] if want_V else None
    Vinv = [list(r) for r in IntMatrix.identity(n).data] if want_Vinv else None
    diag = _snf_inplace(md, m, n, U=U, Uinv=Uinv, V=V, Vinv=Vinv)
    mk = lambda rows, k: None if rows is None else IntMatrix(k, k, rows)
    return diag, mk(U, m), mk(Uinv, m), mk(V, n), mk(Vinv, n)


def invariant_factors(A):
    """Invariant factors of A, zero-padded to length min(rows, cols).

    Fast path: unit pivots are eliminated on a sparse view (no transforms
    tracked), the residual goes through the dense routine.  The output is
    the canonical chain, identical to smith_normal_form(A).

    >>> invariant_factors(IntMatrix.from_rows([[4, 6], [6, 9]]))
    [1, 0]
    """
    m, n = A.rows, A.cols
    limit = min(m, n)
    if limit == 0:
        return []
    rows = {}
    cols = {}
    for i, row in enumerate(A.data):
        d = {j: v for j, v in enumerate(row) if v}
        if d:
            rows[i] = d
            for j in d:
                cols.setdefault(j, set()).add(i)
    units = 0
    while True:
        best = None
        best_cost = None
        for r in rows:
            rlen = len(rows[r])
            for c, v in rows[r].items():
                if v == 1 or v == -1:
                    cost = (rlen - 1) * (len(cols[c]) - 1)
                    key = (cost, r, c)
                    if best_cost is None or key < best_cost:
                        best_cost, best = key, (r, c, v)
        if best is None:
            break
        r, c, v = best
        prow = rows.pop(r)
        for j in prow:
            cols[j].discard(r)
            if not cols[j]:
                del cols[j]
        for r2 in list(cols.get(c, ())):
            row2 = rows[r2]
            q = row2[c] * v
            for j, pv in prow.items():
                nv = row2.get(j, 0) - q * pv
                if nv:
                    if j not in row2:
                        cols.setdefault(j, set()).add(r2)
                    row2[j] = nv
                else:
                    if j in row2:
                        del row2[j]
                        cols[j].discard(r2)
                        if not cols[j]:
                            del cols[j]
            if not row2:
                del rows[r2]
        units += 1
    # Dense residual on the surviving rows/columns.
    res_factors = []
    if rows:
        live_cols = sorted(cols)
        cindex = {c: k for k, c in enumerate(live_cols)}
        dense = []
        for r in sorted(rows):
            row = [0] * len(live_cols)
            for j, v in rows[r].items():
                row[cindex[j]] = v
            dense.append(row)
        res_factors = _snf_inplace(dense, len(dense), len(live_cols))
        res_factors = [d for d in res_factors if d]
    out = [1] * units + res_factors
    out += [0] * (limit - len(out))
    return out


def rank(A):
    return sum(1 for d in invariant_factors(A) if d)


def kernel_basis(A):
    """Basis of the saturated integer kernel lattice {x : A.x = 0}.

    Columns of the result form a basis; every integer kernel vector is an
    integer combination of them (they extend to a basis of Z^cols).

    >>> kernel_basis(IntMatrix.from_rows([[2, 4]])).col(0)
    [-2, 1]
    """
    diag, _, _, V, _ = _snf_with(A, want_V=True)
    r = sum(1 for d in diag if d)
    n = A.cols
    return IntMatrix(n, n - r, [row[r:] for row in V.data])


def cokernel_invariants(A):
    """Z^rows / column-span(A) as free rank plus torsion chain.

    >>> str(cokernel_invariants(IntMatrix.from_rows([[2, 0], [0, 3]])))
    'Z/6'
    """
    return AbelianGroupInvariants.from_cokernel(A.rows, invariant_factors(A))


def _check_composition_zero(d_k, d_kplus1):
    if d_k.cols != d_kplus1.rows:
        raise ValueError(
            f"boundary shapes do not compose: {d_k.rows}x{d_k.cols} then "
            f"{d_kplus1.rows}x{d_kplus1.cols}")
    if not matmul(d_k, d_kplus1).is_zero():
        raise ChainConditionViolated("d_k . d_{k+1} != 0")


def homology_of_pair(d_k, d_kplus1):
    """Invariants of ker(d_k) / im(d_{k+1}) for consecutive boundaries.

    The kernel is a direct summand of the middle module, so the torsion of
    the quotient equals the torsion of Z^n / im(d_{k+1}); only ranks are
    needed beyond that.
    """
    _check_composition_zero(d_k, d_kplus1)
    n = d_k.cols
    r1 = rank(d_k)
    facs = invariant_factors(d_kplus1)
    r2 = sum(1 for d in facs if d)
    free = n - r1 - r2
    if free < 0:
        raise ChainConditionViolated("rank bookkeeping failed; not a chain complex")
    return AbelianGroupInvariants(free, tuple(d for d in facs if d > 1))


class QuotientLattice:
    """Z^ambient / column-span(relations), with Smith coordinates.

    Coordinate order matches the rendered invariants: free coordinates
    first, then torsion in ascending order; entries with invariant factor
    1 are dropped.
    """

    def __init__(self, ambient, relations):
        if relations.rows != ambient:
            raise ValueError("relations must live in the ambient lattice")
        diag, U, Uinv, _, _ = _snf_with(relations, want_U=True, want_Uinv=True)
        self.ambient = ambient
        self._U = U
        self._Uinv = Uinv
        r = sum(1 for d in diag if d)
        torsion_idx = [i for i in range(r) if diag[i] > 1]
        free_idx = list(range(r, ambient))
        self._coord_idx = free_idx + torsion_idx
        self._orders = [0] * len(free_idx) + [diag[i] for i in torsion_idx]
        self.invariants = AbelianGroupInvariants(
            len(free_idx), tuple(diag[i] for i in torsion_idx))

    @property
    def num_generators(self):
        return len(self._coord_idx)

    def coordinates(self, vector):
        """Smith coordinates of a lattice vector's class, reduced mod torsion."""
        y = matvec(self._U, vector)
        out = []
        for i, d in zip(self._coord_idx, self._orders):
            out.append(y[i] % d if d else y[i])
        return tuple(out)

    def generator(self, i):
        """An ambient lift of the i-th Smith generator."""
        return self._Uinv.col(self._coord_idx[i])

    def generator_order(self, i):
        """Order of the i-th generator (0 for infinite)."""
        return self._orders[i]


class PairHomology:
    """ker(d_k)/im(d_{k+1}) with cycle coordinates and generator lifts."""

    def __init__(self, d_k, d_kplus1):
        _check_composition_zero(d_k, d_kplus1)
        n = d_k.cols
        diag, _, _, V, Vinv = _snf_with(d_k, want_V=True, want_Vinv=True)
        r = sum(1 for d in diag if d)
        self._n = n
        self._r = r
        self._kernel = IntMatrix(n, n - r, [row[r:] for row in V.data])
        self._vinv = Vinv
        image_in_kernel = IntMatrix(
            n - r, d_kplus1.cols, matmul(Vinv, d_kplus1).data[r:])
        self.quotient = QuotientLattice(n - r, image_in_kernel)
        self.invariants = self.quotient.invariants

    def kernel_coordinates(self, cycle):
        y = matvec(self._vinv, cycle)
        if any(y[:self._r]):
            raise ValueError("vector is not a cycle")
        return y[self._r:]

    def coordinates(self, cycle):
        """Smith coordinates of a cycle's homology class."""
        return self.quotient.coordinates(self.kernel_coordinates(cycle))

    def generator_cycle(self, i):
        """A cycle representing the i-th Smith generator of the homology."""
        return matvec(self._kernel, self.quotient.generator(i))

    def generator_order(self, i):
        return self.quotient.generator_order(i)

    @property
    def num_generators(self):
        return self.quotient.num_generators


def is_isomorphism_onto(source, target, image_coordinates):
    """Does a homomorphism hit all of target, given where generators go?

    source/target are AbelianGroupInvariants; image_coordinates[i] is the
    target-coordinate tuple of the image of the i-th source generator.
    For finitely generated groups with equal invariants, surjective
    implies bijective, so this decides isomorphism-via-the-given-map.
    """
    if source != target:
        return False
    orders = [0] * target.free_rank + list(target.torsion)
    k = len(orders)
    cols = [list(c) for c in image_coordinates]
    for i, d in enumerate(orders):
        if d:
            col = [0] * k
            col[i] = d
            cols.append(col)
    if not cols:
        return target.is_trivial()
    mat = IntMatrix(k, len(cols), [[c[i] for c in cols] for i in range(k)])
    return cokernel_invariants(mat).is_trivial()


def solve_columns(A, B):
    """X with A.X = B over the integers, or NoIntegerSolution."""
    if A.rows != B.rows:
        raise ValueError("shape mismatch in solve")
    diag, U, _, V, _ = _snf_with(A, want_U=True, want_V=True)
    r = sum(1 for d in diag if d)
    Y = matmul(U, B)
    Z = [[0] * B.cols for _ in range(A.cols)]
    for i in range(A.rows):
        for j in range(B.cols):
            v = Y.data[i][j]
            if i < r:
                d = diag[i]
                if v % d:
                    raise NoIntegerSolution("entry not divisible by invariant factor")
                Z[i][j] = v // d
            elif v:
                raise NoIntegerSolution("inconsistent system")
    return matmul(V, IntMatrix(A.cols, B.cols, Z))


def lattice_basis(A):
    """A matrix whose columns are a basis of the lattice spanned by A's columns."""
    diag, _, Uinv, _, _ = _snf_with(A, want_Uinv=True)
    r = sum(1 for d in diag if d)
    cols = []
    for i in range(r):
        cols.append([diag[i] * v for v in Uinv.col(i)])
    return IntMatrix(A.rows, r, [[c[i] for c in cols] for i in range(A.rows)])


def unimodular_inverse(M):
    """Exact inverse of a unimodular integer matrix."""
    if M.rows != M.cols:
        raise ValueError("not square")
    diag, U, _, V, _ = _snf_with(M, want_U=True, want_V=True)
    if any(d != 1 for d in diag):
        raise ValueError("matrix is not unimodular")
    return matmul(V, U)


def determinant(A):
    """Integer determinant (fraction-free Bareiss elimination)."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    m = [list(r) for r in A.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[i], m[k] = m[k], m[i]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pk - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]
