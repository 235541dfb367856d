"""Group homology of finite groups, two independent ways.

The normalized bar resolution gives H_n(pi; L) directly: degree k has one
free generator per tuple of k nonidentity elements, so ranks grow like
(|pi|-1)^k instead of |pi|^k.  Independently, H_n(pi) is the kernel of
the map on coinvariants

    I^n (x)_pi Z  -->  (I^{n-1} (x) Zpi) (x)_pi Z

induced by including the augmentation ideal into the group ring on the
last tensor factor (tensor powers carry the diagonal action).  Both
routes are exact and are tested against each other.
"""

from dataclasses import dataclass
from itertools import product

from .errors import BudgetError
from .groups import (FiniteGroup, NotFinite, augmentation_ideal_rep,
                     regular_rep, tensor_power, tensor_rep, trivial_rep)
from .intlinalg import (AbelianGroupInvariants, IntMatrix, cokernel_invariants,
                        hstack, homology_of_pair, invariant_factors,
                        kernel_basis, lattice_basis, solve_columns)

BUDGET = 20000


class BudgetExceeded(BudgetError):
    pass


def _require_finite(model):
    if not isinstance(model, FiniteGroup):
        raise NotFinite("group homology routines need a finite model")


def _check_budget(model, n):
    if (model.order - 1) ** n > BUDGET:
        raise BudgetExceeded(
            f"(|pi|-1)^{n} = {(model.order - 1) ** n} exceeds budget {BUDGET}")


class BarComplex:
    """Normalized bar resolution of a finite group, tensored down to L."""

    def __init__(self, model, max_degree, coefficients=None):
        _require_finite(model)
        _check_budget(model, max_degree)
        self.model = model
        self.max_degree = max_degree
        self.coefficients = coefficients or trivial_rep(model, 1)
        self._matrices = {}

    def module_rank(self, k):
        if k < 0:
            return 0
        return (self.model.order - 1) ** k * self.coefficients.rank

    def _tuple_index(self, tup):
        n1 = self.model.order - 1
        idx = 0
        for g in tup:
            idx = idx * n1 + (g - 1)
        return idx

    def boundary_matrix(self, k):
        """d_k : B_k (x)_pi L -> B_{k-1} (x)_pi L."""
        if k in self._matrices:
            return self._matrices[k]
        if k < 1:
            mat = IntMatrix.zeros(0, self.module_rank(0) if k == 0 else 0)
            self._matrices[k] = mat
            return mat
        model = self.model
        L = self.coefficients
        r = L.rank
        n = model.order
        rows = self.module_rank(k - 1)
        cols = self.module_rank(k)
        mat = IntMatrix.zeros(rows, cols)

        def add_block(row_tuple, col_idx, sign, matrix=None):
            r0 = self._tuple_index(row_tuple) * r
            c0 = col_idx * r
            if matrix is None:
                for a in range(r):
                    mat.data[r0 + a][c0 + a] += sign
            else:
                for a in range(r):
                    row = mat.data[r0 + a]
                    brow = matrix.data[a]
                    for b in range(r):
                        if brow[b]:
                            row[c0 + b] += sign * brow[b]

        for col_idx, tup in enumerate(product(range(1, n), repeat=k)):
            # g1 . [g2|...|gk]  --  (g c) (x) x ~ c (x) rho(g)^-1 x
            head = tup[1:]
            add_block(head, col_idx, 1, L.matrix_of(model.inv(tup[0])))
            # middle merges, zero when a product hits the identity
            for i in range(k - 1):
                merged = model.mul(tup[i], tup[i + 1])
                if merged != 0:
                    mtup = tup[:i] + (merged,) + tup[i + 2:]
                    add_block(mtup, col_idx, -1 if i % 2 == 0 else 1)
            # drop the last letter
            add_block(tup[:-1], col_idx, -1 if k % 2 else 1)
        self._matrices[k] = mat
        return mat


def bar_homology(model, n, coefficients=None):
    """H_n(pi; L) from the normalized bar resolution.

    >>> from .groups import GroupPresentation, todd_coxeter
    >>> z2 = todd_coxeter(GroupPresentation(("g",), ("gg",)), 5)
    >>> [str(bar_homology(z2, n)) for n in (1, 2, 3)]
    ['Z/2', '0', 'Z/2']
    """
    _require_finite(model)
    if n < 0:
        raise ValueError("degree must be >= 0")
    _check_budget(model, n)
    bar = BarComplex(model, n + 1, coefficients)
    return homology_of_pair(bar.boundary_matrix(n), bar.boundary_matrix(n + 1))


@dataclass
class CoinvariantsPresentation:
    """Z^rank(L) / span{rho(g) x - x : g generator} presents L (x)_pi Z."""

    representation: object
    matrix: IntMatrix

    @classmethod
    def of(cls, rep):
        blocks = None
        eye = IntMatrix.identity(rep.rank)
        for g in rep.model.generators:
            img = rep.images[g]
            diff = IntMatrix(rep.rank, rep.rank,
                             [[img.data[i][j] - eye.data[i][j]
                               for j in range(rep.rank)]
                              for i in range(rep.rank)])
            blocks = diff if blocks is None else hstack(blocks, diff)
        if blocks is None:
            blocks = IntMatrix.zeros(rep.rank, 0)
        return cls(rep, blocks)

    def invariants(self):
        return cokernel_invariants(self.matrix)


def coinvariants(rep):
    """H_0(pi; L) = L (x)_pi Z as abelian-group invariants."""
    return CoinvariantsPresentation.of(rep).invariants()


def _inclusion_matrix(model, n, factor):
    """(1 (x) i) (x) 1 : I^n -> I^{n-1} (x) Zpi on chosen tensor factor.

    Bases: I has {g - 1} over nonidentity elements in model order, Zpi has
    the group elements; tensor bases are lexicographic.
    """
    order = model.order
    n_i = order - 1
    rank_in1 = n_i ** (n - 1)
    rank_src = n_i ** n
    rank_tgt = rank_in1 * order
    mat = IntMatrix.zeros(rank_tgt, rank_src)
    if factor == "last":
        # source (a, b) -> a*order + (b+1) minus a*order + 0
        for a in range(rank_in1):
            for b in range(n_i):
                col = a * n_i + b
                mat.data[a * order + (b + 1)][col] += 1
                mat.data[a * order + 0][col] -= 1
    elif factor == "first":
        # source (b, a) -> (b+1)*rank_in1 + a minus 0*rank_in1 + a
        for b in range(n_i):
            for a in range(rank_in1):
                col = b * rank_in1 + a
                mat.data[(b + 1) * rank_in1 + a][col] += 1
                mat.data[a][col] -= 1
    else:
        raise ValueError("factor must be 'last' or 'first'")
    return mat


def shift_homology(model, n, factor="last"):
    """H_n(pi) as the kernel of I^n (x)_pi Z -> (I^{n-1} (x) Zpi) (x)_pi Z.

    The inclusion I -> Zpi is applied to the chosen tensor factor (the
    last one by default); tensor powers carry the diagonal action.
    """
    _require_finite(model)
    if n < 1:
        raise ValueError("degree must be >= 1")
    _check_budget(model, n)
    ideal = augmentation_ideal_rep(model)
    source = tensor_power(ideal, n)
    in1 = tensor_power(ideal, n - 1)
    reg = regular_rep(model)
    target = tensor_rep(in1, reg) if factor == "last" else tensor_rep(reg, in1)
    incl = _inclusion_matrix(model, n, factor)

    rel_src = CoinvariantsPresentation.of(source).matrix
    rel_tgt = CoinvariantsPresentation.of(target).matrix

    # Lattice of source vectors mapping into im(rel_tgt), i.e. to zero in
    # the target coinvariants.
    stacked = hstack(incl, rel_tgt)
    ker = kernel_basis(stacked)
    projected = IntMatrix(source.rank, ker.cols, ker.data[:source.rank])
    preimage = lattice_basis(projected)
    # Source relations land inside the preimage lattice (the map is
    # equivariant); express them there and quotient.
    written = solve_columns(preimage, rel_src)
    return AbelianGroupInvariants.from_cokernel(preimage.cols,
                                                invariant_factors(written))


@dataclass
class ShiftChainReport:
    """H_{n-k}(pi; I^(x)k) for k = 0..n-1, with an equality verdict."""

    degrees: list
    values: list

    @property
    def all_equal(self):
        return all(v == self.values[0] for v in self.values)

    def render(self):
        lines = []
        for (deg, k), val in zip(self.degrees, self.values):
            coeff = "Z" if k == 0 else f"I^{k}" if k > 1 else "I"
            lines.append(f"H_{deg}(pi; {coeff}) = {val}")
        lines.append("EQUAL" if self.all_equal else "UNEQUAL")
        return "\n".join(lines)


def shift_chain_check(model, n):
    """Check H_n(pi) = H_{n-1}(pi; I) = ... = H_1(pi; I^(n-1)) exactly."""
    _require_finite(model)
    ideal = augmentation_ideal_rep(model)
    degrees = []
    values = []
    for k in range(n):
        coeff = tensor_power(ideal, k)
        degrees.append((n - k, k))
        values.append(bar_homology(model, n - k, coeff))
    return ShiftChainReport(degrees, values)


@dataclass
class ProjectiveVanishingReport:
    values: list

    @property
    def all_trivial(self):
        return all(v.is_trivial() for v in self.values)

    def render(self):
        lines = [f"H_{i}(pi; I^{{k-1}} (x) Zpi) = {v}"
                 for i, v in enumerate(self.values, start=1)]
        lines.append("ALL ZERO" if self.all_trivial else "NONZERO TERM")
        return "\n".join(lines)


def projective_vanishing_check(model, k, m):
    """H_i(pi; I^(k-1) (x) Zpi) for i = 1..m; all must vanish."""
    _require_finite(model)
    if k < 1:
        raise ValueError("k must be >= 1")
    ideal = augmentation_ideal_rep(model)
    coeff = tensor_rep(tensor_power(ideal, k - 1), regular_rep(model))
    return ProjectiveVanishingReport(
        [bar_homology(model, i, coeff) for i in range(1, m + 1)])


def abelianization_invariants(pres):
    """H_1 from a presentation: cokernel of the relator exponent matrix."""
    gens = pres.generators
    gidx = {g: i for i, g in enumerate(gens)}
    cols = []
    for rel in pres.relators:
        col = [0] * len(gens)
        for g, e in rel:
            col[gidx[g]] += e
        cols.append(col)
    mat = IntMatrix(len(gens), len(cols),
                    [[c[i] for c in cols] for i in range(len(gens))])
    return cokernel_invariants(mat)
