"""Group presentations, computable models, group rings, and representations.

Four model variants have solvable word problems here: finite groups (via
coset enumeration of a presentation, or an explicit multiplication
table), free groups, free abelian groups, and binary direct products.
On top of these sit finitely supported group-ring elements, the
augmentation ideal I with its basis {g - 1 : g != e}, and integer matrix
representations, including tensor powers of I under the diagonal action.

Word syntax: a generator is a name, an inverse is the name with a
trailing apostrophe.  In text form a word is either a string of
single-character names (``aba'``) or dot-separated names (``x0.x1'``).
"""

from dataclasses import dataclass

from .errors import BudgetError, InputError, PreconditionError
from .intlinalg import IntMatrix, matmul, unimodular_inverse


class UnknownGenerator(InputError):
    pass


class ModelMismatch(PreconditionError):
    """Operands live over different group models."""


class NotFinite(PreconditionError):
    """A finite group model is required."""


class Exceeded(BudgetError):
    """Coset enumeration hit its coset budget (group may be infinite)."""

    def __init__(self, max_cosets):
        super().__init__(f"coset budget {max_cosets} exceeded")
        self.max_cosets = max_cosets


# ---------------------------------------------------------------------------
# words and presentations

def parse_word(text):
    """Parse a word string into a tuple of (generator, +-1) letters.

    >>> parse_word("aba'")
    (('a', 1), ('b', 1), ('a', -1))
    >>> parse_word("x0.x1'")
    (('x0', 1), ('x1', -1))
    """
    if text in ("", "1"):
        return ()
    letters = []
    if "." in text:
        tokens = text.split(".")
    else:
        tokens = []
        for ch in text:
            if ch == "'":
                if not tokens:
                    raise InputError(f"word {text!r} starts with an apostrophe")
                tokens[-1] += "'"
            else:
                tokens.append(ch)
    for tok in tokens:
        if tok.endswith("'"):
            letters.append((tok[:-1], -1))
        else:
            letters.append((tok, 1))
    return tuple(letters)


def render_word(word):
    if not word:
        return "1"
    tokens = [g + ("'" if e < 0 else "") for g, e in word]
    if all(len(g) == 1 for g, _ in word):
        return "".join(tokens)
    return ".".join(tokens)


def free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _as_word(word):
    if isinstance(word, str):
        return parse_word(word)
    return tuple((g, int(e)) for g, e in word)


@dataclass(frozen=True)
class GroupPresentation:
    """Generators and relators; relator words are freely reduced."""

    generators: tuple
    relators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        rels = tuple(free_reduce(_as_word(w)) for w in self.relators)
        object.__setattr__(self, "relators", rels)
        known = set(gens)
        for rel in rels:
            for g, _ in rel:
                if g not in known:
                    raise UnknownGenerator(f"relator uses unknown generator {g!r}")

    def render(self):
        lines = ["gens: " + " ".join(self.generators)]
        lines.append("rels: " + " ".join(render_word(w) for w in self.relators))
        return "\n".join(lines) + "\n"


def parse_presentation(text):
    """Read the two-line presentation format (``gens:`` / ``rels:``)."""
    gens = None
    rels = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            gens = tuple(line[len("gens:"):].split())
        elif line.startswith("rels:"):
            rels.extend(line[len("rels:"):].split())
        else:
            raise InputError(f"line {lineno}: expected 'gens:' or 'rels:'")
    if gens is None:
        raise InputError("presentation has no 'gens:' line")
    return GroupPresentation(gens, tuple(parse_word(w) for w in rels))


# ---------------------------------------------------------------------------
# group models

class GroupModel:
    """Common interface: identity, mul, inv, and canonical normal forms."""

    generators = ()
    is_finite = False

    def gen_element(self, name, exp=1):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def normal_form(self, word):
        """Canonical element for a word (string or letter sequence)."""
        out = self.identity
        for g, e in _as_word(word):
            out = self.mul(out, self.gen_element(g, e))
        return out

    def word_of(self, element):
        """Some word evaluating to the element."""
        raise NotImplementedError

    def sort_key(self, element):
        raise NotImplementedError

    def element_name(self, element):
        return str(element)


class FiniteGroup(GroupModel):
    """A finite group given by its full multiplication table.

    Element i is named ``c{i}``; element 0 is the identity.  ``gens`` maps
    generator names to element indices and must generate the group (words
    for every element are found by breadth-first search and cached).
    """

    is_finite = True

    def __init__(self, table, gens, presentation=None, _skip_checks=False):
        self.table = [list(map(int, row)) for row in table]
        self.order = len(self.table)
        self.gens = dict(gens)
        self.generators = tuple(self.gens)
        self.presentation = presentation
        if not _skip_checks:
            self._check_table()
        self.identity = 0
        self._inverse = [row.index(0) for row in self.table]
        self.element_words = self._bfs_words()
        if presentation is not None:
            for rel in presentation.relators:
                if self.normal_form(rel) != 0:
                    raise PreconditionError("table does not satisfy a relator")

    def _check_table(self):
        n = self.order
        if n == 0:
            raise PreconditionError("empty multiplication table")
        for i, row in enumerate(self.table):
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise PreconditionError("multiplication table is not closed")
            if row[0] != i or self.table[0][i] != i:
                raise PreconditionError("element 0 is not an identity")
            if 0 not in row:
                raise PreconditionError(f"element {i} has no inverse")
        if n <= 24:
            for a in range(n):
                for b in range(n):
                    ab = self.table[a][b]
                    for c in range(n):
                        if self.table[ab][c] != self.table[a][self.table[b][c]]:
                            raise PreconditionError("table is not associative")
        for g in self.gens.values():
            if not 0 <= g < n:
                raise PreconditionError("generator index out of range")

    def _bfs_words(self):
        words = {0: ()}
        frontier = [0]
        letters = [(name, 1) for name in self.generators]
        letters += [(name, -1) for name in self.generators]
        while frontier:
            nxt = []
            for c in frontier:
                for name, e in letters:
                    g = self.gens[name]
                    if e < 0:
                        g = self._inverse[g]
                    d = self.table[c][g]
                    if d not in words:
                        words[d] = words[c] + ((name, e),)
                        nxt.append(d)
            frontier = nxt
        if len(words) != self.order:
            raise PreconditionError("generators do not generate the group")
        return [words[i] for i in range(self.order)]

    def gen_element(self, name, exp=1):
        if name not in self.gens:
            raise UnknownGenerator(f"unknown generator {name!r}")
        g = self.gens[name]
        return g if exp > 0 else self._inverse[g]

    def mul(self, x, y):
        return self.table[x][y]

    def inv(self, x):
        return self._inverse[x]

    def elements(self):
        return range(self.order)

    def word_of(self, element):
        return self.element_words[element]

    def sort_key(self, element):
        return (element,)

    def element_name(self, element):
        return f"c{element}"

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup) and self.table == other.table
                and self.gens == other.gens)

    def __hash__(self):
        return hash((tuple(map(tuple, self.table)), tuple(sorted(self.gens.items()))))

    def describe(self):
        return f"finite group of order {self.order}"


def _default_names(rank):
    if rank <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:rank])
    return tuple(f"x{i}" for i in range(rank))


class FreeGroup(GroupModel):
    """Free group; elements are freely reduced tuples of signed indices.

    The letter +-(i+1) stands for the i-th generator or its inverse.
    """

    def __init__(self, rank, names=None):
        self.rank = rank
        self.generators = tuple(names) if names else _default_names(rank)
        if len(self.generators) != rank:
            raise ValueError("need one name per generator")
        self._index = {g: i for i, g in enumerate(self.generators)}
        self.identity = ()

    def gen_element(self, name, exp=1):
        if name not in self._index:
            raise UnknownGenerator(f"unknown generator {name!r}")
        return ((self._index[name] + 1) * (1 if exp > 0 else -1),)

    def mul(self, x, y):
        out = list(x)
        for s in y:
            if out and out[-1] == -s:
                out.pop()
            else:
                out.append(s)
        return tuple(out)

    def inv(self, x):
        return tuple(-s for s in reversed(x))

    def word_of(self, element):
        return tuple((self.generators[abs(s) - 1], 1 if s > 0 else -1)
                     for s in element)

    def sort_key(self, element):
        return (len(element), element)

    def element_name(self, element):
        return render_word(self.word_of(element))

    def __eq__(self, other):
        return (isinstance(other, FreeGroup) and self.rank == other.rank
                and self.generators == other.generators)

    def __hash__(self):
        return hash(("free", self.generators))

    def describe(self):
        return f"F_{self.rank}"


class FreeAbelianGroup(GroupModel):
    """Z^rank; elements are exponent vectors."""

    def __init__(self, rank, names=None):
        self.rank = rank
        self.generators = tuple(names) if names else _default_names(rank)
        if len(self.generators) != rank:
            raise ValueError("need one name per generator")
        self._index = {g: i for i, g in enumerate(self.generators)}
        self.identity = (0,) * rank

    def gen_element(self, name, exp=1):
        if name not in self._index:
            raise UnknownGenerator(f"unknown generator {name!r}")
        v = [0] * self.rank
        v[self._index[name]] = 1 if exp > 0 else -1
        return tuple(v)

    def mul(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def inv(self, x):
        return tuple(-a for a in x)

    def word_of(self, element):
        word = []
        for i, e in enumerate(element):
            word.extend([(self.generators[i], 1 if e > 0 else -1)] * abs(e))
        return tuple(word)

    def sort_key(self, element):
        return element

    def element_name(self, element):
        return "(" + ",".join(map(str, element)) + ")"

    def __eq__(self, other):
        return (isinstance(other, FreeAbelianGroup) and self.rank == other.rank
                and self.generators == other.generators)

    def __hash__(self):
        return hash(("freeabelian", self.generators))

    def describe(self):
        return f"Z^{self.rank}"


class ProductGroup(GroupModel):
    """Direct product; elements are pairs, generators are the union."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        if set(left.generators) & set(right.generators):
            raise ValueError("product factors must use disjoint generator names")
        self.generators = tuple(left.generators) + tuple(right.generators)
        self.identity = (left.identity, right.identity)

    @property
    def is_finite(self):
        return self.left.is_finite and self.right.is_finite

    def gen_element(self, name, exp=1):
        if name in self.left.generators:
            return (self.left.gen_element(name, exp), self.right.identity)
        if name in self.right.generators:
            return (self.left.identity, self.right.gen_element(name, exp))
        raise UnknownGenerator(f"unknown generator {name!r}")

    def mul(self, x, y):
        return (self.left.mul(x[0], y[0]), self.right.mul(x[1], y[1]))

    def inv(self, x):
        return (self.left.inv(x[0]), self.right.inv(x[1]))

    def word_of(self, element):
        return self.left.word_of(element[0]) + self.right.word_of(element[1])

    def sort_key(self, element):
        return (self.left.sort_key(element[0]), self.right.sort_key(element[1]))

    def element_name(self, element):
        return (self.left.element_name(element[0]) + "*"
                + self.right.element_name(element[1]))

    def __eq__(self, other):
        return (isinstance(other, ProductGroup) and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return hash(("product", self.left, self.right))

    def describe(self):
        return f"{self.left.describe()} x {self.right.describe()}"


# ---------------------------------------------------------------------------
# Todd-Coxeter coset enumeration (HLT, trivial subgroup)

class _CosetTable:
    def __init__(self, ncols, budget):
        self.ncols = ncols
        self.budget = budget
        self.tab = []
        self.parent = []
        self._new()

    def _new(self):
        if len(self.tab) >= self.budget:
            raise Exceeded(self.budget)
        c = len(self.tab)
        self.tab.append([None] * self.ncols)
        self.parent.append(c)
        return c

    def find(self, c):
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(self, c, col):
        d = self._new()
        self.tab[c][col] = d
        self.tab[d][col ^ 1] = c
        return d

    def unify(self, a, b):
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            self.parent[b] = a
            rowa, rowb = self.tab[a], self.tab[b]
            for col in range(self.ncols):
                nb = rowb[col]
                if nb is not None:
                    if rowa[col] is None:
                        rowa[col] = nb
                    else:
                        stack.append((rowa[col], nb))

    def scan_and_fill(self, c, word):
        f, i = c, 0
        b, r = c, len(word) - 1
        while True:
            f, b = self.find(f), self.find(b)
            while i <= r:
                nxt = self.tab[f][word[i]]
                if nxt is None:
                    break
                f = self.find(nxt)
                i += 1
            if i > r:
                if f != b:
                    self.unify(f, b)
                return
            while r >= i:
                nxt = self.tab[b][word[r] ^ 1]
                if nxt is None:
                    break
                b = self.find(nxt)
                r -= 1
            if r < i:
                self.unify(f, b)
                return
            if r == i:
                self.tab[f][word[i]] = b
                back = self.tab[b][word[i] ^ 1]
                if back is None:
                    self.tab[b][word[i] ^ 1] = f
                elif self.find(back) != self.find(f):
                    self.unify(back, f)
                return
            self.define(f, word[i])


def todd_coxeter(pres, max_cosets):
    """Enumerate the cosets of the trivial subgroup; a FiniteGroup on success.

    Cosets are numbered in discovery order after compression, with c0 the
    identity.  Raises Exceeded when more than max_cosets cosets get
    defined (the group may be infinite, or merely larger than the budget).

    >>> todd_coxeter(GroupPresentation(("a",), (parse_word("aaa"),)), 10).order
    3
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    gens = pres.generators
    ncols = 2 * len(gens)
    colof = {}
    for i, g in enumerate(gens):
        colof[(g, 1)] = 2 * i
        colof[(g, -1)] = 2 * i + 1
    rels = [tuple(colof[letter] for letter in rel) for rel in pres.relators if rel]
    ct = _CosetTable(ncols, max_cosets)
    idx = 0
    while idx < len(ct.tab):
        if ct.find(idx) == idx:
            for rel in rels:
                ct.scan_and_fill(idx, rel)
                if ct.find(idx) != idx:
                    break
            if ct.find(idx) == idx:
                for col in range(ncols):
                    if ct.tab[idx][col] is None:
                        ct.define(idx, col)
        idx += 1
    live = [i for i in range(len(ct.tab)) if ct.find(i) == i]
    relabel = {c: k for k, c in enumerate(live)}
    graph = [[relabel[ct.find(ct.tab[c][col])] for col in range(ncols)] for c in live]
    n = len(live)

    # Words for each coset, then the full multiplication table.
    words = {0: ()}
    frontier = [0]
    letters = [(g, 1) for g in gens] + [(g, -1) for g in gens]
    while frontier:
        nxt = []
        for c in frontier:
            for g, e in letters:
                d = graph[c][colof[(g, e)]]
                if d not in words:
                    words[d] = words[c] + ((g, e),)
                    nxt.append(d)
        frontier = nxt
    table = []
    for c1 in range(n):
        row = []
        for c2 in range(n):
            c = c1
            for letter in words[c2]:
                c = graph[c][colof[letter]]
            row.append(c)
        table.append(row)
    gen_map = {g: graph[0][colof[(g, 1)]] for g in gens}
    return FiniteGroup(table, gen_map, presentation=pres,
                       _skip_checks=(n > 24))


# ---------------------------------------------------------------------------
# group ring

class GroupRingElement:
    """Finitely supported integer combination of group elements.

    >>> z2 = todd_coxeter(GroupPresentation(("g",), (parse_word("gg"),)), 5)
    >>> g = GroupRingElement.from_element(z2, z2.normal_form("g"))
    >>> one = GroupRingElement.one(z2)
    >>> ((g - one) * (g + one)).is_zero()
    True
    """

    __slots__ = ("model", "terms")

    def __init__(self, model, terms):
        self.model = model
        self.terms = {g: int(c) for g, c in terms.items() if c}

    @classmethod
    def zero(cls, model):
        return cls(model, {})

    @classmethod
    def one(cls, model):
        return cls(model, {model.identity: 1})

    @classmethod
    def from_element(cls, model, element, coeff=1):
        return cls(model, {element: coeff})

    def _require_same(self, other):
        if self.model != other.model:
            raise ModelMismatch("group ring elements over different models")

    def __add__(self, other):
        self._require_same(other)
        terms = dict(self.terms)
        for g, c in other.terms.items():
            terms[g] = terms.get(g, 0) + c
        return GroupRingElement(self.model, terms)

    def __neg__(self):
        return GroupRingElement(self.model, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return GroupRingElement(self.model, {g: k * c for g, c in self.terms.items()})

    def __mul__(self, other):
        self._require_same(other)
        mul = self.model.mul
        terms = {}
        for g, a in self.terms.items():
            for h, b in other.terms.items():
                k = mul(g, h)
                terms[k] = terms.get(k, 0) + a * b
        return GroupRingElement(self.model, terms)

    def augmentation(self):
        return sum(self.terms.values())

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, GroupRingElement) and self.model == other.model
                and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        name = self.model.element_name
        parts = [f"{c}*{name(g)}" for g, c in
                 sorted(self.terms.items(), key=lambda t: self.model.sort_key(t[0]))]
        return " + ".join(parts)


def ring_multiply(x, y):
    return x * y


def augmentation(x):
    """Sum of coefficients; its kernel is the augmentation ideal I."""
    return x.augmentation()


# ---------------------------------------------------------------------------
# integer representations

def kronecker(a, b):
    out = IntMatrix.zeros(a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            v = a.data[i][j]
            if v:
                for p in range(b.rows):
                    brow = b.data[p]
                    orow = out.data[i * b.rows + p]
                    off = j * b.cols
                    for q in range(b.cols):
                        if brow[q]:
                            orow[off + q] = v * brow[q]
    return out


class IntRepresentation:
    """An action of a group model on Z^rank by invertible integer matrices."""

    def __init__(self, model, rank, images, check=True):
        self.model = model
        self.rank = rank
        self.images = dict(images)
        if set(self.images) != set(model.generators):
            raise ValueError("need exactly one image per generator")
        for m in self.images.values():
            if m.rows != rank or m.cols != rank:
                raise ValueError("image matrix has wrong shape")
        self._inv_images = {}
        self._element_cache = {}
        if check:
            self._check()

    def _check(self):
        for name, m in self.images.items():
            inv = unimodular_inverse(m)  # raises when det != +-1
            self._inv_images[name] = inv
        pres = getattr(self.model, "presentation", None)
        if pres is not None:
            for rel in pres.relators:
                if self.word_matrix(rel) != IntMatrix.identity(self.rank):
                    raise PreconditionError(
                        f"relator {render_word(rel)} not satisfied by images")

    def _gen_matrix(self, name, exp):
        if exp > 0:
            return self.images[name]
        if name not in self._inv_images:
            self._inv_images[name] = unimodular_inverse(self.images[name])
        return self._inv_images[name]

    def word_matrix(self, word):
        m = IntMatrix.identity(self.rank)
        for g, e in _as_word(word):
            m = matmul(m, self._gen_matrix(g, e))
        return m

    def matrix_of(self, element):
        key = element
        if key not in self._element_cache:
            self._element_cache[key] = self.word_matrix(self.model.word_of(element))
        return self._element_cache[key]

    def act(self, element, vector):
        from .intlinalg import matvec
        return matvec(self.matrix_of(element), vector)

    def act_inv(self, element, vector):
        return self.act(self.model.inv(element), vector)


def trivial_rep(model, rank=1):
    eye = IntMatrix.identity(rank)
    return IntRepresentation(model, rank, {g: eye for g in model.generators},
                             check=False)


def regular_rep(model):
    """Z[pi] as a module over itself (left multiplication), for finite pi."""
    if not isinstance(model, FiniteGroup):
        raise NotFinite("regular representation needs a finite model")
    n = model.order
    images = {}
    for name in model.generators:
        s = model.gens[name]
        m = IntMatrix.zeros(n, n)
        for g in range(n):
            m.data[model.table[s][g]][g] = 1
        images[name] = m
    return IntRepresentation(model, n, images)


def augmentation_ideal_rep(model):
    """The augmentation ideal I on the basis {g - 1 : g != e}, for finite pi.

    The generator s sends g - 1 to (sg - 1) - (s - 1); columns are indexed
    by the model's element order with the identity dropped.

    >>> z2 = todd_coxeter(GroupPresentation(("g",), (parse_word("gg"),)), 5)
    >>> augmentation_ideal_rep(z2).images["g"].data
    [[-1]]
    """
    if not isinstance(model, FiniteGroup):
        raise NotFinite("augmentation ideal module needs a finite model")
    n = model.order
    images = {}
    for name in model.generators:
        s = model.gens[name]
        m = IntMatrix.zeros(n - 1, n - 1)
        for g in range(1, n):
            sg = model.table[s][g]
            if sg != 0:
                m.data[sg - 1][g - 1] += 1
            if s != 0:
                m.data[s - 1][g - 1] -= 1
        images[name] = m
    return IntRepresentation(model, n - 1, images)


def tensor_rep(left, right):
    """Tensor product with the diagonal action, on the lexicographic basis."""
    if left.model != right.model:
        raise ModelMismatch("tensor factors over different models")
    images = {g: kronecker(left.images[g], right.images[g])
              for g in left.model.generators}
    return IntRepresentation(left.model, left.rank * right.rank, images,
                             check=False)


def tensor_power(rep, k):
    """I^(x)k-style power; k = 0 is the rank-1 trivial module."""
    out = trivial_rep(rep.model, 1)
    for _ in range(k):
        out = tensor_rep(out, rep)
    return out
