"""Finite simplicial complexes, universal covers, and local coefficients.

A complex is stored as its full face lattice with simplices ordered
lexicographically inside each dimension; boundary signs alternate over
the sorted vertex order.  For a complex with finite fundamental group the
universal cover is realized as an equivariant complex: one free Z[pi]
basis cell per base simplex, with boundary entries carrying the deck
translation of the leading face.

Deck bookkeeping follows the edge-path group: the holonomy of an edge
(u, v) is the class of (tree path to u) + (u, v) + (tree path back from
v), and the lift of a simplex at sheet g places its smallest vertex v0 on
(v0, g) and vertex v_i on (v_i, g . h(v0, v_i)).
"""

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import InputError, PreconditionError
from .groups import (FiniteGroup, GroupPresentation, GroupRingElement,
                     Exceeded, IntRepresentation, todd_coxeter, trivial_rep)
from .intlinalg import IntMatrix, homology_of_pair


class ParseError(InputError):
    pass


class DuplicateVertexInSimplex(InputError):
    pass


class NotConnected(PreconditionError):
    pass


class InfiniteGroup(PreconditionError):
    """The fundamental group did not complete to a finite model."""


class PresentationMismatch(PreconditionError):
    """The supplied model does not realize this complex's pi_1 presentation."""


class SimplicialComplex:
    """Downward-closed face lattice generated by a list of simplices."""

    def __init__(self, simplices, orient_directive=False):
        faces = set()
        for s in simplices:
            s = tuple(sorted(int(v) for v in s))
            if len(set(s)) != len(s):
                raise DuplicateVertexInSimplex(f"repeated vertex in {s}")
            if s and s[0] < 0:
                raise ParseError("negative vertex id")
            for k in range(1, len(s) + 1):
                faces.update(combinations(s, k))
        if not faces:
            raise ParseError("empty complex")
        self.dim = max(len(f) for f in faces) - 1
        self._simplices = [sorted(f for f in faces if len(f) == k + 1)
                           for k in range(self.dim + 1)]
        self._index = [{s: i for i, s in enumerate(level)}
                       for level in self._simplices]
        self.vertex_ids = [s[0] for s in self._simplices[0]]
        self.vertices = len(self.vertex_ids)
        self.facets = [s for s in faces
                       if not any(s != t and set(s) <= set(t) for t in faces)]
        self.facets.sort(key=lambda s: (len(s), s))
        self.orient_directive = orient_directive
        self._boundaries = {}

    def simplices(self, k):
        if 0 <= k <= self.dim:
            return self._simplices[k]
        return []

    def counts(self):
        return [len(level) for level in self._simplices]

    def index(self, simplex):
        simplex = tuple(simplex)
        k = len(simplex) - 1
        try:
            return self._index[k][simplex]
        except (IndexError, KeyError):
            raise KeyError(f"no simplex {simplex}") from None

    def boundary_matrix(self, k):
        """d_k : C_k -> C_{k-1}; shapes (0 x n_0) and (n_dim x 0) at the ends."""
        if k in self._boundaries:
            return self._boundaries[k]
        if k <= 0:
            mat = IntMatrix.zeros(0, len(self._simplices[0]) if k == 0 else 0)
        elif k > self.dim:
            mat = IntMatrix.zeros(len(self._simplices[self.dim]), 0)
        else:
            rows = len(self._simplices[k - 1])
            cols = len(self._simplices[k])
            mat = IntMatrix.zeros(rows, cols)
            for j, s in enumerate(self._simplices[k]):
                for i in range(len(s)):
                    face = s[:i] + s[i + 1:]
                    mat.data[self._index[k - 1][face]][j] = -1 if i % 2 else 1
        self._boundaries[k] = mat
        return mat

    def euler_characteristic(self):
        return sum((-1) ** k * len(level)
                   for k, level in enumerate(self._simplices))

    def vertex_adjacency(self):
        adj = {v: [] for v in self.vertex_ids}
        for (u, v) in self._simplices[1] if self.dim >= 1 else []:
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort()
        return adj

    def is_connected(self):
        if self.vertices <= 1:
            return True
        adj = self.vertex_adjacency()
        seen = {self.vertex_ids[0]}
        stack = [self.vertex_ids[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertices


def load_complex(text):
    """Parse the ``f v0 v1 ...`` facet format (# comments, orient: auto)."""
    simplices = []
    orient_directive = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "orient: auto":
            orient_directive = True
            continue
        parts = line.split()
        if parts[0] != "f":
            raise ParseError(f"line {lineno}: expected 'f v0 v1 ...'")
        try:
            verts = [int(p) for p in parts[1:]]
        except ValueError:
            raise ParseError(f"line {lineno}: vertex ids must be integers") from None
        if not verts:
            raise ParseError(f"line {lineno}: empty simplex")
        if any(v < 0 for v in verts):
            raise ParseError(f"line {lineno}: negative vertex id")
        if len(set(verts)) != len(verts):
            raise DuplicateVertexInSimplex(f"line {lineno}: repeated vertex")
        simplices.append(tuple(verts))
    return SimplicialComplex(simplices, orient_directive=orient_directive)


def load_complex_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return load_complex(fh.read())


# ---------------------------------------------------------------------------
# edge-path fundamental group

def _spanning_tree(cx, basepoint):
    if (basepoint,) not in cx._index[0]:
        raise InputError(f"basepoint {basepoint} is not a vertex")
    if not cx.is_connected():
        raise NotConnected("complex is not connected")
    adj = cx.vertex_adjacency()
    parent = {basepoint: None}
    order = [basepoint]
    frontier = [basepoint]
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in parent:
                    parent[w] = u
                    order.append(w)
                    nxt.append(w)
        frontier = nxt
    tree_edges = {tuple(sorted((u, p))) for u, p in parent.items()
                  if p is not None}
    return parent, tree_edges


def _edge_path_data(cx, basepoint):
    parent, tree_edges = _spanning_tree(cx, basepoint)
    nontree = [e for e in cx.simplices(1) if e not in tree_edges]
    if len(nontree) <= 26:
        names = ["abcdefghijklmnopqrstuvwxyz"[i] for i in range(len(nontree))]
    else:
        names = [f"x{i}" for i in range(len(nontree))]
    gen_of_edge = {e: names[i] for i, e in enumerate(nontree)}

    def edge_word(u, v):
        e = tuple(sorted((u, v)))
        if e in tree_edges:
            return ()
        name = gen_of_edge[e]
        return ((name, 1 if (u, v) == e else -1),)

    relators = []
    for (a, b, c) in cx.simplices(2):
        word = edge_word(a, b) + edge_word(b, c) + edge_word(c, a)
        if word:
            relators.append(word)
    pres = GroupPresentation(tuple(names), tuple(relators))
    return pres, tree_edges, gen_of_edge


def fundamental_group(cx, basepoint=0):
    """Edge-path presentation from the BFS spanning tree at the basepoint."""
    pres, _, _ = _edge_path_data(cx, basepoint)
    return pres


# ---------------------------------------------------------------------------
# universal covers for finite fundamental groups

class EquivariantComplex:
    """The universal cover of a base complex, as a free Z[pi] chain complex.

    boundary_terms(k)[j] lists (face_index, sign, deck_element) triples for
    the j-th base k-simplex; the plain cover is exposed as a simplicial
    complex on vertex labels v * |pi| + g.
    """

    def __init__(self, base, model, basepoint=0):
        if not isinstance(model, FiniteGroup):
            raise InfiniteGroup("universal covers are built for finite models only")
        pres, tree_edges, gen_of_edge = _edge_path_data(base, basepoint)
        if getattr(model, "presentation", None) != pres:
            raise PresentationMismatch(
                "model was not built from this complex's pi_1 presentation")
        self.base = base
        self.model = model
        self.basepoint = basepoint
        self._holonomy = {}
        for e in base.simplices(1):
            if e in tree_edges:
                h = model.identity
            else:
                h = model.gen_element(gen_of_edge[e])
            self._holonomy[e] = h
            self._holonomy[(e[1], e[0])] = model.inv(h)
        self._terms = {}
        self._cover = None
        self._cover_index = {}

    def holonomy(self, u, v):
        """Deck translation of the edge u -> v (both orders stored)."""
        return self._holonomy[(u, v)] if (u, v) in self._holonomy \
            else self._holonomy[tuple(sorted((u, v)))]

    def vertex_sheet(self, simplex, i, g=0):
        """Sheet of the i-th vertex in the lift of simplex at sheet g."""
        h = self.model.identity if i == 0 else self.holonomy(simplex[0], simplex[i])
        return self.model.mul(g, h)

    def boundary_terms(self, k):
        """(face_index, sign, element) triples per base k-simplex."""
        if k in self._terms:
            return self._terms[k]
        out = []
        if 1 <= k <= self.base.dim:
            for s in self.base.simplices(k):
                terms = []
                for i in range(len(s)):
                    face = s[:i] + s[i + 1:]
                    sign = -1 if i % 2 else 1
                    elt = self.holonomy(s[0], s[1]) if i == 0 else self.model.identity
                    terms.append((self.base.index(face), sign, elt))
                out.append(terms)
        else:
            out = [[] for _ in self.base.simplices(k)]
        self._terms[k] = out
        return out

    def ring_boundary(self, k):
        """Boundary matrix over the group ring, as {(row, col): element}."""
        entries = {}
        for j, terms in enumerate(self.boundary_terms(k)):
            for face, sign, elt in terms:
                cur = entries.get((face, j), GroupRingElement.zero(self.model))
                entries[(face, j)] = cur + GroupRingElement.from_element(
                    self.model, elt, sign)
        return entries

    def ring_boundary_squares_to_zero(self):
        """Exact check of the Z[pi] chain condition in every degree."""
        model = self.model
        for k in range(2, self.base.dim + 1):
            upper = self.boundary_terms(k)
            lower = self.boundary_terms(k - 1)
            for terms in upper:
                acc = {}
                for face, s1, h1 in terms:
                    for face2, s2, h2 in lower[face]:
                        key = (face2, model.mul(h1, h2))
                        acc[key] = acc.get(key, 0) + s1 * s2
                if any(acc.values()):
                    return False
        return True

    # -- the plain cover ----------------------------------------------------

    def vertex_label(self, v, g):
        return v * self.model.order + g

    def cover_complex(self):
        """The cover as an ordinary simplicial complex.

        Labels v * |pi| + g preserve the base vertex order inside every
        lift, so the i-th face of a lift is the lift of the i-th face.
        """
        if self._cover is None:
            facets = []
            for s in self.base.facets:
                for g in self.model.elements():
                    facets.append(tuple(self.vertex_label(v, self.vertex_sheet(s, i, g))
                                        for i, v in enumerate(s)))
            self._cover = SimplicialComplex(facets)
        return self._cover

    def cover_cell(self, simplex, g):
        """Vertex tuple of the lift of a base simplex at sheet g."""
        return tuple(self.vertex_label(v, self.vertex_sheet(simplex, i, g))
                     for i, v in enumerate(simplex))

    def cover_cell_index(self, simplex, g):
        key = (tuple(simplex), g)
        if key not in self._cover_index:
            self._cover_index[key] = self.cover_complex().index(
                self.cover_cell(simplex, g))
        return self._cover_index[key]

    def deck_image_label(self, label, h):
        v, g = divmod(label, self.model.order)
        return self.vertex_label(v, self.model.mul(h, g))

    def deck_action_is_free(self):
        """No cover cell is fixed by a nonidentity deck element."""
        cover = self.cover_complex()
        for k in range(cover.dim + 1):
            for s in cover.simplices(k):
                for h in self.model.elements():
                    if h == self.model.identity:
                        continue
                    if tuple(sorted(self.deck_image_label(v, h) for v in s)) == s:
                        return False
        return True

    def counts(self):
        return [len(level) * self.model.order for level in self.base._simplices]


def universal_cover(cx, model, basepoint=0):
    return EquivariantComplex(cx, model, basepoint=basepoint)


def build_cover(cx, basepoint=0, max_cosets=20000):
    """fundamental_group + todd_coxeter + universal_cover in one step."""
    pres = fundamental_group(cx, basepoint)
    try:
        model = todd_coxeter(pres, max_cosets)
    except Exceeded as exc:
        raise InfiniteGroup(
            f"pi_1 did not close within {exc.max_cosets} cosets") from exc
    return universal_cover(cx, model, basepoint=basepoint)


# ---------------------------------------------------------------------------
# local coefficient systems

class ModelMismatch(PreconditionError):
    pass


@dataclass
class LocalSystem:
    """A coefficient module for a complex: trivial Z^rank, or a pi-module.

    Twisted systems carry the cover they act through; trivial systems need
    only the base complex.
    """

    complex: SimplicialComplex
    rank: int
    cover: EquivariantComplex = None
    rep: IntRepresentation = None
    label: str = "Z"

    @classmethod
    def trivial(cls, cx, rank=1, label=None):
        return cls(cx, rank, label=label or ("Z" if rank == 1 else f"Z^{rank}"))

    @classmethod
    def from_rep(cls, cover, rep, label="L"):
        if rep.model != cover.model:
            raise ModelMismatch("representation is over a different group model")
        return cls(cover.base, rep.rank, cover=cover, rep=rep, label=label)

    @property
    def is_trivial(self):
        return self.rep is None

    def matrix(self, element):
        return None if self.rep is None else self.rep.matrix_of(element)

    def matrix_inv(self, element):
        if self.rep is None:
            return None
        return self.rep.matrix_of(self.cover.model.inv(element))

    def tensor(self, other):
        if self.complex is not other.complex:
            raise ModelMismatch("local systems over different complexes")
        if self.is_trivial and other.is_trivial:
            return LocalSystem.trivial(self.complex, self.rank * other.rank)
        from .groups import tensor_rep
        cover = self.cover or other.cover
        left = self.rep or trivial_rep(cover.model, self.rank)
        right = other.rep or trivial_rep(cover.model, other.rank)
        return LocalSystem.from_rep(cover, tensor_rep(left, right),
                                    label=f"{self.label}(x){other.label}")


def _block_fill(mat, row_block, col_block, rank, sign, block):
    """mat[row_block][col_block] += sign * block (identity when block None)."""
    r0, c0 = row_block * rank, col_block * rank
    if block is None:
        for a in range(rank):
            mat.data[r0 + a][c0 + a] += sign
    else:
        bd = block.data
        for a in range(rank):
            row = mat.data[r0 + a]
            brow = bd[a]
            for b in range(rank):
                if brow[b]:
                    row[c0 + b] += sign * brow[b]


def chain_boundary_matrix(system, k):
    """d_k on C_*(X; L) = C_*(cover) (x)_pi L; blocks are rho(h)^-1."""
    cx = system.complex
    r = system.rank
    n_k = len(cx.simplices(k))
    n_km1 = len(cx.simplices(k - 1)) if k >= 1 else 0
    mat = IntMatrix.zeros(n_km1 * r, n_k * r)
    if k < 1 or k > cx.dim:
        return mat
    if system.is_trivial:
        base = cx.boundary_matrix(k)
        for i in range(base.rows):
            for j in range(base.cols):
                v = base.data[i][j]
                if v:
                    _block_fill(mat, i, j, r, v, None)
        return mat
    terms = system.cover.boundary_terms(k)
    for j, tt in enumerate(terms):
        for face, sign, elt in tt:
            _block_fill(mat, face, j, r, sign, system.matrix_inv(elt))
    return mat


def cochain_differential_matrix(system, k):
    """delta^k : C^k(X; L) -> C^{k+1}(X; L); blocks are rho(h)."""
    cx = system.complex
    r = system.rank
    n_k = len(cx.simplices(k))
    n_kp1 = len(cx.simplices(k + 1))
    mat = IntMatrix.zeros(n_kp1 * r, n_k * r)
    if k < 0 or k >= cx.dim:
        return mat
    if system.is_trivial:
        base = cx.boundary_matrix(k + 1)
        for i in range(base.rows):
            for j in range(base.cols):
                v = base.data[i][j]
                if v:
                    _block_fill(mat, j, i, r, v, None)
        return mat
    terms = system.cover.boundary_terms(k + 1)
    for j, tt in enumerate(terms):
        for face, sign, elt in tt:
            _block_fill(mat, j, face, r, sign, system.matrix(elt))
    return mat


def homology(cx):
    """H_k(X; Z) for k = 0..dim, via Smith normal forms.

    >>> [str(h) for h in homology(SimplicialComplex([(0, 1), (1, 2), (0, 2)]))]
    ['Z^1', 'Z^1']
    """
    return [homology_of_pair(cx.boundary_matrix(k), cx.boundary_matrix(k + 1))
            for k in range(cx.dim + 1)]


def cohomology(cx):
    """H^k(X; Z) via the transposed boundaries."""
    sys0 = LocalSystem.trivial(cx)
    return local_cohomology(None, sys0)


def _check_system(cover, system):
    if system.is_trivial:
        return
    if cover is not None and system.cover is not cover:
        raise ModelMismatch("local system is attached to a different cover")
    if system.cover is None:
        raise ModelMismatch("twisted local system has no cover")


def local_homology(cover, system):
    """H_k(X; L) for k = 0..dim."""
    _check_system(cover, system)
    return [homology_of_pair(chain_boundary_matrix(system, k),
                             chain_boundary_matrix(system, k + 1))
            for k in range(system.complex.dim + 1)]


def local_cohomology(cover, system):
    """H^k(X; L) for k = 0..dim."""
    _check_system(cover, system)
    out = []
    for k in range(system.complex.dim + 1):
        d_up = cochain_differential_matrix(system, k)
        d_down = cochain_differential_matrix(system, k - 1) if k >= 1 else \
            IntMatrix.zeros(len(system.complex.simplices(0)) * system.rank, 0)
        out.append(homology_of_pair(d_up, d_down))
    return out


def render_homology(groups, prefix="H"):
    return "\n".join(f"{prefix}{k} = {g}" for k, g in enumerate(groups))


# ---------------------------------------------------------------------------
# small builders

def cycle_complex(n):
    """A circle: the n-cycle graph (n >= 3)."""
    if n < 3:
        raise ValueError("a simplicial circle needs at least 3 vertices")
    return SimplicialComplex([(i, (i + 1) % n) for i in range(n)])


def simplicial_product(cx1, cx2):
    """Staircase triangulation of the product, over the vertex orders.

    Each cell (p-simplex) x (q-simplex) is cut along monotone lattice
    paths; the cuts agree across shared faces, so the result triangulates
    the product space.  Vertex (u, v) gets label u * (max id of cx2 + 1) + v.
    """
    n2 = max(cx2.vertex_ids) + 1
    facets = []
    for f1 in cx1.facets:
        for f2 in cx2.facets:
            p, q = len(f1) - 1, len(f2) - 1
            for rpos in combinations(range(p + q), p):
                i = j = 0
                verts = [f1[0] * n2 + f2[0]]
                for step in range(p + q):
                    if step in rpos:
                        i += 1
                    else:
                        j += 1
                    verts.append(f1[i] * n2 + f2[j])
                facets.append(tuple(verts))
    return SimplicialComplex(facets)


def torus_complex(n):
    """The n-torus as an iterated staircase product of 3-vertex circles."""
    if n < 1:
        raise ValueError("torus dimension must be >= 1")
    out = cycle_complex(3)
    for _ in range(n - 1):
        out = simplicial_product(out, cycle_complex(3))
    return out


def barycentric_subdivision(cx):
    """First barycentric subdivision; vertex i is the i-th simplex of cx.

    Also returns the simplex list indexing the new vertices.
    """
    order = [s for k in range(cx.dim + 1) for s in cx.simplices(k)]
    label = {s: i for i, s in enumerate(order)}
    facets = set()
    for f in cx.simplices(cx.dim):
        for perm in permutations(f):
            chain = [tuple(sorted(perm[:i + 1])) for i in range(len(f))]
            facets.add(tuple(sorted(label[s] for s in chain)))
    return SimplicialComplex(sorted(facets)), order


def quotient_by_free_cyclic_action(cx, vertex_map, order):
    """Quotient by a free simplicial Z/order action given on vertices.

    Requires the action to be regular: every vertex orbit has full size,
    no facet meets a translate of itself, and facet orbits are determined
    by vertex orbits (all verified; violations raise).
    """
    rep = {}
    for v in cx.vertex_ids:
        orbit = [v]
        while True:
            w = vertex_map[orbit[-1]]
            if w == v:
                break
            orbit.append(w)
        if len(orbit) != order:
            raise PreconditionError(f"vertex {v} has orbit size {len(orbit)}")
        rep[v] = min(orbit)
    newlabel = {r: i for i, r in enumerate(sorted(set(rep.values())))}
    facets = set()
    for f in cx.simplices(cx.dim):
        image = tuple(sorted(newlabel[rep[v]] for v in f))
        if len(set(image)) != len(f):
            raise PreconditionError("a facet meets its own orbit")
        facets.add(image)
    if order * len(facets) != len(cx.simplices(cx.dim)):
        raise PreconditionError("facet orbits are not determined by vertex "
                                "orbits; quotient is not simplicial")
    return SimplicialComplex(sorted(facets))


def lens_space(p):
    """L(p, 1): the join of two 2p-gon circles modulo the diagonal rotation.

    The first subdivision of the join makes the order-p rotation regular,
    so the quotient is simplicial; p = 2 gives projective 3-space.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    m = 2 * p
    facets = []
    for i in range(m):
        for j in range(m):
            facets.append(tuple(sorted((i, (i + 1) % m,
                                        m + j, m + (j + 1) % m))))
    join = SimplicialComplex(facets)
    sub, simplex_of = barycentric_subdivision(join)
    label = {s: i for i, s in enumerate(simplex_of)}

    def rotate_vertex(v):
        return (v + 2) % m if v < m else m + ((v - m) + 2) % m

    vmap = {i: label[tuple(sorted(rotate_vertex(v) for v in s))]
            for i, s in enumerate(simplex_of)}
    return quotient_by_free_cyclic_action(sub, vmap, p)
