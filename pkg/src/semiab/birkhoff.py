"""Kernel-pair radicals for subvariety reflections, and Hopf homology.

The radical of a surjection is built from its kernel pair: restrict
the reflector's radical to the pair object, cut it down by the first
projection's kernel, push forward along the second projection and
take the normal closure.  Iterating this construction over cubes of
kernel pairs gives the higher radicals, and quotients of free-module
presentations by them give exact homology in degrees 2 and 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Algebra,
    AlgebraError,
    Morphism,
    Subobject,
    compose,
    generating_set,
    sub_algebra,
    subobject,
    zero_morphism,
)
from .cubes import (
    NCube,
    cube_of_morphism,
    is_nfold_extension,
    rib_kernel_meet,
    square,
)
from .factorisation import cube_torsion_meet, unit_square
from .families import trivial_of_variety, zmod_free
from .homs import find_isomorphism, is_isomorphic, surjections
from .ops import (
    induced_on_quotient,
    into_pullback,
    join_normal,
    kernel,
    kernel_pair,
    meet_subobjects,
    normal_closure,
    pullback,
    quotient,
)
from .reflectors import (
    Reflector,
    is_free_member,
    known_protoadditive_on,
    preserves_split_sequence,
    radical,
    split_exact_sequences,
)


@dataclass(frozen=True)
class BirkhoffContext:
    """A reflector whose unit squares over the corpus are double extensions.

    The optional comparison reflector C must cut out a subcategory of
    B's and act protoadditively on it; both facts are certified over
    the corpus at construction time.
    """

    B: Reflector
    corpus: tuple[Algebra, ...]
    C: Reflector | None = None

    def __post_init__(self) -> None:
        members = [A for A in self.corpus if self.B.applies_to(A.variety)]
        checked = 0
        for A in members:
            for Y in members:
                if A.variety != Y.variety:
                    continue
                for f in surjections(A, Y):
                    checked += 1
                    if not is_nfold_extension(unit_square(self.B, f)):
                        raise AlgebraError(
                            f"unit square of a corpus surjection is not a double extension under {self.B.name}")
        object.__setattr__(self, "checked_surjections", checked)
        compared = 0
        if self.C is not None:
            # C's subcategory must sit inside B's
            for A in members:
                if self.C.applies_to(A.variety) and is_free_member(self.C, A):
                    if not is_free_member(self.B, A):
                        raise AlgebraError("comparison subcategory is not contained in the base")
            free_members = [A for A in members
                            if self.C.applies_to(A.variety) and is_free_member(self.B, A)]
            seqs = split_exact_sequences(free_members)
            for seq in seqs:
                compared += 1
                if not preserves_split_sequence(self.C, seq):
                    raise AlgebraError(
                        f"comparison reflector {self.C.name} is not protoadditive on the subcategory")
        object.__setattr__(self, "comparison_sequences", compared)


def _push_elements(f: Morphism, sub: Subobject):
    if f.dom.is_gpd:
        return (frozenset(f.map1[x] for x in sub.elements[0]),
                frozenset(f.map0[x] for x in sub.elements[1]))
    return frozenset(f.mapping[x] for x in sub.elements)


def birkhoff_radical(ctx: BirkhoffContext, f: Morphism) -> Subobject:
    """The kernel-pair radical of a surjection, in dom(f)."""
    R, p1, p2 = kernel_pair(f)
    rad = radical(ctx.B, R)
    cut = meet_subobjects(R, rad, kernel(p1))
    return normal_closure(f.dom, _push_elements(p2, cut))


def _kernel_pair_cube(c: NCube) -> tuple[NCube, Morphism, Morphism]:
    """Levelwise kernel pairs of the last-axis connecting maps.

    Returns the cube one dimension down together with the top-level
    projection pair.
    """
    if c.dim < 2:
        raise AlgebraError("kernel-pair cubes need dimension >= 2")
    last = c.dim - 1
    dom_face = c.face(last, 0)
    n1 = c.dim - 1
    verts: dict[int, Algebra] = {}
    proj1: dict[int, Morphism] = {}
    proj2: dict[int, Morphism] = {}
    for s in range(1 << n1):
        R, p1, p2 = kernel_pair(c.edge(s, last))
        verts[s] = R
        proj1[s] = p1
        proj2[s] = p2
    edges: dict[tuple[int, int], Morphism] = {}
    for (s, k), dmap in dom_face.edges.items():
        t = s | (1 << k)
        edges[(s, k)] = into_pullback(verts[t], proj1[t], proj2[t],
                                      compose(dmap, proj1[s]), compose(dmap, proj2[s]))
    return NCube(n1, verts, edges), proj1[0], proj2[0]


def _module_span(A: Algebra, seed) -> frozenset:
    """The submodule of A spanned by the seed elements."""
    add = A.add
    closed = {0}
    for g in seed:
        if g in closed:
            continue
        multiples, sg = [], g
        while sg != 0:
            multiples.append(sg)
            sg = add[sg][g]
        for x in list(closed):
            for y in multiples:
                closed.add(add[x][y])
    return frozenset(closed)


def _pair_span(A: Algebra, seed) -> set:
    """Span of a set of element pairs under componentwise operations."""
    add = A.add
    closed = {(0, 0)}
    for g in seed:
        if g in closed:
            continue
        gx, gy = g
        multiples, sx, sy = [], gx, gy
        while (sx, sy) != (0, 0):
            multiples.append((sx, sy))
            sx = add[sx][gx]
            sy = add[sy][gy]
        for x, y in list(closed):
            for ux, uy in multiples:
                closed.add((add[x][ux], add[y][uy]))
    return closed


def _square_radical_on_modules(B: Reflector, c: NCube) -> Subobject:
    """Dimension-two radical of a module square, on raw element pairs.

    Same recursion as the cube route, but the kernel pairs stay plain
    pair sets instead of materialised product algebras; free covers in
    presentation squares are too large for the latter.  Only radicals
    acting by a scalar fit this shape, which covers every module
    reflector shipped here.
    """
    F0 = c.top_vertex
    m = F0.variety.modulus
    kmul = F0.act[(B.k or 0) % m]
    a1 = c.rib(0).mapping
    a2 = c.rib(1).mapping
    buckets: dict[int, list[int]] = {}
    for x in range(F0.order):
        buckets.setdefault(a2[x], []).append(x)
    # pairs agreeing under a2 form the top kernel pair; a pair maps
    # downstairs to its componentwise a1 image.  The inner radical is
    # spanned by k-th multiples of pairs sharing their image with a
    # k-killed pair, and cutting by the first projection's kernel then
    # leaves the second components over zero.
    marked: set[tuple[int, int]] = set()
    for bucket in buckets.values():
        killed = [x for x in bucket if kmul[x] == 0]
        for x in killed:
            for y in killed:
                marked.add((a1[x], a1[y]))
    seeds: set[tuple[int, int]] = set()
    for bucket in buckets.values():
        for x in bucket:
            ax = a1[x]
            kx = kmul[x]
            for y in bucket:
                if (ax, a1[y]) in marked:
                    seeds.add((kx, kmul[y]))
    inner = _pair_span(F0, seeds)
    return subobject(F0, _module_span(F0, {y for x, y in inner if x == 0}))


def radical_n(ctx: BirkhoffContext, c: NCube) -> Subobject:
    """The n-th radical of an n-cube, in its top vertex.

    Dimension one is the kernel-pair radical; above that, the cube of
    levelwise kernel pairs along the last axis carries the recursion.
    Module squares under a scalar-acting radical run the same recursion
    on raw pair sets instead; see _square_radical_on_modules.
    """
    if c.dim == 1:
        return birkhoff_radical(ctx, c.arrow)
    if (c.dim == 2 and c.top_vertex.kind == "zmod-module"
            and (ctx.B.k is not None or ctx.B.name == "id")):
        return _square_radical_on_modules(ctx.B, c)
    return _radical_n_cube(ctx, c)


def _radical_n_cube(ctx: BirkhoffContext, c: NCube) -> Subobject:
    """Materialised kernel-pair recursion, any variety."""
    rcube, p1, p2 = _kernel_pair_cube(c)
    inner = radical_n(ctx, rcube)
    cut = meet_subobjects(rcube.top_vertex, inner, kernel(p1))
    return normal_closure(c.top_vertex, _push_elements(p2, cut))


def is_birkhoff_normal(ctx: BirkhoffContext, c: NCube) -> bool:
    """Vanishing of the cube's radical.

    When the reflector is protoadditive on the variety the verdict is
    recomputed from the rib-kernel meet and the two must agree.
    """
    if not is_nfold_extension(c):
        raise AlgebraError("normality test expects an n-fold extension")
    verdict = radical_n(ctx, c).is_zero()
    if known_protoadditive_on(ctx.B, c.top_vertex.kind):
        if cube_torsion_meet(ctx.B, c).is_zero() != verdict:
            raise AlgebraError("radical route and kernel-meet route disagree")
    return verdict


def centralize(ctx: BirkhoffContext, c: NCube) -> NCube:
    """Quotient the top vertex by the cube's radical."""
    if not is_nfold_extension(c):
        raise AlgebraError("centralisation expects an n-fold extension")
    rad = radical_n(ctx, c)
    _, q = quotient(c.top_vertex, rad)
    if c.dim == 1:
        out = cube_of_morphism(induced_on_quotient(q, c.arrow))
    else:
        verts = dict(c.vertices)
        verts[0] = q.cod
        edges = dict(c.edges)
        for axis in range(c.dim):
            edges[(0, axis)] = induced_on_quotient(q, c.rib(axis))
        out = NCube(c.dim, verts, edges)
    if not is_birkhoff_normal(ctx, out):
        raise AlgebraError("centralisation did not reach a normal cube")
    return out


def composite_radical(ctx: BirkhoffContext, c: NCube, mode: str) -> Subobject:
    """Radical for a sharpened subcategory, as a join in the top vertex.

    mode "join": the radical for the comparison subcategory C itself.
    mode "intersection": the radical for the meet of B with a second
    subcategory, which is C's role in the context.  Both are the join
    of the B-radical with the normal closure of C's radical of the
    rib-kernel meet; the ambient object is always the top vertex.
    """
    if ctx.C is None:
        raise AlgebraError("composite radicals need a comparison reflector")
    if mode not in ("join", "intersection"):
        raise AlgebraError(f"unknown mode {mode!r}")
    if not is_nfold_extension(c):
        raise AlgebraError("composite radical expects an n-fold extension")
    base = radical_n(ctx, c)
    extra = cube_torsion_meet(ctx.C, c)
    closed = normal_closure(c.top_vertex, extra.elements)
    return join_normal(c.top_vertex, base, closed)


def object_cube(A: Algebra) -> NCube:
    """An algebra as the 1-cube onto the zero object of its variety."""
    Z = trivial_of_variety(A.variety)
    return cube_of_morphism(zero_morphism(A, Z))


# ---------------------------------------------------------------------------
# presentations and homology


def _is_free_module(V: Algebra) -> bool:
    m = V.variety.modulus
    rank, size = 0, 1
    while size < V.order:
        size *= m
        rank += 1
    if size != V.order:
        return False
    p = next((d for d in range(2, m + 1) if m % d == 0), None)
    q = m
    while p is not None and q % p == 0:
        q //= p
    if p is not None and q == 1:
        # prime-power modulus: free means every cyclic summand has full
        # length, which pins the size of the (m/p)-annihilator
        killed = sum(1 for x in range(V.order) if V.act[m // p][x] == 0)
        return killed == (m // p) ** rank
    return find_isomorphism(V, zmod_free(m, rank)) is not None


@dataclass(frozen=True)
class Presentation:
    """An n-fold extension with free modules everywhere above the base."""

    n: int
    cube: NCube

    def __post_init__(self) -> None:
        if self.cube.dim != self.n:
            raise AlgebraError("presentation dimension mismatch")
        if not is_nfold_extension(self.cube):
            raise AlgebraError("presentation is not an n-fold extension")
        bottom = (1 << self.n) - 1
        for mask, V in self.cube.vertices.items():
            if mask != bottom and not _is_free_module(V):
                raise AlgebraError("presentation has a non-free upper vertex")


def _presentation_map(A: Algebra, variant: int) -> Morphism:
    """A free cover of A; higher variants augment the rank."""
    m = A.variety.modulus
    gens = generating_set(A)
    rank = len(gens) + variant
    targets = gens + [0] * variant
    F = zmod_free(m, rank)
    mapping = []
    for x in range(F.order):
        acc, rest = 0, x
        for i in range(rank):
            digit = rest % m
            rest //= m
            acc = A.add[acc][A.act[digit][targets[i]]]
        mapping.append(acc)
    return Morphism(F, A, tuple(mapping))


def build_presentation(A: Algebra, n: int, variant: int = 0) -> Presentation:
    if A.kind != "zmod-module":
        raise AlgebraError("presentations live in module varieties")
    if n not in (1, 2):
        raise AlgebraError("presentation dimension must be 1 or 2")
    p = _presentation_map(A, variant)
    if n == 1:
        return Presentation(1, cube_of_morphism(p))
    # the variant already changed the legs, hence P; a minimal cover of
    # P keeps the top vertex small
    P, pi1, pi2 = pullback(p, p)
    cover = _presentation_map(P, 0)
    a1 = compose(pi1, cover)
    a2 = compose(pi2, cover)
    return Presentation(2, square(a1, a2, p, p))


def _quotient_of_sub(parent: Algebra, num: Subobject, den: Subobject) -> Algebra:
    """The quotient num/den as an algebra, for den normal inside num."""
    sub, incl = sub_algebra(parent, num)
    index_of = {incl.mapping[i]: i for i in range(sub.order)}
    den_in_sub = subobject(sub, frozenset(index_of[x] for x in den.elements))
    H, _ = quotient(sub, den_in_sub)
    return H


def hopf_homology(ctx: BirkhoffContext, A: Algebra, degree: int) -> Algebra:
    """Exact homology of A in degree 2 or 3.

    Computes the kernel-intersection quotient over a free presentation
    and re-runs it on an independent, rank-augmented presentation; the
    two results must be isomorphic.
    """
    if A.kind != "zmod-module":
        raise AlgebraError("homology is computed in module varieties")
    if degree not in (2, 3):
        raise AlgebraError("degree must be 2 or 3")
    first = _hopf_once(ctx, A, degree, 0)
    second = _hopf_once(ctx, A, degree, 1)
    if not is_isomorphic(first, second):
        raise AlgebraError("presentation independence failed; this is a bug")
    return first


def _hopf_once(ctx: BirkhoffContext, A: Algebra, degree: int, variant: int) -> Algebra:
    pres = build_presentation(A, degree - 1, variant)
    c = pres.cube
    top = c.top_vertex
    num = meet_subobjects(top, radical(ctx.B, top), rib_kernel_meet(c))
    den = radical_n(ctx, c)
    if known_protoadditive_on(ctx.B, A.kind):
        alt = cube_torsion_meet(ctx.B, c)
        if alt.elements != den.elements:
            raise AlgebraError("radical route and kernel-meet route disagree")
    if not den <= num:
        raise AlgebraError("radical escaped the Hopf numerator")
    return _quotient_of_sub(top, num, den)
