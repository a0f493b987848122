"""Essential simple closed curves as normal coordinates.

A curve transverse to the triangulation is recorded as a cyclic sequence of
arcs (triangle, entry side, exit side); consecutive arcs share an edge
crossing.  Tightening removes folds: an arc entering and leaving through
the same side is isotoped across that edge, cancelling two crossings.  A
fold-free sequence is in normal position with respect to the vertex kept
fixed, and its crossing counts are canonical coordinates for the curve up
to isotopy in the punctured surface.

On the closed surface isotopies may also slide strands across the vertex,
and distinct fold-free vectors can represent the same closed isotopy class
(a genus-two separating curve already admits two minimal positions, one on
each side of the vertex).  Equality of closed classes therefore has two
layers: equal vectors, or the annulus criterion tested by the overlay
machinery.  Null-homotopy on the closed surface is decided exactly by
Dehn's algorithm on the word a transverse loop spells in the polygon
generators.

Within a triangle with side weights w0, w1, w2 the arcs cutting corner k
number (w[k-1] + w[k] - w[k+1]) / 2; positions along side k run from
corner k to corner k+1, with the corner-k arcs occupying the low
positions.  Gluing reverses positions: side position p matches position
w-1-p on the partner side.
"""

from __future__ import annotations

from .surface import Triangulation

Arc = tuple[int, int, int]  # (triangle, entry side, exit side)


class CurveError(ValueError):
    pass


class InessentialCurveError(CurveError):
    """The input reduces to nothing or to the vertex link."""


class MulticurveError(CurveError):
    """The input traces to more than one component."""


# ---------------------------------------------------------------------------
# arc sequences
# ---------------------------------------------------------------------------


def check_arcs(tri, arcs):
    """Verify that consecutive arcs are glued consistently."""
    n = len(arcs)
    for k, (t, i, j) in enumerate(arcs):
        if not (0 <= t < tri.num_triangles and 0 <= i < 3 and 0 <= j < 3):
            raise CurveError("malformed arc %r" % ((t, i, j),))
        t2, i2, _ = arcs[(k + 1) % n]
        if tri.glue[(t, j)] != (t2, i2):
            raise CurveError(
                "arc %d exits side %r but arc %d enters side %r"
                % (k, (t, j), (k + 1) % n, (t2, i2))
            )


def _remove_one_fold(arcs):
    n = len(arcs)
    for k in range(n):
        t, i, j = arcs[k]
        if i == j:
            if n <= 2:
                # the neighbours must be folds too; the curve dies
                return []
            km1, kp1 = (k - 1) % n, (k + 1) % n
            merged = (arcs[km1][0], arcs[km1][1], arcs[kp1][2])
            out = []
            idx = (kp1 + 1) % n
            while idx != km1:
                out.append(arcs[idx])
                idx = (idx + 1) % n
            out.append(merged)
            if len(out) == 1 and out[0][1] != out[0][2]:
                raise CurveError("arc sequence collapsed inconsistently")
            return out
    return None


def reduce_arcs(tri, arcs):
    """Remove all folds; returns the normal-position arc sequence.

    The empty list means the curve was null-homotopic away from the
    vertex.  A nonempty fold-free sequence may still be null-homotopic on
    the closed surface (it can encircle the vertex); `loop_is_trivial`
    decides that.
    """
    arcs = list(arcs)
    while True:
        step = _remove_one_fold(arcs)
        if step is None:
            return arcs
        arcs = step


def arcs_to_weights(tri, arcs):
    w = [0] * tri.num_edges
    for (t, _i, j) in arcs:
        w[tri.edge_of(t, j)] += 1
    return tuple(w)


# ---------------------------------------------------------------------------
# the word a transverse loop spells in the polygon generators
# ---------------------------------------------------------------------------
#
# The 2g identified polygon sides generate the fundamental group; the fan
# diagonals bound disks with them, so only crossings over edges 0..2g-1
# contribute letters.  A crossing contributes the generator with exponent
# +1 when the strand exits through the edge's primary side.  The vertex
# link spells the surface relator (up to rotation and inversion), and a
# transverse loop is null-homotopic iff its word is trivial in the
# one-relator quotient, which Dehn's algorithm decides for genus >= 2.

_RELATOR_CACHE = {}


def loop_word(tri, arcs):
    """Word in the polygon generators spelled by a transverse loop."""
    word = []
    for (t, _i, j) in arcs:
        e = tri.edge_of(t, j)
        if e < 2 * tri.genus:
            word.append((e, 1 if tri.side_is_primary(t, j) else -1))
    return word


def surface_relator(tri):
    """Relator spelled by the vertex link; length 4g."""
    key = tri.hash()
    if key not in _RELATOR_CACHE:
        arcs = [(t, k, (k - 1) % 3) for (t, k) in tri.vertex_cycle()]
        word = loop_word(tri, arcs)
        if len(word) != 4 * tri.genus:
            raise AssertionError("vertex link spells a word of length %d" % len(word))
        _RELATOR_CACHE[key] = tuple(word)
    return _RELATOR_CACHE[key]


def _free_reduce_cyclic(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out.pop()
        out.pop(0)
    return out


def _inverse_word(word):
    return [(g, -e) for (g, e) in reversed(word)]


def is_trivial_word(word, relator):
    """Dehn's algorithm for the standard genus-g surface presentation.

    The relator has length 4g with every generator appearing twice, so
    pieces have length one and the presentation is C'(1/6) for g >= 2:
    a nontrivial trivial-in-the-group word always contains more than half
    of a cyclic rotation of the relator or its inverse, which we replace
    by the strictly shorter complement until the word empties or no such
    subword remains.
    """
    L = len(relator)
    half = L // 2
    rotations = []
    for base in (list(relator), _inverse_word(list(relator))):
        for r in range(L):
            rotations.append(base[r:] + base[:r])
    w = _free_reduce_cyclic(list(word))
    while w:
        n = len(w)
        best = None
        for rot in rotations:
            m = 0
            # longest prefix of rot appearing cyclically in w, per start
            for start in range(n):
                m = 0
                while m < min(n, L) and w[(start + m) % n] == rot[m]:
                    m += 1
                if m > half:
                    best = (start, m, rot)
                    break
            if best:
                break
        if best is None:
            return False
        start, m, rot = best
        # replace rot[:m] by inverse of rot[m:]
        rest = [w[(start + m + k) % n] for k in range(n - m)]
        w = _free_reduce_cyclic(rest + _inverse_word(rot[m:]))
    return True


def loop_is_trivial(tri, arcs):
    """Is the closed transverse loop null-homotopic on the closed surface?"""
    arcs = reduce_arcs(tri, arcs)
    if not arcs:
        return True
    return is_trivial_word(loop_word(tri, arcs), surface_relator(tri))


# ---------------------------------------------------------------------------
# tracing normal coordinates
# ---------------------------------------------------------------------------


def corner_counts(tri, weights, t):
    """Number of arcs cutting each corner of triangle t, or None."""
    w = [weights[e] for e in tri.tri_edges[t]]
    out = []
    for k in range(3):
        v = w[(k - 1) % 3] + w[k] - w[(k + 1) % 3]
        if v < 0 or v % 2:
            return None
        out.append(v // 2)
    return out


def satisfies_matching(tri, weights):
    return all(corner_counts(tri, weights, t) is not None for t in range(tri.num_triangles))


def _in_triangle_partner(tri, weights, t, i, p):
    """Other endpoint of the arc through side position (t, i, p)."""
    n = corner_counts(tri, weights, t)
    w = [weights[e] for e in tri.tri_edges[t]]
    if p < n[i]:
        # arc cutting corner i, partner on side i-1
        return (t, (i - 1) % 3, w[(i - 1) % 3] - 1 - p)
    q = w[i] - 1 - p
    if q < n[(i + 1) % 3]:
        # arc cutting corner i+1, partner on side i+1
        return (t, (i + 1) % 3, q)
    raise AssertionError("position does not lie on any arc")


def _across_edge(tri, weights, t, i, p):
    t2, i2 = tri.glue[(t, i)]
    w = weights[tri.edge_of(t, i)]
    return (t2, i2, w - 1 - p)


def trace_components(tri, weights):
    """Split a normal multicurve into components.

    Returns a list of components, each a dict with `weights`, `arcs`
    (a canonical transverse traversal) and `exits`, the side-local
    position of each arc's exit crossing.  Raises CurveError when the
    matching conditions fail.
    """
    if len(weights) != tri.num_edges:
        raise CurveError("weight vector has wrong length")
    if any(x < 0 for x in weights):
        raise CurveError("negative weight")
    if not satisfies_matching(tri, weights):
        raise CurveError("matching conditions fail; not a normal multicurve")
    seen = set()
    components = []
    for t0 in range(tri.num_triangles):
        for i0 in range(3):
            w0 = weights[tri.edge_of(t0, i0)]
            for p0 in range(w0):
                if (t0, i0, p0) in seen:
                    continue
                arcs = []
                exits = []
                cw = [0] * tri.num_edges
                t, i, p = t0, i0, p0
                while (t, i, p) not in seen:
                    seen.add((t, i, p))
                    t2, i2, p2 = _in_triangle_partner(tri, weights, t, i, p)
                    seen.add((t2, i2, p2))
                    arcs.append((t, i, i2))
                    exits.append((t2, i2, p2))
                    cw[tri.edge_of(t2, i2)] += 1
                    t, i, p = _across_edge(tri, weights, t2, i2, p2)
                components.append({"weights": tuple(cw), "arcs": arcs, "exits": exits})
    return components


# ---------------------------------------------------------------------------
# NormalCurve
# ---------------------------------------------------------------------------


class NormalCurve:
    """An essential simple closed curve in taut normal position."""

    __slots__ = ("surface", "weights", "_arcs", "_hash")

    def __init__(self, surface, weights, _arcs=None):
        self.surface = surface
        self.weights = tuple(weights)
        self._arcs = _arcs
        self._hash = hash((surface.hash(), self.weights))

    @property
    def arcs(self):
        """Canonical transverse traversal (cyclic arc sequence)."""
        if self._arcs is None:
            comps = trace_components(self.surface, self.weights)
            assert len(comps) == 1
            self._arcs = comps[0]["arcs"]
        return self._arcs

    def total_weight(self):
        return sum(self.weights)

    def visit_edges(self):
        tri = self.surface
        return [tri.edge_of(t, j) for (t, _i, j) in self.arcs]

    def __eq__(self, other):
        return (
            isinstance(other, NormalCurve)
            and self.surface.hash() == other.surface.hash()
            and self.weights == other.weights
        )

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.total_weight(), self.weights) < (other.total_weight(), other.weights)

    def __repr__(self):
        return "NormalCurve(%s)" % (self.weights,)

    def to_json(self):
        return {"surface": self.surface.hash(), "weights": list(self.weights)}


class OrientedCurve:
    """A normal curve with a traversal direction.

    Orientation +1 follows the canonical traced traversal; -1 reverses it
    and negates the homology class.
    """

    __slots__ = ("curve", "orientation")

    def __init__(self, curve, orientation=1):
        if orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        self.curve = curve
        self.orientation = orientation

    def reversed(self):
        return OrientedCurve(self.curve, -self.orientation)

    def __eq__(self, other):
        return (
            isinstance(other, OrientedCurve)
            and self.curve == other.curve
            and self.orientation == other.orientation
        )

    def __hash__(self):
        return hash((self.curve, self.orientation))

    def __repr__(self):
        return "OrientedCurve(%r, %+d)" % (self.curve.weights, self.orientation)


def curve_from_weights(surface, weights):
    """Build a NormalCurve, insisting on one essential component."""
    comps = trace_components(surface, weights)
    if len(comps) == 0:
        raise InessentialCurveError("empty weight vector")
    if len(comps) > 1:
        raise MulticurveError("weights trace to %d components" % len(comps))
    arcs = comps[0]["arcs"]
    if loop_is_trivial(surface, arcs):
        raise InessentialCurveError("curve is null-homotopic")
    return NormalCurve(surface, weights, _arcs=arcs)


def curve_from_arcs(surface, arcs, check=True):
    """Tighten a closed transverse curve and return its normal form."""
    if check:
        check_arcs(surface, arcs)
    reduced = reduce_arcs(surface, arcs)
    if not reduced or is_trivial_word(
        loop_word(surface, reduced), surface_relator(surface)
    ):
        raise InessentialCurveError("curve is null-homotopic")
    weights = arcs_to_weights(surface, reduced)
    comps = trace_components(surface, weights)
    if len(comps) != 1:
        raise AssertionError(
            "reduced sequence is not in normal position (%d components)" % len(comps)
        )
    return NormalCurve(surface, weights, _arcs=comps[0]["arcs"])


def is_null_homotopic_arcs(surface, arcs):
    """Null-homotopy oracle for closed transverse loops (closed surface)."""
    return loop_is_trivial(surface, arcs)


def normalize(surface, raw):
    """Spec-level entry point: accepts a weight vector or an arc sequence."""
    if raw and isinstance(raw[0], (list, tuple)):
        return curve_from_arcs(surface, [tuple(a) for a in raw])
    return curve_from_weights(surface, tuple(raw))


# ---------------------------------------------------------------------------
# homology
# ---------------------------------------------------------------------------


def signed_edge_crossings(tri, arcs, orientation=1):
    """Signed crossing counts of the traversal over every edge.

    A crossing counts +1 when the strand exits through the primary side of
    the edge (it then crosses the directed edge left to right).
    """
    tot = [0] * tri.num_edges
    for (t, _i, j) in arcs:
        e = tri.edge_of(t, j)
        tot[e] += orientation if tri.side_is_primary(t, j) else -orientation
    return tot


def homology_class(basis, oc):
    """Class of an oriented curve in the fixed symplectic basis.

    With basis vectors a_j, b_j satisfying <a_j, b_j> = +1, a class c
    decomposes as sum of <c, b_j> a_j - <c, a_j> b_j.
    """
    tri = basis.triangulation
    curve = oc.curve if isinstance(oc, OrientedCurve) else oc
    orientation = oc.orientation if isinstance(oc, OrientedCurve) else 1
    tot = signed_edge_crossings(tri, curve.arcs, orientation)
    g = tri.genus
    vec = [0] * (2 * g)
    for j in range(g):
        a_edge, a_sign = basis.loops[2 * j]
        b_edge, b_sign = basis.loops[2 * j + 1]
        vec[2 * j] = b_sign * tot[b_edge]
        vec[2 * j + 1] = -a_sign * tot[a_edge]
    return tuple(vec)


def algebraic_pairing(J, u, v):
    n = len(u)
    return sum(u[i] * J[i][j] * v[j] for i in range(n) for j in range(n))


def is_homologically_trivial(basis, curve):
    return all(x == 0 for x in homology_class(basis, OrientedCurve(curve, 1)))


# ---------------------------------------------------------------------------
# push-off seed curves
# ---------------------------------------------------------------------------


def _subgraph_boundary_walks(tri, edge_set):
    """Boundary circles of a regular neighbourhood of the edge subgraph.

    Each circle is returned as the cyclic list of germ positions it
    crosses (indices into `edge_end_cycle`); G-germs are never crossed.
    """
    germs = tri.edge_end_cycle()
    n = len(germs)
    pos = {germ: idx for idx, germ in enumerate(germs)}
    darts = [(e, end) for e in sorted(edge_set) for end in (0, 1)]

    def next_dart_and_crossings(d):
        e, end = d
        other = (e, 1 - end)
        crossings = []
        idx = (pos[other] + 1) % n
        while germs[idx][0] not in edge_set:
            crossings.append(idx)
            idx = (idx + 1) % n
        return germs[idx], crossings

    walks = []
    unused = set(darts)
    while unused:
        d0 = min(unused)
        circle = []
        d = d0
        while True:
            unused.discard(d)
            d, crossings = next_dart_and_crossings(d)
            circle.extend(crossings)
            if d == d0:
                break
        walks.append(circle)
    return walks


def _crossing_positions_to_arcs(tri, positions):
    """Arcs of a strand crossing the given germ positions in order.

    After crossing germ i the strand sits in the wedge i+1; the arc to the
    next crossing j lies in that wedge's triangle, entering through germ
    i's side and leaving through germ j's side of the same triangle.
    """
    wedges = tri.vertex_cycle()
    germs = tri.edge_end_cycle()
    n = len(germs)
    arcs = []
    m = len(positions)
    for a in range(m):
        i = positions[a]
        j = positions[(a + 1) % m]
        t, _k = wedges[(i + 1) % n]
        sides_by_edge = {}
        for s in range(3):
            sides_by_edge.setdefault(tri.edge_of(t, s), []).append(s)
        e_in, e_out = germs[i][0], germs[j][0]
        if len(sides_by_edge.get(e_in, [])) != 1 or len(sides_by_edge.get(e_out, [])) != 1:
            raise AssertionError("ambiguous side lookup in wedge triangle")
        arcs.append((t, sides_by_edge[e_in][0], sides_by_edge[e_out][0]))
    return arcs


def subgraph_boundary_curves(tri, edge_set):
    """Essential boundary curves of a neighbourhood of an edge subgraph.

    Inessential circles (null-homotopic boundaries) are dropped.  Circles
    are reported as plain NormalCurves, deduplicated.
    """
    curves = []
    for walk in _subgraph_boundary_walks(tri, set(edge_set)):
        if not walk:
            continue
        arcs = _crossing_positions_to_arcs(tri, walk)
        try:
            c = curve_from_arcs(tri, arcs)
        except InessentialCurveError:
            continue
        if c not in curves:
            curves.append(c)
    return curves


def edge_pushoff(tri, e):
    """The curve isotopic to the edge loop e, pushed off the vertex.

    The two boundary circles of an annular neighbourhood of the loop are
    isotopic on the closed surface but may normalize to different vectors
    (they sit on opposite sides of the vertex); the lighter one is the
    canonical representative.
    """
    curves = subgraph_boundary_curves(tri, {e})
    if not 1 <= len(curves) <= 2:
        raise AssertionError("edge %d pushoff produced %d vectors" % (e, len(curves)))
    return min(curves)


def handle_edges(tri, handles):
    """Edge ids of the polygon loops a_j, b_j for the given handles (1-based)."""
    out = set()
    for h in handles:
        if not 1 <= h <= tri.genus:
            raise ValueError("handle %r out of range" % (h,))
        out.add(2 * (h - 1))
        out.add(2 * (h - 1) + 1)
    return out


def handle_separating_curve(tri, handles):
    """Separating curve bounding a neighbourhood of the given handles."""
    curves = subgraph_boundary_curves(tri, handle_edges(tri, handles))
    if len(curves) != 1:
        raise AssertionError(
            "handle set %r boundary is not a single class (%d found)"
            % (sorted(handles), len(curves))
        )
    return curves[0]


def homologous_chain(tri, count=None):
    """Disjoint, pairwise non-isotopic curves all homologous to a_1.

    Entry 0 is the a_1 pushoff; entry j is the boundary circle of a
    neighbourhood of a_1 together with handles 2..j+1 that is not isotopic
    to a_1 (a parallel copy of a_1 slid over those handles).  Entries i < j
    cobound a subsurface of genus j - i, so every pair is a bounding pair.

    The chain caps at g - 1 curves: sliding over all of handles 2..g gives
    back a curve isotopic to a_1 (the leftover complement is an annulus).
    Three disjoint pairwise-bounding curves split the surface into three
    positive-genus pieces in a cycle, so triples exist only for g >= 4.
    """
    g = tri.genus
    if count is None:
        count = g - 1
    if not 1 <= count <= g - 1:
        raise ValueError("chain length must be between 1 and genus - 1")
    base = edge_pushoff(tri, 0)
    chain = [base]
    for j in range(1, count):
        edge_set = {0} | handle_edges(tri, range(2, j + 2))
        circles = subgraph_boundary_curves(tri, edge_set)
        new = [c for c in circles if c != base]
        if len(new) != 1:
            raise AssertionError(
                "chain step %d produced %d new classes" % (j, len(new))
            )
        chain.append(new[0])
    return chain
