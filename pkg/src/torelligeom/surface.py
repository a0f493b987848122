"""One-vertex triangulations of closed orientable surfaces.

The canonical genus-g model is the 4g-gon with boundary word
a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1, fan-triangulated from the first
polygon corner.  All polygon corners are identified to a single vertex, so
the result is a one-vertex triangulation with F = 4g-2 triangles and
E = 6g-3 edges.

Conventions shared by every module built on top of this one:

* each triangle lists its sides in counterclockwise order; side i runs
  from corner i to corner i+1 (mod 3);
* glued sides are identified head-to-tail, so the per-triangle
  counterclockwise orientations agree globally;
* an edge's canonical direction is the direction of the first side listed
  for it (its "primary" side);
* a transverse strand crossing an edge counts +1 when it exits through the
  primary side (it then crosses from the left of the directed edge to its
  right), -1 when it exits through the secondary side.
"""

from __future__ import annotations

import hashlib
import json

SCHEMA_VERSION = "torelligeom.triangulation/1"

Side = tuple[int, int]  # (triangle index, side index 0..2)


class Triangulation:
    """A triangulated closed oriented surface with directed-side gluings.

    `tri_edges[t][i]` is the edge under side i of triangle t, and
    `glue[(t, i)]` is the side that side (t, i) is glued to.  The gluing is
    a fixed-point-free involution; the head-to-tail identification rule is
    implicit, not stored.
    """

    def __init__(self, genus, tri_edges, glue):
        self.genus = genus
        self.tri_edges = tuple(tuple(tr) for tr in tri_edges)
        self.glue = dict(glue)
        self.num_triangles = len(self.tri_edges)
        self.num_edges = 1 + max(e for tr in self.tri_edges for e in tr)
        # edge -> (primary side, secondary side), primary listed first in
        # triangle order; the primary side fixes the edge's direction.
        sides: dict[int, list[Side]] = {e: [] for e in range(self.num_edges)}
        for t, tr in enumerate(self.tri_edges):
            for i, e in enumerate(tr):
                sides[e].append((t, i))
        self.edge_sides = {e: tuple(s) for e, s in sides.items()}
        self._hash = None
        self._vertex_cycle = None

    # -- structure queries ------------------------------------------------

    def edge_of(self, t, i):
        return self.tri_edges[t][i % 3]

    def side_is_primary(self, t, i):
        return self.edge_sides[self.edge_of(t, i)][0] == (t, i % 3)

    def other_side(self, t, i):
        return self.glue[(t, i % 3)]

    def triangles_of_edge(self, e):
        return tuple(t for (t, _i) in self.edge_sides[e])

    def corner_of_sides(self, i, j):
        """Corner of a triangle shared by its distinct sides i and j."""
        i, j = i % 3, j % 3
        if j == (i + 1) % 3:
            return j
        if i == (j + 1) % 3:
            return i
        raise ValueError("sides are equal")

    def next_corner_ccw(self, t, k):
        """Successor of corner (t, k) in the rotation around the vertex.

        Rotating counterclockwise inside the wedge at corner k, the first
        side germ crossed is side k-1; the head of side (t, k-1) is glued
        to the tail of its partner, whose corner we land in.
        """
        return self.glue[(t, (k - 1) % 3)]

    def vertex_cycles(self):
        """Orbits of corners under the rotation; one orbit per vertex."""
        seen = set()
        cycles = []
        for t in range(self.num_triangles):
            for k in range(3):
                if (t, k) in seen:
                    continue
                cyc = []
                cur = (t, k)
                while cur not in seen:
                    seen.add(cur)
                    cyc.append(cur)
                    cur = self.next_corner_ccw(*cur)
                cycles.append(cyc)
        return cycles

    def vertex_cycle(self):
        """The rotation around the single vertex (corner cycle, ccw)."""
        if self._vertex_cycle is None:
            cycles = self.vertex_cycles()
            if len(cycles) != 1:
                raise ValueError("triangulation has %d vertices" % len(cycles))
            self._vertex_cycle = tuple(cycles[0])
        return self._vertex_cycle

    def edge_end_cycle(self):
        """Cyclic list of edge-end germs around the vertex, ccw.

        Entry j is the germ crossed when rotating from corner j to corner
        j+1 of `vertex_cycle`: a pair (edge, end) with end 0 = tail of the
        edge's canonical direction, 1 = head.
        """
        germs = []
        for (t, k) in self.vertex_cycle():
            side = (t, (k - 1) % 3)
            e = self.edge_of(*side)
            # side (t, k-1) is crossed at its head (corner k); the head of
            # the primary side is the head of the edge.
            end = 1 if self.side_is_primary(*side) else 0
            germs.append((e, end))
        return tuple(germs)

    # -- validation ---------------------------------------------------------

    def validate(self):
        """Return a list of human-readable invariant violations."""
        problems = []
        sides = [(t, i) for t in range(self.num_triangles) for i in range(3)]
        for s in sides:
            if s not in self.glue:
                problems.append("dangling edge side %r" % (s,))
                continue
            o = self.glue[s]
            if o == s:
                problems.append("side %r glued to itself" % (s,))
            elif self.glue.get(o) != s:
                problems.append("gluing is not an involution at %r" % (s,))
            elif self.edge_of(*s) != self.edge_of(*o):
                problems.append("glued sides %r, %r carry different edges" % (s, o))
        for e, es in self.edge_sides.items():
            if len(es) != 2:
                problems.append("edge %d has %d incident sides" % (e, len(es)))
        if problems:
            return problems  # counts below assume a closed gluing
        v = len(self.vertex_cycles())
        if v != 1:
            problems.append("vertex count %d (expected 1)" % v)
        f = self.num_triangles
        e = self.num_edges
        chi = 1 - e + f
        if chi != 2 - 2 * self.genus:
            problems.append(
                "Euler characteristic %d does not match genus %d" % (chi, self.genus)
            )
        if f != 4 * self.genus - 2:
            problems.append("face count %d (expected %d)" % (f, 4 * self.genus - 2))
        if e != 6 * self.genus - 3:
            problems.append("edge count %d (expected %d)" % (e, 6 * self.genus - 3))
        return problems

    # -- serialization ------------------------------------------------------

    def to_json(self):
        gl = sorted(
            [list(s), list(o)] for s, o in self.glue.items() if s < o
        )
        return {
            "schema": SCHEMA_VERSION,
            "genus": self.genus,
            "triangles": [list(tr) for tr in self.tri_edges],
            "gluings": gl,
        }

    @classmethod
    def from_json(cls, data):
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError("unknown triangulation schema %r" % data.get("schema"))
        glue = {}
        for s, o in data["gluings"]:
            glue[tuple(s)] = tuple(o)
            glue[tuple(o)] = tuple(s)
        return cls(data["genus"], [tuple(tr) for tr in data["triangles"]], glue)

    def hash(self):
        if self._hash is None:
            blob = json.dumps(self.to_json(), sort_keys=True).encode()
            self._hash = hashlib.sha256(blob).hexdigest()[:16]
        return self._hash

    def __eq__(self, other):
        return (
            isinstance(other, Triangulation)
            and self.tri_edges == other.tri_edges
            and self.glue == other.glue
        )

    def __hash__(self):
        return hash((self.tri_edges, tuple(sorted(self.glue.items()))))

    def __repr__(self):
        return "Triangulation(genus=%d, F=%d, E=%d)" % (
            self.genus,
            self.num_triangles,
            self.num_edges,
        )


def build_closed_surface(genus):
    """Canonical one-vertex triangulation of the closed genus-g surface.

    Polygon corners P_0 .. P_{4g-1}; boundary side s_k runs P_k -> P_{k+1}.
    Side s_{4j} is glued to s_{4j+2} reversed and s_{4j+1} to s_{4j+3}
    reversed (the surface word a_j b_j a_j^-1 b_j^-1).  Triangle U_j
    (j = 1 .. 4g-2, stored at index j-1) has corners (P_0, P_j, P_{j+1}).

    Edge numbering: edge 2j is a_{j+1}, edge 2j+1 is b_{j+1} for
    j = 0..g-1; edge 2g + (m-2) is the fan diagonal P_0 P_m for
    m = 2..4g-2.
    """
    if genus < 2:
        raise ValueError("genus must be at least 2, got %r" % (genus,))
    g = genus
    n = 4 * g

    def boundary_edge(k):
        j, r = divmod(k, 4)
        return 2 * j if r in (0, 2) else 2 * j + 1

    def diagonal_edge(m):
        return 2 * g + (m - 2)

    tri_edges = []
    for j in range(1, n - 1):  # triangle U_j at index j-1
        e0 = boundary_edge(0) if j == 1 else diagonal_edge(j)
        e1 = boundary_edge(j)
        e2 = boundary_edge(n - 1) if j == n - 2 else diagonal_edge(j + 1)
        tri_edges.append((e0, e1, e2))

    def side_of_boundary(k):
        if k == 0:
            return (0, 0)  # U_1 side 0
        if k == n - 1:
            return (n - 3, 2)  # U_{4g-2} side 2
        return (k - 1, 1)  # U_k side 1

    glue = {}
    # fan diagonals: U_j side 2 against U_{j+1} side 0
    for j in range(1, n - 2):
        glue[(j - 1, 2)] = (j, 0)
        glue[(j, 0)] = (j - 1, 2)
    # identified polygon sides
    for j in range(g):
        for off in (0, 1):
            s = side_of_boundary(4 * j + off)
            o = side_of_boundary(4 * j + off + 2)
            glue[s] = o
            glue[o] = s

    tri = Triangulation(g, tri_edges, glue)
    problems = tri.validate()
    if problems:
        raise AssertionError("canonical model invalid: %s" % problems)
    return tri


def basis_edges(tri):
    """Edge ids of the polygon loops, ordered a1, b1, ..., ag, bg."""
    return list(range(2 * tri.genus))


def diagonal_edges(tri):
    return list(range(2 * tri.genus, tri.num_edges))


# -- homology ---------------------------------------------------------------


def cyclically_ordered(theta):
    """True if the sequence of distinct circle positions is ccw-ordered.

    Positions are compared after rotating so the first is least; the test
    is that the remaining ones appear in increasing order.
    """
    base = theta[0]
    rel = [(x - base) % theta_mod(theta) for x in theta]
    return all(rel[i] < rel[i + 1] for i in range(len(rel) - 1))


def theta_mod(theta):
    # positions live on a circle of unspecified circumference; callers pass
    # indices into a cycle of known length, so use a bound above all values.
    return max(theta) + 1


def chord_crossing_sign(p, q, r, s, circumference):
    """Sign of the crossing of directed chords p->q and r->s in a disk.

    Endpoints are distinct positions on the boundary circle (0-based,
    modulo `circumference`, ccw).  Returns 0 if the chords do not cross,
    +1 if the frame (p->q direction, r->s direction) is positively
    oriented, -1 otherwise.
    """
    def between(a, x, b):
        # is x strictly inside the ccw arc from a to b?
        return (x - a) % circumference < (b - a) % circumference and x not in (a, b)

    if not (between(p, r, q) ^ between(p, s, q)):
        return 0
    # crossing; positive frame iff ccw order is p, r, q, s
    return 1 if between(p, r, q) else -1


class HomologyBasis:
    """Symplectic basis of H_1 built from the polygon edge loops.

    `loops[k]` is (edge id, orientation sign); the stored pairing matrix
    is exactly the block-diagonal standard symplectic form, with basis
    order a1, b1, ..., ag, bg.
    """

    def __init__(self, tri, loops, pairing):
        self.triangulation = tri
        self.loops = loops
        self.pairing = pairing  # 2g x 2g nested lists of ints

    @property
    def rank(self):
        return len(self.loops)


def rotation_pairing(tri, x, y):
    """Algebraic intersection of edge loops x and y from the vertex rotation.

    Each loop passes through the vertex once, arriving along its head germ
    and leaving along its tail germ; the loops cross only at the vertex,
    so the pairing is the crossing sign of the corresponding chords in the
    vertex link disk.
    """
    if x == y:
        return 0
    germs = tri.edge_end_cycle()
    pos = {}
    for idx, germ in enumerate(germs):
        pos[germ] = idx
    n = len(germs)
    return chord_crossing_sign(
        pos[(x, 1)], pos[(x, 0)], pos[(y, 1)], pos[(y, 0)], n
    )


def standard_symplectic_matrix(g):
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for k in range(g):
        J[2 * k][2 * k + 1] = 1
        J[2 * k + 1][2 * k] = -1
    return J


def homology_basis(tri):
    """Symplectic basis from the polygon sides, normalized to standard J.

    The raw pairing of the polygon loops is diagonal by symplectic pairs
    up to signs; flipping the orientation of each b-loop as needed makes
    the matrix exactly standard.  Raises if the raw pairing is not of that
    shape (which would mean the gluing is wired wrongly).
    """
    g = tri.genus
    edges = basis_edges(tri)
    raw = [[rotation_pairing(tri, x, y) for y in edges] for x in edges]
    signs = [1] * (2 * g)
    for k in range(g):
        v = raw[2 * k][2 * k + 1]
        if v not in (1, -1):
            raise AssertionError("basis loops a%d, b%d pair to %r" % (k + 1, k + 1, v))
        if v == -1:
            signs[2 * k + 1] = -1
    J = standard_symplectic_matrix(g)
    for i in range(2 * g):
        for j in range(2 * g):
            got = signs[i] * signs[j] * raw[i][j]
            if got != J[i][j]:
                raise AssertionError(
                    "pairing (%d,%d) is %d, expected %d" % (i, j, got, J[i][j])
                )
    loops = [(edges[i], signs[i]) for i in range(2 * g)]
    return HomologyBasis(tri, loops, J)


def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [
        [sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p)]
        for i in range(n)
    ]


def mat_transpose(A):
    return [list(row) for row in zip(*A)]


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def is_symplectic(M, J):
    return mat_mul(mat_transpose(M), mat_mul(J, M)) == J


def det_int(A):
    """Determinant of an integer matrix by fraction-free elimination."""
    from fractions import Fraction

    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        inv = M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] / inv
            for c in range(col, n):
                M[r][c] -= f * M[col][c]
    assert det.denominator == 1
    return int(det)
