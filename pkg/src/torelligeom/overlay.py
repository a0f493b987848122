"""Transverse positions of curve systems, intersection numbers, cutting.

Curves are realized transversally by ordering their crossings along each
edge; inside a triangle every strand is a chord recorded by its two
boundary coordinates (side index plus a fractional position, giving a
point of the boundary circle [0, 3)).  Two chords cross if and only if
their endpoints interleave, so all geometry reduces to exact cyclic-order
tests on fractions.

Geometric intersection numbers are computed by bigon removal: a pair of
crossings that are adjacent along both curves bounds a bigon exactly when
the loop formed by the two connecting sub-arcs is null-homotopic, which
the arc-sequence reducer decides.  Rerouting the second curve across the
bigon (a parallel shadow of the first curve's side) removes two crossings;
when no bigon remains the count is minimal.

Cutting along a disjoint system uses the complementary regions of the
final crossing-free position: faces of each triangle are glued across the
edge gaps between consecutive crossings, and each region's Euler
characteristic is #faces - #gaps + (1 if it contains the vertex).
"""

from __future__ import annotations

from fractions import Fraction

from .surface import chord_crossing_sign, homology_basis
from .curves import (
    NormalCurve,
    OrientedCurve,
    curve_from_weights,
    homology_class,
    algebraic_pairing,
    is_null_homotopic_arcs,
    trace_components,
)


class _Token:
    """One crossing of a curve over an edge.

    `exit_side` is the triangle side the strand crosses out through; the
    strand continues into the glued triangle.
    """

    __slots__ = ("curve", "edge", "exit_side")

    def __init__(self, curve, edge, exit_side):
        self.curve = curve
        self.edge = edge
        self.exit_side = exit_side

    def __repr__(self):
        return "_Token(c%d, e%d, %r)" % (self.curve, self.edge, self.exit_side)


class Overlay:
    """Several curves in explicit transverse position on one surface."""

    def __init__(self, tri):
        self.tri = tri
        self.tokens = {}      # curve id -> cyclic token list, forward order
        self.edge_order = {e: [] for e in range(tri.num_edges)}
        self._next_id = 0

    # -- construction -------------------------------------------------------

    def add_curve(self, curve):
        """Place a NormalCurve at its taut position, merging edge orders."""
        tri = self.tri
        cid = self._next_id
        self._next_id += 1
        comps = trace_components(tri, curve.weights)
        if len(comps) != 1:
            raise ValueError("overlay curves must be single components")
        arcs = comps[0]["arcs"]
        exits = comps[0]["exits"]
        toks = []
        per_edge = {}
        for (t, j, p) in exits:
            e = tri.edge_of(t, j)
            w = curve.weights[e]
            idx = p if tri.side_is_primary(t, j) else w - 1 - p
            tok = _Token(cid, e, (t, j))
            toks.append(tok)
            per_edge.setdefault(e, []).append((idx, tok))
        self.tokens[cid] = toks
        for e, items in per_edge.items():
            w = curve.weights[e]
            existing = self.edge_order[e]
            merged = []
            old = [(Fraction(r + 1, len(existing) + 1), tok) for r, tok in enumerate(existing)]
            new = sorted(
                ((Fraction(idx + 1, w + 1), tok) for idx, tok in items),
                key=lambda kv: kv[0],
            )
            i = j = 0
            while i < len(old) or j < len(new):
                if j >= len(new) or (i < len(old) and old[i][0] <= new[j][0]):
                    merged.append(old[i][1])
                    i += 1
                else:
                    merged.append(new[j][1])
                    j += 1
            self.edge_order[e] = merged
        return cid

    # -- geometry -----------------------------------------------------------

    def _positions(self):
        pos = {}
        for e, toks in self.edge_order.items():
            n = len(toks)
            for r, tok in enumerate(toks):
                pos[id(tok)] = Fraction(r + 1, n + 1)
        return pos

    def _theta(self, pos, tok, side):
        t, i = side
        frac = pos[id(tok)]
        if not self.tri.side_is_primary(t, i):
            frac = 1 - frac
        return i + frac

    def arcs_of(self, cid, pos=None):
        """Chords of the curve: (triangle, theta_in, theta_out, entry, exit)."""
        if pos is None:
            pos = self._positions()
        tri = self.tri
        toks = self.tokens[cid]
        n = len(toks)
        out = []
        for k in range(n):
            a, b = toks[k], toks[(k + 1) % n]
            s_in = tri.glue[a.exit_side]
            s_out = b.exit_side
            if s_in[0] != s_out[0]:
                raise AssertionError("inconsistent token chain")
            out.append(
                (s_in[0], self._theta(pos, a, s_in), self._theta(pos, b, s_out), s_in, s_out)
            )
        return out

    def pair_crossings(self, ca, cb):
        """All crossings between two curves, with per-curve cyclic orders.

        Returns a list of dicts sorted along curve `ca`; key `b_pos` gives
        the index of each crossing in the order along `cb`.
        """
        pos = self._positions()
        arcs_a = self.arcs_of(ca, pos)
        arcs_b = self.arcs_of(cb, pos)
        by_tri_b = {}
        for l, arc in enumerate(arcs_b):
            by_tri_b.setdefault(arc[0], []).append((l, arc))
        found = []
        for k, (t, a_in, a_out, _si, _so) in enumerate(arcs_a):
            for l, (_t, b_in, b_out, _bsi, _bso) in by_tri_b.get(t, []):
                s = chord_crossing_sign(a_in, a_out, b_in, b_out, 3)
                if s == 0:
                    continue
                u = b_in if _ccw_between(a_in, b_in, a_out) else b_out
                v = a_in if _ccw_between(b_in, a_in, b_out) else a_out
                found.append(
                    {
                        "a_arc": k,
                        "b_arc": l,
                        "sign": s,
                        "tri": t,
                        "a_key": (k, (u - a_in) % 3),
                        "b_key": (l, (v - b_in) % 3),
                        "a_thetas": (a_in, a_out),
                        "b_thetas": (b_in, b_out),
                    }
                )
        found.sort(key=lambda x: x["a_key"])
        order_b = sorted(range(len(found)), key=lambda i: found[i]["b_key"])
        for rank, i in enumerate(order_b):
            found[i]["b_pos"] = rank
        return found

    def self_consistent(self, cid):
        """No self-crossings: sanity check for embedded positions."""
        pos = self._positions()
        arcs = self.arcs_of(cid, pos)
        by_tri = {}
        for k, arc in enumerate(arcs):
            by_tri.setdefault(arc[0], []).append(arc)
        for items in by_tri.values():
            for i in range(len(items)):
                for j in range(i + 1, len(items)):
                    if chord_crossing_sign(
                        items[i][1], items[i][2], items[j][1], items[j][2], 3
                    ):
                        return False
        return True


def _ccw_between(a, x, b):
    """Is x strictly inside the ccw boundary arc from a to b (circle of 3)?"""
    if x == a or x == b:
        return False
    return (x - a) % 3 < (b - a) % 3


# ---------------------------------------------------------------------------
# bigon detection and removal
# ---------------------------------------------------------------------------


def _full_arc(tri, tokens, idx):
    n = len(tokens)
    a, b = tokens[idx % n], tokens[(idx + 1) % n]
    s_in = tri.glue[a.exit_side]
    return (s_in[0], s_in[1], b.exit_side[1])


def _range_cyclic(start, stop, n):
    """Indices start, start+1, ..., stop (inclusive) cyclically."""
    out = []
    idx = start % n
    while True:
        out.append(idx)
        if idx == stop % n:
            break
        idx = (idx + 1) % n
        if len(out) > n:
            raise AssertionError("cyclic range overflow")
    return out


def _short_same_arc(x, y, key, sigma):
    """Does the sub-arc stay on one chord (never leaving the triangle)?

    Two crossings can share a chord index with the connecting sub-arc
    running the long way around the curve; only when the target crossing
    lies ahead on the same chord is the sub-arc interior to the triangle.
    """
    arc_field, key_field = key
    if x[arc_field] != y[arc_field]:
        return False
    if sigma == 1:
        return y[key_field][1] > x[key_field][1]
    return y[key_field][1] < x[key_field][1]


def _bigon_loop_arcs(ov, ca, cb, x, y, sigma_b):
    """Arc sequence of the loop (a-side x->y) . (b-side y->x)."""
    tri = ov.tri
    toks_a, toks_b = ov.tokens[ca], ov.tokens[cb]
    na, nb = len(toks_a), len(toks_b)
    same_a = _short_same_arc(x, y, ("a_arc", "a_key"), 1)
    same_b = _short_same_arc(x, y, ("b_arc", "b_key"), sigma_b)
    if same_a and same_b:
        raise AssertionError("two chords cross at most once")

    def a_depart_side_x():
        return toks_a[(x["a_arc"] + 1) % na].exit_side

    def a_arrive_side_y():
        return tri.glue[toks_a[y["a_arc"] % na].exit_side]

    def b_depart_side_y():
        if sigma_b == 1:
            return tri.glue[toks_b[y["b_arc"] % nb].exit_side]
        return toks_b[(y["b_arc"] + 1) % nb].exit_side

    def b_arrive_side_x():
        if sigma_b == 1:
            return toks_b[(x["b_arc"] + 1) % nb].exit_side
        return tri.glue[toks_b[x["b_arc"] % nb].exit_side]

    def a_full_arcs():
        if same_a or (x["a_arc"] + 1) % na == y["a_arc"] % na:
            return []
        idxs = _range_cyclic(x["a_arc"] + 1, y["a_arc"] - 1, na)
        return [_full_arc(tri, toks_a, i) for i in idxs]

    def b_full_arcs():
        if same_b:
            return []
        if sigma_b == 1:
            if (x["b_arc"] + 1) % nb == y["b_arc"] % nb:
                return []
            idxs = _range_cyclic(x["b_arc"] + 1, y["b_arc"] - 1, nb)
            arcs = [_full_arc(tri, toks_b, i) for i in idxs]
            return [(t, j, i) for (t, i, j) in reversed(arcs)]
        if (y["b_arc"] + 1) % nb == x["b_arc"] % nb:
            return []
        idxs = _range_cyclic(y["b_arc"] + 1, x["b_arc"] - 1, nb)
        return [_full_arc(tri, toks_b, i) for i in idxs]

    if same_a:
        s_in = b_arrive_side_x()
        s_out = b_depart_side_y()
        assert s_in[0] == s_out[0]
        return [(s_in[0], s_in[1], s_out[1])] + b_full_arcs()
    if same_b:
        s_in = a_arrive_side_y()
        s_out = a_depart_side_x()
        assert s_in[0] == s_out[0]
        return [(s_in[0], s_in[1], s_out[1])] + a_full_arcs()
    jx_in, jx_out = b_arrive_side_x(), a_depart_side_x()
    jy_in, jy_out = a_arrive_side_y(), b_depart_side_y()
    assert jx_in[0] == jx_out[0] and jy_in[0] == jy_out[0]
    return (
        [(jx_in[0], jx_in[1], jx_out[1])]
        + a_full_arcs()
        + [(jy_in[0], jy_in[1], jy_out[1])]
        + b_full_arcs()
    )


def _find_bigon(ov, ca, cb, crossings):
    """A pair of crossings adjacent along both curves whose loop bounds."""
    m = len(crossings)
    if m < 2:
        return None
    for i in range(m):
        x = crossings[i]
        y = crossings[(i + 1) % m]
        sigmas = []
        if (x["b_pos"] + 1) % m == y["b_pos"]:
            sigmas.append(1)
        if (y["b_pos"] + 1) % m == x["b_pos"]:
            sigmas.append(-1)
        for sigma_b in sigmas:
            loop = _bigon_loop_arcs(ov, ca, cb, x, y, sigma_b)
            if is_null_homotopic_arcs(ov.tri, loop):
                return (x, y, sigma_b)
    return None


def _reroute_across_bigon(ov, ca, cb, x, y, sigma_b):
    """Isotope cb across the bigon: two crossings with ca disappear."""
    tri = ov.tri
    toks_a, toks_b = ov.tokens[ca], ov.tokens[cb]
    na, nb = len(toks_a), len(toks_b)

    # a's tokens passed going forward from x to y
    if _short_same_arc(x, y, ("a_arc", "a_key"), 1):
        passed = []
    else:
        passed = [
            toks_a[i % na]
            for i in _range_cyclic(x["a_arc"] + 1, y["a_arc"], na)
        ]

    # b's tokens to drop (strictly between x and y along the b sub-arc)
    if _short_same_arc(x, y, ("b_arc", "b_key"), sigma_b):
        drop_idxs = []
    elif sigma_b == 1:
        drop_idxs = _range_cyclic(x["b_arc"] + 1, y["b_arc"], nb)
    else:
        drop_idxs = _range_cyclic(y["b_arc"] + 1, x["b_arc"], nb)
    dropped = [toks_b[i % nb] for i in drop_idxs]

    insert_after_first = None
    if passed:
        # which side of a's first passed token is away from the bigon
        a_in, a_out = x["a_thetas"]
        b_in, b_out = x["b_thetas"]
        psi_a, other_a = a_out, a_in
        if sigma_b == 1:
            psi_b, other_b = b_out, b_in
        else:
            psi_b, other_b = b_in, b_out
        if not _ccw_between(psi_a, other_a, psi_b) and not _ccw_between(
            psi_a, other_b, psi_b
        ):
            ccw_side_is_bigon = True
        elif not _ccw_between(psi_b, other_a, psi_a) and not _ccw_between(
            psi_b, other_b, psi_a
        ):
            ccw_side_is_bigon = False
        else:
            raise AssertionError("bigon sector is not bounded by adjacent rays")
        # shadow goes on the other side of psi_a along the boundary circle
        shadow_theta_greater = not ccw_side_is_bigon
        first = passed[0]
        t, i = first.exit_side
        # larger theta = larger tau; larger edge index iff the side is primary
        greater_index = shadow_theta_greater == tri.side_is_primary(t, i)
        s1 = 1 if tri.side_is_primary(t, i) else -1
        # remember the side relative to a's direction and propagate it
        left_of_a = greater_index == (s1 == 1)
        insert_after_first = (left_of_a, )

    # remove dropped tokens
    drop_ids = {id(tok) for tok in dropped}
    for e in set(tok.edge for tok in dropped):
        ov.edge_order[e] = [tok for tok in ov.edge_order[e] if id(tok) not in drop_ids]

    # build shadows
    shadows = []
    for tok in passed:
        t, i = tok.exit_side
        if sigma_b == 1:
            exit_side = tok.exit_side
        else:
            exit_side = tri.glue[tok.exit_side]
        s = _Token(cb, tok.edge, exit_side)
        order = ov.edge_order[tok.edge]
        idx = next(r for r, o in enumerate(order) if o is tok)
        s_i = 1 if tri.side_is_primary(t, i) else -1
        after = insert_after_first[0] == (s_i == 1)
        order.insert(idx + 1 if after else idx, s)
        shadows.append(s)

    # splice b's token list (shadows oriented along b's forward direction)
    if sigma_b == -1:
        shadows.reverse()
    if drop_idxs:
        follower = (drop_idxs[-1] + 1) % nb
        kept = [toks_b[(follower + k) % nb] for k in range(nb - len(drop_idxs))]
        new_list = kept + shadows
    else:
        # both crossings on one b-arc: shadows go inside that arc
        anchor = (x["b_arc"] + 1) % nb
        new_list = toks_b[:anchor] + shadows + toks_b[anchor:]
    ov.tokens[cb] = new_list


def reduce_pair(ov, ca, cb, stop_at=0):
    """Remove bigons between two curves until none remain.

    Returns the final crossing list.  `stop_at` short-circuits once the
    count reaches a known lower bound.
    """
    guard = 0
    while True:
        crossings = ov.pair_crossings(ca, cb)
        if len(crossings) <= stop_at:
            return crossings
        found = _find_bigon(ov, ca, cb, crossings)
        if found is None:
            return crossings
        _reroute_across_bigon(ov, ca, cb, *found)
        guard += 1
        if guard > 10000:
            raise AssertionError("bigon removal failed to terminate")


# ---------------------------------------------------------------------------
# intersection numbers
# ---------------------------------------------------------------------------

_BASIS_CACHE = {}
_INTERSECTION_CACHE = {}


def cached_basis(tri):
    key = tri.hash()
    if key not in _BASIS_CACHE:
        _BASIS_CACHE[key] = homology_basis(tri)
    return _BASIS_CACHE[key]


def algebraic_intersection(a, b):
    """Pairing of the two classes under the canonical traced orientations."""
    basis = cached_basis(a.surface)
    return algebraic_pairing(
        basis.pairing,
        homology_class(basis, OrientedCurve(a, 1)),
        homology_class(basis, OrientedCurve(b, 1)),
    )


def geometric_intersection(a, b):
    """Minimal crossing number between the two isotopy classes."""
    if a.surface.hash() != b.surface.hash():
        raise ValueError("curves live on different surfaces")
    if a.weights == b.weights:
        return 0
    key = (a.surface.hash(), min(a.weights, b.weights), max(a.weights, b.weights))
    if key in _INTERSECTION_CACHE:
        return _INTERSECTION_CACHE[key]
    bound = abs(algebraic_intersection(a, b))
    ov = Overlay(a.surface)
    ca = ov.add_curve(a)
    cb = ov.add_curve(b)
    crossings = reduce_pair(ov, ca, cb, stop_at=bound)
    val = len(crossings)
    _INTERSECTION_CACHE[key] = val
    return val


def minimal_pair_overlay(t_curve, c_curve):
    """Overlay of (t, c) in minimal position, rerouting only c.

    Returns (overlay, t id, c id, crossings sorted along c).
    """
    ov = Overlay(t_curve.surface)
    ct = ov.add_curve(t_curve)
    cc = ov.add_curve(c_curve)
    bound = abs(algebraic_intersection(t_curve, c_curve))
    crossings = reduce_pair(ov, ct, cc, stop_at=bound)
    want = geometric_intersection(t_curve, c_curve)
    if len(crossings) != want:
        raise AssertionError(
            "pair overlay not minimal: %d vs %d" % (len(crossings), want)
        )
    ordered = sorted(crossings, key=lambda x: x["b_key"])
    return ov, ct, cc, ordered


# ---------------------------------------------------------------------------
# cutting along disjoint systems
# ---------------------------------------------------------------------------


class ComplementProfile:
    """Topology of the complement of a disjoint curve system."""

    def __init__(self, components):
        self.components = sorted(components)

    def __eq__(self, other):
        return isinstance(other, ComplementProfile) and self.components == other.components

    def __repr__(self):
        return "ComplementProfile(%r)" % (self.components,)

    def __len__(self):
        return len(self.components)

    def genera(self):
        return [h for (h, _b) in self.components]

    def euler_characteristic(self):
        return sum(2 - 2 * h - b for (h, b) in self.components)


def _disjoint_overlay(curves):
    """Simultaneous disjoint position of a pairwise-disjoint system."""
    tri = curves[0].surface
    ov = Overlay(tri)
    ids = []
    for c in curves:
        cid = ov.add_curve(c)
        for prev in ids:
            crossings = reduce_pair(ov, prev, cid, stop_at=0)
            if crossings:
                raise AssertionError("disjoint system failed to realize disjointly")
        ids.append(cid)
    return ov, ids


def cut_components(curves):
    """Complement profile of a pairwise-disjoint system of curves."""
    curves = list(curves)
    if not curves:
        raise ValueError("empty curve system")
    tri = curves[0].surface
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            if curves[i].weights == curves[j].weights:
                raise ValueError("curve system contains repeated classes")
            if geometric_intersection(curves[i], curves[j]) != 0:
                raise ValueError("curves %d and %d are not disjoint" % (i, j))
    ov, ids = _disjoint_overlay(curves)
    return _regions_profile(ov, ids)


def _regions_profile(ov, ids):
    tri = ov.tri
    pos = ov._positions()

    # faces per triangle via parenthesis nesting of non-crossing chords
    chords = {t: [] for t in range(tri.num_triangles)}
    arc_refs = {}
    for cid in ids:
        for k, (t, th_in, th_out, _si, _so) in enumerate(ov.arcs_of(cid, pos)):
            chords[t].append((th_in, th_out, cid, k))

    class _UF:
        def __init__(self):
            self.parent = {}

        def find(self, x):
            p = self.parent.setdefault(x, x)
            if p != x:
                p = self.parent[x] = self.find(p)
            return p

        def union(self, x, y):
            self.parent[self.find(x)] = self.find(y)

    uf = _UF()
    # face id: (triangle, serial); gap -> face mapping per side
    gap_face = {}
    face_count = {}
    chord_sides = {}  # (cid, k) -> (face on ccw(in->out) side, other face)
    for t in range(tri.num_triangles):
        events = []
        for (th_in, th_out, cid, k) in chords[t]:
            events.append((th_in, cid, k))
            events.append((th_out, cid, k))
        events.sort(key=lambda ev: ev[0])
        serial = [0]

        def new_face():
            serial[0] += 1
            return (t, serial[0])

        outer = (t, 0)
        stack = [outer]
        opened = {}
        face_of_interval = []  # (theta_start, face at boundary just after)
        face_of_interval.append((Fraction(0), outer))
        for (theta, cid, k) in events:
            if (cid, k) not in opened:
                f = new_face()
                opened[(cid, k)] = (f, theta)
                stack.append(f)
            else:
                inner, _first_theta = opened[(cid, k)]
                popped = stack.pop()
                assert popped == inner
                chord_sides[(cid, k)] = (inner, stack[-1], opened[(cid, k)][1])
            face_of_interval.append((theta, stack[-1]))
        faces_here = 1 + serial[0]
        face_count[t] = faces_here
        for f_serial in range(faces_here):
            uf.find((t, f_serial))

        # assign faces to side gaps
        def face_at(theta):
            lo, hi = 0, len(face_of_interval) - 1
            best = face_of_interval[0][1]
            for (start, f) in face_of_interval:
                if start <= theta:
                    best = f
                else:
                    break
            return best

        for i in range(3):
            e = tri.edge_of(t, i)
            toks = [tok for tok in ov.edge_order[e] if _side_of(ov, tok, t, i)]
            taus = sorted(
                pos[id(tok)] if tri.side_is_primary(t, i) else 1 - pos[id(tok)]
                for tok in ov.edge_order[e]
            )
            cuts = [Fraction(0)] + taus + [Fraction(1)]
            for g in range(len(cuts) - 1):
                mid = (cuts[g] + cuts[g + 1]) / 2
                gap_face[(t, i, g)] = face_at(i + mid)

    # glue faces across edges
    for e in range(tri.num_edges):
        (t1, i1), (t2, i2) = tri.edge_sides[e]
        L = len(ov.edge_order[e])
        for g in range(L + 1):
            uf.union(gap_face[(t1, i1, g)], gap_face[(t2, i2, L - g)])

    # region statistics
    regions = {}

    def reg(face):
        return uf.find(face)

    faces_in = {}
    for t in range(tri.num_triangles):
        for s in range(face_count[t]):
            r = reg((t, s))
            faces_in[r] = faces_in.get(r, 0) + 1
    gaps_in = {}
    for e in range(tri.num_edges):
        (t1, i1), _ = tri.edge_sides[e]
        L = len(ov.edge_order[e])
        for g in range(L + 1):
            r = reg(gap_face[(t1, i1, g)])
            gaps_in[r] = gaps_in.get(r, 0) + 1
    vertex_region = reg(gap_face[(0, 0, 0)])

    boundary_in = {}
    for cid in ids:
        arcs = ov.arcs_of(cid, pos)
        for side in (0, 1):
            # side 0: face on the ccw(in->out) flank of arc 0; side 1: other
            key = (cid, 0)
            inner, outer_face, first_theta = chord_sides[key]
            th_in, th_out = arcs[0][1], arcs[0][2]
            ccw_face = inner if first_theta == th_in else outer_face
            other = outer_face if ccw_face is inner else inner
            r = reg(ccw_face if side == 0 else other)
            boundary_in[r] = boundary_in.get(r, 0) + 1

    comps = []
    for r, f in faces_in.items():
        chi = f - gaps_in.get(r, 0) + (1 if r == vertex_region else 0)
        b = boundary_in.get(r, 0)
        h2 = 2 - chi - b
        if h2 < 0 or h2 % 2:
            raise AssertionError("region has chi=%d, b=%d" % (chi, b))
        comps.append((h2 // 2, b))
    profile = ComplementProfile(comps)
    tri_chi = 2 - 2 * ov.tri.genus
    if profile.euler_characteristic() != tri_chi:
        raise AssertionError("component Euler characteristics do not add up")
    if sum(b for (_h, b) in profile.components) != 2 * len(ids):
        raise AssertionError("boundary circle count mismatch")
    return profile


def _side_of(ov, tok, t, i):
    s1 = tok.exit_side
    s2 = ov.tri.glue[s1]
    return (t, i) in (s1, s2)


# ---------------------------------------------------------------------------
# topological predicates
# ---------------------------------------------------------------------------


def is_separating(curve):
    """Homologically trivial; equivalently the curve bounds a subsurface."""
    basis = cached_basis(curve.surface)
    return all(x == 0 for x in homology_class(basis, OrientedCurve(curve, 1)))


def separating_genus(curve):
    """Unordered pair of complement genera of a separating curve."""
    if not is_separating(curve):
        raise ValueError("curve is nonseparating")
    profile = cut_components([curve])
    if len(profile) != 2:
        raise AssertionError("separating curve cut into %d pieces" % len(profile))
    return tuple(sorted(profile.genera()))


def is_genus_one_separating(curve):
    return is_separating(curve) and 1 in separating_genus(curve)


def _pair_profile(a, b):
    """Complement profile of two disjoint curves, isotopic pairs allowed."""
    ov, ids = _disjoint_overlay([a, b])
    return _regions_profile(ov, ids)


_ISOTOPY_CACHE = {}


def isotopic(a, b):
    """Equality of closed-surface isotopy classes.

    Distinct normal vectors can still be isotopic on the closed surface
    (positions on opposite sides of the vertex); two disjoint curves are
    isotopic exactly when they cobound an annulus, i.e. when some
    complement component of the pair is a (0, 2) piece.
    """
    if a.weights == b.weights:
        return True
    if a.surface.hash() != b.surface.hash():
        return False
    key = (a.surface.hash(), min(a.weights, b.weights), max(a.weights, b.weights))
    if key in _ISOTOPY_CACHE:
        return _ISOTOPY_CACHE[key]
    result = False
    basis = cached_basis(a.surface)
    ha = homology_class(basis, OrientedCurve(a, 1))
    hb = homology_class(basis, OrientedCurve(b, 1))
    if ha == hb or ha == tuple(-x for x in hb):
        if geometric_intersection(a, b) == 0:
            result = (0, 2) in _pair_profile(a, b).components
    _ISOTOPY_CACHE[key] = result
    return result


def is_bounding_pair(a, b):
    """Disjoint, non-isotopic, nonseparating, with separating union."""
    if a.surface.hash() != b.surface.hash():
        return False
    if is_separating(a) or is_separating(b):
        return False
    if a.weights == b.weights or geometric_intersection(a, b) != 0:
        return False
    profile = _pair_profile(a, b)
    if (0, 2) in profile.components:
        return False  # isotopic pair
    return len(profile) == 2
