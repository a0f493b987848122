"""Dehn twists on normal curves and the induced symplectic action.

A twist is computed on an overlay of the twisting curve t and the target c
in minimal position: every strand of c crossing t is rerouted to run
parallel to t for |n| full loops, turning left at the crossing for
positive n and right for negative n, and the spliced transverse curve is
tightened back to normal coordinates.

On homology a twist about a curve of class x acts as the transvection
v -> v + n <v, x> x; the sign convention here matches the curve-level
left-turn rule, which the test suite pins by comparing both actions.
"""

from __future__ import annotations

from .curves import (
    NormalCurve,
    OrientedCurve,
    curve_from_arcs,
    homology_class,
    algebraic_pairing,
)
from .overlay import (
    cached_basis,
    geometric_intersection,
    is_bounding_pair,
    minimal_pair_overlay,
)
from .surface import identity_matrix, mat_mul


class MappingClassWord:
    """Formal product of Dehn twist powers, applied left to right.

    Adjacent letters about the same curve merge; zero exponents drop.
    Word equality in the mapping class group is never decided here; words
    are compared only through their actions on curves and homology.
    """

    __slots__ = ("letters",)

    def __init__(self, letters):
        reduced = []
        for curve, power in letters:
            if power == 0:
                continue
            if reduced and reduced[-1][0] == curve:
                merged = reduced[-1][1] + power
                reduced.pop()
                if merged:
                    reduced.append((curve, merged))
            else:
                reduced.append((curve, power))
        self.letters = tuple(reduced)

    def __mul__(self, other):
        return MappingClassWord(self.letters + other.letters)

    def inverse(self):
        return MappingClassWord([(c, -n) for (c, n) in reversed(self.letters)])

    def __eq__(self, other):
        return isinstance(other, MappingClassWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return "MappingClassWord(%r)" % (
            [(c.weights, n) for (c, n) in self.letters],
        )

    def to_json(self, curve_index):
        return [[curve_index[c], n] for (c, n) in self.letters]


def dehn_twist(t, n, c):
    """Normal coordinates of the n-th twist about t applied to c."""
    if n == 0:
        raise ValueError("twist exponent must be nonzero")
    if t.surface.hash() != c.surface.hash():
        raise ValueError("curves live on different surfaces")
    if t.weights == c.weights or geometric_intersection(t, c) == 0:
        return c
    ov, ct, cc, crossings = minimal_pair_overlay(t, c)
    tri = ov.tri
    ttoks = ov.tokens[ct]
    ctoks = ov.tokens[cc]
    L = len(ttoks)
    reps = abs(n)

    by_c_arc = {}
    for x in crossings:
        by_c_arc.setdefault(x["b_arc"], []).append(x)
    for lst in by_c_arc.values():
        lst.sort(key=lambda x: x["b_key"][1])

    def t_exit(m):
        return ttoks[m % L].exit_side

    def t_entry(m):
        # side through which t enters the triangle of its arc m
        return tri.glue[ttoks[m % L].exit_side]

    arcs = []
    nc = len(ctoks)
    for j in range(nc):
        s_in = tri.glue[ctoks[j].exit_side]
        s_out = ctoks[(j + 1) % nc].exit_side
        T = s_in[0]
        cursor = s_in
        for x in by_c_arc.get(j, ()):
            k = x["a_arc"]
            # sign = frame (t direction, c direction); the rider turns left
            # for n > 0, which means riding t forward when t points to the
            # left of c, i.e. when frame (c, t) is positive.
            forward = (x["sign"] < 0) == (n > 0)
            if forward:
                arcs.append((T, cursor[1], t_exit(k + 1)[1]))
                for m in range(k + 1, k + reps * L):
                    e_in = t_entry(m)
                    e_out = t_exit(m + 1)
                    arcs.append((e_in[0], e_in[1], e_out[1]))
                cursor = t_entry(k)
            else:
                arcs.append((T, cursor[1], t_entry(k)[1]))
                for m in range(k, k - reps * L + 1, -1):
                    # traverse t's arc m-1 in reverse
                    e_in = t_exit(m)
                    e_out = t_entry(m - 1)
                    assert e_in[0] == e_out[0]
                    arcs.append((e_in[0], e_in[1], e_out[1]))
                cursor = t_exit(k + 1)
            assert cursor[0] == T
        arcs.append((T, cursor[1], s_out[1]))
    return curve_from_arcs(tri, arcs)


def word_action(word, c):
    """Apply the word's letters to the curve, first letter first."""
    out = c
    for t, n in word.letters:
        out = dehn_twist(t, n, out)
    return out


# transvection sign matching the curve-level left-turn rule; pinned by the
# curve/homology commutation tests
TWIST_TRANSVECTION_SIGN = 1


def twist_matrix(basis, t, n):
    x = homology_class(basis, OrientedCurve(t, 1))
    g2 = len(x)
    J = basis.pairing
    M = identity_matrix(g2)
    for col in range(g2):
        v = [1 if r == col else 0 for r in range(g2)]
        pair = algebraic_pairing(J, v, x)
        for r in range(g2):
            M[r][col] = v[r] + TWIST_TRANSVECTION_SIGN * n * pair * x[r]
    return M


def homology_action(word):
    """Matrix of the word's action on H_1 in the fixed symplectic basis.

    Letters apply first to last, so the matrix is the product of the last
    letter's transvection down to the first.
    """
    if not word.letters:
        raise ValueError("empty word has no ambient surface; pass letters")
    tri = word.letters[0][0].surface
    basis = cached_basis(tri)
    M = identity_matrix(2 * tri.genus)
    for t, n in word.letters:
        M = mat_mul(twist_matrix(basis, t, n), M)
    return M


def homology_action_on(tri, word):
    if word.letters:
        return homology_action(word)
    return identity_matrix(2 * tri.genus)


def is_torelli(word, tri=None):
    """Does the word act trivially on first homology?"""
    if not word.letters:
        return True
    return homology_action(word) == identity_matrix(
        2 * word.letters[0][0].surface.genus
    )


def bp_map(a, b):
    """The bounding-pair map T_a T_b^{-1} as a two-letter word."""
    if not is_bounding_pair(a, b):
        raise ValueError("curves do not form a bounding pair")
    return MappingClassWord([(a, 1), (b, -1)])
