# Copyright 2026 The liftmod developers
#
# This file is part of "liftmod".
#
# "liftmod" is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# "liftmod" is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with "liftmod".  If not, see <http://www.gnu.org/licenses/>.

"""The homology representation Psi of the mapping class group of the twice
punctured torus, its reductions mod k, and the image-membership tests for the
cyclic branched covers p_k"""

from functools import lru_cache
from dataclasses import dataclass
from liftmod import ShapeError, MembershipError, word
from liftmod.matrix import Mat2, Mat3, ResidueMat3

# Psi(xy) = Psi(x) Psi(y); the offset v lives in the third row
PSI = {
    "a": Mat3((1, 1, 0, 0, 1, 0, 0, 0, 1)),
    "b": Mat3((1, 0, 0, -1, 1, 0, 0, 0, 1)),
    "c": Mat3((1, 1, 0, 0, 1, 0, 0, 1, 1)),
    "i": Mat3((-1, 0, 0, 0, -1, 0, 0, 0, -1)),
}


@dataclass(frozen=True)
class Cover:
    "The k-sheeted cyclic branched cover p_k, cut out by the functional eta_k = (0, 0, 1) mod k"
    k: int
    eta: tuple = (0, 0, 1)

    def __post_init__(self):
        if isinstance(self.k, bool) or int(self.k) != self.k or self.k < 2:
            raise ValueError("A cover needs k >= 2, got {!r}".format(self.k))

    @staticmethod
    def of(cover):
        "Accept a Cover or a bare number of sheets"
        return cover if isinstance(cover, Cover) else Cover(int(cover))

    def functional(self, h):
        "Evaluate eta_k on n1 c1 + n2 c2 + n3 c3"
        return sum(x * y for x, y in zip(self.eta, h)) % self.k


@dataclass(frozen=True)
class BlockForm:
    "An image matrix split as [[A, 0], [v, eps]]"
    A: Mat2
    v: tuple
    eps: int

    def __post_init__(self):
        if self.A.det() != 1: raise ShapeError("det", "det A = {}".format(self.A.det()))
        if self.eps not in (1, -1): raise ShapeError("corner", "corner entry {}".format(self.eps))

    def matrix(self): return Mat3.block(self.A, self.v, self.eps)

    def __str__(self):
        return "A={} v=({}, {}) eps={:+d}".format(list(map(list, self.A.rows)), *self.v, self.eps)


def evalPsi(w):
    "Exact image of a word (or word text) under Psi"
    m = Mat3()
    for s, e in word(w): m = m * PSI[s] ** e
    return m

@lru_cache(maxsize=None)
def _residueGens(k): return {s: m.mod(k) for s, m in PSI.items()}

def evalPsiMod(w, k):
    "Image of a word under Psi_k, computed in residues"
    gens = _residueGens(int(k))
    m = ResidueMat3.identity(k)
    for s, e in word(w): m = m * gens[s] ** e
    return m

def blockForm(m):
    "Split an image matrix into its SL2 block, offset row and corner sign"
    a, b, z1, c, d, z2, p, q, e = m
    if z1 or z2:
        raise ShapeError("upper-right", "third column is ({}, {}) above the corner".format(z1, z2))
    return BlockForm(Mat2(a, b, c, d), (p, q), e)

def forget(m):
    "Project [[A, 0], [v, eps]] to its SL2 block A"
    return blockForm(m).A

def shear(m, n):
    "The matrix [[1, 0, 0], [0, 1, 0], [m, n, 1]]"
    return Mat3((1, 0, 0, 0, 1, 0, m, n, 1))

def inImageMod(m):
    "Is m in the image of the whole mapping class group?"
    try: blockForm(m)
    except ShapeError: return False
    return True

def lmodForm(m, cover):
    "Block form of m, raising MembershipError unless m lies in the image of the liftable subgroup"
    k = Cover.of(cover).k
    try: form = blockForm(m)
    except ShapeError as e:
        raise MembershipError("shape:" + e.condition, str(e)) from e
    p, q = form.v
    if p % k: raise MembershipError("k|m", "{} does not divide m = {}".format(k, p))
    if q % k: raise MembershipError("k|n", "{} does not divide n = {}".format(k, q))
    return form

def inImageLMod(m, cover):
    "Is m in the image of the liftable subgroup for the cover p_k? (exact divisibility)"
    try: lmodForm(m, cover)
    except MembershipError: return False
    return True

def liftTest(w, cover):
    "Does the word's Psi-image satisfy the liftability criterion?"
    return inImageLMod(evalPsi(w), cover)
