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

"Constructive SL2(Z): gcd reduction and words in the blocks of Psi(a) and Psi(b)"

from sympy.core.intfunc import igcdex
from liftmod import NotUnimodular, TwistWord, freeReduce
from liftmod.matrix import Mat2

SA = Mat2(1, 1, 0, 1)
SB = Mat2(1, 0, -1, 1)
GENERATORS = {"SA": SA, "SB": SB}
EMBED = {"SA": "a", "SB": "b"}


class Sl2Word:
    "Word in SA and SB as exponent runs, optionally tied to the matrix it evaluates to"
    __slots__ = "_runs", "target"

    def __init__(self, runs=(), target=None):
        runs = freeReduce((g, int(e)) for g, e in runs)
        for g, e in runs:
            if g not in GENERATORS: raise ValueError("Unknown SL2 generator {!r}".format(g))
        self._runs = runs
        self.target = target
        if target is not None and self.evaluate() != target:
            raise ValueError("{} does not evaluate to {!r}".format(self, target))

    @property
    def runs(self): return self._runs

    def __iter__(self): return iter(self._runs)

    def __len__(self): return sum(abs(e) for g, e in self._runs)

    def __eq__(self, other):
        return isinstance(other, Sl2Word) and self._runs == other._runs

    def __hash__(self): return hash(self._runs)

    def __mul__(self, other): return Sl2Word(self._runs + other._runs)

    def __invert__(self): return Sl2Word((g, -e) for g, e in reversed(self._runs))

    def __pow__(self, n):
        if n < 0: return (~self) ** -n
        return Sl2Word(self._runs * n)

    def evaluate(self):
        m = Mat2()
        for g, e in self._runs: m = m * GENERATORS[g] ** e
        return m

    def embed(self):
        "The word over a and b whose Psi-image has this block, v = (0, 0) and eps = +1"
        return TwistWord((EMBED[g], e) for g, e in self._runs)

    def __str__(self):
        if not self._runs: return "1"
        return " ".join(g if e == 1 else "{}^{}".format(g, e) for g, e in self._runs)

    def __repr__(self): return "Sl2Word('{}')".format(self)


def sl2Embed(w): return w.embed()

def gcdSL2(m, n):
    "Return (l, A) with l = gcd(m, n) >= 0, det A = 1 and (m, n) A = (0, l)"
    m, n = int(m), int(n)
    if m == n == 0: return 0, Mat2()
    if n == 0:
        sgn = 1 if m > 0 else -1
        return abs(m), Mat2(0, sgn, -sgn, 0)
    x, y, l = (int(t) for t in igcdex(m, n))
    N = abs(n) // l

    # Smallest |r| among the Bezout choices, ties resolved to the positive r
    r = x % N
    if 2 * r > N: r -= N
    s = (l - m * r) // n
    return l, Mat2(n // l, r, -(m // l), s)

def sl2Decompose(C):
    "Write C in SL2(Z) as a word in SA and SB by Euclidean reduction of its first column"
    C = Mat2(*C)
    if C.det() != 1: raise NotUnimodular("not in SL2(Z): det = {}".format(C.det()))
    ops, M = [], C
    while M[2]:
        p, q = M[0], M[2]
        if p == 0: g, t = "SA", q
        elif abs(q) >= abs(p): g, t = "SB", q // p
        else: g, t = "SA", -(p // q)
        ops.append((g, -t))
        M = GENERATORS[g] ** t * M

    # M is now +/-[[1, x], [0, 1]]
    x = M[1]
    if M[0] == 1: tail = [("SA", x)]
    else: tail = [("SA", -x)] + [("SA", 1), ("SB", 1), ("SA", 1)] * 2
    return Sl2Word(ops + tail, target=C)
