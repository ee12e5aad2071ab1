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

"""Finite quotients Psi_k: closure of residue matrix groups, right cosets of
the liftable image, Schreier generators and the maximality decision"""

import os, logging
from dataclasses import dataclass, field
from concurrent.futures import ThreadPoolExecutor
import numpy as np
from sympy import isprime, primefactors
from liftmod import TwistWord, ModulusMismatch, LETTERS
from liftmod.matrix import Mat3, ResidueMat3
from liftmod.homology import evalPsi, evalPsiMod, inImageLMod
from liftmod.sl2 import SA, SB
from liftmod.liftable import decomposeLMod, Ta, Tb, Tc, iota

log = logging.getLogger(__name__)

# Packed keys use 9 base-k digits in a signed 64-bit integer
MAX_MODULUS = 127
THREADS_ENV = "LIFTMOD_THREADS"


def threadCount(n=None):
    "Worker threads for closure: explicit value, else the environment, else 1"
    if n is None: n = os.environ.get(THREADS_ENV, 1)
    try: n = int(n)
    except ValueError: raise ValueError("{} must be an integer, got {!r}".format(THREADS_ENV, n))
    return max(1, n)

def checkModulus(k):
    k = int(k)
    if k < 2: raise ValueError("Modulus must be at least 2, got {}".format(k))
    if k > MAX_MODULUS: raise ValueError("Modulus {} exceeds MAX_MODULUS = {}".format(k, MAX_MODULUS))
    return k

def _weights(k): return np.int64(k) ** np.arange(9, dtype=np.int64)

def encode(mats, k):
    "Pack an (N, 3, 3) array of residues into int64 keys, row-major base k"
    return mats.reshape(-1, 9) @ _weights(k)

def decode(keys, k):
    "Inverse of encode"
    keys = np.asarray(keys, dtype=np.int64)
    return ((keys[:, None] // _weights(k)) % k).reshape(-1, 3, 3)


class FiniteGroup:
    "Subgroup of GL3(Z_k) generated by residue matrices, enumerated breadth-first from the identity"
    threads = None

    def __init__(self, generators, labels=None, threads=None):
        gens = tuple(generators)
        if not gens: raise ValueError("At least one generator is required")
        for g in gens:
            if not isinstance(g, ResidueMat3): raise TypeError("Generators must be ResidueMat3, got {!r}".format(g))
        k = gens[0].modulus
        for g in gens:
            if g.modulus != k:
                raise ModulusMismatch("Generator moduli {} and {} differ".format(k, g.modulus))
        self.modulus = checkModulus(k)
        self.inverses = tuple(g.inverse() for g in gens)
        self.generators = gens
        self.labels = tuple(labels) if labels else tuple("g{}".format(i) for i in range(len(gens)))
        self.keys = self._closure(threadCount(threads if threads is not None else self.threads))
        self._keyset = None
        log.info("closure mod %d of %d generators: order %d", k, len(gens), len(self.keys))

    def _closure(self, threads):
        k = self.modulus
        mats = np.array([np.array(g, dtype=np.int64).reshape(3, 3)
            for g in self.generators + self.inverses])
        frontier = np.eye(3, dtype=np.int64)[None]
        seen = encode(frontier, k)
        layers = [seen]
        pool = ThreadPoolExecutor(threads) if threads > 1 else None
        try:
            layer = 0
            while len(frontier):
                def step(g, f=frontier): return np.matmul(f, g) % k
                prods = np.concatenate(list(pool.map(step, mats) if pool else map(step, mats)))
                keys, first = np.unique(encode(prods, k), return_index=True)
                fresh = ~np.isin(keys, seen, assume_unique=True)
                keys = keys[fresh]
                frontier = prods[first[fresh]]
                seen = np.union1d(seen, keys)
                layers.append(keys)
                layer += 1
                log.debug("layer %d: %d new, %d total", layer, len(keys), len(seen))
        finally:
            if pool: pool.shutdown()
        return np.concatenate(layers)

    def __len__(self): return len(self.keys)

    @property
    def order(self): return len(self.keys)

    def __contains__(self, m):
        if not isinstance(m, ResidueMat3) or m.modulus != self.modulus: return False
        if self._keyset is None: self._keyset = set(self.keys.tolist())
        return m.key in self._keyset

    def __iter__(self):
        k = self.modulus
        for row in decode(self.keys, k): yield ResidueMat3(row.ravel().tolist(), k)

    def issubgroup(self, other):
        "Is every element of self in other?"
        return self.modulus == other.modulus and bool(np.isin(self.keys, other.keys).all())

    def adjoin(self, g, label=None):
        "The subgroup generated by self and g"
        return FiniteGroup(self.generators + (g,), self.labels + (label or "g{}".format(len(self.labels)),))


def closure(generators, labels=None, threads=None):
    return FiniteGroup(generators, labels, threads)

def _images(words, k):
    return [evalPsiMod(w, k) for w in words]

def ambientGroup(k):
    "Psi_k of the whole mapping class group"
    k = checkModulus(k)
    return FiniteGroup(_images((Ta, Tb, Tc, iota), k), ("a", "b", "c", "i"))

def lmodSubgroup(k):
    "Psi_k of the liftable subgroup, generated by the images of a, b, c^k and i"
    k = checkModulus(k)
    return FiniteGroup(_images((Ta, Tb, Tc ** k, iota), k), ("a", "b", "c^{}".format(k), "i"))

def sl2Order(k):
    "Order of SL2(Z_k) by closure of the blocks of Psi(a) and Psi(b)"
    k = checkModulus(k)
    return len(FiniteGroup([Mat3.block(SA).mod(k), Mat3.block(SB).mod(k)]))


# Coset representatives h(m, n) = (b^-1 a^-1 c b)^m (a^-1 c)^n, images shear(-m, m + n)
SHEAR_U = ~Tb * ~Ta * Tc * Tb
SHEAR_V = ~Ta * Tc

def cosetRepresentative(m, n): return SHEAR_U ** m * SHEAR_V ** n


class CosetTable:
    """Right cosets H X of H = Psi_k(LMod) in Psi_k(Mod). The coset of
    X = [[A, 0], [v, eps]] is determined by eps v mod k."""

    def __init__(self, k, generators=LETTERS):
        self.modulus = k = checkModulus(k)
        self.generators = tuple(generators)
        self.representatives = tuple(cosetRepresentative(m, n) for m in range(k) for n in range(k))
        gens = _images(self.generators, k)
        self.action = tuple(tuple(self.move(c, g) for g in gens) for c in range(len(self)))
        for j, s in enumerate(self.generators):
            if len(set(row[j] for row in self.action)) != len(self):
                raise RuntimeError("Generator {} does not permute the cosets mod {}".format(s, k))

    def __len__(self): return self.modulus ** 2

    @property
    def index(self): return len(self)

    def _key(self, c):
        m, n = divmod(c, self.modulus)
        return -m % self.modulus, (m + n) % self.modulus

    def _coset(self, x, y):
        k = self.modulus
        return (-x % k) * k + (x + y) % k

    def cosetOf(self, X):
        "Index m k + n of the coset containing X (exact or residue)"
        e = X[8]
        return self._coset(e * X[6], e * X[7])

    def move(self, c, s):
        "Coset of (coset c) s for a block matrix s"
        x, y = self._key(c)
        d = s[8]
        return self._coset(d * (x * s[0] + y * s[3] + s[6]), d * (x * s[1] + y * s[4] + s[7]))

    def permutation(self, s):
        "Action of the generator named s as a tuple of cosets"
        j = self.generators.index(s)
        return tuple(row[j] for row in self.action)

    def orbit(self, mats, start=0):
        "Cosets reachable from start under right multiplication by the matrices"
        seen, queue = {start}, [start]
        while queue:
            c = queue.pop()
            for s in mats:
                t = self.move(c, s)
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        return seen


def cosetIndex(k):
    "Index of Psi_k(LMod) in Psi_k(Mod), by enumeration, with the coset table"
    G, H = ambientGroup(k), lmodSubgroup(k)
    index, r = divmod(len(G), len(H))
    if r: raise RuntimeError("Lagrange fails mod {}: {} / {}".format(k, len(G), len(H)))
    return index, CosetTable(k)

def adjoin(table, H, g):
    "Order of <H, g> as |H| times the orbit of the trivial coset; H must be the table's subgroup"
    return len(H) * len(table.orbit(H.generators + (g,)))


@dataclass
class SchreierElement:
    coset: int
    generator: str
    word: TwistWord
    ok: bool
    detail: str


def schreierCheck(k):
    "Check every Schreier element r s rep(r s)^-1 over Z for membership and decomposition"
    table = CosetTable(k)
    out = []
    for c, r in enumerate(table.representatives):
        for j, s in enumerate(table.generators):
            t = table.action[c][j]
            w = r * TwistWord.letter(s) * ~table.representatives[t]
            X = evalPsi(w)
            if not inImageLMod(X, k): ok, detail = False, "not in the liftable image"
            elif evalPsi(decomposeLMod(X, k)) != X: ok, detail = False, "decomposition does not round-trip"
            else: ok, detail = True, "member; decomposition round-trips"
            out.append(SchreierElement(c, s, w, ok, detail))
    log.info("Schreier elements mod %d: %d checked, %d failing", k, len(out), sum(not e.ok for e in out))
    return out


@dataclass
class CompositeWitness:
    "The subgroup K generated by the images of a, b, c^l and i, strictly between H and G"
    divisor: int
    order: int
    cPowerInH: bool
    cInK: bool


@dataclass
class MaximalityReport:
    k: int
    prime: bool
    orderH: int
    orderG: int
    maximal: bool = False
    adjunctions: list = field(default_factory=list)
    witness: CompositeWitness = None
    enumerated: bool = False

    def __str__(self):
        s = "k={} {}: |H|={} |G|={}{} maximal={}".format(self.k, "prime" if self.prime else "composite",
            self.orderH, self.orderG, "" if self.enumerated else " (|H| k^2)", self.maximal)
        w = self.witness
        if w:
            s += " witness: l={} |K|={} c^l in H: {} c in K: {}".format(w.divisor, w.order, w.cPowerInH, w.cInK)
        return s


def isMaximal(k, exhaustive=False):
    "Decide whether Psi_k(LMod) is maximal in Psi_k(Mod) by adjoining each coset representative"
    k = checkModulus(k)
    H = lmodSubgroup(k)
    table = CosetTable(k)
    full = len(H) * len(table)
    report = MaximalityReport(k, isprime(k), len(H), full)
    if exhaustive:
        n = len(ambientGroup(k))
        if n != full: raise RuntimeError("Closure of Psi_k(Mod) has order {}, expected {} mod {}".format(n, full, k))
        report.enumerated = True
    for c in range(1, len(table)):
        h = evalPsiMod(table.representatives[c], k)
        order = adjoin(table, H, h)
        if exhaustive:
            n = len(H.adjoin(h))
            if n != order: raise RuntimeError("Orbit count {} disagrees with closure {} mod {}".format(order, n, k))
        report.adjunctions.append((divmod(c, k), order))
    report.maximal = all(order == full for _, order in report.adjunctions)
    if not report.prime:
        l = min(primefactors(k))
        K = _images((Ta, Tb, Tc ** l, iota), k)
        orbit = table.orbit(K)
        report.witness = CompositeWitness(l, len(H) * len(orbit),
            table.cosetOf(evalPsiMod(Tc ** l, k)) == 0,
            table.cosetOf(evalPsiMod(Tc, k)) in orbit)
    log.info("%s", report)
    return report
