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

"""The liftable mapping class group of the covers p_k: generating sets, the
kernel basis of Psi, constructive decomposition of image matrices into
liftable generators, and verification of word identities"""

import logging
from dataclasses import dataclass
from liftmod import TwistWord, NoMatch, word
from liftmod.matrix import Mat3
from liftmod.homology import Cover, evalPsi, lmodForm, liftTest
from liftmod.sl2 import SA, gcdSL2, sl2Decompose
from liftmod.rewrite import loadScript, replay

log = logging.getLogger(__name__)

Ta, Tb, Tc, iota = (TwistWord.letter(s) for s in "abci")

# Twist about the boundary of a neighbourhood of the chain b, c
CHAIN = (Tb * Tc) ** 6

PSI_MODE, SCRIPT_MODE = "psi", "rewrite-script"
NECESSARY = "necessary condition only"


@dataclass(frozen=True)
class GenSet:
    "Labelled twist words that all lift under p_k"
    k: int
    members: tuple
    provenance: str

    def __post_init__(self):
        bad = [label for label, w in self.members if not liftTest(w, self.k)]
        if bad: raise ValueError("Not liftable for k={}: {}".format(self.k, ", ".join(bad)))

    def __iter__(self): return iter(self.members)

    def __len__(self): return len(self.members)

    @property
    def words(self): return [w for label, w in self.members]


@dataclass(frozen=True, order=True)
class KernelWordIndex:
    m: int
    n: int


def generatingSet(k):
    "Generators of the liftable subgroup for the cover p_k"
    k = Cover.of(k).k
    members = [("T_a", Ta), ("T_b", Tb), ("T_c^{}".format(k), Tc ** k), ("iota", iota),
        ("(T_b T_c)^6", CHAIN)]
    for j in range(1, k):
        for i in range(1, k):
            w = Tc ** j * Tb ** i * Ta * CHAIN * ~Ta * Tb ** -i * Tc ** -j
            members.append(("S(i={}, j={})".format(i, j), w))
    return GenSet(k, tuple(members), "full")

def reducedGeneratingSet(k):
    "The four generators a, b, c^k, i, which suffice when k is 2 or 3"
    k = int(k)
    if k not in (2, 3): raise ValueError("The reduced generating set is known only for k = 2, 3; got {}".format(k))
    members = ("T_a", Ta), ("T_b", Tb), ("T_c^{}".format(k), Tc ** k), ("iota", iota)
    return GenSet(k, members, "reduced")

def kernelWord(m, n):
    "Free basis element of ker Psi indexed by (m, n)"
    return Tb ** -n * Tc * ~Ta * Tb ** n * Ta ** m * CHAIN * Ta ** -m * Tb ** -n * Ta * ~Tc * Tb ** n

def kernelBasis(window):
    "Kernel words for (m, n) in [-M, M]^2, m outer, ascending"
    M = int(window)
    if M < 0: raise ValueError("Window must be non-negative, got {}".format(M))
    r = range(-M, M + 1)
    return [(KernelWordIndex(m, n), kernelWord(m, n)) for m in r for n in r]

def conjugatedTwistPower(j, k):
    "The word c^j b^k c^-j together with its closed-form image"
    w = Tc ** j * Tb ** k * Tc ** -j
    mat = Mat3((1 - k*j, k*j*j, 0, -k, 1 + k*j, 0, -k*j, k*j*j, 1))
    return w, mat

def decomposeLMod(X, cover):
    "A word in a, b, c^k and i whose image is X; the c exponents are multiples of k"
    form = lmodForm(X, cover)
    A, (m, n) = form.A, form.v
    tail = TwistWord()
    if form.eps == -1:
        A, m, n, tail = -A, -m, -n, iota
    l, B = gcdSL2(m, n)
    C = A * B * SA ** -l
    return sl2Decompose(C).embed() * Tc ** l * sl2Decompose(B.inverse()).embed() * tail


@dataclass
class IdentityCheck:
    "Outcome of checking lhs = rhs"
    lhs: TwistWord
    rhs: TwistWord
    mode: str
    ok: bool
    detail: str
    label: str = ""

    def __str__(self):
        return "{}{} = {} [{}] {}: {}".format(self.label + ": " if self.label else "",
            self.lhs, self.rhs, self.mode, "ok" if self.ok else "FAILED", self.detail)


def _divergence(x, y):
    for i, (p, q) in enumerate(zip(x, y)):
        if p != q: return i, p, q
    return min(len(x), len(y)), None, None

def verifyIdentity(lhs, rhs, mode=PSI_MODE, script=None, label=""):
    "Check lhs = rhs by comparing homology images, or by replaying a rewrite script"
    lhs, rhs = word(lhs), word(rhs)
    if mode == PSI_MODE:
        x, y = evalPsi(lhs), evalPsi(rhs)
        if x == y:
            return IdentityCheck(lhs, rhs, mode, True, "Psi(lhs) = Psi(rhs) ({})".format(NECESSARY), label)
        i, p, q = _divergence(x, y)
        detail = "first divergence at entry ({}, {}): lhs has {}, rhs has {}".format(i // 3 + 1, i % 3 + 1, p, q)
        return IdentityCheck(lhs, rhs, mode, False, detail, label)
    if mode != SCRIPT_MODE: raise ValueError("Unknown mode {!r}".format(mode))
    if script is None: raise ValueError("Mode {!r} needs a script".format(mode))
    if isinstance(script, str): script = loadScript(script)
    w = lhs
    try:
        for w in replay(lhs, script): pass
    except NoMatch as e:
        return IdentityCheck(lhs, rhs, mode, False, str(e), label)
    if w == rhs:
        return IdentityCheck(lhs, rhs, mode, True, "{} steps replayed".format(len(script)), label)
    i = _divergence(w.units(), rhs.units())[0]
    detail = "after {} steps got '{}'; first divergence at letter {}".format(len(script), w, i)
    return IdentityCheck(lhs, rhs, mode, False, detail, label)

def verifyChain(chain, label=""):
    "Check every consecutive equality of a chain of word texts under Psi"
    words = [word(w) for w in chain]
    return [verifyIdentity(u, v, label="{}[{}]".format(label, i) if label else "")
        for i, (u, v) in enumerate(zip(words, words[1:]), 1)]


CONJUGATE_IDENTITY = "c b a (b c)^6 a^-1 b^-1 c^-1", "(a b)^6"
BRAID_CHAIN = "(b c)^6", "(c b)^6", "(c (b c b) c b)^2", "(c (c b c) c b)^2", "(c^2 b)^4"

# Rewrite scripts: (lhs, rhs, data file)
SCRIPTS = {
    "bc-c2b": ("(b c)^6", "(c^2 b)^4", "chain-bc-c2b.txt"),
    "c2b-c3b": ("(c^2 b)^4", "(c^3 b)^3", "chain-c2b-c3b.txt"),
}

BRAID_IDENTITIES = (
    ("c b^2 c^-1", "b^-1 c^2 b"),
    ("c^-1 b^2 c", "b c^2 b^-1"),
    ("c^-1 b c", "b c b^-1"),
    ("b^-1 c b", "c b c^-1"),
    ("b^-1 a b", "a b a^-1"),
    ("a^-1 b a", "b a b^-1"),
    ("c a", "a c"),
)

_C3B = ("(b c)^6", "(c b)^6", "(c^2 b)^4", "c^2 b c^2 b c^2 b c^2 b",
    "c^3 (c^-1 b c) c b c^2 b c^2 b", "c^3 b c (b^-1 c b) c^2 b c^2 b",
    "c^3 b c^2 (b c b) c^2 b", "c^3 b c^3 b c^3 b", "(c^3 b)^3")

REDUCTION_CHAINS = {
    2: (
        ("conjugate", CONJUGATE_IDENTITY),
        ("braid-chain", BRAID_CHAIN),
    ),
    3: (
        ("conjugate", CONJUGATE_IDENTITY),
        ("conjugate-c2", ("c^2 b a (b c)^6 a^-1 b^-1 c^-2", "c (a b)^6 c^-1")),
        ("i=2,j=1", (
            "c b^2 a (b c)^6 a^-1 b^-2 c^-1",
            "(c b^2 c^-1) a (b c)^6 a^-1 (c b^-2 c^-1)",
            "b^-1 c^2 b a (b c)^6 a^-1 b^-1 c^-2 b",
            "b^-1 c (a b)^6 c^-1 b")),
        ("i=2,j=2", (
            "c^2 b^2 a (b c)^6 a^-1 b^-2 c^-2",
            "c^3 (c^-1 b^2 c) a (b c)^6 (c^3 (c^-1 b^2 c) a)^-1",
            "(c^3 b c^3) c^-1 b^-1 a (b c)^6 ((c^3 b c^3) c^-1 b^-1 a)^-1",
            "(c^3 b c^3) c^-1 (b^-1 a b) (b c)^6 ((c^3 b c^3) c^-1 (b^-1 a b))^-1",
            "(c^3 b c^3 a) c^-1 b a^-1 (b c)^6 ((c^3 b c^3 a) c^-1 b a^-1)^-1",
            "(c^3 b c^3 a) c^-1 b ((a^-1 b a) c)^6 ((c^3 b c^3 a) c^-1 b)^-1",
            "(c^3 b c^3 a) c^-1 b (b a b^-1 c)^6 ((c^3 b c^3 a) c^-1 b)^-1",
            "(c^3 b c^3 a) c^-1 b^2 (a (b^-1 c b))^6 ((c^3 b c^3 a) c^-1 b^2)^-1",
            "(c^3 b c^3 a) c^-1 b^2 (a c b c^-1)^6 ((c^3 b c^3 a) c^-1 b^2)^-1",
            "(c^3 b c^3 a) (c^-1 b^2 c) (a b)^6 ((c^3 b c^3 a) (c^-1 b^2 c))^-1",
            "(c^3 b c^3 a b c^3) c^-1 (a b)^6 c (c^3 b c^3 a b c^3)^-1")),
        ("c-conjugate", (
            "c (a b)^6 c^-1", "(a c b c^-1)^6", "(a b^-1 c b)^6",
            "b^-1 (b a b^-1 c)^6 b", "b^-1 (a^-1 b a c)^6 b", "b^-1 a^-1 (b c)^6 a b")),
        ("c-inverse-conjugate", (
            "c^-1 (a b)^6 c", "(a c^-1 b c)^6", "(a b c b^-1)^6",
            "b (b^-1 a b c)^6 b^-1", "b (a b a^-1 c)^6 b^-1", "b a (b c)^6 a^-1 b^-1")),
        ("c3b", _C3B),
    ) + tuple(("braid:" + lhs, (lhs, rhs)) for lhs, rhs in BRAID_IDENTITIES),
}

def verifyReductions(k):
    "Check every displayed equality of the reductions to {a, b, c^k, i} for k = 2 or 3"
    k = int(k)
    if k not in REDUCTION_CHAINS: raise ValueError("Reduction chains exist only for k = 2, 3; got {}".format(k))
    checks = []
    for label, chain in REDUCTION_CHAINS[k]: checks.extend(verifyChain(chain, label))
    log.info("k=%d reduction chains: %d equalities, %d failing", k, len(checks),
        sum(not c.ok for c in checks))
    return checks
