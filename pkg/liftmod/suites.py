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

"Verification suites run by 'liftmod verify'"

import logging
from random import Random
from liftmod import TwistWord, TWISTS
from liftmod.matrix import Mat2, Mat3
from liftmod.homology import PSI, evalPsi, forget, shear, inImageMod
from liftmod.sl2 import SA, SB
from liftmod.rewrite import RULES, matches, rewrite
from liftmod.liftable import (CHAIN, CONJUGATE_IDENTITY, BRAID_CHAIN, SCRIPTS, SCRIPT_MODE, Tb, Tc,
    conjugatedTwistPower, kernelBasis, verifyIdentity, verifyReductions)
from liftmod.quotient import schreierCheck
from liftmod.misc.report import Report, SKIP

log = logging.getLogger(__name__)

SEED = 20260417
SAMPLES = 200


def randomWord(rnd, length, letters=TWISTS + "i"):
    return TwistWord((rnd.choice(letters), rnd.choice((1, -1))) for i in range(length))

def relations(**kw):
    "Braid images, rewrite invariance and the homomorphism property on random words"
    r = Report("relations")
    for rule in RULES.values():
        r.add("rule:" + rule.id, evalPsi(rule.left) == evalPsi(rule.right), str(rule))
    rnd = Random(SEED)
    bad = 0
    for n in range(SAMPLES):
        u, v = randomWord(rnd, 12), randomWord(rnd, 12)
        if evalPsi(u * v) != evalPsi(u) * evalPsi(v) or not inImageMod(evalPsi(u)): bad += 1
    r.add("homomorphism", bad == 0, "{} random pairs, {} failing".format(SAMPLES, bad))
    tried = bad = 0
    for n in range(SAMPLES):
        w = randomWord(rnd, 16, TWISTS)
        for rule in RULES.values():
            for d in ("forward", "backward"):
                for p in range(len(w)):
                    if matches(w, rule, p, d):
                        tried += 1
                        if evalPsi(rewrite(w, rule, p, d)) != evalPsi(w): bad += 1
    r.add("rewrite-invariance", bad == 0, "{} rewrites, {} failing".format(tried, bad))
    return r.finish()

def conjugate(**kw):
    r = Report("conjugate")
    c = verifyIdentity(*CONJUGATE_IDENTITY)
    r.add("conjugate", c.ok, c.detail)
    return r.finish()

def braidChain(**kw):
    r = Report("braid-chain")
    for i, (u, v) in enumerate(zip(BRAID_CHAIN, BRAID_CHAIN[1:]), 1):
        c = verifyIdentity(u, v)
        r.add("braid-chain[{}]".format(i), c.ok, "{} = {}: {}".format(u, v, c.detail))
    c = verifyIdentity("(b c)^6", "(c^3 b)^3")
    r.add("c3b", c.ok, c.detail)
    for name, (lhs, rhs, script) in SCRIPTS.items():
        c = verifyIdentity(lhs, rhs, SCRIPT_MODE, script)
        r.add("script:" + name, c.ok, "{} -> {}: {}".format(lhs, rhs, c.detail))
    return r.finish()

def reductions(k=None, **kw):
    r = Report("reductions")
    for n in ((k,) if k else (2, 3)):
        for c in verifyReductions(n): r.add("k={}/{}".format(n, c.label), c.ok, c.detail)
    return r.finish()

def kernel(window=5, **kw):
    r = Report("kernel")
    r.add("chain", evalPsi(CHAIN) == Mat3(), "Psi((b c)^6) = I")
    for idx, w in kernelBasis(window):
        r.add("kernel(m={}, n={})".format(idx.m, idx.n), evalPsi(w) == Mat3(), str(w))
    return r.finish()

def closedForms(**kw):
    "Generator images, the closed forms for c^m b c^n and c^j b^K c^-j, shears and projections"
    r = Report("closed-forms")
    expect = {
        "a": (1, 1, 0, 0, 1, 0, 0, 0, 1),
        "b": (1, 0, 0, -1, 1, 0, 0, 0, 1),
        "c": (1, 1, 0, 0, 1, 0, 0, 1, 1),
        "i": (-1, 0, 0, 0, -1, 0, 0, 0, -1),
    }
    for s, m in expect.items(): r.add("psi:" + s, evalPsi(s) == Mat3(m), str(PSI[s].rows))
    bad = 0
    for m in range(-5, 6):
        for n in range(-5, 6):
            w = Tc ** m * Tb * Tc ** n
            x = m - m * n + n
            if evalPsi(w) != Mat3((1 - m, x, 0, -1, 1 - n, 0, -m, x, 1)): bad += 1
    r.add("c^m b c^n", bad == 0, "121 cases, {} failing".format(bad))
    bad = 0
    for K in range(2, 7):
        for j in range(K):
            w, mat = conjugatedTwistPower(j, K)
            if evalPsi(w) != mat: bad += 1
    r.add("c^j b^K c^-j", bad == 0, "20 cases, {} failing".format(bad))
    r.add("shear:a^-1 c", evalPsi("a^-1 c") == shear(0, 1), "shear(0, 1)")
    r.add("shear:b^-1 a^-1 c b", evalPsi("b^-1 a^-1 c b") == shear(-1, 1), "shear(-1, 1)")
    r.add("forget", forget(evalPsi("a")) == forget(evalPsi("c")) == SA and forget(evalPsi("b")) == SB,
        "forget(Psi(a)) = forget(Psi(c)) = SA, forget(Psi(b)) = SB")
    r.add("(SA SB SA)^2", (SA * SB * SA) ** 2 == -Mat2(), "-I")
    return r.finish()

def schreier(k=None, **kw):
    r = Report("schreier")
    for n in ((k,) if k else (2, 3, 4, 5)):
        for e in schreierCheck(n):
            r.add("k={}/coset {}/{}".format(n, e.coset, e.generator), e.ok, "{}: {}".format(e.word, e.detail))
    return r.finish()


SUITES = {
    "relations": relations,
    "conjugate": conjugate,
    "braid-chain": braidChain,
    "reductions": reductions,
    "kernel": kernel,
    "closed-forms": closedForms,
    "schreier": schreier,
}

# Alternative names accepted by run and by the command line
ALIASES = {
    "eq1": "conjugate",
    "eq2": "braid-chain",
    "prop42": "reductions",
    "paper-matrices": "closed-forms",
}

def run(suite, k=None, window=5):
    "Run one named suite, or all of them"
    if suite == "all":
        r = Report("all")
        for name, fn in SUITES.items():
            if name == "reductions" and k not in (None, 2, 3):
                r.add("reductions", SKIP, "reduction chains exist only for k = 2, 3")
                continue
            r.extend(fn(k=k, window=window))
        return r.finish()
    suite = ALIASES.get(suite, suite)
    try: fn = SUITES[suite]
    except KeyError: raise ValueError("Unknown suite {!r}; expected one of {}".format(suite, ", ".join(list(SUITES) + list(ALIASES) + ["all"])))
    log.info("suite %s starting", suite)
    r = fn(k=k, window=window)
    log.info("suite %s: %s", suite, r.counts)
    return r
