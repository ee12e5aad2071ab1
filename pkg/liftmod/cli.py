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

"Command line: liftmod {eval, lift, verify, gens, index, maximal}"

import sys, logging, argparse
from json import dumps
from tqdm import tqdm
from liftmod import LiftmodError, version, parse
from liftmod.matrix import Mat3
from liftmod.homology import Cover, evalPsi, evalPsiMod, blockForm, liftTest
from liftmod.liftable import generatingSet, reducedGeneratingSet
from liftmod.quotient import cosetIndex, isMaximal
from liftmod.suites import SUITES, ALIASES, run
from liftmod.util import logError, parseRange

log = logging.getLogger(__name__)


def _eval(args, out):
    w = parse(args.word)
    if args.mod is not None:
        m = evalPsiMod(w, args.mod)
        print("Psi_{}({}) =\n{}".format(args.mod, w, m), file=out)
        return 0
    m = evalPsi(w)
    print("Psi({}) =\n{}".format(w, m), file=out)
    print(blockForm(m), file=out)
    if m == Mat3(): print("in ker Psi", file=out)
    return 0

def _lift(args, out):
    w = parse(args.word)
    cover = Cover(args.k)
    form = blockForm(evalPsi(w))
    m, n = form.v
    ok = liftTest(w, cover)
    print("{} v=({}, {}): {} | m: {}, {} | n: {}".format("liftable" if ok else "not liftable",
        m, n, args.k, m % args.k == 0, args.k, n % args.k == 0), file=out)
    return 0

def _verify(args, out):
    report = run(args.suite, k=args.k, window=args.window)
    print(report.json() if args.format == "json" else report.text(not args.failures), file=out)
    return 0 if report.ok else 1

def _gens(args, out):
    gens = reducedGeneratingSet(args.k) if args.reduced else generatingSet(args.k)
    for label, w in gens:
        print("{:16s} {}  lifts: {}".format(label, w, liftTest(w, args.k)), file=out)
    return 0

def _index(args, out):
    index, table = cosetIndex(args.k)
    print(index, file=out)
    if args.reps:
        for c, r in enumerate(table.representatives):
            print("  coset {:3d}  {}".format(c, r), file=out)
    return 0

def _maximal(args, out):
    rows = []
    for k in tqdm(parseRange(args.k_range), desc="maximal", disable=args.quiet):
        report = isMaximal(k)
        rows.append(report)
    for report in rows:
        if args.format == "json":
            w = report.witness
            print(dumps(dict(k=report.k, prime=bool(report.prime), maximal=report.maximal,
                orderH=report.orderH, orderG=report.orderG, enumerated=report.enumerated,
                witness=w and dict(divisor=w.divisor, order=w.order))), file=out)
        else: print(report, file=out)
    return 0


def parser():
    p = argparse.ArgumentParser(prog="liftmod",
        description="Liftability of mapping classes under the cyclic branched covers of the twice-punctured torus")
    p.add_argument("--version", action="version", version="liftmod " + ".".join(str(v) for v in version))
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", help="image of a word under Psi or Psi_k")
    s.add_argument("word")
    s.add_argument("--mod", type=int)
    s.set_defaults(run=_eval)

    s = sub.add_parser("lift", help="does a word lift under p_k?")
    s.add_argument("word")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(run=_lift)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", choices=list(SUITES) + list(ALIASES) + ["all"], default="all")
    s.add_argument("--k", type=int)
    s.add_argument("--window", type=int, default=5)
    s.add_argument("--failures", action="store_true", help="list failing checks only")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(run=_verify)

    s = sub.add_parser("gens", help="generating set of the liftable subgroup")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--reduced", action="store_true")
    s.set_defaults(run=_gens)

    s = sub.add_parser("index", help="index of the liftable subgroup mod k")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--reps", action="store_true", help="list the coset representatives")
    s.set_defaults(run=_index)

    s = sub.add_parser("maximal", help="maximality table over a range of k")
    s.add_argument("--k-range", default="2..12")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--quiet", action="store_true", help="no progress bar")
    s.set_defaults(run=_maximal)
    return p

def main(argv=None, out=None):
    args = parser().parse_args(argv)
    out = out or sys.stdout
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try: return args.run(args, out)
    except (LiftmodError, ValueError) as e:
        print("liftmod: error: {}".format(e), file=sys.stderr)
        return 2
    except Exception:
        logError()
        return 2
