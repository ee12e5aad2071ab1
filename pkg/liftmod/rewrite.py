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

"Single-step rewriting of twist words by braid and commutation relations, driven by scripts"

import logging
from dataclasses import dataclass
from liftmod import TwistWord, NoMatch, ScriptError, INVOLUTION, parse, word
from liftmod.homology import evalPsi
from liftmod.util import liftmodData

log = logging.getLogger(__name__)

FORWARD, BACKWARD = "forward", "backward"


@dataclass(frozen=True)
class RewriteRule:
    "A relation left = right between short words in a, b, c"
    id: str
    left: TwistWord
    right: TwistWord

    def __post_init__(self):
        if INVOLUTION in self.left.symbols() | self.right.symbols():
            raise ValueError("Rule {} mentions the involution".format(self.id))
        if evalPsi(self.left) != evalPsi(self.right):
            raise ValueError("Rule {} changes the homology image".format(self.id))

    def sides(self, direction):
        "Return (pattern, replacement) for the given direction"
        if direction == FORWARD: return self.left, self.right
        if direction == BACKWARD: return self.right, self.left
        raise ValueError("Direction must be {!r} or {!r}, got {!r}".format(FORWARD, BACKWARD, direction))

    def __str__(self): return "{}: {} = {}".format(self.id, self.left, self.right)


RULES = {}

def _rule(id, left, right): RULES[id] = RewriteRule(id, parse(left), parse(right))

_rule("comm-ac", "a c", "c a")
_rule("braid-ab", "a b a", "b a b")
_rule("braid-bc", "b c b", "c b c")
_rule("braid-conj-ab", "a b a^-1", "b^-1 a b")
_rule("braid-conj-bc", "b c b^-1", "c^-1 b c")


def getRule(rule):
    if isinstance(rule, RewriteRule): return rule
    try: return RULES[rule]
    except KeyError: raise ValueError("Unknown rule {!r}; expected one of {}".format(rule, ", ".join(RULES)))

def matches(w, rule, position, direction=FORWARD):
    "Does the rule's pattern occur at the unit-letter position?"
    pat = getRule(rule).sides(direction)[0].units()
    return position >= 0 and word(w).units()[position:position + len(pat)] == pat

def rewrite(w, rule, position, direction=FORWARD):
    "Replace the pattern at a unit-letter position by the other side of the rule"
    w, rule = word(w), getRule(rule)
    src, dst = rule.sides(direction)
    units, pat = w.units(), src.units()
    if position < 0 or units[position:position + len(pat)] != pat:
        raise NoMatch("{} {} does not match '{}' at position {}".format(rule.id, direction, w, position))
    return TwistWord(units[:position] + dst.units() + units[position + len(pat):])


@dataclass(frozen=True)
class Step:
    rule: str
    position: int
    direction: str = FORWARD

    def __str__(self): return "{} {} {}".format(self.rule, self.position, self.direction)


def parseScript(text):
    "Parse rewrite-script text: one 'rule-id position direction' step per line, '#' comments"
    steps = []
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line: continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ScriptError("expected 'rule-id position direction', got {!r}".format(line), n)
        rule, pos = parts[:2]
        direction = parts[2] if len(parts) == 3 else FORWARD
        if rule not in RULES: raise ScriptError("unknown rule {!r}".format(rule), n)
        if direction not in (FORWARD, BACKWARD): raise ScriptError("bad direction {!r}".format(direction), n)
        try: pos = int(pos)
        except ValueError: raise ScriptError("position {!r} is not an integer".format(pos), n)
        if pos < 0: raise ScriptError("negative position {}".format(pos), n)
        steps.append(Step(rule, pos, direction))
    return steps

def loadScript(name):
    "Read a rewrite script shipped in the package data folder"
    return parseScript(liftmodData(name))

def replay(w, steps):
    "Apply the steps in order, yielding each intermediate word; NoMatch names the failing step"
    w = word(w)
    for n, step in enumerate(steps, 1):
        try: w = rewrite(w, step.rule, step.position, step.direction)
        except NoMatch as e:
            raise NoMatch("step {} ({}): {}".format(n, step, e)) from e
        log.debug("step %d %s -> %s", n, step, w)
        yield w
