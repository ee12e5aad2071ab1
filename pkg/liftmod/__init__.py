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

version = 0, 1, "dev"

import re

# Alphabet: the Dehn twists a, b, c and the hyperelliptic involution i
LETTERS = "abci"
TWISTS = "abc"
INVOLUTION = "i"

# Largest number of exponent runs a power may expand to
MAX_RUNS = 10 ** 6


class LiftmodError(Exception):
    "Base class for all liftmod errors"


class WordSyntaxError(LiftmodError, ValueError):
    "Invalid twist word text"

    def __init__(self, msg, text=None, pos=None):
        if pos is not None: msg = "{} at position {}".format(msg, pos)
        super().__init__(msg)
        self.text = text
        self.pos = pos


class NotUnimodular(LiftmodError, ValueError):
    "Matrix cannot be inverted over the integers (or over Z_k)"


class ModulusMismatch(LiftmodError, ValueError):
    "Residue matrices with different moduli were combined"


class NoMatch(LiftmodError, ValueError):
    "Rewrite pattern is absent at the requested position"


class ShapeError(LiftmodError, ValueError):
    "Matrix does not have the block shape of an image matrix"

    def __init__(self, condition, msg):
        super().__init__("{}: {}".format(condition, msg))
        self.condition = condition


class MembershipError(LiftmodError, ValueError):
    "Matrix is not in the image of the liftable mapping class group"

    def __init__(self, condition, msg):
        super().__init__("{}: {}".format(condition, msg))
        self.condition = condition


class ScriptError(LiftmodError, ValueError):
    "Malformed rewrite script"

    def __init__(self, msg, line=None):
        if line is not None: msg = "line {}: {}".format(line, msg)
        super().__init__(msg)
        self.line = line


def freeReduce(runs):
    "Merge adjacent runs of the same symbol and drop zero exponents"
    out = []
    for s, e in runs:
        if not e: continue
        if out and out[-1][0] == s:
            e += out.pop()[1]
            if not e: continue
        out.append((s, e))
    return tuple(out)


class TwistWord:
    "Freely reduced word in the twists a, b, c and the involution i, stored as exponent runs"
    __slots__ = "_runs",

    def __init__(self, runs=()):
        runs = freeReduce((s, int(e)) for s, e in runs)
        for s, e in runs:
            if s not in LETTERS:
                raise ValueError("Unknown letter {!r}; expected one of {}".format(s, LETTERS))
        self._runs = runs

    @staticmethod
    def letter(s, e=1): return TwistWord([(s, e)])

    @staticmethod
    def parse(text): return parse(text)

    @staticmethod
    def fromUnits(units): return TwistWord(units)

    @property
    def runs(self): return self._runs

    def __iter__(self): return iter(self._runs)

    def __len__(self):
        "Number of unit letters"
        return sum(abs(e) for s, e in self._runs)

    def __bool__(self): return bool(self._runs)

    def __eq__(self, other):
        if isinstance(other, str): other = parse(other)
        return isinstance(other, TwistWord) and self._runs == other._runs

    def __hash__(self): return hash(self._runs)

    def __mul__(self, other):
        other = word(other)
        return TwistWord(self._runs + other._runs)

    def __rmul__(self, other): return word(other) * self

    def inverse(self):
        return TwistWord((s, -e) for s, e in reversed(self._runs))

    __invert__ = inverse

    def __pow__(self, n):
        n = int(n)
        if n < 0: return self.inverse() ** -n
        if len(self._runs) == 1:
            s, e = self._runs[0]
            return TwistWord([(s, e * n)])
        if len(self._runs) * n > MAX_RUNS:
            raise ValueError("Power {} of a word with {} runs exceeds MAX_RUNS = {}".format(n, len(self._runs), MAX_RUNS))
        return TwistWord(self._runs * n)

    def conjugate(self, g):
        "Return g w g^-1"
        g = word(g)
        return g * self * ~g

    def units(self):
        "Expand exponent runs into unit letters (s, +1) or (s, -1)"
        out = []
        for s, e in self._runs:
            out.extend([(s, 1 if e > 0 else -1)] * abs(e))
        return tuple(out)

    def symbols(self): return frozenset(s for s, e in self._runs)

    def exponents(self, s):
        "Exponents of every run of the symbol s"
        return [e for t, e in self._runs if t == s]

    def __str__(self):
        if not self._runs: return "1"
        return " ".join(s if e == 1 else "{}^{}".format(s, e) for s, e in self._runs)

    def __repr__(self): return "TwistWord('{}')".format(self)


def word(w):
    "Coerce text or a TwistWord to a TwistWord"
    if isinstance(w, TwistWord): return w
    if isinstance(w, str): return parse(w)
    return TwistWord(w)


# Grammar:  word := item*
#           item := '1' | letter ('^' int)? | '(' word ')' ('^' int)?
_TOKEN = re.compile(r"([abci])|(1)|(\()|(\))|\^([+-]?\d+)")
_KINDS = "letter", "one", "open", "close", "pow"

def _tokens(text):
    pos, n = 0, len(text)
    while True:
        while pos < n and text[pos].isspace(): pos += 1
        if pos == n: return
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordSyntaxError("Invalid token {!r}".format(text[pos]), text, pos)
        i = m.lastindex
        yield _KINDS[i - 1], pos, m.group(i)
        pos = m.end()

def _power(text, tokens, i):
    "Read an optional '^n' after a letter or group"
    if i < len(tokens) and tokens[i][0] == "pow":
        e = int(tokens[i][2])
        if e == 0: raise WordSyntaxError("Zero exponent", text, tokens[i][1])
        return e, i + 1
    return 1, i

def _parseWord(text, tokens, i):
    w = TwistWord()
    while i < len(tokens):
        kind, pos, val = tokens[i]
        if kind == "close": break
        if kind == "letter":
            e, i = _power(text, tokens, i + 1)
            w = w * TwistWord.letter(val, e)
        elif kind == "one": i += 1
        elif kind == "open":
            sub, i = _parseWord(text, tokens, i + 1)
            if i == len(tokens): raise WordSyntaxError("Unclosed '('", text, pos)
            e, i = _power(text, tokens, i + 1)
            try: w = w * sub ** e
            except ValueError as ex: raise WordSyntaxError(str(ex), text, pos) from ex
        else: raise WordSyntaxError("Exponent without a letter", text, pos)
    return w, i

def parse(text):
    "Parse word text such as 'c^-2 b a^3 i' or '(b c)^6' into a freely reduced TwistWord"
    tokens = list(_tokens(text))
    w, i = _parseWord(text, tokens, 0)
    if i < len(tokens): raise WordSyntaxError("Unmatched ')'", text, tokens[i][1])
    return w
