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

"Exact 2x2 and 3x3 integer matrices stored as flat tuples, and 3x3 residue matrices"

import re
from math import gcd
from liftmod import NotUnimodular, ModulusMismatch


def _mul2(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h

def _mul3(x, y):
    return tuple(x[r] * y[c] + x[r+1] * y[c+3] + x[r+2] * y[c+6]
        for r in (0, 3, 6) for c in (0, 1, 2))

def _adj3(m):
    "Adjugate (transposed cofactor matrix) of a 3x3 matrix"
    a, b, c, d, e, f, g, h, i = m
    return (e*i - f*h, c*h - b*i, b*f - c*e,
        f*g - d*i, a*i - c*g, c*d - a*f,
        d*h - e*g, b*g - a*h, a*e - b*d)

def _flat(entries, n):
    "Accept n*n entries or n rows of n entries"
    e = list(entries)
    if len(e) == n and all(not isinstance(r, int) for r in e):
        e = [x for r in e for x in r]
    if len(e) != n * n:
        raise ValueError("Expected {} entries, got {}".format(n * n, len(e)))
    return [int(x) for x in e]

def _power(m, n, one):
    "Square-and-multiply; negative powers use the inverse"
    if n < 0: m, n = m.inverse(), -n
    r = one
    while n:
        if n & 1: r = r * m
        m = m * m
        n >>= 1
    return r

def _format(rows):
    w = max(len(str(x)) for r in rows for x in r)
    lines = ("[" + ", ".join(str(x).rjust(w) for x in r) + "]" for r in rows)
    return "[" + ",\n ".join(lines) + "]"


class Mat2(tuple):
    "Integer 2x2 matrix [[a, b], [c, d]] stored as the 4-tuple (a, b, c, d)"

    def __new__(cls, a=1, b=0, c=0, d=1):
        return tuple.__new__(cls, (int(a), int(b), int(c), int(d)))

    @property
    def rows(self): return self[:2], self[2:]

    def det(self):
        a, b, c, d = self
        return a * d - b * c

    def __mul__(self, other):
        if isinstance(other, Mat2): return Mat2(*_mul2(self, other))
        return NotImplemented

    def __neg__(self): return Mat2(*(-x for x in self))

    def __pow__(self, n): return _power(self, int(n), Mat2())

    def inverse(self):
        d = self.det()
        if d not in (1, -1): raise NotUnimodular("det = {} is not +1 or -1".format(d))
        a, b, c, e = self
        return Mat2(d * e, -d * b, -d * c, d * a)

    def vecmul(self, v):
        "Row-vector product v A"
        x, y = v
        a, b, c, d = self
        return x * a + y * c, x * b + y * d

    def __str__(self): return _format(self.rows)

    def __repr__(self): return "Mat2{}".format(tuple(self))


class Mat3(tuple):
    "Integer 3x3 matrix stored row-major as a 9-tuple"

    def __new__(cls, entries=None):
        if entries is None: entries = (1, 0, 0, 0, 1, 0, 0, 0, 1)
        return tuple.__new__(cls, _flat(entries, 3))

    @staticmethod
    def block(A, v=(0, 0), eps=1):
        "Assemble [[A, 0], [v, eps]] from a 2x2 block, a row offset and a corner sign"
        a, b, c, d = A
        m, n = v
        return Mat3((a, b, 0, c, d, 0, m, n, eps))

    @staticmethod
    def parse(text):
        "Read nine integers, row-major, separated by commas and/or whitespace"
        tokens = [t for t in re.split(r"[\s,]+", text.replace("[", " ").replace("]", " ")) if t]
        if len(tokens) != 9:
            raise ValueError("A 3x3 matrix needs 9 integers, got {}".format(len(tokens)))
        try: return Mat3(int(t) for t in tokens)
        except ValueError: raise ValueError("Matrix entries must be integers: {!r}".format(text))

    @property
    def rows(self): return self[0:3], self[3:6], self[6:9]

    def entry(self, i, j): return self[3 * i + j]

    def det(self):
        a, b, c, d, e, f, g, h, i = self
        return a * (e*i - f*h) - b * (d*i - f*g) + c * (d*h - e*g)

    def __mul__(self, other):
        if type(other) is Mat3: return Mat3(_mul3(self, other))
        return NotImplemented

    def __neg__(self): return type(self)(-x for x in self)

    def __pow__(self, n): return _power(self, int(n), Mat3())

    def inverse(self):
        d = self.det()
        if not self.isUnimodular(): raise NotUnimodular("det = {} is not +1 or -1".format(d))
        return Mat3(d * x for x in _adj3(self))

    def isUnimodular(self): return self.det() in (1, -1)

    def mod(self, k): return ResidueMat3(self, k)

    def __str__(self): return _format(self.rows)

    def __repr__(self): return "Mat3({})".format(tuple(self))


class ResidueMat3(Mat3):
    "3x3 matrix over Z_k with entries reduced to [0, k)"

    def __new__(cls, entries, modulus):
        k = int(modulus)
        if k < 2: raise ValueError("Modulus must be at least 2, got {}".format(k))
        m = tuple.__new__(cls, [x % k for x in _flat(entries, 3)])
        m.modulus = k
        return m

    @staticmethod
    def identity(k): return ResidueMat3(Mat3(), k)

    def _check(self, other):
        if self.modulus != other.modulus:
            raise ModulusMismatch("Moduli {} and {} differ".format(self.modulus, other.modulus))

    def __mul__(self, other):
        if not isinstance(other, ResidueMat3): return NotImplemented
        self._check(other)
        return ResidueMat3(_mul3(self, other), self.modulus)

    def __neg__(self): return ResidueMat3((-x for x in self), self.modulus)

    def __pow__(self, n): return _power(self, int(n), ResidueMat3.identity(self.modulus))

    def __eq__(self, other):
        return isinstance(other, ResidueMat3) and self.modulus == other.modulus \
            and tuple.__eq__(self, other)

    def __ne__(self, other): return not self == other

    def __hash__(self): return hash((self.modulus, tuple(self)))

    def inverse(self):
        k = self.modulus
        d = Mat3.det(self) % k
        if not self.isUnimodular():
            raise NotUnimodular("det = {} is not a unit mod {}".format(d, k))
        u = pow(d, -1, k)
        return ResidueMat3((u * x for x in _adj3(self)), k)

    def isUnimodular(self):
        "Is the determinant a unit mod k?"
        return gcd(Mat3.det(self), self.modulus) == 1

    @property
    def key(self):
        "Pack the entries row-major in base k"
        k, key = self.modulus, 0
        for x in reversed(self): key = key * k + x
        return key

    def __repr__(self): return "ResidueMat3({}, {})".format(tuple(self), self.modulus)
