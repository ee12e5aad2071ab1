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

import logging
from pathlib import Path
from traceback import format_exc

log = logging.getLogger("liftmod")

def resolvePath(rel, start=__file__, isDir=False):
    "Return an absolute path relative to a starting file or folder"
    p = Path(start)
    if not isDir: p = p.parent
    return str(p.joinpath(rel).resolve())

def liftmodData(*names, folder=resolvePath("data")):
    "Read one or more text files shipped in the package data folder"
    t = [Path(folder, n).read_text(encoding="utf-8") for n in names]
    return t if len(names) > 1 else t[0]

def logError():
    "Log the active exception with its traceback"
    log.error(format_exc().rstrip())

def parseRange(text):
    "Parse 'A..B' (inclusive) or a single integer into a range"
    a, sep, b = text.partition("..")
    try: a, b = int(a), int(b if sep else a)
    except ValueError: raise ValueError("Expected A..B or an integer, got {!r}".format(text))
    if b < a: raise ValueError("Empty range {!r}".format(text))
    return range(a, b + 1)
