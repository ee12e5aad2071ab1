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

"Check reports in text and line-oriented JSON (schema 1)"

from json import loads, dumps
from time import time

SCHEMA = 1
PASS, FAIL, SKIP = "pass", "fail", "skip"
STATUS = PASS, FAIL, SKIP


class Report:
    "Named list of (check id, status, detail) with a wall-clock timer"

    def __init__(self, suite):
        self.suite = suite
        self.checks = []
        self.seconds = 0.0
        self._start = time()

    def add(self, check, status, detail=""):
        if status is True or status is False: status = PASS if status else FAIL
        if status not in STATUS: raise ValueError("Status must be one of {}, got {!r}".format(STATUS, status))
        self.checks.append((str(check), status, str(detail)))
        return status == PASS

    def extend(self, other):
        "Append the checks of another report, prefixed by its suite name"
        for c, s, d in other.checks: self.checks.append(("{}/{}".format(other.suite, c), s, d))

    def finish(self):
        self.seconds = round(time() - self._start, 3)
        return self

    def count(self, status): return sum(1 for c in self.checks if c[1] == status)

    @property
    def counts(self): return {s: self.count(s) for s in STATUS}

    @property
    def ok(self): return self.count(FAIL) == 0

    def __len__(self): return len(self.checks)

    def summary(self):
        s = dict(suite=self.suite, seconds=self.seconds)
        s.update(self.counts)
        return s

    def text(self, verbose=True):
        lines = ["{:4s} {}  {}".format(s.upper(), c, d) for c, s, d in self.checks
            if verbose or s == FAIL]
        c = self.counts
        lines.append("{}: {} passed, {} failed, {} skipped in {:.3f} s".format(
            self.suite, c[PASS], c[FAIL], c[SKIP], self.seconds))
        return "\n".join(lines)

    def json(self):
        lines = [dumps(dict(check=c, status=s, detail=d), ensure_ascii=False) for c, s, d in self.checks]
        lines.append(dumps(dict(summary=self.summary(), schema=SCHEMA)))
        return "\n".join(lines)

    def __str__(self): return self.text()

    @staticmethod
    def parse(text):
        "Read a report back from its JSON lines"
        report, summary = None, None
        checks = []
        for line in text.splitlines():
            if not line.strip(): continue
            obj = loads(line)
            if "summary" in obj:
                if obj.get("schema") != SCHEMA:
                    raise ValueError("Unsupported report schema {!r}".format(obj.get("schema")))
                summary = obj["summary"]
            else: checks.append((obj["check"], obj["status"], obj.get("detail", "")))
        if summary is None: raise ValueError("Report has no summary line")
        report = Report(summary["suite"])
        for c in checks: report.add(*c)
        report.seconds = summary["seconds"]
        if report.counts != {s: summary[s] for s in STATUS}:
            raise ValueError("Summary counts do not match the checks")
        return report
