""" Report records: one JSON object per line, or a plain table """

import json
import logging
import math
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, fields

from tabulate import tabulate

from ramanujan_psi.errors import RamanujanPsiError

LOG = logging.getLogger(__name__)

FLOAT_FORMAT = ".17g"
FORMATS = ("json", "plain")


class ReportError(RamanujanPsiError):
    """ Custom errors for reports """
    pass


@dataclass
class Report:
    """ Result of one evaluation or check """
    quantity: str
    input: object
    value: float
    abs_error_estimate: float
    k_used: int
    n_used: int
    method: str
    elapsed_nanoseconds: int = 0
    status: str = "ok"

    def to_json(self):
        """
        Serialize to one line; floats carry 17 significant digits
        :return: str
        """
        items = ["%s: %s" % (json.dumps(key), _encode(val)) for key, val in asdict(self).items()]
        return "{" + ", ".join(items) + "}"

    @classmethod
    def from_json(cls, line):
        """
        Parse a line written by to_json
        :param line: str
        :return: Report
        """
        try:
            raw = json.loads(line)
        except ValueError as err:
            raise ReportError("Invalid report line: %s" % err)
        names = {field.name for field in fields(cls)}
        if not isinstance(raw, dict) or set(raw) - names:
            raise ReportError("Unexpected report fields: %r" % (line,))
        for name in ("value", "abs_error_estimate"):
            if name in raw:
                raw[name] = float(raw[name])
        return cls(**raw)


def _encode(val):
    """ JSON-encode one value """
    if isinstance(val, float) and not isinstance(val, bool):
        if not math.isfinite(val):
            raise ReportError("Non-finite value in report: %r" % val)
        return format(val, FLOAT_FORMAT)
    return json.dumps(val)


@contextmanager
def stopwatch():
    """
    Measure wall time in nanoseconds
    :return: generator yielding a one-element list filled on exit
    """
    elapsed = [0]
    start = time.perf_counter_ns()
    try:
        yield elapsed
    finally:
        elapsed[0] = time.perf_counter_ns() - start


def render(reports, fmt="json"):
    """
    Render reports for stdout
    :param reports: list of Report
    :param fmt: json or plain
    :return: str
    """
    if fmt not in FORMATS:
        raise ReportError("Unknown format: %s" % fmt)
    if fmt == "json":
        return "\n".join(report.to_json() for report in reports)

    headers = [field.name for field in fields(Report)]
    rows = [[getattr(report, name) for name in headers] for report in reports]
    return tabulate(rows, headers, floatfmt=FLOAT_FORMAT)
