import csv
import io
from dataclasses import dataclass
from typing import Dict, List, Optional

from .base_request import BaseRequest
from counting import DProvenance, theorem1_count, theorem2_closed_form
from number_theory import count_concurrencies, orbit_count, prime_power
from utils import *

COLUMNS = ["n", "d", "count", "orbits", "prime_power", "closed_form", "match"]


@dataclass(frozen=True)
class TableRow:
    n: int
    d: int
    count: int
    orbits: int
    prime_power: Optional[str] = None
    closed_form: Optional[int] = None

    @property
    def match(self) -> Optional[bool]:
        return None if self.closed_form is None else self.closed_form == self.count

    def cells(self) -> List[str]:
        match = "" if self.match is None else ("yes" if self.match else "NO")
        return [
            str(self.n), str(self.d), str(self.count), str(self.orbits),
            self.prime_power or "",
            "" if self.closed_form is None else str(self.closed_form),
            match,
        ]

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": str(self.n),
            "d": str(self.d),
            "count": str(self.count),
            "orbits": str(self.orbits),
            "prime_power": self.prime_power,
            "closed_form": None if self.closed_form is None else str(self.closed_form),
            "match": self.match,
        }


def table_row(n: int) -> TableRow:
    """Equal-division row: d from the Ceva equation, closed form when n is a prime power."""
    d = count_concurrencies(n)
    report = theorem1_count(n - 1, n - 1, n - 1, d, provenance=DProvenance.CEVA_EQUATION)
    power = prime_power(n)
    closed_form = theorem2_closed_form(n, power[0]) if power else None
    return TableRow(
        n=n,
        d=d,
        count=report.triangle_count,
        orbits=orbit_count(n),
        prime_power=f"{power[0]}^{power[1]}" if power else None,
        closed_form=closed_form,
    )


class TableRequest(BaseRequest):

    def __init__(self, args, command: str = "table"):
        logger.info("Initializing TableRequest")
        super().__init__(args, command=command)
        self.n_min, self.n_max = args.equal_range
        self.output_format = getattr(args, "format", "table")
        self.run()

    def execute(self):
        if not (2 <= self.n_min <= self.n_max):
            raise PreconditionError(
                f"--equal-range needs 2 <= n_min <= n_max, got {self.n_min} {self.n_max}",
                parameter="equal_range")
        if self.output_format not in TABLE_FORMATS:
            raise PreconditionError(f"Unknown format {self.output_format}", parameter="format")

        rows = ordered_map(table_row, range(self.n_min, self.n_max + 1), workers=self.workers)
        mismatches = [row.n for row in rows if row.match is False]
        if mismatches:
            raise ConsistencyError(f"Closed form disagrees with the general count for n={mismatches}")

        if self.output_format == "json":
            return self.return_success(json_out=[row.to_dict() for row in rows])
        if self.output_format == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(COLUMNS)
            writer.writerows(row.cells() for row in rows)
            return self.return_success(buffer.getvalue())
        return self.return_success(self._aligned(rows))

    @staticmethod
    def _aligned(rows: List[TableRow]) -> str:
        grid = [COLUMNS] + [[cell or "-" for cell in row.cells()] for row in rows]
        widths = [max(len(line[column]) for line in grid) for column in range(len(COLUMNS))]
        return "\n".join(
            "  ".join(cell.rjust(width) for cell, width in zip(line, widths)).rstrip()
            for line in grid)
