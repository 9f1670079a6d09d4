"""Linear systems over GF(2) with rows packed into Python integers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Gf2System:
    """Equations ``row . x = rhs`` over GF(2); bit ``i`` of a row is variable ``i``."""

    nvars: int
    rows: list = field(default_factory=list)
    rhs: list = field(default_factory=list)
    names: list = field(default_factory=list)

    def add(self, variables, value: int) -> None:
        row = 0
        for v in variables:
            row ^= 1 << v
        self.rows.append(row)
        self.rhs.append(value & 1)

    def eliminate(self):
        """Row-reduce; return ``(rank, consistent, pivots)`` with ``pivots`` as ``(col, row, rhs)``."""
        pivots: list[tuple[int, int, int]] = []
        consistent = True
        for row, b in zip(self.rows, self.rhs):
            for col, prow, pb in pivots:
                if row >> col & 1:
                    row ^= prow
                    b ^= pb
            if row == 0:
                if b:
                    consistent = False
                continue
            col = row.bit_length() - 1
            # keep pivot rows reduced against each other
            pivots = [
                (c, r ^ row, pbb ^ b) if r >> col & 1 else (c, r, pbb) for c, r, pbb in pivots
            ]
            pivots.append((col, row, b))
        return len(pivots), consistent, pivots

    def rank(self) -> int:
        return self.eliminate()[0]

    def is_consistent(self) -> bool:
        return self.eliminate()[1]

    def solution_count(self) -> int:
        """``2 ** (nvars - rank)`` when consistent, else 0."""
        rank, ok, _ = self.eliminate()
        return 1 << (self.nvars - rank) if ok else 0

    def solve(self):
        """One solution as a list of bits (free variables set to 0), or ``None``."""
        _, ok, pivots = self.eliminate()
        if not ok:
            return None
        x = [0] * self.nvars
        for col, row, b in pivots:
            x[col] = b  # fully reduced rows touch no other pivot column
        # Reduced rows may still involve free columns, all set to zero here.
        return x

    def check(self, x) -> bool:
        for row, b in zip(self.rows, self.rhs):
            s = 0
            r, i = row, 0
            while r:
                if r & 1:
                    s ^= x[i]
                r >>= 1
                i += 1
            if s != b:
                return False
        return True


def rank_of(rows) -> int:
    """Rank of a list of integer bit rows."""
    sys = Gf2System(max((r.bit_length() for r in rows), default=0), list(rows), [0] * len(rows))
    return sys.rank()
