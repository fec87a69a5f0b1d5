"""Closed-form divider resource estimates over eleven adder cost rows.

Each row gives the non-restoring divider's Toffoli depth, Toffoli count
and qubit count as functions of the operand width n (plus a radix r for
the higher-radix row).  Restoring costs are the same forms with
3n^2 - 2n - 1 more Toffoli work and one fewer wire.

Two log conventions are supported.  The default evaluates base-2 logs as
reals and rounds each final value up; the alternative floors every log
term first.  The two disagree for some rows, so reports can carry both.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .divider import NON_RESTORING, RESTORING, KINDS

CEIL_REAL_LOG = "ceil-real-log"
STRICT_FLOOR = "strict-floor"
ROUNDINGS = (CEIL_REAL_LOG, STRICT_FLOOR)

# (name, TD, TC, QC) at n = 32 for existing 32-qubit divider designs.
BASELINES = {
    "goldschmidt": (17850, 117187, 30008),
    "newton_raphson": (13506, 93376, 23996),
}
BASELINE_N = 32
REFERENCE_BASELINE = "newton_raphson"


def omega(n: int) -> int:
    """Number of ones in binary n, computed as n minus the sum of n >> y."""
    if n < 0:
        raise ValueError("omega is defined for n >= 0")
    total = n
    y = n >> 1
    while y:
        total -= y
        y >>= 1
    return total


def compose(adder_costs: tuple[int, int, int], n: int, kind: str = NON_RESTORING):
    """Divider cost triple from an adder's (TD, TC, ancillas) at width n+1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    td_add, tc_add, anc = adder_costs
    if kind == NON_RESTORING:
        return (n * td_add + 3 * n + 1, n * tc_add + 3 * n + 1, 4 * n + 2 + anc)
    return (
        n * td_add + 3 * n * n + n,
        n * tc_add + 3 * n * n + n,
        4 * n + 1 + anc,
    )


@dataclass(frozen=True)
class CostModel:
    id: str
    needs_radix: bool = False


def _row_values(row_id: str, n: int, r: int | None, strict: bool):
    """Real-valued (TD, TC, QC) for the non-restoring divider of one row."""

    def L(v):
        lg = math.log2(v)
        return math.floor(lg) if strict else lg

    def W(v):
        return omega(math.ceil(v))

    if row_id == "vbe":
        k = 4 * n * n + 5 * n + 1
        return (k, k, 5 * n + 6)
    if row_id == "cuccaro":
        k = 2 * n * n + 4 * n + 1
        return (k, k, 4 * n + 6)
    if row_id == "takahashi_rca":
        k = 2 * n * n + 4 * n + 1
        return (k, k, 4 * n + 5)
    if row_id == "wang_rca" or row_id == "gayathri_rca":
        k = n * n + 4 * n + 1
        return (k, k, 5 * n + 6)
    if row_id == "gidney_rca":
        return (n * n + 4 * n + 1, 2 * n * n + 3 * n + 1, 5 * n + 4)
    if row_id == "draper_cla":
        td = (
            11 * n
            + n * L(n)
            + n * L(n + 1)
            + n * L(n / 3)
            + n * L((n + 1) / 3)
            + 1
        )
        tc = (
            10 * n * n
            - 3 * n * W(n)
            - 3 * n * W(n + 1)
            - 3 * n * L(n)
            - 3 * n * L(n + 1)
            + 6 * n
            + 1
        )
        qc = 6 * n - W(n + 1) - L(n + 1) + 6
        return (td, tc, qc)
    if row_id == "takahashi_low_ancilla":
        td = 30 * n * L(n + 1) + 3 * n + 1
        tc = 28 * n * n + 31 * n + 1
        qc = 4 * n + (3 * n + 3) / L(n + 1) + 4
        return (td, tc, qc)
    if row_id == "takahashi_combination":
        td = 18 * n * L(n + 1) + 3 * n + 1
        tc = 7 * n * n + 10 * n + 1
        qc = 4 * n + (3 * n + 3) / L(n + 1) + 4
        return (td, tc, qc)
    if row_id == "higher_radix":
        if r is None or not 2 < r <= n:
            raise ValueError("higher_radix needs a radix r with 2 < r <= n")
        td = (
            4 * n * L(n + 1)
            + 3 * r * n
            - 2 * n * L(r)
            - 2 * n * L(3 * r)
            + 2 * n * L(r - 2)
            + 5 * n
            + 1
        )
        tc = (
            8 * n * n
            - n * (n + 1) / r
            - (n * n) % r
            - 3 * n * W((n + 1) / r)
            - 3 * n * L(n + 1)
            + 3 * n * L(r)
            + 8 * n
            + 1
        )
        qc = 6 * n - L(n + 1) + (n + 1) / r - W((n + 1) / r) + L(r) + 5
        return (td, tc, qc)
    if row_id == "ling":
        td = 12 * n + 2 * n * L((n + 1) / 2) + 2 * n * L((n + 1) / 6) + 1
        tc = (
            13 * n * n
            - 6 * n * W((n + 1) / 2)
            - 6 * n * L((n + 1) / 2)
            + 2 * n
            + 1
        )
        qc = 14 * n - 6 * W((n + 1) / 2) - 6 * L((n + 1) / 2) + 4
        return (td, tc, qc)
    raise ValueError(f"unknown row id {row_id!r}")


ROW_IDS = (
    "vbe",
    "cuccaro",
    "draper_cla",
    "takahashi_low_ancilla",
    "takahashi_rca",
    "takahashi_combination",
    "wang_rca",
    "gidney_rca",
    "gayathri_rca",
    "higher_radix",
    "ling",
)

COST_MODELS = {rid: CostModel(rid, needs_radix=(rid == "higher_radix")) for rid in ROW_IDS}


def _ceil(v) -> int:
    # guard against float dust just below an integer
    return math.ceil(round(v, 9))


def evaluate_row(
    row_id: str,
    n: int,
    radix: int | None = None,
    kind: str = NON_RESTORING,
    rounding: str = CEIL_REAL_LOG,
) -> tuple[int, int, int]:
    """Integer (TD, TC, QC) of one row's divider at width n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if rounding not in ROUNDINGS:
        raise ValueError(f"rounding must be one of {ROUNDINGS}")
    td, tc, qc = _row_values(row_id, n, radix, strict=(rounding == STRICT_FLOOR))
    if kind == RESTORING:
        delta = 3 * n * n - 2 * n - 1
        td += delta
        tc += delta
        qc -= 1
    return (_ceil(td), _ceil(tc), _ceil(qc))


def improvement_percent(baseline: int, value: int) -> Decimal:
    """100*(baseline - value)/baseline to two decimals, half up."""
    frac = Decimal(100) * (Decimal(baseline) - Decimal(value)) / Decimal(baseline)
    return frac.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)


@dataclass
class TableRow:
    divider: str
    td: int
    tc: int
    qc: int
    td_impr: Decimal | None = None
    tc_impr: Decimal | None = None
    qc_impr: Decimal | None = None
    strict_floor_disagrees: bool = False

    def as_dict(self) -> dict:
        return {
            "divider": self.divider,
            "TD": self.td,
            "TC": self.tc,
            "QC": self.qc,
            "TD_impr": None if self.td_impr is None else str(self.td_impr),
            "TC_impr": None if self.tc_impr is None else str(self.tc_impr),
            "QC_impr": None if self.qc_impr is None else str(self.qc_impr),
            "strict_floor_disagrees": self.strict_floor_disagrees,
        }


# the proposed-divider lines of the comparison table
PROPOSED = (
    (NON_RESTORING, "takahashi_combination"),
    (NON_RESTORING, "ling"),
    (RESTORING, "takahashi_combination"),
    (RESTORING, "ling"),
)


def comparison_table(n: int, rounding: str = CEIL_REAL_LOG) -> list[TableRow]:
    """Baselines plus the four proposed divider lines; improvement columns
    are relative to the Newton-Raphson record and exist only at n = 32."""
    rows: list[TableRow] = []
    at_baseline_n = n == BASELINE_N
    ref = BASELINES[REFERENCE_BASELINE]
    if at_baseline_n:
        for name, (td, tc, qc) in BASELINES.items():
            rows.append(TableRow(name, td, tc, qc))
    for kind, rid in PROPOSED:
        td, tc, qc = evaluate_row(rid, n, kind=kind, rounding=rounding)
        alt = evaluate_row(
            rid,
            n,
            kind=kind,
            rounding=STRICT_FLOOR if rounding == CEIL_REAL_LOG else CEIL_REAL_LOG,
        )
        row = TableRow(
            divider=f"{kind}_{rid}",
            td=td,
            tc=tc,
            qc=qc,
            strict_floor_disagrees=(td, tc, qc) != alt,
        )
        if at_baseline_n:
            row.td_impr = improvement_percent(ref[0], td)
            row.tc_impr = improvement_percent(ref[1], tc)
            row.qc_impr = improvement_percent(ref[2], qc)
        rows.append(row)
    return rows


def rounding_audit(n: int, radix: int | None = None) -> dict[str, dict]:
    """Compare both log conventions for every row; flags disagreements."""
    out = {}
    for rid in ROW_IDS:
        r = radix if rid == "higher_radix" else None
        if rid == "higher_radix" and (r is None or not 2 < r <= n):
            continue
        default = evaluate_row(rid, n, radix=r)
        strict = evaluate_row(rid, n, radix=r, rounding=STRICT_FLOOR)
        out[rid] = {
            "ceil_real_log": default,
            "strict_floor": strict,
            "agree": default == strict,
        }
    return out


def table_to_csv(rows: list[TableRow]) -> str:
    lines = ["divider,TD,TC,QC,TD_impr,TC_impr,QC_impr"]
    for r in rows:
        lines.append(
            ",".join(
                [
                    r.divider,
                    str(r.td),
                    str(r.tc),
                    str(r.qc),
                    "" if r.td_impr is None else str(r.td_impr),
                    "" if r.tc_impr is None else str(r.tc_impr),
                    "" if r.qc_impr is None else str(r.qc_impr),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def table_to_dicts(rows: list[TableRow]) -> list[dict]:
    return [r.as_dict() for r in rows]
