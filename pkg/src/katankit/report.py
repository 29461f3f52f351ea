"""Performance records and comparison-table rendering.

A PerfRecord carries synthesis pass-through fields (utilization, ALUTs,
registers, memory bits) plus the two primitives every derived column comes
from: total clock cycles and Fmax. Derived columns are always recomputed
from the primitives; when a record also supplies printed values, each one
is checked against the recomputation at its own printed precision.
Disagreements on a record are validation errors unless the record is
flagged override, and disagreements inside comparison (speedup) tables are
annotated in the output, never silently replaced.

The throughput numerator is the block size by default ("native"); the
"compat32" mode uses 32 bits for every variant, which is what the bundled
sequential table needs to regenerate its printed values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Mapping, Sequence

from .errors import ReportValidationError
from .metrics import (
    clock_period_ns,
    exec_time_us,
    format_sig,
    throughput_mbps,
    ulp_distance,
)
from .params import parse_variant

NUMERATOR_NATIVE = "native"
NUMERATOR_COMPAT32 = "compat32"

MODE_SEQUENTIAL = "sequential"
MODE_PIPELINED = "pipelined"

_HEADERS = {
    "variant": "Variant",
    "logic_utilization_pct": "Logic util (%)",
    "alut_count": "ALUTs",
    "register_count": "Registers",
    "memory_bits": "Memory bits",
    "total_clock_cycles": "Cycles",
    "fmax_mhz": "Fmax (MHz)",
    "clock_period_ns": "Clock period (ns)",
    "exec_time_us": "Exec time (us)",
    "throughput_mbps": "Throughput (Mbps)",
    "sequential_mbps": "Sequential (Mbps)",
    "pipelined_mbps": "Pipelined (Mbps)",
    "reference_mbps": "Reference (Mbps)",
    "speedup": "Speed up",
    "speedup1": "Speed up 1",
    "speedup2": "Speed up 2",
}

_RECORD_COLUMNS = [
    "variant",
    "logic_utilization_pct",
    "alut_count",
    "register_count",
    "total_clock_cycles",
    "fmax_mhz",
    "clock_period_ns",
    "exec_time_us",
    "throughput_mbps",
]
_RECORD_COLUMNS_MEM = _RECORD_COLUMNS[:4] + ["memory_bits"] + _RECORD_COLUMNS[4:]
_RATIO_COLUMNS = ["variant", "sequential_mbps", "pipelined_mbps", "speedup"]
_REFERENCE_COLUMNS = [
    "variant",
    "sequential_mbps",
    "pipelined_mbps",
    "reference_mbps",
    "speedup1",
    "speedup2",
]


def numerator_bits_for(variant: str, numerator_mode: str) -> int:
    if numerator_mode == NUMERATOR_COMPAT32:
        return 32
    if numerator_mode == NUMERATOR_NATIVE:
        return parse_variant(variant).block_bits
    raise ReportValidationError(f"unknown numerator mode {numerator_mode!r}")


@dataclass(frozen=True)
class PerfRecord:
    variant: str
    mode: str
    total_clock_cycles: int
    fmax_mhz: float
    logic_utilization_pct: str | None = None
    alut_count: str | None = None
    register_count: str | None = None
    memory_bits: str | None = None
    clock_period_ns: str | None = None
    exec_time_us: str | None = None
    throughput_mbps: str | None = None
    override: bool = False

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any]) -> "PerfRecord":
        def text(key: str) -> str | None:
            value = raw.get(key)
            if value is None:
                return None
            return str(value)

        try:
            variant = parse_variant(str(raw["variant"])).name
            mode = str(raw.get("mode", MODE_SEQUENTIAL))
            if mode not in (MODE_SEQUENTIAL, MODE_PIPELINED):
                raise ReportValidationError(
                    f"record mode must be sequential or pipelined, got {mode!r}"
                )
            cycles = int(raw["total_clock_cycles"])
            fmax = float(raw["fmax_mhz"])
        except ReportValidationError:
            raise
        except KeyError as exc:
            raise ReportValidationError(f"record missing required field {exc.args[0]!r}") from None
        except Exception as exc:
            raise ReportValidationError(f"malformed record: {exc}") from None
        if cycles < 1:
            raise ReportValidationError("record violates total_clock_cycles >= 1")
        if fmax <= 0:
            raise ReportValidationError("record violates fmax > 0")
        return cls(
            variant=variant,
            mode=mode,
            total_clock_cycles=cycles,
            fmax_mhz=fmax,
            logic_utilization_pct=text("logic_utilization_pct"),
            alut_count=text("alut_count"),
            register_count=text("register_count"),
            memory_bits=text("memory_bits"),
            clock_period_ns=text("clock_period_ns"),
            exec_time_us=text("exec_time_us"),
            throughput_mbps=text("throughput_mbps"),
            override=bool(raw.get("override", False)),
        )


@dataclass(frozen=True)
class Comparison:
    """A reference implementation's throughput per variant, for the
    speedup1/speedup2 table shape."""

    label: str
    title: str
    reference_mbps: Mapping[str, str | None]
    speedup1: Mapping[str, str | None] = field(default_factory=dict)
    speedup2: Mapping[str, str | None] = field(default_factory=dict)


@dataclass(frozen=True)
class CellCheck:
    table: str
    variant: str
    column: str
    supplied: str
    recomputed: float
    ulps: int

    @property
    def consistent(self) -> bool:
        return self.ulps <= 1

    def describe(self) -> str:
        return (
            f"{self.variant} {_HEADERS.get(self.column, self.column)}: "
            f"supplied {self.supplied}, recomputed {format_sig(self.recomputed)} "
            f"({self.ulps} ulp off in the last printed digit)"
        )


@dataclass
class TableView:
    key: str
    title: str
    columns: list[str]
    rows: list[dict[str, str | None]]
    notes: list[str] = field(default_factory=list)
    checks: list[CellCheck] = field(default_factory=list)

    @property
    def annotations(self) -> list[str]:
        return [c.describe() for c in self.checks if not c.consistent]


@dataclass
class Report:
    tables: list[TableView]

    def table(self, key: str) -> TableView:
        for t in self.tables:
            if t.key == key:
                return t
        known = ", ".join(t.key for t in self.tables)
        raise ReportValidationError(f"no table {key!r} in report; have {known}")

    def render_text(self) -> str:
        out = []
        for t in self.tables:
            bad = {(c.variant, c.column) for c in t.checks if not c.consistent}
            out.append(f"Table {t.key.upper()}. {t.title}")
            for note in t.notes:
                out.append(f"  [{note}]")
            headers = [_HEADERS.get(c, c) for c in t.columns]
            body = []
            for row in t.rows:
                cells = []
                for c in t.columns:
                    value = row.get(c)
                    cell = "-" if value is None else str(value)
                    if (row.get("variant"), c) in bad:
                        cell += "*"
                    cells.append(cell)
                body.append(cells)
            widths = [
                max(len(headers[i]), *(len(r[i]) for r in body)) if body else len(headers[i])
                for i in range(len(headers))
            ]
            out.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip())
            for cells in body:
                out.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
            for ann in t.annotations:
                out.append(f"  * {ann}")
            out.append("")
        return "\n".join(out).rstrip() + "\n"

    def render_csv(self) -> str:
        out = []
        for t in self.tables:
            out.append(f"# Table {t.key.upper()}. {t.title}")
            for note in t.notes:
                out.append(f"# {note}")
            out.append(",".join(t.columns))
            for row in t.rows:
                out.append(",".join("" if row.get(c) is None else str(row.get(c)) for c in t.columns))
            for ann in t.annotations:
                out.append(f"# note: {ann}")
            out.append("")
        return "\n".join(out).rstrip() + "\n"

    def to_objects(self) -> dict[str, Any]:
        return {
            "tables": [
                {
                    "key": t.key,
                    "title": t.title,
                    "columns": t.columns,
                    "notes": t.notes,
                    "rows": t.rows,
                    "checks": [
                        {
                            "variant": c.variant,
                            "column": c.column,
                            "supplied": c.supplied,
                            "recomputed": c.recomputed,
                            "ulps": c.ulps,
                            "consistent": c.consistent,
                        }
                        for c in t.checks
                    ],
                    "annotations": t.annotations,
                }
                for t in self.tables
            ]
        }


def _check_cell(
    table: str,
    variant: str,
    column: str,
    supplied: str | None,
    recomputed: float,
    checks: list[CellCheck],
) -> None:
    if supplied is None:
        return
    checks.append(
        CellCheck(
            table=table,
            variant=variant,
            column=column,
            supplied=supplied,
            recomputed=recomputed,
            ulps=ulp_distance(supplied, recomputed),
        )
    )


_IDENTITY_NAMES = {
    "clock_period_ns": "clock_period = 1000 / fmax",
    "exec_time_us": "exec_time = total_clock_cycles / fmax",
    "throughput_mbps": "throughput = numerator_bits / exec_time",
}


def validate_perf_record(
    record: PerfRecord, numerator_mode: str, table_key: str = "i"
) -> tuple[dict[str, float], list[CellCheck]]:
    """Recompute the derived columns and check any supplied printed values.

    Returns the full-precision derived values and the per-cell checks.
    Raises ReportValidationError naming the violated identity when a
    supplied value disagrees and the record is not flagged override.
    """
    bits = numerator_bits_for(record.variant, numerator_mode)
    derived = {
        "clock_period_ns": clock_period_ns(record.fmax_mhz),
        "exec_time_us": exec_time_us(record.total_clock_cycles, record.fmax_mhz),
    }
    derived["throughput_mbps"] = throughput_mbps(bits, derived["exec_time_us"])
    checks: list[CellCheck] = []
    for column in ("clock_period_ns", "exec_time_us", "throughput_mbps"):
        _check_cell(table_key, record.variant, column, getattr(record, column), derived[column], checks)
    for check in checks:
        if not check.consistent and not record.override:
            raise ReportValidationError(
                f"record {record.variant} ({record.mode}) violates "
                f"{_IDENTITY_NAMES[check.column]}: {check.describe()}"
            )
    return derived, checks


def _record_table(
    key: str,
    title: str,
    records: Sequence[PerfRecord],
    numerator_mode: str,
    with_memory: bool,
) -> TableView:
    columns = _RECORD_COLUMNS_MEM if with_memory else _RECORD_COLUMNS
    note = (
        "throughput numerator: 32-bit compatibility"
        if numerator_mode == NUMERATOR_COMPAT32
        else "throughput numerator: block size"
    )
    table = TableView(key=key, title=title, columns=list(columns), rows=[], notes=[note])
    for record in records:
        derived, checks = validate_perf_record(record, numerator_mode, table_key=key)
        # checks key rows by the display variant
        table.checks.extend(
            CellCheck(
                table=c.table,
                variant=record.variant.upper(),
                column=c.column,
                supplied=c.supplied,
                recomputed=c.recomputed,
                ulps=c.ulps,
            )
            for c in checks
        )
        row: dict[str, str | None] = {
            "variant": record.variant.upper(),
            "logic_utilization_pct": record.logic_utilization_pct,
            "alut_count": record.alut_count,
            "register_count": record.register_count,
            "total_clock_cycles": str(record.total_clock_cycles),
            "fmax_mhz": f"{record.fmax_mhz:g}",
        }
        if with_memory:
            row["memory_bits"] = record.memory_bits
        for column in ("clock_period_ns", "exec_time_us", "throughput_mbps"):
            supplied = getattr(record, column)
            row[column] = supplied if supplied is not None else format_sig(derived[column])
        table.rows.append(row)
    return table


def _ratio_table(
    key: str,
    title: str,
    rows: Sequence[Mapping[str, str | None]],
) -> TableView:
    """Table III shape: speedup = pipelined / sequential."""
    table = TableView(key=key, title=title, columns=list(_RATIO_COLUMNS), rows=[])
    for raw in rows:
        variant = str(raw["variant"]).upper()
        row = {
            "variant": variant,
            "sequential_mbps": raw.get("sequential_mbps"),
            "pipelined_mbps": raw.get("pipelined_mbps"),
            "speedup": raw.get("speedup"),
        }
        seq = raw.get("sequential_mbps")
        pip = raw.get("pipelined_mbps")
        if seq is not None and pip is not None:
            recomputed = float(pip) / float(seq)
            if row["speedup"] is None:
                row["speedup"] = format_sig(recomputed)
            else:
                _check_cell(key, variant, "speedup", row["speedup"], recomputed, table.checks)
        table.rows.append(row)
    return table


def _reference_table(
    key: str,
    title: str,
    rows: Sequence[Mapping[str, str | None]],
) -> TableView:
    """Table IV/V/VI shape: speedup1 = sequential / reference,
    speedup2 = pipelined / reference."""
    table = TableView(key=key, title=title, columns=list(_REFERENCE_COLUMNS), rows=[])
    for raw in rows:
        variant = str(raw["variant"]).upper()
        row = {c: raw.get(c) for c in _REFERENCE_COLUMNS}
        row["variant"] = variant
        ref = raw.get("reference_mbps")
        if ref is not None:
            for column, own in (("speedup1", "sequential_mbps"), ("speedup2", "pipelined_mbps")):
                value = raw.get(own)
                if value is None:
                    continue
                recomputed = float(value) / float(ref)
                if row[column] is None:
                    row[column] = format_sig(recomputed)
                else:
                    _check_cell(key, variant, column, row[column], recomputed, table.checks)
        table.rows.append(row)
    return table


def build_report(
    records: Sequence[PerfRecord] = (),
    comparisons: Sequence[Comparison] = (),
    numerator_mode: str = NUMERATOR_NATIVE,
) -> Report:
    """Assemble the six table shapes from user records.

    Sequential records populate the Table I shape, pipelined records the
    Table II shape, variants present in both get the speedup table, and
    each comparison yields one reference table. Empty inputs produce
    header-only tables.
    """
    sequential = [r for r in records if r.mode == MODE_SEQUENTIAL]
    pipelined = [r for r in records if r.mode == MODE_PIPELINED]
    tables = [
        _record_table("i", "Sequential implementations", sequential, numerator_mode, False),
        _record_table("ii", "Parallel-pipelined implementations", pipelined, numerator_mode, True),
    ]

    seq_tp: dict[str, str] = {}
    pip_tp: dict[str, str] = {}
    for record, sink in [(r, seq_tp) for r in sequential] + [(r, pip_tp) for r in pipelined]:
        derived, _ = validate_perf_record(record, numerator_mode)
        supplied = record.throughput_mbps
        sink[record.variant] = supplied if supplied is not None else format_sig(derived["throughput_mbps"])

    shared = [r.variant for r in sequential if r.variant in pip_tp]
    tables.append(
        _ratio_table(
            "iii",
            "Speed up of the parallel-pipelined over the sequential implementation",
            [
                {"variant": v, "sequential_mbps": seq_tp[v], "pipelined_mbps": pip_tp[v], "speedup": None}
                for v in shared
            ],
        )
    )
    for index, comparison in enumerate(comparisons):
        key = {0: "iv", 1: "v", 2: "vi"}.get(index, comparison.label)
        variants = [v for v in seq_tp if v in comparison.reference_mbps or v in pip_tp]
        tables.append(
            _reference_table(
                key,
                comparison.title,
                [
                    {
                        "variant": v,
                        "sequential_mbps": seq_tp.get(v),
                        "pipelined_mbps": pip_tp.get(v),
                        "reference_mbps": comparison.reference_mbps.get(v),
                        "speedup1": comparison.speedup1.get(v),
                        "speedup2": comparison.speedup2.get(v),
                    }
                    for v in variants
                ],
            )
        )
    return Report(tables=tables)


def load_bundled() -> dict[str, Any]:
    path = resources.files("katankit.data").joinpath("tables_i_vi.json")
    return json.loads(path.read_text())


def bundled_report() -> Report:
    """Render the bundled transcribed tables, revalidating every derived
    column. Comparison-table inconsistencies become annotations."""
    data = load_bundled()
    tables_raw = data["tables"]
    tables: list[TableView] = []
    for key in ("i", "ii"):
        entry = tables_raw[key]
        records = [
            PerfRecord.from_mapping({**row, "mode": MODE_SEQUENTIAL if key == "i" else MODE_PIPELINED})
            for row in entry["rows"]
        ]
        tables.append(
            _record_table(key, entry["title"], records, entry["numerator_mode"], with_memory=key == "ii")
        )
    tables.append(_ratio_table("iii", tables_raw["iii"]["title"], tables_raw["iii"]["rows"]))
    for key in ("iv", "v", "vi"):
        entry = tables_raw[key]
        tables.append(_reference_table(key, entry["title"], entry["rows"]))
    report = Report(tables=tables)
    for t in report.tables:
        t.notes.insert(0, f"{data['label']} report inputs")
    return report


def parse_records_payload(payload: Any) -> tuple[list[PerfRecord], list[Comparison], str | None]:
    """Decode a records file: either a bare list of records or an object
    with records, comparisons, and an optional numerator_mode."""
    if isinstance(payload, list):
        return [PerfRecord.from_mapping(r) for r in payload], [], None
    if not isinstance(payload, dict):
        raise ReportValidationError("records file must be a JSON list or object")
    records = [PerfRecord.from_mapping(r) for r in payload.get("records", [])]
    comparisons = []
    for raw in payload.get("comparisons", []):
        try:
            label = str(raw["label"])
        except KeyError:
            raise ReportValidationError("comparison missing required field 'label'") from None
        comparisons.append(
            Comparison(
                label=label,
                title=str(raw.get("title", f"Speed up over {label}")),
                reference_mbps={
                    parse_variant(k).name: (None if v is None else str(v))
                    for k, v in raw.get("reference_mbps", {}).items()
                },
                speedup1={
                    parse_variant(k).name: (None if v is None else str(v))
                    for k, v in raw.get("speedup1", {}).items()
                },
                speedup2={
                    parse_variant(k).name: (None if v is None else str(v))
                    for k, v in raw.get("speedup2", {}).items()
                },
            )
        )
    mode = payload.get("numerator_mode")
    return records, comparisons, (str(mode) if mode is not None else None)
