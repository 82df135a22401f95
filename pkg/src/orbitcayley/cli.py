"""Command-line front end: spectra, SRG checks, census sweeps, identity reports, graph6 export.

Exit codes: 0 all requested verifications passed, 1 a mathematical
verification failed, 2 usage or configuration error.  Relative output
paths are resolved against ORBITCAYLEY_OUT_DIR when it is set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .census import (
    CENSUS_CSV_COLUMNS,
    CENSUS_DEFAULT_EXPLICIT_CAP,
    CENSUS_DEFAULT_MAX_N,
    census,
)
from .core import ConsistencyError, OrbitIndexSet
from .explicit import EXPLICIT_HARD_MAX_N
from .graph6 import export_graph6
from .identities import verify_all
from .spectrum import WHT_MAX_N, distinct, full_spectrum, wht_spectrum
from .srg import (
    FAMILIES,
    NONTRIVIAL_FAMILY_KEYS,
    VerdictStatus,
    srg_check_explicit,
    srg_check_paircount,
    srg_check_spectral,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

OUT_DIR_ENV = "ORBITCAYLEY_OUT_DIR"

FAMILY_CSV_COLUMNS = ["graph", "n_vertices", "r", "lambda", "mu", "verified"]
IDENTITY_CSV_COLUMNS = ["id", "k", "m", "lhs", "rhs", "pass"]


@dataclass(frozen=True)
class RunConfig:
    """Validated knobs shared by the subcommands."""

    n_start: int = 1
    n_end: int = 1
    max_m: int = 10
    explicit_cap: int = CENSUS_DEFAULT_EXPLICIT_CAP
    wht_cap: int = WHT_MAX_N
    out: Path | None = None
    fmt: str = "jsonl"

    def __post_init__(self) -> None:
        if self.explicit_cap > EXPLICIT_HARD_MAX_N:
            raise ValueError(f"explicit cap {self.explicit_cap} exceeds {EXPLICIT_HARD_MAX_N}")
        if self.wht_cap > WHT_MAX_N:
            raise ValueError(f"transform cap {self.wht_cap} exceeds {WHT_MAX_N}")
        if not 1 <= self.n_start <= self.n_end:
            raise ValueError(f"bad n range {self.n_start}..{self.n_end}")
        if self.fmt not in ("jsonl", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")


def _resolve_out(path: str | None) -> Path | None:
    if path is None:
        return None
    p = Path(path)
    base = os.environ.get(OUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _write_text(out: Path | None, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)


def _write_bytes(out: Path | None, blob: bytes) -> None:
    if out is None:
        sys.stdout.buffer.write(blob)
        sys.stdout.buffer.flush()
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_bytes(blob)


def _parse_n_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    value = int(text)
    return value, value


def _csv_text(columns: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def emit_table1(m_max: int, check_cap: int = 20) -> list[dict]:
    """One row per (m, nontrivial family): closed-form parameters plus verification.

    ``verified`` is "yes"/"no" from the pair-counting checker when the
    dimension is within ``check_cap``, else "skipped".
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    rows = []
    for m in range(1, m_max + 1):
        for key in NONTRIVIAL_FAMILY_KEYS:
            spec = FAMILIES[key]
            index_set, predicted = spec.index_set(m), spec.predicted(m)
            if index_set.n <= check_cap:
                verdict = srg_check_paircount(index_set)
                ok = (
                    verdict.status is VerdictStatus.NONTRIVIAL_SRG
                    and verdict.params == predicted
                )
                verified = "yes" if ok else "no"
            else:
                verified = "skipped"
            rows.append(
                {
                    "graph": spec.label(m),
                    "n_vertices": predicted.vertices,
                    "r": predicted.degree,
                    "lambda": predicted.lam,
                    "mu": predicted.mu,
                    "verified": verified,
                }
            )
    return rows


def _cmd_spectrum(args: argparse.Namespace) -> int:
    config = RunConfig(wht_cap=args.wht_cap, out=_resolve_out(args.out))
    s = OrbitIndexSet.parse(args.set)
    spec = full_spectrum(s)
    if args.check_oracle:
        if s.n > config.wht_cap:
            raise ValueError(f"--check-oracle needs n <= {config.wht_cap}")
        if wht_spectrum(s) != spec:
            raise ConsistencyError(f"transform oracle disagrees on {s.format()}")
    if args.distinct:
        _write_text(config.out, distinct(spec).to_csv())
    else:
        _write_text(config.out, json.dumps(spec.to_json_dict()) + "\n")
    return EXIT_OK


def _cmd_srg_check(args: argparse.Namespace) -> int:
    config = RunConfig(explicit_cap=args.explicit_cap, out=_resolve_out(args.out))
    s = OrbitIndexSet.parse(args.set)
    verdict = srg_check_paircount(s)
    if srg_check_spectral(s) != verdict:
        raise ConsistencyError(f"pair-count and spectral checkers disagree on {s.format()}")
    if args.explicit:
        if srg_check_explicit(s, max_n=config.explicit_cap) != verdict:
            raise ConsistencyError(f"brute-force checker disagrees on {s.format()}")
    payload = {"set": s.format()}
    payload.update(verdict.to_json_dict())
    _write_text(config.out, json.dumps(payload) + "\n")
    return EXIT_OK


def _cmd_census(args: argparse.Namespace) -> int:
    n_start, n_end = _parse_n_range(args.n)
    config = RunConfig(
        n_start=n_start,
        n_end=n_end,
        explicit_cap=args.explicit_cap,
        out=_resolve_out(args.out),
        fmt=args.format,
    )
    records = []
    for n in range(config.n_start, config.n_end + 1):
        records.extend(census(n, explicit_cap=config.explicit_cap, max_n=args.max_n))
    if config.fmt == "jsonl":
        text = "".join(json.dumps(rec.to_json_dict()) + "\n" for rec in records)
    else:
        text = _csv_text(CENSUS_CSV_COLUMNS, [rec.to_csv_row() for rec in records])
    _write_text(config.out, text)
    return EXIT_OK


def _cmd_families(args: argparse.Namespace) -> int:
    rows = emit_table1(args.m_max, check_cap=args.check_cap)
    table = [[str(row[col]) for col in FAMILY_CSV_COLUMNS] for row in rows]
    _write_text(_resolve_out(args.out), _csv_text(FAMILY_CSV_COLUMNS, table))
    if any(row["verified"] == "no" for row in rows):
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def _cmd_identities(args: argparse.Namespace) -> int:
    report = verify_all(args.max_m)
    rows = [
        [check.identity_id, str(check.k), str(check.m), str(check.lhs), str(check.rhs),
         str(check.passed).lower()]
        for check in report
    ]
    _write_text(_resolve_out(args.out), _csv_text(IDENTITY_CSV_COLUMNS, rows))
    if not all(check.passed for check in report):
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def _cmd_export(args: argparse.Namespace) -> int:
    config = RunConfig(explicit_cap=args.max_n, out=_resolve_out(args.out))
    s = OrbitIndexSet.parse(args.set)
    _write_bytes(config.out, export_graph6(s, max_n=config.explicit_cap) + b"\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitcayley",
        description="Exact spectra and strong-regularity checks for orbit Cayley graphs over Z2^n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="closed-form spectrum of one index set")
    p.add_argument("--set", required=True, help="index set, e.g. 'n=4;I=1,4'")
    p.add_argument("--distinct", action="store_true", help="emit distinct values as CSV")
    p.add_argument("--check-oracle", action="store_true",
                   help="cross-check against the transform oracle")
    p.add_argument("--wht-cap", type=int, default=WHT_MAX_N)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("srg-check", help="strong-regularity verdict for one index set")
    p.add_argument("--set", required=True)
    p.add_argument("--explicit", action="store_true", help="also run the dense brute force")
    p.add_argument("--explicit-cap", type=int, default=12)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_srg_check)

    p = sub.add_parser("census", help="sweep all index sets for a range of dimensions")
    p.add_argument("--n", required=True, help="dimension or range, e.g. 6 or 4..10")
    p.add_argument("--explicit-cap", type=int, default=CENSUS_DEFAULT_EXPLICIT_CAP)
    p.add_argument("--max-n", type=int, default=CENSUS_DEFAULT_MAX_N)
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("families", help="predicted family parameters with verification")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--check-cap", type=int, default=20,
                   help="verify rows whose dimension is at most this")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("identities", help="verify every binomial identity up to a bound")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("export", help="graph6 encoding of one index set")
    p.add_argument("--set", required=True)
    p.add_argument("--max-n", type=int, default=EXPLICIT_HARD_MAX_N)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
