"""
Super Catalan Verifier - Reporting Service
Renders a finished report as JSON, CSV or a text summary and writes it out.
"""
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Union

from supercat.exceptions import ReportWriteError
from supercat.models.records import Report, VerificationRecord, signed_form
from supercat.models.scan import OutputFormat

logger = logging.getLogger(__name__)

CSV_HEADER = ["suite", "equation", "prime_or_index", "lhs", "rhs", "pass", "witness"]
# Reports up to this size list every record in text form.
TEXT_RECORD_LIMIT = 200


def render_json(report: Report) -> str:
    return json.dumps(report.to_payload(), sort_keys=True, indent=2) + "\n"


def render_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in report.records:
        writer.writerow([
            record.suite,
            record.equation,
            record.index,
            record.lhs,
            record.rhs,
            "true" if record.passed else "false",
            json.dumps(record.witness, sort_keys=True, separators=(",", ":")) if record.witness else "",
        ])
    return buffer.getvalue()


def _with_signed(value: str, signed: Optional[int]) -> str:
    return value if signed is None else f"{value} ({signed})"


def display_value(value: str, modulus: Optional[int]) -> str:
    """Canonical residue plus its signed form when that is small, e.g. '4 (-1)'."""
    return _with_signed(value, signed_form(value, modulus))


def _describe(record: VerificationRecord) -> str:
    coords = ", ".join(f"{k}={v}" for k, v in record.params.items())
    lhs = _with_signed(record.lhs, record.lhs_signed)
    rhs = _with_signed(record.rhs, record.rhs_signed)
    relation = f"(mod {record.modulus})" if record.modulus else "(exact)"
    mark = "ok" if record.passed else ("FAIL" if record.asserted else "info")
    return f"  [{mark}] {record.suite}/{record.equation} @ {record.index} [{coords}]: {lhs} vs {rhs} {relation}"


def render_text(report: Report) -> str:
    lines = [
        f"Super Catalan verification: primes {report.config.prime_min}..{report.config.prime_max}, "
        f"identity window n <= {report.config.identity_n_max}",
        "",
        f"{'suite':<14}{'records':>10}{'passed':>10}{'failed':>10}{'info':>8}",
        "-" * 52,
    ]
    for name, summary in report.summary.items():
        lines.append(
            f"{name:<14}{summary.total:>10}{summary.passed:>10}{summary.failed:>10}{summary.informational:>8}"
        )
    totals = report.totals
    lines.append("-" * 52)
    lines.append(f"{'total':<14}{totals.total:>10}{totals.passed:>10}{totals.failed:>10}{totals.informational:>8}")
    lines.append(f"wall time: {report.wall_time_seconds:.2f}s")

    if len(report.records) <= TEXT_RECORD_LIMIT:
        lines += ["", "RECORDS:"]
        lines += [_describe(record) for record in report.records]

    failures = report.failures
    if failures:
        lines += ["", f"FAILURES ({len(failures)}):"]
        lines += [_describe(record) for record in failures]
    else:
        lines += ["", "All asserted checks passed."]
    return "\n".join(lines) + "\n"


RENDERERS = {
    OutputFormat.JSON: render_json,
    OutputFormat.CSV: render_csv,
    OutputFormat.TEXT: render_text,
}


def emit(
    report: Report,
    format: Union[OutputFormat, str] = OutputFormat.JSON,
    path: Optional[Union[str, Path]] = None,
) -> int:
    """
    Write the rendered report to ``path`` (stdout when None).

    Returns:
        Number of bytes written.
    """
    text = RENDERERS[OutputFormat(format)](report)
    data = text.encode("utf-8")
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return len(data)
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise ReportWriteError(f"could not write report to {path}: {exc}") from exc
    logger.info(f"📄 Report written to {path} ({len(data)} bytes)")
    return len(data)
