"""Spec files, report serialization and the append-only result cache.

A spec file is a human-diffable key/value document:

    format: negastab-spec-v1
    p: 3
    n: 10
    k: 2
    m: 1
    alpha: 2
    g: X^2+1
    h: X^4+(2e+1)*X^2+1
    a: X^8+2*X^2+2

Loading re-runs the full construction so a tampered file is rejected, and
the stored companion polynomial must agree with the recomputed one.

The cache is a JSONL file of {"key", "p", "n", "reports", "skips"} records
keyed by a hash of the search configuration; appends are single atomic
writes, so concurrent searches may share one cache file.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .fields import ExtField
from .polyring import format_poly, parse_poly
from .construct import CodeReport, CodeSpec, classify, construct_code

SPEC_FORMAT = "negastab-spec-v1"
CACHE_ENV_VAR = "NEGASTAB_CACHE_DIR"
CACHE_VERSION = 1


def spec_to_text(spec: CodeSpec) -> str:
    lines = [
        f"format: {SPEC_FORMAT}",
        f"p: {spec.p}",
        f"n: {spec.n}",
        f"k: {spec.k}",
        f"m: {spec.m}",
        f"alpha: {spec.alpha}",
        f"g: {format_poly(spec.g)}",
        f"h: {format_poly(spec.h)}",
        f"a: {format_poly(spec.a)}",
    ]
    return "\n".join(lines) + "\n"


def spec_from_text(text: str) -> CodeSpec:
    """Parse and fully re-validate a spec document."""
    fields = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'key: value'")
        key, value = line.split(":", 1)
        fields[key.strip()] = value.strip()
    if fields.get("format") != SPEC_FORMAT:
        raise ValueError(
            f"unsupported spec format {fields.get('format')!r}; "
            f"expected {SPEC_FORMAT}")
    try:
        p = int(fields["p"])
        n = int(fields["n"])
        k = int(fields["k"])
        m = int(fields["m"])
        alpha = int(fields["alpha"])
        g_text = fields["g"]
        h_text = fields["h"]
    except KeyError as exc:
        raise ValueError(f"missing spec field {exc}") from None
    g = parse_poly(g_text, ExtField(p))
    h = parse_poly(h_text, ExtField(p, k))
    spec = construct_code(p, n, k, m, g, h, alpha)
    if "a" in fields:
        stored = parse_poly(fields["a"], ExtField(p))
        if stored != spec.a:
            raise ValueError(
                "stored companion polynomial disagrees with the "
                "recomputed one; file is stale or tampered")
    return spec


def save_spec(spec: CodeSpec, path) -> None:
    Path(path).write_text(spec_to_text(spec))


def load_spec(path) -> CodeSpec:
    return spec_from_text(Path(path).read_text())


# ---------------------------------------------------------------------------
# report serialization
# ---------------------------------------------------------------------------

def report_to_dict(report: CodeReport) -> dict:
    spec = report.spec
    return {
        "p": report.p,
        "n": report.n,
        "k_dim": report.k_dim,
        "d_bch": report.d_bch,
        "linear": report.linear,
        "css_excluded": report.css_excluded,
        "params": report.params_str(),
        "k": spec.k,
        "m": spec.m,
        "alpha": spec.alpha,
        "g": format_poly(spec.g),
        "h": format_poly(spec.h),
        "a": format_poly(spec.a),
        "h_exponents": list(spec.h_exponents),
        "verification": {name: ok for name, ok in report.verification},
    }


def report_from_dict(d: dict) -> CodeReport:
    """Rebuild a full report (spec re-validated) from its serialized form."""
    g = parse_poly(d["g"], ExtField(d["p"]))
    h = parse_poly(d["h"], ExtField(d["p"], d["k"]))
    spec = construct_code(d["p"], d["n"], d["k"], d["m"], g, h, d["alpha"])
    report = classify(spec)
    if (report.k_dim, report.d_bch, report.linear) != (
            d["k_dim"], d["d_bch"], d["linear"]):
        raise ValueError("cached report disagrees with reconstruction")
    return report


# ---------------------------------------------------------------------------
# append-only result cache
# ---------------------------------------------------------------------------

def cache_path(override=None) -> Path:
    if override:
        base = Path(override)
    else:
        base = Path(os.environ.get(CACHE_ENV_VAR, ".negastab-cache"))
    return base / "results.jsonl"


def config_key(p, t_cap, k_values, alpha_policy) -> str:
    blob = json.dumps({
        "version": CACHE_VERSION,
        "p": p,
        "t_cap": t_cap,
        "k_values": sorted(k_values) if k_values else None,
        "alpha_policy": alpha_policy,
    }, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def cache_load(path: Path, key: str) -> dict:
    """Map n -> record for every cached record under this config key."""
    out = {}
    if not path.exists():
        return out
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue  # torn write at the tail; ignore
            if rec.get("key") == key:
                out[rec["n"]] = rec
    return out


def cache_append(path: Path, record: dict) -> None:
    """Atomic single-write append; safe under concurrent appenders."""
    path.parent.mkdir(parents=True, exist_ok=True)
    data = (json.dumps(record, sort_keys=True) + "\n").encode()
    fd = os.open(path, os.O_WRONLY | os.O_CREAT | os.O_APPEND, 0o644)
    try:
        os.write(fd, data)
    finally:
        os.close(fd)
