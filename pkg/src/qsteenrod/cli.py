"""Command-line exploration: dimension tables, bad-q scans, conjecture checks.

Reports are deterministic for a fixed command and seed; every report embeds
the library version and the full command so the tables can be reproduced.
Scalars serialize as pairs of integer coefficient lists (numerator and
denominator, ascending powers of q), which is exact and human-auditable.
Expensive graded bases can be cached on disk; cache files carry a checksum
and corrupt files fall back to recomputation.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import random
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .errors import PoleError, QSteenrodError
from .polynomials import Polynomial, monomials_of_degree
from .scalars import QParam, RationalFunction
from .spaces import (
    GradedSubspace,
    HILBERT_KINDS,
    StaircaseSet,
    harm_component,
    hilbert_of,
    hit_component,
    staircase_report,
    truncated_harm_component,
    truncated_hit_component,
    weighted_complement,
)
from .representations import graded_character, is_regular_representation
from .specialize import bad_q_candidates, conjectured_root_form, specialized_dimension
from .steenrod import operator_span_rank, partitions_of
from .strings import (
    build_string,
    divided_power,
    is_harmonic_string,
    string_length_survey,
)
from .schubert import (
    all_perms,
    commutant_search,
    d_sigma,
    operator_in_span,
    schubert_polynomial,
)
from .linalg import echelonize

COMMANDS = (
    "hilbert",
    "harm",
    "hit",
    "truncated",
    "badq",
    "strings",
    "character",
    "schubert",
    "commutant",
    "relations",
    "verify",
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_POLE = 3


@dataclass(frozen=True)
class CommandSpec:
    """Echoable description of one CLI invocation."""

    command: str
    n: int = 2
    degree: int = 4
    q: QParam = QParam.formal()
    output_format: str = "pretty"
    cache_dir: str | None = None
    seed: int = 0
    include_basis: bool = False
    kind: str = "classical-harm"
    extended_generators: bool = False

    def echo(self) -> dict:
        return {
            "command": self.command,
            "n": self.n,
            "degree": self.degree,
            "q": str(self.q),
            "output_format": self.output_format,
            "cache_dir": self.cache_dir,
            "seed": self.seed,
            "include_basis": self.include_basis,
            "kind": self.kind,
            "extended_generators": self.extended_generators,
        }


@dataclass
class Report:
    spec: dict
    tables: list[dict]
    findings: list[dict]
    version: str = __version__
    exact_arithmetic: bool = True

    def to_json(self) -> str:
        payload = {
            "spec": self.spec,
            "tables": self.tables,
            "findings": self.findings,
            "version": self.version,
            "exact_arithmetic": self.exact_arithmetic,
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    def to_csv(self) -> str:
        columns: list[str] = []
        for row in self.tables:
            for key in row:
                if key not in columns and not key.startswith("_"):
                    columns.append(key)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in self.tables:
            writer.writerow([_csv_cell(row.get(c, "")) for c in columns])
        return buf.getvalue()

    def to_pretty(self) -> str:
        lines = [f"# {self.spec['command']} (qsteenrod {self.version})"]
        lines.append("spec: " + json.dumps(self.spec, sort_keys=True))
        if self.tables:
            columns = []
            for row in self.tables:
                for key in row:
                    if key not in columns and not key.startswith("_"):
                        columns.append(key)
            widths = {
                c: max(len(c), *(len(_csv_cell(r.get(c, ""))) for r in self.tables))
                for c in columns
            }
            lines.append("  ".join(c.ljust(widths[c]) for c in columns))
            for row in self.tables:
                lines.append(
                    "  ".join(
                        _csv_cell(row.get(c, "")).ljust(widths[c]) for c in columns
                    )
                )
        for row in self.tables:
            for key in row:
                if key.startswith("_"):
                    lines.append(f"{key[1:]} (degree {row.get('degree')}):")
                    for item in row[key]:
                        lines.append(f"  {item.get('pretty', item)}")
        if self.findings:
            lines.append("findings:")
            for f in self.findings:
                lines.append("  " + json.dumps(f, sort_keys=True))
        return "\n".join(lines) + "\n"

    def rendered(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        return self.to_pretty()


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)


# ---------------------------------------------------------------------------
# Serialization and the basis cache


def serialize_polynomial(p: Polynomial) -> list:
    return [
        [list(mono), list(coeff.num), list(coeff.den)]
        for mono, coeff in p.sorted_terms()
    ]


def deserialize_polynomial(n: int, data: list) -> Polynomial:
    terms = {}
    for mono, num, den in data:
        terms[tuple(mono)] = RationalFunction.make(tuple(num), tuple(den))
    return Polynomial(n, terms)


def serialize_subspace(v: GradedSubspace) -> dict:
    return {
        "n": v.n,
        "degree": v.degree,
        "order": v.order,
        "basis": [serialize_polynomial(p) for p in v.basis],
    }


def deserialize_subspace(data: dict) -> GradedSubspace:
    basis = tuple(
        deserialize_polynomial(data["n"], entry) for entry in data["basis"]
    )
    return GradedSubspace(data["n"], data["degree"], basis, data["order"])


def _payload_checksum(payload: dict) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


class SubspaceCache:
    """One file per key; writes go through a temp file and an atomic rename."""

    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, key: str) -> str:
        digest = hashlib.sha256(key.encode()).hexdigest()[:32]
        return os.path.join(self.directory, f"{digest}.json")

    def load(self, key: str) -> GradedSubspace | None:
        path = self._path(key)
        try:
            with open(path, "r", encoding="utf-8") as handle:
                wrapper = json.load(handle)
            if wrapper.get("key") != key:
                return None
            if wrapper.get("checksum") != _payload_checksum(wrapper["payload"]):
                return None
            return deserialize_subspace(wrapper["payload"])
        except (OSError, ValueError, KeyError):
            return None

    def store(self, key: str, v: GradedSubspace) -> None:
        payload = serialize_subspace(v)
        wrapper = {
            "key": key,
            "payload": payload,
            "checksum": _payload_checksum(payload),
        }
        path = self._path(key)
        tmp = path + f".tmp{os.getpid()}"
        with open(tmp, "w", encoding="utf-8") as handle:
            json.dump(wrapper, handle, sort_keys=True)
        os.replace(tmp, path)


def cache_key(kind: str, n: int, d: int, q: QParam, flags: str = "") -> str:
    return f"{kind}|n={n}|d={d}|q={q}|{flags}|v={__version__}"


def cache_roundtrip(
    v: GradedSubspace, cache_dir: str | None = None
) -> GradedSubspace:
    """Store then reload a subspace; the result equals the input exactly."""
    import tempfile

    directory = cache_dir or tempfile.mkdtemp(prefix="qsteenrod-cache-")
    cache = SubspaceCache(directory)
    key = cache_key("roundtrip", v.n, v.degree, QParam.formal())
    cache.store(key, v)
    loaded = cache.load(key)
    if loaded is None:
        raise QSteenrodError("cache round trip failed to reload")
    return loaded


def _cached_component(spec: CommandSpec, kind: str, n: int, d: int, q: QParam):
    builders = {
        "harm": harm_component,
        "hit": hit_component,
        "tqharm": truncated_harm_component,
        "tqhit": truncated_hit_component,
    }
    build = builders[kind]
    if not spec.cache_dir:
        return build(n, d, q)
    cache = SubspaceCache(spec.cache_dir)
    key = cache_key(kind, n, d, q)
    hit = cache.load(key)
    if hit is not None:
        return hit
    value = build(n, d, q)
    cache.store(key, value)
    return value


# ---------------------------------------------------------------------------
# Command implementations


def _basis_entry(p: Polynomial) -> dict:
    return {"terms": serialize_polynomial(p), "pretty": str(p)}


def _frac(f: Fraction) -> str:
    return str(f)


def run_hilbert(spec: CommandSpec) -> Report:
    series = hilbert_of(spec.kind, spec.n, spec.degree, spec.q)
    tables = []
    closed_forms = {"polynomials", "sym", "classical-harm", "partitions"}
    if spec.kind in closed_forms:
        for d in range(spec.degree + 1):
            tables.append({"degree": d, "dim": series[d]})
    else:
        classical = hilbert_of(spec.kind, spec.n, spec.degree, QParam.rational(0))
        for d in range(spec.degree + 1):
            tables.append(
                {"degree": d, "dim": series[d], "dim_q0": classical[d]}
            )
    return Report(spec.echo(), tables, [])


def run_component(spec: CommandSpec) -> Report:
    kind = spec.command  # harm or hit
    tables = []
    findings = []
    for d in range(spec.degree + 1):
        space = _cached_component(spec, kind, spec.n, d, spec.q)
        classical = _cached_component(spec, kind, spec.n, d, QParam.rational(0))
        row = {"degree": d, "dim": space.dim, "dim_q0": classical.dim}
        if spec.include_basis or d == spec.degree:
            row["_basis"] = [_basis_entry(p) for p in space.basis]
        tables.append(row)
        if kind == "harm" and not spec.q.is_formal:
            generic = harm_component(spec.n, d, QParam.formal())
            if space.dim > generic.dim:
                findings.append(
                    {
                        "kind": "dimension-jump",
                        "degree": d,
                        "dim": space.dim,
                        "generic_dim": generic.dim,
                        "q": str(spec.q),
                    }
                )
    return Report(spec.echo(), tables, findings)


def run_truncated(spec: CommandSpec) -> Report:
    tables = []
    findings = []
    for d in range(spec.degree + 1):
        tqhit = _cached_component(spec, "tqhit", spec.n, d, spec.q)
        tqharm = _cached_component(spec, "tqharm", spec.n, d, spec.q)
        classical = harm_component(spec.n, d, QParam.rational(0))
        full_dim = len(monomials_of_degree(spec.n, d))
        combined = echelonize(list(classical.basis) + list(tqhit.basis))
        direct_sum = classical.dim + tqhit.dim == full_dim == len(combined)
        row = {
            "degree": d,
            "dim_tqhit": tqhit.dim,
            "dim_tqharm": tqharm.dim,
            "dim_classical_harm": classical.dim,
            "direct_sum_ok": direct_sum,
        }
        if spec.include_basis:
            row["_basis"] = [_basis_entry(p) for p in tqharm.basis]
        tables.append(row)
        if tqharm.dim != classical.dim:
            findings.append(
                {
                    "kind": "truncated-hilbert-mismatch",
                    "degree": d,
                    "dim_tqharm": tqharm.dim,
                    "dim_classical": classical.dim,
                }
            )
    return Report(spec.echo(), tables, findings)


def run_badq(spec: CommandSpec) -> Report:
    report = bad_q_candidates(spec.n, spec.degree, spec.extended_generators)
    tables = [
        {
            "degree": spec.degree,
            "generic_rank": report.generic_rank,
            "generic_harm_dim": report.generic_harm_dim,
            "minor_gcd": report.pretty_gcd(),
            "rational_roots": [_frac(r) for r in report.rational_roots],
            "nonrational_factors": [list(f) for f in report.nonrational_factors],
        }
    ]
    findings = []
    for root, dim in report.jumps:
        forms = conjectured_root_form(root, spec.n)
        finding = {
            "kind": "bad-q-candidate",
            "degree": spec.degree,
            "q0": _frac(root),
            "kernel_dim_at_root": dim,
            "generic_dim": report.generic_harm_dim,
            **forms,
        }
        if not forms["a_in_1_to_n"]:
            finding["kind"] = "bad-q-form-deviation"
        findings.append(finding)
    return Report(spec.echo(), tables, findings)


def run_strings(spec: CommandSpec) -> Report:
    tables = []
    findings = []
    for degree, seeds, harmonic, max_len in string_length_survey(
        spec.n, spec.q, spec.degree
    ):
        tables.append(
            {
                "degree": degree,
                "seeds": seeds,
                "harmonic_strings": harmonic,
                "max_length": max_len,
            }
        )
        if max_len > spec.n:
            findings.append(
                {
                    "kind": "long-harmonic-string",
                    "degree": degree,
                    "length": max_len,
                    "n": spec.n,
                }
            )
    if spec.n == 1:
        for d in range(2, spec.degree + 1):
            F = build_string(divided_power(1, 1, d), spec.q)
            if is_harmonic_string(F):
                findings.append(
                    {
                        "kind": "divided-power-string-harmonic",
                        "degree": d,
                        "q": str(spec.q),
                    }
                )
    return Report(spec.echo(), tables, findings)


def run_character(spec: CommandSpec) -> Report:
    family = [
        harm_component(spec.n, d, spec.q) for d in range(spec.degree + 1)
    ]
    chi = graded_character(family)
    classes = list(partitions_of(spec.n))
    tables = []
    for d in chi.degrees():
        row = {"degree": d, "dim": family[d].dim}
        values = chi.degree(d)
        for ct in classes:
            row["chi_" + ".".join(map(str, ct))] = _frac(values[ct])
        tables.append(row)
    cert = is_regular_representation(chi, spec.n)
    findings = [
        {
            "kind": "regular-representation",
            "is_regular": cert.is_regular,
            "totals": {
                ".".join(map(str, ct)): _frac(v) for ct, v in cert.totals
            },
        }
    ]
    return Report(spec.echo(), tables, findings)


def run_schubert(spec: CommandSpec) -> Report:
    by_degree: dict[int, list] = {}
    listings: dict[int, list] = {}
    for sigma in all_perms(spec.n):
        p = schubert_polynomial(sigma)
        d = p.homogeneous_degree()
        by_degree.setdefault(d, []).append(p)
        listings.setdefault(d, []).append(
            {"sigma": list(sigma), "pretty": str(p), "terms": serialize_polynomial(p)}
        )
    staircase = StaircaseSet(spec.n)
    tables = []
    for d in sorted(by_degree):
        ech = echelonize(by_degree[d])
        expected = echelonize(
            [Polynomial.monomial(spec.n, m) for m in staircase.of_degree(d)]
        )
        row = {
            "degree": d,
            "count": len(by_degree[d]),
            "independent": len(ech) == len(by_degree[d]),
            "staircase_span_ok": ech == expected,
            "_schubert": listings[d],
        }
        tables.append(row)
    return Report(spec.echo(), tables, [])


def run_commutant(spec: CommandSpec) -> Report:
    solutions = commutant_search(spec.n, spec.degree, spec.q)
    tables = [
        {
            "degree": spec.degree,
            "solution_dim": len(solutions),
            "q": str(spec.q),
        }
    ]
    findings = []
    if spec.q.is_zero and spec.n >= 2:
        inside = all(
            operator_in_span(d_sigma((i,), spec.n, spec.degree), solutions)
            for i in range(1, spec.n)
        )
        findings.append(
            {"kind": "divided-differences-commute", "all_in_solution_space": inside}
        )
    if not spec.q.is_zero:
        findings.append(
            {
                "kind": "commutant-trivial" if not solutions else "commutant-found",
                "solution_dim": len(solutions),
            }
        )
    return Report(spec.echo(), tables, findings)


def run_relations(spec: CommandSpec) -> Report:
    result = operator_span_rank(
        spec.n, spec.degree, spec.q, probe_cap=max(spec.degree, spec.n + 2)
    )
    tables = [
        {
            "degree": spec.degree,
            "partitions": len(result.partitions),
            "rank": result.rank,
            "relations": len(result.relations),
        }
    ]
    findings = [
        {
            "kind": "operator-relation",
            "coefficients": {
                ".".join(map(str, lam)): str(c) for lam, c in rel.items()
            },
        }
        for rel in result.relations
    ]
    return Report(spec.echo(), tables, findings)


def run_verify(spec: CommandSpec) -> Report:
    tables = []
    findings = []
    rng = random.Random(spec.seed)
    stair = staircase_report(spec.n, spec.degree, spec.q)
    for d in range(spec.degree + 1):
        harm = _cached_component(spec, "harm", spec.n, d, spec.q)
        hit = _cached_component(spec, "hit", spec.n, d, spec.q)
        complement = weighted_complement(hit)
        row = {
            "degree": d,
            "dim_harm": harm.dim,
            "dim_hit": hit.dim,
            "dim_harm_q0": harm_component(spec.n, d, QParam.rational(0)).dim,
            "orthogonal_ok": complement.basis == harm.basis,
            "staircase_union_exact": stair.degrees[d].union_exact,
        }
        tables.append(row)
        if not row["orthogonal_ok"]:
            findings.append({"kind": "orthogonality-failure", "degree": d})
    if spec.q.is_formal:
        top = spec.n * (spec.n - 1) // 2
        family = [
            harm_component(spec.n, d, spec.q)
            for d in range(min(spec.degree, top) + 1)
        ]
        cert = is_regular_representation(graded_character(family), spec.n)
        findings.append(
            {
                "kind": "regular-representation",
                "is_regular": cert.is_regular,
                "totals": {
                    ".".join(map(str, ct)): _frac(v) for ct, v in cert.totals
                },
            }
        )
    for _ in range(3):
        q0 = Fraction(rng.randint(-12, 12), rng.randint(1, 9))
        d = rng.randint(0, spec.degree)
        generic_dim, direct_dim = specialized_dimension(spec.n, d, q0)
        if direct_dim > generic_dim:
            findings.append(
                {
                    "kind": "dimension-jump",
                    "degree": d,
                    "q0": _frac(q0),
                    "dim": direct_dim,
                    "generic_dim": generic_dim,
                }
            )
    return Report(spec.echo(), tables, findings)


RUNNERS = {
    "hilbert": run_hilbert,
    "harm": run_component,
    "hit": run_component,
    "truncated": run_truncated,
    "badq": run_badq,
    "strings": run_strings,
    "character": run_character,
    "schubert": run_schubert,
    "commutant": run_commutant,
    "relations": run_relations,
    "verify": run_verify,
}


def execute(spec: CommandSpec) -> Report:
    """Run one command spec and return its report."""
    if spec.command not in RUNNERS:
        raise ValueError(f"unknown command {spec.command!r}")
    if spec.degree < 0:
        raise ValueError("degree cap must be nonnegative")
    return RUNNERS[spec.command](spec)


# ---------------------------------------------------------------------------
# Argument handling

_Q_VALUE = re.compile(r"^-\d+(/\d+)?$")


def _merge_q_flags(argv: list[str]) -> list[str]:
    """Rewrite '-q -2/3' into '--q=-2/3' so argparse accepts negative rationals."""
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in ("-q", "--q") and i + 1 < len(argv) and _Q_VALUE.match(argv[i + 1]):
            out.append(f"--q={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsteenrod",
        description="exact tables for deformed Steenrod operators on polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("-n", "--vars", dest="n", type=int, default=2)
        p.add_argument("-d", "--degree", dest="degree", type=int, default=None)
        p.add_argument("-q", "--q", dest="q", default="formal")
        p.add_argument(
            "--format",
            dest="output_format",
            choices=("json", "csv", "pretty"),
            default="pretty",
        )
        p.add_argument("--cache-dir", dest="cache_dir", default=None)
        p.add_argument("--seed", dest="seed", type=int, default=0)
        p.add_argument("--basis", dest="include_basis", action="store_true")
        if name == "hilbert":
            p.add_argument("--kind", dest="kind", choices=HILBERT_KINDS,
                           default="classical-harm")
        if name == "badq":
            p.add_argument(
                "--all-generators",
                dest="extended_generators",
                action="store_true",
                help="stack every down operator up to the degree",
            )
    return parser


def _default_degree(args: argparse.Namespace) -> int:
    """Natural cap when -d is omitted: the series' top degree if finite."""
    if args.command == "hilbert" and getattr(args, "kind", "") == "classical-harm":
        return args.n * (args.n - 1) // 2
    return 4


def spec_from_args(args: argparse.Namespace) -> CommandSpec:
    return CommandSpec(
        command=args.command,
        n=args.n,
        degree=args.degree if args.degree is not None else _default_degree(args),
        q=QParam.parse(args.q),
        output_format=args.output_format,
        cache_dir=args.cache_dir,
        seed=args.seed,
        include_basis=args.include_basis,
        kind=getattr(args, "kind", "classical-harm"),
        extended_generators=getattr(args, "extended_generators", False),
    )


def _error_object(kind: str, message: str) -> str:
    return json.dumps({"error": {"type": kind, "message": message}}, sort_keys=True)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_q_flags(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        spec = spec_from_args(args)
    except ValueError as exc:
        print(_error_object("input", str(exc)), file=sys.stderr)
        return EXIT_INPUT
    try:
        report = execute(spec)
    except PoleError as exc:
        print(_error_object("pole", str(exc)), file=sys.stderr)
        return EXIT_POLE
    except (ValueError, QSteenrodError) as exc:
        print(_error_object("input", str(exc)), file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(report.rendered(spec.output_format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
