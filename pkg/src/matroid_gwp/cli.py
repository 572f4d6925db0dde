"""Command-line front end.

    matroid-gwp gwp --input fixtures/runex_bases.txt
    matroid-gwp verify --input fixtures/runex_H.txt --kind pcheck

Matrix inputs describe a code; matroid commands then act on the
parity-check matroid M(H). Exit status: 0 success, 1 failed check,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import betti, codes, weights
from .errors import MatroidError, ParseError
from .io import (
    format_matroid,
    format_subset,
    matroid_to_json,
    parse_matrix,
    parse_matroid,
)
from .matroid import Matroid, circuits, dual, elongate, to_mask
from .polys import render_uni
from .verify import code_checks, matroid_checks, report

COMMANDS = (
    "rank", "circuits", "dual", "elongate", "betti", "gwp",
    "enumerator", "tutte", "weights", "distribution", "verify",
)
KINDS = ("bases", "gen", "pcheck")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Path
    kind: str = "bases"
    format: str = "text"
    level: int | None = None
    ext: int | None = None
    threads: int = 1
    naive: bool = False
    subset: tuple[int, ...] | None = None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="matroid-gwp",
        description="Weight polynomials, Tutte polynomials and Betti numbers of matroids and codes.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", required=True, type=Path, help="matroid or matrix file")
    p.add_argument("--kind", choices=KINDS, default="bases",
                   help="bases file, generator matrix, or parity-check matrix")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--level", type=int, help="elongation level")
    p.add_argument("--ext", type=int, help="extension exponent m for distribution")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--naive", action="store_true",
                   help="use the O(3^n) definitional GWP route")
    p.add_argument("--subset", help="comma-separated 1-based labels for rank")
    return p


def config_from_args(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    subset = None
    if args.subset is not None:
        try:
            subset = tuple(int(x) for x in args.subset.split(",") if x.strip())
        except ValueError:
            raise UsageError(f"bad --subset {args.subset!r}") from None
    return RunConfig(
        command=args.command, input=args.input, kind=args.kind, format=args.format,
        level=args.level, ext=args.ext, threads=max(1, args.threads),
        naive=args.naive, subset=subset,
    )


def load(config: RunConfig) -> tuple[Matroid, codes.LinearCode | None]:
    try:
        text = config.input.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {config.input}: {exc.strerror}") from None
    if config.kind == "bases":
        return parse_matroid(text, path=config.input), None
    A = parse_matrix(text, path=config.input)
    try:
        if config.kind == "gen":
            C = codes.code_from_generator(A)
        else:
            C = codes.code_from_parity_check(A)
    except ValueError as exc:
        raise ParseError(str(exc), path=config.input) from None
    return C.matroid_H, C


def _polys_text(polys, name="P") -> str:
    return "\n".join(f"{name}_{j}(Z) = {render_uni(P)}" for j, P in enumerate(polys))


def _polys_json(polys) -> list:
    return [{"j": j, "coeffs": P.to_json()} for j, P in enumerate(polys)]


def render(config: RunConfig, M: Matroid, C) -> tuple[object, str]:
    """Return (json payload, text) for the command; exit status handled by caller."""
    cmd = config.command
    if cmd == "rank":
        data = {"n": M.n, "rank": M.rank}
        text = f"n={M.n} rank={M.rank}"
        if config.subset is not None:
            mask = to_mask(config.subset, M.n)
            r = M.rank_of_mask(mask)
            data.update(subset=list(config.subset), subset_rank=r, nullity=len(config.subset) - r)
            text += f"\n{format_subset(config.subset)}: rank={r} nullity={len(config.subset) - r}"
        return data, text
    if cmd == "circuits":
        cs = circuits(M)
        return [list(c) for c in cs], "\n".join(format_subset(c) for c in cs)
    if cmd == "dual":
        D = dual(M)
        return matroid_to_json(D), format_matroid(D).rstrip("\n")
    if cmd == "elongate":
        if config.level is None:
            raise UsageError("elongate needs --level")
        E = elongate(M, config.level)
        return matroid_to_json(E), format_matroid(E).rstrip("\n")
    if cmd == "betti":
        if config.level is not None:
            tables = [betti.graded_betti_table(M, config.level)]
        else:
            tables = betti.all_betti_tables(M)
        return [t.to_json() for t in tables], "\n\n".join(t.to_text() for t in tables)
    if cmd == "gwp":
        polys = weights.gwp_naive(M) if config.naive else weights.gwp_direct(M)
        return {"n": M.n, "polynomials": _polys_json(polys)}, _polys_text(polys)
    if cmd == "enumerator":
        W = weights.enumerator(M)
        return {"n": M.n, "terms": W.to_json()}, f"W(X,Y,Z) = {W}"
    if cmd == "tutte":
        t = weights.tutte(M)
        return {"n": M.n, "terms": t.to_json()}, f"t(X,Y) = {t}"
    if cmd == "weights":
        d = weights.higher_weights(M)
        text = "\n".join(f"d_{i}={w}" for i, w in enumerate(d, start=1)) or "(no higher weights)"
        return {"weights": list(d)}, text
    if cmd == "distribution":
        if C is None:
            raise UsageError("distribution needs a matrix input (--kind gen or pcheck)")
        dist = codes.brute_force_distribution(C, config.ext or 1, threads=config.threads)
        return dist.to_json(), dist.to_text()
    raise AssertionError(cmd)


def run(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    M, C = load(config)
    if config.command == "verify":
        results = matroid_checks(M, naive=True if config.naive else None)
        if C is not None:
            exts = (config.ext,) if config.ext else (1, 2)
            results += code_checks(C, exts, threads=config.threads)
        if config.format == "json":
            payload = [{"check": r.name, "status": r.status, "detail": r.detail} for r in results]
            out.write(json.dumps(payload, indent=2) + "\n")
        else:
            out.write(report(results) + "\n")
        return 0 if all(r.ok for r in results) else 1
    data, text = render(config, M, C)
    if config.format == "json":
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(text + "\n")
    return 0


def main(argv=None) -> int:
    try:
        config = config_from_args(argv)
        return run(config)
    except (ParseError, UsageError, MatroidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
