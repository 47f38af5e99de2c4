"""Command-line front end: check, link, classify, report.

Every command emits a JSON document with a stable schema (version "1") and
deterministic key order; `classify` can also emit CSV or a plain table.
Exit codes: 0 success (a rejected link is a valid answer), 2 input error,
3 when --expect is given and the classification count differs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from .classify import (
    DEFAULT_BOUND,
    classify,
    default_jobs,
    end_summary,
    stabilization_check,
)
from .link import DivContraction, Link, display_orientation
from .singularity import (
    is_terminal_blowup,
    is_terminal_cqs,
    is_terminal_wps,
    singularity_indices,
)
from .toric import BlowupVariety, antik_degree, is_weak_fano

SCHEMA_VERSION = "1"

# End-map names the computation does not produce; published only for the
# four dimension-3 links, keyed by the trailing weight pair.
DIM3_END_ANNOTATIONS_VERSION = "1"
DIM3_END_ANNOTATIONS = {
    (1, 1): ("Fibration", "P^1-bundle over P^2"),
    (1, 2): ("Divisorial Contraction to P^1", None),
    (2, 3): ("(1,1,2)-Weighted blowup of a smooth point", None),
    (2, 5): ("Kawamata blowup of 1/3(1,1,2)", None),
}


class InputError(Exception):
    pass


def _parse_weights(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise InputError(f"bad weight token: {p!r}") from None
    if not out:
        raise InputError("empty weight list")
    return tuple(out)


def _record(command: str, inputs: dict, result: dict, started: float) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "timing_ms": int((time.perf_counter() - started) * 1000),
    }


def _emit_json(doc: dict, out) -> None:
    out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _wformat(ws) -> str:
    return ":".join(str(w) for w in ws)


def cmd_check(args, out) -> int:
    started = time.perf_counter()
    weights = _parse_weights(args.weights)
    inputs = {"weights": list(weights)}
    if args.index is not None:
        if args.index < 1:
            raise InputError(f"index must be positive, got {args.index}")
        inputs["index"] = args.index
        result = {"terminal_cqs": is_terminal_cqs(weights, args.index)}
    else:
        result = {
            "weights_sorted": sorted(weights),
            "singularity_indices": list(singularity_indices(weights)),
            "wps_terminal": is_terminal_wps(weights),
        }
        if all(w >= 1 for w in weights) and len(weights) >= 2:
            T = BlowupVariety(len(weights), weights)
            result.update(
                {
                    "blowup_terminal": is_terminal_blowup(weights),
                    "weak_fano": is_weak_fano(T),
                    "antik_degree": str(antik_degree(T)),
                }
            )
        else:
            result.update(
                {"blowup_terminal": None, "weak_fano": None, "antik_degree": None}
            )
    _emit_json(_record("check", inputs, result, started), out)
    return 0


def _serialize_link(result) -> dict:
    if isinstance(result, Link):
        end = result.end
        if isinstance(end, DivContraction):
            end_doc = {
                "kind": "divisorial_contraction",
                "target_weights": list(end.target_weights),
                "center_dim": end.center_dim,
                "center_index": end.center_index,
            }
        else:
            end_doc = {
                "kind": "fibration",
                "base_dim": end.base_dim,
                "fiber_weights": list(end.fiber_weights),
            }
        return {
            "accepted": True,
            "steps": [
                {
                    "wall": s.wall,
                    "flip_weights": list(s.flip_weights),
                    "flip_weights_display": list(display_orientation(s.flip_weights)),
                }
                for s in result.steps
            ],
            "end": end_doc,
        }
    return {
        "accepted": False,
        "rejection": {
            "stage": result.stage,
            "wall": result.wall,
            "detail": result.detail,
        },
    }


def cmd_link(args, out) -> int:
    from .link import build_link

    started = time.perf_counter()
    weights = _parse_weights(args.weights)
    if len(weights) != args.dim:
        raise InputError(f"expected {args.dim} weights, got {len(weights)}")
    if any(w < 1 for w in weights):
        raise InputError(f"blowup weights must be positive: {list(weights)}")
    inputs = {"weights": list(weights), "dim": args.dim}
    result = _serialize_link(build_link(weights, args.dim))
    result["weights_sorted"] = sorted(weights)
    _emit_json(_record("link", inputs, result, started), out)
    return 0


def _open_out(path: str):
    out_dir = os.environ.get("WBLINKS_OUT_DIR")
    if out_dir and not os.path.isabs(path):
        path = os.path.join(out_dir, path)
    return open(path, "w", encoding="utf-8")


def _classify_payload(run, stabilized) -> dict:
    return {
        "dim": run.dim,
        "bound": run.bound,
        "total": len(run.accepted),
        "accepted": [list(ws) for ws in run.accepted],
        "shape_counts": dict(sorted(run.shape_counts.items())),
        "stabilized": stabilized,
    }


def _classify_csv(run) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["weights", "end_kind", "target"])
    for ws in run.accepted:
        kind, target = end_summary(ws, run.dim)
        writer.writerow([_wformat(ws), kind, _wformat(target)])
    return buf.getvalue()


def _classify_table(run, stabilized) -> str:
    lines = [f"dim={run.dim} bound={run.bound} total={len(run.accepted)}"]
    if stabilized is not None:
        lines.append(f"stabilized={stabilized}")
    lines.append("")
    for ws in run.accepted:
        kind, target = end_summary(ws, run.dim)
        lines.append(f"({','.join(map(str, ws))})  {kind}  P({','.join(map(str, target))})")
    lines.append("")
    lines.append("shape counts:")
    for key, n in sorted(run.shape_counts.items()):
        lines.append(f"  {key}: {n}")
    return "\n".join(lines) + "\n"


def cmd_classify(args, out) -> int:
    started = time.perf_counter()
    jobs = args.jobs if args.jobs is not None else default_jobs()
    run = classify(args.dim, args.bound, jobs=jobs)
    stabilized = None
    if args.stabilize:
        stabilized = stabilization_check(args.dim, args.bound, jobs=jobs)
    inputs = {"dim": args.dim, "bound": args.bound, "jobs": jobs}
    if args.format == "json":
        doc = _record(
            "classify", inputs, _classify_payload(run, stabilized), started
        )
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    elif args.format == "csv":
        text = _classify_csv(run)
    else:
        text = _classify_table(run, stabilized)
    if args.out:
        with _open_out(args.out) as fh:
            fh.write(text)
        _emit_json(
            _record(
                "classify",
                inputs,
                {"written": args.out, "total": len(run.accepted)},
                started,
            ),
            out,
        )
    else:
        out.write(text)
    if args.expect is not None and len(run.accepted) != args.expect:
        sys.stderr.write(
            f"expected {args.expect} tuples, found {len(run.accepted)}\n"
        )
        return 3
    return 0


def render_report(dim: int, bound: int, jobs: int = 1) -> str:
    """Markdown table of all accepted links at the given bound."""
    run = classify(dim, bound, jobs=jobs)
    from .link import build_link

    lines = [
        f"# Sarkisov links from weighted blowups of P^{dim} (bound {bound})",
        "",
        "| weights | flip steps | end map | model |",
        "| --- | --- | --- | --- |",
    ]
    for ws in run.accepted:
        link = build_link(ws, dim)
        steps = "; ".join(
            "(" + ",".join(str(x) for x in display_orientation(s.flip_weights)) + ")"
            for s in link.steps
        )
        kind, target = end_summary(ws, dim)
        model = f"P({','.join(map(str, target))})"
        if dim == 3:
            end_map, model_override = DIM3_END_ANNOTATIONS.get(
                ws[-2:], (kind, None)
            )
            if model_override is not None:
                model = model_override
        else:
            end_map = (
                "Divisorial Contraction" if kind == "divisorial_contraction"
                else "Fibration"
            )
            if kind == "fibration":
                base = link.end.base_dim
                model = f"{model}-fibration over P^{base}"
        lines.append(
            f"| ({','.join(map(str, ws))}) | {steps} | {end_map} | {model} |"
        )
    lines.append("")
    return "\n".join(lines)


def cmd_report(args, out) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    out.write(render_report(args.dim, args.bound, jobs=jobs))
    out.write("\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wblinks",
        description="Terminality checks and Sarkisov links for weighted "
        "blowups of a point in projective space.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("check", help="terminality checks on one weight list")
    p.add_argument("-w", "--weights", required=True, help="comma-separated integers (use --weights=-1,2,3 for negatives)")
    p.add_argument("-r", "--index", type=int, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("link", help="build the link for one blowup")
    p.add_argument("-w", "--weights", required=True, help="comma-separated integers (use --weights=-1,2,3 for negatives)")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("classify", help="bounded exhaustive classification")
    p.add_argument("--dim", type=int, choices=(3, 4), required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--out", default=None)
    p.add_argument("--expect", type=int, default=None)
    p.add_argument("--stabilize", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("report", help="markdown summary table")
    p.add_argument("--dim", type=int, choices=(3, 4), required=True)
    p.add_argument("--bound", type=int, default=64)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
