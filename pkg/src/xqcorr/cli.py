"""Command-line client.

Each subcommand builds a request model, calls the same handler the HTTP
service uses, and formats the response for a terminal or a file.  Exit
codes: 0 ok, 2 bad parameters, 3 I/O failure, 4 verification breach.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from pydantic import ValidationError

from .errors import XqcorrError
from .figure import sweep_svg
from .dynamics import SweepRecord
from .service import handlers, schemas

OUTPUT_DIR_ENV = "XQCORR_OUTPUT_DIR"
EXIT_OK = 0
EXIT_BAD_PARAMS = 2
EXIT_IO = 3
EXIT_VERIFY_BREACH = 4

PARAM_KEYS = ("r", "s", "c1", "c2", "c3")


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    for key in PARAM_KEYS:
        parser.add_argument(f"--{key}", type=float, default=None)
    parser.add_argument("--input", default=None, metavar="FILE",
                        help="JSON file with the five parameters, either flat or "
                             "under a 'params' key; explicit flags take precedence")


def _load_params(args: argparse.Namespace) -> schemas.StateParams:
    record: dict = {}
    if args.input is not None:
        with open(args.input, encoding="utf-8") as fh:
            data = json.load(fh)
        if isinstance(data, dict) and "params" in data:
            data = data["params"]
        if not isinstance(data, dict):
            raise ValueError(f"expected a JSON object of parameters in {args.input}")
        record.update({k: data[k] for k in PARAM_KEYS if k in data})
    for key in PARAM_KEYS:
        value = getattr(args, key)
        if value is not None:
            record[key] = value
    return schemas.StateParams(**record)


def _resolve_output(path: str) -> str:
    if os.path.isabs(path):
        return path
    base = os.environ.get(OUTPUT_DIR_ENV)
    return os.path.join(base, path) if base else path


def _write_text(path: str, text: str) -> None:
    with open(_resolve_output(path), "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _cmd_deficit(args: argparse.Namespace) -> int:
    req = schemas.DeficitRequest(params=_load_params(args), with_oracle=args.with_oracle,
                                 oracle_grid=args.oracle_grid)
    resp = handlers.compute_deficit(req)
    print(f"deficit = {_fmt(resp.closed.value)} bits")
    print(f"method = {resp.closed.method}")
    print(f"argmin phi = {_fmt(resp.closed.argmin_phi)}")
    print(f"state entropy = {_fmt(resp.closed.state_entropy)} bits")
    print(f"post-measurement entropy = {_fmt(resp.closed.min_entropy)} bits")
    if resp.oracle is not None:
        z = resp.oracle.argmin_z
        print(f"oracle deficit = {_fmt(resp.oracle.value)} bits")
        print(f"oracle argmin z = ({_fmt(z.z1)}, {_fmt(z.z2)}, {_fmt(z.z3)})")
        print(f"gap (oracle - closed) = {_fmt(resp.gap)} bits")
    return EXIT_OK


def _cmd_concurrence(args: argparse.Namespace) -> int:
    resp = handlers.compute_concurrence(schemas.ConcurrenceRequest(params=_load_params(args)))
    print(f"concurrence = {_fmt(resp.value)}")
    print("sqrt lambdas = " + ", ".join(_fmt(v) for v in resp.sqrt_lambdas))
    return EXIT_OK


def _sweep_csv(resp: schemas.SweepResponse, with_oracle: bool) -> str:
    header = "p,deficit_bits,concurrence"
    if with_oracle:
        header += ",oracle_deficit_bits"
    lines = [header]
    for rec in resp.records:
        row = f"{_fmt(rec.p)},{_fmt(rec.deficit)},{_fmt(rec.concurrence)}"
        if with_oracle:
            row += f",{_fmt(rec.oracle_deficit)}"
        lines.append(row)
    return "\n".join(lines) + "\n"


def _sweep_json(resp: schemas.SweepResponse) -> str:
    return json.dumps(resp.model_dump(exclude_none=True), indent=2) + "\n"


def _cmd_sweep(args: argparse.Namespace) -> int:
    req = schemas.SweepRequest(params=_load_params(args), steps=args.steps,
                               with_oracle=args.with_oracle, oracle_grid=args.oracle_grid)
    resp = handlers.run_sweep(req)
    text = _sweep_csv(resp, args.with_oracle) if args.format == "csv" else _sweep_json(resp)
    if args.output is not None:
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)
    if args.svg is not None:
        p_star = handlers.compute_sudden_death(
            schemas.SuddenDeathRequest(params=req.params)).p_star
        records = [SweepRecord(p=r.p, deficit=r.deficit, concurrence=r.concurrence,
                               oracle_deficit=r.oracle_deficit) for r in resp.records]
        _write_text(args.svg, sweep_svg(records, p_star=p_star))
    return EXIT_OK


def _cmd_sudden_death(args: argparse.Namespace) -> int:
    req = schemas.SuddenDeathRequest(params=_load_params(args), tol=args.tol)
    resp = handlers.compute_sudden_death(req)
    if resp.p_star is None:
        print("sudden death p = none")
    else:
        print(f"sudden death p = {_fmt(resp.p_star)}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    resp = handlers.run_verify(schemas.VerifyRequest(states=args.states, seed=args.seed))
    print(f"seed = {resp.seed}, draws per check = {resp.states}")
    for check in resp.checks:
        verdict = "PASS" if check.passed else "FAIL"
        print(f"{check.name:30s} max deviation {check.max_deviation: .3e}  "
              f"tolerance {check.tolerance:.0e}  {verdict}")
    if not resp.ok:
        print("verification FAILED")
        return EXIT_VERIFY_BREACH
    print("verification OK")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xqcorr",
        description="One-way deficit, concurrence, and phase-flip dynamics of "
                    "two-qubit X states.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_deficit = sub.add_parser("deficit", help="one-way deficit of a state")
    _add_param_flags(p_deficit)
    p_deficit.add_argument("--with-oracle", action="store_true",
                           help="also run the measurement-sphere search and report the gap")
    p_deficit.add_argument("--oracle-grid", type=int, default=256)
    p_deficit.set_defaults(func=_cmd_deficit)

    p_conc = sub.add_parser("concurrence", help="Wootters concurrence of a state")
    _add_param_flags(p_conc)
    p_conc.set_defaults(func=_cmd_concurrence)

    p_sweep = sub.add_parser("sweep", help="deficit and concurrence under the phase-flip channel")
    _add_param_flags(p_sweep)
    p_sweep.add_argument("--steps", type=int, default=101)
    p_sweep.add_argument("--with-oracle", action="store_true")
    p_sweep.add_argument("--oracle-grid", type=int, default=256)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--output", default=None, metavar="FILE",
                         help=f"write the table here instead of stdout; relative paths "
                              f"resolve against ${OUTPUT_DIR_ENV} when set")
    p_sweep.add_argument("--svg", default=None, metavar="FILE",
                         help="also render the sweep as an SVG figure")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_sd = sub.add_parser("sudden-death", help="channel strength where entanglement dies")
    _add_param_flags(p_sd)
    p_sd.add_argument("--tol", type=float, default=1e-6)
    p_sd.set_defaults(func=_cmd_sudden_death)

    p_verify = sub.add_parser("verify", help="cross-check closed forms against matrix oracles")
    p_verify.add_argument("--states", type=int, default=200)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (XqcorrError, ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
