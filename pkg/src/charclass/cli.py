"""Command-line front end.

The CLI is a thin client of the HTTP service: every computation command
builds a JSON request from the problem file and performs it against the
FastAPI app, in-process by default or against a remote server via
``--server``.  ``serve`` runs the service under uvicorn, and ``bench`` drives
the other commands over a fixture directory in subprocesses so per-fixture
timeouts can be enforced.

Exit codes: 0 ok, 2 parse/input error, 3 genericity failure, 4 unsupported
input, 5 internal error.
"""

from __future__ import annotations

import csv as csv_module
import json
import os
import subprocess
import sys
import time
from pathlib import Path

import click

from .chow import ChowClass
from .errors import (
    EXIT_GENERICITY,
    EXIT_INTERNAL,
    EXIT_PARSE,
    EXIT_UNSUPPORTED,
    CharclassError,
)
from .problem_file import load_problem

_EXIT_BY_CODE = {
    "parse": EXIT_PARSE,
    "genericity": EXIT_GENERICITY,
    "unsupported": EXIT_UNSUPPORTED,
    "internal": EXIT_INTERNAL,
}

SEED_ENV_VAR = "CHARCLASS_SEED"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise click.UsageError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}")


def _request(endpoint: str, payload: dict, server: str | None) -> tuple[int, dict]:
    """POST the payload to the service, in-process unless a server is given."""
    if server:
        import httpx

        try:
            resp = httpx.post(server.rstrip("/") + endpoint, json=payload, timeout=None)
        except httpx.HTTPError as exc:
            click.echo(f"error: cannot reach {server}: {exc}", err=True)
            sys.exit(EXIT_INTERNAL)
        return resp.status_code, resp.json()
    import warnings

    with warnings.catch_warnings():
        # starlette's test client emits an httpx pin warning on import
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    with TestClient(app, raise_server_exceptions=False) as client:
        resp = client.post(endpoint, json=payload)
    return resp.status_code, resp.json()


def _run_command(endpoint: str, path: str, seed: int, verify: int | None,
                 char: int | None, server: str | None) -> dict:
    try:
        problem = load_problem(path)
    except CharclassError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(_EXIT_BY_CODE.get(exc.code, EXIT_INTERNAL))
    payload = {
        "problem": {
            "p": char if char is not None else problem.p,
            "variables": list(problem.variables),
            "generators": list(problem.generators),
            "name": problem.name,
        },
        "seed": seed,
    }
    if verify is not None:
        payload["verify"] = verify
    status, body = _request(endpoint, payload, server)
    if status != 200:
        err = body.get("error", {}) if isinstance(body, dict) else {}
        code = err.get("code", "internal")
        message = err.get("message", body)
        click.echo(f"error ({code}): {message}", err=True)
        sys.exit(_EXIT_BY_CODE.get(code, EXIT_INTERNAL))
    for warning in body.get("warnings") or ():
        click.echo(f"warning: {warning}", err=True)
    return body


def _emit(body: dict, as_json: bool, human_lines) -> None:
    if as_json:
        click.echo(json.dumps(body, sort_keys=True))
    else:
        for line in human_lines(body):
            click.echo(line)


def _class_str(coeffs) -> str:
    return str(ChowClass.from_list(coeffs))


def _compute_options(fn):
    fn = click.option("--seed", type=int, default=None,
                      help=f"random seed (default: ${SEED_ENV_VAR} or 0)")(fn)
    fn = click.option("--verify", type=click.IntRange(0), default=None, metavar="K",
                      help="K independent recomputations per projective degree "
                      "(default 1, except projdeg: 0)")(fn)
    fn = click.option("--json", "as_json", is_flag=True, help="machine-readable output")(fn)
    fn = click.option("--char", type=int, default=None, metavar="P",
                      help="override the characteristic from the file")(fn)
    fn = click.option("--server", default=None, metavar="URL",
                      help="send the request to a running charclass service")(fn)
    return fn


@click.group()
@click.version_option(package_name="charclass")
def main():
    """Projective degrees, Segre classes, CSM classes and Euler
    characteristics of projective schemes over prime fields."""


@main.command()
@click.argument("path", type=click.Path())
@_compute_options
def projdeg(path, seed, verify, as_json, char, server):
    """Projective degrees (g_0..g_n) of the map defined by the ideal."""
    seed = seed if seed is not None else _default_seed()
    body = _run_command("/projdeg", path, seed, verify, char, server)
    _emit(body, as_json, lambda b: [f"g = ({', '.join(map(str, b['g']))})"])


@main.command()
@click.argument("path", type=click.Path())
@_compute_options
def segre(path, seed, verify, as_json, char, server):
    """Segre class s(V, P^n) of the scheme cut out by the ideal."""
    seed = seed if seed is not None else _default_seed()
    body = _run_command("/segre", path, seed, verify, char, server)
    _emit(
        body,
        as_json,
        lambda b: [
            f"g = ({', '.join(map(str, b['g']))})",
            f"s(V,P^{b['n']}) = {_class_str(b['segre'])}",
        ],
    )


@main.command()
@click.argument("path", type=click.Path())
@_compute_options
def csm(path, seed, verify, as_json, char, server):
    """Chern-Schwartz-MacPherson class and Euler characteristic."""
    seed = seed if seed is not None else _default_seed()
    body = _run_command("/csm", path, seed, verify, char, server)
    _emit(
        body,
        as_json,
        lambda b: [
            f"c_SM(V) = {_class_str(b['csm'])}",
            f"chi(V) = {b['chi']}",
        ],
    )


@main.command()
@click.argument("path", type=click.Path())
@_compute_options
def euler(path, seed, verify, as_json, char, server):
    """Topological Euler characteristic chi(V)."""
    seed = seed if seed is not None else _default_seed()
    body = _run_command("/euler", path, seed, verify, char, server)
    _emit(body, as_json, lambda b: [f"chi(V) = {b['chi']}"])


@main.command()
@click.argument("path", type=click.Path())
@_compute_options
def sections(path, seed, verify, as_json, char, server):
    """Euler characteristics of V and its general linear sections."""
    seed = seed if seed is not None else _default_seed()
    body = _run_command("/sections", path, seed, verify, char, server)
    _emit(body, as_json, lambda b: [", ".join(map(str, b["sections"]))])


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8787, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("charclass.service:app", host=host, port=port)


def _summarize(command: str, body: dict) -> str:
    if command == "projdeg":
        return "g=(" + ",".join(map(str, body["g"])) + ")"
    if command == "segre":
        return _class_str(body["segre"])
    if command == "csm":
        return f"chi={body['chi']}; c_SM={_class_str(body['csm'])}"
    if command == "euler":
        return f"chi={body['chi']}"
    return ", ".join(map(str, body.get("sections", ())))


@main.command()
@click.argument("directory", type=click.Path())
@click.option("--command", "command", default="csm", show_default=True,
              type=click.Choice(["projdeg", "segre", "csm", "euler", "sections"]))
@click.option("--timeout", type=float, default=600.0, show_default=True,
              help="per-fixture wall-clock budget in seconds; overruns are "
              "marked '-' like the customary benchmark convention")
@click.option("--csv", "csv_path", type=click.Path(), default=None,
              help="also write the table as CSV")
@click.option("--seed", type=int, default=None)
@click.option("--verify", type=click.IntRange(0), default=None, metavar="K")
def bench(directory, command, timeout, csv_path, seed, verify):
    """Run a computation over every .ideal file in a directory and report
    per-fixture wall time, result and verification status."""
    seed = seed if seed is not None else _default_seed()
    directory = Path(directory)
    if not directory.is_dir():
        click.echo(f"error: {directory} is not a directory", err=True)
        sys.exit(EXIT_PARSE)
    fixtures = sorted(directory.glob("*.ideal"))
    effective_verify = verify if verify is not None else (0 if command == "projdeg" else 1)
    rows = []
    for path in fixtures:
        argv = [
            sys.executable, "-m", "charclass", command, str(path),
            "--json", "--seed", str(seed), "--verify", str(effective_verify),
        ]
        start = time.monotonic()
        try:
            proc = subprocess.run(
                argv, capture_output=True, text=True, timeout=timeout
            )
            elapsed = time.monotonic() - start
            if proc.returncode == 0:
                body = json.loads(proc.stdout)
                rows.append({
                    "fixture": path.name,
                    "time_s": f"{elapsed:.2f}",
                    "result": _summarize(command, body),
                    "verified": "yes" if effective_verify else "single-run",
                    "status": "ok",
                })
            else:
                message = proc.stderr.strip().splitlines()
                rows.append({
                    "fixture": path.name,
                    "time_s": f"{elapsed:.2f}",
                    "result": message[-1] if message else f"exit {proc.returncode}",
                    "verified": "-",
                    "status": f"error({proc.returncode})",
                })
        except subprocess.TimeoutExpired:
            rows.append({
                "fixture": path.name,
                "time_s": "-",
                "result": "-",
                "verified": "-",
                "status": f"timeout(>{timeout:g}s)",
            })
    headers = ["fixture", "time_s", "result", "verified", "status"]
    widths = {h: max([len(h)] + [len(r[h]) for r in rows]) for h in headers}
    click.echo("| " + " | ".join(h.ljust(widths[h]) for h in headers) + " |")
    click.echo("|" + "|".join("-" * (widths[h] + 2) for h in headers) + "|")
    for r in rows:
        click.echo("| " + " | ".join(r[h].ljust(widths[h]) for h in headers) + " |")
    if csv_path:
        with open(csv_path, "w", newline="") as fh:
            writer = csv_module.DictWriter(fh, fieldnames=headers)
            writer.writeheader()
            writer.writerows(rows)
    sys.exit(0)


if __name__ == "__main__":
    main()
