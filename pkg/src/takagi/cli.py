"""Thin command-line client for the evaluation service.

Each subcommand builds a request, sends it to the HTTP API and prints
the JSON record.  By default the service runs in-process (no network);
pass ``--server URL`` or set ``TAKAGI_SERVER`` to talk to a remote
instance started with ``takagi serve``.

Exit codes: 0 success, 2 parse error, 3 domain error.
"""

from __future__ import annotations

import csv
import json
import sys

import click
import httpx


def _client(server: str | None) -> httpx.Client:
    if server is not None:
        return httpx.Client(base_url=server, timeout=60.0)
    import warnings

    with warnings.catch_warnings():
        # starlette's httpx-backed test client is the supported way to run
        # an ASGI app in-process; silence its transport deprecation chatter
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

        from .service.app import create_app

        return TestClient(create_app())


def _request(server: str | None, path: str, body: dict) -> dict:
    try:
        with _client(server) as client:
            resp = client.post(path, json=body)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(1)
    if resp.status_code == 200:
        return resp.json()
    try:
        data = resp.json()
    except ValueError:
        data = {}
    kind = data.get("error", "domain")
    message = data.get("message") or data.get("detail") or resp.text
    click.echo(f"error: {message}", err=True)
    sys.exit(2 if kind == "parse" else 3)


def _emit(record: dict) -> None:
    click.echo(json.dumps(record, indent=2))


@click.group()
@click.option(
    "--server",
    default=None,
    envvar="TAKAGI_SERVER",
    metavar="URL",
    help="Base URL of a running service; defaults to an in-process instance.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Exact Takagi-function evaluation and superdifferential analysis."""
    ctx.obj = server


@main.command("eval")
@click.argument("point")
@click.option("--exact", is_flag=True, help="Return the exact rational value.")
@click.option("--terms", type=int, default=None, help="Partial-sum terms for a certified bracket.")
@click.option("--digits", type=int, default=12, show_default=True, help="Decimal digits in renderings.")
@click.pass_obj
def cmd_eval(server: str | None, point: str, exact: bool, terms: int | None, digits: int) -> None:
    """Evaluate the function at POINT ('p/q' or 'k.pre(per)')."""
    body = {"point": point, "exact": exact, "terms": terms, "digits": digits}
    _emit(_request(server, "/eval", body))


@main.command("classify")
@click.argument("point")
@click.pass_obj
def cmd_classify(server: str | None, point: str) -> None:
    """Digit-tail case, superdifferential and subdifferential at POINT."""
    _emit(_request(server, "/classify", {"point": point}))


@main.command("dini")
@click.argument("point")
@click.option("--depth", type=int, default=24, show_default=True, help="Finest sampling scale 2^-depth.")
@click.option("--width", type=int, default=8, show_default=True, help="Grid steps per side.")
@click.option("--digits", type=int, default=12, show_default=True)
@click.pass_obj
def cmd_dini(server: str | None, point: str, depth: int, width: int, digits: int) -> None:
    """Numerical one-sided derivative estimates and exact quotient tables."""
    body = {"point": point, "depth": depth, "width": width, "digits": digits}
    _emit(_request(server, "/dini", body))


@main.command("maxset")
@click.argument("point")
@click.pass_obj
def cmd_maxset(server: str | None, point: str) -> None:
    """Membership in the maximum set and the superdifferentiability sets."""
    _emit(_request(server, "/maxset", {"point": point}))


@main.command("scan")
@click.option("--from", "start", required=True, metavar="Q1", help="Left end of the grid.")
@click.option("--to", "stop", required=True, metavar="Q2", help="Right end of the grid.")
@click.option("--step", required=True, metavar="S", help="Positive rational spacing.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False), help="Output file.")
@click.option("--format", "fmt", type=click.Choice(["csv", "jsonl"]), default="csv", show_default=True)
@click.option("--digits", type=int, default=12, show_default=True)
@click.pass_obj
def cmd_scan(
    server: str | None,
    start: str,
    stop: str,
    step: str,
    out_path: str,
    fmt: str,
    digits: int,
) -> None:
    """Tabulate value, case and superdifferential over a rational grid."""
    body = {"start": start, "stop": stop, "step": step, "digits": digits}
    rows = _request(server, "/scan", body)["rows"]
    fields = ["x", "t_exact", "t_decimal", "case", "superdiff"]
    try:
        with open(out_path, "w", newline="") as fh:
            if fmt == "csv":
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(fields)
                for row in rows:
                    writer.writerow([row[f] for f in fields])
            else:
                for row in rows:
                    fh.write(json.dumps({f: row[f] for f in fields}) + "\n")
    except OSError as exc:
        click.echo(f"error: cannot write {out_path}: {exc}", err=True)
        sys.exit(3)
    click.echo(f"wrote {len(rows)} rows to {out_path}")


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def cmd_serve(host: str, port: int) -> None:
    """Run the HTTP service with uvicorn."""
    import uvicorn

    uvicorn.run("takagi.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
