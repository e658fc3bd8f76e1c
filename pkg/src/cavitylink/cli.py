"""Command-line client for the simulation service.

By default the service runs in-process (no server needed); ``--server`` points
the same commands at a remote instance.  Every run writes CSV files plus a
``manifest.json`` that ``cavitylink rerun`` can replay bit-identically.

Exit codes: 0 success, 2 validation error, 3 numerical-tolerance failure.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

EXIT_VALIDATION = 2
EXIT_TOLERANCE = 3

DEFAULT_OBSERVABLES = [{"kind": "concurrence", "bipartition": "a1b1"},
                       {"kind": "concurrence", "bipartition": "a2b2"}]


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=300.0)
    # in-process: drive the ASGI app synchronously
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient
    from .service.app import app
    return TestClient(app, raise_server_exceptions=False)


def _post(client: httpx.Client, endpoint: str, payload: dict) -> dict:
    resp = client.post(endpoint, json=payload)
    if resp.status_code in (400, 404, 422):
        click.echo(f"validation error: {resp.json().get('detail', resp.text)}", err=True)
        sys.exit(EXIT_VALIDATION)
    if resp.status_code == 409:
        click.echo(f"numerical tolerance failure: {resp.json().get('detail', resp.text)}",
                   err=True)
        sys.exit(EXIT_TOLERANCE)
    resp.raise_for_status()
    return resp.json()


def _trace_csv(taus, values, label: str, config_hash: str, column: str = "concurrence") -> str:
    lines = [f"# {label} config={config_hash}", f"tau,{column}"]
    lines += [f"{t!r},{v!r}" for t, v in zip(taus, values)]
    return "\n".join(lines) + "\n"


def _surface_csv(surface: dict, label: str, config_hash: str) -> str:
    lines = [f"# {label} config={config_hash}", "J,theta,concurrence"]
    for i, j in enumerate(surface["j_values"]):
        for k, th in enumerate(surface["theta_values"]):
            lines.append(f"{j!r},{th!r},{surface['grid'][i][k]!r}")
    return "\n".join(lines) + "\n"


def _write_outputs(out: Path, files: dict[str, str], manifest: dict,
                   endpoint: str, payload: dict) -> None:
    out.mkdir(parents=True, exist_ok=True)
    for name, text in sorted(files.items()):
        (out / name).write_text(text)
    manifest = dict(manifest)
    manifest["cli"] = {"endpoint": endpoint, "payload": payload}
    manifest["outputs"] = sorted(files)
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    for name in sorted(files) + ["manifest.json"]:
        click.echo(f"wrote {out / name}")


def _check_convergence(reports) -> None:
    for rep in reports:
        if rep.get("checked") and not rep.get("within_tolerance", True):
            click.echo(f"integrator convergence check failed: {rep}", err=True)
            sys.exit(EXIT_TOLERANCE)


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"cannot read config {path}: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Remote service URL (default: run the service in-process).")
@click.pass_context
def main(ctx, server):
    """Two coupled microtoroidal cavities: entanglement transfer simulations."""
    ctx.obj = server


def _run_simulate(client: httpx.Client, payload: dict, out: Path) -> None:
    data = _post(client, "/simulate", payload)
    config_hash = data["manifest"]["config_hash"]
    files = {}
    for name, values in data["series"].items():
        column = "concurrence" if name.startswith("C_") else name
        files[f"{name}.csv"] = _trace_csv(data["taus"], values, name, config_hash, column)
    manifest = data["manifest"]
    manifest["zero_intervals"] = data["zero_intervals"]
    manifest["plateaus"] = data["plateaus"]
    _write_outputs(out, files, manifest, "/simulate", payload)
    _check_convergence([manifest.get("convergence", {})])


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(),
              help="JSON file: a system config or a full experiment spec.")
@click.option("--losses/--no-losses", default=False,
              help="Add default losses (kappa=5e-2, gamma=5e-3) if the spec has none.")
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.pass_obj
def simulate(server, config_path, losses, out_dir):
    """Run one experiment and write a CSV per observable."""
    raw = _load_json(config_path)
    if "coupling" in raw:  # bare system config: wrap with protocol defaults
        payload = {"config": raw, "observables": DEFAULT_OBSERVABLES}
    else:
        payload = raw
    if losses and not payload.get("losses"):
        payload["losses"] = {"kappa": 5e-2, "gamma": 5e-3}
    if payload.get("losses") and payload["config"].get("coupling", {}).get("kind") != "bridge_qubit":
        payload["losses"]["gamma"] = 0.0
    with _client(server) as client:
        _run_simulate(client, payload, Path(out_dir))


def _run_sweep(client: httpx.Client, payload: dict, out: Path) -> None:
    data = _post(client, "/sweep", payload)
    config_hash = data["manifest"]["config_hash"]
    files = {}
    for label in data["surfaces"]:
        surface = {"j_values": data["j_values"], "theta_values": data["theta_values"],
                   "grid": data["surfaces"][label]}
        files[f"sweep_{label}.csv"] = _surface_csv(surface, label, config_hash)
    _write_outputs(out, files, data["manifest"], "/sweep", payload)


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(),
              help="JSON file with the system config.")
@click.option("--tau", required=True, type=float, help="Evolution time (units of 1/eta).")
@click.option("--grid", default="81x81", metavar="JxTHETA", help="Grid resolution.")
@click.option("--j-max", default=4.0, show_default=True)
@click.option("--bipartitions", default="a1b2,a2b1", show_default=True)
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.pass_obj
def sweep(server, config_path, tau, grid, j_max, bipartitions, out_dir):
    """Concurrence surface over (J, theta) at a fixed time."""
    try:
        nj, ntheta = (int(x) for x in grid.lower().split("x"))
    except ValueError:
        click.echo(f"bad --grid {grid!r}, expected e.g. 81x81", err=True)
        sys.exit(EXIT_VALIDATION)
    payload = {"config": _load_json(config_path), "tau": tau,
               "j_start": 0.0, "j_stop": j_max, "j_count": nj,
               "theta_count": ntheta,
               "bipartitions": [b.strip() for b in bipartitions.split(",")]}
    with _client(server) as client:
        _run_sweep(client, payload, Path(out_dir))


def _run_figure(client: httpx.Client, name: str, payload: dict, out: Path) -> None:
    data = _post(client, f"/figures/{name}", payload)
    config_hash = data["manifest"]["config_hash"]
    files = {}
    for label, tr in data["traces"].items():
        files[f"{label}.csv"] = _trace_csv(tr["taus"], tr["values"], label, config_hash)
    for label, surface in data["surfaces"].items():
        files[f"sweep_{label}.csv"] = _surface_csv(surface, label, config_hash)
    manifest = data["manifest"]
    manifest["zero_intervals"] = data["zero_intervals"]
    manifest["plateaus"] = data["plateaus"]
    manifest["convergence"] = data["convergence"]
    _write_outputs(out, files, manifest, f"/figures/{name}", payload)
    _check_convergence(data["convergence"])


@main.command()
@click.argument("name")
@click.option("--steps", type=int, default=None, help="Trace resolution override.")
@click.option("--grid", type=int, default=None, help="Sweep resolution override.")
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.pass_obj
def figure(server, name, steps, grid, out_dir):
    """Reproduce a published figure's data (fig2a ... fig14).

    Run ``cavitylink figures`` to list them.
    """
    payload = {}
    if steps is not None:
        payload["steps"] = steps
    if grid is not None:
        payload["grid"] = grid
    with _client(server) as client:
        _run_figure(client, name, payload, Path(out_dir))


@main.command()
@click.pass_obj
def figures(server):
    """List available figure commands."""
    with _client(server) as client:
        for fig in client.get("/figures").json():
            click.echo(f"{fig['name']:8s} [{fig['kind']:6s}] {fig['description']}")


@main.group()
def verify():
    """Consistency verifications."""


@verify.command("fiber-equivalence")
@click.option("--nu", default=1.0, show_default=True)
@click.option("--g", default=1.0, show_default=True)
@click.option("--intra-j", "j", default=0.0, show_default=True)
@click.pass_context
def fiber_equivalence(ctx, nu, g, j):
    """Check fiber-mediated dynamics against qubit-mediated dynamics."""
    server = ctx.parent.parent.obj
    with _client(server) as client:
        data = _post(client, "/verify/fiber-equivalence",
                     {"nu": nu, "g": g, "J": j})
    for name, dev in data["per_state"].items():
        click.echo(f"  {name:16s} max |C_fiber - C_qubit| = {dev:.3e}")
    click.echo(f"max deviation {data['max_deviation']:.3e} "
               f"(tolerance {data['tolerance']:.0e}): "
               f"{'PASS' if data['passed'] else 'FAIL'}")
    if not data["passed"]:
        sys.exit(EXIT_TOLERANCE)


@verify.command("analytic-oracles")
@click.pass_context
def analytic_oracles(ctx):
    """Audit the published closed-form amplitudes against the propagator."""
    server = ctx.parent.parent.obj
    with _client(server) as client:
        data = _post(client, "/verify/analytic-oracles", {})
    for key, ok in data["findings"].items():
        click.echo(f"  {key:40s} {'agrees' if ok else 'DEVIATES'}")
    click.echo(f"max deviations: {json.dumps(data['max_deviation'])}")
    click.echo("audit matches documented findings: "
               f"{data['matches_documented_findings']}")
    if not data["matches_documented_findings"]:
        sys.exit(EXIT_TOLERANCE)


@main.command()
@click.argument("manifest_path", type=click.Path())
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.pass_obj
def rerun(server, manifest_path, out_dir):
    """Replay a previous run from its manifest.json."""
    manifest = _load_json(manifest_path)
    cli_req = manifest.get("cli")
    if not cli_req:
        click.echo("manifest carries no cli request section", err=True)
        sys.exit(EXIT_VALIDATION)
    endpoint, payload = cli_req["endpoint"], cli_req["payload"]
    out = Path(out_dir)
    with _client(server) as client:
        if endpoint == "/simulate":
            _run_simulate(client, payload, out)
        elif endpoint == "/sweep":
            _run_sweep(client, payload, out)
        elif endpoint.startswith("/figures/"):
            _run_figure(client, endpoint.split("/")[-1], payload, out)
        else:
            click.echo(f"cannot rerun endpoint {endpoint!r}", err=True)
            sys.exit(EXIT_VALIDATION)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn
    uvicorn.run("cavitylink.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
