"""Command-line front end.

Thin client over the HTTP service: every command builds one request, posts
it (in process by default, or to --server), and renders the JSON response.
Rationals are exact fraction strings throughout; output for a fixed command
line is byte-identical across runs.

Exit codes: 0 all verifications pass, 2 at least one fail,
3 inconclusive (window too small), 1 usage or input error.
"""

import json
import sys

import click
import httpx

EXIT_PASS = 0
EXIT_USAGE = 1
EXIT_FAIL = 2
EXIT_INCONCLUSIVE = 3


class ServiceClient:
    """Posts requests either in process (default) or to a running server."""

    def __init__(self, server, fmt):
        self.server = server
        self.fmt = fmt
        self._client = None

    def _ensure(self):
        if self._client is None:
            if self.server:
                self._client = httpx.Client(base_url=self.server, timeout=600.0)
            else:
                import warnings
                with warnings.catch_warnings():
                    # the in-process bridge warns about its httpx backend
                    warnings.simplefilter("ignore")
                    from fastapi.testclient import TestClient
                from .api import app
                self._client = TestClient(app)
        return self._client

    def post(self, path, payload):
        try:
            resp = self._ensure().post(path, json=payload)
        except httpx.HTTPError as exc:
            raise click.ClickException(f"service request failed: {exc}")
        if resp.status_code != 200:
            try:
                detail = resp.json().get("detail", resp.text)
            except ValueError:
                detail = resp.text
            raise click.ClickException(f"{path[1:]}: {detail}")
        return resp.json()


def parse_fractions(text, count, what="k"):
    """Comma-separated exact fractions; a single value broadcasts."""
    parts = [p.strip() for p in str(text).split(",") if p.strip() != ""]
    if len(parts) == 1 and count > 1:
        parts = parts * count
    if len(parts) != count:
        raise click.ClickException(
            f"{what} needs {count} comma-separated entries, got {len(parts)}")
    from fractions import Fraction
    for p in parts:
        try:
            Fraction(p)
        except (ValueError, ZeroDivisionError):
            raise click.ClickException(f"malformed fraction {p!r} in {what}")
    return parts


def parse_ints(text, what="b"):
    if text is None or str(text).strip() == "":
        return []
    try:
        return [int(p) for p in str(text).split(",") if p.strip() != ""]
    except ValueError:
        raise click.ClickException(f"{what} must be comma-separated integers")


def emit(data):
    click.echo(json.dumps(data, sort_keys=True, separators=(",", ": ")))


def emit_tsv(rows):
    for row in rows:
        click.echo("\t".join(str(c) for c in row))


def report_exit(outcome):
    return {"pass": EXIT_PASS, "fail": EXIT_FAIL}.get(outcome, EXIT_INCONCLUSIVE)


def render_report(client, rep):
    if client.fmt == "tsv":
        rows = [[rep["id"], rep["outcome"]]]
        for deg, dim in rep.get("params", {}).get("dims", []):
            rows.append([rep["id"], "dim", deg, dim])
        if "witness" in rep:
            rows.append([rep["id"], "witness",
                         json.dumps(rep["witness"], sort_keys=True)])
        emit_tsv(rows)
    else:
        emit(rep)
    return report_exit(rep["outcome"])


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Base URL of a running service; default runs in process.")
@click.option("--format", "fmt", type=click.Choice(["json", "tsv"]),
              default="json", show_default=True, help="Output format.")
@click.pass_context
def cli(ctx, server, fmt):
    """Exact-arithmetic sections, crossed-product identities, and the
    verification suite tying them together."""
    ctx.obj = ServiceClient(server, fmt)


@cli.command()
@click.option("--n", type=int, required=True, help="Cyclic group order.")
@click.pass_obj
def fan(client, n):
    """Rays and dual-cone chart data of the resolution."""
    data = client.post("/fan", {"n": n})
    if client.fmt == "tsv":
        emit_tsv([["ray", *v] for v in data["rays"]]
                 + [["chart", i, *c["dual"][0], *c["dual"][1]]
                    for i, c in enumerate(data["charts"])])
    else:
        emit(data)
    return EXIT_PASS


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--b", default="", help="Divisor multiplicities, comma-separated.")
@click.option("--box", default="20", show_default=True,
              help="Weight box rmax[,smax].")
@click.pass_obj
def sections(client, n, b, box):
    """Lattice points of the section space inside a weight box."""
    data = client.post("/sections", {"n": n, "b": parse_ints(b),
                                     "box": parse_ints(box, "box")})
    if client.fmt == "tsv":
        emit_tsv(data["monomials"])
    else:
        emit(data)
    return EXIT_PASS


@cli.command("abl-series")
@click.option("--n", type=int, required=True)
@click.option("--b", default="", help="Divisor multiplicities, comma-separated.")
@click.pass_obj
def abl_series(client, n, b):
    """Bigraded fixed-point series of the section space, as a rational function."""
    data = client.post("/abl-series", {"n": n, "b": parse_ints(b)})
    if client.fmt == "tsv":
        emit_tsv([["num", *t] for t in data["numerator"]]
                 + [["den", *t] for t in data["denominator"]])
    else:
        emit(data)
    return EXIT_PASS


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--b", default="")
@click.option("--window", type=int, default=12, show_default=True,
              help="Truncation level for the expansion.")
@click.pass_obj
def expand(client, n, b, window):
    """Truncated expansion of the fixed-point series."""
    data = client.post("/expand", {"n": n, "b": parse_ints(b), "level": window})
    if client.fmt == "tsv":
        emit_tsv(data["terms"])
    else:
        emit(data)
    return EXIT_PASS


def _k_payload(n, k):
    return parse_fractions(k, n - 1) if n > 1 else []


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--b", default="")
@click.option("--window", type=int, default=20, show_default=True,
              help="Expansion level to compare at.")
@click.pass_obj
def abl(client, n, b, window):
    """Verify: series expansion equals direct section enumeration."""
    rep = client.post("/abl", {"n": n, "b": parse_ints(b), "level": window})
    return render_report(client, rep)


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--k", default="0", show_default=True,
              help="Deformation parameter, comma-separated fractions.")
@click.option("--b", default="")
@click.option("--window", type=int, default=10, show_default=True,
              help="Derivative-order bound for the graded comparison.")
@click.pass_obj
def krs(client, n, k, b, window):
    """Verify: gr of the translation-route window matches shifted sections."""
    rep = client.post("/krs", {"n": n, "k": _k_payload(n, k),
                               "b": parse_ints(b), "order_bound": window})
    return render_report(client, rep)


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--k", default="0", show_default=True)
@click.option("--b", default="")
@click.option("--window", type=int, default=12, show_default=True,
              help="Top degree of the dimension table.")
@click.option("--order-bound", type=int, default=None,
              help="Override the derivative-order bound (stabilization knob).")
@click.pass_obj
def obar(client, n, k, b, window, order_bound):
    """Verify: quotient dimensions match the closed one-variable series."""
    rep = client.post("/obar", {"n": n, "k": _k_payload(n, k),
                                "b": parse_ints(b), "degree_bound": window,
                                "order_bound": order_bound})
    return render_report(client, rep)


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--k", default="0", show_default=True)
@click.option("--b", default="")
@click.option("--window", type=int, default=12, show_default=True)
@click.option("--order-bound", type=int, default=None,
              help="Override the derivative-order bound (stabilization knob).")
@click.pass_obj
def bteng(client, n, k, b, window, order_bound):
    """Verify: assembled standard-module series matches engine dimensions."""
    rep = client.post("/bteng", {"n": n, "k": _k_payload(n, k),
                                 "b": parse_ints(b), "degree_bound": window,
                                 "order_bound": order_bound})
    return render_report(client, rep)


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--k", default="0", show_default=True)
@click.option("--p", type=int, required=True, help="Translation step.")
@click.pass_obj
def morita(client, n, k, p):
    """Coprimality certificates for the step-p bimodule pair."""
    data = client.post("/morita", {"n": n, "k": _k_payload(n, k), "p": p})
    ok = data["condition1"]["ok"] and data["condition2"]["ok"]
    if client.fmt == "tsv":
        rows = [["condition1", data["condition1"]["ok"]],
                ["condition2", data["condition2"]["ok"]],
                ["dominant", data["dominant"]["ok"]]]
        emit_tsv(rows)
    else:
        emit(data)
    return EXIT_PASS if ok else EXIT_FAIL


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--k", default="0", show_default=True)
@click.pass_obj
def dominant(client, n, k):
    """Strict positivity of k + rho on the integrality subsystem."""
    rep = client.post("/dominant", {"n": n, "k": _k_payload(n, k)})
    return render_report(client, rep)


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--k", default="0", show_default=True)
@click.pass_obj
def hodges(client, n, k):
    """Generator presentation relations of the spherical subalgebra."""
    rep = client.post("/hodges", {"n": n, "k": _k_payload(n, k)})
    return render_report(client, rep)


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--k", default=None, help="Convert parameter to commutator weights.")
@click.option("--lam", default=None, help="Convert commutator weights to parameter.")
@click.pass_obj
def cbh(client, n, k, lam):
    """Exact dictionary between the parameter and trace-one commutator weights."""
    if (k is None) == (lam is None):
        raise click.ClickException("provide exactly one of --k or --lam")
    payload = {"n": n}
    if lam is not None:
        payload["lam"] = parse_fractions(lam, n, what="lam")
    else:
        payload["k"] = _k_payload(n, k)
    data = client.post("/cbh", payload)
    if client.fmt == "tsv":
        emit_tsv([["k", *data["k"]], ["lam", *data["lam"]],
                  ["trace", data["trace"]]])
    else:
        emit(data)
    return EXIT_PASS


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--k", default="0", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--triples", type=int, default=100, show_default=True,
              help="Random associativity triples.")
@click.pass_obj
def identities(client, n, k, seed, triples):
    """Full normal-form identity suite of the crossed-product engine."""
    rep = client.post("/identities", {"n": n, "k": _k_payload(n, k),
                                      "seed": seed, "triples": triples})
    return render_report(client, rep)


@cli.command("all")
@click.option("--n", type=int, required=True)
@click.option("--k", default="0", show_default=True)
@click.option("--window", type=int, default=12, show_default=True)
@click.option("--box", default="20", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_obj
def all_cmd(client, n, k, window, box, seed):
    """Run every verifier at one parameter point; reports as JSON lines."""
    data = client.post("/all", {"n": n, "k": _k_payload(n, k),
                                "window": window,
                                "box": parse_ints(box, "box"), "seed": seed})
    code = EXIT_PASS
    for rep in data["reports"]:
        status = render_report(client, rep)
        if status == EXIT_FAIL:
            code = EXIT_FAIL
        elif status == EXIT_INCONCLUSIVE and code == EXIT_PASS:
            code = EXIT_INCONCLUSIVE
    return code


@cli.command()
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_obj
def mutations(client, seed):
    """Run every verifier on its built-in broken input; all must fail."""
    data = client.post("/mutations", {"seed": seed})
    bad = [r for r in data["reports"]
           if r["outcome"] != "fail" or "witness" not in r]
    for rep in data["reports"]:
        render_report(client, rep)
    return EXIT_PASS if not bad else EXIT_FAIL


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8351, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .api import app
    uvicorn.run(app, host=host, port=port)
    return EXIT_PASS


def main(argv=None):
    """Console entry point with the documented exit-code contract."""
    try:
        rv = cli.main(args=argv, standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_USAGE)
    except click.exceptions.Abort:
        sys.exit(EXIT_USAGE)
    sys.exit(rv if isinstance(rv, int) else EXIT_PASS)


if __name__ == "__main__":
    main()
