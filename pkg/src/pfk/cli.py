"""Command-line entry point: ``pfk check|find|deficiency|lambda|gen|verify|selftest``.

Exit codes: 0 exists / success, 4 does not exist (or defects found),
2 usage error, 3 I/O, format or enumeration-cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from importlib import resources
from pathlib import Path

from .connectivity import edge_connectivity
from .criteria import (
    CapExceeded,
    DegreeSpec,
    InvalidSpec,
    delta_cap,
    delta_certificate,
    eta_certificate,
    lovasz_cap,
    lovasz_exists,
    max_delta,
    max_eta,
    min_parity_exists,
    search_delta_certificate,
    set_of,
)
from .factor import cap_f, find_min_parity_factor, find_parity_factor, verify_factor
from .generators import named_graph, random_k_edge_connected, remark1_family
from .graph import Graph, GraphError, read_graph
from .harness import CampaignConfig, ConfigError, parse_config, run_campaign

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_NO = 0, 2, 3, 4


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


# -- spec sources ------------------------------------------------------------


def parse_spec_file(text: str, n: int, need_f: bool) -> tuple[list[int], list[int] | None]:
    """``v g f`` lines (``v g`` when f is unbounded); every vertex exactly once."""
    g: list[int | None] = [None] * n
    f: list[int | None] = [None] * n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != (3 if need_f else 2):
            want = "v g f" if need_f else "v g"
            raise InputError(f"spec line {lineno}: expected '{want}', got {raw.strip()!r}")
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise InputError(f"spec line {lineno}: non-integer field in {raw.strip()!r}") from None
        v = nums[0]
        if not 0 <= v < n:
            raise InputError(f"spec line {lineno}: vertex {v} outside 0..{n - 1}")
        if g[v] is not None:
            raise InputError(f"spec line {lineno}: vertex {v} listed twice")
        g[v] = nums[1]
        if need_f:
            f[v] = nums[2]
    missing = [v for v in range(n) if g[v] is None]
    if missing:
        raise InputError(f"spec file misses vertices {missing[:10]}")
    return g, (f if need_f else None)  # type: ignore[return-value]


def resolve_spec(args: argparse.Namespace, graph: Graph) -> tuple[list[int], DegreeSpec | None]:
    """Lower bounds g, plus an explicit (g,f) spec when f was given."""
    sources = [s for s in ("even", "odd", "g_const", "g_file", "gf_file") if getattr(args, s, None) is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --even, --odd, --g-const, --g-file, --gf-file")
    src = sources[0]
    if src in ("even", "odd", "g_const"):
        m = getattr(args, src)
        if m < 0 or (src == "even" and m % 2) or (src == "odd" and m % 2 == 0):
            raise UsageError(f"--{src.replace('_', '-')} {m}: value has the wrong parity or sign")
        if src != "g_const" and m == 0:
            raise UsageError(f"--{src} needs a positive value")
        return [m] * graph.n, None
    text = _read(getattr(args, src))
    g, f = parse_spec_file(text, graph.n, need_f=src == "gf_file")
    if f is None:
        return g, None
    spec = DegreeSpec(tuple(g), tuple(f))
    bad = spec.violations()
    if bad:
        raise InputError("invalid degree spec: " + "; ".join(bad))
    return g, spec


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_graph(path: str) -> Graph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(args: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print("\n".join(text_lines))


def _cert_lines(cert_dict: dict, label: str) -> list[str]:
    lines = []
    if cert_dict["S"]:
        lines.append("certificate S: " + " ".join(map(str, cert_dict["S"])))
    lines.append("certificate T: " + " ".join(map(str, cert_dict["T"])))
    lines.append(f"{label}: {cert_dict['value']}")
    lines.append(f"odd components: {len(cert_dict['odd_components'])}")
    lines.extend("  " + " ".join(map(str, c)) for c in cert_dict["odd_components"])
    return lines


# -- commands ----------------------------------------------------------------


def _decide(graph: Graph, g: list[int], spec: DegreeSpec | None) -> dict:
    """Existence verdict plus certificate payload shared by check and find."""
    if spec is not None:
        if graph.n <= lovasz_cap():
            verdict = lovasz_exists(graph, spec)
            cert = verdict.certificate.as_dict() if verdict.certificate else None
            return {"exists": verdict.exists, "criterion": "lovasz", "certificate": cert, "certificate_exact": True}
        exists = find_parity_factor(graph, spec) is not None
        return {"exists": exists, "criterion": "gadget-matching", "certificate": None, "certificate_exact": False}
    if graph.n <= delta_cap():
        verdict = min_parity_exists(graph, g)
        cert = verdict.certificate.as_dict() if verdict.certificate else None
        return {"exists": verdict.exists, "criterion": "min-degree-parity", "certificate": cert, "certificate_exact": True}
    capped = cap_f(graph, g)
    exists = capped is not None and find_parity_factor(graph, capped) is not None
    cert = None
    if not exists:
        found = search_delta_certificate(graph, g)
        cert = found.as_dict() if found else None
    return {"exists": exists, "criterion": "gadget-matching", "certificate": cert, "certificate_exact": False}


def cmd_check(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    g, spec = resolve_spec(args, graph)
    result = _decide(graph, g, spec)
    lines = [f"exists: {'yes' if result['exists'] else 'no'}", f"criterion: {result['criterion']}"]
    if result["certificate"]:
        label = "eta" if result["criterion"] == "lovasz" else "delta"
        lines += _cert_lines(result["certificate"], label)
        if not result["certificate_exact"]:
            lines.append("note: certificate from restricted search; not necessarily the maximum")
    elif not result["exists"]:
        lines.append("note: no certificate found within the enumeration cap")
    _emit(args, result, lines)
    return EXIT_OK if result["exists"] else EXIT_NO


def cmd_find(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    g, spec = resolve_spec(args, graph)
    if spec is None:
        spec = cap_f(graph, g)
        factor = find_min_parity_factor(graph, g) if spec is not None else None
    else:
        factor = find_parity_factor(graph, spec)
    if factor is None:
        _emit(args, {"exists": False, "edges": [], "degrees": []}, ["exists: no"])
        return EXIT_NO
    bad = verify_factor(graph, factor.edges, spec)
    if bad:
        raise AssertionError(f"factor failed verification: {bad}")
    _emit(args, factor.as_dict(), [f"{u} {v}" for u, v in factor.edges])
    return EXIT_OK


def cmd_deficiency(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    g, spec = resolve_spec(args, graph)
    if args.full_lovasz:
        if spec is None:
            spec = cap_f(graph, g)
            if spec is None:
                raise InputError("some vertex has degree below its lower bound; give --gf-file for --full-lovasz")
        value, S, T = max_eta(graph, spec)
        cert = eta_certificate(graph, set_of(S), set_of(T), spec)
        label = "max eta"
    else:
        value, T = max_delta(graph, g)
        cert = delta_certificate(graph, set_of(T), g)
        label = "max delta"
    assert cert.value == value
    payload = {"max": value, "criterion": "lovasz" if args.full_lovasz else "min-degree-parity"} | cert.as_dict()
    lines = [f"{label}: {value}"] + _cert_lines(cert.as_dict(), "value")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_lambda(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    if graph.n < 2:
        raise InputError("edge connectivity needs at least two vertices")
    lam, cert = edge_connectivity(graph)
    side = sorted(cert.side)
    _emit(args, {"lambda": lam, "side": side}, [f"lambda: {lam}", "side: " + " ".join(map(str, side))])
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.family == "remark1":
            inst = remark1_family(args.m)
            graph = inst.graph
            comment = f"remark1 m={args.m}; hubs {' '.join(map(str, sorted(inst.hubs)))}"
        elif args.family == "random":
            graph = random_k_edge_connected(args.n, args.k, args.seed, min_degree=args.min_degree)
            comment = f"random n={args.n} k={args.k} seed={args.seed}"
        else:
            graph = named_graph(args.name, args.param)
            comment = args.name if args.param is None else f"{args.name} {args.param}"
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = graph.to_text(comment)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


BUNDLED = ("even-m2", "even-m4", "odd-m1", "odd-m3", "tightness")


def load_campaign_config(ref: str):
    path = Path(ref)
    if path.exists():
        return parse_config(path.read_text())
    if ref in BUNDLED:
        return parse_config(resources.files("pfk.campaigns").joinpath(f"{ref}.cfg").read_text())
    raise InputError(f"no campaign config {ref!r} (bundled: {', '.join(BUNDLED)})")


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        cfg = load_campaign_config(args.config)
        overrides = {k: v for k, v in (kv.split("=", 1) for kv in args.set)} if args.set else {}
        if overrides:
            merged = {k: " ".join(map(str, v)) if isinstance(v, tuple) else str(v)
                      for k, v in asdict(cfg).items() if v is not None}
            merged.update(overrides)
            cfg = CampaignConfig.from_mapping(merged)
    except (ConfigError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    summary = run_campaign(cfg)
    if args.json:
        print(json.dumps(summary.as_dict()))
    else:
        print(summary.table())
    return EXIT_OK if summary.defects == 0 else EXIT_NO


def cmd_selftest(args: argparse.Namespace) -> int:
    from .selftest import run_selftest

    disagreements = run_selftest(max_n=args.max_n, specs_per_graph=args.specs, seed=args.seed)
    for line in disagreements[:20]:
        print(line)
    print(f"selftest: {len(disagreements)} disagreement(s)")
    return EXIT_OK if not disagreements else EXIT_NO


# -- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2 itself; keep one path
        raise UsageError(message)


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="graph file: 'n m' header then m lines 'u v'")
    p.add_argument("--even", type=int, metavar="M", help="even factor with every degree >= M")
    p.add_argument("--odd", type=int, metavar="M", help="odd factor with every degree >= M")
    p.add_argument("--g-const", type=int, metavar="M", help="g = M everywhere, f unbounded")
    p.add_argument("--g-file", metavar="PATH", help="'v g' lines, f unbounded")
    p.add_argument("--gf-file", metavar="PATH", help="'v g f' lines")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pfk", description="Parity factor toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="decide existence and print a certificate")
    _add_spec_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("find", help="construct a factor")
    _add_spec_flags(p)
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("deficiency", help="maximum deficiency and its maximizer")
    _add_spec_flags(p)
    p.add_argument("--full-lovasz", action="store_true", help="maximize eta(S,T) over disjoint pairs (3^n)")
    p.set_defaults(func=cmd_deficiency)

    p = sub.add_parser("lambda", help="edge connectivity and a minimum cut shore")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("gen", help="emit a generated graph")
    gsub = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    q = gsub.add_parser("remark1")
    q.add_argument("--m", type=int, required=True)
    q = gsub.add_parser("random")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--min-degree", type=int)
    q = gsub.add_parser("named")
    q.add_argument("name", help="petersen, complete, cycle, path or star")
    q.add_argument("param", type=int, nargs="?")
    for q in gsub.choices.values():
        q.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("config", help=f"key=value file or bundled name ({', '.join(BUNDLED)})")
    p.add_argument("--set", action="append", metavar="KEY=VALUE", help="override a config key")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="small-n oracle equivalence checks")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--specs", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"pfk: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, CapExceeded, InvalidSpec, GraphError) as exc:
        print(f"pfk: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
