"""Command-line interface: ``amitsur <command> ...``.

Exit codes: 0 success, 2 usage or input error, 3 internal-consistency failure.
JSON reports carry ``"schema": "amitsur-kit/1"`` and are byte-stable for
identical inputs (timing is only included with ``--timing``).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .algebra import (
    build,
    center_probe,
    division_sample,
    preset,
    verify_dicyclic_embedding,
    verify_group_embedding,
)
from .classify import NOT_AMITSUR, classify_presentation, exceptional_orders, scan_odd_orders
from .cyclotomic import field
from .errors import AmitsurError, InternalConsistencyError, OrderTooLarge
from .groupring import verify_eq_3_4
from .groups import DESK_BOUND, validate

SCHEMA = "amitsur-kit/1"
INPUT_LIMIT = 10**9

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class InputError(Exception):
    pass


def _bound(args) -> int:
    if args.unsafe_max is not None:
        print(
            f"warning: desk bound raised to {args.unsafe_max}; brute-force isomorphism tests may be slow",
            file=sys.stderr,
        )
        return args.unsafe_max
    return DESK_BOUND


def _presentation(args):
    for name in ("m", "n"):
        v = getattr(args, name)
        if not 1 <= v <= INPUT_LIMIT:
            raise InputError(f"{name} must be in [1, {INPUT_LIMIT}], got {v}")
    if abs(args.r) > INPUT_LIMIT:
        raise InputError(f"|r| must be at most {INPUT_LIMIT}")
    G = validate(args.m, args.n, args.r)
    bound = _bound(args)
    if G.order > bound:
        raise OrderTooLarge(f"|G| = {G.order} exceeds the desk bound {bound} (use --unsafe-max)")
    return G


def report(command: str, inputs: dict, results: dict) -> dict:
    return {"schema": SCHEMA, "version": __version__, "command": command, "inputs": inputs, "results": results}


def cmd_check_group(args) -> dict:
    G = _presentation(args)
    verdict = classify_presentation(G)
    results = {"presentation": list(G.triple), "order": G.order, "verdict": verdict.to_dict()}
    if any(name == "Thm3.1" and outcome == NOT_AMITSUR for name, outcome in verdict.trace):
        results["certificate"] = verify_eq_3_4(G).to_dict()
    return report("check-group", {"m": args.m, "n": args.n, "r": args.r}, results)


def cmd_scan_odd(args) -> dict:
    bound = _bound(args)
    if args.max > bound:
        raise OrderTooLarge(f"--max {args.max} exceeds the desk bound {bound} (use --unsafe-max)")
    reports = scan_odd_orders(args.max, include_even=args.include_even, short_circuit=not args.full, jobs=args.jobs, bound=bound)
    results = {"exceptional": exceptional_orders(reports), "orders": [r.to_dict() for r in reports]}
    inputs = {"max": args.max, "include_even": args.include_even, "full": args.full}
    return report("scan-odd", inputs, results)


def cmd_verify_identity(args) -> dict:
    G = _presentation(args)
    if G.n < 2:
        raise InputError("verify-identity needs n >= 2")
    cert = verify_eq_3_4(G)
    if not cert.equal:
        raise InternalConsistencyError("telescoped element differs from the ordered product")
    return report("verify-identity", {"m": args.m, "n": args.n, "r": args.r}, cert.to_dict(verbose=args.verbose))


def cmd_build_algebra(args) -> dict:
    if args.preset:
        P = preset(args.preset)
        K = P.algebra
        inputs = {"preset": args.preset}
    else:
        if args.k is None or args.s is None or args.omega_exp is None:
            raise InputError("give --preset, or all of --k, --s and --omega-exp")
        omega = field(args.k).zeta(args.omega_exp)
        K = build(args.k, args.s, omega)
        P = None
        inputs = {"k": args.k, "s": args.s, "omega_exp": args.omega_exp, "a_exp": args.a_exp}
    results = {
        "k": K.k,
        "s": K.s,
        "omega": str(K.omega),
        "degree": K.degree,
        "dim_Q": K.dim_Q,
        "center": center_probe(K).to_dict(),
    }
    if P is not None and P.dicyclic_n is not None:
        results["embedding"] = verify_dicyclic_embedding(K, P.generators["x"], P.generators["y"], P.dicyclic_n).to_dict()
    elif P is not None:
        results["embedding"] = verify_group_embedding(K, P.generators["a"], P.generators["b"], P.expected).to_dict()
    elif args.a_exp is not None:
        results["embedding"] = verify_group_embedding(K, K.zeta(args.a_exp), K.b).to_dict()
    if args.sample:
        inputs.update(sample=args.sample, height=args.height, seed=args.seed)
        results["sampling"] = division_sample(K, args.sample, args.height, args.seed).to_dict()
    return report("build-algebra", inputs, results)


# -- text rendering -------------------------------------------------------------


def _text_check(rep):
    res = rep["results"]
    v = res["verdict"]
    m, n, r = res["presentation"]
    lines = [f"G({m},{n},{r})  order {res['order']}"]
    status = f" / {v['known_status']}" if v["known_status"] else ""
    rule = f" via {v['rule']}" if v["rule"] else ""
    lines.append(f"verdict: {v['outcome']}{rule}{status}")
    if v["outcome"] == "Candidate":
        lines.append("  (no obstruction found; this is not a proof of embeddability)")
    if v["witness"]:
        lines.append("witness: " + ", ".join(f"{k}={val}" for k, val in v["witness"].items()))
    lines.append("rule trace:")
    for name, outcome in v["trace"]:
        lines.append(f"  {name:<7} {outcome or '-'}")
    if "certificate" in res:
        c = res["certificate"]
        lines.append(f"group-ring certificate: product {c['product']}  (nonzero: {not c['product_is_zero']})")
    return "\n".join(lines)


def _text_scan(rep):
    res = rep["results"]
    lines = [f"{'order':>6}  {'status':<12} detail"]
    for o in res["orders"]:
        if o["order_verdict"] is not None and not o["classes"]:
            ov = o["order_verdict"]
            lines.append(f"{o['order']:>6}  {'cyclic':<12} forced by {ov['rule']}")
            continue
        status = "EXCEPTIONAL" if o["exceptional"] else "cyclic"
        detail = "; ".join(
            "G({},{},{}) {}{}".format(
                *c["presentation"],
                c["verdict"]["outcome"],
                f" [{c['verdict']['rule']}]" if c["verdict"]["rule"] else "",
            )
            for c in o["classes"]
        )
        lines.append(f"{o['order']:>6}  {status:<12} {detail}")
    exc = ", ".join(str(e) for e in res["exceptional"]) or "none"
    lines.append(f"exceptional: {exc}")
    return "\n".join(lines)


def _text_identity(rep):
    res = rep["results"]
    m, n, r = res["presentation"]
    lines = [f"G({m},{n},{r}): {res['steps']} telescoping steps, o(r) = {res['order_of_r']}"]
    if "snapshots" in res:
        for i, snap in enumerate(res["snapshots"]):
            lines.append(f"  step {i}: {snap}")
    lines.append(f"terminal = ordered product: {res['equal']}")
    lines.append(f"product: {res['product']}")
    lines.append(f"{'i':>4} {'r^i-1 mod m':>12}  vanishes")
    for f in res["factors"]:
        lines.append(f"{f['i']:>4} {f['exponent']:>12}  {'yes' if f['vanishes'] else 'no'}")
    lines.append(res["explanation"])
    return "\n".join(lines)


def _text_algebra(rep):
    res = rep["results"]
    c = res["center"]
    lines = [
        f"cyclic algebra over Q(zeta_{res['k']}), sigma: zeta -> zeta^{res['s']}, b^{res['degree']} = {res['omega']}",
        f"degree {res['degree']}, dim_Q = {res['dim_Q']}",
        f"center: dim_Q {c['fixed_basis_dim']} (expected {c['dim_Q']}, commutant kernel {c['kernel_dim']})",
    ]
    for q in c["quadratic_elements"]:
        lines.append(f"  central element with minimal polynomial {q['min_poly']}")
    if "embedding" in res:
        e = res["embedding"]
        lines.append(f"embedded group: order {e['group_order']}, cyclic: {e['is_cyclic']}")
        for rel, ok in e["relations"].items():
            lines.append(f"  {rel}: {'ok' if ok else 'FAILED'}")
        if e.get("expected"):
            lines.append("  isomorphic to G({},{},{}): {}".format(*e["expected"], e["isomorphic"]))
    if "sampling" in res:
        s = res["sampling"]
        lines.append(
            f"sampling: {s['trials']} trials, height {s['height']}, seed {s['seed']}: "
            f"{s['invertible']} invertible, {s['singular_count']} singular"
        )
    return "\n".join(lines)


COMMANDS = {
    "check-group": (cmd_check_group, _text_check),
    "scan-odd": (cmd_scan_odd, _text_scan),
    "verify-identity": (cmd_verify_identity, _text_identity),
    "build-algebra": (cmd_build_algebra, _text_algebra),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="amitsur", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report on stdout")
    common.add_argument("--timing", action="store_true", help="include elapsed time")
    common.add_argument("--unsafe-max", type=int, default=None, metavar="N", help="raise the desk bound on orders")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-group", parents=[common], help="classify G(m,n,r)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("scan-odd", parents=[common], help="scan odd orders below --max")
    p.add_argument("--max", type=int, default=171)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--include-even", action="store_true", help="scan all orders not divisible by 8")
    p.add_argument("--full", action="store_true", help="enumerate even where an order-level rule decides")

    p = sub.add_parser("verify-identity", parents=[common], help="telescoping identity certificate")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--verbose", action="store_true", help="show every telescoped element")

    p = sub.add_parser("build-algebra", parents=[common], help="construct a cyclic algebra")
    p.add_argument("--preset", help="63, 117, split-63 or quaternion-N")
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--omega-exp", type=int, help="twist omega = zeta^e")
    p.add_argument("--a-exp", type=int, help="embed <zeta^e, b> (custom algebras)")
    p.add_argument("--sample", type=int, default=0, metavar="T")
    p.add_argument("--height", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    run, render = COMMANDS[args.command]
    start = time.perf_counter()
    try:
        rep = run(args)
    except (InternalConsistencyError, AssertionError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, AmitsurError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    elapsed = time.perf_counter() - start
    if args.timing:
        rep["elapsed_s"] = round(elapsed, 6)
    if args.json:
        print(json.dumps(rep, indent=2, sort_keys=True))
    else:
        print(render(rep))
        if args.timing:
            print(f"elapsed: {elapsed:.3f} s")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
