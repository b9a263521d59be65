"""The ``bh`` command line: one subcommand per family of checks.

Exit status is 0 when every check passes, 1 when a check fails and 2 on
usage errors (bad arguments, q not a prime power, d not dividing q+1, ...).
"""

from __future__ import annotations

import argparse
import sys

from . import aut, cover, curve
from .errors import BHError, ExhaustionBoundExceeded, VerificationError
from .field import Field, make_field, prime_power
from .poly import AT_INFINITY
from .report import Report

SLOW_GATE = 32


class UsageError(Exception):
    pass


def _q(args) -> int:
    pp = prime_power(args.q)
    if pp.q > SLOW_GATE and not args.slow:
        raise UsageError(f"q = {pp.q} > {SLOW_GATE} needs --slow")
    return pp.q


def _host(args, q: int, k: int = 2) -> Field:
    pp = prime_power(q)
    return make_field(pp.p, pp.nu * k, args.modulus)


def _param(K: Field, text: str):
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return AT_INFINITY
    return K.parse(text).code


def modulus_text(K: Field) -> str:
    terms = []
    for i in reversed(range(len(K.modulus))):
        c = K.modulus[i]
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        coef = str(c) if (c != 1 or i == 0) else ""
        terms.append(coef + ("*" if coef and mono else "") + mono)
    return "+".join(terms)


def _fmt_param(K: Field, t) -> str:
    return "inf" if t is AT_INFINITY else K.format(t)


# -----------------------------------------------------------------------------
# subcommands
# -----------------------------------------------------------------------------


def cmd_curve(args, rep: Report) -> None:
    q = _q(args)
    K = _host(args, q)
    everything = not (args.verify or args.dual_conic or args.coxeter)
    F = curve.defining_form(q)
    if args.perturb:
        F = curve.perturbed_form(F)
    phi = curve.bh_parametrization(q, K)
    rep.artifacts["parametrization"] = "[" + " : ".join(c.format(("s", "t")) for c in phi.coords) + "]"
    rep.artifacts["defining_equation"] = F.format(("x0", "x1", "x2")) + " = 0"
    if args.verify or everything:
        rep.add("F(phi) == 0", curve.verify_on_curve(q, F), "exact polynomial identity")
    if args.dual_conic or everything:
        rep.add("dual conic", curve.dual_conic_check(q), "Gauss map factors through t -> t^q onto X0*X1 = X2^2")
    if args.coxeter or everything:
        rep.add("line model", curve.coxeter_model_check(q), "image of x0 + x1 + x2 = 0 under (q+1)-st powers")


def cmd_nodes(args, rep: Report) -> None:
    q = _q(args)
    K = _host(args, q)
    nds = curve.nodes(q, K)
    rep.artifacts["nodes"] = [str(nd) for nd in nds]
    rep.add("node count", len(nds) == (q * q - q) // 2, {"found": len(nds), "expected": (q * q - q) // 2})
    ordinary = all(nd.cone_factor != 0 and nd.params[0] != nd.params[1] for nd in nds)
    rep.add("ordinary nodes", ordinary, "tangent cone splits into two distinct branch tangents")
    if q <= 9:
        brute = sorted(curve.plane_singular_points(curve.defining_form(q, K)), key=lambda p: p.coords)
        rep.add("exhaustive singular locus", brute == [nd.point for nd in nds], {"points": len(brute)})


def cmd_tangent(args, rep: Report) -> None:
    q = _q(args)
    if args.exhaustive:
        for k in args.k or (3, 4):
            r = curve.tangent_trichotomy(q, k)
            rep.add(f"trichotomy over F_{q}^{k}", r.ok, {"counts": r.counts, "failures": len(r.failures)})
        return
    k = (args.k or [2])[0]
    K = _host(args, q, k)
    t = _param(K, args.t or "0")
    line = curve.tangent_line(t, q, K)
    rep.artifacts["line"] = str(line)
    rep.add("closed form", line == curve.tangent_line_formula(t, q, K), "x0*t^(2q) + x1 - t^q*x2")
    meet = curve.line_meet_curve(line, q, K)
    rep.artifacts["meet"] = [
        {"point": str(m.point), "multiplicity": m.multiplicity, "branches": [[_fmt_param(K, u), o] for u, o in m.branches]}
        for m in meet
    ]
    rep.add("total multiplicity", sum(m.multiplicity for m in meet) == q + 1, {"q+1": q + 1})


def cmd_aut(args, rep: Report) -> None:
    q = _q(args)
    K = _host(args, q)
    if args.corrupt_lift:
        sample = aut.sample_elements(q, args.samples, args.seed, K)
        ok = all(aut.equivariance_check(g, aut.corrupt_lift(g), q) for g in sample)
        rep.add("corrupted lift equivariant", ok, {"samples": len(sample), "seed": args.seed})
        return
    try:
        r = aut.group_audit(q, field=K)
    except ExhaustionBoundExceeded:
        sample = aut.sample_elements(q, args.samples, args.seed, K)
        rep.add("equivariant (sampled)", all(aut.equivariance_check(g, None, q) for g in sample), {"samples": len(sample), "seed": args.seed})
        rep.add("preserves curve (sampled)", all(aut.preserves_curve_check(aut.lift(g), q) for g in sample))
        return
    rep.add("group order", r.order == r.expected_order, {"order": r.order, "expected": r.expected_order})
    rep.add("lift injective", r.injective)
    rep.add("homomorphism", r.homomorphism, {"pairs": r.pairs_checked})
    rep.add("equivariant", r.equivariant)
    rep.add("preserves curve", r.preserves_curve)
    rep.add("permutes inflections", r.permutes_inflections)
    rep.add("permutes nodes", r.permutes_nodes)


def cmd_cover(args, rep: Report) -> None:
    q = _q(args)
    K = _host(args, q)
    cv = cover.build_cover(q, args.d, K)
    rep.artifacts["equation"] = cv.equation_text()
    rep.artifacts["singular_points"] = [f"{s.text(K)} {s.label}" for s in cv.singular_points]
    rep.add("singular point count", len(cv.singular_points) == (q * q - q) // 2, {"type": f"A_{args.d - 1}"})
    rep.add("local normal form", cover.local_normal_form_check(cv))
    pr = cover.projection_degree_check(q)
    rep.add(
        "projection degree",
        pr.ok,
        {"degree": pr.degree, "separable": pr.separable_degree, "inseparable": pr.inseparable_degree, "discriminant": pr.discriminant},
    )
    rep.add("sections on tangent line", cover.sections_on_line_check(q))
    rep.add("sections meet over F_q^2", cover.sections_meet_over_fq2(q))
    ok, orders = cover.pullback_orders_check(q, samples=args.samples, seed=args.seed)
    rep.add("pullback orders", ok, {"orders": orders, "seed": args.seed})


def cmd_unirational(args, rep: Report) -> None:
    q = _q(args)
    sign = -1 if args.flip_sign else 1
    r = cover.unirationality_check(q, args.d, sign)
    rep.add("cover equation", r.cover_equation, {"sign": sign})
    rep.add("telescoping", r.telescoping)
    rep.add("second factor", r.second_factor)
    rep.add("point on tangent line", r.on_line)


def cmd_split(args, rep: Report) -> None:
    q = _q(args)
    K = _host(args, q)
    params = [_param(K, args.t)] if args.t else list(range(K.order)) + [AT_INFINITY]
    counts = {}
    bad = []
    for t in params:
        try:
            r = cover.fiber_splitting_check(t, q, args.d, K)
        except VerificationError:
            bad.append(_fmt_param(K, t))
            continue
        if not r.ok:
            bad.append(_fmt_param(K, t))
        counts[r.components] = counts.get(r.components, 0) + 1
    rep.add("restriction is c0 * l^(q+1)", not bad, {"params": len(params), "failed": bad})
    rep.add("splits into d components", set(counts) == {args.d}, {str(k): v for k, v in sorted(counts.items())})


def cmd_k3(args, rep: Report) -> None:
    from .lattice import QUARTIC_GRAM, SEXTIC_GRAM, gram_assemble, lattice_invariants, quartic_config, sextic_config

    if args.case == "quartic":
        p, table, want_det = 3, QUARTIC_GRAM, -9
        K = make_field(3, 2, args.modulus)
        cfg = quartic_config(K)
    else:
        p, table, want_det = 5, SEXTIC_GRAM, -25
        K = make_field(5, 2, args.modulus if args.modulus else "x^2-2")
        cfg = sextic_config(K)
    G = gram_assemble(cfg, args.mode)
    rep.params["modulus"] = modulus_text(K)
    rep.artifacts["labels"] = list(G.labels)
    rep.artifacts["gram"] = G.rows
    rep.artifacts["table"] = G.to_text()
    rep.add("entries certified", G.complete, {"missing": sum(x is None for r in G.rows for x in r)})
    if not G.complete:
        return
    sym = all(G.rows[i][j] == G.rows[j][i] for i in range(len(G.rows)) for j in range(len(G.rows)))
    rep.add("symmetric, diagonal -2", sym and all(G.rows[i][i] == -2 for i in range(len(G.rows))))
    if args.mode == "computed":
        diff = [[G.labels[i], G.labels[j]] for i in range(22) for j in range(i + 1, 22) if G.rows[i][j] != table[i][j]]
        rep.add("matches reference table", not diff, {"mismatches": diff})
    inv = lattice_invariants(G, p)
    rep.add("determinant", inv.determinant == want_det, {"det": inv.determinant})
    rep.add("Artin invariant", inv.artin_sigma == 1, {"sigma": inv.artin_sigma})
    rep.add("signature", inv.signature == (1, 21), {"signature": list(inv.signature)})


# -----------------------------------------------------------------------------
# parser and entry point
# -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--modulus", default=None, help="irreducible polynomial in x for the host field, e.g. x^2+1")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--slow", action="store_true", help=f"allow q > {SLOW_GATE}")

    ap = argparse.ArgumentParser(prog="bh", description="Exact checks for Ballico-Hefez curves and their cyclic covers.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=fn)
        return sp

    sp = add("curve", cmd_curve, "parametrization, defining equation, identities")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--dual-conic", action="store_true")
    sp.add_argument("--coxeter", action="store_true")
    sp.add_argument("--perturb", action="store_true", help="mutation: perturb one coefficient of F")

    sp = add("nodes", cmd_nodes, "singular points of the curve")
    sp.add_argument("--q", type=int, required=True)

    sp = add("tangent", cmd_tangent, "tangent lines and how they meet the curve")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", default=None, help="parameter in F_{q^k}, e.g. 2*a+1, or inf")
    sp.add_argument("--k", type=int, action="append", help="extension degree (repeatable with --exhaustive)")
    sp.add_argument("--exhaustive", action="store_true")

    sp = add("aut", cmd_aut, "PGL_2(F_q) acting on the curve")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--samples", type=int, default=500, help="sample size when q is beyond the exhaustive bound")
    sp.add_argument("--corrupt-lift", action="store_true", help="mutation: corrupt one lift entry")

    sp = add("cover", cmd_cover, "the cyclic cover w^d = F")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--samples", type=int, default=8)

    sp = add("unirational", cmd_unirational, "the explicit rational parametrization of the cover")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--flip-sign", action="store_true", help="mutation: flip a sign in the y formula")

    sp = add("split", cmd_split, "splitting of the cover over tangent lines")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--t", default=None)

    sp = add("k3", cmd_k3, "Gram matrices of the two K3 configurations")
    sp.add_argument("--case", choices=("quartic", "sextic"), required=True)
    sp.add_argument("--mode", choices=("computed", "table_replay"), default="computed")
    return ap


def _params(args) -> dict:
    skip = {"func", "command", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v not in (None, False)}


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    rep = Report(args.command, _params(args))
    try:
        args.func(args, rep)
    except VerificationError as exc:
        rep.add("verification", False, str(exc))
    except (UsageError, BHError, ValueError) as exc:
        print(f"bh: error: {exc}", file=sys.stderr)
        return 2
    out.write((rep.to_json() if args.format == "json" else rep.to_text()) + "\n")
    return 0 if rep.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
