"""Command line interface: ``arthur-lift <subcommand> ...``.

Output is JSON unless ``--human`` is given.  Exit status is 0 on success or
a true answer, 1 on a false answer or a mathematical violation, 2 on usage
and input-format errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import lifting as lf
from .ajpackets import WeightVector, lowest_weight_test, member_character, packet_members, smo_exception, to_adams_johnson
from .errors import ArthurLiftError, DataFormatError
from .lfunctions.data import fixture_path, load_eigenform_data, load_parameter, read_json
from .lfunctions.satake import satake_of_parameter, symbolic_std_factor, verify_factorization
from .params import component_group, epsilon_adjoint, epsilon_direct, localize_infinity, validate

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _resolve(path: str) -> Path:
    """A path on disk, or the name of a shipped fixture."""
    p = Path(path)
    if p.exists():
        return p
    q = fixture_path(path if path.endswith(".json") else path + ".json")
    if q.exists():
        return q
    raise DataFormatError("no such file or shipped fixture", path)


def _emit(args, payload: dict, human: str) -> None:
    if args.human:
        print(human)
    else:
        print(json.dumps(payload, indent=2, ensure_ascii=False))


def _bits(s) -> str:
    return "".join(map(str, s))


# -- subcommands ---------------------------------------------------------------------


def cmd_validate(args) -> int:
    psi, _ = load_parameter(_resolve(args.param))
    bad = validate(psi)
    text = f"{psi}: " + ("valid" if not bad else "\n  " + "\n  ".join(bad))
    _emit(args, {"parameter": str(psi), "ok": not bad, "violations": bad}, text)
    return EXIT_OK if not bad else EXIT_FALSE


def cmd_epsilon(args) -> int:
    psi, _ = load_parameter(_resolve(args.param))
    bad = validate(psi)
    if bad:
        _emit(args, {"ok": False, "violations": bad}, "invalid parameter:\n  " + "\n  ".join(bad))
        return EXIT_FALSE
    A = component_group(psi)
    direct = epsilon_direct(psi) if args.method in ("direct", "both") else None
    rows, agree = [], True
    for s in A.elements():
        row: dict[str, Any] = {"element": _bits(s)}
        if direct is not None:
            row["direct"] = direct(s)
        if args.method in ("adjoint", "both"):
            row["adjoint"] = epsilon_adjoint(psi, s)
        if args.method == "both":
            row["agree"] = row["direct"] == row["adjoint"]
            agree &= row["agree"]
        rows.append(row)
    payload = {"parameter": str(psi), "basis": list(A.basis), "method": args.method, "table": rows}
    if args.method == "both":
        payload["agree"] = agree
    lines = [f"{psi}", "  basis: " + ", ".join(A.basis)]
    for r in rows:
        vals = "  ".join(f"{k}={r[k]:+d}" for k in ("direct", "adjoint") if k in r)
        lines.append(f"  {r['element']}: {vals}")
    if args.method == "both":
        lines.append("  methods agree" if agree else "  METHODS DISAGREE")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if agree else EXIT_FALSE


def cmd_packet(args) -> int:
    psi, k = load_parameter(_resolve(args.param))
    if args.k is not None:
        k = args.k
    local = localize_infinity(psi)
    aj = to_adams_johnson(local, psi.n)
    members = []
    for w in packet_members(aj):
        members.append({"signature": [list(x) for x in w.signature], "character": list(member_character(aj, w))})
    payload = {"parameter": str(psi), "adams_johnson": aj.to_json(), "size": len(members), "members": members}
    lines = [f"{aj}  ({len(members)} members)"]
    lines += [f"  {m['signature']}: {m['character']}" for m in members]
    if k is not None:
        lw = lowest_weight_test(aj, WeightVector(k))
        payload["lowest_weight"] = {
            "k": list(k),
            "member": lw.member,
            "character": list(lw.character) if lw.character else None,
            "reason": lw.reason,
        }
        lines.append(f"  L(V_{tuple(k)}): " + (f"member, character {list(lw.character)}" if lw else f"not a member ({lw.reason})"))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _source(args):
    if args.g_weight is not None and args.g_siegel is not None:
        raise UsageError("give at most one of --g-weight and --g-siegel")
    if args.g_weight is not None:
        return lf.elliptic_source(args.g_weight)
    if args.g_siegel is not None:
        return lf.siegel2_general_source(*args.g_siegel)
    return lf.trivial_source()


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(f"lift --mode {args.mode} needs {flags}")


def build_lift_spec(args) -> lf.LiftSpec:
    mode = args.mode
    if mode in ("miyawaki1", "miyawaki2"):
        _need(args, "k")
        return lf.named_instance(mode, k=args.k)
    if mode == "ikeda":
        _need(args, "fweight", "d")
        return lf.named_instance(mode, fweight=args.fweight, d=args.d)
    if mode in ("ibukiyama1", "ibukiyama2"):
        _need(args, "n0", "m")
        return lf.named_instance(mode, n0=args.n0, m=args.m)
    g, kg = _source(args)
    if mode in ("a", "general"):
        _need(args, "fweight", "d")
        f = lf.elliptic_eigenform(args.fweight)
        return lf.LiftSpec(lf.MODE_A if mode == "a" else lf.MODE_GENERAL, g, kg, f, args.d, args.fweight // 2)
    _need(args, "k", "j", "d")
    hecke = load_eigenform_data(_resolve(args.f)) if args.f else None
    f = lf.siegel2_datum(args.k, args.j, hecke.name if hecke else "f", hecke)
    return lf.LiftSpec(lf.MODE_B, g, kg, f, args.d, args.k, args.j)


def cmd_lift(args) -> int:
    spec = build_lift_spec(args)
    res = lf.evaluate_lift(spec)
    payload = res.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    text = (
        f"{spec.name or spec.mode}: psi = {res.psi}\n"
        f"  k' = {res.k_prime}, automorphic = {res.automorphic} (m = {res.m})\n"
        f"  L(s,F,std) = {res.factorization}"
    )
    _emit(args, payload, text)
    return EXIT_OK if res.automorphic else EXIT_FALSE


def cmd_euler(args) -> int:
    psi, _ = load_parameter(_resolve(args.param))
    c = satake_of_parameter(psi, args.prime)
    fac = symbolic_std_factor(c)
    payload = {"parameter": str(psi), "satake": c.to_json(), "factor": fac.to_json(), "symbolic": bool(fac.symbols())}
    if fac.symbols():
        text = f"{psi} at p={args.prime}: symbolic in {sorted(fac.symbols())}"
    else:
        text = f"{psi} at p={args.prime}: {fac.to_numeric()}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    obj = read_json(_resolve(args.lift))
    try:
        res = lf.LiftResult.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise DataFormatError(f"not a lift result: missing {exc}", args.lift) from None
    f_data = load_eigenform_data(_resolve(args.f)) if args.f else None
    chk = verify_factorization(res, f_data, None, args.prime)
    payload = chk.to_json()
    text = f"p={args.prime}: " + ("identity holds" if chk else f"MISMATCH at X^{chk.difference[0]}")
    _emit(args, payload, text)
    return EXIT_OK if chk else EXIT_FALSE


def cmd_smo(args) -> int:
    if args.k1 == args.k2:
        raise UsageError("--k1 and --k2 must differ")
    ans = smo_exception(args.n, args.k1, args.k2)
    _emit(args, {"n": args.n, "k1": args.k1, "k2": args.k2, "exception": ans}, str(ans).lower())
    return EXIT_OK if ans else EXIT_FALSE


# -- parser ------------------------------------------------------------------------


def _weights(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a weight list: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arthur-lift", description=__doc__.splitlines()[0])
    ap.add_argument("--human", action="store_true", help="plain text instead of JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a parameter file")
    p.add_argument("--param", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("epsilon", help="Arthur's character on the component group")
    p.add_argument("--param", required=True)
    p.add_argument("--method", choices=("direct", "adjoint", "both"), default="direct")
    p.set_defaults(func=cmd_epsilon)

    p = sub.add_parser("packet", help="Adams-Johnson packet at the real place")
    p.add_argument("--param", required=True)
    p.add_argument("--k", type=_weights, help="weight to test, e.g. 12,12,12")
    p.set_defaults(func=cmd_packet)

    p = sub.add_parser("lift", help="evaluate a lift")
    p.add_argument(
        "--mode",
        required=True,
        choices=("a", "b", "general", "miyawaki1", "miyawaki2", "ibukiyama1", "ibukiyama2", "ikeda"),
    )
    p.add_argument("--k", type=int, help="theorem k (mode b) or Miyawaki weight")
    p.add_argument("--fweight", type=int, help="weight 2k of the elliptic f")
    p.add_argument("--d", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--n0", type=int, help="n of the Ibukiyama instances")
    p.add_argument("--m", type=int)
    p.add_argument("--g-weight", type=int, help="source g in S_w(SL_2(Z))")
    p.add_argument("--g-siegel", type=int, nargs=2, metavar=("K1", "K2"), help="general-type degree-2 source")
    p.add_argument("--f", help="eigenform data for a Siegel f (mode b)")
    p.add_argument("--out", help="also write the result JSON here")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("euler", help="standard Euler factor at a prime")
    p.add_argument("--param", required=True)
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("verify-lfactor", help="check a lift's factorization at a prime")
    p.add_argument("--lift", required=True)
    p.add_argument("--f")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("smo-check", help="is (n, k1, k2) the strong multiplicity one exception")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.set_defaults(func=cmd_smo)
    return ap


def _error(exc_code: str, message: str, extra: dict | None = None) -> None:
    print(json.dumps({"error": exc_code, "message": message, **(extra or {})}), file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on bad flags
    try:
        return args.func(args)
    except UsageError as exc:
        _error("usage", str(exc))
        return EXIT_USAGE
    except DataFormatError as exc:
        print(json.dumps(exc.to_json()), file=sys.stderr)
        return EXIT_USAGE
    except ArthurLiftError as exc:
        print(json.dumps(exc.to_json()), file=sys.stderr)
        return EXIT_FALSE
    except ValueError as exc:
        _error("invalid-input", str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
