"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import circuit as circ
from . import gf2
from .circuit import Circuit, LogicalGateSpec
from .codes import HgpCode, LogicalQubitLabel, hgp, linear_to_qubit, parse_code, toric
from .logicals import LogicalBasis, logical_basis
from .symplectic import gate_f, ml_for
from .synth import synth_gate
from .verify import DENSE_MAX_QUBITS, dense_check, verify_logical


class UsageError(Exception):
    pass


def _add_code_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("code")
    g.add_argument("--toric", type=int, metavar="L", help="toric code on an L x L torus")
    g.add_argument("-a", "--ha", type=Path, help="parity-check file for the first classical code")
    g.add_argument("-b", "--hb", type=Path, help="parity-check file for the second classical code")
    g.add_argument("--code", type=Path, help="code descriptor: 'toric L' or two parity-check blocks")


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load_code(args, meta: dict | None = None) -> HgpCode:
    given = [x is not None for x in (args.toric, args.code)] + [args.ha is not None or args.hb is not None]
    if sum(given) > 1:
        raise UsageError("give only one of --toric, --code, or -a/-b")
    try:
        if args.toric is not None:
            return toric(args.toric)
        if args.code is not None:
            return parse_code(_read(args.code))
        if args.ha is not None or args.hb is not None:
            if args.ha is None or args.hb is None:
                raise UsageError("-a and -b must be given together")
            return hgp(gf2.parse_matrix(_read(args.ha)), gf2.parse_matrix(_read(args.hb)))
        if meta and "code" in meta:
            return code_from_meta(meta["code"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError("no code given; use --toric L, --code FILE or -a FILE -b FILE")


def code_to_meta(code: HgpCode) -> dict:
    return {"ha": code.ha.tolist(), "hb": code.hb.tolist()}


def code_from_meta(obj: dict) -> HgpCode:
    if "toric" in obj:
        return toric(int(obj["toric"]))
    return hgp(np.array(obj["ha"], dtype=np.uint8), np.array(obj["hb"], dtype=np.uint8))


def _coords(code: HgpCode, support) -> list[str]:
    return [str(linear_to_qubit(q + 1, code)) for q in support]


def cmd_code_build(args, out) -> int:
    code = _load_code(args)
    summary = code.summary()
    summary["distance"] = code.distance() if args.distance else "not computed"
    if args.distance and summary["distance"] is None:
        summary["distance"] = "not computed (n > 20)"
    if args.json:
        out.write(json.dumps(summary, indent=1) + "\n")
    else:
        out.write(f"[[{code.n}, {code.k}]] hypergraph product code\n")
        out.write(f"left sector {code.na} x {code.nb}, right sector {code.ma} x {code.mb}\n")
        out.write(f"X checks: {code.mx}, Z checks: {code.mz}\n")
        out.write(f"X check weights: {sorted(set(summary['x_stabilizer_weights']))}\n")
        out.write(f"Z check weights: {sorted(set(summary['z_stabilizer_weights']))}\n")
        out.write(f"distance: {summary['distance']}\n")
    return 0


def cmd_logicals_list(args, out) -> int:
    code = _load_code(args)
    basis = _basis(code)
    rows = []
    for i, label in enumerate(basis.labels):
        xs = gf2.support(basis.x_ops[i])
        zs = gf2.support(basis.z_ops[i])
        rows.append(
            {
                "label": str(label),
                "x_linear": [q + 1 for q in xs],
                "x_coords": _coords(code, xs),
                "z_linear": [q + 1 for q in zs],
                "z_coords": _coords(code, zs),
            }
        )
    if args.json:
        out.write(json.dumps(rows, indent=1) + "\n")
    else:
        for r in rows:
            out.write(f"{r['label']}\n")
            out.write(f"  X: {r['x_linear']}  {' '.join(r['x_coords'])}\n")
            out.write(f"  Z: {r['z_linear']}  {' '.join(r['z_coords'])}\n")
    return 0


def _basis(code: HgpCode) -> LogicalBasis:
    try:
        return logical_basis(code)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _label(text: str) -> LogicalQubitLabel:
    try:
        return LogicalQubitLabel.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _spec_from_args(args) -> LogicalGateSpec:
    if args.target is None:
        raise UsageError("--target is required")
    target = _label(args.target)
    if args.gate in ("phase", "hadamard"):
        if args.control is not None:
            raise UsageError(f"{args.gate} takes no --control")
        labels = (target,)
    else:
        if args.control is None:
            raise UsageError(f"{args.gate} needs --control and --target")
        labels = (_label(args.control), target)
    try:
        return LogicalGateSpec(args.gate, labels)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _format(c: Circuit, fmt: str) -> str:
    if fmt == "json":
        return circ.to_json(c)
    if fmt == "qasm":
        return circ.to_qasm(c)
    return circ.to_ascii(c)


def _synthesize(code: HgpCode, basis: LogicalBasis, spec: LogicalGateSpec, variant: str) -> Circuit:
    try:
        c = synth_gate(code, basis, spec, variant)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    c.meta["code"] = code_to_meta(code)
    return c


def _write(text: str, path: Path | None, out) -> None:
    if path is None:
        out.write(text)
    else:
        path.write_text(text)


def cmd_synth(args, out) -> int:
    code = _load_code(args)
    basis = _basis(code)
    spec = _spec_from_args(args)
    c = _synthesize(code, basis, spec, args.phase_variant)
    _write(_format(c, args.format), args.out, out)
    chi, delta = circ.metrics(c)
    support = [q + 1 for q in c.support()]
    msg = f"{spec}: {len(c)} gates, support {chi} {support}, depth {delta}\n"
    (sys.stderr if args.out is None else out).write(msg)
    return 0


def _load_circuit(path: Path) -> Circuit:
    try:
        return circ.from_json(_read(path))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_verify(args, out) -> int:
    c = _load_circuit(args.circuit)
    code = _load_code(args, c.meta)
    basis = _basis(code)
    if args.gate is not None:
        spec = _spec_from_args(args)
    elif "gate" in c.meta:
        try:
            spec = LogicalGateSpec.from_json(c.meta["gate"])
        except (KeyError, ValueError) as exc:
            raise UsageError(f"bad gate metadata: {exc}") from exc
    else:
        raise UsageError("the circuit names no gate; pass --gate and labels")
    if c.n != code.n:
        raise UsageError(f"circuit acts on {c.n} qubits but the code has {code.n}")
    try:
        report = verify_logical(c, code, basis, ml_for(spec, basis), gate_f(code, basis, spec))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    frame = None
    if code.n <= DENSE_MAX_QUBITS and not args.no_dense:
        dense = dense_check(c, code, basis, spec)
        report.dense_ok = dense.ok
        frame = dense.frame
    if args.json:
        obj = report.to_json()
        obj["gate"] = str(spec)
        obj["logical_pauli_frame"] = frame
        out.write(json.dumps(obj, indent=1) + "\n")
    else:
        out.write(f"gate: {spec}\n")
        out.write(report.to_text())
        if frame is not None:
            out.write(f"logical Pauli frame: {frame}\n")
    return 0 if report.verdict else 1


def cmd_emit(args, out) -> int:
    c = _load_circuit(args.circuit)
    _write(_format(c, args.format), args.out, out)
    return 0


def cmd_toric_demo(args, out) -> int:
    try:
        code = toric(args.L)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    basis = logical_basis(code)
    left, right = basis.labels
    specs = {
        "phase": circ.phase(left),
        "hadamard": circ.hadamard(left),
        "cnot": circ.cnot(left, right),
        "cz": circ.cz(left, right),
    }
    outdir = args.out_dir
    if outdir is not None:
        outdir.mkdir(parents=True, exist_ok=True)
    out.write(f"toric code L={args.L}: [[{code.n}, {code.k}]], logical qubits {left} and {right}\n")
    out.write(f"{'gate':10s}{'gates':>7s}{'support':>9s}{'depth':>7s}  verified  qubits\n")
    status = 0
    for name, spec in specs.items():
        c = _synthesize(code, basis, spec, "fanin")
        report = verify_logical(c, code, basis, ml_for(spec, basis), gate_f(code, basis, spec))
        status |= 0 if report.verdict else 1
        chi, delta = circ.metrics(c)
        support = " ".join(str(q + 1) for q in c.support())
        out.write(f"{name:10s}{len(c):7d}{chi:9d}{delta:7d}  {'yes' if report.verdict else 'NO':8s}  {support}\n")
        if outdir is not None:
            (outdir / f"{name}.json").write_text(circ.to_json(c))
            (outdir / f"{name}.qasm").write_text(circ.to_qasm(c))
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hgpgates", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    code = sub.add_parser("code", help="build and summarize a code")
    code_sub = code.add_subparsers(dest="action", required=True)
    build = code_sub.add_parser("build", help="print the code summary")
    _add_code_args(build)
    build.add_argument("--json", action="store_true")
    build.add_argument("--distance", action="store_true", help="exhaustive distance for n <= 20")
    build.set_defaults(func=cmd_code_build)

    logicals = sub.add_parser("logicals", help="logical operator basis")
    log_sub = logicals.add_subparsers(dest="action", required=True)
    lst = log_sub.add_parser("list", help="print labels and supports")
    _add_code_args(lst)
    lst.add_argument("--json", action="store_true")
    lst.set_defaults(func=cmd_logicals_list)

    def gate_args(sp, required: bool):
        sp.add_argument("--gate", choices=LogicalGateSpec.KINDS, required=required)
        sp.add_argument("--target", help="logical qubit label, e.g. L:3,3 (second qubit for cz)")
        sp.add_argument("--control", help="control label for cnot, first qubit for cz")

    synth = sub.add_parser("synth", help="synthesize a targeted logical gate")
    _add_code_args(synth)
    gate_args(synth, True)
    synth.add_argument("--phase-variant", choices=("fanin", "symmetric"), default="fanin")
    synth.add_argument("--format", choices=("json", "qasm", "ascii"), default="json")
    synth.add_argument("--out", type=Path)
    synth.set_defaults(func=cmd_synth)

    verify = sub.add_parser("verify", help="verify a circuit file")
    verify.add_argument("--circuit", type=Path, required=True)
    _add_code_args(verify)
    gate_args(verify, False)
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--no-dense", action="store_true", help="skip the dense simulation")
    verify.set_defaults(func=cmd_verify)

    emit = sub.add_parser("emit", help="convert a circuit file")
    emit.add_argument("--circuit", type=Path, required=True)
    emit.add_argument("--format", choices=("json", "qasm", "ascii"), default="qasm")
    emit.add_argument("--out", type=Path)
    emit.set_defaults(func=cmd_emit)

    demo = sub.add_parser("toric-demo", help="the four targeted gates on a toric code")
    demo.add_argument("--L", type=int, default=3)
    demo.add_argument("--out-dir", type=Path)
    demo.set_defaults(func=cmd_toric_demo)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"hgpgates: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
