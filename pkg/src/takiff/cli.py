"""Command-line front end.

Every computation is a subcommand with machine-readable output: JSON
lines by default (sorted keys, no timestamps) or TSV via --format tsv.
Exit codes: 0 success, 1 user error, 2 resource-cap error.  The
environment variable TAKIFF_DIM_CAP overrides the module dimension cap
used by the Ext oracle and the D-map constructions.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import blocks, dmap, ext, ideals, invariants, multiplicities, rootsys
from .errors import ResourceCapError, UserInputError
from .multiplicities import SuperWeight


def _dim_cap():
    raw = os.environ.get("TAKIFF_DIM_CAP")
    if raw is None:
        return dmap.DEFAULT_DIM_CAP
    try:
        return int(raw)
    except ValueError:
        raise UserInputError(f"TAKIFF_DIM_CAP must be an integer, got {raw!r}")


def _parse_weight(rd, text):
    try:
        coords = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise UserInputError(f"malformed weight {text!r}; expected c1,c2,...")
    if len(coords) != rd.rank:
        raise UserInputError(
            f"weight {text!r} has {len(coords)} coordinates, expected {rd.rank}")
    return coords


def _parse_super_weight(rd, text):
    if ";" not in text:
        raise UserInputError(
            f"malformed super weight {text!r}; expected c1,...,cr;a")
    lam_part, _, a_part = text.partition(";")
    lam = _parse_weight(rd, lam_part)
    try:
        a = int(a_part)
    except ValueError:
        raise UserInputError(f"malformed delta coefficient {a_part!r}")
    return SuperWeight(lam, a)


def format_super_weight(x):
    return ",".join(str(c) for c in x.lam) + ";" + str(x.a)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else str(v.numerator)
    if isinstance(v, SuperWeight):
        return format_super_weight(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, frozenset):
        return sorted(_jsonable(x) for x in v)
    return v


class _Emitter:
    def __init__(self, fmt, out):
        self.fmt = fmt
        self.out = out
        self._header = None

    def emit(self, record):
        record = {k: _jsonable(v) for k, v in record.items()}
        if self.fmt == "json":
            self.out.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            keys = sorted(record)
            if self._header != keys:
                self._header = keys
                self.out.write("\t".join(keys) + "\n")
            self.out.write("\t".join(_tsv_cell(record[k]) for k in keys) + "\n")


def _tsv_cell(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _add_type_args(p):
    p.add_argument("--type", required=True, help="series letter A-G")
    p.add_argument("--rank", required=True, type=int)


def _datum(args):
    return rootsys.build_root_datum(args.type, args.rank)


def _block_label_from_args(rd, args):
    if rd.rank == 1:
        if not args.tag:
            raise UserInputError("--tag even|odd_a|odd_b required for A1 blocks")
        return blocks.BlockLabel("sl2", tag=args.tag)
    if args.block is None:
        raise UserInputError("--block WEIGHT required for rank >= 2")
    return blocks.BlockLabel("minuscule", weight=_parse_weight(rd, args.block))


def _parse_ideal(rd, text):
    idx = {c: i for i, c in enumerate(rd.pos_roots)}
    mask = 0
    if text:
        for part in text.split(";"):
            c = tuple(int(v) for v in part.split(","))
            if c not in idx:
                raise UserInputError(f"{part!r} is not a positive root "
                                     f"of {rd.series}{rd.rank} (simple-root coords)")
            mask |= 1 << idx[c]
    # up-closure of the given generators
    changed = True
    while changed:
        changed = False
        for i, a in enumerate(rd.pos_roots):
            if not mask >> i & 1:
                continue
            for b in rd.pos_roots:
                j = idx.get(rootsys.add_weights(a, b))
                if j is not None and not mask >> j & 1:
                    mask |= 1 << j
                    changed = True
    return ideals.RootIdeal(mask)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="takiff",
        description="Exact invariants of the semisimple Takiff superalgebra "
                    "extension of a simple Lie algebra")
    ap.add_argument("--format", choices=("json", "tsv"), default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("root-datum", help="Cartan/Coxeter data of a simple type")
    _add_type_args(p)

    p = sub.add_parser("minuscule", help="minuscule weights (block labels)")
    _add_type_args(p)

    p = sub.add_parser("blocks", help="number of blocks in F and O")
    _add_type_args(p)

    p = sub.add_parser("block-label", help="block of a simple module")
    _add_type_args(p)
    p.add_argument("--weight", required=True, help="super weight c1,...,cr;a")
    p.add_argument("--category", choices=("F", "O"), default="F")

    p = sub.add_parser("linkage", help="witnessed linkage chain to the block label")
    _add_type_args(p)
    p.add_argument("--weight", required=True)

    p = sub.add_parser("delta-mult", help="[Delta(x) : L(y)]")
    _add_type_args(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    p = sub.add_parser("proj-mult", help="[P(x) : L(y)]")
    _add_type_args(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    p = sub.add_parser("dual", help="dual simple label")
    _add_type_args(p)
    p.add_argument("--weight", required=True)

    p = sub.add_parser("ext", help="dim Ext^i(L(source), L(target))")
    _add_type_args(p)
    p.add_argument("--i", required=True, type=int)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--engine", choices=("auto", "closed", "oracle"), default="auto")

    p = sub.add_parser("ext1", help="dim Ext^1 (closed formulas)")
    _add_type_args(p)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)

    p = sub.add_parser("ext1-conformal", help="dim Ext^1 between conformal modules")
    _add_type_args(p)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)

    p = sub.add_parser("quiver", help="Ext1 quiver of a block in a window")
    _add_type_args(p)
    p.add_argument("--block", help="minuscule weight c1,...,cr (rank >= 2)")
    p.add_argument("--tag", help="A1 block tag: even|odd_a|odd_b")
    p.add_argument("--max-coord", type=int, default=2)
    p.add_argument("--max-a", type=int, default=2)
    p.add_argument("--which", choices=("F", "C"), default="F")
    p.add_argument("--compare-conformal", action="store_true",
                   help="emit whether the F and C quivers agree on the window")

    p = sub.add_parser("koszul-check", help="diagonal-Ext check on a block")
    _add_type_args(p)
    p.add_argument("--block", required=True)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--imax", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("ideals", help="enumerate up-closed root sets")
    _add_type_args(p)

    p = sub.add_parser("borel-count", help="number of Borel conjugacy classes")
    _add_type_args(p)

    p = sub.add_parser("borel-classify", help="Borel descriptions per ideal")
    _add_type_args(p)

    p = sub.add_parser("shi-witness", help="witness element for an ideal")
    _add_type_args(p)
    p.add_argument("--roots", default="",
                   help="generators of the ideal: simple-root coords "
                        "joined by ';' (empty for the empty ideal)")

    p = sub.add_parser("commutant", help="supercommutant dimension on tensor space")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--r", required=True, type=int)
    p.add_argument("--algebra", choices=("g", "gl"), default="g")

    p = sub.add_parser("phi-image", help="rank of the symmetric group image")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--r", required=True, type=int)

    p = sub.add_parser("thmIT", help="injectivity/surjectivity verdict")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--r", required=True, type=int)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--fast", action="store_true",
                   help="skip the heaviest invariant-theory case")
    return ap


def _run(args, emit):
    cmd = args.command
    cap = _dim_cap()

    if cmd == "root-datum":
        rd = _datum(args)
        emit({"series": rd.series, "rank": rd.rank,
              "num_positive_roots": len(rd.pos_roots),
              "coxeter_number": rd.coxeter_number,
              "exponents": list(rd.exponents),
              "cartan_determinant": rootsys.cartan_determinant(rd),
              "highest_root": list(rd.highest_root),
              "weyl_order": rootsys.weyl_order(rd)})
    elif cmd == "minuscule":
        rd = _datum(args)
        for w in rootsys.minuscule_weights(rd):
            emit({"weight": list(w)})
    elif cmd == "blocks":
        rd = _datum(args)
        emit({"num_blocks": blocks.num_blocks(rd)})
    elif cmd == "block-label":
        rd = _datum(args)
        x = _parse_super_weight(rd, args.weight)
        fn = blocks.block_label_F if args.category == "F" else blocks.block_label_O
        emit(fn(rd, x).as_dict())
    elif cmd == "linkage":
        rd = _datum(args)
        x = _parse_super_weight(rd, args.weight)
        chain = blocks.linkage_chain(rd, x)
        for u, v, rule in chain:
            emit({"from": u, "to": v, "rule": rule,
                  "witness": multiplicities.delta_mult(rd, u, v)})
        emit({"endpoint": blocks.chain_endpoint(rd, x), "edges": len(chain)})
    elif cmd in ("delta-mult", "proj-mult"):
        rd = _datum(args)
        x = _parse_super_weight(rd, args.x)
        y = _parse_super_weight(rd, args.y)
        fn = (multiplicities.delta_mult if cmd == "delta-mult"
              else multiplicities.proj_mult)
        emit({"mult": fn(rd, x, y)})
    elif cmd == "dual":
        rd = _datum(args)
        x = _parse_super_weight(rd, args.weight)
        emit({"weight": multiplicities.dual_simple(rd, x)})
    elif cmd == "ext":
        rd = _datum(args)
        emit({"dim": ext.ext_dim(rd, args.i,
                                 _parse_super_weight(rd, args.source),
                                 _parse_super_weight(rd, args.target),
                                 engine=args.engine, cap=cap)})
    elif cmd == "ext1":
        rd = _datum(args)
        emit({"dim": ext.ext1_closed(rd, _parse_super_weight(rd, args.source),
                                     _parse_super_weight(rd, args.target))})
    elif cmd == "ext1-conformal":
        rd = _datum(args)
        emit({"dim": ext.ext1_conformal(rd, _parse_super_weight(rd, args.source),
                                        _parse_super_weight(rd, args.target))})
    elif cmd == "quiver":
        rd = _datum(args)
        label = _block_label_from_args(rd, args)
        qf = ext.build_quiver(rd, label, args.max_coord, args.max_a, "F")
        if args.compare_conformal:
            qc = ext.build_quiver(rd, label, args.max_coord, args.max_a, "C")
            emit({"quivers_match": ext.compare_quivers(qf, qc),
                  "vertices": len(qf.vertices),
                  "interior": len(qf.interior)})
        else:
            q = qf if args.which == "F" else ext.build_quiver(
                rd, label, args.max_coord, args.max_a, "C")
            for (u, v), m in sorted(q.edges.items()):
                emit({"from": u, "to": v, "dim": m})
            emit({"vertices": len(q.vertices), "edges": len(q.edges)})
    elif cmd == "koszul-check":
        rd = _datum(args)
        label = blocks.BlockLabel("minuscule",
                                  weight=_parse_weight(rd, args.block))
        rep = ext.koszul_diagonal_check(rd, label, samples=args.samples,
                                        imax=args.imax, seed=args.seed, cap=cap)
        emit({"pairs": len(rep.pairs), "imax": rep.imax,
              "violations": len(rep.violations), "ok": rep.ok})
    elif cmd == "ideals":
        rd = _datum(args)
        all_ideals = ideals.enumerate_ideals(rd)
        for idl in all_ideals:
            emit({"roots": [list(c) for c in idl.roots(rd)]})
        emit({"count": len(all_ideals)})
    elif cmd == "borel-count":
        rd = _datum(args)
        emit({"classes": ideals.count_borel_classes(rd)})
    elif cmd == "borel-classify":
        rd = _datum(args)
        for d in ideals.classify_borels(rd):
            emit({"kind": d.kind,
                  "ideal": [list(c) for c in d.ideal.roots(rd)],
                  "includes_del_xi": d.includes_del_xi,
                  "witness": list(d.witness),
                  "xi_sign": d.xi_sign,
                  "odd_dimension": d.odd_dimension(rd)})
    elif cmd == "shi-witness":
        rd = _datum(args)
        idl = _parse_ideal(rd, args.roots)
        h = ideals.shi_witness(rd, idl)
        emit({"ideal": [list(c) for c in idl.roots(rd)],
              "witness": list(h),
              "values": {",".join(map(str, c)):
                         sum(Fraction(c[t]) * h[t] for t in range(rd.rank))
                         for c in rd.pos_roots}})
    elif cmd == "commutant":
        even, odd = invariants.commutant_parity_dims(args.n, args.r, args.algebra)
        emit({"dim": even + odd, "even": even, "odd": odd})
    elif cmd == "phi-image":
        emit({"dim": invariants.phi_image_dim(args.n, args.r)})
    elif cmd == "thmIT":
        emit(invariants.thmIT_verdict(args.n, args.r).as_dict())
    elif cmd == "selftest":
        from . import selftest
        failed = 0
        for res in selftest.run_all(fast=args.fast):
            emit(res)
            if not res["pass"]:
                failed += 1
        if failed:
            raise UserInputError(f"{failed} acceptance criteria failed")
    else:  # pragma: no cover
        raise UserInputError(f"unknown command {cmd!r}")


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    emitter = _Emitter(args.format, sys.stdout)
    try:
        _run(args, emitter.emit)
    except UserInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
