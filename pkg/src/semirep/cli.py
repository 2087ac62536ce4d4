"""Command-line front end: ``semirep <verb> [options]``.

Exit codes: 0 success, 2 usage error, 3 search cap exceeded, 4 invalid
input, 5 a verification found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Callable

import numpy as np

from . import bmodules as bm
from . import homs, io, oracle
from . import representations as rp
from .config import Caps, load_caps
from .groups import FiniteGroup, GroupError, OrderCapExceeded, Subgroup, named_group
from .semifield import Semifield

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_INVALID, EXIT_VERIFY = 0, 2, 3, 4, 5


class VerificationFailed(Exception):
    pass


# -- argument resolution ----------------------------------------------------------

def _resolve_group(spec: str, caps: Caps) -> FiniteGroup:
    if os.path.exists(spec):
        obj = io.load(spec)
        if not isinstance(obj, FiniteGroup):
            raise io.FormatError(f"{spec} does not hold a group")
        return obj
    return named_group(spec, caps.order_cap)


def _resolve_lattice(spec: str, group: FiniteGroup | None = None):
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            obj = json.load(fh)
        if obj.get("kind", "lattice") != "lattice":
            raise io.FormatError(f"{spec} does not hold a lattice")
        return io.lattice_from_json(obj, group)
    return bm.named_lattice(spec)


def _parse_subgroup(g: FiniteGroup, spec: str) -> Subgroup:
    items = [s.strip() for s in spec.replace(";", ",").split(",") if s.strip()]
    idx = []
    for s in items:
        if s in g.names:
            idx.append(g.names.index(s))
        elif s.isdigit():
            idx.append(int(s))
        else:
            raise GroupError(f"unknown group element {s!r}")
    return Subgroup(g, tuple(idx))


def _subgroup_label(h: Subgroup) -> str:
    return "{" + ", ".join(h.parent.names[x] for x in h.elements) + "}"


def _table_order(pairs):
    """Rows by increasing dimension: larger subgroups first, ties by elements."""
    return sorted(pairs, key=lambda p: (-p[0].subgroup.order, p[0].subgroup.elements))


# -- verbs ------------------------------------------------------------------------------

def cmd_classify(args, caps) -> tuple[dict, str]:
    g = _resolve_group(args.group, caps)
    tag = Semifield.parse(args.semifield)
    rows = []
    for t, v in _table_order(rp.classify_indecomposables(g, tag)):
        rows.append({"dim": v.dim, "subgroup_order": t.subgroup.order,
                     "subgroup": list(t.subgroup.elements), "subgroup_names": [g.names[x] for x in t.subgroup.elements]})
    data = {"group": g.label or args.group, "order": g.order, "semifield": tag.value, "indecomposables": rows}
    lines = [f"{data['group']} (order {g.order}) over {tag.value}: {len(rows)} indecomposables",
             f"{'dim':>4} {'|H|':>4}  stabilizer class"]
    for r in rows:
        lines.append(f"{r['dim']:>4} {r['subgroup_order']:>4}  {{{', '.join(r['subgroup_names'])}}}")
    return data, "\n".join(lines)


def cmd_hom_table(args, caps) -> tuple[dict, str]:
    g = _resolve_group(args.group, caps)
    tag = Semifield.parse(args.semifield)
    ind = _table_order(rp.classify_indecomposables(g, tag))
    table = [[len(homs.hom_descriptor_space(tv, tw)) for tw, _ in ind] for tv, _ in ind]
    checked = 0
    if args.check:
        if tag is not Semifield.BOOLEAN:
            raise ValueError("--check enumerates maps and needs --semifield B")
        for i, (_, v) in enumerate(ind):
            for j, (_, w) in enumerate(ind):
                if v.dim * w.dim > caps.hom_table_dim_product:
                    continue
                n = len(homs.enumerate_homs_boolean(v, w, caps.hom_exhaustive_bits))
                checked += 1
                if n != 2 ** table[i][j]:
                    raise VerificationFailed(
                        f"|Hom(V{i}, V{j})| = {n} but there are {table[i][j]} double cosets")
    data = {"group": g.label or args.group, "semifield": tag.value,
            "dims": [v.dim for _, v in ind],
            "subgroups": [list(t.subgroup.elements) for t, _ in ind], "table": table}
    if args.check:
        data["checked_pairs"] = checked
    width = max(3, *(len(str(x)) for row in table for x in row))
    lines = [f"double cosets H_V\\G/H_W for {data['group']} (rows V, columns W, by dimension)",
             "dim " + " ".join(f"{d:>{width}}" for d in data["dims"])]
    for d, row in zip(data["dims"], table):
        lines.append(f"{d:>3} " + " ".join(f"{x:>{width}}" for x in row))
    if args.check:
        lines.append(f"checked |Hom| = 2^count on {checked} pairs")
    return data, "\n".join(lines)


def cmd_decompose(args, caps) -> tuple[dict, str]:
    if args.rep:
        v = io.load(args.rep)
        if not isinstance(v, rp.Representation):
            raise io.FormatError(f"{args.rep} does not hold a representation")
    else:
        g = _resolve_group(args.group, caps)
        v = rp.regular_representation(g, Semifield.parse(args.semifield))
    g = v.group
    parts = []
    for sub, orb in rp.decompose(v):
        t = rp.stabilizer_pair(sub, 0)
        parts.append({"lines": list(orb), "dim": len(orb), "subgroup": list(t.subgroup.elements),
                      "subgroup_names": [g.names[x] for x in t.subgroup.elements]})
    data = {"dim": v.dim, "semifield": v.tag.value, "summands": parts}
    lines = [f"dimension {v.dim} over {v.tag.value}: {len(parts)} indecomposable summand(s)"]
    for p in parts:
        lines.append(f"  lines {p['lines']} -> G/H with H = {{{', '.join(p['subgroup_names'])}}}")
    return data, "\n".join(lines)


def cmd_induce(args, caps) -> tuple[dict, str]:
    g = _resolve_group(args.group, caps)
    tag = Semifield.parse(args.semifield)
    h = _parse_subgroup(g, args.subgroup)
    v = rp.induce_from_pair(g, tag, h)
    data = io.representation_to_json(v)
    lines = [f"K[G/H] over {tag.value}, H = {_subgroup_label(h)}, dimension {v.dim}"]
    for x in g.elements:
        m = v.images[x]
        lines.append(f"  {g.names[x]:>12}: perm {list(m.perm)}")
    return data, "\n".join(lines)


def cmd_dual(args, caps) -> tuple[dict, str]:
    m = _resolve_lattice(args.lattice)
    mod = m.module if isinstance(m, bm.BGModule) else m
    d = bm.dual(mod)
    images = bm.double_dual_canonical(mod)
    cov = d.dual.covers()
    edges = [(mod.names[x], mod.names[y]) for x, y in zip(*np.nonzero(cov))]
    data = {"size": mod.size, "names": [f"psi({n})" for n in mod.names],
            "leq": [[int(x) for x in row] for row in np.asarray(d.dual.leq).tolist()],
            "hom_values": [[int(x) for x in row] for row in d.hom_values().tolist()],
            "reflexive": True, "double_dual_map": list(images)}
    lines = [f"dual of a {mod.size}-element lattice; psi(x) has kernel {{y <= x}}",
             "covers in the dual:"]
    lines += [f"  psi({a}) < psi({b})" for a, b in edges]
    lines.append("canonical map to the double dual: isomorphism")
    return data, "\n".join(lines)


def cmd_quasi_free(args, caps) -> tuple[dict, str]:
    m = _resolve_lattice(args.lattice)
    mod = m.module if isinstance(m, bm.BGModule) else m
    res = bm.quasi_basis_search(mod)
    if isinstance(res, bm.QuasiBasis):
        names = [mod.names[x] for x in res.elements]
        data = {"quasi_free": True, "rank": res.rank, "basis": list(res.elements), "basis_names": names}
        text = f"quasi-free of rank {res.rank}; basis {{{', '.join(names)}}}"
    else:
        data = {"quasi_free": False, "witness": str(res), "lhs": res.lhs, "terms": list(res.terms)}
        text = f"not quasi-free; witness {res}"
    return data, text


def cmd_irreducibles(args, caps) -> tuple[dict, str]:
    m = _resolve_lattice(args.lattice)
    mod = m.module if isinstance(m, bm.BGModule) else m
    ji = bm.join_irreducible_elements(mod)
    length = bm.max_chain_length_join_irreducibles(mod)
    data = {"join_irreducibles": list(ji), "names": [mod.names[x] for x in ji],
            "longest_chain": length, "atomistic": bm.is_atomistic(mod)}
    text = (f"join-irreducibles: {{{', '.join(data['names'])}}}\n"
            f"longest chain among them: {length}\natomistic: {'yes' if data['atomistic'] else 'no'}")
    return data, text


def _bg_module_from_args(args, caps) -> bm.BGModule:
    if args.lattice:
        group = _resolve_group(args.group, caps) if args.group else None
        m = _resolve_lattice(args.lattice, group)
        if not isinstance(m, bm.BGModule):
            if group is None:
                raise ValueError("a lattice without an action needs --group (the action is then trivial)")
            m = bm.trivial_action(m, group)
        return m
    if not args.group or args.generator is None:
        raise ValueError("give --lattice, or --group with --generator (a mask in B[G]^rank)")
    g = _resolve_group(args.group, caps)
    return bm.cyclic_bg_module(bm.regular_power(g, args.rank), int(args.generator, 0))


def cmd_embed(args, caps) -> tuple[dict, str]:
    m = _bg_module_from_args(args, caps)
    emb = bm.embed_into_regular_power(m)
    n = m.group.order
    names = m.module.names
    data = {"rank": emb.rank, "group_order": n, "images": list(emb.images),
            "dual_generators": list(emb.dual_generators), "injective": True, "equivariant": True}
    lines = [f"embedded a {m.size}-element module into B[G]^{emb.rank} (|G| = {n}; bit i*|G|+g)"]
    for x, img in enumerate(emb.images):
        lines.append(f"  {names[x]:>8} -> {img:#0{2 + (emb.rank * n + 3) // 4}x}")
    return data, "\n".join(lines)


def cmd_verify_cyclic(args, caps) -> tuple[dict, str]:
    g = _resolve_group(args.group, caps)
    rng = np.random.default_rng(args.seed)
    samples = args.samples if args.samples is not None else caps.cyclic_samples
    ranks = [args.rank] if args.rank else list(range(1, caps.cyclic_max_rank + 1))
    checked = 0
    for k in ranks:
        free = bm.regular_power(g, k)
        for _ in range(samples):
            gen = int(rng.integers(1, 1 << free.nbits))
            c = bm.cyclic_bg_module(free, gen)
            qb = bm.quasi_basis_search(c.module)
            expected = g.order // free.stabilizer(gen).order
            if not isinstance(qb, bm.QuasiBasis) or qb.rank != expected:
                raise VerificationFailed(f"k={k} generator {gen:#x}: {qb} (expected rank {expected})")
            ok, pair = bm.orbit_antichain_check(c)
            if not ok:
                raise VerificationFailed(f"k={k} generator {gen:#x}: comparable orbit pair {pair}")
            checked += 1
    data = {"group": g.label or args.group, "ranks": ranks, "samples": checked, "seed": args.seed,
            "all_quasi_free": True}
    return data, (f"{checked} cyclic submodules of B[{data['group']}]^k, k in {ranks}: "
                  "all quasi-free with rank [G : Stab]")


def cmd_verify(args, caps) -> tuple[dict, str]:
    groups = [args.group] if args.group else None
    reports = list(oracle.run_battery(args.suite, args.seed, caps, groups))
    failed = [r for r in reports if not r.passed]
    data = {"reports": reports, "failed": len(failed)}
    return data, ""


def cmd_export(args, caps) -> tuple[dict, str]:
    if args.lattice:
        group = _resolve_group(args.group, caps) if args.group else None
        doc = io.lattice_to_json(_resolve_lattice(args.lattice, group))
    elif args.subgroup:
        g = _resolve_group(args.group, caps)
        doc = io.representation_to_json(rp.induce_from_pair(g, Semifield.parse(args.semifield),
                                                            _parse_subgroup(g, args.subgroup)))
    elif args.group:
        doc = io.group_to_json(_resolve_group(args.group, caps))
    else:
        raise ValueError("export needs --group, --lattice, or --group with --subgroup")
    return doc, json.dumps(doc, sort_keys=True)


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites (default 0)")
    common.add_argument("--caps", help="JSON file overriding search caps")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="machine-readable output")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="human-readable output (default)")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--timings", action="store_true", help="include elapsed times in verify output")

    p = argparse.ArgumentParser(prog="semirep", description="Representations over B and T, and finite B-modules.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    def group_args(sp, required=True):
        sp.add_argument("--group", required=required, help="group name (S3, C2xC2, Q8, ...) or JSON file")
        sp.add_argument("--semifield", default="B", choices=["B", "T"])

    group_args(verb("classify", cmd_classify, "indecomposables up to isomorphism"))
    sp = verb("hom-table", cmd_hom_table, "double-coset counts between indecomposables")
    group_args(sp)
    sp.add_argument("--check", action="store_true", help="also enumerate Boolean homs and compare")
    sp = verb("decompose", cmd_decompose, "split a representation into indecomposables")
    group_args(sp, required=False)
    sp.add_argument("--rep", help="representation JSON file (default: the regular representation)")
    sp = verb("induce", cmd_induce, "the representation K[G/H]")
    group_args(sp)
    sp.add_argument("--subgroup", required=True, help="comma-separated element names or indices")
    for name, fn, h in (("dual", cmd_dual, "dual lattice and reflexivity"),
                        ("quasi-free", cmd_quasi_free, "quasi-basis or a witness against one"),
                        ("irreducibles", cmd_irreducibles, "join-irreducible elements")):
        verb(name, fn, h).add_argument("--lattice", required=True, help="lattice name (N5, chain3, diamond, M3, cubeK, chainN) or JSON file")
    for name, fn, h in (("embed", cmd_embed, "embed a B[G]-module into B[G]^n"),):
        sp = verb(name, fn, h)
        sp.add_argument("--lattice", help="lattice JSON (with an action) or name")
        sp.add_argument("--group", help="group name or JSON file")
        sp.add_argument("--rank", type=int, default=1, help="k for a cyclic module inside B[G]^k")
        sp.add_argument("--generator", help="generator mask in B[G]^k (bit i*|G|+g), e.g. 0b101")
    sp = verb("verify-cyclic", cmd_verify_cyclic, "random cyclic submodules of B[G]^k are quasi-free")
    sp.add_argument("--group", required=True)
    sp.add_argument("--rank", type=int, help="only this k (default: 1..cyclic_max_rank)")
    sp.add_argument("--samples", type=int, help="generators per k (default from caps)")
    sp = verb("verify", cmd_verify, "run the brute-force oracle battery")
    sp.add_argument("--suite", default="all", choices=oracle.SUITES)
    sp.add_argument("--group", help="restrict to one group (default: the whole zoo)")
    sp = verb("export", cmd_export, "write a group, lattice or induced representation as JSON")
    group_args(sp, required=False)
    sp.add_argument("--lattice")
    sp.add_argument("--subgroup", help="with --group: export K[G/H] instead of the group")
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.fmt or "text"
    try:
        caps = load_caps(args.caps)
        data, text = args.func(args, caps)
    except (homs.CapExceeded, bm.CapExceeded, oracle.OracleCapExceeded, OrderCapExceeded) as exc:
        print(f"semirep: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except VerificationFailed as exc:
        print(f"semirep: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValueError, TypeError, OSError, AssertionError) as exc:
        print(f"semirep: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID

    if args.verb == "verify":
        reports = data["reports"]
        if fmt == "json":
            body = "\n".join(r.to_json(args.timings) for r in reports)
        else:
            rows = []
            for r in reports:
                line = f"{'PASS' if r.passed else 'FAIL'}  {r.claim:<26} {r.instance:<18} n={r.search_size}"
                if args.timings:
                    line += f"  {r.elapsed:.3f}s"
                if not r.passed:
                    line += f"  witness: {r.counterexample}"
                rows.append(line)
            rows.append(f"{len(reports) - data['failed']}/{len(reports)} claims passed")
            body = "\n".join(rows)
        _emit(body, args.out)
        return EXIT_VERIFY if data["failed"] else EXIT_OK

    _emit(json.dumps(data, sort_keys=True) if fmt == "json" else text, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
