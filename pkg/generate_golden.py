"""Regenerate golden/dimensions.json from floating-point ranks.

The exact library builds the complexes; every dimension written here is counted with
numpy's SVD-based `matrix_rank` instead of the rational elimination in utils.exactla,
so the golden file and the verifier's exact counts come from two different rank routines.
"""
import argparse
import json
import logging
import sys

import numpy as np

import constants.constants as constants
from utils import bgg, proxies


def dense(m) -> np.ndarray:
    return np.array([[float(v) for v in row] for row in m.to_dense()], dtype=float).reshape(m.rows, m.cols)


def numeric_rank(m) -> int:
    if not m.rows or not m.cols:
        return 0
    return int(np.linalg.matrix_rank(dense(m)))


def cohomology_dims(c) -> list:
    """h^i = dim Z^i - rank D^i - rank D^{i-1}."""
    dims = [numeric_rank(c.P(i)) for i in range(len(c))]
    ranks = [numeric_rank(c.D(i)) for i in range(len(c))]
    return [dims[i] - ranks[i] - (ranks[i - 1] if i else 0) for i in range(len(c))]


def fiber_dims(c) -> list:
    out = []
    for space in c.spaces:
        if not space.ambient_fiber or not space.ambient_dim:
            out.append(0)
        elif space.projector is None:
            out.append(space.ambient_fiber)
        else:
            f = space.ambient_fiber
            out.append(int(np.linalg.matrix_rank(dense(space.projector)[:f, :f])))
    return out


def link_index(diag) -> int:
    """Smallest J with S^i injective for i < J and surjective for i > J."""
    flags = []
    for i in range(len(diag.top)):
        r = numeric_rank(diag.S(i))
        flags.append((r == numeric_rank(diag.bottom.P(i)), r == numeric_rank(diag.top.P(i + 1))))
    for J in range(len(diag.top)):
        if all((inj or i > J) and (surj or i < J) for i, (inj, surj) in enumerate(flags)):
            return J
    return None


def named_entry(name: str, degree: int) -> dict:
    diag = proxies.named_diagram(name, degree)
    out = proxies.named_complex(name, degree)
    return {"J": link_index(diag), "cohomology": cohomology_dims(out), "fiber_dims": fiber_dims(out)}


def family_entry(n: int, J: int) -> list:
    return cohomology_dims(bgg.output_complex(bgg.alt_family_diagram(n, J, n + 1)))


def rejected_reason(name: str) -> str:
    try:
        proxies.named_diagram(name, constants.default_degree(name))
    except bgg.DiagramError as e:
        return e.reason
    return None


def build_table(names=None, family_dims=None) -> dict:
    names = sorted(names if names is not None else constants.valid_named())
    family_dims = family_dims if family_dims is not None else constants.GOLDEN_FAMILY_DIMS
    table = {"family": {}, "named": {}, "rejected": {}}
    for n in family_dims:
        for J in range(n):
            logging.info(f"family n={n} J={J}")
            table["family"][f"n={n} J={J}"] = family_entry(n, J)
    for name in names:
        logging.info(f"{name} at degree {constants.GOLDEN_DEGREES[name]}")
        table["named"][name] = named_entry(name, constants.GOLDEN_DEGREES[name])
    for name, info in sorted(constants.NAMED_DIAGRAMS.items()):
        if info.get("J") is None:
            table["rejected"][name] = rejected_reason(name)
    return table


def render_golden(table: dict) -> str:
    """One entry per line, sections in a fixed order."""
    sections = []
    for key in ("family", "named", "rejected"):
        items = [f"    {json.dumps(k)}: {json.dumps(v)}" for k, v in table[key].items()]
        sections.append(f"  {json.dumps(key)}: {{\n" + ",\n".join(items) + "\n  }")
    return "{\n" + ",\n".join(sections) + "\n}\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="Regenerate the golden dimension table with numpy ranks",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("--out", default=constants.GOLDEN_PATH, help="where to write the table")
    parser.add_argument("--check", action="store_true", help="compare with --out instead of writing it")
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)

    if args.verbose:
        logging.basicConfig(
            level=logging.INFO,
            format="%(asctime)s : %(levelname)s : %(message)s",
            datefmt="%Y-%m-%d %I:%M:%S%p")

    text = render_golden(build_table())
    if args.check:
        with open(args.out, 'r', encoding='utf-8') as f:
            current = f.read()
        if current != text:
            print(f"{args.out} is out of date", file=sys.stderr)
            return 1
        return 0
    with open(args.out, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
    logging.info(f"wrote {args.out}")
    return 0


if __name__ == '__main__':
    sys.exit(main())
