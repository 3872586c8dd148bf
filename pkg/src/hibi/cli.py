"""Command-line front end.

    hibi lattice|hilbert|multidegree|cs|grading-recover|ideal --input JOB.json [flags]

A job file is JSON::

    {"poset": {"n": 4, "covers": [[1, 3], [2, 3], [2, 4]]},
     "chain": [2, 3], "f": [0, 1, 2], "m": 2}

A bare poset file (``{"n": ..., "covers": ...}``) is accepted as a job with
an empty chain.  Results go to stdout as JSON, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from itertools import product

from . import errors
from .cartwright_sturmfels import EliminationRealization, MatrixRealization, cs_check
from .grading import ChainGradingSpec, Multigrading, grading_from_chain, recover_chain_grading
from .hilbert import (
    hilbert_function_oracle_multichain,
    hilbert_function_oracle_sigma,
    hilbert_series_fc,
    k_polynomial,
)
from .ideal import codim, hibi_generators, initial_ideal, primary_decomposition, verify_groebner_property
from .lattice import (
    DEFAULT_LATTICE_CAP,
    build_lattice,
    count_maximal_chains,
    format_ideal,
    incomparable_pairs,
    join_irreducible_ideals,
)
from .multidegree import degree_specialize, multidegree_via_chains, multidegree_via_k
from .poset import Poset, as_chain, elements_of, mask_of, poset_from_covers
from .polyring import render_polynomial, series_relabel, taylor_coefficients

EXIT_PARSE = 2
EXIT_TOO_LARGE = 3
EXIT_NOT_A_CHAIN = 4
EXIT_NOT_HOMOGENEOUS = 5
EXIT_INTERNAL = 6


class JobError(Exception):
    pass


@dataclass
class Job:
    poset: Poset
    labels: list[str] | None
    chain: tuple[int, ...]
    spec: ChainGradingSpec
    raw: dict


def _lattice_cap() -> int:
    value = os.environ.get("HIBI_LATTICE_CAP")
    if not value:
        return DEFAULT_LATTICE_CAP
    try:
        return int(value)
    except ValueError:
        raise JobError(f"HIBI_LATTICE_CAP must be an integer, got {value!r}")


def load_job(path: str) -> Job:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise JobError(f"cannot read job file {path}: {exc}")
    if not isinstance(raw, dict):
        raise JobError("job file must hold a JSON object")
    pf = raw.get("poset", raw if "n" in raw else None)
    if not isinstance(pf, dict) or "n" not in pf:
        raise JobError("job needs a poset with fields n and covers")
    try:
        n = int(pf["n"])
        covers = [tuple(int(x) for x in pair) for pair in pf.get("covers", [])]
        if any(len(pair) != 2 for pair in covers):
            raise JobError("covers must be pairs [a, b]")
        P = poset_from_covers(n, covers)
    except (TypeError, ValueError) as exc:
        raise JobError(f"bad poset: {exc}")
    labels = pf.get("labels")
    if labels is not None and len(labels) != n:
        raise JobError(f"labels must have {n} entries")
    chain = as_chain(P, [int(c) for c in raw.get("chain", [])])
    if list(chain) != [int(c) for c in raw.get("chain", [])] and raw.get("f") is not None:
        raise JobError("list the chain in increasing order when f is given")
    f = raw.get("f")
    if f is None:
        spec = ChainGradingSpec.identity(chain)
    else:
        f = tuple(int(v) for v in f)
        m = int(raw.get("m", max(f)))
        try:
            spec = ChainGradingSpec(chain, m, f)
        except ValueError as exc:
            raise JobError(str(exc))
    return Job(P, labels, chain, spec, raw)


def _ideal_list(mask: int) -> list[int]:
    return elements_of(mask)


# -- commands ------------------------------------------------------------------

def cmd_lattice(job: Job, args) -> dict:
    L = build_lattice(job.poset, _lattice_cap())
    ji = join_irreducible_ideals(L)
    out = {
        "n": job.poset.n,
        "size": len(L),
        "ideals": [_ideal_list(a) for a in L.ideals],
        "join_irreducibles": [_ideal_list(a) for a in ji],
        "maximal_chains": count_maximal_chains(L),
        "incomparable_pairs": len(incomparable_pairs(L)),
        "codim": codim(L),
    }
    if job.labels is not None:
        out["labels"] = job.labels
    out["pretty"] = f"L(P): {len(L)} ideals, {out['maximal_chains']} maximal chains, codim {out['codim']}"
    return out


def _oracle_check(job: Job, L, series, bound: int) -> dict:
    g = grading_from_chain(L, job.spec)
    coeffs = taylor_coefficients(series, bound)
    nvars = job.spec.m + 1
    identity = job.spec.is_identity()
    checked = 0
    for a in product(range(bound + 1), repeat=nvars):
        if sum(a) > bound:
            continue
        formula = coeffs.get(a, 0)
        multichain = hilbert_function_oracle_multichain(L, g, a)
        values = [formula, multichain]
        if identity:
            values.append(hilbert_function_oracle_sigma(job.poset, job.chain, a))
        if len(set(values)) != 1:
            raise errors.OracleMismatch(f"Hilbert function disagreement at {list(a)}: {values}")
        checked += 1
    return {"bound": bound, "degrees_checked": checked, "agree": True,
            "oracles": ["taylor", "multichain"] + (["sigma"] if identity else [])}


def cmd_hilbert(job: Job, args) -> dict:
    L = build_lattice(job.poset, _lattice_cap())
    series = hilbert_series_fc(job.poset, job.spec)
    out = {"chain": list(job.chain), "f": list(job.spec.f), **series.to_json(), "pretty": f"HS = {series}"}
    if args.k_polynomial:
        K = k_polynomial(job.poset, job.spec, L)
        out["k_polynomial"] = render_polynomial(K)
        out["k_polynomial_terms"] = K.to_json()
        out["pretty"] += f"\nK = {K}"
    if args.specialize:
        spec1 = series_relabel(series, [0] * series.nvars, 1)
        out["specialized"] = spec1.to_json()
        out["pretty"] += f"\nHS(t,...,t) = {spec1}"
    if args.oracle_check is not None:
        out["oracle_check"] = _oracle_check(job, L, series, args.oracle_check)
    return out


def cmd_multidegree(job: Job, args) -> dict:
    L = build_lattice(job.poset, _lattice_cap())
    results = {}
    if args.route in ("k", "both"):
        results["k"] = multidegree_via_k(job.poset, job.spec, L)
    if args.route in ("chains", "both"):
        results["chains"] = multidegree_via_chains(L, grading_from_chain(L, job.spec))
    if args.route == "both" and results["k"].poly != results["chains"].poly:
        raise errors.InternalConsistencyError(
            f"multidegree routes disagree: {results['k'].poly} vs {results['chains'].poly}")
    md = next(iter(results.values()))
    coeff, exponent = degree_specialize(md)
    out = {
        "chain": list(job.chain),
        "f": list(job.spec.f),
        "codim": md.codim,
        "routes": {name: {"polynomial": render_polynomial(r.poly), "terms": r.poly.to_json()}
                   for name, r in results.items()},
        "polynomial": render_polynomial(md.poly),
        "specialized": {"coefficient": str(coeff), "exponent": exponent},
        "pretty": f"C = {md.poly}\nC(t,...,t) = {coeff}*t^{exponent}",
    }
    return out


def cmd_cs(job: Job, args) -> dict:
    L = build_lattice(job.poset, _lattice_cap())
    verdict = cs_check(job.poset, job.spec, L)
    w = verdict.witness
    if not verdict.is_cs:
        witness = {
            "type": "non_cs",
            "pair": [w.a, w.b],
            "monomial": [format_ideal(w.alpha_prime), format_ideal(w.beta)],
            "degree": f"2*e{w.j}",
        }
        pretty = (f"not Cartwright-Sturmfels: {w.a} and {w.b} are incomparable off the chain; "
                  f"x{format_ideal(w.alpha_prime)}*x{format_ideal(w.beta)} has degree 2*e{w.j}")
    elif isinstance(w, MatrixRealization):
        witness = {
            "type": "matrix",
            "rows": w.rows,
            "cols": w.cols,
            "entries": [[format_ideal(x) for x in row] for row in w.entries],
        }
        pretty = f"Cartwright-Sturmfels: 2-minors of a {w.rows}x{w.cols} column-graded matrix"
    else:
        assert isinstance(w, EliminationRealization)
        missing = [a for a in w.ambient.ideals if a not in w.embedding]
        witness = {
            "type": "elimination",
            "ambient_covers": [list(p) for p in w.ambient_poset.covers()],
            "ambient_size": len(w.ambient),
            "missing": [format_ideal(a) for a in missing],
        }
        pretty = (f"Cartwright-Sturmfels: L(P) is a sublattice of a {len(w.ambient)}-element grid "
                  f"lattice missing {len(missing)} ideal(s)")
    return {"cs": verdict.is_cs, "witness": witness, "pretty": pretty}


def cmd_grading_recover(job: Job, args) -> dict:
    entries = job.raw.get("degrees")
    if not isinstance(entries, list):
        raise JobError("grading-recover needs a 'degrees' list of {ideal, degree}")
    L = build_lattice(job.poset, _lattice_cap())
    degree_of = {}
    for item in entries:
        try:
            mask = mask_of(int(e) for e in item["ideal"])
            degree = int(item["degree"])
        except (KeyError, TypeError, ValueError) as exc:
            raise JobError(f"bad degree entry {item!r}: {exc}")
        if mask not in L:
            raise JobError(f"{item['ideal']} is not a poset ideal")
        degree_of[mask] = degree
    if len(degree_of) != len(L):
        raise JobError(f"degree map covers {len(degree_of)} of {len(L)} ideals")
    m = int(job.raw.get("m", max(degree_of.values())))
    spec = recover_chain_grading(L, Multigrading(degree_of, m))
    return {"chain": list(spec.chain), "f": list(spec.f), "m": spec.m,
            "pretty": f"deg = deg_f for C = {list(spec.chain)}, f = {list(spec.f)}"}


def cmd_ideal(job: Job, args) -> dict:
    L = build_lattice(job.poset, _lattice_cap())
    gens = hibi_generators(L)
    comps = primary_decomposition(L)
    out = {
        "generators": [{"lead": [format_ideal(h.alpha), format_ideal(h.beta)],
                        "trail": [format_ideal(h.meet), format_ideal(h.join)]} for h in gens],
        "initial_ideal": [[format_ideal(a) for a in m] for m in initial_ideal(L)],
        "primary_components": [[format_ideal(a) for a in c.variables] for c in comps],
        "codim": codim(L),
    }
    if args.verify_groebner:
        out["groebner_verified"] = verify_groebner_property(L)
        if not out["groebner_verified"]:
            raise errors.InternalConsistencyError("Hibi binomials failed the S-pair check")
    out["pretty"] = "\n".join(str(h) for h in gens) or "I = 0"
    return out


COMMANDS = {
    "lattice": cmd_lattice,
    "hilbert": cmd_hilbert,
    "multidegree": cmd_multidegree,
    "cs": cmd_cs,
    "grading-recover": cmd_grading_recover,
    "ideal": cmd_ideal,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hibi", description="Multigraded Hibi rings")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", "-i", required=True, help="JSON job file")
        if name == "hilbert":
            p.add_argument("--k-polynomial", action="store_true")
            p.add_argument("--specialize", action="store_true", help="also set every t_i to t")
            p.add_argument("--oracle-check", type=int, metavar="DEGREE_BOUND")
        elif name == "multidegree":
            p.add_argument("--route", choices=["k", "chains", "both"], default="k")
        elif name == "ideal":
            p.add_argument("--verify-groebner", action="store_true")
    return parser


def _fail(code: int, message: str, **extra) -> int:
    print(json.dumps({"error": message, **extra}), file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = load_job(args.input)
        result = COMMANDS[args.command](job, args)
    except (JobError, errors.CycleDetected, errors.IndexOutOfRange, errors.Unsupported) as exc:
        return _fail(EXIT_PARSE, str(exc))
    except errors.LatticeTooLarge as exc:
        return _fail(EXIT_TOO_LARGE, str(exc))
    except errors.NotAChain as exc:
        return _fail(EXIT_NOT_A_CHAIN, str(exc))
    except errors.NotHomogeneous as exc:
        return _fail(EXIT_NOT_HOMOGENEOUS, str(exc), pair=[format_ideal(x) for x in exc.pair])
    except (errors.InternalConsistencyError, errors.CapExceeded) as exc:
        return _fail(EXIT_INTERNAL, str(exc))
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
