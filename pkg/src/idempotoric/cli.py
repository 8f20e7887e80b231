"""JSON job runner and command-line front end.

A job document selects a mode and carries one payload:

    {"schema": "idempotoric/v1", "mode": "eigen",
     "payload": {"eigenvalues": ["2", "3", "6"]}}

Rationals travel as exact "p/q" strings (or plain integers); floats are
rejected outright so nothing is silently rounded.  Reports are emitted
with sorted keys and fixed indentation, so the same job always produces
the same bytes.
"""

import argparse
import json
import random
import re
import sys
from fractions import Fraction
from pathlib import Path

from .cones import FacePoset, cone_from_generators, enumerate_faces, is_face
from .eigen import (
    character_data,
    check_relation_criterion,
    eigen_input,
    factor,
    power_invariance,
    primitive_relations,
    smallest_idempotent_indices,
)
from .errors import InputError, InternalCheckError
from .finite import (
    all_associative_tables,
    check_smallest_criterion,
    greens_classes,
    idempotent_elements,
    idempotent_power,
    index_period,
    smallest_idempotent_commutative,
    validate_table,
    zmod_times,
)
from .monoids import (
    IdempotentPoset,
    idempotents,
    largest_idempotent,
    maximal_chain_length,
    monoid_from_generators,
    toric_envelope,
)

SCHEMA = "idempotoric/v1"

_MODES = ("cone", "eigen", "finite", "monoid", "selftest")

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?")


# -- payload scalars -----------------------------------------------------------


def _int(x, what) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what} must be an integer, got {x!r}")
    return x


def _rational(x, what) -> Fraction:
    if isinstance(x, bool):
        raise InputError(f"{what} must be a rational, got a boolean")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        if not _RATIONAL_RE.fullmatch(x):
            raise InputError(f"{what}: {x!r} is not an integer or 'p/q' string")
        if "/" in x:
            num, den = x.split("/")
            if int(den) == 0:
                raise InputError(f"{what}: zero denominator in {x!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(x))
    raise InputError(
        f"{what} must be an integer or 'p/q' string, got {type(x).__name__}"
    )


def _expect_keys(payload, allowed) -> None:
    unknown = sorted(set(payload) - set(allowed))
    if unknown:
        raise InputError(f"unknown payload keys: {', '.join(map(str, unknown))}")
    missing = sorted(set(allowed) - set(payload))
    if missing:
        raise InputError(f"missing payload keys: {', '.join(missing)}")


def _int_rows(raw, what):
    if not isinstance(raw, list):
        raise InputError(f"{what} must be an array of arrays")
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, list):
            raise InputError(f"{what}[{i}] must be an array")
        rows.append(tuple(_int(x, f"{what}[{i}] entry") for x in row))
    return rows


# -- serialization helpers -------------------------------------------------------


def _poset_doc(p: IdempotentPoset) -> dict:
    return {
        "elements": [
            {"index_set": list(e.index_set), "face_dim": e.face_dim}
            for e in p.elements
        ],
        "hasse_edges": [list(edge) for edge in p.hasse_edges],
        "smallest": p.smallest,
        "largest": p.largest,
    }


def _envelope_doc(env) -> dict:
    return {
        "envelope_dim": env.envelope_dim,
        "quotient_rank": env.quotient_rank,
        "unit_lattice_basis": [list(row) for row in env.unit_lattice.basis.entries],
        "projected_generators": [list(g) for g in env.projected_generators],
        "idempotents": _poset_doc(env.envelope_idempotent_poset),
    }


def _relation_doc(rel) -> dict:
    return {
        "lhs": [[i, a] for i, a in rel.lhs],
        "rhs": [[i, a] for i, a in rel.rhs],
    }


def _set_text(indices) -> str:
    return "{" + ",".join(str(i) for i in indices) + "}"


# -- cross-checks ----------------------------------------------------------------


def _subset_oracle(cone, poset_sets, shift) -> str:
    """Compare enumerated faces against the one-subset-at-a-time test.

    poset_sets holds index sets shifted by `shift` (1 for the idempotent
    layer, 0 for the raw cone layer).  Quadratic in 2^r, so skipped for
    wide generator lists.
    """
    r = len(cone.generators)
    if r > 10:
        return "skipped: more than 10 generators"
    accepted = set()
    for mask in range(1 << r):
        subset = tuple(i for i in range(r) if mask >> i & 1)
        if is_face(cone, subset) is not None:
            accepted.add(tuple(i + shift for i in subset))
    if accepted != poset_sets:
        raise InternalCheckError("subset oracle disagrees with face enumeration")
    return "ok"


def _relation_filter_check(poset, rels) -> str:
    for e in poset.elements:
        if not check_relation_criterion(e.index_set, rels):
            raise InternalCheckError(
                f"face {e.index_set} rejected by the relation filter"
            )
    return "ok"


# -- mode handlers -----------------------------------------------------------------


def _run_eigen(payload, bound, crosscheck):
    _expect_keys(payload, {"eigenvalues"})
    raw = payload["eigenvalues"]
    if not isinstance(raw, list) or not raw:
        raise InputError("eigenvalues must be a nonempty array")
    e = eigen_input([_rational(x, "eigenvalue") for x in raw])
    t = factor(e)
    w = character_data(t)
    p = idempotents(w)
    rels = primitive_relations(t, coeff_bound=bound)
    env = toric_envelope(w)
    small = smallest_idempotent_indices(e)
    large = largest_idempotent(p).index_set
    if not power_invariance(e, 2):
        raise InternalCheckError("squaring the spectrum changed the weight monoid")
    report = {
        "schema": SCHEMA,
        "mode": "eigen",
        "eigenvalues": [str(q) for q in e.eigenvalues],
        "multiplicities": list(e.multiplicities),
        "primes": list(t.primes),
        "signs": list(t.signs),
        "exponent_matrix": [list(row) for row in t.matrix],
        "lattice_rank": w.ambient_rank,
        "generators": [list(g) for g in w.generators],
        "labels": list(w.labels),
        "relation_bound": bound,
        "primitive_relations": [_relation_doc(r) for r in rels],
        "idempotents": _poset_doc(p),
        "smallest_index_set": list(small),
        "largest_index_set": list(large),
        "chain_length": maximal_chain_length(p),
        "envelope": _envelope_doc(env),
        "power_invariance_squared": True,
    }
    if crosscheck:
        cone = cone_from_generators(w.ambient_rank, list(w.generators))
        report["crosschecks"] = {
            "subset_oracle": _subset_oracle(
                cone, {e.index_set for e in p.elements}, 1
            ),
            "relation_filter": _relation_filter_check(p, rels),
        }
    return report, p


def _run_monoid(payload, bound, crosscheck):
    _expect_keys(payload, {"ambient_dim", "generators"})
    dim = _int(payload["ambient_dim"], "ambient_dim")
    if dim < 0:
        raise InputError("ambient_dim must be nonnegative")
    rows = _int_rows(payload["generators"], "generators")
    for i, row in enumerate(rows):
        if len(row) != dim:
            raise InputError(
                f"generators[{i}] has length {len(row)}, expected ambient_dim={dim}"
            )
    w = monoid_from_generators(rows)
    p = idempotents(w)
    env = toric_envelope(w)
    report = {
        "schema": SCHEMA,
        "mode": "monoid",
        "ambient_dim": dim,
        "lattice_rank": w.ambient_rank,
        "generators": [list(g) for g in w.generators],
        "labels": [f"g{i}" for i in range(1, len(w.generators) + 1)],
        "idempotents": _poset_doc(p),
        "smallest_index_set": list(p.elements[p.smallest].index_set),
        "largest_index_set": list(p.elements[p.largest].index_set),
        "chain_length": maximal_chain_length(p),
        "envelope": _envelope_doc(env),
    }
    if crosscheck:
        cone = cone_from_generators(w.ambient_rank, list(w.generators))
        report["crosschecks"] = {
            "subset_oracle": _subset_oracle(cone, {e.index_set for e in p.elements}, 1)
        }
    return report, p


def _run_cone(payload, bound, crosscheck):
    _expect_keys(payload, {"ambient_dim", "generators"})
    dim = _int(payload["ambient_dim"], "ambient_dim")
    if dim < 0:
        raise InputError("ambient_dim must be nonnegative")
    rows = _int_rows(payload["generators"], "generators")
    for i, row in enumerate(rows):
        if len(row) != dim:
            raise InputError(
                f"generators[{i}] has length {len(row)}, expected ambient_dim={dim}"
            )
    cone = cone_from_generators(dim, rows)
    poset = enumerate_faces(cone)
    report = {
        "schema": SCHEMA,
        "mode": "cone",
        "ambient_dim": dim,
        "generators": [list(g) for g in rows],
        "dim": cone.dim,
        "extreme_rays": [list(r) for r in cone.extreme_rays],
        "facets": [list(f) for f in cone.facets],
        "lineality_basis": [list(row) for row in cone.lineality.basis.entries],
        "lineality_rank": cone.lineality.rank,
        "faces": [
            {"index_set": list(f.index_set), "dim": f.dim, "witness": list(f.witness)}
            for f in poset.faces
        ],
        "hasse_edges": [list(edge) for edge in poset.hasse_edges],
        "bottom": poset.bottom,
        "top": poset.top,
    }
    if crosscheck:
        report["crosschecks"] = {
            "subset_oracle": _subset_oracle(
                cone, {f.index_set for f in poset.faces}, 0
            )
        }
    return report, poset


def _run_finite(payload, bound, crosscheck):
    _expect_keys(payload, {"table"})
    rows = _int_rows(payload["table"], "table")
    s = validate_table([list(row) for row in rows])
    idems = idempotent_elements(s)
    g = greens_classes(s)
    periods = []
    for x in range(s.size):
        ip = index_period(s, x)
        periods.append([x, ip.index, ip.period])
    report = {
        "schema": SCHEMA,
        "mode": "finite",
        "size": s.size,
        "commutative": s.commutative,
        "idempotents": list(idems),
        "smallest_idempotent": (
            smallest_idempotent_commutative(s) if s.commutative else None
        ),
        "index_period": periods,
        "greens": {
            "l_classes": [list(c) for c in g.l_classes],
            "r_classes": [list(c) for c in g.r_classes],
            "j_classes": [list(c) for c in g.j_classes],
            "h_classes": [list(c) for c in g.h_classes],
        },
        "criterion": {str(e): check_smallest_criterion(s, e) for e in idems},
    }
    if crosscheck:
        for x in range(s.size):
            idempotent_power(s, x)
        report["crosschecks"] = {"idempotent_powers": "ok"}
    return report, None


# -- self test -------------------------------------------------------------------


def _random_cone_jobs(seed, count, max_dim=4, max_gens=6, bound=3):
    rng = random.Random(seed)
    jobs = []
    for _ in range(count):
        dim = rng.randint(1, max_dim)
        r = rng.randint(0, max_gens)
        gens = [
            tuple(rng.randint(-bound, bound) for _ in range(dim)) for _ in range(r)
        ]
        jobs.append((dim, gens))
    return jobs


def _random_spectra(seed, count, max_len=5, bound=30):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        values = []
        for _ in range(rng.randint(1, max_len)):
            num = rng.choice([n for n in range(-bound, bound + 1) if n != 0])
            den = rng.randint(1, bound)
            values.append(Fraction(num, den))
        out.append(values)
    return out


def run_selftest() -> dict:
    checks = []

    def run_cases(name, cases, body):
        passed = failed = 0
        for case in cases:
            try:
                body(case)
                passed += 1
            except (InternalCheckError, AssertionError):
                failed += 1
        checks.append({"name": name, "passed": passed, "failed": failed})

    def face_oracle(job):
        dim, gens = job
        cone = cone_from_generators(dim, gens)
        poset = enumerate_faces(cone)
        _subset_oracle(cone, {f.index_set for f in poset.faces}, 0)

    run_cases("face_oracle", _random_cone_jobs(1, 15), face_oracle)

    spectra = _random_spectra(2, 12)

    def invariance(case):
        values, n = case
        assert power_invariance(eigen_input(values), n)

    run_cases(
        "power_invariance", [(v, n) for v in spectra for n in (2, 3)], invariance
    )

    def rel_filter(values):
        t = factor(eigen_input(values))
        p = idempotents(character_data(t))
        _relation_filter_check(p, primitive_relations(t))

    run_cases("relation_filter", _random_spectra(3, 12), rel_filter)

    tables = [s for n in (1, 2, 3) for s in all_associative_tables(n)]
    tables.extend(zmod_times(n) for n in range(1, 16))

    def criterion(case):
        s, e = case
        check_smallest_criterion(s, e)

    run_cases(
        "catalogue_criterion",
        [(s, e) for s in tables for e in idempotent_elements(s)],
        criterion,
    )

    def powers(case):
        s, x = case
        f = idempotent_power(s, x)
        seen = set()
        y = x
        while y not in seen:
            seen.add(y)
            y = s.table[y][x]
        assert f in seen

    run_cases(
        "idempotent_powers", [(s, x) for s in tables for x in range(s.size)], powers
    )

    ok = all(c["failed"] == 0 for c in checks)
    return {"schema": SCHEMA, "mode": "selftest", "checks": checks, "ok": ok}


# -- document dispatch -------------------------------------------------------------


def _execute(doc, relation_bound, crosscheck):
    if not isinstance(doc, dict):
        raise InputError("job document must be a JSON object")
    unknown = sorted(set(doc) - {"schema", "mode", "payload"})
    if unknown:
        raise InputError(f"unknown document keys: {', '.join(map(str, unknown))}")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise InputError(f"unsupported schema {schema!r}; this build speaks {SCHEMA}")
    mode = doc.get("mode")
    if mode not in _MODES:
        raise InputError(f"mode must be one of: {', '.join(_MODES)}")
    if isinstance(relation_bound, bool) or not isinstance(relation_bound, int):
        raise InputError("relation bound must be a positive integer")
    if relation_bound < 1:
        raise InputError("relation bound must be a positive integer")
    payload = doc.get("payload", {} if mode == "selftest" else None)
    if payload is None:
        raise InputError(f"mode {mode!r} requires a payload object")
    if not isinstance(payload, dict):
        raise InputError("payload must be a JSON object")
    if mode == "selftest":
        _expect_keys(payload, ())
        return run_selftest(), None
    handler = {
        "eigen": _run_eigen,
        "monoid": _run_monoid,
        "cone": _run_cone,
        "finite": _run_finite,
    }[mode]
    return handler(payload, relation_bound, crosscheck)


def run(doc, relation_bound: int = 3, crosscheck: bool = True) -> dict:
    """Execute a job document and return the report as a JSON-ready dict."""
    report, _ = _execute(doc, relation_bound, crosscheck)
    return report


# -- DOT rendering -------------------------------------------------------------------


def export_dot(poset) -> str:
    """Render a face or idempotent poset as a Graphviz digraph.

    One node per element labeled with its index set and dimension, edges
    from smaller to larger, elements of equal dimension pinned to the
    same rank.  Output is byte-deterministic.
    """
    if isinstance(poset, FacePoset):
        items = [(f.index_set, f.dim) for f in poset.faces]
        edges = poset.hasse_edges
    elif isinstance(poset, IdempotentPoset):
        items = [(e.index_set, e.face_dim) for e in poset.elements]
        edges = poset.hasse_edges
    else:
        raise InputError("dot output needs a face or idempotent poset")
    lines = ["digraph idempotents {", "  rankdir=BT;", "  node [shape=box];"]
    for i, (s, d) in enumerate(items):
        lines.append(f'  n{i} [label="{_set_text(s)}\\ndim {d}"];')
    for d in sorted({d for _, d in items}):
        members = " ".join(f"n{i};" for i, (_, dd) in enumerate(items) if dd == d)
        lines.append("  { rank=same; " + members + " }")
    for a, b in sorted(edges):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines)


# -- text rendering ---------------------------------------------------------------


def _relation_text(rel_doc) -> str:
    def side(terms):
        if not terms:
            return "1"
        return "*".join(
            f"t{i}" if a == 1 else f"t{i}^{a}" for i, a in terms
        )

    return side(rel_doc["lhs"]) + " = " + side(rel_doc["rhs"])


def _text_report(rep) -> str:
    mode = rep["mode"]
    lines = [f"{mode} report ({SCHEMA})"]
    if mode in ("eigen", "monoid"):
        if mode == "eigen":
            lines.append("eigenvalues: " + ", ".join(rep["eigenvalues"]))
            lines.append(
                "primes: " + (", ".join(str(p) for p in rep["primes"]) or "none")
            )
            rels = "; ".join(_relation_text(r) for r in rep["primitive_relations"])
            lines.append("relations: " + (rels or "none"))
        lines.append(f"lattice rank: {rep['lattice_rank']}")
        gens = " ".join(
            f"{lab}=({','.join(str(c) for c in g)})"
            for lab, g in zip(rep["labels"], rep["generators"])
        )
        lines.append("generators: " + gens)
        elements = rep["idempotents"]["elements"]
        lines.append(
            f"idempotents ({len(elements)}): "
            + " ".join(_set_text(e["index_set"]) for e in elements)
        )
        lines.append(
            "smallest: "
            + _set_text(rep["smallest_index_set"])
            + "  largest: "
            + _set_text(rep["largest_index_set"])
        )
        lines.append(f"chain length: {rep['chain_length']}")
        lines.append(f"envelope dim: {rep['envelope']['envelope_dim']}")
    elif mode == "cone":
        lines.append(f"ambient dim: {rep['ambient_dim']}  cone dim: {rep['dim']}")
        lines.append(f"extreme rays: {len(rep['extreme_rays'])}")
        lines.append(f"facets: {len(rep['facets'])}")
        lines.append(f"lineality rank: {rep['lineality_rank']}")
        lines.append(
            f"faces ({len(rep['faces'])}): "
            + " ".join(
                f"{_set_text(f['index_set'])}:dim{f['dim']}" for f in rep["faces"]
            )
        )
    elif mode == "finite":
        lines.append(f"size: {rep['size']}  commutative: {rep['commutative']}")
        lines.append(
            "idempotents: " + ", ".join(str(e) for e in rep["idempotents"])
        )
        if rep["smallest_idempotent"] is not None:
            lines.append(f"smallest idempotent: {rep['smallest_idempotent']}")
        lines.append(
            "criterion: "
            + " ".join(f"{e}={v}" for e, v in sorted(rep["criterion"].items()))
        )
        lines.append(f"j classes: {len(rep['greens']['j_classes'])}")
    else:
        for check in rep["checks"]:
            lines.append(
                f"{check['name']}: {check['passed']} passed, {check['failed']} failed"
            )
        lines.append("ok" if rep["ok"] else "FAILED")
    return "\n".join(lines)


# -- command line -------------------------------------------------------------------


def _reject_float(text):
    raise InputError(
        f"floating-point literal {text!r} not accepted; use an exact 'p/q' string"
    )


def _load_document(mode, input_arg):
    if mode == "selftest":
        return {"mode": "selftest", "payload": {}}
    if input_arg == "-":
        raw = sys.stdin.read()
    else:
        try:
            raw = Path(input_arg).read_text()
        except OSError as exc:
            raise InputError(f"cannot read input: {exc}")
    try:
        data = json.loads(raw, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON input: {exc}")
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    if {"schema", "mode", "payload"} & set(data):
        declared = data.get("mode", mode)
        if declared != mode:
            raise InputError(
                f"document says mode {declared!r} but the command line says {mode!r}"
            )
        doc = dict(data)
        doc["mode"] = mode
        return doc
    return {"mode": mode, "payload": data}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="idempotoric",
        description="idempotent structure of commutative algebraic semigroups",
    )
    sub = parser.add_subparsers(dest="mode", required=True)
    helps = {
        "eigen": "idempotent poset attached to a list of nonzero eigenvalues",
        "monoid": "idempotent poset of a finitely generated weight monoid",
        "cone": "face lattice of a rational polyhedral cone",
        "finite": "idempotents and Green's classes of a finite multiplication table",
        "selftest": "run the built-in oracle suites",
    }
    for mode in _MODES:
        p = sub.add_parser(mode, help=helps[mode])
        p.add_argument("--input", default="-", help="JSON file path, or - for stdin")
        p.add_argument("--format", choices=("json", "dot", "text"), default="json")
        p.add_argument(
            "--relation-bound",
            type=int,
            default=3,
            metavar="N",
            help="sup-norm bound for the primitive relation search (default 3)",
        )
        p.add_argument(
            "--no-crosscheck",
            action="store_true",
            help="skip the independent subset-oracle and filter cross-checks",
        )
    args = parser.parse_args(argv)
    try:
        doc = _load_document(args.mode, args.input)
        report, poset = _execute(doc, args.relation_bound, not args.no_crosscheck)
        if args.format == "dot":
            if poset is None:
                raise InputError(f"mode {args.mode!r} has no poset to draw")
            out = export_dot(poset)
        elif args.format == "text":
            out = _text_report(report)
        else:
            out = json.dumps(report, sort_keys=True, indent=2)
        print(out)
        return 0 if report.get("ok", True) else 2
    except InputError as exc:
        print(
            json.dumps(
                {"schema": SCHEMA, "error": {"kind": "input", "message": str(exc)}},
                sort_keys=True,
                indent=2,
            )
        )
        return 1
    except InternalCheckError as exc:
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "error": {"kind": "internal", "message": str(exc)},
                },
                sort_keys=True,
                indent=2,
            )
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
