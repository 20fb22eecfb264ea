"""Command-line verification front end.

Each subcommand runs one suite of claims and prints a pass/fail line per
claim; ``all`` runs everything.  Reports are deterministic: identical
inputs and seed produce byte-identical JSON.  Exit status is 0 when every
claim passes, 1 when any claim fails, 2 on malformed input.

The ``--defect`` flag injects a deliberate fault (a tampered sharp
component, a skipped chart substitution, or a perturbed dictionary entry)
so the detection machinery itself can be exercised end to end.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import coord8, grading, hvariety, jordan, relatives
from .coord8 import Hypermatrix
from .exactcore import Poly, span_compare

SCHEMA_VERSION = 1

DEFECTS = ("tampered-sharp", "skip-chart-substitution", "perturbed-dictionary")


@dataclasses.dataclass
class Claim:
    claim_id: str
    description: str
    status: str
    data: dict

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def claim(claim_id: str, description: str, ok: bool, data: dict | None = None) -> Claim:
    return Claim(claim_id, description, "pass" if ok else "fail", data or {})


def _jsonable(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Poly):
        return value.to_str()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def suite_axioms(seed: int, samples: int, defect: str | None = None) -> list[Claim]:
    claims: list[Claim] = []
    pres = coord8.presentation(None)
    if defect == "tampered-sharp":
        ring = pres.ring
        tampered = list(pres.sharp)
        tampered[0] = tampered[0] + ring.var("x11") * ring.var("x11")
        pres = dataclasses.replace(pres, sharp=tuple(tampered))

    rep = jordan.verify_sharp_conditions(pres)
    for tag, key, ok in (("sharp1", "s1", rep.s1), ("sharp2", "s2", rep.s2),
                         ("sharp3", "s3", rep.s3)):
        residual = next((r.to_str() for r in rep.residuals.get(key, [])), None)
        claims.append(claim(
            f"axioms/{tag}",
            "defining condition of the sharp map holds as an exact identity "
            "with symbolic coordinates and parameters",
            ok, {"residual": residual}))

    table_rep = coord8.verify_peirce_identities(None)
    claims.append(claim("axioms/table-vs-map",
                        "product-table quadratic map equals the closed-form sharp map",
                        table_rep.table_matches_sharp_map, {}))
    claims.append(claim("axioms/idempotent-traces",
                        "each idempotent has trace one",
                        table_rep.idempotent_traces_ok, {}))
    claims.append(claim("axioms/triple-product",
                        "iterated product against an adjacent off-diagonal element "
                        "reduces to the negated quadratic spur",
                        table_rep.triple_product_ok, {}))
    claims.append(claim("axioms/rep-matrices",
                        "displayed 2x2 representation matrices are reproduced",
                        table_rep.rep_matrix_displays_ok, {}))
    claims.append(claim("axioms/rep-product",
                        "opposite representation matrices multiply to the negated spur",
                        table_rep.rep_product_ok, {}))
    claims.append(claim("axioms/rep-det",
                        "determinant normalization of the representation matrices",
                        table_rep.rep_det_ok, {}))

    # cubic-form specializations and the unit facts
    for name in ("origin", "p1", "p2", "p3"):
        P = hvariety.representative(name)
        got = coord8.cubic_form(P).to_str()
        want = hvariety._NP_DISPLAYS[name]
        claims.append(claim(f"axioms/cubic-display-{name}",
                            "specialized cubic form matches its closed display",
                            got == want, {"computed": got, "expected": want}))
    symbolic_cubic = coord8.cubic_form(None)
    claims.append(claim("axioms/cubic-integer-coefficients",
                        "fully symbolic cubic form has integer coefficients",
                        all(c.denominator == 1 for c in symbolic_cubic.coefficients()),
                        {"terms": len(symbolic_cubic.terms)}))

    base = coord8.presentation(None)
    unit_ok = []
    unit = base.unit_element()
    gen = base.generic_element()
    # the unit is the sum of the three idempotents and takes cubic value 1
    idem_sum = tuple(sum((base.basis_element(6 + i)[k] for i in range(3)),
                         base.ring.zero()) for k in range(9))
    unit_ok.append(all(a == b for a, b in zip(unit, idem_sum)))
    unit_ok.append(jordan.cubic_of(base, unit) == 1)
    # the U-operator of the unit is the identity
    u_unit = jordan.u_operator(base, unit, gen)
    unit_ok.append(all(a == b for a, b in zip(u_unit, gen)))
    # idempotents are bullet-idempotent with vanishing sharp
    for i in range(3):
        e = base.basis_element(6 + i)
        unit_ok.append(all(a == b for a, b in
                           zip(jordan.bullet_product(base, e, e), e)))
        unit_ok.append(all(c.is_zero() for c in jordan.sharp_of(base, e)))
    # the two expressions for the square agree symbolically
    sq_bullet = jordan.bullet_product(base, gen, gen)
    sq_sharp = jordan.square_via_sharp(base, gen)
    unit_ok.append(all(a == b for a, b in zip(sq_bullet, sq_sharp)))
    # spur identity S(x, y) = T(x) T(y) - T(x, y)
    ext, y = base.fresh_symbols()
    x = base.generic_element(ext)
    lhs = jordan.spur_bilinear(base, x, y)
    rhs = (jordan.trace_linear(base, x) * jordan.trace_linear(base, y)
           - jordan.trace_bilinear(base, x, y))
    unit_ok.append(lhs == rhs)
    claims.append(claim("axioms/unit-and-idempotents",
                        "unit decomposition, unit operator, idempotent facts, "
                        "square and spur identities all hold symbolically",
                        all(unit_ok), {"checks": len(unit_ok)}))
    return claims


def _random_invertible(rng: random.Random):
    from .exactcore import PolyMatrix
    ring = coord8.coord_ring(True)
    while True:
        m = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(2)]
             for _ in range(2)]
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0:
            return PolyMatrix.from_rows(ring, m)


def suite_classify(seed: int, samples: int, cube: Hypermatrix | None = None) -> tuple[list[Claim], list[str]]:
    lines: list[str] = []
    if cube is not None:
        label = hvariety.classify_orbit(cube)
        lines.append(f"{label.label}, D_H = {label.hyperdet}, "
                     f"flattening ranks {label.flattening_ranks}")
        return [claim("classify/input", "orbit classification of the given cube",
                      True, {"label": label.label, "hyperdet": label.hyperdet,
                             "ranks": list(label.flattening_ranks)})], lines

    claims: list[Claim] = []
    expected = {"origin": "origin", "p1": "O1", "p2": "O2", "p3": "O3", "p4": "O4"}
    for name, want in expected.items():
        got = hvariety.classify_orbit(hvariety.representative(name))
        claims.append(claim(f"classify/rep-{name}",
                            "representative cube lands in its orbit class",
                            got.label == want,
                            {"label": got.label, "hyperdet": got.hyperdet,
                             "ranks": list(got.flattening_ranks)}))

    rng = random.Random(f"{seed}:classify")
    stable = True
    translates = 0
    for name in ("p1", "p2", "p3", "p4"):
        want = expected[name]
        for _ in range(20):
            g = hvariety.GroupElement(
                g1=_random_invertible(rng), g2=_random_invertible(rng),
                g3=_random_invertible(rng),
                perm=rng.choice([(1, 2, 3), (2, 3, 1), (3, 1, 2),
                                 (2, 1, 3), (1, 3, 2), (3, 2, 1)]))
            moved = hvariety.apply_group_to_cube(g, hvariety.representative(name))
            translates += 1
            if hvariety.classify_orbit(moved).label != want:
                stable = False
    claims.append(claim("classify/translate-invariance",
                        "classification is constant on sampled group translates",
                        stable, {"translates": translates}))

    for r in (1, 2, 3):
        rep = hvariety.factor_equivariance_certificate(r)
        claims.append(claim(f"classify/equivariance-factor{r}",
                            "stated generator transformation law holds with a "
                            "symbolic 2x2 factor", rep.ok,
                            {"failures": rep.failures}))
    for perm in ((2, 3, 1), (2, 1, 3)):
        rep = hvariety.permutation_certificate(perm)
        claims.append(claim(f"classify/equivariance-perm-{''.join(map(str, perm))}",
                            "index permutation maps the generator set to itself "
                            "up to signs", rep.ok, {"failures": rep.failures}))
    rep = hvariety.swap_all_factors_certificate()
    claims.append(claim("classify/equivariance-swap",
                        "triple antidiagonal swap exchanges pair rows and keeps "
                        "the span", rep.ok, {"failures": rep.failures}))

    exponents = {r: hvariety.hyperdet_covariance_exponent(r) for r in (1, 2, 3)}
    claims.append(claim("classify/hyperdet-covariance",
                        "hyperdeterminant transforms by the squared determinant "
                        "of each symbolic factor (exponent computed, not assumed)",
                        all(e == 2 for e in exponents.values()),
                        {"exponents": {str(k): v for k, v in exponents.items()}}))
    return claims, lines


def suite_fiber(seed: int, samples: int) -> list[Claim]:
    claims = []
    rep = hvariety.fiber_certificate_p4()
    claims.append(claim("fiber/p4-minors",
                        "generic fiber system span-equals the nine 2x2 minors "
                        "of the coordinate 3x3 matrix", rep.ok, rep.detail))
    rep = hvariety.fiber_certificate_p3()
    claims.append(claim("fiber/p3-degenerate",
                        "degenerate fiber system span-equals the symmetric "
                        "rank-one-plus-kernel system", rep.ok, rep.detail))
    for name in ("origin", "p1", "p2"):
        rep = hvariety.fiber_component_sampling(name, seed, max(samples, 20))
        claims.append(claim(f"fiber/{name}-components",
                            "every generator vanishes on sampled points of each "
                            "listed fiber component", rep.ok,
                            {**rep.detail, "failures": rep.failures}))
    return claims


def suite_chart(seed: int, samples: int, defect: str | None = None) -> list[Claim]:
    claims = []
    rep = hvariety.chart_reduce_u1(skip_u3=(defect == "skip-chart-substitution"))
    nonzero = [lbl for lbl, r in zip(hvariety.GEN_LABELS, rep.residuals)
               if not r.is_zero()]
    first_bad = next((r.to_str() for r in rep.residuals if not r.is_zero()), None)
    claims.append(claim("chart/reduction",
                        "chart elimination zeroes all nine generators "
                        "symbolically in the twelve free coordinates",
                        rep.ok, {"nonzero": nonzero, "residual": first_bad,
                                 "dimension": rep.chart_dimension}))
    claims.append(claim("chart/det-identity",
                        "on the chart the first difference determinant is minus "
                        "the product of the other two",
                        hvariety.chart_det_identity(), {}))
    pf = hvariety.pfaffian_vanishing_on_samples(seed, max(samples, 30))
    claims.append(claim("chart/pfaffians",
                        "all five signed 4x4 Pfaffians of the skew chart matrix "
                        "vanish on rescaled sample points", pf["ok"], pf))
    return claims


def suite_radicals(seed: int, samples: int) -> list[Claim]:
    claims = []
    for name in ("origin", "p1", "p2", "p3", "p4"):
        rep = hvariety.radical_locus_check(name, seed, max(samples, 20))
        claims.append(claim(f"radicals/{name}",
                            "sampled membership matches the stated locus, the "
                            "two membership tests agree, and the specialized "
                            "cubic form matches its display",
                            rep.ok, {**rep.detail, "failures": rep.failures}))
    sweep = hvariety.nondegenerate_sweep(seed, cubes=50, sigmas_per_cube=2)
    claims.append(claim("radicals/generic-nondegenerate",
                        "at cubes with nonvanishing hyperdeterminant no nonzero "
                        "element is an absolute zero divisor", sweep["ok"], sweep))
    return claims


def suite_specialize(seed: int, samples: int, defect: str | None = None) -> list[Claim]:
    claims = []
    for name in ("c2", "m8", "s6"):
        if defect == "perturbed-dictionary" and name == "c2":
            d = relatives.dictionary("c2")
            ring = d.target
            bad_mapping = dict(d.mapping)
            bad_mapping["x22"] = ring.var("th1") + ring.var("A12")
            specialized = hvariety.equations().substitute(bad_mapping, ring)
            result = span_compare(specialized.gens, relatives.c2_equations().gens)
            first = next((str(g) for g, w in zip(specialized.gens, result.a_in_b)
                          if w is None), None)
            claims.append(claim("specialize/c2",
                                "dictionary specialization span-equals the "
                                "cluster system", result.equal,
                                {"relation": result.relation, "residual": first}))
            continue
        rep = relatives.verify_specialization(name)
        claims.append(claim(f"specialize/{name}",
                            "dictionary specialization span-equals the target "
                            "equation system", rep.ok,
                            {"relation": rep.relation}))
    for name in ("h12", "h11"):
        rep = relatives.verify_specialization(name)
        claims.append(claim(f"specialize/{name}",
                            "partial specialization emits its generator set",
                            rep.ok, {"generators": len(rep.specialized)}))
    claims.append(claim("specialize/composed",
                        "freezing the remaining cluster parameters inside the "
                        "first partial specialization reproduces the cluster span",
                        relatives.composed_specialization_check(), {}))
    failures = relatives.m8_action_certificate()
    claims.append(claim("specialize/m8-action",
                        "two-factor action maps the ten generators into their "
                        "own span with symbolic factors", not failures,
                        {"failures": failures}))
    failures = relatives.s6_action_certificate()
    claims.append(claim("specialize/s6-action",
                        "3x3 frame action maps the nine generators into their "
                        "own span with a symbolic frame", not failures,
                        {"failures": failures}))
    claims.append(claim("specialize/m8-trace",
                        "sandwich block is trace-free, matching its trace-free "
                        "target shape", relatives.m8_trace_consistency(), {}))
    return claims


def suite_embeddings(seed: int, samples: int) -> list[Claim]:
    claims = []
    for part, cid in (("I", "prop76/part-i"), ("II", "prop76/part-ii")):
        rep = relatives.verify_cluster_embedding(part, seed, max(samples, 30))
        claims.append(claim(cid,
                            "sampled cluster-slice points satisfy every target "
                            "generator exactly and the transported weight "
                            "relations hold on the solved lattice",
                            rep.ok, {"samples": rep.samples,
                                     "weight_relations": rep.weight_relations,
                                     "failures": rep.failures}))
    return claims


def suite_weights(weights_arg) -> list[Claim]:
    claims = []
    eqs = hvariety.equations()
    if weights_arg is None:
        lattice = grading.solve_weight_constraints(eqs)
        std = grading.standard_weights()
        claims.append(claim("weights/lattice",
                            "homogeneity constraints solve to an affine lattice "
                            "containing the standard positive grading",
                            lattice.contains(std),
                            {"dimension": lattice.dimension}))
        return claims
    if isinstance(weights_arg, tuple):
        rep1, rep2 = grading.check_bigraded(eqs, *weights_arg)
        claims.append(claim("weights/bigraded",
                            "equations are homogeneous under both grading rows",
                            rep1.ok and rep2.ok,
                            {"row1": [str(x.weight) for x in rep1.per_generator],
                             "row2": [str(x.weight) for x in rep2.per_generator]}))
        return claims
    rep = grading.check_homogeneous(eqs, weights_arg)
    claims.append(claim("weights/homogeneous",
                        "equations are homogeneous under the given weights",
                        rep.ok,
                        {"weights": [str(x.weight) for x in rep.per_generator]}))
    if rep.ok and all(n in weights_arg for n in coord8.ALL_VARS) \
            and all(Fraction(weights_arg[n]) > 0 for n in coord8.ALL_VARS):
        can = grading.canonical_arithmetic(weights_arg)
        claims.append(claim("weights/canonical",
                            "weight sums satisfy the dualizing consistency "
                            "identity", can.consistent,
                            {"c": can.c, "d": can.d, "delta": can.delta,
                             "sum": can.weight_sum,
                             "variety_twist": can.variety_dualizing_twist}))
    return claims


def suite_hilbert(weights, sections: int) -> list[Claim]:
    claims = []
    w = weights if weights is not None else grading.standard_weights()
    can = grading.canonical_arithmetic(w)
    claims.append(claim("hilbert/canonical",
                        "generator-weight arithmetic and dualizing twists",
                        can.consistent,
                        {"c": can.c, "d": can.d, "delta": can.delta,
                         "sum": can.weight_sum,
                         "ambient_twist": can.ambient_dualizing_twist,
                         "variety_twist": can.variety_dualizing_twist}))
    num = grading.hilbert_numerator(w)
    delta = int(can.delta)
    claims.append(claim("hilbert/numerator",
                        "alternating shift sum of the resolution",
                        bool(num), {"numerator": grading.poly1_str(num)}))
    claims.append(claim("hilbert/palindromy",
                        "numerator is palindromic of top degree delta",
                        grading.numerator_is_palindromic(num, delta),
                        {"delta": delta}))
    claims.append(claim("hilbert/pairing",
                        "resolution shifts pair to the top shift",
                        grading.shift_pairing_holds(w), {}))
    fano = grading.fano_invariants(w, sections=sections)
    claims.append(claim("hilbert/invariants",
                        "exact anticanonical degree and genus of the section",
                        True, {"degree": fano.degree, "h0": fano.h0,
                               "genus": fano.genus, "dimension": fano.dimension}))
    return claims


def suite_toric_matrices() -> list[Claim]:
    claims = []
    eqs = hvariety.equations()
    for kind in ("base", "shifted", "swapped"):
        r1, r2 = grading.toric_weight_matrix(kind)
        h1, h2 = grading.check_bigraded(eqs, r1, r2)
        claims.append(claim(f"weights/bigraded-{kind}",
                            "equations are homogeneous under both rows of the "
                            "two-row weight matrix", h1.ok and h2.ok, {}))
    claims.append(claim("weights/row-operations",
                        "derived weight matrices are the stated row operations "
                        "of the base matrix",
                        grading.toric_matrices_row_equivalent(), {}))
    h12 = relatives.verify_specialization("h12").specialized
    rep = grading.check_homogeneous(h12, grading.example_5052_weights())
    claims.append(claim("weights/published-example",
                        "published weight system keeps the partial "
                        "specialization homogeneous", rep.ok, {}))
    return claims


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicjordan",
        description="exact verification suites for the sharp-map variety "
                    "and its relatives")
    parser.add_argument("command", choices=[
        "verify-axioms", "classify", "fiber", "chart", "radicals",
        "specialize", "prop76", "weights", "hilbert", "all"])
    parser.add_argument("--hypermatrix", type=Path, default=None,
                        help="cube file: 8 rationals or a JSON object")
    parser.add_argument("--weights", type=Path, default=None,
                        help="JSON weight file, scalar or two-element entries")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=30)
    parser.add_argument("--sections", type=int, default=9)
    parser.add_argument("--json", type=Path, default=None,
                        help="write the machine-readable report here")
    parser.add_argument("--defect", choices=DEFECTS, default=None,
                        help="inject a deliberate fault (self-test)")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    cube = None
    weights = None
    try:
        if args.hypermatrix is not None:
            cube = Hypermatrix.parse(args.hypermatrix.read_text())
        if args.weights is not None:
            weights = grading.parse_weight_file(args.weights.read_text())
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2

    claims: list[Claim] = []
    lines: list[str] = []
    try:
        if args.command == "verify-axioms":
            claims = suite_axioms(args.seed, args.samples, args.defect)
        elif args.command == "classify":
            claims, lines = suite_classify(args.seed, args.samples, cube)
        elif args.command == "fiber":
            claims = suite_fiber(args.seed, args.samples)
        elif args.command == "chart":
            claims = suite_chart(args.seed, args.samples, args.defect)
        elif args.command == "radicals":
            claims = suite_radicals(args.seed, args.samples)
        elif args.command == "specialize":
            claims = suite_specialize(args.seed, args.samples, args.defect)
        elif args.command == "prop76":
            claims = suite_embeddings(args.seed, args.samples)
        elif args.command == "weights":
            if weights is None and args.weights is not None:
                print("input error: unreadable weight file", file=sys.stderr)
                return 2
            claims = suite_weights(weights)
            claims += suite_toric_matrices()
        elif args.command == "hilbert":
            if isinstance(weights, tuple):
                print("input error: hilbert needs a single grading", file=sys.stderr)
                return 2
            claims = suite_hilbert(weights, args.sections)
        elif args.command == "all":
            claims = suite_axioms(args.seed, args.samples, args.defect)
            more, lines = suite_classify(args.seed, args.samples, None)
            claims += more
            claims += suite_fiber(args.seed, args.samples)
            claims += suite_chart(args.seed, args.samples, args.defect)
            claims += suite_radicals(args.seed, args.samples)
            claims += suite_specialize(args.seed, args.samples, args.defect)
            claims += suite_embeddings(args.seed, args.samples)
            claims += suite_weights(None)
            claims += suite_toric_matrices()
            claims += suite_hilbert(None, 9)
    except (ValueError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2

    claims.sort(key=lambda c: c.claim_id)
    for line in lines:
        print(line)
    for c in claims:
        print(f"[{'PASS' if c.passed else 'FAIL'}] {c.claim_id}")

    failed = [c for c in claims if not c.passed]
    summary = {"total": len(claims), "passed": len(claims) - len(failed),
               "failed": len(failed)}
    print(f"{summary['passed']}/{summary['total']} claims passed")

    if args.json is not None:
        report = {
            "schema": SCHEMA_VERSION,
            "command": args.command,
            "seed": args.seed,
            "samples": args.samples,
            "claims": [{
                "claim_id": c.claim_id,
                "description": c.description,
                "status": c.status,
                "data": _jsonable(c.data),
            } for c in claims],
            "summary": summary,
        }
        args.json.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")

    if failed:
        first = failed[0]
        residual = first.data.get("residual") or first.data.get("failures")
        print(f"first failing claim: {first.claim_id}: {residual}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
