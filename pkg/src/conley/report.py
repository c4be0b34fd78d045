"""Deterministic report construction and rendering.

Builders produce plain dicts (JSON-ready: integers, strings, lists) with a
fixed key order; renderers turn them into text or JSON.  Basic sets are
always listed sorted by name, polynomials as ascending integer coefficient
arrays, and rational matrix entries as integers or "p/q" strings, so the
same input yields byte-identical output on every run.
"""

from __future__ import annotations

import json

from .dynamics import (conley_index, count_periodic,
                       enumerate_periodic_oracle, lefschetz_series,
                       morse_split_check, zeta_basic_set, zeta_via_index)
from .errors import ResourceError
from .linalg import char_reversed, char_reversed_rational
from .poly import IntPolynomial
from .spectral import (generalized_image, generalized_kernel,
                       jordan_profile, nonnilpotent_part)


def fraction_str(x):
    return str(x.numerator) if x.denominator == 1 else \
        f"{x.numerator}/{x.denominator}"


def encode_fraction(x):
    return int(x) if x.denominator == 1 else fraction_str(x)


def encode_matrix(m):
    return [[encode_fraction(x) for x in m.row_list(i)]
            for i in range(m.rows)]


def encode_poly(p):
    return list(p.coeffs)


def encode_ratfunc(f):
    return {"numerator": encode_poly(f.num),
            "denominator": encode_poly(f.den),
            "display": str(f)}


def matrix_lines(m):
    if m.rows == 0 or m.cols == 0:
        return [f"[] ({m.rows}x{m.cols})"]
    cells = [[fraction_str(x) for x in m.row_list(i)] for i in range(m.rows)]
    width = max(len(s) for row in cells for s in row)
    return ["[" + " ".join(f"{s:>{width}}" for s in row) + "]"
            for row in cells]


def _set_header(basic):
    return {"name": basic.name, "index": basic.index_u,
            "matrix": encode_matrix(basic.structure.matrix),
            "from_graph": basic.shift is not None}


def build_index_report(system):
    dim = system.effective_dim()
    sets = []
    for basic in system.sorted_sets():
        section = _set_header(basic)
        index = conley_index(basic, dim)
        if index.is_trivial:
            section["conley_index"] = {"nontrivial_degree": None}
        else:
            degree = index.degrees()[0]
            entry = index.entry(degree)
            section["conley_index"] = {
                "nontrivial_degree": degree,
                "dim": entry.dim,
                "map": encode_matrix(entry.matrix),
                "invariant_factors": [encode_poly(f)
                                      for f in entry.invariant_factors],
            }
        sets.append(section)
    return {"command": "index", "ambient_dim": system.ambient_dim,
            "basic_sets": sets}


def _encode_profile(profile):
    return [{"factor": encode_poly(e.factor),
             "factor_display": str(e.factor),
             "kind": e.kind,
             "block_sizes": list(e.block_sizes),
             "algebraic_multiplicity": e.algebraic_multiplicity,
             "geometric_multiplicity": e.geometric_multiplicity}
            for e in profile.entries]


def build_jordan_report(system):
    sets = []
    for basic in system.sorted_sets():
        section = _set_header(basic)
        profile = jordan_profile(basic.structure.matrix)
        section["jordan_profile"] = _encode_profile(profile)
        section["nonzero_profile"] = _encode_profile(
            profile.without_zero_class())
        sets.append(section)
    return {"command": "jordan", "ambient_dim": system.ambient_dim,
            "basic_sets": sets}


def build_zeta_report(system):
    dim = system.effective_dim()
    sets = []
    product = None
    for basic in system.sorted_sets():
        section = _set_header(basic)
        zeta = zeta_basic_set(basic, dim)
        section["zeta"] = encode_ratfunc(zeta)
        product = zeta if product is None else product * zeta
        sets.append(section)
    report = {"command": "zeta", "ambient_dim": system.ambient_dim,
              "basic_sets": sets}
    if product is not None:
        report["product"] = encode_ratfunc(product)
    return report


def build_morse_report(system, q):
    result = morse_split_check(system, q)
    return {"command": "morse", "q": q,
            "split_asserted_at": result.split_asserted_at,
            "lhs": encode_ratfunc(result.lhs_product),
            "rhs": encode_ratfunc(result.rhs_product),
            "p": encode_ratfunc(result.p_of_t),
            "is_integer_polynomial": result.is_integer_polynomial}


def _check(name, check, status, detail):
    return {"basic_set": name, "check": check, "status": status,
            "detail": detail}


def build_verify_report(system, max_enum=6):
    """Run the cross-check oracles on every basic set.

    Each check pits two independent routes against each other: brute-force
    periodic words vs the trace formula, the zeta function through the
    Conley index vs directly from the structure matrix, and the
    eventual-image restriction against its defining identities.
    """
    dim = system.effective_dim()
    checks = []
    for basic in system.sorted_sets():
        name = basic.name
        a = basic.structure.matrix
        n = a.rows

        if basic.shift is not None:
            try:
                bad = None
                for period in range(1, max_enum + 1):
                    counted = count_periodic(basic.shift, period)
                    enumerated = enumerate_periodic_oracle(
                        basic.shift, period, max_period=max_enum)
                    if counted != enumerated:
                        bad = (period, counted, enumerated)
                        break
                if bad is None:
                    checks.append(_check(
                        name, "periodic_counts", "pass",
                        f"trace formula matches enumeration for n = "
                        f"1..{max_enum}"))
                else:
                    checks.append(_check(
                        name, "periodic_counts", "fail",
                        f"n = {bad[0]}: trace gives {bad[1]}, enumeration "
                        f"gives {bad[2]}"))
            except ResourceError as exc:
                checks.append(_check(name, "periodic_counts", "skipped",
                                     str(exc)))

        direct = zeta_basic_set(basic, dim)
        via_index = zeta_via_index(basic, dim)
        checks.append(_check(
            name, "zeta_routes",
            "pass" if direct == via_index else "fail",
            f"direct {direct} vs index route {via_index}"))

        induced = nonnilpotent_part(a)
        same_poly = char_reversed(a) == \
            char_reversed_rational(induced.matrix)
        checks.append(_check(
            name, "nilpotent_part_contributes_one",
            "pass" if same_poly else "fail",
            "det(I - A t) agrees with det(I - A+ t)"
            if same_poly else "the reversed characteristic polynomials "
            "differ"))

        split_ok = generalized_kernel(a).dim + generalized_image(a).dim == n
        checks.append(_check(
            name, "kernel_image_split",
            "pass" if split_ok else "fail",
            f"dim gKer + dim gIm = {n}" if split_ok else
            "dimension count failed"))

        try:
            induced.verify()
            checks.append(_check(name, "induced_map", "pass",
                                 "intertwines its basis and is invertible"))
        except Exception as exc:    # noqa: BLE001 - reported, not raised
            checks.append(_check(name, "induced_map", "fail", str(exc)))

        traces = lefschetz_series(basic, dim, n + 3) if n else []
        plus = induced.matrix
        tail_ok = all(
            traces[k - 1] == (plus ** k).trace()
            for k in range(max(n, 1), n + 4)) if n else True
        checks.append(_check(
            name, "trace_tail",
            "pass" if tail_ok else "fail",
            f"trace(A^k) = trace(A+^k) for k = {n}..{n + 3}" if tail_ok
            else "trace tails differ"))

    ok = all(c["status"] != "fail" for c in checks)
    return {"command": "verify", "ambient_dim": system.ambient_dim,
            "checks": checks, "ok": ok}


# ---------------------------------------------------------------------------
# rendering

def render_json(report):
    return json.dumps(report, indent=2) + "\n"


def _text_set_header(section, lines):
    lines.append(f"basic set '{section['name']}' "
                 f"(index {section['index']})")
    lines.append("  structure matrix"
                 + (" (from graph):" if section["from_graph"] else ":"))
    for row in _decoded_matrix_lines(section["matrix"]):
        lines.append(f"    {row}")


def _decoded_matrix_lines(rows):
    if not rows or not rows[0]:
        return [f"[] ({len(rows)}x{len(rows[0]) if rows else 0})"]
    cells = [[str(x) for x in row] for row in rows]
    width = max(len(s) for row in cells for s in row)
    return ["[" + " ".join(f"{s:>{width}}" for s in row) + "]"
            for row in cells]


def _poly_display(coeffs):
    return str(IntPolynomial(coeffs))


def _text_index(report, lines):
    for section in report["basic_sets"]:
        _text_set_header(section, lines)
        info = section["conley_index"]
        if info["nontrivial_degree"] is None:
            lines.append("  Conley index: (0, 0) in every degree")
        else:
            lines.append(f"  Conley index: degree "
                         f"{info['nontrivial_degree']}, dimension "
                         f"{info['dim']}; (0, 0) in every other degree")
            lines.append("    automorphism:")
            for row in _decoded_matrix_lines(info["map"]):
                lines.append(f"      {row}")
            factors = ", ".join(_poly_display(f)
                                for f in info["invariant_factors"])
            lines.append(f"    invariant factors: {factors}")
        lines.append("")


def _text_profile(entries, lines, indent):
    if not entries:
        lines.append(f"{indent}(empty)")
        return
    for e in entries:
        sizes = ", ".join(str(s) for s in e["block_sizes"])
        lines.append(
            f"{indent}{e['factor_display']}  [{e['kind']}]  "
            f"blocks ({sizes})  algebraic {e['algebraic_multiplicity']}, "
            f"geometric {e['geometric_multiplicity']}")


def _text_jordan(report, lines):
    for section in report["basic_sets"]:
        _text_set_header(section, lines)
        lines.append("  block profile:")
        _text_profile(section["jordan_profile"], lines, "    ")
        lines.append("  after removing the zero class:")
        _text_profile(section["nonzero_profile"], lines, "    ")
        lines.append("")


def _text_zeta(report, lines):
    for section in report["basic_sets"]:
        _text_set_header(section, lines)
        lines.append(f"  zeta function: {section['zeta']['display']}")
        lines.append("")
    if "product" in report:
        lines.append(f"product over all basic sets: "
                     f"{report['product']['display']}")


def _text_morse(report, lines):
    lines.append(f"Morse polynomial check at q = {report['q']}")
    asserted = report["split_asserted_at"]
    lines.append("  splitting asserted at: "
                 + ("(not asserted)" if asserted is None else str(asserted)))
    lines.append(f"  lhs (zeta product over indices <= q): "
                 f"{report['lhs']['display']}")
    lines.append(f"  rhs (ambient homology product):       "
                 f"{report['rhs']['display']}")
    lines.append(f"  P(t) = {report['p']['display']}")
    lines.append(f"  integer polynomial: "
                 f"{'yes' if report['is_integer_polynomial'] else 'no'}")


def _text_verify(report, lines):
    for c in report["checks"]:
        lines.append(f"{c['status']:>7}  {c['basic_set']}: {c['check']} "
                     f"({c['detail']})")
    lines.append("")
    lines.append("all checks passed" if report["ok"]
                 else "CHECK FAILURES DETECTED")


def render_text(report):
    lines = []
    command = report["command"]
    if command == "index":
        _text_index(report, lines)
    elif command == "jordan":
        _text_jordan(report, lines)
    elif command == "zeta":
        _text_zeta(report, lines)
    elif command == "morse":
        _text_morse(report, lines)
    elif command == "verify":
        _text_verify(report, lines)
    else:
        raise ValueError(f"unknown report command {command!r}")
    while lines and lines[-1] == "":
        lines.pop()
    return "\n".join(lines) + "\n"
