"""Command-line surface: compute moments, list paths, inspect families,
and run the cross-validation suites.

Exit codes: 0 success, 1 bad input or failed check, 2 a required
Verblunsky coefficient is zero, 3 enumeration cap exceeded.
"""

import argparse
import csv
import io
import json
import random
import sys
import time
from fractions import Fraction

from .algebra import (GaussianRational, NUMERIC, SYMBOLIC, beta_form,
                      conjugate, exact_div, is_polynomial, render_scalar,
                      values_close)
from .core import VerblunskySequence, moment_oracle, phi
from .errors import (EnumerationCapExceeded, PositivityViolation,
                     UnsupportedFamily, ZeroVerblunsky)
from .families import (FAMILY_PARAMS, FamilySpec, closed_moment_nm,
                       closed_moment_nrs, family_mode, geronimus_gf_moment,
                       nrs_from_nm, verblunsky_of)
from .linearization import (expand_in_phistar_basis, phi_to_star_coeff,
                            phi_to_star_coeff_paths, star_basis_change,
                            star_overlap_matrix, star_pairing_oracle,
                            star_to_phi_coeff, star_to_phi_coeff_negative,
                            star_to_phi_coeff_paths, star_to_star_coeff,
                            star_to_star_coeff_paths)
from .matrices import (ScalarMatrix, cmv_walk_entry, det_identity_check,
                       rho_power_product, toeplitz_det, u_power_entry)
from .paths import (DEFAULT_CAP, enumerate_paths, moment_gmotzkin,
                    moment_lukasiewicz, moment_negative, moment_schroder,
                    path_weight, positivity_certificate)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ZERO_ALPHA = 2
EXIT_CAP = 3

CROSS_METHODS = ("lukasiewicz", "gmotzkin", "schroder", "matrix_u",
                 "matrix_cmv", "oracle")
MOMENT_METHODS = CROSS_METHODS + ("closed", "all")
PATH_MODELS = ("lukasiewicz", "gmotzkin", "schroder", "negative")
VERIFY_SUITES = ("cross-model", "reciprocity", "determinants", "families",
                 "linearization", "positivity", "all")


class CliError(Exception):
    """Invalid input or unsupported request; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors, which this interface
    # reserves for zero Verblunsky coefficients
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(EXIT_FAIL)


# ---------------------------------------------------------------------------
# literals and sequence construction


def _number_token(tok):
    """One signed part of a literal -> (Fraction | float, saw_decimal)."""
    if any(c in tok for c in ".eE"):
        return float(tok), True
    return Fraction(tok), False


def parse_complex_literal(text):
    """Parse ``a+bi`` with rational or decimal parts.

    Accepts plain reals (``1/2``, ``-0.3``), pure imaginaries (``2/5i``,
    ``-i``) and sums of both.  Returns (re, im, saw_decimal) with the
    parts kept exact (Fraction) unless written with a decimal point.
    """
    t = text.strip().replace(" ", "")
    if not t:
        raise CliError("empty literal")
    parts, start = [], 0
    for k in range(1, len(t)):
        if t[k] in "+-" and t[k - 1] not in "+-/.eE":
            parts.append(t[start:k])
            start = k
    parts.append(t[start:])
    if len(parts) > 2:
        raise CliError("cannot parse %r as a+bi" % text)
    re_val, im_val, dec = Fraction(0), Fraction(0), False
    seen = set()
    for part in parts:
        try:
            if part.endswith("i"):
                if "im" in seen:
                    raise CliError("two imaginary parts in %r" % text)
                seen.add("im")
                body = part[:-1]
                if body in ("", "+"):
                    im_val = Fraction(1)
                elif body == "-":
                    im_val = Fraction(-1)
                else:
                    im_val, d = _number_token(body)
                    dec = dec or d
            else:
                if "re" in seen:
                    raise CliError("two real parts in %r" % text)
                seen.add("re")
                re_val, d = _number_token(part)
                dec = dec or d
        except (ValueError, ZeroDivisionError):
            raise CliError("cannot parse %r as a+bi" % text)
    return re_val, im_val, dec


def literal_value(text, mode):
    """Literal -> scalar in the requested mode; decimals need numeric."""
    re_val, im_val, dec = parse_complex_literal(text)
    if mode == SYMBOLIC:
        if dec:
            raise CliError(
                "decimal literal %r requires numeric mode" % text)
        if im_val == 0:
            return re_val
        return GaussianRational(re_val, im_val)
    if im_val == 0:
        return float(re_val)
    return complex(float(re_val), float(im_val))


def random_alpha_table(rng, length, radius=0.9):
    """Deterministic table of complex entries with modulus <= radius."""
    out = []
    while len(out) < length:
        z = complex(rng.uniform(-radius, radius),
                    rng.uniform(-radius, radius))
        if abs(z) <= radius:
            out.append(z)
    return out


def _resolve_mode(args, spec, literals):
    """Explicit --mode wins; otherwise exact inputs pick symbolic."""
    if getattr(args, "mode", None):
        return args.mode
    if spec is not None:
        return family_mode(spec)
    if any(parse_complex_literal(t)[2] for t in literals):
        return NUMERIC
    return SYMBOLIC


def _family_spec(args, mode_hint=None):
    """FamilySpec from --family/--param, or None when absent."""
    name = getattr(args, "family", None)
    if name is None:
        return None
    tag = name.replace("-", "_")
    if tag not in FAMILY_PARAMS:
        raise CliError("unknown family %r; known: %s"
                       % (name, ", ".join(sorted(FAMILY_PARAMS))))
    raw = getattr(args, "param", None)
    if raw is None:
        raise CliError("--family needs --param %s=VALUE"
                       % FAMILY_PARAMS[tag])
    key, _, valtext = raw.partition("=")
    if key != FAMILY_PARAMS[tag]:
        raise CliError("family %s takes parameter %r, got %r"
                       % (tag, FAMILY_PARAMS[tag], key))
    dec = parse_complex_literal(valtext)[2]
    mode = mode_hint or (NUMERIC if dec else SYMBOLIC)
    try:
        return FamilySpec(tag, literal_value(valtext, mode))
    except ValueError as exc:
        raise CliError(str(exc))


def _build_sequence(args):
    """(vs, spec, mode) from --family/--param or --alphas flags."""
    spec = _family_spec(args, mode_hint=getattr(args, "mode", None))
    literals = []
    if getattr(args, "alphas", None):
        if spec is not None:
            raise CliError("--family and --alphas are mutually exclusive")
        literals = [t for t in args.alphas.split(",") if t.strip()]
        if not literals:
            raise CliError("--alphas is empty")
    mode = _resolve_mode(args, spec, literals)
    if spec is not None:
        return verblunsky_of(spec, mode), spec, mode
    if literals:
        table = [literal_value(t, mode) for t in literals]
        try:
            return VerblunskySequence.from_table(table, mode), None, mode
        except ValueError as exc:
            raise CliError(str(exc))
    if mode == NUMERIC:
        raise CliError("numeric mode needs --alphas or --family")
    return VerblunskySequence.generic(), None, mode


# ---------------------------------------------------------------------------
# rendering and emission


def _render(value):
    if isinstance(value, complex):
        if value.imag == 0:
            return "%.12g" % value.real
        return "%.12g%+.12gi" % (value.real, value.imag)
    if isinstance(value, float):
        return "%.12g" % value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return str(value)
    return render_scalar(value)


def _emit(text_out, args):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text_out)
    else:
        sys.stdout.write(text_out)


def _report_json(config_echo, results, checks):
    doc = {"schema_version": SCHEMA_VERSION, "config_echo": config_echo,
           "results": results, "checks": checks}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _records_csv(records):
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(("n", "r", "s", "method", "value", "elapsed_ms"))
    for rec in records:
        writer.writerow((rec["n"], rec["r"], rec["s"], rec["method"],
                         rec["value"], "%.3f" % rec["elapsed_ms"]))
    return buf.getvalue()


def _config_echo(args, mode, extra=()):
    echo = {"subcommand": args.cmd, "mode": mode}
    for key in ("family", "param", "alphas", "n", "r", "s", "method",
                "model", "suite", "max", "seed", "cap", "format"):
        val = getattr(args, key, None)
        if val is not None:
            echo[key] = val
    echo.update(dict(extra))
    return echo


# ---------------------------------------------------------------------------
# moment


def _moment_value(method, vs, spec, mode, n, r, s):
    if method == "lukasiewicz":
        return moment_lukasiewicz(vs, n, r, s)
    if method == "gmotzkin":
        return moment_gmotzkin(vs, n, r, s)
    if method == "schroder":
        return moment_schroder(vs, n, r, s)
    if method == "matrix_u":
        return u_power_entry(vs, n, r, s)
    if method == "matrix_cmv":
        return cmv_walk_entry(vs, n, r, s)
    if method == "oracle":
        return moment_oracle(vs, n, r, s)
    if method == "closed":
        if spec is None:
            raise CliError("--method closed requires --family")
        if spec.tag == "geronimus":
            if r != 0:
                raise CliError(
                    "geronimus closed evaluation covers r = 0 only")
            return geronimus_gf_moment(spec.value, n, s)
        try:
            return closed_moment_nrs(spec, n, r, s, mode)
        except UnsupportedFamily as exc:
            raise CliError(str(exc))
    raise CliError("unknown method %r" % method)


def cmd_moment(args):
    vs, spec, mode = _build_sequence(args)
    n, r, s = args.n, args.r, args.s
    if min(n, r, s) < 0:
        raise CliError("n, r, s must be nonnegative")
    methods = CROSS_METHODS if args.method == "all" else (args.method,)
    records, checks, skipped = [], [], []
    for method in methods:
        start = time.perf_counter()
        try:
            value = _moment_value(method, vs, spec, mode, n, r, s)
        except ZeroVerblunsky as exc:
            if args.method == "all":
                skipped.append((method, exc.index))
                continue
            raise
        elapsed = (time.perf_counter() - start) * 1000.0
        records.append({"n": n, "r": r, "s": s, "method": method,
                        "value": _render(value), "elapsed_ms": elapsed,
                        "mode": mode, "_raw": value})
    exit_code = EXIT_OK
    if args.method == "all":
        base = records[0]["_raw"]
        agree = all(values_close(rec["_raw"], base) for rec in records)
        detail = "; ".join("%s skipped: zero alpha_%d" % pair
                           for pair in skipped)
        checks.append({"suite": "moment", "name": "agreement",
                       "status": "pass" if agree else "fail",
                       "detail": detail})
        if not agree:
            exit_code = EXIT_FAIL
    for rec in records:
        del rec["_raw"]
    if args.format == "json":
        text_out = _report_json(_config_echo(args, mode), records, checks)
    elif args.format == "csv":
        text_out = _records_csv(records)
    else:
        lines = ["mu(%d,%d,%d) %-12s = %s  [%.3f ms]"
                 % (rec["n"], rec["r"], rec["s"], rec["method"],
                    rec["value"], rec["elapsed_ms"]) for rec in records]
        for method, idx in skipped:
            lines.append("%-12s skipped: zero alpha_%d" % (method, idx))
        for chk in checks:
            lines.append("agreement: %s" % chk["status"].upper())
        text_out = "\n".join(lines) + "\n"
    _emit(text_out, args)
    return exit_code


# ---------------------------------------------------------------------------
# paths


def cmd_paths(args):
    vs, spec, mode = _build_sequence(args)
    n, r, s = args.n, args.r, args.s
    if min(n, r, s) < 0:
        raise CliError("n, r, s must be nonnegative")
    start = time.perf_counter()
    listing = enumerate_paths(args.model, n, r, s, cap=args.cap)
    total = vs.zero()
    rows = []
    for idx, path in enumerate(listing):
        w = path_weight(path, vs)
        total = total + w
        rows.append({"kind": "path", "index": idx, "steps": path.render(),
                     "weight": _render(w)})
    elapsed = (time.perf_counter() - start) * 1000.0
    rows.append({"kind": "total", "count": len(listing),
                 "weight": _render(total), "elapsed_ms": elapsed})
    if args.format == "json":
        text_out = _report_json(_config_echo(args, mode), rows, [])
    elif args.format == "csv":
        records = [{"n": n, "r": r, "s": s,
                    "method": "%s[%d]" % (args.model, row["index"]),
                    "value": row["weight"], "elapsed_ms": 0.0}
                   for row in rows if row["kind"] == "path"]
        records.append({"n": n, "r": r, "s": s,
                        "method": "%s_total" % args.model,
                        "value": _render(total), "elapsed_ms": elapsed})
        text_out = _records_csv(records)
    else:
        lines = ["%3d  %-24s %s" % (row["index"], row["steps"],
                                    row["weight"])
                 for row in rows if row["kind"] == "path"]
        lines.append("total over %d paths = %s" % (len(listing),
                                                   _render(total)))
        text_out = "\n".join(lines) + "\n"
    _emit(text_out, args)
    return EXIT_OK


# ---------------------------------------------------------------------------
# family


def cmd_family(args):
    if args.name is None:
        lines = ["%-18s parameter: %s" % (tag, FAMILY_PARAMS[tag])
                 for tag in sorted(FAMILY_PARAMS)]
        _emit("\n".join(lines) + "\n", args)
        return EXIT_OK
    ns = argparse.Namespace(family=args.name, param=args.param,
                            mode=getattr(args, "mode", None))
    spec = _family_spec(ns, mode_hint=getattr(args, "mode", None))
    mode = getattr(args, "mode", None) or family_mode(spec)
    vs = verblunsky_of(spec, mode)
    results = []
    for j in range(args.count):
        results.append({"j": j, "alpha": _render(vs.alpha(j))})
    try:
        closed_moment_nm(spec, 1, 0, mode)
        has_closed = True
    except UnsupportedFamily:
        has_closed = False
    info = {"family": spec.tag, "parameter": FAMILY_PARAMS[spec.tag],
            "value": _render(spec.value), "mode": mode,
            "closed_forms": "yes" if has_closed else "no"}
    if args.format == "json":
        text_out = _report_json(_config_echo(args, mode, extra=info.items()),
                                results, [])
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(("j", "alpha"))
        for row in results:
            writer.writerow((row["j"], row["alpha"]))
        text_out = buf.getvalue()
    else:
        lines = ["%s(%s = %s)  mode=%s  closed forms: %s"
                 % (spec.tag, info["parameter"], info["value"], mode,
                    info["closed_forms"])]
        lines += ["  alpha_%d = %s" % (row["j"], row["alpha"])
                  for row in results]
        text_out = "\n".join(lines) + "\n"
    _emit(text_out, args)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _check(checks, suite, name, ok, detail=""):
    checks.append({"suite": suite, "name": name,
                   "status": "pass" if ok else "fail", "detail": detail})
    return ok


def _suite_cross_model(checks, maxn, mode, seed):
    if mode == SYMBOLIC:
        sequences = [("generic", VerblunskySequence.generic())]
    else:
        rng = random.Random(seed)
        sequences = [
            ("seq%d" % k,
             VerblunskySequence.from_table(
                 random_alpha_table(rng, 2 * maxn + 2), NUMERIC))
            for k in range(3)]
    for label, vs in sequences:
        bad = []
        for n in range(maxn + 1):
            for r in range(maxn + 1):
                for s in range(maxn + 1):
                    ref = moment_oracle(vs, n, r, s)
                    vals = {
                        "lukasiewicz": moment_lukasiewicz(vs, n, r, s),
                        "gmotzkin": moment_gmotzkin(vs, n, r, s),
                        "matrix_u": u_power_entry(vs, n, r, s),
                        "matrix_cmv": cmv_walk_entry(vs, n, r, s),
                    }
                    try:
                        vals["schroder"] = moment_schroder(vs, n, r, s)
                    except ZeroVerblunsky:
                        pass
                    for method, val in vals.items():
                        if not values_close(val, ref):
                            bad.append((n, r, s, method))
        _check(checks, "cross-model", "agreement[%s]" % label, not bad,
               "mismatches: %s" % bad[:4] if bad else
               "all methods vs oracle, indices <= %d" % maxn)


def _suite_reciprocity(checks, maxn, mode, seed):
    orientation = ("negative(n,r,s) * rho_product(0,s) / rho_product(0,r)"
                   " == conj(moment(n,s,r))")
    if mode == SYMBOLIC:
        vs = VerblunskySequence.generic()
        compare = lambda a, b: a == b
        ratio = lambda v, r, s: exact_div(v * vs.rho_product(0, s),
                                          vs.rho_product(0, r))
    else:
        rng = random.Random(seed)
        vs = VerblunskySequence.from_table(
            random_alpha_table(rng, 2 * maxn + 2), NUMERIC)
        compare = values_close
        ratio = lambda v, r, s: (v * vs.rho_product(0, s)
                                 / vs.rho_product(0, r))
    bad = []
    for n in range(maxn + 1):
        for r in range(maxn + 1):
            for s in range(maxn + 1):
                lhs = ratio(moment_negative(vs, n, r, s), r, s)
                rhs = conjugate(moment_lukasiewicz(vs, n, s, r))
                if not compare(lhs, rhs):
                    bad.append((n, r, s))
    _check(checks, "reciprocity", "rho-ratio conjugation", not bad,
           orientation if not bad else "mismatches: %s" % bad[:4])


def _suite_determinants(checks, maxn, mode, seed):
    if mode == SYMBOLIC:
        vs = VerblunskySequence.generic()
        compare = lambda a, b: a == b
    else:
        rng = random.Random(seed)
        vs = VerblunskySequence.from_table(
            random_alpha_table(rng, maxn + 4), NUMERIC)
        compare = values_close
    bad = [n for n in range(maxn + 1)
           if not compare(toeplitz_det(vs, n), rho_power_product(vs, n))]
    _check(checks, "determinants", "toeplitz vs rho powers", not bad,
           "orders 0..%d" % maxn if not bad else "failed orders: %s" % bad)
    bad = []
    for m in range(-2, 3):
        for n in range(min(maxn, 3) + 1):
            lhs, rhs, equal = det_identity_check(vs, m, n)
            if not equal:
                bad.append((m, n))
    _check(checks, "determinants", "shifted-index factorization", not bad,
           "m in [-2,2], n <= %d" % min(maxn, 3) if not bad
           else "failed (m, n): %s" % bad)


def _family_grid_specs():
    return [
        FamilySpec("bernstein_szego",
                   GaussianRational(Fraction(2, 5), Fraction(1, 5))),
        FamilySpec("mass_point", Fraction(1, 2)),
        FamilySpec("circular_jacobi", Fraction(3, 2)),
        FamilySpec("rogers_szego", Fraction(1, 3)),
        FamilySpec("single_nontrivial", 1),
        FamilySpec("single_nontrivial", 0.5),
    ]


def _suite_families(checks, maxn, mode, seed):
    for spec in _family_grid_specs():
        fmode = family_mode(spec)
        vs = verblunsky_of(spec, fmode)
        bad = []
        for n in range(maxn + 1):
            for m in range(maxn + 1):
                if not values_close(closed_moment_nm(spec, n, m, fmode),
                                    moment_lukasiewicz(vs, n, 0, m)):
                    bad.append((n, m))
        _check(checks, "families", "nm[%r]" % (spec,), not bad,
               "" if not bad else "failed (n, m): %s" % bad[:4])
        bad = []
        top = min(maxn, 4)
        for n in range(top + 1):
            for r in range(top + 1):
                for s in range(top + 1):
                    if not values_close(
                            closed_moment_nrs(spec, n, r, s, fmode),
                            moment_lukasiewicz(vs, n, r, s)):
                        bad.append((n, r, s))
        _check(checks, "families", "nrs[%r]" % (spec,), not bad,
               "" if not bad else "failed (n, r, s): %s" % bad[:4])
    for value in (Fraction(1, 2), 1, complex(0.3, 0.4)):
        spec = FamilySpec("geronimus", value)
        fmode = family_mode(spec)
        vs = verblunsky_of(spec, fmode)
        bad = []
        for n in range(maxn + 1):
            for m in range(maxn + 1):
                if not values_close(geronimus_gf_moment(value, n, m),
                                    moment_lukasiewicz(vs, n, 0, m)):
                    bad.append((n, m))
        _check(checks, "families", "gf[%r]" % (spec,), not bad,
               "" if not bad else "failed (n, m): %s" % bad[:4])


def _suite_linearization(checks, maxn, mode, seed):
    vs = VerblunskySequence.generic()
    top = min(maxn, 3)
    bad = []
    for n in range(top + 1):
        for r in range(top + 1 - n):
            width = n + r + 1
            pairs = (
                ("phi/phi", phi(vs, r).phi.shift(n),
                 [conjugate(moment_lukasiewicz(vs, n, r, s))
                  for s in range(width)], "phi"),
                ("star/phi", phi(vs, r).phi_star.shift(n),
                 [conjugate(star_to_phi_coeff(vs, n, r, s))
                  for s in range(width)], "phi"),
                ("phi/star", phi(vs, r).phi.shift(n),
                 [conjugate(phi_to_star_coeff(vs, n, r, s))
                  for s in range(width)], "star"),
                ("star/star", phi(vs, r).phi_star.shift(n),
                 [conjugate(star_to_star_coeff(vs, n, r, s))
                  for s in range(width)], "star"),
            )
            for name, target, coeffs, basis in pairs:
                acc = target - target
                for s, c in enumerate(coeffs):
                    base = phi(vs, s)
                    poly = base.phi if basis == "phi" else base.phi_star
                    acc = acc + poly.scale(c)
                if acc != target:
                    bad.append((name, n, r))
    _check(checks, "linearization", "round-trips", not bad,
           "four expansions, n + r <= %d" % top if not bad
           else "failed: %s" % bad[:4])
    dim = min(maxn, 6) + 1
    prod = star_overlap_matrix(vs, dim) * star_basis_change(vs, dim)
    iden = ScalarMatrix.identity(dim, vs.one(), vs.zero())
    _check(checks, "linearization", "star overlap inverse",
           prod == iden, "dimension %d" % dim)
    bad = []
    for n in range(1, 3):
        for r in range(3):
            for s in range(n + r + 1):
                if (star_to_phi_coeff(vs, n, r, s)
                        != star_to_phi_coeff_paths(vs, n, r, s)):
                    bad.append(("star_to_phi", n, r, s))
                if (phi_to_star_coeff(vs, n, r, s)
                        != phi_to_star_coeff_paths(vs, n, r, s)):
                    bad.append(("phi_to_star", n, r, s))
                if (star_to_star_coeff(vs, n, r, s)
                        != star_to_star_coeff_paths(vs, n, r, s)):
                    bad.append(("star_to_star", n, r, s))
    _check(checks, "linearization", "path companions", not bad,
           "" if not bad else "failed: %s" % bad[:4])
    bad = []
    for n in range(1, 3):
        for r in range(3):
            for s in range(3):
                if (star_to_phi_coeff_negative(vs, n, r, s)
                        != star_pairing_oracle(vs, -n, r, s)):
                    bad.append((n, r, s))
    _check(checks, "linearization", "negative-index pairing", not bad,
           "" if not bad else "failed: %s" % bad[:4])


def _suite_positivity(checks, maxn, mode, seed):
    vs = VerblunskySequence.generic()
    top = min(maxn, 4)
    bad = []
    for n in range(top + 1):
        for r in range(top + 1 - n):
            for s in range(n + r + 1):
                try:
                    positivity_certificate(vs, n, r, s)
                except PositivityViolation:
                    bad.append((n, r, s))
    _check(checks, "positivity", "moment beta-positivity", not bad,
           "n + r <= %d" % top if not bad else "failed: %s" % bad[:4])
    nonpoly, saw_negative = [], False
    for n in range(top + 1):
        for r in range(top + 1 - n):
            for s in range(n + r + 1):
                cleared = (
                    vs.alpha_bar(s - 1) * vs.rho(s)
                    * moment_lukasiewicz(vs, n, r, s + 1)
                    - vs.alpha_bar(s) * moment_lukasiewicz(vs, n, r, s))
                cleared2 = (star_to_star_coeff(vs, n, r, s)
                            * vs.alpha_bar(s) * vs.alpha_bar(s - 1))
                for val in (cleared, cleared2):
                    if not is_polynomial(val):
                        nonpoly.append((n, r, s))
                    elif any(c < 0 for c in beta_form(val).values()):
                        saw_negative = True
    _check(checks, "positivity", "cleared starred-basis polynomiality",
           not nonpoly, "" if not nonpoly else "failed: %s" % nonpoly[:4])
    _check(checks, "positivity", "negative beta coefficient exists",
           saw_negative, "starred-basis families are not beta-positive")


_SUITE_TABLE = (
    ("cross-model", _suite_cross_model, 4),
    ("reciprocity", _suite_reciprocity, 4),
    ("determinants", _suite_determinants, 4),
    ("families", _suite_families, 4),
    ("linearization", _suite_linearization, 3),
    ("positivity", _suite_positivity, 4),
)


def cmd_verify(args):
    checks = []
    mode = args.mode or SYMBOLIC
    for name, fn, default_max in _SUITE_TABLE:
        if args.suite not in ("all", name):
            continue
        fn(checks, args.max if args.max is not None else default_max,
           mode, args.seed)
    ok = all(chk["status"] == "pass" for chk in checks)
    if args.format == "text":
        lines = ["%-4s %-14s %-36s %s"
                 % (chk["status"].upper(), chk["suite"], chk["name"],
                    chk["detail"]) for chk in checks]
        lines.append("verify: %d checks, %s"
                     % (len(checks), "all passed" if ok else "FAILURES"))
        text_out = "\n".join(lines) + "\n"
    else:
        text_out = _report_json(_config_echo(args, mode), [], checks)
    _emit(text_out, args)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# argument wiring


def _add_sequence_flags(sub):
    sub.add_argument("--family", help="named coefficient family")
    sub.add_argument("--param", metavar="KEY=VALUE",
                     help="family parameter, e.g. alpha=1/2")
    sub.add_argument("--alphas", metavar="LIST",
                     help="comma-separated coefficient literals")
    sub.add_argument("--mode", choices=(SYMBOLIC, NUMERIC))


def _add_output_flags(sub, formats=("text", "json", "csv"),
                      default="text"):
    sub.add_argument("--format", choices=formats, default=default)
    sub.add_argument("--out", metavar="FILE",
                     help="write output to FILE instead of stdout")


def build_parser():
    parser = _Parser(prog="opuc",
                     description="Moments of orthogonal polynomials on "
                                 "the unit circle, by several routes.")
    subs = parser.add_subparsers(dest="cmd", required=True)

    p = subs.add_parser("moment", help="one generalized moment")
    _add_sequence_flags(p)
    p.add_argument("-n", type=int, default=0)
    p.add_argument("-r", type=int, default=0)
    p.add_argument("-s", type=int, default=0)
    p.add_argument("--method", choices=MOMENT_METHODS,
                   default="lukasiewicz")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_moment)

    p = subs.add_parser("paths", help="list weighted paths")
    _add_sequence_flags(p)
    p.add_argument("--model", choices=PATH_MODELS, required=True)
    p.add_argument("-n", type=int, default=0)
    p.add_argument("-r", type=int, default=0)
    p.add_argument("-s", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_paths)

    p = subs.add_parser("family", help="inspect a coefficient family")
    p.add_argument("--name", help="family tag; omit to list all")
    p.add_argument("--param", metavar="KEY=VALUE")
    p.add_argument("--mode", choices=(SYMBOLIC, NUMERIC))
    p.add_argument("--count", type=int, default=8,
                   help="how many coefficients to print")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_family)

    p = subs.add_parser("verify", help="run cross-validation suites")
    p.add_argument("--suite", choices=VERIFY_SUITES, default="all")
    p.add_argument("--max", type=int, default=None,
                   help="index bound; per-suite default if omitted")
    p.add_argument("--mode", choices=(SYMBOLIC, NUMERIC))
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p, formats=("json", "text"), default="json")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CliError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_FAIL
    except ZeroVerblunsky as exc:
        sys.stderr.write("error: zero Verblunsky coefficient at index %d\n"
                         % exc.index)
        return EXIT_ZERO_ALPHA
    except EnumerationCapExceeded as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_CAP
    except (IndexError, UnsupportedFamily, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
