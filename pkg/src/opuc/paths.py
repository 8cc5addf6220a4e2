"""Weighted lattice-path models for the generalized moments.

Three equivalent models for nonnegative powers of z (unit-width
"lukasiewicz" steps, parity-constrained "gmotzkin" steps, and "schroder"
steps with zero-width vertical drops), plus the mirrored model that
evaluates negative powers.  Each model is available twice: an exhaustive
enumerator for small instances and a dynamic-programming evaluator with
no practical size limit.  Both compute the same weighted totals, which
the test suite exercises model against model.

All step weights live in the coefficient ring of the driving
VerblunskySequence, so a single code path serves both exact symbolic and
floating-point numeric work.
"""

from .algebra import SYMBOLIC, beta_form, is_zero_scalar, render_beta_monomial
from .errors import EnumerationCapExceeded, PositivityViolation, ZeroVerblunsky

UP = (1, 1)
LEVEL = (1, 0)
VERTICAL = (0, -1)

DEFAULT_CAP = 10 ** 6

MODELS = ("lukasiewicz", "gmotzkin", "schroder", "negative")


def _step_name(step):
    dx, dy = step
    if step == VERTICAL:
        return "V"
    if dy == 1:
        return "U"
    if dy == 0:
        return "H"
    return "D%d" % (-dy)


class LatticePath:
    """Immutable path: a model tag, a start point and (dx, dy) steps."""

    __slots__ = ("model", "start", "steps")

    def __init__(self, model, start, steps):
        self.model = model
        self.start = tuple(start)
        self.steps = tuple(steps)

    def points(self):
        """Every lattice point visited, start and end included."""
        x, y = self.start
        pts = [(x, y)]
        for dx, dy in self.steps:
            x += dx
            y += dy
            pts.append((x, y))
        return pts

    @property
    def end(self):
        x, y = self.start
        for dx, dy in self.steps:
            x += dx
            y += dy
        return (x, y)

    def render(self):
        """One-line step listing, e.g. ``U H D2 V``."""
        if not self.steps:
            return "(empty)"
        return " ".join(_step_name(s) for s in self.steps)

    def __eq__(self, other):
        if not isinstance(other, LatticePath):
            return NotImplemented
        return (self.model == other.model and self.start == other.start
                and self.steps == other.steps)

    def __hash__(self):
        return hash((self.model, self.start, self.steps))

    def __repr__(self):
        return "LatticePath(%r, %r, %s)" % (self.model, self.start, self.render())


# ---------------------------------------------------------------------------
# enumeration


def _gen_lukasiewicz(n, r, s):
    # unit-width steps (1, dy) with dy <= 1, height kept >= 0
    steps = []

    def walk(m, y):
        if m == n:
            if y == s:
                yield tuple(steps)
            return
        if s - y > n - m:
            return
        for dy in range(1, -y - 1, -1):
            steps.append((1, dy))
            yield from walk(m + 1, y + dy)
            steps.pop()

    yield from walk(0, r)


def _gen_gmotzkin(n, r, s):
    # width-1 steps only; rises at even x+y, falls at odd x+y
    x_end = 2 * n - s
    steps = []

    def walk(x, y):
        if x == x_end:
            if y == s:
                yield tuple(steps)
            return
        rem = x_end - x
        if abs(y - s) > rem:
            return
        even = (x + y) % 2 == 0
        if even:
            steps.append(UP)
            yield from walk(x + 1, y + 1)
            steps.pop()
        steps.append(LEVEL)
        yield from walk(x + 1, y)
        steps.pop()
        if y > 0 and not even:
            steps.append((1, -1))
            yield from walk(x + 1, y - 1)
            steps.pop()

    yield from walk(-r, r)


def _gen_schroder(n, r, s, allow_initial_vertical=False):
    # vertical drops are zero-width and never open a path
    steps = []

    def walk(x, y, at_start):
        if x == n:
            if y == s:
                yield tuple(steps)
                return
            if y < s or (at_start and not allow_initial_vertical):
                return
            steps.append(VERTICAL)
            yield from walk(x, y - 1, False)
            steps.pop()
            return
        if s - y > n - x:
            return
        steps.append(UP)
        yield from walk(x + 1, y + 1, False)
        steps.pop()
        steps.append(LEVEL)
        yield from walk(x + 1, y, False)
        steps.pop()
        if y > 0 and (allow_initial_vertical or not at_start):
            steps.append(VERTICAL)
            yield from walk(x, y - 1, False)
            steps.pop()

    yield from walk(0, r, True)


def _gen_negative(n, r, s):
    # mirror model: leftward steps (-1, dy) with dy <= 1, from (0, s) to (-n, r)
    steps = []

    def walk(m, y):
        if m == n:
            if y == r:
                yield tuple(steps)
            return
        if r - y > n - m:
            return
        for dy in range(1, -y - 1, -1):
            steps.append((-1, dy))
            yield from walk(m + 1, y + dy)
            steps.pop()

    yield from walk(0, s)


def enumerate_paths(model, n, r, s, cap=DEFAULT_CAP):
    """Every path of the model for the given boundary data.

    Endpoints per model: lukasiewicz and schroder run (0, r) -> (n, s),
    gmotzkin runs (-r, r) -> (2n - s, s), negative runs (0, s) -> (-n, r).
    Raises EnumerationCapExceeded once more than `cap` paths exist.
    """
    if model == "lukasiewicz":
        start, gen = (0, r), _gen_lukasiewicz(n, r, s)
    elif model == "gmotzkin":
        start, gen = (-r, r), _gen_gmotzkin(n, r, s)
    elif model == "schroder":
        start, gen = (0, r), _gen_schroder(n, r, s)
    elif model == "negative":
        start, gen = (0, s), _gen_negative(n, r, s)
    else:
        raise ValueError("unknown path model %r" % (model,))
    out = []
    for steps in gen:
        if len(out) >= cap:
            raise EnumerationCapExceeded(
                "more than %d %s paths for (n=%d, r=%d, s=%d)" % (cap, model, n, r, s))
        out.append(LatticePath(model, start, steps))
    return out


# ---------------------------------------------------------------------------
# step weights


def _inv_alpha_bar(vs, j):
    v = vs.alpha_bar(j)
    if is_zero_scalar(v):
        raise ZeroVerblunsky(j)
    return vs.one() / v


def path_weight(path, vs):
    """Product of the model's step weights; the empty product is 1."""
    w = vs.one()
    x, y = path.start
    for dx, dy in path.steps:
        w = w * _step_weight(path.model, vs, x, y, dx, dy)
        x += dx
        y += dy
    return w


def _step_weight(model, vs, x, y, dx, dy):
    # (x, y) is where the step starts
    if model == "lukasiewicz":
        if dy == 1:
            return vs.one()
        k = -dy
        return -vs.alpha(y) * vs.alpha_bar(y - k - 1) * vs.rho_product(y - k, y)
    if model == "gmotzkin":
        if dy == 1:
            return vs.one()
        if dy == -1:
            return vs.rho(y - 1)
        if (x + y) % 2 == 0:
            return vs.alpha(y)
        return -vs.alpha_bar(y - 1)
    if model == "schroder":
        if dy == 1:
            return vs.one()
        if (dx, dy) == LEVEL:
            return -vs.alpha_bar(y - 1) * _inv_alpha_bar(vs, y)
        return vs.alpha_bar(y - 2) * _inv_alpha_bar(vs, y - 1) * vs.rho(y - 1)
    if model == "negative":
        if dy == 1:
            return vs.rho(y)
        k = -dy
        return -vs.alpha_bar(y) * vs.alpha(y - k - 1)
    raise ValueError("unknown path model %r" % (model,))


# ---------------------------------------------------------------------------
# dynamic programming evaluators


def moment_lukasiewicz(vs, n, r, s):
    """Generalized moment for z^n, n >= 0, as a unit-width-model weight sum."""
    if min(n, r, s) < 0:
        raise ValueError("indices must be nonnegative")
    row = _luka_rows(vs, r, n)[n]
    return row[s] if s < len(row) else vs.zero()


def _luka_rows(vs, r, n):
    key = ("luka_rows", r)
    rows = vs.cache.get(key)
    if rows is None:
        first = [vs.zero()] * (r + 1)
        first[r] = vs.one()
        rows = [first]
        vs.cache[key] = rows
    while len(rows) <= n:
        rows.append(_luka_step(vs, rows[-1]))
    return rows


def _luka_step(vs, prev):
    # peel the last step; suffix accumulator S covers every fall into height y:
    # S_y = alpha_y * prev[y] + rho_y * S_{y+1}
    h = len(prev)
    zero = vs.zero()
    new = [zero] * (h + 1)
    acc = zero
    for y in range(h - 1, -1, -1):
        acc = vs.alpha(y) * prev[y] + vs.rho(y) * acc
        rise = prev[y - 1] if y >= 1 else zero
        new[y] = rise - vs.alpha_bar(y - 1) * acc
    new[h] = prev[h - 1]
    return new


def moment_gmotzkin(vs, n, r, s):
    """Same moment via the parity-constrained width-1 model."""
    if min(n, r, s) < 0:
        raise ValueError("indices must be nonnegative")
    x_end = 2 * n - s
    if x_end < -r or s > r + n:
        return vs.zero()
    col = _gm_cols(vs, r, n)[x_end + r]
    return col[s] if s < len(col) else vs.zero()


def _gm_cols(vs, r, n):
    # column heights are capped by the rise bound r+t and by what can
    # still descend to a served endpoint; the cap depends on the largest
    # n served, so growing n rebuilds the sweep from scratch
    key = ("gm_cols", r)
    entry = vs.cache.get(key)
    if entry is None or entry[0] < n:
        first = [vs.zero()] * (r + 1)
        first[r] = vs.one()
        entry = (n, [first])
        vs.cache[key] = entry
    top, cols = entry
    while len(cols) <= 2 * top + r:
        t = len(cols)
        hmax = min(r + t, 2 * top + r - t)
        cols.append(_gm_step(vs, cols[-1], t - 1 - r, hmax))
    return cols


def _gm_step(vs, col, x, hmax):
    h = len(col)
    zero = vs.zero()
    new = [zero] * (hmax + 1)
    for y in range(hmax + 1):
        acc = zero
        if 1 <= y <= h and (x + y - 1) % 2 == 0:
            v = col[y - 1]
            if not is_zero_scalar(v):
                acc = acc + v
        if y + 1 < h and (x + y + 1) % 2 == 1:
            v = col[y + 1]
            if not is_zero_scalar(v):
                acc = acc + vs.rho(y) * v
        if y < h:
            v = col[y]
            if not is_zero_scalar(v):
                if (x + y) % 2 == 0:
                    acc = acc + vs.alpha(y) * v
                else:
                    acc = acc - vs.alpha_bar(y - 1) * v
        new[y] = acc
    return new


def _schroder_weights(vs, level_max, drop_max):
    # level weight at height y and drop weight entering from height b >= 1;
    # both divide by a conjugated coefficient, hence the nonzero hypothesis
    key = ("schroder_wts",)
    entry = vs.cache.get(key)
    if entry is None:
        entry = ([], [None])
        vs.cache[key] = entry
    level, drop = entry
    while len(level) <= level_max:
        y = len(level)
        level.append(-vs.alpha_bar(y - 1) * _inv_alpha_bar(vs, y))
    while len(drop) <= drop_max:
        b = len(drop)
        drop.append(vs.alpha_bar(b - 2) * _inv_alpha_bar(vs, b - 1) * vs.rho(b - 1))
    return entry


def schroder_weight_sum(vs, n, r, s, skip_initial_vertical=True,
                        skip_terminal_vertical=False):
    """Weight sum over the zero-width-drop model from (0, r) to (n, s).

    The two flags toggle the boundary restrictions: by default paths may
    not open with a vertical drop (the standard model) and may end with
    one.  Raises ZeroVerblunsky if a required divisor vanishes.
    """
    if min(n, r, s) < 0:
        raise ValueError("indices must be nonnegative")
    cols, pres = _schroder_cols(vs, r, n, not skip_initial_vertical)
    table = pres if skip_terminal_vertical else cols
    col = table[n]
    return col[s] if s < len(col) else vs.zero()


def moment_schroder(vs, n, r, s):
    """Same moment as moment_lukasiewicz; needs every touched alpha nonzero."""
    return schroder_weight_sum(vs, n, r, s)


def _schroder_cols(vs, r, n, allow_initial):
    key = ("schroder_cols", r, allow_initial)
    entry = vs.cache.get(key)
    if entry is None:
        base = [vs.zero()] * (r + 1)
        base[r] = vs.one()
        col0 = list(base)
        if allow_initial:
            _, drop = _schroder_weights(vs, -1, r)
            for y in range(r - 1, -1, -1):
                col0[y] = col0[y] + drop[y + 1] * col0[y + 1]
        entry = ([col0], [base])
        vs.cache[key] = entry
    cols, pres = entry
    while len(cols) <= n:
        prev = cols[-1]
        h = len(prev)
        level, drop = _schroder_weights(vs, h - 1, h)
        zero = vs.zero()
        pre = [zero] * (h + 1)
        for y in range(h + 1):
            acc = prev[y - 1] if y >= 1 else zero
            if y < h:
                acc = acc + level[y] * prev[y]
            pre[y] = acc
        col = list(pre)
        for y in range(h - 1, -1, -1):
            col[y] = col[y] + drop[y + 1] * col[y + 1]
        cols.append(col)
        pres.append(pre)
    return entry


def moment_negative(vs, n, r, s):
    """Generalized moment for z^(-n), via the mirrored model DP."""
    if min(n, r, s) < 0:
        raise ValueError("indices must be nonnegative")
    row = _neg_rows(vs, s, n)[n]
    return row[r] if r < len(row) else vs.zero()


def _neg_rows(vs, s, n):
    key = ("neg_rows", s)
    rows = vs.cache.get(key)
    if rows is None:
        first = [vs.zero()] * (s + 1)
        first[s] = vs.one()
        rows = [first]
        vs.cache[key] = rows
    while len(rows) <= n:
        rows.append(_neg_step(vs, rows[-1]))
    return rows


def _neg_step(vs, prev):
    # suffix sums: acc_y = sum over b >= y of conj(alpha_b) * prev[b]
    h = len(prev)
    zero = vs.zero()
    new = [zero] * (h + 1)
    acc = zero
    for y in range(h - 1, -1, -1):
        acc = acc + vs.alpha_bar(y) * prev[y]
        rise = vs.rho(y - 1) * prev[y - 1] if y >= 1 else zero
        new[y] = rise - vs.alpha(y - 1) * acc
    new[h] = vs.rho(h - 1) * prev[h - 1]
    return new


# ---------------------------------------------------------------------------
# correspondences between the models


def lukasiewicz_to_gmotzkin(path):
    """Rewrite each fall of size k as a level step, k falls and a level step.

    Rises stay rises.  The image starts at (-r, r), ends at (2n - s, s)
    and carries the same weight, step parities included.
    """
    r = path.start[1]
    steps = []
    for _, dy in path.steps:
        if dy == 1:
            steps.append(UP)
        else:
            steps.append(LEVEL)
            steps.extend([(1, -1)] * (-dy))
            steps.append(LEVEL)
    return LatticePath("gmotzkin", (-r, r), steps)


def gmotzkin_to_lukasiewicz(path):
    """Inverse of lukasiewicz_to_gmotzkin; rejects ill-formed step lists."""
    r = path.start[1]
    steps = []
    seq = path.steps
    i = 0
    while i < len(seq):
        dy = seq[i][1]
        if dy == 1:
            steps.append(UP)
            i += 1
            continue
        if dy != 0:
            raise ValueError("fall outside a level-step block")
        j = i + 1
        k = 0
        while j < len(seq) and seq[j][1] == -1:
            k += 1
            j += 1
        if j == len(seq) or seq[j][1] != 0:
            raise ValueError("unterminated level-step block")
        steps.append((1, -k))
        i = j + 1
    return LatticePath("lukasiewicz", (0, r), steps)


def contract_schroder(path):
    """Merge every width step with its trailing drops into one unit-width step."""
    steps = []
    seq = path.steps
    i = 0
    while i < len(seq):
        dx, dy = seq[i]
        if dx != 1:
            raise ValueError("vertical drop with no preceding width step")
        j = i + 1
        v = 0
        while j < len(seq) and seq[j] == VERTICAL:
            v += 1
            j += 1
        steps.append((1, dy - v))
        i = j
    return LatticePath("lukasiewicz", path.start, steps)


def schroder_grouping(n, r, s, cap=DEFAULT_CAP):
    """Partition the drop-model paths by their contracted representative.

    Returns a dict keyed by the representative's step tuple.  Per group,
    the drop-model weights add up to the representative's weight, which
    the tests verify.
    """
    groups = {}
    for p in enumerate_paths("schroder", n, r, s, cap):
        groups.setdefault(contract_schroder(p).steps, []).append(p)
    return groups


# ---------------------------------------------------------------------------
# positivity


def positivity_certificate(vs, n, r, s):
    """Expansion of the moment over the doubled alphabet, coefficients checked.

    Requires a symbolic sequence with the coefficients kept generic.  The
    conjugated symbols are replaced by their negatives, after which every
    coefficient must be a nonnegative integer; a violation would mean an
    implementation bug, not a property of the input.
    """
    if vs.mode != SYMBOLIC:
        raise ValueError("positivity certificates need symbolic mode")
    value = moment_lukasiewicz(vs, n, r, s)
    expansion = beta_form(value)
    for monom, coeff in expansion.items():
        if not (isinstance(coeff, int) and coeff >= 0):
            raise PositivityViolation(
                "coefficient %s of %s in moment (%d, %d, %d)"
                % (coeff, render_beta_monomial(monom), n, r, s))
    return expansion
