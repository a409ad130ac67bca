"""Orbits of hypergeometric parameter tuples under the transformation
group, with relative-sign bookkeeping.

The eight generators come from the reduction-free transformation
formulas plus the pair swap; each carries a sign rule derived from its
character-at-(-1) prefactor combined with the (-1)^{t3+t5} convention of
the signed 3F2. Values within an orbit agree up to those signs, so each
orbit contributes (net sign count) * (value at representative) to the
residual sum of the order-four count. A sign conflict inside an orbit
forces the common value to zero; such orbits are flagged instead of
summed.
"""

from collections import deque
from dataclasses import dataclass

from .hyper import tuple_value_table
from .report import Report

# (name, map, sign exponent) with the sign convention
# signed_value(t) = (-1)^{sign_exp(t)} * signed_value(map(t))
GENERATORS = (
    ("shift by t4", lambda t: (t[1] - t[3], t[0] - t[3], t[2] - t[3], -t[3], t[4] - t[3]), lambda t: 0),
    ("pivot t1", lambda t: (t[0], t[0] - t[3], t[0] - t[4], t[0] - t[1], t[0] - t[2]), lambda t: sum(t)),
    ("pivot t2", lambda t: (t[1] - t[3], t[1], t[1] - t[4], t[1] - t[0], t[1] - t[2]), lambda t: sum(t)),
    ("third upper", lambda t: (t[0], t[1], t[4] - t[2], t[0] + t[1] - t[3], t[4]), lambda t: t[0]),
    ("second upper", lambda t: (t[0], t[3] - t[1], t[2], t[3], t[0] + t[2] - t[4]), lambda t: t[2] + t[3]),
    ("first upper", lambda t: (t[3] - t[0], t[1], t[2], t[3], t[1] + t[2] - t[4]), lambda t: t[2]),
    ("both upper", lambda t: (t[3] - t[0], t[3] - t[1], t[2], t[3], t[3] + t[4] - t[0] - t[1]), lambda t: t[3]),
    ("pair swap", lambda t: (t[0], t[2], t[1], t[4], t[3]), lambda t: t[1] + t[2] + t[3] + t[4]),
)


def apply_generator(idx, t, k):
    name, fn, _ = GENERATORS[idx]
    return tuple(x % k for x in fn(t))


def sign_exponent(idx, t):
    return GENERATORS[idx][2](t) % 2


def in_xk(t, k):
    """Membership in the residual index set: t1, t2, t3 differ from
    0, t4, t5 and t1+t2+t3 != t4+t5 (mod k)."""
    t1, t2, t3, t4, t5 = (x % k for x in t)
    for u in (t1, t2, t3):
        if u == 0 or u == t4 or u == t5:
            return False
    return (t1 + t2 + t3 - t4 - t5) % k != 0


def xk_elements(k):
    """All members of the residual index set, sorted."""
    out = []
    for t1 in range(1, k):
        for t2 in range(1, k):
            for t3 in range(1, k):
                for t4 in range(k):
                    if t4 in (t1, t2, t3):
                        continue
                    for t5 in range(k):
                        if t5 in (t1, t2, t3):
                            continue
                        if (t1 + t2 + t3 - t4 - t5) % k:
                            out.append((t1, t2, t3, t4, t5))
    out.sort()
    return out


def xk_size_formula(k):
    return (k - 1) * (k**4 - 9 * k**3 + 36 * k**2 - 69 * k + 51)


def orbit_count_formula(k):
    """Closed form for the number of orbits (group of order 120)."""
    base = (k - 1) * (k**4 - 9 * k**3 + 61 * k**2 - 189 * k + 280)
    m = k % 12
    if m in (1, 5, 7, 11):
        extra = 0
    elif m in (3, 9):
        extra = 40 * k - 200
    elif m in (2, 10):
        extra = 105 * k - 180
    elif m in (4, 8):
        extra = 105 * k - 240
    elif m == 6:
        extra = 145 * k - 380
    else:  # m == 0
        extra = 145 * k - 440
    total = base + extra
    if total % 120:
        raise ArithmeticError(f"orbit count formula not integral at k={k}")
    return total // 120


@dataclass
class OrbitRecord:
    representative: tuple
    size: int
    net: int
    zero_valued: bool


def _span_orbits(k, generator_order=None):
    """BFS labeling of X_k: every element gets a sign relative to the
    orbit representative. Returns [(record, {element: sign})].

    Signs are only defined up to a global flip per orbit; the orbit is
    oriented so that its net is nonnegative, and the representative is
    the lexicographically smallest element carrying label +1 (the plain
    lexicographic minimum whenever the net is zero or positive)."""
    order = list(generator_order) if generator_order is not None else list(range(len(GENERATORS)))
    elements = xk_elements(k)
    xset = set(elements)
    seen = set()
    out = []
    for start in elements:
        if start in seen:
            continue
        labels = {start: 1}
        conflict = False
        queue = deque([start])
        while queue:
            t = queue.popleft()
            st = labels[t]
            for gi in order:
                u = apply_generator(gi, t, k)
                if u not in xset:
                    raise RuntimeError(f"generator left the index set: {t} -> {u}")
                su = st * (-1) ** sign_exponent(gi, t)
                if u in labels:
                    if labels[u] != su:
                        conflict = True
                else:
                    labels[u] = su
                    queue.append(u)
        seen.update(labels)
        net = 0 if conflict else sum(labels.values())
        if net < 0:
            labels = {t: -s for t, s in labels.items()}
            net = -net
        rec = OrbitRecord(
            representative=min(t for t, s in labels.items() if s == 1),
            size=len(labels),
            net=net,
            zero_valued=conflict,
        )
        out.append((rec, labels))
    out.sort(key=lambda pair: min(pair[1]))
    return out

def enumerate_orbits(k, generator_order=None):
    """Orbit records sorted by representative."""
    return [rec for rec, _ in _span_orbits(k, generator_order)]


def verify_orbit_values(f, k):
    """Check, on actual hypergeometric values over F_q, that every orbit
    element equals its label sign times the representative value, that
    conflicted orbits carry the zero value, and that the orbit-reduced
    residual sum matches the full sum over the index set."""
    rep = Report(f"orbit values q={f.q} k={k}")
    table = tuple_value_table(f, k)
    spans = _span_orbits(k)
    total_full = table.signed_sum(xk_elements(k))
    total_orbit = None
    all_consistent = True
    zero_ok = True
    detail = ""
    for record, labels in spans:
        vrep = table.signed_value(record.representative)
        if record.zero_valued and not vrep.is_zero():
            zero_ok = False
            detail = f"conflicted orbit {record.representative} has nonzero value"
        for t, sign in labels.items():
            if not (table.signed_value(t) - vrep * sign).is_zero():
                all_consistent = False
                detail = f"element {t} disagrees with rep {record.representative}"
                break
        contrib = vrep * record.net
        total_orbit = contrib if total_orbit is None else total_orbit + contrib
    rep.add("element values match sign * representative", all_consistent, detail)
    rep.add("conflicted orbits have zero value", zero_ok, detail)
    if total_orbit is None:
        total_orbit = table.signed_value((0,) * 5) * 0
    rep.add(
        "orbit-reduced residual equals full residual",
        (total_full - total_orbit).is_zero(),
    )
    return rep


def orbits_csv(records):
    lines = ["representative,size,net,zero_valued"]
    for r in records:
        rep = " ".join(str(x) for x in r.representative)
        lines.append(f"{rep},{r.size},{r.net},{str(r.zero_valued).lower()}")
    return "\n".join(lines)
