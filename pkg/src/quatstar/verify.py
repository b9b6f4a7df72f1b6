"""Identity verifier: every displayed relation is encoded and checked.

Each record carries a claim exactly as printed at its source location —
including claims that direct computation contradicts — and a status
computed from the engine value:

    MATCH           engine value equals the claimed value exactly
    MISMATCH        it does not (a witness point or subterm is attached)
    NOT_COMPARABLE  reserved for claims with no well-defined encoded value

Every polynomial-level claim is evaluated twice, once through the star
engine and once through the independent oracle; the two must agree or the
run aborts (OracleDivergenceError) — a divergence is an internal bug, never
a statement about the source material.  Inequality-flavored claims are
checked by searching for a concrete witness among the source's own
operands: MATCH means the inequality holds and a witness is recorded.

Chain equations are split into one record per consecutive pairwise
equality (plus a head-equals-closed-form record per chain), so one wrong
link cannot poison its neighbours.
"""

from __future__ import annotations

import itertools
import json
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random

from .errors import OracleDivergenceError, UnknownIdentityError
from .quat import Quaternion, GROUP_ELEMENTS, ONE, quat_text
from .poly import QPolynomial, VARIABLES
from .star import DEFAULT_CONFIG, PAIRS
from . import oracle as _oracle
from .expr import parse_expression, lower

ENGINE_VERSION = "quatstar 0.1.0"

MATCH = "MATCH"
MISMATCH = "MISMATCH"
NOT_COMPARABLE = "NOT_COMPARABLE"


@dataclass
class IdentityRecord:
    id: str
    paper_location: str
    claim_text: str
    engine_value: str
    status: str
    witness: str | None = None

    def to_dict(self) -> dict:
        data = {
            "id": self.id,
            "paper_location": self.paper_location,
            "claim_text": self.claim_text,
            "engine_value": self.engine_value,
            "status": self.status,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        return data


@dataclass
class DiscrepancyReport:
    engine_version: str
    records: list = field(default_factory=list)

    def summary(self) -> dict:
        counts = {"match": 0, "mismatch": 0, "not_comparable": 0}
        for record in self.records:
            counts[record.status.lower()] += 1
        return counts

    def to_dict(self) -> dict:
        return {
            "engine_version": self.engine_version,
            "summary": self.summary(),
            "records": [record.to_dict() for record in self.records],
        }


# --- shared evaluation plumbing ----------------------------------------------

_FORMAL = DEFAULT_CONFIG


def _checked_eval(text: str) -> QPolynomial:
    """Evaluate expression text through both routes; they must agree."""
    node = parse_expression(text)
    engine = lower(node, _FORMAL, backend="engine")
    oracle = lower(node, _FORMAL, backend="oracle")
    if engine != oracle:
        raise OracleDivergenceError(
            f"engine and oracle disagree on {text!r}: "
            f"engine {engine.canonical_text()}, oracle {oracle.canonical_text()}")
    return engine


def _engine_eval(text: str) -> QPolynomial:
    """Engine-only evaluation, used to screen existential candidates; any
    candidate promoted to a witness is re-checked through both routes."""
    return lower(parse_expression(text), _FORMAL, backend="engine")


_CANONICAL_POINT = {"a": Fraction(1), "b": Fraction(2), "c": Fraction(3),
                    "d": Fraction(5), "nu": Fraction(1),
                    "Theta_ab": Fraction(1), "Theta_ac": Fraction(1),
                    "Theta_ad": Fraction(1), "Theta_bc": Fraction(1),
                    "Theta_bd": Fraction(1), "Theta_cd": Fraction(1)}


def _point_witness(lhs_val, rhs_val, lhs_label, rhs_label):
    """A rational point separating the two sides, rendered as text."""
    names = sorted(lhs_val.variables_used() | rhs_val.variables_used(),
                   key=VARIABLES.index)
    if not names:
        return (f"values differ everywhere: {lhs_label} = "
                f"{lhs_val.canonical_text()}, {rhs_label} = "
                f"{rhs_val.canonical_text()}")
    candidates = [{n: _CANONICAL_POINT[n] for n in names}]
    rng = Random(99)
    candidates.extend(_oracle.random_point(rng, names) for _ in range(40))
    for point in candidates:
        lv = lhs_val.evaluate(point)
        rv = rhs_val.evaluate(point)
        if lv != rv:
            assign = ", ".join(f"{n} = {point[n]}" for n in names)
            return (f"at {assign}: {lhs_label} = {quat_text(lv)}, "
                    f"{rhs_label} = {quat_text(rv)}")
    diff = lhs_val - rhs_val
    return f"difference = {diff.canonical_text()}"


def _seed_for(rid: str) -> int:
    return zlib.crc32(rid.encode("ascii"))


# --- record builders ----------------------------------------------------------

def _poly_eq(rid, loc, lhs, rhs, claim=None):
    def build():
        lv = _checked_eval(lhs)
        rv = _checked_eval(rhs)
        record = IdentityRecord(rid, loc, claim or f"{lhs} = {rhs}",
                                lv.canonical_text(),
                                MATCH if lv == rv else MISMATCH)
        if record.status == MISMATCH:
            record.witness = _point_witness(lv, rv, lhs, rhs)
        return record
    return rid, build


def _poly_neq(rid, loc, lhs, rhs, claim=None):
    def build():
        lv = _checked_eval(lhs)
        rv = _checked_eval(rhs)
        diff = lv - rv
        record = IdentityRecord(rid, loc, claim or f"{lhs} != {rhs}",
                                diff.canonical_text(),
                                MATCH if not diff.is_zero() else MISMATCH)
        if record.status == MATCH:
            record.witness = _point_witness(lv, rv, lhs, rhs)
        else:
            record.witness = (f"{lhs} and {rhs} are identical as polynomials; "
                              f"the difference is 0 everywhere")
        return record
    return rid, build


def _exists_search(rid, loc, claim, candidates):
    """Existential inequality: candidates yield (description, lhs, rhs) texts.

    MATCH iff some candidate substitution makes the two sides differ; the
    first one found (fixed order) is the recorded witness.
    """
    def build():
        count = 0
        for desc, lhs, rhs in candidates:
            count += 1
            if _engine_eval(lhs) != _engine_eval(rhs):
                lv = _checked_eval(lhs)
                rv = _checked_eval(rhs)
                diff = lv - rv
                witness = f"{desc}: {_point_witness(lv, rv, lhs, rhs)}"
                return IdentityRecord(rid, loc, claim, diff.canonical_text(),
                                      MATCH, witness)
        return IdentityRecord(
            rid, loc, claim,
            f"both sides equal on all {count} candidate substitutions",
            MISMATCH,
            witness=(f"exhausted {count} candidate substitutions without "
                     f"finding a separating one"))
    return rid, build


def _fmt_value(value) -> str:
    return quat_text(value) if isinstance(value, Quaternion) else str(value)


def _quat_forall(rid, loc, claim, arity, check, nonzero=False,
                 samples=24, reals_only=False):
    """Universal quaternion-level claim; `check(args)` returns None or a
    witness string.  Arguments run over the unit group plus seeded randoms."""
    def build():
        rng = Random(_seed_for(rid))
        if reals_only:
            base = [Quaternion(v) for v in (1, -1, 2, Fraction(-3, 2), 0)]
            extra = [Quaternion(_oracle.random_rational(rng)) for _ in range(samples)]
            pool = base + extra
            tuples = [(x,) for x in pool]
        else:
            tuples = list(itertools.product(GROUP_ELEMENTS, repeat=arity))
            for _ in range(samples):
                tuples.append(tuple(_oracle.random_quaternion(rng)
                                    for _ in range(arity)))
        checked = 0
        for args in tuples:
            if nonzero and any(x.is_zero() for x in args):
                continue
            checked += 1
            witness = check(args)
            if witness is not None:
                return IdentityRecord(rid, loc, claim,
                                      "fails on a sampled argument tuple",
                                      MISMATCH, witness)
        return IdentityRecord(rid, loc, claim,
                              f"holds on all {checked} sampled argument tuples",
                              MATCH)
    return rid, build


def _quat_exists(rid, loc, claim, arity, differ):
    """Existential quaternion-level claim; `differ(args)` returns a pair of
    unequal values (rendered into the witness) or None."""
    def build():
        rng = Random(_seed_for(rid))
        tuples = list(itertools.product(GROUP_ELEMENTS, repeat=arity))
        for _ in range(24):
            tuples.append(tuple(_oracle.random_quaternion(rng) for _ in range(arity)))
        for args in tuples:
            outcome = differ(args)
            if outcome is not None:
                lhs_label, lv, rhs_label, rv = outcome
                names = ", ".join(f"q{idx + 1} = {quat_text(x)}"
                                  for idx, x in enumerate(args))
                witness = (f"{names}: {lhs_label} = {_fmt_value(lv)}, "
                           f"{rhs_label} = {_fmt_value(rv)}")
                return IdentityRecord(rid, loc, claim, _fmt_value(lv), MATCH, witness)
        return IdentityRecord(rid, loc, claim,
                              "no counterexample among sampled tuples", MISMATCH,
                              witness="every sampled argument tuple satisfies equality")
    return rid, build


def _eq_check(lhs_fn, rhs_fn, lhs_label, rhs_label):
    def check(args):
        lv = lhs_fn(*args)
        rv = rhs_fn(*args)
        if lv == rv:
            return None
        names = ", ".join(f"q{idx + 1} = {quat_text(x)}" for idx, x in enumerate(args))
        return (f"{names}: {lhs_label} = {_fmt_value(lv)}, "
                f"{rhs_label} = {_fmt_value(rv)}")
    return check


# --- the encoded identity registry -------------------------------------------

def _build_registry():
    entries = []

    # V1: conjugation rules, encoded as recorded (no product reversal).
    entries.append(_quat_forall(
        "V1.sum", "Eq. (3)", "conj(q1 + q2) = conj(q1) + conj(q2)", 2,
        _eq_check(lambda x, y: (x + y).conj(), lambda x, y: x.conj() + y.conj(),
                  "conj(q1 + q2)", "conj(q1) + conj(q2)")))
    entries.append(_quat_forall(
        "V1.product", "Eq. (3)", "conj(q1 q2) = conj(q1) conj(q2)", 2,
        _eq_check(lambda x, y: (x * y).conj(), lambda x, y: x.conj() * y.conj(),
                  "conj(q1 q2)", "conj(q1) conj(q2)")))
    entries.append(_quat_forall(
        "V1.involution", "Eq. (3)", "conj(conj(q1)) = q1", 1,
        _eq_check(lambda x: x.conj().conj(), lambda x: x,
                  "conj(conj(q1))", "q1")))
    entries.append(_quat_forall(
        "V1.real", "Eq. (3)", "conj(q1) = q1 for real q1", 1,
        _eq_check(lambda x: x.conj(), lambda x: x, "conj(q1)", "q1"),
        reals_only=True))

    # V2: norm laws.
    entries.append(_poly_eq("V2.norm_qqbar", "Eq. (4)",
                            "q qbar", "a^2 + b^2 + c^2 + d^2",
                            claim="|q|^2 = q qbar"))
    entries.append(_poly_eq("V2.norm_qbarq", "Eq. (4)",
                            "qbar q", "a^2 + b^2 + c^2 + d^2",
                            claim="|q|^2 = qbar q"))
    entries.append(_quat_forall(
        "V2.norm_conj", "Eq. (4)", "|q1| = |conj(q1)|", 1,
        _eq_check(lambda x: x.norm_sq(), lambda x: x.conj().norm_sq(),
                  "|q1|^2", "|conj(q1)|^2")))

    def triangle_check(args):
        x, y = args
        gap = (x + y).norm_sq() - x.norm_sq() - y.norm_sq()
        if gap <= 0 or gap * gap <= 4 * x.norm_sq() * y.norm_sq():
            return None
        return (f"q1 = {quat_text(x)}, q2 = {quat_text(y)}: "
                f"|q1 + q2| exceeds |q1| + |q2|")

    entries.append(_quat_forall(
        "V2.triangle", "Eq. (4)", "|q1 + q2| <= |q1| + |q2|", 2, triangle_check))
    entries.append(_quat_forall(
        "V2.multiplicative", "Eq. (4)", "|q1 q2| = |q1| |q2|", 2,
        _eq_check(lambda x, y: (x * y).norm_sq(),
                  lambda x, y: x.norm_sq() * y.norm_sq(),
                  "|q1 q2|^2", "|q1|^2 |q2|^2")))

    # V3: the inverse.
    entries.append(_quat_forall(
        "V3.unit", "Eq. (5)", "q1 conj(q1) / |q1|^2 = 1 (q1 != 0)", 1,
        _eq_check(lambda x: x * x.conj().scale(1 / x.norm_sq()),
                  lambda x: ONE, "q1 conj(q1)/|q1|^2", "1"),
        nonzero=True))

    def inverse_check(args):
        (x,) = args
        inv = x.inverse()
        left = inv * x
        right = x * inv
        if left == ONE and right == ONE:
            return None
        return (f"q1 = {quat_text(x)}: q1^-1 q1 = {quat_text(left)}, "
                f"q1 q1^-1 = {quat_text(right)}")

    entries.append(_quat_forall(
        "V3.inverse", "Eq. (5)",
        "q1^-1 = conj(q1)/|q1|^2 is a two-sided inverse (q1 != 0)", 1,
        inverse_check, nonzero=True))

    # V4: algebra laws and (non)commutativity.
    entries.append(_quat_forall(
        "V4.add_comm", "Eq. (6)", "q1 + q2 = q2 + q1", 2,
        _eq_check(lambda x, y: x + y, lambda x, y: y + x,
                  "q1 + q2", "q2 + q1")))
    entries.append(_quat_forall(
        "V4.add_assoc", "Eq. (6)", "q1 + (q2 + q3) = (q1 + q2) + q3", 3,
        _eq_check(lambda x, y, z: x + (y + z), lambda x, y, z: (x + y) + z,
                  "q1 + (q2 + q3)", "(q1 + q2) + q3")))
    entries.append(_quat_exists(
        "V4.noncomm", "Eq. (6)", "q1 q2 != q2 q1 for some q1, q2", 2,
        lambda args: None if args[0] * args[1] == args[1] * args[0]
        else ("q1 q2", args[0] * args[1], "q2 q1", args[1] * args[0])))
    entries.append(_quat_forall(
        "V4.mul_assoc", "Eq. (6)", "q1 (q2 q3) = (q1 q2) q3", 3,
        _eq_check(lambda x, y, z: x * (y * z), lambda x, y, z: (x * y) * z,
                  "q1 (q2 q3)", "(q1 q2) q3")))
    entries.append(_quat_forall(
        "V4.distributive", "Eq. (6)", "q1 (q2 + q3) = q1 q2 + q1 q3", 3,
        _eq_check(lambda x, y, z: x * (y + z), lambda x, y, z: x * y + x * z,
                  "q1 (q2 + q3)", "q1 q2 + q1 q3")))

    fn_pool = ("q", "qbar", "q^2", "i q", "j q", "i", "j")
    entries.append(_exists_search(
        "V4.fn_noncomm", "Eq. (7)", "f g != g f for some functions f, g",
        [(f"f = {f}, g = {g}", f"({f}) ({g})", f"({g}) ({f})")
         for f, g in itertools.permutations(fn_pool, 2)]))

    def fn_assoc_build():
        rid = "V4.fn_assoc"
        rng = Random(_seed_for(rid))
        trials = 30
        for _ in range(trials):
            f = _oracle.random_qpoly(rng, max_position_degree=2, max_terms=3)
            g = _oracle.random_qpoly(rng, max_position_degree=2, max_terms=3)
            h = _oracle.random_qpoly(rng, max_position_degree=2, max_terms=3)
            if (f * g) * h != f * (g * h):
                witness = (f"f = {f}, g = {g}, h = {h}")
                return IdentityRecord(rid, "Eq. (7)",
                                      "(f g) h = f (g h) for functions f, g, h",
                                      witness, MISMATCH, witness)
        return IdentityRecord(rid, "Eq. (7)",
                              "(f g) h = f (g h) for functions f, g, h",
                              f"holds on all {trials} random polynomial triples",
                              MATCH)

    entries.append(("V4.fn_assoc", fn_assoc_build))

    # V5: the bracket value table, one record per recorded entry.
    claimed_values = {
        ("q", "q"): {"ab": "0", "ac": "0", "ad": "0",
                     "bc": "2 k", "bd": "-2 j", "cd": "2 i"},
        ("qbar", "qbar"): {"ab": "0", "ac": "0", "ad": "0",
                           "bc": "2 k", "bd": "-2 j", "cd": "2 i"},
        ("q", "qbar"): {"ab": "-2 i", "ac": "-2 j", "ad": "-2 k",
                        "bc": "0", "bd": "0", "cd": "0"},
        ("qbar", "q"): {"ab": "2 i", "ac": "2 j", "ad": "2 k",
                        "bc": "0", "bd": "0", "cd": "0"},
    }
    for (x, y), table in claimed_values.items():
        key = f"{x}{y}"
        for pair in PAIRS:
            entries.append(_poly_eq(
                f"V5.{key}_{pair}", "Eq. (14)",
                f"pb_{pair}({x}, {y})", table[pair]))

    # V6: the symplectic remark ("the pair of q and qbar ... shows the
    # symplectic structure"): {q,qbar}_mn = -{qbar,q}_mn.
    for pair in PAIRS:
        entries.append(_poly_eq(
            f"V6.{pair}", "Eq. (14), symplectic remark",
            f"pb_{pair}(q, qbar)", f"-pb_{pair}(qbar, q)"))

    # V7: three long chains, split into consecutive pairwise links plus
    # one head-equals-closed-form record per chain.
    chains = {
        "ab": [
            "pb_ab(q, q^2)",
            "pb_ab(q^2, q)",
            "-pb_cd(q, q^2) + 4 i a",
            "pb_cd(q^2, q) - 4 i a",
            "-pb_ab(q, qbar^2) - 4 i a - 4 b",
            "-pb_ab(qbar^2, q) + 4 i a + 4 b",
            "-pb_cd(q, qbar^2) - 4 i a",
            "pb_cd(qbar^2, q) + 4 i a",
            "-pb_ab(qbar, q^2) + 4 i a - 4 b",
            "-pb_ab(q^2, qbar) - 4 i a + 4 b",
            "pb_cd(qbar, q^2) + 4 i a",
            "-pb_cd(q^2, qbar) - 4 i a",
            "pb_ab(qbar, qbar^2)",
            "pb_ab(qbar^2, qbar)",
            "pb_cd(qbar, qbar^2) - 4 i a",
            "-pb_cd(qbar^2, qbar) + 4 i a",
            "-2 b + 2 i a - 2 i q",
            "-2 k c + 2 j d",
        ],
        "ac": [
            "pb_ac(q, q^2)",
            "-pb_ac(q^2, q)",
            "-pb_bd(q, q^2) - 4 j a",
            "pb_bd(q^2, q) + 4 j a",
            "pb_ac(q, qbar^2) + 4 j a + 4 c",
            "-pb_ac(qbar^2, q) + 4 j a + 4 c",
            "-pb_bd(q, qbar^2) + 4 j a",
            "pb_bd(qbar^2, q) - 4 j a",
            "pb_ac(qbar, q^2) - 4 j a + 4 c",
            "pb_ac(q^2, qbar) + 4 j a - 4 c",
            "pb_bd(qbar, q^2) - 4 j a",
            "-pb_bd(q^2, qbar) + 4 j a",
            "-pb_ac(qbar, qbar^2)",
            "-pb_ac(qbar^2, qbar)",
            "pb_bd(qbar, qbar^2) + 4 j a",
            "-pb_bd(qbar^2, qbar) - 4 j a",
            "-2 c + 2 j a - 2 j q",
            "-2 k b + 2 i d",
        ],
        "ad": [
            "pb_ad(q, q^2)",
            "-pb_ad(q^2, q)",
            "pb_bc(q, q^2) - 4 k a",
            "-pb_bc(q^2, q) + 4 k a",
            "pb_ad(q, qbar^2) + 4 k a + 4 d",
            "pb_ad(qbar^2, q) - 4 k a - 4 d",
            "pb_bc(q, qbar^2) + 4 k a",
            "-pb_bc(qbar^2, q) - 4 k a",
            "pb_ad(qbar, q^2) - 4 k a + 4 d",
            "pb_ad(q^2, qbar) + 4 k a - 4 d",
            "-pb_bc(qbar, q^2) - 4 k a",
            "pb_bc(q^2, qbar) + 4 k a",
            "-pb_ad(qbar, qbar^2)",
            "-pb_ad(qbar^2, qbar)",
            "-pb_bc(qbar, qbar^2) + 4 k a",
            "pb_bc(qbar^2, qbar) - 4 k a",
            "-2 d + 2 k a - 2 k q",
            "2 j b - 2 i c",
        ],
    }
    for pair, exprs in chains.items():
        loc = f"Eq. (15), {pair} chain"
        for idx in range(len(exprs) - 1):
            entries.append(_poly_eq(f"V7.{pair}.{idx + 1}", loc,
                                    exprs[idx], exprs[idx + 1]))
        entries.append(_poly_eq(f"V7.{pair}.value", loc, exprs[0], exprs[-1]))

    # V8: the four basic star products.
    entries.append(_poly_eq(
        "V8.1", "Eq. (16)", "star(q, q)",
        "q^2 + nu (k Theta_bc - j Theta_bd + i Theta_cd)"))
    entries.append(_poly_eq(
        "V8.2", "Eq. (16)", "star(q, qbar)",
        "q qbar - nu (i Theta_ab + j Theta_ac + k Theta_ad)"))
    entries.append(_poly_eq(
        "V8.3", "Eq. (16)", "star(qbar, q)",
        "qbar q + nu (i Theta_ab + j Theta_ac + k Theta_ad)"))
    entries.append(_poly_eq(
        "V8.4", "Eq. (16)", "star(qbar, qbar)",
        "qbar^2 + nu (k Theta_bc - j Theta_bd + i Theta_cd)"))

    # V9: conjugation behavior of star products.
    entries.append(_poly_neq(
        "V9.1", "Eq. (17)", "conj(star(q, q))", "star(qbar, qbar)"))
    entries.append(_poly_eq(
        "V9.2", "Eq. (17)", "conj(star(q, qbar))", "star(qbar, q)"))
    star_pool = ("q", "qbar", "q^2", "qbar^2")
    entries.append(_exists_search(
        "V9.3", "Eq. (17)", "star(f, g) != star(g, f) for some f, g",
        [(f"f = {f}, g = {g}", f"star({f}, {g})", f"star({g}, {f})")
         for f, g in itertools.permutations(star_pool, 2)]))
    entries.append(_exists_search(
        "V9.4", "Eq. (17)",
        "conj(star(f, g)) != star(conj(f), conj(g)) for some f, g",
        [(f"f = {f}, g = {g}", f"conj(star({f}, {g}))",
          f"star(conj({f}), conj({g}))")
         for f, g in itertools.product(star_pool, repeat=2)]))

    # V10: eight star expansions, encoded as recorded (including the
    # q^2 * qbar line's "j d" term), plus the q^2*q != q*q^2 observation.
    eq18 = [
        ("V10.1", "star(q, q^2)",
         "q^3 + nu (Theta_ab (-k c + j d) + Theta_ac (-k b + i d)"
         " + Theta_ad (j b - i c) + Theta_bc (2 k a + j b - i c)"
         " + Theta_bd (-2 j a + k b - i d) + Theta_cd (2 i a + k c - j d))"),
        ("V10.2", "star(q^2, q)",
         "q^3 + nu (Theta_ab (-k c + j d) + Theta_ac (k b - i d)"
         " + Theta_ad (-j b + i c) + Theta_bc (2 k a - j b + i c)"
         " + Theta_bd (-2 j a - k b + i d) + Theta_cd (2 i a - k c + j d))"),
        ("V10.3", "star(q, qbar^2)",
         "q qbar^2 + nu (Theta_ab (-2 i a - 2 b + k c - j d)"
         " + Theta_ac (-2 j a - k b - 2 c + i d)"
         " + Theta_ad (-2 k a + j b - i c - 2 d)"
         " + Theta_bc (-2 k a + j b - i c) + Theta_bd (2 j a + k b - i d)"
         " + Theta_cd (-2 i a + k c - j d))"),
        ("V10.4", "star(qbar^2, q)",
         "qbar^2 q + nu (Theta_ab (2 i a + 2 b + k c - j d)"
         " + Theta_ac (2 j a + k b + 2 c - i d)"
         " + Theta_ad (2 k a + j b - i c + 2 d)"
         " + Theta_bc (-2 k a - j b + i c) + Theta_bd (2 j a - k b + i d)"
         " + Theta_cd (-2 i a - k c + j d))"),
        ("V10.5", "star(qbar, q^2)",
         "qbar q^2 + nu (Theta_ab (2 i a - 2 b + k c - j d)"
         " + Theta_ac (2 j a - k b - 2 c + i d)"
         " + Theta_ad (2 k a + j b - i c - 2 d)"
         " + Theta_bc (-2 k a - j b + i c) + Theta_bd (2 j a - k b + i d)"
         " + Theta_cd (-2 i a - k c + j d))"),
        ("V10.6", "star(q^2, qbar)",
         "q^2 qbar + nu (Theta_ab (-2 i a + 2 b + k c - j d)"
         " + Theta_ac (-2 j a - k b + 2 c + i d)"
         " + Theta_ad (-2 k a + j d - i c + 2 d)"
         " + Theta_bc (-2 k a + j b - i c) + Theta_bd (2 j a + k b - i d)"
         " + Theta_cd (-2 i a + k c - j d))"),
        ("V10.7", "star(qbar, qbar^2)",
         "qbar^3 + nu (Theta_ab (-k c + j d) + Theta_ac (k b - i d)"
         " + Theta_ad (-j b + i c) + Theta_bc (2 k a - j b + i c)"
         " + Theta_bd (-2 j a - k b + i d) + Theta_cd (2 i a - k c + j d))"),
        ("V10.8", "star(qbar^2, qbar)",
         "qbar^3 + nu (Theta_ab (-k c + j d) + Theta_ac (k b - i d)"
         " + Theta_ad (-j b + i c) + Theta_bc (2 k a + j b - i c)"
         " + Theta_bd (-2 j a + k b - i d) + Theta_cd (2 i a + k c - j d))"),
    ]
    for rid, lhs, rhs in eq18:
        entries.append(_poly_eq(rid, "Eq. (18)", lhs, rhs))
    entries.append(_poly_neq(
        "V10.9", "Eq. (18), remark", "star(q^2, q)", "star(q, q^2)"))

    # V11: broken associativity, plus the Jacobi remark.
    entries.append(_poly_neq("V11.1", "Eq. (19)", "assoc(q, q, q)", "0"))
    entries.append(_poly_neq("V11.2", "Eq. (19)", "assoc(q, q, qbar)", "0"))
    entries.append(_poly_neq("V11.3", "Eq. (19)", "assoc(q, qbar, q)", "0"))
    assoc_pool = ("q", "qbar", "q^2", "i q", "j q")
    entries.append(_exists_search(
        "V11.4", "Eq. (19)",
        "assoc(f, g, h) != 0 for some f, g, h",
        [(f"f = {f}, g = {g}, h = {h}", f"assoc({f}, {g}, {h})", "0")
         for f, g, h in itertools.product(assoc_pool, repeat=3)]))
    jacobi_pool = ("q", "qbar", "q^2", "i b", "j b c", "i c")
    jacobi_candidates = []
    for pair in PAIRS:
        for f, g, h in itertools.product(jacobi_pool, repeat=3):
            jacobi_candidates.append((
                f"mn = {pair}, f = {f}, g = {g}, h = {h}",
                f"pb_{pair}({f}, pb_{pair}({g}, {h}))"
                f" + pb_{pair}({g}, pb_{pair}({h}, {f}))"
                f" + pb_{pair}({h}, pb_{pair}({f}, {g}))",
                "0"))
    entries.append(_exists_search(
        "V11.5", "remark after Eq. (15)",
        "the Jacobi identity fails for some f, g, h and pair mn",
        jacobi_candidates))

    return entries


_REGISTRY = None


def _registry():
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return _REGISTRY


# Expected record count per group; the test suite asserts this coverage.
COVERAGE = {
    "V1": 4, "V2": 5, "V3": 2, "V4": 7, "V5": 24, "V6": 6,
    "V7": 54, "V8": 4, "V9": 4, "V10": 9, "V11": 5,
}


def identity_ids() -> list:
    return [rid for rid, _ in _registry()]


def run_identity(rid: str) -> IdentityRecord:
    for known, build in _registry():
        if known == rid:
            return build()
    raise UnknownIdentityError(
        f"unknown identity id {rid!r}; valid ids: {', '.join(identity_ids())}")


def run_matching(token: str) -> list:
    """Records whose id equals the token or falls under it as a group prefix."""
    matches = [build for rid, build in _registry()
               if rid == token or rid.startswith(token + ".")]
    if not matches:
        raise UnknownIdentityError(
            f"unknown identity id {token!r}; valid ids: {', '.join(identity_ids())}")
    return [build() for build in matches]


def run_all() -> DiscrepancyReport:
    report = DiscrepancyReport(ENGINE_VERSION)
    for _, build in _registry():
        report.records.append(build())
    return report


# --- rendering ----------------------------------------------------------------

_STATUS_RANK = {MISMATCH: 0, NOT_COMPARABLE: 1, MATCH: 2}


def render_report(report: DiscrepancyReport, format: str = "text") -> str:
    if format == "json":
        return json.dumps(report.to_dict(), indent=2)
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    summary = report.summary()
    lines = [
        f"identity report (engine {report.engine_version})",
        f"summary: {summary['match']} MATCH, {summary['mismatch']} MISMATCH, "
        f"{summary['not_comparable']} NOT_COMPARABLE",
    ]
    groups = []
    grouped = {}
    for record in report.records:
        group = record.id.split(".")[0]
        if group not in grouped:
            grouped[group] = []
            groups.append(group)
        grouped[group].append(record)
    for group in groups:
        lines.append("")
        lines.append(f"== {group} ==")
        ordered = sorted(grouped[group],
                         key=lambda r: _STATUS_RANK[r.status])
        for record in ordered:
            lines.append(f"{record.status:<9} {record.id}  [{record.paper_location}]")
            lines.append(f"    claim:  {record.claim_text}")
            lines.append(f"    engine: {record.engine_value}")
            if record.witness is not None:
                lines.append(f"    witness: {record.witness}")
    lines.append("")
    return "\n".join(lines)


def report_from_json(text: str) -> DiscrepancyReport:
    data = json.loads(text)
    records = [IdentityRecord(
        id=item["id"], paper_location=item["paper_location"],
        claim_text=item["claim_text"], engine_value=item["engine_value"],
        status=item["status"], witness=item.get("witness"))
        for item in data["records"]]
    return DiscrepancyReport(data["engine_version"], records)
