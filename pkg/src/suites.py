"""
Seeded property suites run by `ipf_cli.py verify`.

Every suite draws its cases from its own random stream, so a suite's report does not depend
on which other suites run with it. A case holds several named checks and fails on the first
check that does not hold; the first failing case of each suite is kept as a counterexample
together with command lines that reproduce it.
"""
import io
import logging
import shlex
import time
from dataclasses import dataclass, field
from typing import List, Optional

import jsonlines

from src.codec import render
from src.congruence import (
    canonical, cmg_related, collapse_witness, conjugate_idempotent, lift, power_idempotent, quot_identity,
    quot_inv, quot_mul, separating_idempotent, swap_idempotent, top, witness_idempotent,
)
from src.monoid import (
    BPair, Element, apply, apply_chain, bicyclic_mul, bpair_act, bpair_mul, compose, from_unit, h_element,
    idempotent, identity, inverse, is_idempotent, mul_idempotent_left, mul_idempotent_right, psi, psi_inverse,
    sdp_mul,
)
from src.oracle import Truncation, agree, truncate
from src.order import d_witness, green, nat_leq, nat_leq_by_product, nat_leq_range
from src.sampling import ElementSampler, make_rng
from src.seqcore import (
    ONE, IDENTITY, NSeq, act_n, act_z, atom, diff, offset_add, perm_compose, perm_inverse, pointwise, project,
    seq_leq, shifted_add, shifted_sub, transposition, uniform,
)

logger = logging.getLogger(__name__)


def command(verb, *args):
    words = ["python", "ipf_cli.py", verb]
    words += [a if isinstance(a, str) else render(a) for a in args]
    return " ".join(shlex.quote(w) for w in words)


@dataclass
class Counterexample:
    case: int
    check: str
    commands: List[str]


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    passed: int = 0
    failed: int = 0
    counterexample: Optional[Counterexample] = None

    def to_dict(self):
        record = {"suite": self.name, "cases": self.cases, "passed": self.passed, "failed": self.failed}
        if self.counterexample is not None:
            record["counterexample"] = {
                "case": self.counterexample.case,
                "check": self.counterexample.check,
                "commands": self.counterexample.commands,
            }
        return record


class CheckFailed(Exception):
    def __init__(self, check, commands):
        super().__init__(check)
        self.check = check
        self.commands = commands


@dataclass
class Case:
    """Collects the inputs of one case so that failures can be reproduced."""

    inputs: List[Element] = field(default_factory=list)

    def given(self, *elements):
        self.inputs.extend(elements)
        return elements if len(elements) > 1 else elements[0]

    def check(self, name, ok, *commands):
        if not ok:
            raise CheckFailed(name, list(commands) or self.default_commands())

    def default_commands(self):
        elements = [e for e in self.inputs if isinstance(e, Element)]
        if len(elements) >= 2:
            return [command("compose", elements[0], elements[1])]
        return [command("inverse", e) for e in elements]


SUITES = {}


def register(name, stream):
    def wrap(fn):
        SUITES[name] = (stream, fn)
        return fn
    return wrap


def _point_in(sampler, a):
    """A random point of the filter ↑a."""
    return shifted_add(a, sampler.nseq())


@register("axioms", 1)
def axioms_case(sampler, case, cfg):
    alpha, beta, gamma = case.given(sampler.element(), sampler.element(), sampler.element())
    alpha_inv = inverse(alpha)
    case.check("alpha alpha^-1 alpha = alpha", compose(compose(alpha, alpha_inv), alpha) == alpha,
               command("compose", compose(alpha, alpha_inv), alpha))
    case.check("alpha^-1 alpha alpha^-1 = alpha^-1", compose(compose(alpha_inv, alpha), alpha_inv) == alpha_inv,
               command("compose", compose(alpha_inv, alpha), alpha_inv))
    case.check("alpha alpha^-1 = idempotent(d)", compose(alpha, alpha_inv) == idempotent(alpha.d),
               command("compose", alpha, alpha_inv))
    case.check("alpha^-1 alpha = idempotent(r)", compose(alpha_inv, alpha) == idempotent(alpha.r),
               command("compose", alpha_inv, alpha))
    case.check("associativity",
               compose(compose(alpha, beta), gamma) == compose(alpha, compose(beta, gamma)),
               command("compose", compose(alpha, beta), gamma), command("compose", alpha, compose(beta, gamma)))
    case.check("identity is neutral", compose(identity(), alpha) == alpha == compose(alpha, identity()),
               command("compose", identity(), alpha))
    case.check("twist is multiplicative", compose(alpha, beta).g == perm_compose(alpha.g, beta.g),
               command("compose", alpha, beta))
    case.check("idempotent iff square", is_idempotent(alpha) == (compose(alpha, alpha) == alpha),
               command("compose", alpha, alpha))

    e, f = sampler.nseq(), sampler.nseq()
    epsilon, zeta = idempotent(e), idempotent(f)
    product = compose(epsilon, zeta)
    case.check("idempotents commute with the max law",
               product == compose(zeta, epsilon) == idempotent(pointwise(e, f, "max")),
               command("compose", epsilon, zeta), command("compose", zeta, epsilon))
    case.check("idempotent() is idempotent", is_idempotent(epsilon) and compose(epsilon, epsilon) == epsilon,
               command("compose", epsilon, epsilon))
    case.check("alpha epsilon closed form", mul_idempotent_right(alpha, e) == compose(alpha, epsilon),
               command("compose", alpha, epsilon))
    case.check("epsilon alpha closed form", mul_idempotent_left(e, alpha) == compose(epsilon, alpha),
               command("compose", epsilon, alpha))

    point = _point_in(sampler, compose(alpha, beta).d)
    case.check("apply agrees with compose",
               apply(compose(alpha, beta), point) == apply(beta, apply(alpha, point)),
               command("apply", compose(alpha, beta), point), command("apply", alpha, point))
    point = _point_in(sampler, alpha.d)
    image = apply(alpha, point)
    case.check("apply lands in the range", seq_leq(alpha.r, image), command("apply", alpha, point))
    case.check("apply agrees with the factorization", image == apply_chain(alpha, point),
               command("apply", alpha, point))
    case.check("inverse undoes apply", apply(alpha_inv, image) == point, command("apply", alpha_inv, image))


@register("psi", 2)
def psi_case(sampler, case, cfg):
    alpha, beta = case.given(sampler.element(), sampler.element())
    case.check("psi is a homomorphism", psi(compose(alpha, beta)) == sdp_mul(psi(alpha), psi(beta)),
               command("psi", compose(alpha, beta)), command("psi", alpha), command("psi", beta))
    case.check("psi is invertible", psi_inverse(psi(alpha)) == alpha, command("psi", alpha))
    case.check("psi is injective", (alpha == beta) == (psi(alpha) == psi(beta)),
               command("psi", alpha), command("psi", beta))
    g = sampler.perm()
    u, v = BPair(sampler.nseq(), sampler.nseq()), BPair(sampler.nseq(), sampler.nseq())
    case.check("Phi_g is an automorphism",
               bpair_act(g, bpair_mul(u, v)) == bpair_mul(bpair_act(g, u), bpair_act(g, v)),
               command("psi", Element(g, u.p, u.q)), command("psi", Element(g, v.p, v.q)))
    case.check("(1, 1) is the identity pair", bpair_mul(BPair(ONE, ONE), u) == u == bpair_mul(u, BPair(ONE, ONE)),
               command("psi", Element(IDENTITY, u.p, u.q)))


@register("oracle", 3)
def oracle_case(sampler, case, cfg):
    oracle_cfg = cfg.get("oracle", {})
    width = oracle_cfg.get("width", 2)
    indices = sampler.subset(width)
    local = ElementSampler(sampler.rng, indices=indices, max_value=oracle_cfg.get("max_value", 8),
                           max_support=width, max_moved=width)
    alpha, beta = case.given(local.element(), local.element())
    largest = max([1] + [v for e in (alpha, beta) for s in (e.d, e.r) for _, v in s.items()])
    bound = max(cfg.get("bound", 16), largest + oracle_cfg.get("margin", 4))
    t = Truncation(tuple(indices), bound)
    case.check(f"oracle agrees (support {t.support}, bound {bound})", agree(alpha, beta, t),
               command("compose", alpha, beta))
    grid = truncate(idempotent(alpha.d), t)
    case.check("truncated idempotent is the identity", all(a == b for a, b in grid.items()),
               command("compose", idempotent(alpha.d), idempotent(alpha.d)))


@register("congruence", 4)
def congruence_case(sampler, case, cfg):
    alpha, beta = case.given(sampler.element(), sampler.element())
    case.check("canonical is a homomorphism",
               canonical(compose(alpha, beta)) == quot_mul(canonical(alpha), canonical(beta)),
               command("canonical", compose(alpha, beta)), command("canonical", alpha), command("canonical", beta))

    q, s, t = sampler.quot(), sampler.quot(), sampler.quot()
    case.check("lift is a section of canonical", canonical(lift(q)) == q, command("lift", q))
    case.check("quotient product is associative", quot_mul(quot_mul(q, s), t) == quot_mul(q, quot_mul(s, t)),
               command("lift", q), command("lift", s), command("lift", t))
    case.check("quotient identity", quot_mul(quot_identity(), q) == q == quot_mul(q, quot_identity()),
               command("lift", q))
    case.check("quotient inverse",
               quot_mul(q, quot_inv(q)) == quot_identity() == quot_mul(quot_inv(q), q), command("lift", q))

    top_alpha = top(alpha)
    if sampler.integer(0, 1):
        beta = case.given(compose(top_alpha, idempotent(sampler.nseq())))
    epsilon = idempotent(pointwise(alpha.r, beta.r, "max"))
    related = cmg_related(alpha, beta)
    case.check("related iff a max witness equalizes",
               related == (compose(alpha, epsilon) == compose(beta, epsilon)),
               command("compose", alpha, epsilon), command("compose", beta, epsilon))
    if related:
        witness = witness_idempotent(alpha, beta)
        case.check("witness idempotent equalizes",
                   is_idempotent(witness) and compose(alpha, witness) == compose(beta, witness),
                   command("compose", alpha, witness), command("compose", beta, witness))

    case.check("top is congruent", cmg_related(top_alpha, alpha),
               command("canonical", top_alpha), command("canonical", alpha))
    case.check("top is above", nat_leq(alpha, top_alpha), command("leq", alpha, top_alpha))
    case.check("top is idempotent as an operator", top(top_alpha) == top_alpha, command("top", top_alpha))
    for _ in range(cfg.get("class_mates", 10)):
        gamma = compose(top_alpha, idempotent(sampler.nseq()))
        case.check("class mate is congruent", cmg_related(gamma, alpha),
                   command("canonical", gamma), command("canonical", alpha))
        case.check("class mate is below top", nat_leq(gamma, top_alpha), command("leq", gamma, top_alpha))


@register("order", 5)
def order_case(sampler, case, cfg):
    alpha, beta = case.given(sampler.element(), sampler.element())
    case.check("criteria (domain) and (range) agree", nat_leq(alpha, beta) == nat_leq_range(alpha, beta),
               command("leq", alpha, beta))
    case.check("order matches its definition", nat_leq(alpha, beta) == nat_leq_by_product(alpha, beta),
               command("leq", alpha, beta), command("compose", beta, idempotent(alpha.d)))
    case.check("reflexive", nat_leq(alpha, alpha), command("leq", alpha, alpha))

    below = compose(beta, idempotent(sampler.nseq()))
    lower = compose(below, idempotent(sampler.nseq()))
    case.check("beta epsilon is below beta", nat_leq(below, beta) and nat_leq_range(below, beta),
               command("leq", below, beta))
    case.check("transitive", nat_leq(lower, beta), command("leq", lower, beta))
    case.check("antisymmetric", not (nat_leq(below, beta) and nat_leq(beta, below)) or below == beta,
               command("leq", below, beta), command("leq", beta, below))
    case.check("left factor form", below == compose(idempotent(below.d), beta),
               command("compose", idempotent(below.d), beta))

    e, f = sampler.nseq(), sampler.nseq()
    case.check("order on idempotents", nat_leq(idempotent(e), idempotent(f)) == seq_leq(f, e),
               command("leq", idempotent(e), idempotent(f)))

    for rel in ("L", "R"):
        case.check(f"H implies {rel}", not green("H", alpha, beta) or green(rel, alpha, beta),
                   command("green", "H", alpha, beta))
    case.check("single D-class", green("D", alpha, beta) and green("J", alpha, beta),
               command("green", "D", alpha, beta))
    witness = d_witness(idempotent(e), idempotent(f))
    case.check("bisimplicity witness",
               compose(witness, inverse(witness)) == idempotent(e)
               and compose(inverse(witness), witness) == idempotent(f),
               command("compose", witness, inverse(witness)))

    # E-unitary: alpha epsilon idempotent forces alpha idempotent
    candidate = alpha if sampler.integer(0, 1) else h_element(sampler.perm() if sampler.integer(0, 1) else IDENTITY,
                                                               alpha.d)
    epsilon = idempotent(sampler.nseq())
    case.check("E-unitary", not is_idempotent(compose(candidate, epsilon)) or is_idempotent(candidate),
               command("compose", candidate, epsilon))


@register("units", 6)
def units_case(sampler, case, cfg):
    g, h = sampler.perm(), sampler.perm()
    d = sampler.nseq()
    unit_g, unit_h = case.given(from_unit(g), from_unit(h))
    case.check("from_unit is a homomorphism", compose(unit_g, unit_h) == from_unit(perm_compose(g, h)),
               command("compose", unit_g, unit_h))
    case.check("from_unit respects inverses", inverse(unit_g) == from_unit(perm_inverse(g)),
               command("inverse", unit_g))
    case.check("units fix the bottom", apply(unit_g, ONE) == ONE, command("apply", unit_g, ONE))
    for x in range(sampler.indices[-1] + 1):
        for k in range(2, 10):
            case.check(f"units relabel atoms (x={x}, k={k})", apply(unit_g, atom(x, k)) == atom(g(x), k),
                       command("apply", unit_g, atom(x, k)))
    case.check("maximal subgroup law",
               compose(h_element(g, d), h_element(h, d)) == h_element(perm_compose(g, h), d),
               command("compose", h_element(g, d), h_element(h, d)))
    case.check("maximal subgroup inverse",
               compose(h_element(g, d), inverse(h_element(g, d))) == idempotent(d),
               command("compose", h_element(g, d), inverse(h_element(g, d))))


@register("bicyclic", 7)
def bicyclic_case(sampler, case, cfg):
    i, j, k, l = (sampler.integer(1, 20) for _ in range(4))
    left = case.given(Element(IDENTITY, NSeq({0: i}), NSeq({0: j})))
    right = case.given(Element(IDENTITY, NSeq({0: k}), NSeq({0: l})))
    product = compose(left, right)
    m = max(j, k)
    case.check("single coordinate product follows the bicyclic law",
               (product.d[0], product.r[0]) == bicyclic_mul(i, j, k, l) == (i + m - j, l + m - k),
               command("compose", left, right))
    pair = bpair_mul(BPair(left.d, left.r), BPair(right.d, right.r))
    case.check("pair product matches", (pair.p[0], pair.q[0]) == (i + m - j, l + m - k),
               command("psi", left), command("psi", right))


@register("actions", 8)
def actions_case(sampler, case, cfg):
    g, h = sampler.perm(), sampler.perm()
    a, b, c = sampler.nseq(), sampler.nseq(), sampler.nseq()
    # one compose line carries every sequence and permutation of the case
    case.given(Element(g, a, b), Element(h, c, ONE))
    case.check("action is a homomorphism", act_n(perm_compose(g, h), a) == act_n(h, act_n(g, a)))
    case.check("inverse action", act_n(perm_inverse(g), act_n(g, a)) == a)
    if g != h:
        moved = sorted(g.moved | h.moved)
        case.check("action is injective", any(act_n(g, atom(x, 2)) != act_n(h, atom(x, 2)) for x in moved))
    case.check("action is additive", diff(act_n(g, a), act_n(g, b)) == act_z(g, diff(a, b)))
    for op in ("max", "min"):
        case.check(f"action commutes with {op}",
                   act_n(g, pointwise(a, b, op)) == pointwise(act_n(g, a), act_n(g, b), op))
    case.check("action is an order automorphism", seq_leq(a, b) == seq_leq(act_n(g, a), act_n(g, b)))
    x = sampler.integer(0, sampler.indices[-1])
    case.check(f"action moves projections (x={x})", act_n(g, project(a, x)) == project(act_n(g, a), g(x)))
    case.check("shifted_add is commutative", shifted_add(a, b) == shifted_add(b, a))
    case.check("shifted_add is associative",
               shifted_add(shifted_add(a, b), c) == shifted_add(a, shifted_add(b, c)))
    case.check("1 is neutral", shifted_add(a, ONE) == a)
    case.check("shifted_sub undoes shifted_add", shifted_sub(shifted_add(a, b), b) == a)
    total = {y: a[y] + b[y] - c[y] for y in a.support | b.support | c.support}
    if all(v >= 1 for v in total.values()):
        case.check("offset_add of a difference", offset_add(a, diff(b, c)) == NSeq(total))


@register("lemmas", 9)
def lemmas_case(sampler, case, cfg):
    indices = sampler.subset(sampler.integer(1, len(sampler.indices)))
    n = sampler.integer(0, cfg.get("lemmas", {}).get("max_power", 5))
    iota = idempotent(uniform(indices, 2))
    shift = case.given(collapse_witness(iota))
    case.check("collapse witness covers the whole space", compose(shift, inverse(shift)) == identity(),
               command("compose", shift, inverse(shift)))
    case.check("collapse witness lands on iota", compose(inverse(shift), shift) == iota,
               command("compose", inverse(shift), shift))
    case.check(f"powers climb the filters (n={n})",
               power_idempotent(shift, n) == idempotent(uniform(indices, n + 1)),
               command("compose", inverse(shift), shift))

    epsilon = idempotent(shifted_add(iota.d, uniform(indices, 2)))
    conjugate = conjugate_idempotent(shift, epsilon)
    case.check("conjugate of a smaller idempotent is a non-unit idempotent",
               is_idempotent(conjugate) and conjugate != identity(),
               command("compose", compose(shift, epsilon), inverse(shift)))

    x, y = indices[0], sampler.integer(0, sampler.indices[-1])
    case.check(f"swap conjugation ({x} {y})", swap_idempotent(x, y) == idempotent(atom(y, 2)),
               command("compose", from_unit(transposition(x, y)), idempotent(atom(x, 2))))
    if x != y:
        unit = from_unit(perm_compose(transposition(x, y), sampler.perm()))
        if not unit.g.is_identity():
            first, sandwich = separating_idempotent(unit)
            case.check("separating idempotent breaks H", not green("H", first, sandwich),
                       command("green", "H", first, sandwich))


def run_suite(name, cfg):
    stream, fn = SUITES[name]
    sampler = ElementSampler.from_config(make_rng(cfg.seed, stream), cfg.get("generator", {}))
    result = SuiteResult(name)
    for index in range(cfg.cases):
        case = Case()
        result.cases += 1
        try:
            fn(sampler, case, cfg)
        except CheckFailed as e:
            failure = Counterexample(index, e.check, e.commands)
        except Exception as e:  # any crash inside a case is a counterexample too
            failure = Counterexample(index, f"raised {type(e).__name__}: {e}", case.default_commands())
        else:
            result.passed += 1
            continue
        result.failed += 1
        if result.counterexample is None:
            result.counterexample = failure
            logger.warning(f"[{name}] case {index} failed: {failure.check}")
    return result


def suite_names(suite):
    return list(SUITES) if suite == "all" else [suite]


GENERATOR_KEYS = ("index_range", "max_value", "max_support", "max_moved", "max_z")
ORACLE_KEYS = ("width", "max_value", "margin")


def report_header(cfg):
    gen = cfg.get("generator", {})
    oracle_cfg = cfg.get("oracle", {})
    return {
        "suite": cfg.suite,
        "cases": cfg.cases,
        "seed": cfg.seed,
        "bound": cfg.bound,
        "generator": {k: gen.get(k) for k in GENERATOR_KEYS},
        "oracle": {k: oracle_cfg.get(k) for k in ORACLE_KEYS},
    }


def format_report(cfg, results, report_format="text"):
    ok = all(result.failed == 0 for result in results)
    header = report_header(cfg)
    if report_format == "jsonl":
        buffer = io.StringIO()
        with jsonlines.Writer(buffer, compact=True) as writer:
            writer.write({"verify": header})
            writer.write_all(result.to_dict() for result in results)
            writer.write({"result": "PASS" if ok else "FAIL"})
        return buffer.getvalue().rstrip("\n"), ok
    if report_format != "text":
        raise ValueError(f"Unknown report format: {report_format}")

    lines = [
        f"verify suite={header['suite']} cases={header['cases']} seed={header['seed']} bound={header['bound']}",
        "generator " + " ".join(f"{k}={v}" for k, v in header["generator"].items()),
        "oracle " + " ".join(f"{k}={v}" for k, v in header["oracle"].items()),
    ]
    for result in results:
        lines.append(f"{result.name} cases={result.cases} passed={result.passed} failed={result.failed}")
        if result.counterexample is not None:
            lines.append(f"  first counterexample: case {result.counterexample.case}: {result.counterexample.check}")
            lines += [f"    {c}" for c in result.counterexample.commands]
    lines.append("result " + ("PASS" if ok else "FAIL"))
    return "\n".join(lines), ok


def run_verify(cfg, report_format="text"):
    results = []
    for name in suite_names(cfg.suite):
        start = time.time()
        logger.info(f"running suite {name} with {cfg.cases} cases")
        results.append(run_suite(name, cfg))
        logger.info(f"suite {name} finished in {time.time() - start:.2f}s")
    report, ok = format_report(cfg, results, report_format)
    return report, results, ok
