"""Cross-checks between independently computed invariants.

Each check compares quantities that the engine obtains by different
routes, so a coding or modelling error on either side shows up as a
failed verdict instead of silently consistent garbage:

thm_1_1          (value group index) * (residue field degree), from
                 lattices and graded reduction, against j, from the
                 conjugate distance multiset.
thm_1_2          equivalent pairs at the same gamma must share j.
lemma_4_1        replacing gamma by (gamma, -1) keeps j and alpha and
                 turns the whole residue degree into value group index.
eq_7_ic_degree   j is the index of the implicit constant field inside
                 the henselization of K(a), so it must divide deg Q.
cor_5_3          j = 1 exactly when index and residue degree are both
                 trivial.
thm_1_3_sandwich for an intermediate field K(b): the relative j over
                 K(b) divides j, and j divides [K(a):K(b)] * j_rel.
                 Only meaningful when K(b)/K is tame and separable.

Verdict names are fixed strings: downstream tooling matches on them.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .algext import (
    AlgebraicElement,
    CertificationError,
    DistanceMultiset,
    certify,
    root_value_multiset,
)
from .exactpoly import Poly, poly_gcd, taylor_coefficients
from .gaussval import GaussValuation
from .ordvals import OrderedValue, value_to_json
from .pairs import MinimalPair, MinimalityError, check_minimality, pairs_equivalent

VERDICT_NAMES = (
    "thm_1_1",
    "thm_1_2",
    "lemma_4_1",
    "eq_7_ic_degree",
    "cor_5_3",
    "thm_1_3_sandwich",
)


@dataclass(frozen=True)
class Verdict:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str

    @property
    def passed(self):
        return self.status == "pass"


def classify_implicit_constants(j, n):
    """Where the implicit constant field sits between the
    henselizations of K and K(a): index j counted from the top."""
    if n % j != 0:
        return {
            "kind": "Undetermined",
            "index_in_full_extension": j,
            "degree_over_ground": None,
        }
    if j == n:
        kind = "EqualsHenselizationOfK"
    elif j == 1:
        kind = "EqualsKaHenselization"
    else:
        kind = "Intermediate"
    return {
        "kind": kind,
        "index_in_full_extension": j,
        "degree_over_ground": n // j,
    }


def verify_product_formula(gv):
    prod = gv.value_index * gv.residue_degree
    ok = prod == gv.j
    detail = (
        "value index %d * residue degree %d = %d, j = %d"
        % (gv.value_index, gv.residue_degree, prod, gv.j)
    )
    return Verdict("thm_1_1", "pass" if ok else "fail", detail)


def verify_equivalence_transfer(pair, partner_pairs):
    """Equivalent pairs (some conjugate of the partner within gamma)
    must produce the same j.  Returns the verdict and the couple
    statistics for reporting."""
    couples = 0
    sensitive = 0
    mismatches = []
    for pb in partner_pairs:
        res = pairs_equivalent(pair, pb)
        if not res.equivalent:
            continue
        couples += 1
        if res.conjugate_choice_sensitive:
            sensitive += 1
        if pb.j != pair.j:
            mismatches.append(
                "%s has j = %d, expected %d"
                % (pb.elem.Q.to_str(), pb.j, pair.j)
            )
    if not partner_pairs:
        return (
            Verdict("thm_1_2", "skipped", "no partners configured"),
            {"couples": 0, "sensitive": 0},
        )
    if mismatches:
        return (
            Verdict("thm_1_2", "fail", "; ".join(mismatches)),
            {"couples": couples, "sensitive": sensitive},
        )
    detail = (
        "%d equivalent couple(s) out of %d partner(s), all with j = %d;"
        " %d sensitive to the conjugate choice"
        % (couples, len(partner_pairs), pair.j, sensitive)
    )
    return (
        Verdict("thm_1_2", "pass", detail),
        {"couples": couples, "sensitive": sensitive},
    )


def verify_value_lift(pair, gv):
    """Lift gamma to (gamma, -1): j and alpha survive, the value of Q
    picks up a second coordinate -j, and the whole of j moves into the
    value group index."""
    if pair.gamma.rank != 1:
        return Verdict(
            "lemma_4_1", "skipped", "pair already has a rank-two value"
        )
    lifted = pair.lift()
    gvl = GaussValuation(lifted)
    expected_vq = OrderedValue.of(pair.vq[0], -pair.j)
    problems = []
    if lifted.j != pair.j:
        problems.append("j changed: %d to %d" % (pair.j, lifted.j))
    if lifted.alpha != pair.alpha:
        problems.append(
            "alpha changed: %r to %r" % (pair.alpha, lifted.alpha)
        )
    if lifted.vq != expected_vq:
        problems.append(
            "v(Q) lifted to %r, expected %r" % (lifted.vq, expected_vq)
        )
    if gvl.value_index != pair.j:
        problems.append(
            "lifted value index %d, expected j = %d"
            % (gvl.value_index, pair.j)
        )
    if gvl.residue_degree != 1:
        problems.append(
            "lifted residue degree %d, expected 1" % gvl.residue_degree
        )
    if problems:
        return Verdict("lemma_4_1", "fail", "; ".join(problems))
    return Verdict(
        "lemma_4_1",
        "pass",
        "lift keeps j = %d and alpha, v(Q) = %s, index takes all of j"
        % (pair.j, json.dumps(value_to_json(lifted.vq))),
    )


def verify_ic_index(pair):
    n = pair.elem.degree
    j = pair.j
    ok = n % j == 0
    cls = classify_implicit_constants(j, n)
    if ok:
        detail = "j = %d divides deg Q = %d; implicit constants: %s" % (
            j, n, cls["kind"],
        )
    else:
        detail = "j = %d does not divide deg Q = %d" % (j, n)
    return Verdict("eq_7_ic_degree", "pass" if ok else "fail", detail)


def verify_trivial_dichotomy(gv):
    prod = gv.value_index * gv.residue_degree
    ok = (prod == 1) == (gv.j == 1)
    detail = (
        "index * residue degree = %d and j = %d agree on triviality"
        % (prod, gv.j)
    )
    if not ok:
        detail = (
            "index * residue degree = %d but j = %d: exactly one is"
            " trivial" % (prod, gv.j)
        )
    return Verdict("cor_5_3", "pass" if ok else "fail", detail)


def _relative_distance_count(elem, M, gamma):
    """j of the pair relative to the subfield: count roots of M (the
    minimal polynomial of a over K(b), computed inside K(a)) at
    distance at least gamma."""
    coeffs = taylor_coefficients(M, elem.gen)
    values = [elem.valuation(c) for c in coeffs]
    multiset = DistanceMultiset(root_value_multiset(values))
    return multiset.count_ge(gamma), multiset


def verify_subfield_sandwich(pair, b_expr, Qb):
    """For b = b_expr(a) with minimal polynomial Qb over K: locate the
    implicit constant field relative to the henselization of K(b).

    Returns the verdict and a report block.  The check runs only when
    K(b)/K is separable and p does not divide its initial ramification;
    outside that range it is skipped, not guessed.
    """
    elem = pair.elem
    base = elem.base
    ring = elem.ring
    n = elem.degree
    block = {
        "qb": [base.element_to_str(c) for c in Qb.coeffs],
        "b_expr": [base.element_to_str(c) for c in b_expr.coeffs],
    }

    beta = ring.coerce(b_expr)
    if not ring.is_zero(Qb.map_domain(ring).evaluate(beta)):
        raise ValueError(
            "b_expr(a) is not a root of Qb; the subfield data is wrong"
        )
    try:
        cert_b = certify(base, Qb)
    except CertificationError as err:
        block["skipped"] = "Qb not certifiable: %s" % err
        return Verdict("thm_1_3_sandwich", "skipped", block["skipped"]), block
    p = base.residue_characteristic()
    if not cert_b.separable:
        block["skipped"] = "K(b)/K is inseparable"
        return Verdict("thm_1_3_sandwich", "skipped", block["skipped"]), block
    if cert_b.e % p == 0:
        block["skipped"] = "p = %d divides e(K(b)/K) = %d" % (p, cert_b.e)
        return Verdict("thm_1_3_sandwich", "skipped", block["skipped"]), block

    n_b = Qb.degree
    if n % n_b != 0:
        raise ValueError("deg Qb = %d does not divide deg Q = %d" % (n_b, n))
    rel_deg = n // n_b
    block["relative_degree"] = rel_deg

    shifted = b_expr.map_domain(ring) - Poly.constant(ring, beta)
    M = poly_gcd(elem.Q.map_domain(ring), shifted)
    block["m_degree"] = M.degree
    problems = []
    if M.degree != rel_deg:
        problems.append(
            "conjugates of a over K(b) span degree %d, expected"
            " [K(a):K(b)] = %d" % (M.degree, rel_deg)
        )
        j_rel = None
    else:
        j_rel, _ = _relative_distance_count(elem, M, pair.gamma)
        block["j_rel"] = j_rel
        if pair.j % j_rel != 0:
            problems.append(
                "relative count j_rel = %d does not divide j = %d"
                % (j_rel, pair.j)
            )
        if (rel_deg * j_rel) % pair.j != 0:
            problems.append(
                "j = %d does not divide [K(a):K(b)] * j_rel = %d"
                % (pair.j, rel_deg * j_rel)
            )
        block["cor_6_1_applies"] = pair.j == rel_deg
    if problems:
        return Verdict("thm_1_3_sandwich", "fail", "; ".join(problems)), block
    detail = (
        "j_rel = %d divides j = %d, j divides [K(a):K(b)] * j_rel = %d"
        % (j_rel, pair.j, rel_deg * j_rel)
    )
    if block.get("cor_6_1_applies"):
        detail += (
            "; j = [K(a):K(b)] so the implicit constant field is the"
            " henselization of K(b)"
        )
    return Verdict("thm_1_3_sandwich", "pass", detail), block


@dataclass
class AnalysisReport:
    base_kind: str
    p: int
    q: list
    gamma: object
    minimality: dict
    invariants: dict
    implicit_constants: dict
    equivalence: object
    subfield: object
    verdicts: list

    def verdict(self, name):
        for v in self.verdicts:
            if v["name"] == name:
                return v
        raise KeyError(name)

    def to_json_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text):
        return cls(**json.loads(text))


def build_partner_pairs(pair, partner_polys, mode="assert", candidates=()):
    """Partners run through the given minimality route; ones that
    cannot be accepted (refuted or merely unknown) are reported, not
    trusted."""
    out = []
    skipped = []
    for Qb in partner_polys:
        try:
            elem_b = AlgebraicElement(pair.elem.base, Qb)
            cert_b = check_minimality(
                elem_b, pair.gamma, mode=mode, candidates=candidates
            )
            out.append(MinimalPair(elem_b, pair.gamma, cert_b))
        except (CertificationError, MinimalityError) as err:
            skipped.append("%s: %s" % (Qb.to_str(), err))
    return out, skipped


def analyze(pair, partner_polys=(), subfield=None,
            partner_mode="assert", partner_candidates=()):
    """Run every check against a validated pair.

    subfield, when given, is the tuple (b_expr, Qb) of polynomials over
    the ground field.  Partners get their minimality checked by the
    route named in partner_mode, normally the one that validated the
    principal pair.
    """
    gv = GaussValuation(pair)
    verdicts = []
    verdicts.append(verify_product_formula(gv))

    partner_pairs, skipped_partners = build_partner_pairs(
        pair, partner_polys, mode=partner_mode, candidates=partner_candidates
    )
    eq_verdict, eq_stats = verify_equivalence_transfer(pair, partner_pairs)
    verdicts.append(eq_verdict)
    equivalence = None
    if partner_polys:
        equivalence = {
            "partners_configured": len(partner_polys),
            "couples": eq_stats["couples"],
            "sensitive": eq_stats["sensitive"],
            "skipped_partners": skipped_partners,
        }

    verdicts.append(verify_value_lift(pair, gv))
    verdicts.append(verify_ic_index(pair))
    verdicts.append(verify_trivial_dichotomy(gv))

    subfield_block = None
    if subfield is not None:
        b_expr, Qb = subfield
        sandwich, subfield_block = verify_subfield_sandwich(pair, b_expr, Qb)
        verdicts.append(sandwich)
    else:
        verdicts.append(
            Verdict("thm_1_3_sandwich", "skipped", "no subfield configured")
        )

    base = pair.elem.base
    s = gv.s
    invariants = {
        "kind": pair.kind,
        "j": pair.j,
        "alpha": value_to_json(pair.alpha),
        "vQ": value_to_json(pair.vq),
        "e": gv.vq_order,
        "E": gv.gamma_order,
        "lambda": gv.value_index,
        "residue_degree": gv.residue_degree,
        "t_def": gv.t_definition,
        "s_as_function_of_t": None if s is None else s.to_str(),
        "units": gv.unit_strings(),
    }
    return AnalysisReport(
        base_kind=base.kind,
        p=base.p,
        q=[base.element_to_str(c) for c in pair.elem.Q.coeffs],
        gamma=value_to_json(pair.gamma),
        minimality=pair.certificate.to_json(),
        invariants=invariants,
        implicit_constants=classify_implicit_constants(
            pair.j, pair.elem.degree
        ),
        equivalence=equivalence,
        subfield=subfield_block,
        verdicts=[asdict(v) for v in verdicts],
    )
