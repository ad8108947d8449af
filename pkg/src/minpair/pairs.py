"""Minimal pairs (a, gamma) over a certified algebraic element.

A pair is minimal when no element of strictly smaller degree over the
ground field comes gamma-close to a.  Three acceptance routes are
implemented, in decreasing order of rigor:

* krasner: for separable a, gamma strictly above the largest conjugate
  distance forces any gamma-close b to generate all of K(a); for a
  purely inseparable binomial root the exact threshold is gamma > v(a).
* candidate-search: refutation-complete over a supplied candidate list
  (plus 0, which catches every pair with gamma <= v(a)); acceptance
  records that it rests on the supplied grid.
* asserted: the caller vouches; nothing is checked.

Refutations are always exact: a candidate polynomial C of degree < n
has root distances to a given by the Newton polygon of C(a + Y), so a
reported witness really is gamma-close.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algext import AlgebraicElement, DistanceMultiset, root_value_multiset
from .exactpoly import Poly
from .ordvals import INFINITY, OrderedValue


class MinimalityError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class MinimalityCertificate:
    status: str  # "accepted" | "refuted" | "unknown"
    method: str  # "krasner" | "candidate-search" | "asserted" | "none"
    detail: str
    witness: object = None

    def to_json(self):
        out = {
            "status": self.status,
            "method": self.method,
            "detail": self.detail,
        }
        if self.witness is not None:
            poly, dist = self.witness
            from .ordvals import value_to_json

            out["witness"] = {
                "candidate": poly.to_str(),
                "distance": value_to_json(dist),
            }
        return out


def candidate_distances(elem, candidate):
    """Multiset {v(a - c_i)} over the roots c_i of the candidate."""
    if not candidate.is_monic():
        candidate = candidate.monic()
    coeffs = elem.taylor_at_gen(candidate)
    vals = [elem.valuation(c) for c in coeffs]
    return DistanceMultiset(root_value_multiset(vals))


def check_minimality(elem, gamma, mode="krasner", candidates=()):
    _check_gamma(gamma)
    if mode == "assert":
        return MinimalityCertificate(
            status="accepted",
            method="asserted",
            detail="minimality asserted by the caller, nothing checked",
        )
    if mode == "krasner":
        return _krasner_route(elem, gamma)
    if mode == "bruteforce":
        return _candidate_route(elem, gamma, candidates)
    raise ValueError("unknown minimality mode %r" % (mode,))


def _krasner_route(elem, gamma):
    cert = elem.cert
    if cert.separable:
        bound = elem.krasner_bound()
        if bound is None:
            return MinimalityCertificate(
                status="accepted",
                method="krasner",
                detail="no other conjugates; any cut value works",
            )
        if gamma > bound.embed(gamma.rank):
            return MinimalityCertificate(
                status="accepted",
                method="krasner",
                detail="gamma exceeds the largest conjugate distance %s"
                % bound[0],
            )
        return MinimalityCertificate(
            status="unknown",
            method="krasner",
            detail="gamma does not exceed the conjugate distance bound %s; "
            "use a candidate search" % bound[0],
        )
    if cert.purely_inseparable:
        va = cert.root_value
        if gamma > va.embed(gamma.rank):
            return MinimalityCertificate(
                status="accepted",
                method="krasner",
                detail="purely inseparable binomial: gamma > v(a) = %s "
                "forces full ramification on any close element" % va[0],
            )
        zero_poly = Poly.variable(elem.base.domain)
        return MinimalityCertificate(
            status="refuted",
            method="krasner",
            detail="gamma <= v(a); the element 0 is already gamma-close",
            witness=(zero_poly, va),
        )
    return MinimalityCertificate(
        status="unknown",
        method="krasner",
        detail="inseparable but not a pure binomial; no criterion applies",
    )


def _candidate_route(elem, gamma, candidates):
    checked = 0
    pool = [Poly.variable(elem.base.domain)]
    pool.extend(candidates)
    skipped = 0
    for cand in pool:
        if cand.degree >= elem.degree:
            skipped += 1
            continue
        if cand.degree < 1:
            raise MinimalityError("constant candidate %r" % (cand,))
        dists = candidate_distances(elem, cand)
        checked += 1
        for d, _ in dists.entries:
            if d is INFINITY or d.embed(gamma.rank) >= gamma:
                return MinimalityCertificate(
                    status="refuted",
                    method="candidate-search",
                    detail="candidate %s has a root at distance %s >= gamma"
                    % (cand.to_str(), "inf" if d is INFINITY else d[0]),
                    witness=(cand, d),
                )
    note = "" if not skipped else "; %d candidates of degree >= %d skipped" % (
        skipped,
        elem.degree,
    )
    return MinimalityCertificate(
        status="accepted",
        method="candidate-search",
        detail="none of %d candidate polynomials reaches gamma%s"
        % (checked, note),
    )


def _check_gamma(gamma):
    if gamma is INFINITY:
        raise ValueError("the cut value must be finite")
    if gamma.rank not in (1, 2):
        raise ValueError("cut values have rank one or two")
    if gamma.rank == 2 and gamma[1] == 0:
        raise ValueError(
            "rank-two cut with zero transcendental part; give it as rank one"
        )


class MinimalPair:
    """A validated pair (a, gamma) with its two basic invariants:

    j     number of conjugates of a (with multiplicity, a included)
          at distance >= gamma,
    alpha sum of the conjugate distances strictly below gamma.

    The pair value of the generator, v(Q) = j*gamma + alpha, is set
    here as well; it is a direct consequence of Q(X) = prod (X - a_i)
    and holds for any pair, minimal or not.
    """

    __slots__ = ("elem", "gamma", "certificate", "j", "alpha", "vq")

    def __init__(self, elem, gamma, certificate):
        _check_gamma(gamma)
        if certificate.status == "refuted":
            raise MinimalityError(
                "pair is not minimal: %s" % certificate.detail,
                witness=certificate.witness,
            )
        if certificate.status != "accepted":
            raise MinimalityError(
                "minimality undecided: %s" % certificate.detail
            )
        self.elem = elem
        self.gamma = gamma
        self.certificate = certificate
        dists = elem.distances()
        self.j = dists.count_ge(gamma)
        self.alpha = dists.sum_below(gamma)
        self.vq = self.j * gamma + self.alpha.embed(gamma.rank)

    @property
    def kind(self):
        if self.gamma.rank == 2:
            return "value-transcendental"
        return "residue-transcendental"

    @property
    def degree(self):
        return self.elem.degree

    def lift(self):
        """The rank-two pair with cut value (gamma, -1), sitting just
        below gamma in the lexicographic order.

        Distances are rank one, and d >= (gamma, -1) iff d >= gamma,
        so j, alpha and minimality transfer verbatim.
        """
        if self.gamma.rank != 1:
            raise ValueError("only rank-one pairs can be lifted")
        lifted_gamma = OrderedValue.of(self.gamma[0], Fraction(-1))
        cert = MinimalityCertificate(
            status=self.certificate.status,
            method=self.certificate.method,
            detail=self.certificate.detail
            + " (transferred to the rank-two lift)",
            witness=self.certificate.witness,
        )
        return MinimalPair(self.elem, lifted_gamma, cert)

    def __repr__(self):
        return "MinimalPair(%s, gamma=%r, j=%d)" % (
            self.elem.Q.to_str(),
            self.gamma,
            self.j,
        )


def compute_j(elem, gamma):
    return elem.distances().count_ge(gamma)


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    conjugate_choice_sensitive: bool
    distances: DistanceMultiset

    def __bool__(self):
        return self.equivalent


def pairs_equivalent(pair_a, pair_b):
    """Whether (a, gamma) and (b, gamma) define the same extended
    valuation, i.e. some root of the generator of b is gamma-close
    to a.

    conjugate_choice_sensitive reports an equivalence that holds for
    some but not all roots of the second generator.
    """
    if pair_a.elem.base != pair_b.elem.base:
        raise ValueError("pairs live over different ground fields")
    if pair_a.gamma != pair_b.gamma:
        raise ValueError("equivalence compares pairs with one cut value")
    gamma = pair_a.gamma
    cross = candidate_distances(pair_a.elem, pair_b.elem.Q)
    reach = [
        d is INFINITY or d.embed(gamma.rank) >= gamma
        for d, m in cross.entries
        for _ in range(m)
    ]
    equivalent = any(reach)
    sensitive = equivalent and not all(reach)
    return EquivalenceResult(equivalent, sensitive, cross)
