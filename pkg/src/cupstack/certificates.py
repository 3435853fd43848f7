"""Finite, machine-checkable witnesses of non-stackability.

Two certificate kinds:

* Independent-set: an independent U with many vertices far from the target.
  Each cup leaving U must land outside U (U spans no edges), and every
  vertex outside U can absorb at most ecc(t) - 1 incoming stacks before the
  endgame, so |U'| > (ecc(t) - 1) |V - U| rules out finishing on t.
* Pendant-pair: in a graph of diameter at most 3, two leaves with a common
  neighbor both at distance 2 from the target can never both be cleared.

Checking a certificate is cheap; finding one is a small optimization
problem.  Certificates serialize to JSON tagged with a "kind" field.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import errors
from .graphs import Graph


@dataclass(frozen=True)
class IndepSetCertificate:
    """Witness that g is not stackable onto target.

    u_set is independent; u_prime_size counts its vertices at distance at
    least 2 from the target; w_size = n - |u_set|; ecc is the target's
    eccentricity.  Valid when u_prime_size > (ecc - 1) * w_size.
    """

    target: int
    u_set: tuple[int, ...]
    u_prime_size: int
    w_size: int
    ecc: int

    def to_json(self) -> dict:
        return {
            "kind": "indep-set",
            "target": self.target,
            "u_set": list(self.u_set),
            "u_prime_size": self.u_prime_size,
            "w_size": self.w_size,
            "ecc": self.ecc,
        }


@dataclass(frozen=True)
class PendantPairCertificate:
    """Witness that g (diameter <= 3) is not stackable onto target: leaves
    u and v share the neighbor w and both sit at distance 2 from the
    target."""

    target: int
    u: int
    v: int
    w: int

    def to_json(self) -> dict:
        return {
            "kind": "pendant-pair",
            "target": self.target,
            "u": self.u,
            "v": self.v,
            "w": self.w,
        }


def certificate_from_json(obj: dict):
    try:
        kind = obj["kind"]
        if kind == "indep-set":
            return IndepSetCertificate(
                int(obj["target"]),
                tuple(int(v) for v in obj["u_set"]),
                int(obj["u_prime_size"]),
                int(obj["w_size"]),
                int(obj["ecc"]),
            )
        if kind == "pendant-pair":
            return PendantPairCertificate(
                int(obj["target"]), int(obj["u"]), int(obj["v"]), int(obj["w"])
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise errors.FormatError(f"malformed certificate object: {obj!r}") from exc
    raise errors.FormatError(f"unknown certificate kind: {obj.get('kind')!r}")


def _independent(g: Graph, u_set) -> bool:
    members = set(u_set)
    return all(not (v in members and g.has_edge(u, v)) for u in members for v in g.neighbors(u))


def check_indep_certificate(g: Graph, t: int, u_set) -> IndepSetCertificate | None:
    """Build the independent-set certificate for this U, or None when the
    inequality fails.  A non-independent U is a caller error."""
    if not 0 <= t < g.n:
        raise errors.ParameterError(f"target {t} out of range")
    u_set = tuple(sorted(set(u_set)))
    if any(not 0 <= v < g.n for v in u_set):
        raise errors.ParameterError("u_set contains out-of-range vertices")
    if not _independent(g, u_set):
        raise errors.ParameterError("u_set is not independent")
    dist = g.distances()
    ecc = dist.eccentricity(t)
    u_prime = sum(1 for v in u_set if dist.d(v, t) >= 2)
    w_size = g.n - len(u_set)
    if u_prime > (ecc - 1) * w_size:
        return IndepSetCertificate(t, u_set, u_prime, w_size, ecc)
    return None


def _max_weight_independent_set(g: Graph, weights: list[int]) -> tuple[int, list[int]]:
    """Exact branch and bound; feasible well beyond 30 vertices on the
    sparse graphs certificates target."""
    n = g.n
    order = sorted(range(n), key=lambda v: (-weights[v], g.degree(v), v))
    best_value = 0
    best_set: list[int] = []
    chosen: list[int] = []

    def walk(candidates: list[int], value: int) -> None:
        nonlocal best_value, best_set
        if value + sum(weights[v] for v in candidates) <= best_value:
            return
        if not candidates:
            if value > best_value:
                best_value = value
                best_set = chosen.copy()
            return
        v = candidates[0]
        rest = candidates[1:]
        chosen.append(v)
        walk([u for u in rest if not g.has_edge(u, v)], value + weights[v])
        chosen.pop()
        walk(rest, value)

    walk(order, 0)
    return best_value, sorted(best_set)


def _greedy_independent_set(g: Graph, weights: list[int]) -> list[int]:
    picked: list[int] = []
    blocked = set()
    for v in sorted(range(g.n), key=lambda v: (-weights[v], g.degree(v), v)):
        if v not in blocked:
            picked.append(v)
            blocked.add(v)
            blocked.update(g.neighbors(v))
    return sorted(picked)


def find_indep_certificate(
    g: Graph, t: int, exact_limit: int = 30
) -> IndepSetCertificate | None:
    """Search for a valid independent-set certificate for target t.

    The inequality holds for some independent set iff the maximum of
    sum((ecc - 1) + [d(v, t) >= 2]) over independent sets exceeds
    (ecc - 1) * n, so this is a max-weight independent set problem: solved
    exactly up to exact_limit vertices, greedily above that (greedy misses
    are reported as None, never as a wrong certificate).
    """
    if not 0 <= t < g.n:
        raise errors.ParameterError(f"target {t} out of range")
    dist = g.distances()
    if not dist.connected:
        raise errors.DisconnectedGraphError("certificates assume a connected graph")
    ecc = dist.eccentricity(t)
    if ecc <= 1:
        return None
    weights = [(ecc - 1) + (1 if dist.d(v, t) >= 2 else 0) for v in range(g.n)]
    if g.n <= exact_limit:
        value, u_set = _max_weight_independent_set(g, weights)
        if value <= (ecc - 1) * g.n:
            return None
    else:
        u_set = _greedy_independent_set(g, weights)
    return check_indep_certificate(g, t, u_set)


def check_pendant_certificate(g: Graph, t: int) -> PendantPairCertificate | None:
    """Look for a valid pendant-pair certificate for target t.

    Needs graph diameter at most 3 and two degree-1 vertices with the same
    neighbor, both at distance 2 from t.  Deterministic: the lowest such
    pair wins.
    """
    if not 0 <= t < g.n:
        raise errors.ParameterError(f"target {t} out of range")
    dist = g.distances()
    if not dist.connected:
        raise errors.DisconnectedGraphError("certificates assume a connected graph")
    if dist.diameter() > 3:
        return None
    by_neighbor: dict[int, list[int]] = {}
    for v in range(g.n):
        if g.degree(v) == 1 and dist.d(v, t) == 2:
            by_neighbor.setdefault(g.neighbors(v)[0], []).append(v)
    for w in sorted(by_neighbor):
        group = by_neighbor[w]
        if len(group) >= 2:
            return PendantPairCertificate(t, group[0], group[1], w)
    return None


def validate_certificate(g: Graph, cert) -> tuple[bool, str | None]:
    """Recheck a deserialized certificate against the graph from scratch."""
    dist = g.distances()
    if not dist.connected:
        return False, "graph is disconnected"
    if isinstance(cert, IndepSetCertificate):
        t = cert.target
        if not 0 <= t < g.n:
            return False, "target out of range"
        if not _independent(g, cert.u_set):
            return False, "u_set is not independent"
        ecc = dist.eccentricity(t)
        if ecc != cert.ecc:
            return False, f"eccentricity of target is {ecc}, certificate says {cert.ecc}"
        u_prime = sum(1 for v in cert.u_set if dist.d(v, t) >= 2)
        if u_prime != cert.u_prime_size:
            return False, "u_prime_size does not match the graph"
        if g.n - len(cert.u_set) != cert.w_size:
            return False, "w_size does not match the graph"
        if not u_prime > (ecc - 1) * cert.w_size:
            return False, "certificate inequality does not hold"
        return True, None
    if isinstance(cert, PendantPairCertificate):
        t = cert.target
        if not 0 <= t < g.n:
            return False, "target out of range"
        if dist.diameter() > 3:
            return False, "graph diameter exceeds 3"
        if g.degree(cert.u) != 1 or g.degree(cert.v) != 1 or cert.u == cert.v:
            return False, "u and v must be two distinct leaves"
        if g.neighbors(cert.u)[0] != cert.w or g.neighbors(cert.v)[0] != cert.w:
            return False, "w is not the common neighbor of u and v"
        if dist.d(cert.u, t) != 2 or dist.d(cert.v, t) != 2:
            return False, "u and v must both be at distance 2 from the target"
        return True, None
    return False, f"unknown certificate type {type(cert).__name__}"


@dataclass(frozen=True)
class StrongNonStackabilityProof:
    """Certificates per target; complete when every target is covered."""

    n: int
    certificates: dict

    @property
    def complete(self) -> bool:
        return len(self.certificates) == self.n

    @property
    def missing(self) -> tuple[int, ...]:
        return tuple(t for t in range(self.n) if t not in self.certificates)


def prove_strongly_nonstackable(g: Graph) -> StrongNonStackabilityProof:
    """Try to certify non-stackability for every target.

    Pendant-pair certificates are tried first (cheapest), then
    independent-set certificates.  Targets with neither are left uncovered;
    a partial proof is still useful and is reported as such.
    """
    certs = {}
    for t in range(g.n):
        cert = check_pendant_certificate(g, t)
        if cert is None:
            cert = find_indep_certificate(g, t)
        if cert is not None:
            certs[t] = cert
    return StrongNonStackabilityProof(g.n, certs)


def cactus_threshold(n: int, diameter: int, c: int) -> bool:
    """Pendant-count criterion for a c-cactus over an n-vertex base of the
    given diameter: c(n - 1) > (diameter + 1) n guarantees strong
    non-stackability.  Integer arithmetic only."""
    if n < 2 or diameter < 0 or c < 1:
        raise errors.ParameterError("need n >= 2, diameter >= 0, c >= 1")
    return c * (n - 1) > (diameter + 1) * n


def classify_complete_bipartite(a: int, b: int) -> dict:
    """Stackability of K_{a,b} under the numbering of
    families.complete_bipartite: stackable everywhere iff the class sizes
    differ by at most 1, otherwise exactly the smaller class's targets
    work."""
    if a < 1 or b < 1:
        raise errors.ParameterError(f"complete bipartite needs a, b >= 1, got {a}, {b}")
    first = tuple(range(a))
    second = tuple(range(a, a + b))
    if abs(a - b) <= 1:
        targets = first + second
    elif a < b:
        targets = first
    else:
        targets = second
    return {
        "a": a,
        "b": b,
        "stackable": abs(a - b) <= 1,
        "stackable_targets": targets,
    }
