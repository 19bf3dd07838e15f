"""Exact graded Heisenberg actions on the Fock space.

Partitions are tuples of ints. Symmetric functions, Fock vectors and virtual
representations use the same JSON shapes as the command-line tool; the
wrappers here accept them as dicts and return dicts whose rational strings
have been turned into ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _heisfock
from ._heisfock import HeisfockError

__all__ = [
    "HeisfockError",
    "Fraction",
    "canonical",
    "partitions_of",
    "transpose",
    "content_sum",
    "d_stat",
    "partwise_add",
    "is_coprime",
    "coprime_decompose",
    "character_table",
    "lr_coefficient",
    "kronecker_product",
    "exterior_power_perm",
    "schur_multiply",
    "plethysm_pb",
    "vacuum",
    "basis_vector",
    "b_op",
    "b_tau",
    "heis_modp",
    "heis_neg",
    "simple_image_pos",
    "simple_image_neg",
    "preferred_lift_degree",
    "support_dim",
    "possible_supports",
    "p_stability_interval",
    "verma_hilbert",
    "character_pipeline",
]

_RAW_KEYS = {"basis", "mult", "alpha", "n", "k", "l", "dim"}


def _decode(value, key=None):
    if isinstance(value, dict):
        return {k: _decode(v, k) for k, v in value.items()}
    if isinstance(value, list):
        if key in ("mu", "eta", "tau"):
            return tuple(value)
        return [_decode(v, key) for v in value]
    if isinstance(value, str) and key not in _RAW_KEYS and value not in ("-inf", "+inf"):
        return Fraction(value)
    return value


def _encode(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, dict):
        return {k: (_encode(v) if k not in ("mu", "eta", "tau") else list(v)) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _dumps(value):
    return value if isinstance(value, str) else json.dumps(_encode(value))


def _wrap(text):
    return _decode(json.loads(text))


def _rat(value):
    return str(Fraction(value))


def canonical(parts):
    return tuple(_heisfock.canonical(list(parts)))


def partitions_of(n):
    return [tuple(p) for p in _heisfock.partitions_of(n)]


def transpose(eta):
    return tuple(_heisfock.transpose(list(eta)))


def content_sum(eta):
    return _heisfock.content_sum(list(eta))


def d_stat(eta):
    return _heisfock.d_stat(list(eta))


def partwise_add(mu, b, tau):
    return tuple(_heisfock.partwise_add(list(mu), b, list(tau)))


def is_coprime(eta, b):
    return _heisfock.is_coprime(list(eta), b)


def coprime_decompose(eta, b):
    mu, tau = _heisfock.coprime_decompose(list(eta), b)
    return tuple(mu), tuple(tau)


def character_table(n):
    return json.loads(_heisfock.character_table(n))


def lr_coefficient(lam, mu, nu):
    return _heisfock.lr_coefficient(list(lam), list(mu), list(nu))


def kronecker_product(sigma, rep):
    return _wrap(_heisfock.kronecker_product(list(sigma), _dumps(rep)))


def exterior_power_perm(d, i):
    return _wrap(_heisfock.exterior_power_perm(d, i))


def schur_multiply(f, g):
    return _wrap(_heisfock.schur_multiply(_dumps(f), _dumps(g)))


def plethysm_pb(f, b):
    return _wrap(_heisfock.plethysm_pb(_dumps(f), b))


def vacuum():
    """The vector s_() with coefficient 1."""
    return basis_vector(())


def basis_vector(mu, coeff=1):
    """The Fock vector coeff * s_mu for a rational constant coeff."""
    return {"terms": [{"mu": tuple(mu), "coeff": {"monomials": [{"vexp": Fraction(0), "c": Fraction(coeff)}]}}]}


def b_op(i, b, x, jobs=1):
    return _wrap(_heisfock.b_op(i, b, _dumps(x), jobs))


def b_tau(tau, b, x, jobs=1):
    return _wrap(_heisfock.b_tau(list(tau), b, _dumps(x), jobs))


def heis_modp(tau, b, p, x, jobs=1):
    return _wrap(_heisfock.heis_modp(list(tau), b, p, _dumps(x), jobs))


def heis_neg(tau, b, p, x, conjectural=False, jobs=1):
    return _wrap(_heisfock.heis_neg(list(tau), b, p, _dumps(x), conjectural, jobs))


def simple_image_pos(eta, m, tau, a, b):
    return _wrap(_heisfock.simple_image_pos(list(eta), _rat(m), list(tau), a, b))


def simple_image_neg(eta, m, tau, a, b):
    return _wrap(_heisfock.simple_image_neg(list(eta), _rat(m), list(tau), a, b))


def preferred_lift_degree(eta, a, b):
    return Fraction(_heisfock.preferred_lift_degree(list(eta), a, b))


def support_dim(eta, b):
    return _heisfock.support_dim(list(eta), b)


def possible_supports(n, b):
    return json.loads(_heisfock.possible_supports(n, b))


def p_stability_interval(z, p, n):
    """Closed integer interval (lo, hi); None marks an unbounded side."""
    doc = json.loads(_heisfock.p_stability_interval(z, p, n))
    lo = None if doc["lo"] == "-inf" else int(doc["lo"])
    hi = None if doc["hi"] == "+inf" else int(doc["hi"])
    return lo, hi


def verma_hilbert(eta, m, max_deg):
    doc = json.loads(_heisfock.verma_hilbert(list(eta), _rat(m), max_deg))
    return Fraction(doc["shift"]), [int(c) for c in doc["coeffs"]]


def character_pipeline(eta, a, b, p, table, jobs=1):
    """`table` maps coprime partitions to their Fock-vector classes."""
    encoded = {tuple(mu): _dumps(cls) for mu, cls in table.items()}
    return _wrap(_heisfock.character_pipeline(list(eta), a, b, p, encoded, jobs))
