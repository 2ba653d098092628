"""Noncommutative Groebner bases under deg-lex, bounded by degree.

Words are tuples of 0-based generator indices; polynomials are dicts
mapping words to nonzero Fractions.  Rules rewrite a leading word to a
polynomial that is smaller in deg-lex; completion resolves all overlap
ambiguities whose overlap word has length at most the bound.

Homogeneous input only.  All arithmetic is exact rational.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import (InsufficientDegree, NonHomogeneousInput, NonQuadraticInput,
                     NotBinomial)

ONE = Fraction(1)


def deglex_key(word):
    return (len(word), word)


def deglex_compare(u, v):
    """-1, 0 or 1 as u <, =, > v in deg-lex."""
    ku, kv = deglex_key(u), deglex_key(v)
    return (ku > kv) - (ku < kv)


def poly(terms):
    """Normalize a {word: coeff} mapping, dropping zeros."""
    return {w: Fraction(c) for w, c in terms.items() if c != 0}


def poly_add(p, q, scale=ONE):
    out = dict(p)
    for w, c in q.items():
        c = out.get(w, 0) + scale * c
        if c:
            out[w] = c
        else:
            out.pop(w, None)
    return out


def poly_scale(p, c):
    return {w: a * c for w, a in p.items()} if c else {}

def poly_lm(p):
    return max(p, key=deglex_key)


def is_homogeneous(p):
    return len({len(w) for w in p}) <= 1


@dataclass(frozen=True)
class GroebnerBasis:
    alphabet_size: int
    rules: tuple          # ((lead word, rhs poly as tuple of (word, coeff)), ...)
    max_degree: int
    complete: bool
    binomial: bool

    def rule_pairs(self):
        """Rules as (lead, rhs dict) pairs."""
        return [(lead, dict(rhs)) for lead, rhs in self.rules]


def _freeze_rules(rules):
    frozen = []
    for lead, rhs in sorted(rules, key=lambda r: deglex_key(r[0])):
        frozen.append((lead, tuple(sorted(rhs.items(), key=lambda t: deglex_key(t[0])))))
    return tuple(frozen)


def _reduce_once(word, rules):
    """Leftmost occurrence of any leading word; rules tried in stored order."""
    for pos in range(len(word)):
        for lead, rhs in rules:
            k = len(lead)
            if word[pos:pos + k] == lead:
                return pos, lead, rhs
    return None


def _normal_form_dict(p, rules):
    out = {}
    work = dict(p)
    while work:
        w = max(work, key=deglex_key)
        c = work.pop(w)
        hit = _reduce_once(w, rules)
        if hit is None:
            out[w] = out.get(w, 0) + c
            if not out[w]:
                del out[w]
            continue
        pos, lead, rhs = hit
        a, b = w[:pos], w[pos + len(lead):]
        for u, cu in rhs.items():
            nw = a + u + b
            nc = work.get(nw, 0) + c * cu
            if nc:
                work[nw] = nc
            else:
                work.pop(nw, None)
    return out


def normal_form(p, gb):
    """The unique normal form of p modulo the rules of gb."""
    if isinstance(p, tuple):
        p = {p: ONE}
    return _normal_form_dict(p, gb.rule_pairs())


def normal_form_word(w, gb):
    """Normal form of a single word under a binomial basis."""
    if not gb.binomial:
        raise NotBinomial("word normal forms require a binomial basis")
    nf = normal_form({w: ONE}, gb)
    if not nf:
        raise ValueError("binomial reduction of a word vanished")
    (word, coeff), = nf.items()
    assert coeff == ONE
    return word


def _interreduce(rules):
    rules = list(rules)
    changed = True
    while changed:
        changed = False
        for i in range(len(rules)):
            lead, rhs = rules[i]
            others = rules[:i] + rules[i + 1:]
            # reduce the full polynomial lead - rhs by the remaining rules
            nf = _normal_form_dict({lead: ONE}, others)
            new_p = poly_add(nf, _normal_form_dict(rhs, others), -ONE)
            if not new_p:
                del rules[i]
                changed = True
                break
            lm = poly_lm(new_p)
            c = new_p.pop(lm)
            new_rhs = poly_scale(new_p, -ONE / c)
            if (lm, new_rhs) != (lead, dict(rhs)):
                rules[i] = (lm, new_rhs)
                changed = True
                break
    return rules


def _overlaps(rules):
    """Overlap ambiguities: (overlap word, i, suffix_i, j, prefix_j).

    Rule i's lead ends with w, rule j's lead starts with w; the overlap
    word is lead_i + lead_j[len(w):].
    """
    out = []
    for i, (u, _) in enumerate(rules):
        for j, (v, _) in enumerate(rules):
            for k in range(1, min(len(u), len(v))):
                if u[len(u) - k:] == v[:k]:
                    out.append((u + v[k:], i, j, k))
    return out


def complete(relations, max_degree, alphabet=0):
    """Degree-bounded completion of homogeneous relations to a Groebner basis.

    alphabet may be passed explicitly when the relations do not mention
    every generator (e.g. a free algebra has no relations at all).
    """
    if max_degree < 3:
        raise ValueError("max_degree must be at least 3")
    rules = []
    for p in relations:
        p = poly(p)
        if not p:
            continue
        if not is_homogeneous(p) or min(len(w) for w in p) < 2:
            raise NonHomogeneousInput("relations must be homogeneous of degree >= 2")
        alphabet = max(alphabet, max((max(w) + 1 for w in p), default=0))
        lm = poly_lm(p)
        c = p.pop(lm)
        rules.append((lm, poly_scale(p, -ONE / c)))

    changed = True
    while changed:
        rules = _interreduce(rules)
        changed = False
        pending = sorted(_overlaps(rules), key=lambda o: deglex_key(o[0]))
        for overlap, i, j, k in pending:
            if len(overlap) > max_degree:
                continue
            u, rhs_u = rules[i]
            v, rhs_v = rules[j]
            tail = v[k:]
            head = u[:len(u) - k]
            # two reductions of the overlap word
            left = {w + tail: c for w, c in rhs_u.items()}
            right = {head + w: c for w, c in rhs_v.items()}
            s = poly_add(left, right, -ONE)
            nf = _normal_form_dict(s, rules)
            if nf:
                lm = poly_lm(nf)
                c = nf.pop(lm)
                rules.append((lm, poly_scale(nf, -ONE / c)))
                changed = True
                break

    skipped = any(len(o[0]) > max_degree for o in _overlaps(rules))
    binomial = all(len(rhs) == 1 and next(iter(rhs.values())) == ONE
                   for _, rhs in rules)
    return GroebnerBasis(
        alphabet_size=alphabet,
        rules=_freeze_rules(rules),
        max_degree=max_degree,
        complete=not skipped,
        binomial=binomial,
    )


def normal_words(gb, d):
    """All length-d words avoiding leading words as subwords, deg-lex sorted."""
    if not (gb.complete or d + 1 <= gb.max_degree):
        raise InsufficientDegree(
            f"normal words of degree {d} need completion through {d + 1}")
    n = gb.alphabet_size
    leads = [lead for lead, _ in gb.rules]
    out = []
    for w in product(range(n), repeat=d):
        if not any(w[p:p + len(l)] == l
                   for l in leads for p in range(len(w) - len(l) + 1)):
            out.append(w)
    return out


@dataclass(frozen=True)
class HilbertPrefix:
    coefficients: tuple
    exact: bool


def hilbert_series(gb, D):
    coeffs = [len(normal_words(gb, d)) for d in range(D + 1)]
    exact = gb.complete or D + 1 <= gb.max_degree
    return HilbertPrefix(coefficients=tuple(coeffs), exact=exact)


def is_pbw(relations):
    """True iff the quadratic relations are already a Groebner basis.

    For quadratic leading words every minimal overlap has length 3, so
    resolving degree-3 ambiguities decides the question.
    """
    for p in relations:
        p = poly(p)
        if p and any(len(w) != 2 for w in p):
            raise NonQuadraticInput("relations must be homogeneous quadratic")
    gb = complete(relations, 3)
    return all(len(lead) == 2 for lead, _ in gb.rules)


def monoid_multiply(u, v, gb):
    """The bullet product: the normal word equal to uv in the monoid."""
    if not gb.binomial:
        raise NotBinomial("the monoid product needs a binomial basis")
    if not (gb.complete or len(u) + len(v) <= gb.max_degree):
        raise InsufficientDegree(
            f"product of lengths {len(u)} and {len(v)} exceeds the bound")
    return normal_form_word(u + v, gb)


def left_cancellative_check(gb, d):
    """Check x * u = x * v => u = v on normal words of length <= d.

    Returns True or a counterexample (x, u, v).
    """
    if not (gb.complete or d + 1 <= gb.max_degree):
        raise InsufficientDegree("cancellativity check needs completion through d+1")
    for length in range(1, d + 1):
        words = normal_words(gb, length)
        for x in range(gb.alphabet_size):
            seen = {}
            for u in words:
                img = monoid_multiply((x,), u, gb)
                if img in seen and seen[img] != u:
                    return (x, seen[img], u)
                seen[img] = u
    return True
