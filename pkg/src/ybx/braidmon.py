"""Braided-monoid word actions and d-Veronese solutions.

A braided set acts on itself; the actions extend uniquely to words:

  left:   c |> (b_1...b_q) = (c |> b_1)((c <| b_1) |> b_2) ... ,
          (a_1...a_p) |> b = a_1 |> (a_2...a_p |> b)
  right:  a <| (u v) = (a <| u) <| v,
          (a b) <| u = (a <| (b |> u))(b <| u)

Both actions preserve length.  Composed with normal forms they give the
normalized solution rho on normal words; its restriction to the normal
words of a fixed length d is the d-Veronese solution, which for
left-nondegenerate idempotent sets is again a solution on X itself (the
prolongation).
"""

from dataclasses import dataclass

from .errors import InsufficientDegree, NotBraided, NotIdempotent
from .ncgb import complete, normal_form_word, normal_words
from .orbits import canonical_relations
from .quadset import QuadraticSet, check_properties


class WordActions:
    """Action tables of a braided set extended to words, with normal forms."""

    def __init__(self, qs, gb=None, max_degree=8):
        self.qs = qs
        if gb is None:
            gb = complete(canonical_relations(qs).to_polynomials(), max_degree,
                          alphabet=qs.n)
        self.gb = gb

    def nor(self, word):
        return normal_form_word(word, self.gb)


def _left_letter(qs, c, b):
    return qs.left[c][b]


def _right_letter(qs, c, b):
    return qs.right[c][b]


def _letter_right_on_word(qs, c, b):
    # c <| (b_1...b_q), one letter at a time
    for letter in b:
        c = _right_letter(qs, c, letter)
    return c


def _word_left_on_letter(qs, a, b):
    # (a_1...a_p) |> b = a_1 |> (a_2...a_p |> b)
    for letter in reversed(a):
        b = _left_letter(qs, letter, b)
    return b


def word_left_action(a, b, wa):
    """The word a acting on the word b from the left; |result| = |b|."""
    qs = wa.qs

    def act_letter(c, word):
        # c |> (b_1...b_q)
        out = []
        for letter in word:
            out.append(_left_letter(qs, c, letter))
            c = _right_letter(qs, c, letter)
        return tuple(out)

    for letter in reversed(a):
        b = act_letter(letter, b)
    return tuple(b)


def word_right_action(a, b, wa):
    """The word a acted on by the word b from the right; |result| = |a|."""
    qs = wa.qs

    def act_letter(word, u):
        # (a_1...a_p) <| u, expanding (ab) <| u = (a <| (b |> u))(b <| u)
        out = []
        for pos in range(len(word)):
            rest = word[pos + 1:]
            out.append(_right_letter(qs, word[pos], _word_left_on_letter(qs, rest, u)))
        return tuple(out)

    for letter in b:
        a = act_letter(a, letter)
    return tuple(a)


def rho(a, b, wa):
    """The normalized solution on normal words: rho(a, b) =
    (Nor(a |> b), Nor(a <| b))."""
    return (wa.nor(word_left_action(a, b, wa)),
            wa.nor(word_right_action(a, b, wa)))


def check_braided_monoid_axioms(wa, max_len):
    """Verify ML1/ML2/MR1/MR2 and braided commutativity M3 on all words
    of length <= max_len."""
    qs = wa.qs
    if not check_properties(qs).braided:
        raise NotBraided("word actions need a braided base set")
    n = qs.n
    words = [()]
    by_len = {0: [()]}
    for length in range(1, max_len + 1):
        by_len[length] = [w + (x,) for w in by_len[length - 1] for x in range(n)]
        words += by_len[length]
    short = [w for w in words if len(w) <= max_len // 2 + 1]

    for a in short:
        for b in short:
            for u in short:
                # ML1: (ab) |> u = a |> (b |> u)
                assert word_left_action(a + b, u, wa) == \
                    word_left_action(a, word_left_action(b, u, wa), wa)
                # MR1: a <| (uv) = (a <| u) <| v
                assert word_right_action(a, u + b, wa) == \
                    word_right_action(word_right_action(a, u, wa), b, wa)
                # ML2: c |> (uv) = (c |> u)((c <| u) |> v)
                assert word_left_action(a, u + b, wa) == \
                    word_left_action(a, u, wa) + \
                    word_left_action(word_right_action(a, u, wa), b, wa)
                # MR2: (ab) <| u = (a <| (b |> u))(b <| u)
                assert word_right_action(a + b, u, wa) == \
                    word_right_action(a, word_left_action(b, u, wa), wa) + \
                    word_right_action(b, u, wa)
    # M3: (a |> b)(a <| b) = ab in the monoid, compared after Nor
    for a in words:
        for b in words:
            if len(a) + len(b) <= wa.gb.max_degree:
                lhs = wa.nor(word_left_action(a, b, wa) + word_right_action(a, b, wa))
                assert lhs == wa.nor(a + b)
    return True


@dataclass(frozen=True)
class VeroneseSolution:
    d: int
    base: QuadraticSet
    labels: tuple         # normal words of length d, deg-lex order


def veronese_solution(qs, d, wa=None):
    """The d-Veronese solution on the normal words of length d."""
    if not check_properties(qs).braided:
        raise NotBraided("Veronese solutions need a braided base set")
    if d == 1:
        return VeroneseSolution(1, qs, tuple((i,) for i in range(qs.n)))
    if wa is None:
        wa = WordActions(qs, max_degree=max(2 * d, 3))
    if not (wa.gb.complete or 2 * d <= wa.gb.max_degree):
        raise InsufficientDegree(f"level {d} needs normal forms through {2 * d}")
    labels = tuple(normal_words(wa.gb, d))
    index = {w: i for i, w in enumerate(labels)}
    table = []
    for a in labels:
        for b in labels:
            u, v = rho(a, b, wa)
            table.append((index[u], index[v]))
    return VeroneseSolution(d, QuadraticSet(len(labels), table), labels)


@dataclass(frozen=True)
class ProlongationData:
    solutions: tuple      # VeroneseSolution for d = 1..d_max
    period: int           # smallest p with r^(p+1) = r, or None if not seen
    distinct_count: int


def prolongation_sequence(qs, d_max):
    """The prolongations (X, r^(d)) for d = 1..d_max with periodicity data."""
    rep = check_properties(qs)
    if not (rep.braided and rep.idempotent and rep.left_nondegenerate):
        raise NotBraided(
            "prolongations need a left-nondegenerate idempotent braided set")
    wa = WordActions(qs, max_degree=max(2 * d_max, 3))
    sols = [veronese_solution(qs, d, wa) for d in range(1, d_max + 1)]
    period = None
    for d in range(2, d_max + 1):
        if sols[d - 1].base == qs:
            period = d - 1
            break
    distinct = len({s.base for s in sols})
    return ProlongationData(tuple(sols), period, distinct)


def idempotence_of_restriction(qs, d):
    """Whether rho_d is idempotent on the level-d normal words."""
    rep = check_properties(qs)
    if not rep.idempotent:
        raise NotIdempotent("the base set must be idempotent")
    vs = veronese_solution(qs, d)
    return check_properties(vs.base).idempotent
