"""Veronese subalgebra and Segre product presentations.

The d-Veronese subalgebra of a quadratic binomial algebra is generated
by the normal words of length d; each product v_i v_j outside the
normal words of length 2d contributes one relation whose right side is
the normal form split back into a product of two length-d normal words.

The Segre product of two algebras from left-nondegenerate idempotent
solutions is presented on generators z_{ia} with relations rewriting
z_{ia} z_{jb} to z_{11} z_{k l}; this coincides with the canonical
relations of the product solution.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (InsufficientDegree, NormalFormNotFactorable,
                     NotIdempotent, NotLeftNondegenerate)
from .ncgb import complete, normal_form_word, normal_words
from .orbits import canonical_relations, idempotent_structure
from .quadset import cartesian_product, check_properties


@dataclass(frozen=True)
class QuadraticPresentation:
    generators: tuple     # labels: base-algebra words or product symbols
    relations: tuple      # NcPolynomials over generator indices, frozen items


def _freeze(p):
    return tuple(sorted(p.items()))


def veronese_presentation(relations, d, max_degree=None, alphabet=0):
    """Presentation of the d-Veronese subalgebra of a binomial quadratic
    algebra given by reduced binomial relations."""
    if max_degree is None:
        max_degree = max(2 * d, 3)
    if max_degree < 2 * d:
        raise InsufficientDegree(f"level {d} needs completion through {2 * d}")
    gb = complete(relations, max_degree, alphabet=alphabet)
    if not (gb.complete or 2 * d <= gb.max_degree):
        raise InsufficientDegree("basis not complete through degree 2d")
    gens = normal_words(gb, d)
    index = {w: i for i, w in enumerate(gens)}
    n2d = set(normal_words(gb, 2 * d))
    rels = []
    for i, u in enumerate(gens):
        for j, v in enumerate(gens):
            w = u + v
            if w in n2d:
                continue
            nor = normal_form_word(w, gb)
            a, b = nor[:d], nor[d:]
            if a not in index or b not in index:
                raise NormalFormNotFactorable(
                    f"normal form of {w} does not factor through level {d}")
            rels.append(_freeze({(i, j): Fraction(1),
                                 (index[a], index[b]): Fraction(-1)}))
    return QuadraticPresentation(tuple(gens), tuple(rels))


def veronese_isomorphism_check(qs, d):
    """Compare the d-Veronese presentation of the algebra with the
    canonical relations of the d-Veronese solution, under v_i <-> x_i."""
    from .braidmon import veronese_solution

    rep = check_properties(qs)
    if not (rep.braided and rep.idempotent and rep.left_nondegenerate):
        raise NotIdempotent(
            "the identification needs a left-nondegenerate idempotent braided set")
    if d == 1:
        return True
    pres = veronese_presentation(canonical_relations(qs).to_polynomials(), d,
                                 alphabet=qs.n)
    vs = veronese_solution(qs, d)
    if pres.generators != vs.labels:
        return False
    got = {((u[0], u[1]), (v[0], v[1]))
           for rel in pres.relations
           for (u, cu) in [max(rel, key=lambda t: t[0])]
           for (v, cv) in [min(rel, key=lambda t: t[0])]}
    want = set(canonical_relations(vs.base).relations)
    return got == want


def segre_presentation(qsX, qsY):
    """Relations F_{ia,jb} = z_{ia} z_{jb} - z_{11} z_{k_{ij} l_{ab}} on the
    lexicographically ordered product generators."""
    for qs in (qsX, qsY):
        rep = check_properties(qs)
        if not rep.idempotent:
            raise NotIdempotent("Segre presentations need idempotent factors")
        if not rep.left_nondegenerate:
            raise NotLeftNondegenerate("Segre presentations need left nondegeneracy")
    n, m = qsX.n, qsY.n
    k = idempotent_structure(qsX)
    l = idempotent_structure(qsY)
    gens = tuple((i, a) for i in range(n) for a in range(m))
    rels = []
    for i in range(n):
        for a in range(m):
            if (i, a) == (0, 0):
                continue
            for j in range(n):
                for b in range(m):
                    src = (i * m + a, j * m + b)
                    dst = (0, k[i][j] * m + l[a][b])
                    rels.append(_freeze({src: Fraction(1), dst: Fraction(-1)}))
    return QuadraticPresentation(gens, tuple(rels))


def segre_morphism_check(qsX, qsY, D):
    """Verify the Segre morphism data up to degree D.

    (a) each F relation maps to zero in the tensor algebra: both tensor
        components have equal normal forms in their factors;
    (b) the degree-d component of the product algebra has dimension n*m
        for 2 <= d <= D, matching the diagonal subalgebra;
    (c) the degree-2 relation space of the product solution equals
        sigma_23(R_A (x) W (x) W + V (x) V (x) R_B) by exact rank.
    """
    from .linr import (RationalMatrix, linearize, span_matrix, subspace_equal)

    n, m = qsX.n, qsY.n
    prod = cartesian_product(qsX, qsY)
    k = idempotent_structure(qsX)
    l = idempotent_structure(qsY)
    gbX = complete(canonical_relations(qsX).to_polynomials(), max(D + 1, 3),
                   alphabet=n)
    gbY = complete(canonical_relations(qsY).to_polynomials(), max(D + 1, 3),
                   alphabet=m)
    gbP = complete(canonical_relations(prod).to_polynomials(), max(D + 1, 3),
                   alphabet=n * m)

    # (a) tensor components of F_{ia,jb} cancel in A (x) B
    vanish = True
    for i in range(n):
        for j in range(n):
            for a in range(m):
                for b in range(m):
                    okX = normal_form_word((i, j), gbX) == \
                        normal_form_word((0, k[i][j]), gbX)
                    okY = normal_form_word((a, b), gbY) == \
                        normal_form_word((0, l[a][b]), gbY)
                    vanish = vanish and okX and okY

    # (b) dimension of each graded component
    dims_ok = all(len(normal_words(gbP, d)) == n * m for d in range(2, D + 1))

    # (c) degree-2 relation spaces agree
    psiX, _ = linearize(qsX)
    psiY, _ = linearize(qsY)
    psiP, _ = linearize(prod)
    nm = n * m
    idP = RationalMatrix.identity(nm * nm)
    rel_prod = span_matrix(idP.sub(psiP))

    relX = span_matrix(RationalMatrix.identity(n * n).sub(psiX))
    relY = span_matrix(RationalMatrix.identity(m * m).sub(psiY))
    vecs = []
    # sigma_23 sends (i (x) a) (x) (j (x) b) to component order (i, j, a, b)
    def s23_vector(xij, yab):
        v = [Fraction(0)] * (nm * nm)
        for (i, j), c1 in xij.items():
            for (a, b), c2 in yab.items():
                v[(i * m + a) * nm + (j * m + b)] = c1 * c2
        return v

    def pair_dicts(mat, size):
        return [{(p // size, p % size): c for p, c in enumerate(row) if c}
                for row in mat.data]

    unitY = [{(a, b): Fraction(1)} for a in range(m) for b in range(m)]
    unitX = [{(i, j): Fraction(1)} for i in range(n) for j in range(n)]
    for row in pair_dicts(relX, n):
        for w in unitY:
            vecs.append(s23_vector(row, w))
    for w in unitX:
        for row in pair_dicts(relY, m):
            vecs.append(s23_vector(w, row))
    rel_mixed = span_matrix(RationalMatrix(vecs, cols=nm * nm))
    rel_ok = subspace_equal(rel_prod, rel_mixed)

    ok = vanish and dims_ok and rel_ok
    return {"relations_vanish": vanish, "dims_ok": dims_ok,
            "relation_space_ok": rel_ok, "ok": ok}
