"""
Exact multivariate Laurent polynomials over the integers in z_1..z_r, with
the Demazure (isobaric divided-difference) operator and its atom variant.

A polynomial stores a map from exponent vectors (length-r integer tuples,
entries may be negative) to nonzero integer coefficients.  Coefficients are
Python ints, so nothing here can overflow.  The Demazure operator is
computed by exact division of z_i*f - z_{i+1}*f(s_i z) by (z_i - z_{i+1});
the division always leaves zero remainder on valid input and raises if it
does not, since that would indicate a bug rather than bad data.
"""

from . import weyl

__all__ = [
    "LaurentPoly", "zero", "one", "monomial", "variable", "eval_ones",
    "swap_vars", "demazure", "demazure_atom_op", "demazure_char",
    "demazure_atom", "format_poly",
]


class LaurentPoly:
    """Immutable-by-convention Laurent polynomial; do not mutate .terms."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for expo, coeff in (terms or {}).items():
            if len(expo) != nvars:
                raise ValueError(f"exponent {expo} has wrong length, want {nvars}")
            if coeff != 0:
                clean[tuple(expo)] = coeff
        self.terms = clean

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def _check_rank(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")

    def __add__(self, other):
        self._check_rank(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            new = out.get(expo, 0) + coeff
            if new:
                out[expo] = new
            else:
                out.pop(expo, None)
        return LaurentPoly(self.nvars, out)

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check_rank(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(expo, 0) + c1 * c2
                if new:
                    out[expo] = new
                else:
                    out.pop(expo, None)
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"LaurentPoly({self.nvars}, {format_poly(self)!r})"


def zero(nvars: int) -> LaurentPoly:
    return LaurentPoly(nvars, {})


def one(nvars: int) -> LaurentPoly:
    return monomial((0,) * nvars)


def monomial(mu) -> LaurentPoly:
    """The single term z^mu with coefficient 1."""
    mu = tuple(mu)
    return LaurentPoly(len(mu), {mu: 1})


def variable(i: int, nvars: int) -> LaurentPoly:
    """z_i."""
    if not 1 <= i <= nvars:
        raise ValueError(f"variable index {i} out of range")
    return monomial(tuple(1 if k == i else 0 for k in range(1, nvars + 1)))


def eval_ones(f: LaurentPoly) -> int:
    """Evaluation at z_1 = ... = z_r = 1, i.e. the sum of coefficients."""
    return sum(f.terms.values())


def swap_vars(f: LaurentPoly, i: int) -> LaurentPoly:
    """f(s_i z): exchange the exponents of z_i and z_{i+1} in every term."""
    if not 1 <= i <= f.nvars - 1:
        raise ValueError(f"simple index {i} out of range")
    out = {}
    for expo, coeff in f.terms.items():
        e = list(expo)
        e[i - 1], e[i] = e[i], e[i - 1]
        out[tuple(e)] = coeff
    return LaurentPoly(f.nvars, out)


def _divide_exact(f: LaurentPoly, i: int) -> LaurentPoly:
    """Exact division of f by (z_i - z_{i+1}); raises if inexact.

    Terms are grouped by the exponents away from positions i, i+1 together
    with the pair's total degree (the divisor is homogeneous in the pair);
    within a group the quotient coefficients follow from a descending
    recurrence in the z_i exponent, and the telescoped remainder must vanish.
    """
    a, b = i - 1, i
    groups: dict[tuple, dict[int, int]] = {}
    for expo, coeff in f.terms.items():
        rest = expo[:a] + expo[b + 1:]
        d = expo[a] + expo[b]
        groups.setdefault((rest, d), {})[expo[a]] = coeff
    out = {}
    for (rest, d), coeffs in groups.items():
        q = 0
        for p in range(max(coeffs), min(coeffs) - 1, -1):
            q = coeffs.get(p, 0) + q  # quotient coeff of z_i^(p-1) z_{i+1}^(d-p)
            if q:
                expo = rest[:a] + (p - 1, d - p) + rest[a:]
                out[expo] = q
        if q != 0:
            raise RuntimeError("inexact division by (z_i - z_{i+1}); "
                               "this indicates a bug in the caller")
    return LaurentPoly(f.nvars, out)


def demazure(f: LaurentPoly, i: int) -> LaurentPoly:
    """The Demazure operator (z_i*f - z_{i+1}*f(s_i z)) / (z_i - z_{i+1}).

    Idempotent, and fixes anything symmetric in z_i, z_{i+1}.
    """
    zi = variable(i, f.nvars)
    zi1 = variable(i + 1, f.nvars)
    return _divide_exact(zi * f - zi1 * swap_vars(f, i), i)


def demazure_atom_op(f: LaurentPoly, i: int) -> LaurentPoly:
    """The atom operator: demazure(f, i) - f."""
    return demazure(f, i) - f


def _apply_word(f: LaurentPoly, word, op) -> LaurentPoly:
    # word (a_1..a_k) encodes the product s_{a_1}...s_{a_k}; the rightmost
    # factor acts first, so apply operators right to left.
    for i in reversed(word):
        f = op(f, i)
    return f


def demazure_char(lam, w) -> LaurentPoly:
    """Demazure character: the composite Demazure operator over a reduced
    word of w, applied to z^lam.  Word-independent."""
    lam = _check_dominant(lam, len(w))
    return _apply_word(monomial(lam), weyl.reduced_word(w), demazure)


def demazure_atom(lam, w) -> LaurentPoly:
    """Demazure atom: the composite atom operator over a reduced word of w,
    applied to z^lam.  Characters decompose as the sum of atoms over the
    Bruhat interval below w."""
    lam = _check_dominant(lam, len(w))
    return _apply_word(monomial(lam), weyl.reduced_word(w), demazure_atom_op)


def _check_dominant(lam, r):
    lam = tuple(lam)
    if len(lam) != r:
        raise ValueError("partition length must equal the permutation rank")
    if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] < 0):
        raise ValueError(f"not weakly decreasing and nonnegative: {lam!r}")
    return lam


def format_poly(f: LaurentPoly) -> str:
    """Canonical text: terms in descending graded-lex exponent order, with
    explicit '*' and '^', e.g. 'z1^2 + z1*z2'."""
    if not f.terms:
        return "0"
    items = sorted(f.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    chunks = []
    for expo, coeff in items:
        factors = [f"z{k}" + (f"^{e}" if e != 1 else "")
                   for k, e in enumerate(expo, start=1) if e != 0]
        if not factors:
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = "*".join(factors)
        else:
            body = f"{abs(coeff)}*" + "*".join(factors)
        sign = "-" if coeff < 0 else "+"
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        text += f" {sign} {body}"
    return text
