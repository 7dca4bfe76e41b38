"""The 2x2 matrix realization of the xq algebra.

For n >= 3 the xq algebra embeds in 2x2 matrices over the free algebra
R on a, b with a^(n-1) = 0, via

    x  ->  X = [[a, 0], [1, 0]],      q  ->  Q = [[b, 1 - ba], [0, 0]],

and the image is the subalgebra of matrices whose (1,2) entry lies in the
right ideal I = R(1 - ba) and whose (2,2) entry lies in F + I.  Membership
in those corners is decidable by a small exact linear solve: multiplying
any word by ba raises its degree by exactly two and never kills it, so a
factor s with entry = s(1 - ba) has degree bounded by the entry's degree.

The module also carries the determinant obstruction (the evaluation
a -> e21, b -> e12 into scalar matrices sends 1 - ba to a singular matrix,
so no C (1-ba) D can equal the identity) and the degenerate n = 2 model
M2(F[b]) x F, where the map above acquires a kernel.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .elements import Algebra, AlgebraElement, linear_combination, parse_element
from .fields import GF2, QQ
from .linalg import rank, solve
from .rewriting import Word, ab_system, parse_word, xq_system
from .reports import VerificationReport, finish_report


def free_mul(p: AlgebraElement, r: AlgebraElement) -> AlgebraElement:
    """Product in the free algebra on a, b.

    A product of two basis words is again a basis word or zero; the only
    thing that can die is an a-run assembled at the seam, so this is plain
    element multiplication with no hidden rewriting cost.
    """
    for element in (p, r):
        if element.algebra.system.letters != ("a", "b"):
            raise ValueError("free_mul expects elements of the a,b algebra")
    return p * r


class MatrixElement:
    """A 2x2 matrix with entries in one algebra."""

    __slots__ = ("algebra", "rows")

    def __init__(self, algebra: Algebra, rows):
        entries = tuple(tuple(row) for row in rows)
        if len(entries) != 2 or any(len(row) != 2 for row in entries):
            raise ValueError("expected a 2x2 entry grid")
        for row in entries:
            for entry in row:
                if not isinstance(entry, AlgebraElement) or entry.algebra != algebra:
                    raise ValueError("entries must all live in the given algebra")
        self.algebra = algebra
        self.rows = entries

    @classmethod
    def zero(cls, algebra: Algebra) -> "MatrixElement":
        z = algebra.zero
        return cls(algebra, ((z, z), (z, z)))

    @classmethod
    def identity(cls, algebra: Algebra) -> "MatrixElement":
        one, z = algebra.one, algebra.zero
        return cls(algebra, ((one, z), (z, one)))

    def entry(self, i: int, j: int) -> AlgebraElement:
        return self.rows[i][j]

    @property
    def is_zero(self) -> bool:
        return all(entry.is_zero for row in self.rows for entry in row)

    def __add__(self, other: "MatrixElement") -> "MatrixElement":
        self._check(other)
        return MatrixElement(self.algebra, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other: "MatrixElement") -> "MatrixElement":
        self._check(other)
        return MatrixElement(self.algebra, tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def __neg__(self) -> "MatrixElement":
        return MatrixElement(self.algebra, tuple(
            tuple(-entry for entry in row) for row in self.rows))

    def __mul__(self, other):
        if isinstance(other, MatrixElement):
            self._check(other)
            a, b = self.rows, other.rows
            return MatrixElement(self.algebra, tuple(
                tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in (0, 1))
                for i in (0, 1)))
        return NotImplemented

    def scaled(self, scalar) -> "MatrixElement":
        return MatrixElement(self.algebra, tuple(
            tuple(entry * scalar for entry in row) for row in self.rows))

    def __pow__(self, exponent: int) -> "MatrixElement":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MatrixElement.identity(self.algebra)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixElement):
            return NotImplemented
        return self.algebra == other.algebra and self.rows == other.rows

    __hash__ = None

    def _check(self, other: "MatrixElement") -> None:
        if other.algebra != self.algebra:
            raise ValueError("matrices live over different algebras")

    def __str__(self) -> str:
        (a, b), (c, d) = self.rows
        return f"[[{a}, {b}], [{c}, {d}]]"

    def __repr__(self) -> str:
        return f"MatrixElement({self})"

    def to_json(self) -> list:
        return [[str(entry) for entry in row] for row in self.rows]


def parse_matrix(text: str, algebra: Algebra) -> MatrixElement:
    """Parse the literal format [[e11, e12], [e21, e22]] with entries in
    the element grammar (which contains no brackets or commas)."""
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ValueError("matrix literal must be wrapped in [...]")
    inner = stripped[1:-1]
    rows = []
    depth = 0
    row_start = None
    for index, char in enumerate(inner):
        if char == "[":
            if depth == 0:
                row_start = index + 1
            depth += 1
        elif char == "]":
            depth -= 1
            if depth == 0:
                rows.append(inner[row_start:index])
    if len(rows) != 2 or depth != 0:
        raise ValueError("expected two bracketed rows")
    entries = []
    for row in rows:
        cells = row.split(",")
        if len(cells) != 2:
            raise ValueError("expected two entries per row")
        entries.append(tuple(parse_element(cell, algebra) for cell in cells))
    return MatrixElement(algebra, tuple(entries))


class DegreeBoundExceeded(ValueError):
    """The caller capped the membership solve below the degree it needs."""


@dataclass
class TMembership:
    """Membership certificates for the block shape [[R, I], [R, F + I]].

    When in_t holds, entry (1,2) equals top_right_factor * (1 - ba) and
    entry (2,2) equals constant_part + bottom_right_factor * (1 - ba).
    """

    in_t: bool
    top_right_factor: AlgebraElement | None
    constant_part: object | None
    bottom_right_factor: AlgebraElement | None
    failed_entries: tuple[str, ...] = ()


class MatrixModel:
    """The matrix realization for one nilpotency degree and field."""

    def __init__(self, n: int = 3, field=QQ):
        if n < 2:
            raise ValueError("nilpotency degree must be at least 2")
        self.n = n
        self.source = Algebra(xq_system(n), field)
        self.target = Algebra(ab_system(n - 1), field)
        a = self.target.gen("a")
        b = self.target.gen("b")
        zero, one = self.target.zero, self.target.one
        self.x_image = MatrixElement(self.target, ((a, zero), (one, zero)))
        self.q_image = MatrixElement(self.target, ((b, one - b * a), (zero, zero)))
        self._one_minus_ba = one - b * a
        self._images: dict[tuple[str, ...], MatrixElement] = {
            (): MatrixElement.identity(self.target)}

    def word_image(self, word) -> MatrixElement:
        word = parse_word(word) if isinstance(word, str) else word
        return self._letters_image(word.letters())

    def _letters_image(self, letters: tuple[str, ...]) -> MatrixElement:
        cached = self._images.get(letters)
        if cached is None:
            generator = self.x_image if letters[-1] == "x" else self.q_image
            cached = self._letters_image(letters[:-1]) * generator
            self._images[letters] = cached
        return cached

    def phi(self, value) -> MatrixElement:
        """Image of an element (or word) of the xq algebra."""
        if isinstance(value, (str, Word)):
            return self.word_image(value)
        if value.algebra != self.source:
            raise ValueError("phi expects an element of this model's xq algebra")
        total = MatrixElement.zero(self.target)
        for word, coefficient in value.terms().items():
            total = total + self.word_image(word).scaled(coefficient)
        return total

    def membership(self, matrix: MatrixElement,
                   degree_bound: int | None = None) -> TMembership:
        """Decide the block-shape membership of a matrix over R.

        Entries (1,1) and (2,1) are unconstrained.  Entry (1,2) must lie
        in R(1 - ba) and entry (2,2) in F + R(1 - ba); both are decided by
        an exact linear solve for the factor s.  Any s with
        entry = s(1 - ba) satisfies deg(s) = deg(entry) - 2 (multiplying a
        word by ba adds two letters and never cancels), so solving up to
        deg(entry) + 2 is already conclusive; an explicit degree_bound
        below that is an error rather than a silent weaker answer.
        """
        if matrix.algebra != self.target:
            raise ValueError("matrix must live over this model's a,b algebra")
        failed = []
        top = self._right_ideal_factor(matrix.entry(0, 1), degree_bound,
                                       with_constant=False)
        if top is None:
            failed.append("(1,2)")
        bottom = self._right_ideal_factor(matrix.entry(1, 1), degree_bound,
                                          with_constant=True)
        if bottom is None:
            failed.append("(2,2)")
        if failed:
            return TMembership(False, None, None, None, tuple(failed))
        return TMembership(True, top[0], bottom[1], bottom[0])

    def _right_ideal_factor(self, entry: AlgebraElement,
                            degree_bound: int | None, with_constant: bool):
        field = self.target.field
        needed = (entry.degree() or 0) + 2
        if degree_bound is not None and degree_bound < needed:
            raise DegreeBoundExceeded(
                f"membership solve needs degree {needed}, bound is {degree_bound}")
        bound = degree_bound if degree_bound is not None else needed
        unknowns = self.target.basis_words(bound)
        columns = [self.target.word(w) * self._one_minus_ba for w in unknowns]
        if with_constant:
            columns.append(self.target.one)
        support = {word for column in columns for word in column.support()}
        support.update(entry.support())
        ordered = sorted(support, key=Word.sort_key)
        position = {word: index for index, word in enumerate(ordered)}
        matrix_rows = [[field.zero] * len(columns) for _ in ordered]
        for j, column in enumerate(columns):
            for word, coefficient in column.terms().items():
                matrix_rows[position[word]][j] = coefficient
        rhs = [entry.coeff(word) for word in ordered]
        solution = solve(matrix_rows, rhs, field)
        if solution is None:
            return None
        factor = linear_combination(
            self.target,
            zip(solution[:len(unknowns)], (self.target.word(w) for w in unknowns)))
        constant = solution[-1] if with_constant else None
        return factor, constant


_MODELS: dict[tuple[int, object], MatrixModel] = {}


def _model_for(algebra: Algebra) -> MatrixModel:
    key = (algebra.system.nilpotency_degree, algebra.field)
    model = _MODELS.get(key)
    if model is None:
        model = MatrixModel(algebra.system.nilpotency_degree, algebra.field)
        _MODELS[key] = model
    return model


def phi(element: AlgebraElement) -> MatrixElement:
    """Image of an xq-algebra element under the standard matrix model."""
    if element.algebra.system.letters != ("x", "q"):
        raise ValueError("phi expects an element of the xq algebra")
    return _model_for(element.algebra).phi(element)


def membership_T(matrix: MatrixElement,
                 degree_bound: int | None = None) -> TMembership:
    """Membership in the image subalgebra, for matrices over the a,b
    algebra."""
    if matrix.algebra.system.letters != ("a", "b"):
        raise ValueError("membership expects a matrix over the a,b algebra")
    n = matrix.algebra.system.nilpotency_degree + 1
    model = _MODELS.get((n, matrix.algebra.field))
    if model is None:
        model = MatrixModel(n, matrix.algebra.field)
        _MODELS[(n, matrix.algebra.field)] = model
    return model.membership(matrix, degree_bound)


def verify_phi_faithful(max_len: int = 6, n: int = 3) -> VerificationReport:
    """Linear independence of the images of all basis words of length
    <= max_len, over GF(2) and over the rationals, plus corner spot
    checks.

    Independence of the images is exactly injectivity on the bounded
    slice: a kernel element would be a vanishing linear combination.
    """
    if n < 3:
        raise ValueError("faithfulness is asserted for n >= 3; "
                         "n = 2 routes to n2_variant_check")
    started = time.perf_counter()
    parameters = {"max_len": max_len, "n": n, "fields": ["gf2", "rational"]}
    examined = 0
    witness = None
    for field in (GF2, QQ):
        model = MatrixModel(n, field)
        words = model.source.basis_words(max_len)
        images = [model.phi(word) for word in words]
        examined += len(words)
        matrix_rank = _flattened_rank(images, field)
        if matrix_rank != len(words):
            witness = {"kind": "dependent-images", "field": field.name,
                       "words": len(words), "rank": matrix_rank}
            break
    if witness is None:
        witness = _corner_spot_check(MatrixModel(n, QQ), min(max_len, 4))
        examined += 1
    status = "fail" if witness is not None else "pass"
    return finish_report("phi-faithful", parameters, status, witness,
                         examined, started)


def _flattened_rank(images: list[MatrixElement], field) -> int:
    columns: dict[tuple[int, int, Word], int] = {}
    for image in images:
        for i in (0, 1):
            for j in (0, 1):
                for word in image.entry(i, j).support():
                    columns.setdefault((i, j, word), len(columns))
    rows = []
    for image in images:
        row = [field.zero] * len(columns)
        for i in (0, 1):
            for j in (0, 1):
                for word, coefficient in image.entry(i, j).terms().items():
                    row[columns[(i, j, word)]] = coefficient
        rows.append(row)
    return rank(rows, field)


def _corner_spot_check(model: MatrixModel, bound: int) -> dict | None:
    """phi carries the (1-qx)-corner onto the e22 corner: the corner frame
    maps to e22 exactly, corner elements land with only the (2,2) entry
    populated, and the corner's dimension is preserved."""
    source = model.source
    x = source.gen("x")
    q = source.gen("q")
    frame = source.one - q * x
    frame_image = model.phi(frame)
    expected = MatrixElement(model.target, (
        (model.target.zero, model.target.zero),
        (model.target.zero, model.target.one)))
    if frame_image != expected:
        return {"kind": "corner-frame", "image": str(frame_image)}
    corner_elements = [frame * source.word(w) * frame
                       for w in source.basis_words(bound)]
    corner_elements = [e for e in corner_elements if not e.is_zero]
    images = [model.phi(e) for e in corner_elements]
    for element, image in zip(corner_elements, images):
        off_corner = [image.entry(0, 0), image.entry(0, 1), image.entry(1, 0)]
        if any(not entry.is_zero for entry in off_corner):
            return {"kind": "corner-escape", "element": str(element)}
    source_rank = _element_rank(corner_elements, source.field)
    image_rank = _element_rank([image.entry(1, 1) for image in images],
                               model.target.field)
    if source_rank != image_rank:
        return {"kind": "corner-dimension", "source_rank": source_rank,
                "image_rank": image_rank}
    for generator_image in (model.x_image, model.q_image):
        if not model.membership(generator_image).in_t:
            return {"kind": "generator-membership"}
    return None


def _element_rank(elements: list[AlgebraElement], field) -> int:
    columns: dict[Word, int] = {}
    for element in elements:
        for word in element.support():
            columns.setdefault(word, len(columns))
    rows = []
    for element in elements:
        row = [field.zero] * len(columns)
        for word, coefficient in element.terms().items():
            row[columns[word]] = coefficient
        rows.append(row)
    return rank(rows, field)


def pi_eval(element: AlgebraElement):
    """Evaluate an a,b element at a -> e21, b -> e12 in 2x2 scalar
    matrices (defined for the m = 2 relation a^2 = 0, which e21 satisfies).
    """
    system = element.algebra.system
    if system.letters != ("a", "b") or system.nilpotency_degree != 2:
        raise ValueError("pi is defined on the a,b algebra with a^2 = 0")
    field = element.algebra.field
    zero, one = field.zero, field.one
    generator = {"a": ((zero, zero), (one, zero)),
                 "b": ((zero, one), (zero, zero))}
    total = ((zero, zero), (zero, zero))
    for word, coefficient in element.terms().items():
        image = ((one, zero), (zero, one))
        for letter in word.letters():
            image = _mat2_mul(image, generator[letter], field)
        total = _mat2_add(total, _mat2_scale(coefficient, image, field), field)
    return total


def _mat2_mul(a, b, field):
    return tuple(
        tuple(field.add(field.mul(a[i][0], b[0][j]), field.mul(a[i][1], b[1][j]))
              for j in (0, 1))
        for i in (0, 1))


def _mat2_add(a, b, field):
    return tuple(tuple(field.add(a[i][j], b[i][j]) for j in (0, 1)) for i in (0, 1))


def _mat2_scale(scalar, a, field):
    return tuple(tuple(field.mul(scalar, a[i][j]) for j in (0, 1)) for i in (0, 1))


def det2(matrix, field):
    return field.sub(field.mul(matrix[0][0], matrix[1][1]),
                     field.mul(matrix[0][1], matrix[1][0]))


def check_determinant_obstruction(random_trials: int = 1000,
                                  seed: int = 0) -> VerificationReport:
    """1 - ba evaluates to the singular matrix [[0,0],[0,1]], so no
    C (1-ba) D can be the identity; confirmed exactly by the determinant
    and by seeded random sandwiching over GF(2)."""
    started = time.perf_counter()
    parameters = {"random_trials": random_trials, "seed": seed, "field": "gf2"}
    witness = None
    examined = 0
    rational_algebra = Algebra(ab_system(2), QQ)
    one_minus_ba = (rational_algebra.one
                    - rational_algebra.gen("b") * rational_algebra.gen("a"))
    image = pi_eval(one_minus_ba)
    examined += 2
    if image != ((QQ.zero, QQ.zero), (QQ.zero, QQ.one)):
        witness = {"kind": "image", "value": [[str(v) for v in row] for row in image]}
    elif det2(image, QQ) != QQ.zero:
        witness = {"kind": "determinant"}
    if witness is None:
        field = GF2
        algebra = Algebra(ab_system(2), field)
        target = pi_eval(algebra.one - algebra.gen("b") * algebra.gen("a"))
        identity = ((field.one, field.zero), (field.zero, field.one))
        rng = random.Random(seed)
        for _ in range(random_trials):
            examined += 1
            c = tuple(tuple(rng.randrange(2) for _ in (0, 1)) for _ in (0, 1))
            d = tuple(tuple(rng.randrange(2) for _ in (0, 1)) for _ in (0, 1))
            sandwich = _mat2_mul(_mat2_mul(c, target, field), d, field)
            if sandwich == identity:
                witness = {"kind": "sandwich", "c": [list(r) for r in c],
                           "d": [list(r) for r in d]}
                break
    status = "fail" if witness is not None else "pass"
    return finish_report("determinant", parameters, status, witness,
                         examined, started)


class _PairElement:
    """An element of M2(F[b]) x F, the codomain of the degenerate n = 2
    model."""

    __slots__ = ("matrix", "scalar")

    def __init__(self, matrix: MatrixElement, scalar):
        self.matrix = matrix
        self.scalar = scalar

    def __add__(self, other: "_PairElement") -> "_PairElement":
        field = self.matrix.algebra.field
        return _PairElement(self.matrix + other.matrix,
                            field.add(self.scalar, other.scalar))

    def __sub__(self, other: "_PairElement") -> "_PairElement":
        field = self.matrix.algebra.field
        return _PairElement(self.matrix - other.matrix,
                            field.sub(self.scalar, other.scalar))

    def __mul__(self, other: "_PairElement") -> "_PairElement":
        field = self.matrix.algebra.field
        return _PairElement(self.matrix * other.matrix,
                            field.mul(self.scalar, other.scalar))

    def scaled(self, coefficient) -> "_PairElement":
        field = self.matrix.algebra.field
        return _PairElement(self.matrix.scaled(coefficient),
                            field.mul(field.coerce(coefficient), self.scalar))

    def __eq__(self, other) -> bool:
        return (isinstance(other, _PairElement)
                and self.matrix == other.matrix and self.scalar == other.scalar)

    __hash__ = None

    def __repr__(self) -> str:
        return f"({self.matrix}, {self.scalar})"


def n2_variant_check(field=QQ) -> VerificationReport:
    """The degenerate n = 2 picture.

    The standard matrix map acquires a kernel: e = 1 - qx - xq + xq^2 x is
    a central idempotent of the n = 2 algebra (centrality is checked
    against both generators, which generate) and phi(e) = 0.  The repaired
    codomain M2(F[b]) x F with q -> ([[b, 1], [0, 0]], 0) and
    x -> ([[0, 0], [1, 0]], 0) satisfies the defining relations and sends
    e to (0, 1), the complement of the image of 1 - e.
    """
    started = time.perf_counter()
    parameters = {"n": 2, "field": field.name}
    source = Algebra(xq_system(2), field)
    x = source.gen("x")
    q = source.gen("q")
    e = source.one - q * x - x * q + x * q * q * x

    poly = Algebra(ab_system(1), field)  # a collapses, leaving F[b]
    b = poly.gen("b")
    zero, one = poly.zero, poly.one
    x_pair = _PairElement(
        MatrixElement(poly, ((zero, zero), (one, zero))), field.zero)
    q_pair = _PairElement(
        MatrixElement(poly, ((b, one), (zero, zero))), field.zero)
    one_pair = _PairElement(MatrixElement.identity(poly), field.one)
    zero_pair = _PairElement(MatrixElement.zero(poly), field.zero)

    def pair_image(element: AlgebraElement) -> _PairElement:
        total = zero_pair
        for word, coefficient in element.terms().items():
            image = one_pair
            for letter in word.letters():
                image = image * (x_pair if letter == "x" else q_pair)
            total = total + image.scaled(coefficient)
        return total

    standard = MatrixModel(2, field)
    checks = [
        ("e is idempotent", e * e == e),
        ("e commutes with x", e * x == x * e),
        ("e commutes with q", e * q == q * e),
        ("xqx = x in the pair model",
         x_pair * q_pair * x_pair == x_pair),
        ("qxq = q in the pair model",
         q_pair * x_pair * q_pair == q_pair),
        ("x^2 = 0 in the pair model", x_pair * x_pair == zero_pair),
        ("e maps to (0, 1)",
         pair_image(e) == _PairElement(MatrixElement.zero(poly), field.one)),
        ("1 - e maps to (identity, 0)",
         pair_image(source.one - e)
         == _PairElement(MatrixElement.identity(poly), field.zero)),
        ("standard model kills e", standard.phi(e).is_zero),
    ]
    witness = None
    for name, ok in checks:
        if not ok:
            witness = {"check": name}
            break
    status = "fail" if witness is not None else "pass"
    return finish_report("n2-variant", parameters, status, witness,
                         len(checks), started)
