"""Shape-constrained supports, the C-set and its largest word, and the
verification harnesses built on them.

Everything here concerns the xq presentation with n = 3: x nilpotent of
index 3, q a freely adjoined generalised inverse.  The idempotents 1 - xq
and 1 - qx frame the inner-inverse question for x: for alpha = (1-xq) u
(1-qx) and beta = (1-qx) v (1-xq) to stand a chance of multiplying to
1 - xq, the support of u may be assumed to consist of words that are 1 or
begin and end in q ("left shape"), and the support of v of words that are
1 or begin and end in x ("right shape").

Expanding alpha * beta without collecting terms contributes eight signed
monomials per support pair (w, y).  The C-set records those whose normal
forms are nonzero, begin in q and end in x.  Two combinatorial facts about
its lex-largest member tau drive the impossibility searches:

* tau can only arise from a pair (w, y) in one of three restricted ways
  (type I product with or without an interface reduction, or type II), and
* the two reduced ways can happen at most once in total,

so tau cannot cancel out of the expansion, while 1 - xq contains no word
beginning in q.  The checkers below verify the three-form classification
and the uniqueness bound exhaustively at small size and on randomized
families, and the search enumerates every coefficient assignment over a
finite field to witness exhaustion directly.
"""

from __future__ import annotations

import enum
import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .elements import Algebra, AlgebraElement, linear_combination
from .fields import GF2, QQ
from .rewriting import (
    GREATER,
    IDENTITY_WORD,
    ReductionOutcome,
    RewriteSystem,
    Word,
    concat,
    concat_reduce,
    enumerate_basis,
    is_basis_word,
    lex_compare,
    parse_word,
    reduce,
    xq_system,
)
from .reports import VerificationReport, finish_report

_QX_WORD = Word((("q", 1), ("x", 1)))


def _as_word(value) -> Word:
    return parse_word(value) if isinstance(value, str) else value


def is_left_shape(word, system: RewriteSystem) -> bool:
    """1, q, q^2 or q z q: a basis word beginning and ending in q."""
    word = _as_word(word)
    if not is_basis_word(word, system):
        return False
    return word.is_identity or (word.first_letter == "q" and word.last_letter == "q")


def is_right_shape(word, system: RewriteSystem) -> bool:
    """1, x, x^2 or x z x: a basis word beginning and ending in x."""
    word = _as_word(word)
    if not is_basis_word(word, system):
        return False
    return word.is_identity or (word.first_letter == "x" and word.last_letter == "x")


def left_shape_words(max_len: int, system: RewriteSystem) -> list[Word]:
    return [w for w in enumerate_basis(max_len, system) if is_left_shape(w, system)]


def right_shape_words(max_len: int, system: RewriteSystem) -> list[Word]:
    return [w for w in enumerate_basis(max_len, system) if is_right_shape(w, system)]


class InterfaceKind(enum.Enum):
    ZERO = "zero"
    REDUCED = "reduced"
    NO_REDUCTION = "no-reduction"


def type_i_word(w, y, system: RewriteSystem) -> ReductionOutcome:
    """The reduced product w*y."""
    return concat_reduce(_as_word(w), _as_word(y), system)


def type_ii_word(w, y, system: RewriteSystem) -> ReductionOutcome:
    """The reduced product w*qx*y; when nonzero it never needs reduction."""
    word = concat(concat(_as_word(w), _QX_WORD), _as_word(y))
    return reduce(word, system)


def classify_interface(w, y, system: RewriteSystem) -> InterfaceKind:
    """How the seam of the product w*y behaves, for basis words w, y."""
    outcome = type_i_word(w, y, system)
    if outcome.is_zero:
        return InterfaceKind.ZERO
    return InterfaceKind.REDUCED if outcome.steps else InterfaceKind.NO_REDUCTION


@dataclass(frozen=True)
class COccurrence:
    """One expansion monomial that landed in the C-set."""

    word: Word
    left: Word
    right: Word
    kind: str  # "type-I", "type-II" or "boundary"
    coefficient: object


@dataclass(frozen=True)
class CSet:
    """The C-words of an expansion, as a multiset with source attribution.

    Multiplicity matters: the impossibility argument counts how often the
    largest word can appear, so occurrences are never collapsed.
    """

    occurrences: tuple[COccurrence, ...]
    algebra: Algebra

    def __len__(self) -> int:
        return len(self.occurrences)

    @property
    def is_empty(self) -> bool:
        return not self.occurrences

    def words(self) -> list[Word]:
        return sorted({occ.word for occ in self.occurrences}, key=Word.sort_key)

    def occurrences_of(self, word) -> tuple[COccurrence, ...]:
        word = _as_word(word)
        return tuple(occ for occ in self.occurrences if occ.word == word)

    def coefficient_of(self, word):
        """The collected coefficient of a word (sum over occurrences)."""
        word = _as_word(word)
        field = self.algebra.field
        total = field.zero
        for occ in self.occurrences:
            if occ.word == word:
                total = field.add(total, occ.coefficient)
        return total


@lru_cache(maxsize=None)
def _pair_contributions(system: RewriteSystem, w: Word, y: Word):
    """The C-members among the eight monomials (xq)^e1 w (qx)^e2 y (xq)^e3.

    Returns (kind, sign, word) triples; sign is (-1)^(e1+e2+e3).  Only the
    e1 = e3 = 0 terms can reach C at all (reduction never changes the
    first or last letter of a nonzero word), but all eight are expanded so
    the bookkeeping mirrors the uncollected product.
    """
    xq = ("x", "q")
    qx = ("q", "x")
    out = []
    for e1, e2, e3 in itertools.product((0, 1), repeat=3):
        letters = ((xq if e1 else ()) + w.letters() + (qx if e2 else ())
                   + y.letters() + (xq if e3 else ()))
        outcome = reduce(Word.from_letters(letters), system)
        if outcome.is_zero:
            continue
        word = outcome.result
        if word.first_letter != "q" or word.last_letter != "x":
            continue
        if (e1, e2, e3) == (0, 0, 0):
            kind = "type-I"
        elif (e1, e2, e3) == (0, 1, 0):
            kind = "type-II"
        else:
            kind = "boundary"
        out.append((kind, -1 if (e1 + e2 + e3) % 2 else 1, word))
    return tuple(out)


def _normalize_side(terms, side: str, algebra: Algebra) -> list[tuple[object, Word]]:
    """Accepts words, word text, or (coefficient, word) pairs; validates
    shapes, distinctness and nonzero coefficients."""
    shape_ok = is_left_shape if side == "left" else is_right_shape
    field = algebra.field
    normalized = []
    seen = set()
    for entry in terms:
        if isinstance(entry, tuple):
            coefficient, word = entry
        else:
            coefficient, word = field.one, entry
        word = _as_word(word)
        coefficient = field.coerce(coefficient)
        if coefficient == field.zero:
            raise ValueError(f"zero coefficient on {side} word {word}")
        if not shape_ok(word, algebra.system):
            raise ValueError(f"{word} is not a {side}-shape word")
        if word in seen:
            raise ValueError(f"duplicate {side} word {word}")
        seen.add(word)
        normalized.append((coefficient, word))
    return normalized


def build_c_set(left_terms, right_terms, algebra: Algebra) -> CSet:
    """Collect the C-words of the expansion of
    (1-xq)(sum of left terms)(1-qx)(sum of right terms)(1-xq).

    Empty sides are legal and give an empty C-set.
    """
    lefts = _normalize_side(left_terms, "left", algebra)
    rights = _normalize_side(right_terms, "right", algebra)
    field = algebra.field
    occurrences = []
    for left_coeff, w in lefts:
        for right_coeff, y in rights:
            pair_coeff = field.mul(left_coeff, right_coeff)
            for kind, sign, word in _pair_contributions(algebra.system, w, y):
                coefficient = (pair_coeff if sign > 0 else field.neg(pair_coeff))
                occurrences.append(COccurrence(word, w, y, kind, coefficient))
    return CSet(tuple(occurrences), algebra)


@dataclass(frozen=True)
class TauForm:
    """The only shape the largest C-word can have when n = 3:
    q^{i1} x^2 q^{i2} x^2 ... q^{ir} x^c with i1 >= 1, later i >= 2,
    c in {1, 2}."""

    q_exponents: tuple[int, ...]
    tail_exponent: int

    def word(self) -> Word:
        blocks = []
        exponents = self.q_exponents
        for index, exponent in enumerate(exponents):
            blocks.append(("q", exponent))
            blocks.append(("x", 2 if index < len(exponents) - 1 else self.tail_exponent))
        return Word(tuple(blocks))


def tau_form_of(word) -> TauForm | None:
    """Parse a word as a TauForm, or None if it does not fit."""
    word = _as_word(word)
    blocks = word.blocks
    if not blocks or blocks[0][0] != "q" or blocks[-1][0] != "x":
        return None
    q_exponents = tuple(e for letter, e in blocks if letter == "q")
    x_exponents = tuple(e for letter, e in blocks if letter == "x")
    if any(e != 2 for e in x_exponents[:-1]):
        return None
    if x_exponents[-1] not in (1, 2):
        return None
    if any(e < 2 for e in q_exponents[1:]):
        return None
    return TauForm(q_exponents, x_exponents[-1])


def find_tau(c_set: CSet) -> Word:
    """The lex-largest word of a nonempty C-set."""
    if c_set.is_empty:
        raise ValueError("the C-set is empty; there is no largest word")
    tau = max((occ.word for occ in c_set.occurrences),
              key=Word.lex_key)
    if c_set.algebra.system.nilpotency_degree == 3:
        assert tau_form_of(tau) is not None, f"largest C-word {tau} off-form"
    return tau


@dataclass(frozen=True)
class TauOccurrence:
    """One way the largest word arose from a support pair.

    form 1: type I without reduction (split after the r-th q-block);
    form 2: type I with the interface reduction, parameters a, b with
            a + b - 1 = i_r;
    form 3: type II, either splitting before an interior x-block
            ("interior") or with y = x at the very end ("terminal").
    """

    left: Word
    right: Word
    form: int
    r: int
    a: int | None = None
    b: int | None = None
    variant: str | None = None

    def describe(self) -> dict:
        data = {"left": str(self.left), "right": str(self.right),
                "form": self.form, "r": self.r}
        if self.a is not None:
            data["a"] = self.a
        if self.b is not None:
            data["b"] = self.b
        if self.variant is not None:
            data["variant"] = self.variant
        return data


@dataclass
class TauClassification:
    tau: Word
    occurrences: list[TauOccurrence]
    violations: list[dict]
    skipped_identity_pairs: list[tuple[Word, Word]]

    @property
    def reduced_occurrences(self) -> list[TauOccurrence]:
        """The form-2 and form-3 occurrences (at most one expected)."""
        return [occ for occ in self.occurrences if occ.form in (2, 3)]


def _q_block_count(word: Word) -> int:
    return sum(1 for letter, _ in word.blocks if letter == "q")


def _match_form1(w: Word, y: Word) -> TauOccurrence | None:
    # type I equals tau with no reduction: tau splits as w ++ y exactly at
    # a q-block/x-block boundary, so the only datum left is r
    if w.last_letter != "q" or y.first_letter != "x":
        return None
    return TauOccurrence(w, y, form=1, r=_q_block_count(w))


def _match_form2(w: Word, y: Word, tau: Word, form: TauForm) -> TauOccurrence | None:
    # type I with reduction: w = (tau prefix) q^a and y = x q^b (tau tail),
    # the seam deletes one q and one x, and a + b - 1 = i_r; maximality of
    # tau further forces b > 2, or b = 2 with some later group exceeding 2
    if w.last_letter != "q":
        return None
    a = w.blocks[-1][1]
    if len(y.blocks) < 2 or y.blocks[0] != ("x", 1) or y.blocks[1][0] != "q":
        return None
    b = y.blocks[1][1]
    r = _q_block_count(w)
    exponents = form.q_exponents
    if r > len(exponents) or a + b - 1 != exponents[r - 1]:
        return None
    rebuilt = w.blocks[:-1] + (("q", a + b - 1),) + y.blocks[2:]
    if rebuilt != tau.blocks:
        return None
    if not (b > 2 or (b == 2 and any(e > 2 for e in exponents[r:]))):
        return None
    return TauOccurrence(w, y, form=2, r=r, a=a, b=b)


def _match_form3(w: Word, y: Word, tau: Word, form: TauForm) -> TauOccurrence | None:
    # type II equals tau with no reduction: tau is literally w ++ qx ++ y;
    # either y = x closes the final x^2 ("terminal"), or y carries the rest
    # and every q-group after the split must be exactly q^2
    if w.last_letter != "q" or y.first_letter != "x":
        return None
    if w.letters() + ("q", "x") + y.letters() != tau.letters():
        return None
    r = _q_block_count(w)
    exponents = form.q_exponents
    if y == Word((("x", 1),)):
        if r != len(exponents):
            return None
        return TauOccurrence(w, y, form=3, r=r, variant="terminal")
    if r >= len(exponents):
        return None
    if any(e != 2 for e in exponents[r:]):
        return None
    return TauOccurrence(w, y, form=3, r=r, variant="interior")


def classify_tau_occurrences(left_terms, right_terms, tau,
                             algebra: Algebra) -> TauClassification:
    """Classify every way tau arises from the support pairs.

    ``tau`` must be the largest word of build_c_set(left_terms,
    right_terms); anything else raises.  Pairs involving the identity word
    are recorded as skipped rather than classified: the three-form
    statement concerns pairs with w != 1 and y != 1 (in the cancellation
    context the identity pairs are ruled out separately), so for
    standalone inputs the classifier states its restriction instead of
    guessing.
    """
    if algebra.system.nilpotency_degree != 3:
        raise ValueError("the tau classification is specific to n = 3")
    tau = _as_word(tau)
    c_set = build_c_set(left_terms, right_terms, algebra)
    if c_set.is_empty or find_tau(c_set) != tau:
        raise ValueError(f"{tau} is not the largest word of this C-set")
    form = tau_form_of(tau)
    system = algebra.system
    occurrences: list[TauOccurrence] = []
    violations: list[dict] = []
    skipped: list[tuple[Word, Word]] = []
    lefts = _normalize_side(left_terms, "left", algebra)
    rights = _normalize_side(right_terms, "right", algebra)
    for _, w in lefts:
        for _, y in rights:
            if w.is_identity or y.is_identity:
                if _pair_reaches(w, y, tau, system):
                    skipped.append((w, y))
                continue
            first = type_i_word(w, y, system)
            if first.result == tau:
                matched = (_match_form1(w, y) if first.steps == 0
                           else _match_form2(w, y, tau, form))
                if matched is None:
                    violations.append({"left": str(w), "right": str(y),
                                       "kind": "type-I", "steps": first.steps})
                else:
                    occurrences.append(matched)
            second = type_ii_word(w, y, system)
            if not second.is_zero and second.result == tau:
                matched = _match_form3(w, y, tau, form)
                if matched is None:
                    violations.append({"left": str(w), "right": str(y),
                                       "kind": "type-II", "steps": second.steps})
                else:
                    occurrences.append(matched)
    return TauClassification(tau, occurrences, violations, skipped)


def _pair_reaches(w: Word, y: Word, tau: Word, system: RewriteSystem) -> bool:
    if type_i_word(w, y, system).result == tau:
        return True
    return type_ii_word(w, y, system).result == tau


def check_tau_uniqueness(left_terms, right_terms,
                         algebra: Algebra | None = None) -> VerificationReport:
    """For one (L, R) family: classify all tau-occurrences and verify at
    most one of them is of the reduced kinds (form 2 or form 3)."""
    started = time.perf_counter()
    algebra = algebra or Algebra(xq_system(3), QQ)
    lefts = _normalize_side(left_terms, "left", algebra)
    rights = _normalize_side(right_terms, "right", algebra)
    parameters = {
        "left": [str(w) for _, w in lefts],
        "right": [str(y) for _, y in rights],
        "n": algebra.system.nilpotency_degree,
        "nonidentity_pairs_only": True,
    }
    c_set = build_c_set(lefts, rights, algebra)
    if c_set.is_empty:
        parameters["c_set_size"] = 0
        return finish_report("tau-unique", parameters, "pass", None, 0, started)
    tau = find_tau(c_set)
    classification = classify_tau_occurrences(lefts, rights, tau, algebra)
    parameters["tau"] = str(tau)
    parameters["skipped_identity_pairs"] = len(classification.skipped_identity_pairs)
    examined = len(lefts) * len(rights)
    witness = _uniqueness_witness(classification)
    status = "fail" if witness is not None else "pass"
    return finish_report("tau-unique", parameters, status, witness, examined, started)


def _uniqueness_witness(classification: TauClassification) -> dict | None:
    if classification.violations:
        return {"kind": "unclassifiable-occurrence",
                "tau": str(classification.tau),
                "violations": classification.violations}
    reduced = classification.reduced_occurrences
    if len(reduced) > 1:
        return {"kind": "reduced-occurrence-multiplicity",
                "tau": str(classification.tau),
                "occurrences": [occ.describe() for occ in reduced]}
    return None


def _iter_families(exhaustive_len: int, random_len: int, random_trials: int,
                   seed: int, system: RewriteSystem):
    """All subset families at the exhaustive bound, then seeded random
    families drawn from the larger pools."""
    lefts = left_shape_words(exhaustive_len, system)
    rights = right_shape_words(exhaustive_len, system)
    for l_mask in range(1 << len(lefts)):
        chosen_left = [w for i, w in enumerate(lefts) if l_mask >> i & 1]
        for r_mask in range(1 << len(rights)):
            chosen_right = [y for i, y in enumerate(rights) if r_mask >> i & 1]
            yield chosen_left, chosen_right
    left_pool = left_shape_words(random_len, system)
    right_pool = right_shape_words(random_len, system)
    rng = random.Random(seed)
    for _ in range(random_trials):
        left_size = rng.randint(1, min(5, len(left_pool)))
        right_size = rng.randint(1, min(5, len(right_pool)))
        yield rng.sample(left_pool, left_size), rng.sample(right_pool, right_size)


def _sweep_tau_families(check: str, exhaustive_len: int, random_len: int,
                        random_trials: int, seed: int) -> VerificationReport:
    started = time.perf_counter()
    algebra = Algebra(xq_system(3), QQ)
    parameters = {
        "exhaustive_len": exhaustive_len,
        "random_len": random_len,
        "random_trials": random_trials,
        "seed": seed,
        "n": 3,
    }
    examined = 0
    witness = None
    for left_words, right_words in _iter_families(
            exhaustive_len, random_len, random_trials, seed, algebra.system):
        examined += 1
        c_set = build_c_set(left_words, right_words, algebra)
        if c_set.is_empty:
            continue
        tau = find_tau(c_set)
        classification = classify_tau_occurrences(
            left_words, right_words, tau, algebra)
        if check == "tau-forms":
            if classification.violations:
                witness = {"kind": "unclassifiable-occurrence",
                           "left": [str(w) for w in left_words],
                           "right": [str(y) for y in right_words],
                           "tau": str(tau),
                           "violations": classification.violations}
        else:
            witness = _uniqueness_witness(classification)
            if witness is not None:
                witness["left"] = [str(w) for w in left_words]
                witness["right"] = [str(y) for y in right_words]
        if witness is not None:
            break
    status = "fail" if witness is not None else "pass"
    return finish_report(check, parameters, status, witness, examined, started)


def check_tau_forms_families(exhaustive_len: int = 3, random_len: int = 6,
                             random_trials: int = 10_000,
                             seed: int = 0) -> VerificationReport:
    """Every tau-occurrence across the families matches one of the three
    forms, parameters included."""
    return _sweep_tau_families("tau-forms", exhaustive_len, random_len,
                               random_trials, seed)


def check_tau_uniqueness_families(exhaustive_len: int = 3, random_len: int = 6,
                                  random_trials: int = 10_000,
                                  seed: int = 0) -> VerificationReport:
    """Across the families, form 2 and form 3 occurrences number at most
    one in total."""
    return _sweep_tau_families("tau-unique", exhaustive_len, random_len,
                               random_trials, seed)


def _vector_from_index(index: int, pool, length: int) -> tuple:
    digits = []
    base = len(pool)
    for _ in range(length):
        index, digit = divmod(index, base)
        digits.append(pool[digit])
    return tuple(reversed(digits))


def _unit_regular_tables(n: int, field, max_word_len: int):
    system = xq_system(n)
    algebra = Algebra(system, field)
    x = algebra.gen("x")
    q = algebra.gen("q")
    left_frame = algebra.one - x * q
    right_frame = algebra.one - q * x
    lefts = left_shape_words(max_word_len, system)
    rights = right_shape_words(max_word_len, system)
    alpha_units = [left_frame * algebra.word(w) * right_frame for w in lefts]
    beta_units = [right_frame * algebra.word(y) * left_frame for y in rights]
    products = [[a_unit * b_unit for b_unit in beta_units]
                for a_unit in alpha_units]
    return algebra, left_frame, lefts, rights, products


def _scan_alpha_range(n: int, field, max_word_len: int, start: int,
                      stop: int) -> int | None:
    """Scan alpha-coefficient vectors with indices in [start, stop); return
    the global candidate index of the first witness, or None."""
    algebra, target, lefts, rights, products = _unit_regular_tables(
        n, field, max_word_len)
    pool, _ = field.coefficient_pool()
    beta_count = len(pool) ** len(rights)
    for alpha_index in range(start, stop):
        alpha_vec = _vector_from_index(alpha_index, pool, len(lefts))
        rows = [linear_combination(
                    algebra,
                    ((alpha_vec[i], products[i][j]) for i in range(len(lefts))))
                for j in range(len(rights))]
        for beta_index, beta_vec in enumerate(
                itertools.product(pool, repeat=len(rights))):
            candidate = linear_combination(algebra, zip(beta_vec, rows))
            if candidate == target:
                return alpha_index * beta_count + beta_index
    return None


def search_unit_regular_witness(max_word_len: int = 3, field=GF2, n: int = 3,
                                workers: int = 1) -> VerificationReport:
    """Exhaust every (alpha, beta) with supports drawn from the shape words
    of length <= max_word_len and coefficients in the field, looking for
    alpha * beta = 1 - xq.

    Over a finite field the enumeration is complete and the report status
    is "exhausted" when nothing is found; over the rationals only a small
    coefficient grid is scanned and the parameters say so.  A hit would be
    a counterexample, reported as a failure with the witness attached.
    """
    if max_word_len < 0:
        raise ValueError("max_word_len must be nonnegative")
    started = time.perf_counter()
    algebra, target, lefts, rights, products = _unit_regular_tables(
        n, field, max_word_len)
    pool, pool_exhaustive = field.coefficient_pool()
    alpha_count = len(pool) ** len(lefts)
    beta_count = len(pool) ** len(rights)
    total = alpha_count * beta_count
    parameters = {
        "max_word_len": max_word_len,
        "field": field.name,
        "n": n,
        "left_words": [str(w) for w in lefts],
        "right_words": [str(y) for y in rights],
        "coefficient_pool_size": len(pool),
        "pool_exhaustive": pool_exhaustive,
        "analytic_candidate_count": total,
        "workers": workers,
    }
    witness_index = None
    if workers <= 1 or alpha_count < 2 * workers:
        witness_index = _scan_alpha_range(n, field, max_word_len, 0, alpha_count)
    else:
        step = -(-alpha_count // workers)
        blocks = [(start, min(start + step, alpha_count))
                  for start in range(0, alpha_count, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool_executor:
            results = list(pool_executor.map(
                _scan_alpha_block,
                [(n, field, max_word_len, start, stop) for start, stop in blocks]))
        hits = [index for index in results if index is not None]
        witness_index = min(hits) if hits else None
    if witness_index is None:
        status = "exhausted"
        witness = None
        examined = total
    else:
        status = "fail"
        alpha_index, beta_index = divmod(witness_index, beta_count)
        alpha_vec = _vector_from_index(alpha_index, pool, len(lefts))
        beta_vec = _vector_from_index(beta_index, pool, len(rights))
        witness = {
            "alpha_coefficients": {str(w): field.to_str(c)
                                   for w, c in zip(lefts, alpha_vec)},
            "beta_coefficients": {str(y): field.to_str(c)
                                  for y, c in zip(rights, beta_vec)},
        }
        examined = witness_index + 1
    return finish_report("unit-regular-search", parameters, status, witness,
                         examined, started)


def _scan_alpha_block(args) -> int | None:
    return _scan_alpha_range(*args)


def check_regularity_identities(n: int = 3, field=QQ) -> VerificationReport:
    """x q x = x, q x q = q, x^n = 0, x^(n-1) != 0, and the inner-inverse
    upgrade (q x q) x (q x q) = q x q."""
    started = time.perf_counter()
    algebra = Algebra(xq_system(n), field)
    x = algebra.gen("x")
    q = algebra.gen("q")
    checks = [
        ("xqx = x", x * q * x == x),
        ("qxq = q", q * x * q == q),
        (f"x^{n} = 0", x ** n == algebra.zero),
        (f"x^{n - 1} != 0", x ** (n - 1) != algebra.zero),
        ("(qxq)x(qxq) = qxq", (q * x * q) * x * (q * x * q) == q * x * q),
    ]
    parameters = {"n": n, "field": field.name}
    witness = None
    for name, ok in checks:
        if not ok:
            witness = {"identity": name}
            break
    status = "fail" if witness is not None else "pass"
    return finish_report("regularity", parameters, status, witness,
                         len(checks), started)


def check_separativity_identities(field=QQ) -> VerificationReport:
    """The two full-idempotent decompositions of 1 (n = 3):
    (1-xq) + x(1-xq)q + x^2(1-xq)q^2 = 1 = (1-qx) + q(1-qx)x + q^2(1-qx)x^2.
    """
    started = time.perf_counter()
    algebra = Algebra(xq_system(3), field)
    x = algebra.gen("x")
    q = algebra.gen("q")
    one = algebra.one
    left_frame = one - x * q
    right_frame = one - q * x
    checks = [
        ("(1-xq) + x(1-xq)q + x^2(1-xq)q^2 = 1",
         left_frame + x * left_frame * q + x * x * left_frame * q * q == one),
        ("(1-qx) + q(1-qx)x + q^2(1-qx)x^2 = 1",
         right_frame + q * right_frame * x + q * q * right_frame * x * x == one),
    ]
    parameters = {"n": 3, "field": field.name}
    witness = None
    for name, ok in checks:
        if not ok:
            witness = {"identity": name}
            break
    status = "fail" if witness is not None else "pass"
    return finish_report("separativity", parameters, status, witness,
                         len(checks), started)


def check_primeness_bounded(max_len: int = 6, n: int = 3, field=QQ,
                            random_trials: int = 300,
                            seed: int = 0) -> VerificationReport:
    """No bounded nonzero element is killed on both sides by the
    generators: qz != 0 or xz != 0, and zq != 0 or zx != 0.

    Single-word supports are checked exhaustively, multi-word supports by
    seeded random sampling.  Needs n >= 3: left-multiplying a word that
    starts in x^(n-1) by q involves no reduction then.
    """
    if n < 3:
        raise ValueError("the bounded primeness check needs n >= 3")
    started = time.perf_counter()
    algebra = Algebra(xq_system(n), field)
    x = algebra.gen("x")
    q = algebra.gen("q")
    parameters = {"max_len": max_len, "n": n, "field": field.name,
                  "random_trials": random_trials, "seed": seed}
    witness = None
    examined = 0

    def survives(element: AlgebraElement) -> bool:
        left_alive = not (q * element).is_zero or not (x * element).is_zero
        right_alive = not (element * q).is_zero or not (element * x).is_zero
        return left_alive and right_alive

    for word in algebra.basis_words(max_len):
        if word.is_identity:
            continue
        examined += 1
        if not survives(algebra.word(word)):
            witness = {"element": str(word), "kind": "single-word"}
            break
    if witness is None:
        rng = random.Random(seed)
        for _ in range(random_trials):
            examined += 1
            element = algebra.random_element(rng, max_word_len=max_len,
                                             max_terms=4)
            if not survives(element):
                witness = {"element": str(element), "kind": "random"}
                break
    status = "fail" if witness is not None else "pass"
    return finish_report("primeness", parameters, status, witness,
                         examined, started)


def _ends_with(word: Word, suffix: tuple[str, ...]) -> bool:
    letters = word.letters()
    return len(letters) >= len(suffix) and letters[-len(suffix):] == suffix


def _begins_with(word: Word, prefix: tuple[str, ...]) -> bool:
    letters = word.letters()
    return len(letters) >= len(prefix) and letters[:len(prefix)] == prefix


def check_types_lemma(max_len: int = 7) -> VerificationReport:
    """The four clauses describing type I and II words, over all shape
    pairs with |w|, |y| <= max_len (n = 3):

    1. wy = 0 exactly when w ends in x^2 q and y begins in x^2;
    2. wqxy = 0 exactly when y begins in x^2;
    3. nonzero wy reduces exactly when (w ends in xq and y begins in x) or
       (w ends in q and y begins in xq), and the reduction deletes the
       seam letters q and x;
    4. nonzero wqxy never reduces.
    """
    started = time.perf_counter()
    system = xq_system(3)
    lefts = left_shape_words(max_len, system)
    rights = right_shape_words(max_len, system)
    parameters = {"max_len": max_len, "n": 3,
                  "left_pool": len(lefts), "right_pool": len(rights)}
    examined = 0
    witness = None
    for w in lefts:
        for y in rights:
            examined += 1
            problem = _types_clause_violation(w, y, system)
            if problem is not None:
                witness = {"left": str(w), "right": str(y), "clause": problem}
                break
        if witness is not None:
            break
    status = "fail" if witness is not None else "pass"
    return finish_report("types-lemma", parameters, status, witness,
                         examined, started)


def _types_clause_violation(w: Word, y: Word, system: RewriteSystem) -> str | None:
    first = type_i_word(w, y, system)
    zero_expected = _ends_with(w, ("x", "x", "q")) and _begins_with(y, ("x", "x"))
    if first.is_zero != zero_expected:
        return "type-I zero condition"
    if not first.is_zero:
        reduction_expected = (
            (_ends_with(w, ("x", "q")) and _begins_with(y, ("x",)))
            or (w.last_letter == "q" and _begins_with(y, ("x", "q"))))
        if (first.steps > 0) != reduction_expected:
            return "type-I reduction condition"
        if first.steps > 0:
            expected = Word.from_letters(w.letters()[:-1] + y.letters()[1:])
            if first.result != expected:
                return "type-I reduction shape"
    second = type_ii_word(w, y, system)
    if second.is_zero != _begins_with(y, ("x", "x")):
        return "type-II zero condition"
    if not second.is_zero and second.steps > 0:
        return "type-II never reduces"
    return None


def closing_argument_margin(w: Word, tau: Word,
                            system: RewriteSystem) -> bool:
    """For a form-1 occurrence tau = w*y, the type II word from (w, 1) is
    strictly larger; this is what stops tau from cancelling."""
    competitor = type_ii_word(w, IDENTITY_WORD, system)
    return (not competitor.is_zero
            and lex_compare(competitor.result, tau) == GREATER)
