"""String rewriting systems for the three algebras and a confluence checker.

Words are tuples of generator symbols.  Each rule rewrites a word to a
linear combination of strictly smaller words in the degree-lexicographic
order with ``K < Kb < L < Lb < E < F`` (``k < kinv < e < f``), so
reduction terminates.  The irreducible words are exactly

    C E^j F^k,   C in {1, K^a, Kb^a, K Kb, L^a, Lb^a}   (extended)
    C e^j f^k,   C in {1, k^a, kinv^a}                  (U_q(sl2))

and they are read off as PBW monomials by :func:`irreducible_to_element`.
``L Lb`` is eliminated through ``K Kb + L Lb = 1`` so ``Q`` appears as
``1 - P``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import KSIDE, LSIDE, NormalMonomial, Presentation, _acc, get_algebra
from .report import Report
from .scalars import GENERIC

EXTENDED_ORDER = {"K": 0, "Kb": 1, "L": 2, "Lb": 3, "E": 4, "F": 5}
CLASSICAL_ORDER = {"k": 0, "kinv": 1, "e": 2, "f": 3}


@dataclass(frozen=True)
class Rule:
    lhs: tuple
    rhs: tuple  # ((coeff, word), ...)

    def __str__(self):
        from .printing import _join

        terms = []
        for c, w in self.rhs:
            body = "*".join(w) if w else "1"
            terms.append(body if c.is_one() else ("-" + body if (-c).is_one() else f"({c})*{body}"))
        return f"{'*'.join(self.lhs)} -> {_join(terms)}"


def _w(text):
    return tuple(text.split()) if text else ()


def build_rules(presentation, field=GENERIC):
    presentation = Presentation.parse(presentation)
    q = field.q
    qi = q.inverse()
    one = field.one
    c = (q - qi).inverse()
    q2, qm2 = q * q, qi * qi
    raw = []

    def rule(lhs, *rhs):
        raw.append(Rule(_w(lhs), tuple((field.scalar(k), _w(w)) for k, w in rhs)))

    if presentation is Presentation.UQSL2:
        rule("k kinv", (one, ""))
        rule("kinv k", (one, ""))
        rule("e k", (qm2, "k e"))
        rule("e kinv", (q2, "kinv e"))
        rule("f k", (q2, "k f"))
        rule("f kinv", (qm2, "kinv f"))
        rule("f e", (one, "e f"), (-c, "k"), (c, "kinv"))
        return tuple(raw)

    # Cartan block: K Kb is the idempotent P, L Lb = 1 - P.
    rule("Kb K", (one, "K Kb"))
    rule("K Kb K", (one, "K"))
    rule("Kb K Kb", (one, "Kb"))
    rule("K K Kb", (one, "K"))
    rule("K Kb Kb", (one, "Kb"))
    rule("L Lb", (one, ""), (-one, "K Kb"))
    rule("Lb L", (one, ""), (-one, "K Kb"))
    for a in ("K", "Kb"):
        for b in ("L", "Lb"):
            rule(f"{a} {b}")
            rule(f"{b} {a}")
    if presentation is Presentation.NORM:
        swap = {"K": "K", "Kb": "Kb", "L": "L", "Lb": "Lb"}
    else:
        swap = {"K": "L", "Kb": "Lb", "L": "K", "Lb": "Kb"}
    for h, e_fac, f_fac in (("K", qm2, q2), ("L", qm2, q2), ("Kb", q2, qm2), ("Lb", q2, qm2)):
        # X E = q^2 E X'  gives  E X' = q^-2 X E, i.e. E h = q^-2 swap(h) E.
        rule(f"E {h}", (e_fac, f"{swap[h]} E"))
        rule(f"F {h}", (f_fac, f"{swap[h]} F"))
    rule("F E", (one, "E F"), (-c, "K"), (-c, "L"), (c, "Kb"), (c, "Lb"))
    return tuple(raw)


class RewritingSystem:
    def __init__(self, presentation, field=GENERIC):
        self.presentation = Presentation.parse(presentation)
        self.field = field
        self.rules = build_rules(self.presentation, field)
        self._by_first = {}
        for r in self.rules:
            self._by_first.setdefault(r.lhs[0], []).append(r)
        self._memo = {}
        order = CLASSICAL_ORDER if self.presentation is Presentation.UQSL2 else EXTENDED_ORDER
        self.order = order

    def sort_key(self, word):
        return (len(word), tuple(self.order[s] for s in word))

    def find_redex(self, word):
        """Leftmost (position, rule) whose left side occurs in ``word``."""
        for i, s in enumerate(word):
            for r in self._by_first.get(s, ()):
                n = len(r.lhs)
                if word[i : i + n] == r.lhs:
                    return i, r
        return None

    def rewrite_once(self, word, pos, rule):
        """Apply ``rule`` at ``pos``: a dict word -> coefficient."""
        out = {}
        pre, post = word[:pos], word[pos + len(rule.lhs) :]
        for c, w in rule.rhs:
            _acc(out, pre + w + post, c)
        return out

    def reduce(self, word):
        """Normal form of ``word`` as a dict of irreducible words."""
        word = tuple(word)
        hit = self._memo.get(word)
        if hit is not None:
            return hit
        if len(word) <= 1:
            out = {word: self.field.one}
        else:
            out = {}
            last = word[-1:]
            for u, cu in self.reduce(word[:-1]).items():
                w = u + last
                red = self.find_redex(w)
                if red is None:
                    _acc(out, w, cu)
                    continue
                for v, cv in self.rewrite_once(w, *red).items():
                    for x, cx in self._reduce_full(v).items():
                        _acc(out, x, cu * cv * cx)
        self._memo[word] = out
        return out

    def _reduce_full(self, word):
        red = self.find_redex(word)
        if red is None:
            return {word: self.field.one}
        return self.reduce_combination(self.rewrite_once(word, *red))

    def reduce_combination(self, combo):
        out = {}
        for w, c in combo.items():
            for x, cx in self.reduce(w).items():
                _acc(out, x, c * cx)
        return out

    def is_irreducible(self, word):
        return self.find_redex(tuple(word)) is None

    # -- ambiguities --------------------------------------------------------
    def critical_words(self, max_len):
        """Overlap and inclusion ambiguities of length <= ``max_len``.

        Each entry is ``(word, (pos1, rule1), (pos2, rule2))``.
        """
        out = []
        rules = self.rules
        for r1 in rules:
            for r2 in rules:
                a, b = r1.lhs, r2.lhs
                # overlap: proper suffix of a equals proper prefix of b
                for t in range(1, min(len(a), len(b))):
                    if a[-t:] == b[:t]:
                        w = a + b[t:]
                        if len(w) <= max_len:
                            out.append((w, (0, r1), (len(a) - t, r2)))
                # inclusion: b occurs inside a (distinct rules)
                if r1 is not r2 and len(b) <= len(a):
                    for p in range(len(a) - len(b) + 1):
                        if a[p : p + len(b)] == b and len(a) <= max_len:
                            out.append((a, (0, r1), (p, r2)))
        return out

    def check_confluence(self, max_overlap_len=6):
        report = Report(
            "confluence",
            self.presentation.value,
            {"max_overlap_len": max_overlap_len, "rules": len(self.rules)},
        )
        seen = set()
        for w, (p1, r1), (p2, r2) in self.critical_words(max_overlap_len):
            key = (w, p1, r1.lhs, p2, r2.lhs)
            if key in seen:
                continue
            seen.add(key)
            left = self.reduce_combination(self.rewrite_once(w, p1, r1))
            right = self.reduce_combination(self.rewrite_once(w, p2, r2))
            case = f"{'*'.join(w)} [{'*'.join(r1.lhs)}@{p1} | {'*'.join(r2.lhs)}@{p2}]"
            witness = None
            if left != right:
                diff = dict(left)
                for x, c in right.items():
                    _acc(diff, x, -c)
                witness = " + ".join(f"({c})*{'*'.join(x) or '1'}" for x, c in sorted(diff.items()))
            report.add(case, left == right, witness)
        report.note(f"{len(self.rules)} rules, {len(report.cases)} ambiguities examined")
        return report


_SYSTEMS = {}


def rewriting_system(presentation, field=GENERIC):
    presentation = Presentation.parse(presentation)
    key = (presentation, field.mode, field.n)
    sys_ = _SYSTEMS.get(key)
    if sys_ is None:
        sys_ = _SYSTEMS[key] = RewritingSystem(presentation, field)
    return sys_


def irreducible_to_element(word, algebra):
    """Read an irreducible word as an Element of ``algebra``."""
    word = tuple(word)
    i = 0
    cart = []
    while i < len(word) and word[i] not in ("E", "F", "e", "f"):
        cart.append(word[i])
        i += 1
    j = k = 0
    while i < len(word) and word[i] in ("E", "e"):
        j += 1
        i += 1
    while i < len(word) and word[i] in ("F", "f"):
        k += 1
        i += 1
    if i != len(word):
        raise ValueError(f"word {word} is not irreducible")
    if algebra.presentation is Presentation.UQSL2:
        z = cart.count("k") - cart.count("kinv")
        if cart and len(set(cart)) > 1:
            raise ValueError(f"word {word} is not irreducible")
        return algebra.monomial(None, z, j, k)
    if not cart:
        return algebra.element([(NormalMonomial(s, 0, j, k), 1) for s in (KSIDE, LSIDE)])
    if cart == ["K", "Kb"]:
        return algebra.monomial(KSIDE, 0, j, k)
    kinds = set(cart)
    if len(kinds) != 1:
        raise ValueError(f"word {word} is not irreducible")
    sym = cart[0]
    side = KSIDE if sym in ("K", "Kb") else LSIDE
    z = len(cart) if sym in ("K", "L") else -len(cart)
    return algebra.monomial(side, z, j, k)


def rewrite_normal_form(word, algebra=None, presentation=None):
    """Normal form of ``word`` computed by rewriting alone."""
    if algebra is None:
        algebra = get_algebra(presentation)
    algebra.check_word(word)
    word = tuple(s for s in word if s != "1")
    system = rewriting_system(algebra.presentation, algebra.field)
    out = algebra.zero()
    for w, c in system.reduce(word).items():
        out = out + irreducible_to_element(w, algebra).scale(c)
    return out


def check_confluence(presentation, max_overlap_len=6):
    return rewriting_system(presentation).check_confluence(max_overlap_len)
