"""Exact arithmetic in Q[q] and the rational-function field Q(q).

Scalars are :class:`fractions.Fraction`.  :class:`QPoly` is a dense
univariate polynomial with rational coefficients; :class:`QRat` is a reduced
quotient of two of them, kept in canonical form (coprime numerator and
denominator, monic denominator) so that field equality is plain component
comparison.

Internally a :class:`QRat` is stored as ``scale * N / D`` where ``N`` and
``D`` are primitive integer polynomials with positive leading coefficients.
All gcd work happens on those integer polynomials: a heuristic gcd (evaluate
at a large integer, take the integer gcd, read the digits back) verified by
exact division, with a primitive remainder sequence as fallback.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

from .errors import DomainError, PoleError

BigRational = Fraction

__all__ = [
    "BigRational",
    "QPoly",
    "QRat",
    "as_qrat",
    "qrat_add",
    "qrat_sub",
    "qrat_mul",
    "qrat_div",
    "qrat_eval",
    "qrat_eval_complex",
    "format_rational",
    "parse_rational",
]

_KRONECKER_CUTOFF = 24
_HEU_GCD_ATTEMPTS = 6


# --------------------------------------------------------------------------
# integer polynomial kernel (lists of int, lowest degree first)


def _zstrip(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _zcontent(f):
    c = 0
    for a in f:
        c = gcd(c, a)
        if c == 1:
            break
    return c


def _zprimitive(f):
    """Return ``(content, primitive part)`` with a positive leading coefficient."""
    if not f:
        return 0, []
    c = _zcontent(f)
    if f[-1] < 0:
        c = -c
    if c == 1:
        return 1, list(f)
    return c, [a // c for a in f]


def _zadd(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, b in enumerate(g):
        out[i] += b
    return _zstrip(out)


def _zscale(f, c):
    if c == 0:
        return []
    return [a * c for a in f]


def _pack(f, k):
    v = 0
    for a in reversed(f):
        v = (v << k) + a
    return v


def _unpack(v, k, n):
    mask = (1 << k) - 1
    half = 1 << (k - 1)
    full = 1 << k
    out = []
    for _ in range(n):
        r = v & mask
        if r >= half:
            r -= full
        out.append(r)
        v = (v - r) >> k
    return out, v


def _zmul(f, g):
    if not f or not g:
        return []
    if len(f) < _KRONECKER_CUTOFF or len(g) < _KRONECKER_CUTOFF:
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    out[i + j] += a * b
        return _zstrip(out)
    bound = max(map(abs, f)) * max(map(abs, g)) * min(len(f), len(g))
    k = bound.bit_length() + 2
    out, _ = _unpack(_pack(f, k) * _pack(g, k), k, len(f) + len(g) - 1)
    return _zstrip(out)


def _zeval(f, x):
    v = 0
    for a in reversed(f):
        v = v * x + a
    return v


def _zdiv_exact(f, g):
    """Quotient ``f / g`` in Z[q] if ``g`` divides ``f`` exactly, else ``None``."""
    if not f:
        return []
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return None
    if dg == 0:
        c = g[0]
        if any(a % c for a in f):
            return None
        return [a // c for a in f]
    dq = df - dg
    # any integer factor of f has sup-norm below 2^deg * ||f||_1
    norm = sum(map(abs, f))
    k = max(norm.bit_length() + dq, max(map(abs, g)).bit_length()) + 3
    F, G = _pack(f, k), _pack(g, k)
    Q, R = divmod(F, G)
    if R:
        return None
    q, rest = _unpack(Q, k, dq + 1)
    if rest or _zmul(q, g) != f:
        return None
    return q


def _zprem(f, g):
    """Pseudo-remainder of ``f`` by ``g`` (both nonzero, deg f >= deg g)."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while r and len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        lr = r[-1]
        r = [a * lc for a in r]
        for i, b in enumerate(g):
            r[i + shift] -= lr * b
        _zstrip(r)
    return r


def _zgcd_prs(f, g):
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _zprem(f, g)
        f, g = g, _zprimitive(r)[1]
    return _zprimitive(f)[1]


def _zinterpolate(h, x):
    half = x // 2
    out = []
    while h:
        d = h % x
        if d > half:
            d -= x
        out.append(d)
        h = (h - d) // x
    return out


def _zgcd(f, g):
    """Primitive gcd (positive leading coefficient) of two primitive polynomials."""
    if not f:
        return list(g)
    if not g:
        return list(f)
    if len(f) == 1 or len(g) == 1:
        return [1]
    if f == g:
        return list(f)
    fn, gn = max(map(abs, f)), max(map(abs, g))
    b = 2 * min(fn, gn) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(_HEU_GCD_ATTEMPTS):
        ff, gg = _zeval(f, x), _zeval(g, x)
        if ff and gg:
            h = gcd(ff, gg)
            cand = _zprimitive(_zinterpolate(h, x))[1]
            if cand and _zdiv_exact(f, cand) is not None and _zdiv_exact(g, cand) is not None:
                return cand
            for whole, part, other in ((f, ff // h, g), (g, gg // h, f)):
                cof = _zinterpolate(part, x)
                if not cof:
                    continue
                cand = _zdiv_exact(whole, cof)
                if cand:
                    cand = _zprimitive(cand)[1]
                    if _zdiv_exact(other, cand) is not None:
                        return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return _zgcd_prs(f, g)


def _to_zpoly(coeffs):
    """Split rational coefficients into ``(scale, primitive integer polynomial)``."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return Fraction(0), []
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in coeffs]
    content, prim = _zprimitive(ints)
    return Fraction(content, den), prim


# --------------------------------------------------------------------------
# rational scalars


def parse_rational(text):
    """Parse ``"P/Q"`` or ``"P"`` into an exact rational."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an exact rational: {text!r}") from exc


def format_rational(value):
    """Machine form of a rational: always ``"num/den"``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


# --------------------------------------------------------------------------
# polynomials


def _monomial_text(k):
    return "q" if k == 1 else f"q^{k}"


class QPoly:
    """Dense polynomial in ``q`` with rational coefficients (lowest degree first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def _from_ints(cls, ints, scale=1):
        p = cls.__new__(cls)
        if scale == 1:
            p.coeffs = tuple(Fraction(a) for a in ints)
        else:
            p.coeffs = tuple(scale * a for a in ints)
        return p

    @property
    def degree(self):
        """Degree in ``q``; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Rational)):
            return QPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        p = QPoly.__new__(QPoly)
        p.coeffs = tuple(-c for c in self.coeffs)
        return p

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly()
        s1, z1 = _to_zpoly(self.coeffs)
        s2, z2 = _to_zpoly(other.coeffs)
        return QPoly._from_ints(_zmul(z1, z2), s1 * s2)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise DomainError("QPoly powers must be nonnegative integers")
        out, base = QPoly((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            raise DomainError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = other.degree
        lc = other.leading
        quot = [Fraction(0)] * max(len(rem) - dg, 0)
        while len(rem) - 1 >= dg and rem:
            shift = len(rem) - 1 - dg
            c = rem[-1] / lc
            quot[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[i + shift] -= c * b
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return QPoly(quot), QPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        """True if ``self`` divides ``other`` in Q[q]."""
        return (divmod(other, self)[1]).is_zero()

    def __call__(self, v):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc if self.coeffs else Fraction(0)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __repr__(self):
        return f"QPoly({self.human()!r})"

    def human(self):
        """Render as e.g. ``"q^2 - 1/2*q + 3"`` (decreasing degree)."""
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = _monomial_text(k)
            else:
                body = f"{mag}*{_monomial_text(k)}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) if parts else "0"

    def latex(self):
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if mag.denominator == 1:
                coeff = str(mag.numerator)
            else:
                coeff = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{{{k}}}")
            if k == 0:
                body = coeff
            elif mag == 1:
                body = mono
            else:
                body = coeff + " " + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) if parts else "0"

    def to_json(self):
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(parse_rational(c) for c in data)


# --------------------------------------------------------------------------
# rational functions


def _make(scale, n, d, reduce=True):
    """Build a canonical QRat from ``scale * n / d`` (integer polynomials)."""
    if not d:
        raise DomainError("zero denominator")
    if scale == 0 or not n:
        return QRat._zero()
    cn, n = _zprimitive(n)
    cd, d = _zprimitive(d)
    scale = Fraction(scale) * Fraction(cn, cd)
    if reduce and len(n) > 1 and len(d) > 1:
        g = _zgcd(n, d)
        if len(g) > 1:
            n = _zdiv_exact(n, g)
            d = _zdiv_exact(d, g)
    r = QRat.__new__(QRat)
    r._scale, r._n, r._d = scale, tuple(n), tuple(d)
    r._num = r._den = None
    return r


class QRat:
    """Element of Q(q) in canonical form.

    ``QRat(num, den)`` accepts polynomials, integers or rationals for either
    argument.  ``num`` and ``den`` of the result are coprime and ``den`` is
    monic, so ``a == b`` is field equality.
    """

    __slots__ = ("_scale", "_n", "_d", "_num", "_den")

    def __init__(self, num=0, den=1):
        num = num if isinstance(num, QPoly) else QPoly((num,))
        den = den if isinstance(den, QPoly) else QPoly((den,))
        if den.is_zero():
            raise DomainError("QRat with zero denominator")
        sn, zn = _to_zpoly(num.coeffs)
        sd, zd = _to_zpoly(den.coeffs)
        r = _make(sn / sd, zn, zd) if zn else QRat._zero()
        self._scale, self._n, self._d = r._scale, r._n, r._d
        self._num = self._den = None

    @classmethod
    def _zero(cls):
        r = cls.__new__(cls)
        r._scale, r._n, r._d = Fraction(0), (), (1,)
        r._num = r._den = None
        return r

    @classmethod
    def q(cls):
        """The indeterminate itself."""
        return cls(QPoly((0, 1)))

    # canonical components -------------------------------------------------

    @property
    def num(self):
        if self._num is None:
            self._num = QPoly._from_ints(self._n, self._scale / self._d[-1])
        return self._num

    @property
    def den(self):
        if self._den is None:
            self._den = QPoly._from_ints(self._d, Fraction(1, self._d[-1]))
        return self._den

    def is_zero(self):
        return not self._n

    def __bool__(self):
        return bool(self._n)

    def is_polynomial(self):
        return len(self._d) == 1

    def denominator_vanishes_at(self, v):
        return _zeval_fraction(self._d, Fraction(v)) == 0

    # arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = as_qrat(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if not self._n:
            return other
        if not other._n:
            return self
        s1, s2 = self._scale, other._scale
        d1, d2 = list(self._d), list(other._d)
        if d1 == d2:
            g, a, b = d1, [1], [1]
        else:
            g = _zgcd(d1, d2)
            a = _zdiv_exact(d1, g)
            b = _zdiv_exact(d2, g)
        m = s1.denominator * s2.denominator
        t1 = _zscale(_zmul(list(self._n), b), s1.numerator * s2.denominator)
        t2 = _zscale(_zmul(list(other._n), a), s2.numerator * s1.denominator)
        n = _zadd(t1, t2)
        if not n:
            return QRat._zero()
        cn, n = _zprimitive(n)
        # only common factors with g can survive (Henrici)
        if len(g) > 1 and len(n) > 1:
            h = _zgcd(n, g)
            if len(h) > 1:
                n = _zdiv_exact(n, h)
                g = _zdiv_exact(g, h)
        d = _zmul(_zmul(g, a), b)
        return _make(Fraction(cn, m), n, d, reduce=False)

    __radd__ = __add__

    def __neg__(self):
        r = QRat.__new__(QRat)
        r._scale, r._n, r._d = -self._scale, self._n, self._d
        r._num = r._den = None
        return r

    def __sub__(self, other):
        other = as_qrat(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = as_qrat(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if not self._n or not other._n:
            return QRat._zero()
        n1, d1, n2, d2 = list(self._n), list(self._d), list(other._n), list(other._d)
        g1 = _zgcd(n1, d2)
        if len(g1) > 1:
            n1, d2 = _zdiv_exact(n1, g1), _zdiv_exact(d2, g1)
        g2 = _zgcd(n2, d1)
        if len(g2) > 1:
            n2, d1 = _zdiv_exact(n2, g2), _zdiv_exact(d1, g2)
        return _make(self._scale * other._scale, _zmul(n1, n2), _zmul(d1, d2), reduce=False)

    __rmul__ = __mul__

    def inverse(self):
        if not self._n:
            raise DomainError("division by zero QRat")
        return _make(1 / self._scale, list(self._d), list(self._n), reduce=False)

    def __truediv__(self, other):
        other = as_qrat(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_qrat(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            raise DomainError("QRat powers must be integers")
        if k < 0:
            return self.inverse() ** (-k)
        n, d = [1], [1]
        bn, bd = list(self._n), list(self._d)
        e = k
        while e:
            if e & 1:
                n, d = _zmul(n, bn), _zmul(d, bd)
            bn, bd = _zmul(bn, bn), _zmul(bd, bd)
            e >>= 1
        if k and not self._n:
            return QRat._zero()
        return _make(self._scale**k, n, d, reduce=False)

    # comparison ----------------------------------------------------------

    def __eq__(self, other):
        other = as_qrat(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return (self._scale, self._n, self._d) == (other._scale, other._n, other._d)

    def __hash__(self):
        return hash(("QRat", self._scale, self._n, self._d))

    # evaluation and rendering -------------------------------------------

    def eval(self, v):
        return qrat_eval(self, v)

    def human(self):
        """``"(-q)/(q^2 + 1)"``; polynomials are printed without the quotient."""
        if self.is_polynomial():
            return self.num.human()
        return f"({self.num.human()})/({self.den.human()})"

    def latex(self):
        if self.is_polynomial():
            return self.num.latex()
        return rf"\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    def __str__(self):
        return self.human()

    def __repr__(self):
        return f"QRat({self.human()!r})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(QPoly.from_json(data["num"]), QPoly.from_json(data["den"]))


def _zeval_fraction(f, v):
    acc = Fraction(0)
    for a in reversed(f):
        acc = acc * v + a
    return acc


def as_qrat(x, strict=True):
    if isinstance(x, QRat):
        return x
    if isinstance(x, QPoly):
        return QRat(x)
    if isinstance(x, (int, Rational)):
        return QRat(x)
    if strict:
        raise TypeError(f"cannot interpret {type(x).__name__} as QRat")
    return NotImplemented


def qrat_add(a, b):
    return as_qrat(a) + as_qrat(b)


def qrat_sub(a, b):
    return as_qrat(a) - as_qrat(b)


def qrat_mul(a, b):
    return as_qrat(a) * as_qrat(b)


def qrat_div(a, b):
    b = as_qrat(b)
    if b.is_zero():
        raise DomainError("division by zero QRat")
    return as_qrat(a) * b.inverse()


def qrat_eval(a, v):
    """Exact value of ``a`` at ``q = v``.

    Raises :class:`PoleError` if ``v`` is a root of the reduced denominator.
    """
    a = as_qrat(a)
    v = Fraction(v)
    den = _zeval_fraction(a._d, v)
    if den == 0:
        raise PoleError(f"pole of {a.human()} at q = {v}")
    return a._scale * _zeval_fraction(a._n, v) / den


def _gauss_eval(f, w_re, w_im, D):
    """``f(w / D) * D^deg f`` for integer ``f`` and Gaussian integer ``w``."""
    acc_re, acc_im = f[-1], 0
    dpow = 1
    for a in reversed(f[:-1]):
        dpow *= D
        acc_re, acc_im = (
            acc_re * w_re - acc_im * w_im + a * dpow,
            acc_re * w_im + acc_im * w_re,
        )
    return acc_re, acc_im


def qrat_eval_complex(a, z):
    """Value of ``a`` at a complex float ``z``, exact up to the final rounding.

    The float parts of ``z`` are converted to exact binary rationals and the
    evaluation runs in Gaussian integers.
    """
    a = as_qrat(a)
    z = complex(z)
    if not a._n:
        return 0j
    re, im = Fraction(z.real), Fraction(z.imag)
    D = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
    w_re, w_im = int(re * D), int(im * D)
    nr, ni = _gauss_eval(list(a._n), w_re, w_im, D)
    dr, di = _gauss_eval(list(a._d), w_re, w_im, D)
    if dr == 0 and di == 0:
        raise PoleError(f"pole of {a.human()} at q = {z}")
    shift = (len(a._d) - 1) - (len(a._n) - 1)
    scale = a._scale * (Fraction(D) ** shift)
    mod = dr * dr + di * di
    out_re = scale * Fraction(nr * dr + ni * di, mod)
    out_im = scale * Fraction(ni * dr - nr * di, mod)
    return complex(float(out_re), float(out_im))
