"""
Systematic Reed-Solomon codes over GF(2^s) with an errors-and-erasures decoder.

Codewords are lists of m symbols; positions 0..k-1 carry the message and
positions k..m-1 the parity.  Position p holds the coefficient of x^(m-1-p).
The generator has roots alpha^0 .. alpha^(d-2), so d = m - k + 1 and the
decoder succeeds whenever 2 * errors + erasures <= d - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

# primitive polynomials, bit i = coefficient of x^i
PRIMITIVE = {
    2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x89, 8: 0x11D,
    9: 0x211, 10: 0x409, 11: 0x805, 12: 0x1053,
}


class RSDecodeError(ValueError):
    pass


class GF2m:
    def __init__(self, s):
        if s not in PRIMITIVE:
            raise ValueError(f"no primitive polynomial stored for s={s}")
        self.s = s
        self.size = 1 << s
        self.order = self.size - 1
        poly = PRIMITIVE[s]
        exp = [0] * (2 * self.order)
        log = [0] * self.size
        x = 1
        for i in range(self.order):
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & self.size:
                x ^= poly
        if len(set(exp[:self.order])) != self.order:
            raise ValueError(f"polynomial {poly:#x} is not primitive")
        for i in range(self.order, 2 * self.order):
            exp[i] = exp[i - self.order]
        self.exp = exp
        self.log = log

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("GF division by zero")
        if a == 0:
            return 0
        return self.exp[(self.log[a] - self.log[b]) % self.order]

    def inv(self, a):
        return self.div(1, a)

    def pow_alpha(self, e):
        return self.exp[e % self.order]

    # polynomials with index = power
    def poly_eval(self, p, x):
        y = 0
        for c in reversed(p):
            y = self.mul(y, x) ^ c
        return y

    def poly_mul(self, p, q):
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q):
                    out[i + j] ^= self.mul(a, b)
        return out


@dataclass(frozen=True)
class OuterCodeSpec:
    s: int      # bits per symbol
    m: int      # block length in symbols
    k: int      # message symbols

    def __post_init__(self):
        if not 1 <= self.k <= self.m:
            raise ValueError(f"need 1 <= k <= m, got k={self.k}, m={self.m}")
        if self.m > (1 << self.s) - 1:
            raise ValueError(f"block length {self.m} exceeds 2^{self.s} - 1")

    @property
    def d(self):
        return self.m - self.k + 1

    @property
    def redundancy(self):
        return self.m - self.k

    @classmethod
    def parse(cls, text):
        """'rs:s,m,k'"""
        kind, _, rest = text.partition(":")
        if kind != "rs":
            raise ValueError(f"unknown outer code {kind!r}")
        s, m, k = (int(v) for v in rest.split(","))
        return cls(s, m, k)

    def __str__(self):
        return f"rs:{self.s},{self.m},{self.k}"


def smallest_spec(nbits, d):
    """Smallest symbol size whose field fits ceil(nbits/s) message symbols at distance d."""
    for s in sorted(PRIMITIVE):
        k = max(1, -(-nbits // s))
        m = k + d - 1
        if m <= (1 << s) - 1:
            return OuterCodeSpec(s, m, k)
    raise ValueError(f"no stored field fits {nbits} bits at distance {d}")


class ReedSolomon:
    def __init__(self, spec):
        self.spec = spec
        self.gf = GF2m(spec.s)
        self.nsym = spec.m - spec.k
        g = [1]
        for i in range(self.nsym):
            g = self.gf.poly_mul(g, [self.gf.pow_alpha(i), 1])
        self.gen = g  # low-first, monic

    def encode(self, msg):
        """Return the full codeword msg + parity."""
        k, m = self.spec.k, self.spec.m
        if len(msg) != k:
            raise ValueError(f"message must have {k} symbols")
        if any(not 0 <= v < self.gf.size for v in msg):
            raise ValueError("message symbol out of field range")
        gf = self.gf
        # long division of msg(x) * x^nsym by the monic generator, high-first
        gen_hi = self.gen[::-1]
        rem = list(msg) + [0] * self.nsym
        for i in range(k):
            coef = rem[i]
            if coef:
                for j in range(1, len(gen_hi)):
                    rem[i + j] ^= gf.mul(gen_hi[j], coef)
        return list(msg) + rem[k:m]

    def syndromes(self, word):
        gf = self.gf
        out = []
        for j in range(self.nsym):
            x = gf.pow_alpha(j)
            y = 0
            for c in word:
                y = gf.mul(y, x) ^ c
            out.append(y)
        return out

    def decode(self, word, erasures=()):
        """
        Correct ``word`` (list of m symbols, erased entries may hold any value)
        and return the corrected codeword.  Raises RSDecodeError when the
        pattern is beyond 2 * errors + erasures <= d - 1 or is detected as such.
        """
        gf = self.gf
        m = self.spec.m
        if len(word) != m:
            raise ValueError(f"word must have {m} symbols")
        erasures = sorted(set(erasures))
        nu = len(erasures)
        if nu > self.nsym:
            raise RSDecodeError(f"{nu} erasures exceed d - 1 = {self.nsym}")
        word = [0 if p in erasures else v for p, v in enumerate(word)]
        S = self.syndromes(word)
        if not any(S) and not erasures:
            return word

        # erasure locator prod (1 - X_i x), X_i = alpha^(m-1-p)
        gamma = [1]
        for p in erasures:
            gamma = gf.poly_mul(gamma, [1, gf.pow_alpha(m - 1 - p)])

        # Berlekamp-Massey seeded with the erasure locator
        lam = list(gamma)
        B = list(gamma)
        L = nu
        for r in range(nu + 1, self.nsym + 1):
            delta = 0
            for j in range(L + 1):
                if j < len(lam) and r - 1 - j >= 0:
                    delta ^= gf.mul(lam[j], S[r - 1 - j])
            xB = [0] + B
            if delta == 0:
                B = xB
            elif 2 * L <= r + nu - 1:
                T = _add(lam, [gf.mul(delta, c) for c in xB])
                inv = gf.inv(delta)
                B = [gf.mul(inv, c) for c in lam]
                L = r + nu - L
                lam = T
            else:
                lam = _add(lam, [gf.mul(delta, c) for c in xB])
                B = xB
        lam = _trim(lam)
        deg = len(lam) - 1
        if 2 * (deg - nu) + nu > self.nsym:
            raise RSDecodeError("too many errors")

        # Chien search over the m valid positions
        positions = []
        for p in range(m):
            X = gf.pow_alpha(m - 1 - p)
            if gf.poly_eval(lam, gf.inv(X)) == 0:
                positions.append(p)
        if len(positions) != deg:
            raise RSDecodeError("error locator roots do not match its degree")

        # Forney with first consecutive root alpha^0: e = X * Omega(X^-1) / Lambda'(X^-1)
        omega = gf.poly_mul(S, lam)[:self.nsym]
        dlam = [lam[i] if i % 2 else 0 for i in range(1, len(lam))]
        out = list(word)
        for p in positions:
            X = gf.pow_alpha(m - 1 - p)
            Xi = gf.inv(X)
            den = gf.poly_eval(dlam, Xi)
            if den == 0:
                raise RSDecodeError("zero derivative in Forney step")
            out[p] ^= gf.mul(X, gf.div(gf.poly_eval(omega, Xi), den))
        if any(self.syndromes(out)):
            raise RSDecodeError("residual syndrome after correction")
        return out


def _add(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) ^ (q[i] if i < len(q) else 0) for i in range(n)]


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p
