//! Arithmetic in the prime field `F_p` for a small prime `p`.
//!
//! Scalars carry their modulus at runtime, since the whole workbench is
//! generic over the prime chosen on the command line. Operations between
//! scalars of different characteristic panic: mixing fields is always a
//! programming error, never a data error.

use std::fmt;

/// A residue modulo a small prime, `0 <= val < p`, `2 <= p <= 251`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    val: u32,
    p: u32,
}

/// Returns true if `p` is prime. Only intended for the small range we accept.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    pub fn new(val: i64, p: u32) -> Fp {
        debug_assert!(is_prime(p), "modulus {} is not prime", p);
        let m = val.rem_euclid(p as i64) as u32;
        Fp { val: m, p }
    }

    pub fn zero(p: u32) -> Fp {
        Fp { val: 0, p }
    }

    pub fn one(p: u32) -> Fp {
        Fp { val: 1 % p, p }
    }

    pub fn val(self) -> u32 {
        self.val
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.val == 0
    }

    fn check(self, other: Fp) {
        assert_eq!(self.p, other.p, "mixed moduli {} and {}", self.p, other.p);
    }

    pub fn add(self, other: Fp) -> Fp {
        self.check(other);
        Fp {
            val: (self.val + other.val) % self.p,
            p: self.p,
        }
    }

    pub fn sub(self, other: Fp) -> Fp {
        self.check(other);
        Fp {
            val: (self.val + self.p - other.val) % self.p,
            p: self.p,
        }
    }

    pub fn neg(self) -> Fp {
        Fp {
            val: (self.p - self.val) % self.p,
            p: self.p,
        }
    }

    pub fn mul(self, other: Fp) -> Fp {
        self.check(other);
        Fp {
            val: ((self.val as u64 * other.val as u64) % self.p as u64) as u32,
            p: self.p,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self) -> Fp {
        assert!(self.val != 0, "inverse of zero in F_{}", self.p);
        // Fermat: a^(p-2) = a^-1.
        let mut acc = Fp::one(self.p);
        let mut base = self;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.val)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.val)
    }
}
