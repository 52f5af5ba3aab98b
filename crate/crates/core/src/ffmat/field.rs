use std::fmt;

use super::FfError;

/// A field element stored as its canonical residue in `[0, p)`.
pub type Residue = u32;

/// The prime field GF(p) for a prime `p < 2^16`.
///
/// Products of two residues fit in a `u32`, so all arithmetic is done in
/// machine words without widening.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
}

impl FieldSpec {
    pub const MAX_MODULUS: u32 = 1 << 16;

    pub fn new(p: u32) -> Result<Self, FfError> {
        if !(2..Self::MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(FfError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub const fn gf2() -> Self {
        Self { p: 2 }
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn is_binary(self) -> bool {
        self.p == 2
    }

    /// Canonical residue of an arbitrary signed integer.
    #[inline]
    pub fn reduce(self, x: i64) -> Residue {
        x.rem_euclid(self.p as i64) as Residue
    }

    #[inline]
    pub fn add(self, a: Residue, b: Residue) -> Residue {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: Residue, b: Residue) -> Residue {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: Residue) -> Residue {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: Residue, b: Residue) -> Residue {
        (a * b) % self.p
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self, a: Residue) -> Option<Residue> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(self.reduce(t0))
    }

    pub fn elements(self) -> impl Iterator<Item = Residue> {
        0..self.p
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
